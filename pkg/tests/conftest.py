"""Pytest configuration and shared fixtures"""

import json
import os

import pytest

from ulamk.config import Config, get_config
from ulamk.formats import load_figure1
from ulamk.generators import gen_random
from ulamk.models import Instance

FIGURE1_SOURCE = [[4, 3, 1, 6, 2, 5], [6, 5, 3, 4, 1, 2]]
FIGURE1_TARGET = [[5, 3, 1, 4, 6, 2], [6, 3, 5, 1, 2, 4]]


@pytest.fixture
def figure1():
    """The shipped two-dimensional example on six blocks"""
    return load_figure1()


@pytest.fixture
def figure1_file(tmp_path):
    """Figure-1 instance written to a temporary JSON file"""
    path = tmp_path / "figure1.json"
    path.write_text(
        json.dumps({"n": 6, "k": 2, "s": FIGURE1_SOURCE, "t": FIGURE1_TARGET})
    )
    return path


@pytest.fixture
def identity_instance():
    """k=3, n=5 instance whose source equals its target"""
    rows = [[1, 2, 3, 4, 5], [5, 4, 3, 2, 1], [2, 4, 1, 5, 3]]
    return Instance.from_rows(rows, rows)


@pytest.fixture
def reversed_instance():
    """k=1 instance where every pair is reversed"""
    return Instance.from_rows([[1, 2, 3, 4]], [[4, 3, 2, 1]])


@pytest.fixture(scope="session")
def random_batch():
    """Seeded random instances with n in [2, 8] and k in [1, 3]"""
    return [
        gen_random(n, k, seed)
        for seed, (n, k) in enumerate(
            (n, k) for n in range(2, 9) for k in range(1, 4) for _ in range(3)
        )
    ]


@pytest.fixture
def clean_env():
    """Fixture that temporarily clears ULAMK_* environment variables.

    This ensures Config tests see the true defaults without interference
    from environment variables that might be set in the user's shell.
    """
    ulamk_vars = {
        key: value for key, value in os.environ.items() if key.startswith("ULAMK_")
    }
    for key in ulamk_vars:
        os.environ.pop(key, None)
    get_config.cache_clear()

    try:
        yield
    finally:
        for key in [k for k in os.environ if k.startswith("ULAMK_")]:
            os.environ.pop(key)
        for key, value in ulamk_vars.items():
            os.environ[key] = value
        get_config.cache_clear()


@pytest.fixture
def clean_config(clean_env):
    """Config instance built from a clean environment"""
    return Config()
