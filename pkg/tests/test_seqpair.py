"""Tests for sequence-pair placement and SVG frame rendering"""

import numpy as np
import pytest

from ulamk.consts import SVG_FILL, SVG_HIGHLIGHT_FILL
from ulamk.exceptions import InvalidPathError, ShapeMismatchError, WrongDimensionError
from ulamk.models import (
    Instance,
    InsertMove,
    MovePath,
    Permutation,
    Placement,
    RectSpec,
)
from ulamk.path import reconstruct_path
from ulamk.seqpair import Relation, find_overlaps, relation, render_frames, sp_place


def pair(p, q):
    return (Permutation(labels=tuple(p)), Permutation(labels=tuple(q)))


class TestRelation:
    """Test the pairwise relation rule"""

    @pytest.mark.parametrize(
        "p,q,expected",
        [
            ((1, 2), (1, 2), Relation.LEFT),
            ((2, 1), (2, 1), Relation.RIGHT),
            ((2, 1), (1, 2), Relation.BELOW),
            ((1, 2), (2, 1), Relation.ABOVE),
        ],
    )
    def test_relation_of_block_1(self, p, q, expected):
        """Relation of block 1 to block 2"""
        first, second = pair(p, q)
        assert relation(first.index, second.index, 1, 2) is expected
        assert relation(first.index, second.index, 2, 1) is expected.inverse

    def test_inverse_pairs(self):
        """left/right and below/above are each other's inverse"""
        assert Relation.LEFT.inverse is Relation.RIGHT
        assert Relation.BELOW.inverse is Relation.ABOVE
        for rel in Relation:
            assert rel.inverse is not rel
            assert rel.inverse.inverse is rel

    @pytest.mark.parametrize("seed", range(5))
    def test_swapping_blocks_inverts(self, seed):
        """Every pair of blocks gets one relation, seen inverted from the other side"""
        rng = np.random.default_rng(seed)
        p, q = (rng.permutation(8) + 1).tolist(), (rng.permutation(8) + 1).tolist()
        first, second = pair(p, q)
        for a in range(1, 9):
            for b in range(a + 1, 9):
                rel = relation(first.index, second.index, a, b)
                assert relation(first.index, second.index, b, a) is rel.inverse


class TestSpPlace:
    """Test sp_place"""

    def test_single_block(self):
        """One block sits at the origin"""
        placement = sp_place(pair([1], [1]), RectSpec(w=(3,), h=(2,)))
        assert (placement.x, placement.y) == ((0,), (0,))
        assert (placement.width, placement.height) == (3, 2)

    def test_left_of(self):
        """Same order in both sequences places blocks side by side"""
        placement = sp_place(pair([1, 2], [1, 2]), RectSpec(w=(2, 3), h=(1, 1)))
        assert placement.x == (0, 2)
        assert placement.y == (0, 0)
        assert (placement.width, placement.height) == (5, 1)

    def test_below(self):
        """Opposite orders stack the blocks"""
        placement = sp_place(pair([1, 2], [2, 1]), RectSpec(w=(2, 2), h=(1, 2)))
        assert placement.x == (0, 0)
        assert placement.y == (2, 0)
        assert (placement.width, placement.height) == (2, 3)

    def test_random_pairs_never_overlap(self):
        """Decoded placements are overlap-free"""
        rng = np.random.default_rng(0)
        for _ in range(100):
            n = int(rng.integers(1, 9))
            p = (rng.permutation(n) + 1).tolist()
            q = (rng.permutation(n) + 1).tolist()
            rects = RectSpec(
                w=tuple(rng.integers(1, 5, n).tolist()),
                h=tuple(rng.integers(1, 5, n).tolist()),
            )
            placement = sp_place(pair(p, q), rects)
            assert find_overlaps(placement, rects) == []
            assert placement.width == max(
                x + w for x, w in zip(placement.x, rects.w, strict=True)
            )

    def test_find_overlaps(self):
        """Shifted squares overlap"""
        placement = Placement(x=(0, 1), y=(0, 0), width=3, height=2)
        assert find_overlaps(placement, RectSpec(w=(2, 2), h=(2, 2))) == [(1, 2)]

    @pytest.mark.parametrize(
        "sp,rects",
        [
            (pair([1, 2], [1, 2]), RectSpec.unit(3)),
            ((Permutation(labels=(1, 2)),), RectSpec.unit(2)),
        ],
    )
    def test_shape_mismatch(self, sp, rects):
        """The pair and the sizes must cover the same blocks"""
        with pytest.raises(ShapeMismatchError):
            sp_place(sp, rects)


class TestRenderFrames:
    """Test render_frames"""

    def test_figure1_frames(self, figure1, tmp_path):
        """Three frames, blocks 5 then 4 highlighted"""
        path = reconstruct_path(figure1, {1, 2, 3, 6})
        names = render_frames(figure1, path, RectSpec.unit(6), tmp_path)
        assert names == ["frame_000.svg", "frame_001.svg", "frame_002.svg"]

        frames = [(tmp_path / name).read_text() for name in names]
        for frame in frames:
            assert frame.lstrip().startswith("<?xml")
            for b in range(1, 7):
                assert f'id="block-{b}"' in frame
        assert SVG_HIGHLIGHT_FILL not in frames[0]
        assert SVG_HIGHLIGHT_FILL in frames[1]
        assert SVG_HIGHLIGHT_FILL in frames[2]
        assert SVG_FILL in frames[0]

    def test_empty_path(self, identity_instance, tmp_path):
        """An empty path gives a single frame"""
        rows = identity_instance.source.rows()[:2]
        instance = Instance.from_rows(rows, rows)
        path = MovePath(start=instance.source, end=instance.target)
        assert render_frames(instance, path, RectSpec.unit(5), tmp_path) == [
            "frame_000.svg"
        ]

    def test_deterministic_bytes(self, figure1, tmp_path):
        """Identical input renders identical files"""
        path = reconstruct_path(figure1, {1, 2, 3, 6})
        rects = RectSpec(w=(1, 2, 1, 2, 1, 2), h=(2, 1, 2, 1, 2, 1))
        first = render_frames(figure1, path, rects, tmp_path / "a")
        second = render_frames(figure1, path, rects, tmp_path / "b")
        for a, b in zip(first, second, strict=True):
            assert (tmp_path / "a" / a).read_bytes() == (
                tmp_path / "b" / b
            ).read_bytes()

    def test_tampered_path(self, figure1, tmp_path):
        """Invalid paths are rejected before anything is written"""
        path = MovePath(
            start=figure1.source,
            moves=(InsertMove(element=5, targets=(3, 4)),),
            end=figure1.target,
        )
        with pytest.raises(InvalidPathError) as exc_info:
            render_frames(figure1, path, RectSpec.unit(6), tmp_path / "out")
        assert exc_info.value.exit_code == 3
        assert not (tmp_path / "out").exists()

    def test_needs_two_dimensions(self, reversed_instance, tmp_path):
        """Only k=2 instances are sequence pairs"""
        path = MovePath(start=reversed_instance.source, end=reversed_instance.target)
        with pytest.raises(WrongDimensionError):
            render_frames(reversed_instance, path, RectSpec.unit(4), tmp_path)
