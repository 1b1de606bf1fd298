"""Tests for utility functions."""

import pytest

from ulamk.exceptions import FormatError
from ulamk.utils import parse_members, suggest_similar_strings

SUITE_NAMES = ["oracle", "sat", "graph", "power", "path", "metric", "bdj", "approx"]


class TestSuggestSimilarStrings:
    """Suggestions for mistyped suite and solver names"""

    def test_exact_match(self):
        """An exact name comes first"""
        suggestions = suggest_similar_strings("oracle", SUITE_NAMES)
        assert suggestions[0] == "oracle"

    def test_typo_correction(self):
        """Transposed and substituted letters still match"""
        assert "oracle" in suggest_similar_strings("oracel", SUITE_NAMES)
        assert "metric" in suggest_similar_strings("metrik", SUITE_NAMES)

    def test_case_insensitive(self):
        """Upper-case input matches lower-case names"""
        assert "power" in suggest_similar_strings("POWER", SUITE_NAMES)

    def test_threshold_filtering(self):
        """Nothing clears a strict threshold for an unrelated name"""
        assert suggest_similar_strings("xyz", SUITE_NAMES, threshold=0.8) == []

    def test_max_results_limit(self):
        """At most max_results names come back"""
        candidates = ["abc", "abd", "abe", "abf", "abg"]
        suggestions = suggest_similar_strings("ab", candidates, max_results=2)
        assert len(suggestions) == 2

    def test_ties_are_alphabetical(self):
        """Equally similar names come back in alphabetical order"""
        candidates = ["abg", "abc", "abe"]
        assert suggest_similar_strings("ab", candidates) == ["abc", "abe", "abg"]

    def test_empty_candidates(self):
        """No candidates, no suggestions"""
        assert suggest_similar_strings("test", []) == []

    def test_sorted_by_similarity(self):
        """Most similar first"""
        candidates = ["test", "testing", "tester", "xyz"]
        suggestions = suggest_similar_strings("test", candidates, threshold=0.1)
        assert suggestions[0] == "test"


class TestParseMembers:
    """Test parse_members"""

    @pytest.mark.parametrize(
        "text,expected",
        [
            ("1,2,3,6", (1, 2, 3, 6)),
            ("1, 2 ,3", (1, 2, 3)),
            ("4 5", (4, 5)),
            ("", ()),
            (",", ()),
        ],
    )
    def test_parse(self, text, expected):
        """Commas and spaces both separate labels"""
        assert parse_members(text) == expected

    @pytest.mark.parametrize("text", ["1,x", "1.5", "a b"])
    def test_invalid(self, text):
        """Non-integers are format errors"""
        with pytest.raises(FormatError) as exc_info:
            parse_members(text)
        assert exc_info.value.context == {"set": text}
