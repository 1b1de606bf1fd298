from ulamk.consts import (
    BDJ_COEFFICIENT,
    BDJ_TOLERANCE,
    FRAME_NAME_TEMPLATE,
    PACKAGE_NAME,
    PACKAGE_VERSION,
    SVG_FILL,
    SVG_HIGHLIGHT_FILL,
)


class TestPackageConstants:
    """Test package constants are properly defined"""

    def test_package_version_defined(self):
        """Test that package version is defined"""
        assert isinstance(PACKAGE_VERSION, str)
        assert "." in PACKAGE_VERSION  # Should be semantic version
        assert PACKAGE_NAME == "ulamk"

    def test_frame_names_sort_in_order(self):
        """Zero-padded frame names sort like their indices"""
        names = [FRAME_NAME_TEMPLATE.format(i) for i in (0, 2, 10)]
        assert names == sorted(names)
        assert names[0] == "frame_000.svg"

    def test_colours_are_hex(self):
        """Fill colours are distinct #rrggbb strings"""
        for colour in (SVG_FILL, SVG_HIGHLIGHT_FILL):
            assert colour.startswith("#")
            assert len(colour) == 7
        assert SVG_FILL != SVG_HIGHLIGHT_FILL

    def test_mean_lis_constants(self):
        """Expansion coefficient and relative tolerance"""
        assert BDJ_COEFFICIENT == 1.77108
        assert 0 < BDJ_TOLERANCE < 1
