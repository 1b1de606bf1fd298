"""High-value constants for the ulamk package."""

# Package metadata
PACKAGE_VERSION = "0.4.0"
PACKAGE_NAME = "ulamk"

# Business logic consts
DEFAULT_SEED = 0
BRUTE_FORCE_MAX_N = 24
CLIQUE_WARN_N = 200
POWER_MAX_ELEMENTS = 10**6
DENSE_GRAPH_MAX_N = 4096

# Baik-Deift-Johansson expansion of the mean LIS length of a uniform permutation
BDJ_COEFFICIENT = 1.77108
BDJ_TOLERANCE = 0.05

# SVG frame geometry: one rectangle unit is drawn as SVG_SCALE user units
SVG_SCALE = 24
SVG_MARGIN = 4
SVG_STROKE = 1.0
SVG_HIGHLIGHT_STROKE = 3.0
SVG_FILL = "#f3e3b5"
SVG_HIGHLIGHT_FILL = "#e8a33d"
SVG_HASH_SALT = "ulamk"
FRAME_NAME_TEMPLATE = "frame_{:03d}.svg"

# Shipped data
FIGURE1_RESOURCE = "figure1.json"
