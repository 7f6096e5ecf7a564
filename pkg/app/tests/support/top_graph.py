# Copyright (c) 2025 harokku999@gmail.com
# Licensed under the MIT License - https://opensource.org/licenses/MIT

"""
Top of the r = 2 crystal graph down to depth 4.

Nodes are written by their string parametrization a11 a21 a22; every edge is
(source, target, index). The node tables give the reduced tableau and the
segment count of each node.
"""

RANK2_DEPTH_COUNTS = (1, 2, 4, 6, 9)

RANK2_TOP_EDGES = (
    ("000", "100", 1), ("000", "010", 2),
    ("100", "200", 1), ("100", "011", 2),
    ("010", "110", 1), ("010", "020", 2),
    ("200", "300", 1), ("200", "111", 2),
    ("011", "111", 1), ("011", "021", 2),
    ("110", "210", 1), ("110", "120", 2),
    ("020", "120", 1), ("020", "030", 2),
    ("300", "400", 1), ("300", "211", 2),
    ("111", "211", 1), ("111", "022", 2),
    ("210", "310", 1), ("210", "121", 2),
    ("021", "121", 1), ("021", "031", 2),
    ("120", "220", 1), ("120", "130", 2),
    ("030", "130", 1), ("030", "040", 2),
)

# Reduced form b# of each node.
RANK2_TOP_TABLEAUX = {
    "000": "*/*",
    "100": "2/*", "010": "*/3",
    "200": "2,2/*", "011": "3/*", "110": "2/3", "020": "*/3,3",
    "300": "2,2,2/*", "111": "2,3/*", "210": "2,2/3", "021": "3/3", "120": "2/3,3", "030": "*/3,3,3",
    "400": "2,2,2,2/*", "211": "2,2,3/*", "022": "3,3/*", "310": "2,2,2/3", "121": "2,3/3",
    "220": "2,2/3,3", "031": "3/3,3", "130": "2/3,3,3", "040": "*/3,3,3,3",
}

# Exponent k of the coefficient (1 - u)^k carried by each node.
RANK2_TOP_SEG = {
    "000": 0,
    "100": 1, "010": 1,
    "200": 1, "011": 1, "110": 2, "020": 1,
    "300": 1, "111": 2, "210": 2, "021": 2, "120": 2, "030": 1,
    "400": 1, "211": 2, "022": 1, "310": 2, "121": 3, "220": 2, "031": 2, "130": 2, "040": 1,
}
