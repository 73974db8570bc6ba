"""Knot expressions shared by the acceptance and surface tests."""

# Covers torus leaves (both chiralities), cables below and above the
# companion slope, sums of two and three summands and two depth-3 nests.
SS_CATALOG = [
    "T(3,2)",
    "T(5,2)",
    "T(5,3)",
    "T(7,3)",
    "T(-3,2)",
    "C(7,2; T(3,2))",
    "C(13,2; T(3,2))",
    "C(5,3; T(3,2))",
    "C(23,4; T(3,2))",
    "S(T(3,2), T(3,2))",
    "S(T(3,2), T(5,2))",
    "S(T(3,2), S(T(5,2), T(5,3)))",
    "S(T(3,2), T(-3,2))",
    "C(5,2; C(3,2; C(13,2; T(3,2))))",
    "C(209,2; C(3,2; C(13,2; T(3,2))))",
    "C(11,2; S(T(3,2), T(5,2)))",
    "S(C(7,2; T(3,2)), T(-3,2))",
    "C(-5,2; T(-3,2))",
    "C(191,2; C(23,4; T(3,2)))",
]

EXAMPLE_KNOT = "C(191,2; C(23,4; T(3,2)))"

# criterion number -> PASS/FAIL line, filled by test_acceptance.py
ACCEPTANCE = {}
