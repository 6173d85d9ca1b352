SOLUTION_NAME: str = "cameral"
LOG_FOLDER: str = f"{SOLUTION_NAME}"

# Steps
ROOTDATA_STEP: str = "rootdata"
RAMCHECK_STEP: str = "ramcheck"
TITSCLASS_STEP: str = "titsclass"
COVER_STEP: str = "cover"
RANK1_STEP: str = "rank1"
HITCHIN_STEP: str = "hitchin"
SELFTEST_STEP: str = "selftest"

# Built-in data
"""
Every built-in datum of rank at most 3, as (type, n).
"""
BUILTIN_RANK3: tuple = (
    ("GL", 1),
    ("GL", 2),
    ("GL", 3),
    ("SL", 2),
    ("SL", 3),
    ("SL", 4),
    ("PGL", 2),
    ("PGL", 3),
    ("PGL", 4),
    ("Sp", 4),
    ("Sp", 6),
    ("SO", 4),
    ("SO", 5),
    ("SO", 6),
    ("SO", 7),
)

# Extension classes
EXPECTED_N_CLASS: tuple = (
    ("GL", 2, True),
    ("GL", 3, True),
    ("GL", 4, True),
    ("PGL", 2, True),
    ("PGL", 3, True),
    ("SL", 3, True),
    ("SL", 5, True),
    ("SO", 4, True),
    ("SO", 5, True),
    ("SL", 2, False),
    ("SL", 4, False),
)

"""
Data with a registered homomorphic section W -> N.
"""
SPLIT_WITNESS_DATA: tuple = (
    ("GL", 2),
    ("GL", 3),
    ("GL", 4),
    ("PGL", 2),
    ("PGL", 3),
    ("SL", 3),
    ("SL", 5),
)

# Primitivity
"""
Data scanned for non-primitive coroots, and the ones expected to be flagged.
"""
PRIMITIVITY_SCAN: tuple = (
    tuple(("GL", n) for n in range(1, 5))
    + tuple(("SL", n) for n in range(2, 6))
    + tuple(("PGL", n) for n in range(2, 5))
    + (("Sp", 4), ("Sp", 6))
    + tuple(("SO", n) for n in range(4, 9))
)
EXPECTED_NONPRIMITIVE: tuple = (("PGL", 2), ("SO", 5), ("SO", 7))

# Covers
ROUNDTRIP_DEGREES: tuple = (2, 3, 4)
ROUNDTRIP_SAMPLES: int = 20
CHARPOLY_SAMPLES: int = 10

# Rank one
"""
(q, f) pairs for the torsor experiment: genus 2 over F_3 and F_5, genus 1 over F_7.
"""
TORSOR_CURVES: tuple = (
    (3, "x**5 + 2*x + 1"),
    (5, "x**5 + x + 1"),
    (7, "x**3 + x + 1"),
)

# Hitchin
DEFAULT_GENERA: tuple = (2, 3, 4)

# Rational cohomology
"""
Reflection modules whose rational H^1 must vanish: S_2, S_3, S_4 via SL(n), and W(B_2).
"""
RATIONAL_H1_DATA: tuple = (("SL", 2), ("SL", 3), ("SL", 4), ("SO", 5))
