"""Oracle outputs, frozen (produced by ``python3 tests/oracles.py``)."""
from fractions import Fraction as F

COUNTS = {"roots": 36, "a23": 40, "tritangents": 45, "pairs": 270, "triples": 540, "quadruples": 135}
LINES = 27
A2_SUBSYSTEMS = 120
TRITANGENT_SIGNATURE = (12, 32)
TRIADS = 240
TRIADS_PER_TRITANGENT = 16
TRITANGENTS_PER_LINE = 5
WEYL_ORDER = 51840

NEF_Y_BAR = [(1, 1), (1, 3)]
NEF_Y_TILDE = [
    (1, 2, 3, 2, 2),
    (1, 2, 3, 2, 3),
    (1, 2, 3, 4, 1),
    (1, 2, 3, 4, 3),
    (3, 6, 7, 8, 3),
    (5, 6, 7, 8, 3),
]

# symbolic recomputation of the pushforward-pullback pairings, (const, c, d)
Z = (F(0), F(0), F(0))
TABLE6_DERIVED = {
    "M_BAR": {"aa2a3": (-1, 4, 25), "aa2a4": Z, "aa3a4": Z, "a2a3a4": Z, "aa2b": Z, "aa3b": Z, "a2a3b": Z, "aa2e": (-1, 4, 25)},
    "Y_BAR": {"aa2a3": (1, 0, 1), "aa2a4": Z, "aa3a4": Z, "a2a3a4": Z, "aa2b": (-1, 2, 12), "aa3b": Z, "a2a3b": Z, "aa2e": (-1, 4, 25)},
    "Y1": {"aa2a3": (4, -3, -11), "aa2a4": (-3, 3, 12), "aa3a4": Z, "a2a3a4": Z, "aa2b": (-1, 2, 12), "aa3b": Z, "a2a3b": Z, "aa2e": (5, -2, 1)},
    "Y2": {"aa2a3": (0, 1, 1), "aa2a4": (1, -1, 0), "aa3a4": (-2, 2, 6), "a2a3a4": Z, "aa2b": (5, -4, -6), "aa3b": (-2, 2, 6), "a2a3b": Z, "aa2e": (9, -6, -11)},
    "Y_TILDE": {"aa2a3": (0, 1, 1), "aa2a4": (0, 0, 2), "aa3a4": (0, 0, 2), "a2a3a4": (-1, 1, 2), "aa2b": (2, -1, 0), "aa3b": (0, 0, 2), "a2a3b": (-1, 1, 2), "aa2e": (4, -1, -1)},
}
