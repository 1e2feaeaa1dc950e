"""Independent oracles shared by the tests.

Nothing here imports the package: paths are produced by brute-force filtering
of all words, and orders are compared through plain height vectors.
"""

from itertools import product
from math import comb

import numpy as np

# Edge counts n = 0..10 as printed in the published table.
TABLE1 = {
    "FF": [0, 0, 1, 2, 5, 10, 20, 38, 71, 130, 235],
    "GF": [0, 0, 2, 4, 14, 32, 82, 188, 438, 984, 2202],
    "DD": [0, 0, 1, 5, 21, 84, 330, 1287, 5005, 19448, 75582],
    "GD": [0, 1, 6, 30, 140, 630, 2772, 12012, 51480, 218790, 923780],
    "MM": [0, 0, 1, 4, 13, 40, 120, 356, 1050, 3088, 9069],
    "GM": [0, 0, 2, 8, 30, 104, 350, 1152, 3738, 12000, 38214],
    "SS": [0, 1, 6, 34, 190, 1058, 5894, 32898, 184062, 1032322, 5803270],
    "GS": [0, 2, 16, 114, 768, 5010, 32016, 201698, 1257472, 7777314, 47800080],
}

# (letters, flat width, min height, max height, flats only on the axis, sized by semi-length)
RULES = {
    "DD": ("UD", 1, 0, None, False, True),
    "GD": ("UD", 1, None, None, False, True),
    "MM": ("UDH", 1, 0, None, False, False),
    "GM": ("UDH", 1, None, None, False, False),
    "SS": ("UDH", 2, 0, None, False, True),
    "GS": ("UDH", 2, None, None, False, True),
    "FF": ("UDH", 1, 0, 1, True, False),
    "GF": ("UDH", 1, -1, 1, True, False),
}


def profile(word, flat=1):
    out, h = [0], 0
    for c in word:
        if c == "H":
            out += [h] * flat
        else:
            h += 1 if c == "U" else -1
            out.append(h)
    return out


def brute_paths(cls, n):
    """Every word of the class at size n, found by filtering all candidate words."""
    letters, flat, lo, hi, axis_flats, semi = RULES[cls]
    width = 2 * n if semi else n
    found = []
    for length in range(width + 1):
        for w in product(letters, repeat=length):
            if length + (flat - 1) * w.count("H") != width:
                continue
            h, ok = 0, True
            for c in w:
                if c == "H" and axis_flats and h != 0:
                    ok = False
                    break
                h += {"U": 1, "D": -1, "H": 0}[c]
                if (lo is not None and h < lo) or (hi is not None and h > hi):
                    ok = False
                    break
            if ok and h == 0:
                found.append("".join(w))
    return sorted(found, key=lambda s: [("UDH").index(c) for c in s])


def brute_covers(cls, n):
    """Cover pairs (lower, upper) of the pointwise order, via boolean matrix products."""
    flat = RULES[cls][1]
    words = brute_paths(cls, n)
    H = np.array([profile(w, flat) for w in words], dtype=np.int64).reshape(len(words), -1)
    le = (H[:, None, :] <= H[None, :, :]).all(axis=2)
    strict = le & ~np.eye(len(words), dtype=bool)
    s = strict.astype(np.int64)
    two_step = (s @ s) > 0
    cov = strict & ~two_step
    return {(words[i], words[j]) for i, j in zip(*np.nonzero(cov))}


def narayana(n, k):
    return comb(n, k) * comb(n, k - 1) // n


def brute_young_edges(parts):
    """Edges of the containment order on partitions inside ``parts``, by adding one cell at a time."""
    parts = tuple(parts)

    def subs(i, cap):
        yield ()
        if i < len(parts):
            for v in range(1, min(cap, parts[i]) + 1):
                for t in subs(i + 1, v):
                    yield (v,) + t

    ideal = set(subs(0, parts[0] if parts else 0))
    edges = 0
    for mu in ideal:
        padded = list(mu) + [0]
        for i in range(len(padded)):
            grown = padded.copy()
            grown[i] += 1
            if i > 0 and grown[i] > grown[i - 1]:
                continue
            if tuple(p for p in grown if p) in ideal:
                edges += 1
    return edges, len(ideal)
