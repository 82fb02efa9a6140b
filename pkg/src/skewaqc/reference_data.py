"""Published parameter tables for the concatenated extended RS family.

Each table maps k to (k', dz floor) as printed for the
[[2mq, k', dz/2]]_4 codes, q = 4^m.  Kept as literal data, not as the
formula, so the reproduction check compares against the printed numbers.
"""

from __future__ import annotations

_K16 = (1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29, 31)
_DZ16 = (32, 30, 28, 26, 24, 22, 20, 18, 16, 14, 12, 10, 8, 6, 4, 2)

_K64 = (
    2, 5, 8, 11, 14, 17, 20, 23,
    26, 29, 32, 35, 38, 41, 44, 47,
    50, 53, 56, 59, 62, 65, 68, 71,
    74, 77, 80, 83, 86, 89, 92, 95,
    98, 101, 104, 107, 110, 113, 116, 119,
    122, 125, 128, 131, 134, 137, 140, 143,
    146, 149, 152, 155, 158, 161, 164, 167,
    170, 173, 176, 179, 182, 185, 188, 191,
)
_DZ64 = (
    128, 126, 124, 122, 120, 118, 116, 114,
    112, 110, 108, 106, 104, 102, 100, 98,
    96, 94, 92, 90, 88, 86, 84, 82,
    80, 78, 76, 74, 72, 70, 68, 66,
    64, 62, 60, 58, 56, 54, 52, 50,
    48, 46, 44, 42, 40, 38, 36, 34,
    32, 30, 28, 26, 24, 22, 20, 18,
    16, 14, 12, 10, 8, 6, 4, 2,
)

# length 64, from [16, k, 17 - k]_16 codes
TABLE_GF16: dict[int, tuple[int, int]] = {k: (kp, dz) for k, kp, dz in zip(range(1, 17), _K16, _DZ16)}
# length 384, from [64, k, 65 - k]_64 codes
TABLE_GF64: dict[int, tuple[int, int]] = {k: (kp, dz) for k, kp, dz in zip(range(1, 65), _K64, _DZ64)}

PUBLISHED_TABLES = {2: TABLE_GF16, 3: TABLE_GF64}
