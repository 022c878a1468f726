"""Published reference values embedded for offline verification."""

from __future__ import annotations

from .exactmath import Polynomial

# n -> (coefficients of chi(BT_n) from t^n down to t^0, number of regions)
_DESCENDING_ROWS = {
    2: ([1, -5, 6], 12),
    3: ([1, -9, 27, -27], 64),
    4: ([1, -14, 75, -181, 165], 436),
    5: ([1, -20, 165, -695, 1480, -1263], 3624),
    6: ([1, -27, 315, -2010, 7320, -14284, 11559], 35516),
    7: ([1, -35, 546, -4865, 26460, -87010, 158753, -122874], 400544),
    8: ([1, -44, 882, -10402, 78155, -379666, 1154965, -1995487, 1486578], 5106180),
    9: (
        [1, -54, 1350, -20286, 200025, -1331022, 5932143, -16952157, 27979203, -20158695],
        72574936,
    ),
    10: (
        [1, -65, 1980, -36840, 459585, -3986031, 24172575, -100548090, 272771475, -432836011, 302751327],
        1137563980,
    ),
}

REFERENCE_TABLE: dict[int, tuple[Polynomial, int]] = {
    n: (Polynomial(tuple(reversed(c))), r) for n, (c, r) in _DESCENDING_ROWS.items()
}

# labeled threshold graphs on [n], n = 2..6
LABELED_THRESHOLD_GRAPHS = {2: 2, 3: 8, 4: 46, 5: 332, 6: 2874}
