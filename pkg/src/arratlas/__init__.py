"""Exact region counting for the threshold arrangement T_n and the boxed
threshold arrangement BT_n, by closed forms, finite-field point counts,
bijective enumeration, and a brute-force sign-vector oracle."""

__version__ = "0.1.0"
