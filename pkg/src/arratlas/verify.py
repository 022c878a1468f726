"""Cross-validation suites shared by the CLI and the acceptance tests.

Each suite returns a list of check records ``{"check", "ok", "expected", "got"}``;
values are rendered as strings so that reports stay JSON-safe and exact.
"""

from __future__ import annotations

import random
from typing import Callable

from .arrangement import box, boxed_threshold_arrangement, char_poly, random_subarrangement, threshold_arrangement
from .combinat import boxed_coeffs, boxed_coeffs_from_partial_sums
from .exactmath import poly_eval, poly_shift
from .formulas import (
    FamilyId,
    chi_boxed_threshold,
    chi_boxed_via_egf,
    chi_coefficient,
    chi_threshold,
    regions_boxed,
    regions_boxed_via_egf,
    regions_threshold,
    regions_threshold_eulerian,
)
from .graphs import enumerate_colored, enumerate_threshold_graphs, graph_to_region, threshold_region_dictionary
from .oracle import compare_with, enumerate_regions, sign_vector
from .orders import enumerate_half_orders, enumerate_threshold_orders, order_to_point, threshold_order_to_point
from .reference import REFERENCE_TABLE


def _check(name: str, expected, got) -> dict:
    def render(v):
        if isinstance(v, (list, tuple)):
            return [render(x) for x in v]
        if isinstance(v, dict):
            return v
        return str(v)

    return {"check": name, "ok": expected == got, "expected": render(expected), "got": render(got)}


def _report_check(name: str, report) -> dict:
    return {
        "check": name,
        "ok": report.ok,
        "expected": {"missing": 0, "duplicates": 0, "extraneous": 0},
        "got": report.to_json(),
    }


def suite_table1(n_max: int = 10, **_) -> list[dict]:
    out = []
    for n in range(2, n_max + 1):
        chi = chi_boxed_threshold(n)
        zas = (-1) ** n * poly_eval(chi, -1)
        if n in REFERENCE_TABLE:
            ref_chi, ref_r = REFERENCE_TABLE[n]
            out.append(_check(f"chi(BT_{n}) coefficients", list(ref_chi.coeffs), list(chi.coeffs)))
            out.append(_check(f"r(BT_{n}) closed form", ref_r, regions_boxed(n)))
            out.append(_check(f"r(BT_{n}) Zaslavsky", ref_r, zas))
        else:
            out.append(_check(f"r(BT_{n}) closed form vs Zaslavsky", zas, regions_boxed(n)))
        out.append(
            _check(f"b(BT_{n}) = r(T_{n})", regions_threshold(n), (-1) ** n * poly_eval(chi, 1))
        )
    return out


def suite_shift(n_max: int = 4, trials: int = 20, seed: int = 0, jobs: int = 1, **_) -> list[dict]:
    rng = random.Random(seed)
    out = []
    for n in range(2, n_max + 1):
        for t in range(trials):
            arr = random_subarrangement(n, rng)
            lhs = char_poly(box(arr), jobs=jobs)
            rhs = poly_shift(char_poly(arr, jobs=jobs), 2)
            out.append(_check(f"n={n} trial {t} ({len(arr)} hyperplanes)", list(rhs.coeffs), list(lhs.coeffs)))
    return out


def suite_bijection(n_max: int = 4, jobs: int = 1, **_) -> list[dict]:
    out = []
    for n in range(2, n_max + 1):
        bt = boxed_threshold_arrangement(n)
        regions = enumerate_regions(bt, jobs=jobs)
        orders = compare_with(bt, (sign_vector(bt, order_to_point(h)) for h in enumerate_half_orders(n)), regions)
        graphs = compare_with(bt, (graph_to_region(g) for g in enumerate_colored(n)), regions)
        out.append(_report_check(f"BT_{n} half-orders vs oracle", orders))
        out.append(_report_check(f"BT_{n} colored graphs vs oracle", graphs))

        th = threshold_arrangement(n)
        t_regions = enumerate_regions(th, jobs=jobs)
        t_orders = compare_with(th, (sign_vector(th, threshold_order_to_point(b)) for b in enumerate_threshold_orders(n)), t_regions)
        t_graphs = compare_with(th, (threshold_region_dictionary(g) for g in enumerate_threshold_graphs(n)), t_regions)
        out.append(_report_check(f"T_{n} orders vs oracle", t_orders))
        out.append(_report_check(f"T_{n} threshold graphs vs oracle", t_graphs))
    return out


def suite_coefficients(n_max: int = 8, **_) -> list[dict]:
    out = []
    for n in range(0, n_max + 1):
        for family, chi in ((FamilyId.THRESHOLD, chi_threshold(n)), (FamilyId.BOXED_THRESHOLD, chi_boxed_threshold(n))):
            got = [chi_coefficient(family, n, j) for j in range(n + 1)]
            out.append(_check(f"{family.value} n={n} coefficients", list(chi.coeffs), got))
    for k in range(0, n_max + 1):
        out.append(_check(f"b({k},.) from signed partial sums", list(boxed_coeffs(k)), list(boxed_coeffs_from_partial_sums(k))))
    return out


def suite_egf(n_max: int = 8, **_) -> list[dict]:
    out = []
    egf = regions_boxed_via_egf(n_max)
    out.append(_check("r(BT_0) from EGF", 1, egf[0]))
    if n_max >= 1:
        out.append(_check("r(BT_1) from EGF", 3, egf[1]))
    for n in range(2, n_max + 1):
        out.append(_check(f"r(BT_{n}) EGF vs closed form", regions_boxed(n), egf[n]))
    for t in (3, 5, 7):
        vals = chi_boxed_via_egf(t, n_max)
        expected = [poly_eval(chi_boxed_threshold(n), t) for n in range(n_max + 1)]
        out.append(_check(f"chi(BT_n)({t}) EGF vs polynomial, n<={n_max}", expected, vals))
    return out


def suite_eulerian(n_max: int = 12, **_) -> list[dict]:
    return [
        _check(f"r(T_{n}) Eulerian vs ordered Bell", regions_threshold(n), regions_threshold_eulerian(n))
        for n in range(2, n_max + 1)
    ]


SUITES: dict[str, Callable[..., list[dict]]] = {
    "table1": suite_table1,
    "shift": suite_shift,
    "bijection": suite_bijection,
    "coefficients": suite_coefficients,
    "egf": suite_egf,
    "eulerian": suite_eulerian,
}


def run_suite(name: str, **kwargs) -> dict:
    checks = SUITES[name](**kwargs)
    return {"suite": name, "ok": all(c["ok"] for c in checks), "checks": checks}
