"""Invariant suites producing JSON-ready verdicts, shared by the CLI."""
from __future__ import annotations

from typing import Callable

from .bijections import (
    omega,
    omega_inverse,
    psi,
    psi_inverse,
    refined_count,
    subsets,
)
from .dissections import enumerate_dissections, negative_roots_contained
from .oracles import (
    exhaustive_psi_inverse,
    exhaustive_refined_counts,
    exhaustive_tableaux,
    grid_regions_stabilized,
    verdict,
)
from .partitions import count_partitions, count_positive, enumerate_partitions, max_parts
from .shi import (
    all_fillings,
    enumerate_regions,
    hook_mask,
    phi,
    phi_inverse,
    roots,
    shi_mask,
    shi_violations,
    tableau_from_filling,
    wall_profile,
)

# exhaustive dissection work stays at desk scale
DISSECTION_MAX_N = 4


def suite_counts(n_max: int, m_max: int) -> list[dict]:
    out = []
    for n in range(1, n_max + 1):
        for m in range(1, m_max + 1):
            expect = count_partitions(n, m)
            parts = list(enumerate_partitions(n, m))
            regions = list(enumerate_regions(n, m))
            out.append(verdict("count.partitions", n, m, len(parts) == expect,
                               {"enumerated": len(parts), "formula": str(expect)}))
            out.append(verdict("count.regions", n, m, len(regions) == expect,
                               {"enumerated": len(regions), "formula": str(expect)}))
            pos = count_positive(n, m)
            got_p = sum(1 for p in parts if not max_parts(p))
            got_r = sum(1 for t in regions if wall_profile(t).bounded)
            out.append(verdict("count.positive", n, m, got_p == got_r == pos,
                               {"partitions": got_p, "regions": got_r, "formula": str(pos)}))
            if n <= DISSECTION_MAX_N:
                diss = list(enumerate_dissections(n, m))
                got_d = sum(1 for d in diss if not negative_roots_contained(d))
                out.append(verdict("count.dissections", n, m, len(diss) == expect,
                                   {"enumerated": len(diss), "formula": str(expect)}))
                out.append(verdict("count.positive_dissections", n, m, got_d == pos,
                                   {"dissections": got_d, "formula": str(pos)}))
    return out


def suite_roundtrip(n_max: int, m_max: int) -> list[dict]:
    out = []
    for n in range(1, min(n_max, DISSECTION_MAX_N) + 1):
        for m in range(1, m_max + 1):
            parts = list(enumerate_partitions(n, m))
            regions = list(enumerate_regions(n, m))
            diss = list(enumerate_dissections(n, m))
            checks = {
                "phi.phi_inverse": sum(phi(phi_inverse(p)) != p for p in parts),
                "phi_inverse.phi": sum(phi_inverse(phi(t)) != t for t in regions),
                "psi.psi_inverse": sum(psi(psi_inverse(p)) != p for p in parts),
                "psi_inverse.psi": sum(psi_inverse(psi(d)) != d for d in diss),
                "omega.omega_inverse": sum(omega(omega_inverse(t)) != t for t in regions),
                "omega_inverse.omega": sum(omega_inverse(omega(d)) != d for d in diss),
            }
            for name, bad in checks.items():
                out.append(verdict(f"roundtrip.{name}", n, m, bad == 0, {"mismatches": bad}))
    return out


def suite_walls(n_max: int, m_max: int) -> list[dict]:
    out = []
    for n in range(1, min(n_max, DISSECTION_MAX_N) + 1):
        for m in range(1, m_max + 1):
            bad = []
            for d in enumerate_dissections(n, m):
                a = negative_roots_contained(d)
                b = max_parts(psi(d))
                c = wall_profile(omega(d)).simple_walls
                if not a == b == c:
                    bad.append(d.to_json()["diagonals"])
            out.append(verdict("walls.snake_maxparts_walls", n, m, not bad,
                               {"mismatches": len(bad), "first": bad[:3]}))
    return out


def suite_refined(n_max: int, m_max: int) -> list[dict]:
    out = []
    for n in range(1, min(n_max, DISSECTION_MAX_N) + 1):
        for m in range(1, m_max + 1):
            diss, regs = exhaustive_refined_counts(n, m)
            bad = [sorted(J) for J in subsets(n)
                   if not diss[J] == regs[J] == refined_count(n, m, J)]
            totals_ok = diss.total() == regs.total() == count_partitions(n, m)
            out.append(verdict("refined.parabolic_product", n, m, not bad and totals_ok,
                               {"mismatched_J": bad, "total": str(diss.total())}))
    return out


def suite_oracle(n_max: int, m_max: int) -> list[dict]:
    out = []
    for n in range(1, min(n_max, DISSECTION_MAX_N) + 1):
        for m in range(1, m_max + 1):
            regions = set(enumerate_regions(n, m))
            out.append(verdict("oracle.exhaustive_tableaux", n, m,
                               exhaustive_tableaux(n, m) == regions, {"regions": len(regions)}))
            fillings = all_fillings(n, m)
            same = bool((shi_mask(n, m, fillings) == hook_mask(n, m, fillings)).all())
            out.append(verdict("oracle.hook_equals_shi", n, m, same, {"fillings": len(fillings)}))
            bad = sum(exhaustive_psi_inverse(p) != psi_inverse(p) for p in enumerate_partitions(n, m))
            out.append(verdict("oracle.search_psi_inverse", n, m, bad == 0, {"mismatches": bad}))
            if n <= 3 and m <= 2:
                raw, res = grid_regions_stabilized(n, m)
                keys = {t.rows for t in regions}
                invalid = [row for row in raw if shi_violations(n, m, dict(zip(roots(n), row)))]
                grid = {tableau_from_filling(n, m, row).rows for row in raw if row not in invalid}
                out.append(verdict("oracle.grid_regions", n, m, grid == keys and not invalid,
                                   {"grid": len(grid), "regions": len(keys),
                                    "invalid": len(invalid), "resolution": res}))
    return out


SUITES: dict[str, Callable[[int, int], list[dict]]] = {
    "counts": suite_counts,
    "roundtrip": suite_roundtrip,
    "walls": suite_walls,
    "refined": suite_refined,
    "oracle": suite_oracle,
}


def run_suite(name: str, n_max: int, m_max: int) -> list[dict]:
    if name == "all":
        return [v for fn in SUITES.values() for v in fn(n_max, m_max)]
    return SUITES[name](n_max, m_max)
