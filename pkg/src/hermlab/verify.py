"""The reproduction suite: every published number this library can check,
as named pass/fail checks shared by the CLI and the acceptance tests.

Profiles: "full" runs everything for the given q (exhaustive pair work at
q=2); "counts" runs the enumeration counts, graph parameters, incidence
bounds, and the base-curve intersection profile.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

import numpy as np

from . import bulk, graphs, hermitian as hm, polyalg, reference_data, schemes, tablematch


@dataclass
class Check:
    name: str
    expected: object
    actual: object

    @property
    def status(self):
        return "pass" if self.expected == self.actual else "fail"

    @property
    def ok(self):
        return self.status == "pass"


class Inconclusive(RuntimeError):
    """Raised when an algorithm gave up (e.g. Hilbert non-stabilization);
    distinct from a verification mismatch."""


def run_suite(q, profile="full", jobs=1, cache_dir=None, seed=0,
              oracle_samples=10000):
    """All checks for one q.  Returns (checks, timings dict)."""
    checks = []
    timings = {}
    t0 = time.perf_counter()
    surface = hm.HermitianSurface(q, seed=seed, cache_dir=cache_dir)

    def clock(name):
        timings[name] = round(time.perf_counter() - t0, 3)

    try:
        _counts_checks(surface, checks)
        clock("counts")
        _srg_checks(surface, checks, profile)
        clock("srg")
        if q in (2, 3):
            _incidence_checks(surface, checks, seed)
            clock("incidence")
            _profile_checks(surface, checks, jobs, cache_dir)
            clock("intersection_profile")
        if profile == "full" and q == 2:
            _q2_full_checks(surface, checks, jobs, oracle_samples)
            clock("q2_full")
        if profile == "full" and q == 3:
            _q3_oracle_checks(surface, checks, seed, oracle_samples)
            clock("q3_oracle")
        _partition_checks(checks)
        clock("partition")
    except polyalg.InconclusiveError as exc:
        raise Inconclusive(str(exc)) from exc
    return checks, timings


# ---------------------------------------------------------------------------

def _counts_checks(surface, checks):
    q = surface.q
    checks.append(Check(f"q{q}.points", hm.point_count(q), len(surface.points())))
    checks.append(Check(f"q{q}.lines", hm.line_count(q), len(surface.lines())))
    if q <= 3:
        orbit = surface.curve_orbit()
        checks.append(Check(f"q{q}.curves", hm.curve_count(q), len(orbit)))
        checks.append(Check(f"q{q}.curve_keys_distinct", hm.curve_count(q),
                            len(set(orbit.keys))))


def _srg_checks(surface, checks, profile):
    q = surface.q
    from . import projgeo
    line_pts = [projgeo.line_points(l) for l in surface.lines()]
    coll = graphs.collinearity_graph(surface.points(), line_pts)
    formula = graphs.srg_formula(q)
    comp_params = graphs.srg_params(coll.complement())
    checks.append(Check(f"q{q}.complement_collinearity_srg", formula.as_tuple(),
                        comp_params.as_tuple()
                        if isinstance(comp_params, graphs.SrgParams) else comp_params))
    if q <= 3:
        orbit = surface.curve_orbit()
        curve_pts = [hm.curve_rational_points(c) for c in orbit.items]
        pc = graphs.build_point_curve_graph(surface.points(), curve_pts)
        params = graphs.srg_params(pc)
        checks.append(Check(f"q{q}.point_curve_srg", formula.as_tuple(),
                            params.as_tuple()
                            if isinstance(params, graphs.SrgParams) else params))
        checks.append(Check(f"q{q}.complement_identity", True,
                            pc.same_edges(coll.complement())))


def _incidence_checks(surface, checks, seed):
    q = surface.q
    from . import projgeo
    orbit = surface.curve_orbit()
    curve_sets = [set(hm.curve_rational_points(c)) for c in orbit.items]
    line_sets = [set(projgeo.line_points(l)) for l in surface.lines()]
    pts = set(surface.points())
    checks.append(Check(f"q{q}.points_covered_by_curves", True,
                        set().union(*curve_sets) == pts))
    checks.append(Check(f"q{q}.points_covered_by_lines", True,
                        set().union(*line_sets) == pts))
    if q == 2:
        worst = max(len(c & l) for c in curve_sets for l in line_sets)
        checks.append(Check("q2.curve_line_tangency_bound", True, worst <= 1))
    else:
        rng = random.Random(seed)
        worst = 0
        for _ in range(100000):
            c = curve_sets[rng.randrange(len(curve_sets))]
            l = line_sets[rng.randrange(len(line_sets))]
            worst = max(worst, len(c & l))
        checks.append(Check(f"q{q}.curve_line_tangency_bound_sampled", True,
                            worst <= 1))


def _profile_checks(surface, checks, jobs, cache_dir):
    """Base-curve intersection profile, class counts, conjecture."""
    import os
    q = surface.q
    orbit = surface.curve_orbit()
    resume = os.path.join(cache_dir, f"profile-q{q}.json") if cache_dir else None
    prof = bulk.base_profile(orbit, base=0, method="fast", jobs=jobs,
                             resume_path=resume)
    values = sorted(set(int(v) for v in prof if v >= 0))
    if q == 2:
        checks.append(Check("q2.profile_value_set", [1, 2, 3, 4, 5], values))
    elif q == 3:
        checks.append(Check("q3.profile_value_set_length",
                            [0, 1, 2, 3, 4, 5, 6, 7, 8, 10], values))
        published = set()
        for j, v in enumerate(prof):
            if v < 0:
                continue
            if v == 0:
                published.add(int(polyalg.cone_intersection_number(
                    orbit.items[0], orbit.items[j])))
            else:
                published.add(int(v))
        checks.append(Check("q3.profile_value_set_published",
                            [1, 2, 3, 4, 5, 6, 7, 8, 10, 20],
                            sorted(published)))
    rep = schemes.conjecture_check(q, values)
    checks.append(Check(f"q{q}.conjecture_d_eq_q2_plus_1", rep.expected,
                        rep.class_count))


def _q2_full_checks(surface, checks, jobs, oracle_samples):
    orbit = surface.curve_orbit()
    ivals = bulk.pairwise_matrix(orbit, method="fast", jobs=jobs)
    off = ~np.eye(len(orbit), dtype=bool)
    checks.append(Check("q2.value_set_all_pairs", [1, 2, 3, 4, 5],
                        sorted(set(ivals[off].tolist()))))
    checks.append(Check("q2.curve_graph_complete", True,
                        bool((ivals[off] >= 1).all())))
    L1, L2 = hm.disjoint_line_pair(2)
    checks.append(Check("q2.disjoint_lines_intersection", 0,
                        polyalg.intersection_number(L1, L2)))

    # intersection scheme and its tables, entry-exact
    ref = reference_data.INTERSECTION_Q2
    s_int = schemes.scheme_from_invariant(orbit.items, ivals)
    checks.append(Check("q2.intersection_scheme_d", ref["d"], s_int.d))
    checks.append(Check("q2.intersection_valencies", ref["valencies"],
                        s_int.valencies))
    t_int = schemes.character_table(s_int)
    P = [[x.as_rational() for x in row] for row in t_int.P]
    Q = [[x.as_rational() for x in row] for row in t_int.Q]
    checks.append(Check("q2.intersection_P", ref["P"], P))
    checks.append(Check("q2.intersection_Q", ref["Q"], Q))
    checks.append(Check("q2.intersection_L",
                        ref["L"], [m.tolist() for m in s_int.intersection_matrices()]))
    duals = schemes.dual_intersection_matrices(t_int)
    checks.append(Check("q2.intersection_L_dual", ref["L_dual"], duals))
    checks.append(Check("q2.intersection_dense_oracle_ok", True,
                        schemes.dense_character_oracle(s_int, t_int) < 1e-6))

    # Schurian schemes
    for kind, ref_tab in (("points", reference_data.POINTS_Q2),
                          ("lines", reference_data.LINES_Q2)):
        s = surface.schurian_scheme(kind)
        checks.append(Check(f"q2.schurian_{kind}_d", ref_tab["d"], s.d))
        tab = schemes.character_table(s)
        hit = tablematch.match_with_conjugation(tab, ref_tab["P"], ref_tab["Q"])
        checks.append(Check(f"q2.schurian_{kind}_tables_match", True,
                            hit is not None))
        sig = tablematch.match_intersection_matrices(
            [m.tolist() for m in s.intersection_matrices()], ref_tab["L"])
        checks.append(Check(f"q2.schurian_{kind}_L_match", True, sig is not None))
        dd = schemes.dual_intersection_matrices(tab)
        key = "L_dual_transposed" if "L_dual_transposed" in ref_tab else "L_dual"
        sig_d = tablematch.match_intersection_matrices(
            dd, ref_tab[key], allow_transpose=(key == "L_dual_transposed"))
        checks.append(Check(f"q2.schurian_{kind}_L_dual_match", True,
                            sig_d is not None))

    ref_c = reference_data.CURVES_Q2
    s_cur = surface.schurian_scheme("curves")
    checks.append(Check("q2.schurian_curves_d", ref_c["d"], s_cur.d))
    checks.append(Check("q2.schurian_curves_noncommutative", False,
                        s_cur.is_commutative()))
    checks.append(Check("q2.schurian_curves_valencies",
                        sorted(ref_c["valencies"]), sorted(s_cur.valencies)))
    t_cur = schemes.character_table(s_cur)
    checks.append(Check("q2.schurian_curves_ranks", sorted(ref_c["ranks"]),
                        sorted(t_cur.ranks)))
    checks.append(Check("q2.schurian_curves_rep_ranks", sorted(ref_c["rep_ranks"]),
                        sorted(t_cur.rep_ranks)))
    checks.append(Check("q2.schurian_curves_multiplicities",
                        sorted(ref_c["multiplicities"]),
                        sorted(t_cur.multiplicities)))
    hit = tablematch.match_with_conjugation(t_cur, ref_c["P"], ref_c["Q"])
    checks.append(Check("q2.schurian_curves_table1_match", True, hit is not None))
    checks.append(Check("q2.schurian_curves_dense_oracle_ok", True,
                        schemes.dense_character_oracle(s_cur, t_cur) < 1e-6))

    # oracle equivalence: reference Hilbert route on every pair
    ref_vals = bulk.pairwise_matrix(orbit, method="reference", jobs=jobs)
    checks.append(Check("q2.fast_equals_reference_all_pairs", True,
                        bool((ref_vals == ivals).all())))


def _q3_oracle_checks(surface, checks, seed, oracle_samples):
    orbit = surface.curve_orbit()
    rng = random.Random(seed)
    bad = 0
    for _ in range(oracle_samples):
        i, j = rng.sample(range(len(orbit)), 2)
        a = polyalg.intersection_number_fast(orbit.items[i], orbit.items[j])
        b = polyalg.intersection_number(orbit.items[i], orbit.items[j])
        if a != b:
            bad += 1
    checks.append(Check(f"q3.fast_equals_reference_{oracle_samples}_samples",
                        0, bad))


def _partition_checks(checks):
    s1 = sum(schemes.partition_function(v) for v in (1, 2, 3, 4, 5))
    checks.append(Check("partition_sum_q2_classes", 18, s1))
    vals = (1, 2, 3, 4, 5, 6, 7, 8, 10, 20)
    s2 = sum(schemes.partition_function(v) for v in vals)
    checks.append(Check("partition_sum_q3_classes", 735, s2))
