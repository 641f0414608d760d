"""Acceptance criteria 1-7, one test each, with their stated limits.

Run ``pytest tests/test_acceptance.py`` to get one ``ACCEPTANCE n PASS/FAIL``
line per criterion in the terminal summary.
"""

from __future__ import annotations

import math
import time
from contextlib import contextmanager

import pytest

from mutants import CERTIFICATE_MUTANTS, STANDALONE_MUTANTS, STRUCTURAL_MUTANTS
from oracles import all_triple_sets, naive_realizable
from test_counting import sorted_specs
from test_oracle import bipartite_expected, complete_expected, four_expected, tripartite_expected
from tricross import tcd
from tricross.cli import main as cli_main
from tricross.counting import closed_form_excess, excess, face_profiles
from tricross.drawing import StructuralError, perturb, validate, validate_regular
from tricross.graph import build_complete_multipartite
from tricross.oracle import known_cr, tcr, tcr_lower_bound_from_cr
from tricross.search import CrossingSystem, Status, realize, search

RESULTS: dict[int, tuple[bool, str]] = {}

TITLES = {
    1: "oracle reproduces the published classifications",
    2: "closed-form excess and face profiles",
    3: "certificates found and validated",
    4: "lower bounds match certificates; perturbation counts",
    5: "bounded non-existence with distinct exhaustion status",
    6: "property suites and validator mutants",
    7: "TCD byte round trip and CLI exit codes",
}


@contextmanager
def criterion(n: int):
    notes: list[str] = []
    try:
        yield notes
    except BaseException:
        RESULTS[n] = (False, "; ".join(notes))
        raise
    RESULTS[n] = (True, "; ".join(notes))


def B(*parts):
    return build_complete_multipartite(parts)


def test_criterion_1_oracle():
    with criterion(1) as notes:
        t0 = time.perf_counter()
        checked = 0
        for n in range(1, 13):
            assert tcr((1,) * n).value.n == complete_expected(n), n
            checked += 1
        for n1 in range(1, 13):
            for n2 in range(1, n1 + 1):
                assert tcr((n1, n2)).value.n == bipartite_expected(n1, n2), (n1, n2)
                checked += 1
        for a in range(1, 9):
            for b in range(1, a + 1):
                for c in range(1, b + 1):
                    for d in range(1, c + 1):
                        assert tcr((a, b, c, d)).value.n == four_expected((a, b, c, d))
                        checked += 1
        for a in range(1, 11):
            for b in range(1, a + 1):
                for c in range(1, b + 1):
                    assert tcr((a, b, c)).value.n == tripartite_expected(a, b, c), (a, b, c)
                    checked += 1
        dt = time.perf_counter() - t0
        notes.append(f"{checked} specs in {dt:.3f}s")
        assert dt < 1.0


def test_criterion_2_counting():
    with criterion(2) as notes:
        n = 0
        for parts in sorted_specs(14):
            closed = closed_form_excess(parts)
            if closed is not None:
                assert closed == excess(parts).excess, parts
                n += 1
        assert face_profiles(0) == {()}
        assert face_profiles(1) == {(4,)}
        assert face_profiles(2) == {(5,), (4, 4)}
        assert face_profiles(3) == {(6,), (5, 4), (4, 4, 4)}
        notes.append(f"{n} closed forms checked")


def test_criterion_3_certificates(data_dir):
    with criterion(3) as notes:
        for parts in [(3, 3), (4, 3), (3, 1, 1, 1), (4, 1, 1, 1), (3, 3, 1)]:
            t0 = time.perf_counter()
            out = search(B(*parts), 0, 1)
            dt = time.perf_counter() - t0
            assert out.status is Status.FOUND and out.k == 1, parts
            assert validate(out.certificate).accepted
            assert dt < 60
            notes.append(f"{''.join(map(str, parts))}:{dt:.2f}s")
        for name, k in [("k63", 2), ("k6111", 2), ("k64", 4)]:
            t0 = time.perf_counter()
            dr = tcd.load(data_dir / f"{name}.tcd")
            rep = validate(dr)
            dt = time.perf_counter() - t0
            assert rep.accepted and rep.k == k, name
            assert dt < 1.0
            notes.append(f"{name} valid in {dt:.3f}s")


def test_criterion_4_lower_bounds(bundled):
    with criterion(4) as notes:
        for name, parts, doubles in [("k63", (6, 3), 6), ("k64", (6, 4), 12)]:
            dr = bundled[name]
            assert math.ceil(known_cr(parts) / 3) == tcr_lower_bound_from_cr(known_cr(parts)) == dr.k
            reg = perturb(dr)
            assert reg.k == doubles and validate_regular(reg).accepted
            notes.append(f"{name}: k={dr.k}, {reg.k} double crossings")


def test_criterion_5_bounded_nonexistence():
    with criterion(5) as notes:
        for parts, k_min, k_max in [((3, 3), 0, 0), ((5, 3), 0, 2), ((4, 4), 0, 1)]:
            t0 = time.perf_counter()
            out = search(B(*parts), k_min, k_max)
            dt = time.perf_counter() - t0
            assert out.status is Status.NONE_WITHIN and dt < 600, parts
            notes.append(f"{''.join(map(str, parts))}<={k_max}: {out.status.value} {dt:.2f}s")
        tight = search(B(5, 3), 0, 2, budget_nodes=2)
        assert tight.status is Status.BUDGET_EXCEEDED
        assert tight.status is not Status.NONE_WITHIN


def _counting_facts(dr):
    rep = validate(dr)
    assert rep.accepted
    g = dr.base
    r = rep.faces.total
    assert rep.n_segments == g.q + 3 * dr.k and rep.n_vertices == g.p + dr.k
    assert rep.n_vertices - rep.n_segments + r == 2
    d = 3 * g.p - g.q - 6
    assert d % 2 == r % 2
    if dr.k >= 1 and d <= 3:
        assert rep.faces.profile in face_profiles(d)


def test_criterion_6_properties(bundled):
    with criterion(6) as notes:
        # (a) + (b)
        drawings = list(bundled.values())
        for parts in [(3, 2, 1), (4, 2, 1), (2, 2, 2), (3, 3, 1)]:
            drawings.append(search(B(*parts), 0, 1).certificate)
        for dr in drawings:
            _counting_facts(dr)
        notes.append(f"(a,b) {len(drawings)} drawings")
        # (c)
        base = bundled["k33"]
        rejected = 0
        for rule, make in CERTIFICATE_MUTANTS.items():
            rep = validate(make(base))
            assert not rep.accepted
            assert rule in rep.rules_violated() or rule in {v.rule for v in rep.diagnostics}
            rejected += 1
        for rule, make in STANDALONE_MUTANTS.items():
            assert validate(make()).rules_violated() == {rule}
            rejected += 1
        for make in STRUCTURAL_MUTANTS.values():
            with pytest.raises(StructuralError):
                validate(make(base))
            rejected += 1
        assert rejected == 10
        notes.append("(c) 10/10 mutants rejected")
        # (d)
        for parts in [(3, 3), (2, 2, 1)]:
            g = B(*parts)
            for k in (0, 1):
                for S in all_triple_sets(g, k):
                    assert (realize(g, CrossingSystem(S)) is not None) == naive_realizable(g, S)
        notes.append("(d) naive oracle agrees")


def test_criterion_7_tcd_and_cli(bundled, data_dir, tmp_path, capsys):
    with criterion(7) as notes:
        for f in sorted(data_dir.glob("*.tcd")):
            text = f.read_text()
            assert tcd.serialize(tcd.parse(text)) == text, f.name
        notes.append(f"{len(bundled)} files byte-identical")
        codes = {}
        codes["validate-ok"] = cli_main(["validate", str(data_dir / "k33.tcd")])
        bad = tmp_path / "bad.tcd"
        tcd.dump(CERTIFICATE_MUTANTS["R1"](bundled["k33"]), bad)
        codes["validate-reject"] = cli_main(["validate", str(bad)])
        trunc = tmp_path / "trunc.tcd"
        trunc.write_text("tcd 1\ngraph parts 3 3\n")
        codes["validate-structural"] = cli_main(["validate", str(trunc)])
        codes["faces-unsupported"] = cli_main(["faces", "--d", "4"])
        codes["search-found"] = cli_main(["search", "3", "3", "--max-k", "1"])
        codes["search-none"] = cli_main(["search", "5", "3", "--max-k", "2"])
        codes["search-budget"] = cli_main(["--budget-nodes", "1", "search", "5", "3", "--max-k", "2"])
        capsys.readouterr()
        assert codes == {"validate-ok": 0, "validate-reject": 1, "validate-structural": 2, "faces-unsupported": 2,
                         "search-found": 0, "search-none": 3, "search-budget": 4}
        notes.append("exit codes 0/1/2/3/4")
