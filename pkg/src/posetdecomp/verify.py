"""Check suites over single posets and families, used by the command line.

Each check returns a JSON-ready dict with a name, a passed flag, details, and
optional findings; a theorem falsification carries a witness.  Suites run the
checks over exhaustively enumerated small posets or seeded random families,
optionally across a process pool.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .chains import (
    enumerate_chain_decompositions,
    is_antichain,
    is_chain,
    is_chain_decomposition,
    maximum_antichain,
    minimum_chain_decomposition,
)
from .cut import enumerate_admissible_cuts, verify_cut_identity
from .errors import CheckFailure
from .generate import chain, random_poset, wrap_forest
from .hcd import deletion_bounds, is_homogeneous, mhcd, verify_embedding
from .nccd import (
    all_132_avoiding,
    ascending_runs_decomposition,
    canonical_chain_order,
    chain_concatenation,
    count_noncrossing_decompositions,
    derived_extension,
    descent_profile,
    is_132_avoiding,
    is_132_avoiding_in_extension,
    minimum_noncrossing_decomposition,
    verify_chain_bounds,
)
from .poset import Poset, enumerate_posets, mobius_matrix, signed_chain_count_matrix

DEFAULT_CHECKS = (
    "dilworth",
    "homogeneous",
    "deletion",
    "cut",
    "embedding",
    "bounds",
    "segments",
    "noncrossing-trivial",
)

BRUTE_FORCE_CAP = 6
SEGMENT_SWEEP_CAP = 6
SCAN_CAP = 8
NONCROSSING_CAP = 10


def catalan_numbers(count: int) -> list[int]:
    """First `count` + 1 Catalan numbers by the convolution recurrence."""
    cat = [1]
    for n in range(count):
        cat.append(sum(cat[i] * cat[n - i] for i in range(n + 1)))
    return cat


def _chain_set(d) -> frozenset:
    return frozenset(d.chains)


def check_dilworth(p: Poset, seed: int = 0) -> dict:
    """Minimum decomposition size equals the maximum antichain size."""
    d = minimum_chain_decomposition(p)
    a = maximum_antichain(p)
    details: dict = {"chains": d.k, "antichain": len(a)}
    passed = (
        d.k == len(a)
        and is_chain_decomposition(p, d)
        and is_antichain(p, a)
    )
    if p.n <= BRUTE_FORCE_CAP:
        brute = min(
            (dec.k for dec in enumerate_chain_decompositions(p, cap=BRUTE_FORCE_CAP)),
            default=0,
        )
        details["brute_force_minimum"] = brute
        passed = passed and d.k == brute
    out = {"name": "dilworth", "passed": passed, "details": details}
    if not passed:
        out["witness"] = {"decomposition": d.to_lines(), "antichain": [str(x) for x in a]}
    return out


def check_homogeneous(p: Poset, seed: int = 0, shuffles: int = 8) -> dict:
    """The merge fixpoint is homogeneous, order-independent, and minimal."""
    d = mhcd(p)
    details: dict = {"k": d.k}
    passed = is_chain_decomposition(p, d) and is_homogeneous(p, d)
    confluent = all(
        _chain_set(mhcd(p, shuffle_seed=seed + s)) == _chain_set(d)
        for s in range(shuffles)
    )
    details["confluent"] = confluent
    passed = passed and confluent
    if p.n <= BRUTE_FORCE_CAP:
        homogeneous = [
            dec
            for dec in enumerate_chain_decompositions(p, cap=BRUTE_FORCE_CAP)
            if is_homogeneous(p, dec)
        ]
        least = min((dec.k for dec in homogeneous), default=0)
        minimal = [dec for dec in homogeneous if dec.k == least]
        details["enumerated_minimum"] = least
        details["minimal_count"] = len(minimal)
        passed = (
            passed
            and d.k == least
            and len(minimal) == 1
            and _chain_set(minimal[0]) == _chain_set(d)
        )
    out = {"name": "homogeneous", "passed": passed, "details": details}
    if not passed:
        out["witness"] = {"decomposition": d.to_lines()}
    return out


def check_deletion(p: Poset, seed: int = 0) -> dict:
    """One-point deletion bounds for every element."""
    rep = deletion_bounds(p)
    out = {
        "name": "deletion",
        "passed": rep.ok,
        "details": {"k": rep.k, "elements": len(rep.entries)},
    }
    if not rep.ok:
        out["witness"] = [e for e in rep.entries if not (e["lower_ok"] and e["upper_ok"])]
    return out


def check_cut(p: Poset, seed: int = 0) -> dict:
    """Cut identity on every admissible cut, plus the signed-count cross-check.

    The second part compares the signed chain-count matrix against the Mobius
    matrix computed by its defining recursion; the two must agree entrywise.
    """
    d = mhcd(p)
    admissible = enumerate_admissible_cuts(p, d)
    failures = []
    for cut in admissible:
        rep = verify_cut_identity(p, cut)
        if not rep.equal:
            failures.append(rep.to_dict())
    hall = signed_chain_count_matrix(p) == mobius_matrix(p)
    passed = not failures and hall
    out = {
        "name": "cut",
        "passed": passed,
        "details": {
            "admissible_cuts": len(admissible),
            "signed_counts_match_mobius": hall,
        },
    }
    if failures:
        out["witness"] = failures[0]
    elif not hall:
        out["witness"] = {
            "signed_counts": signed_chain_count_matrix(p),
            "mobius": mobius_matrix(p),
        }
    return out


def check_embedding(p: Poset, seed: int = 0) -> dict:
    """Automorphisms embed into the oriented chain graph's symmetries."""
    rep = verify_embedding(p, seed=seed)
    out = {
        "name": "embedding",
        "passed": rep.ok,
        "details": {
            "aut_poset": rep.aut_poset_order,
            "aut_oriented": rep.aut_oriented_order,
            "hom_pairs": rep.hom_pairs_checked,
        },
        "findings": list(rep.findings),
    }
    if not rep.ok:
        out["witness"] = rep.witness
    return out


def check_bounds(p: Poset, seed: int = 0) -> dict:
    """The five-minimum inequality chain, or its pipeline half for larger n."""
    if p.n <= SCAN_CAP:
        rep = verify_chain_bounds(p)
        out = {
            "name": "bounds",
            "passed": rep.ok,
            "details": {
                "min_chains": rep.min_chains,
                "min_noncrossing": rep.min_noncrossing,
                "min_descents": rep.min_descents,
                "min_descents_ext": rep.min_descents_ext,
                "min_homogeneous": rep.min_homogeneous,
            },
            "findings": list(rep.findings),
        }
        if not rep.ok:
            out["witness"] = {name: ok for name, ok in rep.checks.items() if not ok}
        return out
    # permutation scans are exponential; above the cap check the constructive
    # pipeline only
    d = mhcd(p)
    order, findings = canonical_chain_order(p, d)
    pi = chain_concatenation(p, d, order)
    e = derived_extension(p)
    checks = {
        "witness-has-min-descents": descent_profile(p, pi).count == d.k,
        "witness-avoids-132": is_132_avoiding(p, pi),
        "witness-avoids-132-in-extension": is_132_avoiding_in_extension(p, pi, e),
    }
    if p.n <= NONCROSSING_CAP:
        nc, _ = minimum_noncrossing_decomposition(p)
        checks["chains-le-noncrossing"] = minimum_chain_decomposition(p).k <= nc
        checks["noncrossing-le-homogeneous"] = nc <= d.k
    passed = all(checks.values())
    out = {
        "name": "bounds",
        "passed": passed,
        "details": {"k": d.k, "scans": "skipped"},
        "findings": findings,
    }
    if not passed:
        out["witness"] = {name: ok for name, ok in checks.items() if not ok}
    return out


def check_segments(p: Poset, seed: int = 0) -> dict:
    """Every 132-avoiding permutation's runs form a noncrossing decomposition."""
    if p.n > SEGMENT_SWEEP_CAP:
        return {
            "name": "segments",
            "passed": True,
            "details": {"permutations": 0, "skipped": f"n > {SEGMENT_SWEEP_CAP}"},
        }
    swept = 0
    for perm in all_132_avoiding(p):
        dec = ascending_runs_decomposition(p, perm)
        if dec.k != descent_profile(p, perm).count:
            return {
                "name": "segments",
                "passed": False,
                "details": {"permutations": swept},
                "witness": {"permutation": [str(x) for x in perm]},
            }
        swept += 1
    return {"name": "segments", "passed": True, "details": {"permutations": swept}}


def check_noncrossing_trivial(p: Poset, seed: int = 0) -> dict:
    """A single noncrossing chain suffices exactly for total orders."""
    if p.n > NONCROSSING_CAP:
        return {
            "name": "noncrossing-trivial",
            "passed": True,
            "details": {"skipped": f"n > {NONCROSSING_CAP}"},
        }
    nc, _ = minimum_noncrossing_decomposition(p)
    total = is_chain(p, p.labels)
    passed = (nc <= 1) == total if p.n else nc == 0
    out = {
        "name": "noncrossing-trivial",
        "passed": passed,
        "details": {"min_noncrossing": nc, "total_order": total},
    }
    return out


_CHECKS = {
    "dilworth": check_dilworth,
    "homogeneous": check_homogeneous,
    "deletion": check_deletion,
    "cut": check_cut,
    "embedding": check_embedding,
    "bounds": check_bounds,
    "segments": check_segments,
    "noncrossing-trivial": check_noncrossing_trivial,
}


def run_poset_checks(p: Poset, which=DEFAULT_CHECKS, seed: int = 0) -> dict:
    """Run the named checks on one poset; exceptions become failed checks."""
    checks = []
    findings = []
    for name in which:
        if name not in _CHECKS:
            raise ValueError(f"unknown check {name!r}")
        try:
            result = _CHECKS[name](p, seed=seed)
        except CheckFailure as exc:
            result = {
                "name": name,
                "passed": False,
                "details": {"error": str(exc)},
                "witness": repr(exc.witness),
            }
        for f in result.pop("findings", []):
            findings.append({"check": name, **(f if isinstance(f, dict) else {"kind": str(f)})})
        checks.append(result)
    return {
        "poset": {
            "n": p.n,
            "elements": [str(x) for x in p.labels],
            "covers": [f"{x} < {y}" for x, y in p.covers()],
        },
        "checks": checks,
        "ok": all(c["passed"] for c in checks),
        "findings": findings,
    }


def check_catalan_counts(limit: int = 8) -> dict:
    """Noncrossing decompositions of total orders against the recurrence."""
    expected = catalan_numbers(limit)
    got = [count_noncrossing_decompositions(chain(n)) for n in range(limit + 1)]
    passed = got == expected
    out = {
        "name": "catalan",
        "passed": passed,
        "details": {"counts": got},
    }
    if not passed:
        out["witness"] = {"expected": expected, "got": got}
    return out


def _threads() -> int:
    raw = os.environ.get("POSET_DECOMP_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _check_worker(payload) -> dict:
    labels, packed, n, which, seed = payload
    lt = np.frombuffer(packed, dtype=np.uint8).reshape(n, n).astype(bool)
    return run_poset_checks(Poset(labels, lt), which=which, seed=seed)


def _run_many(posets, which, seed: int) -> list[dict]:
    posets = list(posets)
    threads = _threads()
    if threads == 1 or len(posets) < 4:
        return [run_poset_checks(p, which=which, seed=seed) for p in posets]
    payloads = [
        (p.labels, p.lt.astype(np.uint8).tobytes(), p.n, tuple(which), seed)
        for p in posets
    ]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_check_worker, payloads, chunksize=8))


def _aggregate_findings(results: list[dict]) -> list[dict]:
    counts: dict[str, dict] = {}
    for res in results:
        for f in res.get("findings", []):
            kind = f.get("kind", f.get("check", "unknown"))
            slot = counts.setdefault(kind, {"kind": kind, "count": 0, "example": f})
            slot["count"] += 1
    return sorted(counts.values(), key=lambda s: s["kind"])


def _summarize(mode: str, results: list[dict], extra_checks: list[dict]) -> dict:
    failures = [r for r in results if not r["ok"]]
    ok = not failures and all(c["passed"] for c in extra_checks)
    return {
        "mode": mode,
        "posets": len(results),
        "ok": ok,
        "failures": failures,
        "global_checks": extra_checks,
        "findings": _aggregate_findings(results),
    }


def verify_exhaustive(nmax: int, which=DEFAULT_CHECKS, seed: int = 0) -> dict:
    """Run the checks on every labeled poset with at most nmax elements."""
    posets = [p for n in range(nmax + 1) for p in enumerate_posets(n, cap=nmax)]
    results = _run_many(posets, which, seed)
    extra = [check_catalan_counts()]
    summary = _summarize("exhaustive", results, extra)
    summary["nmax"] = nmax
    return summary


def verify_random(
    n: int,
    count: int,
    which=DEFAULT_CHECKS,
    seed: int = 0,
    density: float = 0.3,
    family: str = "random",
) -> dict:
    """Run the checks on seeded random posets (uniform-ish or wrap forests)."""
    if family == "random":
        posets = [random_poset(n, density=density, seed=seed + i) for i in range(count)]
    elif family == "wrapforest":
        posets = [wrap_forest(n, seed=seed + i) for i in range(count)]
    else:
        raise ValueError(f"unknown family {family!r}")
    results = _run_many(posets, which, seed)
    summary = _summarize("random", results, [])
    summary.update({"n": n, "count": count, "seed": seed, "family": family})
    return summary
