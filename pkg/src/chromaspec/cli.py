"""Command-line harness: spectra, certificates, lower bounds, identity
verification and witness inspection.

Exit codes are a stable contract: 0 success, 1 size-guard violation,
2 usage/config error, 3 mathematical assertion or certification failure.
Identical configs produce byte-identical output regardless of --jobs.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from .census import (
    CENSUS_LIMIT,
    CLASS_NAMES,
    compute_spectrum,
    enumerate_census,
    lower_bound_audit,
)
from .chromatic import (
    ChromaticCache,
    check_additive_dc,
    check_join_shift,
    check_leaf_factor,
    check_polyid,
    chromatic_poly,
    z_value,
)
from .graph6 import graph6_encode
from .graphs import Graph, Witness, contract_edge, delete_edge
from .oracle import GuardError, count_colorings
from .regimes import (
    CertificationError,
    PingPongViolation,
    WordCountGuardError,
    distinct_witness_values,
    regime_for,
)
from .scalars import Scalar, ScalarParseError
from .semigroup import (
    DegenerateParameterError,
    apply_word_graph,
    attainable_mode,
    attainable_vector,
    check_singular_third_op,
    feasible_mode,
    feasible_vector,
    predict_vector,
    ratio_map,
    sign_bridge_matrix,
    telescoped_subdivision_map,
    witness_vector,
)

EXIT_OK = 0
EXIT_GUARD = 1
EXIT_USAGE = 2
EXIT_MATH = 3

CACHE_ENV = "CHROMASPEC_CACHE_DIR"
CACHE_FILENAME = "chromatic.cache"


def _open_cache() -> tuple[ChromaticCache, str | None]:
    cache = ChromaticCache()
    cache_dir = os.environ.get(CACHE_ENV)
    if not cache_dir:
        return cache, None
    os.makedirs(cache_dir, exist_ok=True)
    path = os.path.join(cache_dir, CACHE_FILENAME)
    if os.path.exists(path):
        cache.load(path)
    return cache, path


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _parse_q(text: str) -> Scalar:
    return Scalar.parse(text)


# -- spectrum -----------------------------------------------------------------


def cmd_spectrum(args) -> int:
    try:
        q = _parse_q(args.q)
    except ScalarParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cache, cache_path = _open_cache()
    if args.census_in:
        # user-supplied corpus, one graph6 line per graph
        from .census import Spectrum
        from .graph6 import read_graph6_file

        graphs = read_graph6_file(args.census_in)
        if any(g.n != args.n for g in graphs):
            print(f"error: {args.census_in} holds graphs of other orders", file=sys.stderr)
            return EXIT_USAGE
        values = {chromatic_poly(g, cache).evaluate(q) for g in graphs}
        spectrum = Spectrum(q, args.n, args.cls, tuple(sorted(values)))
    else:
        if not 1 <= args.n <= CENSUS_LIMIT:
            print(f"error: spectrum needs 1 <= n <= {CENSUS_LIMIT}", file=sys.stderr)
            return EXIT_GUARD
        spectrum = compute_spectrum(args.n, q, args.cls, cache=cache, jobs=args.jobs)
        if args.census_out:
            from .graph6 import write_graph6_file

            write_graph6_file(args.census_out, enumerate_census(args.n, args.cls).graphs)
    if cache_path:
        cache.save(cache_path)
    if args.format == "json":
        _emit(json.dumps(spectrum.to_json(), indent=2), args.output)
    elif args.format == "csv":
        _emit("q,n,class,count\n" + spectrum.csv_row(), args.output)
    else:
        lines = [
            f"spectrum of {spectrum.count} distinct values at q={spectrum.q} over "
            f"{args.cls} graphs on n={spectrum.n} vertices:",
        ]
        lines += [f"  {v}" for v in spectrum.values]
        _emit("\n".join(lines), args.output)
    return EXIT_OK


# -- certify ------------------------------------------------------------------


def cmd_certify(args) -> int:
    try:
        q = _parse_q(args.q)
    except ScalarParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cache, _ = _open_cache()
    try:
        regime, cert = regime_for(q, m_override=args.m, name_override=args.regime, cache=cache)
    except DegenerateParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CertificationError as exc:
        print(f"certification failed ({exc.condition}): {exc}", file=sys.stderr)
        return EXIT_MATH
    payload = cert.to_json()
    if args.format == "text":
        lines = [
            f"regime {regime.name} for q = {q} ({regime.q_range}), seed {regime.seed_name}, "
            f"blocks {regime.block_k.label}={regime.block_k.word} "
            f"{regime.block_l.label}={regime.block_l.word}",
            f"base ratio {cert.base_ratio}",
        ]
        for c in cert.conditions:
            lines.append(f"  [{'pass' if c.passed else 'FAIL'}] {c.name}: {c.detail}")
        lines.append("certified" if cert.certified else "NOT certified")
        _emit("\n".join(lines), args.output)
    else:
        _emit(json.dumps(payload, indent=2), args.output)
    return EXIT_OK


# -- lowerbound ---------------------------------------------------------------


def cmd_lowerbound(args) -> int:
    try:
        q = _parse_q(args.q)
    except ScalarParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cache, cache_path = _open_cache()
    try:
        regime, _ = regime_for(q, m_override=args.m, name_override=args.regime, cache=cache)
        if args.no_exhaustive or args.n > CENSUS_LIMIT:
            report = distinct_witness_values(args.n, q, audit=args.audit, cache=cache, regime=regime)
            payload = report.to_json()
            passed = report.bound_holds
        else:
            audit_row = lower_bound_audit(args.n, q, audit=args.audit, cache=cache,
                                          regime=regime, jobs=args.jobs)
            payload = audit_row.to_json()
            if audit_row.witness_report is not None:
                payload["witness"] = audit_row.witness_report.to_json()
            passed = audit_row.passed
    except DegenerateParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except WordCountGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (CertificationError, PingPongViolation) as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_MATH
    if cache_path:
        cache.save(cache_path)
    if args.format == "text":
        lines = [f"{k}: {v}" for k, v in payload.items() if k not in ("values", "witness")]
        _emit("\n".join(lines), args.output)
    else:
        _emit(json.dumps(payload, indent=2), args.output)
    return EXIT_OK if passed else EXIT_MATH


# -- witness ------------------------------------------------------------------


def _expand_word(word: str, q: Scalar) -> str:
    out = []
    blocks = None
    for letter in word:
        if letter in "SB":
            out.append(letter)
        elif letter == "D":
            out.append("SS")
        elif letter in "KL":
            if blocks is None:
                regime, _ = regime_for(q)
                blocks = {regime.block_k.label: regime.block_k.word,
                          regime.block_l.label: regime.block_l.word}
            if letter not in blocks:
                raise ValueError(f"block {letter!r} undefined in the {regime.name} regime")
            out.append(blocks[letter])
        else:
            raise ValueError(f"unknown word letter {letter!r}")
    return "".join(out)


def cmd_witness(args) -> int:
    try:
        q = _parse_q(args.q)
        word = _expand_word(args.word or "", q)
    except (ScalarParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CertificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    seed_sizes = {"K2": 2, "K3": 3, "K4": 4}
    start = Witness(Graph.complete(seed_sizes[args.seed]), (0, 1))
    cache, cache_path = _open_cache()
    w = apply_word_graph(word, start)
    g, e = w.graph, w.edge
    lam = -q
    fv = feasible_vector(w, lam, cache)
    av = attainable_vector(w, q, cache)
    if cache_path:
        cache.save(cache_path)
    payload = {
        "graph6": graph6_encode(g.simplify()),
        "edge": list(e),
        "n": g.n,
        "word": args.word or "",
        "expanded_word": word,
        "feasible": {"lam": str(lam), "vector": [str(fv.x), str(fv.y)],
                     "ratio": str(fv.x / fv.y) if fv.y else None},
        "attainable": {"q": str(q), "vector": [str(av.x), str(av.y)],
                       "ratio": str(av.x / av.y) if av.y else None},
    }
    if args.format == "text":
        lines = [f"{k}: {json.dumps(v) if isinstance(v, (dict, list)) else v}"
                 for k, v in payload.items()]
        _emit("\n".join(lines), args.output)
    else:
        _emit(json.dumps(payload, indent=2), args.output)
    return EXIT_OK


# -- verify -------------------------------------------------------------------


def _random_graph(rng, n_max: int, min_edges: int = 0) -> Graph:
    while True:
        n = rng.randint(max(2, min_edges and 2), n_max)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        edges = [p for p in pairs if rng.random() < 0.55]
        if len(edges) >= min_edges:
            return Graph.build(n, edges)


def _random_edge(rng, g: Graph):
    a, b, _ = g.edges[rng.randrange(g.simple_edge_count)]
    return (a, b)


def _random_positive_rational(rng) -> Fraction:
    return Fraction(rng.randint(1, 9), rng.randint(1, 9))


def _random_q(rng) -> Scalar:
    while True:
        q = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if q not in (0, 1, 2):
            return Scalar.of(q)


def _lemma_suite(cache: ChromaticCache, rng, n_max: int, k_max: int, trials: int):
    """Registry of named identity checks; each returns (passed, detail)."""

    def delete_contract():
        for _ in range(trials):
            g = _random_graph(rng, n_max, min_edges=1)
            e = _random_edge(rng, g)
            lhs = chromatic_poly(g, cache)
            rhs = chromatic_poly(delete_edge(g, e), cache) - chromatic_poly(
                contract_edge(g, e), cache
            )
            if lhs != rhs:
                return False, f"failed on {g}, edge {e}"
        return True, f"{trials} random instances"

    def additive_dc():
        for _ in range(trials):
            g = _random_graph(rng, n_max, min_edges=1)
            if not check_additive_dc(g, _random_edge(rng, g), _random_positive_rational(rng), cache):
                return False, f"failed on {g}"
        return True, f"{trials} random instances"

    def leaf_factor():
        for _ in range(trials):
            g = _random_graph(rng, n_max)
            if not check_leaf_factor(g, rng.randrange(g.n), cache):
                return False, f"failed on {g}"
        return True, f"{trials} random instances"

    def apex_delete():
        for _ in range(trials):
            g = _random_graph(rng, n_max, min_edges=1)
            if not check_polyid(g, _random_edge(rng, g), cache):
                return False, f"failed on {g}"
        return True, f"{trials} random instances"

    def join_shift():
        for _ in range(trials):
            g = _random_graph(rng, min(n_max, 5))
            if not check_join_shift(g, rng.randint(1, 2), cache):
                return False, f"failed on {g}"
        return True, f"{trials} random instances"

    def sign_bridge():
        for _ in range(trials):
            g = _random_graph(rng, n_max, min_edges=1)
            e = _random_edge(rng, g)
            w = Witness(g, e)
            q = _random_q(rng)
            av = attainable_vector(w, q, cache)
            fv = feasible_vector(w, -q, cache)
            if av != sign_bridge_matrix(g.n).apply(fv):
                return False, f"failed on {g}, edge {e}, q={q}"
        return True, f"{trials} random instances"

    def telescoping():
        for _ in range(trials):
            q = _random_q(rng)
            m = rng.randint(1, 6)
            direct = ratio_map("S" * (2 * m), attainable_mode(q))
            if not direct.proportional_to(telescoped_subdivision_map(m, q)):
                return False, f"failed at q={q}, m={m}"
        return True, f"{trials} random (q, m) pairs"

    def singular_rewitness():
        for _ in range(trials):
            lam = _random_positive_rational(rng)
            if not check_singular_third_op(lam):
                return False, f"failed at lam={lam}"
        return True, f"{trials} random lam"

    def matrix_action():
        for _ in range(trials):
            g = _random_graph(rng, min(n_max, 5), min_edges=1)
            w = Witness(g, _random_edge(rng, g))
            word = "".join(rng.choice("SB") for _ in range(rng.randint(0, 3)))
            lam = _random_positive_rational(rng)
            mode = feasible_mode(lam)
            predicted = predict_vector(word, witness_vector(w, mode, cache), mode)
            if predicted != witness_vector(apply_word_graph(word, w), mode, cache):
                return False, f"failed on {g}, word {word!r}"
        return True, f"{trials} random words"

    def oracle_equivalence():
        for n in range(1, n_max + 1):
            for g in enumerate_census(n).graphs:
                poly = chromatic_poly(g, cache)
                for k in range(1, k_max + 1):
                    if poly.evaluate(k) != count_colorings(g, k):
                        return False, f"failed on {graph6_encode(g)} at k={k}"
        return True, f"all censuses n <= {n_max}, k <= {k_max}"

    def alternating_signs():
        for _ in range(trials):
            g = _random_graph(rng, n_max)
            poly = chromatic_poly(g, cache)
            coeffs = poly.coeffs
            if len(coeffs) != g.n + 1 or coeffs[-1] != 1:
                return False, f"monic/degree failure on {g}"
            for k in range(g.n + 1):
                if (-1) ** (g.n - k) * coeffs[k] < 0:
                    return False, f"sign failure on {g} at degree {k}"
        return True, f"{trials} random instances"

    def positivity():
        points = [Fraction(1, 3), Fraction(1), Fraction(3, 2), Scalar.sqrt_of(5) - 1]
        for _ in range(trials // 4 + 1):
            g = _random_graph(rng, n_max)
            for lam in points:
                if z_value(g, lam, cache).sign() <= 0:
                    return False, f"failed on {g} at lam={lam}"
        return True, f"sampled lam on {trials // 4 + 1} graphs"

    def degenerate_points():
        for _ in range(trials):
            g = _random_graph(rng, n_max)
            poly = chromatic_poly(g, cache)
            if poly.evaluate(0) != 0:
                return False, f"P(0) != 0 on {g}"
            expect1 = 1 if g.simple_edge_count == 0 else 0
            if poly.evaluate(1) != expect1:
                return False, f"P(1) wrong on {g}"
            expect2 = 2 ** g.component_count() if g.is_bipartite() else 0
            if poly.evaluate(2) != expect2:
                return False, f"P(2) wrong on {g}"
        return True, f"{trials} random instances"

    return {
        "delete-contract": delete_contract,
        "additive-delete-contract": additive_dc,
        "leaf-factor": leaf_factor,
        "apex-delete-identity": apex_delete,
        "join-shift": join_shift,
        "sign-bridge": sign_bridge,
        "subdivision-telescoping": telescoping,
        "singular-rewitness": singular_rewitness,
        "matrix-action": matrix_action,
        "oracle-equivalence": oracle_equivalence,
        "alternating-coefficients": alternating_signs,
        "normalized-positivity": positivity,
        "degenerate-points": degenerate_points,
    }


def cmd_verify(args) -> int:
    cache, cache_path = _open_cache()
    rng = random.Random(args.rng_seed)
    suite = _lemma_suite(cache, rng, args.n_max, args.k_max, args.trials)
    selected = args.lemma or sorted(suite)
    unknown = [name for name in selected if name not in suite]
    if unknown:
        print(f"error: unknown lemma names {unknown}; available: {sorted(suite)}", file=sys.stderr)
        return EXIT_USAGE
    results = []
    failures = []
    for name in selected:
        passed, detail = suite[name]()
        results.append((name, passed, detail))
        if not passed:
            failures.append(name)
    if cache_path:
        cache.save(cache_path)
    if args.format == "json":
        payload = [{"lemma": n, "passed": p, "detail": d} for n, p, d in results]
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        width = max(len(n) for n, _, _ in results)
        lines = [f"{n:<{width}}  {'pass' if p else 'FAIL'}  {d}" for n, p, d in results]
        _emit("\n".join(lines), args.output)
    if failures:
        print(f"failing: {', '.join(failures)}", file=sys.stderr)
        return EXIT_MATH
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromaspec",
        description="Exact chromatic evaluation spectra, witnesses and certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--output", default=None, help="write to file instead of stdout")

    p = sub.add_parser("spectrum", help="exhaustive evaluation spectrum over a census")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", required=True, help="exact scalar, e.g. -1, 3/2, 3/2+1/2*sqrt(5)")
    p.add_argument("--class", dest="cls", choices=CLASS_NAMES, default="all")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--census-out", default=None, help="also write the census as graph6 lines")
    p.add_argument("--census-in", default=None,
                   help="evaluate over a graph6 file instead of enumerating")
    common(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("certify", help="certify the ping-pong regime at q")
    p.add_argument("--q", required=True)
    p.add_argument("--regime", default=None, help="force a regime by name")
    p.add_argument("--m", type=int, default=None, help="override the subdivision half-count")
    common(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("lowerbound", help="constructive spectrum lower-bound audit")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--audit", action="store_true", help="re-verify each witness at graph level")
    p.add_argument("--no-exhaustive", action="store_true", help="skip the census comparison")
    p.add_argument("--regime", default=None)
    p.add_argument("--m", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_lowerbound)

    p = sub.add_parser("verify", help="run the identity suite")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--lemma", action="append", default=None, help="run only this lemma (repeatable)")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="apply a word to a seed and print exact vectors")
    p.add_argument("--word", default="", help="letters S, B, D (=SS), K, L (regime blocks)")
    p.add_argument("--seed", choices=("K2", "K3", "K4"), default="K2")
    p.add_argument("--q", required=True)
    common(p)
    p.set_defaults(func=cmd_witness)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (GuardError, WordCountGuardError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (PingPongViolation, CertificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except (ValueError, OSError) as exc:
        # malformed files, bad words, broken cache records: config errors
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
