"""Command-line frontend: spectra, polynomials, generators, iso, search, verify.

Digraph sources are file paths, '-' for standard input, or inline family
specs like 'cycle:5', 'inf:2,3', 'theta:0,2,0', 'infhat:2,4', 'dj:5,3'.
JSON output is the stable machine interface; the human tables may change.

Exit codes: 0 success (and 'isomorphic' for iso), 1 check failures or
'not isomorphic', 2 usage errors, 3 size limits, 4 non-convergence.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .digraph import (
    Digraph,
    converse,
    format_edge_list,
    from_arcs,
    is_isomorphic,
    parse_edge_list,
    to_dot,
)
from .errors import (
    CompspecError,
    InvalidFamilyParameters,
    NonConvergence,
    SizeLimitExceeded,
)
from .families import (
    DJ,
    Infinity,
    Theta,
    closed_form_charpoly,
    generate,
    infinity_for_theta,
    notdcs_pairs,
    parse_spec,
    prop12_pair,
    spec_prefixes,
    thetas_for_infinity,
)
from .sachs import sachs_char_poly
from .search import find_cospectral_classes
from .spectral import Polynomial, char_poly_exact
from .spectrum import (
    DEFAULT_MAX_SCC,
    DEFAULT_RADIUS_TOL,
    classify_cardinality,
    complementarity_spectrum,
    spectra_equal,
)


def _max_scc() -> int:
    raw = os.environ.get("COMPSPEC_MAX_SCC")
    return int(raw) if raw else DEFAULT_MAX_SCC


def _load_digraph(token: str) -> Digraph:
    if token == "-":
        return parse_edge_list(sys.stdin.read())
    if token.split(":", 1)[0] in spec_prefixes():
        return generate(parse_spec(token))
    with open(token, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _cmd_spectrum(args: argparse.Namespace) -> int:
    d = _load_digraph(args.source)
    sp = complementarity_spectrum(d, tol=args.tol, max_scc=_max_scc())
    if args.json:
        print(json.dumps(sp.to_json_dict()))
    else:
        for est, wit in zip(sp.values, sp.witnesses):
            print(f"{est.value:.12g}  [{est.lower!r}, {est.upper!r}]"
                  f"  witness {list(wit)}")
    return 0


def _cmd_charpoly(args: argparse.Namespace) -> int:
    if args.method == "closed":
        if args.source.split(":", 1)[0] not in spec_prefixes():
            raise ValueError("--method closed needs an inline family spec")
        p = closed_form_charpoly(parse_spec(args.source))
    else:
        d = _load_digraph(args.source)
        p = char_poly_exact(d) if args.method == "exact" else sachs_char_poly(d)
    if args.json:
        print(json.dumps(p.to_json_dict()))
    else:
        print(json.dumps([int(c) for c in p.coeffs]))
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    d = generate(parse_spec(args.spec))
    sys.stdout.write(to_dot(d) if args.dot else format_edge_list(d))
    return 0


def _cmd_iso(args: argparse.Namespace) -> int:
    ok = is_isomorphic(_load_digraph(args.a), _load_digraph(args.b))
    print("isomorphic" if ok else "not isomorphic")
    return 0 if ok else 1


def _cmd_search(args: argparse.Namespace) -> int:
    universe = "strongly_connected" if args.universe == "scc" else "all"
    report = find_cospectral_classes(
        args.order, universe, require_equal_size=args.equal_size
    )
    if args.json:
        print(json.dumps(report.to_json_dict()))
    else:
        print(
            f"order {report.order}, {universe}: {len(report.classes)} classes,"
            f" {len(report.nontrivial_classes)} nontrivial"
        )
        for c in report.nontrivial_classes:
            vals = ", ".join(f"{e.value:.9g}" for e in c.spectrum.values)
            print(f"  {{{vals}}}:")
            for m in c.members:
                print(f"    {m.arc_count} arcs: {list(m.arcs)}")
    return 0


# verify: named checks over parameter grids


def _parse_ranges(
    text: str | None, defaults: dict[str, range]
) -> dict[str, range]:
    ranges = dict(defaults)
    if not text:
        return ranges
    for part in text.split(","):
        name, sep, span = part.partition("=")
        name = name.strip()
        if not sep or name not in defaults:
            raise ValueError(
                f"bad range {part!r}; variables: {', '.join(defaults)}"
            )
        lo, sep2, hi = span.partition("..")
        ranges[name] = range(int(lo), int(hi if sep2 else lo) + 1)
    return ranges


def _spectrum_uncapped(d: Digraph, cache: dict):
    # verify builds its own sparse family instances; lift the density cap
    return complementarity_spectrum(d, max_scc=max(d.n, DEFAULT_MAX_SCC),
                                    cache=cache)


def _verify_prop11a(rng: dict[str, range]) -> list[tuple[str, bool, str]]:
    """Each theta digraph is cospectral with its infinity mate."""
    rows = []
    cache: dict = {}
    for a in rng["a"]:
        for b in rng["b"]:
            for c in rng["c"]:
                if not 0 <= a <= b or b == 0 or c < 0:
                    continue
                th = Theta(a, b, c)
                inf = infinity_for_theta(a, b, c)
                ident = closed_form_charpoly(th).shifted(1 + c) == (
                    closed_form_charpoly(inf)
                )
                same = spectra_equal(
                    _spectrum_uncapped(generate(th), cache),
                    _spectrum_uncapped(generate(inf), cache),
                )
                ok = ident and same
                rows.append((f"a={a} b={b} c={c}", ok,
                             "" if ok else "mate not cospectral"))
    return rows


def _verify_prop11b(rng: dict[str, range]) -> list[tuple[str, bool, str]]:
    """The r-1 theta mates of an infinity digraph, pairwise non-isomorphic."""
    rows = []
    cache: dict = {}
    for r in rng["r"]:
        for s in rng["s"]:
            if not 2 <= r <= s:
                continue
            base = _spectrum_uncapped(generate(Infinity(r, s)), cache)
            mates = []
            notes = []
            ok = True
            for spec in thetas_for_infinity(r, s):
                try:
                    g = generate(spec)
                except InvalidFamilyParameters:
                    notes.append(f"theta({spec.a},{spec.b},{spec.c}) boundary")
                    continue
                mates.append(g)
                if not spectra_equal(_spectrum_uncapped(g, cache), base):
                    ok = False
                    notes.append(f"theta({spec.a},{spec.b},{spec.c}) differs")
            for i in range(len(mates)):
                for j in range(i + 1, len(mates)):
                    if is_isomorphic(mates[i], mates[j]):
                        ok = False
                        notes.append("isomorphic mates")
            rows.append((f"r={r} s={s}", ok, "; ".join(notes)))
    return rows


def _verify_prop12(rng: dict[str, range]) -> list[tuple[str, bool, str]]:
    """Infinity(r,5r) vs Infinity(2r,3r): exact identity and equal spectra."""
    rows = []
    cache: dict = {}
    mono = Polynomial.monomial
    for r in rng["r"]:
        one, two = prop12_pair(r)
        lhs = closed_form_charpoly(one).shifted(r)
        rhs = (mono(2 * r) - mono(r) + mono(0)) * closed_form_charpoly(two)
        ident = lhs == rhs
        same = spectra_equal(
            _spectrum_uncapped(generate(one), cache),
            _spectrum_uncapped(generate(two), cache),
        )
        ok = ident and same
        rows.append((f"r={r}", ok, "" if ok else "pair differs"))
    return rows


def _verify_thm13(rng: dict[str, range]) -> list[tuple[str, bool, str]]:
    """Swapped infinity-hat pairs: same order/size/spectrum, non-isomorphic."""
    rows = []
    cache: dict = {}
    for r in rng["r"]:
        for s in rng["s"]:
            if not r < s:
                continue
            x, y = notdcs_pairs("InfinityHat", r=r, s=s)
            notes = []
            if x.n != y.n or x.arc_count != y.arc_count:
                notes.append("order/size mismatch")
            if not spectra_equal(
                _spectrum_uncapped(x, cache), _spectrum_uncapped(y, cache)
            ):
                notes.append("spectra differ")
            if is_isomorphic(x, y):
                notes.append("isomorphic")
            rows.append((f"r={r} s={s}", not notes, "; ".join(notes)))
    return rows


def _verify_thm14(rng: dict[str, range]) -> list[tuple[str, bool, str]]:
    """D(j) family: shared formula polynomial and shared spectrum over j."""
    rows = []
    cache: dict = {}
    for n in rng["n"]:
        digs = notdcs_pairs("DJ", n=n)
        formula = closed_form_charpoly(DJ(n, 2))
        notes = []
        for j, d in zip(range(2, n), digs):
            if char_poly_exact(d) != formula:
                notes.append(f"char poly of j={j} differs from the formula")
        base = _spectrum_uncapped(digs[0], cache)
        for j, d in zip(range(3, n), digs[1:]):
            if not spectra_equal(_spectrum_uncapped(d, cache), base):
                notes.append(f"spectrum of j={j} differs from j=2")
        rows.append((f"n={n}", not notes, "; ".join(notes)))
    return rows


def _random_digraph(rnd: random.Random, n: int, p: float) -> Digraph:
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rnd.random() < p
    ]
    return from_arcs(n, arcs)


def _verify_thm10(rng: dict[str, range]) -> list[tuple[str, bool, str]]:
    """Structural cardinality classifier vs enumerated spectrum sizes."""
    from .search import enumerate_digraphs

    rows = []
    cache: dict = {}
    tags = {1: "One", 2: "Two"}
    for n in rng["n"]:
        bad = total = 0
        for d in enumerate_digraphs(n, "all"):
            total += 1
            card = complementarity_spectrum(d, cache=cache).cardinality
            if classify_cardinality(d).tag != tags.get(card, "ThreePlus"):
                bad += 1
        rows.append((f"n={n} ({total} classes)", bad == 0,
                     "" if bad == 0 else f"{bad} mismatches"))
    rnd = random.Random(1105)
    bad = 0
    for _ in range(12):
        d = _random_digraph(rnd, rnd.randint(5, 8), 0.25)
        card = complementarity_spectrum(d, cache=cache).cardinality
        if classify_cardinality(d).tag != tags.get(card, "ThreePlus"):
            bad += 1
    rows.append(("random n=5..8 (12 samples)", bad == 0,
                 "" if bad == 0 else f"{bad} mismatches"))
    return rows


def _verify_cor3(rng: dict[str, range]) -> list[tuple[str, bool, str]]:
    """Spectrum invariance under arc reversal."""
    from .search import enumerate_digraphs

    rows = []
    cache: dict = {}
    for n in rng["n"]:
        bad = total = 0
        for d in enumerate_digraphs(n, "all"):
            total += 1
            if not spectra_equal(
                complementarity_spectrum(d, cache=cache),
                complementarity_spectrum(converse(d), cache=cache),
            ):
                bad += 1
        rows.append((f"n={n} ({total} classes)", bad == 0,
                     "" if bad == 0 else f"{bad} mismatches"))
    rnd = random.Random(2209)
    bad = 0
    for _ in range(12):
        d = _random_digraph(rnd, rnd.randint(5, 8), 0.25)
        if not spectra_equal(
            complementarity_spectrum(d, cache=cache),
            complementarity_spectrum(converse(d), cache=cache),
        ):
            bad += 1
    rows.append(("random n=5..8 (12 samples)", bad == 0,
                 "" if bad == 0 else f"{bad} mismatches"))
    return rows


_VERIFY_IMPLS = {
    "prop11a": (_verify_prop11a,
                {"a": range(0, 3), "b": range(1, 4), "c": range(0, 3)}),
    "prop11b": (_verify_prop11b,
                {"r": range(2, 5), "s": range(2, 6)}),
    "prop12": (_verify_prop12, {"r": range(2, 5)}),
    "thm13": (_verify_thm13, {"r": range(2, 5), "s": range(3, 7)}),
    "thm14": (_verify_thm14, {"n": range(4, 9)}),
    "thm10": (_verify_thm10, {"n": range(1, 5)}),
    "cor3": (_verify_cor3, {"n": range(1, 5)}),
}


def _cmd_verify(args: argparse.Namespace) -> int:
    impl, defaults = _VERIFY_IMPLS[args.check]
    rows = impl(_parse_ranges(args.range_spec, defaults))
    failures = 0
    for label, ok, detail in rows:
        line = f"{args.check}  {label}: {'pass' if ok else 'fail'}"
        if detail:
            line += f"  ({detail})"
        print(line)
        failures += not ok
    print(f"{args.check}: {len(rows) - failures}/{len(rows)} pass")
    return 0 if failures == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compspec",
        description="Complementarity spectra of digraphs: compute, generate,"
        " compare and search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="certified complementarity spectrum")
    p.add_argument("source", help="edge-list file, '-' for stdin, or family spec")
    p.add_argument("--tol", type=float, default=DEFAULT_RADIUS_TOL)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("charpoly", help="characteristic polynomial")
    p.add_argument("source")
    p.add_argument("--method", choices=("exact", "sachs", "closed"),
                   default="exact")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_charpoly)

    p = sub.add_parser("gen", help="generate a family digraph")
    p.add_argument("spec")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--edges", action="store_true")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("iso", help="exit 0 if isomorphic, 1 if not")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("search", help="cospectral classes at one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--universe", choices=("all", "scc"), default="scc")
    p.add_argument("--equal-size", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify", help="run a named check over a parameter grid")
    p.add_argument("check", choices=sorted(_VERIFY_IMPLS))
    p.add_argument("--range", dest="range_spec", default=None,
                   help="override grid, e.g. r=2..4,s=3..6")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NonConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (CompspecError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
