"""Command-line workbench over the library.

Subcommand groups mirror the library layout: ``ideal`` for monomial ideal
arithmetic, ``symbolic`` for symbolic-power and packing questions,
``closure`` for Newton-polyhedron containments, ``artinrees`` for uniform
containment scans, ``invariants`` for Hilbert/Betti data, ``groebner`` for
polynomial experiments, and ``verify`` for the full acceptance suite.

Exit codes: 0 when the command answered (even if the answer is "no"),
1 when a verification subcommand found its claim false, 2 on usage or
parse problems, 3 when a resource cap tripped.  ``--json`` reports carry
a ``schema`` version and sort keys, so identical invocations emit
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .artinrees import ar_counterexample_search, artin_rees_number
from .closure import (
    briancon_skoda_check,
    integral_closure,
    newton_polyhedron,
    uniform_bs_number,
)
from .errors import ParseError, ResourceCapError, RingMismatchError
from .fields import QQ, PrimeField, parse_field
from .groebner import (
    MonomialOrder,
    buchberger,
    frobenius_containment_check,
    kollar_bound,
    kollar_family,
    kollar_sharpness,
    mather_index,
    parse_polynomial,
    radical_member,
)
from .invariants import (
    dimension_multiplicity,
    graded_betti,
    hilbert_function,
    hilbert_polynomial,
    hilbert_series,
    is_cohen_macaulay,
)
from .monomials import parse_ideal, parse_monomial, parse_ring
from .symbolic import (
    Graph,
    codim,
    edge_ideal,
    is_bipartite,
    is_packed,
    parse_graph,
    symbolic_equals_ordinary,
    symbolic_power,
    verify_edge_theorem,
)


def _ring_of(args):
    return parse_ring(args.ring)


def _ideal_of(args, ring, text=None):
    return parse_ideal(ring, args.ideal if text is None else text)


def _field_of(args):
    return parse_field(getattr(args, "field", "q") or "q")


def _order_of(args, ring):
    kind = getattr(args, "order", "grevlex") or "grevlex"
    if kind == "lex":
        return MonomialOrder.lex(ring)
    if kind == "grevlex":
        return MonomialOrder.grevlex(ring)
    raise ParseError(f"unknown order {kind!r}; expected lex or grevlex")


def _load_caps(args):
    if not getattr(args, "caps", None):
        return {}
    with open(args.caps, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"caps file is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("caps file must hold a JSON object")
    return data


def _groebner_caps(caps):
    out = {}
    if "max_basis" in caps:
        out["max_basis"] = int(caps["max_basis"])
    if "max_degree" in caps:
        out["max_degree"] = int(caps["max_degree"])
    return out


def _polys_of(args, ring, field, order, text=None):
    source = args.polys if text is None else text
    parts = [p.strip() for p in source.split(";")]
    if not any(parts):
        raise ParseError("empty polynomial list")
    return [parse_polynomial(ring, p, field, order) for p in parts if p]


def _graph_of(args):
    if args.graph:
        if args.graph == "-":
            text = sys.stdin.read()
        else:
            with open(args.graph, encoding="utf-8") as fh:
                text = fh.read()
        return parse_graph(text)
    if args.cycle:
        return Graph.cycle(args.cycle)
    if args.path:
        return Graph.path(args.path)
    if args.complete:
        return Graph.complete(args.complete)
    sizes = args.complete_bipartite
    try:
        a, b = (int(part) for part in sizes.split(","))
    except ValueError:
        raise ParseError(
            f"expected two comma-separated sizes, got {sizes!r}"
        ) from None
    return Graph.complete_bipartite(a, b)


def _ideal_payload(ideal):
    return {
        "ring": ",".join(ideal.ring.variables),
        "generators": [str(g) for g in ideal.generators],
    }


# ---------------------------------------------------------------- ideal ---


def _cmd_ideal_unary(args):
    ring = _ring_of(args)
    ideal = _ideal_of(args, ring)
    result = {
        "minimalize": lambda: ideal,
        "gens": lambda: ideal,
        "radical": lambda: ideal.radical(),
    }[args.op]()
    return 0, _ideal_payload(result), [str(result)]


def _cmd_ideal_contains(args):
    ring = _ring_of(args)
    ideal = _ideal_of(args, ring)
    monomial = parse_monomial(ring, args.monomial)
    inside = ideal.contains(monomial)
    payload = {"monomial": str(monomial), "contains": inside}
    return 0, payload, ["yes" if inside else "no"]


def _cmd_ideal_binary(args):
    ring = _ring_of(args)
    left = _ideal_of(args, ring)
    right = parse_ideal(ring, args.other)
    result = left * right if args.op == "product" else left & right
    return 0, _ideal_payload(result), [str(result)]


def _cmd_ideal_power(args):
    ring = _ring_of(args)
    result = _ideal_of(args, ring).power(args.k)
    return 0, _ideal_payload(result), [str(result)]


def _cmd_ideal_colon(args):
    ring = _ring_of(args)
    result = _ideal_of(args, ring).colon(parse_monomial(ring, args.monomial))
    return 0, _ideal_payload(result), [str(result)]


def _cmd_ideal_minor(args):
    ring = _ring_of(args)
    zeros = [v for v in (args.zeros or "").split(",") if v]
    ones = [v for v in (args.ones or "").split(",") if v]
    result = _ideal_of(args, ring).minor(zeros, ones)
    return 0, _ideal_payload(result), [str(result)]


# ------------------------------------------------------------- symbolic ---


def _cmd_symbolic_compare(args):
    ring = _ring_of(args)
    ideal = _ideal_of(args, ring)
    sym = symbolic_power(ideal, args.k)
    ordinary = ideal.power(args.k)
    equal, witness = symbolic_equals_ordinary(ideal, args.k)
    payload = {
        "k": args.k,
        "equal": equal,
        "witness": None if witness is None else str(witness),
        "symbolic": [str(g) for g in sym.generators],
        "ordinary": [str(g) for g in ordinary.generators],
    }
    if equal:
        lines = [f"EQUAL: I^({args.k}) = I^{args.k}"]
    else:
        lines = [f"NOT EQUAL, witness {witness}"]
    return 0, payload, lines


def _cmd_symbolic_packed(args):
    ring = _ring_of(args)
    ok, failure = is_packed(_ideal_of(args, ring))
    payload = {"packed": ok, "failure": None if failure is None else str(failure)}
    return 0, payload, ["packed" if ok else f"not packed: {failure}"]


def _cmd_symbolic_edge(args):
    graph = _graph_of(args)
    ideal = edge_ideal(graph)
    bip, data = is_bipartite(graph)
    payload = {
        "vertices": graph.vertex_count,
        "edges": [[u + 1, v + 1] for u, v in graph.edges],
        "bipartite": bip,
        "odd_cycle": None if bip else [v + 1 for v in data],
        **_ideal_payload(ideal),
    }
    lines = [str(ideal), "bipartite" if bip else "not bipartite"]
    return 0, payload, lines


def _cmd_symbolic_theorem(args):
    graph = _graph_of(args)
    report = verify_edge_theorem(graph, args.kmax)
    payload = report.to_json()
    lines = [
        f"bipartite: {report.bipartite}",
        f"packed: {report.packed}",
        f"symbolic = ordinary for k <= {report.equal_up_to}"
        + ("" if report.all_equal else f" but not k = {report.equal_up_to + 1}"),
        "verdicts AGREE" if report.agree else "verdicts DISAGREE",
    ]
    return (0 if report.agree else 1), payload, lines


# -------------------------------------------------------------- closure ---


def _cmd_closure_closure(args):
    ring = _ring_of(args)
    ideal = _ideal_of(args, ring)
    closed = integral_closure(ideal)
    poly = newton_polyhedron(ideal)
    payload = {
        **_ideal_payload(closed),
        "facets": [[list(c), b] for c, b in poly.facets],
        "already_closed": closed == ideal,
    }
    return 0, payload, [str(closed)]


def _cmd_closure_bs(args):
    ring = _ring_of(args)
    ideal = _ideal_of(args, ring)
    ell = args.ell if args.ell is not None else len(ideal.generators)
    check = briancon_skoda_check(ideal, ell, args.nmax)
    payload = check.to_json()
    if check.ok:
        lines = [f"holds: closure(I^n) within I^(n-{ell}+1) for n <= {args.nmax}"]
    else:
        n, g = check.failure
        lines = [f"FAILS at n={n}: {g} outside I^({n}-{ell}+1)"]
    return (0 if check.ok else 1), payload, lines


def _cmd_closure_uniform_bs(args):
    ring = _ring_of(args)
    k = uniform_bs_number(_ideal_of(args, ring), args.nmax)
    payload = {"k": k, "n_max": args.nmax}
    return 0, payload, [f"least uniform shift k = {k} for n <= {args.nmax}"]


# ------------------------------------------------------------ artinrees ---


def _cmd_artinrees_number(args):
    ring = _ring_of(args)
    ideal = _ideal_of(args, ring)
    sub = parse_ideal(ring, args.sub)
    report = artin_rees_number(ideal, sub, args.nmax)
    payload = report.to_json()
    lines = [
        f"least k per n: {list(report.least_k)}",
        f"Artin-Rees number up to n={args.nmax}: {report.ar_number}",
    ]
    return 0, payload, lines


def _cmd_artinrees_exercise4(args):
    if args.n < 2:
        raise ValueError("--n must be at least 2")
    lmax = args.lmax if args.lmax is not None else 2 * args.n
    ring = parse_ring("x,y")
    big = parse_ideal(ring, f"x^{args.n}, y^{args.n}, x^{args.n - 1}*y")
    sub = parse_ideal(ring, f"x^{args.n}, y^{args.n}")
    hit = ar_counterexample_search(big, sub, args.k, lmax)
    payload = {
        "n": args.n,
        "k": args.k,
        "lmax": lmax,
        "ideal": str(big),
        "sub": str(sub),
        "found": hit is not None,
        "ell": None if hit is None else hit[0],
        "witness": None if hit is None else str(hit[1]),
    }
    if hit is None:
        lines = [f"no mismatch: I^l = J^(l-{args.k}) I^{args.k} for l <= {lmax}"]
    else:
        ell, witness = hit
        lines = [f"mismatch at l={ell}: {witness} outside J^({ell - args.k}) I^{args.k}"]
    return 0, payload, lines


# ----------------------------------------------------------- invariants ---


def _cmd_invariants_hilbert(args):
    ring = _ring_of(args)
    ideal = _ideal_of(args, ring)
    series = hilbert_series(ideal)
    poly = hilbert_polynomial(ideal)
    payload = {
        "numerator": list(series.numerator),
        "denominator_power": ring.n,
        "series": str(series),
        "polynomial": str(poly),
        "stable_from": poly.stability,
    }
    lines = [f"series: {series}", f"polynomial: {poly} for d >= {poly.stability}"]
    if args.degree is not None:
        value = hilbert_function(ideal, args.degree)
        payload["degree"] = args.degree
        payload["value"] = value
        lines.append(f"h({args.degree}) = {value}")
    return 0, payload, lines


def _cmd_invariants_betti(args):
    ring = _ring_of(args)
    caps = _load_caps(args)
    kwargs = {}
    if "max_generators" in caps:
        kwargs["max_generators"] = int(caps["max_generators"])
    table = graded_betti(_ideal_of(args, ring), _field_of(args), **kwargs)
    return 0, table.to_json(), [table.render()]


def _cmd_invariants_pd_reg(args):
    ring = _ring_of(args)
    table = graded_betti(_ideal_of(args, ring), _field_of(args))
    payload = {
        "proj_dim": table.proj_dim(),
        "regularity": table.regularity(),
        "field": table.field_label,
    }
    lines = [f"pd = {table.proj_dim()}, reg = {table.regularity()}"]
    return 0, payload, lines


def _cmd_invariants_mult(args):
    ring = _ring_of(args)
    dim, mult = dimension_multiplicity(_ideal_of(args, ring))
    payload = {"dimension": dim, "multiplicity": mult}
    return 0, payload, [f"dimension {dim}, multiplicity {mult}"]


def _cmd_invariants_cm(args):
    ring = _ring_of(args)
    ideal = _ideal_of(args, ring)
    field = _field_of(args)
    table = graded_betti(ideal, field)
    c = codim(ideal)
    cm = c == table.proj_dim()
    payload = {
        "cohen_macaulay": cm,
        "codim": c,
        "proj_dim": table.proj_dim(),
        "field": table.field_label,
    }
    lines = [
        ("Cohen-Macaulay" if cm else "not Cohen-Macaulay")
        + f": codim {c}, pd {table.proj_dim()}"
    ]
    return 0, payload, lines


# ------------------------------------------------------------- groebner ---


def _cmd_groebner_gb(args):
    ring = _ring_of(args)
    field = _field_of(args)
    order = _order_of(args, ring)
    polys = _polys_of(args, ring, field, order)
    gb = buchberger(polys, order, **_groebner_caps(_load_caps(args)))
    payload = {
        "basis": [str(p) for p in gb.polys],
        "order": str(order),
        "field": field.label,
        "certified": gb.certified,
    }
    return 0, payload, [str(p) for p in gb.polys] or ["(zero ideal)"]


def _cmd_groebner_member(args):
    ring = _ring_of(args)
    field = _field_of(args)
    order = _order_of(args, ring)
    polys = _polys_of(args, ring, field, order)
    f = parse_polynomial(ring, args.f, field, order)
    gb = buchberger(polys, order, **_groebner_caps(_load_caps(args)))
    remainder = gb.normal_form(f)
    payload = {"member": remainder.is_zero, "remainder": str(remainder)}
    lines = ["member" if remainder.is_zero else f"not a member; remainder {remainder}"]
    return 0, payload, lines


def _cmd_groebner_radical(args):
    ring = _ring_of(args)
    field = _field_of(args)
    order = _order_of(args, ring)
    polys = _polys_of(args, ring, field, order)
    f = parse_polynomial(ring, args.f, field, order)
    inside = radical_member(f, polys, **_groebner_caps(_load_caps(args)))
    payload = {"member": inside}
    return 0, payload, ["in the radical" if inside else "not in the radical"]


def _cmd_groebner_mather(args):
    ring = _ring_of(args)
    field = _field_of(args)
    order = _order_of(args, ring)
    f = parse_polynomial(ring, args.f, field, order)
    report = mather_index(f, args.nmax)
    payload = report.to_json()
    if report.index is None:
        lines = [f"no power f^N with N <= {args.nmax or ring.n + 2} found in J(f)"]
    else:
        lines = [
            f"f^{report.index} in J(f); "
            + (
                "within the uniform bound"
                if report.within_uniform_bound
                else "outside the uniform bound"
            )
        ]
    return 0, payload, lines


def _cmd_groebner_kollar(args):
    if args.degrees:
        if args.nvars is None:
            raise ValueError("--nvars is required with --degrees")
        try:
            degrees = [int(part) for part in args.degrees.split(",")]
        except ValueError:
            raise ParseError(f"bad degree list {args.degrees!r}") from None
        report = kollar_bound(degrees, args.nvars)
        payload = report.to_json()
        lines = [
            f"bound D = {report.bound} (q = {report.q})"
            + ("" if report.within_hypothesis else "; degrees below 3: outside hypothesis")
        ]
        return 0, payload, lines
    if args.n is None or args.d is None:
        raise ValueError("need either --degrees or both --n and --d")
    report = kollar_sharpness(args.n, args.d, args.dmax)
    family = kollar_family(args.n, args.d)
    payload = report.to_json()
    payload["family"] = [str(p) for p in family]
    if report.found is None:
        lines = [f"no D <= {report.searched_up_to} found (predicted {report.predicted})"]
    else:
        lines = [
            f"least D with x{args.n - 1}^D in the ideal: {report.found} "
            f"(predicted {report.predicted})"
        ]
    return (0 if report.matches else 1), payload, lines


def _cmd_groebner_frobenius(args):
    ring = _ring_of(args)
    field = PrimeField(args.p)
    order = _order_of(args, ring)
    polys = _polys_of(args, ring, field, order)
    caps = _load_caps(args)
    kwargs = {}
    if "max_products" in caps:
        kwargs["max_products"] = int(caps["max_products"])
    check = frobenius_containment_check(polys, len(polys), args.p, args.e, **kwargs)
    payload = check.to_json()
    if check.contained:
        lines = [
            f"I^{check.exponent} within the Frobenius power "
            f"({check.products_checked} products checked)"
        ]
    else:
        lines = [f"FAILS: product with multiplicities {check.failure} escapes"]
    return (0 if check.contained else 1), payload, lines


# --------------------------------------------------------------- verify ---


def _cmd_verify(args):
    from .acceptance import DEFAULT_SEED, run_all

    seed = args.seed if args.seed is not None else DEFAULT_SEED
    results = run_all(seed)
    all_passed = all(r.passed for r in results)
    payload = {
        "seed": seed,
        "all_passed": all_passed,
        # timings stay out of the JSON so identical runs are byte-identical
        "results": [
            {"name": r.name, "passed": r.passed, "detail": r.detail}
            for r in results
        ],
    }
    lines = []
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        lines.append(f"{mark}  {r.name}  ({r.seconds:.2f}s)  {r.detail}")
    lines.append("all criteria passed" if all_passed else "SOME CRITERIA FAILED")
    return (0 if all_passed else 1), payload, lines


# ----------------------------------------------------------------- main ---


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, help="seed for randomized corpora")
    common.add_argument("--caps", metavar="FILE", help="JSON file with resource caps")
    return common


def _add_ring_ideal(parser):
    parser.add_argument("--ring", required=True, help="variables, e.g. x,y,z")
    parser.add_argument("--ideal", required=True, help='monomials, e.g. "x^2*y, z"')


def _add_graph_source(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph", metavar="FILE", help="graph file ('-' for stdin)")
    group.add_argument("--cycle", type=int, metavar="N")
    group.add_argument("--path", type=int, metavar="N")
    group.add_argument("--complete", type=int, metavar="N")
    group.add_argument("--complete-bipartite", metavar="A,B")


def build_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="idealkit",
        description="exact computations on monomial and small polynomial ideals",
    )
    groups = parser.add_subparsers(dest="group", required=True)

    ideal = groups.add_parser("ideal", help="monomial ideal arithmetic")
    ideal_sub = ideal.add_subparsers(dest="sub", required=True)
    for op in ("minimalize", "gens", "radical"):
        p = ideal_sub.add_parser(op, parents=[common])
        _add_ring_ideal(p)
        p.set_defaults(handler=_cmd_ideal_unary, op=op)
    p = ideal_sub.add_parser("contains", parents=[common])
    _add_ring_ideal(p)
    p.add_argument("--monomial", required=True)
    p.set_defaults(handler=_cmd_ideal_contains)
    for op in ("product", "intersect"):
        p = ideal_sub.add_parser(op, parents=[common])
        _add_ring_ideal(p)
        p.add_argument("--other", required=True, help="second ideal")
        p.set_defaults(handler=_cmd_ideal_binary, op=op)
    p = ideal_sub.add_parser("power", parents=[common])
    _add_ring_ideal(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_ideal_power)
    p = ideal_sub.add_parser("colon", parents=[common])
    _add_ring_ideal(p)
    p.add_argument("--monomial", required=True)
    p.set_defaults(handler=_cmd_ideal_colon)
    p = ideal_sub.add_parser("minor", parents=[common])
    _add_ring_ideal(p)
    p.add_argument("--zeros", default="", help="variables set to 0")
    p.add_argument("--ones", default="", help="variables set to 1")
    p.set_defaults(handler=_cmd_ideal_minor)

    symbolic = groups.add_parser("symbolic", help="symbolic powers and packing")
    symbolic_sub = symbolic.add_subparsers(dest="sub", required=True)
    p = symbolic_sub.add_parser("compare", parents=[common])
    _add_ring_ideal(p)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_symbolic_compare)
    p = symbolic_sub.add_parser("packed", parents=[common])
    _add_ring_ideal(p)
    p.set_defaults(handler=_cmd_symbolic_packed)
    p = symbolic_sub.add_parser("edge", parents=[common])
    _add_graph_source(p)
    p.set_defaults(handler=_cmd_symbolic_edge)
    p = symbolic_sub.add_parser("theorem", parents=[common])
    _add_graph_source(p)
    p.add_argument("--kmax", type=int, default=3)
    p.set_defaults(handler=_cmd_symbolic_theorem)

    closure = groups.add_parser("closure", help="integral closure and containments")
    closure_sub = closure.add_subparsers(dest="sub", required=True)
    p = closure_sub.add_parser("closure", parents=[common])
    _add_ring_ideal(p)
    p.set_defaults(handler=_cmd_closure_closure)
    p = closure_sub.add_parser("bs", parents=[common])
    _add_ring_ideal(p)
    p.add_argument("--ell", type=int, help="defaults to the generator count")
    p.add_argument("--nmax", type=int, default=5)
    p.set_defaults(handler=_cmd_closure_bs)
    p = closure_sub.add_parser("uniform-bs", parents=[common])
    _add_ring_ideal(p)
    p.add_argument("--nmax", type=int, default=5)
    p.set_defaults(handler=_cmd_closure_uniform_bs)

    artinrees = groups.add_parser("artinrees", help="Artin-Rees containment scans")
    artinrees_sub = artinrees.add_subparsers(dest="sub", required=True)
    p = artinrees_sub.add_parser("number", parents=[common])
    _add_ring_ideal(p)
    p.add_argument("--sub", required=True, help="submodule ideal")
    p.add_argument("--nmax", type=int, default=6)
    p.set_defaults(handler=_cmd_artinrees_number)
    p = artinrees_sub.add_parser("exercise4", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lmax", type=int, help="defaults to 2n")
    p.set_defaults(handler=_cmd_artinrees_exercise4)

    invariants = groups.add_parser("invariants", help="Hilbert and Betti data")
    invariants_sub = invariants.add_subparsers(dest="sub", required=True)
    p = invariants_sub.add_parser("hilbert", parents=[common])
    _add_ring_ideal(p)
    p.add_argument("--degree", type=int, help="also evaluate h at this degree")
    p.set_defaults(handler=_cmd_invariants_hilbert)
    for name, handler in (
        ("betti", _cmd_invariants_betti),
        ("pd-reg", _cmd_invariants_pd_reg),
        ("cm", _cmd_invariants_cm),
    ):
        p = invariants_sub.add_parser(name, parents=[common])
        _add_ring_ideal(p)
        p.add_argument("--field", default="q", help="q or fp:<prime>")
        p.set_defaults(handler=handler)
    p = invariants_sub.add_parser("mult", parents=[common])
    _add_ring_ideal(p)
    p.set_defaults(handler=_cmd_invariants_mult)

    groebner = groups.add_parser("groebner", help="polynomial ideal experiments")
    groebner_sub = groebner.add_subparsers(dest="sub", required=True)
    for name, handler, needs_f in (
        ("gb", _cmd_groebner_gb, False),
        ("member", _cmd_groebner_member, True),
        ("radical", _cmd_groebner_radical, True),
    ):
        p = groebner_sub.add_parser(name, parents=[common])
        p.add_argument("--ring", required=True)
        p.add_argument("--polys", required=True, help="semicolon-separated polynomials")
        p.add_argument("--field", default="q")
        p.add_argument("--order", default="grevlex", choices=("lex", "grevlex"))
        if needs_f:
            p.add_argument("--f", required=True, help="polynomial to test")
        p.set_defaults(handler=handler)
    p = groebner_sub.add_parser("mather", parents=[common])
    p.add_argument("--ring", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--field", default="q")
    p.add_argument("--order", default="grevlex", choices=("lex", "grevlex"))
    p.add_argument("--nmax", type=int)
    p.set_defaults(handler=_cmd_groebner_mather)
    p = groebner_sub.add_parser("kollar", parents=[common])
    p.add_argument("--n", type=int, help="variables for the sharpness family")
    p.add_argument("--d", type=int, help="degree for the sharpness family")
    p.add_argument("--dmax", type=int)
    p.add_argument("--degrees", help="comma-separated degrees for the bound")
    p.add_argument("--nvars", type=int, help="variable count for the bound")
    p.set_defaults(handler=_cmd_groebner_kollar)
    p = groebner_sub.add_parser("frobenius", parents=[common])
    p.add_argument("--ring", required=True)
    p.add_argument("--polys", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--order", default="grevlex", choices=("lex", "grevlex"))
    p.set_defaults(handler=_cmd_groebner_frobenius)

    p = groups.add_parser("verify", parents=[common], help="run the acceptance suite")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        code, payload, lines = args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return 3
    except (RingMismatchError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps({"schema": 1, **payload}, sort_keys=True))
    else:
        for line in lines:
            print(line)
    return code


def run():
    raise SystemExit(main())
