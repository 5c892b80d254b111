"""``wsckit`` command line: one object in, one operation, JSON out.

JSON goes to standard output; a human-readable summary goes to standard
error.  Exit status is 0 on success, 2 on a domain or input error and 3 when
a resource bound was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import checkers, decomposition, homology
from .complex import SimplicialComplex
from .errors import ParseError, ResourceLimit, WscError
from .io import Parsed, parse_input
from .linalg import check_characteristic
from .monomial import Graph, MonomialIdeal, edge_ideal, format_ideal, polarize_ideal, weight_ideal
from .verify import SUITE_NAMES, Bounds, verify
from .weighted import WeightedComplex, polarize, sr_ideal, sr_ideal_weighted
from .wreath import mixed_wreath


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}", field="--weights") from None


def _char(text: str) -> int:
    try:
        return check_characteristic(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _expect(p: Parsed, *kinds: str):
    if p.kind not in kinds:
        raise ParseError(f"this command needs a {' or '.join(kinds)}, got a {p.kind}")
    return p.value


def _as_complex(p: Parsed) -> SimplicialComplex:
    v = _expect(p, "complex", "weighted_complex")
    return v.complex if isinstance(v, WeightedComplex) else v


def _as_ideal(p: Parsed) -> MonomialIdeal:
    """Ideals pass through; complexes give their (weighted) SR ideal, graphs their edge ideal."""
    v = p.value
    if isinstance(v, MonomialIdeal):
        return v
    if isinstance(v, WeightedComplex):
        return sr_ideal_weighted(v)
    if isinstance(v, SimplicialComplex):
        return sr_ideal(v)
    if isinstance(v, Graph):
        return edge_ideal(v, p.weights)
    raise ParseError(f"cannot read an ideal from a {p.kind}")


def _ideal_json(ideal: MonomialIdeal, names=None) -> dict:
    out = ideal.to_json()
    out["text"] = format_ideal(ideal, names)
    return out


# -- commands ----------------------------------------------------------------


def cmd_info(p: Parsed, args) -> tuple[dict, str]:
    v = p.value
    if isinstance(v, (SimplicialComplex, WeightedComplex)):
        c = _as_complex(p)
        out = {"kind": p.kind, "n": c.n, "facets": [list(f) for f in c.facets]}
        if c.is_void():
            out["void"] = True
            return out, "void complex"
        out.update(
            dim=c.dim,
            pure=c.is_pure(),
            f_vector=list(c.f_vector()),
            minimal_nonfaces=[list(f) for f in c.minimal_nonfaces()],
            reduced_homology=homology.reduced_homology_dims(c, args.char),
        )
        if isinstance(v, WeightedComplex):
            out["weights"] = list(v.weights)
        human = f"dim {out['dim']}, f-vector {out['f_vector']}, reduced homology {out['reduced_homology']}"
        return out, human
    if isinstance(v, MonomialIdeal):
        out = {
            "kind": "ideal",
            **_ideal_json(v, p.names),
            "squarefree": v.is_squarefree(),
            "lcm": list(v.lcm()),
            "support": list(v.support()),
        }
        return out, out["text"]
    out = {"kind": "graph", **v.to_json(), "bipartite": decomposition.is_bipartite(v)}
    return out, f"{len(v.edges)} edges, bipartite={out['bipartite']}"


def cmd_wreath(p: Parsed, args) -> tuple[dict, str]:
    c = _as_complex(p)
    if args.weights is None:
        raise ParseError("wreath needs --weights d1,...,dn", field="--weights")
    w, vmap = mixed_wreath(c, _int_list(args.weights))
    out = {"complex": w.to_json(), "vertex_map": vmap.to_json(), "labels": vmap.labels(p.names)}
    return out, f"{len(w.facets)} facets on {w.n} vertices, dim {w.dim}"


def cmd_polarize(p: Parsed, args) -> tuple[dict, str]:
    wc = _expect(p, "weighted_complex")
    pol, vmap = polarize(wc)
    out = {"complex": pol.to_json(), "vertex_map": vmap.to_json(), "labels": vmap.labels(p.names)}
    return out, f"{len(pol.facets)} facets on {pol.n} vertices, dim {pol.dim}"


def cmd_sr_ideal(p: Parsed, args) -> tuple[dict, str]:
    v = _expect(p, "complex", "weighted_complex")
    ideal = sr_ideal_weighted(v) if isinstance(v, WeightedComplex) else sr_ideal(v)
    out = _ideal_json(ideal, p.names)
    return out, out["text"]


def cmd_weight(p: Parsed, args) -> tuple[dict, str]:
    if p.kind == "graph":
        w = _int_list(args.weights) if args.weights else p.weights
        ideal = edge_ideal(p.value, w)
    else:
        ideal = _expect(p, "ideal")
        if args.weights is None:
            raise ParseError("weight needs --weights w1,...,wn", field="--weights")
        ideal = weight_ideal(ideal, _int_list(args.weights))
    out = _ideal_json(ideal, p.names)
    return out, out["text"]


def cmd_polarize_ideal(p: Parsed, args) -> tuple[dict, str]:
    ideal = _as_ideal(p)
    widths = _int_list(args.widths) if args.widths else None
    pol, vmap = polarize_ideal(ideal, widths)
    labels = vmap.labels(p.names)
    out = {"ideal": _ideal_json(pol, labels), "vertex_map": vmap.to_json(), "labels": labels}
    return out, out["ideal"]["text"]


def cmd_betti(p: Parsed, args) -> tuple[dict, str]:
    ideal = _as_ideal(p)
    table = homology.multigraded_betti(ideal, args.char)
    out = {
        **table.to_json(),
        "graded": [{"i": i, "j": j, "value": v} for (i, j), v in table.graded().items()],
        "projective_dimension": table.projective_dimension(),
        "regularity": table.regularity(),
        "char": args.char,
    }
    return out, table.format()


def cmd_hilbert(p: Parsed, args) -> tuple[dict, str]:
    hs = homology.hilbert_series(_as_ideal(p), args.char)
    return hs.to_json(), hs.format()


def cmd_decompose(p: Parsed, args) -> tuple[dict, str]:
    dec = decomposition.primary_decomposition(_as_ideal(p))
    out = dec.to_json()
    human = " cap ".join(format_ideal(q, p.names) for q in dec.ideals())
    return out, human


def cmd_ass(p: Parsed, args) -> tuple[dict, str]:
    minimal, embedded = decomposition.minimal_and_embedded(_as_ideal(p))
    out = {
        "associated": [list(q.variables) for q in sorted(minimal | embedded)],
        "minimal": [list(q.variables) for q in sorted(minimal)],
        "embedded": [list(q.variables) for q in sorted(embedded)],
    }
    human = "minimal: " + ", ".join(map(str, sorted(minimal)))
    if embedded:
        human += "; embedded: " + ", ".join(map(str, sorted(embedded)))
    return out, human


def cmd_ntf(p: Parsed, args) -> tuple[dict, str]:
    verdict = decomposition.normally_torsion_free_upto(_as_ideal(p), args.max_power)
    out = verdict.to_json()
    if p.kind == "graph":
        out["bipartite"] = decomposition.is_bipartite(p.value)
    if verdict.holds:
        human = f"no new associated primes up to power {args.max_power}"
    else:
        human = f"new associated primes first appear at power {verdict.first_failure}"
    return out, human


def cmd_check(p: Parsed, args) -> tuple[dict, str]:
    c = _as_complex(p)
    prop = args.property
    out: dict = {"property": prop}
    if prop == "vd":
        order = checkers.vertex_decomposition(c)
        out.update(value=order is not None, shedding_sequence=order)
    elif prop == "shell":
        bound = args.bound or checkers.SHELL_BOUND
        order = checkers.shelling_order(c, bound)
        out.update(value=order is not None, shelling_order=None if order is None else [list(f) for f in order])
    elif prop == "constructible":
        bound = args.bound or checkers.CONSTRUCTIBLE_BOUND
        out.update(value=checkers.is_constructible_bounded(c, bound), bound=bound)
    else:
        out.update(value=checkers.is_cohen_macaulay_reisner(c, args.char), char=args.char)
    verdict = {True: "yes", False: "no", None: "unknown (bound reached)"}[out["value"]]
    return out, f"{prop}: {verdict}"


COMMANDS = {
    "info": (cmd_info, "summary of a complex, ideal or graph"),
    "wreath": (cmd_wreath, "mixed wreath product with --weights d1,...,dn"),
    "polarize": (cmd_polarize, "polarization of a weighted complex"),
    "sr-ideal": (cmd_sr_ideal, "(weighted) Stanley-Reisner ideal"),
    "weight": (cmd_weight, "weighted ideal (I, w) with --weights"),
    "polarize-ideal": (cmd_polarize_ideal, "squarefree polarization of an ideal"),
    "betti": (cmd_betti, "multigraded Betti table"),
    "hilbert": (cmd_hilbert, "Hilbert series of R/I"),
    "decompose": (cmd_decompose, "irredundant primary decomposition"),
    "ass": (cmd_ass, "associated primes, minimal and embedded"),
    "ntf": (cmd_ntf, "bounded normal torsion freeness probe"),
    "check": (cmd_check, "vd | shell | constructible | cm"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wsckit", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        if name == "check":
            sp.add_argument("property", choices=["vd", "shell", "constructible", "cm"])
        sp.add_argument("input", help="JSON or text file, or - for standard input")
        sp.add_argument(
            "--char",
            type=_char,
            default=None,
            help="field characteristic, 0 or a prime (default: $WSCKIT_CHAR or 0)",
        )
        if name in ("wreath", "weight"):
            sp.add_argument("--weights", help="comma-separated integers, one per vertex")
        if name == "polarize-ideal":
            sp.add_argument("--widths", help="copies per variable (default: largest exponents)")
        if name == "ntf":
            sp.add_argument("--max-power", type=int, default=3)
        if name == "check":
            sp.add_argument("--bound", type=int, default=None, help="facet bound for shell/constructible")
    sp = sub.add_parser("verify", help="seeded theorem battery")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=50)
    sp.add_argument("--suite", action="append", choices=SUITE_NAMES, help="restrict to a suite (repeatable)")
    for f in Bounds.__dataclass_fields__:
        sp.add_argument(f"--{f.replace('_', '-')}", type=int, default=getattr(Bounds(), f))
    return parser


def _run(args) -> tuple[dict, str]:
    if args.command == "verify":
        bounds = Bounds(**{f: getattr(args, f) for f in Bounds.__dataclass_fields__})
        report = verify(args.trials, args.seed, bounds, tuple(args.suite) if args.suite else None)
        lines = [
            f"{s.name:<26} trials={s.trials:<4} failures={len(s.failures):<3} skipped={s.skipped}"
            for s in report.suites
        ]
        return report.to_json(), "\n".join(lines)
    if args.char is None:
        args.char = homology.default_characteristic()
    parsed = parse_input(args.input)
    handler, _ = COMMANDS[args.command]
    return handler(parsed, args)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, human = _run(args)
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except WscError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(json.dumps(out, sort_keys=True) + "\n")
    if human:
        print(human, file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
