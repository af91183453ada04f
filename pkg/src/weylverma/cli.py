"""Command-line front end.

    weylverma info B2
    weylverma branch B2 --hw 1,0 --a-roots "1,2"
    weylverma resolve B2 --hw 1,0 --a-roots "1,2" --output json
    weylverma draw B2 --hw 1,0 --a-roots "1,2" --out fig.svg

Exit status: 0 on success, 2 on malformed input, 1 when a computation fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import serialize
from .branching import DepthError, branch, compute_fan
from .embedding import EmbeddingError, EmbeddingSpec, parse_root_list
from .oracle import brute_force_branch, character_by_division, freudenthal, restrict_to_window
from .resolution import bgg_resolution, verify_euler
from .rootspace import AlgebraId, RootDatum, build_root_datum
from .singular import decompose
from .verma import euler_matches, standard_weyl_verma, weyl_verma_decompose
from .weyl import enumerate_group

DEFAULT_DEPTH = 8
SUBCOMMANDS = ("info", "branch", "fan", "decompose", "verma", "resolve", "verify", "draw")


class UsageError(Exception):
    pass


@dataclass
class CommandConfig:
    subcommand: str
    algebra: str
    embedding: EmbeddingSpec | None = None
    hw: tuple | None = None
    depth: int | None = None
    output: str = "text"
    out_path: str | None = None
    show_characters: bool = False
    algebras: tuple = ()
    max_label: int = 2


def _fmt(x) -> str:
    return str(Fraction(x))


def _vec(xs) -> str:
    return "(" + ", ".join(_fmt(x) for x in xs) + ")"


def _word(w) -> str:
    return "".join(f"s{i + 1}" for i in w.word) or "e"


def _parse_hw(text: str, d: RootDatum) -> tuple:
    try:
        labels = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"--hw must be comma-separated integers, got {text!r}") from None
    if len(labels) != d.rank:
        raise UsageError(f"--hw needs {d.rank} labels for {d.name}, got {len(labels)}")
    if any(v < 0 for v in labels):
        raise UsageError("--hw labels must be non-negative")
    return labels


def _parse_embedding(args, d: RootDatum) -> EmbeddingSpec | None:
    if getattr(args, "embedding", None):
        try:
            desc = json.loads(args.embedding)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--embedding is not valid JSON: {exc}") from None
        if desc.get("ambient", d.name) != d.name:
            raise UsageError("--embedding ambient does not match the algebra argument")
        roots = desc.get("a_roots", [])
    elif getattr(args, "a_roots", None) is not None:
        try:
            roots = parse_root_list(args.a_roots)
        except ValueError:
            raise UsageError(f"cannot parse --a-roots {args.a_roots!r}") from None
    else:
        return None
    return EmbeddingSpec(d, roots)


def _depth(args) -> int | None:
    if getattr(args, "depth", None) is not None:
        return args.depth
    env = os.environ.get("WV_DEPTH")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise UsageError(f"WV_DEPTH must be an integer, got {env!r}") from None
        if value < 1:
            raise UsageError("WV_DEPTH must be positive")
        return value
    return None


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="weylverma", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp, hw=True, emb=True, depth=True):
        sp.add_argument("algebra", help="simple algebra, e.g. A2, B3, G2")
        if hw:
            sp.add_argument("--hw", required=True, help="Dynkin labels, e.g. 1,0")
        if emb:
            g = sp.add_mutually_exclusive_group()
            g.add_argument("--a-roots", help='simple roots of a in simple-root coordinates, "1,2;0,1"')
            g.add_argument("--embedding", help='JSON descriptor {"ambient": ..., "a_roots": [...]}')
        if depth:
            sp.add_argument("--depth", type=_positive, help="truncation depth (env WV_DEPTH)")
        sp.add_argument("--output", choices=("text", "json"), default="text")
        sp.add_argument("--out", dest="out_path", help="write to this file instead of stdout")

    common(sub.add_parser("info", help="root system data"), hw=False, emb=False, depth=False)
    common(sub.add_parser("branch", help="branching coefficients"))
    common(sub.add_parser("fan", help="injection fan"), hw=False)
    common(sub.add_parser("decompose", help="singular element decomposition"), depth=False)
    sp = sub.add_parser("verma", help="generalized Weyl-Verma decomposition")
    common(sp)
    sp.add_argument("--show-characters", action="store_true", help="print windowed characters")
    common(sub.add_parser("resolve", help="generalized BGG resolution"))
    sp = sub.add_parser("verify", help="oracle comparison over the test matrix")
    sp.add_argument("algebra", nargs="*", help="algebras to check (default: the full matrix)")
    sp.add_argument("--max-label", type=int, default=2)
    sp.add_argument("--depth", type=_positive)
    sp.add_argument("--output", choices=("text", "json"), default="text")
    sp.add_argument("--out", dest="out_path")
    sp = sub.add_parser("draw", help="SVG weight diagram (rank 2)")
    common(sp)
    return p


def config_from_args(args) -> CommandConfig:
    if args.subcommand == "verify":
        algs = tuple(args.algebra)
        for a in algs:
            _algebra(a)
        return CommandConfig("verify", "", depth=_depth(args), output=args.output,
                             out_path=args.out_path, algebras=algs,
                             max_label=args.max_label)
    d = _algebra(args.algebra)
    cfg = CommandConfig(args.subcommand, d.name, output=args.output, out_path=args.out_path)
    if hasattr(args, "hw"):
        cfg.hw = _parse_hw(args.hw, d)
    if args.subcommand != "info":
        cfg.depth = _depth(args)
        spec = _parse_embedding(args, d)
        if spec is None and args.subcommand not in ("draw",):
            raise UsageError(f"{args.subcommand} needs --a-roots or --embedding")
        cfg.embedding = spec
    cfg.show_characters = getattr(args, "show_characters", False)
    return cfg


def _algebra(text: str) -> RootDatum:
    try:
        return build_root_datum(AlgebraId.parse(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# --- subcommands: each returns (json data, text lines) ---

def _info(cfg: CommandConfig):
    d = build_root_datum(cfg.algebra)
    order = len(enumerate_group(d))
    data = {"algebra": d.name, "rank": d.rank, "positive_roots": len(d.roots),
            "dimension": d.rank + 2 * len(d.roots), "weyl_group_order": order,
            "rho_labels": [_fmt(v) for v in d.labels(d.rho)],
            "cartan": [list(r) for r in d.cartan],
            "simple_roots": [[_fmt(c) for c in a] for a in d.simple_roots],
            "highest_root": list(d.positive_root_coords[-1])}
    lines = [f"algebra            {d.name}", f"rank               {d.rank}",
             f"dimension          {data['dimension']}",
             f"positive roots     {len(d.roots)}", f"|W|                {order}",
             f"rho labels         {_vec(d.labels(d.rho))}",
             f"highest root       {tuple(d.positive_root_coords[-1])}",
             "cartan matrix"] + ["  " + " ".join(f"{v:3d}" for v in row) for row in d.cartan]
    return data, lines


def _a_labels(spec: EmbeddingSpec, nu) -> tuple:
    return spec.a_datum.labels(nu)


def _branch(cfg: CommandConfig):
    spec = cfg.embedding
    g = spec.ambient
    mu = g.from_labels(cfg.hw)
    res = branch(spec, mu, cfg.depth)
    rows = []
    for nu, m in sorted(res.b.items(), key=lambda kv: (_a_labels(spec, kv[0]), kv[0]), reverse=True):
        rows.append({"a_labels": [_fmt(v) for v in _a_labels(spec, nu)],
                     "h_perp": [_fmt(v) for v in spec.project_h_perp(nu)],
                     "weight": [_fmt(v) for v in nu], "multiplicity": m,
                     "dimension": spec.a_tilde_dimension(nu)})
    total = res.sum_rule(spec)
    data = {"algebra": g.name, "hw": list(cfg.hw), "embedding": spec.descriptor(),
            "depth": res.depth, "branching": rows, "sum_rule": total,
            "dim": g.weyl_dimension(mu), "result": serialize.encode(res)}
    lines = [f"branching {g.name} L{_vec(cfg.hw)} to a = {spec.descriptor()['a_roots']}",
             f"depth {res.depth}", "a-labels    h_perp charge       mult  dim"]
    for r in rows:
        lines.append(f"{'(' + ', '.join(r['a_labels']) + ')':<11} "
                     f"{'(' + ', '.join(r['h_perp']) + ')':<19} {r['multiplicity']:>4}  {r['dimension']}")
    lines.append(f"sum rule {total} = dim {data['dim']}")
    return data, lines


def _fan(cfg: CommandConfig):
    spec = cfg.embedding
    fan = compute_fan(spec, cfg.depth or DEFAULT_DEPTH)
    data = {"algebra": spec.ambient.name, "embedding": spec.descriptor(), "fan": serialize.encode(fan)}
    lines = [f"fan of a = {spec.descriptor()['a_roots']} in {spec.ambient.name} (depth {fan.depth})",
             f"gamma0 {_vec(fan.gamma0)}  s(gamma0) = {fan.s0}"]
    for gm, c in sorted(fan.shifts.items()):
        lines.append(f"  gamma {_vec(gm)}  s = {c}")
    return data, lines


def _decompose(cfg: CommandConfig):
    spec = cfg.embedding
    g = spec.ambient
    dec = decompose(spec, g.from_labels(cfg.hw))
    lines = [f"|U| = {len(dec)}", "u              sign  carrier              perp hw labels"]
    for e in dec.entries:
        lines.append(f"{_word(e.u):<14} {e.sign:+d}    {_vec(e.carrier):<20} "
                     f"{_vec(spec.perp_datum.labels(e.perp_hw))}")
    data = {"algebra": g.name, "embedding": spec.descriptor(), "hw": list(cfg.hw),
            "decomposition": serialize.encode(dec)}
    return data, lines


def _verma(cfg: CommandConfig):
    spec = cfg.embedding
    g = spec.ambient
    mu = g.from_labels(cfg.hw)
    depth = cfg.depth or DEFAULT_DEPTH
    terms = weyl_verma_decompose(spec, mu, depth)
    triples = [(t.sign, t.carrier, t.gv.highest_weight) for t in terms]
    ok = euler_matches(spec, mu, triples, depth)
    lines = [f"generalized Weyl-Verma decomposition, depth {depth}",
             "sign  carrier labels       lambda (a_perp labels)"]
    for t in terms:
        lines.append(f"{t.sign:+d}    {_vec(g.labels(t.carrier)):<20} "
                     f"{_vec(spec.perp_datum.labels(t.gv.highest_weight))}")
        if cfg.show_characters:
            for x, c in t.gv.terms.sorted_items():
                lines.append(f"        {_vec(x)}: {c}")
    lines.append(f"Euler identity on window: {'PASS' if ok else 'FAIL'}")
    data = {"algebra": g.name, "embedding": spec.descriptor(), "hw": list(cfg.hw), "depth": depth,
            "terms": [{"sign": t.sign, "carrier_labels": [_fmt(v) for v in g.labels(t.carrier)],
                       "lambda_labels": [_fmt(v) for v in spec.perp_datum.labels(t.gv.highest_weight)]}
                      for t in terms],
            "euler": ok}
    if cfg.show_characters:
        data["characters"] = serialize.encode(list(terms))
    return data, lines


def _resolve(cfg: CommandConfig):
    spec = cfg.embedding
    g = spec.ambient
    seq = bgg_resolution(spec, g.from_labels(cfg.hw))
    depth = cfg.depth or DEFAULT_DEPTH
    ok = verify_euler(seq, spec, depth)
    lines = ["k  u              g-hw labels          carrier              perp hw      sign"]
    for k, grade in enumerate(seq.grades):
        for e in grade:
            lines.append(f"{k:<2} {_word(e.u):<14} {_vec(g.labels(e.highest_weight)):<20} "
                         f"{_vec(e.carrier):<20} {_vec(spec.perp_datum.labels(e.perp_hw)):<12} {e.sign:+d}")
    lines.append(f"{len(seq)} entries, grade sizes {seq.grade_sizes()}")
    lines.append(f"Euler check (depth {depth}): {'PASS' if ok else 'FAIL'}")
    data = {"algebra": g.name, "embedding": spec.descriptor(), "hw": list(cfg.hw), "depth": depth,
            "resolution": serialize.encode(seq), "grade_sizes": seq.grade_sizes(), "euler": ok}
    return data, lines


def _verify(cfg: CommandConfig):
    from . import matrix
    algs = cfg.algebras or matrix.ALGEBRAS
    depth = cfg.depth or DEFAULT_DEPTH
    rows, lines = [], []
    for s, mu in matrix.triples(algs, cfg.max_label):
        g = s.ambient
        b_ok = branch(s, mu).b == brute_force_branch(s, mu)
        e_ok = verify_euler(bgg_resolution(s, mu), s, depth)
        row = {"algebra": g.name, "a_roots": [list(v) for v in s.a_root_coords],
               "hw": [int(v) for v in g.labels(mu)], "branching": b_ok, "euler": e_ok}
        rows.append(row)
        lines.append(f"{'PASS' if b_ok and e_ok else 'FAIL'} {g.name} a={row['a_roots']} "
                     f"hw={tuple(row['hw'])}")
    for name in algs:
        g = build_root_datum(name)
        for labels in matrix.label_grid(g.rank, cfg.max_label):
            mu = g.from_labels(labels)
            ch = restrict_to_window(g, mu, freudenthal(g, mu).multiplicities, depth)
            ok = standard_weyl_verma(g, mu, depth) == character_by_division(g, mu, depth) == ch
            rows.append({"algebra": name, "hw": list(labels), "characters": ok})
            lines.append(f"{'PASS' if ok else 'FAIL'} {name} characters hw={labels}")
    failed = sum(1 for r in rows if not all(v for k, v in r.items() if isinstance(v, bool)))
    lines.append(f"{len(rows) - failed}/{len(rows)} passed")
    return {"checks": rows, "failed": failed}, lines


def _draw(cfg: CommandConfig):
    from .svg import draw
    d = build_root_datum(cfg.algebra)
    svg = draw(d, d.from_labels(cfg.hw), cfg.embedding, cfg.depth or 4)
    return svg


HANDLERS = {"info": _info, "branch": _branch, "fan": _fan, "decompose": _decompose,
            "verma": _verma, "resolve": _resolve, "verify": _verify}


def run(cfg: CommandConfig) -> tuple[int, str]:
    """Execute a parsed command; returns (exit status, emitted text)."""
    if cfg.subcommand == "draw":
        return 0, _draw(cfg)
    data, lines = HANDLERS[cfg.subcommand](cfg)
    if cfg.output == "json":
        text = json.dumps(data, sort_keys=True, indent=2) + "\n"
    else:
        text = "\n".join(lines) + "\n"
    status = 0
    if cfg.subcommand == "verify" and data["failed"]:
        status = 1
    return status, text


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except (UsageError, EmbeddingError) as exc:
        parser.exit(2, f"weylverma: error: {exc}\n")
    try:
        status, text = run(cfg)
    except (ValueError, ArithmeticError, DepthError, IndexError) as exc:
        print(f"weylverma: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if cfg.out_path:
        with open(cfg.out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
