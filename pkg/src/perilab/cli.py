"""JSON command-line front end.

Every subcommand prints exactly one JSON document on stdout.  Exit status
is 0 on success, 1 when the library rejects the input (the document is
``{"error": ...}``), and 2 when the input cannot be parsed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Sequence

from . import brauer, grothendieck, partitions, superalg, tl
from .partitions import Partition, Weight, WeightDiagram


class Malformed(Exception):
    """Input that could not be parsed (exit status 2)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise Malformed(message)


DOMAIN_ERRORS = (partitions.WeightError, tl.TLError, brauer.BrauerError,
                 superalg.SuperAlgebraError, grothendieck.GrothendieckError)


# ---------------------------------------------------------------- parsing helpers

def _json_arg(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise Malformed(f"invalid JSON {text!r}: {exc.msg}") from None


def _weight(text: Any, rank: str | None = None) -> Weight:
    data = _json_arg(text) if isinstance(text, str) else text
    if rank is not None and isinstance(data, list):
        data = {"rank": "inf" if rank == "inf" else int(rank), "entries": data}
    if not isinstance(data, (list, dict)):
        raise Malformed("a weight is a list of integers or {rank, entries}")
    try:
        return Weight.from_json(data)
    except (KeyError, TypeError) as exc:
        raise Malformed(f"bad weight: {exc}") from None


def _partition(text: Any) -> Partition:
    data = _json_arg(text) if isinstance(text, str) else text
    try:
        return Partition.from_json(data)
    except (KeyError, TypeError) as exc:
        raise Malformed(f"bad partition: {exc}") from None


def _word(text: Any) -> tuple[int, ...]:
    data = _json_arg(text) if isinstance(text, str) else text
    if isinstance(data, dict):
        data = data.get("indices")
    if not isinstance(data, list) or not all(isinstance(x, int) for x in data):
        raise Malformed("a word is a list of integers or {\"indices\": [...]}")
    return tuple(data)


def _hom(text: Any) -> brauer.BrauerHom:
    data = _json_arg(text) if isinstance(text, str) else text
    if isinstance(data, dict) and "hom" in data:
        data = data["hom"]
    try:
        return brauer.BrauerHom.from_json(data)
    except (KeyError, TypeError) as exc:
        raise Malformed(f"bad Brauer morphism: {exc}") from None


def _q(x) -> int | str:
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _cache_dir(args) -> Path | None:
    d = args.cache_dir or os.environ.get("PERILAB_CACHE")
    return Path(d) if d else None


# ---------------------------------------------------------------- LR disk cache

def _lr_cache_file(args) -> Path | None:
    d = _cache_dir(args)
    return d / "lr-v1.json" if d else None


def _load_lr(args) -> None:
    f = _lr_cache_file(args)
    if f and f.exists():
        raw = json.loads(f.read_text())
        partitions.lr_memo_preload({tuple(map(tuple, json.loads(k))): v for k, v in raw.items()})


def _save_lr(args) -> None:
    f = _lr_cache_file(args)
    if not f:
        return
    snap = partitions.lr_memo_snapshot()
    data = {json.dumps([list(x) for x in k]): v for k, v in snap.items()}
    f.parent.mkdir(parents=True, exist_ok=True)
    tmp = f.with_suffix(".tmp")
    tmp.write_text(json.dumps(data, sort_keys=True))
    tmp.replace(f)


# ---------------------------------------------------------------- weights

def cmd_weights_size(a):
    return {"size": partitions.weight_size(_weight(a.weight, a.rank))}


def cmd_weights_admissible(a):
    return {"admissible": partitions.is_k_admissible(_weight(a.weight, a.rank), a.k)}


def cmd_weights_diagram(a):
    if a.diagram is not None:
        data = _json_arg(a.diagram)
        try:
            d = WeightDiagram.from_json(data)
        except (KeyError, TypeError) as exc:
            raise Malformed(f"bad diagram: {exc}") from None
        return {"weight": partitions.diagram_to_weight(d).to_json()}
    if a.weight is None:
        raise Malformed("give --weight or --diagram")
    return {"diagram": partitions.weight_to_diagram(_weight(a.weight, a.rank)).to_json()}


def cmd_weights_dual(a):
    return {"dual": list(partitions.dual_weight(_weight(a.weight, a.rank)).entries)}


def cmd_weights_truncate(a):
    return {"weight": partitions.truncate(_weight(a.weight, a.rank), a.n).to_json()}


def cmd_weights_moves(a):
    minus, plus = partitions.box_moves(_weight(a.weight, a.rank), a.k)
    return {"minus": [w.to_json() for w in minus], "plus": [w.to_json() for w in plus]}


# ---------------------------------------------------------------- lr

def cmd_lr_coeff(a):
    return {"coeff": partitions.lr_coeff(_partition(a.gamma), _partition(a.beta), _partition(a.zeta))}


def cmd_lr_socle(a):
    return {"multiplicity": partitions.socle_multiplicity(_partition(a.zeta), _partition(a.beta), a.k)}


def cmd_lr_witness(a):
    zeta, k = partitions.cosocle_witness(_partition(a.beta))
    return {"zeta": zeta.to_json(), "k": k}


def cmd_lr_qsym(a):
    if a.gamma is not None:
        return {"quasisymmetric": partitions.is_quasisymmetric(_partition(a.gamma))}
    if a.k is None or a.m is None:
        raise Malformed("give --gamma, or --k and --m for the plethysm expansion")
    exp = partitions.exterior_sym2_schur(a.k, a.m)
    return {"expansion": [{"partition": p.to_json(), "coeff": c,
                           "quasisymmetric": partitions.is_quasisymmetric(p)}
                          for p, c in sorted(exp.items(), reverse=True)]}


# ---------------------------------------------------------------- tl

def cmd_tl_eval(a):
    return {"element": tl.tl_eval_word(_word(a.word)).to_json()}


def cmd_tl_equal(a):
    return {"equal": tl.tl_equal(_word(a.left), _word(a.right))}


def cmd_tl_reduced(a):
    w = _word(a.word)
    zero = tl.tl_eval_word(w).is_zero
    return {"reduced": (not zero) and tl.tl_is_reduced(w), "zero": zero}


def cmd_tl_staircase(a):
    return {"indices": list(tl.staircase(a.s))}


def cmd_tl_sqrt(a):
    j, jp = tl.square_root_pair(a.s)
    return {"J": list(j), "Jp": list(jp), "I": list(tl.staircase(a.s))}


# ---------------------------------------------------------------- brauer

def cmd_brauer_basis(a):
    return {"basis": [d.to_json() for d in brauer.brauer_basis(a.r, a.s)]}


def cmd_brauer_compose(a):
    return {"hom": brauer.brauer_compose(_hom(a.g), _hom(a.f)).to_json()}


def cmd_brauer_tensor(a):
    return {"hom": brauer.brauer_tensor(_hom(a.f), _hom(a.g)).to_json()}


def cmd_brauer_realize(a):
    return {"matrix": superalg.matrix_to_json(brauer.realize(_hom(a.f), a.n))}


# ---------------------------------------------------------------- super

def _module(a) -> superalg.SuperRep:
    if a.rep is not None:
        data = _json_arg(a.rep)
        try:
            rep = superalg.rep_from_json(data.get("rep", data))
        except (KeyError, TypeError, ValueError) as exc:
            raise Malformed(f"bad representation: {exc}") from None
        if rep.n != a.n:
            raise superalg.SuperAlgebraError(f"representation is for p({rep.n}), not p({a.n})")
        return rep
    kind = a.module
    if kind == "trivial":
        return superalg.trivial_rep(a.n)
    if kind == "natural":
        return superalg.natural_rep(a.n)
    if kind == "adjoint":
        return superalg.adjoint_rep(a.n)
    if kind == "tensor":
        if a.k is None:
            raise Malformed("--module tensor needs --k")
        return superalg.tensor_power_rep(a.n, a.k)
    if kind == "delta":
        if a.weight is None:
            raise Malformed("--module delta needs --weight")
        return superalg.build_truncated_standard(a.n, _weight(a.weight))
    raise Malformed(f"unknown module {kind!r}")


def _rep_summary(rep: superalg.SuperRep, full: bool) -> dict:
    out = {"dims": [rep.space.even_dim, rep.space.odd_dim], "sdim": rep.space.sdim,
           "parity_shift": rep.parity_shift}
    if full:
        out["rep"] = superalg.rep_to_json(rep)
    return out


def cmd_super_basis(a):
    return {"basis": [{"label": e.label, "piece": e.piece, "matrix": superalg.matrix_to_json(e.matrix)}
                      for e in superalg.pn_basis(a.n)]}


def cmd_super_homdim(a):
    return {"dim": superalg.hom_dim(a.n, a.k)}


def cmd_super_ds(a):
    out = superalg.ds_apply(superalg.make_ds_x(a.n), _module(a))
    return _rep_summary(out, a.full)


def cmd_super_delta(a):
    return _rep_summary(superalg.build_truncated_standard(a.n, _weight(a.weight)), a.full)


def cmd_super_casimir(a):
    return {"matrix": superalg.matrix_to_json(superalg.casimir_matrix(a.n, _module(a)))}


def cmd_super_spectrum(a):
    spectrum = superalg.theta_eigen_decomp(a.n, _module(a))
    return {"spectrum": [[j, d] for j, d in sorted(spectrum.items())], "total": sum(spectrum.values())}


# ---------------------------------------------------------------- groth

def _vector(a) -> grothendieck.GrothVector:
    if a.vector is not None:
        data = _json_arg(a.vector)
        try:
            return grothendieck.GrothVector.from_json(data.get("vector", data))
        except (KeyError, TypeError) as exc:
            raise Malformed(f"bad vector: {exc}") from None
    if a.weight is None:
        raise Malformed("give --vector or --weight")
    lam = _weight(a.weight)
    return grothendieck.GrothVector.basis(lam, a.level)


def _table(a) -> grothendieck.ThetaTable:
    if getattr(a, "table", None) is not None:
        data = _json_arg(a.table)
        try:
            return grothendieck.ThetaTable.from_json(data.get("table", data))
        except (KeyError, TypeError) as exc:
            raise Malformed(f"bad table: {exc}") from None
    return grothendieck.load_or_discover(a.n, a.max_size, _cache_dir(a), a.radius)


def cmd_groth_tensorv(a):
    return {"vector": grothendieck.tensor_by_V(_vector(a), a.k).to_json()}


def cmd_groth_calibrate(a):
    return {"table": _table(a).to_json()}


def cmd_groth_theta(a):
    return {"vector": grothendieck.theta_apply(a.j, _vector(a), _table(a)).to_json()}


def cmd_groth_verify_tl(a):
    lo, hi = a.window
    return grothendieck.verify_tl_relations(_table(a), (lo, hi), a.size).to_json()


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="perilab", description=__doc__.splitlines()[0])
    p.add_argument("--cache-dir", default=None, help="cache directory (default: $PERILAB_CACHE)")
    p.add_argument("--input", default=None,
                   help="JSON object of option values; '-' reads standard input")
    top = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def group(name: str):
        g = top.add_parser(name)
        return g.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    def cmd(sub, name: str, fn: Callable, *opts: tuple):
        c = sub.add_parser(name)
        # accepted after the subcommand as well; SUPPRESS keeps the global value
        c.add_argument("--cache-dir", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        for flags, kw in opts:
            c.add_argument(*flags, **kw)
        c.set_defaults(func=fn)
        return c

    W = (("--weight",), {"default": None})
    R = (("--rank",), {"default": None, "help": "rank for list-style weights (int or inf)"})
    N = (("--n",), {"type": int, "required": True})

    g = group("weights")
    cmd(g, "size", cmd_weights_size, W, R)
    cmd(g, "admissible", cmd_weights_admissible, W, R, (("--k",), {"type": int, "required": True}))
    cmd(g, "diagram", cmd_weights_diagram, W, R, (("--diagram",), {"default": None}))
    cmd(g, "dual", cmd_weights_dual, W, R)
    cmd(g, "truncate", cmd_weights_truncate, W, R, N)
    cmd(g, "moves", cmd_weights_moves, W, R, (("--k",), {"type": int, "default": None}))

    g = group("lr")
    cmd(g, "coeff", cmd_lr_coeff, (("--gamma",), {"required": True}),
        (("--beta",), {"required": True}), (("--zeta",), {"required": True}))
    cmd(g, "socle", cmd_lr_socle, (("--zeta",), {"required": True}),
        (("--beta",), {"required": True}), (("--k",), {"type": int, "required": True}))
    cmd(g, "witness", cmd_lr_witness, (("--beta",), {"required": True}))
    cmd(g, "qsym", cmd_lr_qsym, (("--gamma",), {"default": None}),
        (("--k",), {"type": int, "default": None}), (("--m",), {"type": int, "default": None}))

    g = group("tl")
    cmd(g, "eval", cmd_tl_eval, (("--word",), {"required": True}))
    cmd(g, "equal", cmd_tl_equal, (("--left",), {"required": True}), (("--right",), {"required": True}))
    cmd(g, "reduced", cmd_tl_reduced, (("--word",), {"required": True}))
    cmd(g, "staircase", cmd_tl_staircase, (("--s",), {"type": int, "required": True}))
    cmd(g, "sqrt", cmd_tl_sqrt, (("--s",), {"type": int, "required": True}))

    g = group("brauer")
    cmd(g, "basis", cmd_brauer_basis, (("--r",), {"type": int, "required": True}),
        (("--s",), {"type": int, "required": True}))
    cmd(g, "compose", cmd_brauer_compose, (("--g",), {"required": True}), (("--f",), {"required": True}))
    cmd(g, "tensor", cmd_brauer_tensor, (("--f",), {"required": True}), (("--g",), {"required": True}))
    cmd(g, "realize", cmd_brauer_realize, (("--f",), {"required": True}), N)

    M = (("--module",), {"default": "natural",
                         "choices": ["trivial", "natural", "adjoint", "tensor", "delta"]})
    REP = (("--rep",), {"default": None, "help": "representation as JSON"})
    K = (("--k",), {"type": int, "default": None})
    FULL = (("--full",), {"action": "store_true", "help": "also print the full representation"})
    g = group("super")
    cmd(g, "basis", cmd_super_basis, N)
    cmd(g, "homdim", cmd_super_homdim, N, (("--k",), {"type": int, "required": True}))
    cmd(g, "ds", cmd_super_ds, N, M, REP, K, W, FULL)
    cmd(g, "delta", cmd_super_delta, N, (("--weight",), {"required": True}), FULL)
    cmd(g, "casimir", cmd_super_casimir, N, M, REP, K, W)
    cmd(g, "spectrum", cmd_super_spectrum, N, M, REP, K, W)

    VEC = (("--vector",), {"default": None})
    LEVEL = (("--level",), {"type": int, "default": None})
    CAL = [(("--n",), {"type": int, "default": 7}), (("--max-size",), {"type": int, "default": 2}),
           (("--radius",), {"type": int, "default": None}), (("--table",), {"default": None})]
    g = group("groth")
    cmd(g, "tensorv", cmd_groth_tensorv, VEC, W, LEVEL, (("--k",), {"type": int, "default": None}))
    cmd(g, "calibrate", cmd_groth_calibrate, *CAL)
    cmd(g, "theta", cmd_groth_theta, (("--j",), {"type": int, "required": True}), VEC, W, LEVEL, *CAL)
    cmd(g, "verify-tl", cmd_groth_verify_tl, *CAL,
        (("--window",), {"type": int, "nargs": 2, "default": [-5, 5]}),
        (("--size",), {"type": int, "default": 3}))
    return p


def _merge_input(args, parser) -> None:
    if args.input is None:
        return
    text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
    data = _json_arg(text)
    if not isinstance(data, dict):
        raise Malformed("--input must hold a JSON object")
    for key, value in data.items():
        attr = key.replace("-", "_")
        if not hasattr(args, attr) or attr in ("func", "group", "cmd"):
            raise Malformed(f"unknown option {key!r} in input")
        if getattr(args, attr) in (None, False):
            setattr(args, attr, value if isinstance(value, (int, bool)) or not isinstance(value, (list, dict))
                    else json.dumps(value))


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _merge_input(args, parser)
        _load_lr(args)
        result = args.func(args)
        _save_lr(args)
    except Malformed as exc:
        print(json.dumps({"error": str(exc)}), file=out)
        return 2
    except OSError as exc:
        print(json.dumps({"error": str(exc)}), file=out)
        return 2
    except DOMAIN_ERRORS as exc:
        print(json.dumps({"error": str(exc), "kind": type(exc).__name__}), file=out)
        return 1
    print(json.dumps(result), file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
