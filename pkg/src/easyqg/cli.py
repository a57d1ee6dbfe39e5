"""Command-line front end.

Every command prints one JSON document (or CSV for matrices with
``--format csv``). Exit status: 0 on success, 2 on invalid input,
3 when a request exceeds a size limit.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

import numpy as np

from . import diagram, fusion, laws, models, partitions, weingarten
from .errors import SizeLimitError

SCHEMA_VERSION = 1
EXIT_OK, EXIT_INVALID, EXIT_SIZE = 0, 2, 3


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def rational(x):
    x = Fraction(x)
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _default_tol():
    return float(os.environ.get("EASYQG_TOL", "1e-9"))


def _indices(text):
    if text is None or text == "":
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"index list must be comma-separated integers, got {text!r}") from None


def _word_arg(args, default_len=None):
    if getattr(args, "word", None) is not None:
        return weingarten.parse_word(args.word)
    k = getattr(args, "k", None)
    if k is None:
        k = default_len
    if k is None:
        raise UsageError("give --word or --k")
    return weingarten.parse_word(int(k))


def _family_word(args, default_len=None):
    fam = partitions.PartitionFamily.parse(args.family)
    word = _word_arg(args, default_len)
    if fam.is_complex and partitions.UNCOLORED in word:
        raise UsageError(f"family {fam} needs a colored --word")
    return fam, word


# -- commands -------------------------------------------------------------------


def cmd_enumerate(args):
    lower = args.lower if args.lower is not None else partitions.UNCOLORED * (args.legs or 0)
    upper = args.upper or ""
    parts = partitions.enumerate_partitions(args.family, upper, lower, bound=args.bound)
    return {"family": str(partitions.PartitionFamily.parse(args.family)), "upper": upper, "lower": lower,
            "count": len(parts), "partitions": [p.to_dict() for p in parts]}


def cmd_generate(args):
    gens = []
    if args.generators:
        text = args.generators
        if os.path.exists(text):
            with open(text) as fh:
                text = fh.read()
        gens = [partitions.SetPartition.from_dict(d) for d in json.loads(text)]
    cat = diagram.generate_category(gens, args.bound, colored=True if args.colored else None)
    cells = []
    for up, lo in cat.cells():
        members = cat.cell(up, lo)
        cells.append({"cell": f"{up}/{lo}", "count": len(members), "partitions": [p.to_dict() for p in members]})
    return {"size_bound": args.bound, "total": cat.count(), "cells": cells}


def cmd_integrate(args):
    i, j = _indices(args.i), _indices(args.j)
    fam = partitions.PartitionFamily.parse(args.family)
    if args.word is None:
        word = ("o" if fam.is_complex else partitions.UNCOLORED) * len(i)
    else:
        word = weingarten.parse_word(args.word)
    if args.L is not None or args.M is not None:
        L = args.L if args.L is not None else args.N
        M = args.M if args.M is not None else args.N
        val = weingarten.partial_isometry_integrate(fam, L, M, args.N, word, i, j)
    elif args.twisted:
        val = weingarten.integrate_twisted(fam, args.N, word, i, j)
    else:
        val = weingarten.integrate(fam, args.N, word, i, j)
    return rational(val)


def _matrix_payload(pm):
    return {"family": str(pm.family), "word": pm.word, "N": pm.N,
            "basis": [p.to_dict() for p in pm.basis],
            "matrix": [[rational(x) for x in row] for row in pm.entries]}


def _matrix_csv(pm):
    lines = []
    for row in pm.entries:
        lines.append(",".join(str(Fraction(x)) for x in row))
    return "\n".join(lines) + "\n"


def cmd_gram(args):
    fam, word = _family_word(args)
    return weingarten.gram(fam, word, args.N)


def cmd_weingarten(args):
    fam, word = _family_word(args)
    return weingarten.weingarten_matrix(fam, word, args.N)


def _law_spec(args):
    return laws.LawSpec(args.kind, Fraction(args.t), s=args.s, family=args.family)


def _orders(args, spec):
    if args.word is not None:
        return [weingarten.parse_word(args.word)]
    fam = spec.partition_family()
    if fam.is_complex:
        # balanced words o^p b^p
        return ["o" * p + "b" * p for p in range(1, args.kmax // 2 + 1)]
    return list(range(1, args.kmax + 1))


def cmd_law(args):
    spec = _law_spec(args)
    rows = []
    for order in _orders(args, spec):
        val = laws.law_moments(spec, order)
        rows.append({"order": order, **rational(val)})
    return {"law": spec.kind, "t": str(spec.t), "moments": rows}


def cmd_cumulants(args):
    spec = _law_spec(args)
    rows = []
    for order in _orders(args, spec):
        val = laws.law_cumulants(spec, order, args.mode)
        rows.append({"order": order, **rational(val)})
    return {"law": spec.kind, "t": str(spec.t), "mode": args.mode, "cumulants": rows}


def cmd_bp_check(args):
    rep = laws.bercovici_pata_check(args.classical, args.free, args.kmax)
    rows = []
    for r in rep["rows"]:
        w = r["word"]
        order = len(w) if set(w) <= {partitions.UNCOLORED} else w
        rows.append({"order": order, "classical": [str(c) for c in r["classical"].coefficients()],
                     "free": [str(c) for c in r["free"].coefficients()], "passed": r["passed"]})
    return {"classical": args.classical, "free": args.free, "passed": rep["passed"], "rows": rows}


def cmd_fusion(args):
    fam = args.family
    if fam == "UPlus":
        label = args.word if args.word is not None else "o" * (args.k or 0)
        label = weingarten.parse_word(label)
    else:
        if args.k is None:
            raise UsageError("give --k")
        label = args.k
    if args.with_label is not None:
        other = args.with_label if fam == "UPlus" else int(args.with_label)
        dec = fusion.fuse(fam, label, other)
    else:
        dec = fusion.tensor_power_decompose(fam, label)
    order = sorted(dec, key=lambda r: (-len(r), r) if isinstance(r, str) else -r)
    out = {fusion.label_key(fam, r): dec[r] for r in order}
    if args.N is not None:
        out["dimensions"] = {fusion.label_key(fam, r): fusion.dimension(fam, r, args.N) for r in order}
    return out


def cmd_growth(args):
    return {"family": args.family, "N": args.N, "b": fusion.growth_series(args.family, args.N, args.kmax)}


def _build_model(args):
    if getattr(args, "input", None):
        return models.hadamard_model(models.load_matrix(args.input), tol=args.tol)
    if getattr(args, "fourier", None):
        orders = [int(x) for x in args.fourier.split(",")]
        return models.hadamard_model(models.fourier_matrix(orders), tol=args.tol)
    if getattr(args, "weyl", None):
        spec = args.weyl.lower()
        if spec.startswith("z"):
            orders = [int(x) for x in spec[1:].replace("z", ",").replace("x", "").split(",") if x]
        else:
            orders = [int(x) for x in spec.split(",")]
        return models.weyl_model(models.FiniteAbelianGroup(tuple(orders)), args.group)
    if getattr(args, "antidiagonal", None):
        return models.antidiagonal_model(args.antidiagonal, args.variant)
    raise UsageError("choose a model: --input, --fourier, --weyl or --antidiagonal")


def _mc_kwargs(args):
    return {"samples": args.samples, "seed": args.seed} if args.mode == "mc" else {}


def cmd_model_check(args):
    model = _build_model(args)
    out = {"model": model.name, "N": model.N, "K": model.K, "tol": args.tol}
    if model.self_adjoint:
        out["magic"] = models.is_magic(model, tol=args.tol, seed=args.seed)
    else:
        out["biunitary"] = models.is_biunitary(model, tol=args.tol, seed=args.seed)
    mode = args.mode if model.kind != "point" else "exact"
    st = models.stationarity_check(model, args.pmax, mode=mode, tol=args.tol, **_mc_kwargs(args))
    out["stationarity"] = st
    out["passed"] = st["passed"] and out.get("magic", out.get("biunitary"))["passed"]
    return out


def cmd_model_moments(args):
    model = _build_model(args)
    mode = args.mode if model.kind != "point" else "exact"
    rows = []
    for p in range(1, args.pmax + 1):
        T = models.correlation_tensor(model, p, mode=mode, **_mc_kwargs(args))
        H = (T + T.conj().T) / 2
        ev = np.linalg.eigvalsh(H)
        row = {"p": p, "residual": models.stationarity_residual(T),
               "spectrum_max": float(ev.max()), "spectrum_min": float(ev.min())}
        if mode == "exact" or model.kind == "point":
            row["moment"] = models.hopf_character_moment(model, p, mode=mode, check_cesaro=False)
        else:
            row["moment_estimate"] = int(np.sum(np.abs(ev - 1) < max(args.tol, 1e-2)))
        rows.append(row)
    return {"model": model.name, "mode": mode, "tol": args.tol, "moments": rows}


# -- parser ---------------------------------------------------------------------


def build_parser():
    p = _Parser(prog="easyqg", description="Partition calculus for easy quantum groups.")
    p.add_argument("--out", default="-", help="output path, '-' for standard output")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    # the output options are also accepted after the subcommand
    common = _Parser(add_help=False)
    common.add_argument("--out", default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    _add = sub.add_parser
    sub.add_parser = lambda *a, **kw: _add(*a, parents=[common], **kw)

    s = sub.add_parser("enumerate", help="list the partitions of a family")
    s.add_argument("--family", required=True)
    s.add_argument("--legs", type=int)
    s.add_argument("--upper")
    s.add_argument("--lower")
    s.add_argument("--bound", type=int, default=partitions.DEFAULT_LEG_BOUND)
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("generate", help="bounded closure of a set of generators")
    s.add_argument("--generators", help="JSON list of partitions, or a file holding one")
    s.add_argument("--bound", type=int, default=6)
    s.add_argument("--colored", action="store_true")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("integrate", help="Haar integral of a coordinate monomial")
    s.add_argument("--family", required=True)
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--word")
    s.add_argument("--i", required=True)
    s.add_argument("--j", required=True)
    s.add_argument("--twisted", action="store_true")
    s.add_argument("--L", type=int)
    s.add_argument("--M", type=int)
    s.set_defaults(func=cmd_integrate)

    for name, func in (("gram", cmd_gram), ("weingarten", cmd_weingarten)):
        s = sub.add_parser(name, help=f"exact {name} matrix")
        s.add_argument("--family", required=True)
        s.add_argument("--N", type=int, required=True)
        s.add_argument("--word")
        s.add_argument("--k", type=int)
        s.set_defaults(func=func, matrix=True)

    for name, func in (("law", cmd_law), ("cumulants", cmd_cumulants)):
        s = sub.add_parser(name, help=f"{name} of a limiting law")
        s.add_argument("--kind", required=True)
        s.add_argument("--t", default="1")
        s.add_argument("--s", type=int)
        s.add_argument("--family")
        s.add_argument("--kmax", type=int, default=8)
        s.add_argument("--word")
        if name == "cumulants":
            s.add_argument("--mode", choices=(laws.CLASSICAL, laws.FREE), default=laws.CLASSICAL)
        s.set_defaults(func=func)

    s = sub.add_parser("bp-check", help="compare classical and free cumulants of two families")
    s.add_argument("--classical", required=True)
    s.add_argument("--free", required=True)
    s.add_argument("--kmax", type=int, default=8)
    s.set_defaults(func=cmd_bp_check)

    s = sub.add_parser("fusion", help="tensor power or product decomposition")
    s.add_argument("--family", required=True, choices=fusion.FAMILIES)
    s.add_argument("--k", type=int)
    s.add_argument("--word")
    s.add_argument("--with", dest="with_label", help="fuse r_k with this label instead")
    s.add_argument("--N", type=int, help="also report dimensions at N")
    s.set_defaults(func=cmd_fusion)

    s = sub.add_parser("growth", help="growth series b_k")
    s.add_argument("--family", required=True, choices=fusion.FAMILIES)
    s.add_argument("--N", type=int, required=True)
    s.add_argument("--kmax", type=int, default=5)
    s.set_defaults(func=cmd_growth)

    s = sub.add_parser("model", help="matrix model checks")
    msub = s.add_subparsers(dest="model_command", parser_class=_Parser)
    _madd = msub.add_parser
    msub.add_parser = lambda *a, **kw: _madd(*a, parents=[common], **kw)
    for name, func in (("check", cmd_model_check), ("moments", cmd_model_moments)):
        m = msub.add_parser(name)
        m.add_argument("--input", help="Hadamard matrix as CSV or JSON")
        m.add_argument("--fourier", help="cyclic orders, e.g. 2,3")
        m.add_argument("--weyl", help="group, e.g. z2 or 2,2")
        m.add_argument("--group", choices=("su2", "unitary"), default="su2")
        m.add_argument("--antidiagonal", type=int, metavar="N")
        m.add_argument("--variant", choices=("O", "U"), default="O")
        m.add_argument("--pmax", type=int, default=3)
        m.add_argument("--mode", choices=("exact", "mc"), default="exact")
        m.add_argument("--samples", type=int, default=100000)
        m.add_argument("--seed", type=int, default=0)
        m.add_argument("--tol", type=float, default=_default_tol())
        m.set_defaults(func=func)
    return p


def _emit(text, path):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("missing subcommand")
        result = args.func(args)
        if getattr(args, "matrix", False):
            if args.format == "csv":
                _emit(_matrix_csv(result), args.out)
                return EXIT_OK
            result = _matrix_payload(result)
        elif args.format == "csv":
            raise UsageError("CSV output is only available for matrix results")
        payload = {"v": SCHEMA_VERSION, **result}
        _emit(json.dumps(payload, default=_json_default) + "\n", args.out)
        return EXIT_OK
    except SizeLimitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_SIZE
    except (ValueError, OSError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID


def _json_default(x):
    if isinstance(x, Fraction):
        return rational(x)
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, (np.bool_,)):
        return bool(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


if __name__ == "__main__":
    sys.exit(main())
