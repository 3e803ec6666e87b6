"""Command-line surface: residual checks, lift constructions, and the
randomized verification campaigns.

Exit codes: 0 when the checked identity holds, 1 when it fails, 2 on any
input or precondition error, so shell pipelines can drive batches.

Inline input grammars (all indices and names refer to the chosen
algebra's basis):

  --algebra  catalog:NAME | file:PATH | NAME (catalog shorthand)
  --module   adjoint | coadjoint | trivial:N | self
  --tensor   catalog:NAME | file:PATH | [skew:]SUM with terms like
             "e1^e2", "e(x)f", "1/2*h(x)h", joined by + and -
  --map      zero | id | scale:Q | catalog:NAME | rows:a,b;c,d | file:PATH
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import campaigns, catalog, lifts, operators, serialize, ybe
from .algebra import (
    GLieAlgebra,
    LieAlgebra,
    LinearMap,
    Representation,
    adjoint_representation,
    coadjoint_representation,
    identity_map,
    map_from_matrix,
    module_target,
    self_target,
    trivial_representation,
    zero_map,
)
from .linalg import Q
from .reports import Report, merge
from .serialize import FormatError, parse_rational, rational_to_str
from .tensors import Tensor2, is_skew, sym_skew_parts, tensor2_from_entries, wedge


class InputError(ValueError):
    """Bad command-line input; maps to exit code 2."""


# ---------------------------------------------------------------------------
# input parsing


def _load_algebra(spec: str) -> LieAlgebra:
    if spec.startswith("file:"):
        return serialize.algebra_from_doc(serialize.load_json(spec[5:]))
    name = spec[8:] if spec.startswith("catalog:") else spec
    try:
        return catalog.get(name).algebra
    except catalog.CatalogError as exc:
        raise InputError(str(exc)) from exc


def _module(spec: str, g: LieAlgebra) -> tuple[Representation, GLieAlgebra]:
    if spec == "adjoint":
        rho = adjoint_representation(g)
    elif spec == "coadjoint":
        rho = coadjoint_representation(g)
    elif spec.startswith("trivial:"):
        try:
            n = int(spec[8:])
        except ValueError as exc:
            raise InputError(f"bad trivial module dimension in {spec!r}") from exc
        if n < 1:
            raise InputError("trivial module dimension must be positive")
        rho = trivial_representation(g, n)
    elif spec == "self":
        tgt = self_target(g)
        return tgt.action, tgt
    else:
        raise InputError(
            f"unknown module {spec!r}; use adjoint, coadjoint, trivial:N or self"
        )
    return rho, module_target(rho)


def _basis_index(g: LieAlgebra, name: str) -> int:
    try:
        return g.basis_names.index(name)
    except ValueError as exc:
        raise InputError(
            f"unknown basis name {name!r}; {g.name} has {', '.join(g.basis_names)}"
        ) from exc


def _split_terms(text: str):
    """Yield (sign, term) pieces of a +/- separated sum."""
    term, sign = "", 1
    for ch in text:
        if ch in "+-" and term:
            yield sign, term
            term, sign = "", 1 if ch == "+" else -1
        elif ch in "+-" and not term:
            sign = sign if ch == "+" else -sign
        else:
            term += ch
    if term:
        yield sign, term


def _parse_sum(g: LieAlgebra, text: str) -> Tensor2:
    entries = []
    for sign, term in _split_terms(text.replace(" ", "")):
        coeff = Q(sign)
        if "*" in term:
            qs, term = term.split("*", 1)
            coeff *= parse_rational(qs)
        if "(x)" in term:
            a, b = term.split("(x)", 1)
            entries.append((_basis_index(g, a), _basis_index(g, b), coeff))
        elif "^" in term:
            a, b = term.split("^", 1)
            i, j = _basis_index(g, a), _basis_index(g, b)
            entries.append((i, j, coeff))
            entries.append((j, i, -coeff))
        else:
            raise InputError(
                f"cannot parse tensor term {term!r}; use a(x)b or a^b with "
                "an optional rational coefficient like 1/2*a(x)b"
            )
    if not entries:
        raise InputError("empty tensor expression")
    return tensor2_from_entries((g.space, g.space), entries)


def _load_tensor(spec: str, g: LieAlgebra) -> Tensor2:
    if spec.startswith("file:"):
        return serialize.tensor2_from_doc(serialize.load_json(spec[5:]), g.space)
    if spec.startswith("catalog:"):
        name = spec[8:]
        entry = catalog.get(g.name)
        if name not in entry.tensors:
            have = ", ".join(sorted(entry.tensors)) or "none"
            raise InputError(f"{g.name} has no tensor {name!r}; available: {have}")
        return entry.tensors[name]
    if spec.startswith("skew:"):
        t = _parse_sum(g, spec[5:])
        if not is_skew(t):
            raise InputError("tensor after skew: is not skew")
        return t
    return _parse_sum(g, spec)


def _load_map(spec: str, source, target, g: LieAlgebra) -> LinearMap:
    if spec == "zero":
        return zero_map(source, target)
    if spec == "id":
        if source.dim != target.dim:
            raise InputError("id needs equal source and target dimensions")
        return map_from_matrix(source, target, identity_map(source).entries)
    if spec.startswith("scale:"):
        q = parse_rational(spec[6:])
        if source.dim != target.dim:
            raise InputError("scale: needs equal source and target dimensions")
        return q * map_from_matrix(source, target, identity_map(source).entries)
    if spec.startswith("catalog:"):
        name = spec[8:]
        entry = catalog.get(g.name)
        if name not in entry.operators:
            have = ", ".join(sorted(entry.operators)) or "none"
            raise InputError(f"{g.name} has no operator {name!r}; available: {have}")
        op = entry.operators[name]
        if (op.source, op.target) != (source, target):
            raise InputError(
                f"catalog operator {name} maps {op.source.tag} -> {op.target.tag}, "
                f"expected {source.tag} -> {target.tag}"
            )
        return op
    if spec.startswith("rows:"):
        try:
            rows = tuple(
                tuple(parse_rational(v) for v in row.split(","))
                for row in spec[5:].split(";")
            )
        except FormatError as exc:
            raise InputError(f"bad matrix entry: {exc}") from exc
        return map_from_matrix(source, target, rows)
    if spec.startswith("file:"):
        return serialize.map_from_doc(serialize.load_json(spec[5:]), source, target)
    raise InputError(
        f"unknown map {spec!r}; use zero, id, scale:Q, catalog:NAME, "
        "rows:a,b;c,d or file:PATH"
    )


def _rat(args, flag, default=None):
    raw = getattr(args, flag.replace("-", "_"))
    if raw is None:
        if default is None:
            raise InputError(f"--{flag} is required for this kind")
        return default
    return parse_rational(raw)


# ---------------------------------------------------------------------------
# check


def _check_report(kind: str, args, g: LieAlgebra) -> Report:
    ctx = g.name

    def tensor():
        if args.tensor is None:
            raise InputError(f"check {kind} needs --tensor")
        return _load_tensor(args.tensor, g)

    def target():
        return _module(args.module or "adjoint", g)

    def op_into_g(tgt_space):
        if args.map is None:
            raise InputError(f"check {kind} needs --map")
        return _load_map(args.map, tgt_space, g.space, g)

    if kind == "cybe":
        return ybe.tensor3_report("cybe", ctx, ybe.cybe_residual(g, tensor()))
    if kind == "ecybe":
        eps = _rat(args, "eps", Q(1))
        return ybe.tensor3_report(
            "ecybe", f"{ctx} eps={eps}", ybe.ecybe_residual(g, tensor(), eps)
        )
    if kind == "gcybe":
        return ybe.family_report("gcybe", ctx, ybe.gcybe_residual(g, tensor()))
    if kind == "invariance":
        return ybe.family_report("invariance", ctx, ybe.invariance_residual(g, tensor()))
    if kind == "myb":
        op = _load_map(args.map or "zero", g.space, g.space, g)
        return ybe.table_report("myb", ctx, ybe.modified_ybe_residual(g, op))
    if kind == "kupershmidt":
        return ybe.table_report("kupershmidt", ctx, ybe.kupershmidt_residual(g, tensor()))
    if kind == "lie-coalgebra":
        t = tensor()
        # cross-validates the dual-bracket route against the residual route
        lifts.lie_coalgebra_report(g, t)
        plus, _ = sym_skew_parts(t)
        return merge(
            "lie-coalgebra",
            ctx,
            (
                ybe.family_report("plus-invariance", ctx, ybe.invariance_residual(g, plus)),
                ybe.family_report("gcybe", ctx, ybe.gcybe_residual(g, t)),
            ),
        )
    if kind == "rb":
        op = _load_map(args.map or "zero", g.space, g.space, g)
        lam = _rat(args, "weight", Q(0))
        return ybe.table_report(
            "rb", f"{ctx} weight={lam}", operators.rota_baxter_residual(g, op, lam)
        )
    if kind == "o-op":
        rho, _ = target()
        op = op_into_g(rho.space)
        return ybe.table_report("o-op", ctx, operators.o_operator_residual(g, rho, op))
    if kind == "o-op-weighted":
        rho, tgt = target()
        op = op_into_g(rho.space)
        lam = _rat(args, "weight", Q(0))
        return ybe.table_report(
            "o-op-weighted",
            f"{ctx} weight={lam}",
            operators.o_operator_weighted_residual(g, tgt, op, lam),
        )
    if kind == "gen-o-op":
        rho, _ = target()
        op = op_into_g(rho.space)
        cyclic, equi = operators.cocycle_residuals(g, rho, op)
        return merge(
            "gen-o-op",
            ctx,
            (
                ybe.table_report("gen-o-op-cyclic", ctx, cyclic),
                ybe.table_report("gen-o-op-equivariance", ctx, equi),
            ),
        )
    if kind == "ext-o-op":
        rho, tgt = target()
        op = op_into_g(rho.space)
        if args.map2 is None:
            raise InputError("check ext-o-op needs --map2 for the extension")
        ext = _load_map(args.map2, rho.space, g.space, g)
        lam = _rat(args, "weight", Q(0))
        kappa = _rat(args, "mass", Q(0))
        mu = _rat(args, "mass2", Q(0))
        return ybe.table_report(
            "ext-o-op",
            f"{ctx} weight={lam} mass={kappa},{mu}",
            operators.extended_o_residual(g, tgt, op, ext, lam, kappa, mu),
        )
    if kind == "antisym-hom":
        rho, tgt = target()
        spec = args.map2 or args.map
        if spec is None:
            raise InputError("check antisym-hom needs --map (the extension)")
        ext = _load_map(spec, rho.space, g.space, g)
        kappa = _rat(args, "mass", Q(1))
        mu = _rat(args, "mass2", Q(0))
        checks = operators.antisymmetric_hom_report(g, tgt, ext, kappa, mu)
        return merge(
            "antisym-hom",
            f"{ctx} mass={kappa},{mu}",
            (checks.antisymmetry, checks.equivariance, checks.bracket_compat),
        )
    if kind == "reldiff":
        rho, tgt = target()
        if args.map is None:
            raise InputError("check reldiff needs --map")
        op = _load_map(args.map, g.space, rho.space, g)
        lam = _rat(args, "weight", Q(1))
        return ybe.table_report(
            "reldiff",
            f"{ctx} weight={lam}",
            operators.relative_differential_residual(g, tgt, op, lam),
        )
    raise InputError(f"unknown check kind {kind!r}")


def _print_report(rep: Report, fmt: str, out: Path | None) -> int:
    doc = serialize.report_to_doc(rep)
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        serialize.save_json(out / "report.json", doc)
    if fmt == "machine":
        sys.stdout.write(serialize.dumps(doc))
    elif rep.ok:
        print(f"{rep.kind} [{rep.context}]: holds")
    else:
        n = len(rep.nonzero)
        word = "entry" if n == 1 else "entries"
        print(f"{rep.kind} [{rep.context}]: fails, {n} nonzero {word}")
        for ix, v in rep.nonzero:
            pretty = ",".join(str(i + 1) for i in ix)
            print(f"  ({pretty}): {v}")
    return 0 if rep.ok else 1


# ---------------------------------------------------------------------------
# lift


def _run_lift(kind: str, args, g: LieAlgebra) -> lifts.LiftResult:
    def target():
        return _module(args.module or "adjoint", g)

    def op_from(space, spec=None):
        raw = spec if spec is not None else args.map
        if raw is None:
            raise InputError(f"lift {kind} needs --map")
        return _load_map(raw, space, g.space, g)

    if kind == "o-op":
        rho, _ = target()
        return lifts.lift_o_operator(g, rho, op_from(rho.space))
    if kind == "gen-o-op":
        rho, _ = target()
        return lifts.lift_generalized(g, rho, op_from(rho.space))
    if kind == "extended":
        rho, _ = target()
        if args.map2 is None:
            raise InputError("lift extended needs --map2 for the extension")
        ext = _load_map(args.map2, rho.space, g.space, g)
        sign = int(_rat(args, "sign", Q(1)))
        return lifts.lift_extended(
            g, rho, op_from(rho.space), ext, _rat(args, "mass", Q(0)), sign
        )
    if kind == "baxter":
        return lifts.lift_baxter(g, op_from(g.space))
    if kind == "rb-weight":
        return lifts.lift_rb_weight(g, op_from(g.space), _rat(args, "weight"))
    if kind == "o-op-to-rb":
        rho, tgt = target()
        return lifts.o_operator_to_rb(
            g, tgt, op_from(rho.space), _rat(args, "weight", Q(0)), _rat(args, "mu1", Q(1))
        )
    if kind == "invertible-o-to-rb":
        rho, _ = target()
        return lifts.invertible_o_operator_to_rb(
            g,
            rho,
            op_from(rho.space),
            _rat(args, "weight", Q(0)),
            _rat(args, "mu1"),
            _rat(args, "mu2"),
        )
    if kind == "reldiff-to-rb":
        rho, tgt = target()
        if args.map is None:
            raise InputError("lift reldiff-to-rb needs --map")
        op = _load_map(args.map, g.space, rho.space, g)
        if args.weight is None and args.mu1 is None:
            return lifts.reldiff_to_rb(g, tgt, op)
        return lifts.reldiff_to_rb(
            g, tgt, op, weight=_rat(args, "weight"), scale=_rat(args, "mu1", Q(1))
        )
    raise InputError(f"unknown lift kind {kind!r}")


def _lift_outcome(res: lifts.LiftResult, fmt: str, out: Path | None) -> int:
    doc = {
        "construction": res.construction,
        "algebra": serialize.algebra_to_doc(res.big),
        "params": {k: rational_to_str(v) for k, v in res.params},
        "operator_ok": res.operator_ok,
        "lifted_ok": res.lifted_ok,
        "tensors": [serialize.tensor2_to_doc(t) for t in res.tensors],
        "maps": [serialize.map_to_doc(m) for m in res.maps],
    }
    written = []
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        serialize.save_json(out / "algebra.json", doc["algebra"])
        written.append("algebra.json")
        for i, t in enumerate(doc["tensors"], start=1):
            serialize.save_json(out / f"tensor-{i}.json", t)
            written.append(f"tensor-{i}.json")
        for i, m in enumerate(doc["maps"], start=1):
            serialize.save_json(out / f"map-{i}.json", m)
            written.append(f"map-{i}.json")
        serialize.save_json(out / "result.json", doc)
        written.append("result.json")
    if fmt == "machine":
        sys.stdout.write(serialize.dumps(doc))
    else:
        verdict = "verified" if res.is_solution else "rejected: source identity fails"
        print(f"{res.construction} on {res.big.name} (dim {res.big.dim}): {verdict}")
        for k, v in res.params:
            print(f"  {k} = {v}")
        if written:
            print(f"  wrote {', '.join(written)} to {out}")
    return 0 if res.is_solution else 1


# ---------------------------------------------------------------------------
# verify


def _campaign_doc(res: campaigns.CampaignResult) -> dict:
    return {
        "name": res.name,
        "seed": res.seed,
        "trials": res.trials,
        "positives": res.positives,
        "negatives": res.negatives,
        "ok": res.ok,
        "failures": list(res.failures),
    }


def _run_verify(args) -> int:
    config = campaigns.RunConfig(seed=args.seed, trials=args.trials)
    if args.name == "all":
        names = sorted(campaigns.CAMPAIGNS)
    elif args.name in campaigns.CAMPAIGNS:
        names = [args.name]
    else:
        known = ", ".join(sorted(campaigns.CAMPAIGNS)) + ", all"
        raise InputError(f"unknown campaign {args.name!r}; known: {known}")
    results = [campaigns.run(name, config) for name in names]
    ok = all(r.ok for r in results)
    doc = {"ok": ok, "results": [_campaign_doc(r) for r in results]}
    if args.out is not None:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        serialize.save_json(outdir / "verify.json", doc)
    if args.format == "machine":
        sys.stdout.write(serialize.dumps(doc))
    else:
        for r in results:
            mark = "ok" if r.ok else "FAIL"
            print(
                f"{r.name}: {mark} ({r.positives} positive, {r.negatives} negative, "
                f"{r.trials} trials, seed {r.seed})"
            )
            for f in r.failures:
                print(f"  {f}")
    return 0 if ok else 1


def _run_catalog(args) -> int:
    entries = catalog.entries()
    if args.format == "machine":
        doc = [
            {
                "name": e.algebra.name,
                "dim": e.algebra.dim,
                "description": e.description,
                "tensors": sorted(e.tensors),
                "operators": sorted(e.operators),
            }
            for e in entries.values()
        ]
        sys.stdout.write(serialize.dumps(doc))
    else:
        for e in entries.values():
            extras = sorted(e.tensors) + sorted(e.operators)
            extra = f" [{', '.join(extras)}]" if extras else ""
            print(f"{e.algebra.name}  dim {e.algebra.dim}  {e.description}{extra}")
    return 0


# ---------------------------------------------------------------------------
# argument surface


CHECK_KINDS = (
    "cybe", "ecybe", "gcybe", "myb", "invariance", "o-op", "o-op-weighted",
    "rb", "ext-o-op", "gen-o-op", "reldiff", "antisym-hom", "kupershmidt",
    "lie-coalgebra",
)

LIFT_KINDS = (
    "o-op", "gen-o-op", "extended", "baxter", "rb-weight", "o-op-to-rb",
    "invertible-o-to-rb", "reldiff-to-rb",
)


def _add_common(p):
    p.add_argument("--algebra", required=True, help="catalog:NAME, file:PATH or NAME")
    p.add_argument("--module", help="adjoint (default), coadjoint, trivial:N or self")
    p.add_argument("--tensor", help="inline tensor, catalog:NAME or file:PATH")
    p.add_argument("--map", help="zero, id, scale:Q, catalog:NAME, rows:.., file:PATH")
    p.add_argument("--map2", help="second map (the extension), same grammar as --map")
    for flag in ("weight", "mass", "mass2", "eps", "sign", "mu1", "mu2"):
        p.add_argument(f"--{flag}", help="rational like 3/2")
    _add_output(p)


def _add_output(p):
    p.add_argument("--format", choices=("human", "machine"), default="human")
    p.add_argument("--out", help="directory for output files")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="yblift",
        description="Exact checks and lifts for Yang-Baxter-type equations "
        "and relative operator identities on small Lie algebras.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("catalog", help="list the built-in algebras")
    _add_output(pc)

    ck = sub.add_parser("check", help="evaluate one residual and report")
    ck.add_argument("kind", choices=CHECK_KINDS)
    _add_common(ck)

    lf = sub.add_parser("lift", help="construct a lift and re-verify it")
    lf.add_argument("kind", choices=LIFT_KINDS)
    _add_common(lf)

    vf = sub.add_parser("verify-theorem", help="run a randomized campaign")
    vf.add_argument("name", help="campaign name or 'all'")
    vf.add_argument("--trials", type=int, default=100)
    vf.add_argument("--seed", type=int, default=7)
    _add_output(vf)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "catalog":
            return _run_catalog(args)
        if args.command == "verify-theorem":
            return _run_verify(args)
        g = _load_algebra(args.algebra)
        out = Path(args.out) if args.out else None
        if args.command == "check":
            return _print_report(_check_report(args.kind, args, g), args.format, out)
        return _lift_outcome(_run_lift(args.kind, args, g), args.format, out)
    except (
        InputError,
        FormatError,
        catalog.CatalogError,
        lifts.LiftInternalError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
