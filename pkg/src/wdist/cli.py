"""Command-line interface: ``wdist {predict,enumerate,verify,expsum,coset,minpoly}``.

Exit codes: 0 success/PASS, 1 verification FAIL, 2 bad parameters,
3 resource guard, 4 inadmissible t, 5 no family match.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import expsums
from .codes import METHODS, WeightDistribution, minimum_distance, weight_distribution, weight_enumerator
from .cyclo import CycInt
from .errors import (
    CaseNotCovered,
    InadmissibleT,
    InvalidParameters,
    NoMatch,
    PreconditionViolation,
    TooLarge,
)
from .gf import FieldCtx, build_field, default_modulus
from .predict import classify, predicted_distribution, verify
from .structure import (
    admissibility_witness,
    cyclotomic_coset,
    make_spec,
    match_exponent,
    minimal_polynomial_of_power,
)

EXIT_OK, EXIT_FAIL, EXIT_PARAMS, EXIT_TOO_LARGE, EXIT_INADMISSIBLE, EXIT_NO_MATCH = range(6)
FORMATS = ("text", "json", "csv")


@dataclass
class RunConfig:
    subcommand: str
    p: int
    m: int
    k: int | None = None
    t: int | None = None
    i: int | None = None
    which: str | None = None
    method: str = "auto"
    workers: int | None = None
    format: str = "text"
    output: str | None = None
    modulus_file: str | None = None


# ---------------------------------------------------------------------------
# JSON schemas

def distribution_to_json(dist: WeightDistribution, *, p, m, t=None, k=None, tau=None, case=None, modulus=None):
    return {
        "p": p,
        "m": m,
        "t": t,
        "k": k,
        "tau": tau,
        "case": case,
        "n": dist.n,
        "dimension": dist.dimension,
        "distribution": [[w, a] for w, a in dist.items()],
        "enumerator": weight_enumerator(dist),
        "modulus": list(modulus) if modulus is not None else None,
    }


def distribution_from_json(obj) -> WeightDistribution:
    return WeightDistribution({int(w): int(a) for w, a in obj["distribution"]}, obj["n"], obj["p"])


def sums_to_json(dist: expsums.SumDistribution, *, p, m, k, which, modulus):
    return {
        "p": p,
        "m": m,
        "k": k,
        "which": which,
        "total": dist.total,
        "values": [[v.to_json(), c] for v, c in dist.items()],
        "modulus": list(modulus),
    }


def sums_from_json(obj) -> expsums.SumDistribution:
    p = obj["p"]
    return expsums.SumDistribution(
        {CycInt.from_json(p, v): c for v, c in obj["values"]}, obj["total"]
    )


def report_to_json(report, modulus):
    s = report.spec
    meta = dict(p=s.p, m=s.m, t=s.t, k=s.k, tau=s.tau, case=s.case_tag.value, modulus=modulus)
    return {
        "status": report.status,
        "method": report.method,
        "predicted": distribution_to_json(report.predicted, **meta),
        "computed": distribution_to_json(report.computed, **meta),
        "diff": report.diff,
    }


def report_from_json(obj) -> dict:
    return {
        "status": obj["status"],
        "method": obj["method"],
        "predicted": distribution_from_json(obj["predicted"]),
        "computed": distribution_from_json(obj["computed"]),
        "diff": [list(row) for row in obj["diff"]],
    }


def poly_text(coeffs) -> str:
    terms = []
    for j in range(len(coeffs) - 1, -1, -1):
        c = coeffs[j]
        if not c:
            continue
        mono = "" if j == 0 else ("X" if j == 1 else f"X^{j}")
        terms.append(str(c) if not mono else (mono if c == 1 else f"{c}*{mono}"))
    return " + ".join(terms) or "0"


# ---------------------------------------------------------------------------
# rendering

def _dist_text(dist: WeightDistribution, header: list[str]) -> str:
    lines = list(header)
    lines.append(f"n={dist.n} dimension={dist.dimension} d_min={minimum_distance(dist)}")
    lines.append("weight frequency")
    lines += [f"{w} {a}" for w, a in dist.items()]
    lines.append(f"enumerator: {weight_enumerator(dist)}")
    return "\n".join(lines) + "\n"


def _dist_csv(dist: WeightDistribution) -> str:
    return "weight,frequency\n" + "".join(f"{w},{a}\n" for w, a in dist.items())


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def _modulus_line(modulus) -> str:
    return "modulus: " + " ".join(map(str, modulus))


def _modulus_path(cfg: RunConfig):
    return cfg.modulus_file or os.environ.get("WDIST_MODULUS_PATH") or None


def _field(cfg: RunConfig) -> FieldCtx:
    return build_field(cfg.p, cfg.m, default_modulus(cfg.p, cfg.m, _modulus_path(cfg)))


def _spec_header(p, m, t, spec, method=None):
    if spec is None:
        head = f"p={p} m={m} t={t} (no family match)"
    else:
        head = f"p={p} m={m} t={t} k={spec.k} tau={spec.tau} case={spec.case_tag.value}"
    return head + (f" method={method}" if method else "")


def cmd_predict(cfg: RunConfig) -> tuple[str, int]:
    dist = predicted_distribution(cfg.p, cfg.m, cfg.k)
    info = classify(cfg.p, cfg.m, cfg.k)
    # the tables do not depend on the modulus; it is echoed for uniformity
    modulus = default_modulus(cfg.p, cfg.m, _modulus_path(cfg))
    if cfg.format == "json":
        obj = distribution_to_json(dist, p=cfg.p, m=cfg.m, k=cfg.k, case=info.case_tag.value, modulus=modulus)
        return _dump(obj), EXIT_OK
    if cfg.format == "csv":
        return _dist_csv(dist), EXIT_OK
    head = [f"p={cfg.p} m={cfg.m} k={cfg.k} case={info.case_tag.value} d={info.d} s={info.s}", _modulus_line(modulus)]
    return _dist_text(dist, head), EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> tuple[str, int]:
    ctx = _field(cfg)
    t = cfg.t % ctx.n
    dist = weight_distribution(ctx, t, method=cfg.method, workers=cfg.workers)
    spec = make_spec(ctx.p, ctx.m, t) if match_exponent(ctx.p, ctx.m, t) else None
    if cfg.format == "json":
        meta = dict(p=ctx.p, m=ctx.m, t=t, modulus=ctx.modulus)
        if spec is not None:
            meta.update(k=spec.k, tau=spec.tau, case=spec.case_tag.value)
        return _dump(distribution_to_json(dist, **meta)), EXIT_OK
    if cfg.format == "csv":
        return _dist_csv(dist), EXIT_OK
    head = [_spec_header(ctx.p, ctx.m, t, spec, cfg.method), _modulus_line(ctx.modulus)]
    return _dist_text(dist, head), EXIT_OK


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    ctx = _field(cfg)
    report = verify(ctx, cfg.t, method=cfg.method, workers=cfg.workers)
    code = EXIT_OK if report.status == "PASS" else EXIT_FAIL
    if cfg.format == "json":
        return _dump(report_to_json(report, ctx.modulus)), code
    if cfg.format == "csv":
        rows = ["weight,predicted,computed"]
        weights = sorted(set(report.predicted.entries) | set(report.computed.entries))
        rows += [
            f"{w},{report.predicted.entries.get(w, 0)},{report.computed.entries.get(w, 0)}"
            for w in weights
        ]
        return "\n".join(rows) + "\n", code
    s = report.spec
    lines = [
        report.status,
        _spec_header(s.p, s.m, s.t, s, cfg.method),
        _modulus_line(ctx.modulus),
        f"predicted: {weight_enumerator(report.predicted)}",
        f"computed:  {weight_enumerator(report.computed)}",
    ]
    lines += [f"diff weight={w} predicted={a} computed={b}" for w, a, b in report.diff]
    return "\n".join(lines) + "\n", code


def cmd_expsum(cfg: RunConfig) -> tuple[str, int]:
    ctx = _field(cfg)
    if cfg.which == "t_alpha":
        dist = expsums.SumDistribution.from_values(expsums.t_alpha_table(ctx, cfg.k))
    elif cfg.which == "r_alpha":
        dist = expsums.r_distribution(ctx, cfg.k)
    else:
        dist = expsums.t_distribution(ctx, cfg.k)
    if cfg.format == "json":
        obj = sums_to_json(dist, p=ctx.p, m=ctx.m, k=cfg.k, which=cfg.which, modulus=ctx.modulus)
        return _dump(obj), EXIT_OK
    if cfg.format == "csv":
        return "value,count\n" + "".join(f"{json.dumps(v.to_json())},{c}\n" for v, c in dist.items()), EXIT_OK
    lines = [f"p={ctx.p} m={ctx.m} k={cfg.k} which={cfg.which} total={dist.total}", _modulus_line(ctx.modulus)]
    lines += [f"{v}: {c}" for v, c in dist.items()]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_coset(cfg: RunConfig) -> tuple[str, int]:
    coset = cyclotomic_coset(cfg.p, cfg.m, cfg.i)
    if cfg.format == "json":
        return _dump({"p": cfg.p, "m": cfg.m, "i": cfg.i, "coset": coset}), EXIT_OK
    if cfg.format == "csv":
        return "element\n" + "".join(f"{c}\n" for c in coset), EXIT_OK
    return " ".join(map(str, coset)) + "\n", EXIT_OK


def cmd_minpoly(cfg: RunConfig) -> tuple[str, int]:
    ctx = _field(cfg)
    w = admissibility_witness(ctx.p, ctx.m, cfg.t)
    if w is not None:
        raise InadmissibleT(cfg.t, w)
    h1 = minimal_polynomial_of_power(ctx, -cfg.t)
    h2 = minimal_polynomial_of_power(ctx, -cfg.t, negate=True)
    if cfg.format == "json":
        obj = {"p": ctx.p, "m": ctx.m, "t": cfg.t, "h1": list(h1), "h2": list(h2), "modulus": list(ctx.modulus)}
        return _dump(obj), EXIT_OK
    if cfg.format == "csv":
        raise InvalidParameters("minpoly has no csv rendering")
    lines = [
        f"h1 (minimal polynomial of pi^-{cfg.t}, degree {len(h1) - 1}): {poly_text(h1)}",
        f"h2 (minimal polynomial of -pi^-{cfg.t}, degree {len(h2) - 1}): {poly_text(h2)}",
        _modulus_line(ctx.modulus),
    ]
    return "\n".join(lines) + "\n", EXIT_OK


COMMANDS = {
    "predict": cmd_predict,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "expsum": cmd_expsum,
    "coset": cmd_coset,
    "minpoly": cmd_minpoly,
}


# ---------------------------------------------------------------------------
# argument parsing

def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True)
    common.add_argument("--m", type=_positive, required=True)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--output", help="write to this file instead of stdout")
    common.add_argument("--modulus-file", help="primitive polynomial table ('p m c_0 ... c_m' lines)")

    work = argparse.ArgumentParser(add_help=False)
    work.add_argument("--method", choices=METHODS, default="auto")
    work.add_argument("--workers", type=_positive, default=None)

    parser = argparse.ArgumentParser(prog="wdist", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sp = sub.add_parser("predict", parents=[common], help="closed-form distribution for (p, m, k)")
    sp.add_argument("--k", type=int, required=True)
    sp = sub.add_parser("enumerate", parents=[common, work], help="enumerate the weights of C_t")
    sp.add_argument("--t", type=int, required=True)
    sp = sub.add_parser("verify", parents=[common, work], help="compare enumeration with the tables")
    sp.add_argument("--t", type=int, required=True)
    sp = sub.add_parser("expsum", parents=[common], help="value distribution of an exponential sum")
    sp.add_argument("--k", type=_positive, required=True)
    sp.add_argument("--which", choices=("t_alpha", "r_alpha", "t_ab"), default="t_alpha")
    sp = sub.add_parser("coset", parents=[common], help="p-cyclotomic coset of i mod p^m - 1")
    sp.add_argument("--i", type=int, required=True)
    sp = sub.add_parser("minpoly", parents=[common], help="minimal polynomials of pi^-t and -pi^-t")
    sp.add_argument("--t", type=int, required=True)
    return parser


def config_from_args(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(**{k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__})


def run(cfg: RunConfig) -> tuple[str, int]:
    """Execute one subcommand; returns (rendered output, exit code)."""
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except InadmissibleT as exc:
        return f"error: {exc}\n", EXIT_INADMISSIBLE
    except NoMatch as exc:
        return f"error: no family match: {exc}\n", EXIT_NO_MATCH
    except TooLarge as exc:
        return f"error: {exc}\n", EXIT_TOO_LARGE
    except (InvalidParameters, CaseNotCovered, PreconditionViolation) as exc:
        return f"error: {exc}\n", EXIT_PARAMS


def main(argv=None) -> int:
    cfg = config_from_args(argv)
    text, code = run(cfg)
    if code in (EXIT_OK, EXIT_FAIL):
        if cfg.output:
            with open(cfg.output, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    else:
        sys.stderr.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
