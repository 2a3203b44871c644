"""Command-line driver: one pipeline per command, one deterministic JSON report.

Exit codes: 0 every asserted verdict holds, 1 a verdict failed, 2 usage or
configuration error, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import traceback
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__
from .liealg import (
    InvariantError,
    LieAlgebraData,
    MissingWeightsError,
    NotSimpleError,
    Representation,
    SchemaError,
    UnsupportedAlgebraError,
    adjoint_casimir_eigenvalue,
    build_algebra,
    check_algebra,
    check_representation,
    chevalley_check,
    from_json,
    supported_labels,
    to_json,
    verify_presentation,
)
from .pbw import NCPoly
from .rational import q, qstr
from .sugawara import (
    AffineTakiff,
    Pi,
    Theta,
    completeness_certificate,
    critical_level,
    fit_level,
    verify_sugawara,
)
from .takiff import (
    INVARIANT_DEGREES,
    TakiffAlgebra,
    center_generators,
    independence_certificate,
    pfaffian_coeffs,
    theta,
    verify_central,
)

PASS, FAIL, USAGE, INTERNAL = 0, 1, 2, 3

COMMANDS = ("build", "verify-presentation", "central", "pfaffian", "independence",
            "sugawara", "completeness", "chevalley")

# known-negative facts that --expect turns into assertions
EXPECTATIONS = {
    "central": ("band-sharpness",),
    "pfaffian": ("band-sharpness",),
    "sugawara": ("ell-zero-failure",),
}

EXCERPT = 40  # terms of a witness polynomial written to a report


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    type_label: str | None = None
    algebra_path: str | None = None
    ell: int = 1
    m_list: list = field(default_factory=list)
    level: str = "critical"
    seed: int = 0
    max_s: int = 1
    output_path: str | None = None
    expect: list = field(default_factory=list)
    timings: bool = False

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if (self.type_label is None) == (self.algebra_path is None):
            raise UsageError("give exactly one of --type and --algebra")
        if self.ell < 0:
            raise UsageError("--ell must be >= 0")
        if any(m < 1 for m in self.m_list):
            raise UsageError("--m values must be >= 1")
        if not 0 <= self.seed < 2 ** 64:
            raise UsageError("--seed must be a 64-bit unsigned integer")
        if not 0 <= self.max_s <= 2:
            raise UsageError("--max-s must be 0, 1 or 2")
        if self.level != "critical":
            try:
                q(self.level)
            except (ValueError, TypeError, ZeroDivisionError) as exc:
                raise UsageError(f"--level must be 'critical' or a rational p/q: {exc}") from None
        allowed = EXPECTATIONS.get(self.command, ())
        for e in self.expect:
            if e not in allowed:
                raise UsageError(f"--expect {e!r} is not available for {self.command}"
                                 + (f" (choose from {', '.join(allowed)})" if allowed else ""))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="takiff", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("command", choices=COMMANDS)
    src = p.add_argument_group("algebra")
    src.add_argument("--type", dest="type_label", help=f"built-in algebra ({supported_labels()})")
    src.add_argument("--algebra", dest="algebra_path", help="JSON algebra document to ingest")
    p.add_argument("--ell", type=int, default=1, help="truncation degree (default 1)")
    p.add_argument("--m", dest="m_list", type=int, nargs="+", default=[],
                   help="trace powers (default: the invariant degrees of the type)")
    p.add_argument("--level", default="critical", help="'critical' or an exact rational p/q")
    p.add_argument("--seed", type=int, default=0, help="seed for random evaluation points")
    p.add_argument("--max-s", type=int, default=1, help="translation depth for completeness (0..2)")
    p.add_argument("--output", "-o", dest="output_path", help="report path (default stdout)")
    p.add_argument("--expect", action="append", default=[],
                   help="assert a known negative result (band-sharpness, ell-zero-failure)")
    p.add_argument("--timings", action="store_true", help="record wall-clock timings in the report")
    return p


# -- helpers ----------------------------------------------------------------------------


def ingest_algebra(path: str | Path) -> tuple[LieAlgebraData, Representation]:
    """Load and fully validate an algebra document."""
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    return from_json(doc, validate=True)


def poly_excerpt(p: NCPoly, limit: int = EXCERPT) -> dict:
    terms = p.to_json()
    out = {"terms": len(terms), "poly": terms[:limit]}
    if len(terms) > limit:
        out["truncated"] = True
    return out


def _key_json(space, key: int) -> list:
    g = space.gen(key)
    return [g.index, g.degree, g.mode]


class _Clock:
    def __init__(self):
        self.marks: dict = {}

    def __call__(self, name: str):
        clock = self

        class _Span:
            def __enter__(self):
                self.t = time.perf_counter()

            def __exit__(self, *exc):
                clock.marks[name] = clock.marks.get(name, 0.0) + time.perf_counter() - self.t

        return _Span()


def _degrees(alg: LieAlgebraData, cfg: RunConfig, drop_pfaffian: bool = True) -> list[int]:
    if cfg.m_list:
        return list(cfg.m_list)
    if alg.series not in INVARIANT_DEGREES:
        raise UsageError(f"{alg.label}: no default degrees, pass --m")
    degs = INVARIANT_DEGREES[alg.series](alg.rank)
    if alg.series == "D" and drop_pfaffian:
        degs = degs[:-1]
    return sorted(set(degs))


def _require_simple(alg: LieAlgebraData, what: str) -> None:
    if alg.series not in INVARIANT_DEGREES or alg.is_reductive:
        raise UsageError(f"{what} needs a simple classical base algebra, got {alg.label}")


# -- pipelines --------------------------------------------------------------------------


def _build(alg, rep, cfg, clock):
    with clock("invariants"):
        check_algebra(alg)
        check_representation(rep)
    with clock("adjoint"):
        ev = adjoint_casimir_eigenvalue(alg) if not alg.is_reductive else None
    ok = ev is None or ev == 2 * alg.dual_coxeter
    return ok, {
        "checks": ["algebra.invariants", "representation.homomorphism", "adjoint.eigenvalue"],
        "algebra": to_json(alg, rep),
        "adjoint_casimir_eigenvalue": None if ev is None else qstr(ev),
        "dual_coxeter": None if alg.dual_coxeter is None else qstr(alg.dual_coxeter),
        "eigenvalue_is_twice_dual_coxeter": ok,
    }


def _presentation(alg, rep, cfg, clock):
    with clock("residuals"):
        report = verify_presentation(alg, rep)
    return report.ok, {
        "checks": [f"presentation.{r.name}" for r in report.residuals],
        "residuals": [r.to_json() for r in report.residuals],
    }


def _band_rows(coeffs, tak, clock, label: str) -> list[dict]:
    """Centrality of every coefficient; only the band is expected central."""
    rows = []
    for r in sorted(coeffs.coeffs):
        x = coeffs[r]
        banded = r in coeffs.band
        with clock("centrality"):
            v = verify_central(x, tak) if x else None
        central = v is None or v.ok
        row = {"label": f"{label}^({r})", "r": r, "banded": banded, "terms": len(x),
               "central": central, "generators_checked": v.checked if v else 0}
        if v is not None and not v.ok:
            row["witness"] = v.witness_json(tak.space)
            row["witness"]["residual"] = poly_excerpt(v.witness[1])
        row["expected"] = "central" if banded else "non-central"
        row["as_expected"] = central == banded
        rows.append(row)
    return rows


def _central(alg, rep, cfg, clock):
    tak = TakiffAlgebra(alg, cfg.ell)
    sharp = "band-sharpness" in cfg.expect
    ok, blocks = True, []
    for m in _degrees(alg, cfg):
        with clock("construction"):
            th = theta(tak, rep, m)
        rows = _band_rows(th, tak, clock, f"theta_{m}")
        # only the band is asserted unless band sharpness is expected
        good = all(r["as_expected"] for r in rows if r["banded"] or sharp)
        ok = ok and good
        blocks.append({"m": m, "band": [th.band.start, th.band.stop - 1], "elements": rows})
    checks = ["central.band"] + (["central.band-sharpness"] if sharp else [])
    return ok, {"checks": checks, "results": blocks}


def _pfaffian(alg, rep, cfg, clock):
    if alg.series != "D":
        raise UsageError(f"pfaffian needs a type D algebra, got {alg.label}")
    tak = TakiffAlgebra(alg, cfg.ell)
    sharp = "band-sharpness" in cfg.expect
    with clock("construction"):
        pf = pfaffian_coeffs(tak, rep)
    rows = _band_rows(pf, tak, clock, "pi")
    ok = all(r["as_expected"] for r in rows if r["banded"] or sharp)
    checks = ["pfaffian.band"] + (["pfaffian.band-sharpness"] if sharp else [])
    return ok, {"checks": checks, "band": [pf.band.start, pf.band.stop - 1], "elements": rows}


def _independence(alg, rep, cfg, clock):
    _require_simple(alg, "independence")
    tak = TakiffAlgebra(alg, cfg.ell)
    with clock("construction"):
        gens = center_generators(tak, rep)
    with clock("rank"):
        rank = independence_certificate([x for _, x in gens], cfg.seed)
    return rank.full, {
        "checks": ["independence.jacobian-rank"],
        "elements": [{"label": lab, "terms": len(x)} for lab, x in gens],
        "rank": rank.to_json(),
    }


def _level(aff_tak: TakiffAlgebra, cfg: RunConfig):
    if cfg.level == "critical":
        try:
            return critical_level(aff_tak)
        except NotSimpleError as exc:
            raise UsageError(f"{exc}; pass an explicit --level") from None
    return q(cfg.level)


def _sugawara(alg, rep, cfg, clock):
    tak = TakiffAlgebra(alg, cfg.ell)
    aff = AffineTakiff(tak, _level(tak, cfg))
    crit = None if alg.is_reductive or alg.dual_coxeter is None else critical_level(tak)
    vectors = []
    with clock("construction"):
        for m in _degrees(alg, cfg):
            th = Theta(aff, rep, m)
            vectors.extend((f"Theta_{m}^({r})", th[r]) for r in th.band)
        if alg.series == "D" and alg.rank >= 2:
            pf = Pi(aff, rep)
            vectors.extend((f"Pi^({r})", pf[r]) for r in pf.band)
    rows, all_zero = [], True
    for lab, v in vectors:
        with clock("annihilation"):
            verdict = verify_sugawara(v)
        with clock("level-fit"):
            fit = fit_level(v) if not alg.is_reductive else None
        row = {"label": lab, "terms": len(v.value), "annihilated": verdict.ok,
               "generators_checked": verdict.checked, "residual_norms": verdict.residual_counts()}
        if fit is not None:
            row["level_fit_F0[1]"] = fit.to_json()
        w = verdict.witness
        if w is not None:
            fam, (key, res) = w
            row["witness"] = {"family": fam, "generator": _key_json(aff.space, key),
                              "residual": poly_excerpt(res)}
        all_zero = all_zero and verdict.ok
        rows.append(row)
    expect_fail = "ell-zero-failure" in cfg.expect
    ok = (not all_zero) if expect_fail else all_zero
    checks = ["sugawara.annihilation", "sugawara.level-fit"]
    if expect_fail:
        checks.append("sugawara.ell-zero-failure")
    return ok, {
        "checks": checks,
        "level": qstr(aff.level),
        "critical_level": None if crit is None else qstr(crit),
        "verdict": "Segal-Sugawara" if all_zero else "not annihilated",
        "vectors": rows,
    }


def _completeness(alg, rep, cfg, clock):
    _require_simple(alg, "completeness")
    tak = TakiffAlgebra(alg, cfg.ell)
    aff = AffineTakiff.critical(tak)
    with clock("certificate"):
        rep_ = completeness_certificate(aff, rep, cfg.max_s, cfg.seed)
    return rep_.ok, {
        "checks": ["completeness.symbol-invariance", "completeness.jacobian-rank"],
        "level": qstr(aff.level),
        "critical_level": qstr(aff.level),
        "vectors": [{"label": lab, "invariant": inv} for lab, inv in zip(rep_.labels, rep_.invariant)],
        "defects": {lab: [_key_json(aff.space, k) for k in ks] for lab, ks in rep_.defects.items()},
        "rank": rep_.rank.to_json(),
    }


def _chevalley(alg, rep, cfg, clock):
    if rep.weights is None:
        raise UsageError(f"chevalley needs weight data on the representation of {alg.label}")
    rows, ok = [], True
    for m in _degrees(alg, cfg):
        with clock("restriction"):
            r = chevalley_check(alg, rep, m)
        ok = ok and r.equal
        rows.append({"m": m, "equal": r.equal, "restricted_symbol": r.restricted_symbol.to_json(),
                     "power_sum": r.power_sum.to_json()})
    return ok, {"checks": ["chevalley.restriction"], "results": rows}


PIPELINES = {
    "build": _build,
    "verify-presentation": _presentation,
    "central": _central,
    "pfaffian": _pfaffian,
    "independence": _independence,
    "sugawara": _sugawara,
    "completeness": _completeness,
    "chevalley": _chevalley,
}


def run(cfg: RunConfig) -> tuple[int, dict]:
    """Execute one pipeline; returns the exit code and the report."""
    report: dict = {"operation": cfg.command, "config": asdict(cfg), "version": __version__}
    try:
        cfg.validate()
    except UsageError as exc:
        report["error"] = {"class": "usage", "message": str(exc)}
        return USAGE, report
    clock = _Clock()
    try:
        with clock("load"):
            if cfg.algebra_path is not None:
                alg, rep = ingest_algebra(cfg.algebra_path)
            else:
                alg, rep = build_algebra(cfg.type_label)
        report["inputs"] = {"type": alg.label, "ell": cfg.ell, "m": cfg.m_list, "seed": cfg.seed,
                            "N": rep.N, "dim": alg.dim}
        ok, body = PIPELINES[cfg.command](alg, rep, cfg, clock)
    except (UsageError, UnsupportedAlgebraError, SchemaError, MissingWeightsError) as exc:
        report["error"] = {"class": "usage", "message": str(exc)}
        return USAGE, report
    except InvariantError as exc:
        report["error"] = {"class": "invariant", "message": str(exc), "witness": _jsonable(exc.witness)}
        report["passed"] = False
        return FAIL, report
    except Exception as exc:  # noqa: BLE001 - reported as an internal failure
        report["error"] = {"class": "internal", "type": type(exc).__name__, "message": str(exc),
                           "traceback": traceback.format_exc().splitlines()[-6:]}
        return INTERNAL, report
    report.update(body)
    report["expectations"] = list(cfg.expect)
    report["passed"] = ok
    if cfg.timings:
        report["timings"] = {k: f"{v:.3f}" for k, v in sorted(clock.marks.items())}
    return (PASS if ok else FAIL), report


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def render(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(**vars(ns))
    code, report = run(cfg)
    text = render(report)
    if cfg.output_path:
        Path(cfg.output_path).write_text(text)
    else:
        sys.stdout.write(text)
    if code == USAGE:
        print(f"takiff: error: {report['error']['message']}", file=sys.stderr)
    elif code == INTERNAL:
        print(f"takiff: internal error: {report['error']['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
