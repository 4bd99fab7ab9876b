# src/hecke_spectra/cli/job_runner.py
"""
Command-line front end: ``hecke-spectra <command> <jobfile> [flags]``.

Exit status 0 on success, 1 on a mathematical failure, 2 on bad input.
"""
import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

from ..algebra.factored import RationalMonomial, ratio_class
from ..algebra.units import TorusPoint, as_fraction, fraction_str
from ..degrees.volumes import cuspidal_fdeg
from ..errors import HeckeSpectraError, InternalInvariantViolation, InvalidParameter, JobFileError, NonIntegralGrading
from ..langlands.gamma import adjoint_L, gamma0, hii_fdeg, relative_gamma0
from ..langlands.parameters import param_from_residual_point, sl2_isotypics
from ..models.job_spec import JobSpec, MapSection, load_job, resolve_cuspidal
from ..spectral.hecke_spec import HeckeSpec
from ..spectral.mu import mu
from ..spectral.residual import (enumerate_residual_cosets, enumerate_residual_points, formal_degree,
                                 formal_degree_magnitude, m_r)
from ..stm.discovery import search_stms
from ..stm.spectral_map import SpectralMap, compose, describe
from ..stm.verify import verify_stm
from ..utils.workers import check_threads
from .report_logger import ReportLogger

_logger = logging.getLogger(__name__)

SIMPLE_COMMANDS = ("residual", "mu", "mres", "fdeg", "gamma", "match")
STM_COMMANDS = ("verify", "discover", "compose")


class JobContext:
    """A parsed jobfile with its algebra sections built on demand."""

    def __init__(self, job: JobSpec, log: ReportLogger, progress: bool = False, threads: int = 1):
        self.job = job
        self.log = log
        self.progress = progress
        self.threads = threads
        self._specs: Dict[str, HeckeSpec] = {}

    def spec(self, name: str) -> HeckeSpec:
        if name not in self._specs:
            section = self.job.algebras[name]
            self.log.log_section(f"algebras.{name}", section.model_dump())
            self._specs[name] = section.build()
        return self._specs[name]

    def main_spec(self) -> HeckeSpec:
        return self.spec(self.job.algebra_name())

    def built_specs(self) -> List[HeckeSpec]:
        return list(self._specs.values())

    def build_map(self, name: str) -> SpectralMap:
        section: MapSection = self.job.maps[name]
        self.log.log_section(f"maps.{name}", section.model_dump())
        source, target = self.spec(section.source), self.spec(section.target)
        coset = section.coset(target)
        base = section.base.to_point() if section.base else TorusPoint.trivial(coset.dim)
        return SpectralMap(source, target, coset, tuple(tuple(r) for r in section.B), base)

    def points(self, spec: HeckeSpec) -> List[TorusPoint]:
        if self.job.options.point is not None:
            return [self.job.options.point.to_point()]
        return [c.point for c in enumerate_residual_points(spec, self.progress, self.threads)]


# --- Commands ---

def run_residual(ctx: JobContext):
    spec = ctx.main_spec()
    ctx.log.log_text(f"Residual cosets of {spec.name}:")
    for coset in enumerate_residual_cosets(spec, ctx.job.options.parabolic, ctx.progress, ctx.threads):
        cert = coset.certificate
        ctx.log.log_row("residual_coset", f"  J={list(coset.subset)} r_L={coset.point} dim={coset.dim} "
                                          f"poles={cert.poles} zeros={cert.zeros}", **coset.to_dict())


def run_mu(ctx: JobContext):
    spec = ctx.main_spec()
    value = mu(spec)
    ctx.log.log_row("mu", f"mu({spec.name}) = {value}", algebra=spec.name, mu=str(value))


def run_mres(ctx: JobContext):
    spec = ctx.main_spec()
    for point in ctx.points(spec):
        value = m_r(spec, point)
        ctx.log.log_row("m_r", f"m_r at {point} = {value}", point=point.to_dict(), m_r=str(value))


def run_fdeg(ctx: JobContext):
    options = ctx.job.options
    if options.cuspidal is not None:
        datum = resolve_cuspidal(options.cuspidal)
        value = cuspidal_fdeg(datum)
        ctx.log.log_row("cuspidal_fdeg", f"fdeg({datum.label}) = {value}", datum=datum.to_dict(), fdeg=str(value))
        return
    spec = ctx.main_spec()
    for point in ctx.points(spec):
        value = formal_degree(spec, point, as_fraction(options.d_h_delta))
        ctx.log.log_row("fdeg", f"fdeg at {point} = {value}", point=point.to_dict(), fdeg=str(value),
                        magnitude=str(value.magnitude()))


def run_gamma(ctx: JobContext):
    names = ctx.job.options.parameters or sorted(ctx.job.parameters)
    if not names:
        raise JobFileError("The gamma command needs at least one parameter section.")
    for name in names:
        section = ctx.job.parameters[name]
        ctx.log.log_section(f"parameters.{name}", section.model_dump())
        p = section.build(ctx.spec(section.algebra))
        gamma = gamma0(p)
        row = {"parameter": name, "param": p.to_dict(), "isotypics": sl2_isotypics(p).to_dict(),
               "L": str(adjoint_L(p)), "gamma0": gamma.to_dict()}
        text = f"{name}: gamma(0) = {gamma.at_zero} (order {gamma.order})"
        if gamma.order == 0:
            row["hii_fdeg"] = str(hii_fdeg(p, section.enhancement()))
            text += f", HII degree {row['hii_fdeg']}"
        if p.levi is not None:
            row["relative_gamma0"] = relative_gamma0(p).to_dict()
        ctx.log.log_row("gamma", text, **row)


def run_match(ctx: JobContext):
    spec = ctx.main_spec()
    ctx.log.log_text(f"gamma <-> mu on the residual points of {spec.name}:")
    for coset in enumerate_residual_points(spec, ctx.progress, ctx.threads):
        fdeg = formal_degree_magnitude(spec, coset.point)
        row = {"point": coset.point.to_dict(), "fdeg": str(fdeg)}
        try:
            gamma = gamma0(param_from_residual_point(spec, coset.point))
        except NonIntegralGrading as e:
            ctx.log.log_row("match", f"  {coset.point}: no sl2 grading", **row, status="non_integral", error=str(e))
            continue
        if gamma.order != 0:
            raise InternalInvariantViolation(f"gamma(0) vanishes at the residual point {coset.point}.")
        ratio = ratio_class(fdeg, gamma.value.magnitude())
        row.update(gamma0=str(gamma.value), ratio=ratio.to_dict())
        status = "rational" if isinstance(ratio, RationalMonomial) else "mismatch"
        ctx.log.log_row("match", f"  {coset.point}: {ratio}", **row, status=status)


def run_stm_verify(ctx: JobContext):
    name = ctx.job.options.map or _only(ctx.job.maps, "map")
    m = ctx.build_map(name)
    verdict = verify_stm(m, ctx.job.options.check_witnesses)
    ctx.log.log_row("stm_verify", f"{describe(m)}: {verdict.status}, D = {fraction_str(verdict.d)}"
                    + ("" if verdict.is_verified else f", v-exponent {fraction_str(verdict.v_exp)}"),
                    map=m.to_dict(), verification=verdict.to_dict())


def run_stm_discover(ctx: JobContext, bound: Optional[int] = None):
    options = ctx.job.options
    if options.source is None or options.target is None:
        raise JobFileError("stm discover needs options.source and options.target.")
    source, target = ctx.spec(options.source), ctx.spec(options.target)
    bound = options.bound if bound is None else bound
    report = search_stms(source, target, bound, options.phase_bound, options.search_limit,
                         ctx.progress, ctx.threads)
    ctx.log.log_text(f"{report.candidates} candidates, {len(report.maps)} maps, "
                     f"{len(report.near_misses)} near misses")
    for m, verdict in report.maps:
        ctx.log.log_row("stm", f"  {describe(m)}: D = {fraction_str(verdict.d)}",
                        map=m.to_dict(), verification=verdict.to_dict())
    for m, verdict in report.near_misses:
        ctx.log.log_row("near_miss", f"  near miss {describe(m)}: D = {fraction_str(verdict.d)} "
                                     f"v^{fraction_str(verdict.v_exp)}",
                        map=m.to_dict(), verification=verdict.to_dict())


def run_stm_compose(ctx: JobContext):
    options = ctx.job.options
    if options.outer is None or options.inner is None:
        raise JobFileError("stm compose needs options.outer and options.inner.")
    outer, inner = ctx.build_map(options.outer), ctx.build_map(options.inner)
    composite = compose(outer, inner)
    d_outer, d_inner, d_comp = verify_stm(outer), verify_stm(inner), verify_stm(composite)
    expected = d_outer.d * d_inner.d
    if d_comp.d != expected or d_comp.v_exp != d_outer.v_exp + d_inner.v_exp:
        raise InternalInvariantViolation(f"D of the composite is {d_comp.d}, expected {expected}.")
    ctx.log.log_row("stm_compose", f"{describe(composite)}: D = {fraction_str(d_comp.d)} "
                                   f"= {fraction_str(d_outer.d)} * {fraction_str(d_inner.d)}",
                    map=composite.to_dict(), verification=d_comp.to_dict(),
                    outer=d_outer.to_dict(), inner=d_inner.to_dict())


def _only(sections: Dict, kind: str) -> str:
    if len(sections) != 1:
        raise JobFileError(f"Name the {kind} to use in options.{kind}.", available=sorted(sections))
    return next(iter(sections))


COMMAND_TABLE: Dict[str, Callable[[JobContext], None]] = {
    "residual": run_residual,
    "mu": run_mu,
    "mres": run_mres,
    "fdeg": run_fdeg,
    "gamma": run_gamma,
    "match": run_match,
    "stm verify": run_stm_verify,
    "stm compose": run_stm_compose,
}


# --- Entry point ---

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("jobfile", type=str, help="Path to the JSON jobfile.")
    common.add_argument("--json", type=str, default=None, metavar="PATH", help="Write the structured report here.")
    common.add_argument("--threads", type=int, default=1, help="Worker processes for enumeration and discovery.")
    common.add_argument("--bound", type=int, default=None, help="Entry bound for STM discovery (overrides the jobfile).")
    common.add_argument("--ledger", action="store_true", help="Print the convention ledger in use.")
    common.add_argument("--quiet", action="store_true", help="Disable progress bars.")
    common.add_argument("--log-level", type=str, default="WARNING",
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Logging level.")

    parser = argparse.ArgumentParser(prog="hecke-spectra",
                                     description="Exact spectral data of affine Hecke algebras.")
    commands = parser.add_subparsers(dest="command", required=True)
    for name in SIMPLE_COMMANDS:
        commands.add_parser(name, parents=[common], help=f"Run the {name} computation.")
    stm = commands.add_parser("stm", help="Spectral transfer maps.")
    stm_commands = stm.add_subparsers(dest="stm_command", required=True)
    for name in STM_COMMANDS:
        stm_commands.add_parser(name, parents=[common], help=f"stm {name}")
    return parser


def run(command: str, jobfile: str, log: ReportLogger, progress: bool = False, bound: Optional[int] = None,
        show_ledger: bool = False, threads: int = 1) -> int:
    """Runs one command on a jobfile into ``log``; returns the exit status."""
    try:
        check_threads(threads)
        job = load_job(jobfile)
        if job.command is not None and job.command != command:
            _logger.warning("Jobfile %s declares command %r; running %r.", jobfile, job.command, command)
        ctx = JobContext(job, log, progress, threads)
        if command == "stm discover":
            run_stm_discover(ctx, bound)
        elif command in COMMAND_TABLE:
            COMMAND_TABLE[command](ctx)
        else:
            raise InvalidParameter(f"Unknown command {command!r}.")
        if show_ledger and ctx.built_specs():
            spec = ctx.built_specs()[0]
            log.log_ledger(spec.ledger.to_dict())
            for key, value in spec.ledger.to_dict().items():
                log.log_text(f"ledger.{key} = {value}")
    except HeckeSpectraError as e:
        _logger.debug("Command %s failed", command, exc_info=True)
        log.log_error(e)
    return log.exit_status


def main_cli(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level), format="%(levelname)s %(name)s: %(message)s")
    command = args.command if args.command != "stm" else f"stm {args.stm_command}"

    log = ReportLogger(command, args.jobfile)
    status = run(command, args.jobfile, log, progress=not args.quiet, bound=args.bound, show_ledger=args.ledger,
                 threads=args.threads)
    for line in log.lines:
        print(line, file=sys.stderr if line.startswith("error:") else sys.stdout)
    if args.json:
        log.write_json(args.json)
    return status


if __name__ == "__main__":
    sys.exit(main_cli())
