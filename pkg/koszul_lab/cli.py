#!/usr/bin/env python3
"""
koszul-lab command line.

    koszul-lab present      --graph k3.txt | --builtin gr-k3 [--dual]
    koszul-lab complete     --builtin k3 --order c,b,e,f,a,d --cap 3 --out k3.rules
    koszul-lab hilbert      --builtin k3 | --system k3.rules | --patterns "cef, ef*b" --builtin gr-k3
    koszul-lab koszul       --builtin gr-k3 --nmax 5
    koszul-lab verify-paper [--nmax 4] [--strict-paper]

Exit codes: 0 pass, 1 check failure, 2 input error.
"""

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from .algebra.fields import field_from_name
from .config.runtime import update_settings
from .config.settings import DEFAULT_CONFIG, EngineConfig
from .counting.automaton import build_automaton, counts, parse_patterns, render_patterns
from .counting.series import fit_recurrence
from .errors import INPUT_ERRORS, CompletionError, KoszulLabError, PresentationError, RecurrenceFitError
from .models.convert import certificate_report, completion_log, series_report
from .models.reports import RunConfig
from .presentations.builtins import GRAPH_PREFIX, resolve_source
from .presentations.document import ResolvedSource, dump_text, presentation_to_document
from .presentations.graphs import load_graph, qn_graph_presentation
from .quadratic.certificate import MODES, koszul_certificate
from .quadratic.dual import quadratic_dual
from .rewrite.completion import complete, conjecture_family, forbidden_patterns
from .rewrite.serialize import dump_system, load_system
from .utils.logger import RunLogger, emit
from .utils.paths import resolve_path, set_data_dir
from .verify.paper import render_table, verify_paper

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def build_parser(config: EngineConfig = DEFAULT_CONFIG) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="rational",
                        help="rational | cyclotomic | prime | prime:<p> (default: rational)")
    common.add_argument("--out", help="Write the payload here instead of stdout")
    common.add_argument("--verbose", action="store_true", help="Print progress lines on stderr")
    common.add_argument("--log-dir", help=f"Run log directory (default: {config.logs_dir})")

    source = argparse.ArgumentParser(add_help=False)
    group = source.add_mutually_exclusive_group()
    group.add_argument("--builtin", help="k3, gr-k3 (ch-k3), free3, nonkoszul3 or qn-graph:<path>")
    group.add_argument("--graph", help="Graph file: 'n=3; 1-2 1-3 2-3' or JSON")
    group.add_argument("--presentation", help="Presentation document (.json or text)")

    parser = argparse.ArgumentParser(prog="koszul-lab", description="Exact computations for quadratic algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("present", parents=[common, source], help="Write a canonical presentation")
    p.add_argument("--dual", action="store_true", help="Write the quadratic dual presentation instead")

    p = sub.add_parser("complete", parents=[common, source], help="Complete relations to a degree cap")
    p.add_argument("--order", help="Generator precedence, highest first (c,b,e,f,a,d or c>b>e>f>a>d)")
    p.add_argument("--cap", type=int, default=config.default_cap)

    p = sub.add_parser("hilbert", parents=[common, source], help="Count normal words and fit the series")
    p.add_argument("--order")
    p.add_argument("--cap", type=int, default=config.default_cap)
    p.add_argument("--system", help="Completed rewrite system file (from complete --out)")
    p.add_argument("--patterns", help="Explicit forbidden patterns, e.g. 'cef, cd, ef*b'")
    p.add_argument("--nmax", type=int, default=config.hilbert_terms, help="Highest length counted")

    p = sub.add_parser("koszul", parents=[common, source], help="Distributive-triple certificate")
    p.add_argument("--nmax", type=int, default=config.default_nmax)
    p.add_argument("--mode", choices=MODES)

    p = sub.add_parser("verify-paper", parents=[common], help="Recompute every published K_3 value")
    p.add_argument("--nmax", type=int, default=config.default_nmax)
    p.add_argument("--strict-paper", action="store_true", help="Treat printed-value mismatches as failures")

    return parser


def _source_text(args) -> Optional[str]:
    if getattr(args, "graph", None):
        return f"graph:{args.graph}"
    if getattr(args, "presentation", None):
        return str(resolve_path(args.presentation))
    builtin = getattr(args, "builtin", None)
    if builtin and builtin.startswith(GRAPH_PREFIX):
        return GRAPH_PREFIX + str(resolve_path(builtin[len(GRAPH_PREFIX):]))
    return builtin


def _resolve(args, cfg: RunConfig) -> ResolvedSource:
    field = field_from_name(cfg.field, args.engine.default_prime)
    if cfg.source is None:
        raise PresentationError("no presentation given; use --builtin, --graph or --presentation")
    if cfg.source.startswith("graph:"):
        path = resolve_path(cfg.source[len("graph:"):])
        graph = load_graph(path)
        return ResolvedSource(qn_graph_presentation(graph, name=path.stem).over(field))
    return resolve_source(cfg.source, field)


def _emit_payload(text: str, cfg: RunConfig, logger: RunLogger) -> None:
    if cfg.out:
        path = Path(cfg.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text)
        logger.record_output(path)
    else:
        sys.stdout.write(text)


def cmd_present(args, cfg: RunConfig, logger: RunLogger) -> int:
    logger.start_step()
    resolved = _resolve(args, cfg)
    presentation = resolved.presentation.canonical()
    if args.dual:
        presentation = quadratic_dual(presentation).result
    if cfg.out and cfg.out.endswith(".json"):
        text = json.dumps(presentation_to_document(presentation, resolved.order), indent=2) + "\n"
    else:
        text = dump_text(presentation, resolved.order)
    logger.log_step("present", "ok", f"{presentation.size} generators, {len(presentation.relations)} relations")
    _emit_payload(text, cfg, logger)
    return EXIT_PASS


def cmd_complete(args, cfg: RunConfig, logger: RunLogger) -> int:
    resolved = _resolve(args, cfg)
    order = resolved.monomial_order(cfg.order)
    logger.start_step()
    try:
        system = complete(resolved.presentation, order, cfg.cap, args.engine.max_rules)
    except CompletionError as e:
        logger.log_step("complete", "fail", str(e))
        print(f"completion failed: {e}", file=sys.stderr)
        return EXIT_FAIL
    logger.log_step("complete", "ok", f"{len(system)} rules, {len(system.unresolved)} unresolved above cap")
    _emit_payload(dump_system(system), cfg, logger)

    families = render_patterns(conjecture_family(system), system.generators)
    report = completion_log(system, resolved.presentation.name, families)
    text = report.model_dump_json(indent=2) + "\n"
    if cfg.out:
        path = Path(cfg.out).with_suffix(".ambiguities.json")
        path.write_text(text)
        logger.record_output(path)
    return EXIT_PASS


def _hilbert_patterns(args, cfg: RunConfig, logger: RunLogger):
    """(generators, forbidden patterns, source description)."""
    if args.system:
        system = load_system(resolve_path(args.system).read_text())
        return system.generators, forbidden_patterns(system), args.system
    resolved = _resolve(args, cfg)
    gens = resolved.presentation.generators
    if cfg.patterns is not None:
        return gens, parse_patterns(cfg.patterns, gens), cfg.source
    logger.start_step()
    system = complete(resolved.presentation, resolved.monomial_order(cfg.order), cfg.cap,
                      args.engine.max_rules)
    if system.unresolved:
        emit("COUNT", f"{len(system.unresolved)} ambiguities above cap {cfg.cap}; counts beyond it are conjectural")
    logger.log_step("complete", "ok", f"{len(system)} rules")
    return gens, forbidden_patterns(system), cfg.source


def cmd_hilbert(args, cfg: RunConfig, logger: RunLogger) -> int:
    gens, patterns, source = _hilbert_patterns(args, cfg, logger)
    logger.start_step()
    aut = build_automaton(len(gens), patterns)
    values = counts(aut, cfg.n_max)
    rendered = render_patterns(patterns, gens)
    try:
        fit = fit_recurrence(values, max(0, (len(values) - 2) // 2))
    except (RecurrenceFitError, ValueError) as e:
        logger.log_step("fit", "fail", str(e))
        _emit_payload(series_report(source, rendered, values, None, str(e)).model_dump_json(indent=2) + "\n",
                      cfg, logger)
        return EXIT_FAIL
    logger.log_step("fit", "ok", f"order {fit.order}, offset {fit.offset}")
    _emit_payload(series_report(source, rendered, values, fit).model_dump_json(indent=2) + "\n", cfg, logger)
    return EXIT_PASS


def cmd_koszul(args, cfg: RunConfig, logger: RunLogger) -> int:
    resolved = _resolve(args, cfg)
    logger.start_step()
    result = koszul_certificate(resolved.presentation, cfg.n_max, cfg.mode)
    logger.log_step("certificate", "ok" if result.passed else "fail", result.summary())
    report = certificate_report(result, resolved.presentation.field.descriptor())
    _emit_payload(report.model_dump_json(indent=2, by_alias=True) + "\n", cfg, logger)
    return EXIT_PASS if result.passed else EXIT_FAIL


def cmd_verify_paper(args, cfg: RunConfig, logger: RunLogger) -> int:
    logger.start_step()
    report = verify_paper(cfg.n_max, cfg.field, cfg.strict_paper, args.engine)
    summary = ", ".join(f"{count} {status}" for status, count in report.summary.items() if count)
    logger.log_step("verify-paper", "ok" if report.exit_code == 0 else "fail", summary)
    print(render_table(report.checks))
    print(f"\n{summary}")
    if cfg.out:
        path = Path(cfg.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(report.model_dump_json(indent=2) + "\n")
        logger.record_output(path)
    return report.exit_code


COMMANDS = {
    "present": cmd_present,
    "complete": cmd_complete,
    "hilbert": cmd_hilbert,
    "koszul": cmd_koszul,
    "verify-paper": cmd_verify_paper,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point for CLI."""
    config = EngineConfig.from_env()
    set_data_dir(config.data_dir)
    parser = build_parser(config)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_PASS
    args.engine = config

    try:
        cfg = RunConfig(
            command=args.command,
            source=_source_text(args),
            order=getattr(args, "order", None),
            cap=getattr(args, "cap", config.default_cap),
            n_max=getattr(args, "nmax", config.default_nmax),
            field=args.field,
            out=args.out,
            mode=getattr(args, "mode", None),
            patterns=getattr(args, "patterns", None),
            strict_paper=getattr(args, "strict_paper", False),
            verbose=args.verbose,
        )
    except ValidationError as e:
        print(f"invalid arguments: {e}", file=sys.stderr)
        return EXIT_INPUT

    update_settings({"verbose": cfg.verbose})
    logs_dir = Path(args.log_dir) if args.log_dir else config.logs_dir
    logger = RunLogger(logs_dir, cfg.command, cfg.model_dump())

    try:
        code = COMMANDS[cfg.command](args, cfg, logger)
    except INPUT_ERRORS as e:
        print(f"input error: {e}", file=sys.stderr)
        code = EXIT_INPUT
    except KoszulLabError as e:
        print(f"error: {e}", file=sys.stderr)
        code = EXIT_FAIL
    logger.end_run(code)
    return code


if __name__ == "__main__":
    sys.exit(main())
