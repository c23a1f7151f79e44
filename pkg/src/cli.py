"""Command-line front end: resolvent, invariants, verify and modular commands."""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, TextIO

import structlog

from src.config import get_default_search_limit, get_verify_default_seed
from src.errors.report_error import (
    EXIT_INPUT_ERROR,
    EXIT_OK,
    error_envelope,
    exit_status_for,
    map_error_type,
)
from src.handlers.common import SHEAF_CHOICES
from src.handlers.invariants import handle_invariants
from src.handlers.modular import handle_modular, handle_search
from src.handlers.resolvent import handle_resolvent
from src.handlers.verify import handle_conjugate, handle_stickelberger, handle_trace
from src.mapping.report_encoding import render_payload, render_report
from src.observability.context import invocation_context
from src.observability.logging import configure_logging, logging_enabled
from src.schema.report import Report

logger = structlog.get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="obstructions",
        description="Equivariant Euler-characteristic obstructions of tame cyclic covers.",
    )
    parser.add_argument(
        "--timing", action="store_true", help="add wall-clock timing to the report"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    resolvent = commands.add_parser("resolvent", help="resolvent divisor of one sheaf and character")
    resolvent.add_argument("cover_file")
    resolvent.add_argument("--sheaf", choices=SHEAF_CHOICES, default="structure")
    character = resolvent.add_mutually_exclusive_group()
    character.add_argument("--character", type=int, metavar="A")
    character.add_argument("--raw-exponents", metavar="ID=N,...")

    invariants = commands.add_parser("invariants", help="T invariants and Euler differences")
    invariants.add_argument("cover_file")
    invariants.add_argument("--sheaf", choices=SHEAF_CHOICES, default="canonical")
    invariants.add_argument("--all-characters", action="store_true")
    invariants.add_argument("--character", type=int, metavar="A")

    verify = commands.add_parser("verify", help="run an identity suite")
    suite = verify.add_mutually_exclusive_group(required=True)
    suite.add_argument(
        "--stickelberger-identities",
        "--lemma-6-3",
        dest="stickelberger_identities",
        action="store_true",
    )
    suite.add_argument(
        "--conjugate-identities",
        "--corollary-3-8",
        dest="conjugate_identities",
        action="store_true",
    )
    suite.add_argument(
        "--trace-factorization",
        "--eq-5-3",
        dest="trace_factorization",
        nargs=4,
        type=int,
        metavar=("L", "S", "T", "U"),
    )
    verify.add_argument("--l-range", default="5..199", metavar="A..B")
    verify.add_argument("--random", type=int, default=1000, metavar="N")
    verify.add_argument("--seed", type=int, default=None, metavar="S")

    modular = commands.add_parser("modular", help="class report or prime search for the modular family")
    modular.add_argument("--p", type=int, metavar="P")
    modular.add_argument("--l", type=int, required=True, metavar="L")
    modular.add_argument("--search", action="store_true")
    modular.add_argument("--limit", type=int, metavar="N")
    modular.add_argument(
        "--strict-predicate",
        "--strict-paper-predicate",
        dest="strict_predicate",
        action="store_true",
    )
    modular.add_argument("--emit-cover", metavar="PATH")
    return parser


def _dispatch(args: argparse.Namespace) -> Report:
    if args.command == "resolvent":
        return handle_resolvent(
            args.cover_file, args.sheaf, args.character, args.raw_exponents
        )
    if args.command == "invariants":
        return handle_invariants(
            args.cover_file, args.sheaf, args.character, args.all_characters
        )
    if args.command == "verify":
        if args.stickelberger_identities:
            return handle_stickelberger(args.l_range)
        if args.conjugate_identities:
            seed = get_verify_default_seed() if args.seed is None else args.seed
            return handle_conjugate(args.random, seed)
        return handle_trace(*args.trace_factorization)
    if args.search:
        limit = get_default_search_limit() if args.limit is None else args.limit
        return handle_search(args.l, limit, strict=args.strict_predicate)
    if args.p is None:
        raise ValueError("modular needs --p unless --search is given")
    return handle_modular(args.p, args.l, emit_cover=args.emit_cover)


def _exit_status(report: Report) -> int:
    if report.command == "invariants" and not report.verdicts.get("integral", True):
        return EXIT_INPUT_ERROR
    return EXIT_OK


def main(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    out = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    configure_logging()

    with invocation_context(args.command) as context:
        try:
            report = _dispatch(args)
        except (ValueError, RuntimeError) as exc:
            status = exit_status_for(exc)
            if logging_enabled():
                logger.info(
                    "command_failed",
                    error_type=map_error_type(exc),
                    exit_status=status,
                    duration_ms=context.duration_ms(),
                )
            out.write(render_payload(error_envelope(exc)))
            return status

        if args.timing:
            report = report.model_copy(update={"timing": {"duration_ms": context.duration_ms()}})
        status = _exit_status(report)
        if logging_enabled():
            logger.info(
                "command_completed",
                exit_status=status,
                duration_ms=context.duration_ms(),
            )
        out.write(render_report(report))
        return status
