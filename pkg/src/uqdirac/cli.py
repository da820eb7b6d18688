"""Command-line entry point: ``verify``, ``cohomology`` and ``center``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 term-count limit exceeded (see ``UQDIRAC_MAX_TERMS``).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .cohomology import (SCHEMA_VERSION, DiracCohomologyReport, InfinitesimalCharacterResult,
                         dirac_cohomology, infinitesimal_character_check)
from .errors import (DivisionByZero, InvalidParameter, NotCentral, NotInfinitesimalCharacter,
                     ParseError, RelationCheckFailed, SpecializationPole, TermLimitExceeded)
from .repmod import GradedWindowModule, is_irreducible, make_verma, parse_descriptor
from .scalars import FieldMode
from .tensoralg import verification_suite, zeta
from .uq import hc_gamma, hc_mu, is_central, parse_uq
from .verification import Verification

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# report records

@dataclass(frozen=True)
class VerifyReport:
    mode: dict
    records: tuple
    schemaVersion: int = SCHEMA_VERSION

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.records)

    def to_dict(self) -> dict:
        return {"schemaVersion": self.schemaVersion, "command": "verify", "mode": dict(self.mode),
                "ok": self.ok, "records": [r.to_dict() for r in self.records]}

    @classmethod
    def from_dict(cls, d: dict) -> "VerifyReport":
        return cls(dict(d["mode"]), tuple(Verification.from_dict(r) for r in d["records"]),
                   d.get("schemaVersion", SCHEMA_VERSION))

    def to_table(self) -> str:
        lines = [f"mode: {self.mode['tag']}" + _p_suffix(self.mode)]
        width = max(len(r.name) for r in self.records) if self.records else 0
        for r in self.records:
            line = f"{'PASS' if r.ok else 'FAIL'}  {r.name.ljust(width)}"
            if not r.ok:
                line += f"  difference: {r.difference}"
            lines.append(line)
        passed = sum(r.ok for r in self.records)
        lines.append(f"{passed}/{len(self.records)} identities hold")
        return "\n".join(lines)


@dataclass(frozen=True)
class CohomologyRun:
    report: DiracCohomologyReport
    irreducible: dict | None
    infinitesimalCharacter: dict
    schemaVersion: int = SCHEMA_VERSION

    @property
    def ok(self) -> bool:
        return self.infinitesimalCharacter.get("ok", True) is not False

    def to_dict(self) -> dict:
        return {"schemaVersion": self.schemaVersion, "command": "cohomology",
                "report": self.report.to_dict(), "irreducible": self.irreducible,
                "infinitesimalCharacter": self.infinitesimalCharacter}

    @classmethod
    def from_dict(cls, d: dict) -> "CohomologyRun":
        return cls(DiracCohomologyReport.from_dict(d["report"]), d.get("irreducible"),
                   dict(d["infinitesimalCharacter"]), d.get("schemaVersion", SCHEMA_VERSION))

    def to_table(self) -> str:
        lines = [self.report.to_table()]
        if self.irreducible is not None:
            verdict = "irreducible" if self.irreducible["verdict"] else "reducible"
            lines.append(f"irreducibility: {verdict} ({self.irreducible['reason']})")
        ic = self.infinitesimalCharacter
        if "ok" in ic:
            lines.append(f"infinitesimal character: Cas_q = {ic['casimir']}; "
                         f"{'matches' if ic['ok'] else 'MISMATCH'} at every delta(K)-eigenvalue")
        else:
            lines.append(f"infinitesimal character: {ic['reason']}")
        return "\n".join(lines)


@dataclass(frozen=True)
class CenterReport:
    mode: dict
    expression: str
    central: bool
    mu: str | None = None
    gamma: str | None = None
    zeta: str | None = None
    schemaVersion: int = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {"schemaVersion": self.schemaVersion, "command": "center", "mode": dict(self.mode),
                "expression": self.expression, "central": self.central,
                "mu": self.mu, "gamma": self.gamma, "zeta": self.zeta}

    @classmethod
    def from_dict(cls, d: dict) -> "CenterReport":
        return cls(dict(d["mode"]), d["expression"], d["central"], d.get("mu"), d.get("gamma"),
                   d.get("zeta"), d.get("schemaVersion", SCHEMA_VERSION))

    def to_table(self) -> str:
        lines = [f"mode: {self.mode['tag']}" + _p_suffix(self.mode),
                 f"z = {self.expression}", f"central: {'yes' if self.central else 'no'}"]
        if self.central:
            lines += [f"mu(z)    = {self.mu}", f"gamma(z) = {self.gamma}", f"zeta(z)  = {self.zeta}"]
        return "\n".join(lines)


def _p_suffix(mode: dict) -> str:
    return "" if mode.get("pPrime") is None else f" (p' = {mode['pPrime']}, p = {mode['p']})"


# ---------------------------------------------------------------------------
# commands

def cmd_verify(mode: FieldMode) -> VerifyReport:
    return VerifyReport(mode.describe(), tuple(verification_suite(mode)))


def cmd_cohomology(descriptor: str, mode: FieldMode, window: int | None = None) -> CohomologyRun:
    module = parse_descriptor(descriptor, mode)
    if window is not None:
        if not isinstance(module, GradedWindowModule):
            raise UsageError("--window only applies to verma modules")
        if window < 2:
            raise UsageError("window must be at least 2")
        module = make_verma(module.lam, window, mode)
    report = dirac_cohomology(module)
    irreducible = None
    if not isinstance(module, GradedWindowModule):
        verdict, reason = is_irreducible(module)
        irreducible = {"verdict": verdict, "reason": reason}
    try:
        ic = infinitesimal_character_check(module).to_dict()
    except NotInfinitesimalCharacter as exc:
        ic = {"available": False, "reason": f"not applicable: {exc}"}
    return CohomologyRun(report, irreducible, ic)


def cmd_center(expression: str, mode: FieldMode) -> CenterReport:
    z = parse_uq(expression, mode)
    if not is_central(z):
        return CenterReport(mode.describe(), expression, False)
    try:
        gamma = hc_gamma(z)
    except NotCentral:  # pragma: no cover - guarded by is_central
        return CenterReport(mode.describe(), expression, False)
    return CenterReport(mode.describe(), expression, True, str(hc_mu(z)), str(gamma), str(zeta(z)))


# ---------------------------------------------------------------------------
# argument handling

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _mode(text: str) -> FieldMode:
    try:
        return FieldMode.from_tag(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="uqdirac", description="Exact U_q(sl2) Dirac operator computations.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", type=_mode, default=FieldMode.generic(),
                        help="'generic' or 'root:N' (q a primitive N-th root of unity, N >= 3)")
    common.add_argument("--format", choices=("json", "table"), default="table")
    common.add_argument("--output", help="write the report to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("verify", parents=[common], help="check the algebraic identities")
    coh = sub.add_parser("cohomology", parents=[common], help="Dirac cohomology of a module")
    coh.add_argument("--module", required=True,
                     help="'Tok omega=+1 twok=4', 'Tabl a=1 b=1 lambda=q' or 'verma lambda=0 window=20'")
    coh.add_argument("--window", type=int, help="override the window of a verma module")
    cen = sub.add_parser("center", parents=[common], help="centrality and Harish-Chandra images")
    cen.add_argument("--expr", required=True, help="element such as 'Cas' or 'E^3 + K^-3'")
    return parser


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            result = cmd_verify(args.mode)
            status = EXIT_OK if result.ok else EXIT_FAILED
        elif args.command == "cohomology":
            result = cmd_cohomology(args.module, args.mode, args.window)
            status = EXIT_OK if result.ok else EXIT_FAILED
        else:
            result = cmd_center(args.expr, args.mode)
            status = EXIT_OK
    except RelationCheckFailed as exc:
        print(f"uqdirac: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except TermLimitExceeded as exc:
        print(f"uqdirac: term limit exceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except SpecializationPole as exc:
        print(f"uqdirac: parameter has a pole at this root of unity: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, InvalidParameter, UsageError, DivisionByZero) as exc:
        print(f"uqdirac: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        text = json.dumps(result.to_dict(), indent=2, ensure_ascii=False)
    else:
        text = result.to_table()
    _emit(text, args.output)
    return status


__all__ = ["CenterReport", "CohomologyRun", "VerifyReport", "build_parser", "cmd_center",
           "cmd_cohomology", "cmd_verify", "main", "InfinitesimalCharacterResult"]
