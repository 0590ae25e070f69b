"""Command-line runner: ``sjord verify`` and ``sjord dump``.

Exit codes: 0 all checks pass (variant-passes allowed), 1 at least one check
failed, 2 configuration or construction error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import List, Optional

from .classical import (classical_automorphism_check, classical_relations_suite,
                        classical_tensor_rep, fundamental_generators)
from .hopf import (antipode_crosscheck, classical_limit_check, hopf_axiom_suite)
from .jordanian import (automorphism_Phi_check, commutator_table, deformed_relations_suite,
                        generator_identity_check, sl2_sector_suite, specialization_crosscheck,
                        tensor_rep)
from .labels import Unsupported
from .report import FAIL, VARIANT_PASS, CheckReport
from .rmatrix import (contracted_rh, contraction_suite, l_operator,
                      rmatrix_suite, rq_fundamental, rq_perk_schultz, universal_rh_eval)

SUITES = ("classical", "deformed", "hopf", "rmatrix", "contraction")
REPS = ("fund", "fund2", "fund3")
# suites that build triple tensors and so accept fund3
TRIPLE_OK = ("deformed", "hopf")
DUMPS = ("rq-fund", "rh-contracted", "rh-universal", "l-operator", "commutator-table")
N_MAX = 5

DEFAULT_REPS = {
    "classical": ("fund", "fund2"),
    "deformed": ("fund", "fund2"),
    "hopf": ("fund",),
    "rmatrix": ("fund",),
    "contraction": ("fund2",),
}


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    n: int = 2
    suites: List[str] = field(default_factory=lambda: ["all"])
    reps: Optional[List[str]] = None
    format: str = "text"
    typo_variants: bool = True

    def validate(self) -> None:
        if not 2 <= self.n <= N_MAX:
            if "deformed" in self.suites:
                raise ConfigError("unsupported N for printed relation list")
            raise ConfigError(f"n must be in 2..{N_MAX}, got {self.n}")
        for s in self.suites:
            if s != "all" and s not in SUITES:
                raise ConfigError(f"unknown suite {s!r}")
        for r in self.reps or ():
            if r not in REPS:
                raise ConfigError(f"unknown rep {r!r}")
        if self.reps and "fund3" in self.reps:
            bad = [s for s in self.expanded_suites() if s not in TRIPLE_OK]
            if bad:
                raise ConfigError(f"fund3 is only allowed with {', '.join(TRIPLE_OK)}")
        if "contraction" in self.suites and self.n != 2:
            raise ConfigError("the contraction suite is defined for n = 2 only")
        if "deformed" in self.suites and self.n not in (2, 3):
            raise ConfigError("unsupported N for printed relation list")

    def expanded_suites(self) -> List[str]:
        if "all" not in self.suites:
            return list(dict.fromkeys(self.suites))
        return [s for s in SUITES if s != "contraction" or self.n == 2]

    def reps_for(self, suite: str):
        return tuple(self.reps) if self.reps else DEFAULT_REPS[suite]


def _k(rep: str) -> int:
    return REPS.index(rep) + 1


def _classical(cfg: RunConfig) -> List[CheckReport]:
    out = []
    for rep in cfg.reps_for("classical"):
        table = classical_tensor_rep(fundamental_generators(cfg.n), _k(rep))
        out.append(classical_relations_suite(table))
        if rep == "fund":
            out.append(classical_automorphism_check(table))
    return out


def _deformed(cfg: RunConfig) -> List[CheckReport]:
    out = []
    for rep in cfg.reps_for("deformed"):
        dt = tensor_rep(cfg.n, rep)
        out.append(generator_identity_check(dt))
        if cfg.n in (2, 3):
            out.append(deformed_relations_suite(dt, cfg.typo_variants))
            out.append(automorphism_Phi_check(dt))
        else:
            out.append(sl2_sector_suite(dt))
    if cfg.n in (2, 3):
        out.append(specialization_crosscheck(cfg.n))
    return out


def _hopf(cfg: RunConfig) -> List[CheckReport]:
    out = []
    for rep in cfg.reps_for("hopf"):
        dt = tensor_rep(cfg.n, rep)
        out.append(hopf_axiom_suite(dt, use_variants=cfg.typo_variants))
        out.append(classical_limit_check(dt))
    if cfg.n == 2:
        out.append(antipode_crosscheck())
    return out


def _rmatrix(cfg: RunConfig) -> List[CheckReport]:
    return [rmatrix_suite(cfg.n, rep) for rep in cfg.reps_for("rmatrix")]


def _contraction(cfg: RunConfig) -> List[CheckReport]:
    return [contraction_suite()]


RUNNERS = {"classical": _classical, "deformed": _deformed, "hopf": _hopf,
           "rmatrix": _rmatrix, "contraction": _contraction}


def run(cfg: RunConfig):
    """Run the configured suites; returns (exit code, reports)."""
    cfg.validate()
    reports: List[CheckReport] = []
    for suite in cfg.expanded_suites():
        reports.extend(RUNNERS[suite](cfg))
    if not cfg.typo_variants:
        # a variant-pass means the printed form failed
        for r in reports:
            for c in r.checks:
                if c.status == VARIANT_PASS:
                    c.status, c.note = FAIL, f"printed form fails; variant not applied ({c.variant})"
                    c.variant = None
    code = 0 if all(r.passed for r in reports) else 1
    return code, reports


def render(reports: List[CheckReport], fmt: str) -> str:
    if fmt == "json":
        doc = {"reports": [r.as_dict() for r in reports]}
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    return "\n".join(r.to_text() for r in reports) + "\n"


# -- dump ---------------------------------------------------------------------

def matrix_lines(m) -> str:
    return "".join(f"{i + 1} {j + 1} {v}\n" for (i, j), v in sorted(m.entries.items()))


def dump(obj: str, n: int, rep: str = "fund", at_h0: bool = False) -> str:
    if obj not in DUMPS:
        raise ConfigError(f"unknown dump object {obj!r}")
    if not 2 <= n <= N_MAX:
        raise ConfigError(f"n must be in 2..{N_MAX}, got {n}")
    if obj == "commutator-table":
        return json.dumps(commutator_table(tensor_rep(n, rep)), sort_keys=True, indent=1) + "\n"
    if obj == "l-operator":
        lop = l_operator(n)
        return "".join(f"{a} {b} {e}\n" for (a, b), e in sorted(lop.entries.items()))
    if obj == "rq-fund":
        m = rq_fundamental(2) if n == 2 else rq_perk_schultz(n)
        return matrix_lines(m)
    if obj == "rh-contracted":
        m = contracted_rh(n=n)
    else:
        m = universal_rh_eval(tensor_rep(n, "fund"))
    return matrix_lines(m.eval_h0() if at_h0 else m)


# -- entry point ----------------------------------------------------------------

def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sjord", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", nargs="+", default=["all"], help="suites: " + ", ".join(SUITES + ("all",)))
    v.add_argument("--n", type=int, default=2)
    v.add_argument("--rep", nargs="+", default=None, help="fund, fund2, fund3")
    v.add_argument("--format", choices=("json", "text"), default="text")
    v.add_argument("--no-typo-variants", action="store_true",
                   help="report printed forms only; failures are not retried with variants")
    v.add_argument("--out", help="directory to write report.json / report.txt into")
    d = sub.add_parser("dump", help="write a matrix or table artifact")
    d.add_argument("object", choices=DUMPS)
    d.add_argument("--n", type=int, default=2)
    d.add_argument("--rep", default="fund", choices=REPS[:2])
    d.add_argument("--at-h0", action="store_true", help="evaluate at h = 0")
    d.add_argument("--out", help="directory for the artifact (default: stdout)")
    return p


def _write(out_dir: Optional[str], name: str, text: str) -> None:
    if out_dir is None:
        sys.stdout.write(text)
        return
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, name)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(path)


def main(argv: Optional[List[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.command == "verify":
            cfg = RunConfig(args.n, args.suite, args.rep, args.format, not args.no_typo_variants)
            code, reports = run(cfg)
            ext = "json" if args.format == "json" else "txt"
            _write(args.out, f"report.{ext}", render(reports, args.format))
            return code
        ext = "json" if args.object == "commutator-table" else "txt"
        suffix = "-h0" if args.at_h0 else ""
        _write(args.out, f"{args.object}-n{args.n}{suffix}.{ext}",
               dump(args.object, args.n, args.rep, args.at_h0))
        return 0
    except (ConfigError, Unsupported) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
