"""Command-line front end: ``fiberlab <command> <file> [options]``."""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from importlib.resources import files
from pathlib import Path

from . import __version__
from .cayley import (
    discriminant,
    discriminant_ideal_sub,
    lowest_level,
    modified_discriminant_ideal,
    regular_trace_over_C,
    sd_zero_locus,
    zero_locus,
)
from .errors import FiberlabError, PresentationError, StepCapExceeded, UnsupportedCentralShape
from .findim import block_dims, irr_count, one_dim_rep_count, sd
from .grothendieck import fpdim, theorem_checkers
from .presentation import critical_pairs_check, parse_presentation
from .report import FAIL, PASS, PLUMBING, SKIPPED, Check

__all__ = ["main", "RunConfig", "Report", "build_report", "reproduced_tables", "corpus_dir", "COMMANDS"]

COMMANDS = ("validate", "analyze", "disc", "theorems", "tables")
EXIT_OK, EXIT_INTERNAL, EXIT_INVALID, EXIT_UNSUPPORTED = 0, 1, 2, 3

# (corpus file, table title) for the reproduced discriminant tables
TABLES = (
    ("q8_central", "Quaternion group algebra over its center {+1,-1} (m = 4)"),
    ("ex3_2", "Sixteen-dimensional Hopf algebra over a two-element central group"),
    ("taft_inf_2", "Infinite Taft algebra, n = 2"),
    ("taft_inf_3", "Infinite Taft algebra, n = 3"),
)


@dataclass
class RunConfig:
    command: str
    path: Path | None = None
    seed: int = 0
    samples: tuple | None = None
    fmt: str = "json"
    k_min: int | None = None
    k_max: int | None = None


@dataclass
class Report:
    command: str
    input_digest: str
    checks: list
    name: str = ""

    @property
    def failed(self) -> bool:
        return any(c.status == FAIL for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "version": __version__,
            "input_digest": self.input_digest,
            "command": self.command,
            "input": self.name,
            "checks": [c.to_dict() for c in self.checks],
        }


def corpus_dir():
    return files("fiberlab") / "corpus"


def corpus_files() -> list:
    return sorted((p for p in corpus_dir().iterdir() if p.name.endswith(".hopf")), key=lambda p: p.name)


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _load(path):
    text = path.read_bytes()
    name = Path(str(path)).stem
    return text, name


def _locus_label(pres, pts, space) -> str:
    """Human label for a set of characters."""
    sampled = space.sampled()
    if not pts:
        return "∅"
    if set(pts) == set(sampled):
        return "maxSpec C"
    ident = pres.identity_character()
    names = ["m_ε" if c == ident else c.label() for c in pts]
    return "{" + ", ".join(names) + "}"


# -- commands -------------------------------------------------------------
def cmd_validate(pres, cfg: RunConfig) -> list[Check]:
    pairs = critical_pairs_check(pres)
    crit = [
        {"word": pres.format_word(p["word"]), "left": pres.format_poly(p["left"]), "right": pres.format_poly(p["right"])}
        for p in pairs
    ]
    return [
        Check("parse_and_validate", PASS, {"basis_size": pres.dim, "generators": list(pres.generators), "central": list(pres.central.names)}),
        Check("critical_pairs", PASS if not crit else FAIL, {"unresolved": crit}),
    ]


def cmd_analyze(pres, cfg: RunConfig) -> list[Check]:
    rows = []
    for chi in pres.character_space(cfg.samples).sampled():
        A = pres.build_fiber(chi)
        rows.append(
            {
                "character": chi.label(),
                "fiber_dim": A.dim,
                "sd": sd(A),
                "irr_count": irr_count(A),
                "block_dims": list(block_dims(A, cfg.seed).block_dims),
                "one_dim": one_dim_rep_count(A),
            }
        )
    fp = fpdim(pres, cfg.seed)
    fp_data = {"value": fp.value, "method": fp.method}
    if fp.method != "fusion":
        fp_data = {"value": {"numeric": round(float(fp.value), 9), "tol": fp.tol}, "method": fp.method}
    return [
        Check("sd_profile", PASS, {"rows": rows}, "square dimension function"),
        Check("fpdim", PASS, fp_data, "Frobenius-Perron dimension of the identity fiber"),
    ]


def cmd_disc(pres, cfg: RunConfig) -> list[Check]:
    td = regular_trace_over_C(pres)
    space = pres.character_space(cfg.samples)
    k_min = cfg.k_min or 1
    k_max = cfg.k_max or pres.dim + 1
    out = []
    for k in range(k_min, k_max + 1):
        md = modified_discriminant_ideal(td, k)
        sub = discriminant_ideal_sub(td, k, space)
        locus = zero_locus(md, space)
        sd_pts = sd_zero_locus(pres, k, cfg.samples, td=td)
        md_pts = [c for c in space.sampled() if locus.contains(c)]
        out.append(
            Check(
                f"MD_{k}",
                PASS,
                {
                    "base": pres.central.shape,
                    "form": md.form,
                    "generator": md.describe(),
                    "zero_locus": _locus_label(pres, md_pts, space),
                    "sd_locus": _locus_label(pres, list(sd_pts), space),
                    "sub_ideal": sub.describe(),
                    "sandwich_status": sub.sandwich,
                },
                "modified discriminant ideal and its zero locus",
            )
        )
    cert = lowest_level(pres, cfg.samples, cfg.seed)
    out.append(
        Check(
            "lowest_level",
            PASS,
            {"level": cert.level, "fpdim_plus_one": cert.fpdim_level},
            "lowest discriminant level",
        )
    )
    out.append(Check("discriminant", PASS, {"value": discriminant(td)}, "discriminant of the regular trace"))
    return out


def cmd_theorems(pres, cfg: RunConfig) -> list[Check]:
    return theorem_checkers(pres, cfg.samples, cfg.seed)


HANDLERS = {"validate": cmd_validate, "analyze": cmd_analyze, "disc": cmd_disc, "theorems": cmd_theorems}


def build_report(cfg: RunConfig, path) -> tuple[Report, int]:
    """Run one command on one file; returns the report and the exit code."""
    raw, name = _load(path)
    digest = _digest(raw)
    try:
        pres = parse_presentation(raw.decode("utf-8"), name=name)
    except (PresentationError, StepCapExceeded) as exc:
        check = Check("parse_and_validate", FAIL, {"error": type(exc).__name__, "message": str(exc)})
        return Report(cfg.command, digest, [check], name), EXIT_INVALID
    try:
        checks = HANDLERS[cfg.command](pres, cfg)
    except UnsupportedCentralShape as exc:
        check = Check(cfg.command, SKIPPED, {"error": type(exc).__name__, "message": str(exc)})
        return Report(cfg.command, digest, [check], name), EXIT_UNSUPPORTED
    report = Report(cfg.command, digest, checks, name)
    return report, EXIT_INVALID if report.failed else EXIT_OK


# -- reproduced tables ----------------------------------------------------
def _table_rows(pres, seed: int = 0) -> list[tuple[str, str, str]]:
    td = regular_trace_over_C(pres)
    space = pres.character_space()
    n = pres.dim
    per_k = []
    for k in range(1, n + 2):
        locus = zero_locus(modified_discriminant_ideal(td, k), space)
        md_pts = [c for c in space.sampled() if locus.contains(c)]
        sd_pts = list(sd_zero_locus(pres, k, td=td))
        per_k.append((_locus_label(pres, md_pts, space), _locus_label(pres, sd_pts, space)))
    rows = []
    start = 1
    for k in range(2, n + 3):
        if k == n + 2 or per_k[k - 1] != per_k[start - 1]:
            last = k - 1
            if last == n + 1:
                rng = f"k ≥ {start}"
            elif start == last:
                rng = f"k = {start}"
            else:
                rng = f"{start} ≤ k ≤ {last}"
            rows.append((rng,) + per_k[start - 1])
            start = k
    return rows


def reproduced_tables(fmt: str = "markdown", seed: int = 0) -> str:
    blocks = []
    for stem, title in TABLES:
        text = (corpus_dir() / f"{stem}.hopf").read_text(encoding="utf-8")
        pres = parse_presentation(text, name=stem)
        cert = lowest_level(pres, seed=seed)
        blocks.append((stem, title, _table_rows(pres, seed), cert.level))
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["corpus", "k_range", "md_locus", "sd_locus", "lowest_level"])
        for stem, _, rows, level in blocks:
            for r in rows:
                w.writerow([stem, *r, level])
        return buf.getvalue()
    lines = []
    for stem, title, rows, level in blocks:
        lines.append(f"### {title} (`{stem}`)")
        lines.append("")
        lines.append("| k | V_k from MD_k | V_k from Sd |")
        lines.append("|---|---|---|")
        for r in rows:
            lines.append(f"| {r[0]} | {r[1]} | {r[2]} |")
        lines.append("")
        lines.append(f"lowest level: {level}")
        lines.append("")
    return "\n".join(lines)


def _tables_digest() -> str:
    h = hashlib.sha256()
    for stem, _ in TABLES:
        h.update((corpus_dir() / f"{stem}.hopf").read_bytes())
    return h.hexdigest()


# -- output ---------------------------------------------------------------
def render(reports: list[Report], fmt: str) -> str:
    if fmt == "json":
        payload = reports[0].to_dict() if len(reports) == 1 else {
            "version": __version__,
            "command": "corpus",
            "reports": [r.to_dict() for r in reports],
        }
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["input", "command", "name", "status", "paper_anchor", "data"])
        for r in reports:
            for c in r.checks:
                d = c.to_dict()
                w.writerow([r.name, r.command, d["name"], d["status"], d["paper_anchor"], json.dumps(d["data"], ensure_ascii=False)])
        return buf.getvalue()
    lines = []
    for r in reports:
        lines.append(f"## {r.command} {r.name}")
        lines.append("")
        lines.append(f"version {__version__}, input sha256 {r.input_digest}")
        lines.append("")
        lines.append("| check | status | anchor | data |")
        lines.append("|---|---|---|---|")
        for c in r.checks:
            d = c.to_dict()
            data = json.dumps(d["data"], ensure_ascii=False).replace("|", "\\|")
            lines.append(f"| {d['name']} | {d['status']} | {d['paper_anchor']} | {data} |")
        lines.append("")
    return "\n".join(lines)


def _parse_samples(text: str | None):
    if text is None:
        return None
    return tuple(Fraction(s.strip()) for s in text.split(",") if s.strip())


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fiberlab", description="Fiber-algebra analysis of Hopf presentations.")
    p.add_argument("command", nargs="?", choices=COMMANDS, help="command to run")
    p.add_argument("file", nargs="?", help="input .hopf file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", help="comma-separated free-parameter samples, e.g. 0,1,-1,1/2")
    p.add_argument("--format", dest="fmt", choices=("json", "csv", "markdown"), help="default: json (markdown for tables)")
    p.add_argument("--k-min", type=int)
    p.add_argument("--k-max", type=int)
    p.add_argument("--corpus", action="store_true", help="run over every shipped corpus entry")
    p.add_argument("--version", action="version", version=f"fiberlab {__version__}")
    return p


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = make_parser().parse_args(argv)
    try:
        samples = _parse_samples(args.samples)
    except (ValueError, ZeroDivisionError):
        print(f"fiberlab: bad --samples value {args.samples!r}", file=sys.stderr)
        return EXIT_INVALID
    fmt = args.fmt or ("markdown" if args.command == "tables" else "json")
    cfg = RunConfig(args.command or "corpus", Path(args.file) if args.file else None, args.seed, samples, fmt, args.k_min, args.k_max)
    if cfg.seed < 0 or cfg.seed >= 1 << 64:
        print("fiberlab: --seed must be a 64-bit unsigned integer", file=sys.stderr)
        return EXIT_INVALID
    try:
        if args.command == "tables":
            if cfg.fmt == "json":
                report = Report("tables", _tables_digest(), [Check("tables", PASS, {"markdown": reproduced_tables("markdown", cfg.seed)}, PLUMBING)], "corpus")
                stdout.write(render([report], "json"))
            else:
                stdout.write(reproduced_tables(cfg.fmt, cfg.seed))
            return EXIT_OK
        if args.corpus or args.command is None:
            if not args.corpus:
                make_parser().print_usage(sys.stderr)
                return EXIT_INVALID
            commands = [args.command] if args.command else ["validate", "analyze", "disc", "theorems"]
            reports, code = [], EXIT_OK
            for path in corpus_files():
                for cmd in commands:
                    cfg.command = cmd
                    rep, c = build_report(cfg, path)
                    reports.append(rep)
                    code = max(code, c)
            stdout.write(render(reports, cfg.fmt))
            return code
        if cfg.path is None:
            print("fiberlab: an input file is required", file=sys.stderr)
            return EXIT_INVALID
        if not cfg.path.exists():
            print(f"fiberlab: no such file {cfg.path}", file=sys.stderr)
            return EXIT_INVALID
        report, code = build_report(cfg, cfg.path)
        stdout.write(render([report], cfg.fmt))
        return code
    except FiberlabError as exc:
        print(f"fiberlab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # pragma: no cover - last-resort guard
        print(f"fiberlab: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main(argv=None) -> int:
    code = run(argv)
    sys.exit(code)


if __name__ == "__main__":
    main()
