"""Matrix ingestion, report emission, and the bundled example datasets.

Matrix files are comma-delimited UTF-8. The first header cell is blank or
"alternative"; each remaining header cell is a criterion name, optionally
annotated with ``:cost`` and/or ``:reverse``. Data rows carry the
alternative label followed by one cell per criterion; cells are numeric
literals or verbal grades resolved through a Likert map. File coordinates
in errors are 1-based, matrix coordinates 0-based.

Reports are emitted as JSON or CSV with fixed key order and fixed 6-decimal
formatting, so identical inputs produce byte-identical output anywhere.
"""

from __future__ import annotations

import csv
import hashlib
import json
import os
from dataclasses import dataclass
from io import StringIO
from pathlib import Path

from .compare import ComparisonReport, rank_desc
from .dispersion import DispersionBreakdown
from .entropy import EntropyBreakdown
from .errors import DimensionMismatch, ParseError, UnknownGrade
from .matrix import (
    DEFAULT_LIKERT_MAP,
    CriterionSpec,
    DecisionMatrix,
    LikertMap,
    WeightVector,
    validate_matrix,
)
from .version import __version__

TOOL = f"mcdm-weights {__version__}"
REPORT_SCHEMA = "mcdm-weights/report/v1"
PLOT_HEADER = "criterion,weight_entropy,weight_dwm"

_ENTROPY_COLUMNS = ("entropy", "divergence", "weight_entropy", "rank_entropy")
_DWM_COLUMNS = ("mean", "std", "cv", "weight_dwm", "rank_dwm")


# ---------------------------------------------------------------- parsing


@dataclass(frozen=True)
class MatrixDocument:
    """Raw parsed matrix file: labels, criterion specs, unconverted cells."""

    alternatives: tuple[str, ...]
    criteria: tuple[CriterionSpec, ...]
    cells: tuple[tuple[str, ...], ...]


def _parse_header_cell(cell: str, line: int, col: int) -> CriterionSpec:
    parts = [p.strip() for p in cell.split(":")]
    name = parts[0]
    if not name:
        raise ParseError(line, col, "empty criterion name")
    direction = "benefit"
    reverse = False
    for annotation in parts[1:]:
        key = annotation.casefold()
        if key == "cost":
            direction = "cost"
        elif key == "reverse":
            reverse = True
        else:
            raise ParseError(line, col, f"unknown annotation {annotation!r}")
    return CriterionSpec(name=name, direction=direction, likert_reverse=reverse)


def _read_rows(text: str) -> tuple[MatrixDocument, tuple[int, ...]]:
    reader = csv.reader(StringIO(text))
    rows: list[tuple[int, list[str]]] = []
    try:
        for row in reader:
            if not row or all(not cell.strip() for cell in row):
                continue
            rows.append((reader.line_num, [cell.strip() for cell in row]))
    except csv.Error as exc:
        raise ParseError(reader.line_num, 1, str(exc)) from None
    if not rows:
        raise ParseError(1, 1, "empty document")

    header_line, header = rows[0]
    if header[0].casefold() not in ("", "alternative"):
        raise ParseError(
            header_line, 1, "first header cell must be blank or 'alternative'"
        )
    if len(header) < 2:
        raise ParseError(header_line, 2, "no criterion columns")
    criteria = tuple(
        _parse_header_cell(cell, header_line, col)
        for col, cell in enumerate(header[1:], start=2)
    )

    alternatives: list[str] = []
    cells: list[tuple[str, ...]] = []
    lines: list[int] = []
    for lineno, row in rows[1:]:
        if len(row) != len(criteria) + 1:
            raise ParseError(
                lineno,
                1,
                f"row has {len(row) - 1} cells, expected {len(criteria)}",
            )
        if not row[0]:
            raise ParseError(lineno, 1, "missing alternative label")
        alternatives.append(row[0])
        cells.append(tuple(row[1:]))
        lines.append(lineno)

    doc = MatrixDocument(tuple(alternatives), criteria, tuple(cells))
    return doc, tuple(lines)


def read_document(text: str) -> MatrixDocument:
    """Split delimited text into header specs, labels, and raw cells."""
    return _read_rows(text)[0]


def parse_matrix(
    text: str, likert_map: LikertMap = DEFAULT_LIKERT_MAP
) -> DecisionMatrix:
    """Parse delimited text into a validated DecisionMatrix.

    Numeric cells are taken as-is; textual cells are resolved through the
    Likert map, honoring each column's ``:reverse`` annotation.

    Raises:
        ParseError: structural problems (bad header, ragged row, empty cell).
        UnknownGrade: textual cell missing from the Likert map (with file
            line/column attached).
        Any validate_matrix error (NonFiniteValue, TooFewAlternatives, ...).
    """
    doc, lines = _read_rows(text)
    grid: list[list[float]] = []
    for i, row in enumerate(doc.cells):
        converted: list[float] = []
        for j, token in enumerate(row):
            line, col = lines[i], j + 2
            if not token:
                raise ParseError(line, col, "empty cell")
            try:
                converted.append(float(token))
            except ValueError:
                if token not in likert_map:
                    raise UnknownGrade(token, line=line, col=col) from None
                converted.append(
                    likert_map.score(token, reverse=doc.criteria[j].likert_reverse)
                )
        grid.append(converted)
    return validate_matrix(grid, doc.alternatives, doc.criteria)


def emit_matrix(matrix: DecisionMatrix) -> str:
    """Render a matrix back to delimited text (numeric cells, full repr).

    parse_matrix(emit_matrix(m)) reproduces m exactly for numeric data.
    """
    out = StringIO()
    writer = csv.writer(out, lineterminator="\n")
    header = ["alternative"]
    for spec in matrix.criteria:
        name = spec.name
        if spec.direction == "cost":
            name += ":cost"
        if spec.likert_reverse:
            name += ":reverse"
        header.append(name)
    writer.writerow(header)
    for label, row in zip(matrix.alternatives, matrix.values):
        writer.writerow([label] + [repr(float(v)) for v in row])
    return out.getvalue()


def sha256_digest(text: str) -> str:
    """Hex digest used as the provenance input_digest."""
    return "sha256:" + hashlib.sha256(text.encode("utf-8")).hexdigest()


# ---------------------------------------------------------------- reports


def _q6(value: float) -> float:
    return round(float(value), 6)


def _f6(value: float) -> str:
    return f"{value:.6f}"


@dataclass(frozen=True)
class EntropyReport:
    """Entropy-method block of a report, quantized to 6 decimals."""

    k: float
    entropy: tuple[float, ...]
    divergence: tuple[float, ...]
    weights: tuple[float, ...]
    ranks: tuple[int, ...]


@dataclass(frozen=True)
class DispersionReport:
    """Dispersion-method block of a report, quantized to 6 decimals."""

    mean: tuple[float, ...]
    std: tuple[float, ...]
    cv: tuple[float, ...]
    weights: tuple[float, ...]
    ranks: tuple[int, ...]


@dataclass(frozen=True)
class ComparisonBlock:
    """Method-to-method statistics block; None means not applicable."""

    pearson: float | None
    spearman: float | None
    rank_agreements: int


@dataclass(frozen=True)
class ReportDocument:
    """Complete machine-readable run record.

    Holds exactly what gets printed (already quantized), so emitting and
    re-parsing yields an identical value.
    """

    tool: str
    input_digest: str
    criteria: tuple[str, ...]
    notes: tuple[str, ...] = ()
    entropy: EntropyReport | None = None
    dwm: DispersionReport | None = None
    comparison: ComparisonBlock | None = None


def build_report(
    criteria: tuple[str, ...],
    input_digest: str,
    entropy: tuple[WeightVector, EntropyBreakdown] | None = None,
    dwm: tuple[WeightVector, DispersionBreakdown] | None = None,
    comparison: ComparisonReport | None = None,
    notes: tuple[str, ...] = (),
) -> ReportDocument:
    """Assemble a report from full-precision results.

    Ranks are extracted before quantization; printed values are rounded to
    6 decimals, exceeding the precision of any weight this tool emits.
    """
    entropy_block = None
    if entropy is not None:
        weights, breakdown = entropy
        entropy_block = EntropyReport(
            k=_q6(breakdown.k),
            entropy=tuple(_q6(e) for e in breakdown.entropy),
            divergence=tuple(_q6(d) for d in breakdown.divergence),
            weights=tuple(_q6(w) for w in weights),
            ranks=rank_desc(weights.weights),
        )
    dwm_block = None
    if dwm is not None:
        weights, breakdown = dwm
        dwm_block = DispersionReport(
            mean=tuple(_q6(m) for m in breakdown.mean),
            std=tuple(_q6(s) for s in breakdown.std),
            cv=tuple(_q6(c) for c in breakdown.cv),
            weights=tuple(_q6(w) for w in weights),
            ranks=rank_desc(weights.weights),
        )
    comparison_block = None
    if comparison is not None:
        comparison_block = ComparisonBlock(
            pearson=None if comparison.pearson is None else _q6(comparison.pearson),
            spearman=None if comparison.spearman is None else _q6(comparison.spearman),
            rank_agreements=comparison.rank_agreements,
        )
    return ReportDocument(
        tool=TOOL,
        input_digest=input_digest,
        criteria=tuple(criteria),
        notes=tuple(notes),
        entropy=entropy_block,
        dwm=dwm_block,
        comparison=comparison_block,
    )


def emit_report(report: ReportDocument, format: str = "json") -> str:
    """Serialize a report; absent blocks are omitted, never null-filled."""
    if format == "json":
        return _emit_report_json(report)
    if format == "csv":
        return _emit_report_csv(report)
    raise ValueError(f"unknown report format {format!r}")


def parse_report(text: str, format: str = "json") -> ReportDocument:
    """Inverse of emit_report for both formats."""
    if format == "json":
        return _parse_report_json(text)
    if format == "csv":
        return _parse_report_csv(text)
    raise ValueError(f"unknown report format {format!r}")


def _emit_report_json(report: ReportDocument) -> str:
    doc: dict = {
        "schema": REPORT_SCHEMA,
        "tool": report.tool,
        "input_digest": report.input_digest,
        "criteria": list(report.criteria),
    }
    if report.notes:
        doc["notes"] = list(report.notes)
    if report.entropy is not None:
        doc["entropy"] = {
            "k": report.entropy.k,
            "entropy": list(report.entropy.entropy),
            "divergence": list(report.entropy.divergence),
            "weights": list(report.entropy.weights),
            "ranks": list(report.entropy.ranks),
        }
    if report.dwm is not None:
        doc["dwm"] = {
            "mean": list(report.dwm.mean),
            "std": list(report.dwm.std),
            "cv": list(report.dwm.cv),
            "weights": list(report.dwm.weights),
            "ranks": list(report.dwm.ranks),
        }
    if report.comparison is not None:
        doc["comparison"] = {
            "pearson": report.comparison.pearson,
            "spearman": report.comparison.spearman,
            "rank_agreements": report.comparison.rank_agreements,
        }
    return json.dumps(doc, indent=2) + "\n"


def _parse_report_json(text: str) -> ReportDocument:
    doc = json.loads(text)
    entropy = None
    if "entropy" in doc:
        block = doc["entropy"]
        entropy = EntropyReport(
            k=block["k"],
            entropy=tuple(block["entropy"]),
            divergence=tuple(block["divergence"]),
            weights=tuple(block["weights"]),
            ranks=tuple(block["ranks"]),
        )
    dwm = None
    if "dwm" in doc:
        block = doc["dwm"]
        dwm = DispersionReport(
            mean=tuple(block["mean"]),
            std=tuple(block["std"]),
            cv=tuple(block["cv"]),
            weights=tuple(block["weights"]),
            ranks=tuple(block["ranks"]),
        )
    comparison = None
    if "comparison" in doc:
        block = doc["comparison"]
        comparison = ComparisonBlock(
            pearson=block["pearson"],
            spearman=block["spearman"],
            rank_agreements=block["rank_agreements"],
        )
    return ReportDocument(
        tool=doc["tool"],
        input_digest=doc["input_digest"],
        criteria=tuple(doc["criteria"]),
        notes=tuple(doc.get("notes", ())),
        entropy=entropy,
        dwm=dwm,
        comparison=comparison,
    )


def _emit_report_csv(report: ReportDocument) -> str:
    lines = [
        f"# schema={REPORT_SCHEMA}",
        f"# tool={report.tool}",
        f"# input_digest={report.input_digest}",
    ]
    for note in report.notes:
        lines.append(f"# note={note}")
    if report.entropy is not None:
        lines.append(f"# entropy_k={_f6(report.entropy.k)}")
    if report.comparison is not None:
        block = report.comparison
        pearson = "NA" if block.pearson is None else _f6(block.pearson)
        spearman = "NA" if block.spearman is None else _f6(block.spearman)
        lines.append(f"# pearson={pearson}")
        lines.append(f"# spearman={spearman}")
        lines.append(f"# rank_agreements={block.rank_agreements}")

    columns = ["criterion"]
    if report.entropy is not None:
        columns += list(_ENTROPY_COLUMNS)
    if report.dwm is not None:
        columns += list(_DWM_COLUMNS)

    out = StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for j, name in enumerate(report.criteria):
        row: list[str] = [name]
        if report.entropy is not None:
            row += [
                _f6(report.entropy.entropy[j]),
                _f6(report.entropy.divergence[j]),
                _f6(report.entropy.weights[j]),
                str(report.entropy.ranks[j]),
            ]
        if report.dwm is not None:
            row += [
                _f6(report.dwm.mean[j]),
                _f6(report.dwm.std[j]),
                _f6(report.dwm.cv[j]),
                _f6(report.dwm.weights[j]),
                str(report.dwm.ranks[j]),
            ]
        writer.writerow(row)
    return "\n".join(lines) + "\n" + out.getvalue()


def _parse_report_csv(text: str) -> ReportDocument:
    meta: dict[str, str] = {}
    notes: list[str] = []
    table_lines: list[str] = []
    for line in text.splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition("=")
            if key == "note":
                notes.append(value)
            else:
                meta[key] = value
        elif line:
            table_lines.append(line)

    rows = list(csv.reader(StringIO("\n".join(table_lines) + "\n")))
    header, data = rows[0], rows[1:]
    index = {name: pos for pos, name in enumerate(header)}
    criteria = tuple(row[0] for row in data)

    def floats(column: str) -> tuple[float, ...]:
        return tuple(float(row[index[column]]) for row in data)

    def ints(column: str) -> tuple[int, ...]:
        return tuple(int(row[index[column]]) for row in data)

    entropy = None
    if "weight_entropy" in index:
        entropy = EntropyReport(
            k=float(meta["entropy_k"]),
            entropy=floats("entropy"),
            divergence=floats("divergence"),
            weights=floats("weight_entropy"),
            ranks=ints("rank_entropy"),
        )
    dwm = None
    if "weight_dwm" in index:
        dwm = DispersionReport(
            mean=floats("mean"),
            std=floats("std"),
            cv=floats("cv"),
            weights=floats("weight_dwm"),
            ranks=ints("rank_dwm"),
        )
    comparison = None
    if "rank_agreements" in meta:
        comparison = ComparisonBlock(
            pearson=None if meta["pearson"] == "NA" else float(meta["pearson"]),
            spearman=None if meta["spearman"] == "NA" else float(meta["spearman"]),
            rank_agreements=int(meta["rank_agreements"]),
        )
    return ReportDocument(
        tool=meta["tool"],
        input_digest=meta["input_digest"],
        criteria=criteria,
        notes=tuple(notes),
        entropy=entropy,
        dwm=dwm,
        comparison=comparison,
    )


def emit_plot_series(
    criteria: tuple[str, ...], entropy: WeightVector, dwm: WeightVector
) -> str:
    """Grouped-bar data: one row per criterion with both methods' weights."""
    if not len(criteria) == len(entropy) == len(dwm):
        raise DimensionMismatch(
            f"{len(criteria)} criteria, {len(entropy)} entropy weights, "
            f"{len(dwm)} dwm weights"
        )
    out = StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(PLOT_HEADER.split(","))
    for name, we, wd in zip(criteria, entropy, dwm):
        writer.writerow([name, _f6(we), _f6(wd)])
    return out.getvalue()


# ---------------------------------------------------------------- fixtures


def fixture_dir() -> Path:
    """Bundled dataset directory, overridable via MCDM_FIXTURES."""
    override = os.environ.get("MCDM_FIXTURES")
    if override:
        return Path(override)
    return Path(__file__).parent / "fixtures"


def fixture_path(name: str) -> Path:
    return fixture_dir() / name


def load_fixture(
    name: str, likert_map: LikertMap = DEFAULT_LIKERT_MAP
) -> DecisionMatrix:
    """Parse one of the bundled datasets (e.g. "example1.csv")."""
    return parse_matrix(fixture_path(name).read_text(encoding="utf-8"), likert_map)


def resolve_input(path: str) -> Path:
    """A plain path, falling back to the fixture directory by name."""
    candidate = Path(path)
    if candidate.exists():
        return candidate
    fallback = fixture_path(path)
    if fallback.exists():
        return fallback
    return candidate
