"""CSV ingestion and calendar alignment.

One series per file (``date,value`` with a header, ISO-8601 days, '.' decimal
separator, UTF-8).  Chinese and US trading calendars do not coincide, so
aligning a panel needs a policy: ``intersect`` keeps only shared dates and can
never fabricate an observation (the default); ``forward-fill`` keeps the base
calendar of the domestic price series and carries each foreign series forward
from its latest prior observation, refusing to bridge gaps wider than a
configurable number of calendar days.
"""

import csv
import datetime as _dt
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    AlignmentError,
    ConfigurationError,
    DuplicateDateError,
    EmptyInputError,
    IngestionError,
    StaleDataError,
)
from .series import TradingSeries

# Input roles a dataset configuration may declare.
ROLE_PRICE = "YIELD-SOURCE-PRICE"
ROLE_FXR = "FXR"
ROLE_CNB = "CNB"
ROLE_USB = "USB"
INPUT_ROLES = (ROLE_PRICE, ROLE_FXR, ROLE_CNB, ROLE_USB)

DEFAULT_MAX_FFILL_GAP_DAYS = 7


@dataclass(frozen=True)
class SeriesSpec:
    """Where one variable lives and which columns to read."""

    role: str
    path: str
    date_column: str = "date"
    value_column: str = "value"


@dataclass
class AlignedPanel:
    """Several variables on one shared, strictly increasing calendar."""

    dates: np.ndarray
    columns: dict = field(default_factory=dict)

    def __post_init__(self):
        self.dates = np.asarray(self.dates, dtype="datetime64[D]")
        for role, vals in self.columns.items():
            vals = np.asarray(vals, dtype=float)
            if len(vals) != len(self.dates):
                raise AlignmentError(
                    f"column {role} has {len(vals)} values for {len(self.dates)} dates"
                )
            self.columns[role] = vals

    def __len__(self) -> int:
        return len(self.dates)

    @property
    def roles(self):
        return list(self.columns)

    def column(self, role: str) -> np.ndarray:
        if role not in self.columns:
            raise ConfigurationError(f"panel has no column '{role}'")
        return self.columns[role]

    def series(self, role: str) -> TradingSeries:
        return TradingSeries(self.dates, self.column(role))

    def with_column(self, role: str, values) -> "AlignedPanel":
        cols = dict(self.columns)
        cols[role] = np.asarray(values, dtype=float)
        return AlignedPanel(self.dates, cols)

    def subset(self, roles) -> "AlignedPanel":
        return AlignedPanel(self.dates, {r: self.columns[r] for r in roles})

    def drop_first(self, k: int) -> "AlignedPanel":
        return AlignedPanel(
            self.dates[k:], {r: v[k:] for r, v in self.columns.items()}
        )

    def matrix(self, roles=None) -> np.ndarray:
        roles = list(self.columns) if roles is None else list(roles)
        return np.column_stack([self.column(r) for r in roles])


@dataclass(frozen=True)
class PanelIssue:
    severity: str  # "error" | "warning"
    role: str
    message: str
    date: str | None = None


@dataclass(frozen=True)
class ValidationReport:
    n_observations: int
    issues: tuple

    @property
    def ok(self) -> bool:
        return not any(i.severity == "error" for i in self.issues)


def read_series(spec: SeriesSpec) -> TradingSeries:
    """Read one variable from CSV, validating every row.

    Rows are sorted by date; duplicate dates, unparseable dates or values, and
    files without data rows are rejected with the offending line number.
    """
    try:
        fh = open(spec.path, "r", encoding="utf-8", newline="")
    except OSError as exc:
        raise IngestionError(f"cannot open {spec.path}: {exc.strerror}", path=spec.path)

    rows = []
    with fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyInputError(f"{spec.path} is empty", line=0, path=spec.path)
        header = [h.strip() for h in header]
        for col in (spec.date_column, spec.value_column):
            if col not in header:
                raise IngestionError(
                    f"{spec.path}: header has no column '{col}' (found {header})",
                    line=1,
                    path=spec.path,
                )
        d_idx = header.index(spec.date_column)
        v_idx = header.index(spec.value_column)
        needed = max(d_idx, v_idx) + 1

        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) < needed:
                raise IngestionError(
                    f"{spec.path}:{lineno}: expected at least {needed} fields, got {len(row)}",
                    line=lineno,
                    path=spec.path,
                )
            raw_date = row[d_idx].strip()
            raw_value = row[v_idx].strip()
            try:
                day = _dt.date.fromisoformat(raw_date)
            except ValueError:
                raise IngestionError(
                    f"{spec.path}:{lineno}: invalid ISO-8601 date '{raw_date}'",
                    line=lineno,
                    path=spec.path,
                )
            try:
                value = float(raw_value)
            except ValueError:
                raise IngestionError(
                    f"{spec.path}:{lineno}: invalid numeric value '{raw_value}'",
                    line=lineno,
                    path=spec.path,
                )
            rows.append((day, value, lineno))

    if not rows:
        raise EmptyInputError(f"{spec.path} has a header but no data rows", path=spec.path)

    rows.sort(key=lambda r: r[0])
    for (d1, _, _), (d2, _, line2) in zip(rows, rows[1:]):
        if d1 == d2:
            raise DuplicateDateError(
                f"{spec.path}:{line2}: duplicate date {d2}",
                date=str(d2),
                line=line2,
                path=spec.path,
            )
    return TradingSeries([r[0] for r in rows], [r[1] for r in rows])


def write_series_csv(s: TradingSeries, path, value_header: str = "value") -> None:
    """Write ``date,<value_header>`` rows with 10 significant digits."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(f"date,{value_header}\n")
        for d, v in zip(s.dates, s.values):
            fh.write(f"{d},{v:.10g}\n")


def align_panel(series, policy: str = "intersect",
                max_gap_days: int = DEFAULT_MAX_FFILL_GAP_DAYS) -> AlignedPanel:
    """Join (role, TradingSeries) pairs onto one calendar.

    ``intersect`` keeps the common dates of every series.  ``forward-fill``
    keeps the base calendar (the YIELD-SOURCE-PRICE series if present, else
    the first series listed) and carries every other series forward; a fill
    across more than ``max_gap_days`` calendar days raises ``StaleDataError``.
    """
    series = list(series)
    if len(series) < 2:
        raise AlignmentError("alignment needs at least two series")
    roles = [r for r, _ in series]
    if len(set(roles)) != len(roles):
        raise AlignmentError(f"duplicate roles in alignment input: {roles}")

    if policy == "intersect":
        shared = series[0][1].dates
        for _, s in series[1:]:
            shared = np.intersect1d(shared, s.dates)
        if shared.size == 0:
            spans = ", ".join(
                f"{role}: {s.dates[0]}..{s.dates[-1]}" for role, s in series
            )
            raise AlignmentError(f"no shared dates across series ({spans})")
        cols = {}
        for role, s in series:
            idx = np.searchsorted(s.dates, shared)
            cols[role] = s.values[idx]
        return AlignedPanel(shared, cols)

    if policy == "forward-fill":
        base_idx = next(
            (i for i, (r, _) in enumerate(series) if r == ROLE_PRICE), 0
        )
        base_role, base = series[base_idx]
        calendar = base.dates
        cols = {base_role: base.values.copy()}
        for role, s in series:
            if role == base_role:
                continue
            if s.dates[0] > calendar[0]:
                raise AlignmentError(
                    f"{role} starts {s.dates[0]}, after the first base date "
                    f"{calendar[0]}; cannot forward-fill"
                )
            pos = np.searchsorted(s.dates, calendar, side="right") - 1
            gaps = (calendar - s.dates[pos]).astype(int)
            worst = int(gaps.max())
            if worst > max_gap_days:
                at = calendar[int(np.argmax(gaps))]
                raise StaleDataError(
                    f"{role} would be carried {worst} calendar days forward at {at} "
                    f"(limit {max_gap_days})"
                )
            cols[role] = s.values[pos]
        ordered = {role: cols[role] for role, _ in series}
        return AlignedPanel(calendar, ordered)

    raise ConfigurationError(f"unknown alignment policy '{policy}'")


def validate_panel(panel: AlignedPanel) -> ValidationReport:
    """Report-only checks: non-finite cells and constant columns.

    A constant column is a warning because unit-root tests and PCA both
    degenerate on it.
    """
    issues = []
    for role, values in panel.columns.items():
        bad = ~np.isfinite(values)
        if np.any(bad):
            at = panel.dates[bad][0]
            issues.append(
                PanelIssue("error", role, "non-finite value", date=str(at))
            )
        elif len(values) > 1 and np.all(values == values[0]):
            issues.append(
                PanelIssue("warning", role, "constant column (tests would degenerate)")
            )
    return ValidationReport(n_observations=len(panel), issues=tuple(issues))


def write_panel_csv(panel: AlignedPanel, path) -> None:
    """Export the panel as ``date,<role>,...`` with 10 significant digits."""
    roles = panel.roles
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("date," + ",".join(roles) + "\n")
        for i, d in enumerate(panel.dates):
            cells = ",".join(f"{panel.columns[r][i]:.10g}" for r in roles)
            fh.write(f"{d},{cells}\n")


def read_panel_csv(path) -> AlignedPanel:
    """Read a panel previously written by :func:`write_panel_csv`."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyInputError(f"{path} is empty", line=0, path=str(path))
        if not header or header[0] != "date":
            raise IngestionError(f"{path}: first column must be 'date'", line=1, path=str(path))
        roles = header[1:]
        dates, rows = [], []
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            try:
                dates.append(_dt.date.fromisoformat(row[0].strip()))
                rows.append([float(c) for c in row[1:]])
            except ValueError as exc:
                raise IngestionError(f"{path}:{lineno}: {exc}", line=lineno, path=str(path))
    if not rows:
        raise EmptyInputError(f"{path} has a header but no data rows", path=str(path))
    data = np.asarray(rows, dtype=float)
    return AlignedPanel(dates, {r: data[:, j] for j, r in enumerate(roles)})


def parse_flat_config(path) -> dict:
    """Parse a flat ``key = value`` text file (``#`` comments allowed)."""
    entries = {}
    try:
        fh = open(path, "r", encoding="utf-8")
    except OSError as exc:
        raise ConfigurationError(f"cannot open config {path}: {exc.strerror}")
    with fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            if "=" not in stripped:
                raise ConfigurationError(
                    f"{path}:{lineno}: expected 'key = value', got '{stripped}'"
                )
            key, _, value = stripped.partition("=")
            entries[key.strip()] = value.strip()
    return entries


def dataset_from_config(entries: dict, base_dir=None) -> tuple:
    """Extract (SeriesSpec list, alignment policy, max gap) from config entries.

    Dataset keys: ``<role> = path`` for YIELD-SOURCE-PRICE (alias ``price``),
    FXR, CNB, USB, plus optional ``<role>.date_column`` / ``<role>.value_column``
    and ``alignment`` / ``max_gap_days``.
    """
    import os

    aliases = {
        "price": ROLE_PRICE,
        "yield-source-price": ROLE_PRICE,
        "fxr": ROLE_FXR,
        "cnb": ROLE_CNB,
        "usb": ROLE_USB,
    }
    specs = []
    for key, role in aliases.items():
        if key not in entries:
            continue
        if any(s.role == role for s in specs):
            raise ConfigurationError(f"role {role} configured twice")
        path = entries[key]
        if base_dir is not None and not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        specs.append(
            SeriesSpec(
                role=role,
                path=path,
                date_column=entries.get(f"{key}.date_column", "date"),
                value_column=entries.get(f"{key}.value_column", "value"),
            )
        )
    if not specs:
        raise ConfigurationError(
            "config declares no data series (expected keys price/fxr/cnb/usb)"
        )
    policy = entries.get("alignment", "intersect")
    if policy not in ("intersect", "forward-fill"):
        raise ConfigurationError(f"unknown alignment policy '{policy}'")
    try:
        max_gap = int(entries.get("max_gap_days", DEFAULT_MAX_FFILL_GAP_DAYS))
    except ValueError:
        raise ConfigurationError("max_gap_days must be an integer")
    return specs, policy, max_gap
