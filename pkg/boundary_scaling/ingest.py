"""
Reading and writing profile files.

Two input formats are supported:

1. **canonical**: UTF-8 text, a header of ``# key = value`` lines, a blank
   line, then two tab-separated numeric columns. The columns are
   ``y_plus<TAB>u_plus``, or ``y<TAB>u`` in metres and m/s when the header
   declares ``# units = dimensional``. Lines starting with ``#`` after the
   header are comments.
2. **whitespace_table**: a headerless numeric table of two whitespace-separated
   columns; metadata comes from the caller (the CLI's ``--metadata`` flags).

write_profile always emits the canonical format in wall units, with numbers
printed to 17 significant digits so that parse_profile(write_profile(p)) == p.

Example file::

    # label = run01
    # re_theta = 20000
    # u_free = 15
    # u_tau = 0.5
    # nu = 1.5e-05

    100	15.21
    120	15.62
"""

from __future__ import annotations

import io
import logging
import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import IO

import numpy as np
import pandas as pd

from boundary_scaling.exceptions import MissingMetadataError, ProfileParseError
from boundary_scaling.profiles import RunMetadata, VelocityProfile

logger = logging.getLogger(__name__)

REQUIRED_KEYS = ("re_theta", "u_tau", "nu", "u_free")
OPTIONAL_KEYS = ("label", "momentum_thickness", "units")

UNITS_WALL = "wall"
UNITS_DIMENSIONAL = "dimensional"

_FLOAT_FORMAT = ".17g"


class ProfileFormat(str, Enum):
    """Profile file formats."""

    CANONICAL = "canonical"
    WHITESPACE_TABLE = "whitespace_table"


@dataclass(frozen=True)
class CanonicalProfileFile:
    """
    The two parts of a profile file before validation.

    Attributes:
        header: Metadata key/value pairs, values as written.
        body: Numeric rows as (line number, first column, second column).
    """

    header: dict[str, str] = field(default_factory=dict)
    body: tuple[tuple[int, float, float], ...] = ()

    @property
    def units(self) -> str:
        return self.header.get("units", UNITS_WALL).strip().lower()

    def to_profile(self, default_label: str = "unnamed") -> VelocityProfile:
        """Validate the metadata and build a VelocityProfile."""
        meta = _metadata_from_header(self.header, default_label)
        units = self.units
        if units not in (UNITS_WALL, UNITS_DIMENSIONAL):
            raise ValueError(f"unknown units {units!r}; expected '{UNITS_WALL}' or '{UNITS_DIMENSIONAL}'")
        firsts = [row[1] for row in self.body]
        seconds = [row[2] for row in self.body]
        if units == UNITS_DIMENSIONAL:
            return VelocityProfile.from_dimensional(meta, firsts, seconds)
        return VelocityProfile.from_wall_units(meta, firsts, seconds)


def _metadata_from_header(header: Mapping[str, str], default_label: str) -> RunMetadata:
    missing = [key for key in REQUIRED_KEYS if key not in header]
    if missing:
        raise MissingMetadataError(missing)
    values: dict[str, float] = {}
    for key in (*REQUIRED_KEYS, "momentum_thickness"):
        if key not in header:
            continue
        try:
            values[key] = float(header[key])
        except ValueError:
            raise ValueError(f"metadata {key} = {header[key]!r} is not a number") from None
    return RunMetadata(
        re_theta=values["re_theta"],
        u_free=values["u_free"],
        u_tau=values["u_tau"],
        nu=values["nu"],
        label=header.get("label") or default_label,
        momentum_thickness=values.get("momentum_thickness"),
    )


_NAN_TOKENS = frozenset({"nan", "+nan", "-nan"})


def _parse_body(
    lines: list[tuple[int, str]], names: tuple[str, str]
) -> tuple[tuple[int, float, float], ...]:
    """
    Convert (line number, text) body lines to numeric rows.

    The first offending line raises ProfileParseError; within a line the
    first column is checked before the second.
    """
    if not lines:
        return ()
    line_nos = [line_no for line_no, _ in lines]
    tokens = pd.Series([text for _, text in lines], index=line_nos, dtype=object).str.split()
    counts = tokens.str.len()
    wrong = counts[counts != 2]
    raw = pd.DataFrame(
        [row if len(row) == 2 else [None, None] for row in tokens], index=line_nos, columns=list(names)
    )
    values = raw.apply(pd.to_numeric, errors="coerce").astype(float)
    bad = values.isna() | ~np.isfinite(values) | (values <= 0)
    bad_rows = bad.index[bad.any(axis=1)]
    first_bad = bad_rows[0] if len(bad_rows) else None
    if len(wrong) and (first_bad is None or wrong.index[0] <= first_bad):
        line_no = int(wrong.index[0])
        raise ProfileParseError(f"expected 2 columns, found {int(wrong.iloc[0])}", line_no)
    if first_bad is not None:
        line_no = int(first_bad)
        for name in names:
            value = values.at[first_bad, name]
            token = raw.at[first_bad, name]
            if math.isnan(value) and token.lower() not in _NAN_TOKENS:
                raise ProfileParseError(f"{name} is not a number: {token!r}", line_no)
            if not math.isfinite(value):
                raise ProfileParseError(f"{name} must be finite", line_no)
            if value <= 0:
                raise ProfileParseError(f"{name} must be positive", line_no)
    # float() parsing keeps 17-digit values bit-exact
    exact = raw.to_numpy(dtype=object).astype(float)
    return tuple((int(line_no), float(a), float(b)) for line_no, (a, b) in zip(line_nos, exact))


def _read_text(source: IO[bytes] | IO[str]) -> str:
    data = source.read()
    if isinstance(data, bytes):
        return data.decode("utf-8")
    return data


def _column_names(units: str) -> tuple[str, str]:
    return ("y", "u") if units == UNITS_DIMENSIONAL else ("y_plus", "u_plus")


def read_canonical(text: str) -> CanonicalProfileFile:
    """
    Split canonical text into header and body.

    The header ends at the first blank line or the first line not starting
    with ``#``.
    """
    header: dict[str, str] = {}
    body: list[tuple[int, str]] = []
    in_header = True
    names = _column_names(UNITS_WALL)
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if in_header:
            if line.startswith("#"):
                content = line[1:]
                if "=" not in content:
                    continue
                key, value = content.split("=", 1)
                header[key.strip().lower()] = value.strip()
                continue
            in_header = False
            names = _column_names(header.get("units", UNITS_WALL).strip().lower())
            if not line:
                continue
        if not line or line.startswith("#"):
            continue
        body.append((line_no, line))
    return CanonicalProfileFile(header=header, body=_parse_body(body, names))


def read_whitespace_table(text: str, metadata: Mapping[str, str]) -> CanonicalProfileFile:
    """Parse a headerless table; metadata supplies the header."""
    header = {key.strip().lower(): str(value).strip() for key, value in metadata.items()}
    names = _column_names(header.get("units", UNITS_WALL).strip().lower())
    body: list[tuple[int, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        body.append((line_no, line))
    return CanonicalProfileFile(header=header, body=_parse_body(body, names))


def parse_profile(
    source: IO[bytes] | IO[str],
    format_hint: ProfileFormat | str = ProfileFormat.CANONICAL,
    metadata: Mapping[str, str] | None = None,
    default_label: str = "unnamed",
) -> VelocityProfile:
    """
    Parse a profile file into a validated VelocityProfile.

    Args:
        source: Readable byte or text stream.
        format_hint: ``canonical`` or ``whitespace_table``.
        metadata: Metadata for whitespace tables; for canonical files these
            values override the header.
        default_label: Label used when none is supplied.

    Raises:
        ProfileParseError: On a malformed row (with its line number).
        MissingMetadataError: If required metadata keys are absent.
        ProfileValidationError: If the data violate a profile invariant.

    Example:
        >>> with open("run01.txt", "rb") as fh:
        ...     profile = parse_profile(fh)
    """
    fmt = ProfileFormat(format_hint)
    text = _read_text(source)
    if fmt is ProfileFormat.WHITESPACE_TABLE:
        parsed = read_whitespace_table(text, metadata or {})
    else:
        parsed = read_canonical(text)
        if metadata:
            overrides = {key.strip().lower(): str(value).strip() for key, value in metadata.items()}
            parsed = CanonicalProfileFile(header={**parsed.header, **overrides}, body=parsed.body)
    return parsed.to_profile(default_label)


def parse_profile_file(
    path: str | Path,
    format_hint: ProfileFormat | str = ProfileFormat.CANONICAL,
    metadata: Mapping[str, str] | None = None,
) -> VelocityProfile:
    """Parse a profile from a path; the file stem is the default label."""
    path = Path(path)
    with path.open("rb") as fh:
        profile = parse_profile(fh, format_hint, metadata, default_label=path.stem.strip() or "unnamed")
    logger.debug("read %d points from %s", len(profile), path)
    return profile


def format_profile(profile: VelocityProfile) -> str:
    """Render a profile in the canonical format."""
    meta = profile.meta
    lines = [
        f"# label = {meta.label}",
        f"# re_theta = {meta.re_theta:{_FLOAT_FORMAT}}",
        f"# u_free = {meta.u_free:{_FLOAT_FORMAT}}",
        f"# u_tau = {meta.u_tau:{_FLOAT_FORMAT}}",
        f"# nu = {meta.nu:{_FLOAT_FORMAT}}",
    ]
    if meta.momentum_thickness is not None:
        lines.append(f"# momentum_thickness = {meta.momentum_thickness:{_FLOAT_FORMAT}}")
    lines.append(f"# units = {UNITS_WALL}")
    lines.append("")
    lines.extend(
        f"{p.y_plus:{_FLOAT_FORMAT}}\t{p.u_plus:{_FLOAT_FORMAT}}" for p in profile.points
    )
    return "\n".join(lines) + "\n"


def write_profile(profile: VelocityProfile, sink: IO[bytes] | IO[str]) -> None:
    """
    Write a profile in the canonical format.

    Text sinks receive str, binary sinks UTF-8 bytes. Write errors propagate.
    """
    text = format_profile(profile)
    if isinstance(sink, io.TextIOBase):
        sink.write(text)
    else:
        try:
            sink.write(text.encode("utf-8"))  # type: ignore[arg-type]
        except TypeError:
            sink.write(text)  # type: ignore[arg-type]


def write_profile_file(profile: VelocityProfile, path: str | Path) -> Path:
    """Write a profile to a path in the canonical format."""
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_profile(profile))
    return path
