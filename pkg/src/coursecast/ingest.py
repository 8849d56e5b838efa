"""Notebook parsing: nbformat 4 JSON into an ordered, slide-typed cell sequence.

Only markdown and code cells survive the parse; raw cells are dropped and
counted in the diagnostics. Slide types come from the bit-exact metadata
path ``cells[i].metadata.slideshow.slide_type``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .errors import MissingCellsError, NotJsonError, UnsupportedFormatError


class CellKind(Enum):
    MARKDOWN = "markdown"
    CODE = "code"


class SlideType(Enum):
    SLIDE = "slide"
    SUBSLIDE = "subslide"
    FRAGMENT = "fragment"
    SKIP = "skip"
    NOTES = "notes"
    INLINE = "-"


_SLIDE_TYPE_BY_LABEL = {
    "slide": SlideType.SLIDE,
    "subslide": SlideType.SUBSLIDE,
    "fragment": SlideType.FRAGMENT,
    "skip": SlideType.SKIP,
    "notes": SlideType.NOTES,
    "-": SlideType.INLINE,
}


@dataclass(frozen=True)
class Cell:
    """One markdown or code cell, re-indexed contiguously from 0.

    ``attachments`` maps an embedded media name to a ready-to-use data URI.
    """

    index: int
    kind: CellKind
    source: str
    slide_type: SlideType
    attachments: dict[str, str] = field(default_factory=dict)


@dataclass
class RawNotebook:
    cells: list[Cell]
    nbformat_major: int
    source_path: Path
    dropped: int = 0
    diagnostics: list[str] = field(default_factory=list)


def classify_slide_type(cell_metadata: dict, diagnostics: list[str] | None = None) -> SlideType:
    """Map ``metadata.slideshow.slide_type`` to a :class:`SlideType`.

    Total over any metadata object: a missing key or ``"-"`` means inline
    content, and unknown labels degrade to inline with a warning appended to
    ``diagnostics`` (when given) instead of failing the parse.
    """
    slideshow = cell_metadata.get("slideshow")
    if not isinstance(slideshow, dict):
        return SlideType.INLINE
    label = slideshow.get("slide_type")
    if label is None:
        return SlideType.INLINE
    slide_type = _SLIDE_TYPE_BY_LABEL.get(label)
    if slide_type is None:
        if diagnostics is not None:
            diagnostics.append(f"unknown slide_type {label!r}; treating the cell as inline content")
        return SlideType.INLINE
    return slide_type


def _join_source(source) -> str:
    # nbformat stores source either as a list of lines (newlines included)
    # or, in older writers, as one string.
    if isinstance(source, str):
        return source
    if isinstance(source, list):
        return "".join(part if isinstance(part, str) else str(part) for part in source)
    return str(source)


def _attachment_uris(cell: dict) -> dict[str, str]:
    uris: dict[str, str] = {}
    attachments = cell.get("attachments")
    if not isinstance(attachments, dict):
        return uris
    for name, bundle in attachments.items():
        if not isinstance(bundle, dict) or not bundle:
            continue
        mime = sorted(bundle)[0]
        payload = bundle[mime]
        if isinstance(payload, list):
            payload = "".join(payload)
        payload = "".join(str(payload).split())
        uris[str(name)] = f"data:{mime};base64,{payload}"
    return uris


def parse_notebook(data: bytes, path: Path | str) -> RawNotebook:
    """Parse ``.ipynb`` bytes into a :class:`RawNotebook`.

    Raises :class:`NotJsonError` for non-JSON input,
    :class:`UnsupportedFormatError` for anything but nbformat major 4 and
    :class:`MissingCellsError` when the ``cells`` array is absent.
    """
    try:
        doc = json.loads(data)
    except (ValueError, UnicodeDecodeError) as exc:
        raise NotJsonError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise UnsupportedFormatError(f"{path}: top-level JSON value is not a notebook object")
    major = doc.get("nbformat")
    if major != 4:
        raise UnsupportedFormatError(
            f"{path}: nbformat {major!r} is not supported; only nbformat 4 notebooks are"
        )
    if "cells" not in doc:
        raise MissingCellsError(f"{path}: notebook has no 'cells' array")
    raw_cells = doc["cells"]
    if not isinstance(raw_cells, list):
        raise MissingCellsError(f"{path}: 'cells' is not an array")

    diagnostics: list[str] = []
    cells: list[Cell] = []
    dropped_positions: list[int] = []
    for position, entry in enumerate(raw_cells):
        if not isinstance(entry, dict):
            dropped_positions.append(position)
            continue
        cell_type = entry.get("cell_type")
        if cell_type == "markdown":
            kind = CellKind.MARKDOWN
        elif cell_type == "code":
            kind = CellKind.CODE
        else:
            # raw cells (and anything unrecognized) never reach the deck
            dropped_positions.append(position)
            continue
        metadata = entry.get("metadata")
        if not isinstance(metadata, dict):
            metadata = {}
        cells.append(
            Cell(
                index=len(cells),
                kind=kind,
                source=_join_source(entry.get("source", "")),
                slide_type=classify_slide_type(metadata, diagnostics),
                attachments=_attachment_uris(entry),
            )
        )
    if dropped_positions:
        diagnostics.append(
            f"dropped {len(dropped_positions)} non-markdown/code cell(s) at file position(s) "
            + ", ".join(str(p) for p in dropped_positions)
        )
    return RawNotebook(
        cells=cells,
        nbformat_major=major,
        source_path=Path(path),
        dropped=len(dropped_positions),
        diagnostics=diagnostics,
    )
