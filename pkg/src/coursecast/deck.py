"""Deck assembly: fold the cell sequence into slides, sub-slides and fragments.

Folding rules, in cell order:

* ``slide``     opens a new top-level slide; the cell itself is its first block.
* ``subslide``  opens a new sub-slide under the current top-level slide
                (nesting is capped there: further subslides become siblings).
* ``fragment``  appends a block revealed one step after everything before it.
* ``-``/inline  appends a block revealed together with the preceding content.
* ``skip``      contributes nothing.
* ``notes``     extends the narration of the current slide-or-subslide and
                never becomes visible content.

Content arriving before any slide-typed cell opens an implicit first slide
and leaves a diagnostic rather than failing the build.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from .errors import NoTitleError
from .ingest import Cell, CellKind, SlideType


@dataclass(frozen=True)
class CourseMeta:
    title: str
    subtitles: tuple[str, ...]
    source_cell_index: int


class BlockKind(Enum):
    PROSE = "prose"
    CODE_CELL = "code"


@dataclass(frozen=True)
class ContentBlock:
    cell_index: int
    kind: BlockKind
    reveal_step: int  # 0 = visible immediately, >=1 = fragment step


@dataclass
class Slide:
    ordinal: int  # 1-based; for sub-slides, 1-based within the parent
    title: str = ""
    blocks: list[ContentBlock] = field(default_factory=list)
    subslides: list["Slide"] = field(default_factory=list)
    narration: str = ""


@dataclass
class Deck:
    meta: CourseMeta
    slides: list[Slide]
    cells: tuple[Cell, ...]  # store for ContentBlock.cell_index back-references
    diagnostics: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        self._by_index = {cell.index: cell for cell in self.cells}

    def cell(self, index: int) -> Cell:
        return self._by_index[index]


_ATX_HEADING = re.compile(r"^(#{1,6})\s+(.+?)\s*#*\s*$")
_FENCE = re.compile(r"^\s*(```|~~~)")


def _headings(source: str) -> Iterable[tuple[int, str]]:
    """Yield (level, text) for ATX headings outside fenced code."""
    in_fence = False
    for line in source.splitlines():
        if _FENCE.match(line):
            in_fence = not in_fence
            continue
        if in_fence:
            continue
        match = _ATX_HEADING.match(line)
        if match:
            yield len(match.group(1)), match.group(2)


def extract_meta(first_cell: Cell) -> CourseMeta:
    """Read the course title and subtitle lines from the notebook's title cell.

    The first level-1 heading becomes the title; level-2/3 headings after it
    become the subtitles (author, date, ...) in order.
    """
    title: str | None = None
    subtitles: list[str] = []
    for level, text in _headings(first_cell.source):
        if title is None:
            if level == 1:
                title = text
        elif level in (2, 3):
            subtitles.append(text)
    if title is None:
        raise NoTitleError(
            "the first markdown cell has no level-1 heading; start the notebook with a "
            "markdown title cell such as '# My Course' followed by '### Author' / '### Date' lines"
        )
    return CourseMeta(title=title, subtitles=tuple(subtitles), source_cell_index=first_cell.index)


def _block_kind(cell: Cell) -> BlockKind:
    return BlockKind.CODE_CELL if cell.kind is CellKind.CODE else BlockKind.PROSE


def _max_step(slide: Slide) -> int:
    return max((block.reveal_step for block in slide.blocks), default=0)


def _extend_narration(slide: Slide, text: str) -> None:
    if not text:  # an empty notes cell adds nothing, not even a separator
        return
    slide.narration = f"{slide.narration}\n\n{text}" if slide.narration else text


def build_deck(cells: Sequence[Cell], meta: CourseMeta) -> Deck:
    """Fold ``cells`` (the notebook minus the title cell) into a :class:`Deck`."""
    slides: list[Slide] = []
    diagnostics: list[str] = []
    top: Slide | None = None  # current top-level slide
    container: Slide | None = None  # slide-or-subslide receiving blocks and notes

    def open_implicit(cell: Cell) -> None:
        nonlocal top, container
        slides.append(Slide(ordinal=len(slides) + 1))
        top = slides[-1]
        container = top
        diagnostics.append(
            f"cell {cell.index}: content appears before any slide-typed cell; "
            "opened an implicit first slide"
        )

    for cell in cells:
        slide_type = cell.slide_type
        if slide_type is SlideType.SKIP:
            continue
        if slide_type is SlideType.SLIDE:
            slides.append(Slide(ordinal=len(slides) + 1))
            top = slides[-1]
            container = top
            container.blocks.append(ContentBlock(cell.index, _block_kind(cell), 0))
            continue
        if slide_type is SlideType.SUBSLIDE:
            if top is None:
                open_implicit(cell)
            sub = Slide(ordinal=len(top.subslides) + 1)
            top.subslides.append(sub)
            container = sub
            container.blocks.append(ContentBlock(cell.index, _block_kind(cell), 0))
            continue
        if slide_type is SlideType.NOTES:
            if container is None:
                open_implicit(cell)
            _extend_narration(container, cell.source)
            continue
        # fragment or inline content
        if container is None:
            open_implicit(cell)
        step = _max_step(container)
        if slide_type is SlideType.FRAGMENT:
            step += 1
        container.blocks.append(ContentBlock(cell.index, _block_kind(cell), step))

    if not slides:
        diagnostics.append("notebook produced no slides (every cell was skipped or absent)")

    deck = Deck(meta=meta, slides=slides, cells=tuple(cells), diagnostics=diagnostics)
    for slide in slides:
        for entry in [slide, *slide.subslides]:
            entry.title = _slide_title(entry, deck.cell)
    return deck


def _slide_title(slide: Slide, cell_lookup) -> str:
    """First level-1/2 heading of the slide's first block, else empty."""
    if not slide.blocks:
        return ""
    cell = cell_lookup(slide.blocks[0].cell_index)
    if cell.kind is not CellKind.MARKDOWN:
        return ""
    for level, text in _headings(cell.source):
        if level in (1, 2):
            return text
    return ""


_NON_ALNUM = re.compile(r"[^A-Za-z0-9]+")


def slide_audio_name(slide: Slide, taken: Iterable[str] = ()) -> str:
    """Sanitized audio file stem for a slide: the title with every character
    outside [A-Za-z0-9] removed, case preserved.

    An empty result falls back to ``Slide{ordinal}``; collisions with names in
    ``taken`` get the slide ordinal appended until unique.
    """
    taken = set(taken)
    base = _NON_ALNUM.sub("", slide.title)
    name = base or f"Slide{slide.ordinal}"
    while name in taken:
        name = f"{name}{slide.ordinal}"
    return name


def rolled_narration(slide: Slide) -> str:
    """Narration spoken for a top-level slide: its own notes, then each
    sub-slide's notes in order, blank-line separated."""
    parts = [slide.narration] + [sub.narration for sub in slide.subslides]
    return "\n\n".join(part for part in parts if part)
