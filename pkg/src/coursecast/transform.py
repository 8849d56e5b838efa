"""Markdown rendering, interaction-marker replacement and runnable code blocks.

The two author-facing markers are matched as exact byte strings before
rendering and swapped for placeholder elements the client runtime picks up:

    <div><!--Course_Text--></div>  ->  <div class="course-input" data-widget="{id}" data-kind="text"></div>
    <div><!--Course_Code--></div>  ->  <div class="course-input" data-widget="{id}" data-kind="code"></div>

Code cells become runnable editor blocks:

    <div class="course-runnable" data-widget="{id}"><pre class="course-src">{escaped source}</pre></div>
"""

from __future__ import annotations

import html
import re
from dataclasses import dataclass, field
from enum import Enum

from markdown_it import MarkdownIt

from .ingest import Cell, CellKind

TEXT_MARKER = "<div><!--Course_Text--></div>"
CODE_MARKER = "<div><!--Course_Code--></div>"


class WidgetKind(Enum):
    TEXT_INPUT = "text"
    CODE_INPUT = "code"


@dataclass(frozen=True)
class Widget:
    id: str
    kind: WidgetKind
    origin_cell: int


@dataclass
class RenderedBlock:
    html: str
    widgets: list[Widget] = field(default_factory=list)
    runnable: bool = False
    widget_id: str | None = None  # set for runnable editor blocks


class WidgetIdAllocator:
    """Deck-wide unique widget ids ("w1", "w2", ...) handed out in document order."""

    def __init__(self) -> None:
        self._next = 1

    def take(self) -> str:
        widget_id = f"w{self._next}"
        self._next += 1
        return widget_id


# CommonMark plus tables; raw HTML passes through (scripts are stripped below).
_markdown = MarkdownIt("commonmark").enable("table")

_MARKER = re.compile(r"<div><!--Course_(Text|Code)--></div>")
_MARKER_VARIANT = re.compile(r"<!--\s*Course_(?:Text|Code)\s*-->")
_SCRIPT_ELEMENT = re.compile(
    r"<script\b[^>]*>.*?</script\s*>|<script\b[^>]*/?>", re.IGNORECASE | re.DOTALL
)
_HTML_COMMENT = re.compile(r"<!--.*?-->", re.DOTALL)


def replace_markers(
    source: str,
    id_allocator: WidgetIdAllocator,
    origin_cell: int = -1,
    diagnostics: list[str] | None = None,
) -> tuple[str, list[Widget]]:
    """Swap every exact marker occurrence for a placeholder element.

    Near-miss variants (whitespace inside the comment, a bare comment without
    its div) are left alone and reported as diagnostics so authors can fix
    them; they never become widgets.
    """
    widgets: list[Widget] = []

    def _swap(match: re.Match) -> str:
        kind = WidgetKind.TEXT_INPUT if match.group(1) == "Text" else WidgetKind.CODE_INPUT
        widget = Widget(id=id_allocator.take(), kind=kind, origin_cell=origin_cell)
        widgets.append(widget)
        return (
            f'<div class="course-input" data-widget="{widget.id}" data-kind="{kind.value}"></div>'
        )

    replaced = _MARKER.sub(_swap, source)
    if diagnostics is not None:
        for variant in _MARKER_VARIANT.finditer(replaced):
            diagnostics.append(
                f"cell {origin_cell}: {variant.group(0)!r} looks like an input marker but is "
                f"not the exact form {TEXT_MARKER!r} / {CODE_MARKER!r}; left as-is"
            )
    return replaced, widgets


def render_markdown(
    source: str,
    attachments: dict[str, str] | None = None,
    diagnostics: list[str] | None = None,
) -> str:
    """Render markdown (CommonMark + tables + fenced code) to HTML.

    Raw HTML passes through except script elements, which are stripped with a
    diagnostic. HTML comments are dropped from the output, and notebook
    ``attachment:`` image references are rewritten to their data URIs.
    """
    rendered = _markdown.render(source)
    rendered, script_count = _SCRIPT_ELEMENT.subn("", rendered)
    if script_count and diagnostics is not None:
        diagnostics.append(f"stripped {script_count} script element(s) from markdown content")
    rendered = _HTML_COMMENT.sub("", rendered)
    for name, data_uri in (attachments or {}).items():
        rendered = rendered.replace(f'src="attachment:{name}"', f'src="{data_uri}"')
    return rendered.strip()


def render_markdown_cell(
    cell: Cell,
    id_allocator: WidgetIdAllocator,
    diagnostics: list[str] | None = None,
) -> RenderedBlock:
    """Marker replacement followed by rendering, as one prose block."""
    replaced, widgets = replace_markers(cell.source, id_allocator, cell.index, diagnostics)
    rendered = render_markdown(replaced, cell.attachments, diagnostics)
    return RenderedBlock(html=rendered, widgets=widgets, runnable=False)


def transform_code_cell(cell: Cell, id_allocator: WidgetIdAllocator) -> RenderedBlock:
    """Turn a code cell into a runnable editor block.

    The editor prefill is the cell source byte-for-byte (HTML-escaped in
    transit); stored notebook outputs are dropped because execution happens
    live in the browser.
    """
    if cell.kind is not CellKind.CODE:
        raise ValueError(f"cell {cell.index} is not a code cell")
    widget_id = id_allocator.take()
    block_html = (
        f'<div class="course-runnable" data-widget="{widget_id}">'
        f'<pre class="course-src">{html.escape(cell.source)}</pre></div>'
    )
    return RenderedBlock(html=block_html, runnable=True, widget_id=widget_id)
