"""Shared test helpers: notebook builders, cell factories, URL extraction."""

from __future__ import annotations

import json
from html.parser import HTMLParser

from coursecast.deck import CourseMeta
from coursecast.ingest import Cell, CellKind, SlideType

SLIDE_TYPE_LABELS = {
    SlideType.SLIDE: "slide",
    SlideType.SUBSLIDE: "subslide",
    SlideType.FRAGMENT: "fragment",
    SlideType.SKIP: "skip",
    SlideType.NOTES: "notes",
    SlideType.INLINE: "-",
}


def md_cell(source, slide_type="-", **extra):
    cell = {
        "cell_type": "markdown",
        "metadata": {"slideshow": {"slide_type": slide_type}},
        "source": source,
    }
    cell.update(extra)
    return cell


def code_cell(source, slide_type="-", outputs=None):
    return {
        "cell_type": "code",
        "execution_count": None,
        "metadata": {"slideshow": {"slide_type": slide_type}},
        "outputs": outputs or [],
        "source": source,
    }


def raw_cell(source):
    return {"cell_type": "raw", "metadata": {}, "source": source}


def notebook_bytes(cells, major=4, minor=5):
    return json.dumps(
        {"cells": cells, "metadata": {}, "nbformat": major, "nbformat_minor": minor}
    ).encode("utf-8")


def make_cells(specs):
    """Build Cell objects from (slide_type, source[, kind]) tuples."""
    cells = []
    for index, spec in enumerate(specs):
        slide_type, source = spec[0], spec[1]
        kind = spec[2] if len(spec) > 2 else CellKind.MARKDOWN
        if isinstance(slide_type, str):
            slide_type = {v: k for k, v in SLIDE_TYPE_LABELS.items()}[slide_type]
        cells.append(Cell(index=index, kind=kind, source=source, slide_type=slide_type))
    return cells


DUMMY_META = CourseMeta(title="Test Course", subtitles=(), source_cell_index=-1)


_URL_ATTRS = {"src", "href", "data", "poster", "action", "formaction", "cite", "srcset"}


class _UrlCollector(HTMLParser):
    def __init__(self):
        super().__init__()
        self.urls = []

    def handle_starttag(self, tag, attrs):
        for name, value in attrs:
            if value and name in _URL_ATTRS:
                self.urls.append(value)


def collect_attribute_urls(html_text):
    """Every URL-bearing attribute value in the document."""
    collector = _UrlCollector()
    collector.feed(html_text)
    return collector.urls


def external_references(html_text):
    """Attribute URLs that reference something outside the document itself."""
    return [
        url
        for url in collect_attribute_urls(html_text)
        if not url.startswith(("data:", "#", "about:"))
    ]
