import json
from importlib import resources

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coursecast.errors import MissingCellsError, NotJsonError, UnsupportedFormatError
from coursecast.ingest import CellKind, SlideType, classify_slide_type, parse_notebook

from helpers import code_cell, md_cell, notebook_bytes, raw_cell

MINIMAL = b'{"nbformat":4,"nbformat_minor":5,"metadata":{},"cells":[]}'


def test_parse_minimal_empty_notebook():
    nb = parse_notebook(MINIMAL, "minimal.ipynb")
    assert nb.cells == []
    assert nb.nbformat_major == 4
    assert nb.dropped == 0


def test_parse_bundled_example_first_cell():
    data = resources.files("coursecast").joinpath("assets/original_example.ipynb").read_bytes()
    nb = parse_notebook(data, "original_example.ipynb")
    assert nb.cells[0].source.startswith("# Developing Data Products")
    assert nb.cells[0].slide_type is SlideType.SLIDE


def test_parse_rejects_nbformat_3():
    with pytest.raises(UnsupportedFormatError):
        parse_notebook(notebook_bytes([], major=3), "old.ipynb")


def test_parse_rejects_non_json():
    with pytest.raises(NotJsonError):
        parse_notebook(b"not json at all {", "bad.ipynb")


def test_parse_rejects_missing_cells():
    with pytest.raises(MissingCellsError):
        parse_notebook(b'{"nbformat":4,"metadata":{}}', "nocells.ipynb")


def test_parse_rejects_non_object_document():
    with pytest.raises(UnsupportedFormatError):
        parse_notebook(b"[1, 2, 3]", "list.ipynb")


def test_any_minor_version_accepted():
    nb = parse_notebook(notebook_bytes([md_cell("x")], minor=0), "m0.ipynb")
    assert len(nb.cells) == 1


def test_raw_cells_dropped_and_counted():
    cells = [md_cell("a"), raw_cell("<ignore/>"), code_cell("1"), raw_cell("more")]
    nb = parse_notebook(notebook_bytes(cells), "raw.ipynb")
    assert [c.kind for c in nb.cells] == [CellKind.MARKDOWN, CellKind.CODE]
    assert nb.dropped == 2
    assert any("dropped 2" in d for d in nb.diagnostics)
    # round-trip count: kept + dropped == cells in file
    assert len(nb.cells) + nb.dropped == len(cells)


def test_indices_contiguous_after_drop():
    cells = [raw_cell("x"), md_cell("a"), raw_cell("y"), md_cell("b")]
    nb = parse_notebook(notebook_bytes(cells), "idx.ipynb")
    assert [c.index for c in nb.cells] == [0, 1]


def test_source_joined_from_line_array():
    cell = md_cell(["line one\n", "line two"])
    nb = parse_notebook(notebook_bytes([cell]), "lines.ipynb")
    assert nb.cells[0].source == "line one\nline two"


def test_source_accepted_as_single_string():
    nb = parse_notebook(notebook_bytes([md_cell("one string\nsource")]), "str.ipynb")
    assert nb.cells[0].source == "one string\nsource"


def test_attachments_become_data_uris():
    cell = md_cell("![x](attachment:pic.png)")
    cell["attachments"] = {"pic.png": {"image/png": "aGVsbG8="}}
    nb = parse_notebook(notebook_bytes([cell]), "att.ipynb")
    assert nb.cells[0].attachments == {"pic.png": "data:image/png;base64,aGVsbG8="}


@pytest.mark.parametrize(
    "label,expected",
    [
        ("slide", SlideType.SLIDE),
        ("subslide", SlideType.SUBSLIDE),
        ("fragment", SlideType.FRAGMENT),
        ("skip", SlideType.SKIP),
        ("notes", SlideType.NOTES),
        ("-", SlideType.INLINE),
    ],
)
def test_classify_known_labels(label, expected):
    assert classify_slide_type({"slideshow": {"slide_type": label}}) is expected


def test_classify_missing_metadata_is_inline():
    assert classify_slide_type({}) is SlideType.INLINE
    assert classify_slide_type({"slideshow": {}}) is SlideType.INLINE
    assert classify_slide_type({"slideshow": "junk"}) is SlideType.INLINE


def test_classify_unknown_label_warns():
    diagnostics = []
    assert classify_slide_type({"slideshow": {"slide_type": "banana"}}, diagnostics) is SlideType.INLINE
    assert len(diagnostics) == 1
    assert "banana" in diagnostics[0]


@given(st.one_of(st.none(), st.text(max_size=12)))
def test_classify_total_and_deterministic(label):
    metadata = {} if label is None else {"slideshow": {"slide_type": label}}
    first = classify_slide_type(metadata)
    assert classify_slide_type(metadata) is first
    assert isinstance(first, SlideType)


@given(
    st.lists(
        st.tuples(st.sampled_from(["markdown", "code"]), st.text(max_size=80)),
        max_size=12,
    )
)
def test_parse_lossless_for_markdown_and_code(cell_specs):
    cells = [
        md_cell(source) if kind == "markdown" else code_cell(source)
        for kind, source in cell_specs
    ]
    nb = parse_notebook(notebook_bytes(cells), "prop.ipynb")
    assert [c.source for c in nb.cells] == [source for _, source in cell_specs]
    assert [c.index for c in nb.cells] == list(range(len(cell_specs)))


def test_stored_outputs_do_not_survive():
    cell = code_cell("print(1)", outputs=[{"output_type": "stream", "text": ["1\n"]}])
    nb = parse_notebook(notebook_bytes([cell]), "out.ipynb")
    # only the source is carried; stored outputs have no field to live in
    assert nb.cells[0].source == "print(1)"
    assert not hasattr(nb.cells[0], "outputs")
