"""coursecast: compile annotated Jupyter notebooks into standalone,
narrated, interactive HTML course decks."""

from .deck import (
    BlockKind,
    ContentBlock,
    CourseMeta,
    Deck,
    Slide,
    build_deck,
    extract_meta,
    rolled_narration,
    slide_audio_name,
)
from .emit import BuildConfig, CourseDocument, emit_course, write_output
from .ingest import Cell, CellKind, RawNotebook, SlideType, classify_slide_type, parse_notebook
from .transform import (
    RenderedBlock,
    Widget,
    WidgetIdAllocator,
    WidgetKind,
    render_markdown,
    render_markdown_cell,
    replace_markers,
    transform_code_cell,
)
from .tts import (
    AudioAsset,
    BackendKind,
    NarrationJob,
    TtsBackendConfig,
    plan_audio,
    synthesize,
    synthesize_all,
)

__version__ = "0.1.0"

__all__ = [
    "BlockKind",
    "ContentBlock",
    "CourseMeta",
    "Deck",
    "Slide",
    "build_deck",
    "extract_meta",
    "rolled_narration",
    "slide_audio_name",
    "BuildConfig",
    "CourseDocument",
    "emit_course",
    "write_output",
    "Cell",
    "CellKind",
    "RawNotebook",
    "SlideType",
    "classify_slide_type",
    "parse_notebook",
    "RenderedBlock",
    "Widget",
    "WidgetIdAllocator",
    "WidgetKind",
    "render_markdown",
    "render_markdown_cell",
    "replace_markers",
    "transform_code_cell",
    "AudioAsset",
    "BackendKind",
    "NarrationJob",
    "TtsBackendConfig",
    "plan_audio",
    "synthesize",
    "synthesize_all",
    "__version__",
]
