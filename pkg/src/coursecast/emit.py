"""Assemble the standalone course HTML and write the output tree.

The emitted document is self-contained: deck content as static sections (it
degrades to a readable page without JavaScript), a JSON deck manifest the
client runtime treats as its single source of truth, the runtime bundle
inlined, and relative ``slides_audios/`` references. The only external URLs
are the in-browser interpreter loader and, when enabled, the assistant
endpoint.
"""

from __future__ import annotations

import html
import json
import shutil
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .deck import BlockKind, Deck, Slide
from .errors import AudioMismatch, EmptyDeckError, OutputIOError
from .transform import (
    RenderedBlock,
    WidgetIdAllocator,
    render_markdown_cell,
    transform_code_cell,
)
from .tts import AudioAsset, TtsBackendConfig, plan_audio

DEFAULT_OUTPUT_DIR = "output"
DEFAULT_INTERPRETER_URL = "https://cdn.jsdelivr.net/pyodide/v0.26.2/full/pyodide.js"
HTML_SUFFIX = "_pyglide.html"  # emitted file is {input_name}_pyglide.html
AUDIO_DIR = "slides_audios"


@dataclass
class BuildConfig:
    input_name: str
    mute: bool = False
    assistant_enabled: bool = True
    output_dir: Path = Path(DEFAULT_OUTPUT_DIR)
    interpreter_runtime_url: str = DEFAULT_INTERPRETER_URL
    assistant_endpoint: str | None = None
    assistant_token: str | None = None
    tts: TtsBackendConfig = field(default_factory=TtsBackendConfig)

    def __post_init__(self) -> None:
        name = self.input_name
        if "/" in name or "\\" in name:
            raise ValueError(f"input name {name!r} must not contain path separators")
        if name.endswith(".ipynb"):
            raise ValueError(f"input name {name!r} must not carry the .ipynb extension")
        self.output_dir = Path(self.output_dir)


@dataclass
class CourseDocument:
    html: str
    assets: list[AudioAsset]
    manifest: dict


def _asset_text(name: str) -> str:
    return resources.files("coursecast").joinpath(f"assets/{name}").read_text(encoding="utf-8")


def _render_blocks(
    slide: Slide, deck: Deck, alloc: WidgetIdAllocator, diagnostics: list[str]
) -> list[tuple[int, RenderedBlock]]:
    rendered: list[tuple[int, RenderedBlock]] = []
    for block in slide.blocks:
        cell = deck.cell(block.cell_index)
        if block.kind is BlockKind.CODE_CELL:
            rendered.append((block.reveal_step, transform_code_cell(cell, alloc)))
        else:
            rendered.append((block.reveal_step, render_markdown_cell(cell, alloc, diagnostics)))
    return rendered


def _blocks_html(rendered: list[tuple[int, RenderedBlock]]) -> str:
    return "\n".join(
        f'<div class="block" data-reveal="{step}">\n{block.html}\n</div>'
        for step, block in rendered
    )


def _widget_entries(rendered: list[tuple[int, RenderedBlock]]) -> list[dict]:
    return [
        {"id": widget.id, "kind": widget.kind.value}
        for _, block in rendered
        for widget in block.widgets
    ]


def emit_course(deck: Deck, audio: list[AudioAsset], cfg: BuildConfig) -> CourseDocument:
    """Produce the single standalone HTML document plus its embedded manifest.

    ``audio`` must line up with what :func:`coursecast.tts.plan_audio` plans
    for this deck (or be empty for a muted build); anything else raises
    :class:`AudioMismatch`. Rendering warnings are appended to
    ``deck.diagnostics``.
    """
    if not deck.slides:
        raise EmptyDeckError("deck has no slides; nothing to emit")

    planned = plan_audio(deck)
    if cfg.mute:
        if audio:
            raise AudioMismatch("muted build was handed audio assets")
        audio_names: dict[int, str] = {}
    else:
        expected = [job.name for job in planned]
        got = [asset.name for asset in audio]
        if got != expected:
            raise AudioMismatch(f"audio assets {got} do not match the narration plan {expected}")
        audio_names = {job.slide_ordinal: job.name for job in planned}

    diagnostics = deck.diagnostics
    alloc = WidgetIdAllocator()
    sections: list[str] = []
    manifest_slides: list[dict] = []

    title = html.escape(deck.meta.title)
    subtitle_html = "\n".join(
        f'<p class="subtitle">{html.escape(line)}</p>' for line in deck.meta.subtitles
    )
    sections.append(
        '<section class="slide title-slide" id="slide-0">\n'
        '<div class="slide-body">\n'
        f'<header class="course-title">\n<h1>{title}</h1>\n{subtitle_html}\n</header>\n'
        "</div>\n</section>"
    )

    for slide in deck.slides:
        own = _render_blocks(slide, deck, alloc, diagnostics)
        sub_sections: list[str] = []
        sub_entries: list[dict] = []
        for sub in slide.subslides:
            sub_rendered = _render_blocks(sub, deck, alloc, diagnostics)
            sub_sections.append(
                f'<section class="subslide" data-sub="{sub.ordinal}" '
                f'id="slide-{slide.ordinal}-sub-{sub.ordinal}">\n'
                f'<div class="slide-body">\n{_blocks_html(sub_rendered)}\n</div>\n</section>'
            )
            sub_entries.append(
                {
                    "ordinal": sub.ordinal,
                    "title": sub.title,
                    "audio": None,
                    "subslides": [],
                    "widgets": _widget_entries(sub_rendered),
                }
            )
        audio_name = audio_names.get(slide.ordinal)
        audio_html = (
            f'<audio class="slide-audio" controls preload="none" '
            f'src="{AUDIO_DIR}/{audio_name}.mp3"></audio>\n'
            if audio_name
            else ""
        )
        sections.append(
            f'<section class="slide" data-ordinal="{slide.ordinal}" id="slide-{slide.ordinal}">\n'
            f'<div class="slide-body">\n{_blocks_html(own)}\n</div>\n'
            + "\n".join(sub_sections)
            + ("\n" if sub_sections else "")
            + audio_html
            + "</section>"
        )
        manifest_slides.append(
            {
                "ordinal": slide.ordinal,
                "title": slide.title,
                "audio": audio_name,
                "subslides": sub_entries,
                "widgets": _widget_entries(own),
            }
        )

    assistant: dict = {"enabled": cfg.assistant_enabled, "endpoint": None}
    if cfg.assistant_enabled:
        assistant["endpoint"] = cfg.assistant_endpoint
        if cfg.assistant_token:
            # opt-in extra key; absent unless a token was configured at build time
            assistant["token"] = cfg.assistant_token
    manifest = {
        "title": deck.meta.title,
        "subtitles": list(deck.meta.subtitles),
        "slides": manifest_slides,
        "assistant": assistant,
        "interpreter_url": cfg.interpreter_runtime_url,
    }

    assistant_html = ""
    if cfg.assistant_enabled:
        assistant_html = (
            '<aside id="assistant-panel" class="assistant-panel" aria-label="Course assistant">\n'
            '<div class="assistant-head">Assistant</div>\n'
            '<div class="assistant-log" id="assistant-log"></div>\n'
            '<form id="assistant-form">\n'
            '<input id="assistant-input" type="text" autocomplete="off" '
            'placeholder="Ask about this course">\n'
            '<button type="submit">Send</button>\n'
            "</form>\n</aside>\n"
        )

    # "</" must not appear verbatim inside inline <script> payloads
    manifest_json = json.dumps(manifest, separators=(",", ":")).replace("</", "<\\/")
    runtime_js = _asset_text("runtime.js").replace("</script", "<\\/script")

    document = f"""<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<meta name="viewport" content="width=device-width, initial-scale=1">
<title>{title}</title>
<style>
{_asset_text("course.css")}
</style>
</head>
<body>
<noscript><p class="nojs-note">JavaScript is disabled; the full course is shown below in reading order.</p></noscript>
{assistant_html}<main id="deck">
{chr(10).join(sections)}
</main>
<script type="application/json" id="course-manifest">{manifest_json}</script>
<script id="course-runtime">
{runtime_js}
</script>
</body>
</html>
"""
    return CourseDocument(html=document, assets=list(audio), manifest=manifest)


def write_output(doc: CourseDocument, cfg: BuildConfig, source_notebook: Path) -> list[Path]:
    """Write the output tree: the copied notebook, the course HTML and the
    audio directory. Overwrites any previous build of the same name."""
    out = cfg.output_dir
    written: list[Path] = []
    try:
        out.mkdir(parents=True, exist_ok=True)
        notebook_dest = out / f"{cfg.input_name}.ipynb"
        shutil.copyfile(source_notebook, notebook_dest)
        written.append(notebook_dest)
        html_dest = out / f"{cfg.input_name}{HTML_SUFFIX}"
        html_dest.write_text(doc.html, encoding="utf-8")
        written.append(html_dest)
        audio_dir = out / AUDIO_DIR
        if doc.assets:
            audio_dir.mkdir(exist_ok=True)
            for asset in doc.assets:
                dest = out / asset.relative_path
                dest.write_bytes(asset.data)
                written.append(dest)
        elif audio_dir.is_dir():
            shutil.rmtree(audio_dir)  # stale audio from a previous unmuted build
    except OSError as exc:
        path = Path(getattr(exc, "filename", None) or out)
        raise OutputIOError(f"cannot write {path}: {exc}", path=path) from exc
    return written
