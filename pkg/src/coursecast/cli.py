"""Command-line entry point.

    usage: coursecast [-h] [-v] [-m] [-p] [-i INPUT] [filename]

plus the ``scaffold-ci [--force] [dir]`` subcommand, which drops a
GitHub-Pages deployment workflow and starter README into a repository.

Exit codes: 0 success, 1 build failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Mapping, Sequence

from . import __version__
from .deck import build_deck, extract_meta
from .emit import DEFAULT_INTERPRETER_URL, BuildConfig, emit_course, write_output
from .errors import CourseError, InputNotFound, NoTitleError, OutputIOError, RefusesOverwrite, UsageError
from .ingest import CellKind, parse_notebook
from .tts import TtsBackendConfig, plan_audio, synthesize_all

PROG = "coursecast"


class Subcommand(Enum):
    BUILD = "build"
    SCAFFOLD_CI = "scaffold-ci"


@dataclass
class CliInvocation:
    subcommand: Subcommand = Subcommand.BUILD
    filename: str | None = None
    input_flag: str | None = None
    mute: bool = False
    disable_prompt: bool = False
    show_version: bool = False
    target_dir: Path = Path(".")
    force: bool = False

    @property
    def input_name(self) -> str | None:
        return self.filename if self.filename is not None else self.input_flag


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); keep that decision in main()
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _build_parser() -> _Parser:
    parser = _Parser(prog=PROG, add_help=True)
    parser.add_argument("filename", nargs="?", help="Pass the file name without extension")
    parser.add_argument(
        "-v", "--version", action="store_true", help=f"Display the version of {PROG}"
    )
    parser.add_argument("-m", "--mute", action="store_true", help="Mute the audio")
    parser.add_argument(
        "-p", "--dPrompt", dest="disable_prompt", action="store_true", help="Disable prompt window"
    )
    parser.add_argument(
        "-i", dest="input_flag", metavar="INPUT", help="The file name without extension"
    )
    return parser


def _scaffold_parser() -> _Parser:
    parser = _Parser(prog=f"{PROG} scaffold-ci", add_help=True)
    parser.add_argument("dir", nargs="?", default=".", help="Repository root to scaffold")
    parser.add_argument(
        "--force", action="store_true", help="Overwrite an existing workflow/README"
    )
    return parser


def parse_args(argv: Sequence[str]) -> CliInvocation:
    """Map raw arguments onto a :class:`CliInvocation`; bad usage raises
    :class:`UsageError` rather than exiting."""
    argv = list(argv)
    if argv and argv[0] == Subcommand.SCAFFOLD_CI.value:
        ns = _scaffold_parser().parse_args(argv[1:])
        return CliInvocation(
            subcommand=Subcommand.SCAFFOLD_CI, target_dir=Path(ns.dir), force=ns.force
        )

    parser = _build_parser()
    ns = parser.parse_args(argv)
    inv = CliInvocation(
        filename=ns.filename,
        input_flag=ns.input_flag,
        mute=ns.mute,
        disable_prompt=ns.disable_prompt,
        show_version=ns.version,
    )
    if inv.filename is not None and inv.input_flag is not None and inv.filename != inv.input_flag:
        parser.error(
            f"conflicting input names: positional {inv.filename!r} vs -i {inv.input_flag!r}"
        )
    if not inv.show_version and inv.input_name is None:
        parser.error("a notebook name is required (positional filename or -i INPUT)")
    for name in (inv.input_name,) if inv.input_name else ():
        if name.endswith(".ipynb"):
            parser.error(f"pass the file name without extension (got {name!r})")
    return inv


def resolve_input(name: str, cwd: Path | None = None) -> Path:
    """Find the notebook for ``name``: ``{name}.ipynb`` in the working
    directory, else the bundled example template for ``original_example``."""
    cwd = Path.cwd() if cwd is None else cwd
    candidate = cwd / f"{name}.ipynb"
    if candidate.is_file():
        return candidate
    if name == "original_example":
        tmp = Path(tempfile.mkdtemp(prefix="coursecast-example-"))
        target = tmp / "original_example.ipynb"
        data = resources.files("coursecast").joinpath("assets/original_example.ipynb").read_bytes()
        target.write_bytes(data)
        return target
    raise InputNotFound(
        f"no notebook for {name!r}; tried (1) {candidate} and "
        "(2) the bundled example template (only available as 'original_example')"
    )


def run_build(inv: CliInvocation, env: Mapping[str, str] | None = None) -> int:
    """Orchestrate ingest -> deck -> transform -> tts -> emit -> write."""
    env = os.environ if env is None else env
    name = inv.input_name
    assert name is not None
    notebook_path = resolve_input(name)
    raw = parse_notebook(notebook_path.read_bytes(), notebook_path)

    title_cell = next((c for c in raw.cells if c.kind is CellKind.MARKDOWN), None)
    if title_cell is None:
        raise NoTitleError(
            "notebook has no markdown cell; the first markdown cell must carry the course title"
        )
    meta = extract_meta(title_cell)
    deck = build_deck([c for c in raw.cells if c.index != meta.source_cell_index], meta)
    deck.diagnostics[:0] = raw.diagnostics

    cfg = BuildConfig(
        input_name=name,
        mute=inv.mute,
        assistant_enabled=not inv.disable_prompt,
        interpreter_runtime_url=env.get("COURSE_INTERPRETER_URL", DEFAULT_INTERPRETER_URL),
        assistant_endpoint=env.get("COURSE_AI_ENDPOINT"),
        assistant_token=env.get("COURSE_AI_TOKEN"),
        tts=TtsBackendConfig.from_env(env),
    )
    assets = [] if cfg.mute else synthesize_all(plan_audio(deck), cfg.tts)
    doc = emit_course(deck, assets, cfg)
    written = write_output(doc, cfg, notebook_path)

    for diagnostic in deck.diagnostics:
        print(f"warning: {diagnostic}", file=sys.stderr)
    for path in written:
        print(path)
    return 0


_WORKFLOW_PATH = Path(".github/workflows/build-course.yml")

_WORKFLOW = """\
name: build-course

on:
  push:
    branches: [main]
  workflow_dispatch:

permissions:
  contents: read
  pages: write
  id-token: write

jobs:
  build:
    runs-on: ubuntu-latest
    # Narration defaults to the hermetic silent backend; point COURSE_TTS_CMD
    # or COURSE_TTS_URL at a real text-to-speech engine to get spoken audio.
    steps:
      - uses: actions/checkout@v4
      - uses: actions/setup-python@v5
        with:
          python-version: "3.11"
      - run: pip install coursecast
      - name: Build every notebook at the repository root
        shell: bash
        run: |
          shopt -s nullglob
          for nb in *.ipynb; do
            coursecast "${nb%.ipynb}"
          done
      - name: Write the course index
        shell: bash
        run: |
          python - <<'PY'
          from pathlib import Path
          out = Path("output")
          out.mkdir(exist_ok=True)
          pages = sorted(p.name for p in out.glob("*_pyglide.html"))
          items = "\\n".join(
              f'<li><a href="{name}">{name.removesuffix("_pyglide.html")}</a></li>'
              for name in pages
          )
          out.joinpath("index.html").write_text(
              "<!DOCTYPE html><html><head><meta charset='utf-8'>"
              f"<title>Courses</title></head><body><h1>Courses</h1><ul>{items}</ul></body></html>",
              encoding="utf-8",
          )
          PY
      - uses: actions/upload-pages-artifact@v3
        with:
          path: output

  deploy:
    needs: build
    runs-on: ubuntu-latest
    environment:
      name: github-pages
      url: ${{ steps.deployment.outputs.page_url }}
    steps:
      - id: deployment
        uses: actions/deploy-pages@v4
"""

_SCAFFOLD_README = """\
# Course repository

Courses live here as annotated Jupyter notebooks; every push to `main`
compiles each `*.ipynb` at the repository root into a standalone interactive
HTML deck and publishes the result to GitHub Pages.

## Getting started

1. Click "Use this template" to create your own copy of this repository.
2. In the repository settings, enable GitHub Pages with "GitHub Actions" as
   the source.
3. Add your notebooks at the repository root and push. The `build-course`
   workflow builds `output/` with one `{name}_pyglide.html` per notebook plus
   an `index.html` linking them all, then deploys it.
4. Share the published Pages links with your audience.

Authoring notes: the first markdown cell holds the course title (`# Title`)
and subtitle lines (`### Author`, `### Date`); label every cell with a Slide
Type (slide, subslide, fragment, skip, notes); `notes` cells become the
narrated audio track.
"""


def scaffold_ci(target_dir: Path, force: bool = False) -> list[Path]:
    """Write the Pages deployment workflow and a starter README into
    ``target_dir``. Refuses to overwrite existing files unless ``force``."""
    target_dir = Path(target_dir)
    workflow = target_dir / _WORKFLOW_PATH
    readme = target_dir / "README.md"
    existing = [p for p in (workflow, readme) if p.exists()]
    if existing and not force:
        raise RefusesOverwrite(
            "refusing to overwrite " + ", ".join(str(p) for p in existing) + " (use --force)"
        )
    try:
        workflow.parent.mkdir(parents=True, exist_ok=True)
        workflow.write_text(_WORKFLOW, encoding="utf-8")
        readme.write_text(_SCAFFOLD_README, encoding="utf-8")
    except OSError as exc:
        path = Path(getattr(exc, "filename", None) or target_dir)
        raise OutputIOError(f"cannot write {path}: {exc}", path=path) from exc
    return [workflow, readme]


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        inv = parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    if inv.subcommand is Subcommand.BUILD and inv.show_version:
        print(f"{PROG} {__version__}")
        return 0
    try:
        if inv.subcommand is Subcommand.SCAFFOLD_CI:
            for path in scaffold_ci(inv.target_dir, inv.force):
                print(path)
            return 0
        return run_build(inv)
    except CourseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.detail:
            for line in exc.detail.splitlines():
                print(f"  {line}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
