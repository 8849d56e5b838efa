"""Narration synthesis through a pluggable text-to-speech backend.

Backends:

* ``command`` — a shell-free command template with ``{in}`` (narration text
  file) and ``{out}`` (required MP3 path) substitution points.
* ``http``    — POST ``{"text", "voice", "rate"}`` JSON, audio bytes back.
* ``null``    — deterministic silent MP3, word_count / 2.5 seconds long;
  keeps builds and CI hermetic.

Configured from the environment: ``COURSE_TTS_CMD`` selects the command
backend, otherwise ``COURSE_TTS_URL`` (+ optional ``COURSE_TTS_TOKEN``) the
HTTP one, otherwise the null backend.
"""

from __future__ import annotations

import re
import shlex
import subprocess
import tempfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Mapping, Sequence

import requests

from .audio import read_mp3_info, silent_mp3
from .deck import Deck, rolled_narration, slide_audio_name
from .errors import BackendFailure, BadAudio, SynthesisTimeout

NULL_WORDS_PER_SECOND = 2.5
DEFAULT_TIMEOUT_S = 120.0
DEFAULT_PARALLELISM = 2


class BackendKind(Enum):
    COMMAND = "command"
    HTTP = "http"
    NULL = "null"


@dataclass
class TtsBackendConfig:
    kind: BackendKind = BackendKind.NULL
    command_template: str | None = None
    endpoint_url: str | None = None
    auth_token: str | None = None
    voice: str = "default"
    rate: int = 150  # words-per-minute hint for backends that honor it
    timeout_s: float = DEFAULT_TIMEOUT_S

    def __post_init__(self) -> None:
        if self.kind is BackendKind.COMMAND:
            template = self.command_template or ""
            if "{in}" not in template or "{out}" not in template:
                raise ValueError("command template must contain both {in} and {out}")
        if self.kind is BackendKind.HTTP and not self.endpoint_url:
            raise ValueError("http backend needs an endpoint URL")

    @classmethod
    def from_env(cls, env: Mapping[str, str]) -> "TtsBackendConfig":
        command = env.get("COURSE_TTS_CMD")
        if command:
            return cls(kind=BackendKind.COMMAND, command_template=command)
        url = env.get("COURSE_TTS_URL")
        if url:
            return cls(kind=BackendKind.HTTP, endpoint_url=url, auth_token=env.get("COURSE_TTS_TOKEN"))
        return cls()


@dataclass(frozen=True)
class NarrationJob:
    slide_ordinal: int
    name: str  # sanitized audio stem, unique within the build
    text: str  # narration as authored (markdown)


@dataclass(frozen=True)
class AudioAsset:
    name: str
    relative_path: str  # always "slides_audios/{name}.mp3"
    data: bytes
    duration_hint: float | None = None


def plan_audio(deck: Deck) -> list[NarrationJob]:
    """One job per top-level slide whose rolled-up narration is non-empty,
    in slide order, with collision-free sanitized names."""
    jobs: list[NarrationJob] = []
    taken: set[str] = set()
    for slide in deck.slides:
        text = rolled_narration(slide)
        if not text:
            continue
        name = slide_audio_name(slide, taken)
        taken.add(name)
        jobs.append(NarrationJob(slide_ordinal=slide.ordinal, name=name, text=text))
    return jobs


_MD_FENCE_LINE = re.compile(r"^\s*(```|~~~).*$", re.MULTILINE)
_MD_HEADING = re.compile(r"^#{1,6}\s+", re.MULTILINE)
_MD_IMAGE = re.compile(r"!\[([^\]]*)\]\([^)]*\)")
_MD_LINK = re.compile(r"\[([^\]]*)\]\([^)]*\)")
_MD_EMPHASIS = re.compile(r"[*_`]+")
_HTML_TAG = re.compile(r"<[^>]+>")


def speech_text(markdown_text: str) -> str:
    """Strip markdown syntax from narration so TTS does not read punctuation."""
    text = _MD_FENCE_LINE.sub("", markdown_text)
    text = _MD_HEADING.sub("", text)
    text = _MD_IMAGE.sub(r"\1", text)
    text = _MD_LINK.sub(r"\1", text)
    text = _HTML_TAG.sub(" ", text)
    text = _MD_EMPHASIS.sub("", text)
    return " ".join(text.split())


def synthesize(job: NarrationJob, cfg: TtsBackendConfig) -> AudioAsset:
    """Run one narration job through the configured backend.

    Raises :class:`BackendFailure`, :class:`BadAudio` or
    :class:`SynthesisTimeout`; output is always MP3 (no transcoding)."""
    text = speech_text(job.text)
    if cfg.kind is BackendKind.NULL:
        data = silent_mp3(len(text.split()) / NULL_WORDS_PER_SECOND)
    elif cfg.kind is BackendKind.COMMAND:
        data = _run_command_backend(job, text, cfg)
    else:
        data = _run_http_backend(job, text, cfg)
    try:
        info = read_mp3_info(data)
    except ValueError as exc:
        raise BadAudio(f"audio for slide {job.slide_ordinal} ({job.name}): {exc}") from exc
    return AudioAsset(
        name=job.name,
        relative_path=f"slides_audios/{job.name}.mp3",
        data=data,
        duration_hint=info.duration_s,
    )


def _run_command_backend(job: NarrationJob, text: str, cfg: TtsBackendConfig) -> bytes:
    with tempfile.TemporaryDirectory(prefix="coursecast-tts-") as tmp:
        in_path = Path(tmp) / f"{job.name}.txt"
        out_path = Path(tmp) / f"{job.name}.mp3"
        in_path.write_text(text, encoding="utf-8")
        argv = [
            token.replace("{in}", str(in_path)).replace("{out}", str(out_path))
            for token in shlex.split(cfg.command_template or "")
        ]
        try:
            proc = subprocess.run(argv, capture_output=True, timeout=cfg.timeout_s)
        except subprocess.TimeoutExpired as exc:
            raise SynthesisTimeout(
                f"TTS command for {job.name!r} exceeded {cfg.timeout_s:g}s"
            ) from exc
        except OSError as exc:
            raise BackendFailure(f"TTS command for {job.name!r} failed to start: {exc}") from exc
        if proc.returncode != 0:
            raise BackendFailure(
                f"TTS command for {job.name!r} exited {proc.returncode}",
                detail=proc.stderr.decode("utf-8", "replace").strip() or None,
            )
        if not out_path.exists():
            raise BadAudio(f"TTS command for {job.name!r} wrote no output file")
        return out_path.read_bytes()


def _run_http_backend(job: NarrationJob, text: str, cfg: TtsBackendConfig) -> bytes:
    headers = {}
    if cfg.auth_token:
        headers["Authorization"] = f"Bearer {cfg.auth_token}"
    try:
        response = requests.post(
            cfg.endpoint_url,
            json={"text": text, "voice": cfg.voice, "rate": cfg.rate},
            headers=headers,
            timeout=cfg.timeout_s,
        )
    except requests.Timeout as exc:
        raise SynthesisTimeout(f"TTS request for {job.name!r} exceeded {cfg.timeout_s:g}s") from exc
    except requests.RequestException as exc:
        raise BackendFailure(f"TTS request for {job.name!r} failed: {exc}") from exc
    if not 200 <= response.status_code < 300:
        raise BackendFailure(
            f"TTS service answered {response.status_code} for {job.name!r}",
            detail=response.text[:500] or None,
        )
    content_type = response.headers.get("Content-Type", "")
    if not content_type.startswith("audio/"):
        raise BadAudio(
            f"TTS service returned content type {content_type!r} for {job.name!r}, expected audio"
        )
    return response.content


def synthesize_all(
    jobs: Sequence[NarrationJob],
    cfg: TtsBackendConfig,
    parallelism: int = DEFAULT_PARALLELISM,
) -> list[AudioAsset]:
    """Synthesize every job, up to ``parallelism`` at a time.

    Results come back in slide order; when jobs fail, the lowest-ordinal
    failure is the one raised, so reruns fail deterministically."""
    if not jobs:
        return []
    with ThreadPoolExecutor(max_workers=max(1, parallelism)) as pool:
        # map() yields in submission order, re-raising the first (lowest
        # ordinal) failure it reaches.
        return list(pool.map(lambda job: synthesize(job, cfg), jobs))
