"""Exception types for the build pipeline.

Every failure that should abort a build derives from :class:`CourseError`;
the CLI maps those to exit code 1 and :class:`UsageError` to exit code 2.
"""

from __future__ import annotations


class CourseError(Exception):
    """Base class for build failures.

    ``detail`` carries an optional multi-line block (captured stderr, file
    listings) printed below the one-line cause.
    """

    def __init__(self, message: str, detail: str | None = None):
        super().__init__(message)
        self.detail = detail


class NotJsonError(CourseError):
    """Input bytes are not valid JSON."""


class UnsupportedFormatError(CourseError):
    """Notebook is not nbformat major version 4."""


class MissingCellsError(CourseError):
    """Notebook JSON has no ``cells`` key."""


class NoTitleError(CourseError):
    """The leading markdown cell carries no level-1 heading."""


class BackendFailure(CourseError):
    """A TTS backend exited nonzero or answered with a non-2xx status."""


class BadAudio(CourseError):
    """A TTS backend produced empty output or bytes that are not MP3."""


class SynthesisTimeout(CourseError):
    """A TTS job exceeded its per-job time budget."""


class AudioMismatch(CourseError):
    """The audio assets handed to the emitter disagree with the narration plan."""


class EmptyDeckError(CourseError):
    """The deck has zero slides; there is nothing to emit."""


class OutputIOError(CourseError):
    """A filesystem write failed; ``path`` names the offender."""

    def __init__(self, message: str, path=None, detail: str | None = None):
        super().__init__(message, detail=detail)
        self.path = path


class InputNotFound(CourseError):
    """Neither a local notebook nor a bundled template matches the input name."""


class RefusesOverwrite(CourseError):
    """scaffold-ci would clobber existing files and --force was not given."""


class UsageError(Exception):
    """Bad command line; the CLI prints the usage text and exits 2."""
