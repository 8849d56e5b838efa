import json
import os

import pytest

from coursecast import __version__
from coursecast.cli import Subcommand, main, parse_args, resolve_input, scaffold_ci
from coursecast.errors import InputNotFound, RefusesOverwrite, UsageError

from helpers import md_cell, notebook_bytes


@pytest.fixture()
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    # keep builds hermetic regardless of the host environment
    for var in ("COURSE_TTS_CMD", "COURSE_TTS_URL", "COURSE_TTS_TOKEN",
                "COURSE_AI_ENDPOINT", "COURSE_AI_TOKEN", "COURSE_INTERPRETER_URL"):
        monkeypatch.delenv(var, raising=False)
    return tmp_path


def write_notebook(path, cells):
    path.write_bytes(notebook_bytes(cells))


SIMPLE_CELLS = [
    md_cell("# Tiny Course\n### By Tester", "slide"),
    md_cell("## Only Slide\n\ncontent", "slide"),
    md_cell("spoken words", "notes"),
]


class TestParseArgs:
    def test_positional_build(self):
        inv = parse_args(["original_example"])
        assert inv.subcommand is Subcommand.BUILD
        assert inv.input_name == "original_example"
        assert not inv.mute and not inv.disable_prompt

    def test_flags_compose(self):
        inv = parse_args(["-m", "-p", "mycourse"])
        assert inv.mute and inv.disable_prompt
        assert inv.input_name == "mycourse"

    def test_i_flag(self):
        assert parse_args(["-i", "mycourse"]).input_name == "mycourse"

    def test_equal_positional_and_flag_tolerated(self):
        assert parse_args(["-i", "a", "a"]).input_name == "a"

    def test_conflicting_inputs_rejected(self):
        with pytest.raises(UsageError):
            parse_args(["-i", "a", "b"])

    def test_version_flag(self):
        assert parse_args(["-v"]).show_version

    def test_no_input_rejected(self):
        with pytest.raises(UsageError):
            parse_args([])

    def test_unknown_flag_rejected(self):
        with pytest.raises(UsageError):
            parse_args(["--frobnicate", "x"])

    def test_extension_rejected(self):
        with pytest.raises(UsageError):
            parse_args(["mycourse.ipynb"])

    def test_scaffold_subcommand(self):
        inv = parse_args(["scaffold-ci", "--force", "somewhere"])
        assert inv.subcommand is Subcommand.SCAFFOLD_CI
        assert inv.force and str(inv.target_dir) == "somewhere"

    def test_help_vocabulary(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            parse_args(["-h"])
        assert excinfo.value.code == 0
        out = capsys.readouterr().out
        assert "Mute the audio" in out
        assert "Disable prompt window" in out
        assert "Pass the file name without extension" in out
        assert "The file name without extension" in out
        assert "[-h] [-v] [-m] [-p] [-i INPUT] [filename]" in out


class TestResolveInput:
    def test_local_notebook_wins(self, workdir):
        write_notebook(workdir / "mycourse.ipynb", SIMPLE_CELLS)
        assert resolve_input("mycourse") == workdir / "mycourse.ipynb"

    def test_bundled_example_materialized(self, workdir):
        path = resolve_input("original_example")
        assert path.name == "original_example.ipynb"
        assert path.exists()
        data = json.loads(path.read_text())
        assert data["nbformat"] == 4

    def test_local_original_example_preferred_over_bundle(self, workdir):
        write_notebook(workdir / "original_example.ipynb", SIMPLE_CELLS)
        assert resolve_input("original_example") == workdir / "original_example.ipynb"

    def test_missing_input(self, workdir):
        with pytest.raises(InputNotFound) as excinfo:
            resolve_input("ghost")
        message = str(excinfo.value)
        assert "ghost.ipynb" in message and "bundled" in message


class TestMain:
    def test_version_exit_zero(self, capsys):
        assert main(["-v"]) == 0
        assert __version__ in capsys.readouterr().out

    def test_usage_error_exit_two(self, capsys):
        assert main(["-i", "a", "b"]) == 2
        err = capsys.readouterr().err
        assert "usage:" in err

    def test_build_bundled_example(self, workdir, capsys):
        assert main(["original_example"]) == 0
        out_lines = capsys.readouterr().out.strip().splitlines()
        assert len(out_lines) == 4  # ipynb, html, two mp3s
        assert (workdir / "output" / "original_example_pyglide.html").is_file()

    def test_build_failure_exit_one(self, workdir, capsys):
        assert main(["ghost"]) == 1
        assert "error:" in capsys.readouterr().err

    def test_notebook_without_title_fails(self, workdir, capsys):
        write_notebook(workdir / "untitled.ipynb", [md_cell("no heading", "slide")])
        assert main(["untitled"]) == 1
        assert "level-1 heading" in capsys.readouterr().err

    @pytest.mark.parametrize("mute", [False, True])
    @pytest.mark.parametrize("no_prompt", [False, True])
    def test_mute_and_prompt_compose(self, workdir, capsys, mute, no_prompt):
        write_notebook(workdir / "combo.ipynb", SIMPLE_CELLS)
        argv = (["-m"] if mute else []) + (["-p"] if no_prompt else []) + ["combo"]
        assert main(argv) == 0
        capsys.readouterr()
        html_text = (workdir / "output" / "combo_pyglide.html").read_text()
        audio_dir = workdir / "output" / "slides_audios"
        assert audio_dir.exists() == (not mute)
        assert ("slides_audios" in html_text) == (not mute)
        assert ('id="assistant-panel"' in html_text) == (not no_prompt)

    def test_tts_env_respected(self, workdir, capsys, monkeypatch):
        monkeypatch.setenv("COURSE_TTS_CMD", "definitely-not-a-real-binary {in} {out}")
        write_notebook(workdir / "envy.ipynb", SIMPLE_CELLS)
        assert main(["envy"]) == 1
        assert "failed to start" in capsys.readouterr().err

    def test_interpreter_env_respected(self, workdir, capsys, monkeypatch):
        monkeypatch.setenv("COURSE_INTERPRETER_URL", "https://cdn.example/runtime.js")
        write_notebook(workdir / "interp.ipynb", SIMPLE_CELLS)
        assert main(["interp"]) == 0
        html_text = (workdir / "output" / "interp_pyglide.html").read_text()
        assert "https://cdn.example/runtime.js" in html_text


class TestScaffoldCi:
    def test_writes_workflow_and_readme(self, tmp_path):
        written = scaffold_ci(tmp_path)
        assert len(written) == 2
        workflow = tmp_path / ".github" / "workflows" / "build-course.yml"
        assert workflow.is_file()
        body = workflow.read_text()
        assert "*.ipynb" in body
        assert "index.html" in body
        assert "deploy-pages" in body
        readme = (tmp_path / "README.md").read_text()
        assert "Use this template" in readme

    def test_rerun_without_force_refused(self, tmp_path):
        scaffold_ci(tmp_path)
        with pytest.raises(RefusesOverwrite):
            scaffold_ci(tmp_path)

    def test_force_overwrites(self, tmp_path):
        scaffold_ci(tmp_path)
        written = scaffold_ci(tmp_path, force=True)
        assert len(written) == 2

    def test_via_main(self, tmp_path, capsys):
        assert main(["scaffold-ci", str(tmp_path)]) == 0
        assert len(capsys.readouterr().out.strip().splitlines()) == 2
        assert main(["scaffold-ci", str(tmp_path)]) == 1  # refuses overwrite
