/** In-browser code execution against a WebAssembly Python runtime loaded
 * lazily from the manifest's interpreter URL. User-code failures come back
 * as formatted tracebacks in ExecResult.error and never reject. */

export type InterpreterStatus = "unloaded" | "loading" | "ready" | "failed";

export interface ExecResult {
  stdout: string;
  value: string | null;
  imagePng: string | null; // base64 PNG of the current figure, if any
  error: string | null; // formatted traceback from user code
}

export interface InterpreterHost {
  readonly status: InterpreterStatus;
  ensureLoaded(onStatus?: (status: InterpreterStatus) => void): Promise<void>;
  run(code: string): Promise<ExecResult>;
}

/* Runs inside the interpreter once at load: a sandboxed runner that captures
 * stdout, the final expression value and any current figure, plus a display()
 * shim so plotting-style snippets work unchanged. */
const BOOTSTRAP = `
import builtins as _course_builtins


def _course_display(obj):
    return None


if not hasattr(_course_builtins, "display"):
    _course_builtins.display = _course_display


def _course_run(code):
    import ast
    import io
    import json
    import sys
    import traceback

    out = io.StringIO()
    old_stdout, old_stderr = sys.stdout, sys.stderr
    sys.stdout = sys.stderr = out
    result = {"stdout": "", "value": None, "image": None, "error": None}
    try:
        tree = ast.parse(code, mode="exec")
        value = None
        if tree.body and isinstance(tree.body[-1], ast.Expr):
            last = ast.Expression(tree.body.pop(-1).value)
            exec(compile(tree, "<course>", "exec"), globals())
            value = eval(compile(last, "<course>", "eval"), globals())
        else:
            exec(compile(tree, "<course>", "exec"), globals())
        if value is not None:
            result["value"] = repr(value)
    except BaseException:
        result["error"] = traceback.format_exc()
    finally:
        sys.stdout, sys.stderr = old_stdout, old_stderr
    result["stdout"] = out.getvalue()
    if result["error"] is None:
        try:
            if "matplotlib" in sys.modules:
                import base64
                import matplotlib.pyplot as plt

                if plt.get_fignums():
                    png = io.BytesIO()
                    plt.gcf().savefig(png, format="png")
                    plt.close("all")
                    result["image"] = base64.b64encode(png.getvalue()).decode("ascii")
        except Exception:
            pass
    return json.dumps(result)
`;

function injectScript(doc: Document, url: string): Promise<void> {
  return new Promise((resolve, reject) => {
    const script = doc.createElement("script");
    script.src = url;
    script.onload = () => resolve();
    script.onerror = () => reject(new Error(`failed to load the interpreter from ${url}`));
    doc.head.appendChild(script);
  });
}

interface PyodideLike {
  runPythonAsync(code: string): Promise<unknown>;
  loadPackagesFromImports(code: string): Promise<unknown>;
  globals: { get(name: string): (code: string) => string };
}

export class WasmPythonHost implements InterpreterHost {
  status: InterpreterStatus = "unloaded";
  private engine: PyodideLike | null = null;
  private loading: Promise<void> | null = null;

  constructor(
    private readonly url: string,
    private readonly doc: Document,
  ) {}

  ensureLoaded(onStatus?: (status: InterpreterStatus) => void): Promise<void> {
    if (this.status === "ready") return Promise.resolve();
    if (!this.loading) {
      this.status = "loading";
      onStatus?.(this.status);
      this.loading = this.load()
        .then(() => {
          this.status = "ready";
          onStatus?.(this.status);
        })
        .catch((err) => {
          this.status = "failed";
          this.loading = null; // a retry starts a fresh load
          onStatus?.(this.status);
          throw err;
        });
    }
    return this.loading;
  }

  private async load(): Promise<void> {
    await injectScript(this.doc, this.url);
    const loader = (globalThis as Record<string, unknown>).loadPyodide;
    if (typeof loader !== "function") {
      throw new Error("interpreter loader did not define loadPyodide()");
    }
    const indexURL = this.url.slice(0, this.url.lastIndexOf("/") + 1);
    this.engine = (await loader({ indexURL })) as PyodideLike;
    await this.engine.runPythonAsync(BOOTSTRAP);
  }

  async run(code: string): Promise<ExecResult> {
    if (this.status !== "ready" || !this.engine) {
      throw new Error("interpreter is not loaded");
    }
    try {
      // pulls packages for recognized imports; unknown ones surface as
      // ImportError tracebacks from the run itself
      await this.engine.loadPackagesFromImports(code);
    } catch {
      /* ignored */
    }
    const runner = this.engine.globals.get("_course_run");
    const payload = runner(code);
    const parsed = JSON.parse(payload) as {
      stdout?: string;
      value?: string | null;
      image?: string | null;
      error?: string | null;
    };
    return {
      stdout: parsed.stdout ?? "",
      value: parsed.value ?? null,
      imagePng: parsed.image ?? null,
      error: parsed.error ?? null,
    };
  }
}
