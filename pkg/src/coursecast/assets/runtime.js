"use strict";
(() => {
  // src/assistant.ts
  function extractReply(body, contentType) {
    var _a, _b, _c, _d;
    if (contentType.includes("json")) {
      try {
        const data = JSON.parse(body);
        const candidates = [
          data.content,
          (_a = data.message) == null ? void 0 : _a.content,
          (_d = (_c = (_b = data.choices) == null ? void 0 : _b[0]) == null ? void 0 : _c.message) == null ? void 0 : _d.content,
          data.reply
        ];
        for (const candidate of candidates) {
          if (typeof candidate === "string") return candidate;
        }
      } catch {
      }
    }
    return body;
  }
  async function askAssistant(cfg, history, question, fetchImpl) {
    var _a;
    if (!cfg.endpoint) throw new Error("assistant endpoint is not configured");
    const headers = { "Content-Type": "application/json" };
    if (cfg.token) headers.Authorization = `Bearer ${cfg.token}`;
    const response = await fetchImpl(cfg.endpoint, {
      method: "POST",
      headers,
      body: JSON.stringify({ messages: [...history, { role: "user", content: question }] })
    });
    if (!response.ok) throw new Error(`assistant endpoint answered ${response.status}`);
    const body = await response.text();
    return extractReply(body, (_a = response.headers.get("content-type")) != null ? _a : "");
  }

  // src/interpreter.ts
  var BOOTSTRAP = `
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
  function injectScript(doc, url) {
    return new Promise((resolve, reject) => {
      const script = doc.createElement("script");
      script.src = url;
      script.onload = () => resolve();
      script.onerror = () => reject(new Error(`failed to load the interpreter from ${url}`));
      doc.head.appendChild(script);
    });
  }
  var WasmPythonHost = class {
    constructor(url, doc) {
      this.url = url;
      this.doc = doc;
      this.status = "unloaded";
      this.engine = null;
      this.loading = null;
    }
    ensureLoaded(onStatus) {
      if (this.status === "ready") return Promise.resolve();
      if (!this.loading) {
        this.status = "loading";
        onStatus == null ? void 0 : onStatus(this.status);
        this.loading = this.load().then(() => {
          this.status = "ready";
          onStatus == null ? void 0 : onStatus(this.status);
        }).catch((err) => {
          this.status = "failed";
          this.loading = null;
          onStatus == null ? void 0 : onStatus(this.status);
          throw err;
        });
      }
      return this.loading;
    }
    async load() {
      await injectScript(this.doc, this.url);
      const loader = globalThis.loadPyodide;
      if (typeof loader !== "function") {
        throw new Error("interpreter loader did not define loadPyodide()");
      }
      const indexURL = this.url.slice(0, this.url.lastIndexOf("/") + 1);
      this.engine = await loader({ indexURL });
      await this.engine.runPythonAsync(BOOTSTRAP);
    }
    async run(code) {
      var _a, _b, _c, _d;
      if (this.status !== "ready" || !this.engine) {
        throw new Error("interpreter is not loaded");
      }
      try {
        await this.engine.loadPackagesFromImports(code);
      } catch {
      }
      const runner = this.engine.globals.get("_course_run");
      const payload = runner(code);
      const parsed = JSON.parse(payload);
      return {
        stdout: (_a = parsed.stdout) != null ? _a : "",
        value: (_b = parsed.value) != null ? _b : null,
        imagePng: (_c = parsed.image) != null ? _c : null,
        error: (_d = parsed.error) != null ? _d : null
      };
    }
  };

  // src/manifest.ts
  var ManifestError = class extends Error {
  };
  function isRecord(value) {
    return typeof value === "object" && value !== null && !Array.isArray(value);
  }
  function parseSlide(value, path) {
    if (!isRecord(value)) throw new ManifestError(`${path} is not an object`);
    const { ordinal, title, audio, subslides, widgets } = value;
    if (typeof ordinal !== "number") throw new ManifestError(`${path}.ordinal is not a number`);
    if (typeof title !== "string") throw new ManifestError(`${path}.title is not a string`);
    if (audio !== null && typeof audio !== "string") {
      throw new ManifestError(`${path}.audio is neither a string nor null`);
    }
    if (!Array.isArray(subslides)) throw new ManifestError(`${path}.subslides is not an array`);
    if (!Array.isArray(widgets)) throw new ManifestError(`${path}.widgets is not an array`);
    for (const widget of widgets) {
      if (!isRecord(widget) || typeof widget.id !== "string" || widget.kind !== "text" && widget.kind !== "code") {
        throw new ManifestError(`${path}.widgets carries a malformed entry`);
      }
    }
    return {
      ordinal,
      title,
      audio,
      subslides: subslides.map((sub, i) => parseSlide(sub, `${path}.subslides[${i}]`)),
      widgets
    };
  }
  function parseManifest(json) {
    let data;
    try {
      data = JSON.parse(json);
    } catch (err) {
      throw new ManifestError(`manifest is not valid JSON: ${String(err)}`);
    }
    if (!isRecord(data)) throw new ManifestError("manifest is not an object");
    const { title, subtitles, slides, assistant, interpreter_url } = data;
    if (typeof title !== "string") throw new ManifestError("manifest.title is not a string");
    if (!Array.isArray(subtitles) || subtitles.some((s) => typeof s !== "string")) {
      throw new ManifestError("manifest.subtitles is not a string array");
    }
    if (!Array.isArray(slides)) throw new ManifestError("manifest.slides is not an array");
    if (!isRecord(assistant) || typeof assistant.enabled !== "boolean") {
      throw new ManifestError("manifest.assistant is malformed");
    }
    if (assistant.endpoint !== null && typeof assistant.endpoint !== "string") {
      throw new ManifestError("manifest.assistant.endpoint is neither a string nor null");
    }
    if (typeof interpreter_url !== "string") {
      throw new ManifestError("manifest.interpreter_url is not a string");
    }
    return {
      title,
      subtitles,
      slides: slides.map((slide, i) => parseSlide(slide, `slides[${i}]`)),
      assistant: {
        enabled: assistant.enabled,
        endpoint: assistant.endpoint,
        ...typeof assistant.token === "string" ? { token: assistant.token } : {}
      },
      interpreter_url
    };
  }

  // src/nav.ts
  var START = { view: 0, step: 0 };
  function next(pos, views) {
    const current = views[pos.view];
    if (!current) return pos;
    if (pos.step < current.maxStep) return { view: pos.view, step: pos.step + 1 };
    if (pos.view < views.length - 1) return { view: pos.view + 1, step: 0 };
    return pos;
  }
  function prev(pos, views) {
    if (pos.step > 0) return { view: pos.view, step: pos.step - 1 };
    if (pos.view > 0) return { view: pos.view - 1, step: views[pos.view - 1].maxStep };
    return pos;
  }
  function atStart(pos) {
    return pos.view === 0 && pos.step === 0;
  }
  function atEnd(pos, views) {
    var _a, _b;
    return pos.view >= views.length - 1 && pos.step >= ((_b = (_a = views[views.length - 1]) == null ? void 0 : _a.maxStep) != null ? _b : 0);
  }
  function positionLabel(pos, views) {
    return `${pos.view + 1} / ${views.length}`;
  }

  // src/storage.ts
  function widgetKey(courseTitle, widgetId) {
    return `course:${courseTitle}:${widgetId}`;
  }
  function memoryStorage() {
    const data = /* @__PURE__ */ new Map();
    return {
      getItem: (key) => data.has(key) ? data.get(key) : null,
      setItem: (key, value) => {
        data.set(key, value);
      }
    };
  }
  function safeStorage() {
    try {
      const probe = "course:probe";
      window.localStorage.setItem(probe, "1");
      window.localStorage.removeItem(probe);
      return window.localStorage;
    } catch {
      return memoryStorage();
    }
  }
  function restoreValue(storage, title, widgetId) {
    try {
      return storage.getItem(widgetKey(title, widgetId));
    } catch {
      return null;
    }
  }
  function persistValue(storage, title, widgetId, value) {
    try {
      storage.setItem(widgetKey(title, widgetId), value);
    } catch {
    }
  }

  // src/widgets.ts
  function editorFor(ctx, container, widgetId, prefill) {
    var _a;
    const editor = ctx.doc.createElement("textarea");
    editor.className = "course-editor";
    editor.id = `${widgetId}-editor`;
    editor.spellcheck = false;
    editor.value = (_a = restoreValue(ctx.storage, ctx.title, widgetId)) != null ? _a : prefill;
    editor.addEventListener("input", () => {
      persistValue(ctx.storage, ctx.title, widgetId, editor.value);
    });
    container.appendChild(editor);
    return editor;
  }
  function renderResult(doc, output, result) {
    output.textContent = "";
    output.classList.toggle("error", result.error !== null);
    const parts = [];
    if (result.stdout) parts.push(result.stdout.replace(/\n$/, ""));
    if (result.error) parts.push(result.error.replace(/\n$/, ""));
    else if (result.value !== null) parts.push(result.value);
    output.textContent = parts.join("\n");
    if (result.imagePng) {
      const img = doc.createElement("img");
      img.alt = "execution result plot";
      img.src = `data:image/png;base64,${result.imagePng}`;
      output.appendChild(img);
    }
  }
  function renderFailure(doc, output, message, retry) {
    output.classList.add("error");
    output.textContent = `${message}
`;
    const button = doc.createElement("button");
    button.type = "button";
    button.textContent = "Retry";
    button.addEventListener("click", retry);
    output.appendChild(button);
  }
  function wireRunnable(ctx, container, widgetId, prefill) {
    const editor = editorFor(ctx, container, widgetId, prefill);
    const row = ctx.doc.createElement("div");
    row.className = "run-row";
    const run = ctx.doc.createElement("button");
    run.type = "button";
    run.id = `${widgetId}-run`;
    run.textContent = "Run";
    const status = ctx.doc.createElement("span");
    status.className = "run-status";
    row.appendChild(run);
    row.appendChild(status);
    container.appendChild(row);
    const output = ctx.doc.createElement("pre");
    output.className = "course-output";
    output.id = `${widgetId}-out`;
    container.appendChild(output);
    let pending = false;
    const execute = async () => {
      if (pending) return;
      pending = true;
      run.disabled = true;
      try {
        await ctx.host.ensureLoaded((state) => {
          status.textContent = state === "loading" ? "loading interpreter\u2026" : "";
        });
        status.textContent = "running\u2026";
        renderResult(ctx.doc, output, await ctx.host.run(editor.value));
        status.textContent = "";
      } catch (err) {
        status.textContent = "";
        renderFailure(ctx.doc, output, String(err instanceof Error ? err.message : err), execute);
      } finally {
        pending = false;
        run.disabled = false;
      }
    };
    run.addEventListener("click", execute);
    editor.addEventListener(
      "focus",
      () => {
        ctx.host.ensureLoaded().catch(() => void 0);
      },
      { once: true }
    );
    return execute;
  }
  function enhanceWidgets(ctx) {
    var _a, _b, _c;
    const runners = /* @__PURE__ */ new Map();
    for (const element of Array.from(ctx.doc.querySelectorAll(".course-input[data-widget]"))) {
      const widgetId = (_a = element.getAttribute("data-widget")) != null ? _a : "";
      const kind = element.getAttribute("data-kind");
      if (kind === "text") {
        editorFor(ctx, element, widgetId, "");
      } else {
        runners.set(widgetId, wireRunnable(ctx, element, widgetId, ""));
      }
    }
    for (const element of Array.from(ctx.doc.querySelectorAll(".course-runnable[data-widget]"))) {
      const widgetId = (_b = element.getAttribute("data-widget")) != null ? _b : "";
      const source = element.querySelector(".course-src");
      const prefill = (_c = source == null ? void 0 : source.textContent) != null ? _c : "";
      source == null ? void 0 : source.remove();
      runners.set(widgetId, wireRunnable(ctx, element, widgetId, prefill));
    }
    return { runners };
  }

  // src/main.ts
  function slideBody(section) {
    if (!section) return null;
    for (const child of Array.from(section.children)) {
      if (child.classList.contains("slide-body")) return child;
    }
    return null;
  }
  function maxStepOf(body) {
    var _a;
    let high = 0;
    if (!body) return high;
    for (const block of Array.from(body.querySelectorAll(".block[data-reveal]"))) {
      const step = parseInt((_a = block.getAttribute("data-reveal")) != null ? _a : "0", 10);
      if (Number.isFinite(step) && step > high) high = step;
    }
    return high;
  }
  function viewsFromDocument(doc, manifest) {
    const views = [{ slide: 0, sub: null, maxStep: 0 }];
    for (const slide of manifest.slides) {
      const section = doc.getElementById(`slide-${slide.ordinal}`);
      views.push({ slide: slide.ordinal, sub: null, maxStep: maxStepOf(slideBody(section)) });
      for (const sub of slide.subslides) {
        const el = doc.getElementById(`slide-${slide.ordinal}-sub-${sub.ordinal}`);
        views.push({ slide: slide.ordinal, sub: sub.ordinal, maxStep: maxStepOf(slideBody(el)) });
      }
    }
    return views;
  }
  function showBanner(doc, message) {
    const banner = doc.createElement("div");
    banner.className = "runtime-banner";
    banner.textContent = message;
    doc.body.insertBefore(banner, doc.body.firstChild);
  }
  function applyView(doc, views, pos) {
    var _a, _b, _c;
    const view = views[pos.view];
    if (!view) return;
    for (const section2 of Array.from(doc.querySelectorAll("section.slide"))) {
      section2.classList.remove("current", "sub-active");
    }
    for (const section2 of Array.from(doc.querySelectorAll("section.subslide"))) {
      section2.classList.remove("current");
    }
    const section = doc.getElementById(`slide-${view.slide}`);
    section == null ? void 0 : section.classList.add("current");
    let container = section;
    if (view.sub !== null) {
      section == null ? void 0 : section.classList.add("sub-active");
      container = doc.getElementById(`slide-${view.slide}-sub-${view.sub}`);
      container == null ? void 0 : container.classList.add("current");
    }
    for (const block of Array.from(
      (_b = (_a = slideBody(container)) == null ? void 0 : _a.querySelectorAll(".block[data-reveal]")) != null ? _b : []
    )) {
      const step = parseInt((_c = block.getAttribute("data-reveal")) != null ? _c : "0", 10);
      block.classList.toggle("unrevealed", step > pos.step);
    }
    for (const audio of Array.from(doc.querySelectorAll("audio.slide-audio"))) {
      try {
        audio.pause();
      } catch {
      }
    }
    const current = section == null ? void 0 : section.querySelector("audio.slide-audio");
    if (current) current.preload = "auto";
  }
  function buildNavBar(doc, onPrev, onNext) {
    const nav = doc.createElement("nav");
    nav.className = "deck-nav";
    const prevButton = doc.createElement("button");
    prevButton.id = "nav-prev";
    prevButton.type = "button";
    prevButton.textContent = "\u2039 Prev";
    prevButton.addEventListener("click", onPrev);
    const position = doc.createElement("span");
    position.className = "nav-pos";
    position.id = "nav-pos";
    const nextButton = doc.createElement("button");
    nextButton.id = "nav-next";
    nextButton.type = "button";
    nextButton.textContent = "Next \u203A";
    nextButton.addEventListener("click", onNext);
    nav.appendChild(prevButton);
    nav.appendChild(position);
    nav.appendChild(nextButton);
    doc.body.appendChild(nav);
    return { prevButton, nextButton, position };
  }
  function wireAssistant(doc, manifest, history, fetchImpl) {
    const log = doc.getElementById("assistant-log");
    const form = doc.getElementById("assistant-form");
    const input = doc.getElementById("assistant-input");
    const append = (cls, text) => {
      const entry = doc.createElement("div");
      entry.className = `msg ${cls}`;
      entry.textContent = text;
      log == null ? void 0 : log.appendChild(entry);
      if (log) log.scrollTop = log.scrollHeight;
      return entry;
    };
    const ask = async (question) => {
      if (!question.trim()) return;
      append("user", question);
      if (!manifest.assistant.endpoint) {
        append("error", "The assistant is not configured for this course.");
        return;
      }
      try {
        const reply = await askAssistant(manifest.assistant, history, question, fetchImpl);
        history.push({ role: "user", content: question }, { role: "assistant", content: reply });
        append("assistant", reply);
      } catch (err) {
        const entry = append("error", `Assistant request failed: ${String(err instanceof Error ? err.message : err)} `);
        const retry = doc.createElement("button");
        retry.type = "button";
        retry.textContent = "Retry";
        retry.addEventListener("click", () => {
          entry.remove();
          void ask(question);
        });
        entry.appendChild(retry);
      }
    };
    form == null ? void 0 : form.addEventListener("submit", (event) => {
      var _a;
      event.preventDefault();
      const question = (_a = input == null ? void 0 : input.value) != null ? _a : "";
      if (input) input.value = "";
      void ask(question);
    });
    return ask;
  }
  function init(doc, opts = {}) {
    var _a, _b, _c, _d;
    doc.documentElement.classList.add("js");
    const manifestEl = doc.getElementById("course-manifest");
    let manifest;
    try {
      if (!manifestEl) throw new Error("no course-manifest element in the document");
      manifest = parseManifest((_a = manifestEl.textContent) != null ? _a : "");
    } catch (err) {
      showBanner(
        doc,
        `This course's interactive runtime failed to start (${String(
          err instanceof Error ? err.message : err
        )}); the content below is still fully readable.`
      );
      return null;
    }
    doc.documentElement.classList.add("runtime-ready");
    const storage = (_b = opts.storage) != null ? _b : safeStorage();
    const host = (_c = opts.host) != null ? _c : new WasmPythonHost(manifest.interpreter_url, doc);
    const fetchImpl = (_d = opts.fetchImpl) != null ? _d : fetch.bind(globalThis);
    const views = viewsFromDocument(doc, manifest);
    const widgets = enhanceWidgets({ doc, title: manifest.title, storage, host });
    let pos = START;
    const { prevButton, nextButton, position } = buildNavBar(
      doc,
      () => move(prev(pos, views)),
      () => move(next(pos, views))
    );
    function move(target) {
      pos = target;
      applyView(doc, views, pos);
      position.textContent = positionLabel(pos, views);
      prevButton.disabled = atStart(pos);
      nextButton.disabled = atEnd(pos, views);
      return pos;
    }
    doc.addEventListener("keydown", (event) => {
      const target = event.target;
      if (target && typeof target.closest === "function" && target.closest("textarea, input")) {
        return;
      }
      if (event.key === "ArrowRight" || event.key === "PageDown") move(next(pos, views));
      else if (event.key === "ArrowLeft" || event.key === "PageUp") move(prev(pos, views));
    });
    const history = [];
    const ask = manifest.assistant.enabled ? wireAssistant(doc, manifest, history, fetchImpl) : async () => void 0;
    move(START);
    return {
      manifest,
      views,
      get pos() {
        return pos;
      },
      next: () => move(next(pos, views)),
      prev: () => move(prev(pos, views)),
      widgets,
      ask,
      history
    };
  }
  if (typeof document !== "undefined" && typeof window !== "undefined") {
    if (document.readyState === "loading") {
      document.addEventListener("DOMContentLoaded", () => {
        init(document);
      });
    } else {
      init(document);
    }
  }
})();
