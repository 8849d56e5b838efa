/** Progressive enhancement of the compiler's widget contracts:
 *
 *   <div class="course-input" data-widget="{id}" data-kind="text|code"></div>
 *   <div class="course-runnable" data-widget="{id}"><pre class="course-src">…</pre></div>
 *
 * Text inputs become persisted textareas; code inputs and runnable blocks
 * become editors with a Run button and an output region (derived ids
 * `{id}-editor`, `{id}-run`, `{id}-out`). */

import type { ExecResult, InterpreterHost } from "./interpreter";
import { persistValue, restoreValue, type StorageLike } from "./storage";

export interface WidgetContext {
  doc: Document;
  title: string;
  storage: StorageLike;
  host: InterpreterHost;
}

function editorFor(ctx: WidgetContext, container: Element, widgetId: string, prefill: string) {
  const editor = ctx.doc.createElement("textarea");
  editor.className = "course-editor";
  editor.id = `${widgetId}-editor`;
  editor.spellcheck = false;
  editor.value = restoreValue(ctx.storage, ctx.title, widgetId) ?? prefill;
  editor.addEventListener("input", () => {
    persistValue(ctx.storage, ctx.title, widgetId, editor.value);
  });
  container.appendChild(editor);
  return editor;
}

function renderResult(doc: Document, output: HTMLElement, result: ExecResult): void {
  output.textContent = "";
  output.classList.toggle("error", result.error !== null);
  const parts: string[] = [];
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

function renderFailure(doc: Document, output: HTMLElement, message: string, retry: () => void) {
  output.classList.add("error");
  output.textContent = `${message}\n`;
  const button = doc.createElement("button");
  button.type = "button";
  button.textContent = "Retry";
  button.addEventListener("click", retry);
  output.appendChild(button);
}

function wireRunnable(ctx: WidgetContext, container: Element, widgetId: string, prefill: string) {
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

  let pending = false; // at most one execution in flight per widget
  const execute = async () => {
    if (pending) return;
    pending = true;
    run.disabled = true;
    try {
      await ctx.host.ensureLoaded((state) => {
        status.textContent = state === "loading" ? "loading interpreter…" : "";
      });
      status.textContent = "running…";
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
  // first interaction with a code cell warms the interpreter up in the
  // background; page load never pays for it
  editor.addEventListener(
    "focus",
    () => {
      ctx.host.ensureLoaded().catch(() => undefined);
    },
    { once: true },
  );
  return execute;
}

export interface EnhancedWidgets {
  /** widget id -> programmatic run trigger (code widgets only) */
  runners: Map<string, () => Promise<void>>;
}

export function enhanceWidgets(ctx: WidgetContext): EnhancedWidgets {
  const runners = new Map<string, () => Promise<void>>();

  for (const element of Array.from(ctx.doc.querySelectorAll(".course-input[data-widget]"))) {
    const widgetId = element.getAttribute("data-widget") ?? "";
    const kind = element.getAttribute("data-kind");
    if (kind === "text") {
      editorFor(ctx, element, widgetId, "");
    } else {
      runners.set(widgetId, wireRunnable(ctx, element, widgetId, ""));
    }
  }

  for (const element of Array.from(ctx.doc.querySelectorAll(".course-runnable[data-widget]"))) {
    const widgetId = element.getAttribute("data-widget") ?? "";
    const source = element.querySelector(".course-src");
    const prefill = source?.textContent ?? "";
    source?.remove(); // the editor replaces the static listing
    runners.set(widgetId, wireRunnable(ctx, element, widgetId, prefill));
  }

  return { runners };
}
