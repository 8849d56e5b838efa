/** Runtime entry point: parse the embedded manifest, wire navigation,
 * audio, widgets and the assistant panel. A missing or broken manifest
 * shows an error banner and leaves the static document readable. */

import { askAssistant, type ChatMessage } from "./assistant";
import { WasmPythonHost, type InterpreterHost } from "./interpreter";
import { parseManifest, type Manifest } from "./manifest";
import { atEnd, atStart, next, positionLabel, prev, START, type NavPos, type View } from "./nav";
import { safeStorage, type StorageLike } from "./storage";
import { enhanceWidgets, type EnhancedWidgets } from "./widgets";

export interface RuntimeOptions {
  storage?: StorageLike;
  host?: InterpreterHost;
  fetchImpl?: typeof fetch;
}

export interface Runtime {
  manifest: Manifest;
  views: View[];
  pos: NavPos;
  next(): NavPos;
  prev(): NavPos;
  widgets: EnhancedWidgets;
  ask(question: string): Promise<void>;
  history: ChatMessage[];
}

function slideBody(section: Element | null): Element | null {
  if (!section) return null;
  for (const child of Array.from(section.children)) {
    if (child.classList.contains("slide-body")) return child;
  }
  return null;
}

function maxStepOf(body: Element | null): number {
  let high = 0;
  if (!body) return high;
  for (const block of Array.from(body.querySelectorAll(".block[data-reveal]"))) {
    const step = parseInt(block.getAttribute("data-reveal") ?? "0", 10);
    if (Number.isFinite(step) && step > high) high = step;
  }
  return high;
}

function viewsFromDocument(doc: Document, manifest: Manifest): View[] {
  const views: View[] = [{ slide: 0, sub: null, maxStep: 0 }];
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

function showBanner(doc: Document, message: string): void {
  const banner = doc.createElement("div");
  banner.className = "runtime-banner";
  banner.textContent = message;
  doc.body.insertBefore(banner, doc.body.firstChild);
}

function applyView(doc: Document, views: View[], pos: NavPos): void {
  const view = views[pos.view];
  if (!view) return;
  for (const section of Array.from(doc.querySelectorAll("section.slide"))) {
    section.classList.remove("current", "sub-active");
  }
  for (const section of Array.from(doc.querySelectorAll("section.subslide"))) {
    section.classList.remove("current");
  }
  const section = doc.getElementById(`slide-${view.slide}`);
  section?.classList.add("current");
  let container: Element | null = section;
  if (view.sub !== null) {
    section?.classList.add("sub-active");
    container = doc.getElementById(`slide-${view.slide}-sub-${view.sub}`);
    container?.classList.add("current");
  }
  for (const block of Array.from(
    slideBody(container)?.querySelectorAll(".block[data-reveal]") ?? [],
  )) {
    const step = parseInt(block.getAttribute("data-reveal") ?? "0", 10);
    block.classList.toggle("unrevealed", step > pos.step);
  }

  // pause everything, then warm up the entered slide's narration; playback
  // stays behind an explicit user gesture
  for (const audio of Array.from(doc.querySelectorAll<HTMLAudioElement>("audio.slide-audio"))) {
    try {
      audio.pause();
    } catch {
      /* happy path only exists in real browsers */
    }
  }
  const current = section?.querySelector<HTMLAudioElement>("audio.slide-audio");
  if (current) current.preload = "auto";
}

function buildNavBar(doc: Document, onPrev: () => void, onNext: () => void) {
  const nav = doc.createElement("nav");
  nav.className = "deck-nav";
  const prevButton = doc.createElement("button");
  prevButton.id = "nav-prev";
  prevButton.type = "button";
  prevButton.textContent = "‹ Prev";
  prevButton.addEventListener("click", onPrev);
  const position = doc.createElement("span");
  position.className = "nav-pos";
  position.id = "nav-pos";
  const nextButton = doc.createElement("button");
  nextButton.id = "nav-next";
  nextButton.type = "button";
  nextButton.textContent = "Next ›";
  nextButton.addEventListener("click", onNext);
  nav.appendChild(prevButton);
  nav.appendChild(position);
  nav.appendChild(nextButton);
  doc.body.appendChild(nav);
  return { prevButton, nextButton, position };
}

function wireAssistant(
  doc: Document,
  manifest: Manifest,
  history: ChatMessage[],
  fetchImpl: typeof fetch,
): (question: string) => Promise<void> {
  const log = doc.getElementById("assistant-log");
  const form = doc.getElementById("assistant-form") as HTMLFormElement | null;
  const input = doc.getElementById("assistant-input") as HTMLInputElement | null;

  const append = (cls: string, text: string): HTMLElement => {
    const entry = doc.createElement("div");
    entry.className = `msg ${cls}`;
    entry.textContent = text;
    log?.appendChild(entry);
    if (log) log.scrollTop = log.scrollHeight;
    return entry;
  };

  const ask = async (question: string): Promise<void> => {
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

  form?.addEventListener("submit", (event) => {
    event.preventDefault();
    const question = input?.value ?? "";
    if (input) input.value = "";
    void ask(question);
  });
  return ask;
}

export function init(doc: Document, opts: RuntimeOptions = {}): Runtime | null {
  doc.documentElement.classList.add("js");
  const manifestEl = doc.getElementById("course-manifest");
  let manifest: Manifest;
  try {
    if (!manifestEl) throw new Error("no course-manifest element in the document");
    manifest = parseManifest(manifestEl.textContent ?? "");
  } catch (err) {
    showBanner(
      doc,
      `This course's interactive runtime failed to start (${String(
        err instanceof Error ? err.message : err,
      )}); the content below is still fully readable.`,
    );
    return null;
  }

  doc.documentElement.classList.add("runtime-ready");
  const storage = opts.storage ?? safeStorage();
  const host = opts.host ?? new WasmPythonHost(manifest.interpreter_url, doc);
  const fetchImpl = opts.fetchImpl ?? fetch.bind(globalThis);

  const views = viewsFromDocument(doc, manifest);
  const widgets = enhanceWidgets({ doc, title: manifest.title, storage, host });

  let pos = START;
  const { prevButton, nextButton, position } = buildNavBar(
    doc,
    () => move(prev(pos, views)),
    () => move(next(pos, views)),
  );

  function move(target: NavPos): NavPos {
    pos = target;
    applyView(doc, views, pos);
    position.textContent = positionLabel(pos, views);
    prevButton.disabled = atStart(pos);
    nextButton.disabled = atEnd(pos, views);
    return pos;
  }

  doc.addEventListener("keydown", (event) => {
    const target = event.target as Element | null;
    if (target && typeof target.closest === "function" && target.closest("textarea, input")) {
      return; // typing, not navigating
    }
    if (event.key === "ArrowRight" || event.key === "PageDown") move(next(pos, views));
    else if (event.key === "ArrowLeft" || event.key === "PageUp") move(prev(pos, views));
  });

  const history: ChatMessage[] = [];
  const ask = manifest.assistant.enabled
    ? wireAssistant(doc, manifest, history, fetchImpl)
    : async () => undefined;

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
    history,
  };
}

/* auto-start when bundled into an emitted course page */
if (typeof document !== "undefined" && typeof window !== "undefined") {
  if (document.readyState === "loading") {
    document.addEventListener("DOMContentLoaded", () => {
      init(document);
    });
  } else {
    init(document);
  }
}
