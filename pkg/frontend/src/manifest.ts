/** The deck manifest embedded by the compiler in
 * `<script type="application/json" id="course-manifest">`. It is the
 * runtime's single source of truth for deck structure. */

export interface WidgetEntry {
  id: string;
  kind: "text" | "code";
}

export interface SlideEntry {
  ordinal: number;
  title: string;
  audio: string | null;
  subslides: SlideEntry[];
  widgets: WidgetEntry[];
}

export interface AssistantConfig {
  enabled: boolean;
  endpoint: string | null;
  token?: string;
}

export interface Manifest {
  title: string;
  subtitles: string[];
  slides: SlideEntry[];
  assistant: AssistantConfig;
  interpreter_url: string;
}

export class ManifestError extends Error {}

function isRecord(value: unknown): value is Record<string, unknown> {
  return typeof value === "object" && value !== null && !Array.isArray(value);
}

function parseSlide(value: unknown, path: string): SlideEntry {
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
    if (!isRecord(widget) || typeof widget.id !== "string" || (widget.kind !== "text" && widget.kind !== "code")) {
      throw new ManifestError(`${path}.widgets carries a malformed entry`);
    }
  }
  return {
    ordinal,
    title,
    audio: audio as string | null,
    subslides: subslides.map((sub, i) => parseSlide(sub, `${path}.subslides[${i}]`)),
    widgets: widgets as WidgetEntry[],
  };
}

export function parseManifest(json: string): Manifest {
  let data: unknown;
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
    subtitles: subtitles as string[],
    slides: slides.map((slide, i) => parseSlide(slide, `slides[${i}]`)),
    assistant: {
      enabled: assistant.enabled,
      endpoint: assistant.endpoint as string | null,
      ...(typeof assistant.token === "string" ? { token: assistant.token } : {}),
    },
    interpreter_url,
  };
}
