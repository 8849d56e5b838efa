/** Assistant panel protocol: POST the chat history as
 * `{"messages": [{"role", "content"}...]}` and render whatever comes back.
 * History lives for the page session only. */

import type { AssistantConfig } from "./manifest";

export interface ChatMessage {
  role: "user" | "assistant";
  content: string;
}

export type FetchLike = (url: string, init: RequestInit) => Promise<Response>;

export function extractReply(body: string, contentType: string): string {
  if (contentType.includes("json")) {
    try {
      const data = JSON.parse(body) as Record<string, unknown>;
      const candidates = [
        data.content,
        (data.message as Record<string, unknown> | undefined)?.content,
        (
          (data.choices as Array<Record<string, unknown>> | undefined)?.[0]?.message as
            | Record<string, unknown>
            | undefined
        )?.content,
        data.reply,
      ];
      for (const candidate of candidates) {
        if (typeof candidate === "string") return candidate;
      }
    } catch {
      /* not JSON after all: fall through to the raw body */
    }
  }
  return body;
}

export async function askAssistant(
  cfg: AssistantConfig,
  history: ChatMessage[],
  question: string,
  fetchImpl: FetchLike,
): Promise<string> {
  if (!cfg.endpoint) throw new Error("assistant endpoint is not configured");
  const headers: Record<string, string> = { "Content-Type": "application/json" };
  if (cfg.token) headers.Authorization = `Bearer ${cfg.token}`;
  const response = await fetchImpl(cfg.endpoint, {
    method: "POST",
    headers,
    body: JSON.stringify({ messages: [...history, { role: "user", content: question }] }),
  });
  if (!response.ok) throw new Error(`assistant endpoint answered ${response.status}`);
  const body = await response.text();
  return extractReply(body, response.headers.get("content-type") ?? "");
}
