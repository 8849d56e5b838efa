import { describe, expect, it } from "vitest";

import { askAssistant, extractReply } from "../src/assistant";

const CFG = { enabled: true, endpoint: "https://a.example/chat" };

describe("extractReply", () => {
  it("reads a bare content field", () => {
    expect(extractReply('{"content":"hi"}', "application/json")).toBe("hi");
  });

  it("reads chat-completions shaped payloads", () => {
    const body = JSON.stringify({ choices: [{ message: { role: "assistant", content: "hello" } }] });
    expect(extractReply(body, "application/json; charset=utf-8")).toBe("hello");
  });

  it("falls back to the raw body for text responses", () => {
    expect(extractReply("plain words", "text/plain")).toBe("plain words");
  });

  it("falls back to the raw body for unrecognized JSON", () => {
    expect(extractReply('{"weird":1}', "application/json")).toBe('{"weird":1}');
  });
});

describe("askAssistant", () => {
  it("posts the full history plus the new question", async () => {
    let seen: any = null;
    const fetchImpl = async (url: string, init: RequestInit) => {
      seen = { url, init };
      return new Response('{"content":"answer"}', {
        status: 200,
        headers: { "content-type": "application/json" },
      });
    };
    const history = [
      { role: "user" as const, content: "q1" },
      { role: "assistant" as const, content: "a1" },
    ];
    const reply = await askAssistant(CFG, history, "q2", fetchImpl);
    expect(reply).toBe("answer");
    expect(JSON.parse(String(seen.init.body)).messages).toEqual([
      { role: "user", content: "q1" },
      { role: "assistant", content: "a1" },
      { role: "user", content: "q2" },
    ]);
    expect(seen.init.method).toBe("POST");
  });

  it("sends a bearer token only when configured", async () => {
    let headers: Record<string, string> = {};
    const fetchImpl = async (_: string, init: RequestInit) => {
      headers = init.headers as Record<string, string>;
      return new Response("ok", { status: 200 });
    };
    await askAssistant({ ...CFG, token: "sekrit" }, [], "q", fetchImpl);
    expect(headers.Authorization).toBe("Bearer sekrit");
    await askAssistant(CFG, [], "q", fetchImpl);
    expect(headers.Authorization).toBeUndefined();
  });

  it("rejects on HTTP failure", async () => {
    const fetchImpl = async () => new Response("down", { status: 503 });
    await expect(askAssistant(CFG, [], "q", fetchImpl)).rejects.toThrow("503");
  });

  it("rejects when no endpoint is configured", async () => {
    const fetchImpl = async () => new Response("ok", { status: 200 });
    await expect(
      askAssistant({ enabled: true, endpoint: null }, [], "q", fetchImpl),
    ).rejects.toThrow("not configured");
  });
});
