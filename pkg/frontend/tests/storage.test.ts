import { describe, expect, it } from "vitest";

import { memoryStorage, persistValue, restoreValue, widgetKey } from "../src/storage";

describe("widget persistence", () => {
  it("uses the course-scoped key shape", () => {
    expect(widgetKey("My Course", "w3")).toBe("course:My Course:w3");
  });

  it("round-trips values", () => {
    const storage = memoryStorage();
    persistValue(storage, "T", "w1", "typed answer");
    expect(restoreValue(storage, "T", "w1")).toBe("typed answer");
  });

  it("misses come back as null", () => {
    expect(restoreValue(memoryStorage(), "T", "w9")).toBeNull();
  });

  it("two courses do not collide", () => {
    const storage = memoryStorage();
    persistValue(storage, "A", "w1", "first");
    persistValue(storage, "B", "w1", "second");
    expect(restoreValue(storage, "A", "w1")).toBe("first");
    expect(restoreValue(storage, "B", "w1")).toBe("second");
  });

  it("swallows storage failures", () => {
    const hostile = {
      getItem() {
        throw new Error("denied");
      },
      setItem() {
        throw new Error("denied");
      },
    };
    expect(() => persistValue(hostile, "T", "w1", "x")).not.toThrow();
    expect(restoreValue(hostile, "T", "w1")).toBeNull();
  });
});
