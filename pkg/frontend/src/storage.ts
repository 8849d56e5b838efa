/** Widget value persistence: browser-local only, keyed per course title so
 * two decks on one origin do not clobber each other. */

export interface StorageLike {
  getItem(key: string): string | null;
  setItem(key: string, value: string): void;
}

export function widgetKey(courseTitle: string, widgetId: string): string {
  return `course:${courseTitle}:${widgetId}`;
}

export function memoryStorage(): StorageLike {
  const data = new Map<string, string>();
  return {
    getItem: (key) => (data.has(key) ? (data.get(key) as string) : null),
    setItem: (key, value) => {
      data.set(key, value);
    },
  };
}

/** localStorage when usable, otherwise an in-memory fallback (private
 * browsing modes can throw on access). */
export function safeStorage(): StorageLike {
  try {
    const probe = "course:probe";
    window.localStorage.setItem(probe, "1");
    window.localStorage.removeItem(probe);
    return window.localStorage;
  } catch {
    return memoryStorage();
  }
}

export function restoreValue(storage: StorageLike, title: string, widgetId: string): string | null {
  try {
    return storage.getItem(widgetKey(title, widgetId));
  } catch {
    return null;
  }
}

export function persistValue(
  storage: StorageLike,
  title: string,
  widgetId: string,
  value: string,
): void {
  try {
    storage.setItem(widgetKey(title, widgetId), value);
  } catch {
    // storage quota or privacy mode: typing still works, it just won't survive reload
  }
}
