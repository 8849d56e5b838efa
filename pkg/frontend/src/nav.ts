/** Pure navigation state machine over the flattened view sequence:
 * title page, then each slide followed by its sub-slides. Next reveals the
 * next fragment if any remain, else advances to the following view; Prev
 * mirrors it exactly, so Next∘Prev is the identity away from the deck
 * boundaries. */

export interface View {
  slide: number; // 0 = title page, 1.. = deck slides
  sub: number | null; // null = the slide's own body
  maxStep: number; // highest fragment reveal step in this view
}

export interface NavPos {
  view: number;
  step: number;
}

export const START: NavPos = { view: 0, step: 0 };

export function next(pos: NavPos, views: View[]): NavPos {
  const current = views[pos.view];
  if (!current) return pos;
  if (pos.step < current.maxStep) return { view: pos.view, step: pos.step + 1 };
  if (pos.view < views.length - 1) return { view: pos.view + 1, step: 0 };
  return pos; // end of deck: no wrap
}

export function prev(pos: NavPos, views: View[]): NavPos {
  if (pos.step > 0) return { view: pos.view, step: pos.step - 1 };
  if (pos.view > 0) return { view: pos.view - 1, step: views[pos.view - 1].maxStep };
  return pos; // start of deck: no wrap
}

export function atStart(pos: NavPos): boolean {
  return pos.view === 0 && pos.step === 0;
}

export function atEnd(pos: NavPos, views: View[]): boolean {
  return pos.view >= views.length - 1 && pos.step >= (views[views.length - 1]?.maxStep ?? 0);
}

export function positionLabel(pos: NavPos, views: View[]): string {
  return `${pos.view + 1} / ${views.length}`;
}
