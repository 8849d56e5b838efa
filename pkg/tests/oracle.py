"""Brute-force reference fold, kept independent of the package internals.

Restates the slide-type folding rules over plain dicts with no shared
helper code, so property tests can compare the production fold against it
on arbitrary cell sequences.
"""

from __future__ import annotations

from coursecast.ingest import SlideType


def _fresh():
    return {"blocks": [], "narration": "", "subs": []}


def reference_fold(cells):
    """Fold cells into [{"blocks": [(cell_index, reveal_step)], "narration": str,
    "subs": [...same shape, no nested subs...]}] exactly per the folding rules."""
    slides = []
    top = None
    receiver = None

    def force_open():
        nonlocal top, receiver
        top = _fresh()
        slides.append(top)
        receiver = top

    for cell in cells:
        kind = cell.slide_type
        if kind == SlideType.SKIP:
            continue
        if kind == SlideType.SLIDE:
            force_open()
            receiver["blocks"].append((cell.index, 0))
        elif kind == SlideType.SUBSLIDE:
            if top is None:
                force_open()
            sub = _fresh()
            top["subs"].append(sub)
            receiver = sub
            receiver["blocks"].append((cell.index, 0))
        elif kind == SlideType.NOTES:
            if receiver is None:
                force_open()
            if cell.source == "":
                pass  # nothing to say
            elif receiver["narration"]:
                receiver["narration"] = receiver["narration"] + "\n\n" + cell.source
            else:
                receiver["narration"] = cell.source
        else:  # fragment or inline
            if receiver is None:
                force_open()
            existing = [step for (_, step) in receiver["blocks"]]
            high = max(existing) if existing else 0
            step = high + 1 if kind == SlideType.FRAGMENT else high
            receiver["blocks"].append((cell.index, step))
    return slides


def deck_shape(deck):
    """Project a Deck onto the reference fold's dict shape for comparison."""

    def slide_dict(slide):
        return {
            "blocks": [(block.cell_index, block.reveal_step) for block in slide.blocks],
            "narration": slide.narration,
            "subs": [slide_dict(sub) for sub in slide.subslides],
        }

    return [slide_dict(slide) for slide in deck.slides]
