"""Universal Glenn tables: the ordered coface-by-coface boundary tables.

Row heads are the special cofaces in their fixed order; entries are the
literal composites with the source's special cofaces, placed into columns by
the layout the paper prints (grey padding keeps the almost-symmetric
matching pattern); removed rows carry a Lambda marker, inner rows a wedge
dot, and isomorphism-linked entry pairs are circled.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .shapes import SHAPES
from .shapes.gamma import coface_display_name

GREY = None

# column placement per row, where integers index the row's composites
THETA2_LAYOUTS = {
    (2,): [(0, 1)] * 3,
    (1, 0): [(0, 1, 2), (0, 1, 2), (0, 1, GREY), (0, 1, GREY)],
    (0, 1): [(GREY, 0, 1), (GREY, 0, 1), (0, 1, 2), (0, 1, 2)],
    (3,): [(0, 1, 2)] * 4,
    (2, 0): [(0, 1, 2, 3)] * 3 + [(0, 1, 2, GREY), (0, 1, 2, GREY)],
    (0, 2): [(GREY, 0, 1, 2), (GREY, 0, 1, 2), (0, 1, 2, 3), (0, 1, 2, 3), (0, 1, 2, 3)],
    (1, 1): [
        (0, 1, GREY, 2, 3),
        (0, GREY, 1, 2, 3),
        (0, GREY, 1, GREY, 2),
        (GREY, 0, 1, 2, GREY),
        (0, 1, GREY, 2, 3),
        (0, 1, 2, GREY, 3),
    ],
    (1, 0, 0): [(0, 1, 2, 3)] * 5,
    (0, 1, 0): [
        (GREY, 0, 1, 2, 3),
        (GREY, 0, 1, 2, 3),
        (0, 1, GREY, 2, 3),
        (0, 1, GREY, 2, 3),
        (0, 1, 2, 3, GREY),
        (0, 1, 2, 3, GREY),
    ],
    (0, 0, 1): [(0, 1, 2, 3)] * 5,
}

CIRCLED = {
    ("gamma", 4): {(2, 4), (5, 3)},
    ("theta2", (1, 1)): {(3, 1), (3, 3)},
}


@dataclass
class GlennRow:
    head: str
    entries: list
    removed: bool = False
    inner: bool = False
    circled: set = field(default_factory=set)


@dataclass
class GlennTable:
    shape_name: str
    obj: object
    rows: list

    def render(self) -> str:
        texts = []
        for row in self.rows:
            cells = []
            for j, e in enumerate(row.entries):
                if e is None:
                    cells.append(None)
                else:
                    cells.append(f"(o){e}" if j in row.circled else e)
            texts.append(cells)
        width = max(
            [len(c) for cells in texts for c in cells if c is not None]
            + [len(r.head) for r in self.rows]
        )
        lines = []
        for row, cells in zip(self.rows, texts):
            marker = "L" if row.removed else ("^" if row.inner else " ")
            rendered = ["#" * width if c is None else c.rjust(width) for c in cells]
            lines.append(f"{marker} {row.head.ljust(width)} || " + " | ".join(rendered))
        return "\n".join(lines)


def universal_glenn_table(shape_name: str, obj, removed: frozenset = frozenset(), zero_based: bool = False) -> GlennTable:
    """The universal Glenn table for the object; bit-exact for dimensions 3
    and 4 (the dimensions the acceptance gate freezes)."""
    shape = SHAPES[shape_name]
    if shape.dim(obj) not in (2, 3, 4):
        raise ValueError(f"unsupported dimension {shape.dim(obj)} for a Glenn table")
    cofaces = shape.cofaces(obj)
    rows = []
    for k, f in enumerate(cofaces):
        src = f.source
        composites = [shape.compose(f, e) for e in shape.cofaces(src)] if shape.dim(src) >= 1 else []
        labels = [_entry_label(shape_name, shape, g, zero_based) for g in composites]
        layout = _layout(shape_name, obj, k, len(labels))
        entries = [GREY if slot is GREY else labels[slot] for slot in layout]
        rows.append(
            GlennRow(
                head=_entry_label(shape_name, shape, f, zero_based),
                entries=entries,
                removed=k in removed,
                inner=shape.is_inner_coface(f),
            )
        )
    key = (shape_name, obj)
    for i, j in CIRCLED.get(key, ()):  # noqa: B007
        rows[i].circled.add(j)
    return GlennTable(shape_name, obj, rows)


def _layout(shape_name: str, obj, row: int, n_entries: int):
    if shape_name == "theta2" and obj in THETA2_LAYOUTS:
        return THETA2_LAYOUTS[obj][row]
    return tuple(range(n_entries))


def _entry_label(shape_name: str, shape, g, zero_based: bool) -> str:
    if shape_name == "gamma":
        name = coface_display_name(g)
        if zero_based:
            name = "".join(str(int(c) - 1) if c.isdigit() else c for c in name)
        return name
    if shape_name == "theta2":
        return str(g)
    if shape_name == "delta":
        part = g.parts[0]
        return "".join(str(v) for v in part.values)
    return shape.format_map(g)


def glenn_table_markers_note() -> str:
    return (
        "rows: L = removed (horn), ^ = inner coface; entries: literal"
        " composites, #### = absent (grey) cell, (o) = circled"
        " isomorphism-linked pair"
    )
