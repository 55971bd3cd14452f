"""Cromwell moves: translations, commutations, (de)stabilizations, symmetries.

Stabilization splits a marker into a 2x2 block: the split marker at
(r, c) is removed, a new row is inserted above r and a new column to the
right of c, two markers of the split kind go on the block diagonal
avoiding the named corner, and one marker of the opposite kind goes on
the corner diagonally opposite the empty one.  The displaced row and
column partners move to whichever of the two new rows/columns does not
already hold an opposite-kind marker -- the unique relocation that keeps
one X and one O per line.  Destabilization is the exact inverse.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Union

from gridknot._kernels import grid_canon_key, grid_class_neighbors
from gridknot.errors import (
    GridKnotError,
    GridSyntaxError,
    IllegalCommutation,
    IndexOutOfRange,
    NoSuchBlock,
)
from gridknot.grid import GridDiagram, validate

CORNERS = ("NW", "NE", "SW", "SE")
OPPOSITE_CORNER = {"NW": "SE", "SE": "NW", "NE": "SW", "SW": "NE"}
# An O stabilization of each type matches one X type: the opposite corner.
PAIRED_X_CORNER = OPPOSITE_CORNER
DIRECTIONS = ("U", "D", "L", "R")
SYMMETRIES = ("S1", "S2", "S3", "S4")


@dataclass(frozen=True)
class Translate:
    direction: str  # U, D, L, R


@dataclass(frozen=True)
class CommuteRows:
    row: int  # swaps rows (row, row+1)


@dataclass(frozen=True)
class CommuteCols:
    col: int  # swaps columns (col, col+1)


@dataclass(frozen=True)
class Stabilize:
    kind: str    # X or O: which marker is split
    corner: str  # corner of the 2x2 block left empty
    col: int     # column of the marker being split


@dataclass(frozen=True)
class Destabilize:
    kind: str
    corner: str
    row: int  # lower-left cell of the 2x2 block
    col: int


Move = Union[Translate, CommuteRows, CommuteCols, Stabilize, Destabilize]


def _translate(g: GridDiagram, direction: str) -> GridDiagram:
    n = g.n
    if direction == "U":
        return GridDiagram(n, tuple((r + 1) % n for r in g.x), tuple((r + 1) % n for r in g.o))
    if direction == "D":
        return GridDiagram(n, tuple((r - 1) % n for r in g.x), tuple((r - 1) % n for r in g.o))
    if direction == "L":
        return GridDiagram(n, tuple(g.x[(c + 1) % n] for c in range(n)), tuple(g.o[(c + 1) % n] for c in range(n)))
    if direction == "R":
        return GridDiagram(n, tuple(g.x[(c - 1) % n] for c in range(n)), tuple(g.o[(c - 1) % n] for c in range(n)))
    raise GridKnotError(f"unknown translation direction {direction!r}")


def _intervals_commute(a1: int, b1: int, a2: int, b2: int) -> bool:
    """Disjoint-or-strictly-nested test for two marker intervals."""
    if len({a1, b1, a2, b2}) != 4:
        return False
    lo1, hi1 = min(a1, b1), max(a1, b1)
    lo2, hi2 = min(a2, b2), max(a2, b2)
    if hi1 < lo2 or hi2 < lo1:
        return True
    return (lo1 < lo2 and hi2 < hi1) or (lo2 < lo1 and hi1 < hi2)


def _commute_rows(g: GridDiagram, r: int) -> GridDiagram:
    if not 0 <= r <= g.n - 2:
        raise IndexOutOfRange(f"row pair ({r}, {r + 1}) out of range for n={g.n}")
    x_inv, o_inv = g.x_inverse(), g.o_inverse()
    if not _intervals_commute(x_inv[r], o_inv[r], x_inv[r + 1], o_inv[r + 1]):
        raise IllegalCommutation(f"rows {r}, {r + 1} interleave")
    swap = {r: r + 1, r + 1: r}
    return GridDiagram(
        g.n,
        tuple(swap.get(v, v) for v in g.x),
        tuple(swap.get(v, v) for v in g.o),
    )


def _commute_cols(g: GridDiagram, c: int) -> GridDiagram:
    if not 0 <= c <= g.n - 2:
        raise IndexOutOfRange(f"column pair ({c}, {c + 1}) out of range for n={g.n}")
    if not _intervals_commute(g.x[c], g.o[c], g.x[c + 1], g.o[c + 1]):
        raise IllegalCommutation(f"columns {c}, {c + 1} interleave")
    x = list(g.x)
    o = list(g.o)
    x[c], x[c + 1] = x[c + 1], x[c]
    o[c], o[c + 1] = o[c + 1], o[c]
    return GridDiagram(g.n, tuple(x), tuple(o))


def _block_cells(r: int, c: int) -> dict[str, tuple[int, int]]:
    return {"NW": (r + 1, c), "NE": (r + 1, c + 1), "SW": (r, c), "SE": (r, c + 1)}


def _stabilize(g: GridDiagram, kind: str, corner: str, col: int) -> GridDiagram:
    if corner not in CORNERS:
        raise GridKnotError(f"unknown corner {corner!r}")
    if not 0 <= col < g.n:
        raise IndexOutOfRange(f"column {col} out of range for n={g.n}")
    n = g.n
    c = col
    r = g.x[c] if kind == "X" else g.o[c]
    row_partner_col = g.o_inverse()[r] if kind == "X" else g.x_inverse()[r]
    col_partner_row = g.o[c] if kind == "X" else g.x[c]

    def nr(rr: int) -> int:
        return rr if rr <= r else rr + 1

    def nc(cc: int) -> int:
        return cc if cc <= c else cc + 1

    new_x: list[int | None] = [None] * (n + 1)
    new_o: list[int | None] = [None] * (n + 1)
    chosen_new, other_new = (new_x, new_o) if kind == "X" else (new_o, new_x)
    chosen_old, other_old = (g.x, g.o) if kind == "X" else (g.o, g.x)

    for cc in range(n):
        if cc != c:
            chosen_new[nc(cc)] = nr(chosen_old[cc])
        if cc != c and cc != row_partner_col:
            other_new[nc(cc)] = nr(other_old[cc])

    cells = _block_cells(r, c)
    anti_r, anti_c = cells[OPPOSITE_CORNER[corner]]
    for t in CORNERS:
        if t != corner and t != OPPOSITE_CORNER[corner]:
            br, bc = cells[t]
            chosen_new[bc] = br
    other_new[anti_c] = anti_r
    other_new[nc(row_partner_col)] = r + 1 if anti_r == r else r
    other_new[c + 1 if anti_c == c else c] = nr(col_partner_row)
    return validate(n + 1, new_x, new_o)  # type: ignore[arg-type]


def _cell_content(g: GridDiagram, rr: int, cc: int) -> str | None:
    if g.x[cc] == rr:
        return "X"
    if g.o[cc] == rr:
        return "O"
    return None


def _destabilize(g: GridDiagram, kind: str, corner: str, row: int, col: int) -> GridDiagram:
    if corner not in CORNERS:
        raise GridKnotError(f"unknown corner {corner!r}")
    n = g.n
    r, c = row, col
    if not (0 <= r <= n - 2 and 0 <= c <= n - 2):
        raise IndexOutOfRange(f"block at ({r}, {c}) out of range for n={n}")
    other_kind = "O" if kind == "X" else "X"
    cells = _block_cells(r, c)
    anti = OPPOSITE_CORNER[corner]
    for t in CORNERS:
        want = None if t == corner else other_kind if t == anti else kind
        if _cell_content(g, *cells[t]) != want:
            raise NoSuchBlock(f"no {kind}:{corner} block with lower-left cell ({r}, {c})")

    other_arr = g.o if kind == "X" else g.x
    other_inv = g.o_inverse() if kind == "X" else g.x_inverse()
    anti_r, anti_c = cells[anti]
    row_partner_row = r + 1 if anti_r == r else r
    row_partner_col = other_inv[row_partner_row]
    col_partner_col = c + 1 if anti_c == c else c
    col_partner_row = other_arr[col_partner_col]

    def mr(rr: int) -> int:
        return rr if rr < r else rr - 1

    def mc(cc: int) -> int:
        return cc if cc < c else cc - 1

    new_x: list[int | None] = [None] * (n - 1)
    new_o: list[int | None] = [None] * (n - 1)
    chosen_new, other_new = (new_x, new_o) if kind == "X" else (new_o, new_x)
    chosen_old, other_old = (g.x, g.o) if kind == "X" else (g.o, g.x)
    for cc in range(n):
        if cc not in (c, c + 1):
            chosen_new[mc(cc)] = mr(chosen_old[cc])
        if cc not in (c, c + 1, row_partner_col):
            other_new[mc(cc)] = mr(other_old[cc])
    chosen_new[c] = r
    other_new[mc(row_partner_col)] = r
    other_new[c] = mr(col_partner_row)
    return validate(n - 1, new_x, new_o)  # type: ignore[arg-type]


def apply(g: GridDiagram, move: Move) -> GridDiagram:
    """Apply a single move, raising if it is not legal on g."""
    if isinstance(move, Translate):
        return _translate(g, move.direction)
    if isinstance(move, CommuteRows):
        return _commute_rows(g, move.row)
    if isinstance(move, CommuteCols):
        return _commute_cols(g, move.col)
    if isinstance(move, Stabilize):
        return _stabilize(g, move.kind, move.corner, move.col)
    if isinstance(move, Destabilize):
        return _destabilize(g, move.kind, move.corner, move.row, move.col)
    raise GridKnotError(f"unknown move {move!r}")


def inverse_move(g_before: GridDiagram, move: Move) -> Move:
    """The move undoing ``move``, given the grid it was applied to."""
    if isinstance(move, Translate):
        flip = {"U": "D", "D": "U", "L": "R", "R": "L"}
        return Translate(flip[move.direction])
    if isinstance(move, (CommuteRows, CommuteCols)):
        return move
    if isinstance(move, Stabilize):
        r = g_before.x[move.col] if move.kind == "X" else g_before.o[move.col]
        return Destabilize(move.kind, move.corner, r, move.col)
    if isinstance(move, Destabilize):
        return Stabilize(move.kind, move.corner, move.col)
    raise GridKnotError(f"unknown move {move!r}")


def legal_moves(g: GridDiagram) -> list[Move]:
    """All moves applicable to g, in a fixed deterministic order."""
    out: list[Move] = [Translate(d) for d in DIRECTIONS]
    x_inv, o_inv = g.x_inverse(), g.o_inverse()
    for r in range(g.n - 1):
        if _intervals_commute(x_inv[r], o_inv[r], x_inv[r + 1], o_inv[r + 1]):
            out.append(CommuteRows(r))
    for c in range(g.n - 1):
        if _intervals_commute(g.x[c], g.o[c], g.x[c + 1], g.o[c + 1]):
            out.append(CommuteCols(c))
    for kind in ("X", "O"):
        for corner in CORNERS:
            for c in range(g.n):
                out.append(Stabilize(kind, corner, c))
    for kind in ("X", "O"):
        for corner in CORNERS:
            for r in range(g.n - 1):
                for c in range(g.n - 1):
                    try:
                        _destabilize(g, kind, corner, r, c)
                    except (NoSuchBlock, IndexOutOfRange):
                        continue
                    out.append(Destabilize(kind, corner, r, c))
    return out


def symmetry(g: GridDiagram, s: str) -> GridDiagram:
    """Apply one of the four grid symmetries (each an involution).

    S1 rotates 180 degrees; S2 reflects about the main (NE-SW) diagonal
    and swaps X with O; S3 reflects across the horizontal axis; S4
    rotates 180 degrees and swaps X with O.
    """
    n = g.n
    s = s.upper()
    if s == "S1":
        return GridDiagram(
            n,
            tuple(n - 1 - g.x[n - 1 - c] for c in range(n)),
            tuple(n - 1 - g.o[n - 1 - c] for c in range(n)),
        )
    if s == "S2":
        return GridDiagram(n, g.o_inverse(), g.x_inverse())
    if s == "S3":
        return GridDiagram(n, tuple(n - 1 - r for r in g.x), tuple(n - 1 - r for r in g.o))
    if s == "S4":
        return GridDiagram(
            n,
            tuple(n - 1 - g.o[n - 1 - c] for c in range(n)),
            tuple(n - 1 - g.x[n - 1 - c] for c in range(n)),
        )
    raise GridKnotError(f"unknown symmetry {s!r}")


_STAB_IMAGE = {
    "S1": {"NW": "SE", "SE": "NW", "NE": "SW", "SW": "NE"},
    "S2": {"NW": "NW", "SE": "SE", "NE": "SW", "SW": "NE"},
    "S3": {"NW": "SW", "SW": "NW", "NE": "SE", "SE": "NE"},
    "S4": {"NW": "NW", "NE": "NE", "SW": "SW", "SE": "SE"},
}


def stab_type_image(s: str, corner: str) -> str:
    """How a symmetry permutes the four X-stabilization types."""
    return _STAB_IMAGE[s.upper()][corner]


def symmetry_marker_image(g: GridDiagram, s: str, kind: str, col: int) -> tuple[str, int]:
    """Where the marker of ``kind`` in ``col`` lands under a symmetry.

    Returns (kind, column) of the image marker; S2 and S4 swap kinds.
    """
    n = g.n
    r = g.x[col] if kind == "X" else g.o[col]
    s = s.upper()
    other = "O" if kind == "X" else "X"
    if s == "S1":
        return kind, n - 1 - col
    if s == "S2":
        return other, r
    if s == "S3":
        return kind, col
    if s == "S4":
        return other, n - 1 - col
    raise GridKnotError(f"unknown symmetry {s!r}")


@dataclass(frozen=True)
class MoveScript:
    """Replayable sequence of moves; each must be legal where it lands."""

    moves: tuple[Move, ...]

    def replay(self, g: GridDiagram) -> GridDiagram:
        for m in self.moves:
            g = apply(g, m)
        return g

    def states(self, g: GridDiagram) -> Iterator[GridDiagram]:
        yield g
        for m in self.moves:
            g = apply(g, m)
            yield g


def serialize_script(script: MoveScript) -> str:
    lines = []
    for m in script.moves:
        if isinstance(m, Translate):
            lines.append("T" + m.direction)
        elif isinstance(m, CommuteRows):
            lines.append(f"CR {m.row}")
        elif isinstance(m, CommuteCols):
            lines.append(f"CC {m.col}")
        elif isinstance(m, Stabilize):
            lines.append(f"S{m.kind} {m.corner} {m.col}")
        elif isinstance(m, Destabilize):
            lines.append(f"D{m.kind} {m.corner} {m.row} {m.col}")
        else:
            raise GridKnotError(f"unknown move {m!r}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_script(text: str) -> MoveScript:
    moves: list[Move] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        pos = raw.find("#")
        line = (raw if pos < 0 else raw[:pos]).strip()
        if not line:
            continue
        tok = line.split()
        try:
            moves.append(_parse_move(tok))
        except (ValueError, KeyError, IndexError):
            raise GridSyntaxError(f"bad move {line!r}", line=lineno, column=1) from None
    return MoveScript(tuple(moves))


def _parse_move(tok: list[str]) -> Move:
    head = tok[0].upper()
    if head in ("TU", "TD", "TL", "TR"):
        if len(tok) != 1:
            raise ValueError("trailing tokens")
        return Translate(head[1])
    if head == "CR":
        return CommuteRows(int(tok[1]))
    if head == "CC":
        return CommuteCols(int(tok[1]))
    if head in ("SX", "SO"):
        corner = tok[1].upper()
        if corner not in CORNERS:
            raise ValueError(corner)
        return Stabilize(head[1], corner, int(tok[2]))
    if head in ("DX", "DO"):
        corner = tok[1].upper()
        if corner not in CORNERS:
            raise ValueError(corner)
        return Destabilize(head[1], corner, int(tok[2]), int(tok[3]))
    raise ValueError(head)


def _tc_class_closure(g: GridDiagram) -> set[bytes]:
    """All translation-class keys reachable by translations and commutations."""
    start = grid_canon_key(g.n, g.x, g.o)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for k in frontier:
            for nb in grid_class_neighbors(g.n, k):
                if nb not in seen:
                    seen.add(nb)
                    nxt.append(nb)
        frontier = nxt
    return seen


def _tc_moves(g: GridDiagram) -> Iterator[Move]:
    x_inv, o_inv = g.x_inverse(), g.o_inverse()
    for d in DIRECTIONS:
        yield Translate(d)
    for r in range(g.n - 1):
        if _intervals_commute(x_inv[r], o_inv[r], x_inv[r + 1], o_inv[r + 1]):
            yield CommuteRows(r)
    for c in range(g.n - 1):
        if _intervals_commute(g.x[c], g.o[c], g.x[c + 1], g.o[c + 1]):
            yield CommuteCols(c)


def o_stab_script(g: GridDiagram, corner: str, col: int) -> MoveScript:
    """Express an O stabilization as translations, commutations, and one X move.

    The returned script, replayed on g, lands in the same
    translation-commutation orbit as the direct O stabilization, and its
    single stabilization is the paired X type (the opposite corner).
    Found by breadth-first search over the orbit of g, trying the paired
    X stabilization from each translation class.
    """
    if not 0 <= col < g.n:
        raise IndexOutOfRange(f"column {col} out of range for n={g.n}")
    target = apply(g, Stabilize("O", corner, col))
    target_classes = _tc_class_closure(target)
    paired = PAIRED_X_CORNER[corner]

    start_key = g.key()
    paths: dict[bytes, tuple[Move, ...]] = {start_key: ()}
    queue = deque([g])
    checked: set[bytes] = set()
    while queue:
        h = queue.popleft()
        hkey = h.key()
        ck = grid_canon_key(h.n, h.x, h.o)
        if ck not in checked:
            checked.add(ck)
            for p in range(h.n):
                cand = _stabilize(h, "X", paired, p)
                if grid_canon_key(cand.n, cand.x, cand.o) in target_classes:
                    return MoveScript(paths[hkey] + (Stabilize("X", paired, p),))
        for m in _tc_moves(h):
            h2 = apply(h, m)
            k2 = h2.key()
            if k2 not in paths:
                paths[k2] = paths[hkey] + (m,)
                queue.append(h2)
    raise GridKnotError("no paired X stabilization found; orbit search exhausted")
