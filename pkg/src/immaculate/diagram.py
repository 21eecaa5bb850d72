"""Row diagrams with grey, blue, and red cell counts, and tunnel hooks.

A diagram is determined by an integer row-length sequence mu, a sequence
nu of nonnegative inner lengths, and an offset r marking how many bottom
rows have already been absorbed. Rows are indexed 1-based from the bottom;
active rows are r+1 through k. Per active row i the counts are:

  grey   a_i = nu_i
  blue   b_i = mu_i - nu_i   if mu_i > 0 and nu_i <= mu_i
  red    c_i = nu_i - mu_i   if mu_i > 0 and mu_i < nu_i
  red    c_i = |mu_i| + nu_i if mu_i <= 0

so a_i + b_i - c_i = mu_i always, and no row has both blue and red.
Everything else in the quadrant is implicitly purple; purple cells are
never stored (the purple region is infinite).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

Cell = tuple[int, int]


def row_counts(mu_i: int, nu_i: int) -> tuple[int, int, int]:
    """(grey, blue, red) counts for a row with outer length mu_i over nu_i."""
    if nu_i < 0:
        raise ValueError(f"nu entry must be nonnegative, got {nu_i}")
    if mu_i > 0 and nu_i <= mu_i:
        return nu_i, mu_i - nu_i, 0
    if mu_i > 0:
        return nu_i, 0, nu_i - mu_i
    return nu_i, 0, -mu_i + nu_i


@dataclass(frozen=True)
class GbprDiagram:
    mu: tuple[int, ...]
    nu: tuple[int, ...]
    offset: int = 0

    def __post_init__(self):
        if len(self.mu) != len(self.nu):
            raise ValueError("mu and nu must have equal length")
        if not 0 <= self.offset <= len(self.mu):
            raise ValueError(f"offset {self.offset} out of range")
        if any(n < 0 for n in self.nu):
            raise ValueError(f"nu must be nonnegative: {self.nu}")
        tail = self.nu[self.offset:]
        if any(tail[i] < tail[i + 1] for i in range(len(tail) - 1)):
            raise ValueError(
                f"active rows of nu must be weakly decreasing: {tail}"
            )

    @property
    def k(self) -> int:
        return len(self.mu)

    @property
    def start_row(self) -> int:
        """First active row, 1-based."""
        return self.offset + 1

    def is_exhausted(self) -> bool:
        return self.offset == self.k

    def counts(self, i: int) -> tuple[int, int, int]:
        """(grey, blue, red) for active row i (1-based)."""
        if not self.start_row <= i <= self.k:
            raise ValueError(f"row {i} is not active")
        return row_counts(self.mu[i - 1], self.nu[i - 1])

    def boundary_cells(self) -> set[Cell]:
        """Cells along the nu profile reachable by a hook from the start row.

        Row p > s spans columns nu_p+1 .. nu_{p-1}+1. The start row s spans
        nu_s+1 .. max(nu_s+1, a_s+b_s+c_s), covering its colored extent.
        """
        if self.is_exhausted():
            return set()
        s = self.start_row
        nu = self.nu
        a, b, c = self.counts(s)
        cells = {
            (s, q) for q in range(nu[s - 1] + 1, max(nu[s - 1] + 1, a + b + c) + 1)
        }
        for p in range(s + 1, self.k + 1):
            for q in range(nu[p - 1] + 1, nu[p - 2] + 1 + 1):
                cells.add((p, q))
        return cells

    def tunnel_cells(self) -> list[Cell]:
        """One cell (p, nu_p + 1) per active row, listed bottom-up."""
        return [(p, self.nu[p - 1] + 1) for p in range(self.start_row, self.k + 1)]


def build_diagram(
    mu: Iterable[int], nu: Optional[Iterable[int]] = None, offset: int = 0
) -> GbprDiagram:
    """Diagram for mu over nu, zero-padding nu on the right to len(mu)."""
    mu = tuple(mu)
    nu = tuple(nu) if nu is not None else ()
    if len(nu) > len(mu):
        raise ValueError("nu longer than mu")
    nu = nu + (0,) * (len(mu) - len(nu))
    return GbprDiagram(mu, nu, offset)


@dataclass(frozen=True)
class TunnelHook:
    """All boundary cells in rows start_row..p for a tunnel cell (p, q).

    eta[i-1] counts the covered cells in row i. delta is the H-subscript
    the hook contributes: spin of the start row plus the taxicab distance
    from the start row's tunnel cell to the terminal.
    """

    start_row: int
    terminal: Cell
    cells: frozenset[Cell]
    eta: tuple[int, ...]
    sign: int
    delta: int


def make_tunnel_hook(diagram: GbprDiagram, tau: Cell) -> TunnelHook:
    if tau not in diagram.tunnel_cells():
        raise ValueError(f"{tau} is not a tunnel cell of the diagram")
    s = diagram.start_row
    p, q = tau
    boundary = diagram.boundary_cells()
    cells = frozenset(c for c in boundary if c[0] <= p)
    eta = [0] * diagram.k
    for row, _ in cells:
        eta[row - 1] += 1
    _, b, c = diagram.counts(s)
    sign = -1 if (p - s) % 2 else 1
    delta = (b - c) + (diagram.nu[s - 1] + 1 - q) + (p - s)
    return TunnelHook(s, tau, cells, tuple(eta), sign, delta)


def apply_hook(diagram: GbprDiagram, hook: TunnelHook) -> GbprDiagram:
    """Absorb the hook: bump nu by the per-row cover counts, advance offset.

    Rows are rebuilt from (mu, new nu); covered purple and red cells turn
    into the grey/red bookkeeping of the next diagram automatically.
    """
    if hook.start_row != diagram.start_row:
        raise ValueError("hook does not start at the diagram's active row")
    nu = tuple(n + e for n, e in zip(diagram.nu, hook.eta))
    return GbprDiagram(diagram.mu, nu, diagram.offset + 1)


def _row_width(diagram: GbprDiagram, i: int) -> int:
    if i <= diagram.offset:
        return diagram.nu[i - 1]
    a, b, c = diagram.counts(i)
    return max(a + b + c, a + 1)


def _row_letters(diagram: GbprDiagram, i: int, width: int) -> list[str]:
    out = ["."] * width
    nu_i = diagram.nu[i - 1]
    for col in range(nu_i):
        out[col] = "G"
    if i > diagram.offset:
        a, b, c = diagram.counts(i)
        for col in range(a, a + b):
            out[col] = "B"
        for col in range(a, a + c):
            out[col] = "R"
        if b == 0 and c == 0:
            out[a] = "P"
    return out


_OVERLAY_MARKS = "123456789abcdefghijklmnopqrstuvwxyz"


def render(
    diagram: GbprDiagram,
    overlay: Optional[list[TunnelHook]] = None,
    fmt: str = "ascii",
) -> str:
    """Draw the diagram bottom-up (row k printed first).

    Letters: G grey, B blue, R red, P explicit purple marker at column
    nu_i+1 in rows with no blue or red, '.' elsewhere. Overlay hooks are
    numbered and replace the letters on their cells; a legend gives each
    hook's terminal, sign, and delta.
    """
    overlay = overlay or []
    width = max(
        [_row_width(diagram, i) for i in range(1, diagram.k + 1)]
        + [q for h in overlay for _, q in h.cells]
        + [1]
    )
    grid = {i: _row_letters(diagram, i, width) for i in range(1, diagram.k + 1)}
    for n, hook in enumerate(overlay):
        mark = _OVERLAY_MARKS[n % len(_OVERLAY_MARKS)]
        for row, col in hook.cells:
            grid[row][col - 1] = mark
    lines = []
    if fmt == "ascii":
        for i in range(diagram.k, 0, -1):
            lines.append(f"row {i:>2}: " + "".join(grid[i]))
        for n, hook in enumerate(overlay):
            mark = _OVERLAY_MARKS[n % len(_OVERLAY_MARKS)]
            sign = "+" if hook.sign > 0 else "-"
            lines.append(
                f"hook {mark}: start row {hook.start_row}, "
                f"terminal {hook.terminal}, sign {sign}, delta {hook.delta}"
            )
        return "\n".join(lines)
    if fmt == "latex":
        lines.append("\\documentclass{standalone}")
        lines.append("\\begin{document}")
        lines.append("\\begin{tabular}{" + "c" * width + "}")
        for i in range(diagram.k, 0, -1):
            lines.append(" & ".join(grid[i]) + " \\\\")
        lines.append("\\end{tabular}")
        lines.append("\\end{document}")
        return "\n".join(lines)
    raise ValueError(f"unknown render format: {fmt}")
