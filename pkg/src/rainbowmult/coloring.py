"""Edge-colorings of complete graphs, parallel colorings and iterated blow-ups.

Vertices are ``0..n-1`` and colors ``1..r``. Edge ``{u, v}`` with ``u < v`` is
stored at triangular index ``u*(2n-u-1)/2 + (v-u-1)``, which is also the order
edges appear in an ``.ecg`` file.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DomainError, FormatError, ResourceError

DEFAULT_MAX_VERTICES = 500


def edge_index(n: int, u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return u * (2 * n - u - 1) // 2 + (v - u - 1)


def _check_pair(n, u, v):
    if u == v:
        raise DomainError(f"loop edge {{{u}, {v}}} has no color")
    if not (0 <= u < n and 0 <= v < n):
        raise DomainError(f"vertex out of range 0..{n - 1}: {u}, {v}")


class EdgeColoring:
    """Immutable coloring of the edges of ``K_n`` with palette ``1..r``."""

    __slots__ = ("n", "r", "_tri", "_matrix")

    def __init__(self, n: int, r: int, colors):
        if n < 2:
            raise DomainError(f"need n >= 2 vertices, got {n}")
        if r < 1:
            raise DomainError(f"need palette size r >= 1, got {r}")
        tri = np.array(colors, dtype=np.intc).ravel()
        if tri.size != n * (n - 1) // 2:
            raise DomainError(f"expected {n * (n - 1) // 2} edge colors, got {tri.size}")
        if tri.size and (tri.min() < 1 or tri.max() > r):
            raise DomainError(f"edge colors must lie in 1..{r}")
        tri.flags.writeable = False
        self.n = n
        self.r = r
        self._tri = tri
        self._matrix = None

    @classmethod
    def from_function(cls, n, r, fn):
        """Build from ``fn(u, v)`` evaluated on every edge ``u < v``."""
        return cls(n, r, [fn(u, v) for u in range(n) for v in range(u + 1, n)])

    @classmethod
    def from_matrix(cls, matrix, r):
        m = np.asarray(matrix)
        n = m.shape[0]
        iu, ju = np.triu_indices(n, k=1)
        return cls(n, r, m[iu, ju])

    @property
    def num_edges(self) -> int:
        return self._tri.size

    @property
    def edge_colors(self) -> np.ndarray:
        """Read-only triangular color table."""
        return self._tri

    def color(self, u: int, v: int) -> int:
        _check_pair(self.n, u, v)
        return int(self._tri[edge_index(self.n, u, v)])

    def matrix(self) -> np.ndarray:
        """Symmetric ``n x n`` color matrix with zero diagonal (read-only, cached)."""
        if self._matrix is None:
            m = np.zeros((self.n, self.n), dtype=np.intc)
            iu, ju = np.triu_indices(self.n, k=1)
            m[iu, ju] = self._tri
            m[ju, iu] = self._tri
            m.flags.writeable = False
            self._matrix = m
        return self._matrix

    def edges(self):
        for u in range(self.n):
            for v in range(u + 1, self.n):
                yield u, v

    def used_colors(self) -> frozenset:
        return frozenset(int(c) for c in np.unique(self._tri))

    def is_surjective(self) -> bool:
        return len(self.used_colors()) == self.r

    def color_class(self, k: int) -> set:
        """Edges of color ``k`` as a set of ``frozenset`` pairs."""
        return {frozenset((u, v)) for u, v in self.edges() if self._tri[edge_index(self.n, u, v)] == k}

    def recolored(self, u: int, v: int, k: int) -> EdgeColoring:
        tri = self._tri.copy()
        tri[edge_index(self.n, u, v)] = k
        return EdgeColoring(self.n, self.r, tri)

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.n == other.n and self.r == other.r and np.array_equal(self._tri, other._tri)

    def __hash__(self):
        return hash((self.n, self.r, self._tri.tobytes()))

    def __repr__(self):
        return f"EdgeColoring(n={self.n}, r={self.r})"


@dataclass(frozen=True)
class BlowupColoring:
    """Depth-``k`` iterated blow-up of a base coloring of ``K_b``, on ``b**k`` vertices.

    Vertex ``u`` is read as ``k`` base-``b`` digits, most significant first; the
    edge ``{u, v}`` takes the base color of the first digit pair that differs.
    """

    base: EdgeColoring
    depth: int

    def __post_init__(self):
        if self.depth < 1:
            raise DomainError(f"blow-up depth must be >= 1, got {self.depth}")

    @property
    def b(self) -> int:
        return self.base.n

    @property
    def n(self) -> int:
        return self.base.n ** self.depth

    @property
    def r(self) -> int:
        return self.base.r

    def digits(self, u: int) -> tuple:
        out = []
        for _ in range(self.depth):
            u, d = divmod(u, self.b)
            out.append(d)
        return tuple(reversed(out))

    def vertex(self, digits) -> int:
        if len(digits) != self.depth or any(not 0 <= d < self.b for d in digits):
            raise DomainError(f"need {self.depth} digits in 0..{self.b - 1}, got {digits}")
        u = 0
        for d in digits:
            u = u * self.b + d
        return u

    def color(self, u: int, v: int) -> int:
        _check_pair(self.n, u, v)
        for du, dv in zip(self.digits(u), self.digits(v)):
            if du != dv:
                return self.base.color(du, dv)
        raise AssertionError("distinct vertices share all digits")


def color_of(coloring, u: int, v: int) -> int:
    """Color of edge ``{u, v}`` in a materialized or implicit coloring."""
    return coloring.color(u, v)


def parallel_coloring(r: int) -> EdgeColoring:
    """Coloring of ``K_r`` with ``r`` colors in which every color class is a matching."""
    if r < 3:
        raise DomainError(f"parallel coloring needs r >= 3, got {r}")
    tri = np.zeros(r * (r - 1) // 2, dtype=np.intc)

    def put(x, y, k):
        x, y = x % r, y % r
        i = edge_index(r, x, y)
        assert tri[i] == 0, "edge colored twice"
        tri[i] = k

    if r % 2:
        for k in range(1, r + 1):
            for i in range(1, (r - 1) // 2 + 1):
                put(k + i, k - i, k)
    else:
        half = r // 2
        for k in range(1, half + 1):
            for i in range(1, half):
                put(k + i, k - i, k)
        for k in range(half + 1, r + 1):
            for i in range(1, half + 1):
                put(k + i, k - i + 1, k)
    return EdgeColoring(r, r, tri)


def monochromatic(n: int, r: int = 1) -> EdgeColoring:
    return EdgeColoring(n, r, np.ones(n * (n - 1) // 2, dtype=np.intc))


def materialize(blowup: BlowupColoring, max_vertices: int = DEFAULT_MAX_VERTICES) -> EdgeColoring:
    n = blowup.n
    if n > max_vertices:
        raise ResourceError(f"blow-up has {n} vertices, above the cap of {max_vertices}")
    b = blowup.b
    iu, ju = np.triu_indices(n, k=1)
    out = np.zeros(iu.size, dtype=np.intc)
    pending = np.ones(iu.size, dtype=bool)
    base = blowup.base.matrix()
    for level in range(blowup.depth - 1, -1, -1):
        du = (iu // b**level) % b
        dv = (ju // b**level) % b
        hit = pending & (du != dv)
        out[hit] = base[du[hit], dv[hit]]
        pending &= ~hit
    assert not pending.any()
    return EdgeColoring(n, blowup.r, out)


@dataclass(frozen=True)
class ValidationReport:
    is_proper_edge_coloring: bool
    color_class_sizes: tuple
    is_surjective: bool


def validate(coloring: EdgeColoring) -> ValidationReport:
    sizes = np.bincount(coloring.edge_colors, minlength=coloring.r + 1)[1:]
    # proper iff no vertex sees any color twice
    m = coloring.matrix()
    proper = True
    for u in range(coloring.n):
        row = np.delete(m[u], u)
        if np.unique(row).size != row.size:
            proper = False
            break
    return ValidationReport(
        is_proper_edge_coloring=proper,
        color_class_sizes=tuple(int(s) for s in sizes),
        is_surjective=bool((sizes > 0).all()),
    )


def format_coloring(coloring: EdgeColoring) -> str:
    lines = ["ecg 1", f"{coloring.n} {coloring.r}"]
    tri = coloring.edge_colors
    pos = 0
    for i in range(coloring.n - 1):
        k = coloring.n - 1 - i
        lines.append(" ".join(str(int(c)) for c in tri[pos:pos + k]))
        pos += k
    return "\n".join(lines) + "\n"


def write_coloring(coloring: EdgeColoring, path) -> None:
    Path(path).write_text(format_coloring(coloring), encoding="ascii")


def _parse_int(tok, lineno, what):
    if not tok.isdigit() or (len(tok) > 1 and tok[0] == "0"):
        raise FormatError(f"bad {what} {tok!r}", lineno)
    return int(tok)


def parse_coloring(text: str) -> EdgeColoring:
    if not text.endswith("\n"):
        raise FormatError("missing trailing newline")
    lines = text[:-1].split("\n")
    if lines[0] != "ecg 1":
        raise FormatError(f"expected header 'ecg 1', got {lines[0]!r}", 1)
    if len(lines) < 2:
        raise FormatError("missing size line", 2)
    dims = lines[1].split(" ")
    if len(dims) != 2:
        raise FormatError("size line must be '<n> <r>'", 2)
    n = _parse_int(dims[0], 2, "vertex count")
    r = _parse_int(dims[1], 2, "palette size")
    if n < 2 or r < 1:
        raise FormatError(f"need n >= 2 and r >= 1, got n={n} r={r}", 2)
    body = lines[2:]
    if len(body) != n - 1:
        raise FormatError(
            f"expected {n - 1} edge rows for n={n}, got {len(body)}",
            3 + min(len(body), n - 1),
        )
    colors = []
    for i, line in enumerate(body):
        lineno = i + 3
        toks = line.split(" ")
        if len(toks) != n - 1 - i:
            raise FormatError(f"row {i} needs {n - 1 - i} colors, got {len(toks)}", lineno)
        for tok in toks:
            c = _parse_int(tok, lineno, "color")
            if not 1 <= c <= r:
                raise FormatError(f"color {c} outside 1..{r}", lineno)
            colors.append(c)
    return EdgeColoring(n, r, colors)


def read_coloring(path) -> EdgeColoring:
    try:
        text = Path(path).read_text(encoding="ascii")
    except UnicodeDecodeError as exc:
        raise FormatError(f"non-ASCII content: {exc}") from None
    return parse_coloring(text)
