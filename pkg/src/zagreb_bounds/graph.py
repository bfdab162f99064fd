"""Simple undirected graphs: construction, parsing, degree data and small-graph enumeration.

Vertices are 0-based inside a :class:`Graph`; text formats use 1-based labels and
sorted degree positions are 1-based (``d(1)`` is the maximum degree).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, GraphRangeError, HypothesisError, ParseError

GRAPH6_HEADER = ">>graph6<<"
HARD_MAX_N = 9


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph stored as one neighbour bitmask per vertex."""

    n: int
    rows: tuple[int, ...]
    m: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {i} references a vertex outside 0..{self.n - 1}")
            if row >> i & 1:
                raise ValueError("loop not allowed")
            for j in _bits(row):
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"adjacency is not symmetric at ({i}, {j})")
        object.__setattr__(self, "m", sum(r.bit_count() for r in self.rows) // 2)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], *, one_based: bool = False) -> Graph:
        rows = [0] * n
        shift = 1 if one_based else 0
        for u, v in edges:
            u -= shift
            v -= shift
            if u == v:
                raise ValueError("loop not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u + shift}, {v + shift}) outside vertex range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as 0-based pairs ``(i, j)`` with ``i < j``, sorted."""
        return [(i, j) for i in range(self.n) for j in _bits(self.rows[i]) if i < j]

    def degrees(self) -> list[int]:
        """Degrees in vertex order (unsorted)."""
        return [r.bit_count() for r in self.rows]

    def adjacency_matrix(self):
        import numpy as np

        a = np.zeros((self.n, self.n))
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1.0
        return a

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={to_graph6(self)!r})"


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# -- named families ---------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << i) for i in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """The star K_{1,leaves}; vertex 0 is the centre."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ row ^ (1 << i) for i, row in enumerate(g.rows)))


def is_connected(g: Graph) -> bool:
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


# -- edge-list text ---------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines with 1-based labels.

    Blank lines and ``#`` comments are ignored. An ``n <count>`` line fixes the
    vertex count; otherwise it is the largest label seen.
    """
    declared = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if len(tokens) != 2 or declared is not None:
                raise ParseError(f"line {lineno}: malformed or repeated 'n' header")
            declared = _positive_int(tokens[1], lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected two vertex labels, got {len(tokens)} tokens")
        u, v = (_positive_int(t, lineno) for t in tokens)
        if u == v:
            raise ParseError(f"line {lineno}: loop not allowed ({u} {v})")
        edges.append((u, v))

    top = max((max(e) for e in edges), default=0)
    if declared is None:
        if top == 0:
            raise ParseError("no edges and no 'n' header: vertex count unknown")
        declared = top
    elif top > declared:
        raise GraphRangeError(f"vertex label {top} exceeds declared n = {declared}")
    return Graph.from_edges(declared, edges, one_based=True)


def _positive_int(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: {token!r} is not an integer") from None
    if value < 1:
        raise ParseError(f"line {lineno}: vertex labels are positive, got {value}")
    return value


def to_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{i + 1} {j + 1}" for i, j in g.edges()]
    return "\n".join(lines) + "\n"


# -- graph6 -----------------------------------------------------------------

def _pair_order(n: int) -> list[tuple[int, int]]:
    # graph6 bit order: column-major upper triangle, (0,1), (0,2), (1,2), (0,3), ...
    return [(i, j) for j in range(1, n) for i in range(j)]


def _encode_size(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    if n <= 258047:
        return [126] + [(n >> s & 63) + 63 for s in (12, 6, 0)]
    return [126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]


def to_graph6(g: Graph) -> str:
    out = _encode_size(g.n)
    acc = nbits = 0
    for i, j in _pair_order(g.n):
        acc = acc << 1 | (g.rows[i] >> j & 1)
        nbits += 1
        if nbits == 6:
            out.append(acc + 63)
            acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise ParseError("empty graph6 string")
    data = []
    for pos, ch in enumerate(s):
        code = ord(ch)
        if not 63 <= code <= 126:
            raise ParseError(f"byte {ch!r} at offset {pos} is outside the graph6 range 63..126")
        data.append(code - 63)

    if data[0] != 63:
        n, body = data[0], data[1:]
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise ParseError("truncated 8-byte graph6 size header")
        n, body = _join6(data[2:8]), data[8:]
    else:
        if len(data) < 4:
            raise ParseError("truncated 4-byte graph6 size header")
        n, body = _join6(data[1:4]), data[4:]
    if n < 1:
        raise ParseError("graph6 encodes zero vertices")

    pairs = _pair_order(n)
    need = -(-len(pairs) // 6)
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} for n = {n}")
    rows = [0] * n
    for k, (i, j) in enumerate(pairs):
        if body[k // 6] >> (5 - k % 6) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def _join6(chunks: Sequence[int]) -> int:
    value = 0
    for c in chunks:
        value = value << 6 | c
    return value


# -- degree sequence and Gamma classes --------------------------------------

@dataclass(frozen=True)
class DegreeSequence:
    """Non-increasing degree list with 1-based positional access."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        ds = self.degrees
        if not ds:
            raise ValueError("empty degree sequence")
        if any(a < b for a, b in zip(ds, ds[1:])):
            raise ValueError("degrees must be non-increasing")
        if ds[-1] < 0 or ds[0] > len(ds) - 1:
            raise ValueError("degrees must lie in 0..n-1")
        if sum(ds) % 2:
            raise ValueError("degree sum is odd")

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> DegreeSequence:
        return cls(tuple(sorted(degrees, reverse=True)))

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    def d(self, i: int) -> int:
        """Degree at 1-based sorted position ``i``."""
        if not 1 <= i <= self.n:
            raise HypothesisError(f"position {i} outside 1..{self.n}")
        return self.degrees[i - 1]

    @property
    def Delta(self) -> int:
        return self.degrees[0]

    @property
    def d2(self) -> int:
        return self.d(2)

    @property
    def d_nminus1(self) -> int:
        return self.d(self.n - 1)

    @property
    def delta(self) -> int:
        return self.degrees[-1]

    def is_regular(self) -> bool:
        return self.degrees[0] == self.degrees[-1]


def degree_sequence(g: Graph | DegreeSequence) -> DegreeSequence:
    if isinstance(g, DegreeSequence):
        return g
    return DegreeSequence.from_degrees(g.degrees())


@dataclass(frozen=True, order=True)
class GammaClass:
    """Graphs whose sorted degrees are constant on positions ``i..j`` (1-based)."""

    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise HypothesisError(f"Gamma class needs 1 <= i < j, got ({self.i}, {self.j})")

    def contains(self, g: Graph | DegreeSequence) -> bool:
        ds = degree_sequence(g)
        if self.j > ds.n:
            raise HypothesisError(f"Gamma class ({self.i}, {self.j}) exceeds n = {ds.n}")
        return len(set(ds.degrees[self.i - 1:self.j])) == 1

    def __str__(self) -> str:
        return f"Gamma[{self.i},{self.j}]"


# Classes appearing in the equality statements, as (start, offset from n).
NAMED_GAMMA = {
    "1,n": (1, 0), "2,n-1": (2, 1), "1,n-1": (1, 1), "2,n": (2, 0), "1,n-2": (1, 2),
    "3,n": (3, 0), "3,n-1": (3, 1), "2,n-2": (2, 2), "3,n-2": (3, 2), "1,n-3": (1, 3),
}


def constant_on(ds: DegreeSequence, i: int, j: int) -> bool:
    """``d_i = ... = d_j``; vacuously true when the range holds fewer than two positions."""
    if j - i < 1:
        return True
    return len(set(ds.degrees[i - 1:j])) == 1


def gamma_membership(
    g: Graph | DegreeSequence, classes: Iterable[tuple[int, int]] | None = None
) -> dict[GammaClass, bool]:
    """Membership of ``g`` in each queried class (all ``i < j <= n`` when none given)."""
    ds = degree_sequence(g)
    if classes is None:
        classes = [(i, j) for i in range(1, ds.n + 1) for j in range(i + 1, ds.n + 1)]
    result = {}
    for i, j in classes:
        gc = GammaClass(i, j)
        result[gc] = gc.contains(ds)
    return result


def named_gamma_flags(g: Graph | DegreeSequence) -> dict[str, bool]:
    """Flags for the named classes; ranges that collapse for small n read as vacuously true."""
    ds = degree_sequence(g)
    return {name: constant_on(ds, i, ds.n - off) for name, (i, off) in NAMED_GAMMA.items()}


# -- enumeration ------------------------------------------------------------

@dataclass(frozen=True)
class CorpusSpec:
    n_min: int
    n_max: int
    connected_only: bool = True
    dedup_isomorphic: bool = False
    min_degree_positive: bool = True

    def __post_init__(self):
        if not 1 <= self.n_min <= self.n_max:
            raise ValueError(f"need 1 <= n_min <= n_max, got {self.n_min}, {self.n_max}")

    def describe(self) -> str:
        flags = [
            "connected" if self.connected_only else "any",
            "dedup" if self.dedup_isomorphic else "labeled",
            "delta>=1" if self.min_degree_positive else "delta>=0",
        ]
        return f"n={self.n_min}..{self.n_max} " + ",".join(flags)


def max_enumeration_n() -> int:
    """Enumeration guard: ``ZB_MAX_N`` if set, never above the hard cap."""
    raw = os.environ.get("ZB_MAX_N")
    if raw is None:
        return HARD_MAX_N
    try:
        return min(int(raw), HARD_MAX_N)
    except ValueError:
        return HARD_MAX_N


def enumerate_graphs(spec: CorpusSpec, shard: tuple[int, int] | None = None) -> Iterator[Graph]:
    """Stream the corpus described by ``spec``.

    Labeled graphs come in increasing edge-bitmask order (bit k = k-th pair in
    graph6 order); isomorphism representatives come in canonical-code order.
    ``shard=(index, count)`` restricts each n to one contiguous block of that
    order, so shards partition the corpus.
    """
    limit = max_enumeration_n()
    if spec.n_max > limit:
        raise CapacityError(f"n_max = {spec.n_max} exceeds the enumeration guard ({limit})")
    if shard is not None:
        index, count = shard
        if not 0 <= index < count:
            raise ValueError(f"bad shard {shard}")
    return _enumerate(spec, shard)


def _enumerate(spec: CorpusSpec, shard: tuple[int, int] | None) -> Iterator[Graph]:
    for n in range(spec.n_min, spec.n_max + 1):
        if spec.dedup_isomorphic:
            reps = iso_classes(n)
            lo, hi = _block(len(reps), shard)
            source: Iterable[Graph] = reps[lo:hi]
        else:
            source = _labeled(n, *_block(1 << (n * (n - 1) // 2), shard))
        for g in source:
            if spec.min_degree_positive and not all(g.rows):
                continue
            if spec.connected_only and not is_connected(g):
                continue
            yield g


def _block(total: int, shard: tuple[int, int] | None) -> tuple[int, int]:
    if shard is None:
        return 0, total
    index, count = shard
    return total * index // count, total * (index + 1) // count


def _labeled(n: int, lo: int, hi: int) -> Iterator[Graph]:
    pairs = _pair_order(n)
    for mask in range(lo, hi):
        rows = [0] * n
        for k in _bits(mask):
            i, j = pairs[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        yield Graph(n, tuple(rows))


def _refined_cells(g: Graph) -> list[list[int]]:
    # colour refinement started from degrees; the ordered cell list is isomorphism invariant
    colors = g.degrees()
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in _bits(g.rows[v])))) for v in range(g.n)]
        ranking = {s: r for r, s in enumerate(sorted(set(sigs), reverse=True))}
        new = [ranking[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            colors = new
            break
        colors = new
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_code(g: Graph) -> int:
    """Minimum graph6 bit-string (as an integer) over all relabelings respecting the refined cells."""
    pairs = _pair_order(g.n)
    shifts = range(len(pairs) - 1, -1, -1)
    rows = g.rows
    best = None
    for parts in product(*(permutations(cell) for cell in _refined_cells(g))):
        order = [v for part in parts for v in part]
        code = 0
        for (i, j), shift in zip(pairs, shifts):
            code = code << 1 | (rows[order[i]] >> order[j] & 1)
            if best is not None and code > best >> shift:
                break
        else:
            if best is None or code < best:
                best = code
    return best


def graph_from_code(n: int, code: int) -> Graph:
    pairs = _pair_order(n)
    rows = [0] * n
    for k, (i, j) in enumerate(pairs):
        if code >> (len(pairs) - 1 - k) & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def canonical_form(g: Graph) -> Graph:
    return graph_from_code(g.n, canonical_code(g))


@lru_cache(maxsize=None)
def iso_classes(n: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class on n vertices.

    Built by vertex augmentation: every graph on n vertices arises from a
    representative on n - 1 vertices plus a new vertex with some neighbourhood.
    """
    if n == 1:
        return (Graph(1, (0,)),)
    codes = set()
    new_bit = 1 << (n - 1)
    for rep in iso_classes(n - 1):
        for nbrs in range(1 << (n - 1)):
            rows = tuple(r | new_bit if nbrs >> v & 1 else r for v, r in enumerate(rep.rows)) + (nbrs,)
            codes.add(canonical_code(Graph(n, rows)))
    return tuple(graph_from_code(n, c) for c in sorted(codes))
