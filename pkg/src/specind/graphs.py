"""Graph representation, graph6 I/O, named families, distances, power graphs.

Vertices are always 0..n-1.  Adjacency is a dense symmetric boolean matrix;
target instances stay below ~1000 vertices, so dense storage is fine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb, gcd

import numpy as np

from .errors import DisconnectedGraph, InvalidFamilyParameters, MalformedGraph6

FAMILIES = (
    "cycle",
    "complete",
    "complete_bipartite",
    "hypercube",
    "circulant",
    "kneser",
    "odd",
    "prism",
    "moebius_ladder",
    "petersen",
)


@dataclass(frozen=True)
class Graph:
    """Connected, simple, undirected graph."""

    n: int
    adjacency: np.ndarray  # (n, n) bool, symmetric, zero diagonal
    label: str = ""

    def __post_init__(self):
        a = self.adjacency
        if a.shape != (self.n, self.n) or a.dtype != bool:
            raise ValueError("adjacency must be an (n, n) boolean matrix")
        if np.any(a != a.T):
            raise ValueError("adjacency must be symmetric")
        if np.any(np.diag(a)):
            raise ValueError("no loops allowed")
        a.setflags(write=False)

    @property
    def num_edges(self) -> int:
        return int(self.adjacency.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1).astype(int)

    def is_regular(self) -> bool:
        deg = self.degrees()
        return bool(np.all(deg == deg[0]))

    def neighbors(self, u: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency[u])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and bool(np.array_equal(self.adjacency, other.adjacency))
        )

    def __hash__(self):
        return hash((self.n, self.adjacency.tobytes()))


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances of a connected graph."""

    dist: np.ndarray  # (n, n) int
    diameter: int


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family plus its integer parameters."""

    family: str
    parameters: tuple = field(default_factory=tuple)

    def __str__(self) -> str:
        if not self.parameters:
            return self.family
        return f"{self.family}:{','.join(map(str, self.parameters))}"

    @staticmethod
    def parse(text: str) -> "FamilySpec":
        """Parse e.g. ``odd:5`` or ``circulant:10,1,2``."""
        name, _, rest = text.partition(":")
        name = name.strip().lower()
        if name not in FAMILIES:
            raise InvalidFamilyParameters(f"unknown family {name!r}")
        params = tuple(int(p) for p in rest.split(",") if p.strip()) if rest else ()
        return FamilySpec(name, params)


def _check_connected(adj: np.ndarray, label: str = "") -> None:
    n = adj.shape[0]
    if n == 0:
        raise DisconnectedGraph("empty graph")
    seen = np.zeros(n, dtype=bool)
    stack = [0]
    seen[0] = True
    while stack:
        u = stack.pop()
        for v in np.flatnonzero(adj[u]):
            if not seen[v]:
                seen[v] = True
                stack.append(int(v))
    if not seen.all():
        raise DisconnectedGraph(f"graph {label!r} is not connected")


def from_adjacency(adj: np.ndarray, label: str = "") -> Graph:
    """Build a Graph, enforcing the connectivity invariant."""
    adj = np.asarray(adj, dtype=bool).copy()
    _check_connected(adj, label)
    return Graph(adj.shape[0], adj, label)


def from_edges(n: int, edges, label: str = "") -> Graph:
    adj = np.zeros((n, n), dtype=bool)
    for u, v in edges:
        if u == v:
            raise ValueError("loops are not allowed")
        adj[u, v] = adj[v, u] = True
    return from_adjacency(adj, label)


# ---------------------------------------------------------------------------
# graph6 (McKay's format, header-less variant; an optional >>graph6<< header
# is accepted on input)

_G6_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line into a connected Graph."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise MalformedGraph6("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(b < 0 or b > 63 for b in data):
        raise MalformedGraph6("character out of graph6 range")
    if data[0] < 63:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise MalformedGraph6("unsupported graph6 size header")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6("graph6 body has wrong length")
    bits = []
    for b in body:
        bits.extend((b >> shift) & 1 for shift in range(5, -1, -1))
    adj = np.zeros((n, n), dtype=bool)
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                adj[i, j] = adj[j, i] = True
            idx += 1
    if any(bits[nbits:]):
        raise MalformedGraph6("nonzero padding bits")
    return from_adjacency(adj)


def to_graph6(g: Graph) -> str:
    """Encode a Graph as a header-less graph6 line."""
    n = g.n
    if n <= 62:
        head = [n]
    elif n <= 258047:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        raise ValueError("graph too large for this encoder")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.adjacency[i, j] else 0)
    while len(bits) % 6:
        bits.append(0)
    body = [
        (bits[i] << 5) | (bits[i + 1] << 4) | (bits[i + 2] << 3)
        | (bits[i + 3] << 2) | (bits[i + 4] << 1) | bits[i + 5]
        for i in range(0, len(bits), 6)
    ]
    return "".join(chr(b + 63) for b in head + body)


def parse_edge_list(text: str, label: str = "") -> Graph:
    """Parse the alternative input format: one ``u v`` pair per line, 0-indexed."""
    edges = []
    top = -1
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {line!r}")
        u, v = int(parts[0]), int(parts[1])
        top = max(top, u, v)
        edges.append((u, v))
    return from_edges(top + 1, edges, label)


# ---------------------------------------------------------------------------
# Named families.  Vertex orderings are fixed so serialized output is
# byte-stable: integers 0..n-1 for circulant-like families, binary counting
# order for hypercubes, colexicographic subsets for Kneser/Odd.


def _cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidFamilyParameters("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"cycle:{n}")


def _complete(n: int) -> Graph:
    if n < 2:
        raise InvalidFamilyParameters("complete needs n >= 2")
    adj = ~np.eye(n, dtype=bool)
    return from_adjacency(adj, f"complete:{n}")


def _complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidFamilyParameters("complete_bipartite needs positive parts")
    adj = np.zeros((a + b, a + b), dtype=bool)
    adj[:a, a:] = True
    adj[a:, :a] = True
    return from_adjacency(adj, f"complete_bipartite:{a},{b}")


def _hypercube(m: int) -> Graph:
    if m < 1:
        raise InvalidFamilyParameters("hypercube needs dimension >= 1")
    n = 1 << m
    edges = [(u, u ^ (1 << b)) for u in range(n) for b in range(m) if u < u ^ (1 << b)]
    return from_edges(n, edges, f"hypercube:{m}")


def _circulant(n: int, *steps: int) -> Graph:
    if n < 3 or not steps:
        raise InvalidFamilyParameters("circulant needs n >= 3 and at least one step")
    steps = tuple(sorted({s % n for s in steps}))
    if any(s == 0 for s in steps):
        raise InvalidFamilyParameters("circulant steps must be nonzero mod n")
    if gcd(n, *steps) != 1:
        raise DisconnectedGraph("circulant with gcd(n, s_1, ..., s_m) > 1")
    edges = [(u, (u + s) % n) for u in range(n) for s in steps]
    return from_edges(n, [(u, v) for u, v in edges if u != v], f"circulant:{n}," + ",".join(map(str, steps)))


def kneser_vertices(n: int, k: int) -> list:
    """k-subsets of {0..n-1} in colexicographic order."""
    return sorted(combinations(range(n), k), key=lambda s: tuple(reversed(s)))


def _kneser(n: int, k: int) -> Graph:
    if k < 1 or n <= 2 * k:
        raise InvalidFamilyParameters("kneser needs n > 2k >= 2 for connectivity")
    verts = kneser_vertices(n, k)
    sets = [frozenset(v) for v in verts]
    nn = len(verts)
    adj = np.zeros((nn, nn), dtype=bool)
    for i in range(nn):
        for j in range(i + 1, nn):
            if not (sets[i] & sets[j]):
                adj[i, j] = adj[j, i] = True
    return from_adjacency(adj, f"kneser:{n},{k}")


def _odd(ell: int) -> Graph:
    if ell < 2:
        raise InvalidFamilyParameters("odd graph needs ell >= 2")
    g = _kneser(2 * ell - 1, ell - 1)
    return Graph(g.n, g.adjacency, f"odd:{ell}")


def _prism(m: int) -> Graph:
    # C_m square K_2 on 2m vertices; outer cycle 0..m-1, inner m..2m-1
    if m < 3:
        raise InvalidFamilyParameters("prism needs m >= 3")
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(m + i, m + (i + 1) % m) for i in range(m)]
    edges += [(i, m + i) for i in range(m)]
    return from_edges(2 * m, edges, f"prism:{m}")


def _moebius_ladder(m: int) -> Graph:
    # cycle C_{2m} plus the m main diagonals
    if m < 3:
        raise InvalidFamilyParameters("moebius_ladder needs m >= 3")
    n = 2 * m
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, i + m) for i in range(m)]
    return from_edges(n, edges, f"moebius_ladder:{m}")


def generate(spec: FamilySpec) -> Graph:
    """Build the graph of a family spec with its documented vertex ordering."""
    fam, p = spec.family, spec.parameters
    try:
        if fam == "cycle":
            return _cycle(*p)
        if fam == "complete":
            return _complete(*p)
        if fam == "complete_bipartite":
            return _complete_bipartite(*p)
        if fam == "hypercube":
            return _hypercube(*p)
        if fam == "circulant":
            return _circulant(*p)
        if fam == "kneser":
            return _kneser(*p)
        if fam == "odd":
            return _odd(*p)
        if fam == "prism":
            return _prism(*p)
        if fam == "moebius_ladder":
            return _moebius_ladder(*p)
        if fam == "petersen":
            g = _kneser(5, 2)
            return Graph(g.n, g.adjacency, "petersen")
    except TypeError as exc:
        raise InvalidFamilyParameters(f"bad parameter count for {fam}: {p}") from exc
    raise InvalidFamilyParameters(f"unknown family {fam!r}")


# ---------------------------------------------------------------------------


def distance_matrix(g: Graph) -> DistanceMatrix:
    """BFS-exact hop distances; the graph is connected by construction."""
    n = g.n
    nbrs = [np.flatnonzero(g.adjacency[u]) for u in range(n)]
    dist = np.full((n, n), -1, dtype=np.int32)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for v in nbrs[u]:
                    if row[v] < 0:
                        row[v] = d
                        nxt.append(int(v))
            frontier = nxt
    return DistanceMatrix(dist, int(dist.max()))


def power_graph(g: Graph, k: int, dm: DistanceMatrix | None = None) -> Graph:
    """G^k: same vertices, edges between pairs at distance 1..k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if dm is None:
        dm = distance_matrix(g)
    adj = (dm.dist >= 1) & (dm.dist <= k)
    return Graph(g.n, adj, f"{g.label}^{k}" if g.label else f"power:{k}")
