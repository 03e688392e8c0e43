"""ADE root systems, Weyl group elements, and minimal coset word combinatorics.

Conventions, fixed once and used everywhere downstream:

* Nodes are numbered 1..n in the Bourbaki convention.  A_n is the path
  1-2-...-n; D_n is the path 1-2-...-(n-2) with both n-1 and n attached to
  n-2; E_n is the chain 1-3-4-5-6(-7)(-8) with node 2 attached to node 4.
* A root is a tuple of n integer coefficients over the simple roots.
* A Weyl group element w is stored as the tuple of images w(alpha_1), ...,
  w(alpha_n).  Elements compose like operators: ``compose(u, v)`` applies v
  first.  A word [a, b, c] denotes r_a r_b r_c, with r_c acting first, and
  ``word_element`` respects that order.
* ``min_coset_word(beta, i)`` returns a reduced word for the unique shortest
  element w with w(alpha_i) = beta; for beta = alpha_j it is the geodesic
  word (p_{t-1} p_t)(p_{t-2} p_{t-1})...(p_0 p_1) along the diagram path
  p_0 = i, ..., p_t = j, which conjugates r_i to r_j.
* ``d_beta_word(beta)`` is a reduced word for the inverse of the shortest
  element carrying beta to the highest root; its letters are exactly the
  greedy height-increasing chain from beta up to the highest root.

Ties are always broken toward the smallest node index, so every word
produced here is deterministic; uniqueness of the underlying group elements
is checked by the test suite rather than assumed.

Root systems are immutable after construction and all queries are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

Root = tuple  # tuple[int, ...] over the simple roots
Weyl = tuple  # tuple[Root, ...] images of the simple roots


@dataclass(frozen=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        ok = (
            (self.family == "A" and self.rank >= 1)
            or (self.family == "D" and self.rank >= 4)
            or (self.family == "E" and self.rank in (6, 7, 8))
        )
        if not ok:
            raise ValueError(f"not a simply laced spherical type: {self.family}{self.rank}")

    @staticmethod
    def parse(label: str) -> DynkinType:
        label = label.strip()
        if len(label) < 2 or label[0].upper() not in "ADE" or not label[1:].isdigit():
            raise ValueError(f"cannot parse Dynkin type {label!r}")
        return DynkinType(label[0].upper(), int(label[1:]))

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def edges(self) -> list[tuple[int, int]]:
        n = self.rank
        if self.family == "A":
            return [(i, i + 1) for i in range(1, n)]
        if self.family == "D":
            path = [(i, i + 1) for i in range(1, n - 2)]
            return path + [(n - 2, n - 1), (n - 2, n)]
        chain = [1, 3, 4, 5, 6, 7, 8][:n - 1]
        return [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)] + [(2, 4)]


class RootSystem:
    """Positive roots, highest root, and the node set C of a fixed ADE type."""

    def __init__(self, dtype: DynkinType):
        self.dtype = dtype
        n = self.n = dtype.rank
        self.nodes = tuple(range(1, n + 1))
        edges = dtype.edges()
        adj = {i: set() for i in self.nodes}
        for a, b in edges:
            adj[a].add(b)
            adj[b].add(a)
        self.neighbors = {i: tuple(sorted(adj[i])) for i in self.nodes}
        self.cartan = tuple(
            tuple(2 if i == j else (-1 if j in adj[i] else 0) for j in self.nodes)
            for i in self.nodes
        )
        self.simple_roots = tuple(
            tuple(1 if k == i else 0 for k in range(n)) for i in range(n)
        )
        self.positive_roots = self._generate_positive_roots()
        self.root_index = {b: k for k, b in enumerate(self.positive_roots)}
        self.highest_root = self.positive_roots[-1]
        self.c_nodes = tuple(
            j for j in self.nodes if self.pairing_simple(j, self.highest_root) == 0
        )
        self.identity = self.simple_roots
        self._word_cache: dict[Weyl, tuple[int, ...]] = {}

    # -- construction --------------------------------------------------

    def _generate_positive_roots(self) -> tuple[Root, ...]:
        found = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            beta = frontier.pop()
            for i in self.nodes:
                if self.pairing_simple(i, beta) == -1:
                    new = self.add_simple(beta, i)
                    if new not in found:
                        found.add(new)
                        frontier.append(new)
        return tuple(sorted(found, key=lambda b: (sum(b), b)))

    # -- root queries ----------------------------------------------------

    def alpha(self, i: int) -> Root:
        return self.simple_roots[i - 1]

    def pairing_simple(self, i: int, beta: Root) -> int:
        row = self.cartan[i - 1]
        return sum(r * c for r, c in zip(row, beta) if c)

    def pairing(self, beta: Root, gamma: Root) -> int:
        return sum(
            beta[i] * self.pairing_simple(i + 1, gamma) for i in range(self.n) if beta[i]
        )

    def add_simple(self, beta: Root, i: int) -> Root:
        out = list(beta)
        out[i - 1] += 1
        return tuple(out)

    def sub_simple(self, beta: Root, i: int) -> Root:
        out = list(beta)
        out[i - 1] -= 1
        return tuple(out)

    def reflect(self, i: int, beta: Root) -> Root:
        p = self.pairing_simple(i, beta)
        if p == 0:
            return beta
        out = list(beta)
        out[i - 1] -= p
        return tuple(out)

    def is_positive_root(self, beta: Root) -> bool:
        return beta in self.root_index

    def require_root(self, beta: Root) -> Root:
        if beta not in self.root_index:
            raise ValueError(f"{beta} is not a positive root of {self.dtype.label}")
        return beta

    @staticmethod
    def height(beta: Root) -> int:
        return sum(beta)

    @staticmethod
    def support(beta: Root) -> tuple[int, ...]:
        return tuple(i + 1 for i, c in enumerate(beta) if c)

    @staticmethod
    def coeff(i: int, beta: Root) -> int:
        return beta[i - 1]

    def tree_path(self, i: int, targets: frozenset | set | tuple) -> list[int]:
        """Shortest path in the diagram from node i to the target node set."""
        targets = set(targets)
        if i in targets:
            return [i]
        prev = {i: None}
        queue = [i]
        for node in queue:
            for nb in self.neighbors[node]:
                if nb in prev:
                    continue
                prev[nb] = node
                if nb in targets:
                    path = [nb]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    return list(reversed(path))
                queue.append(nb)
        raise ValueError("disconnected diagram")  # cannot happen for ADE

    def proj(self, i: int, beta: Root) -> int:
        self.require_root(beta)
        return self.tree_path(i, self.support(beta))[-1]

    def geod(self, i: int, beta: Root) -> tuple[int, ...]:
        self.require_root(beta)
        return tuple(self.tree_path(i, self.support(beta))[1:-1])

    def jset(self, k: int, beta: Root) -> tuple[int, ...]:
        """Nodes j with (alpha_j, beta) = 1 and r_j w_{beta-alpha_j,h} = w_{beta,h}."""
        self.require_root(beta)
        h = self.proj(k, beta)
        target = self.word_element(self.min_coset_word(beta, h))
        out = []
        for j in self.nodes:
            if self.pairing_simple(j, beta) != 1 or beta == self.alpha(j):
                continue
            rest = self.word_element(self.min_coset_word(self.sub_simple(beta, j), h))
            if self.compose(self.simple_reflection(j), rest) == target:
                out.append(j)
        return tuple(out)

    def root_query(self, kind: str, beta: Root, node: int | None = None):
        self.require_root(beta)
        if kind == "height":
            return self.height(beta)
        if kind == "support":
            return self.support(beta)
        if kind == "coeff":
            return self.coeff(node, beta)
        if kind == "proj":
            return self.proj(node, beta)
        if kind == "geod":
            return self.geod(node, beta)
        if kind == "jset":
            return self.jset(node, beta)
        raise ValueError(f"unknown root query {kind!r}")

    # -- Weyl group elements ----------------------------------------------

    def simple_reflection(self, i: int) -> Weyl:
        return tuple(self.reflect(i, a) for a in self.simple_roots)

    def act(self, w: Weyl, beta: Root) -> Root:
        acc = [0] * self.n
        for i, c in enumerate(beta):
            if c:
                img = w[i]
                for k in range(self.n):
                    acc[k] += c * img[k]
        return tuple(acc)

    def compose(self, u: Weyl, v: Weyl) -> Weyl:
        """u after v (v acts first)."""
        return tuple(self.act(u, img) for img in v)

    def right_mul_simple(self, w: Weyl, j: int) -> Weyl:
        """w r_j; touches only the images at j and its neighbors."""
        imgs = list(w)
        img_j = w[j - 1]
        imgs[j - 1] = tuple(-v for v in img_j)
        for i in self.neighbors[j]:
            imgs[i - 1] = tuple(a + b for a, b in zip(w[i - 1], img_j))
        return tuple(imgs)

    def left_mul_simple(self, j: int, w: Weyl) -> Weyl:
        """r_j w; reflects every stored image."""
        return tuple(self.reflect(j, img) for img in w)

    def invert(self, w: Weyl) -> Weyl:
        return self.word_element(tuple(reversed(self.reduced_word(w))))

    def weyl_length(self, w: Weyl) -> int:
        return sum(1 for b in self.positive_roots if _is_negative(self.act(w, b)))

    def reduced_word(self, w: Weyl) -> tuple[int, ...]:
        """Canonical reduced word via right descents, smallest node first."""
        cached = self._word_cache.get(w)
        if cached is not None:
            return cached
        letters = []
        cur = w
        while cur != self.identity:
            for i in self.nodes:
                if _is_negative(cur[i - 1]):
                    cur = self.compose(cur, self.simple_reflection(i))
                    letters.append(i)
                    break
            else:
                raise ValueError("not a Weyl group element")
        word = tuple(reversed(letters))
        self._word_cache[w] = word
        return word

    def word_element(self, word) -> Weyl:
        """The element r_{a_1} ... r_{a_k} of a word (a_1, ..., a_k)."""
        out = self.identity
        for i in word:
            out = self.right_mul_simple(out, i)
        return out

    def weyl(self, kind: str, *args):
        ops = {
            "compose": self.compose,
            "invert": self.invert,
            "act": self.act,
            "length": self.weyl_length,
            "reduced_word": self.reduced_word,
        }
        if kind not in ops:
            raise ValueError(f"unknown weyl operation {kind!r}")
        return ops[kind](*args)

    # -- minimal coset words ------------------------------------------------

    def _climb_word(self, start: Root, beta: Root) -> list[int]:
        """Letters of the shortest element sending start up to beta.

        Both roots must satisfy start <= beta coefficientwise.  Returned in
        application order (first reflection first); the reduced word is the
        reverse.
        """
        letters = []
        gamma = start
        while gamma != beta:
            for k in self.nodes:
                if gamma[k - 1] >= beta[k - 1]:
                    continue
                if self.pairing_simple(k, gamma) == -1:
                    gamma = self.add_simple(gamma, k)
                    letters.append(k)
                    break
            else:
                raise ValueError(f"no chain from {start} to {beta}")
        return letters

    def geodesic_word(self, i: int, j: int) -> tuple[int, ...]:
        """Reduced word of the shortest w with w(alpha_i) = alpha_j."""
        path = self.tree_path(i, {j})
        word = []
        for t in range(len(path) - 2, -1, -1):
            word += [path[t], path[t + 1]]
        return tuple(word)

    @lru_cache(maxsize=None)
    def _min_coset_word_cached(self, beta: Root, i: int) -> tuple[int, ...]:
        if i in self.support(beta):
            return tuple(reversed(self._climb_word(self.alpha(i), beta)))
        j = self.proj(i, beta)
        climb = tuple(reversed(self._climb_word(self.alpha(j), beta)))
        return climb + self.geodesic_word(i, j)

    def min_coset_word(self, beta: Root, i: int) -> tuple[int, ...]:
        self.require_root(beta)
        return self._min_coset_word_cached(beta, i)

    @lru_cache(maxsize=None)
    def d_beta_word(self, beta: Root) -> tuple[int, ...]:
        """Reduced word for the inverse of the minimal element beta -> alpha_0."""
        self.require_root(beta)
        return tuple(self._climb_word(beta, self.highest_root))

    @lru_cache(maxsize=None)
    def s_beta_word(self, beta: Root) -> tuple[int, ...]:
        """Reduced word of the reflection in beta, of length 2 ht(beta) - 1."""
        self.require_root(beta)
        k = self.support(beta)[0]
        half = self.min_coset_word(beta, k)
        word = half + (k,) + tuple(reversed(half))
        if len(word) != 2 * self.height(beta) - 1:
            raise AssertionError(f"s_beta word for {beta} is not reduced")
        return word

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "type": self.dtype.label,
            "positive_roots": [list(b) for b in self.positive_roots],
            "highest_root": list(self.highest_root),
            "c_nodes": list(self.c_nodes),
        }


def _is_negative(beta: Root) -> bool:
    return all(c <= 0 for c in beta) and any(c < 0 for c in beta)


@lru_cache(maxsize=None)
def build_type(label: str) -> RootSystem:
    """Shared immutable root system for a type label such as ``D4``."""
    return RootSystem(DynkinType.parse(label))


def component_type(rs: RootSystem, nodes: frozenset) -> tuple[str, int]:
    """Classify a connected induced subdiagram as (family, rank)."""
    nodes = set(nodes)
    rank = len(nodes)
    deg = {i: sum(1 for j in rs.neighbors[i] if j in nodes) for i in nodes}
    branch = [i for i in nodes if deg[i] == 3]
    if not branch:
        return ("A", rank)
    legs = []
    for start in rs.neighbors[branch[0]]:
        if start not in nodes:
            continue
        length, prev, cur = 1, branch[0], start
        while True:
            nxt = [j for j in rs.neighbors[cur] if j in nodes and j != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    legs.sort()
    if legs[0] == 1 and legs[1] == 1:
        return ("D", rank)
    return ("E", rank)


def enumerate_parabolic(rs: RootSystem, nodes) -> list[Weyl]:
    """All elements of the standard parabolic on ``nodes``, by closure.

    Intended for types whose parabolic is small enough to hold in memory;
    nothing in the algebra layer calls this.
    """
    gens = [rs.simple_reflection(i) for i in sorted(nodes)]
    found = {rs.identity}
    frontier = [rs.identity]
    while frontier:
        w = frontier.pop()
        for g in gens:
            nxt = rs.compose(w, g)
            if nxt not in found:
                found.add(nxt)
                frontier.append(nxt)
    return sorted(found, key=lambda w: (rs.weyl_length(w), w))


def weyl_order(family: str, rank: int) -> int:
    if family == "A":
        return factorial(rank + 1)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return {6: 51840, 7: 2903040, 8: 696729600}[rank]


def parabolic_order(rs: RootSystem, nodes) -> int:
    """Order of the parabolic subgroup generated by the given nodes."""
    remaining = set(nodes)
    order = 1
    while remaining:
        comp = {remaining.pop()}
        grew = True
        while grew:
            grew = False
            for i in tuple(remaining):
                if any(j in comp for j in rs.neighbors[i]):
                    comp.add(i)
                    remaining.discard(i)
                    grew = True
        order *= weyl_order(*component_type(rs, frozenset(comp)))
    return order
