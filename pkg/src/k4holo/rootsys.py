"""Simply laced root systems over exact integer coordinates.

Roots are integer coefficient vectors in the simple-root basis.  The
bilinear form is normalised so that every root has squared length 2; for a
simply laced Cartan matrix A that is just (a, b) = a.A.b, so inner products
are plain integer sums.  Generation is by reflection closure from the
simple roots, and arbitrary closed subsets are recognised by extracting a
simple system and matching its diagram against the A/D/E6 catalog.

Node numbering is fixed once and for all: the E6 diagram is the chain
1-3-4-5-6 with node 2 attached to node 4, which makes the diagram flip
exchange nodes 1<->6 and 3<->5 while fixing 2 and 4.  No floating point is
used anywhere in this module (or this package).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ConfigurationError, InternalConsistencyError, PreconditionError

Root = tuple[int, ...]

_E6_EDGES = ((1, 3), (3, 4), (2, 4), (4, 5), (5, 6))

# Root counts of the recognisable types, used to cross-check decompositions.
_ROOT_COUNT = {
    "A": lambda r: r * (r + 1),
    "D": lambda r: 2 * r * (r - 1),
    "E": lambda r: 72,
}


def _cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    if family == "A":
        if rank < 1:
            raise ConfigurationError(f"A{rank} is not a valid type (need rank >= 1)")
        edges = [(i, i + 1) for i in range(1, rank)]
    elif family == "D":
        if rank < 4:
            raise ConfigurationError(f"D{rank} is not a valid type here (need rank >= 4)")
        edges = [(i, i + 1) for i in range(1, rank - 1)]
        edges.append((rank - 2, rank))
    elif family == "E":
        if rank != 6:
            raise ConfigurationError(f"E{rank} is not supported (only E6)")
        edges = list(_E6_EDGES)
    else:
        raise ConfigurationError(f"unsupported family {family!r} (want A, D or E)")
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in edges:
        a[i - 1][j - 1] = -1
        a[j - 1][i - 1] = -1
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    roots: frozenset[Root]
    simple_roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    highest_root: Root
    weights: tuple[int, ...]

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def pairing(self, a: Sequence[int], b: Sequence[int]) -> int:
        """Bilinear form (a, b) = a.A.b for arbitrary lattice vectors."""
        return sum(ai * sum(self.cartan[i][j] * b[j] for j in range(self.rank))
                   for i, ai in enumerate(a))

    def value(self, root: Sequence[int]) -> int:
        """Generic positivity functional; injective on root coordinates."""
        return sum(c * w for c, w in zip(root, self.weights))

    def is_positive(self, root: Sequence[int]) -> bool:
        return self.value(root) > 0

    def height(self, root: Sequence[int]) -> int:
        return sum(root)

    def reflect(self, root: Root, i: int) -> Root:
        """Simple reflection s_i applied to a lattice vector."""
        c = sum(root[j] * self.cartan[i][j] for j in range(self.rank))
        out = list(root)
        out[i] -= c
        return tuple(out)


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Generate the full root system of the given simply laced type.

    Starts from the simple roots (unit coordinate vectors) and closes
    under all simple reflections.  The result is validated: expected root
    count, squared length 2 throughout, sign-coherent coefficients, and a
    unique coefficient-dominant highest root.
    """
    cartan = _cartan_matrix(family, rank)
    simple = tuple(tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank))

    def reflect(v: Root, i: int) -> Root:
        c = sum(v[j] * cartan[i][j] for j in range(rank))
        out = list(v)
        out[i] -= c
        return tuple(out)

    roots: set[Root] = set(simple)
    frontier = list(simple)
    while frontier:
        v = frontier.pop()
        for i in range(rank):
            w = reflect(v, i)
            if w not in roots:
                roots.add(w)
                frontier.append(w)

    expected = _ROOT_COUNT[family](rank)
    if len(roots) != expected:
        raise InternalConsistencyError(
            f"{family}{rank}: generated {len(roots)} roots, expected {expected}")

    def pair(a: Root, b: Root) -> int:
        return sum(ai * sum(cartan[i][j] * b[j] for j in range(rank))
                   for i, ai in enumerate(a))

    for r in roots:
        if pair(r, r) != 2:
            raise InternalConsistencyError(f"root {r} has squared length {pair(r, r)}")
        if not (all(c >= 0 for c in r) or all(c <= 0 for c in r)):
            raise InternalConsistencyError(f"root {r} has mixed-sign coefficients")

    maxc = max(abs(c) for r in roots for c in r)
    base = 2 * maxc + 1
    weights = tuple(base ** i for i in range(rank))
    positive = tuple(sorted((r for r in roots if sum(c * w for c, w in zip(r, weights)) > 0),
                            key=lambda r: sum(c * w for c, w in zip(r, weights))))
    highest = positive[-1]
    for r in roots:
        if any(c > h for c, h in zip(r, highest)):
            raise InternalConsistencyError(
                f"highest root {highest} does not dominate {r}")

    return RootSystem(family=family, rank=rank, cartan=cartan,
                      roots=frozenset(roots), simple_roots=simple,
                      positive_roots=positive, highest_root=highest,
                      weights=weights)


def inner_product(a: Root, b: Root, sys: RootSystem) -> int:
    """Normalised bilinear form of two roots; (a, a) = 2 for every root."""
    return sys.pairing(a, b)


@dataclass(frozen=True)
class SubsystemComponent:
    """One irreducible component of a closed root subsystem."""
    family: str
    rank: int
    simple: tuple[Root, ...]
    roots: frozenset[Root]


@dataclass(frozen=True)
class ReductiveType:
    """Isomorphism type of a reductive subalgebra: simple parts + centre."""
    components: tuple[tuple[str, int], ...]
    center_dim: int

    @property
    def dim(self) -> int:
        total = self.center_dim
        for family, rank in self.components:
            total += _ROOT_COUNT[family](rank) + rank
        return total

    def render(self) -> str:
        """Canonical compact-form spelling, e.g. 'su(4)+2su(2)+c'."""
        names = []
        for family, rank in self.components:
            if family == "A":
                names.append(f"su({rank + 1})")
            elif family == "D":
                names.append(f"so({2 * rank})")
            else:
                names.append(f"e{rank}")
        parts = []
        i = 0
        while i < len(names):
            j = i
            while j < len(names) and names[j] == names[i]:
                j += 1
            count = j - i
            parts.append(names[i] if count == 1 else f"{count}{names[i]}")
            i = j
        if self.center_dim == 1:
            parts.append("c")
        elif self.center_dim > 1:
            parts.append(f"{self.center_dim}c")
        return "+".join(parts) if parts else "0"


def _component_sort_key(comp: tuple[str, int]) -> tuple:
    family, rank = comp
    return (-rank, family)


def _validate_closed(subset: frozenset[Root], sys: RootSystem) -> None:
    for r in subset:
        if r not in sys.roots:
            raise PreconditionError(f"{r} is not a root of {sys.label}")
        neg = tuple(-c for c in r)
        if neg not in subset:
            raise PreconditionError(f"subset is not negation-symmetric at {r}")
    for a in subset:
        for b in subset:
            s = tuple(x + y for x, y in zip(a, b))
            if s in sys.roots and s not in subset:
                raise PreconditionError(
                    f"subset is not closed: {a} + {b} = {s} is a root outside it")


def _classify_diagram(simple: list[Root], sys: RootSystem) -> tuple[str, int]:
    """Match the diagram of a connected simple system against A/D/E6."""
    k = len(simple)
    if k == 1:
        return ("A", 1)
    adj = [[j for j in range(k)
            if j != i and sys.pairing(simple[i], simple[j]) != 0]
           for i in range(k)]
    degs = [len(ns) for ns in adj]
    nedges = sum(degs) // 2
    if nedges != k - 1:
        raise InternalConsistencyError(
            f"component diagram has {nedges} edges on {k} nodes (not a tree)")
    if max(degs) > 3:
        raise InternalConsistencyError("component diagram has a node of degree > 3")
    branches = [i for i in range(k) if degs[i] == 3]
    if not branches:
        return ("A", k)
    if len(branches) > 1:
        raise InternalConsistencyError("component diagram has two branch nodes")
    b = branches[0]
    legs = []
    for first in adj[b]:
        length, prev, cur = 1, b, first
        while True:
            nxt = [j for j in adj[cur] if j != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        legs.append(length)
    legs.sort()
    if legs[0] == 1 and legs[1] == 1:
        return ("D", k)
    if legs == [1, 2, 2]:
        return ("E", 6)
    raise InternalConsistencyError(f"component diagram with legs {legs} matches no catalog entry")


def decompose_closed_subset(subset: Iterable[Root], sys: RootSystem) -> tuple[SubsystemComponent, ...]:
    """Split a closed, negation-symmetric subset into irreducible subsystems.

    A simple system is extracted as the indecomposable elements among the
    positives of the generic functional; its diagram components are then
    classified and every root of the subset is assigned to the unique
    component it pairs with.
    """
    sset = frozenset(subset)
    _validate_closed(sset, sys)
    if not sset:
        return ()
    pos = sorted((r for r in sset if sys.is_positive(r)), key=sys.value)
    posset = set(pos)
    simple = []
    for s in pos:
        decomposable = any(tuple(x - y for x, y in zip(s, a)) in posset
                           for a in pos if a != s and sys.value(a) < sys.value(s))
        if not decomposable:
            simple.append(s)

    for a, b in ((x, y) for i, x in enumerate(simple) for y in simple[i + 1:]):
        if sys.pairing(a, b) not in (0, -1):
            raise InternalConsistencyError(
                f"extracted simple system is not valid: ({a},{b}) = {sys.pairing(a, b)}")

    # Connected components of the extracted diagram.
    unseen = set(range(len(simple)))
    groups: list[list[int]] = []
    while unseen:
        stack = [min(unseen)]
        unseen.discard(stack[0])
        comp = []
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in list(unseen):
                if sys.pairing(simple[i], simple[j]) != 0:
                    unseen.discard(j)
                    stack.append(j)
        groups.append(sorted(comp))

    components = []
    for grp in groups:
        csimple = [simple[i] for i in grp]
        family, rank = _classify_diagram(csimple, sys)
        components.append((family, rank, tuple(sorted(csimple)), set()))

    for r in sset:
        homes = [c for c in components if any(sys.pairing(r, s) != 0 for s in c[2])]
        if len(homes) != 1:
            raise InternalConsistencyError(
                f"root {r} pairs with {len(homes)} components of its subsystem")
        homes[0][3].add(r)

    out = []
    for family, rank, csimple, croots in components:
        expected = _ROOT_COUNT[family](rank)
        if len(croots) != expected:
            raise InternalConsistencyError(
                f"{family}{rank} component carries {len(croots)} roots, expected {expected}")
        out.append(SubsystemComponent(family=family, rank=rank, simple=csimple,
                                      roots=frozenset(croots)))
    out.sort(key=lambda c: (_component_sort_key((c.family, c.rank)), min(c.roots)))
    return tuple(out)


def identify_subsystem(subset: Iterable[Root], sys: RootSystem) -> ReductiveType:
    """Name the reductive type of a closed root subset.

    The centre dimension is the ambient rank minus the sum of component
    ranks, i.e. the directions of the Cartan subalgebra not spanned by
    the subsystem's coroots.
    """
    comps = decompose_closed_subset(subset, sys)
    labels = sorted(((c.family, c.rank) for c in comps), key=_component_sort_key)
    center = sys.rank - sum(rank for _, rank in labels)
    if center < 0:
        raise InternalConsistencyError("component ranks exceed ambient rank")
    return ReductiveType(components=tuple(labels), center_dim=center)
