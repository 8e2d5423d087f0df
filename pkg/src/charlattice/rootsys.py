"""Finite root systems in fixed rational realizations.

Each supported Cartan type is built in a fixed ambient space over Q:

* A_n lives in the sum-zero hyperplane of Q^(n+1), simple roots e_i - e_(i+1);
* B_n, C_n, D_n live in Q^n with the usual signed-vector roots;
* E6, E7, E8 live in Q^8 (E6 and E7 as the spans of the first six and seven
  simple roots of E8); F4 lives in Q^4 and G2 in the sum-zero hyperplane of Q^3.

All arithmetic is exact.  Weights elsewhere in the package are integer vectors
in the fundamental-weight basis; this module owns the conversion data
(simple roots, Cartan matrix, fundamental weights) and the Weyl-group
operations that only need that data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import linalg
from .linalg import Mat, Vec

Q = Fraction

Coords = tuple[int, ...]


class CartanTypeError(ValueError):
    """A family letter or rank outside the supported classification."""


_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_EXCEPTIONAL_WEYL_ORDER = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}


@dataclass(frozen=True, order=True)
class SimpleType:
    """One simple Cartan type, e.g. A3 or E8."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        lo_hi = _RANK_BOUNDS.get(self.family)
        if lo_hi is None:
            raise CartanTypeError(f"unknown family {self.family!r}")
        lo, hi = lo_hi
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise CartanTypeError(f"rank {self.rank} not valid for family {self.family}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "SimpleType":
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise CartanTypeError(f"cannot parse simple type {text!r}")
        return cls(text[0].upper(), int(text[1:]))


@dataclass(frozen=True)
class RootSystem:
    """A root system with its simple roots, Cartan matrix and fundamental weights."""

    stype: SimpleType
    ambient_dim: int
    simple_roots: tuple[Vec, ...]
    cartan_matrix: tuple[Coords, ...]
    positive_roots: tuple[Vec, ...]
    fundamental_weights: tuple[Vec, ...]

    @property
    def rank(self) -> int:
        return self.stype.rank

    def all_roots(self) -> tuple[Vec, ...]:
        return self.positive_roots + tuple(linalg.neg(b) for b in self.positive_roots)

    def weight_to_ambient(self, w: Coords) -> Vec:
        out = tuple(Q(0) for _ in range(self.ambient_dim))
        for c, omega in zip(w, self.fundamental_weights):
            if c:
                out = linalg.add(out, linalg.scale(Q(c), omega))
        return out

    def ambient_to_weight(self, v: Vec) -> Coords:
        return tuple(int(_pairing(v, b)) for b in self.simple_roots)


def _pairing(v: Vec, root: Vec) -> Fraction:
    # <v, root^vee> = 2 (v, root) / (root, root)
    return 2 * linalg.dot(v, root) / linalg.dot(root, root)


def _simple_roots_for(stype: SimpleType) -> tuple[int, tuple[Vec, ...]]:
    """Ambient dimension and simple-root vectors of the fixed realization."""
    fam, n = stype.family, stype.rank
    if fam == "A":
        dim = n + 1
        return dim, tuple(linalg.sub(_e(dim, i), _e(dim, i + 1)) for i in range(n))
    if fam in "BCD":
        dim = n
        chain = [linalg.sub(_e(dim, i), _e(dim, i + 1)) for i in range(n - 1)]
        if fam == "B":
            last = _e(dim, n - 1)
        elif fam == "C":
            last = linalg.scale(Q(2), _e(dim, n - 1))
        else:
            last = linalg.add(_e(dim, n - 2), _e(dim, n - 1))
        return dim, tuple(chain + [last])
    if fam == "E":
        dim = 8
        half = Q(1, 2)
        alpha1 = tuple(
            half if i in (0, 7) else -half for i in range(8)
        )
        e8 = [
            alpha1,
            linalg.add(_e(8, 0), _e(8, 1)),
            linalg.sub(_e(8, 1), _e(8, 0)),
            linalg.sub(_e(8, 2), _e(8, 1)),
            linalg.sub(_e(8, 3), _e(8, 2)),
            linalg.sub(_e(8, 4), _e(8, 3)),
            linalg.sub(_e(8, 5), _e(8, 4)),
            linalg.sub(_e(8, 6), _e(8, 5)),
        ]
        return dim, tuple(e8[:n])
    if fam == "F":
        dim = 4
        half = Q(1, 2)
        return dim, (
            linalg.sub(_e(4, 1), _e(4, 2)),
            linalg.sub(_e(4, 2), _e(4, 3)),
            _e(4, 3),
            (half, -half, -half, -half),
        )
    if fam == "G":
        dim = 3
        return dim, (
            linalg.sub(_e(3, 0), _e(3, 1)),
            linalg.add(linalg.scale(Q(-2), _e(3, 0)), linalg.add(_e(3, 1), _e(3, 2))),
        )
    raise CartanTypeError(f"unsupported family {fam!r}")


def _e(dim: int, i: int) -> Vec:
    return tuple(Q(1) if j == i else Q(0) for j in range(dim))


_ROOT_COUNT = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


@lru_cache(maxsize=None)
def build_root_system(stype: SimpleType) -> RootSystem:
    """Construct the root system of stype in its fixed realization."""
    dim, simple = _simple_roots_for(stype)
    n = stype.rank
    cartan = tuple(
        tuple(int(_pairing(simple[i], simple[j])) for j in range(n)) for i in range(n)
    )
    inv = linalg.invert(linalg.mat(cartan))
    fundamental = tuple(
        tuple(
            sum((inv[i][j] * simple[j][k] for j in range(n)), Q(0))
            for k in range(dim)
        )
        for i in range(n)
    )
    rho = fundamental[0]
    for omega in fundamental[1:]:
        rho = linalg.add(rho, omega)
    roots = _reflection_closure(simple)
    if len(roots) != _ROOT_COUNT[stype.family](n):
        raise AssertionError(f"closure of {stype} produced {len(roots)} roots")
    positive = tuple(sorted(
        (r for r in roots if linalg.dot(rho, r) > 0)
    ))
    return RootSystem(
        stype=stype,
        ambient_dim=dim,
        simple_roots=simple,
        cartan_matrix=cartan,
        positive_roots=positive,
        fundamental_weights=fundamental,
    )


def _reflection_closure(generators: tuple[Vec, ...]) -> set[Vec]:
    """Close a set of roots under the reflections in the listed roots."""
    roots = set(generators)
    frontier = list(generators)
    while frontier:
        nxt = []
        for r in frontier:
            for s in generators:
                image = linalg.sub(r, linalg.scale(_pairing(r, s), s))
                if image not in roots:
                    roots.add(image)
                    nxt.append(image)
        frontier = nxt
    return roots


def weyl_group_order(stype: SimpleType) -> int:
    n = stype.rank
    if stype.family == "A":
        return factorial(n + 1)
    if stype.family in "BC":
        return 2**n * factorial(n)
    if stype.family == "D":
        return 2 ** (n - 1) * factorial(n)
    return _EXCEPTIONAL_WEYL_ORDER[(stype.family, n)]


def reflect_coords(rs: RootSystem, w: Coords, i: int) -> Coords:
    """Simple reflection s_i on a weight in fundamental coordinates."""
    c = w[i]
    if c == 0:
        return w
    row = rs.cartan_matrix[i]
    return tuple(w[j] - c * row[j] for j in range(rs.rank))


def weyl_orbit(rs: RootSystem, w: Coords) -> frozenset[Coords]:
    """Full Weyl orbit of a weight, by closure under simple reflections."""
    if len(w) != rs.rank:
        raise ValueError(f"weight has {len(w)} coordinates, expected {rs.rank}")
    seen = {tuple(w)}
    frontier = [tuple(w)]
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rs.rank):
                image = reflect_coords(rs, v, i)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return frozenset(seen)


def dominant_representative(rs: RootSystem, w: Coords) -> Coords:
    """The dominant weight in the Weyl orbit of w."""
    v = tuple(w)
    while True:
        i = next((k for k in range(rs.rank) if v[k] < 0), None)
        if i is None:
            return v
        v = reflect_coords(rs, v, i)


# ---------------------------------------------------------------------------
# Equal-rank subsystems by iterated extended-diagram node deletion.


@dataclass(frozen=True)
class Subsystem:
    """A full-rank root subsystem, recorded by an ordered simple system.

    selected_roots concatenates the components' simple roots in the order of
    component_types; each component's roots follow the standard numbering of
    its type, so pairing a parent weight against the coroots of
    selected_roots yields fundamental coordinates for the subsystem.
    """

    parent: SimpleType
    selected_roots: tuple[Vec, ...]
    component_types: tuple[SimpleType, ...]

    @property
    def signature(self) -> tuple[SimpleType, ...]:
        return tuple(sorted(self.component_types))

    def component_root_blocks(self) -> tuple[tuple[Vec, ...], ...]:
        blocks = []
        pos = 0
        for ct in self.component_types:
            blocks.append(self.selected_roots[pos:pos + ct.rank])
            pos += ct.rank
        return tuple(blocks)


class ClassificationError(ValueError):
    """A set of roots that is not a valid simple system of known type."""


def _norm2(v: Vec) -> Fraction:
    return linalg.dot(v, v)


def _classify_component(roots: list[Vec]) -> tuple[SimpleType, tuple[Vec, ...]]:
    """Cartan type and standard ordering of one connected simple system."""
    r = len(roots)
    if r == 1:
        return SimpleType("A", 1), (roots[0],)
    bond = {}
    adj = {i: [] for i in range(r)}
    for i, j in itertools.combinations(range(r), 2):
        cij = _pairing(roots[i], roots[j])
        cji = _pairing(roots[j], roots[i])
        m = int(cij * cji)
        if m:
            bond[(i, j)] = bond[(j, i)] = m
            adj[i].append(j)
            adj[j].append(i)
    degrees = {i: len(adj[i]) for i in range(r)}
    triple = [p for p, m in bond.items() if m == 3]
    double = [p for p, m in bond.items() if m == 2]

    if triple:
        if r != 2:
            raise ClassificationError("triple bond outside rank 2")
        i, j = triple[0]
        short, long_ = (i, j) if _norm2(roots[i]) < _norm2(roots[j]) else (j, i)
        return SimpleType("G", 2), (roots[short], roots[long_])

    if double:
        if len(double) > 2:  # bond dict stores both orientations
            raise ClassificationError("several double bonds")
        return _classify_doubled(roots, adj, degrees, double[0])

    # Simply laced: a path is type A, one branch point is type D or E.
    branch = [i for i in range(r) if degrees[i] == 3]
    if not branch:
        return _order_path(roots, adj, "A")
    if len(branch) != 1 or any(degrees[i] > 3 for i in range(r)):
        raise ClassificationError("not a path or single-branch tree")
    return _classify_branched(roots, adj, branch[0])


def _path_order(adj: dict[int, list[int]], start: int) -> list[int]:
    order = [start]
    prev = None
    cur = start
    while True:
        nxt = [k for k in adj[cur] if k != prev]
        if not nxt:
            return order
        prev, cur = cur, nxt[0]
        order.append(cur)


def _order_path(roots: list[Vec], adj, family: str) -> tuple[SimpleType, tuple[Vec, ...]]:
    ends = [i for i in range(len(roots)) if len(adj[i]) <= 1]
    candidates = []
    for e in ends:
        order = _path_order(adj, e)
        candidates.append(tuple(roots[i] for i in order))
    candidates.sort()
    return SimpleType(family, len(roots)), candidates[0]


def _classify_doubled(roots, adj, degrees, pair) -> tuple[SimpleType, tuple[Vec, ...]]:
    r = len(roots)
    i, j = pair
    if degrees[i] == 2 and degrees[j] == 2:
        if r != 4:
            raise ClassificationError("interior double bond outside F4")
        ends = [k for k in range(4) if degrees[k] == 1]
        long_end = max(ends, key=lambda k: (_norm2(roots[k]), ))
        order = _path_order(adj, long_end)
        ordered = tuple(roots[k] for k in order)
        if _norm2(ordered[0]) <= _norm2(ordered[-1]):
            raise ClassificationError("inconsistent F4 lengths")
        return SimpleType("F", 4), ordered
    # Double bond at the end of a chain: short end node means B, long means C.
    end_node = i if degrees[i] == 1 else j
    if r == 2:
        i, j = pair
        long_, short = (i, j) if _norm2(roots[i]) > _norm2(roots[j]) else (j, i)
        return SimpleType("B", 2), (roots[long_], roots[short])
    far_ends = [k for k in range(r) if degrees[k] == 1 and k != end_node]
    if len(far_ends) != 1:
        raise ClassificationError("doubled diagram is not a chain")
    order = _path_order(adj, far_ends[0])
    ordered = tuple(roots[k] for k in order)
    end_is_short = _norm2(ordered[-1]) < _norm2(ordered[0])
    family = "B" if end_is_short else "C"
    return SimpleType(family, r), ordered


def _classify_branched(roots, adj, branch: int) -> tuple[SimpleType, tuple[Vec, ...]]:
    r = len(roots)
    arms = []
    for first in adj[branch]:
        arm = [first]
        prev, cur = branch, first
        while True:
            nxt = [k for k in adj[cur] if k != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            arm.append(cur)
        arms.append(arm)
    arms.sort(key=lambda a: (len(a), roots[a[-1]]))
    lengths = sorted(len(a) for a in arms)
    if lengths[0] == 1 and lengths[1] == 1:
        # Type D: the two short arms are the fork, the long arm leads in.
        fork_a, fork_b, long_arm = arms[0], arms[1], arms[2]
        order = list(reversed(long_arm)) + [branch]
        tips = sorted([roots[fork_a[0]], roots[fork_b[0]]])
        ordered = tuple(roots[k] for k in order) + (tips[0], tips[1])
        return SimpleType("D", r), ordered
    if lengths == [1, 2, r - 4] or lengths == [1, 2, 2]:
        one = next(a for a in arms if len(a) == 1)
        rest = [a for a in arms if a is not one]
        rest.sort(key=lambda a: (len(a), tuple(roots[k] for k in a)))
        two, tail = rest[0], rest[1]
        if len(two) != 2:
            raise ClassificationError("branched diagram is not of type E")
        # Standard E numbering: a1 and a3 along the short arm, a2 on the spur,
        # a4 at the branch, then the long tail.
        order = [two[1], one[0], two[0], branch] + tail
        return SimpleType("E", r), tuple(roots[k] for k in order)
    raise ClassificationError(f"unrecognized branched diagram with arms {lengths}")


def classify_simple_system(roots: tuple[Vec, ...]) -> tuple[tuple[SimpleType, tuple[Vec, ...]], ...]:
    """Split a simple system into connected components with standard orderings.

    Components are returned sorted by (type, ordered roots) so the result is
    canonical for a given set of roots.
    """
    n = len(roots)
    adj = {i: set() for i in range(n)}
    for i, j in itertools.combinations(range(n), 2):
        if linalg.dot(roots[i], roots[j]) != 0:
            adj[i].add(j)
            adj[j].add(i)
    seen: set[int] = set()
    components = []
    for i in range(n):
        if i in seen:
            continue
        stack = [i]
        comp = []
        while stack:
            k = stack.pop()
            if k in seen:
                continue
            seen.add(k)
            comp.append(k)
            stack.extend(adj[k] - seen)
        stype, ordered = _classify_component([roots[k] for k in comp])
        components.append((stype, ordered))
    components.sort(key=lambda c: (c[0], c[1]))
    return tuple(components)


def _make_subsystem(parent: SimpleType, roots: tuple[Vec, ...]) -> Subsystem:
    comps = classify_simple_system(roots)
    selected = tuple(itertools.chain.from_iterable(ordered for _, ordered in comps))
    return Subsystem(
        parent=parent,
        selected_roots=selected,
        component_types=tuple(st for st, _ in comps),
    )


def _highest_root(component: tuple[Vec, ...]) -> Vec:
    """Highest root of the subsystem generated by one component's simple roots."""
    coeffs = {component[i]: tuple(1 if j == i else 0 for j in range(len(component)))
              for i in range(len(component))}
    frontier = list(component)
    while frontier:
        nxt = []
        for root in frontier:
            for i, s in enumerate(component):
                pairing = _pairing(root, s)
                image = linalg.sub(root, linalg.scale(pairing, s))
                if image not in coeffs:
                    c = coeffs[root]
                    coeffs[image] = tuple(
                        c[j] - (int(pairing) if j == i else 0) for j in range(len(component))
                    )
                    nxt.append(image)
        frontier = nxt
    return max(coeffs, key=lambda r: (sum(coeffs[r]), r))


def equal_rank_subsystems(rs: RootSystem) -> tuple[Subsystem, ...]:
    """All full-rank subsystems reachable by iterated extended-diagram deletion.

    From each subsystem, each component is extended by the negative of its
    highest root and a single node is deleted; the process repeats until no new
    subsystem appears.  Subsystems are deduplicated by their sorted Cartan-type
    signature, which identifies Weyl-conjugate results at the granularity the
    downstream arguments need.
    """
    start = _make_subsystem(rs.stype, rs.simple_roots)
    seen = {start.signature}
    queue = [start]
    out = [start]
    while queue:
        sub = queue.pop()
        blocks = sub.component_root_blocks()
        for b, block in enumerate(blocks):
            extended = block + (linalg.neg(_highest_root(block)),)
            others = tuple(itertools.chain.from_iterable(
                blk for c, blk in enumerate(blocks) if c != b
            ))
            for skip in range(len(extended)):
                kept = others + extended[:skip] + extended[skip + 1:]
                if linalg.rank(kept) != rs.rank:
                    raise AssertionError("deletion lost rank")
                candidate = _make_subsystem(rs.stype, kept)
                if candidate.signature not in seen:
                    seen.add(candidate.signature)
                    out.append(candidate)
                    queue.append(candidate)
    out.sort(key=lambda s: (len(s.component_types), s.signature, s.selected_roots))
    return tuple(out)


def type_a_equal_rank(rs: RootSystem) -> Subsystem:
    """A deterministic equal-rank subsystem with all components of type A.

    Candidates are ordered by (number of components, signature, roots) and the
    first is returned, so a single component wins over a finer splitting.
    """
    candidates = [
        s for s in equal_rank_subsystems(rs)
        if all(ct.family == "A" for ct in s.component_types)
    ]
    if not candidates:
        raise AssertionError(f"no all-type-A equal-rank subsystem for {rs.stype}")
    return candidates[0]


# ---------------------------------------------------------------------------
# Diagram automorphisms acting on fundamental coordinates.


@dataclass(frozen=True)
class LatticeInvolution:
    """An integer weight-lattice map squaring to the identity."""

    matrix: tuple[Coords, ...]

    def __post_init__(self) -> None:
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise ValueError("involution matrix must be square")
        square = linalg.matmul(self.matrix, self.matrix)
        if square != linalg.identity(n):
            raise ValueError("matrix does not square to the identity")

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def order(self) -> int:
        return 1 if self.matrix == tuple(tuple(r) for r in linalg.identity(self.rank)) else 2

    def apply(self, w: Coords) -> Coords:
        return tuple(int(sum(row[j] * w[j] for j in range(len(w)))) for row in self.matrix)

    @classmethod
    def identity(cls, rank: int) -> "LatticeInvolution":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)))

    @classmethod
    def negation(cls, rank: int) -> "LatticeInvolution":
        return cls(tuple(tuple(-1 if i == j else 0 for j in range(rank)) for i in range(rank)))

    @classmethod
    def from_node_permutation(cls, perm: dict[int, int], rank: int) -> "LatticeInvolution":
        full = {i: perm.get(i, i) for i in range(rank)}
        return cls(tuple(
            tuple(1 if j == full[i] else 0 for j in range(rank)) for i in range(rank)
        ))


def _permutation_matrix(perm: dict[int, int], rank: int) -> tuple[Coords, ...]:
    full = {i: perm.get(i, i) for i in range(rank)}
    return tuple(tuple(1 if j == full[i] else 0 for j in range(rank)) for i in range(rank))


@dataclass(frozen=True)
class DiagramAutomorphisms:
    """Diagram automorphisms of one simple type, split by element order."""

    stype: SimpleType
    involutions: tuple[LatticeInvolution, ...]
    order3: tuple[tuple[Coords, ...], ...]

    @property
    def group_order(self) -> int:
        return len(self.involutions) + len(self.order3)


def diagram_automorphisms(stype: SimpleType) -> DiagramAutomorphisms:
    """Diagram automorphisms as maps on fundamental coordinates.

    The returned involutions include the identity; for D4 the two rotations of
    the fork are reported separately since they do not square to the identity.
    """
    n = stype.rank
    invs = [LatticeInvolution.identity(n)]
    order3: tuple = ()
    if stype.family == "A" and n >= 2:
        invs.append(LatticeInvolution.from_node_permutation(
            {i: n - 1 - i for i in range(n)}, n))
    elif stype.family == "D" and n == 4:
        # The fork tips are nodes 0, 2, 3 in standard numbering.
        for a, b in ((0, 2), (0, 3), (2, 3)):
            invs.append(LatticeInvolution.from_node_permutation({a: b, b: a}, n))
        order3 = (
            _permutation_matrix({0: 2, 2: 3, 3: 0}, n),
            _permutation_matrix({0: 3, 3: 2, 2: 0}, n),
        )
    elif stype.family == "D" and n >= 5:
        invs.append(LatticeInvolution.from_node_permutation({n - 2: n - 1, n - 1: n - 2}, n))
    elif stype == SimpleType("E", 6):
        invs.append(LatticeInvolution.from_node_permutation({0: 5, 5: 0, 2: 4, 4: 2}, n))
    return DiagramAutomorphisms(stype=stype, involutions=tuple(invs), order3=order3)
