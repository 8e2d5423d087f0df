"""Finite multisets in Z/m x Z^d and their sumset factorizations.

Elements are written additively as (torsion, free) pairs.  A product of
multisets is the multiset of pairwise sums; two multisets are equivalent when
one is a translate of the other.  Factorization into factors of prescribed
sizes follows the determinacy argument: once one factor is pinned down to
contain 0, the remaining rows are forced up to finitely many choices, which a
small backtracking search enumerates completely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

from .reps import FormalCharacter

Elem = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class AbGroup:
    """The ambient group Z/torsion x Z^free_rank; torsion 1 means free only."""

    torsion: int
    free_rank: int

    def __post_init__(self) -> None:
        if self.torsion < 1 or self.free_rank < 0:
            raise ValueError("need torsion >= 1 and free_rank >= 0")

    def element(self, torsion_part: int, free_part: tuple[int, ...]) -> Elem:
        if len(free_part) != self.free_rank:
            raise ValueError(f"free part must have {self.free_rank} coordinates")
        return (torsion_part % self.torsion, tuple(free_part))

    def zero(self) -> Elem:
        return (0, tuple(0 for _ in range(self.free_rank)))

    def add(self, x: Elem, y: Elem) -> Elem:
        return ((x[0] + y[0]) % self.torsion,
                tuple(a + b for a, b in zip(x[1], y[1])))

    def neg(self, x: Elem) -> Elem:
        return ((-x[0]) % self.torsion, tuple(-a for a in x[1]))

    def sub(self, x: Elem, y: Elem) -> Elem:
        return self.add(x, self.neg(y))

    def scale(self, n: int, x: Elem) -> Elem:
        return ((n * x[0]) % self.torsion, tuple(n * a for a in x[1]))


@dataclass(frozen=True)
class GroupMultiset:
    """A finite multiset of group elements, stored sorted with multiplicities."""

    group: AbGroup
    elems: tuple[tuple[Elem, int], ...]

    @classmethod
    def from_iterable(cls, group: AbGroup, items) -> "GroupMultiset":
        counts: dict[Elem, int] = {}
        for it in items:
            e = group.element(it[0], tuple(it[1]))
            counts[e] = counts.get(e, 0) + 1
        return cls.from_counts(group, counts)

    @classmethod
    def from_counts(cls, group: AbGroup, counts: dict[Elem, int]) -> "GroupMultiset":
        items = tuple(sorted((e, m) for e, m in counts.items() if m))
        if any(m < 0 for _, m in items):
            raise ValueError("negative multiplicity")
        return cls(group=group, elems=items)

    @property
    def size(self) -> int:
        return sum(m for _, m in self.elems)

    def counts(self) -> dict[Elem, int]:
        return dict(self.elems)

    def translate(self, shift: Elem) -> "GroupMultiset":
        return GroupMultiset.from_counts(
            self.group,
            {self.group.add(e, shift): m for e, m in self.elems})


def multiset_product(a: GroupMultiset, b: GroupMultiset) -> GroupMultiset:
    """Multiset of pairwise sums; sizes multiply."""
    if a.group != b.group:
        raise ValueError("products need a common ambient group")
    counts: dict[Elem, int] = {}
    for x, mx in a.elems:
        for y, my in b.elems:
            s = a.group.add(x, y)
            counts[s] = counts.get(s, 0) + mx * my
    return GroupMultiset.from_counts(a.group, counts)


def equivalent(a: GroupMultiset, b: GroupMultiset) -> Elem | None:
    """A translation carrying a onto b, or None.

    Complete by construction: any witness must send a's first stored element
    to some element of b, so all #b candidate shifts are tried.
    """
    if a.group != b.group or a.size != b.size:
        return None
    if not a.elems:
        return a.group.zero()
    base = a.elems[0][0]
    b_counts = b.counts()
    for target, _ in b.elems:
        shift = a.group.sub(target, base)
        if {a.group.add(e, shift): m for e, m in a.elems} == b_counts:
            return shift
    return None


def canonical_form(a: GroupMultiset) -> tuple[tuple[Elem, int], ...]:
    """Translation-invariant canonical key: the least sorted translate with some
    element at 0."""
    best = None
    for e, _ in a.elems:
        candidate = a.translate(a.group.neg(e)).elems
        if best is None or candidate < best:
            best = candidate
    return best if best is not None else ()


@dataclass(frozen=True)
class Decomposition:
    """An ordered factorization of a multiset into factors of fixed sizes."""

    factors: tuple[GroupMultiset, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(f.size for f in self.factors)

    def product(self) -> GroupMultiset:
        out = self.factors[0]
        for f in self.factors[1:]:
            out = multiset_product(out, f)
        return out

    def key(self) -> tuple:
        # Equal-size factors may be rearranged, so group canonical forms by size.
        by_size: dict[int, list] = {}
        for f in self.factors:
            by_size.setdefault(f.size, []).append(canonical_form(f))
        return tuple(
            (size, tuple(sorted(forms))) for size, forms in sorted(by_size.items())
        )


def _sub_multisets(counts: list[tuple[Elem, int]], size: int):
    """All sub-multisets of a counted multiset with the given total size."""
    if size == 0:
        yield []
        return
    if not counts:
        return
    (elem, avail), rest = counts[0], counts[1:]
    for take in range(min(avail, size), -1, -1):
        for tail in _sub_multisets(rest, size - take):
            yield ([(elem, take)] if take else []) + tail


def _binary_factorizations(c: GroupMultiset, a_size: int, b_size: int):
    """All (A, B) with A + B = c, #A = a_size, #B = b_size and 0 in A.

    Any factorization can be translated so the first factor contains 0; then
    the second factor is a sub-multiset of c, and the remaining elements of the
    first factor are forced row by row.
    """
    group = c.group
    zero = group.zero()
    out = []
    for b_items in _sub_multisets(list(c.elems), b_size):
        b_counts = dict(b_items)
        remaining = c.counts()
        ok = True
        for e, m in b_items:
            if remaining.get(e, 0) < m:
                ok = False
                break
            remaining[e] -= m
            if not remaining[e]:
                del remaining[e]
        if not ok:
            continue
        b_mset = GroupMultiset.from_counts(group, b_counts)
        a_sofar: list[Elem] = [zero]

        def place(rem: dict[Elem, int]):
            if len(a_sofar) == a_size:
                if not rem:
                    a_counts: dict[Elem, int] = {}
                    for e in a_sofar:
                        a_counts[e] = a_counts.get(e, 0) + 1
                    out.append((GroupMultiset.from_counts(group, a_counts), b_mset))
                return
            if not rem:
                return
            gamma = min(rem)
            tried: set[Elem] = set()
            for beta, _ in b_items:
                alpha = group.sub(gamma, beta)
                if alpha in tried:
                    continue
                tried.add(alpha)
                shifted = {group.add(alpha, e): m for e, m in b_items}
                if any(rem.get(e, 0) < m for e, m in shifted.items()):
                    continue
                nxt = dict(rem)
                for e, m in shifted.items():
                    nxt[e] -= m
                    if not nxt[e]:
                        del nxt[e]
                a_sofar.append(alpha)
                place(nxt)
                a_sofar.pop()

        place(remaining)
    return out


def factorization_count_bound(a: int, b: int) -> int:
    """Upper bound (ab)! / (a! b!) on inequivalent two-factor decompositions."""
    return factorial(a * b) // (factorial(a) * factorial(b))


def factorizations(c: GroupMultiset, profile: tuple[int, ...]) -> tuple[Decomposition, ...]:
    """All inequivalent factorizations of c with the given factor sizes.

    The profile sizes must multiply to #c; for profiles of length at least two
    every size must exceed 1.  Factors within a decomposition may be rearranged
    across equal sizes when comparing, and each factor is considered up to
    translation.
    """
    sizes = tuple(profile)
    prod = 1
    for s in sizes:
        prod *= s
    if prod != c.size:
        raise ValueError(f"profile {sizes} does not multiply to {c.size}")
    if len(sizes) > 1 and any(s <= 1 for s in sizes):
        raise ValueError("factor sizes must exceed 1")

    def recurse(target: GroupMultiset, shape: tuple[int, ...]):
        if len(shape) == 1:
            yield (target,)
            return
        rest = 1
        for s in shape[1:]:
            rest *= s
        for a_mset, b_mset in _binary_factorizations(target, shape[0], rest):
            for tail in recurse(b_mset, shape[1:]):
                yield (a_mset,) + tail

    found: dict[tuple, Decomposition] = {}
    for factors in recurse(c, sizes):
        dec = Decomposition(factors=factors)
        k = dec.key()
        if k not in found:
            found[k] = dec
    return tuple(found[k] for k in sorted(found))


def generic_ratio_check(c: GroupMultiset, n: int) -> bool:
    """Whether all distinct values of c stay distinct after scaling by n.

    Only distinct stored values are compared; repeated values inside the
    multiset are collapse-proof by definition and are not flagged here.
    """
    values = [e for e, _ in c.elems]
    for x, y in itertools.combinations(values, 2):
        if c.group.scale(n, c.group.sub(x, y)) == c.group.zero():
            return False
    return True


def character_kronecker_split(fc: FormalCharacter, profile: tuple[int, ...]) -> tuple[Decomposition, ...]:
    """Sumset factorizations of a character's weight multiset in Z^rank.

    Each decomposition is a candidate splitting of the character into an
    external tensor product, up to translation of each factor.
    """
    group = AbGroup(torsion=1, free_rank=fc.algebra.rank)
    counts = {(0, w): m for w, m in fc.weights}
    mset = GroupMultiset.from_counts(group, counts)
    return factorizations(mset, profile)
