"""Inner products induced by characters, and matching of formal characters.

A weight multiset induces a symmetric form on the dual of its span (sum of
squares of weight evaluations); its dual form is the inner product the
matching arguments use.  Any linear bijection carrying one weight multiset
onto another is automatically an isometry for the two induced forms, so Gram
data is a sound and complete pruning device for the matching search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .linalg import Mat, Vec
from .reps import FormalCharacter, SemisimpleAlgebra, negate_character
from .rootsys import Coords, LatticeInvolution

Q = Fraction


class DegenerateFormError(ValueError):
    """The character does not act faithfully, so the induced form is singular."""


class NonCompatibleInvolutionError(ValueError):
    """The involution does not act on the character's weight multiset."""


class TypeARestrictionError(ValueError):
    """An operation restricted to all-type-A algebras got something else."""


@dataclass(frozen=True)
class BilinearForm:
    """The induced inner product on weight space, in fundamental coordinates."""

    algebra: SemisimpleAlgebra
    matrix: Mat

    def pair(self, v: Coords, w: Coords) -> Fraction:
        return sum(
            (Q(v[i]) * sum((self.matrix[i][j] * w[j] for j in range(len(w))), Q(0))
             for i in range(len(v))),
            Q(0),
        )

    def norm2(self, w: Coords) -> Fraction:
        return self.pair(w, w)


def char_inner_product(fc: FormalCharacter) -> BilinearForm:
    """Dual of the sum-of-squares form of the character; needs a faithful character."""
    rank = fc.algebra.rank
    m = [[Q(0)] * rank for _ in range(rank)]
    for w, mult in fc.weights:
        for i in range(rank):
            if w[i]:
                for j in range(rank):
                    if w[j]:
                        m[i][j] += mult * w[i] * w[j]
    try:
        dual = linalg.invert(m)
    except ValueError:
        trivial = [
            str(st) for st, block in zip(fc.algebra.factors, _factor_blocks(fc))
            if not any(any(c for c in piece) for piece in block)
        ]
        detail = f"; factors acting trivially: {', '.join(trivial)}" if trivial else ""
        raise DegenerateFormError(f"character of {fc.algebra} is not faithful{detail}")
    return BilinearForm(algebra=fc.algebra, matrix=dual)


def _factor_blocks(fc: FormalCharacter) -> list[list[Coords]]:
    out = []
    pos = 0
    for st in fc.algebra.factors:
        out.append([w[pos:pos + st.rank] for w, _ in fc.weights])
        pos += st.rank
    return out


@lru_cache(maxsize=None)
def canonical_weight_form(alg: SemisimpleAlgebra) -> Mat:
    """Block-diagonal Gram matrix of the fundamental weights in the fixed realizations."""
    rank = alg.rank
    rows = [[Q(0)] * rank for _ in range(rank)]
    pos = 0
    for rs in alg.root_systems():
        for i, a in enumerate(rs.fundamental_weights):
            for j, b in enumerate(rs.fundamental_weights):
                rows[pos + i][pos + j] = linalg.dot(a, b)
        pos += rs.rank
    return tuple(tuple(r) for r in rows)


def factor_scalars(fc: FormalCharacter) -> tuple[Fraction, ...]:
    """Per-factor ratio of the induced form to the canonical form.

    A Weyl-stable character induces, on each simple factor, a positive multiple
    of the canonical form; the multiple is the character's own normalization.
    """
    form = char_inner_product(fc)
    canon = canonical_weight_form(fc.algebra)
    out = []
    pos = 0
    for st in fc.algebra.factors:
        r = st.rank
        scalar = None
        for i in range(r):
            for j in range(r):
                c = canon[pos + i][pos + j]
                if c:
                    scalar = form.matrix[pos + i][pos + j] / c
                    break
            if scalar is not None:
                break
        for i in range(r):
            for j in range(r):
                if form.matrix[pos + i][pos + j] != scalar * canon[pos + i][pos + j]:
                    raise AssertionError("induced form is not a factor multiple of the canonical form")
        out.append(scalar)
        pos += r
    return tuple(out)


@dataclass(frozen=True)
class GramData:
    """Gram matrix of the distinct weights under the canonical form."""

    algebra: SemisimpleAlgebra
    weights: tuple[Coords, ...]
    matrix: Mat


def gram_data(fc: FormalCharacter) -> GramData:
    """Canonical-form Gram data over the distinct weights in lexicographic order."""
    canon = canonical_weight_form(fc.algebra)
    distinct = fc.distinct()
    rank = fc.algebra.rank

    def pair(v: Coords, w: Coords) -> Fraction:
        return sum(
            (Q(v[i]) * sum((canon[i][j] * w[j] for j in range(rank)), Q(0))
             for i in range(rank)),
            Q(0),
        )

    matrix = tuple(tuple(pair(v, w) for w in distinct) for v in distinct)
    return GramData(algebra=fc.algebra, weights=distinct, matrix=matrix)


# ---------------------------------------------------------------------------
# Formal-character matching.


@dataclass(frozen=True)
class CharIsomorphism:
    """A linear weight-space bijection carrying one character onto another."""

    source: FormalCharacter
    target: FormalCharacter
    matrix: Mat

    def apply(self, w: Coords) -> Coords:
        image = linalg.matvec(self.matrix, linalg.vec(w))
        out = []
        for c in image:
            if c.denominator != 1:
                raise AssertionError("witness maps a lattice point off the lattice")
            out.append(int(c))
        return tuple(out)

    def validate(self) -> bool:
        linalg.invert(self.matrix)  # raises when singular
        mapped: dict[Coords, int] = {}
        for w, m in self.source.weights:
            im = self.apply(w)
            mapped[im] = mapped.get(im, 0) + m
        return mapped == self.target.counts()


def _span_data(fc: FormalCharacter):
    """Span basis, span coordinates and induced Gram data for the distinct weights."""
    distinct = fc.distinct()
    mults = [m for _, m in fc.weights]
    basis: list[Vec] = []
    for w in distinct:
        v = linalg.vec(w)
        if linalg.rank(basis + [v]) > len(basis):
            basis.append(v)
    coords = []
    for w in distinct:
        c = linalg.solve_columns(basis, linalg.vec(w)) if basis else ()
        if c is None:
            raise AssertionError("weight outside its own span basis")
        coords.append(c)
    s = len(basis)
    m = [[Q(0)] * s for _ in range(s)]
    for c, mult in zip(coords, mults):
        for i in range(s):
            if c[i]:
                for j in range(s):
                    if c[j]:
                        m[i][j] += mult * c[i] * c[j]
    dual = linalg.invert(m) if s else ()
    gram = tuple(
        tuple(
            sum((ci[i] * sum((dual[i][j] * cj[j] for j in range(s)), Q(0))
                 for i in range(s)), Q(0))
            for cj in coords
        )
        for ci in coords
    )
    return basis, coords, gram


def same_formal_character(fc1: FormalCharacter, fc2: FormalCharacter):
    """Search for a linear bijection matching two weight multisets exactly.

    Returns a CharIsomorphism witness or None.  Candidate pairings must agree
    on multiplicity and on induced-form Gram data; the backtracking completes
    each Gram-compatible bijection and keeps searching until one extends to a
    linear map, so absence of a witness is a proof of failure.
    """
    if fc1.size != fc2.size:
        return None
    rank = fc1.algebra.rank
    if rank != fc2.algebra.rank:
        return None
    d1, d2 = fc1.distinct(), fc2.distinct()
    if len(d1) != len(d2):
        return None
    m1 = [m for _, m in fc1.weights]
    m2 = [m for _, m in fc2.weights]
    basis1, _, gram1 = _span_data(fc1)
    basis2, _, gram2 = _span_data(fc2)
    if len(basis1) != len(basis2):
        return None

    n = len(d1)
    prof1 = _row_profiles(gram1, m1)
    prof2 = _row_profiles(gram2, m2)
    if sorted(zip((g for g in _diag(gram1)), m1, prof1)) != \
            sorted(zip((g for g in _diag(gram2)), m2, prof2)):
        return None

    # Source weights in (norm, lex) order; target candidates share that order.
    order1 = sorted(range(n), key=lambda i: (gram1[i][i], d1[i]))
    order2 = sorted(range(n), key=lambda j: (gram2[j][j], d2[j]))
    candidates = {
        i: [j for j in order2 if m2[j] == m1[i] and gram2[j][j] == gram1[i][i]
            and prof2[j] == prof1[i]]
        for i in order1
    }

    assignment: dict[int, int] = {}
    used: set[int] = set()

    def backtrack(pos: int):
        if pos == n:
            yield dict(assignment)
            return
        i = order1[pos]
        for j in candidates[i]:
            if j in used:
                continue
            if any(gram1[i][k] != gram2[j][assignment[k]] for k in assignment):
                continue
            assignment[i] = j
            used.add(j)
            yield from backtrack(pos + 1)
            del assignment[i]
            used.discard(j)

    for sigma in backtrack(0):
        matrix = _linear_witness(d1, d2, sigma, basis1, rank)
        if matrix is None:
            continue
        witness = CharIsomorphism(source=fc1, target=fc2, matrix=matrix)
        if witness.validate():
            return witness
    return None


def _diag(gram: Mat):
    return (gram[i][i] for i in range(len(gram)))


def _row_profiles(gram: Mat, mults: list[int]):
    n = len(gram)
    return [tuple(sorted((gram[i][j], mults[j]) for j in range(n))) for i in range(n)]


def _linear_witness(d1, d2, sigma: dict[int, int], basis1, rank: int):
    """Extend a weight bijection to a full-rank matrix, or report None."""
    pairs = [(linalg.vec(d1[i]), linalg.vec(d2[sigma[i]])) for i in sorted(sigma)]
    span_sources = []
    span_targets = []
    for src, tgt in pairs:
        if linalg.rank(span_sources + [src]) > len(span_sources):
            span_sources.append(src)
            span_targets.append(tgt)
    if linalg.rank(span_targets) != len(span_targets):
        return None
    full_src = linalg.extend_to_basis(span_sources, rank)
    try:
        full_tgt = linalg.extend_to_basis(span_targets, rank)
    except ValueError:
        return None
    b = linalg.transpose(full_src)
    t = linalg.transpose(full_tgt)
    matrix = linalg.matmul(t, linalg.invert(b))
    for src, tgt in pairs:
        if linalg.matvec(matrix, src) != tgt:
            return None
    return matrix


# ---------------------------------------------------------------------------
# Type A counting constraints.


@dataclass(frozen=True)
class TypeACountReport:
    """Factor-count comparison for two all-type-A algebras."""

    counts1: tuple[tuple[int, int], ...]
    counts2: tuple[tuple[int, int], ...]
    violations: tuple[str, ...]

    @property
    def consistent(self) -> bool:
        return not self.violations


def _a_counts(alg: SemisimpleAlgebra) -> dict[int, int]:
    counts: dict[int, int] = {}
    for st in alg.factors:
        if st.family != "A":
            raise TypeARestrictionError(f"{st} is not of type A")
        counts[st.rank] = counts.get(st.rank, 0) + 1
    return counts


def type_a_count_report(alg1: SemisimpleAlgebra, alg2: SemisimpleAlgebra) -> TypeACountReport:
    """Which A_n factor counts must agree for matching characters, and whether they do.

    The count of A_n factors is rigid for n = 6 and all n >= 9; for n = 4 only
    the parity is rigid.  Other ranks are unconstrained.
    """
    c1 = _a_counts(alg1)
    c2 = _a_counts(alg2)
    violations = []
    for n in sorted(set(c1) | set(c2)):
        a, b = c1.get(n, 0), c2.get(n, 0)
        if n == 4 and a % 2 != b % 2:
            violations.append(f"A4 factor counts {a} and {b} differ in parity")
        if (n == 6 or n >= 9) and a != b:
            violations.append(f"A{n} factor counts {a} and {b} must be equal")
    return TypeACountReport(
        counts1=tuple(sorted(c1.items())),
        counts2=tuple(sorted(c2.items())),
        violations=tuple(violations),
    )


# ---------------------------------------------------------------------------
# Closed-form alternating-power statistics, max-norm weights, conjugation sums.


@dataclass(frozen=True)
class AltPowerStats:
    """Norm and extreme inner products among weights of an alternating power."""

    n: int
    a: int
    norm2: Fraction
    max_ip: Fraction
    min_ip: Fraction


def alt_power_stats(n: int, a: int) -> AltPowerStats:
    """Exact statistics for the a-th alternating power of the standard
    representation of sl_(n+1), under the standard normalization."""
    if not 1 <= a <= n:
        raise ValueError(f"need 1 <= a <= n, got a={a}, n={n}")
    norm2 = Q(a * (n + 1 - a), n + 1)
    return AltPowerStats(
        n=n,
        a=a,
        norm2=norm2,
        max_ip=norm2 - 1,
        min_ip=norm2 - min(a, n + 1 - a),
    )


@dataclass(frozen=True)
class MaxNormRecord:
    """The maximal-norm weights of a character under its induced form."""

    weights: tuple[Coords, ...]
    norm2: Fraction
    spans: bool
    bound_ok: bool


def max_norm_weights(fc: FormalCharacter) -> MaxNormRecord:
    """Maximal-norm weights, whether they span, and the count bound #W >= rank + 1.

    The bound is asserted only when the maximal-norm weights span; it is the
    type-A spanning bound, so callers interpret bound_ok for all-type-A
    algebras.
    """
    form = char_inner_product(fc)
    norms = [(form.norm2(w), w) for w, _ in fc.weights]
    top = max(n for n, _ in norms)
    winners = tuple(w for n, w in norms if n == top)
    spans = linalg.rank([linalg.vec(w) for w in winners]) == fc.algebra.rank
    bound_ok = (not spans) or len(winners) >= fc.algebra.rank + 1
    return MaxNormRecord(weights=winners, norm2=top, spans=spans, bound_ok=bound_ok)


@dataclass(frozen=True)
class ConjugationMultiset:
    """The multiset of sums w + inv(w) over a character's weights."""

    base: FormalCharacter
    involution: LatticeInvolution
    sums: FormalCharacter


def _involution_image_counts(fc: FormalCharacter, inv: LatticeInvolution, sign: int) -> dict[Coords, int]:
    out: dict[Coords, int] = {}
    for w, m in fc.weights:
        im = tuple(sign * c for c in inv.apply(w))
        out[im] = out.get(im, 0) + m
    return out


def conjugation_sums(fc: FormalCharacter, inv: LatticeInvolution) -> ConjugationMultiset:
    """Multiset {w + inv(w)}; inv must carry the multiset onto itself or its negation."""
    if inv.rank != fc.algebra.rank:
        raise NonCompatibleInvolutionError("involution rank does not match the algebra")
    counts = fc.counts()
    if _involution_image_counts(fc, inv, 1) != counts and \
            _involution_image_counts(fc, inv, -1) != counts:
        raise NonCompatibleInvolutionError(
            "involution maps the weight multiset neither to itself nor to its negation")
    sums: dict[Coords, int] = {}
    for w, m in fc.weights:
        s = tuple(a + b for a, b in zip(w, inv.apply(w)))
        sums[s] = sums.get(s, 0) + m
    return ConjugationMultiset(
        base=fc,
        involution=inv,
        sums=FormalCharacter.from_counts(fc.algebra, sums),
    )


def fixed_point_exists(fc: FormalCharacter, inv: LatticeInvolution) -> bool:
    """Whether w = -inv(w) for some weight; the map w -> -inv(w) must permute the multiset."""
    if inv.rank != fc.algebra.rank:
        raise NonCompatibleInvolutionError("involution rank does not match the algebra")
    if _involution_image_counts(fc, inv, -1) != fc.counts():
        raise NonCompatibleInvolutionError(
            "the map w -> -inv(w) does not permute the weight multiset")
    return any(tuple(-c for c in inv.apply(w)) == w for w, _ in fc.weights)


def negation_involution(rank: int) -> LatticeInvolution:
    return LatticeInvolution.negation(rank)


__all__ = [
    "AltPowerStats",
    "BilinearForm",
    "CharIsomorphism",
    "ConjugationMultiset",
    "DegenerateFormError",
    "GramData",
    "MaxNormRecord",
    "NonCompatibleInvolutionError",
    "TypeACountReport",
    "TypeARestrictionError",
    "alt_power_stats",
    "canonical_weight_form",
    "char_inner_product",
    "conjugation_sums",
    "factor_scalars",
    "fixed_point_exists",
    "gram_data",
    "max_norm_weights",
    "negate_character",
    "negation_involution",
    "same_formal_character",
    "type_a_count_report",
]
