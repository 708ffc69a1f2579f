"""Closed-form predictions about ranges, cross-checkable against brute force.

Each rule inspects a matrix's eigenstructure or coefficient pattern and,
when its hypothesis holds, emits Prediction records: exact sets, exact
cardinalities, bounds, memberships, or line shapes, each tagged with the
rule that produced it.  check_prediction compares one record against a
computed RangeSet (or a fiber count) and returns a verdict, so a sweep
over a matrix space validates the whole rule table mechanically.

Rules never guess: a matrix matching no hypothesis gets only the
universal facts.  All hypotheses on subfield ranges are evaluated on the
symmetrized data (diagonal entries and the sums m_ij + m_ji), which is
the only input those ranges depend on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import FieldCtx, FieldElem
from .hermitian import HermMatrix, Vector, inner
from .ranges import (EXHAUSTIVE, KIND_NUM0_PRIME, KIND_NUM0_PRIME_SUBFIELD,
                     KIND_NUM_K, KIND_NUM_K_SUBFIELD, FiberCount, RangeSet,
                     num0_prime)

TWO_DISTINCT = "two_distinct_in_Fq2"
REPEATED = "repeated"
IRREDUCIBLE = "irreducible_char_poly"

CLAIM_EXACT_SET = "exact_set"
CLAIM_EXACT_CARD = "exact_card"
CLAIM_LOWER_BOUND = "lower_bound"
CLAIM_UPPER_BOUND = "upper_bound"
CLAIM_MEMBER = "membership"
CLAIM_EMPTY = "empty"
CLAIM_SUPERSET = "superset"
CLAIM_LINE = "line"

SCOPE_FIBER_ZERO = "fiber_zero"

PASS = "pass"
FAIL = "fail"
INAPPLICABLE = "inapplicable"

# claims that a sampled (subset) observation can never settle
_NEEDS_EXHAUSTIVE = (CLAIM_EXACT_SET, CLAIM_EXACT_CARD, CLAIM_UPPER_BOUND,
                     CLAIM_LINE)


@dataclass(frozen=True)
class EigenData2:
    """Eigenstructure of a 2 by 2 matrix over F_{q^2}.

    One representative eigenvector is kept per eigenvalue; isotropic
    flags record whether its self-pairing vanishes.  When the
    characteristic polynomial has no root in F_{q^2} all tuples are
    empty.
    """

    status: str
    eigenvalues: tuple[FieldElem, ...]
    eigenvectors: tuple[Vector, ...]
    isotropic: tuple[bool, ...]
    eigenspace_dims: tuple[int, ...]


@dataclass(frozen=True)
class Prediction:
    """One checkable claim about one range, tagged by its source rule.

    scope names the range kind (or fiber_zero for the null-fiber count)
    and k_enc the level; the claim constant picks which payload fields
    are meaningful: values for exact_set/superset, count for
    cardinalities and bounds, member_enc/member_in for membership,
    line_full/direction_enc for line shapes.  nonzero_only makes a
    lower bound count only the nonzero values.
    """

    basis: str
    scope: str
    k_enc: int
    claim: str
    values: tuple[int, ...] | None = None
    count: int | None = None
    member_enc: int | None = None
    member_in: bool | None = None
    nonzero_only: bool = False
    line_full: bool = False
    direction_enc: int | None = None


def _kernel_vector(ctx: FieldCtx, rows) -> tuple[int, int] | None:
    """Kernel direction of a singular 2x2 (code rows); None for the zero
    matrix."""
    (a, b), (c, d) = rows
    if a or b:
        return (b, ctx.neg_enc(a))
    if c or d:
        return (d, ctx.neg_enc(c))
    return None


def eigen2(m: HermMatrix) -> EigenData2:
    """Solve the characteristic polynomial by scanning F_{q^2}."""
    if m.n != 2:
        raise ValueError(f"eigen decomposition implemented for n=2, got n={m.n}")
    ctx = m.ctx
    (a, b), (c, d) = m.encs()
    tr = ctx.add_enc(a, d)
    det = ctx.sub_enc(ctx.mul_enc(a, d), ctx.mul_enc(b, c))
    roots = [x for x in range(ctx.q2)
             if ctx.add_enc(ctx.sub_enc(ctx.mul_enc(x, x), ctx.mul_enc(tr, x)),
                            det) == 0]
    if not roots:
        return EigenData2(IRREDUCIBLE, (), (), (), ())

    values, vectors, flags, dims = [], [], [], []
    for r in roots:
        shifted = ((ctx.sub_enc(a, r), b), (c, ctx.sub_enc(d, r)))
        kv = _kernel_vector(ctx, shifted)
        if kv is None:
            vec = Vector.from_encs(ctx, (1, 0))
            dim = 2
        else:
            vec = Vector.from_encs(ctx, kv)
            dim = 1
        values.append(ctx.elem(r))
        vectors.append(vec)
        flags.append(inner(vec, vec).is_zero)
        dims.append(dim)
    status = TWO_DISTINCT if len(roots) == 2 else REPEATED
    return EigenData2(status, tuple(values), tuple(vectors), tuple(flags),
                      tuple(dims))


def unitarily_diagonalizable_2x2(m: HermMatrix) -> bool:
    """Gram test: an orthogonal eigenbasis of non-isotropic vectors."""
    if m.is_scalar:
        return True
    e = eigen2(m)
    if e.status != TWO_DISTINCT:
        return False
    u1, u2 = e.eigenvectors
    return (not e.isotropic[0] and not e.isotropic[1]
            and inner(u1, u2).is_zero)


def _line_values(ctx: FieldCtx, direction_enc: int, full: bool) -> tuple[int, ...]:
    start = 0 if full else 1
    return tuple(sorted(ctx.mul_enc(t, direction_enc)
                        for t in range(start, ctx.q)))


def _half_up(x: int) -> int:
    return (x + 1) // 2


def predict_full_field(m: HermMatrix) -> list[Prediction]:
    """All applicable full-field rules for a 2 by 2 matrix."""
    if m.n != 2:
        raise ValueError(f"full-field rules cover n=2, got n={m.n}")
    ctx = m.ctx
    q, q2 = ctx.q, ctx.q2

    preds = [Prediction(basis="zero-in-num0", scope=KIND_NUM_K, k_enc=0,
                        claim=CLAIM_MEMBER, member_enc=0, member_in=True)]
    if m.is_scalar:
        preds.append(Prediction(basis="remark4", scope=KIND_NUM0_PRIME, k_enc=0,
                                claim=CLAIM_EXACT_SET, values=(0,)))
        return preds

    # any non-scalar matrix carries the halved lower bound on the zero level
    preds.append(Prediction(basis="cor1", scope=KIND_NUM_K, k_enc=0,
                            claim=CLAIM_LOWER_BOUND, count=_half_up(q + 1)))

    e = eigen2(m)
    if e.status == TWO_DISTINCT:
        u1, u2 = e.eigenvectors
        iso1, iso2 = e.isotropic
        if not iso1 and not iso2 and inner(u1, u2).is_zero:
            diff = (e.eigenvalues[1] - e.eigenvalues[0]).enc
            preds.append(Prediction(
                basis="prop1d", scope=KIND_NUM0_PRIME, k_enc=0,
                claim=CLAIM_EXACT_SET, values=_line_values(ctx, diff, False)))
        elif iso1 and iso2:
            preds.append(Prediction(basis="prop3", scope=KIND_NUM0_PRIME,
                                    k_enc=0, claim=CLAIM_LINE, line_full=True))
    elif (e.status == REPEATED and e.eigenspace_dims == (1,)
          and not e.isotropic[0]):
        preds.append(Prediction(basis="prop2", scope=KIND_NUM0_PRIME, k_enc=0,
                                claim=CLAIM_MEMBER, member_enc=0,
                                member_in=False))
        card = q2 - 1 if q % 2 == 0 else (q2 - 1) // 2
        preds.append(Prediction(basis="prop2", scope=KIND_NUM0_PRIME, k_enc=0,
                                claim=CLAIM_EXACT_CARD, count=card))
        if q % 2 == 0:
            preds.append(Prediction(basis="prop2", scope=KIND_NUM0_PRIME,
                                    k_enc=0, claim=CLAIM_EXACT_SET,
                                    values=tuple(range(1, q2))))

    m12, m21 = m.entry(0, 1).enc, m.entry(1, 0).enc
    if m12 and m21:
        preds.append(Prediction(basis="prop4.i", scope=KIND_NUM0_PRIME, k_enc=0,
                                claim=CLAIM_LOWER_BOUND, count=_half_up(q + 1)))
        ratio = ctx.div_enc(ctx.neg_enc(m12), m21)
        if ctx.norm_enc(ratio) != 1:
            preds.append(Prediction(basis="prop4.ii", scope=KIND_NUM0_PRIME,
                                    k_enc=0, claim=CLAIM_LOWER_BOUND,
                                    count=q + 1))
    return preds


def predict_unitary_diagonal(ctx: FieldCtx,
                             eigen_pairs) -> list[Prediction]:
    """Rules for a matrix known unitarily equivalent to a diagonal one.

    eigen_pairs lists (eigenvalue, multiplicity); eigenvalues must be
    distinct and multiplicities positive.  Works for any dimension
    n = sum of multiplicities >= 2.
    """
    pairs = [(c, int(x)) for c, x in eigen_pairs]
    if not pairs:
        raise ValueError("at least one eigenvalue required")
    for c, x in pairs:
        if c.ctx is not ctx:
            raise ValueError("eigenvalue from a different field context")
        if x < 1:
            raise ValueError("multiplicities must be positive")
    encs = [c.enc for c, _ in pairs]
    if len(set(encs)) != len(encs):
        raise ValueError("eigenvalues must be distinct")
    n = sum(x for _, x in pairs)
    if n < 2:
        raise ValueError("dimension must be at least 2")
    q, q2 = ctx.q, ctx.q2
    kdist = len(pairs)

    preds = [Prediction(basis="zero-in-num0", scope=KIND_NUM_K, k_enc=0,
                        claim=CLAIM_MEMBER, member_enc=0, member_in=True)]
    if kdist == 1:
        preds.append(Prediction(basis="remark4", scope=KIND_NUM0_PRIME, k_enc=0,
                                claim=CLAIM_EXACT_SET, values=(0,)))
        return preds

    preds.append(Prediction(basis="cor1", scope=KIND_NUM_K, k_enc=0,
                            claim=CLAIM_LOWER_BOUND, count=_half_up(q + 1)))
    if kdist == 2:
        diff = (pairs[1][0] - pairs[0][0]).enc
        if n == 2:
            preds.append(Prediction(
                basis="prop1d", scope=KIND_NUM0_PRIME, k_enc=0,
                claim=CLAIM_EXACT_SET, values=_line_values(ctx, diff, False)))
        else:
            preds.append(Prediction(
                basis="prop1c", scope=KIND_NUM0_PRIME, k_enc=0,
                claim=CLAIM_EXACT_SET, values=_line_values(ctx, diff, True)))
        return preds

    # Three or more distinct eigenvalues fill the zero level, provided
    # some pair of eigenvalue gaps is F_q-independent.  When every gap
    # lies on one F_q-line the filled set is only that line (witness:
    # diag(0, 1, 2) for q = 3), so no exact-set claim is made.
    c0 = pairs[0][0]
    base_gap = pairs[1][0] - c0
    spanning = any(not ((c - c0) / base_gap).in_subfield
                   for c, _ in pairs[2:])
    if spanning:
        preds.append(Prediction(basis="prop1a", scope=KIND_NUM_K, k_enc=0,
                                claim=CLAIM_EXACT_SET,
                                values=tuple(range(q2))))
    if kdist >= 4 or n >= 4:
        zero_in = True
    else:
        # n = kdist = 3: decided by whether the two eigenvalue gaps are
        # F_q-proportional
        c1, c2, c3 = (c for c, _ in pairs)
        zero_in = ((c3 - c1) / (c2 - c1)).in_subfield
    preds.append(Prediction(basis="prop1b", scope=KIND_NUM0_PRIME, k_enc=0,
                            claim=CLAIM_MEMBER, member_enc=0,
                            member_in=zero_in))
    return preds


def predict_direct_sum(a: HermMatrix, b: HermMatrix,
                       num1_a: RangeSet, num1_b: RangeSet,
                       num0_a: RangeSet, num0_b: RangeSet,
                       *, capacity: int | None = None) -> list[Prediction]:
    """Assemble the zero-level range of a block-diagonal matrix.

    Inputs are the exhaustive level-one and level-zero ranges of the two
    blocks; the result is the exact zero-level set of the direct sum
    plus the zero-membership status of its punctured version.
    """
    ctx = a.ctx
    if b.ctx is not ctx:
        raise ValueError("blocks belong to different field contexts")
    for rs, kind, k_enc in ((num1_a, KIND_NUM_K, 1), (num1_b, KIND_NUM_K, 1),
                            (num0_a, KIND_NUM_K, 0), (num0_b, KIND_NUM_K, 0)):
        if rs.kind != kind or rs.k_enc != k_enc:
            raise ValueError(f"expected a {kind} range at k={k_enc}, "
                             f"got {rs.kind} at k={rs.k_enc}")
        rs.require_exhaustive()

    assembled = {ctx.add_enc(x, y)
                 for x in num0_a.values for y in num0_b.values}
    for k in range(1, ctx.q):
        for x in num1_a.values:
            for y in num1_b.values:
                assembled.add(ctx.mul_enc(k, ctx.sub_enc(x, y)))

    kwargs = {} if capacity is None else {"capacity": capacity}
    zero_in = False
    if a.n >= 2 and 0 in num0_prime(a, **kwargs).values:
        zero_in = True
    if not zero_in and b.n >= 2 and 0 in num0_prime(b, **kwargs).values:
        zero_in = True
    if not zero_in:
        # 0 = k*(x - y) with k != 0 needs a level-one value shared by
        # both blocks, mirroring the difference in the assembled union
        zero_in = bool(set(num1_a.values) & set(num1_b.values))

    return [
        Prediction(basis="lemma2", scope=KIND_NUM_K, k_enc=0,
                   claim=CLAIM_EXACT_SET, values=tuple(sorted(assembled))),
        Prediction(basis="lemma2", scope=KIND_NUM0_PRIME, k_enc=0,
                   claim=CLAIM_MEMBER, member_enc=0, member_in=zero_in),
    ]


def _symmetrized(m: HermMatrix):
    """Diagonal codes and the off-diagonal sums m_ij + m_ji (i < j)."""
    rows = m.encs()
    n = m.n
    diag = tuple(rows[i][i] for i in range(n))
    sums = {(i, j): m.ctx.q_add(rows[i][j], rows[j][i])
            for i in range(n) for j in range(i + 1, n)}
    return diag, sums


def predict_subfield(m: HermMatrix, k: FieldElem) -> list[Prediction]:
    """All applicable subfield-range rules for M at level k.

    Claims about the punctured zero level are emitted only when k = 0,
    so sweeping over every k yields each claim exactly once.
    """
    ctx = m.ctx
    if m.n < 2:
        raise ValueError("subfield rules need dimension at least 2")
    if not m.has_subfield_coeffs:
        raise ValueError("subfield rules need a matrix with F_q entries")
    if k.ctx is not ctx or not k.in_subfield:
        raise ValueError(f"level value must lie in F_q, got {k!r}")

    q, n = ctx.q, m.n
    d, s = _symmetrized(m)
    at_zero = k.enc == 0
    qmod4 = q % 4
    all_s_zero = all(v == 0 for v in s.values())
    all_d_equal = all(x == d[0] for x in d)
    preds: list[Prediction] = []

    def emit(**kw):
        preds.append(Prediction(**kw))

    if n == 2:
        d1, d2 = d
        s12 = s[(0, 1)]
        if qmod4 == 3 and at_zero:
            emit(basis="prop5.i", scope=KIND_NUM0_PRIME_SUBFIELD, k_enc=0,
                 claim=CLAIM_EMPTY)
        if q % 2 == 0:
            t = ctx.q_add(ctx.q_add(d1, d2), s12)
            if t != 0:
                if at_zero:
                    emit(basis="prop5.ii", scope=KIND_NUM0_PRIME_SUBFIELD,
                         k_enc=0, claim=CLAIM_EXACT_SET,
                         values=tuple(range(1, q)))
                else:
                    emit(basis="prop5.ii", scope=KIND_NUM_K_SUBFIELD,
                         k_enc=k.enc, claim=CLAIM_LOWER_BOUND, count=q // 2)
            elif at_zero:
                emit(basis="prop5.ii", scope=KIND_NUM0_PRIME_SUBFIELD, k_enc=0,
                     claim=CLAIM_EXACT_SET, values=(0,))
            if s12 == 0 and d1 != d2 and not at_zero:
                emit(basis="prop5.ii", scope=KIND_NUM_K_SUBFIELD, k_enc=k.enc,
                     claim=CLAIM_EXACT_SET, values=tuple(range(q)))
        if qmod4 == 1:
            if s12 != 0 and at_zero:
                emit(basis="prop5.iii1", scope=KIND_NUM_K_SUBFIELD, k_enc=0,
                     claim=CLAIM_LOWER_BOUND, count=(q - 1) // 2,
                     nonzero_only=True)
            if s12 == 0 and d1 == d2:
                emit(basis="prop5.iii2", scope=KIND_NUM_K_SUBFIELD, k_enc=k.enc,
                     claim=CLAIM_EXACT_SET,
                     values=(ctx.q_mul(k.enc, d1),))
                if at_zero:
                    emit(basis="prop5.iii2", scope=KIND_NUM0_PRIME_SUBFIELD,
                         k_enc=0, claim=CLAIM_MEMBER, member_enc=0,
                         member_in=True)
            if s12 == 0 and d1 != d2:
                if at_zero:
                    emit(basis="prop5.iii2", scope=KIND_NUM_K_SUBFIELD, k_enc=0,
                         claim=CLAIM_EXACT_CARD, count=(q + 1) // 2)
                    emit(basis="prop5.iii2", scope=KIND_NUM0_PRIME_SUBFIELD,
                         k_enc=0, claim=CLAIM_EXACT_CARD, count=(q - 1) // 2)
                else:
                    emit(basis="remark10", scope=KIND_NUM_K_SUBFIELD,
                         k_enc=k.enc, claim=CLAIM_UPPER_BOUND,
                         count=(q + 1) // 2)

    if q % 2 == 0 and at_zero:
        emit(basis="prop6.a", scope=KIND_NUM0_PRIME_SUBFIELD, k_enc=0,
             claim=CLAIM_LOWER_BOUND, count=1)
        balanced = all(ctx.q_add(ctx.q_add(d[i], d[j]), s[(i, j)]) == 0
                       for (i, j) in s)
        if balanced:
            emit(basis="prop6.b", scope=KIND_NUM0_PRIME_SUBFIELD, k_enc=0,
                 claim=CLAIM_EXACT_SET, values=(0,))
        elif n == 2:
            emit(basis="prop6.c", scope=KIND_NUM0_PRIME_SUBFIELD, k_enc=0,
                 claim=CLAIM_EXACT_SET, values=tuple(range(1, q)))
        elif n == 3:
            emit(basis="prop6.c", scope=KIND_NUM0_PRIME_SUBFIELD, k_enc=0,
                 claim=CLAIM_SUPERSET, values=tuple(range(1, q)))
        else:
            emit(basis="prop6.c", scope=KIND_NUM0_PRIME_SUBFIELD, k_enc=0,
                 claim=CLAIM_EXACT_SET, values=tuple(range(q)))
        if n >= 4:
            emit(basis="cor2", scope=KIND_NUM0_PRIME_SUBFIELD, k_enc=0,
                 claim=CLAIM_MEMBER, member_enc=0, member_in=True)

    if qmod4 == 1:
        if all_s_zero and all_d_equal:
            emit(basis="cor4.i", scope=KIND_NUM_K_SUBFIELD, k_enc=k.enc,
                 claim=CLAIM_EXACT_SET, values=(ctx.q_mul(k.enc, d[0]),))
            if at_zero:
                emit(basis="cor4.i", scope=KIND_NUM0_PRIME_SUBFIELD, k_enc=0,
                     claim=CLAIM_MEMBER, member_enc=0, member_in=True)
        elif at_zero:
            emit(basis="cor4.ii", scope=KIND_NUM_K_SUBFIELD, k_enc=0,
                 claim=CLAIM_LOWER_BOUND, count=(q - 1) // 2,
                 nonzero_only=True)

    if q % 2 == 1 and n >= 5 and at_zero:
        emit(basis="cor3", scope=KIND_NUM0_PRIME_SUBFIELD, k_enc=0,
             claim=CLAIM_MEMBER, member_enc=0, member_in=True)

    if all_s_zero and all_d_equal and d[0] != 0 and at_zero:
        emit(basis="prop7", scope=SCOPE_FIBER_ZERO, k_enc=0,
             claim=CLAIM_EXACT_CARD, count=scalar_fiber_formula(q, n))
        if q % 2 == 0 or n >= 3 or qmod4 == 1:
            emit(basis="prop7", scope=KIND_NUM0_PRIME_SUBFIELD, k_enc=0,
                 claim=CLAIM_EXACT_SET, values=(0,))
        else:
            emit(basis="prop7", scope=KIND_NUM0_PRIME_SUBFIELD, k_enc=0,
                 claim=CLAIM_EMPTY)

    if qmod4 == 3 and n >= 3 and at_zero:
        emit(basis="prop8", scope=KIND_NUM0_PRIME_SUBFIELD, k_enc=0,
             claim=CLAIM_LOWER_BOUND, count=1)

    if (q % 2 == 1 and (n >= 3 or qmod4 == 1) and all_s_zero
            and d[0] != d[1] and all(x == d[1] for x in d[1:])):
        if at_zero:
            emit(basis="prop9", scope=KIND_NUM_K_SUBFIELD, k_enc=0,
                 claim=CLAIM_EXACT_CARD, count=(q + 1) // 2)
            diff = ctx.q_sub(d[1], d[0])
            inv = ctx.q_inv(diff)
            members = [0] + [a for a in range(1, q)
                             if ctx.q_is_square(ctx.q_mul(ctx.q_neg(a), inv))]
            emit(basis="prop9", scope=KIND_NUM_K_SUBFIELD, k_enc=0,
                 claim=CLAIM_EXACT_SET, values=tuple(sorted(members)))
            emit(basis="prop9", scope=KIND_NUM0_PRIME_SUBFIELD, k_enc=0,
                 claim=CLAIM_MEMBER, member_enc=0,
                 member_in=n >= 4 or (n == 3 and qmod4 == 1))

    if (q % 2 == 1 and n >= 3 and all_s_zero and not all_d_equal and at_zero
            and not (q == 3 and n == 3 and len(set(d)) == 3)):
        # q=3 with three distinct diagonal values is excluded: there the
        # nonzero part of the level-0 cone forces every square to 1, the
        # values collapse to d1+d2+d3 = 0, and the bound fails
        emit(basis="prop10", scope=KIND_NUM_K_SUBFIELD, k_enc=0,
             claim=CLAIM_LOWER_BOUND, count=(q + 1) // 2)

    if q % 2 == 1 and n >= 3 and _bounded_skew_triple(ctx, d, s, k.enc):
        emit(basis="prop11", scope=KIND_NUM_K_SUBFIELD, k_enc=k.enc,
             claim=CLAIM_LOWER_BOUND, count=(q + 1) // 2)

    return preds


def _bounded_skew_triple(ctx: FieldCtx, d, s, k_enc: int) -> bool:
    """Some row i has two symmetrized-zero partners j1, j2 whose induced
    form alpha*x^2 + beta*xy + gamma*y^2 (alpha = d_j1 - d_i, gamma =
    d_j2 - d_i, beta = s_j1j2) pins at least (q+1)/2 values at level k.

    Two exceptional triple shapes are skipped because the plane form
    cannot always be lifted through the third coordinate:
      * square discriminant zero with gamma = -alpha (only possible for
        q = 1 mod 4): the form is a scaled square of a line L whose zero
        locus forces x3^2 = k, so value 0 drops out at nonsquare k and
        only (q-1)/2 values remain;
      * q = 3 with gamma = -alpha: the square classes are too thin and
        a level collapses to a single value.
    """
    n = len(d)
    q = ctx.q
    two = ctx.q_add(1, 1)
    four = ctx.q_add(two, two)

    def sv(i, j):
        return s[(i, j) if i < j else (j, i)]

    def good(alpha, beta, gamma):
        if alpha == beta == gamma == 0:
            return False
        if ctx.q_add(alpha, gamma) != 0:
            return True
        if q == 3:
            return False
        disc = ctx.q_sub(ctx.q_mul(beta, beta),
                         ctx.q_mul(four, ctx.q_mul(alpha, gamma)))
        return disc != 0 or ctx.q_is_square(k_enc)

    for i in range(n):
        partners = [j for j in range(n) if j != i and sv(i, j) == 0]
        for a in range(len(partners)):
            for b in range(a + 1, len(partners)):
                j1, j2 = partners[a], partners[b]
                if good(ctx.q_sub(d[j1], d[i]), sv(j1, j2),
                        ctx.q_sub(d[j2], d[i])):
                    return True
    return False


def scalar_fiber_formula(q: int, n: int) -> int:
    """Size of the zero fiber of the null map for a scalar matrix."""
    if n < 2:
        raise ValueError(f"dimension must be at least 2, got {n}")
    if q % 2 == 0:
        return q ** (n - 1)
    if n % 2 == 1:
        s = (n - 1) // 2
        return q ** (2 * s)
    s = n // 2
    if s % 2 == 0 or q % 4 == 1:
        return q ** (2 * s - 1) + q ** s - q ** (s - 1)
    return q ** (2 * s - 1) - q ** s + q ** (s - 1)


def _check_line(pred: Prediction, ctx: FieldCtx, values: set[int]) -> str:
    if pred.direction_enc is not None:
        candidates = [pred.direction_enc]
    else:
        candidates = [v for v in values if v]
    for o in candidates:
        if values == set(_line_values(ctx, o, pred.line_full)):
            return PASS
    return FAIL


def check_prediction(pred: Prediction, observed) -> str:
    """Compare one claim against a computed range or fiber count."""
    if isinstance(observed, FiberCount):
        if pred.scope != SCOPE_FIBER_ZERO or observed.value.enc != pred.k_enc:
            raise ValueError("prediction does not describe this fiber count")
        if pred.claim != CLAIM_EXACT_CARD:
            raise ValueError(f"fiber claims must be exact counts, got {pred.claim}")
        return PASS if observed.count == pred.count else FAIL

    if not isinstance(observed, RangeSet):
        raise ValueError(f"cannot check against {type(observed).__name__}")
    if pred.scope != observed.kind or pred.k_enc != observed.k_enc:
        raise ValueError(
            f"prediction for {pred.scope}@k={pred.k_enc} paired with "
            f"{observed.kind}@k={observed.k_enc}")

    exhaustive = observed.mode == EXHAUSTIVE
    values = set(observed.values)
    claim = pred.claim

    if not exhaustive and claim in _NEEDS_EXHAUSTIVE:
        return INAPPLICABLE

    if claim == CLAIM_EXACT_SET:
        return PASS if values == set(pred.values) else FAIL
    if claim == CLAIM_EXACT_CARD:
        return PASS if len(values) == pred.count else FAIL
    if claim == CLAIM_UPPER_BOUND:
        return PASS if len(values) <= pred.count else FAIL
    if claim == CLAIM_LINE:
        return _check_line(pred, observed.ctx, values)
    if claim == CLAIM_LOWER_BOUND:
        relevant = len(values - {0}) if pred.nonzero_only else len(values)
        if relevant >= pred.count:
            return PASS
        return FAIL if exhaustive else INAPPLICABLE
    if claim == CLAIM_MEMBER:
        present = pred.member_enc in values
        if pred.member_in:
            if present:
                return PASS
            return FAIL if exhaustive else INAPPLICABLE
        if present:
            return FAIL
        return PASS if exhaustive else INAPPLICABLE
    if claim == CLAIM_EMPTY:
        if values:
            return FAIL
        return PASS if exhaustive else INAPPLICABLE
    if claim == CLAIM_SUPERSET:
        if set(pred.values) <= values:
            return PASS
        return FAIL if exhaustive else INAPPLICABLE
    raise ValueError(f"unknown claim {claim!r}")
