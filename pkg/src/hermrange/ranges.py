"""Brute-force numerical ranges of a matrix against the Hermitian form.

For a level k in F_q, the range at k collects the pairings <u, M u> over
all vectors u with <u, u> = k.  The null-range variant runs over the
nonzero vectors of the zero level set, and the subfield variants
restrict coordinates to F_q, where both the level condition and the
evaluated pairing become quadratic forms over F_q.

Exhaustive results are canonical: values are kept as sorted code lists,
so equal ranges serialize to identical bytes.  When the cone is too
large for the configured capacity, a sampling budget produces a witness
subset flagged as such; exact-set consumers must refuse those.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fields import FieldCtx, FieldElem
from .hermitian import (DEFAULT_CAPACITY, FULL_FIELD, SUBFIELD, CapacityError,
                        HermMatrix, cone_encs, cone_upper_bound,
                        naive_cone_encs, sample_cone_encs)

KIND_NUM_K = "num_k"
KIND_NUM0_PRIME = "num0_prime"
KIND_NUM_K_SUBFIELD = "num_k_subfield"
KIND_NUM0_PRIME_SUBFIELD = "num0_prime_subfield"

EXHAUSTIVE = "exhaustive"
SAMPLED = "sampled"

_SUBFIELD_KINDS = (KIND_NUM_K_SUBFIELD, KIND_NUM0_PRIME_SUBFIELD)


@dataclass(frozen=True)
class RangeSet:
    """A computed range: sorted value codes plus how they were obtained."""

    kind: str
    k_enc: int
    values: tuple[int, ...]
    mode: str
    witness_count: int = field(compare=False)
    ctx: FieldCtx = field(compare=False, repr=False)

    @property
    def cardinality(self) -> int:
        return len(self.values)

    def contains_enc(self, enc: int) -> bool:
        return enc in set(self.values)

    def elems(self) -> tuple[FieldElem, ...]:
        return tuple(self.ctx.elem(v) for v in self.values)

    def require_exhaustive(self) -> "RangeSet":
        if self.mode != EXHAUSTIVE:
            raise ValueError(f"operation needs an exhaustive range, got {self.mode}")
        return self

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "k": self.k_enc,
            "mode": self.mode,
            "witness_count": self.witness_count,
            "cardinality": self.cardinality,
            "values": list(self.values),
        }

    def csv_rows(self) -> list[tuple]:
        return [(self.kind, self.k_enc, v, self.ctx.elem(v).poly_str())
                for v in self.values]


@dataclass(frozen=True)
class FiberCount:
    """Number of subfield null vectors whose pairing hits one value."""

    value: FieldElem
    count: int


def _value_enc_full(ctx: FieldCtx, mrows, u: tuple[int, ...]) -> int:
    """<u, M u> on code tuples, full field coordinates."""
    add, mul, frob = ctx.add_enc, ctx.mul_enc, ctx.frob_enc
    total = 0
    for i, row in enumerate(mrows):
        ui = u[i]
        if not ui:
            continue
        s = 0
        for j, mij in enumerate(row):
            uj = u[j]
            if mij and uj:
                s = add(s, mul(mij, uj))
        if s:
            total = add(total, mul(frob(ui), s))
    return total


def _value_enc_subfield(ctx: FieldCtx, mrows, u: tuple[int, ...]) -> int:
    """Same pairing when all codes lie in F_q: a plain quadratic form."""
    q_add, q_mul = ctx.q_add, ctx.q_mul
    total = 0
    for i, row in enumerate(mrows):
        ui = u[i]
        if not ui:
            continue
        for j, mij in enumerate(row):
            uj = u[j]
            if mij and uj:
                total = q_add(total, q_mul(mij, q_mul(ui, uj)))
    return total


def _validate_k(m: HermMatrix, k: FieldElem) -> None:
    if k.ctx is not m.ctx:
        raise ValueError("level value belongs to a different field context")
    if not k.in_subfield:
        raise ValueError(f"level value must lie in F_q, got {k!r}")


def _range(m: HermMatrix, kind: str, k_enc: int, mode: str, exclude_zero: bool,
           capacity: int, sample_budget, rng) -> RangeSet:
    ctx = m.ctx
    value_of = _value_enc_full if mode == FULL_FIELD else _value_enc_subfield
    mrows = m.encs()
    bound = cone_upper_bound(ctx, m.n, mode)
    if bound <= capacity:
        cone = cone_encs(ctx, m.n, k_enc, mode, exclude_zero, capacity)
        values = set()
        for u in cone:
            values.add(value_of(ctx, mrows, u))
        return RangeSet(kind=kind, k_enc=k_enc, values=tuple(sorted(values)),
                        mode=EXHAUSTIVE, witness_count=len(cone), ctx=ctx)
    if sample_budget is None:
        raise CapacityError(
            f"cone may hold up to {bound} vectors, capacity is {capacity}; "
            "pass a sample budget for a witness subset")
    if rng is None:
        raise ValueError("sampling requires a seeded random generator")
    values = set()
    for u in sample_cone_encs(ctx, m.n, k_enc, mode, exclude_zero,
                              sample_budget, rng):
        values.add(value_of(ctx, mrows, u))
    return RangeSet(kind=kind, k_enc=k_enc, values=tuple(sorted(values)),
                    mode=SAMPLED, witness_count=sample_budget, ctx=ctx)


def num_k(m: HermMatrix, k: FieldElem, *, capacity: int = DEFAULT_CAPACITY,
          sample_budget: int | None = None, rng=None) -> RangeSet:
    """Range of <u, M u> over <u, u> = k, coordinates in the full field."""
    _validate_k(m, k)
    return _range(m, KIND_NUM_K, k.enc, FULL_FIELD, False,
                  capacity, sample_budget, rng)


def num0_prime(m: HermMatrix, *, capacity: int = DEFAULT_CAPACITY,
               sample_budget: int | None = None, rng=None) -> RangeSet:
    """Null-range: <u, M u> over nonzero u with <u, u> = 0.

    Undefined for 1 by 1 matrices, whose zero level set is trivial.
    """
    if m.n < 2:
        raise ValueError("null-range needs dimension at least 2")
    return _range(m, KIND_NUM0_PRIME, 0, FULL_FIELD, True,
                  capacity, sample_budget, rng)


def num_k_subfield(m: HermMatrix, k: FieldElem, *,
                   capacity: int = DEFAULT_CAPACITY,
                   sample_budget: int | None = None, rng=None) -> RangeSet:
    """Range at level k with coordinates restricted to F_q."""
    _validate_k(m, k)
    if not m.has_subfield_coeffs:
        raise ValueError("subfield range needs a matrix with F_q entries")
    return _range(m, KIND_NUM_K_SUBFIELD, k.enc, SUBFIELD, False,
                  capacity, sample_budget, rng)


def num0_prime_subfield(m: HermMatrix, *, capacity: int = DEFAULT_CAPACITY,
                        sample_budget: int | None = None, rng=None) -> RangeSet:
    """Null-range with coordinates restricted to F_q."""
    if m.n < 2:
        raise ValueError("null-range needs dimension at least 2")
    if not m.has_subfield_coeffs:
        raise ValueError("subfield range needs a matrix with F_q entries")
    return _range(m, KIND_NUM0_PRIME_SUBFIELD, 0, SUBFIELD, True,
                  capacity, sample_budget, rng)


def range_naive(m: HermMatrix, kind: str, k: FieldElem) -> RangeSet:
    """Full-space filter oracle for any of the four range kinds."""
    ctx = m.ctx
    _validate_k(m, k)
    mode = SUBFIELD if kind in _SUBFIELD_KINDS else FULL_FIELD
    exclude_zero = kind in (KIND_NUM0_PRIME, KIND_NUM0_PRIME_SUBFIELD)
    if exclude_zero and k.enc != 0:
        raise ValueError("null-range oracle runs at level zero")
    if exclude_zero and m.n < 2:
        raise ValueError("null-range needs dimension at least 2")
    if mode == SUBFIELD and not m.has_subfield_coeffs:
        raise ValueError("subfield range needs a matrix with F_q entries")
    value_of = _value_enc_full if mode == FULL_FIELD else _value_enc_subfield
    mrows = m.encs()
    values = set()
    count = 0
    for u in naive_cone_encs(ctx, m.n, k.enc, mode, exclude_zero):
        values.add(value_of(ctx, mrows, u))
        count += 1
    return RangeSet(kind=kind, k_enc=k.enc, values=tuple(sorted(values)),
                    mode=EXHAUSTIVE, witness_count=count, ctx=ctx)


def fiber_count(m: HermMatrix, a: FieldElem, *,
                capacity: int = DEFAULT_CAPACITY) -> FiberCount:
    """How many subfield null vectors (zero included) pair to the value a."""
    ctx = m.ctx
    if not m.has_subfield_coeffs:
        raise ValueError("fiber counting needs a matrix with F_q entries")
    if a.ctx is not ctx or not a.in_subfield:
        raise ValueError(f"fiber value must lie in F_q, got {a!r}")
    mrows = m.encs()
    cone = cone_encs(ctx, m.n, 0, SUBFIELD, False, capacity)
    target = a.enc
    count = 0
    for u in cone:
        if _value_enc_subfield(ctx, mrows, u) == target:
            count += 1
    return FiberCount(value=a, count=count)


def fiber_table(m: HermMatrix, *,
                capacity: int = DEFAULT_CAPACITY) -> tuple[FiberCount, ...]:
    """Fiber counts for every value of F_q; counts sum to the cone size."""
    ctx = m.ctx
    if not m.has_subfield_coeffs:
        raise ValueError("fiber counting needs a matrix with F_q entries")
    mrows = m.encs()
    cone = cone_encs(ctx, m.n, 0, SUBFIELD, False, capacity)
    counts = [0] * ctx.q
    for u in cone:
        counts[_value_enc_subfield(ctx, mrows, u)] += 1
    return tuple(FiberCount(value=ctx.elem(v), count=c)
                 for v, c in enumerate(counts))


def scaling_law_check(m: HermMatrix, *, capacity: int = DEFAULT_CAPACITY) -> bool:
    """Whether the level-k range is the level-1 range scaled by k, for
    every nonzero k in F_q."""
    ctx = m.ctx
    base = num_k(m, ctx.one, capacity=capacity).require_exhaustive()
    for k in range(1, ctx.q):
        scaled = tuple(sorted(ctx.mul_enc(k, v) for v in base.values))
        got = num_k(m, ctx.elem(k), capacity=capacity).require_exhaustive()
        if got.values != scaled:
            return False
    return True


def resolve_affine_shift(ctx: FieldCtx, *, k: FieldElem, trials: int = 20,
                         rng=None, capacity: int = DEFAULT_CAPACITY) -> str:
    """Decide how the level value enters the range of a shifted matrix.

    For random 2 by 2 matrices M, compares the range of I + M at level k
    against two candidate shifts of the range of M: by k itself and by
    k squared.  Returns "ck", "ck2", or "tie" when the level value
    cannot separate them (always the case for k in {0, 1}).
    """
    if rng is None:
        raise ValueError("resolution requires a seeded random generator")
    if k.ctx is not ctx or not k.in_subfield:
        raise ValueError("level value must lie in F_q")
    ident = HermMatrix.identity(ctx, 2)
    ck_ok = ck2_ok = True
    for _ in range(trials):
        m = HermMatrix.from_encs(
            ctx, tuple(tuple(rng.randrange(ctx.q2) for _ in range(2))
                       for _ in range(2)))
        base = num_k(m, k, capacity=capacity).require_exhaustive()
        shifted = num_k(ident + m, k, capacity=capacity).require_exhaustive()
        by_ck = tuple(sorted(ctx.add_enc(k.enc, v) for v in base.values))
        ksq = ctx.q_mul(k.enc, k.enc)
        by_ck2 = tuple(sorted(ctx.add_enc(ksq, v) for v in base.values))
        if shifted.values != by_ck:
            ck_ok = False
        if shifted.values != by_ck2:
            ck2_ok = False
    if ck_ok and not ck2_ok:
        return "ck"
    if ck2_ok and not ck_ok:
        return "ck2"
    if ck_ok and ck2_ok:
        return "tie"
    raise RuntimeError("neither candidate shift law survived the trials")
