"""Hermitian form machinery and enumeration of its level sets.

The form on F_{q^2}^n is <u, v> = sum_i u_i^q v_i: twisted linear in the
first slot, linear in the second.  Self-pairings <u, u> always land in
the subfield F_q, which makes the level sets ("cones") C_n(k) finite
objects indexed by k in F_q.  The subfield mode restricts coordinates to
F_q, where the form degenerates to the sum of squares.

Enumeration completes a free choice of the first n - 1 coordinates with
the norm preimages (or subfield square roots) of the residual, instead
of filtering the whole space.  A naive full-space filter is kept as an
independent oracle for the optimized walk.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .fields import FieldCtx, FieldElem

FULL_FIELD = "full_field"
SUBFIELD = "subfield"

DEFAULT_CAPACITY = 1 << 24


class CapacityError(RuntimeError):
    """An exhaustive enumeration would exceed its configured budget."""


class Vector:
    """Tuple of field elements with the Hermitian self-pairing attached."""

    __slots__ = ("ctx", "entries")

    def __init__(self, ctx: FieldCtx, entries):
        entries = tuple(entries)
        for e in entries:
            if not isinstance(e, FieldElem) or e.ctx is not ctx:
                raise ValueError("vector entries must belong to the given context")
        self.ctx = ctx
        self.entries = entries

    @classmethod
    def from_encs(cls, ctx: FieldCtx, encs) -> "Vector":
        return cls(ctx, tuple(ctx.elem(int(e)) for e in encs))

    def encs(self) -> tuple[int, ...]:
        return tuple(e.enc for e in self.entries)

    @property
    def is_zero(self) -> bool:
        return all(e.enc == 0 for e in self.entries)

    @property
    def in_subfield(self) -> bool:
        return all(e.in_subfield for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> FieldElem:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Vector) and other.ctx is self.ctx
                and other.entries == self.entries)

    def __hash__(self) -> int:
        return hash((id(self.ctx),) + self.encs())

    def __repr__(self) -> str:
        return f"Vector({', '.join(e.poly_str() for e in self.entries)})"


def inner(u: Vector, v: Vector) -> FieldElem:
    """Hermitian pairing <u, v> = sum of u_i^q * v_i."""
    if u.ctx is not v.ctx:
        raise ValueError("vectors belong to different field contexts")
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    ctx = u.ctx
    total = 0
    for ue, ve in zip(u.entries, v.entries):
        total = ctx.add_enc(total, ctx.mul_enc(ctx.frob_enc(ue.enc), ve.enc))
    return ctx.elem(total)


class HermMatrix:
    """Square matrix over F_{q^2} with the conjugate-transpose involution."""

    __slots__ = ("ctx", "rows")

    def __init__(self, ctx: FieldCtx, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        for r in rows:
            for e in r:
                if not isinstance(e, FieldElem) or e.ctx is not ctx:
                    raise ValueError("matrix entries must belong to the given context")
        self.ctx = ctx
        self.rows = rows

    @classmethod
    def from_encs(cls, ctx: FieldCtx, rows) -> "HermMatrix":
        return cls(ctx, tuple(tuple(ctx.elem(int(e)) for e in r) for r in rows))

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "HermMatrix":
        return cls.scalar(ctx, n, ctx.one)

    @classmethod
    def scalar(cls, ctx: FieldCtx, n: int, c: FieldElem) -> "HermMatrix":
        z = ctx.zero
        return cls(ctx, tuple(tuple(c if i == j else z for j in range(n))
                              for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> FieldElem:
        return self.rows[i][j]

    def encs(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(e.enc for e in r) for r in self.rows)

    def dagger(self) -> "HermMatrix":
        """Conjugate transpose: entry (i, j) becomes m_ji^q."""
        ctx = self.ctx
        n = self.n
        return HermMatrix(ctx, tuple(
            tuple(self.rows[j][i].frobenius() for j in range(n)) for i in range(n)))

    def apply(self, v: Vector) -> Vector:
        if v.ctx is not self.ctx or len(v) != self.n:
            raise ValueError("vector does not match matrix shape or context")
        ctx = self.ctx
        out = []
        for row in self.rows:
            s = 0
            for e, ve in zip(row, v.entries):
                s = ctx.add_enc(s, ctx.mul_enc(e.enc, ve.enc))
            out.append(ctx.elem(s))
        return Vector(ctx, out)

    def __matmul__(self, other: "HermMatrix") -> "HermMatrix":
        if other.ctx is not self.ctx or other.n != self.n:
            raise ValueError("matrix shapes or contexts differ")
        ctx = self.ctx
        n = self.n
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                s = 0
                for l in range(n):
                    s = ctx.add_enc(s, ctx.mul_enc(self.rows[i][l].enc,
                                                   other.rows[l][j].enc))
                row.append(ctx.elem(s))
            rows.append(tuple(row))
        return HermMatrix(ctx, rows)

    def __add__(self, other: "HermMatrix") -> "HermMatrix":
        if other.ctx is not self.ctx or other.n != self.n:
            raise ValueError("matrix shapes or contexts differ")
        return HermMatrix(self.ctx, tuple(
            tuple(a + b for a, b in zip(ra, rb))
            for ra, rb in zip(self.rows, other.rows)))

    def scale(self, c: FieldElem) -> "HermMatrix":
        return HermMatrix(self.ctx, tuple(tuple(c * e for e in r) for r in self.rows))

    @property
    def has_subfield_coeffs(self) -> bool:
        return all(e.in_subfield for r in self.rows for e in r)

    @property
    def is_scalar(self) -> bool:
        c = self.rows[0][0].enc
        return all(e.enc == (c if i == j else 0)
                   for i, r in enumerate(self.rows) for j, e in enumerate(r))

    def __eq__(self, other) -> bool:
        return (isinstance(other, HermMatrix) and other.ctx is self.ctx
                and other.encs() == self.encs())

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.encs()))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(e.poly_str() for e in r) for r in self.rows)
        return f"HermMatrix([{body}])"


def dagger(m: HermMatrix) -> HermMatrix:
    return m.dagger()


def is_unitary(u: HermMatrix) -> bool:
    """Whether u^dagger u is the identity."""
    return (u.dagger() @ u) == HermMatrix.identity(u.ctx, u.n)


def conj_by_unitary(m: HermMatrix, u: HermMatrix) -> HermMatrix:
    """u^dagger m u, after checking that u is unitary."""
    if not is_unitary(u):
        raise ValueError("conjugating matrix is not unitary")
    return (u.dagger() @ m) @ u


def block_diag(a: HermMatrix, b: HermMatrix) -> HermMatrix:
    """Direct sum placed on orthogonal coordinate blocks."""
    if a.ctx is not b.ctx:
        raise ValueError("blocks belong to different field contexts")
    ctx = a.ctx
    z = ctx.zero
    n = a.n + b.n
    rows = []
    for i in range(a.n):
        rows.append(tuple(a.rows[i]) + tuple(z for _ in range(b.n)))
    for i in range(b.n):
        rows.append(tuple(z for _ in range(a.n)) + tuple(b.rows[i]))
    return HermMatrix(ctx, rows)


@dataclass(frozen=True)
class ConeSlice:
    """One level set of the self-pairing: vectors u with <u, u> = k.

    Mode picks coordinates from the whole field or from F_q only, and
    exclude_zero drops the zero vector (meaningful only for k = 0).
    """

    n: int
    k: FieldElem
    mode: str = FULL_FIELD
    exclude_zero: bool = False


def _validate_slice(ctx: FieldCtx, cs: ConeSlice) -> None:
    if cs.n < 1:
        raise ValueError(f"dimension must be at least 1, got {cs.n}")
    if cs.mode not in (FULL_FIELD, SUBFIELD):
        raise ValueError(f"unknown mode {cs.mode!r}")
    if cs.k.ctx is not ctx:
        raise ValueError("level value belongs to a different field context")
    if not cs.k.in_subfield:
        raise ValueError(f"level value must lie in F_q, got {cs.k!r}")
    if cs.exclude_zero and cs.k.enc != 0:
        raise ValueError("exclude_zero only makes sense at level zero")


def cone_upper_bound(ctx: FieldCtx, n: int, mode: str) -> int:
    """Cheap upper bound on the number of enumerated vectors."""
    if mode == FULL_FIELD:
        return ctx.q2 ** (n - 1) * (ctx.q + 1)
    per = 1 if ctx.p == 2 else 2
    return ctx.q ** (n - 1) * per


def iter_cone_encs(ctx: FieldCtx, n: int, k_enc: int, mode: str,
                   exclude_zero: bool = False,
                   prefix_start: int = 0,
                   prefix_stop: int | None = None) -> Iterator[tuple[int, ...]]:
    """Stream cone vectors as code tuples, in lexicographic code order.

    The prefix indices [prefix_start, prefix_stop) slice the space of
    first n - 1 coordinates, so disjoint ranges partition the cone.
    """
    space = ctx.q2 if mode == FULL_FIELD else ctx.q
    total_prefixes = space ** (n - 1)
    if prefix_stop is None:
        prefix_stop = total_prefixes
    if not 0 <= prefix_start <= prefix_stop <= total_prefixes:
        raise ValueError("bad prefix range")

    if mode == FULL_FIELD:
        norm_of = ctx.norm_enc
        complete = ctx.norm_preimage_encs
    else:
        norm_of = lambda x: ctx.q_mul(x, x)
        complete = ctx.q_sqrt_encs
    q_sub, q_add = ctx.q_sub, ctx.q_add

    if prefix_start == 0 and prefix_stop == total_prefixes:
        prefixes = itertools.product(range(space), repeat=n - 1)
    else:
        def slice_prefixes():
            for idx in range(prefix_start, prefix_stop):
                digits = []
                v = idx
                for _ in range(n - 1):
                    digits.append(v % space)
                    v //= space
                yield tuple(reversed(digits))
        prefixes = slice_prefixes()

    for prefix in prefixes:
        acc = 0
        for x in prefix:
            acc = q_add(acc, norm_of(x))
        residual = q_sub(k_enc, acc)
        assert residual < ctx.q
        for last in complete(residual):
            if exclude_zero and last == 0 and not any(prefix):
                continue
            yield prefix + (last,)


def naive_cone_encs(ctx: FieldCtx, n: int, k_enc: int, mode: str,
                    exclude_zero: bool = False) -> Iterator[tuple[int, ...]]:
    """Oracle enumeration: filter the full space by the definition.

    Self-pairings are evaluated with generic power maps rather than the
    completion tables, so this path is independent of the one it checks.
    """
    space = ctx.q2 if mode == FULL_FIELD else ctx.q
    e = ctx.q + 1 if mode == FULL_FIELD else 2
    for u in itertools.product(range(space), repeat=n):
        acc = 0
        for x in u:
            acc = ctx.add_enc(acc, ctx.pow_enc(x, e))
        if acc == k_enc:
            if exclude_zero and not any(u):
                continue
            yield u


@lru_cache(maxsize=128)
def cone_encs(ctx: FieldCtx, n: int, k_enc: int, mode: str,
              exclude_zero: bool = False,
              capacity: int = DEFAULT_CAPACITY) -> tuple[tuple[int, ...], ...]:
    """Materialized cone, cached per context and slice."""
    bound = cone_upper_bound(ctx, n, mode)
    if bound > capacity:
        raise CapacityError(
            f"cone may hold up to {bound} vectors, capacity is {capacity}")
    return tuple(iter_cone_encs(ctx, n, k_enc, mode, exclude_zero))


def enumerate_cone(ctx: FieldCtx, cs: ConeSlice, *,
                   capacity: int = DEFAULT_CAPACITY,
                   prefix_start: int = 0,
                   prefix_stop: int | None = None) -> Iterator[Vector]:
    """Walk one cone in deterministic order, yielding vectors."""
    _validate_slice(ctx, cs)
    bound = cone_upper_bound(ctx, cs.n, cs.mode)
    if bound > capacity:
        raise CapacityError(
            f"cone may hold up to {bound} vectors, capacity is {capacity}")
    for encs in iter_cone_encs(ctx, cs.n, cs.k.enc, cs.mode, cs.exclude_zero,
                               prefix_start, prefix_stop):
        yield Vector(ctx, tuple(ctx.elem(e) for e in encs))


def sample_cone_encs(ctx: FieldCtx, n: int, k_enc: int, mode: str,
                     exclude_zero: bool, count: int, rng) -> Iterator[tuple[int, ...]]:
    """Random cone members: uniform prefix plus a random completion.

    Draws are independent, so repeats can occur; prefixes without a
    completion (possible only in odd subfield mode) are redrawn.
    """
    space = ctx.q2 if mode == FULL_FIELD else ctx.q
    if mode == FULL_FIELD:
        norm_of = ctx.norm_enc
        complete = ctx.norm_preimage_encs
    else:
        norm_of = lambda x: ctx.q_mul(x, x)
        complete = ctx.q_sqrt_encs
    produced = 0
    while produced < count:
        prefix = tuple(rng.randrange(space) for _ in range(n - 1))
        acc = 0
        for x in prefix:
            acc = ctx.q_add(acc, norm_of(x))
        options = complete(ctx.q_sub(k_enc, acc))
        if not options:
            continue
        last = options[rng.randrange(len(options))]
        if exclude_zero and last == 0 and not any(prefix):
            continue
        produced += 1
        yield prefix + (last,)


def random_unitary_2x2(ctx: FieldCtx, rng) -> HermMatrix:
    """Random 2 by 2 unitary built from a unit vector and its completion."""
    q2 = ctx.q2
    while True:
        a, b = rng.randrange(q2), rng.randrange(q2)
        s = ctx.q_add(ctx.norm_enc(a), ctx.norm_enc(b))
        if s != 0:
            break
    # rescale (a, b) to a unit vector
    t_opts = ctx.norm_preimage_encs(ctx.q_inv(s))
    t = t_opts[rng.randrange(len(t_opts))]
    a, b = ctx.mul_enc(a, t), ctx.mul_enc(b, t)
    # orthogonal completion (-b^q s', a^q s') with s' of norm one
    s_opts = ctx.norm_preimage_encs(1)
    sp = s_opts[rng.randrange(len(s_opts))]
    w0 = ctx.mul_enc(ctx.neg_enc(ctx.frob_enc(b)), sp)
    w1 = ctx.mul_enc(ctx.frob_enc(a), sp)
    u = HermMatrix.from_encs(ctx, ((a, w0), (b, w1)))
    assert is_unitary(u)
    return u
