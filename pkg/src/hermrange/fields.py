"""Arithmetic for a quadratic extension tower of finite fields.

The tower is F_p inside F_q inside F_{q^2} with q = p^m.  F_q is the
quotient F_p[x]/(f) for a canonical monic irreducible f of degree m, and
F_{q^2} is F_q[t]/(g) for a canonical monic irreducible quadratic g.  In
both cases the canonical modulus is the first irreducible candidate when
the non-leading coefficients are read as positional digits, low degree
first, so the construction is reproducible across runs and machines.

Elements of F_{q^2} are encoded as integers in [0, q^2): the element
a0 + a1*t has code a0 + q*a1, and F_q elements are themselves encoded by
their base-p digit vectors.  Code 0 is the zero element, code 1 the
identity, and the codes below q are exactly the subfield F_q.

Arithmetic is table driven for small fields and falls back to direct
polynomial computation above the configured threshold, so one context
class serves both desk-size and larger towers.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_TABLE_THRESHOLD = 1 << 20

# Dense pairwise add/mul tables are only worth the memory for very small
# fields; everything else goes through digit arithmetic or exp/log tables.
_Q_PAIRWISE_LIMIT = 64
_Q2_PAIRWISE_LIMIT = 512


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _digits(v: int, base: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        out.append(v % base)
        v //= base
    return out


def _undigits(digits, base: int) -> int:
    v = 0
    for d in reversed(list(digits)):
        v = v * base + d
    return v


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p (coefficient lists, low degree first)


def _ptrim(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, f, p: int) -> list[int]:
    # f must be monic
    a = list(a)
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(df):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _ptrim(a[:df] or [0])


def _pdivmod(a, b, p: int):
    a = list(a)
    b = _ptrim(list(b))
    db = len(b) - 1
    if b == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(1, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = (a[i] * inv_lead) % p
        if c:
            quot[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _ptrim(quot), _ptrim(a[: max(1, db)] or [0])


def _pgcd(a, b, p: int) -> list[int]:
    a = _ptrim(list(a))
    b = _ptrim(list(b))
    while b != [0]:
        _, r = _pdivmod(a, b, p)
        a, b = b, r
    if a != [0]:
        inv_lead = pow(a[-1], -1, p)
        a = [(c * inv_lead) % p for c in a]
    return a


def _ppowmod(base, e: int, f, p: int) -> list[int]:
    result = [1]
    acc = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, acc, p), f, p)
        acc = _pmod(_pmul(acc, acc, p), f, p)
        e >>= 1
    return result


def _irreducible_fp(f, p: int) -> bool:
    """Irreducibility of a monic polynomial over F_p."""
    m = len(f) - 1
    if m == 1:
        return True
    x = [0, 1]
    # x^(p^m) must reduce to x, and x^(p^(m/r)) - x must be coprime to f
    # for every prime divisor r of m.
    xq = _pmod(x, f, p)
    for _ in range(m):
        xq = _ppowmod(xq, p, f, p)
    if xq != _pmod(x, f, p):
        return False
    for r in _prime_factors(m):
        xk = _pmod(x, f, p)
        for _ in range(m // r):
            xk = _ppowmod(xk, p, f, p)
        diff = _ptrim([(c - d) % p for c, d in
                       zip(xk + [0] * len(f), _pmod(x, f, p) + [0] * len(f))])
        if _pgcd(diff, f, p) != [1]:
            return False
    return True


def _first_irreducible_fp(p: int, m: int) -> tuple[int, ...]:
    for v in range(p ** m):
        f = _digits(v, p, m) + [1]
        if _irreducible_fp(f, p):
            return tuple(f)
    raise RuntimeError("no irreducible polynomial found")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    """Serializable description of a tower: moduli included so that a
    context can be rebuilt bit for bit from the wire form."""

    p: int
    m: int
    base_modulus: tuple[int, ...]
    ext_modulus: tuple[tuple[int, ...], ...]

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "base_modulus": list(self.base_modulus),
            "ext_modulus": [list(c) for c in self.ext_modulus],
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "FieldSpec":
        try:
            return cls(
                p=int(d["p"]),
                m=int(d["m"]),
                base_modulus=tuple(int(c) for c in d["base_modulus"]),
                ext_modulus=tuple(tuple(int(c) for c in v) for v in d["ext_modulus"]),
            )
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed field spec: {exc}") from exc


class FieldCtx:
    """Immutable context holding the tower F_p < F_q < F_{q^2}.

    Contexts compare by identity; elements belonging to different
    contexts never mix even when the towers are mathematically equal.
    """

    def __init__(self, p: int, m: int, base_modulus=None, ext_modulus=None,
                 table_threshold: int = DEFAULT_TABLE_THRESHOLD):
        if not _is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if m < 1:
            raise ValueError(f"m must be at least 1, got {m}")
        self.p = p
        self.m = m
        self.q = p ** m
        self.q2 = self.q * self.q
        self.table_threshold = table_threshold

        canon_base = _first_irreducible_fp(p, m)
        if base_modulus is None:
            base_modulus = canon_base
        else:
            base_modulus = tuple(int(c) for c in base_modulus)
            if base_modulus != canon_base:
                raise ValueError(
                    f"base modulus {base_modulus} is not the canonical choice {canon_base}")
        self._base_mod = list(base_modulus)

        self._init_q_level()

        canon_ext = self._find_ext_modulus()
        if ext_modulus is None:
            ext_enc = canon_ext
        else:
            vecs = tuple(tuple(int(c) for c in v) for v in ext_modulus)
            if len(vecs) != 3 or any(len(v) != m for v in vecs):
                raise ValueError("ext modulus must be three F_q coefficient vectors")
            ext_enc = tuple(_undigits(v, p) for v in vecs)
            if ext_enc != canon_ext:
                raise ValueError(
                    f"ext modulus {ext_enc} is not the canonical choice {canon_ext}")
        self._e0, self._e1 = ext_enc[0], ext_enc[1]
        if ext_enc[2] != 1:
            raise ValueError("ext modulus must be monic")

        self.spec = FieldSpec(
            p=p, m=m, base_modulus=tuple(base_modulus),
            ext_modulus=tuple(tuple(_digits(e, p, m)) for e in ext_enc),
        )

        self._init_q2_level()

    # -- F_q layer ---------------------------------------------------------

    def _q_add_poly(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da, db = _digits(a, p, m), _digits(b, p, m)
        return _undigits([(x + y) % p for x, y in zip(da, db)], p)

    def _q_neg_poly(self, a: int) -> int:
        p, m = self.p, self.m
        return _undigits([(-x) % p for x in _digits(a, p, m)], p)

    def _q_mul_poly(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        prod = _pmod(_pmul(_digits(a, p, m), _digits(b, p, m), p), self._base_mod, p)
        return _undigits(prod, p)

    def _init_q_level(self) -> None:
        q = self.q
        if q <= _Q_PAIRWISE_LIMIT:
            add_t = [[self._q_add_poly(a, b) for b in range(q)] for a in range(q)]
            mul_t = [[self._q_mul_poly(a, b) for b in range(q)] for a in range(q)]
            self._q_add_t, self._q_mul_t = add_t, mul_t
            self.q_add = lambda a, b: add_t[a][b]
            self.q_mul = lambda a, b: mul_t[a][b]
            neg_t = [self._q_neg_poly(a) for a in range(q)]
            self.q_neg = lambda a: neg_t[a]
        else:
            self._q_add_t = self._q_mul_t = None
            self.q_add = self._q_add_poly
            self.q_mul = self._q_mul_poly
            self.q_neg = self._q_neg_poly
        self._q_inv_t: list[int | None] | None = None
        self._q_sqrt_t: list[tuple[int, ...]] | None = None

    def q_sub(self, a: int, b: int) -> int:
        return self.q_add(a, self.q_neg(b))

    def q_pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.q_inv(a), -e
        result, acc = 1, a
        while e:
            if e & 1:
                result = self.q_mul(result, acc)
            acc = self.q_mul(acc, acc)
            e >>= 1
        return result

    def q_inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        if self._q_inv_t is None:
            # q - 2 never overflows; the scan table pays off after one use
            self._q_inv_t = [None] * self.q
        cached = self._q_inv_t[a]
        if cached is None:
            cached = self.q_pow(a, self.q - 2)
            self._q_inv_t[a] = cached
        return cached

    def q_is_square(self, a: int) -> bool:
        if a == 0 or self.p == 2:
            return True
        return self.q_pow(a, (self.q - 1) // 2) == 1

    def q_sqrt_encs(self, a: int) -> tuple[int, ...]:
        """All square roots of a in F_q, sorted by code."""
        if self.p == 2:
            # squaring is the Frobenius of F_q, hence a bijection
            return (self.q_pow(a, self.q // 2),)
        if a == 0:
            return (0,)
        if self._q_sqrt_t is None:
            roots: list[list[int]] = [[] for _ in range(self.q)]
            for x in range(self.q):
                roots[self.q_mul(x, x)].append(x)
            self._q_sqrt_t = [tuple(r) for r in roots]
        return self._q_sqrt_t[a]

    # -- canonical quadratic modulus over F_q ------------------------------

    def _ext_irreducible(self, e0: int, e1: int) -> bool:
        if self.p == 2:
            # t^2 + e1 t + e0 with e1 = 0 is a perfect square in char 2
            if e1 == 0:
                return False
            u = self.q_mul(e0, self.q_inv(self.q_mul(e1, e1)))
            tr, acc = 0, u
            for _ in range(self.m):
                tr = self.q_add(tr, acc)
                acc = self.q_mul(acc, acc)
            return tr == 1
        four = 4 % self.p
        disc = self.q_sub(self.q_mul(e1, e1), self.q_mul(four, e0))
        return disc != 0 and not self.q_is_square(disc)

    def _find_ext_modulus(self) -> tuple[int, int, int]:
        for v in range(self.q2):
            e0, e1 = v % self.q, v // self.q
            if self._ext_irreducible(e0, e1):
                return (e0, e1, 1)
        raise RuntimeError("no irreducible quadratic found")  # pragma: no cover

    # -- F_{q^2} layer -----------------------------------------------------

    def _split(self, x: int) -> tuple[int, int]:
        return x % self.q, x // self.q

    def _mul2_poly(self, x: int, y: int) -> int:
        q = self.q
        a0, a1 = x % q, x // q
        b0, b1 = y % q, y // q
        c0 = self.q_mul(a0, b0)
        c1 = self.q_add(self.q_mul(a0, b1), self.q_mul(a1, b0))
        c2 = self.q_mul(a1, b1)
        # reduce t^2 = -e1 t - e0
        r0 = self.q_sub(c0, self.q_mul(c2, self._e0))
        r1 = self.q_sub(c1, self.q_mul(c2, self._e1))
        return r0 + q * r1

    def _add2_poly(self, x: int, y: int) -> int:
        q = self.q
        return self.q_add(x % q, y % q) + q * self.q_add(x // q, y // q)

    def _neg2_poly(self, x: int) -> int:
        q = self.q
        return self.q_neg(x % q) + q * self.q_neg(x // q)

    def _pow2_poly(self, x: int, e: int) -> int:
        result, acc = 1, x
        while e:
            if e & 1:
                result = self._mul2_poly(result, acc)
            acc = self._mul2_poly(acc, acc)
            e >>= 1
        return result

    def _init_q2_level(self) -> None:
        q, q2 = self.q, self.q2
        # image of t under the q-power map, used for the cheap Frobenius
        self._tau = self._pow2_poly(q, self.q)

        tables_on = q2 <= self.table_threshold
        if q2 <= _Q2_PAIRWISE_LIMIT and tables_on:
            add_t = [[self._add2_poly(a, b) for b in range(q2)] for a in range(q2)]
            mul_t = [[self._mul2_poly(a, b) for b in range(q2)] for a in range(q2)]
            self._add2_t, self._mul2_t = add_t, mul_t
            self.add_enc = lambda a, b: add_t[a][b]
            self.mul_enc = lambda a, b: mul_t[a][b]
        else:
            self._add2_t = self._mul2_t = None
            self.add_enc = self._add2_poly
            self.mul_enc = self._mul2_poly

        if tables_on:
            neg_t = [self._neg2_poly(a) for a in range(q2)]
            self.neg_enc = lambda a: neg_t[a]
            frob_t = [self._frob_poly(a) for a in range(q2)]
            self.frob_enc = lambda a: frob_t[a]
            norm_t = []
            for a in range(q2):
                na = self.mul_enc(a, frob_t[a])
                assert na < q, "norm landed outside the subfield"
                norm_t.append(na)
            self.norm_enc = lambda a: norm_t[a]
            self._frob_t, self._norm_t = frob_t, norm_t
        else:
            self.neg_enc = self._neg2_poly
            self.frob_enc = self._frob_poly
            self.norm_enc = self._norm_poly
            self._frob_t = self._norm_t = None

        self._gen_enc: int | None = None
        self._norm_buckets: list[tuple[int, ...]] | None = None

    def _frob_poly(self, x: int) -> int:
        a0, a1 = self._split(x)
        if a1 == 0:
            return x
        return self._add2_poly(a0, self._mul2_poly(a1, self._tau))

    def _norm_poly(self, x: int) -> int:
        nx = self._mul2_poly(x, self._frob_poly(x))
        assert nx < self.q, "norm landed outside the subfield"
        return nx

    def sub_enc(self, a: int, b: int) -> int:
        return self.add_enc(a, self.neg_enc(b))

    def pow_enc(self, x: int, e: int) -> int:
        if e < 0:
            x, e = self.inv_enc(x), -e
        result, acc = 1, x
        mul = self.mul_enc
        while e:
            if e & 1:
                result = mul(result, acc)
            acc = mul(acc, acc)
            e >>= 1
        return result

    def inv_enc(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero in F_{q^2}")
        # x^-1 = frob(x) / norm(x), with the norm inverted inside F_q
        return self.mul_enc(self.frob_enc(x), self.q_inv(self.norm_enc(x)))

    def div_enc(self, x: int, y: int) -> int:
        return self.mul_enc(x, self.inv_enc(y))

    def multiplicative_generator_enc(self) -> int:
        """Smallest code generating the cyclic group of nonzero elements."""
        if self._gen_enc is None:
            order = self.q2 - 1
            factors = _prime_factors(order)
            for cand in range(2, self.q2):
                if all(self.pow_enc(cand, order // r) != 1 for r in factors):
                    self._gen_enc = cand
                    break
            else:  # pragma: no cover - the group is always cyclic
                raise RuntimeError("no generator found")
        return self._gen_enc

    def norm_preimage_encs(self, a: int) -> tuple[int, ...]:
        """Codes of all solutions of t^(q+1) = a, for a in F_q."""
        if a >= self.q:
            raise ValueError(f"norm preimages only defined over F_q, got code {a}")
        if a == 0:
            return (0,)
        if self.q2 <= self.table_threshold:
            if self._norm_buckets is None:
                buckets: list[list[int]] = [[] for _ in range(self.q)]
                for x in range(self.q2):
                    buckets[self.norm_enc(x)].append(x)
                self._norm_buckets = [tuple(b) for b in buckets]
            return self._norm_buckets[a]
        # large field path: express a as a power of the norm of a generator
        g = self.multiplicative_generator_enc()
        delta = self.pow_enc(g, self.q + 1)
        j, acc = 0, 1
        while acc != a:
            acc = self.mul_enc(acc, delta)
            j += 1
            if j >= self.q:  # pragma: no cover - the norm is surjective
                raise RuntimeError("norm preimage search failed")
        base = self.pow_enc(g, j)
        step = self.pow_enc(g, self.q - 1)
        out = []
        for _ in range(self.q + 1):
            out.append(base)
            base = self.mul_enc(base, step)
        return tuple(sorted(out))

    # -- element construction ---------------------------------------------

    def elem(self, enc: int) -> "FieldElem":
        if not 0 <= enc < self.q2:
            raise ValueError(f"element code {enc} out of range [0, {self.q2})")
        return FieldElem(self, enc)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    @property
    def ext_t(self) -> "FieldElem":
        """The adjoined root of the quadratic modulus."""
        return FieldElem(self, self.q)

    def elements(self):
        for enc in range(self.q2):
            yield FieldElem(self, enc)

    def subfield_elements(self):
        for enc in range(self.q):
            yield FieldElem(self, enc)

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, m={self.m}, q={self.q}, q2={self.q2})"


class FieldElem:
    """One element of F_{q^2}, identified by its integer code."""

    __slots__ = ("ctx", "enc")

    def __init__(self, ctx: FieldCtx, enc: int):
        self.ctx = ctx
        self.enc = enc

    def _check(self, other: "FieldElem") -> None:
        if not isinstance(other, FieldElem):
            raise TypeError(f"expected FieldElem, got {type(other).__name__}")
        if other.ctx is not self.ctx:
            raise ValueError("elements belong to different field contexts")

    def __add__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return FieldElem(self.ctx, self.ctx.add_enc(self.enc, other.enc))

    def __sub__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return FieldElem(self.ctx, self.ctx.sub_enc(self.enc, other.enc))

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return FieldElem(self.ctx, self.ctx.mul_enc(self.enc, other.enc))

    def __truediv__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return FieldElem(self.ctx, self.ctx.div_enc(self.enc, other.enc))

    def __neg__(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.neg_enc(self.enc))

    def __pow__(self, e: int) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.pow_enc(self.enc, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.inv_enc(self.enc))

    def frobenius(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.frob_enc(self.enc))

    def norm(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.norm_enc(self.enc))

    @property
    def in_subfield(self) -> bool:
        return self.enc < self.ctx.q

    @property
    def is_zero(self) -> bool:
        return self.enc == 0

    @property
    def coeffs(self) -> tuple[int, int]:
        """Codes (a0, a1) of the F_q coordinates in the basis (1, t)."""
        return self.ctx._split(self.enc)

    def poly_str(self) -> str:
        a0, a1 = self.coeffs
        if a1 == 0:
            return str(a0)
        if a0 == 0:
            return f"{a1}*t"
        return f"{a0}+{a1}*t"

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldElem)
                and other.ctx is self.ctx and other.enc == self.enc)

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.enc))

    def __repr__(self) -> str:
        return f"FieldElem({self.poly_str()})"


# ---------------------------------------------------------------------------
# module level operations


def build_tower(p: int, m: int = 1, *,
                table_threshold: int = DEFAULT_TABLE_THRESHOLD) -> FieldCtx:
    """Construct the tower F_p < F_q < F_{q^2} with canonical moduli."""
    return FieldCtx(p, m, table_threshold=table_threshold)


def ctx_from_spec(spec: FieldSpec, *,
                  table_threshold: int = DEFAULT_TABLE_THRESHOLD) -> FieldCtx:
    """Rebuild a context from its serialized description."""
    return FieldCtx(spec.p, spec.m, base_modulus=spec.base_modulus,
                    ext_modulus=spec.ext_modulus, table_threshold=table_threshold)


def frobenius(x: FieldElem) -> FieldElem:
    """The involution a -> a^q; it fixes exactly the subfield F_q."""
    return x.frobenius()


def norm(x: FieldElem) -> FieldElem:
    """The multiplicative map a -> a^(q+1), landing in F_q."""
    return x.norm()


def norm_preimages(a: FieldElem) -> tuple[FieldElem, ...]:
    """All t with t^(q+1) = a, sorted by code.

    The argument must lie in F_q.  Zero has the single preimage zero and
    every nonzero value has exactly q + 1.
    """
    ctx = a.ctx
    if not a.in_subfield:
        raise ValueError(f"norm preimages only defined for F_q values, got {a!r}")
    return tuple(FieldElem(ctx, e) for e in ctx.norm_preimage_encs(a.enc))


def norm_minus_one_roots(ctx: FieldCtx) -> tuple[FieldElem, ...]:
    """The q + 1 solutions of t^(q+1) = -1, sorted by code."""
    return norm_preimages(FieldElem(ctx, ctx.neg_enc(1)))


def sqrt_subfield(a: FieldElem) -> tuple[FieldElem, ...]:
    """Square roots of a inside F_q, sorted by code.

    For even q the root is unique (squaring is a bijection); for odd q
    the result has zero or two entries, except that zero has one root.
    """
    ctx = a.ctx
    if not a.in_subfield:
        raise ValueError(f"square root only defined for F_q values, got {a!r}")
    return tuple(FieldElem(ctx, e) for e in ctx.q_sqrt_encs(a.enc))


def is_square(a: FieldElem) -> bool:
    """Whether a is a square inside F_q.  Always true for even q."""
    if not a.in_subfield:
        raise ValueError(f"squareness only defined for F_q values, got {a!r}")
    return a.ctx.q_is_square(a.enc)


def two_square_rep(a1: FieldElem, a2: FieldElem, k: FieldElem) -> tuple[FieldElem, FieldElem]:
    """The first (x1, x2) in F_q x F_q with a1*x1^2 + a2*x2^2 = k.

    Requires odd q and nonzero a1, a2; a solution always exists.  The
    scan takes the smallest x1 code admitting a solution, then the
    smallest matching x2, so the output is deterministic.
    """
    ctx = a1.ctx
    if ctx.p == 2:
        raise ValueError("two square representation requires odd q")
    for v in (a1, a2, k):
        if v.ctx is not ctx:
            raise ValueError("elements belong to different field contexts")
        if not v.in_subfield:
            raise ValueError(f"two square representation works inside F_q, got {v!r}")
    if a1.enc == 0 or a2.enc == 0:
        raise ValueError("coefficients must be nonzero")
    if k.enc == 0:
        return (ctx.zero, ctx.zero)
    inv_a2 = ctx.q_inv(a2.enc)
    for x1 in range(ctx.q):
        r = ctx.q_mul(inv_a2, ctx.q_sub(k.enc, ctx.q_mul(a1.enc, ctx.q_mul(x1, x1))))
        roots = ctx.q_sqrt_encs(r)
        if roots:
            x2 = roots[0]
            lhs = ctx.q_add(ctx.q_mul(a1.enc, ctx.q_mul(x1, x1)),
                            ctx.q_mul(a2.enc, ctx.q_mul(x2, x2)))
            assert lhs == k.enc, "two square representation failed its own check"
            return (FieldElem(ctx, x1), FieldElem(ctx, x2))
    raise RuntimeError("no representation found")  # pragma: no cover
