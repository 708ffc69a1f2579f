"""Sweep runners: predictions versus brute force over whole matrix spaces.

Each runner walks a family of matrices, asks the classifier for every
applicable claim, computes the corresponding range or fiber count
exhaustively, and aggregates verdicts into a serializable report.  A
failing check names the matrix, the rule tag, and the observed values,
so a single failure pinpoints the rule it contradicts.
"""

from __future__ import annotations

import itertools
import random

from .classify import (FAIL, SCOPE_FIBER_ZERO, check_prediction,
                       predict_direct_sum, predict_full_field,
                       predict_subfield)
from .fields import FieldCtx
from .hermitian import DEFAULT_CAPACITY, HermMatrix, block_diag
from .ranges import (KIND_NUM0_PRIME, KIND_NUM0_PRIME_SUBFIELD, KIND_NUM_K,
                     KIND_NUM_K_SUBFIELD, FiberCount, fiber_count, num0_prime,
                     num0_prime_subfield, num_k, num_k_subfield,
                     resolve_affine_shift)

SCOPE_EXHAUSTIVE_2X2 = "exhaustive-2x2"
SCOPE_RANDOM_NXN = "random-nxn"
SCOPE_SCALAR_FIBERS = "scalar-fibers"
SCOPE_DIRECT_SUMS = "direct-sums"

VERIFY_SCOPES = (SCOPE_EXHAUSTIVE_2X2, SCOPE_RANDOM_NXN, SCOPE_SCALAR_FIBERS,
                 SCOPE_DIRECT_SUMS)

COLLECT_ALL = "all"
COLLECT_FAILS = "fails"


def _observe(m: HermMatrix, pred, capacity: int, cache: dict):
    key = (pred.scope, pred.k_enc)
    if key not in cache:
        ctx = m.ctx
        if pred.scope == KIND_NUM_K:
            obs = num_k(m, ctx.elem(pred.k_enc), capacity=capacity)
        elif pred.scope == KIND_NUM0_PRIME:
            obs = num0_prime(m, capacity=capacity)
        elif pred.scope == KIND_NUM_K_SUBFIELD:
            obs = num_k_subfield(m, ctx.elem(pred.k_enc), capacity=capacity)
        elif pred.scope == KIND_NUM0_PRIME_SUBFIELD:
            obs = num0_prime_subfield(m, capacity=capacity)
        elif pred.scope == SCOPE_FIBER_ZERO:
            obs = fiber_count(m, ctx.zero, capacity=capacity)
        else:
            raise ValueError(f"unknown prediction scope {pred.scope!r}")
        cache[key] = obs
    return cache[key]


def _observed_json(obs, verdict: str) -> dict:
    if isinstance(obs, FiberCount):
        return {"count": obs.count}
    out = {"cardinality": obs.cardinality, "mode": obs.mode}
    if verdict == FAIL:
        out["values"] = list(obs.values)
    return out


class _Tally:
    """Row collection plus verdict counters shared by all runners."""

    def __init__(self, collect: str):
        if collect not in (COLLECT_ALL, COLLECT_FAILS):
            raise ValueError(f"unknown collect policy {collect!r}")
        self.collect = collect
        self.checks: list[dict] = []
        self.counts = {"total": 0, "pass": 0, "fail": 0, "inapplicable": 0}
        self.by_citation: dict[str, dict] = {}

    def run(self, m: HermMatrix, preds, capacity: int) -> None:
        cache: dict = {}
        for pred in preds:
            obs = _observe(m, pred, capacity, cache)
            verdict = check_prediction(pred, obs)
            self.counts["total"] += 1
            self.counts[verdict] += 1
            per = self.by_citation.setdefault(
                pred.basis, {"pass": 0, "fail": 0, "inapplicable": 0})
            per[verdict] += 1
            if self.collect == COLLECT_ALL or verdict == FAIL:
                self.checks.append({
                    "matrix": [list(r) for r in m.encs()],
                    "k": pred.k_enc,
                    "citation": pred.basis,
                    "claim": pred.claim,
                    "observed": _observed_json(obs, verdict),
                    "verdict": verdict,
                })

    def report(self, config: dict, extra: dict | None = None) -> dict:
        out = {
            "config": config,
            "checks": self.checks,
            "summary": dict(self.counts, by_citation=self.by_citation),
        }
        if extra:
            out.update(extra)
        return out


def _base_config(ctx: FieldCtx, scope: str, **kw) -> dict:
    cfg = {"p": ctx.p, "m": ctx.m, "q": ctx.q, "q2": ctx.q2, "scope": scope}
    cfg.update(kw)
    return cfg


def run_exhaustive_2x2(ctx: FieldCtx, *, space: str = "auto",
                       collect: str = COLLECT_ALL,
                       capacity: int = DEFAULT_CAPACITY,
                       seed: int = 0) -> dict:
    """Check every rule on every 2 by 2 matrix of the chosen space(s).

    space "full" sweeps all matrices over the big field, "subfield"
    sweeps F_q entries with every level k, "both" does both and "auto"
    picks both for q <= 3 and subfield only above that.
    """
    if space == "auto":
        spaces = ("full", "subfield") if ctx.q <= 3 else ("subfield",)
    elif space == "both":
        spaces = ("full", "subfield")
    elif space in ("full", "subfield"):
        spaces = (space,)
    else:
        raise ValueError(f"unknown space {space!r}")

    tally = _Tally(collect)
    for sp in spaces:
        if sp == "full":
            for encs in itertools.product(range(ctx.q2), repeat=4):
                m = HermMatrix.from_encs(ctx, (encs[0:2], encs[2:4]))
                tally.run(m, predict_full_field(m), capacity)
        else:
            for encs in itertools.product(range(ctx.q), repeat=4):
                m = HermMatrix.from_encs(ctx, (encs[0:2], encs[2:4]))
                preds = []
                for k in range(ctx.q):
                    preds.extend(predict_subfield(m, ctx.elem(k)))
                tally.run(m, preds, capacity)

    # settle how the level enters the range of a shifted matrix; only a
    # level outside {0, 1} can separate the two candidate laws
    if ctx.q > 2:
        form = resolve_affine_shift(ctx, k=ctx.elem(2), trials=20,
                                    rng=random.Random(seed),
                                    capacity=capacity)
        affine = {"form": form, "decidable": True}
    else:
        affine = {"form": "tie", "decidable": False}

    config = _base_config(ctx, SCOPE_EXHAUSTIVE_2X2, space=space, seed=seed)
    return tally.report(config, {"affine_law": affine})


def run_random_nxn(ctx: FieldCtx, *, n: int = 3, count: int = 50,
                   seed: int = 0, space: str = "subfield",
                   collect: str = COLLECT_ALL,
                   capacity: int = DEFAULT_CAPACITY) -> dict:
    """Check rules on seeded random n by n matrices."""
    if n < 2:
        raise ValueError(f"dimension must be at least 2, got {n}")
    if space not in ("full", "subfield"):
        raise ValueError(f"unknown space {space!r}")
    if space == "full" and n != 2:
        raise ValueError("full-field rules cover n=2 only")
    rng = random.Random(seed)
    tally = _Tally(collect)
    limit = ctx.q2 if space == "full" else ctx.q
    for _ in range(count):
        m = HermMatrix.from_encs(ctx, tuple(
            tuple(rng.randrange(limit) for _ in range(n)) for _ in range(n)))
        if space == "full":
            tally.run(m, predict_full_field(m), capacity)
        else:
            preds = []
            for k in range(ctx.q):
                preds.extend(predict_subfield(m, ctx.elem(k)))
            tally.run(m, preds, capacity)
    config = _base_config(ctx, SCOPE_RANDOM_NXN, n=n, count=count, seed=seed,
                          space=space)
    return tally.report(config)


def run_scalar_fibers(ctx: FieldCtx, *, n_values=(2, 3, 4, 5),
                      c_encs=None, collect: str = COLLECT_ALL,
                      capacity: int = DEFAULT_CAPACITY) -> dict:
    """Fiber-size formula versus counted null fibers for scalar matrices."""
    if c_encs is None:
        c_encs = tuple(range(1, ctx.q)) if ctx.q <= 5 else (1, 2)
    tally = _Tally(collect)
    for n in n_values:
        for c in c_encs:
            m = HermMatrix.scalar(ctx, n, ctx.elem(c))
            tally.run(m, predict_subfield(m, ctx.zero), capacity)
    config = _base_config(ctx, SCOPE_SCALAR_FIBERS, n_values=list(n_values),
                          c_encs=list(c_encs))
    return tally.report(config)


def run_direct_sums(ctx: FieldCtx, *, count: int = 50, seed: int = 0,
                    collect: str = COLLECT_ALL,
                    capacity: int = DEFAULT_CAPACITY) -> dict:
    """Zero-level assembly law on random block-diagonal matrices."""
    rng = random.Random(seed)
    splits = ((1, 1), (1, 2), (2, 1))
    tally = _Tally(collect)
    for i in range(count):
        xa, xb = splits[i % len(splits)]
        a = HermMatrix.from_encs(ctx, tuple(
            tuple(rng.randrange(ctx.q2) for _ in range(xa)) for _ in range(xa)))
        b = HermMatrix.from_encs(ctx, tuple(
            tuple(rng.randrange(ctx.q2) for _ in range(xb)) for _ in range(xb)))
        preds = predict_direct_sum(
            a, b,
            num_k(a, ctx.one, capacity=capacity),
            num_k(b, ctx.one, capacity=capacity),
            num_k(a, ctx.zero, capacity=capacity),
            num_k(b, ctx.zero, capacity=capacity),
            capacity=capacity)
        tally.run(block_diag(a, b), preds, capacity)
    config = _base_config(ctx, SCOPE_DIRECT_SUMS, count=count, seed=seed)
    return tally.report(config)


def run_scope(ctx: FieldCtx, scope: str, **kw) -> dict:
    """Dispatch a named sweep preset."""
    if scope == SCOPE_EXHAUSTIVE_2X2:
        return run_exhaustive_2x2(ctx, **kw)
    if scope == SCOPE_RANDOM_NXN:
        return run_random_nxn(ctx, **kw)
    if scope == SCOPE_SCALAR_FIBERS:
        return run_scalar_fibers(ctx, **kw)
    if scope == SCOPE_DIRECT_SUMS:
        return run_direct_sums(ctx, **kw)
    raise ValueError(f"unknown verification scope {scope!r}")
