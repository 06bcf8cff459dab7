"""Morphism calculus over canonical hom bases; ghosts, coghosts, approximations.

Over a linear-shape algebra every hom space between indecomposables is 0- or
1-dimensional, so a morphism between sums is just a coefficient matrix over
the canonical basis maps (exact rationals; every predicate below only cares
about zero patterns).  The canonical basis map M_[a,b] -> M_[c,d] collapses
the source onto the overlap and includes it; composing two of them gives the
canonical map again exactly when the source's top stays inside the final
window:

    [a,b] -> [c,d] -> [e,f]   is canonical [a,b] -> [e,f]  iff  a <= f,
                              and zero otherwise.

Because window ends only shrink along nonzero maps, an n-step chain of
canonical maps M_0 -> ... -> M_n has nonzero composite iff top(M_0) <=
end(M_n): a single endpoint condition.  That turns "does a nonzero n-fold
T-coghost into Y exist" into a reachability problem over coghost edges, and
entry-wise expansion shows searching such basis chains is complete:

* a morphism between sums is a T-coghost iff every matrix entry is (the
  conditions range over the same (summand, T-member) pairs), and
* a nonzero composite of sum-level maps has a nonzero matrix entry, which is
  a sum over paths of scalar products times one shared endpoint indicator,
  so some all-nonzero path of entry maps survives — a basis chain.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .closure import IndecSet, _bits, bracket_n, fac_closure, sub_closure
from .homext import ARArrow, ar_quiver, hom_dim, interval_end
from .nakayama import (
    Algebra,
    InputError,
    ModuleSum,
    Uniserial,
    indec_index,
    indecomposables,
    simple,
    validate_module,
)


@dataclass(frozen=True)
class Morphism:
    """Map of module sums: coefficients[s][t] scales the canonical hom s -> t."""

    source: ModuleSum
    target: ModuleSum
    coefficients: tuple[tuple[Fraction, ...], ...]

    def entry(self, s: int, t: int) -> Fraction:
        return self.coefficients[s][t]

    @property
    def is_zero(self) -> bool:
        return all(not e for row in self.coefficients for e in row)


def _require_linear(A: Algebra) -> None:
    if not A.is_linear:
        raise InputError("morphism calculus needs thin hom spaces: linear shapes only")


def morphism(A: Algebra, source: ModuleSum, target: ModuleSum, entries: dict) -> Morphism:
    """Build a morphism from {(s_index, t_index): scalar}, checking hom support."""
    _require_linear(A)
    validate_module(A, source)
    validate_module(A, target)
    coeff = [[Fraction(0)] * len(target) for _ in range(len(source))]
    for (s, t), value in entries.items():
        value = Fraction(value)
        if not value:
            continue
        if hom_dim(A, source.summands[s], target.summands[t]) == 0:
            raise InputError(
                f"no hom from summand {s} ({source.summands[s]}) to {t} ({target.summands[t]})"
            )
        coeff[s][t] = value
    return Morphism(source, target, tuple(tuple(row) for row in coeff))


def zero_morphism(A: Algebra, source: ModuleSum, target: ModuleSum) -> Morphism:
    return morphism(A, source, target, {})


def identity_morphism(A: Algebra, M: ModuleSum) -> Morphism:
    entries = {
        (s, t): 1
        for s, u in enumerate(M.summands)
        for t, v in enumerate(M.summands)
        if s == t
    }
    return morphism(A, M, M, entries)


def basis_morphism(A: Algebra, x: Uniserial, y: Uniserial, scalar=1) -> Morphism:
    """The canonical generator of Hom(x, y), as a morphism of singleton sums."""
    if hom_dim(A, x, y) == 0:
        raise InputError(f"Hom({x}, {y}) = 0; no basis morphism exists")
    return morphism(A, ModuleSum.of(x), ModuleSum.of(y), {(0, 0): scalar})


def arrow_morphism(A: Algebra, arrow: ARArrow) -> Morphism:
    return basis_morphism(A, arrow.source, arrow.target)


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g after f.  Entry (s,u) sums over middles, then the endpoint rule
    top(source_s) <= end(target_u) decides survival (it is path independent)."""
    if f.target != g.source:
        raise InputError("compose(g, f) needs f.target == g.source")
    rows = []
    for s, src in enumerate(f.source.summands):
        row = []
        for u, tgt in enumerate(g.target.summands):
            if src.top_vertex <= tgt.top_vertex + tgt.length - 1:
                total = sum(
                    (f.coefficients[s][t] * g.coefficients[t][u] for t in range(len(f.target))),
                    Fraction(0),
                )
            else:
                total = Fraction(0)
            row.append(total)
        rows.append(tuple(row))
    return Morphism(f.source, g.target, tuple(rows))


def is_radical_morphism(f: Morphism) -> bool:
    """No nonzero entry between equal uniserials: entries are scalars, so any
    such entry is an isomorphism component and the map leaves the radical."""
    for s, src in enumerate(f.source.summands):
        for t, tgt in enumerate(f.target.summands):
            if src == tgt and f.coefficients[s][t]:
                return False
    return True


# ---------------------------------------------------------------------------
# ghost / coghost predicates
# ---------------------------------------------------------------------------


def is_coghost(A: Algebra, f: Morphism, T: IndecSet) -> bool:
    """Hom(f, I) = 0 for every I in T.

    Per member I: if Hom(source, I) or Hom(target, I) vanishes the condition
    is automatic; otherwise expand over basis maps g: target_t -> I, where
    (g o f) at summand s is coefficients[s][t] times the endpoint indicator.
    """
    _require_linear(A)
    for I in T.members():
        end_i = interval_end(A, I)
        src_homs = [hom_dim(A, u, I) for u in f.source.summands]
        if not any(src_homs):
            continue
        for t, tgt in enumerate(f.target.summands):
            if hom_dim(A, tgt, I) == 0:
                continue
            for s, src in enumerate(f.source.summands):
                if f.coefficients[s][t] and src.top_vertex <= end_i:
                    return False
    return True


def is_ghost(A: Algebra, f: Morphism, T: IndecSet) -> bool:
    """Hom(I, f) = 0 for every I in T; mirror image of is_coghost."""
    _require_linear(A)
    for I in T.members():
        tgt_homs = [hom_dim(A, I, u) for u in f.target.summands]
        if not any(tgt_homs):
            continue
        for s, src in enumerate(f.source.summands):
            if hom_dim(A, I, src) == 0:
                continue
            for t, tgt in enumerate(f.target.summands):
                if f.coefficients[s][t] and I.top_vertex <= interval_end(A, tgt):
                    return False
    return True


def tm_generator(A: Algebra, m: int) -> IndecSet:
    """T_m: the initial intervals M_[1,j] for j <= m together with all simples."""
    _require_linear(A)
    if not 1 <= m < A.n:
        raise InputError(f"m must satisfy 1 <= m < {A.n}, got {m}")
    members = {Uniserial(1, j) for j in range(1, m + 1)}
    members |= {simple(A, i) for i in range(1, A.n + 1)}
    return IndecSet.of(A, members)


def irreducible_coghosts(A: Algebra, T: IndecSet) -> tuple[ARArrow, ...]:
    """The AR arrows that are T-coghosts (classification by direct check)."""
    return tuple(
        arrow for arrow in ar_quiver(A).arrows if is_coghost(A, arrow_morphism(A, arrow), T)
    )


# ---------------------------------------------------------------------------
# chain searches for the Ghost / Coghost Lemma
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _chain_tables(A: Algebra):
    """Per ordered hom pair (a, b): the members I killing edge coghostness,
    as masks: cog[a][b] = {I : Hom(b, I) != 0 and top(a) <= end(I)} and the
    ghost-side gho[a][b] = {I : Hom(I, a) != 0 and top(I) <= end(b)}.
    Identity pairs are included: id_a is a T-coghost iff Hom(a, T) = 0.
    """
    _require_linear(A)
    indecs = indecomposables(A)
    count = len(indecs)
    ends = [interval_end(A, u) for u in indecs]
    hom = [[hom_dim(A, x, y) for y in indecs] for x in indecs]
    cog = [[None] * count for _ in range(count)]
    gho = [[None] * count for _ in range(count)]
    for a in range(count):
        for b in range(count):
            if hom[a][b] == 0:
                continue
            cmask = 0
            gmask = 0
            for i in range(count):
                if hom[b][i] and indecs[a].top_vertex <= ends[i]:
                    cmask |= 1 << i
                if hom[i][a] and indecs[i].top_vertex <= ends[b]:
                    gmask |= 1 << i
            cog[a][b] = cmask
            gho[a][b] = gmask
    return hom, ends, cog, gho


def _edge_masks(A: Algebra, T: IndecSet, ghost: bool) -> list[int]:
    """incoming[b] = bitmask of sources a with a T-(co)ghost edge a -> b."""
    hom, _, cog, gho = _chain_tables(A)
    kill = gho if ghost else cog
    count = len(hom)
    incoming = [0] * count
    for a in range(count):
        for b in range(count):
            mask = kill[a][b]
            if mask is not None and mask & T.mask == 0:
                incoming[b] |= 1 << a
    return incoming


def coghost_chain_exists(A: Algebra, T: IndecSet, Y: Uniserial, n: int) -> bool:
    """Whether some nonzero composite of n T-coghost maps lands in Y.

    Search runs over basis chains A_n -> ... -> A_1 -> Y of coghost edges;
    the composite is nonzero iff top(A_n) <= end(Y) (window ends shrink, so
    only the endpoints matter).  Basis chains are complete for this question.
    """
    if n < 1:
        raise InputError(f"chain length must be >= 1, got {n}")
    incoming = _edge_masks(A, T, ghost=False)
    _, ends, _, _ = _chain_tables(A)
    indecs = indecomposables(A)
    y = indec_index(A)[Y]
    reach = incoming[y]
    for _ in range(n - 1):
        nxt = 0
        for x in _bits(reach):
            nxt |= incoming[x]
        reach = nxt
    return any(indecs[a].top_vertex <= ends[y] for a in _bits(reach))


def ghost_chain_exists(A: Algebra, T: IndecSet, X: Uniserial, n: int) -> bool:
    """Dual search: nonzero composite of n T-ghost maps out of X."""
    if n < 1:
        raise InputError(f"chain length must be >= 1, got {n}")
    _, ends, _, _ = _chain_tables(A)
    outgoing = _outgoing_masks(A, T)
    x = indec_index(A)[X]
    reach = outgoing[x]
    for _ in range(n - 1):
        nxt = 0
        for b in _bits(reach):
            nxt |= outgoing[b]
        reach = nxt
    top_x = indecomposables(A)[x].top_vertex
    return any(top_x <= ends[b] for b in _bits(reach))


def find_coghost_chain(A: Algebra, T: IndecSet, Y: Uniserial, n: int) -> tuple[Uniserial, ...] | None:
    """One witnessing chain (A_n, ..., A_1, Y) with nonzero composite, if any."""
    incoming = _edge_masks(A, T, ghost=False)
    _, ends, _, _ = _chain_tables(A)
    indecs = indecomposables(A)
    y = indec_index(A)[Y]
    layers = [1 << y]
    for _ in range(n):
        prev = layers[-1]
        nxt = 0
        for x in _bits(prev):
            nxt |= incoming[x]
        layers.append(nxt)
    starts = [a for a in _bits(layers[n]) if indecs[a].top_vertex <= ends[y]]
    if not starts:
        return None
    chain = [starts[0]]
    for k in range(n - 1, 0, -1):
        cur = chain[-1]
        for b in _bits(layers[k]):
            if incoming[b] >> cur & 1:
                chain.append(b)
                break
        else:  # pragma: no cover - layers are consistent by construction
            raise AssertionError("chain reconstruction failed")
    chain.append(y)
    return tuple(indecs[k] for k in chain)


def _outgoing_masks(A: Algebra, T: IndecSet) -> list[int]:
    hom, _, _, gho = _chain_tables(A)
    count = len(hom)
    outgoing = [0] * count
    for a in range(count):
        for b in range(count):
            mask = gho[a][b]
            if mask is not None and mask & T.mask == 0:
                outgoing[a] |= 1 << b
    return outgoing


def coghost_lemma_check(A: Algebra, T: IndecSet, nmax: int) -> list[str]:
    """Both equivalences, for every indecomposable Y and 1 <= n <= nmax:

      nonzero n-fold T-coghost into Y   <=>  Y not in [Sub T]_n
      nonzero n-fold T-ghost out of Y   <=>  Y not in [Fac T]_n

    Returns human-readable violations (expected empty).
    """
    violations = []
    indecs = indecomposables(A)
    _, ends, _, _ = _chain_tables(A)
    incoming = _edge_masks(A, T, ghost=False)
    outgoing = _outgoing_masks(A, T)
    count = len(indecs)
    # reach_in[y] / reach_out[x] start at chain length 1 and advance per n
    reach_in = list(incoming)
    reach_out = list(outgoing)
    sub_level = sub_closure(A, T)
    fac_level = fac_closure(A, T)
    for n in range(1, nmax + 1):
        if n > 1:
            for k in range(count):
                acc = 0
                for x in _bits(reach_in[k]):
                    acc |= incoming[x]
                reach_in[k] = acc
                acc = 0
                for b in _bits(reach_out[k]):
                    acc |= outgoing[b]
                reach_out[k] = acc
        in_sub = bracket_n(A, sub_level, n)
        in_fac = bracket_n(A, fac_level, n)
        for y, Y in enumerate(indecs):
            cog = any(indecs[a].top_vertex <= ends[y] for a in _bits(reach_in[y]))
            if cog == (Y in in_sub):
                violations.append(
                    f"coghost mismatch: T={T.mask:#x} n={n} Y={Y}: chain={cog}, level member={Y in in_sub}"
                )
            gho = any(Y.top_vertex <= ends[b] for b in _bits(reach_out[y]))
            if gho == (Y in in_fac):
                violations.append(
                    f"ghost mismatch: T={T.mask:#x} n={n} Y={Y}: chain={gho}, level member={Y in in_fac}"
                )
    return violations


# ---------------------------------------------------------------------------
# radical nilpotence
# ---------------------------------------------------------------------------


def radical_nilpotence_check(A: Algebra, chains: int = 10_000, seed: int = 20260814) -> dict:
    """Check that every composite of n = A.n radical maps vanishes.

    Exhaustive over canonical basis chains when n <= 5 (the composite of a
    chain of basis maps is nonzero iff top(source) <= end(final target), so
    scalar choices are irrelevant); randomized coefficient matrices between
    random sums otherwise.  The report also carries the longest nonzero
    radical chain length found, which should be n - 1.
    """
    _require_linear(A)
    n = A.n
    report: dict = {"n": n, "nonzero_composites": [], "mode": "exhaustive" if n <= 5 else "random"}
    if n <= 5:
        indecs = indecomposables(A)
        edges: dict[Uniserial, list[Uniserial]] = {u: [] for u in indecs}
        for x in indecs:
            for y in indecs:
                if x != y and hom_dim(A, x, y):
                    edges[x].append(y)
        longest = 0
        checked = 0

        def walk(start: Uniserial, cur: Uniserial, depth: int) -> None:
            nonlocal longest, checked
            nonzero = start.top_vertex <= interval_end(A, cur)
            if depth and nonzero:
                longest = max(longest, depth)
            if depth == n:
                checked += 1
                if nonzero:
                    report["nonzero_composites"].append((start, cur, depth))
                return
            for nxt in edges[cur]:
                walk(start, nxt, depth + 1)

        for start in indecs:
            walk(start, start, 0)
        report["chains"] = checked
        report["longest_nonzero"] = longest
        return report

    rng = random.Random(seed)
    report["seed"] = seed
    indecs = indecomposables(A)
    nonzero_shorter = 0
    for _ in range(chains):
        mods = [_random_sum(rng, indecs)]
        maps = []
        for _ in range(n):
            f = _random_radical_map(A, rng, mods[-1], indecs)
            maps.append(f)
            mods.append(f.target)
        composite = maps[0]
        for f in maps[1:]:
            composite = compose(f, composite)
            if not composite.is_zero:
                nonzero_shorter += 1
        if not composite.is_zero:
            report["nonzero_composites"].append(tuple(mods))
    report["chains"] = chains
    report["nonzero_prefixes"] = nonzero_shorter  # shorter prefixes may be nonzero
    return report


def _random_sum(rng: random.Random, indecs) -> ModuleSum:
    return ModuleSum.from_iterable(rng.choice(indecs) for _ in range(rng.randint(1, 2)))


def _random_radical_map(A: Algebra, rng: random.Random, source: ModuleSum, indecs) -> Morphism:
    for _ in range(40):
        target = _random_sum(rng, indecs)
        slots = [
            (s, t)
            for s, src in enumerate(source.summands)
            for t, tgt in enumerate(target.summands)
            if src != tgt and hom_dim(A, src, tgt)
        ]
        if slots:
            entries = {slot: rng.choice((-2, -1, 1, 2)) for slot in slots if rng.random() < 0.8}
            return morphism(A, source, target, entries)
    return zero_morphism(A, source, ModuleSum.of(indecs[0]))


# ---------------------------------------------------------------------------
# approximations
# ---------------------------------------------------------------------------


def left_approximation(A: Algebra, X: ModuleSum, T: IndecSet) -> Morphism:
    """The hom-basis left add-T-approximation: one target copy per basis map.

    Every map X -> I with I in add T factors through it (each basis hom is
    literally a component), which is the covariant-finiteness construction.
    """
    _require_linear(A)
    validate_module(A, X)
    items = [
        (s, I)
        for s, src in enumerate(X.summands)
        for I in T.members()
        if hom_dim(A, src, I)
    ]
    order = sorted(range(len(items)), key=lambda k: (items[k][1], items[k][0]))
    target = ModuleSum.from_iterable(items[k][1] for k in order)
    entries = {(items[k][0], col): 1 for col, k in enumerate(order)}
    return morphism(A, X, target, entries)


def approximation_kernel(A: Algebra, X: ModuleSum, T: IndecSet) -> Morphism:
    """Inclusion of ker(left_approximation): summand-wise window tails.

    Summand [a, b] maps into the T-members [c_k, d_k] it has homs to; each
    kernel is the tail past d_k, so the joint kernel is the tail past
    D = max d_k (all of [a, b] when there are no homs, zero when D = b).
    """
    _require_linear(A)
    validate_module(A, X)
    parts = []  # (kernel summand, source index)
    for s, src in enumerate(X.summands):
        tails = [interval_end(A, I) for I in T.members() if hom_dim(A, src, I)]
        end = interval_end(A, src)
        if not tails:
            parts.append((src, s))
            continue
        d = max(tails)
        if d < end:
            parts.append((Uniserial(d + 1, end - d), s))
    order = sorted(range(len(parts)), key=lambda k: (parts[k][0], parts[k][1]))
    kernel = ModuleSum.from_iterable(parts[k][0] for k in order)
    entries = {(row, parts[k][1]): 1 for row, k in enumerate(order)}
    return morphism(A, kernel, X, entries)
