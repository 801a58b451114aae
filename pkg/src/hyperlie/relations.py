"""Bounded enumeration of the fundamental relations and their closures.

The relations are defined by unbounded families of expressions; this engine
enumerates all expressions within ExpressionBounds, dedupes by evaluated
value sets at every stage, and reports how the finite run should be read
(exact against an oracle, stabilized, or bound-limited) via RelationStatus.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .errors import BoundsExceeded, InternalInvariant, NotSymmetric
from .sets import full_mask, iter_bits
from .structures import FiniteHyperfield, FiniteLieHyperalgebra


@dataclass(frozen=True, order=True)
class ExpressionBounds:
    """Caps for expression enumeration: summands t, bracket leaves m,
    coefficient sum terms p, coefficient product factors q."""

    t: int
    m: int
    p: int
    q: int

    def __post_init__(self):
        if min(self.t, self.m, self.p, self.q) < 1:
            raise BoundsExceeded(f"all bounds must be >= 1, got {self.astuple()}")

    def astuple(self):
        return (self.t, self.m, self.p, self.q)

    def within(self, cap: "ExpressionBounds") -> bool:
        return (
            self.t <= cap.t and self.m <= cap.m and self.p <= cap.p and self.q <= cap.q
        )

    def succ(self, cap: "ExpressionBounds") -> "ExpressionBounds":
        """Next escalation rung: +1 in every coordinate, clamped to cap."""
        return ExpressionBounds(
            min(self.t + 1, cap.t),
            min(self.m + 1, cap.m),
            min(self.p + 1, cap.p),
            min(self.q + 1, cap.q),
        )


DEFAULT_BOUNDS = ExpressionBounds(2, 2, 1, 1)
HARD_CAP = ExpressionBounds(4, 4, 3, 3)


def validate_bounds(bounds: ExpressionBounds):
    if not bounds.within(HARD_CAP):
        raise BoundsExceeded(f"bounds {bounds.astuple()} exceed hard cap {HARD_CAP.astuple()}")


@dataclass(frozen=True)
class RelationStatus:
    mode: str  # exact-oracle-match | stabilized-heuristic | bound-limited
    bounds_used: ExpressionBounds


class BinaryRelation:
    """Relation as adjacency rows: rows[x] = mask of elements related to x."""

    def __init__(self, rows):
        self.rows = list(rows)
        self.size = len(self.rows)

    def row(self, x: int) -> int:
        return self.rows[x]

    def has(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    @property
    def pair_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def is_reflexive(self) -> bool:
        return all(r >> x & 1 for x, r in enumerate(self.rows))

    def is_symmetric(self) -> bool:
        n = self.size
        for x in range(n):
            for y in iter_bits(self.rows[x]):
                if not self.rows[y] >> x & 1:
                    return False
        return True


class Partition:
    """Equivalence relation as a partition with canonical class order.

    Classes are sorted by their minimum element; class_of maps element to
    class index under that order.
    """

    def __init__(self, class_masks):
        masks = sorted(class_masks, key=lambda m: m & -m)
        size = sum(m.bit_count() for m in masks)
        cover = 0
        for m in masks:
            if cover & m:
                raise InternalInvariant("partition classes overlap")
            cover |= m
        if cover != full_mask(size):
            raise InternalInvariant("partition does not cover the carrier")
        self.classes = masks
        self.size = size
        self.class_of = [0] * size
        for ci, m in enumerate(masks):
            for x in iter_bits(m):
                self.class_of[x] = ci

    @classmethod
    def diagonal(cls, n: int) -> "Partition":
        return cls([1 << i for i in range(n)])

    @classmethod
    def all_pairs(cls, n: int) -> "Partition":
        return cls([full_mask(n)])

    @classmethod
    def from_class_of(cls, class_of) -> "Partition":
        groups = {}
        for x, c in enumerate(class_of):
            groups[c] = groups.get(c, 0) | (1 << x)
        return cls(list(groups.values()))

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def class_mask_of(self, x: int) -> int:
        return self.classes[self.class_of[x]]

    def key(self):
        return tuple(self.class_of)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def refines(self, other: "Partition") -> bool:
        """Every class of self is contained in a class of other."""
        if self.size != other.size:
            return False
        return all(m & ~other.class_mask_of((m & -m).bit_length() - 1) == 0 for m in self.classes)

    def meet(self, other: "Partition") -> "Partition":
        seen = {}
        for x in range(self.size):
            k = (self.class_of[x], other.class_of[x])
            seen[k] = seen.get(k, 0) | (1 << x)
        return Partition(list(seen.values()))

    def is_diagonal(self) -> bool:
        return len(self.classes) == self.size

    def is_all_pairs(self) -> bool:
        return len(self.classes) == 1

    def classes_as_names(self, names):
        return [[names[i] for i in iter_bits(m)] for m in self.classes]


def transitive_closure(rel: BinaryRelation) -> Partition:
    """Union-find closure of a reflexive symmetric relation."""
    if not rel.is_symmetric():
        raise NotSymmetric("relation is not symmetric; closure refused")
    if not rel.is_reflexive():
        raise NotSymmetric("relation is not reflexive; closure refused")
    n = rel.size
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(n):
        rx = find(x)
        for y in iter_bits(rel.rows[x] >> (x + 1) << (x + 1)):
            ry = find(y)
            if rx != ry:
                parent[ry] = rx
    groups = {}
    for x in range(n):
        r = find(x)
        groups[r] = groups.get(r, 0) | (1 << x)
    return Partition(list(groups.values()))


def coefficient_pair_family(F: FiniteHyperfield, bounds: ExpressionBounds):
    """Deduplicated (unpermuted value, permuted value) scalar-set pairs.

    Products of at most q factors in every order, summed in at most p terms
    in every order; the left entry evaluates the written order, the right
    entry a permuted order. The family is closed under swapping.
    """
    validate_bounds(bounds)
    n = F.size
    elems = range(n)

    prod_pairs = set()
    for ln in range(1, bounds.q + 1):
        for tup in product(elems, repeat=ln):
            left = F.mul_ops.fold(1 << e for e in tup)
            if ln == 1:
                prod_pairs.add((left, left))
                continue
            for perm in permutations(tup):
                right = F.mul_ops.fold(1 << e for e in perm)
                prod_pairs.add((left, right))
    prod_pairs = sorted(prod_pairs)

    family = set()
    for ln in range(1, bounds.p + 1):
        for tup in product(prod_pairs, repeat=ln):
            left = F.add_ops.fold(p[0] for p in tup)
            if ln == 1:
                family.add((left, tup[0][1]))
                continue
            for perm in permutations(tup):
                right = F.add_ops.fold(p[1] for p in perm)
                family.add((left, right))
    family |= {(r, l) for (l, r) in family}
    return sorted(family)


def hyper_derived_sets(L: FiniteLieHyperalgebra, depth: int):
    """Setwise chain: start at the carrier, repeatedly bracket with itself."""
    out = [full_mask(L.size)]
    for _ in range(depth):
        nxt = L.set_bracket(out[-1], out[-1])
        if nxt & ~out[-1]:
            # cannot happen: the setwise bracket is monotone in both arguments
            raise InternalInvariant("hyper-derived chain is not descending")
        out.append(nxt)
    return out


_LEAF = None


def _tree_shapes(m: int):
    if m == 1:
        return [_LEAF]
    out = []
    for k in range(1, m):
        for left in _tree_shapes(k):
            for right in _tree_shapes(m - k):
                out.append((left, right))
    return out


def _eval_shape(shape, values, bracket_apply):
    it = iter(values)

    def ev(s):
        if s is _LEAF:
            return next(it)
        return bracket_apply(ev(s[0]), ev(s[1]))

    return ev(shape)


def _leaf_pool(L: FiniteLieHyperalgebra, coeff_pairs, gate_mask: int):
    """Dedup (left value, right value) leaf pairs; swap flag is OR-ed over
    the witnesses h, sound because eligibility depends only on h."""
    pool = {}
    for h in range(L.size):
        hm = 1 << h
        sw = bool(gate_mask >> h & 1)
        for cl, cr in coeff_pairs:
            key = (L.set_scalar(cl, hm), L.set_scalar(cr, hm))
            pool[key] = pool.get(key, False) or sw
    return [(vl, vr, sw) for (vl, vr), sw in sorted(pool.items())]


def summand_pair_family(L: FiniteLieHyperalgebra, bounds: ExpressionBounds, gate_mask: int):
    """All (unpermuted, permuted) value-set pairs of single summands.

    A summand is a bracket tree over coefficient-scaled leaves; the permuted
    side applies a leaf permutation fixing every position whose element lies
    outside the gate, and each moved position receives the permuted
    coefficient partner of the leaf it takes.
    """
    coeff_pairs = coefficient_pair_family(L.field, bounds)
    pool = _leaf_pool(L, coeff_pairs, gate_mask)
    bracket = L.set_bracket
    pairs = set()
    for m in range(1, bounds.m + 1):
        for shape in _tree_shapes(m):
            for assignment in product(pool, repeat=m):
                U = _eval_shape(shape, [a[0] for a in assignment], bracket)
                gated = [j for j, a in enumerate(assignment) if a[2]]
                base = [a[1] for a in assignment]
                if len(gated) <= 1:
                    V = _eval_shape(shape, base, bracket)
                    pairs.add((U, V))
                    pairs.add((V, U))
                    continue
                contents = [assignment[j][1] for j in gated]
                for arrangement in permutations(contents):
                    vr = list(base)
                    for pos, val in zip(gated, arrangement):
                        vr[pos] = val
                    V = _eval_shape(shape, vr, bracket)
                    pairs.add((U, V))
                    pairs.add((V, U))
    return sorted(pairs)


def combine_levels(pairs, add_apply, t_max: int, commutative: bool):
    """Per-summand-count levels of sum-combined pairs, each sorted.

    Level t holds the (unpermuted, permuted) values of t-summand sums.
    Commutative addition makes summand order and the top permutation
    irrelevant, so a value-deduplicating DP suffices; otherwise ordered
    tuples and every top permutation are evaluated explicitly.
    """
    levels = [sorted(set(pairs))]
    if commutative:
        for _ in range(t_max - 1):
            nxt = set()
            for X, Y in levels[-1]:
                for U, V in levels[0]:
                    nxt.add((add_apply(X, U), add_apply(Y, V)))
            levels.append(sorted(nxt))
        return levels
    for t in range(2, t_max + 1):
        lvl = set()
        for tup in product(levels[0], repeat=t):
            X = tup[0][0]
            for U, _ in tup[1:]:
                X = add_apply(X, U)
            for sigma in permutations(range(t)):
                Y = tup[sigma[0]][1]
                for i in sigma[1:]:
                    Y = add_apply(Y, tup[i][1])
                lvl.add((X, Y))
        levels.append(sorted(lvl))
    return levels


def _combine_sum_pairs(pairs, add_apply, t_max: int, commutative: bool):
    total = set()
    for lvl in combine_levels(pairs, add_apply, t_max, commutative):
        total.update(lvl)
    return total


def _rows_from_pairs(pair_set, n: int):
    rows = [0] * n
    for X, Y in pair_set:
        for x in iter_bits(X):
            rows[x] |= Y
    return rows


def _finish_relation(rows, n) -> BinaryRelation:
    rel = BinaryRelation(rows)
    if not rel.is_reflexive() or not rel.is_symmetric():
        raise InternalInvariant("engine relation must be reflexive and symmetric")
    return rel


def relation_Sn(L: FiniteLieHyperalgebra, n: int, bounds: ExpressionBounds,
                gate_mask=None) -> BinaryRelation:
    """Depth-gated swap relation: permutations allowed only at leaf
    positions whose element lies in the (n-1)-th hyper-derived set."""
    validate_bounds(bounds)
    if n < 1:
        raise BoundsExceeded(f"depth index must be >= 1, got {n}")
    if gate_mask is None:
        combined = [p for lvl in sn_pair_levels(L, n, bounds) for p in lvl]
    else:
        pairs = summand_pair_family(L, bounds, gate_mask)
        combined = _combine_sum_pairs(pairs, L.set_add, bounds.t, L.commutative_add)
    return _finish_relation(_rows_from_pairs(combined, L.size), L.size)


def relation_A(L: FiniteLieHyperalgebra, bounds: ExpressionBounds) -> BinaryRelation:
    """Unrestricted swap relation; identical to depth 1 by construction."""
    return relation_Sn(L, 1, bounds, gate_mask=full_mask(L.size))


def relation_L_values(L: FiniteLieHyperalgebra, bounds: ExpressionBounds):
    """Family of value sets of unpermuted bounded expressions."""
    validate_bounds(bounds)
    coeff_pairs = coefficient_pair_family(L.field, bounds)
    leaf_values = sorted({L.set_scalar(cl, 1 << h) for cl, _ in coeff_pairs for h in range(L.size)})
    bracket = L.set_bracket
    tree_values = set()
    for m in range(1, bounds.m + 1):
        for shape in _tree_shapes(m):
            for assignment in product(leaf_values, repeat=m):
                tree_values.add(_eval_shape(shape, assignment, bracket))
    total = set(tree_values)
    prev = set(tree_values)
    for _ in range(bounds.t - 1):
        nxt = set()
        for X in prev:
            for U in tree_values:
                nxt.add(L.set_add(X, U))
        total |= nxt
        prev = nxt
    return sorted(total)


def relation_L(L: FiniteLieHyperalgebra, bounds: ExpressionBounds) -> BinaryRelation:
    """Common-value relation: x related to y when one bounded expression
    value set contains both."""
    rows = [0] * L.size
    for D in relation_L_values(L, bounds):
        for x in iter_bits(D):
            rows[x] |= D
    return _finish_relation(rows, L.size)


def relation_alpha(F: FiniteHyperfield, bounds: ExpressionBounds) -> BinaryRelation:
    """Scalar relation on a hyperfield: sums of permuted products.

    The two grammar depths map onto bounds as sum length <= t and product
    length <= q; m and p are inert here.
    """
    validate_bounds(bounds)
    n = F.size
    elems = range(n)
    prod_pairs = set()
    for ln in range(1, bounds.q + 1):
        for tup in product(elems, repeat=ln):
            left = F.mul_ops.fold(1 << e for e in tup)
            if ln == 1:
                prod_pairs.add((left, left))
                continue
            for perm in permutations(tup):
                prod_pairs.add((left, F.mul_ops.fold(1 << e for e in perm)))
    combined = _combine_sum_pairs(sorted(prod_pairs), F.add_ops.apply, bounds.t,
                                  F.commutative_add)
    return _finish_relation(_rows_from_pairs(combined, n), n)


_SR_LIE_CONDITIONS = (
    "add-left", "add-right", "scalar-left", "scalar-right", "bracket-left", "bracket-right",
)


def _lift_ok(partition: Partition, mask: int) -> bool:
    """All elements of mask lie in one class (the setwise lift of rho)."""
    first = (mask & -mask).bit_length() - 1
    return mask & ~partition.class_mask_of(first) == 0


def is_strongly_regular(L: FiniteLieHyperalgebra, partition: Partition):
    """Check the six strong-regularity conditions for every related pair.

    Returns (True, None) or (False, (condition, aux, x, y)) where aux is the
    third element a or the scalar index. Pairs (x, x) are not skipped: even
    then the lifted condition forces whole value sets into one class.
    """
    F = L.field
    n = L.size
    for cls in partition.classes:
        members = list(iter_bits(cls))
        for i, x in enumerate(members):
            for y in members[i:]:
                for a in range(n):
                    if not _lift_ok(partition, L.add[a][x] | L.add[a][y]):
                        return False, ("add-left", a, x, y)
                    if not _lift_ok(partition, L.add[x][a] | L.add[y][a]):
                        return False, ("add-right", a, x, y)
                for lam in range(F.size):
                    if not _lift_ok(partition, L.smul[lam][x] | L.smul[lam][y]):
                        return False, ("scalar-left", lam, x, y)
                    # scalars act on one side only; the right condition reads
                    # x * lam and evaluates to the same sets
                    if not _lift_ok(partition, L.smul[lam][x] | L.smul[lam][y]):
                        return False, ("scalar-right", lam, x, y)
                for a in range(n):
                    if not _lift_ok(partition, L.bracket[a][x] | L.bracket[a][y]):
                        return False, ("bracket-left", a, x, y)
                    if not _lift_ok(partition, L.bracket[x][a] | L.bracket[y][a]):
                        return False, ("bracket-right", a, x, y)
    return True, None


def is_strongly_regular_field(F: FiniteHyperfield, partition: Partition):
    """Strong regularity of an equivalence on a hyperfield (add and mul)."""
    n = F.size
    for cls in partition.classes:
        members = list(iter_bits(cls))
        for i, x in enumerate(members):
            for y in members[i:]:
                for a in range(n):
                    if not _lift_ok(partition, F.add[a][x] | F.add[a][y]):
                        return False, ("add-left", a, x, y)
                    if not _lift_ok(partition, F.add[x][a] | F.add[y][a]):
                        return False, ("add-right", a, x, y)
                    if not _lift_ok(partition, F.mul[a][x] | F.mul[a][y]):
                        return False, ("mul-left", a, x, y)
                    if not _lift_ok(partition, F.mul[x][a] | F.mul[y][a]):
                        return False, ("mul-right", a, x, y)
    return True, None


_REL_CACHE = {}


def clear_relation_cache():
    _REL_CACHE.clear()


def closed_relation(obj, kind: str, n: int, bounds: ExpressionBounds):
    """Cached (BinaryRelation, Partition) for one relation at fixed bounds.

    kind: "L" | "A" | "Sn" | "alpha". n is ignored unless kind == "Sn".
    """
    key = (obj.fingerprint, kind, n if kind == "Sn" else 0, bounds.astuple())
    hit = _REL_CACHE.get(key)
    if hit is not None:
        return hit
    if kind == "L":
        rel = relation_L(obj, bounds)
    elif kind == "A":
        rel = relation_A(obj, bounds)
    elif kind == "Sn":
        rel = relation_Sn(obj, n, bounds)
    elif kind == "alpha":
        rel = relation_alpha(obj, bounds)
    else:
        raise InternalInvariant(f"unknown relation kind {kind!r}")
    part = transitive_closure(rel)
    _REL_CACHE[key] = (rel, part)
    return rel, part


def sn_pair_levels(L: FiniteLieHyperalgebra, n: int, bounds: ExpressionBounds):
    """Cached per-level (unpermuted, permuted) pair lists for the depth-gated
    relation; level t lists t-summand sums, each sorted for determinism."""
    validate_bounds(bounds)
    key = (L.fingerprint, "Sn-levels", n, bounds.astuple())
    hit = _REL_CACHE.get(key)
    if hit is not None:
        return hit
    gate_mask = hyper_derived_sets(L, n - 1)[-1]
    pairs = summand_pair_family(L, bounds, gate_mask)
    levels = combine_levels(pairs, L.set_add, bounds.t, L.commutative_add)
    _REL_CACHE[key] = levels
    return levels


def relation_with_escalation(obj, kind: str, n: int = 1,
                             start: ExpressionBounds = DEFAULT_BOUNDS,
                             cap: ExpressionBounds = HARD_CAP,
                             oracle: Partition | None = None):
    """Escalate bounds until oracle match, stabilization, or the cap.

    Returns (Partition, RelationStatus). Asserts the documented invariants:
    rung partitions coarsen monotonically, and when an oracle is supplied
    every rung refines it.
    """
    if not start.within(cap):
        raise BoundsExceeded(
            f"start bounds {start.astuple()} exceed cap {cap.astuple()}"
        )
    validate_bounds(cap)
    prev = None
    unchanged = 0
    bounds = start
    while True:
        _, part = closed_relation(obj, kind, n, bounds)
        if oracle is not None:
            if part == oracle:
                return part, RelationStatus("exact-oracle-match", bounds)
            if not part.refines(oracle):
                raise InternalInvariant(
                    "engine partition does not refine the supplied oracle"
                )
        if prev is not None:
            if not prev.refines(part):
                raise InternalInvariant("escalation produced a non-coarsening partition")
            unchanged = unchanged + 1 if part == prev else 0
        if part.is_all_pairs():
            return part, RelationStatus("stabilized-heuristic", bounds)
        if unchanged >= 2:
            return part, RelationStatus("stabilized-heuristic", bounds)
        if bounds == cap:
            return part, RelationStatus("bound-limited", bounds)
        prev = part
        bounds = bounds.succ(cap)


def relation_json(partition: Partition, names, status: RelationStatus):
    return {
        "classes": partition.classes_as_names(names),
        "mode": status.mode,
        "bounds": list(status.bounds_used.astuple()),
    }
