"""Quotients by strongly regular partitions, classical structure checks,
and the linear oracle for trivially-presented algebras."""

from __future__ import annotations

from itertools import product

from .errors import (
    CharTwoGate,
    DegenerateField,
    InternalInvariant,
    NoStabilization,
    NotAField,
    NotAVectorSpace,
    NotLie,
    NotWellDefined,
)
from .generators import check_constants_lie, constants_table
from .gf import digits_to_int, get_gf, int_to_digits, row_reduce, span_indices
from .relations import Partition
from .sets import iter_bits, singleton_index
from .structures import FiniteHyperfield, FiniteLieHyperalgebra


class FiniteField:
    """Classical finite field given by element-valued Cayley tables."""

    def __init__(self, names, add, mul):
        self.names = list(names)
        self.size = len(self.names)
        self.add = [list(r) for r in add]
        self.mul = [list(r) for r in mul]
        self.index = {nm: i for i, nm in enumerate(self.names)}
        self.zero = self._locate(self.add)
        self.one = self._locate(self.mul, skip=self.zero)

    def _locate(self, table, skip=None):
        for e in range(self.size):
            if e == skip:
                continue
            if all(
                table[e][x] == x and table[x][e] == x
                for x in range(self.size)
                if x != skip
            ):
                return e
        return None

    @classmethod
    def from_trivial_hyperfield(cls, F: FiniteHyperfield) -> "FiniteField":
        if not F.is_trivial:
            raise NotAField("single-valued", None, "hyperfield tables are multivalued")
        add = [[singleton_index(c) for c in row] for row in F.add]
        mul = [[singleton_index(c) for c in row] for row in F.mul]
        return cls(F.names, add, mul)

    def validate(self):
        """Field axioms with first witness; raises NotAField."""
        n = self.size
        rng = range(n)
        if n < 2 or self.zero is None or self.one is None or self.zero == self.one:
            raise NotAField("identities", None, "need distinct zero and one")
        for a, b in product(rng, rng):
            if self.add[a][b] != self.add[b][a]:
                raise NotAField("add-commutative", (a, b))
            if self.mul[a][b] != self.mul[b][a]:
                raise NotAField("mul-commutative", (a, b))
        for a, b, c in product(rng, rng, rng):
            if self.add[self.add[a][b]][c] != self.add[a][self.add[b][c]]:
                raise NotAField("add-associative", (a, b, c))
            if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]]:
                raise NotAField("mul-associative", (a, b, c))
            if self.mul[a][self.add[b][c]] != self.add[self.mul[a][b]][self.mul[a][c]]:
                raise NotAField("distributive", (a, b, c))
        for a in rng:
            if not any(self.add[a][b] == self.zero for b in rng):
                raise NotAField("add-inverse", (a,))
            if a != self.zero:
                if self.mul[a][self.zero] != self.zero:
                    raise NotAField("zero-absorbing", (a,))
                if not any(
                    self.mul[a][b] == self.one for b in rng if b != self.zero
                ):
                    raise NotAField("mul-inverse", (a,))
        return self

    @property
    def characteristic(self) -> int:
        acc = self.one
        k = 1
        while acc != self.zero:
            acc = self.add[acc][self.one]
            k += 1
            if k > self.size:
                raise NotAField("characteristic", None, "one has no additive order")
        return k

    def neg(self, a: int) -> int:
        for b in range(self.size):
            if self.add[a][b] == self.zero:
                return b
        raise NotAField("add-inverse", (a,))


def require_char_not_2(field: FiniteField):
    if field.characteristic == 2:
        raise CharTwoGate(
            "solvability results need characteristic != 2; "
            f"field of order {field.size} has characteristic 2"
        )


def _class_fn(partition: Partition):
    cof = partition.class_of

    def classes_of_mask(mask: int):
        return {cof[v] for v in iter_bits(mask)}

    return classes_of_mask


def _class_names(names, partition: Partition):
    return [names[(m & -m).bit_length() - 1] for m in partition.classes]


def quotient_field(F: FiniteHyperfield, delta: Partition) -> FiniteField:
    """Collapse a hyperfield along an equivalence; classical field or error.

    Well-definedness demands each lifted operation land in one class; that
    holds exactly when delta is strongly regular. The one-class quotient is
    rejected as degenerate (zero would equal one).
    """
    if delta.size != F.size:
        raise InternalInvariant("partition size differs from field carrier")
    if delta.is_all_pairs():
        raise DegenerateField("quotient field would collapse to a single class")
    classes_of = _class_fn(delta)
    k = delta.num_classes
    members = [list(iter_bits(m)) for m in delta.classes]
    qadd = [[0] * k for _ in range(k)]
    qmul = [[0] * k for _ in range(k)]
    for ci in range(k):
        for cj in range(k):
            for table, out, op in ((F.add, qadd, "add"), (F.mul, qmul, "mul")):
                seen = set()
                first = None
                for x in members[ci]:
                    for y in members[cj]:
                        got = classes_of(table[x][y])
                        if first is None:
                            first = (x, y)
                        seen |= got
                        if len(seen) > 1:
                            raise NotWellDefined(
                                op, (x, y, sorted(seen)[0], sorted(seen)[1])
                            )
                out[ci][cj] = seen.pop()
    fld = FiniteField(_class_names(F.names, delta), qadd, qmul)
    fld.validate()
    return fld


class FiniteLieAlgebra:
    """Classical finite-dimensional Lie algebra as element tables."""

    def __init__(self, field: FiniteField, names, add, smul, bracket):
        self.field = field
        self.names = list(names)
        self.size = len(self.names)
        self.add = [list(r) for r in add]
        self.smul = [list(r) for r in smul]
        self.bracket = [list(r) for r in bracket]
        self.index = {nm: i for i, nm in enumerate(self.names)}
        self.zero = self.smul[field.zero][0]

    def validate(self):
        """Classical Lie algebra axioms with first witness; raises NotLie."""
        n = self.size
        F = self.field
        rng = range(n)
        z = self.zero
        for x in rng:
            if self.add[z][x] != x or self.add[x][z] != x:
                raise NotLie("classical-zero-identity", (x,))
            if self.smul[F.one][x] != x:
                raise NotLie("classical-scalar-one", (x,))
            if self.smul[F.zero][x] != z:
                raise NotLie("classical-scalar-zero", (x,))
            if self.bracket[x][x] != z:
                raise NotLie("classical-alternating", (x,))
            if not any(self.add[x][y] == z for y in rng):
                raise NotLie("classical-add-inverse", (x,))
        for x, y in product(rng, rng):
            if self.add[x][y] != self.add[y][x]:
                raise NotLie("classical-add-commutative", (x, y))
        for lam, mu in product(range(F.size), range(F.size)):
            for x in rng:
                if self.smul[lam][self.smul[mu][x]] != self.smul[F.mul[lam][mu]][x]:
                    raise NotLie("classical-scalar-associative", (lam, mu, x))
                if self.smul[F.add[lam][mu]][x] != self.add[self.smul[lam][x]][self.smul[mu][x]]:
                    raise NotLie("classical-scalar-add", (lam, mu, x))
        for lam in range(F.size):
            for x, y in product(rng, rng):
                if self.smul[lam][self.add[x][y]] != self.add[self.smul[lam][x]][self.smul[lam][y]]:
                    raise NotLie("classical-scalar-dist", (lam, x, y))
                if self.bracket[self.smul[lam][x]][y] != self.smul[lam][self.bracket[x][y]]:
                    raise NotLie("classical-bracket-homogeneous", (lam, x, y))
        for x, y, c in product(rng, rng, rng):
            if self.add[self.add[x][y]][c] != self.add[x][self.add[y][c]]:
                raise NotLie("classical-add-associative", (x, y, c))
            if self.bracket[self.add[x][y]][c] != self.add[self.bracket[x][c]][self.bracket[y][c]]:
                raise NotLie("classical-bracket-additive-left", (x, y, c))
            if self.bracket[c][self.add[x][y]] != self.add[self.bracket[c][x]][self.bracket[c][y]]:
                raise NotLie("classical-bracket-additive-right", (x, y, c))
            jac = self.add[
                self.add[self.bracket[x][self.bracket[y][c]]][
                    self.bracket[y][self.bracket[c][x]]
                ]
            ][self.bracket[c][self.bracket[x][y]]]
            if jac != z:
                raise NotLie("classical-jacobi", (x, y, c))
        return self

    @property
    def dimension(self) -> int:
        q = self.field.size
        n = self.size
        d = 0
        while q ** d < n:
            d += 1
        if q ** d != n:
            raise NotAVectorSpace(
                f"carrier size {n} is not a power of the field order {q}"
            )
        return d


def quotient_lie_algebra(L: FiniteLieHyperalgebra, rho: Partition,
                         delta: Partition | None = None) -> FiniteLieAlgebra:
    """Quotient of a Lie hyperalgebra by carrier and scalar equivalences.

    delta defaults to the diagonal (scalars untouched; requires a trivial
    hyperfield). Raises NotWellDefined with the offending operation and a
    witness (x, y, class1, class2) when a lifted operation straddles two
    classes, which by the congruence lemma happens exactly off the strongly
    regular relations. The result is validated classically.
    """
    F = L.field
    if rho.size != L.size:
        raise InternalInvariant("partition size differs from carrier size")
    if delta is None:
        delta = Partition.diagonal(F.size)
    qF = quotient_field(F, delta)
    classes_of = _class_fn(rho)
    members = [list(iter_bits(m)) for m in rho.classes]
    scalar_members = [list(iter_bits(m)) for m in delta.classes]

    def collapse(table, op, left_members, right_members):
        rows = len(left_members)
        cols = len(right_members)
        out = [[0] * cols for _ in range(rows)]
        for ci in range(rows):
            for cj in range(cols):
                seen = set()
                for x in left_members[ci]:
                    for y in right_members[cj]:
                        seen |= classes_of(table[x][y])
                        if len(seen) > 1:
                            a, b = sorted(seen)[:2]
                            raise NotWellDefined(op, (x, y, a, b))
                out[ci][cj] = seen.pop()
        return out

    qadd = collapse(L.add, "add", members, members)
    qsmul = collapse(L.smul, "smul", scalar_members, members)
    qbr = collapse(L.bracket, "bracket", members, members)
    A = FiniteLieAlgebra(qF, _class_names(L.names, rho), qadd, qsmul, qbr)
    A.validate()
    return A


def _span_closure(A: FiniteLieAlgebra, seed):
    out = {A.zero}
    out.update(seed)
    frontier = True
    while frontier:
        frontier = False
        cur = list(out)
        for x in cur:
            for lam in range(A.field.size):
                v = A.smul[lam][x]
                if v not in out:
                    out.add(v)
                    frontier = True
            for y in cur:
                v = A.add[x][y]
                if v not in out:
                    out.add(v)
                    frontier = True
    return out


def derived_series(A: FiniteLieAlgebra, max_depth: int = 8):
    """Descending chain of derived subalgebras as element sets.

    Entry 0 is the whole carrier; entry i+1 spans all brackets of entry i.
    The last entry either is the zero subspace or repeats its predecessor,
    so solvability and perfection are both readable from the chain.
    """
    chain = [set(range(A.size))]
    for _ in range(max_depth):
        cur = sorted(chain[-1])
        seed = {A.bracket[x][y] for x in cur for y in cur}
        nxt = _span_closure(A, seed)
        if not nxt <= chain[-1]:
            raise InternalInvariant("derived series is not descending")
        stop = nxt == chain[-1] or len(nxt) == 1
        chain.append(nxt)
        if stop:
            return chain
    raise NoStabilization(f"derived series open after {max_depth} steps")


def _dim_of_size(q: int, n: int) -> int:
    d = 0
    while q ** d < n:
        d += 1
    if q ** d != n:
        raise NotAVectorSpace(f"subspace size {n} is not a power of {q}")
    return d


def derived_dims(A: FiniteLieAlgebra):
    return [_dim_of_size(A.field.size, len(s)) for s in derived_series(A)]


def solvable_length(A: FiniteLieAlgebra):
    """Steps until the derived series vanishes; None when it never does.

    Gated to odd characteristic: the solvability results this feeds are
    stated away from characteristic 2.
    """
    require_char_not_2(A.field)
    chain = derived_series(A)
    for i, sub in enumerate(chain):
        if len(sub) == 1:
            return i
    return None


def is_perfect(A: FiniteLieAlgebra) -> bool:
    chain = derived_series(A)
    return chain[1] == chain[0]


# ---------------------------------------------------------------------------
# linear oracle over structure constants


def _bracket_coords(gf, u, v, table):
    """[u, v] in coordinates from the structure-constant table."""
    d = len(u)
    out = [0] * d
    for i in range(d):
        if u[i] == 0:
            continue
        for j in range(d):
            if v[j] == 0:
                continue
            coef = gf.mul[u[i]][v[j]]
            for t in range(d):
                out[t] = gf.add[out[t]][gf.mul[coef][table[i][j][t]]]
    return out


def _derived_subspace_basis(gf, q, d, table, n):
    basis = [tuple(1 if t == i else 0 for t in range(d)) for i in range(d)]
    for _ in range(n):
        brackets = [
            _bracket_coords(gf, u, v, table)
            for ui, u in enumerate(basis)
            for v in basis[ui + 1:]
        ]
        basis, _ = row_reduce(gf, brackets)
        if not basis:
            return []
    return basis


def linear_oracle_Sn(q: int, dim: int, constants, n: int) -> Partition:
    """Cosets of the n-th derived subspace of the classical algebra.

    constants is either the upper-triangular dict accepted by the trivial
    generator or a full d x d table of coefficient tuples. Carrier index of
    a coordinate vector is its little-endian base-q packing. Odd order only.
    """
    if q % 2 == 0:
        raise CharTwoGate("linear oracle is stated for odd characteristic")
    gf = get_gf(q)
    if isinstance(constants, dict):
        table = constants_table(gf, dim, constants)
    else:
        table = constants
    check_constants_lie(gf, dim, table)
    basis = _derived_subspace_basis(gf, q, dim, table, n)
    sub = span_indices(gf, basis, dim, q)
    size = q ** dim
    sub_digits = [int_to_digits(w, q, dim) for w in sub]
    class_map = {}
    for v in range(size):
        vd = int_to_digits(v, q, dim)
        rep = min(
            digits_to_int([gf.add[vd[t]][w[t]] for t in range(dim)], q)
            for w in sub_digits
        )
        class_map[rep] = class_map.get(rep, 0) | (1 << v)
    return Partition(list(class_map.values()))


def detect_trivial(L: FiniteLieHyperalgebra):
    """Recover (q, dim, constants table, packed-to-carrier map) from a
    single-valued presentation, or None when the algebra is not trivially
    presented over a standard prime field.

    The scalar field must match the canonical prime-field tables after
    renaming k to the k-fold sum of one; prime powers must match directly.
    """
    if not L.is_trivial or not L.field.is_trivial:
        return None
    F = L.field
    q = F.size
    try:
        fld = FiniteField.from_trivial_hyperfield(F).validate()
    except NotAField:
        return None
    gf = get_gf(q)
    if fld.add == [list(r) for r in gf.add] and fld.mul == [list(r) for r in gf.mul]:
        remap = list(range(q))
    else:
        # prime-field remap: k maps to the k-fold sum of one
        remap = [fld.zero] * q
        acc = fld.zero
        for k in range(1, q):
            acc = fld.add[acc][fld.one]
            remap[k] = acc
        if len(set(remap)) != q:
            return None
        inv = {v: k for k, v in enumerate(remap)}
        for a in range(q):
            for b in range(q):
                if (
                    inv[fld.add[remap[a]][remap[b]]] != gf.add[a][b]
                    or inv[fld.mul[remap[a]][remap[b]]] != gf.mul[a][b]
                ):
                    return None

    add = L.add_elt
    smul = L.smul_elt
    zero = L.zero
    spanned = {zero}
    basis = []
    for v in range(L.size):
        if v in spanned:
            continue
        basis.append(v)
        spanned = {add[s][smul[remap[lam]][v]] for s in spanned for lam in range(q)}
    d = len(basis)
    if q ** d != L.size or len(spanned) != L.size:
        return None
    elt_of_packed = [0] * L.size
    for packed in range(L.size):
        digits = int_to_digits(packed, q, d)
        acc = zero
        for i, lam in enumerate(digits):
            acc = add[acc][smul[remap[lam]][basis[i]]]
        elt_of_packed[packed] = acc
    if len(set(elt_of_packed)) != L.size:
        return None
    packed_of_elt = {e: p for p, e in enumerate(elt_of_packed)}
    table = [
        [
            tuple(int_to_digits(packed_of_elt[L.br_elt[basis[i]][basis[j]]], q, d))
            for j in range(d)
        ]
        for i in range(d)
    ]
    try:
        check_constants_lie(gf, d, table)
    except NotLie:
        return None
    return q, d, table, elt_of_packed


def linear_oracle_partition(L: FiniteLieHyperalgebra, n: int) -> Partition:
    """linear_oracle_Sn transported onto the carrier order of L."""
    info = detect_trivial(L)
    if info is None:
        raise NotLie(
            "trivial-presentation",
            None,
            "linear oracle needs a single-valued algebra over a standard field",
        )
    q, d, table, elt_of_packed = info
    packed_part = linear_oracle_Sn(q, d, table, n)
    masks = []
    for m in packed_part.classes:
        out = 0
        for packed in iter_bits(m):
            out |= 1 << elt_of_packed[packed]
        masks.append(out)
    return Partition(masks)


def classical_dims_chain(q: int, dim: int, constants, depth: int):
    """Dimensions of the classical derived series from structure constants."""
    gf = get_gf(q)
    table = constants_table(gf, dim, constants) if isinstance(constants, dict) else constants
    out = [dim]
    for n in range(1, depth + 1):
        out.append(len(_derived_subspace_basis(gf, q, dim, table, n)))
    return out
