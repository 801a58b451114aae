"""Structure factories: trivialized classical algebras, coset hypergroups,
quotient hyperfields, and scalar-orbit quotients.

Every generator validates its own output with the matching checker before
returning; outputs are never trusted by construction.
"""

from __future__ import annotations

from itertools import permutations

from .errors import (
    AxiomFailure,
    HyperlieError,
    InternalInvariant,
    MalformedTable,
    NotAGroup,
    NotASubgroup,
    NotLie,
)
from .gf import GF, get_gf, int_to_digits, is_prime
from .sets import mask_of
from .structures import (
    FiniteHyperfield,
    FiniteLieHyperalgebra,
    Hypergroup,
    check_hyperfield,
    check_hypergroup,
    check_lie_hyperalgebra,
)

BASIS_LETTERS = "abcdefgh"


def gen_trivial_field(q: int) -> FiniteHyperfield:
    """Trivial hyperfield of GF(q): the field with singleton-valued tables."""
    gf = get_gf(q)
    names = [str(i) for i in range(q)]
    add = [[1 << gf.add[x][y] for y in range(q)] for x in range(q)]
    mul = [[1 << gf.mul[x][y] for y in range(q)] for x in range(q)]
    F = FiniteHyperfield(names, add, mul, gf_order=q)
    report = check_hyperfield(F)
    if not report.ok:
        raise InternalInvariant(f"trivial field of GF({q}) failed checks: {report.failures}")
    return F


def vector_name(vec, q: int) -> str:
    """Display name of a coefficient vector: 0, a, 2a, a+2b, ..."""
    terms = []
    for i, c in enumerate(vec):
        if c == 0:
            continue
        letter = BASIS_LETTERS[i]
        terms.append(letter if c == 1 else f"{c}{letter}")
    return "+".join(terms) if terms else "0"


def normalize_constants(dim: int, constants):
    """Upper-triangular dict {(i,j): vector} with i < j; fill checks."""
    out = {}
    for key, vec in dict(constants).items():
        i, j = key
        if not (0 <= i < dim and 0 <= j < dim) or i == j:
            raise MalformedTable(f"constant key {key} out of range for dim {dim}")
        v = tuple(vec)
        if len(v) != dim:
            raise MalformedTable(f"constant {key} has length {len(v)}, want {dim}")
        if i > j:
            raise MalformedTable(f"constants must use upper-triangular keys, got {key}")
        out[(i, j)] = v
    return out


def constants_table(gf: GF, dim: int, constants):
    """Full antisymmetric table C[i][j] = vector of [e_i, e_j]."""
    tri = normalize_constants(dim, constants)
    zero = tuple([0] * dim)
    C = [[zero] * dim for _ in range(dim)]
    for (i, j), v in tri.items():
        vv = tuple(x % gf.q for x in v)
        C[i][j] = vv
        C[j][i] = tuple(gf.neg[x] for x in vv)
    return C


def check_constants_lie(gf: GF, dim: int, C) -> None:
    """Jacobi on structure constants over GF(q); raises NotLie with witness."""

    def br(u, v):
        acc = [0] * dim
        for i in range(dim):
            if u[i] == 0:
                continue
            for j in range(dim):
                if v[j] == 0:
                    continue
                coef = gf.mul[u[i]][v[j]]
                for l, c in enumerate(C[i][j]):
                    acc[l] = gf.add[acc[l]][gf.mul[coef][c]]
        return tuple(acc)

    basis = [tuple(1 if k == i else 0 for k in range(dim)) for i in range(dim)]
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                t = [0] * dim
                for term in (
                    br(basis[i], br(basis[j], basis[k])),
                    br(basis[j], br(basis[k], basis[i])),
                    br(basis[k], br(basis[i], basis[j])),
                ):
                    t = [gf.add[a][b] for a, b in zip(t, term)]
                if any(t):
                    raise NotLie("jacobi-constants", (i, j, k), "Jacobi fails on basis triple")


def gen_trivial_from_lie(q: int, dim: int, constants) -> FiniteLieHyperalgebra:
    """Trivialize a classical Lie algebra over GF(q) given by structure constants.

    Carrier is all q^dim coefficient vectors; every hyperoperation is the
    singleton of the classical value. Even q is allowed but flags the result
    (theorem pipelines gate on characteristic separately).
    """
    gf = get_gf(q)
    if dim < 1 or dim > len(BASIS_LETTERS):
        raise MalformedTable(f"dim must be in 1..{len(BASIS_LETTERS)}, got {dim}")
    C = constants_table(gf, dim, constants)
    check_constants_lie(gf, dim, C)

    n = q ** dim
    # carrier index = base-q packing of the coefficient vector, basis 0 lowest
    vecs = [tuple(int_to_digits(idx, q, dim)) for idx in range(n)]

    def vidx(v) -> int:
        out = 0
        for d in reversed(v):
            out = out * q + d
        return out

    def vadd(u, v):
        return tuple(gf.add[a][b] for a, b in zip(u, v))

    def vsmul(lam, v):
        return tuple(gf.mul[lam][a] for a in v)

    def vbr(u, v):
        acc = [0] * dim
        for i in range(dim):
            if u[i] == 0:
                continue
            for j in range(dim):
                if v[j] == 0:
                    continue
                coef = gf.mul[u[i]][v[j]]
                for l, c in enumerate(C[i][j]):
                    if c:
                        acc[l] = gf.add[acc[l]][gf.mul[coef][c]]
        return tuple(acc)

    names = [vector_name(v, q) for v in vecs]
    add = [[1 << vidx(vadd(u, v)) for v in vecs] for u in vecs]
    smul = [[1 << vidx(vsmul(lam, v)) for v in vecs] for lam in range(q)]
    bracket = [[1 << vidx(vbr(u, v)) for v in vecs] for u in vecs]

    F = gen_trivial_field(q)
    L = FiniteLieHyperalgebra(F, names, add, smul, bracket)
    L.even_char_warning = q % 2 == 0
    report = check_lie_hyperalgebra(L)
    if not report.ok:
        report.raise_if_failed()
    return L


def _group_checks(table):
    n = len(table)
    for row in table:
        if len(row) != n or any(not (0 <= v < n) for v in row):
            raise MalformedTable("group table must be square over its own indices")
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if table[table[x][y]][z] != table[x][table[y][z]]:
                    raise NotAGroup("group-associative", (x, y, z))
    ident = None
    for e in range(n):
        if all(table[e][x] == x and table[x][e] == x for x in range(n)):
            ident = e
            break
    if ident is None:
        raise NotAGroup("group-identity", ())
    for x in range(n):
        if not any(table[x][y] == ident for y in range(n)):
            raise NotAGroup("group-inverses", (x,))
    return ident


def gen_coset_hypergroup(group_table, subgroup, names=None) -> Hypergroup:
    """Left-coset hypergroup of a finite group: entry (xH, yH) = {zH : z = xhy}."""
    table = [list(r) for r in group_table]
    n = len(table)
    ident = _group_checks(table)
    H = sorted(set(subgroup))
    if any(not (0 <= h < n) for h in H):
        raise NotASubgroup(f"subgroup elements out of range: {H}")
    if ident not in H:
        raise NotASubgroup("subgroup must contain the identity")
    for a in H:
        for b in H:
            if table[a][b] not in H:
                raise NotASubgroup(f"not closed: {a}*{b} outside subgroup")
    elem_names = names if names is not None else [str(i) for i in range(n)]

    coset_of = [None] * n
    cosets = []
    for x in range(n):
        if coset_of[x] is None:
            members = sorted({table[x][h] for h in H})
            ci = len(cosets)
            cosets.append(members)
            for m in members:
                coset_of[m] = ci
    coset_names = [f"[{elem_names[members[0]]}]" for members in cosets]
    k = len(cosets)
    add = []
    for a in range(k):
        row = []
        x = cosets[a][0]
        for b in range(k):
            y = cosets[b][0]
            row.append(mask_of(coset_of[table[table[x][h]][y]] for h in H))
        add.append(row)
    hg = Hypergroup(coset_names, add)
    report = check_hypergroup(hg)
    if not report.ok:
        raise InternalInvariant(f"coset hypergroup failed checks: {report.failures}")
    return hg


def make_cyclic_group(k: int):
    table = [[(i + j) % k for j in range(k)] for i in range(k)]
    names = [str(i) for i in range(k)]
    return table, names


def make_s3():
    """Symmetric group on 3 points; elements ordered lexicographically."""
    perms = sorted(permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms]
    names = ["".join(map(str, p)) for p in perms]
    return table, names


def gen_quotient_hyperfield(q: int, subgroup) -> FiniteHyperfield:
    """Quotient of GF(q), q prime, by a multiplicative subgroup H.

    Carrier {0} plus cosets aH; class sum = classes meeting the elementwise
    sum; class product is single-valued. Output must pass check_hyperfield.
    """
    if not is_prime(q):
        raise HyperlieError(f"quotient hyperfield needs prime q, got {q}")
    H = sorted(set(int(h) % q for h in subgroup))
    if 0 in H or 1 not in H:
        raise NotASubgroup("subgroup must be a subset of units containing 1")
    for a in H:
        for b in H:
            if (a * b) % q not in H:
                raise NotASubgroup(f"not closed under multiplication: {a}*{b}")

    class_of = [None] * q
    class_of[0] = 0
    members = [[0]]
    for a in range(1, q):
        if class_of[a] is None:
            coset = sorted((a * h) % q for h in H)
            ci = len(members)
            members.append(coset)
            for m in coset:
                class_of[m] = ci
    names = ["0"] + [f"[{m[0]}]" for m in members[1:]]
    k = len(members)
    add = []
    mul = []
    for a in range(k):
        add_row = []
        mul_row = []
        for b in range(k):
            add_row.append(mask_of({class_of[(u + v) % q] for u in members[a] for v in members[b]}))
            mul_row.append(1 << class_of[(members[a][0] * members[b][0]) % q])
        add.append(add_row)
        mul.append(mul_row)
    F = FiniteHyperfield(names, add, mul, gf_order=q if len(H) == 1 else None)
    report = check_hyperfield(F)
    report.raise_if_failed(AxiomFailure)
    return F


def gen_orbit_quotient(q: int, dim: int, constants, subgroup) -> FiniteLieHyperalgebra:
    """Lie hyperalgebra on scalar-orbit classes of a trivial algebra.

    Carrier: orbits of GF(q)^dim under scaling by the multiplicative
    subgroup H; scalars: the quotient hyperfield of GF(q) by H. The induced
    bracket and scalar action are single-valued on orbits; addition is
    genuinely multivalued when |H| > 1.
    """
    F = gen_quotient_hyperfield(q, subgroup)
    gf = get_gf(q)
    H = sorted(set(int(h) % q for h in subgroup))
    C = constants_table(gf, dim, constants)
    check_constants_lie(gf, dim, C)
    n = q ** dim

    def digits(idx):
        v = []
        x = idx
        for _ in range(dim):
            v.append(x % q)
            x //= q
        return tuple(v)

    def vidx(v):
        out = 0
        for d in reversed(v):
            out = out * q + d
        return out

    vecs = [digits(i) for i in range(n)]

    orbit_of = [None] * n
    orbits = []
    for i in range(n):
        if orbit_of[i] is None:
            members = sorted({vidx(tuple(gf.mul[h][c] for c in vecs[i])) for h in H})
            oi = len(orbits)
            orbits.append(members)
            for m in members:
                orbit_of[m] = oi
    names = [
        "0" if members == [0] else f"[{vector_name(vecs[members[0]], q)}]"
        for members in orbits
    ]
    k = len(orbits)

    def vbr(u, v):
        acc = [0] * dim
        for i in range(dim):
            if u[i] == 0:
                continue
            for j in range(dim):
                if v[j] == 0:
                    continue
                coef = gf.mul[u[i]][v[j]]
                for l, c in enumerate(C[i][j]):
                    if c:
                        acc[l] = gf.add[acc[l]][gf.mul[coef][c]]
        return tuple(acc)

    add = []
    bracket = []
    for a in range(k):
        add_row = []
        br_row = []
        for b in range(k):
            sums = set()
            for u in orbits[a]:
                vu = vecs[u]
                for v in orbits[b]:
                    sums.add(orbit_of[vidx(tuple(gf.add[x][y] for x, y in zip(vu, vecs[v])))])
            add_row.append(mask_of(sums))
            br_row.append(1 << orbit_of[vidx(vbr(vecs[orbits[a][0]], vecs[orbits[b][0]]))])
        add.append(add_row)
        bracket.append(br_row)

    # scalar row for field class |c| acts by any representative scalar
    field_reps = [0] + [
        int(F.names[ci][1:-1]) for ci in range(1, F.size)
    ]
    smul = []
    for ci in range(F.size):
        lam = field_reps[ci]
        row = []
        for b in range(k):
            row.append(1 << orbit_of[vidx(tuple(gf.mul[lam][c] for c in vecs[orbits[b][0]]))])
        smul.append(row)

    L = FiniteLieHyperalgebra(F, names, add, smul, bracket)
    report = check_lie_hyperalgebra(L)
    if not report.ok:
        report.raise_if_failed()
    return L


# Named structure-constant presets used by tests and the CLI.
CONSTANT_PRESETS = {
    "ex1": (3, 4, {(1, 2): (1, 0, 0, 0), (1, 3): (0, 1, 0, 0), (2, 3): (0, 0, 2, 0)}),
    "ex2": (3, 3, {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0), (0, 2): (0, 2, 0)}),
    "ab1": (3, 1, {}),
    "ab5": (5, 1, {}),
}


def preset_structure(name: str) -> FiniteLieHyperalgebra:
    key = name.lower()
    if key not in CONSTANT_PRESETS:
        raise HyperlieError(f"unknown preset {name!r}; have {sorted(CONSTANT_PRESETS)}")
    q, dim, constants = CONSTANT_PRESETS[key]
    return gen_trivial_from_lie(q, dim, constants)
