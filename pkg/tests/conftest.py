import random

import pytest

from hyperlie.generators import (
    gen_orbit_quotient,
    gen_quotient_hyperfield,
    gen_trivial_from_lie,
    preset_structure,
)
from hyperlie.gf import get_gf, random_invertible
from hyperlie.structures import FiniteLieHyperalgebra


@pytest.fixture(scope="session")
def ex1():
    return preset_structure("ex1")


@pytest.fixture(scope="session")
def ex2():
    return preset_structure("ex2")


@pytest.fixture(scope="session")
def ab1():
    return preset_structure("ab1")


@pytest.fixture(scope="session")
def ab5():
    return preset_structure("ab5")


@pytest.fixture(scope="session")
def m1():
    return gen_quotient_hyperfield(7, [1, 2, 4])


@pytest.fixture(scope="session")
def m2():
    return gen_quotient_hyperfield(7, [1, 6])


@pytest.fixture(scope="session")
def m3():
    return gen_quotient_hyperfield(5, [1, 4])


@pytest.fixture(scope="session")
def m4():
    return gen_orbit_quotient(7, 2, {(0, 1): (0, 1)}, [1, 2, 4])


def _self_module(F):
    """Hyperfield viewed as a Lie hyperalgebra over itself with zero bracket."""
    n = F.size
    zero_row = [[1 << F.zero] * n for _ in range(n)]
    return FiniteLieHyperalgebra(
        field=F,
        names=list(F.names),
        add=[list(row) for row in F.add],
        smul=[list(row) for row in F.mul],
        bracket=zero_row,
    )


@pytest.fixture(scope="session")
def m1_module(m1):
    return _self_module(m1)


@pytest.fixture(scope="session")
def m2_module(m2):
    return _self_module(m2)


@pytest.fixture(scope="session")
def m3_module(m3):
    return _self_module(m3)


def _conjugated(q, dim, constants, seed):
    """Structure constants pushed through a random basis change.

    Keeps the isomorphism class while scrambling the table, so oracle
    comparisons cannot ride on a special basis.
    """
    gf = get_gf(q)
    rng = random.Random(seed)
    P = random_invertible(gf, dim, rng)
    from hyperlie.gf import mat_inverse

    Pinv = mat_inverse(gf, P)
    from hyperlie.generators import constants_table

    C = constants_table(gf, dim, constants)
    newC = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            vec = [0] * dim
            for a in range(dim):
                for b in range(dim):
                    coef = gf.mul[P[i][a]][P[j][b]]
                    if coef == 0:
                        continue
                    base = C[a][b]
                    for k in range(dim):
                        term = gf.mul[coef][base[k]]
                        for l in range(dim):
                            vec[l] = gf.add[vec[l]][gf.mul[term][Pinv[k][l]]]
            if any(vec):
                newC[(i, j)] = tuple(vec)
    return gen_trivial_from_lie(q, dim, newC)


_RANDOM_SPECS = [
    # (q, dim, constants, seed): base algebras conjugated by random bases
    (5, 2, {}, 11),
    (3, 2, {(0, 1): (0, 1)}, 23),
    (5, 3, {(0, 1): (0, 0, 1)}, 37),
    (3, 3, {(0, 1): (0, 0, 1), (0, 2): (2, 0, 0), (1, 2): (0, 1, 0)}, 41),
    (3, 4, {(0, 1): (0, 0, 1, 0), (0, 2): (0, 0, 0, 1)}, 53),
]


@pytest.fixture(scope="session")
def randomized_trivial():
    return [_conjugated(*spec) for spec in _RANDOM_SPECS]


@pytest.fixture(scope="session")
def fixture_files(tmp_path_factory, ex1, ex2, ab1, m1):
    from hyperlie.interchange import serialize_structure

    root = tmp_path_factory.mktemp("structures")
    paths = {}
    for name, obj in (("ex1", ex1), ("ex2", ex2), ("ab1", ab1), ("m1", m1)):
        p = root / f"{name}.json"
        p.write_text(serialize_structure(obj), encoding="utf-8")
        paths[name] = str(p)
    return paths
