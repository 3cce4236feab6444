"""Random model generators shared by the property and acceptance tests."""

import random

from orbinv.cyclo import Matrix, field
from orbinv.grp import GroupTooLarge, generate_group
from orbinv.model import AFFINE, PROJECTIVE, ModelError, QuotientModel

CONDUCTORS = (2, 3, 4, 5, 6, 7, 8, 9, 10, 12)


def diagonal_group(N, exponent_rows, cap=10_000):
    fld = field(N)
    n = len(exponent_rows[0])
    gens = [Matrix.diagonal(fld, [fld.zeta(a) for a in row]) for row in exponent_rows]
    return generate_group(gens, cap, fld=fld, dim=n)


def random_diagonal_model(rng: random.Random, max_dim=4, max_order=36, kinds=(AFFINE, PROJECTIVE)):
    """A random abelian diagonal action, resampled until it is a valid model."""
    while True:
        N = rng.choice(CONDUCTORS)
        n = rng.randint(1, max_dim)
        kind = rng.choice(kinds)
        if kind == PROJECTIVE and n == 1:
            continue
        ngen = rng.randint(1, 2)
        rows = [[rng.randrange(N) for _ in range(n)] for _ in range(ngen)]
        try:
            G = diagonal_group(N, rows, cap=max_order)
        except GroupTooLarge:
            continue
        try:
            return QuotientModel(kind, G, name=f"diag{N}:{rows}:{kind}"), rows
        except ModelError:
            continue


def random_conjugated_model(rng: random.Random, max_dim=3, max_order=12):
    """A diagonal action conjugated by a random integer matrix, so generators are not diagonal."""
    while True:
        model, rows = random_diagonal_model(rng, max_dim, max_order, kinds=(AFFINE,))
        n = model.n
        fld = model.field
        P = Matrix(fld, [[fld.from_int(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)])
        from orbinv.cyclo import mat_inverse, rank
        if rank(P) < n:
            continue
        Pi = mat_inverse(P)
        gens = [P * g * Pi for g in model.group.generators]
        G = generate_group(gens, max_order, fld=fld, dim=n)
        return QuotientModel(AFFINE, G, name=f"conj:{model.name}"), rows
