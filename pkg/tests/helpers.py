"""Shared machinery for the randomized family tests: random invertible
coordinate changes over F_p applied to the shipped plane configurations."""

from chernlab import Ideal, Polynomial, RingContext, parse_polynomial
from chernlab.linalg import rref_mod_p

PRIME_POOL = [32003, 31991, 30011, 20011, 10007]


def random_invertible_matrix(rng, r, p):
    while True:
        matrix = [[rng.randrange(p) for _ in range(r)] for _ in range(r)]
        _, pivots = rref_mod_p([row[:] for row in matrix], p)
        if len(pivots) == r:
            return matrix


def variable_images(ctx, matrix):
    """Images of the variables under the linear change x_j -> sum_i m[i][j] x_i."""
    r = ctx.nvars
    images = []
    for j in range(r):
        terms = {}
        for i in range(r):
            if matrix[i][j] % ctx.characteristic:
                mono = tuple(1 if k == i else 0 for k in range(r))
                terms[mono] = matrix[i][j]
        images.append(Polynomial(ctx, terms))
    return images


def transformed_planes(rng, p, names, blocks, parameters):
    """Apply a random invertible coordinate change to a plane configuration.

    ``blocks`` lists the generator strings per component; ``parameters`` the
    sop strings.  Returns (ctx, ideals, parameter ideal).
    """
    ctx = RingContext(names, p)
    images = variable_images(ctx, random_invertible_matrix(rng, ctx.nvars, p))

    def phi(text):
        return parse_polynomial(text, ctx).substitute(images)

    ideals = [Ideal(ctx, [phi(t) for t in block]) for block in blocks]
    j = Ideal(ctx, [phi(t) for t in parameters])
    return ctx, ideals, j


def e1_family(rng, p):
    return transformed_planes(
        rng, p, ["x", "y", "z", "w"],
        [["x", "y"], ["z", "w"]],
        ["x + z", "y + w"])


def e2_family(rng, p):
    names = ["x1", "x2", "x3", "x4", "x5", "x6"]
    return transformed_planes(
        rng, p, names,
        [names[:3], names[3:]],
        [f"{a} + {b}" for a, b in zip(names[:3], names[3:])])


def e3_family(rng, p):
    return transformed_planes(
        rng, p, ["x", "y", "z", "w"],
        [["x", "y"]],
        ["z", "w"])
