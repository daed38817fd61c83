from fractions import Fraction
from random import Random
from textwrap import dedent

from toricmorse.hyperplane.arrangement import Arrangement, HalfspaceForm
from toricmorse.toric.arrangement import ToricArrangement


def equal_when_sorted(xs, ys):
    return list(sorted(xs)) == list(sorted(ys))


def lsorted(xs):
    return list(sorted(xs))


def toric(dim, *items):
    "Builds a ToricArrangement from (character, level) pairs."
    return ToricArrangement(dim, [(c, Fraction(q)) for c, q in items])


def running_example():
    "The subtori x = 1, x y^-1 = 1 and x y = 1 of the 2-torus."
    return toric(2, ((1, 0), 0), ((1, -1), 0), ((1, 1), 0))


def points_on_circle(n):
    "n distinct points on the circle, at levels k / n."
    return toric(1, *(((1,), Fraction(k, n)) for k in range(n)))


def coordinate_torus(dim):
    "The coordinate subtori x_k = 1 of the torus of dimension ``dim``."
    units = [tuple(int(j == k) for j in range(dim)) for k in range(dim)]
    return toric(dim, *((unit, 0) for unit in units))


def hyperplanes(dim, *forms):
    "Builds an Arrangement from (normal, constant) pairs."
    return Arrangement.from_forms(
        dim, [HalfspaceForm(alpha, Fraction(b)) for alpha, b in forms]
    )


def boolean_arrangement():
    return hyperplanes(2, ((1, 0), 0), ((0, 1), 0))


def figure_arrangement():
    "Three lines through the origin with normals (1, 0), (3, -4) and (3, 4)."
    return hyperplanes(2, ((1, 0), 0), ((3, -4), 0), ((3, 4), 0))


def random_central_arrangement(random, dim, n):
    "A central arrangement of at most n hyperplanes with normals in [-2, 2]^dim."
    normals = []
    while len(normals) < n:
        normal = tuple(random.randint(-2, 2) for _ in range(dim))
        if any(normal):
            normals.append(normal)
    return hyperplanes(dim, *((normal, 0) for normal in normals))


def central_corpus(size=50, seed=5):
    "Seeded random central arrangements in dimension at most 3."
    random = Random(seed)
    return [
        random_central_arrangement(random, random.randint(1, 3), random.randint(1, 6))
        for _ in range(size)
    ]


def text(string):
    return dedent(string).lstrip("\n")
