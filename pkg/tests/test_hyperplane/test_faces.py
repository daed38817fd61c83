from fractions import Fraction
import itertools
from random import Random

from toricmorse.homology.poincare import poincare_hyperplane
from toricmorse.hyperplane.faces import (
    chambers,
    compose_signs,
    face_leq,
    face_poset,
)

from ..helpers import hyperplanes


def test_sign_operations():
    assert face_leq((0, 1), (1, 1))
    assert face_leq((0, 0), (-1, 1))
    assert not face_leq((1, 0), (-1, 1))

    assert compose_signs((0, 1, 0), (-1, -1, 1)) == (-1, 1, 1)


def test_boolean_faces(boolean):
    faces = face_poset(boolean)
    assert faces.f_vector() == (1, 4, 4)
    assert faces.euler_characteristic() == 1
    assert sorted(face.signs for face in faces.chambers()) == [
        (-1, -1),
        (-1, 1),
        (1, -1),
        (1, 1),
    ]
    assert faces.face_at((0, 5)).signs == (0, 1)
    assert [face.signs for face in faces.minimal_faces()] == [(0, 0)]


def test_figure_faces(figure):
    faces = face_poset(figure)
    assert faces.f_vector() == (1, 6, 6)
    for face in faces:
        assert figure.sign_vector(face.witness) == face.signs


def test_affine_faces():
    # Two parallel lines and a transversal line.
    arrangement = hyperplanes(2, ((1, 0), 0), ((1, 0), 1), ((0, 1), 0))
    faces = face_poset(arrangement)
    assert faces.f_vector() == (2, 7, 6)
    assert faces.euler_characteristic() == 1
    assert len(chambers(arrangement)) == 6


def random_arrangement(random, n):
    forms = set()
    while len(forms) < n:
        normal = (random.randint(-2, 2), random.randint(-2, 2))
        if any(normal):
            forms.add((normal, random.randint(-2, 2)))
    return hyperplanes(2, *sorted(forms))


def test_faces_against_sampled_sign_vectors():
    random = Random(1)
    for _ in range(8):
        arrangement = random_arrangement(random, 3)
        faces = face_poset(arrangement)

        # Every sign vector seen on a fine grid is a face, and every face is
        # realized by its own witness.
        grid = [Fraction(k, 7) for k in range(-35, 36, 3)]
        for point in itertools.product(grid, grid):
            assert arrangement.sign_vector(point) in faces
        for face in faces:
            assert arrangement.sign_vector(face.witness) == face.signs

        assert faces.euler_characteristic() == 1
        assert len(faces.chambers()) == poincare_hyperplane(arrangement)(1)
