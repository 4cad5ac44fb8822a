"""
Named algebraic equations used across the project.

Half-length series (z counts step pairs):
  A128729   z^2 S^3 - z(2-z) S^2 + (1-z^2) S - 1 + z + z^2 = 0
  A128728   the same cubic with an extra -t z^2 in the constant term
The U-cubic is the level-0 series (1 - z u_1)/z^2 rewritten in Z = z^2.
"""
from .algebraic import AlgEquation
from .rings import RATIONALS, TPOLYS, TPoly

A128729 = AlgEquation.from_terms({
    (3, 2): 1,
    (2, 1): -2, (2, 2): 1,
    (1, 0): 1, (1, 2): -1,
    (0, 0): -1, (0, 1): 1, (0, 2): 1,
}, RATIONALS, 'A128729')

A128728 = AlgEquation.from_terms({
    (3, 2): 1,
    (2, 1): -2, (2, 2): 1,
    (1, 0): 1, (1, 2): -1,
    (0, 0): -1, (0, 1): 1, (0, 2): TPoly((1, -1)),
}, TPOLYS, 'A128728')

# 2ZU^2 - U - Z^2U^3 + 1 - Z^2U^2 + Z^2U - Z - Z^2
TRANSFORMED_U_CUBIC = AlgEquation.from_terms({
    (2, 1): 2,
    (1, 0): -1,
    (3, 2): -1,
    (0, 0): 1,
    (2, 2): -1,
    (1, 2): 1,
    (0, 1): -1,
    (0, 2): -1,
}, RATIONALS, 'U-cubic')

# S = 1 + z S^2, the Catalan numbers
CATALAN = AlgEquation.from_terms({
    (1, 0): 1,
    (0, 0): -1,
    (2, 1): -1,
}, RATIONALS, 'Catalan')


def avoidance_equation(track_t=False):
    """Half-length level-0 cubic, univariate or marked by t"""
    return A128728 if track_t else A128729
