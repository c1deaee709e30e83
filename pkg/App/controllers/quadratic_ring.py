import logging
from fractions import Fraction
from itertools import product
from math import isqrt

from App.models import RingId, QuadInt

logger = logging.getLogger(__name__)

# Explicit entry sets {z : N(z) < 1/(1 - kappa(d))}, as (x, y) coordinates in the basis {1, omega}
ENTRY_SETS = {
    1: [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)],
    2: [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (-1, 1), (-1, -1), (1, 1), (1, -1)],
    3: [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)],
    7: [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)],
    11: [
        (0, 0), (1, 0), (-1, 0), (2, 0), (-2, 0), (0, 1), (0, -1),
        (1, 1), (-1, -1), (1, -1), (-1, 1), (2, -1), (-2, 1),
    ],
}

# the quotient search looks this far around the rounded coordinates of a/b
QUOTIENT_WINDOW = 2


def _ring(ring):
    return ring if isinstance(ring, RingId) else RingId(ring)


def omega_square_rule(ring):
    return _ring(ring).omega_square


def norm(z):
    return z.norm


def conjugate(z):
    return z.conjugate()


def units(ring):
    ring = _ring(ring)
    return {QuadInt(ring, x, y) for x, y in product(range(-2, 3), repeat=2) if QuadInt(ring, x, y).norm == 1}


def euclidean_minimum(ring):
    d = _ring(ring).d
    if d in (1, 2):
        return Fraction(d + 1, 4)
    return Fraction((d + 1) ** 2, 16 * d)


def entry_bound(ring):
    """1/(1 - kappa(d)): entries of the exhaustive search have norm strictly below this."""
    return 1 / (1 - euclidean_minimum(ring))


def _round_half_up(numerator, denominator):
    # nearest integer to numerator/denominator for denominator > 0
    return (2 * numerator + denominator) // (2 * denominator)


def nearest_quotient(a, b):
    """
    The q in O_d minimising N(a/b - q). Ties go to the lexicographically
    smallest (x, y). Everything is done in integers: with a * conj(b) = u + v*omega
    and n = N(b), N(a/b - q) = N((u - n*qx) + (v - n*qy)*omega) / n^2.
    """
    if not b:
        raise ZeroDivisionError(f"division of {a} by zero in O_{b.ring.d}")
    ring = a.ring
    scaled = a * b.conjugate()
    n = b.norm
    qx0 = _round_half_up(scaled.x, n)
    qy0 = _round_half_up(scaled.y, n)
    window = range(-QUOTIENT_WINDOW, QUOTIENT_WINDOW + 1)
    best = min(
        (
            QuadInt(ring, scaled.x - n * (qx0 + dx), scaled.y - n * (qy0 + dy)).norm,
            qx0 + dx,
            qy0 + dy,
        )
        for dx, dy in product(window, window)
    )
    return QuadInt(ring, best[1], best[2])


def euclidean_divmod(a, b):
    q = nearest_quotient(a, b)
    return q, a - q * b


def entry_candidate_set(ring):
    ring = _ring(ring)
    bound = entry_bound(ring)
    # N(x + y*omega) >= d*y^2/4 and |x| <= sqrt(N) + |y|, so this radius covers the whole set
    radius = 2 * (isqrt(int(bound)) + 1) + 2
    span = range(-radius, radius + 1)
    return {QuadInt(ring, x, y) for x, y in product(span, span) if QuadInt(ring, x, y).norm < bound}


def listed_entries(ring):
    ring = _ring(ring)
    return {QuadInt(ring, x, y) for x, y in ENTRY_SETS[ring.d]}
