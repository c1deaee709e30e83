from App.models import Mat2, PslElement, RingId, NonUnitDeterminantError


def _ring(ring):
    return ring if isinstance(ring, RingId) else RingId(ring)


def mat_mul(left, right):
    return left @ right


def unipotent(ring, p, q):
    """T^p U^q = [[1, p + q*omega], [0, 1]]."""
    ring = _ring(ring)
    return Mat2(ring.one(), ring(p, q), ring.zero(), ring.one())


def generator_L(ring):
    ring = _ring(ring)
    if ring.d == 1:
        return Mat2.from_coords(ring, [[(0, 1), (0, 0)], [(0, 0), (0, -1)]])
    if ring.d == 3:
        # omega_u = omega - 1 is a primitive cube root of unity and omega_u^2 = -omega
        return Mat2.from_coords(ring, [[(0, -1), (0, 0)], [(0, 0), (-1, 1)]])
    return None


def generators(ring):
    ring = _ring(ring)
    A = Mat2.from_coords(ring, [[(0, 0), (-1, 0)], [(1, 0), (0, 0)]])
    return A, unipotent(ring, 1, 0), unipotent(ring, 0, 1), generator_L(ring)


def norm_max(matrix):
    return matrix.norm_max


def psl_canonical(matrix):
    return PslElement(matrix)


def inverse(matrix):
    det = matrix.det
    if not det.is_unit():
        raise NonUnitDeterminantError(f"Determinant {det} is not a unit of O_{matrix.ring.d}")
    # for a unit, conj(det) = det^-1
    det_inv = det.conjugate()
    adjugate = Mat2(matrix.a22, -matrix.a12, -matrix.a21, matrix.a11)
    return adjugate.scale(det_inv)


def mat_pow(matrix, exp):
    if exp < 0:
        matrix, exp = inverse(matrix), -exp
    result = Mat2.identity(matrix.ring)
    while exp:
        if exp & 1:
            result = result @ matrix
        matrix = matrix @ matrix
        exp >>= 1
    return result
