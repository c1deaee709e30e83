import logging

from App.models import (
    Block,
    BoundReport,
    DeterminantError,
    Mat2,
    MalformedMatrixError,
    RingId,
    WordRep,
)
from App.models.word import EPSILON_RANGE
from App.controllers.bianchi import generators, mat_pow, unipotent
from App.controllers.quadratic_ring import euclidean_minimum, nearest_quotient

logger = logging.getLogger(__name__)

GENERATOR_SYMBOLS = ("A", "T", "U", "L")


def _require_det_one(matrix):
    if matrix.det != matrix.ring.one():
        raise DeterminantError(f"Expected determinant 1 over O_{matrix.ring.d}, got {matrix.det}")


def reduce_step(matrix):
    """
    One Euclidean step M -> M * [[1, theta], [0, 1]] * A with theta = -nearest_quotient(delta, gamma),
    so the new bottom-left entry theta*gamma + delta is the division remainder of delta by gamma.
    """
    alpha, beta, gamma, delta = matrix.entries
    if not gamma:
        raise MalformedMatrixError("reduce_step needs a nonzero bottom-left entry")
    theta = -nearest_quotient(delta, gamma)
    return theta, Mat2(theta * alpha + beta, -alpha, theta * gamma + delta, -gamma)


def _reduction_steps(matrix):
    while matrix.a21:
        theta, following = reduce_step(matrix)
        assert following.a21.norm < matrix.a21.norm, f"bottom-left norm did not drop at {matrix}"
        assert following.norm_max <= matrix.norm_max, f"matrix norm grew from {matrix} to {following}"
        yield theta, following
        matrix = following


def reduction_trace(matrix):
    """[M_0, M_1, ..., M_k] with M_k upper-triangular."""
    return [matrix] + [following for _, following in _reduction_steps(matrix)]


def triangularize(matrix):
    """
    Returns ([(p_1, q_1), ..., (p_k, q_k)], M_k) where M_k = M H_1 ... H_k is upper-triangular
    and H_l^-1 = A^-1 T^p_l U^q_l.
    """
    _require_det_one(matrix)
    blocks = []
    last = matrix
    for theta, last in _reduction_steps(matrix):
        # theta = -p - q*omega
        blocks.append((-theta.x, -theta.y))
    return blocks, last


def _l_powers(ring):
    L = generators(ring)[3]
    if L is None:
        return [Mat2.identity(ring)]
    return [mat_pow(L, e) for e in range(EPSILON_RANGE[ring.d] + 1)]


def decompose_upper(upper):
    """(epsilon, p0, q0, sl_sign) with L^epsilon T^p0 U^q0 = sl_sign * upper."""
    if upper.a21:
        raise MalformedMatrixError(f"Expected an upper-triangular matrix, got {upper}")
    _require_det_one(upper)
    rho, beta, _, tau = upper.entries
    for epsilon, power in enumerate(_l_powers(upper.ring)):
        lam = power.a11
        for sign in (1, -1):
            if sign * rho == lam and sign * tau == power.a22:
                # sign * beta = lam * sigma and lam^-1 = sign * tau
                sigma = beta * tau
                return epsilon, sigma.x, sigma.y, sign
    raise MalformedMatrixError(f"Diagonal of {upper} is not a power of L up to sign")


def represent(matrix):
    _require_det_one(matrix)
    pairs, upper = triangularize(matrix)
    epsilon, p0, q0, sign = decompose_upper(upper)
    # M = M_k H_k^-1 ... H_1^-1 and every H^-1 carries one factor A^-1 = -A
    sl_sign = sign * (-1) ** len(pairs)
    return WordRep(
        ring=matrix.ring,
        epsilon=epsilon,
        p0=p0,
        q0=q0,
        blocks=tuple(Block(p, q) for p, q in reversed(pairs)),
        sl_sign=sl_sign,
    )


def evaluate(word):
    ring = word.ring
    A, _, _, L = generators(ring)
    result = unipotent(ring, word.p0, word.q0)
    if word.epsilon:
        result = mat_pow(L, word.epsilon) @ result
    for block in word.blocks:
        result = result @ A @ unipotent(ring, block.p, block.q)
    return result.scale(word.sl_sign)


def lift_to_sl(word):
    """Flat (symbol, exponent) tokens over A, T, U, L whose product is exactly the represented matrix."""
    tokens = [("L", word.epsilon), ("T", word.p0), ("U", word.q0)]
    for block in word.blocks:
        tokens += [("A", 1), ("T", block.p), ("U", block.q)]
    if word.sl_sign == -1:
        tokens.append(("A", 2))
    return [(symbol, exp) for symbol, exp in tokens if exp]


def evaluate_tokens(ring, tokens):
    ring = ring if isinstance(ring, RingId) else RingId(ring)
    by_symbol = dict(zip(GENERATOR_SYMBOLS, generators(ring)))
    result = Mat2.identity(ring)
    for symbol, exp in tokens:
        if symbol in ("T", "U"):
            # closed form for the unipotent generators
            factor = unipotent(ring, exp, 0) if symbol == "T" else unipotent(ring, 0, exp)
        else:
            generator = by_symbol.get(symbol)
            if generator is None:
                raise ValueError(f"Generator {symbol} does not exist over O_{ring.d}")
            factor = mat_pow(generator, exp)
        result = result @ factor
    return result


def random_word(ring, length, rng):
    """Uniform random letters over the generators of SL(2, O_d) and their inverses."""
    ring = ring if isinstance(ring, RingId) else RingId(ring)
    symbols = ["A", "T", "U"] + (["L"] if ring.d in EPSILON_RANGE else [])
    letters = [(symbol, exp) for symbol in symbols for exp in (1, -1)]
    return [rng.choice(letters) for _ in range(length)]


def random_matrix(ring, rng, max_length):
    return evaluate_tokens(ring, random_word(ring, rng.randint(0, max_length), rng))


def check_bounds(matrix, word):
    ring = matrix.ring
    size = matrix.norm_max
    k = word.k
    kappa = euclidean_minimum(ring)
    exponents = [ring(word.p0, word.q0)] + [ring(block.p, block.q) for block in word.blocks]
    max_exponent_norm = max(z.norm for z in exponents)
    # k <= 1 + floor(-log_kappa |M|)  <=>  kappa^(k-1) * |M| >= 1
    iteration_ok = k <= 1 or kappa ** (k - 1) * size >= 1
    # k < 1 - log_kappa |M|  <=>  kappa^(k-1) * |M| > 1
    strict_ok = k <= 0 or kappa ** (k - 1) * size > 1
    if not strict_ok:
        logger.warning("Strict iteration bound fails over O_%s: |M| = %s, k = %s", ring.d, size, k)
    head_individual_ok = None
    if ring.d == 1:
        head_individual_ok = word.p0 ** 2 <= size and word.q0 ** 2 <= size
    return BoundReport(
        norm=size,
        k=k,
        max_exponent_norm=max_exponent_norm,
        exponent_ok=max_exponent_norm <= size,
        iteration_ok=iteration_ok,
        strict_iteration_ok=strict_ok,
        head_individual_ok=head_individual_ok,
    )
