"""
Dense exact-integer polynomials and shape analysis.

Coefficients are Python ints stored low degree first, so no overflow path
exists. Shape checks (unimodality, log-concavity, modes) work on the
coefficient sequence; real-root counting is exact, using square-free
decomposition and Sturm chains computed with sympy.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union
import logging
import re

import sympy

from .errors import PolynomialError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with integer coefficients; ``coeffs[k]`` is the coefficient of x^k."""
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = list(self.coeffs)
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise PolynomialError(f"coefficients must be integers, got {c!r}")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    @classmethod
    def of(cls, *coeffs: int) -> 'Polynomial':
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: int) -> 'Polynomial':
        return cls((c,))

    @classmethod
    def one_plus_x(cls, k: int = 1) -> 'Polynomial':
        """(1 + x)^k."""
        return power(cls((1, 1)), k)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: Union['Polynomial', int]) -> 'Polynomial':
        if isinstance(other, int):
            return add_constant(self, other)
        if isinstance(other, Polynomial):
            return add(self, other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> 'Polynomial':
        return scale(self, -1)

    def __sub__(self, other: Union['Polynomial', int]) -> 'Polynomial':
        if isinstance(other, int):
            return add_constant(self, -other)
        if isinstance(other, Polynomial):
            return add(self, scale(other, -1))
        return NotImplemented

    def __rsub__(self, other: int) -> 'Polynomial':
        if isinstance(other, int):
            return add_constant(scale(self, -1), other)
        return NotImplemented

    def __mul__(self, other: Union['Polynomial', int]) -> 'Polynomial':
        if isinstance(other, int):
            return scale(self, other)
        if isinstance(other, Polynomial):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> 'Polynomial':
        return power(self, k)

    def __call__(self, x: Any) -> Any:
        result = 0
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def to_list(self) -> List[int]:
        return list(self.coeffs)

    def to_text(self) -> str:
        """Exact text form, e.g. ``[1, 390, 660, 1120]``."""
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power_part = "x" if k == 1 else f"x^{k}"
                body = power_part if mag == 1 else f"{mag}{power_part}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += sign + body
        return text


def _poly(coeffs: Iterable[int]) -> Polynomial:
    return Polynomial(tuple(coeffs))


# ==================== Arithmetic ====================

def add(p: Polynomial, q: Polynomial) -> Polynomial:
    size = max(len(p.coeffs), len(q.coeffs))
    return _poly(p[k] + q[k] for k in range(size))


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() or q.is_zero():
        return Polynomial(())
    result = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            result[i + j] += a * b
    return _poly(result)


def shift_mul_x(p: Polynomial) -> Polynomial:
    """x * p."""
    if p.is_zero():
        return p
    return _poly((0,) + p.coeffs)


def power(p: Polynomial, k: int) -> Polynomial:
    """p^k by repeated squaring; p^0 = 1."""
    if k < 0:
        raise PolynomialError(f"negative exponent {k}")
    result = Polynomial((1,))
    base = p
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def scale(p: Polynomial, c: int) -> Polynomial:
    return _poly(c * a for a in p.coeffs)


def add_constant(p: Polynomial, c: int) -> Polynomial:
    coeffs = list(p.coeffs) or [0]
    coeffs[0] += c
    return _poly(coeffs)


def derivative(p: Polynomial) -> Polynomial:
    return _poly(k * c for k, c in enumerate(p.coeffs) if k > 0)


def parse_coefficients(text: str) -> Polynomial:
    """Read the list text form ``[1, 390, 660, 1120]`` (brackets optional)."""
    body = text.strip()
    if body.startswith('[') and body.endswith(']'):
        body = body[1:-1]
    parts = [part for part in re.split(r'[,\s]+', body) if part]
    try:
        return _poly(int(part) for part in parts)
    except ValueError as e:
        raise PolynomialError(f"not an integer coefficient list: {text!r}") from e


# ==================== Shape ====================

def _require_nonnegative(p: Polynomial, check: str):
    negative = [k for k, c in enumerate(p.coeffs) if c < 0]
    if negative:
        raise PolynomialError(f"{check} needs non-negative coefficients; x^{negative[0]} has {p[negative[0]]}",
                              index=negative[0])


def modes(p: Polynomial) -> Tuple[int, ...]:
    """Indices attaining the maximum coefficient."""
    if p.is_zero():
        return ()
    top = max(p.coeffs)
    return tuple(k for k, c in enumerate(p.coeffs) if c == top)


def is_unimodal(p: Polynomial) -> bool:
    """Coefficients weakly rise, then weakly fall."""
    _require_nonnegative(p, "unimodality")
    c = p.coeffs
    k = 0
    while k + 1 < len(c) and c[k] <= c[k + 1]:
        k += 1
    while k + 1 < len(c) and c[k] >= c[k + 1]:
        k += 1
    return k + 1 >= len(c)


def is_log_concave(p: Polynomial) -> bool:
    """a_i^2 >= a_{i-1} * a_{i+1} at every internal index, applied literally."""
    _require_nonnegative(p, "log-concavity")
    c = p.coeffs
    return all(c[i] * c[i] >= c[i - 1] * c[i + 1] for i in range(1, len(c) - 1))


def log_concavity_defects(p: Polynomial) -> List[int]:
    """Internal indices where a_i^2 < a_{i-1} * a_{i+1}."""
    _require_nonnegative(p, "log-concavity")
    c = p.coeffs
    return [i for i in range(1, len(c) - 1) if c[i] * c[i] < c[i - 1] * c[i + 1]]


# ==================== Exact real roots ====================

X = sympy.Symbol('x')


def _to_sympy(p: Polynomial) -> sympy.Poly:
    return sympy.Poly(list(reversed(p.coeffs)), X, domain='ZZ')


def _from_sympy(f: sympy.Poly) -> Polynomial:
    """Primitive integer polynomial, keeping the sign of the leading coefficient."""
    _, f = f.clear_denoms(convert=True)
    negative = f.LC() < 0
    _, f = f.primitive()
    if negative != (f.LC() < 0):
        f = -f
    return _poly(int(c) for c in reversed(f.all_coeffs()))


def square_free_decomposition(p: Polynomial) -> List[Tuple[Polynomial, int]]:
    """
    Factors f_i with p = c * prod f_i^i, each f_i square-free and pairwise coprime.

    Factors are returned as primitive integer polynomials with their multiplicity.
    """
    if p.is_zero():
        raise PolynomialError("the zero polynomial has no square-free decomposition")
    _, factors = _to_sympy(p).sqf_list()
    return [(_from_sympy(f), i) for f, i in factors]


def sturm_chain(p: Polynomial) -> List[Polynomial]:
    """Sturm chain of the square-free part of p, scaled to primitive integer polynomials."""
    if p.is_zero():
        raise PolynomialError("the zero polynomial has no Sturm chain")
    if p.degree < 1:
        return [p]
    return [_from_sympy(g) for g in _to_sympy(p).sturm() if not g.is_zero]


def _sign_changes(signs: Sequence[int]) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def distinct_real_roots(p: Polynomial) -> int:
    """V(-inf) - V(+inf) over the Sturm chain of p."""
    if p.is_zero():
        raise PolynomialError("the zero polynomial has infinitely many roots")
    if p.degree < 1:
        return 0
    chain = sturm_chain(p)
    at_plus = [1 if g.coeffs[-1] > 0 else -1 for g in chain]
    at_minus = [s if g.degree % 2 == 0 else -s for s, g in zip(at_plus, chain)]
    return _sign_changes(at_minus) - _sign_changes(at_plus)


def real_root_count(p: Polynomial) -> int:
    """Number of real roots counted with multiplicity."""
    return sum(i * distinct_real_roots(f) for f, i in square_free_decomposition(p))


def all_roots_real(p: Polynomial) -> bool:
    return real_root_count(p) == p.degree


# ==================== Reports ====================

@dataclass(frozen=True)
class ShapeReport:
    """Shape of one coefficient sequence."""
    degree: int
    is_unimodal: bool
    modes: Tuple[int, ...]
    is_log_concave: bool
    real_root_count: int
    all_roots_real: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            'degree': self.degree,
            'unimodal': self.is_unimodal,
            'modes': list(self.modes),
            'log_concave': self.is_log_concave,
            'real_root_count': self.real_root_count,
            'all_roots_real': self.all_roots_real,
        }


def analyze_shape(p: Polynomial) -> ShapeReport:
    roots = real_root_count(p)
    report = ShapeReport(
        degree=p.degree,
        is_unimodal=is_unimodal(p),
        modes=modes(p),
        is_log_concave=is_log_concave(p),
        real_root_count=roots,
        all_roots_real=roots == p.degree,
    )
    logger.debug(f"shape of {p}: {report}")
    return report


if __name__ == "__main__":
    examples = {
        "K43 zykov 3K7": Polynomial.of(1, 64, 147, 343),
        "K127 zykov 3K7": Polynomial.of(1, 148, 147, 343),
        "H": Polynomial.of(1, 390, 660, 1120),
        "S3": Polynomial.of(1, 8, 21, 23, 9),
    }
    for name, poly in examples.items():
        print(f"{name}: {poly} -> {analyze_shape(poly)}")
