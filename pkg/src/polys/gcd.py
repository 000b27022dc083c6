"""Multivariate gcd by recursive primitive subresultant remainder sequences.

Polynomials are viewed in K[x_0..x_{v-1}][x_v] with x_v the highest-index
variable present. Contents recurse on fewer variables; primitive parts run a
subresultant PRS. Deterministic, no modular shortcuts.
"""

import logging
from typing import Any, Sequence

from .poly import Poly, check_compatible, exact_divide

logger = logging.getLogger(__name__)

Univariate = dict[int, Poly]


def _top_variable(*polys: Poly) -> int:
    top = -1
    for p in polys:
        for monomial in p.monomials():
            for j in range(len(monomial) - 1, top, -1):
                if monomial[j]:
                    top = j
                    break
    return top


def _to_univariate(f: Poly, var: int) -> Univariate:
    grouped: dict[int, dict[tuple[int, ...], Any]] = {}
    for monomial, coeff in f.term_map().items():
        power = monomial[var]
        stripped = monomial[:var] + (0,) + monomial[var + 1 :]
        grouped.setdefault(power, {})[stripped] = coeff
    return {power: Poly(f.ring, terms) for power, terms in grouped.items()}


def _from_univariate(u: Univariate, var: int, like: Poly) -> Poly:
    result = like.ring.zero()
    unit = tuple(1 if j == var else 0 for j in range(like.ring.nvars))
    for power, coeff in u.items():
        shift = tuple(e * power for e in unit)
        result = result + coeff.mul_term(shift, like.field.one)
    return result


def _pseudo_remainder(a: Univariate, b: Univariate) -> Univariate:
    """lc(b)^(deg a - deg b + 1) * a reduced modulo b."""
    deg_b = max(b)
    lc_b = b[deg_b]
    remainder = dict(a)
    steps = max(a) - deg_b + 1
    while remainder and max(remainder) >= deg_b:
        deg_r = max(remainder)
        lc_r = remainder[deg_r]
        updated = {k: c * lc_b for k, c in remainder.items()}
        for k, c in b.items():
            target = k + deg_r - deg_b
            value = updated.get(target)
            updated[target] = -(lc_r * c) if value is None else value - lc_r * c
        remainder = {k: c for k, c in updated.items() if c}
        steps -= 1
    if steps > 0 and remainder:
        factor = lc_b**steps
        remainder = {k: c * factor for k, c in remainder.items()}
    return remainder


def _content(f: Poly, var: int) -> Poly:
    return _gcd_list(list(_to_univariate(f, var).values()))


def _gcd_list(polys: Sequence[Poly]) -> Poly:
    result = polys[0]
    for p in polys[1:]:
        if result.is_unit():
            break
        result = _gcd(result, p)
    return result


def _subresultant(a: Poly, b: Poly, var: int) -> Poly:
    """Gcd of two primitive polynomials that both involve ``var``."""
    if a.degree_in(var) < b.degree_in(var):
        a, b = b, a
    u, v = _to_univariate(a, var), _to_univariate(b, var)
    ring = a.ring
    g = h = ring.one()
    while True:
        delta = max(u) - max(v)
        r = _pseudo_remainder(u, v)
        if not r:
            result = _from_univariate(v, var, a)
            return exact_divide(result, _content(result, var))
        if max(r) == 0:
            return ring.one()
        u = v
        divisor = g * h**delta
        v = {k: exact_divide(c, divisor) for k, c in r.items()}
        g = u[max(u)]
        if delta == 0:
            continue
        h = exact_divide(g**delta, h ** (delta - 1))


def _gcd(a: Poly, b: Poly) -> Poly:
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.is_constant() or b.is_constant():
        return a.ring.one()
    var = _top_variable(a, b)
    if not a.involves(var):
        return _gcd(a, _content(b, var))
    if not b.involves(var):
        return _gcd(_content(a, var), b)
    content_a, content_b = _content(a, var), _content(b, var)
    common = _gcd(content_a, content_b)
    primitive = _subresultant(
        exact_divide(a, content_a), exact_divide(b, content_b), var
    )
    return common * primitive


def gcd_multivariate(fs: Sequence[Poly]) -> Poly:
    """Monic gcd of ``fs`` under the first polynomial's order.

    Zero entries are ignored; an all-zero list gives 0.
    """
    if not fs:
        raise ValueError("gcd of an empty list")
    for f in fs[1:]:
        check_compatible(fs[0], f)
    nonzero = [f for f in fs if f]
    if not nonzero:
        return fs[0].ring.zero()
    result = nonzero[0]
    for f in nonzero[1:]:
        if result.is_unit():
            logger.debug("gcd reached a unit after %d inputs", len(nonzero))
            break
        result = _gcd(result, f.with_order(result.ring.order))
    return result.with_order(fs[0].ring.order).monic()
