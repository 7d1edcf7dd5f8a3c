from __future__ import annotations

from collections import defaultdict
from collections.abc import Mapping

import sympy

from schubstone.errors import EmptyPolynomialError, InternalError
from schubstone.util import trim_zeros
from .index import ExponentVector, monomial_key, exponent_from_indices


def _add_exponents(a, b):
    if len(a) < len(b):
        a, b = b, a
    result = list(a)
    for i, y in enumerate(b):
        result[i] += y
    return tuple(result)


def _get(a, i):
    #exponent of x_i (1-based)
    return a[i - 1] if i <= len(a) else 0


def _with(a, i, value):
    #copy of a with the exponent of x_i replaced
    entries = list(a) + [0] * max(0, i - len(a))
    entries[i - 1] = value
    return trim_zeros(entries)


class Polynomial(Mapping):
    """
    Exact sparse polynomial in x_1, x_2, ... with integer coefficients.

    Behaves as an immutable mapping from canonical exponent vectors to nonzero
    coefficients; looking up an absent exponent returns 0.
    """

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms=None):
        clean = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exp, coeff in items:
                exp = trim_zeros(exp)
                clean[exp] = clean.get(exp, 0) + int(coeff)
        self._terms = {exp: coeff for exp, coeff in clean.items() if coeff != 0}
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict) -> Polynomial:
        #terms is already canonical with no zero coefficients
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def constant(cls, c):
        return cls({(): c})

    @classmethod
    def var(cls, i):
        """The variable x_i (i >= 1)."""
        if i < 1:
            raise ValueError(f'Variable indices start at 1, got {i}')
        return cls({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial(cls, exp: ExponentVector, coeff=1):
        return cls({tuple(exp): coeff})

    @classmethod
    def from_indices(cls, b, coeff=1):
        """X_b = x_{b_1} ... x_{b_p}."""
        return cls({exponent_from_indices(b): coeff})

    def __getitem__(self, exp):
        return self._terms.get(trim_zeros(exp), 0)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __contains__(self, exp):
        return trim_zeros(exp) in self._terms

    def __bool__(self):
        return len(self._terms) > 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def coefficient(self, exp):
        return self[exp]

    def __neg__(self):
        return Polynomial._trusted({exp: -c for exp, c in self._terms.items()})

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exp, c in other._terms.items():
            value = terms.get(exp, 0) + c
            if value == 0:
                terms.pop(exp, None)
            else:
                terms[exp] = value
        return Polynomial._trusted(terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Polynomial()
            return Polynomial._trusted({exp: c * other for exp, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Polynomial.one()
        for _ in range(k):
            result = result * self
        return result

    @property
    def degree(self):
        """Total degree (-1 for the zero polynomial)."""
        return max((sum(exp) for exp in self._terms), default=-1)

    @property
    def num_variables(self):
        """Largest i such that x_i occurs."""
        return max((len(exp) for exp in self._terms), default=0)

    def is_homogeneous(self):
        return len(set(sum(exp) for exp in self._terms)) <= 1

    def restrict(self, m):
        return restrict(self, m)

    def leading_exponent(self):
        return leading_exponent(self)

    def swap_variables(self, i):
        """The polynomial with x_i and x_{i+1} exchanged."""
        terms = {}
        for exp, c in self._terms.items():
            a, b = _get(exp, i), _get(exp, i + 1)
            swapped = _with(_with(exp, i, b), i + 1, a)
            terms[swapped] = c
        return Polynomial._trusted(terms)

    def divided_difference(self, i):
        """(f - s_i f) / (x_i - x_{i+1}), computed by exact division."""
        return divide_by_difference(self - self.swap_variables(i), i)

    def sorted_terms(self):
        """(exponent, coefficient) pairs, largest monomial first."""
        return sorted(self._terms.items(), key=lambda item: monomial_key(item[0]), reverse=True)

    def to_json(self):
        return [dict(exp=list(exp), coeff=c) for exp, c in self.sorted_terms()]

    def to_sympy(self):
        n = max(self.num_variables, 1)
        xs = sympy.symbols(f'x1:{n + 1}')
        return sympy.Add(*(c * sympy.Mul(*(x ** e for x, e in zip(xs, exp))) for exp, c in self._terms.items()))

    def __str__(self):
        if not self._terms:
            return '0'
        parts = []
        for exp, c in self.sorted_terms():
            factors = [f'x{i}' if e == 1 else f'x{i}^{e}' for i, e in enumerate(exp, start=1) if e > 0]
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = '*'.join(factors)
            else:
                body = '*'.join([str(magnitude)] + factors)
            if not parts:
                parts.append(body if c > 0 else f'-{body}')
            else:
                parts.append(f'+ {body}' if c > 0 else f'- {body}')
        return ' '.join(parts)

    def __repr__(self):
        return f'Polynomial({self})'


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial.constant(value)
    return NotImplemented


def multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    """Exact distributive product."""
    if len(p) > len(q):
        p, q = q, p
    terms = defaultdict(int)
    q_items = list(q.items())
    for a, c in p.items():
        for b, d in q_items:
            terms[_add_exponents(a, b)] += c * d
    return Polynomial._trusted({exp: c for exp, c in terms.items() if c != 0})


def restrict(p: Polynomial, m: int) -> Polynomial:
    """f(x_1, ..., x_m, 0, 0, ...): drop every term involving x_i for i > m."""
    if m < 0:
        raise ValueError('m must be nonnegative')
    return Polynomial._trusted({exp: c for exp, c in p.items() if len(exp) <= m})


def leading_exponent(p: Polynomial) -> ExponentVector:
    """The largest exponent of p under the monomial order."""
    if not p:
        raise EmptyPolynomialError('empty polynomial')
    return max(p, key=monomial_key)


def divide_by_difference(g: Polynomial, i) -> Polynomial:
    """
    Exact quotient g / (x_i - x_{i+1}).

    Synthetic division in x_i, with x_{i+1} playing the role of the root.
    A nonzero remainder raises InternalError.
    """
    by_power = defaultdict(dict)
    for exp, c in g.items():
        by_power[_get(exp, i)][_with(exp, i, 0)] = c
    if not by_power:
        return Polynomial()

    y = Polynomial.var(i + 1)
    top = max(by_power)
    carry = Polynomial()
    quotient = Polynomial()
    for k in range(top, 0, -1):
        carry = Polynomial._trusted(by_power.get(k, {})) + y * carry
        # carry is the coefficient of x_i^(k-1) in the quotient
        quotient += carry * Polynomial.monomial(_with((), i, k - 1))
    remainder = Polynomial._trusted(by_power.get(0, {})) + y * carry
    if remainder:
        raise InternalError(f'Division by x{i} - x{i + 1} left remainder {remainder}')
    return quotient
