"""Sparse polynomials with exact Gaussian-rational coefficients.

Two representations share the same storage scheme (a dict from exponent
tuples to nonzero GaussianRational coefficients):

  PolyZZbar -- polynomials in the conjugate pair z, zbar; exponent keys are
               pairs (a, b) meaning z**a * zbar**b.
  PolyRealN -- polynomials in n real variables; exponent keys are length-n
               multi-indices.

Both carry the Wirtinger / Laplace differential operators.  The Laplacian
of a z-zbar polynomial is 4 * d/dz d/dzbar, which agrees with the sum of
second partials of the corresponding real-variable polynomial; the two
pictures are connected by the exact changes of variables xy_to_zzbar and
zzbar_to_xy (2x = z + zbar, 2iy = z - zbar).

Conventions:
  * no stored coefficient is zero; the zero polynomial has an empty dict
  * degree of the zero polynomial is -1
  * term order is graded lexicographic: by total degree, then by exponent
    tuple, ascending.  Serialization and linear-system columns use it.
  * exponents must fit in 32 bits; violating arithmetic raises OverflowError
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .rational import GaussianRational, ZERO

MAX_EXPONENT = 2**31 - 1

CoefLike = Union[int, Fraction, GaussianRational]


def _coerce_coef(c) -> GaussianRational:
    return GaussianRational.coerce(c)


def _check_exponent(e: int) -> int:
    if not isinstance(e, int) or e < 0:
        raise ValueError(f"exponents must be nonnegative integers, got {e!r}")
    if e > MAX_EXPONENT:
        raise OverflowError(f"exponent {e} exceeds the 32-bit bound")
    return e


def _grlex_key(exps: tuple) -> tuple:
    return (sum(exps), exps)


def _add_terms(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        s = c if s is None else s + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _mul_terms(a: dict, b: dict) -> dict:
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = tuple(_check_exponent(x + y) for x, y in zip(ka, kb))
            c = ca * cb
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _long_division(p: dict, r: dict) -> dict | None:
    """Exact quotient of p by r (single-divisor graded-lex division).

    Returns the term dict of q with p = r*q, or None when no such
    polynomial exists.  If the leading term of the running remainder is
    not divisible by the leading term of r, neither is the remainder:
    any exact quotient would put its own leading product term right there.
    """
    lead_r = max(r, key=_grlex_key)
    cr = r[lead_r]
    rem = dict(p)
    quot: dict = {}
    while rem:
        lead = max(rem, key=_grlex_key)
        exps = tuple(x - y for x, y in zip(lead, lead_r))
        if any(e < 0 for e in exps):
            return None
        c = rem[lead] / cr
        quot[exps] = c
        for k, ck in r.items():
            kk = tuple(x + y for x, y in zip(exps, k))
            s = rem.get(kk, ZERO) - c * ck
            if s:
                rem[kk] = s
            else:
                rem.pop(kk, None)
    return quot


class PolyZZbar:
    """Sparse polynomial in z and zbar over the Gaussian rationals."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], CoefLike] | None = None):
        clean: dict[tuple[int, int], GaussianRational] = {}
        if terms:
            for key, c in terms.items():
                a, b = key
                _check_exponent(a)
                _check_exponent(b)
                coef = _coerce_coef(c)
                if coef:
                    clean[(a, b)] = coef
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PolyZZbar is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "PolyZZbar":
        return PolyZZbar()

    @staticmethod
    def constant(c: CoefLike) -> "PolyZZbar":
        return PolyZZbar({(0, 0): c})

    @staticmethod
    def monomial(a: int, b: int, c: CoefLike = 1) -> "PolyZZbar":
        return PolyZZbar({(a, b): c})

    @staticmethod
    def var_z() -> "PolyZZbar":
        return PolyZZbar({(1, 0): 1})

    @staticmethod
    def var_zbar() -> "PolyZZbar":
        return PolyZZbar({(0, 1): 1})

    # -- inspection ----------------------------------------------------------

    def terms(self) -> Iterator[tuple[tuple[int, int], GaussianRational]]:
        """Terms in graded-lex order (total degree, then exponents, ascending)."""
        for key in sorted(self._terms, key=_grlex_key):
            yield key, self._terms[key]

    def coefficient(self, a: int, b: int) -> GaussianRational:
        return self._terms.get((a, b), ZERO)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(a + b for a, b in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_holomorphic(self) -> bool:
        return all(b == 0 for _, b in self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, PolyZZbar):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "PolyZZbar") -> "PolyZZbar":
        return PolyZZbar(_add_terms(self._terms, other._terms))

    def __sub__(self, other: "PolyZZbar") -> "PolyZZbar":
        return self + (-other)

    def __neg__(self) -> "PolyZZbar":
        return PolyZZbar({k: -c for k, c in self._terms.items()})

    def __mul__(self, other) -> "PolyZZbar":
        if isinstance(other, PolyZZbar):
            return PolyZZbar(_mul_terms(self._terms, other._terms))
        c = _coerce_coef(other)
        return PolyZZbar({k: ck * c for k, ck in self._terms.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PolyZZbar":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power must be a nonnegative integer")
        result = PolyZZbar.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c: CoefLike) -> "PolyZZbar":
        return self * c

    def conjugate(self) -> "PolyZZbar":
        """Complex conjugation: swaps z**a zbar**b -> z**b zbar**a."""
        return PolyZZbar(
            {(b, a): c.conjugate() for (a, b), c in self._terms.items()}
        )

    # -- differential operators ----------------------------------------------

    def d_dz(self) -> "PolyZZbar":
        out = {}
        for (a, b), c in self._terms.items():
            if a:
                out[(a - 1, b)] = c * a
        return PolyZZbar(out)

    def d_dzbar(self) -> "PolyZZbar":
        out = {}
        for (a, b), c in self._terms.items():
            if b:
                out[(a, b - 1)] = c * b
        return PolyZZbar(out)

    def laplacian(self) -> "PolyZZbar":
        return self.d_dz().d_dzbar() * 4

    # -- evaluation ------------------------------------------------------------

    def evaluate(self, z):
        """Evaluate at a point, with zbar taken as the conjugate of z.

        A GaussianRational argument gives an exact GaussianRational value;
        anything accepted by complex() gives a float complex value.
        """
        if isinstance(z, GaussianRational):
            zb = z.conjugate()
            total = ZERO
            for (a, b), c in self._terms.items():
                total = total + c * z**a * zb**b
            return total
        w = complex(z)
        wb = w.conjugate()
        return sum(
            (complex(c) * w**a * wb**b for (a, b), c in self._terms.items()),
            start=0j,
        )

    def __repr__(self):
        from .parsing import format_poly_zzbar

        return f"PolyZZbar({format_poly_zzbar(self)!r})"


class PolyRealN:
    """Sparse polynomial in n real variables over the Gaussian rationals."""

    __slots__ = ("_dim", "_terms")

    def __init__(self, dim: int, terms: Mapping[tuple, CoefLike] | None = None):
        if not isinstance(dim, int) or dim < 1:
            raise ValueError(f"dimension must be a positive integer, got {dim!r}")
        clean: dict[tuple, GaussianRational] = {}
        if terms:
            for key, c in terms.items():
                key = tuple(key)
                if len(key) != dim:
                    raise ValueError(
                        f"multi-index {key} has length {len(key)}, expected {dim}"
                    )
                for e in key:
                    _check_exponent(e)
                coef = _coerce_coef(c)
                if coef:
                    clean[key] = coef
        object.__setattr__(self, "_dim", dim)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("PolyRealN is immutable")

    @property
    def dim(self) -> int:
        return self._dim

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(dim: int) -> "PolyRealN":
        return PolyRealN(dim)

    @staticmethod
    def constant(dim: int, c: CoefLike) -> "PolyRealN":
        return PolyRealN(dim, {(0,) * dim: c})

    @staticmethod
    def variable(dim: int, axis: int) -> "PolyRealN":
        if not 0 <= axis < dim:
            raise ValueError(f"axis {axis} out of range for dimension {dim}")
        key = [0] * dim
        key[axis] = 1
        return PolyRealN(dim, {tuple(key): 1})

    @staticmethod
    def monomial(alpha: Sequence[int], c: CoefLike = 1) -> "PolyRealN":
        alpha = tuple(alpha)
        return PolyRealN(len(alpha), {alpha: c})

    # -- inspection ----------------------------------------------------------

    def terms(self) -> Iterator[tuple[tuple, GaussianRational]]:
        for key in sorted(self._terms, key=_grlex_key):
            yield key, self._terms[key]

    def coefficient(self, alpha: Sequence[int]) -> GaussianRational:
        return self._terms.get(tuple(alpha), ZERO)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(k) for k in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, PolyRealN):
            return self._dim == other._dim and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        return hash((self._dim, frozenset(self._terms.items())))

    def _require_same_dim(self, other: "PolyRealN"):
        if self._dim != other._dim:
            raise ValueError(
                f"dimension mismatch: {self._dim} versus {other._dim}"
            )

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "PolyRealN") -> "PolyRealN":
        self._require_same_dim(other)
        return PolyRealN(self._dim, _add_terms(self._terms, other._terms))

    def __sub__(self, other: "PolyRealN") -> "PolyRealN":
        return self + (-other)

    def __neg__(self) -> "PolyRealN":
        return PolyRealN(self._dim, {k: -c for k, c in self._terms.items()})

    def __mul__(self, other) -> "PolyRealN":
        if isinstance(other, PolyRealN):
            self._require_same_dim(other)
            return PolyRealN(self._dim, _mul_terms(self._terms, other._terms))
        c = _coerce_coef(other)
        return PolyRealN(self._dim, {k: ck * c for k, ck in self._terms.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PolyRealN":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power must be a nonnegative integer")
        result = PolyRealN.constant(self._dim, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c: CoefLike) -> "PolyRealN":
        return self * c

    def conjugate(self) -> "PolyRealN":
        """Conjugate the coefficients (the variables are real)."""
        return PolyRealN(
            self._dim, {k: c.conjugate() for k, c in self._terms.items()}
        )

    # -- differential operators ----------------------------------------------

    def partial(self, axis: int) -> "PolyRealN":
        if not 0 <= axis < self._dim:
            raise ValueError(f"axis {axis} out of range for dimension {self._dim}")
        out = {}
        for key, c in self._terms.items():
            e = key[axis]
            if e:
                k = list(key)
                k[axis] = e - 1
                out[tuple(k)] = c * e
        return PolyRealN(self._dim, out)

    def laplacian(self) -> "PolyRealN":
        total = PolyRealN.zero(self._dim)
        for axis in range(self._dim):
            total = total + self.partial(axis).partial(axis)
        return total

    # -- evaluation ------------------------------------------------------------

    def evaluate(self, point: Sequence):
        """Evaluate at a point given as a sequence of coordinates.

        Exact (GaussianRational) for int/Fraction/GaussianRational
        coordinates, float complex otherwise.
        """
        if len(point) != self._dim:
            raise ValueError(
                f"point has {len(point)} coordinates, expected {self._dim}"
            )
        exact = all(isinstance(v, (int, Fraction, GaussianRational)) for v in point)
        if exact:
            coords = [GaussianRational.coerce(v) for v in point]
            total = ZERO
            for key, c in self._terms.items():
                term = c
                for v, e in zip(coords, key):
                    if e:
                        term = term * v**e
                total = total + term
            return total
        coords_f = [complex(v) for v in point]
        total_f = 0j
        for key, c in self._terms.items():
            term_f = complex(c)
            for v, e in zip(coords_f, key):
                if e:
                    term_f *= v**e
            total_f += term_f
        return total_f

    def __repr__(self):
        from .parsing import format_poly_real

        return f"PolyRealN(dim={self._dim}, {format_poly_real(self)!r})"


# -- changes of variables -------------------------------------------------

_HALF = Fraction(1, 2)


def xy_to_zzbar(p: PolyRealN) -> PolyZZbar:
    """Rewrite a polynomial in (x, y) as a polynomial in (z, zbar).

    Substitutes x = (z + zbar)/2 and y = (z - zbar)/(2i); the rewrite is
    exact and degree preserving.
    """
    if p.dim != 2:
        raise ValueError(f"xy_to_zzbar requires dimension 2, got {p.dim}")
    x = PolyZZbar({(1, 0): _HALF, (0, 1): _HALF})
    y = PolyZZbar(
        {(1, 0): GaussianRational(0, -_HALF), (0, 1): GaussianRational(0, _HALF)}
    )
    result = PolyZZbar.zero()
    for (ax, ay), c in p.terms():
        result = result + x**ax * y**ay * c
    return result


def zzbar_to_xy(p: PolyZZbar) -> PolyRealN:
    """Rewrite a polynomial in (z, zbar) as a polynomial in (x, y).

    Substitutes z = x + iy and zbar = x - iy; exact inverse of xy_to_zzbar.
    """
    x_plus_iy = PolyRealN(2, {(1, 0): 1, (0, 1): GaussianRational(0, 1)})
    x_minus_iy = PolyRealN(2, {(1, 0): 1, (0, 1): GaussianRational(0, -1)})
    result = PolyRealN.zero(2)
    for (a, b), c in p.terms():
        result = result + x_plus_iy**a * x_minus_iy**b * c
    return result


# -- exact division ----------------------------------------------------------


def divide_exact(p, r):
    """Exact polynomial quotient: q with p = r * q, or None if not divisible.

    None is a normal outcome (membership test for the ideal generated by r),
    not an error.  Both arguments must be of the same polynomial type.
    """
    if type(p) is not type(r):
        raise TypeError("divide_exact requires two polynomials of the same type")
    if r.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return p
    if isinstance(p, PolyRealN):
        p._require_same_dim(r)
        quot = _long_division(p._terms, r._terms)
        return None if quot is None else PolyRealN(p.dim, quot)
    quot = _long_division(p._terms, r._terms)
    return None if quot is None else PolyZZbar(quot)


# -- monomial bases -----------------------------------------------------------


def monomials_zzbar(max_degree: int) -> list[tuple[int, int]]:
    """Exponent pairs (a, b) with a + b <= max_degree, graded-lex order."""
    out = []
    for d in range(max_degree + 1):
        for a in range(d + 1):
            out.append((a, d - a))
    return sorted(out, key=_grlex_key)


def monomials_real(dim: int, max_degree: int) -> list[tuple]:
    """Multi-indices of length dim with |alpha| <= max_degree, graded-lex order."""

    def homogeneous(n: int, total: int) -> Iterable[tuple]:
        if n == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in homogeneous(n - 1, total - first):
                yield (first,) + rest

    out: list[tuple] = []
    for d in range(max_degree + 1):
        out.extend(homogeneous(dim, d))
    return sorted(out, key=_grlex_key)
