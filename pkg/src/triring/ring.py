"""Exact weighted multivariate polynomial arithmetic.

A :class:`Poly` is a sparse map from exponent vectors to ``Fraction``
coefficients over a fixed, ordered variable tuple; zero coefficients are
never stored, so equality of canonical forms is literal data equality.

Two variable tuples cover every computation in the package:

* the affine ring over ``(tau, q, y0, y1, y2)``, graded by the weight
  that counts total degree in ``y0, y1, y2`` (``tau`` and ``q`` weigh
  nothing); an auxiliary weight-1 variable ``y3`` appears only inside
  :func:`homogenize_weight`;
* the homogeneous ring over ``(t, X0, .., X4)`` graded by plain degree
  in the ``X`` variables, with ``t`` acting as the coefficient variable.

The monomial order is graded lexicographic with the later variable in
the tuple more significant.  Resultants are Sylvester determinants
evaluated by fraction-free Bareiss elimination, so no polynomial GCDs
are ever required.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import (
    DegreeZeroInVariable,
    DomainMismatch,
    PolyParseError,
    VariableOutsideR,
    ZeroPolynomial,
)

AFFINE_VARS = ("tau", "q", "y0", "y1", "y2")
R_VARS = ("y0", "y1", "y2")
RH_VARS = ("y0", "y1", "y2", "y3")
HOMOG_VARS = ("t", "X0", "X1", "X2", "X3", "X4")

#: weight of each graded variable; variables absent here are weightless
VAR_WEIGHTS = {"y0": 1, "y1": 1, "y2": 1, "y3": 1}


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise DomainMismatch(f"coefficient {value!r} is not an exact rational")


class Poly:
    """Sparse exact polynomial over a fixed variable tuple."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms):
        self.vars = tuple(vars)
        clean = {}
        for exps, coef in terms.items():
            coef = _as_fraction(coef)
            if coef:
                clean[tuple(exps)] = coef
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars, {})

    @classmethod
    def const(cls, vars, value):
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): _as_fraction(value)})

    @classmethod
    def var(cls, vars, name, exponent=1):
        vars = tuple(vars)
        exps = [0] * len(vars)
        exps[vars.index(name)] = exponent
        return cls(vars, {tuple(exps): Fraction(1)})

    # -- basic protocol --------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(self.vars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def _check_same_ring(self, other):
        if self.vars != other.vars:
            raise DomainMismatch(
                f"variable sets differ: {self.vars} vs {other.vars}"
            )

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check_same_ring(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.vars, other)
        return None

    # -- arithmetic -------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for exps, coef in other.terms.items():
            new = terms.get(exps, Fraction(0)) + coef
            if new:
                terms[exps] = new
            else:
                terms.pop(exps, None)
        return Poly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _as_fraction(other)
            return Poly(self.vars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_same_ring(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(key)
                terms[key] = c1 * c2 if acc is None else acc + c1 * c2
        return Poly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- structure --------------------------------------------------------------

    def partial_degree(self, name):
        """Largest exponent of ``name``; -1 for the zero polynomial."""
        idx = self.vars.index(name)
        if not self.terms:
            return -1
        return max(e[idx] for e in self.terms)

    def total_degree(self, names=None):
        if not self.terms:
            return -1
        if names is None:
            return max(sum(e) for e in self.terms)
        idxs = [self.vars.index(n) for n in names]
        return max(sum(e[i] for i in idxs) for e in self.terms)

    def coefficient_of(self, name, k):
        """Coefficient of ``name**k`` as a Poly in the same ring."""
        idx = self.vars.index(name)
        terms = {}
        for exps, coef in self.terms.items():
            if exps[idx] == k:
                key = exps[:idx] + (0,) + exps[idx + 1:]
                terms[key] = terms.get(key, Fraction(0)) + coef
        return Poly(self.vars, terms)

    def constant_term(self):
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def substitute(self, mapping):
        """Simultaneous exact substitution ``name -> Poly | Fraction | int``."""
        images = {}
        for name, image in mapping.items():
            if name not in self.vars:
                raise DomainMismatch(f"{name} is not a variable of this ring")
            images[name] = image
        result = Poly.zero(self.vars)
        power_cache = {}

        def power(name, k):
            key = (name, k)
            if key not in power_cache:
                img = images[name]
                if isinstance(img, Poly):
                    self._check_same_ring(img)
                    power_cache[key] = img ** k
                else:
                    power_cache[key] = Poly.const(self.vars, _as_fraction(img) ** k)
            return power_cache[key]

        for exps, coef in self.terms.items():
            term = Poly.const(self.vars, coef)
            for name, e in zip(self.vars, exps):
                if not e:
                    continue
                if name in images:
                    term = term * power(name, e)
                else:
                    term = term * Poly.var(self.vars, name, e)
            result = result + term
        return result

    def rename_ring(self, new_vars, mapping):
        """Move to another variable tuple, sending old names per ``mapping``.

        Variables absent from ``mapping`` must not occur.
        """
        new_vars = tuple(new_vars)
        terms = {}
        for exps, coef in self.terms.items():
            key = [0] * len(new_vars)
            for name, e in zip(self.vars, exps):
                if not e:
                    continue
                if name not in mapping:
                    raise DomainMismatch(f"variable {name} has no image")
                key[new_vars.index(mapping[name])] += e
            tkey = tuple(key)
            terms[tkey] = terms.get(tkey, Fraction(0)) + coef
        return Poly(new_vars, terms)

    # -- monomial order (graded lex, later variable more significant) ---------

    def _order_key(self, exps):
        return (sum(exps), tuple(reversed(exps)))

    def leading(self):
        """(exponent vector, coefficient) of the leading monomial."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        exps = max(self.terms, key=self._order_key)
        return exps, self.terms[exps]

    def sorted_terms(self):
        """Terms from the leading monomial downward."""
        return sorted(self.terms.items(), key=lambda t: self._order_key(t[0]),
                      reverse=True)

    # -- exact division ----------------------------------------------------------

    def divmod_single(self, divisor):
        """Division by one polynomial under the graded-lex order.

        Returns ``(quotient, remainder)`` with
        ``self == quotient * divisor + remainder`` and no remainder term
        divisible by the divisor's leading monomial.
        """
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        self._check_same_ring(divisor)
        lead_e, lead_c = divisor.leading()
        quo = Poly.zero(self.vars)
        rem = Poly.zero(self.vars)
        work = self
        while work:
            w_e, w_c = work.leading()
            diff = tuple(a - b for a, b in zip(w_e, lead_e))
            if all(d >= 0 for d in diff):
                mono = Poly(self.vars, {diff: w_c / lead_c})
                quo = quo + mono
                work = work - mono * divisor
            else:
                mono = Poly(self.vars, {w_e: w_c})
                rem = rem + mono
                work = work - mono
        return quo, rem

    def exact_div(self, divisor):
        if isinstance(divisor, (int, Fraction)):
            inv = Fraction(1) / _as_fraction(divisor)
            return self * inv
        quo, rem = self.divmod_single(divisor)
        if rem:
            raise ValueError("division is not exact")
        return quo

    def divides(self, other):
        try:
            other.exact_div(self)
            return True
        except (ValueError, ZeroDivisionError):
            return False

    # -- serialization -----------------------------------------------------------

    def to_json_obj(self):
        terms = [
            {"exps": list(e), "coef": str(c)}
            for e, c in sorted(self.terms.items(), key=lambda t: self._order_key(t[0]))
        ]
        return {"vars": list(self.vars), "terms": terms}

    def to_json(self):
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj):
        vars = tuple(obj["vars"])
        terms = {}
        for item in obj["terms"]:
            terms[tuple(item["exps"])] = Fraction(item["coef"])
        return cls(vars, terms)

    def to_text(self):
        """Render as a sum of monomials, e.g. ``3/4 * tau^2 q y0 - y1``."""
        if not self.terms:
            return "0"
        parts = []
        for exps, coef in self.sorted_terms():
            factors = []
            for name, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mono = " ".join(factors)
            mag = abs(coef)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag} * {mono}"
            if not parts:
                parts.append(body if coef > 0 else f"-{body}")
            else:
                parts.append(("+ " if coef > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({self.to_text()!r})"


_TOKEN = re.compile(
    r"\s*(?:(?P<sign>[+-])|(?P<rat>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"(?:\^(?P<exp>-?\d+))?|(?P<star>\*))"
)


def poly_from_text(text, vars=AFFINE_VARS):
    """Parse the textual monomial-sum format into a :class:`Poly`.

    Accepts rational coefficients ``num/den``, optional ``*`` separators
    and ``^`` exponents, e.g. ``"1/4 * tau^2 q - y0 y1 + 3"``.
    """
    text = text.strip()
    if text.startswith("{"):
        return Poly.from_json_obj(json.loads(text))
    vars = tuple(vars)
    result = Poly.zero(vars)
    pos = 0
    sign = 1
    coef = None
    exps = None

    def flush():
        nonlocal coef, exps, sign, result
        if coef is None and exps is None:
            return
        c = Fraction(1) if coef is None else coef
        e = tuple(exps) if exps is not None else (0,) * len(vars)
        result = result + Poly(vars, {e: sign * c})
        coef, exps, sign = None, None, 1

    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolyParseError(f"cannot parse polynomial near {text[pos:pos+20]!r}")
        pos = m.end()
        if m.group("sign"):
            flush()
            sign = 1 if m.group("sign") == "+" else -1
        elif m.group("rat"):
            if coef is not None or exps is not None:
                raise PolyParseError("coefficient must precede its variables")
            coef = Fraction(m.group("rat"))
        elif m.group("name"):
            name = m.group("name")
            if name not in vars:
                raise PolyParseError(f"unknown variable {name!r} (expected {vars})")
            e = int(m.group("exp") or 1)
            if e < 0:
                raise PolyParseError("negative exponents are not polynomial")
            if exps is None:
                exps = [0] * len(vars)
            exps[vars.index(name)] += e
    flush()
    return result


# -- grading -------------------------------------------------------------------


def weight(P):
    """Largest weight of a monomial of ``P`` (y-variables weigh 1)."""
    if not P:
        raise ZeroPolynomial("weight of the zero polynomial is undefined")
    best = 0
    for exps in P.terms:
        w = 0
        for name, e in zip(P.vars, exps):
            if not e:
                continue
            if name in VAR_WEIGHTS:
                w += e * VAR_WEIGHTS[name]
            elif name in ("tau", "q", "t"):
                pass
            else:
                raise DomainMismatch(f"variable {name} carries no weight")
        best = max(best, w)
    return best


def isobaric_components(P):
    """Split ``P`` into its isobaric pieces, ordered by increasing weight.

    Returns a list of ``(weight, component)`` pairs whose sum is ``P``.
    """
    if not P:
        raise ZeroPolynomial("cannot decompose the zero polynomial")
    buckets = {}
    for exps, coef in P.terms.items():
        w = sum(e * VAR_WEIGHTS.get(name, 0) for name, e in zip(P.vars, exps))
        buckets.setdefault(w, {})[exps] = coef
    return [(w, Poly(P.vars, buckets[w])) for w in sorted(buckets)]


def is_isobaric(P):
    return bool(P) and len(isobaric_components(P)) == 1


def in_R(P):
    """True when ``P`` involves only the weighted variables y0, y1, y2."""
    for exps in P.terms:
        for name, e in zip(P.vars, exps):
            if e and name not in ("y0", "y1", "y2"):
                return False
    return True


def homogenize_weight(F):
    """Weight-homogenize ``F`` in y0, y1, y2 by a weight-1 variable y3.

    The result lives over ``(y0, y1, y2, y3)``, is isobaric of weight
    ``weight(F)``, and restores ``F`` under ``y3 -> 1``.
    """
    if not F:
        raise ZeroPolynomial("cannot homogenize the zero polynomial")
    if not in_R(F):
        raise VariableOutsideR("weight homogenization is defined on C[y0,y1,y2]")
    p = weight(F)
    idx = {name: F.vars.index(name) for name in R_VARS if name in F.vars}
    terms = {}
    for exps, coef in F.terms.items():
        w = sum(exps[i] for i in idx.values())
        key = tuple(exps[idx[v]] if v in idx else 0 for v in R_VARS) + (p - w,)
        terms[key] = terms.get(key, Fraction(0)) + coef
    return Poly(RH_VARS, terms)


# -- resultants ------------------------------------------------------------------


def _poly_matrix_det(matrix):
    """Fraction-free Bareiss determinant of a square matrix of Polys."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    vars = matrix[0][0].vars
    M = [row[:] for row in matrix]
    sign = 1
    prev = Poly.const(vars, 1)
    for k in range(n - 1):
        if not M[k][k]:
            pivot = next((i for i in range(k + 1, n) if M[i][k]), None)
            if pivot is None:
                return Poly.zero(vars)
            M[k], M[pivot] = M[pivot], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                M[i][j] = num.exact_div(prev)
            M[i][k] = Poly.zero(vars)
        prev = M[k][k]
    det = M[n - 1][n - 1]
    return det if sign == 1 else -det


def sylvester_matrix(P, Q, name):
    """Sylvester matrix of ``P`` and ``Q`` with respect to ``name``.

    Row ``i < deg Q`` holds the coefficients of ``name^(degQ-1-i) * P``;
    the remaining rows hold those of ``name^(degP-1-i) * Q``.  Columns
    run from the highest power of ``name`` down to the constant.
    """
    P._check_same_ring(Q)
    n = P.partial_degree(name)
    m = Q.partial_degree(name)
    if n < 1 or m < 1:
        raise DegreeZeroInVariable(
            f"both operands need positive degree in {name} (got {n}, {m})"
        )
    size = n + m
    p_coeffs = [P.coefficient_of(name, n - j) for j in range(n + 1)]
    q_coeffs = [Q.coefficient_of(name, m - j) for j in range(m + 1)]
    zero = Poly.zero(P.vars)
    rows = []
    for i in range(m):
        rows.append([zero] * i + p_coeffs + [zero] * (size - i - n - 1))
    for i in range(n):
        rows.append([zero] * i + q_coeffs + [zero] * (size - i - m - 1))
    return rows


def resultant(P, Q, name):
    """Resultant of ``P`` and ``Q`` in ``name`` (Sylvester determinant).

    Sign convention: ``resultant(y - u, y - v, "y") == u - v``.
    """
    return _poly_matrix_det(sylvester_matrix(P, Q, name))


def resultant_with_cofactors(P, Q, name):
    """Resultant ``R`` plus ``A, B`` with ``A*P + B*Q == R``.

    The cofactors come from expanding the Sylvester determinant along its
    constant column; ``deg_name(A) < deg_name(Q)`` and symmetrically.
    """
    S = sylvester_matrix(P, Q, name)
    size = len(S)
    n = P.partial_degree(name)
    m = Q.partial_degree(name)
    vars = P.vars
    A = Poly.zero(vars)
    B = Poly.zero(vars)
    for i in range(size):
        minor = [row[:-1] for r, row in enumerate(S) if r != i]
        if size == 1:
            det = Poly.const(vars, 1)
        else:
            det = _poly_matrix_det(minor)
        if (i + size - 1) % 2 == 1:
            det = -det
        if i < m:
            A = A + det * Poly.var(vars, name, m - 1 - i)
        else:
            B = B + det * Poly.var(vars, name, n - 1 - (i - m))
    R = A * P + B * Q
    return R, A, B


# -- convenience generators ---------------------------------------------------


def gens(vars=AFFINE_VARS):
    """Map each variable name to its generator polynomial."""
    return {name: Poly.var(vars, name) for name in vars}
