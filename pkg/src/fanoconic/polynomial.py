"""Sparse exact polynomial arithmetic over the rationals.

Everything downstream (section sampling, conic matrices, gradient audits,
line restrictions) runs on these polynomials, so the representation is kept
deliberately plain: a polynomial is a dict mapping exponent tuples to nonzero
int or Fraction coefficients.  All arithmetic is exact, nothing here ever
touches floats.

A ring is just an ordered tuple of variable names.  Two rings with the same
names are interchangeable; rings whose names extend another ring's names
accept lifted elements (used to append fiber coordinates to the base ring).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd, lcm

Scalar = int | Fraction


class PolyRing:
    __slots__ = ("names", "n", "_vars")

    def __init__(self, names):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.n = len(self.names)
        self._vars = None

    def var(self, which) -> "Poly":
        """The variable given by index or name, as a polynomial."""
        if isinstance(which, str):
            which = self.names.index(which)
        exps = [0] * self.n
        exps[which] = 1
        return Poly(self, {tuple(exps): 1})

    def gens(self) -> tuple["Poly", ...]:
        if self._vars is None:
            self._vars = tuple(self.var(i) for i in range(self.n))
        return self._vars

    def constant(self, c: Scalar) -> "Poly":
        if c == 0:
            return Poly(self, {})
        return Poly(self, {(0,) * self.n: c})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.constant(1)

    def monomial(self, exps, coeff: Scalar = 1) -> "Poly":
        exps = tuple(exps)
        if len(exps) != self.n:
            raise ValueError("exponent tuple has wrong length")
        if any(e < 0 for e in exps):
            raise ValueError("negative exponent")
        if coeff == 0:
            return self.zero()
        return Poly(self, {exps: coeff})

    def from_pairs(self, pairs) -> "Poly":
        """Inverse of Poly.to_pairs."""
        terms = {}
        for coeff, exps in pairs:
            if isinstance(coeff, str):
                coeff = Fraction(coeff)
            exps = tuple(exps)
            if len(exps) != self.n:
                raise ValueError("exponent tuple has wrong length")
            terms[exps] = terms.get(exps, 0) + coeff
        return Poly(self, {e: c for e, c in terms.items() if c != 0})

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"PolyRing({list(self.names)!r})"


class Poly:
    """Immutable sparse polynomial: {exponent tuple: coefficient}.

    Construction normalizes nothing beyond dropping explicit zeros, so always
    go through PolyRing factories or arithmetic.  The compact term list
    (coefficient plus the nonzero (index, exponent) pairs) is cached lazily;
    evaluation, gradients and line restriction all iterate over it instead of
    the full exponent tuples.
    """

    __slots__ = ("ring", "terms", "_compact_cache")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c != 0}
        self._compact_cache = None

    # -- basic structure ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def _compact(self):
        if self._compact_cache is None:
            self._compact_cache = [
                (c, tuple((i, e) for i, e in enumerate(exps) if e))
                for exps, c in self.terms.items()
            ]
        return self._compact_cache

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring.names == other.ring.names and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring.names, frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Poly"):
        if self.ring.names != other.ring.names:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.ring.zero()
            return Poly(self.ring, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    # -- calculus and specialization ---------------------------------------

    def diff(self, which) -> "Poly":
        """Partial derivative with respect to a variable (index or name)."""
        if isinstance(which, str):
            which = self.ring.names.index(which)
        out = {}
        for exps, c in self.terms.items():
            e = exps[which]
            if not e:
                continue
            key = exps[:which] + (e - 1,) + exps[which + 1:]
            out[key] = out.get(key, 0) + c * e
        return Poly(self.ring, out)

    def subs(self, assignments: dict) -> "Poly":
        """Substitute scalars for some variables; keys are indices or names."""
        idx = {}
        for k, v in assignments.items():
            if isinstance(k, str):
                k = self.ring.names.index(k)
            idx[k] = v
        out = {}
        for exps, c in self.terms.items():
            for i, val in idx.items():
                e = exps[i]
                if e:
                    c = c * val ** e
                    if c == 0:
                        break
            if c == 0:
                continue
            key = tuple(0 if i in idx else e for i, e in enumerate(exps))
            out[key] = out.get(key, 0) + c
        return Poly(self.ring, out)

    def eval(self, values) -> Scalar:
        if len(values) != self.ring.n:
            raise ValueError("wrong number of values")
        cache = {}
        total = 0
        for c, factors in self._compact():
            acc = c
            for i, e in factors:
                key = (i, e)
                p = cache.get(key)
                if p is None:
                    p = values[i] ** e
                    cache[key] = p
                if p == 0:
                    acc = 0
                    break
                acc *= p
            total += acc
        return total

    def eval_with_gradient(self, values):
        """Value and all partial derivatives at a point, in one pass.

        Returns (value, grad) with grad a list indexed like the ring
        variables.  Exact for int and Fraction inputs.
        """
        if len(values) != self.ring.n:
            raise ValueError("wrong number of values")
        cache = {}

        def pw(i, e):
            if e == 0:
                return 1
            key = (i, e)
            p = cache.get(key)
            if p is None:
                p = values[i] ** e
                cache[key] = p
            return p

        value = 0
        grad = [0] * self.ring.n
        for c, factors in self._compact():
            acc = c
            for i, e in factors:
                p = pw(i, e)
                if p == 0:
                    acc = 0
                    break
                acc *= p
            value += acc
            for i, e in factors:
                part = c * e
                for j, ej in factors:
                    part *= pw(j, ej - 1) if j == i else pw(j, ej)
                    if part == 0:
                        break
                if part != 0:
                    grad[i] += part
        return value, grad

    def restrict_line(self, point, direction) -> list:
        """Coefficients of p(point + t*direction) as a univariate in t.

        Ascending order, trailing zeros trimmed; [] is the zero polynomial.
        """
        if len(point) != self.ring.n or len(direction) != self.ring.n:
            raise ValueError("wrong number of coordinates")
        cache = {}
        out = [0]
        for c, factors in self._compact():
            term = [c]
            for i, e in factors:
                key = (i, e)
                f = cache.get(key)
                if f is None:
                    f = _linear_power(point[i], direction[i], e)
                    cache[key] = f
                term = u_mul(term, f)
                if term == [0] or not term:
                    break
            out = u_add(out, term)
        return u_trim(out)

    def lift(self, big: PolyRing) -> "Poly":
        """Reinterpret in a ring whose names start with this ring's names."""
        if big.names[: self.ring.n] != self.ring.names:
            raise ValueError("target ring does not extend this ring")
        pad = (0,) * (big.n - self.ring.n)
        return Poly(big, {exps + pad: c for exps, c in self.terms.items()})

    # -- serialization and display -----------------------------------------

    def to_pairs(self) -> list:
        """Canonical serialization: (coefficient, exponent list) pairs.

        Sorted by exponent tuple.  Fraction coefficients come out as "p/q"
        strings so the result is JSON safe; ints stay ints.
        """
        out = []
        for exps in sorted(self.terms):
            c = self.terms[exps]
            if isinstance(c, Fraction):
                c = int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            out.append((c, list(exps)))
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        chunks = []
        for exps in sorted(self.terms):
            c = self.terms[exps]
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, exps)
                if e
            )
            if not mono:
                chunks.append(str(c))
            elif c == 1:
                chunks.append(mono)
            elif c == -1:
                chunks.append(f"-{mono}")
            else:
                chunks.append(f"{c}*{mono}")
        text = " + ".join(chunks)
        return text.replace("+ -", "- ")

    def __repr__(self):
        return f"<Poly {self}>"


def _linear_power(a, b, e: int) -> list:
    # (a + b t)^e by the binomial theorem
    if e == 0:
        return [1]
    return [comb(e, k) * a ** (e - k) * b ** k for k in range(e + 1)]


# -- univariate helpers ----------------------------------------------------
# Univariate polynomials are plain coefficient lists, ascending in t.

def u_trim(f: list) -> list:
    while f and f[-1] == 0:
        f.pop()
    return f


def u_add(f: list, g: list) -> list:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] += c
    return out


def u_mul(f: list, g: list) -> list:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


def u_degree(f: list) -> int:
    """Degree, with the zero polynomial at -1."""
    f = u_trim(list(f))
    return len(f) - 1


def u_diff(f: list) -> list:
    return u_trim([i * c for i, c in enumerate(f)][1:])


def _u_primitive_int(f: list) -> list:
    """Scale a rational coefficient list to a primitive integer one."""
    if not f:
        return []
    scale = lcm(*(Fraction(c).denominator for c in f))
    ints = [int(Fraction(c) * scale) for c in f]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _u_pseudo_mod(f: list, g: list) -> list:
    # lc(g)^k * f reduced mod g, over the integers
    dg = len(g) - 1
    lead = g[-1]
    r = list(f)
    while len(r) - 1 >= dg and r:
        if r[-1] == 0:
            r.pop()
            continue
        coef = r[-1]
        shift = len(r) - 1 - dg
        r = [c * lead for c in r]
        for i, c in enumerate(g):
            r[shift + i] -= coef * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def u_gcd(f: list, g: list) -> list:
    """Monic gcd over Q, via a primitive remainder sequence over Z.

    Plain fraction arithmetic blows up catastrophically around degree 20,
    so the Euclidean steps run on primitive integer polynomials with
    pseudo-division, and only the final normalization leaves Z.
    """
    f = _u_primitive_int(u_trim(list(f)))
    g = _u_primitive_int(u_trim(list(g)))
    if len(f) < len(g):
        f, g = g, f
    while g:
        f, g = g, _u_primitive_int(_u_pseudo_mod(f, g))
    if f:
        lead = f[-1]
        f = [Fraction(c, lead) for c in f]
    return f


def u_is_squarefree(f: list) -> bool:
    """No repeated roots over the algebraic closure; constants count as yes."""
    f = u_trim(list(f))
    if not f:
        raise ValueError("zero polynomial has no squarefree verdict")
    if len(f) == 1:
        return True
    return len(u_gcd(f, u_diff(f))) == 1
