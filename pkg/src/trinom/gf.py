"""Exact arithmetic for the tower GF(q) inside GF(q^2), q = p^t.

Elements of GF(q^2) are kept in discrete-log form: an element is either
``ZERO`` (the additive zero, represented as ``None``) or the exponent ``i``
of ``gamma^i`` for a fixed primitive element gamma.  The subfield GF(q) is
``{0}`` together with the powers of ``delta = gamma^(q+1)``.

Coordinate vectors with respect to the power basis ``1, gamma, ...,
gamma^(2t-1)`` are packed base ``p`` into single integers for the
log/antilog tables, so addition is a table round trip and multiplication is
exponent arithmetic mod ``q^2 - 1``.
"""

from __future__ import annotations

import functools
import itertools

from .errors import (
    CapExceeded,
    DivisionByZero,
    NonPrime,
    NotADivisor,
    NotInSubfield,
    NotPrimitive,
)

# The additive zero of the field.  Every other element is an int exponent.
ZERO = None

Fe = "int | None"  # element type: gamma-exponent or ZERO

DEFAULT_TABLE_CAP = 4096  # largest admitted q; n = q^2 - 1 exponents get tabulated


# ----------------------------------------------------------------------
# Polynomial arithmetic over GF(p) (plain int coefficient lists, constant
# term first).  Only what the modulus search needs.
# ----------------------------------------------------------------------

def _gfp_mulmod(a, b, mod, p):
    """a*b reduced by the monic polynomial `mod`, all over GF(p)."""
    m = len(mod) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    for k in range(len(res) - 1, m - 1, -1):
        c = res[k]
        if c:
            res[k] = 0
            for j in range(m):
                res[k - m + j] = (res[k - m + j] - c * mod[j]) % p
    while len(res) > 1 and res[-1] == 0:
        res.pop()
    return res


def _gfp_powmod(base, e, mod, p):
    result = [1]
    acc = list(base)
    while e:
        if e & 1:
            result = _gfp_mulmod(result, acc, mod, p)
        acc = _gfp_mulmod(acc, acc, mod, p)
        e >>= 1
    return result


def _is_primitive(candidate, p):
    """True iff x has multiplicative order p^deg - 1 modulo `candidate`."""
    from sympy import factorint

    m = len(candidate) - 1
    if candidate[0] % p == 0:
        return False
    order = p**m - 1
    x = [0, 1]
    if _gfp_powmod(x, order, candidate, p) != [1]:
        return False
    return all(_gfp_powmod(x, order // r, candidate, p) != [1] for r in factorint(order))


def _lex_min_primitive(p, degree):
    """Lexicographically smallest (constant term first) monic primitive polynomial."""
    for tail in itertools.product(range(p), repeat=degree):
        cand = list(tail) + [1]
        if _is_primitive(cand, p):
            return tuple(cand)
    raise NotPrimitive(f"no primitive polynomial of degree {degree} over GF({p})")


def prime_power(q):
    """Split q into (p, t) with q = p^t, or raise ValueError."""
    from sympy import factorint

    if q < 2:
        raise ValueError(f"q = {q} is not a prime power")
    fac = factorint(q)
    if len(fac) != 1:
        raise ValueError(f"q = {q} is not a prime power")
    [(p, t)] = fac.items()
    return int(p), int(t)


# ----------------------------------------------------------------------
# The field context
# ----------------------------------------------------------------------

class FieldCtx:
    """GF(q) embedded in GF(q^2) with full log/antilog and trace tables.

    Immutable after construction; all operations are pure.  Use
    :func:`build_field` rather than calling this directly.
    """

    def __init__(self, p, t, modulus):
        self.p = p
        self.t = t
        self.q = p**t
        self.n = self.q**2 - 1
        self.modulus = tuple(c % p for c in modulus)
        self.gamma_index = 1
        self.delta_exponent = self.q + 1

        m = 2 * t
        q2 = self.q**2
        pk = [p**j for j in range(m)]

        # antilog[i] = base-p packed coordinates of gamma^i
        antilog = [0] * self.n
        coeffs = [0] * m
        coeffs[0] = 1
        for i in range(self.n):
            antilog[i] = sum(c * w for c, w in zip(coeffs, pk))
            carry = coeffs[m - 1]
            coeffs = [0] + coeffs[: m - 1]
            if carry:
                for j in range(m):
                    coeffs[j] = (coeffs[j] - carry * self.modulus[j]) % p
        if sum(c * w for c, w in zip(coeffs, pk)) != 1:
            raise NotPrimitive("modulus is not primitive: gamma does not have order q^2 - 1")

        log = [None] * q2
        for i, v in enumerate(antilog):
            if log[v] is not None:
                raise NotPrimitive("modulus is not primitive: repeated power of gamma")
            log[v] = i
        self._antilog = antilog
        self._log = log
        self._pk = pk

        # labels of the prime field: element k*1 -> k
        int_of_fe = {ZERO: 0}
        acc = ZERO
        for v in range(1, p):
            acc = self.add(acc, 0)
            int_of_fe[acc] = v
        self._prime_label = int_of_fe

        # absolute traces: GF(q^2) -> GF(p) is GF(p)-linear, so tabulate on
        # the power basis and extend through the packed coordinates
        basis_tr = []
        for j in range(m):
            s = ZERO
            for i in range(m):
                s = self.add(s, (j * p**i) % self.n)
            basis_tr.append(int_of_fe[s])
        abs_top = [0] * self.n
        for k in range(self.n):
            v = antilog[k]
            tot = 0
            for j in range(m):
                v, d = divmod(v, p) if False else (v // p, v % p)
                tot += d * basis_tr[j]
            abs_top[k] = tot % p
        self._abs_trace_top = abs_top

        # absolute trace of the subfield GF(q) -> GF(p), indexed by delta-log
        abs_base = [0] * (self.q - 1)
        for k in range(self.q - 1):
            x = (self.q + 1) * k
            s = ZERO
            for i in range(t):
                s = self.add(s, (x * p**i) % self.n)
            abs_base[k] = int_of_fe[s]
        self._abs_trace_base = abs_base

        # subfield labels of Tr(gamma^k) for the relative trace GF(q^2) -> GF(q)
        tr = [0] * self.n
        for k in range(self.n):
            s = self.add((k * self.q) % self.n, k)
            tr[k] = 0 if s is ZERO else 1 + s // (self.q + 1)
        self._trace_label = tr

    # -- basic arithmetic ------------------------------------------------

    def add(self, x, y):
        """Field addition via the packed coordinate tables."""
        if x is ZERO:
            return y
        if y is ZERO:
            return x
        u, v = self._antilog[x], self._antilog[y]
        if self.p == 2:
            w = u ^ v
        else:
            p = self.p
            w = 0
            for pj in self._pk:
                du = (u // pj) % p
                dv = (v // pj) % p
                w += ((du + dv) % p) * pj
        return self._log[w]

    def neg(self, x):
        """Additive inverse."""
        if x is ZERO or self.p == 2:
            return x
        return (x + self.n // 2) % self.n

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if x is ZERO or y is ZERO:
            return ZERO
        return (x + y) % self.n

    def inv(self, x):
        if x is ZERO:
            raise DivisionByZero("zero has no multiplicative inverse")
        return (self.n - x) % self.n

    def pow(self, x, k):
        """x**k; negative k requires x != ZERO."""
        if x is ZERO:
            if k < 0:
                raise DivisionByZero("negative power of zero")
            return 0 if k == 0 else ZERO
        return (x * k) % self.n

    # -- tower structure -------------------------------------------------

    def trace_to_subfield(self, x):
        """Tr(x) = x^q + x, landing in GF(q)."""
        if x is ZERO:
            return ZERO
        return self.add((x * self.q) % self.n, x)

    def norm_to_subfield(self, x):
        """N(x) = x^(q+1); zero maps to zero, nonzero into GF(q)*."""
        if x is ZERO:
            return ZERO
        return (x * (self.q + 1)) % self.n

    def absolute_trace(self, x, tower="top"):
        """Trace to the prime field GF(p), returned as an int in [0, p).

        ``tower="top"`` traces from GF(q^2); ``tower="base"`` traces from
        GF(q) and requires x to lie in the subfield.
        """
        if tower == "top":
            return 0 if x is ZERO else self._abs_trace_top[x]
        if tower == "base":
            if x is ZERO:
                return 0
            if x % (self.q + 1):
                raise NotInSubfield(f"gamma^{x} is not in GF({self.q})")
            return self._abs_trace_base[x // (self.q + 1)]
        raise ValueError(f"unknown tower {tower!r}")

    def trace_label(self, x):
        """Subfield label (see :meth:`subfield_label`) of Tr(x)."""
        return 0 if x is ZERO else self._trace_label[x]

    def in_subfield(self, x):
        return x is ZERO or x % (self.q + 1) == 0

    def subfield_label(self, x):
        """Compact label of a GF(q) element: 0 for zero, 1 + k for delta^k."""
        if x is ZERO:
            return 0
        if x % (self.q + 1):
            raise NotInSubfield(f"gamma^{x} is not in GF({self.q})")
        return 1 + x // (self.q + 1)

    def subfield_element(self, label):
        """Inverse of :meth:`subfield_label`."""
        if label == 0:
            return ZERO
        return (label - 1) * (self.q + 1)

    def subfield_star_exponents(self):
        """Exponents of GF(q)* = powers of delta, in delta-log order."""
        return [(self.q + 1) * k for k in range(self.q - 1)]

    def elements(self):
        """All q^2 field elements, zero first."""
        return itertools.chain([ZERO], range(self.n))

    def subfield_elements(self):
        return itertools.chain([ZERO], self.subfield_star_exponents())

    def coordinates(self, x):
        """Coordinate vector of x over GF(p) w.r.t. the power basis."""
        v = 0 if x is ZERO else self._antilog[x]
        p = self.p
        out = []
        for _ in range(2 * self.t):
            v, d = v // p, v % p
            out.append(d)
        return tuple(out)

    # -- cyclotomic structure ---------------------------------------------

    def cyclotomic_coset(self, a):
        """Orbit of a under multiplication by q modulo n; size 1 or 2."""
        a %= self.n
        return {a, (a * self.q) % self.n}

    def minimal_polynomial(self, a):
        """Monic minimal polynomial of gamma^(-a) over GF(q)."""
        poly = [0]  # the constant polynomial 1
        for j in sorted(self.cyclotomic_coset(a)):
            root = (-j) % self.n
            poly = poly_mul(self, poly, [self.neg(root), 0])
        return poly

    # -- cached numpy views for the code enumerators ----------------------

    @functools.cached_property
    def _np(self):
        import numpy as np

        return np

    @functools.cached_property
    def subfield_add_table(self):
        """(q, q) array: label addition table for GF(q)."""
        np = self._np
        q = self.q
        tab = np.zeros((q, q), dtype=np.int16)
        for la in range(q):
            xa = self.subfield_element(la)
            for lb in range(q):
                tab[la, lb] = self.subfield_label(self.add(xa, self.subfield_element(lb)))
        return tab

    @functools.cached_property
    def subfield_mul_table(self):
        """(q, q) array: label multiplication table for GF(q)."""
        np = self._np
        q = self.q
        tab = np.zeros((q, q), dtype=np.int16)
        for la in range(q):
            xa = self.subfield_element(la)
            for lb in range(q):
                tab[la, lb] = self.subfield_label(self.mul(xa, self.subfield_element(lb)))
        return tab

    @functools.cached_property
    def trace_label_array(self):
        """Length-n array: subfield label of Tr(gamma^k)."""
        return self._np.asarray(self._trace_label, dtype=self._np.int16)

    def __repr__(self):
        return f"FieldCtx(p={self.p}, t={self.t}, q={self.q}, modulus={self.modulus})"


def build_field(p, t=1, override_modulus=None, table_cap=DEFAULT_TABLE_CAP):
    """Construct GF(q) inside GF(q^2) for q = p^t.

    Without an override, the modulus is the lexicographically smallest monic
    primitive polynomial of degree 2t over GF(p) (coefficients compared
    constant term first), which makes every output reproducible.
    """
    from sympy import isprime

    if p < 2 or not isprime(p):
        raise NonPrime(f"p = {p} is not prime")
    if t < 1:
        raise ValueError(f"t = {t} must be a positive integer")
    q = p**t
    if q > table_cap:
        raise CapExceeded(f"q = {q} exceeds the table cap {table_cap}")
    if override_modulus is not None:
        mod = [int(c) % p for c in override_modulus]
        while len(mod) > 1 and mod[-1] == 0:
            mod.pop()
        if len(mod) != 2 * t + 1:
            raise NotPrimitive(f"override modulus must have degree {2 * t}, got degree {len(mod) - 1}")
        if mod[-1] != 1:
            raise NotPrimitive("override modulus must be monic")
        if not _is_primitive(mod, p):
            raise NotPrimitive(f"override modulus {tuple(mod)} is not primitive over GF({p})")
        modulus = tuple(mod)
    else:
        modulus = _lex_min_primitive(p, 2 * t)
    return FieldCtx(p, t, modulus)


def build_field_for_order(q, **kwargs):
    """build_field with q given directly as a prime power."""
    p, t = prime_power(q)
    return build_field(p, t, **kwargs)


# ----------------------------------------------------------------------
# Polynomials over GF(q) (lists of Fe, constant term first, no trailing
# zero coefficients; the zero polynomial is the empty list).
# ----------------------------------------------------------------------

def poly_trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] is ZERO:
        coeffs.pop()
    return coeffs


def poly_mul(ctx, f, g):
    if not f or not g:
        return []
    res = [ZERO] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi is ZERO:
            continue
        for j, gj in enumerate(g):
            res[i + j] = ctx.add(res[i + j], ctx.mul(fi, gj))
    return poly_trim(res)


def poly_divmod(ctx, f, g):
    """Quotient and remainder of f by a nonzero g."""
    g = poly_trim(g)
    if not g:
        raise DivisionByZero("polynomial division by zero")
    rem = poly_trim(f)
    if len(rem) < len(g):
        return [], rem
    lead_inv = ctx.inv(g[-1])
    quot = [ZERO] * (len(rem) - len(g) + 1)
    for k in range(len(quot) - 1, -1, -1):
        if len(rem) < len(g) + k:
            continue
        c = ctx.mul(rem[len(g) - 1 + k], lead_inv)
        if c is ZERO:
            continue
        quot[k] = c
        for j, gj in enumerate(g):
            rem[j + k] = ctx.sub(rem[j + k], ctx.mul(c, gj))
    return poly_trim(quot), poly_trim(rem)


def poly_eval(ctx, f, x):
    acc = ZERO
    for c in reversed(poly_trim(f)):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def xn_minus_one(ctx):
    """The polynomial x^n - 1 over GF(q), n = q^2 - 1."""
    coeffs = [ZERO] * (ctx.n + 1)
    coeffs[0] = ctx.neg(0)
    coeffs[ctx.n] = 0
    return coeffs


def poly_divide_xn_minus_1(ctx, h):
    """Exact quotient (x^n - 1) / h; raises NotADivisor on a remainder."""
    quot, rem = poly_divmod(ctx, xn_minus_one(ctx), h)
    if rem:
        raise NotADivisor("polynomial does not divide x^n - 1")
    return quot
