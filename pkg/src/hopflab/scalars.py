"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A scalar is a polynomial in zeta_n with rational coefficients, kept reduced
modulo the n-th cyclotomic polynomial, so equality is coefficient-wise and
every operation is exact.  Conductor n = 1 gives plain rationals.  Rationals
use arbitrary-precision integers (gmpy2 when available), since echelon forms
blow up coefficients.

Also here: polynomial helpers over scalars and linear-factor extraction,
which the Wedderburn splitting downstream depends on.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .errors import NotSplitError

try:
    from gmpy2 import mpq as QQ
except ImportError:  # pragma: no cover
    from fractions import Fraction as QQ


def as_rational(x) -> QQ:
    """Coerce an int, string like "3/4", or rational into QQ."""
    if isinstance(x, (int, str)):
        return QQ(x)
    return QQ(x.numerator, x.denominator)


def rational_to_string(q) -> str:
    return str(q)


def _intpoly_exact_div(num: list[int], den: list[int]) -> list[int]:
    # den monic, division exact; ascending coefficients
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, ascending degree."""
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _intpoly_exact_div(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class CyclotomicField:
    """The field Q(zeta_n) for a fixed conductor n >= 1.

    Instances are interned per conductor.  Scalars from different fields do
    not mix; use Scalar.embed to move into a larger field.
    """

    _instances: dict[int, "CyclotomicField"] = {}

    def __new__(cls, conductor: int):
        if conductor in cls._instances:
            return cls._instances[conductor]
        if conductor < 1:
            raise ValueError("conductor must be >= 1")
        self = super().__new__(cls)
        self.conductor = conductor
        mod = cyclotomic_polynomial(conductor)
        self.degree = len(mod) - 1
        self.modulus = tuple(QQ(c) for c in mod)
        # reduced form of zeta^degree, used to cascade higher powers down
        self._zeta_deg = tuple(-c for c in self.modulus[:-1])
        self.zero = Scalar(self, (QQ(0),) * self.degree)
        self.one = self.from_rational(1)
        self._units = None
        cls._instances[conductor] = self
        return self

    def __repr__(self):
        return "Q" if self.conductor == 1 else f"Q(zeta_{self.conductor})"

    def __reduce__(self):
        return (CyclotomicField, (self.conductor,))

    def from_rational(self, q) -> "Scalar":
        coeffs = [QQ(0)] * self.degree
        coeffs[0] = as_rational(q)
        return Scalar(self, tuple(coeffs))

    def from_coeffs(self, seq) -> "Scalar":
        coeffs = [as_rational(c) for c in seq]
        if len(coeffs) > self.degree:
            coeffs = self._reduce(coeffs)
        coeffs += [QQ(0)] * (self.degree - len(coeffs))
        return Scalar(self, tuple(coeffs))

    def scalar(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field is not self:
                raise ValueError(f"scalar belongs to {value.field}, not {self}")
            return value
        if isinstance(value, str):
            return parse_scalar(self, value)
        return self.from_rational(value)

    @property
    def zeta(self) -> "Scalar":
        return self.zeta_power(1)

    def zeta_power(self, k: int) -> "Scalar":
        k %= self.conductor
        coeffs = [QQ(0)] * (k + 1)
        coeffs[k] = QQ(1)
        return self.from_coeffs(coeffs)

    def _reduce(self, coeffs: list) -> list:
        # reduce a coefficient list of any length modulo Phi_n, cascading
        # zeta^m = zeta^(m-d) * zeta^d from the top down
        d = self.degree
        coeffs = list(coeffs)
        zeta_d = self._zeta_deg
        while len(coeffs) > d:
            top = coeffs.pop()
            if top:
                off = len(coeffs) - d
                for i, r in enumerate(zeta_d):
                    if r:
                        coeffs[off + i] += top * r
        coeffs += [QQ(0)] * (d - len(coeffs))
        return coeffs

    def roots_of_unity(self) -> tuple["Scalar", ...]:
        """All roots of unity contained in the field: <-1, zeta_n>."""
        if self._units is None:
            seen = {}
            for k in range(self.conductor):
                for sign in (1, -1):
                    u = self.zeta_power(k)
                    if sign < 0:
                        u = -u
                    seen.setdefault(u.coeffs, u)
            self._units = tuple(sorted(seen.values(), key=lambda s: s.sort_key()))
        return self._units


class Scalar:
    """Element of a CyclotomicField in canonical reduced form.

    Immutable; arithmetic via the usual operators.  Ints and rationals
    coerce on the fly, scalars from distinct fields do not.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *args):
        raise AttributeError("Scalar is immutable")

    def __copy__(self):
        return self

    def __deepcopy__(self, memo):
        return self

    def __reduce__(self):
        return (_rebuild_scalar, (self.field.conductor, tuple(str(c) for c in self.coeffs)))

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> QQ:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def integer_value(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return int(self.coeffs[0])

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise ValueError("scalars from different cyclotomic fields")
            return other
        if isinstance(other, (int, QQ)):
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Scalar(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        d = self.field.degree
        if d == 1:
            return Scalar(self.field, (a[0] * b[0],))
        conv = [QQ(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return Scalar(self.field, tuple(self.field._reduce(conv)))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise ZeroDivisionError("scalar division by zero")
        if self.is_rational():
            return self.field.from_rational(QQ(self.coeffs[0].denominator, self.coeffs[0].numerator))
        inv = _ratpoly_invert(list(self.coeffs), list(self.field.modulus))
        return self.field.from_coeffs(inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, QQ)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field.conductor, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def sort_key(self):
        return tuple((c.numerator, c.denominator) for c in self.coeffs)

    # -- conversion ---------------------------------------------------------

    def embed(self, target: CyclotomicField) -> "Scalar":
        """Image under zeta_n -> zeta_m^(m/n); requires n | m."""
        if target is self.field:
            return self
        m, n = target.conductor, self.field.conductor
        if m % n != 0:
            raise ValueError(f"cannot embed {self.field} into {target}")
        step = m // n
        coeffs = [QQ(0)] * (1 + step * (len(self.coeffs) - 1))
        for k, c in enumerate(self.coeffs):
            if c:
                coeffs[step * k] = c
        return target.from_coeffs(coeffs)

    def __str__(self):
        return scalar_to_string(self)

    def __repr__(self):
        return f"Scalar({scalar_to_string(self)} @ {self.field!r})"


def _rebuild_scalar(conductor, coeff_strings):
    field = CyclotomicField(conductor)
    return field.from_coeffs(coeff_strings)


# -- rational polynomial helpers used for inversion --------------------------


def _ratpoly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _ratpoly_divmod(a, b):
    a = list(a)
    inv_lead = QQ(b[-1].denominator, b[-1].numerator)
    q = [QQ(0)] * max(len(a) - len(b) + 1, 0)
    for k in range(len(q) - 1, -1, -1):
        if len(a) < k + len(b):
            continue
        c = a[k + len(b) - 1] * inv_lead
        q[k] = c
        if c:
            for i, d in enumerate(b):
                a[k + i] -= c * d
    return _ratpoly_trim(q), _ratpoly_trim(a[: len(b) - 1])


def _ratpoly_invert(a, modulus):
    # extended Euclid: s*a + t*modulus = gcd (a unit mod Phi_n since Phi_n irreducible)
    r0, r1 = list(modulus), _ratpoly_trim(list(a))
    s0, s1 = [], [QQ(1)]
    while r1:
        q, r = _ratpoly_divmod(r0, r1)
        r0, r1 = r1, r
        # s_next = s0 - q*s1
        prod = [QQ(0)] * (len(q) + len(s1) - 1) if q and s1 else []
        for i, qi in enumerate(q):
            if qi:
                for j, sj in enumerate(s1):
                    prod[i + j] += qi * sj
        nxt = [QQ(0)] * max(len(s0), len(prod))
        for i, c in enumerate(s0):
            nxt[i] += c
        for i, c in enumerate(prod):
            nxt[i] -= c
        s0, s1 = s1, _ratpoly_trim(nxt)
    # r0 = gcd, a nonzero rational (degree 0) since Phi_n is irreducible
    if len(r0) != 1:
        raise ZeroDivisionError("element not invertible modulo the cyclotomic polynomial")
    g = r0[0]
    return [c / g for c in s0]


# -- scalar string form -------------------------------------------------------


def scalar_to_string(s: Scalar) -> str:
    """Canonical text form: "p/q" for rationals, else terms in z = zeta_n,
    e.g. "1/2 + 1/2*z^2" or "1 - z"."""
    if s.is_rational():
        return rational_to_string(s.coeffs[0])
    parts = []
    for k, c in enumerate(s.coeffs):
        if not c:
            continue
        if k == 0:
            body = rational_to_string(c)
        else:
            z = "z" if k == 1 else f"z^{k}"
            mag = abs(c)
            body = z if mag == 1 else f"{rational_to_string(mag)}*{z}"
            if c < 0:
                body = "-" + body
        parts.append(body)
    out = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            out += " - " + part[1:]
        else:
            out += " + " + part
    return out


def parse_scalar(field: CyclotomicField, text: str) -> Scalar:
    """Parse the format emitted by scalar_to_string (whitespace-tolerant)."""
    cleaned = text.replace(" ", "")
    if not cleaned:
        raise ValueError("empty scalar string")
    cleaned = cleaned.replace("-", "+-").lstrip("+")
    if cleaned.startswith("-+"):  # came from a leading "-"
        cleaned = "-" + cleaned[2:]
    coeffs = [QQ(0)] * max(field.degree, 1)
    for term in cleaned.split("+"):
        if not term:
            continue
        neg = term.startswith("-")
        if neg:
            term = term[1:]
        if "z" in term:
            coeff_part, _, z_part = term.partition("z")
            coeff_part = coeff_part.rstrip("*")
            coeff = QQ(coeff_part) if coeff_part else QQ(1)
            power = int(z_part[1:]) if z_part.startswith("^") else (1 if not z_part else None)
            if power is None:
                raise ValueError(f"bad scalar term {term!r} in {text!r}")
        else:
            coeff = QQ(term)
            power = 0
        if power >= field.conductor:
            raise ValueError(f"power z^{power} out of range for conductor {field.conductor}")
        extra = [QQ(0)] * (power + 1)
        extra[power] = -coeff if neg else coeff
        base = field.from_coeffs(extra)
        coeffs = [a + b for a, b in zip(coeffs, base.coeffs)]
    return field.from_coeffs(coeffs)


# -- polynomials over Scalar --------------------------------------------------
# A polynomial is a list of Scalars, ascending degree, no trailing zeros.


def poly_trim(p: list) -> list:
    while p and p[-1].is_zero():
        p.pop()
    return p


def poly_degree(p) -> int:
    return len(p) - 1


def poly_add(a, b):
    n = max(len(a), len(b))
    field = (a or b)[0].field
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else field.zero
        y = b[i] if i < len(b) else field.zero
        out.append(x + y)
    return poly_trim(out)


def poly_sub(a, b):
    return poly_add(a, [-c for c in b])


def poly_scale(a, s: Scalar):
    if s.is_zero():
        return []
    return [c * s for c in a]


def poly_mul(a, b):
    if not a or not b:
        return []
    field = a[0].field
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai.is_zero():
            for j, bj in enumerate(b):
                if not bj.is_zero():
                    out[i + j] = out[i + j] + ai * bj
    return poly_trim(out)


def poly_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv_lead = b[-1].inverse()
    q = [b[-1].field.zero] * max(len(a) - len(b) + 1, 0)
    for k in range(len(q) - 1, -1, -1):
        if len(a) < k + len(b):
            continue
        c = a[k + len(b) - 1] * inv_lead
        q[k] = c
        if not c.is_zero():
            for i, d in enumerate(b):
                a[k + i] = a[k + i] - c * d
    return poly_trim(q), poly_trim(a[: len(b) - 1])


def poly_monic(p):
    if not p:
        return []
    lead = p[-1]
    if lead.is_one():
        return list(p)
    inv = lead.inverse()
    return [c * inv for c in p]


def poly_extgcd(a, b):
    """Monic g with s*a + t*b = g."""
    field = (a or b)[0].field
    r0, r1 = poly_trim(list(a)), poly_trim(list(b))
    s0, s1 = [field.one], []
    t0, t1 = [], [field.one]
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1))
    if not r0:
        return [], [], []
    lead_inv = r0[-1].inverse()
    return poly_scale(r0, lead_inv), poly_scale(s0, lead_inv), poly_scale(t0, lead_inv)


def poly_eval(p, x: Scalar) -> Scalar:
    out = x.field.zero
    for c in reversed(p):
        out = out * x + c
    return out


def poly_from_roots(field, roots_with_mult):
    out = [field.one]
    for root, mult in roots_with_mult:
        factor = [-root, field.one]
        for _ in range(mult):
            out = poly_mul(out, factor)
    return out


def poly_to_string(p, var="x") -> str:
    if not p:
        return "0"
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c.is_zero():
            continue
        if k == 0:
            parts.append(f"({scalar_to_string(c)})")
        else:
            v = var if k == 1 else f"{var}^{k}"
            parts.append(v if c.is_one() else f"({scalar_to_string(c)})*{v}")
    return " + ".join(parts)


# -- linear factor extraction -------------------------------------------------


def _rational_root_candidates(p) -> list:
    """Rational candidates via the rational root theorem applied to the
    rational-coordinate polynomial of a monic p (coordinate 0 has lead 1)."""
    coords = [c.coeffs[0] for c in p]
    denom_lcm = 1
    for q in coords:
        denom_lcm = denom_lcm * q.denominator // math.gcd(denom_lcm, int(q.denominator))
    ints = [int(q * denom_lcm) for q in coords]
    while ints and ints[0] == 0:
        ints = ints[1:]
    if not ints:
        return [QQ(0)]
    a0, ad = abs(ints[0]), abs(ints[-1])
    ps = [d for d in range(1, a0 + 1) if a0 % d == 0]
    qs = [d for d in range(1, ad + 1) if ad % d == 0]
    seen, out = set(), [QQ(0)]
    for num in ps:
        for den in qs:
            for sign in (1, -1):
                cand = QQ(sign * num, den)
                if cand not in seen:
                    seen.add(cand)
                    out.append(cand)
    return out


def _sympy_linear_factors(p, field):
    """Complete fallback: factor over Q(zeta_n) with sympy, return
    (roots list, leftover nonlinear factors as scalar polys)."""
    import sympy

    x = sympy.Symbol("x")
    if field.conductor == 1:
        dom = sympy.QQ
        to_expr = lambda c: sympy.Rational(int(c.coeffs[0].numerator), int(c.coeffs[0].denominator))
        def from_dom(elem):
            q = sympy.Rational(elem)
            return field.from_rational(QQ(int(q.p), int(q.q)))
    else:
        zeta = sympy.exp(2 * sympy.I * sympy.pi * sympy.Rational(1, field.conductor))
        dom = sympy.QQ.algebraic_field(zeta)

        def to_expr(c):
            return sum(
                sympy.Rational(int(q.numerator), int(q.denominator)) * zeta**k
                for k, q in enumerate(c.coeffs)
                if q
            )

        def from_dom(elem):
            rep = list(reversed(elem.to_list()))  # ascending
            return field.from_coeffs([QQ(int(q.numerator), int(q.denominator)) for q in rep])

    expr = sum(to_expr(c) * x**k for k, c in enumerate(p))
    poly = sympy.Poly(sympy.expand(expr), x, domain=dom)
    roots, leftovers = [], []
    _, factors = poly.factor_list()
    for fac, mult in factors:
        if fac.degree() == 1:
            monic = fac.monic()
            root = dom.from_sympy(sympy.expand(-monic.all_coeffs()[1]))
            roots.append((from_dom(root) if field.conductor > 1 else from_dom(root), mult))
        else:
            coeffs = [dom.from_sympy(sympy.expand(c)) for c in reversed(fac.all_coeffs())]
            leftovers.append(poly_monic([from_dom(c) for c in coeffs]))
    return roots, leftovers


def factor_into_linears(p, field=None):
    """All roots of a monic polynomial in the field, with multiplicities.

    Fast path searches rational candidates, roots of unity, and their
    products, deflating as it goes; anything left is settled by an exact
    factorization over the field.  Raises NotSplitError when an irreducible
    non-linear factor survives, which signals that the conductor is too
    small for this polynomial.
    """
    p = poly_trim(list(p))
    if not p:
        raise ValueError("cannot factor the zero polynomial")
    if field is None:
        field = p[0].field
    p = poly_monic(p)
    if len(p) == 1:
        return []

    candidates = []
    rationals = _rational_root_candidates(p)
    units = field.roots_of_unity()
    candidates.extend(field.from_rational(q) for q in rationals)
    candidates.extend(units)
    if field.degree > 1:
        seen = {c.coeffs for c in candidates}
        for q in rationals:
            if q in (0, 1, -1):
                continue
            for u in units:
                cand = u * q
                if cand.coeffs not in seen:
                    seen.add(cand.coeffs)
                    candidates.append(cand)

    roots = []
    rem = p
    for cand in candidates:
        while len(rem) > 1 and poly_eval(rem, cand).is_zero():
            rem, _ = poly_divmod(rem, [-cand, field.one])
            roots.append(cand)
        if len(rem) == 1:
            break

    counted = {}
    for r in roots:
        counted[r] = counted.get(r, 0) + 1
    result = [(r, m) for r, m in counted.items()]

    if len(rem) > 1:
        extra, leftovers = _sympy_linear_factors(rem, field)
        result.extend(extra)
        if leftovers:
            worst = max(leftovers, key=len)
            raise NotSplitError(poly_to_string(worst))

    result.sort(key=lambda rm: rm[0].sort_key())
    return result
