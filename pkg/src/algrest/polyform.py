"""Exact polynomial exterior algebra with quasi-homogeneous grading.

Polynomials live in Q[x_1, ..., x_k] with monomials stored as exponent
tuples; differential p-forms carry one polynomial coefficient per strictly
increasing index tuple, so antisymmetry is canonical by construction.
The four calculus operations (wedge, exterior derivative, interior
product, Lie derivative) are all exact, as is restriction to the monomial
curve x_i = t^{lambda_i}.

Quasi-degrees: a monomial m contributes qdeg(m) = sum(e_i * lambda_i); a
term m dx_{i_1}^...^dx_{i_p} has quasi-degree qdeg(m) + lambda_{i_1} +
... + lambda_{i_p}; a vector-field component m d/dx_i has quasi-degree
qdeg(m) - lambda_i.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from itertools import combinations

from .semigroup import Weights, grlex_key, representations

INF = math.inf

Exps = tuple[int, ...]
Index = tuple[int, ...]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class Polynomial:
    """Multivariate polynomial over Q; terms maps exponent tuple -> coeff."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms=None):
        self.k = k
        self.terms: dict[Exps, Fraction] = {}
        if terms:
            for exps, c in terms.items():
                c = _frac(c)
                if c:
                    if len(exps) != k or any(e < 0 for e in exps):
                        raise ValueError(f"bad exponent tuple {exps} for k={k}")
                    self.terms[tuple(exps)] = self.terms.get(tuple(exps), Fraction(0)) + c
            self.terms = {m: c for m, c in self.terms.items() if c}

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, k: int) -> "Polynomial":
        return cls(k)

    @classmethod
    def constant(cls, k: int, c) -> "Polynomial":
        return cls(k, {(0,) * k: _frac(c)})

    @classmethod
    def variable(cls, k: int, i: int) -> "Polynomial":
        exps = [0] * k
        exps[i] = 1
        return cls(k, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, k: int, exps: Exps, coeff=1) -> "Polynomial":
        return cls(k, {tuple(exps): _frac(coeff)})

    # -- ring operations ----------------------------------------------------
    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Polynomial(self.k, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) - c
        return Polynomial(self.k, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.k, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            out: dict[Exps, Fraction] = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    m = tuple(a + b for a, b in zip(m1, m2))
                    out[m] = out.get(m, Fraction(0)) + c1 * c2
            return Polynomial(self.k, out)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = _frac(c)
        return Polynomial(self.k, {m: c * v for m, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.k == other.k and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    # -- calculus / structure ------------------------------------------------
    def diff(self, i: int) -> "Polynomial":
        out: dict[Exps, Fraction] = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                continue
            dm = list(m)
            dm[i] -= 1
            out[tuple(dm)] = out.get(tuple(dm), Fraction(0)) + c * m[i]
        return Polynomial(self.k, out)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.k, Fraction(0))

    def min_total_degree(self):
        """Order of vanishing at the origin; INF for the zero polynomial."""
        if not self.terms:
            return INF
        return min(sum(m) for m in self.terms)

    def quasi_degree_of(self, exps: Exps, w: Weights) -> int:
        return sum(e * l for e, l in zip(exps, w.lambdas))

    def quasi_components(self, w: Weights) -> dict[int, "Polynomial"]:
        out: dict[int, dict[Exps, Fraction]] = {}
        for m, c in self.terms.items():
            d = self.quasi_degree_of(m, w)
            out.setdefault(d, {})[m] = c
        return {d: Polynomial(self.k, t) for d, t in sorted(out.items())}

    def quasi_degree(self, w: Weights) -> int | None:
        """Quasi-degree when homogeneous, else None (zero polynomial: None)."""
        comps = self.quasi_components(w)
        if len(comps) == 1:
            return next(iter(comps))
        return None

    def restrict(self, w: Weights) -> "CurveSeries":
        """Substitute x_i := t^{lambda_i}."""
        out: dict[int, Fraction] = {}
        for m, c in self.terms.items():
            e = self.quasi_degree_of(m, w)
            out[e] = out.get(e, Fraction(0)) + c
        return CurveSeries(out)

    def subs_variable(self, i: int, replacement: "Polynomial") -> "Polynomial":
        """Substitute x_i := replacement (exact, expands powers)."""
        powers = {0: Polynomial.constant(self.k, 1)}
        max_e = max((m[i] for m in self.terms), default=0)
        for e in range(1, max_e + 1):
            powers[e] = powers[e - 1] * replacement
        out = Polynomial.zero(self.k)
        for m, c in self.terms.items():
            rest = list(m)
            rest[i] = 0
            out = out + Polynomial.monomial(self.k, tuple(rest), c) * powers[m[i]]
        return out

    # -- rendering -----------------------------------------------------------
    def sorted_terms(self) -> list[tuple[Exps, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            parts.append((c, monomial_str(m)))
        return join_signed(parts)

    def __repr__(self):
        return f"Polynomial({self.render()!r})"


def monomial_str(exps: Exps) -> str:
    factors = []
    for i, e in enumerate(exps):
        if e == 1:
            factors.append(f"x{i + 1}")
        elif e > 1:
            factors.append(f"x{i + 1}^{e}")
    return "*".join(factors) if factors else "1"


def join_signed(parts: list[tuple[Fraction, str]]) -> str:
    """Join (coefficient, symbol) pairs into a signed sum string."""
    pieces = []
    for n, (c, sym) in enumerate(parts):
        mag = abs(c)
        if sym in ("", "1"):
            body = str(mag)
        elif mag == 1:
            body = sym
        else:
            body = f"{mag}*{sym}"
        if n == 0:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


# ---------------------------------------------------------------------------
# series in the curve parameter
# ---------------------------------------------------------------------------

class CurveSeries:
    """Polynomial in the curve parameter t with exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[int, Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = _frac(c)
                if c:
                    if e < 0:
                        raise ValueError("negative exponent in curve series")
                    self.terms[int(e)] = c

    @classmethod
    def zero(cls) -> "CurveSeries":
        return cls()

    @classmethod
    def single(cls, e: int, c=1) -> "CurveSeries":
        return cls({e: _frac(c)})

    def __add__(self, other: "CurveSeries") -> "CurveSeries":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return CurveSeries(out)

    def __sub__(self, other: "CurveSeries") -> "CurveSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "CurveSeries":
        c = _frac(c)
        return CurveSeries({e: c * v for e, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, CurveSeries) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def order(self):
        """Order of vanishing at t = 0; INF for the zero series."""
        return min(self.terms) if self.terms else INF

    def exponents(self) -> list[int]:
        return sorted(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            sym = "t" if e == 1 else (f"t^{e}" if e else "")
            parts.append((self.terms[e], sym))
        return join_signed(parts)

    def __repr__(self):
        return f"CurveSeries({self.render()!r})"


# ---------------------------------------------------------------------------
# differential forms and vector fields
# ---------------------------------------------------------------------------

def sort_index(idx) -> tuple[Index, int]:
    """Sort an index tuple, returning (ascending tuple, permutation sign).

    Sign 0 when an index repeats.
    """
    idx = tuple(idx)
    lst = list(idx)
    if len(set(lst)) != len(lst):
        return tuple(sorted(lst)), 0
    sign = 1
    for i in range(len(lst)):
        for j in range(len(lst) - 1 - i):
            if lst[j] > lst[j + 1]:
                lst[j], lst[j + 1] = lst[j + 1], lst[j]
                sign = -sign
    return tuple(lst), sign


class PForm:
    """Differential p-form: increasing index tuple -> Polynomial coefficient."""

    __slots__ = ("k", "p", "terms")

    def __init__(self, k: int, p: int, terms=None):
        # degrees above k are allowed but necessarily zero forms
        if p < 0 or (p > k and terms):
            raise ValueError(f"form degree {p} out of range for k={k}")
        self.k = k
        self.p = p
        self.terms: dict[Index, Polynomial] = {}
        if terms:
            for idx, poly in terms.items():
                idx = tuple(idx)
                if len(idx) != p or list(idx) != sorted(set(idx)):
                    raise ValueError(f"index tuple {idx} is not strictly increasing")
                if poly:
                    cur = self.terms.get(idx)
                    self.terms[idx] = cur + poly if cur else poly
            self.terms = {i: c for i, c in self.terms.items() if c}

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, k: int, p: int) -> "PForm":
        return cls(k, p)

    @classmethod
    def monomial_form(cls, k: int, idx, coeff_poly: Polynomial, sign=1) -> "PForm":
        """coeff * dx_{idx}, with idx in any order (sign handled)."""
        asc, sgn = sort_index(idx)
        if sgn == 0:
            return cls.zero(k, len(asc))
        return cls(k, len(asc), {asc: coeff_poly.scale(sgn * sign)})

    @classmethod
    def dx(cls, k: int, i: int) -> "PForm":
        return cls(k, 1, {(i,): Polynomial.constant(k, 1)})

    # -- linear structure -----------------------------------------------------
    def __add__(self, other: "PForm") -> "PForm":
        if (self.k, self.p) != (other.k, other.p):
            raise ValueError("form shape mismatch")
        out = dict(self.terms)
        for idx, c in other.terms.items():
            out[idx] = out[idx] + c if idx in out else c
        return PForm(self.k, self.p, out)

    def __sub__(self, other: "PForm") -> "PForm":
        return self + other.scale(-1)

    def __neg__(self) -> "PForm":
        return self.scale(-1)

    def scale(self, c) -> "PForm":
        return PForm(self.k, self.p, {i: poly.scale(c) for i, poly in self.terms.items()})

    def mul_polynomial(self, g: Polynomial) -> "PForm":
        return PForm(self.k, self.p, {i: g * poly for i, poly in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, PForm) and (self.k, self.p) == (other.k, other.p)
                and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    # -- exterior calculus -----------------------------------------------------
    def wedge(self, other: "PForm") -> "PForm":
        if self.k != other.k:
            raise ValueError("form arity mismatch")
        p = self.p + other.p
        if p > self.k:
            return PForm.zero(self.k, min(p, self.k)) if p <= self.k else PForm.zero(self.k, self.k)
        out = PForm.zero(self.k, p)
        for i1, c1 in self.terms.items():
            for i2, c2 in other.terms.items():
                asc, sgn = sort_index(i1 + i2)
                if sgn == 0:
                    continue
                out = out + PForm(self.k, p, {asc: (c1 * c2).scale(sgn)})
        return out

    def d(self) -> "PForm":
        """Exterior derivative."""
        if self.p == self.k:
            return PForm.zero(self.k, self.k)
        out = PForm.zero(self.k, self.p + 1)
        for idx, c in self.terms.items():
            for i in range(self.k):
                if i in idx:
                    continue
                dc = c.diff(i)
                if dc:
                    out = out + PForm.monomial_form(self.k, (i,) + idx, dc)
        return out

    def interior(self, X: "VectorField") -> "PForm":
        """Interior product i_X."""
        if self.p == 0:
            return PForm.zero(self.k, 0)
        out = PForm.zero(self.k, self.p - 1)
        for idx, c in self.terms.items():
            for pos, i in enumerate(idx):
                comp = X.components[i]
                if not comp:
                    continue
                rest = idx[:pos] + idx[pos + 1:]
                sign = -1 if pos % 2 else 1
                out = out + PForm(self.k, self.p - 1, {rest: (comp * c).scale(sign)})
        return out

    # -- grading / restriction --------------------------------------------------
    def quasi_components(self, w: Weights) -> dict[int, "PForm"]:
        out: dict[int, dict[Index, Polynomial]] = {}
        for idx, c in self.terms.items():
            shift = sum(w.lambdas[i] for i in idx)
            for d, part in c.quasi_components(w).items():
                out.setdefault(d + shift, {})
                cur = out[d + shift].get(idx)
                out[d + shift][idx] = cur + part if cur else part
        return {d: PForm(self.k, self.p, t) for d, t in sorted(out.items())}

    def quasi_degree(self, w: Weights) -> int | None:
        comps = self.quasi_components(w)
        if len(comps) == 1:
            return next(iter(comps))
        return None

    def constant_part(self) -> "PForm":
        out = {}
        for idx, c in self.terms.items():
            c0 = c.constant_term()
            if c0:
                out[idx] = Polynomial.constant(self.k, c0)
        return PForm(self.k, self.p, out)

    def order_at_zero(self):
        """Minimum total degree over all coefficient monomials; INF if zero."""
        if not self.terms:
            return INF
        return min(c.min_total_degree() for c in self.terms.values())

    def vanishes_on_curve(self, w: Weights) -> bool:
        return all(not c.restrict(w) for c in self.terms.values())

    # -- rendering ----------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items())

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for idx, poly in self.sorted_terms():
            disp, sign = display_index(idx, self.k)
            wstr = "^".join(f"dx{i + 1}" for i in disp)
            body = poly.scale(sign)
            terms = body.sorted_terms()
            if len(terms) == 1:
                m, c = terms[0]
                sym = monomial_str(m)
                label = wstr if sym == "1" else f"{sym} {wstr}"
                parts.append((c, label))
            else:
                parts.append((Fraction(1), f"({body.render()}) {wstr}"))
        return " + ".join(
            p for p in [join_signed([t]) for t in parts]
        ).replace("+ -", "- ")

    def __repr__(self):
        return f"PForm({self.render()!r})"


def display_index(idx: Index, k: int) -> tuple[Index, int]:
    """Display orientation for an index tuple.

    For 2-forms in three variables the cyclic orientation is used
    (dx1^dx2, dx3^dx1, dx2^dx3), i.e. the complement of the pair fixes the
    sign via rep ^ dx_complement = +dx1^dx2^dx3.  Everything else renders
    in ascending order.
    """
    if k == 3 and len(idx) == 2:
        if idx == (0, 2):
            return (2, 0), -1
    return idx, 1


def oriented_wedge_sign(idx: Index, k: int) -> int:
    """Sign s such that the canonical representative is s * dx_{idx asc}."""
    return display_index(tuple(idx), k)[1]


class VectorField:
    """Polynomial vector field: one component per coordinate."""

    __slots__ = ("k", "components")

    def __init__(self, components):
        comps = list(components)
        self.k = len(comps)
        self.components: tuple[Polynomial, ...] = tuple(comps)

    @classmethod
    def euler(cls, w: Weights) -> "VectorField":
        k = w.k
        return cls(tuple(Polynomial.variable(k, i).scale(w.lambdas[i]) for i in range(k)))

    def quasi_components(self, w: Weights) -> dict[int, "VectorField"]:
        out: dict[int, list[Polynomial]] = {}
        for i, comp in enumerate(self.components):
            for d, part in comp.quasi_components(w).items():
                key = d - w.lambdas[i]
                out.setdefault(key, [Polynomial.zero(self.k) for _ in range(self.k)])
                out[key][i] = out[key][i] + part
        return {d: VectorField(c) for d, c in sorted(out.items())}

    def __eq__(self, other):
        return isinstance(other, VectorField) and self.components == other.components

    def render(self) -> str:
        parts = []
        for i, comp in enumerate(self.components):
            if not comp:
                continue
            body = comp.render()
            if len(comp.terms) > 1:
                body = f"({body})"
            parts.append(f"{body} d/dx{i + 1}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"VectorField({self.render()!r})"


# ---------------------------------------------------------------------------
# module-level operations
# ---------------------------------------------------------------------------

def wedge(a: PForm, b: PForm) -> PForm:
    return a.wedge(b)


def exterior_derivative(omega: PForm) -> PForm:
    return omega.d()


def interior_product(X: VectorField, omega: PForm) -> PForm:
    return omega.interior(X)


def lie_derivative(X: VectorField, omega: PForm) -> PForm:
    """Cartan formula: L_X = d i_X + i_X d."""
    return omega.interior(X).d() + omega.d().interior(X)


def quasi_components(obj, w: Weights):
    return obj.quasi_components(w)


def restrict_to_curve(g: Polynomial, w: Weights) -> CurveSeries:
    return g.restrict(w)


def toric_relations(delta: int, w: Weights) -> list[Polynomial]:
    """Spanning set of the degree-delta piece of the vanishing ideal.

    All differences m - m0 where m0 is the graded-lex least monomial of
    quasi-degree delta; empty when at most one such monomial exists.
    """
    reps = representations(delta, w)
    if len(reps) < 2:
        return []
    m0 = min(reps, key=grlex_key)
    out = []
    for m in sorted(reps, key=grlex_key):
        if m == m0:
            continue
        out.append(Polynomial(w.k, {m: Fraction(1), m0: Fraction(-1)}))
    return out


def order_vanishing_at_zero(omega: PForm):
    return omega.order_at_zero()


def order_vanishing_on_curve(alpha: PForm, w: Weights):
    """min_i ord_t(g_i o f) for a 1-form alpha = sum g_i dx_i."""
    if alpha.p != 1:
        raise ValueError("order on the curve is defined for 1-forms")
    orders = [alpha.terms[idx].restrict(w).order() for idx in alpha.terms]
    return min(orders, default=INF)


# ---------------------------------------------------------------------------
# parsing (round-trip of the render grammar)
# ---------------------------------------------------------------------------

_MONO_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")
_RATIONAL = re.compile(r"^\d+(?:/\d+)?$")


def _split_signed_terms(s: str) -> list[tuple[int, str]]:
    """Split a sum on top-level +/- (no parens nesting beyond depth 1)."""
    out = []
    sign, depth, cur = 1, 0, []
    first = True
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0:
            chunk = "".join(cur).strip()
            if chunk:
                out.append((sign, chunk))
            elif not first and not chunk:
                raise ValueError(f"dangling sign in {s!r}")
            sign = 1 if ch == "+" else -1
            cur = []
            first = False
        else:
            cur.append(ch)
        if ch not in "+-" or depth > 0:
            first = False
    chunk = "".join(cur).strip()
    if chunk:
        out.append((sign, chunk))
    return out


def parse_polynomial(s: str, k: int) -> Polynomial:
    s = s.strip()
    if not s or s == "0":
        return Polynomial.zero(k)
    poly = Polynomial.zero(k)
    for sign, term in _split_signed_terms(s):
        coeff = Fraction(sign)
        exps = [0] * k
        for factor in term.replace(" ", "").split("*"):
            if not factor:
                raise ValueError(f"empty factor in {term!r}")
            m = _MONO_FACTOR.match(factor)
            if m:
                i = int(m.group(1)) - 1
                if not 0 <= i < k:
                    raise ValueError(f"variable x{i + 1} out of range")
                exps[i] += int(m.group(2) or 1)
            elif _RATIONAL.match(factor):
                coeff *= Fraction(factor)
            else:
                raise ValueError(f"cannot parse factor {factor!r}")
        poly = poly + Polynomial.monomial(k, tuple(exps), coeff)
    return poly


_WEDGE = re.compile(r"^dx(\d+)(?:\^dx(\d+))*$")


def parse_form(s: str, k: int, p: int | None = None) -> PForm:
    """Parse the render grammar: terms like ``x1*x3 dx1^dx2`` or
    ``(x1 - x2) dx3^dx1``, joined by +/-."""
    s = s.strip()
    if not s or s == "0":
        if p is None:
            raise ValueError("cannot infer degree of the zero form")
        return PForm.zero(k, p)
    total: PForm | None = None
    for sign, term in _split_signed_terms(s):
        m = re.search(r"(dx\d+(?:\s*\^\s*dx\d+)*)\s*$", term)
        if not m:
            raise ValueError(f"term {term!r} has no wedge block")
        wedge_str = m.group(1).replace(" ", "")
        coeff_str = term[: m.start()].strip()
        idx = tuple(int(x) - 1 for x in re.findall(r"dx(\d+)", wedge_str))
        if any(not 0 <= i < k for i in idx):
            raise ValueError(f"index out of range in {wedge_str!r}")
        if not coeff_str:
            poly = Polynomial.constant(k, 1)
        elif coeff_str.startswith("(") and coeff_str.endswith(")"):
            poly = parse_polynomial(coeff_str[1:-1], k)
        else:
            poly = parse_polynomial(coeff_str.rstrip("*"), k)
        piece = PForm.monomial_form(k, idx, poly.scale(sign))
        total = piece if total is None else total + piece
    if p is not None and total.p != p:
        raise ValueError(f"parsed degree {total.p}, expected {p}")
    return total


def parse_curve_series(s: str) -> CurveSeries:
    """Parse a polynomial in t: e.g. ``t^3``, ``-t^5 + 1/2*t^8``, ``t^13/2``, ``0``."""
    s = s.strip()
    if not s:
        raise ValueError("empty curve component")
    if s == "0":
        return CurveSeries.zero()
    out: dict[int, Fraction] = {}
    for sign, term in _split_signed_terms(s):
        coeff = Fraction(sign)
        exp = 0
        body = term.replace(" ", "")
        # allow a trailing /q divisor after the power, e.g. t^13/2
        md = re.match(r"^(.*t(?:\^\d+)?)/(\d+)$", body)
        if md:
            body = md.group(1)
            coeff /= int(md.group(2))
        for factor in body.split("*"):
            if not factor:
                raise ValueError(f"empty factor in {term!r}")
            mt = re.match(r"^t(?:\^(\d+))?$", factor)
            if mt:
                exp += int(mt.group(1) or 1)
            elif _RATIONAL.match(factor):
                coeff *= Fraction(factor)
            else:
                raise ValueError(f"cannot parse factor {factor!r}")
        out[exp] = out.get(exp, Fraction(0)) + coeff
    return CurveSeries(out)
