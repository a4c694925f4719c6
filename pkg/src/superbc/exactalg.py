"""Exact scalars (rationals and rational functions of one formal parameter),
sparse multivariate polynomials, and exact linear solving.

No floating point exists anywhere in the package: every coefficient is a
`fractions.Fraction` or a `RatFunc` over the rationals, and every operation
is closed and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

_ZERO = Fraction(0)
_ONE = Fraction(1)


class PoleError(ZeroDivisionError):
    """Substitution point is a pole of the rational function."""


class VariableMismatch(ValueError):
    """Polynomial operands disagree on variable lists or exponent arity."""


# ---------------------------------------------------------------------------
# univariate polynomials over Q, stored low-to-high as tuples of Fractions


def _ptrim(cs: tuple) -> tuple:
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return cs[:n]


def _padd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _ptrim(tuple(out))


def _pneg(a: tuple) -> tuple:
    return tuple(-c for c in a)


def _pmul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _ptrim(tuple(out))


def _pdivmod(a: tuple, b: tuple) -> tuple[tuple, tuple]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    q = [_ZERO] * max(len(a) - len(b) + 1, 0)
    inv = 1 / b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = rem[k + len(b) - 1] * inv
        if c:
            q[k] = c
            for j, cb in enumerate(b):
                rem[k + j] -= c * cb
    return _ptrim(tuple(q)), _ptrim(tuple(rem))


def _pgcd(a: tuple, b: tuple) -> tuple:
    """Monic gcd by Euclid's algorithm."""
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return ()
    inv = 1 / a[-1]
    return tuple(c * inv for c in a)


def _peval(a: tuple, x: Fraction) -> Fraction:
    acc = _ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _ptext(cs: tuple, sym: str) -> str:
    if not cs:
        return "0"
    chunks = []
    for e in range(len(cs) - 1, -1, -1):
        c = cs[e]
        if not c:
            continue
        if e == 0:
            piece = str(c)
        else:
            var = sym if e == 1 else f"{sym}^{e}"
            if c == 1:
                piece = var
            elif c == -1:
                piece = f"-{var}"
            else:
                piece = f"{c}*{var}"
        chunks.append(piece)
    text = chunks[0]
    for piece in chunks[1:]:
        text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
    return text


class RatFunc:
    """Rational function num/den in one formal parameter over Q.

    Canonical form (gcd(num, den) = 1, den monic) is restored by every
    operation, so structural equality is mathematical equality.
    """

    __slots__ = ("num", "den")

    SYMBOL = "theta"

    def __init__(self, num=0, den=1):
        num_t = self._coeffs(num)
        den_t = self._coeffs(den)
        if not den_t:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num_t:
            den_t = (_ONE,)
        else:
            g = _pgcd(num_t, den_t)
            if len(g) > 1:
                num_t = _pdivmod(num_t, g)[0]
                den_t = _pdivmod(den_t, g)[0]
            lead = den_t[-1]
            if lead != 1:
                inv = 1 / lead
                num_t = tuple(c * inv for c in num_t)
                den_t = tuple(c * inv for c in den_t)
        self.num = num_t
        self.den = den_t

    @staticmethod
    def _coeffs(v) -> tuple:
        if isinstance(v, RatFunc):
            raise TypeError("nested rational functions are not supported")
        if isinstance(v, (int, Fraction)):
            return _ptrim((Fraction(v),))
        return _ptrim(tuple(Fraction(c) for c in v))

    @classmethod
    def variable(cls) -> "RatFunc":
        return cls((0, 1))

    @classmethod
    def _coerce(cls, v):
        if isinstance(v, RatFunc):
            return v
        if isinstance(v, (int, Fraction)):
            return cls(v)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        num = _padd(_pmul(self.num, o.den), _pmul(o.num, self.den))
        return RatFunc(num, _pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        out.num = _pneg(self.num)
        out.den = self.den
        return out

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(_pmul(self.num, o.den), _pmul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if not self.num:
                raise ZeroDivisionError("negative power of the zero rational function")
            return RatFunc(self.den, self.num) ** (-e)
        out = RatFunc(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den == (_ONE,) and self.num == _ptrim((Fraction(other),))
        return NotImplemented

    def __hash__(self):
        if self.den == (_ONE,) and len(self.num) <= 1:
            return hash(self.num[0] if self.num else _ZERO)
        return hash((self.num, self.den))

    def is_constant(self) -> bool:
        return self.den == (_ONE,) and len(self.num) <= 1

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num[0] if self.num else _ZERO

    def evaluate(self, point) -> Fraction:
        """Substitute a rational for the parameter and reduce."""
        point = Fraction(point)
        dval = _peval(self.den, point)
        if not dval:
            raise PoleError(f"{self} has a pole at {self.SYMBOL} = {point}")
        return _peval(self.num, point) / dval

    def __str__(self) -> str:
        if self.den == (_ONE,):
            return _ptext(self.num, self.SYMBOL)
        num = _ptext(self.num, self.SYMBOL)
        den = _ptext(self.den, self.SYMBOL)
        return f"({num})/({den})"

    __repr__ = __str__


THETA = RatFunc.variable()

Scalar = Union[Fraction, RatFunc]


def as_scalar(v) -> Scalar:
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, (int, Fraction)):
        return Fraction(v)
    raise TypeError(f"expected an exact scalar, got {type(v).__name__}")


def scalar_eval(f, theta0) -> Fraction:
    """Substitute the formal parameter and reduce; rationals pass through."""
    if isinstance(f, RatFunc):
        return f.evaluate(theta0)
    return Fraction(f)


def scalar_text(c) -> str:
    return str(c)


# ---------------------------------------------------------------------------
# sparse multivariate polynomials


class SparsePoly:
    """Multivariate polynomial over exact scalars, stored as a sparse map from
    exponent vectors to nonzero coefficients.

    The ordered variable list is part of the identity.  Canonical printing
    uses graded lexicographic term order, highest term first.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping | None = None):
        vars_t = tuple(variables)
        if len(set(vars_t)) != len(vars_t):
            raise VariableMismatch(f"duplicate variable names: {vars_t!r}")
        clean: dict = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(vars_t):
                raise VariableMismatch(
                    f"exponent vector {exps!r} does not match {len(vars_t)} variables"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps!r}")
            c = as_scalar(c)
            if c:
                acc = clean.get(exps)
                s = c if acc is None else acc + c
                if s:
                    clean[exps] = s
                else:
                    clean.pop(exps, None)
        self.vars = vars_t
        self.terms = clean

    @classmethod
    def _raw(cls, vars_t: tuple, terms: dict) -> "SparsePoly":
        out = cls.__new__(cls)
        out.vars = vars_t
        out.terms = terms
        return out

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "SparsePoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: Sequence[str], c) -> "SparsePoly":
        c = as_scalar(c)
        vars_t = tuple(variables)
        if not c:
            return cls._raw(vars_t, {})
        return cls._raw(vars_t, {(0,) * len(vars_t): c})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "SparsePoly":
        vars_t = tuple(variables)
        if name not in vars_t:
            raise VariableMismatch(f"{name!r} not among variables {vars_t!r}")
        exps = tuple(1 if v == name else 0 for v in vars_t)
        return cls._raw(vars_t, {exps: _ONE})

    @classmethod
    def monomial(cls, variables: Sequence[str], exps: Sequence[int], c) -> "SparsePoly":
        return cls(variables, {tuple(exps): c})

    def _check_same(self, other: "SparsePoly") -> None:
        if self.vars != other.vars:
            raise VariableMismatch(f"variable lists differ: {self.vars!r} vs {other.vars!r}")

    def __add__(self, other):
        if isinstance(other, SparsePoly):
            self._check_same(other)
            out = dict(self.terms)
            for e, c in other.terms.items():
                s = out.get(e, _ZERO) + c
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
            return SparsePoly._raw(self.vars, out)
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self + SparsePoly.constant(self.vars, c)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        out = self + (-other if isinstance(other, SparsePoly) else SparsePoly.constant(self.vars, -as_scalar(other)))
        return out

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SparsePoly):
            self._check_same(other)
            out: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    s = out.get(e, _ZERO) + c1 * c2
                    if s:
                        out[e] = s
                    else:
                        out.pop(e, None)
            return SparsePoly._raw(self.vars, out)
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        if not c:
            return SparsePoly._raw(self.vars, {})
        return SparsePoly._raw(self.vars, {e: cc * c for e, cc in self.terms.items()})

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = SparsePoly.constant(self.vars, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.vars == other.vars and self.terms == other.terms
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self.terms == SparsePoly.constant(self.vars, c).terms

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Maximum total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "SparsePoly":
        return SparsePoly._raw(self.vars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def coefficient(self, exps: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(exps), _ZERO)

    def evaluate(self, values: Sequence) -> Scalar:
        """Evaluate at a full assignment of exact scalars."""
        if len(values) != len(self.vars):
            raise VariableMismatch(f"expected {len(self.vars)} values, got {len(values)}")
        vals = [as_scalar(v) for v in values]
        total: Scalar = _ZERO
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(vals, exps):
                if e:
                    term = term * v**e
            total = total + term
        return total

    def substitute(self, assignment: Mapping) -> "SparsePoly":
        """Compose with polynomial or scalar images of selected variables.

        All polynomial images must share one variable list; unassigned
        variables pass through (appended to the target list if missing).
        """
        target: tuple | None = None
        for name, val in assignment.items():
            if name not in self.vars:
                raise VariableMismatch(f"{name!r} is not a variable of this polynomial")
            if isinstance(val, SparsePoly):
                if target is None:
                    target = val.vars
                elif val.vars != target:
                    raise VariableMismatch("assigned polynomials use different variable lists")
        if target is None:
            target = self.vars
        extra = tuple(v for v in self.vars if v not in assignment and v not in target)
        tvars = target + extra
        pad = (0,) * len(extra)
        images: list[SparsePoly] = []
        for name in self.vars:
            if name in assignment:
                val = assignment[name]
                if isinstance(val, SparsePoly):
                    if extra:
                        img = SparsePoly._raw(tvars, {e + pad: c for e, c in val.terms.items()})
                    else:
                        img = val
                else:
                    img = SparsePoly.constant(tvars, val)
            else:
                img = SparsePoly.variable(tvars, name)
            images.append(img)
        out = SparsePoly._raw(tvars, {})
        pow_cache: dict = {}
        for exps, c in self.terms.items():
            term = SparsePoly.constant(tvars, c)
            for i, e in enumerate(exps):
                if e:
                    key = (i, e)
                    pw = pow_cache.get(key)
                    if pw is None:
                        pw = images[i] ** e
                        pow_cache[key] = pw
                    term = term * pw
            out = out + term
        return out

    def sorted_terms(self) -> list:
        """Terms in descending graded lexicographic order."""
        return [(e, self.terms[e]) for e in sorted(self.terms, key=lambda t: (sum(t), t), reverse=True)]

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for exps, c in self.sorted_terms():
            mon = "*".join(
                (v if k == 1 else f"{v}^{k}") for v, k in zip(self.vars, exps) if k
            )
            cs = scalar_text(c)
            if isinstance(c, RatFunc) and not c.is_constant():
                cs = f"({cs})"
            if not mon:
                piece = cs
            elif cs == "1":
                piece = mon
            elif cs == "-1":
                piece = f"-{mon}"
            else:
                piece = f"{cs}*{mon}"
            chunks.append(piece)
        text = chunks[0]
        for piece in chunks[1:]:
            text += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return text

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"<SparsePoly {self.to_text()} in ({', '.join(self.vars)})>"

    def to_record(self) -> dict:
        """Serialization record; coefficients must be rational."""
        terms = []
        for exps, c in self.sorted_terms():
            if isinstance(c, RatFunc):
                c = c.constant_value()
            terms.append(
                {
                    "exponents": list(exps),
                    "coefficient": {"num": str(c.numerator), "den": str(c.denominator)},
                }
            )
        return {"variables": list(self.vars), "terms": terms}

    @classmethod
    def from_record(cls, rec: Mapping) -> "SparsePoly":
        terms = {
            tuple(t["exponents"]): Fraction(int(t["coefficient"]["num"]), int(t["coefficient"]["den"]))
            for t in rec["terms"]
        }
        return cls(tuple(rec["variables"]), terms)


def poly_substitute(f: SparsePoly, assignment: Mapping) -> SparsePoly:
    """Exact composition; see SparsePoly.substitute."""
    return f.substitute(assignment)


# ---------------------------------------------------------------------------
# exact linear solving

UNIQUE = "unique"
INCONSISTENT = "inconsistent"
UNDERDETERMINED = "underdetermined"


@dataclass(frozen=True)
class LinearSolveOutcome:
    tag: str
    solution: tuple | None = None
    nullspace: tuple | None = None


def solve_exact(matrix: Sequence[Sequence], rhs: Sequence, ncols: int | None = None) -> LinearSolveOutcome:
    """Classify and solve A x = b over the exact scalars.

    Forward elimination is fraction-free (Bareiss): every update divides by
    the previous pivot, which is an exact division over an integral domain
    and keeps intermediate growth polynomial.  Nullspace vectors are
    normalized so their first nonzero coordinate is 1.
    """
    rows = [[as_scalar(v) for v in r] for r in matrix]
    b = [as_scalar(v) for v in rhs]
    if len(rows) != len(b):
        raise ValueError("matrix and right-hand side sizes differ")
    m = len(rows)
    if m:
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ValueError("matrix is ragged")
        if ncols is not None and ncols != n:
            raise ValueError("ncols disagrees with the matrix width")
    else:
        n = ncols or 0
    aug = [rows[i] + [b[i]] for i in range(m)]
    piv_cols: list[int] = []
    prev: Scalar = _ONE
    r = 0
    for c in range(n):
        if r == m:
            break
        pr = next((i for i in range(r, m) if aug[i][c]), None)
        if pr is None:
            continue
        if pr != r:
            aug[r], aug[pr] = aug[pr], aug[r]
        pivot = aug[r][c]
        for i in range(r + 1, m):
            head = aug[i][c]
            for j in range(c + 1, n + 1):
                aug[i][j] = (pivot * aug[i][j] - head * aug[r][j]) / prev
            aug[i][c] = _ZERO
        prev = pivot
        piv_cols.append(c)
        r += 1
    rank = r
    for i in range(rank, m):
        if aug[i][n]:
            return LinearSolveOutcome(INCONSISTENT)
    if rank == n:
        x: list[Scalar] = [_ZERO] * n
        for k in range(rank - 1, -1, -1):
            c = piv_cols[k]
            acc = aug[k][n]
            for j in range(c + 1, n):
                if aug[k][j] and x[j]:
                    acc = acc - aug[k][j] * x[j]
            x[c] = acc / aug[k][c]
        return LinearSolveOutcome(UNIQUE, solution=tuple(x))
    free = [c for c in range(n) if c not in piv_cols]
    basis = []
    for f in free:
        v: list[Scalar] = [_ZERO] * n
        v[f] = _ONE
        for k in range(rank - 1, -1, -1):
            c = piv_cols[k]
            acc: Scalar = _ZERO
            for j in range(c + 1, n):
                if aug[k][j] and v[j]:
                    acc = acc + aug[k][j] * v[j]
            v[c] = -acc / aug[k][c]
        lead = next(val for val in v if val)
        if lead != 1:
            v = [val / lead for val in v]
        basis.append(tuple(v))
    return LinearSolveOutcome(UNDERDETERMINED, nullspace=tuple(basis))
