"""Two-family polynomial realizations: the homomorphism sending power sums to
signed two-family power sums, super Jack polynomials, (even) supersymmetry
predicates, the squared basis, and the restriction from doubled to single
coordinates."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from superbc.exactalg import SparsePoly, VariableMismatch, as_scalar
from superbc.partitions import HookParams, Partition, enumerate_hooks, sort_key
from superbc.symmfunc import SymFun, jack_P


class ZeroTheta(ZeroDivisionError):
    """theta = 0 is outside the domain of the substitution homomorphism."""


def a_variables(hp: HookParams) -> tuple:
    """Variable list x1..xp, y1..yq."""
    return tuple(f"x{i}" for i in range(1, hp.p + 1)) + tuple(
        f"y{j}" for j in range(1, hp.q + 1)
    )


def h_variables(hp: HookParams) -> tuple:
    """Variable list x+1..x+p, x-1..x-p, y+1..y+q, y-1..y-q."""
    return (
        tuple(f"x+{i}" for i in range(1, hp.p + 1))
        + tuple(f"x-{i}" for i in range(1, hp.p + 1))
        + tuple(f"y+{j}" for j in range(1, hp.q + 1))
        + tuple(f"y-{j}" for j in range(1, hp.q + 1))
    )


def power_sum(r: int, hp: HookParams) -> SparsePoly:
    """Signed two-family power sum sum x_i^r - (-1)^r sum y_j^r."""
    if r < 1:
        raise ValueError("power sums are indexed by positive integers")
    variables = a_variables(hp)
    n = len(variables)
    terms = {}
    ysign = Fraction(-((-1) ** r))
    for i in range(hp.p):
        e = [0] * n
        e[i] = r
        terms[tuple(e)] = Fraction(1)
    for j in range(hp.q):
        e = [0] * n
        e[hp.p + j] = r
        terms[tuple(e)] = ysign
    return SparsePoly(variables, terms)


def power_sum_doubled(r: int, hp: HookParams) -> SparsePoly:
    """The same signed power sum on the doubled list of 2p + 2q variables."""
    if r < 1:
        raise ValueError("power sums are indexed by positive integers")
    variables = h_variables(hp)
    n = len(variables)
    terms = {}
    ysign = Fraction(-((-1) ** r))
    for i in range(2 * hp.p):
        e = [0] * n
        e[i] = r
        terms[tuple(e)] = Fraction(1)
    for j in range(2 * hp.q):
        e = [0] * n
        e[2 * hp.p + j] = r
        terms[tuple(e)] = ysign
    return SparsePoly(variables, terms)


@lru_cache(maxsize=None)
def _phi_generator(r: int, hp: HookParams, theta) -> SparsePoly:
    # image of p_r: sum x_i^r - (1/theta) sum y_j^r
    variables = a_variables(hp)
    n = len(variables)
    ycoeff = as_scalar(-1) / theta
    terms = {}
    for i in range(hp.p):
        e = [0] * n
        e[i] = r
        terms[tuple(e)] = Fraction(1)
    for j in range(hp.q):
        e = [0] * n
        e[hp.p + j] = r
        terms[tuple(e)] = ycoeff
    return SparsePoly(variables, terms)


@lru_cache(maxsize=None)
def _phi_product(parts: tuple, hp: HookParams, theta) -> SparsePoly:
    if not parts:
        return SparsePoly.constant(a_variables(hp), 1)
    return _phi_generator(parts[0], hp, theta) * _phi_product(parts[1:], hp, theta)


def phi_theta(f: SymFun, hp: HookParams, theta) -> SparsePoly:
    """Algebra homomorphism determined by p_r -> sum x_i^r - (1/theta) sum y_j^r."""
    theta = as_scalar(theta)
    if not theta:
        raise ZeroTheta("theta must be nonzero")
    out = SparsePoly.zero(a_variables(hp))
    for lam, c in sorted(f.coeffs.items(), key=lambda kv: sort_key(kv[0])):
        out = out + _phi_product(lam.parts, hp, theta) * c
    return out


@lru_cache(maxsize=None)
def super_jack(lam: Partition, hp: HookParams, theta) -> SparsePoly:
    """Image of the Jack symmetric function under phi_theta; identically zero
    exactly when lam is not a (p, q)-hook partition."""
    theta = as_scalar(theta)
    return phi_theta(jack_P(lam, theta), hp, theta)


def squared_substitution(f: SparsePoly, hp: HookParams) -> SparsePoly:
    """Substitute x_i -> x_i^2, y_j -> y_j^2 (exponent doubling)."""
    if f.vars != a_variables(hp):
        raise VariableMismatch(f"expected variables {a_variables(hp)!r}")
    return SparsePoly(f.vars, {tuple(2 * e for e in exps): c for exps, c in f.terms.items()})


def _permuted(f: SparsePoly, perm: tuple) -> SparsePoly:
    terms = {}
    for exps, c in f.terms.items():
        new = [0] * len(exps)
        for i, e in enumerate(exps):
            new[perm[i]] = e
        terms[tuple(new)] = c
    return SparsePoly(f.vars, terms)


def _block_permutations(hp: HookParams):
    p, q = hp.p, hp.q
    for sx in permutations(range(p)):
        for sy in permutations(range(q)):
            yield tuple(sx) + tuple(p + j for j in sy)


def _separately_symmetric(f: SparsePoly, hp: HookParams) -> bool:
    return all(_permuted(f, perm) == f for perm in _block_permutations(hp))


def _t_independent(f: SparsePoly, hp: HookParams, y_sign: int) -> bool:
    # substitute x1 = t, y1 = y_sign * t and require that t disappears
    target = ("t",) + f.vars[1 : hp.p] + f.vars[hp.p + 1 :]
    t_poly = SparsePoly.variable(target, "t")
    g = f.substitute({f.vars[0]: t_poly, f.vars[hp.p]: t_poly * y_sign})
    ti = g.vars.index("t")
    return all(e[ti] == 0 for e in g.terms)


def _flip(f: SparsePoly, v: int) -> SparsePoly:
    return SparsePoly(f.vars, {e: (-c if e[v] % 2 else c) for e, c in f.terms.items()})


def _sign_invariant(f: SparsePoly) -> bool:
    return all(_flip(f, v) == f for v in range(len(f.vars)))


def is_supersymmetric(f: SparsePoly, hp: HookParams, variant: str = "signed") -> bool:
    """Separate symmetry in the two families plus t-independence of the
    cancellation substitution (x1 = t with y1 = -t for "signed", y1 = +t for
    "plain")."""
    if f.vars != a_variables(hp):
        raise VariableMismatch(f"expected variables {a_variables(hp)!r}")
    if variant not in ("signed", "plain"):
        raise ValueError(f"unknown variant {variant!r}")
    if not _separately_symmetric(f, hp):
        return False
    return _t_independent(f, hp, -1 if variant == "signed" else 1)


def is_even_supersymmetric(f: SparsePoly, hp: HookParams) -> bool:
    """Separate symmetry, invariance under every variable sign change, and
    t-independence of the substitution x1 = t, y1 = -t."""
    if f.vars != a_variables(hp):
        raise VariableMismatch(f"expected variables {a_variables(hp)!r}")
    return (
        _separately_symmetric(f, hp)
        and _sign_invariant(f)
        and _t_independent(f, hp, -1)
    )


def lambda0_basis(hp: HookParams, d: int) -> list:
    """Pairs (nu, SP_nu(x^2, y^2; 1)) for hook partitions nu of size <= d;
    homogeneous of degree 2|nu| and linearly independent."""
    one = Fraction(1)
    return [
        (nu, squared_substitution(super_jack(nu, hp, one), hp))
        for nu in enumerate_hooks(hp, d, "upto")
    ]


def res_map(f: SparsePoly, hp: HookParams) -> SparsePoly:
    """Halving substitution x+-i -> +-x_i/2, y+-j -> +-y_j/2 from the doubled
    variable list onto x1..xp, y1..yq."""
    if f.vars != h_variables(hp):
        raise VariableMismatch(f"expected variables {h_variables(hp)!r}")
    target = a_variables(hp)
    half = Fraction(1, 2)
    assignment = {}
    for i in range(1, hp.p + 1):
        xi = SparsePoly.variable(target, f"x{i}")
        assignment[f"x+{i}"] = xi * half
        assignment[f"x-{i}"] = xi * (-half)
    for j in range(1, hp.q + 1):
        yj = SparsePoly.variable(target, f"y{j}")
        assignment[f"y+{j}"] = yj * half
        assignment[f"y-{j}"] = yj * (-half)
    return f.substitute(assignment)
