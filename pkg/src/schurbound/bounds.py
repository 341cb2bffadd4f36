"""Closed-form upper bounds on ``log_p |M(G)|`` for a p-group ``G``.

All bounds take the parameters ``|G| = p^n``, ``d = d(G)``, ``delta = d(G/Z)``,
``|gamma_2 G| = p^k`` and ``k' = d(gamma_2 G / gamma_3 G)``. The leading term
``(d-1)(n+k)/2`` can be half-integral, so every exponent keeps its exact
rational value; since ``|M(G)|`` is an integral power of ``p`` the usable
bound is the floor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, floor
from typing import Sequence

from .errors import DuplicatePrime, HypothesisViolated, InvalidParams
from .fieldmat import is_prime
from .trigraph import rt_decompose


@dataclass(frozen=True)
class PGroupParams:
    p: int
    n: int
    d: int
    delta: int
    k: int
    kprime: int

    def __post_init__(self):
        p, n, d, delta, k, kp = self.p, self.n, self.d, self.delta, self.k, self.kprime
        if not is_prime(p):
            raise InvalidParams(f"p={p} is not prime")
        if not (2 <= delta <= d <= n):
            raise InvalidParams(f"need 2 <= delta <= d <= n; got delta={delta}, d={d}, n={n}")
        if not (1 <= k <= n - d):
            raise InvalidParams(f"need 1 <= k <= n - d; got k={k}, n-d={n - d}")
        if not (1 <= kp <= min(k, comb(delta, 2))):
            raise InvalidParams(f"need 1 <= k' <= min(k, C(delta,2)); got k'={kp}")

    def as_dict(self) -> dict:
        return {"p": self.p, "n": self.n, "d": self.d, "delta": self.delta, "k": self.k, "kprime": self.kprime}


@dataclass(frozen=True, order=True)
class Exponent:
    exact: Fraction

    def __post_init__(self):
        object.__setattr__(self, "exact", Fraction(self.exact))
        if self.exact.denominator not in (1, 2):
            raise ValueError(f"exponent {self.exact} is not a half-integer")

    @property
    def effective(self) -> int:
        return floor(self.exact)

    def __add__(self, other) -> Exponent:
        other = other.exact if isinstance(other, Exponent) else other
        return Exponent(self.exact + other)

    def __str__(self):
        return str(self.exact)


def _params(params) -> PGroupParams:
    if isinstance(params, PGroupParams):
        return params
    if isinstance(params, dict):
        return PGroupParams(**params)
    return PGroupParams(*params)


def _lead(d: int, n: int, k: int) -> Fraction:
    return Fraction((d - 1) * (n + k), 2)


def _sum_down(top: int, upper: int) -> int:
    """``sum_{i=2}^{upper} (top - i)``."""
    return sum(top - i for i in range(2, upper + 1))


def exp_thm33(params) -> Exponent:
    P = _params(params)
    rt = rt_decompose(comb(P.delta, 2) - P.kprime)
    return Exponent(
        _lead(P.d, P.n, P.k) - P.k * (P.d - P.delta) - comb(P.delta, 3) + comb(rt.r, 3) + comb(rt.t, 2)
    )


def exp_cor34(params) -> Exponent:
    P = _params(params)
    return exp_thm33(P) + P.d


def exp_rai_thm14(params) -> Exponent:
    P = _params(params)
    return Exponent(_lead(P.d, P.n, P.k) - _sum_down(P.d, min(P.d, P.kprime + 1)))


def exp_rai_ineq4(params) -> Exponent:
    P = _params(params)
    return Exponent(_lead(P.d, P.n, P.k) - P.k * (P.d - P.delta) - _sum_down(P.delta, min(P.delta, P.kprime + 1)))


def exp_rai_special(d: int) -> Exponent:
    """Bound for special groups with ``|gamma_2 G| = p^{C(d,2)}``."""
    if d < 3:
        raise InvalidParams(f"need d >= 3; got d={d}")
    return Exponent(Fraction((d - 1) * d * (d + 1), 3))


def _special_shape(p, n, d, k):
    if not is_prime(p):
        raise InvalidParams(f"p={p} is not prime")
    if not (d > k + 1 and k > 2):
        raise HypothesisViolated(f"need d > k + 1 and k > 2; got d={d}, k={k}")
    if n != d + k:
        raise InvalidParams(f"special groups have n = d + k; got n={n}, d={d}, k={k}")


def exp_thm38(p: int, n: int, d: int, k: int) -> Exponent:
    _special_shape(p, n, d, k)
    return Exponent(_lead(d, n, k) - _sum_down(d, k + 1) - (k - 2))


def exp_cor39(p: int, n: int, d: int, k: int) -> Exponent:
    return exp_thm38(p, n, d, k) + d


def exp_thm35_product(params_list: Sequence) -> list[tuple[int, Exponent]]:
    """Per-prime factors of the bound for a group whose Sylow subgroups have these parameters."""
    plist = [_params(x) for x in params_list]
    primes = [P.p for P in plist]
    if len(set(primes)) != len(primes):
        raise DuplicatePrime(f"primes must be distinct, got {primes}")
    return [(P.p, exp_thm33(P)) for P in plist]


def exp_ew_chain(params, dim_psi_bar: int) -> Exponent:
    """Ellis-Wiegold chain with an exact ``dim im Psi`` on ``(G/Z)^ab``."""
    P = _params(params)
    if dim_psi_bar < 0:
        raise InvalidParams("dim_psi_bar must be non-negative")
    return Exponent(_lead(P.d, P.n, P.k) - P.k * (P.d - P.delta) - dim_psi_bar)


def lemma37_check(delta: int, kprime: int) -> bool:
    """``C(delta,3) - C(r,3) - C(t,2) == sum_{i=2}^{k'+1} (delta - i)``."""
    if not (delta > kprime + 1 and kprime >= 1):
        raise HypothesisViolated(f"need delta > k' + 1 and k' >= 1; got delta={delta}, k'={kprime}")
    rt = rt_decompose(comb(delta, 2) - kprime)
    return comb(delta, 3) - comb(rt.r, 3) - comb(rt.t, 2) == _sum_down(delta, kprime + 1)


@dataclass(frozen=True)
class BoundEntry:
    name: str
    exponent: Exponent

    def as_dict(self) -> dict:
        e = self.exponent
        return {"name": self.name, "exact": str(e.exact), "effective": e.effective}


def is_special_shape(P: PGroupParams) -> bool:
    return P.d == P.delta and P.k == P.kprime and P.n == P.d + P.k


def compare_report(params) -> dict:
    """Every applicable bound, plus the ordering flags ``thm33 <= ineq4 <= thm14``."""
    P = _params(params)
    thm33, ineq4, thm14 = exp_thm33(P), exp_rai_ineq4(P), exp_rai_thm14(P)
    entries = [
        BoundEntry("thm33", thm33),
        BoundEntry("cor34_h2", exp_cor34(P)),
        BoundEntry("rai_ineq4", ineq4),
        BoundEntry("rai_thm14", thm14),
    ]
    if is_special_shape(P) and P.d > P.k + 1 and P.k > 2:
        entries.append(BoundEntry("thm38", exp_thm38(P.p, P.n, P.d, P.k)))
        entries.append(BoundEntry("cor39_h2", exp_cor39(P.p, P.n, P.d, P.k)))
    if is_special_shape(P) and P.k == comb(P.d, 2) and P.d >= 3:
        entries.append(BoundEntry("rai_special", exp_rai_special(P.d)))
    flags = {
        "thm33_le_ineq4": thm33 <= ineq4,
        "ineq4_le_thm14": ineq4 <= thm14,
        "thm33_eq_ineq4": thm33 == ineq4,
        "ineq4_eq_thm14": ineq4 == thm14,
    }
    if not (flags["thm33_le_ineq4"] and flags["ineq4_le_thm14"]):
        raise AssertionError(f"bound ordering violated for {P}: {thm33}, {ineq4}, {thm14}")
    return {"params": P.as_dict(), "bounds": entries, "flags": flags}
