"""Existence checks and coset structure for Gaussian normal bases.

A type-T GNB of GF(2^k) is described entirely by exponents modulo the prime
p = T*k + 1: basis element beta_i corresponds to the coset

    D_i = { 2^i * lam^j mod p : 0 <= j < T }

where lam has multiplicative order T mod p.  No arithmetic in GF(2^(Tk)) is
ever performed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

DEFAULT_T_MAX = 200


class GnbNotFoundError(ValueError):
    """No Gaussian normal basis of the requested type exists."""

    def __init__(self, k: int, T: int | None, reason: str):
        what = "GNB" if T is None else f"type-{T} GNB"
        super().__init__(f"no {what} for GF(2^{k}): {reason}")
        self.k = k
        self.T = T
        self.reason = reason


def is_prime(n: int) -> bool:
    """Deterministic trial division."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def multiplicative_order(a: int, p: int) -> int:
    """Smallest d >= 1 with a^d = 1 (mod p), for p prime."""
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if a % p == 0:
        raise ValueError(f"{a} is not invertible mod {p}")
    d = p - 1
    for q in _prime_factors(p - 1):
        while d % q == 0 and pow(a, d // q, p) == 1:
            d //= q
    return d


@dataclass(frozen=True)
class GnbCheck:
    """Outcome of the two existence conditions; truthy iff the basis exists."""

    k: int
    T: int
    exists: bool
    reason: str

    def __bool__(self) -> bool:
        return self.exists


def check_gnb(k: int, T: int) -> GnbCheck:
    if k < 2 or T < 1:
        raise ValueError(f"need k >= 2 and T >= 1, got k={k}, T={T}")
    p = T * k + 1
    if not is_prime(p):
        return GnbCheck(k, T, False, f"{p} not prime")
    s = multiplicative_order(2, p)
    g = gcd(T * k // s, k)
    if g != 1:
        return GnbCheck(k, T, False, f"gcd({T * k}/{s}, {k}) = {g}")
    return GnbCheck(k, T, True, f"p={p} prime, s={s}, gcd({T * k}/{s}, {k}) = 1")


def primitive_roots_of_unity(p: int, T: int) -> list[int]:
    """All elements of multiplicative order exactly T modulo prime p, ascending."""
    if (p - 1) % T:
        raise ValueError(f"T={T} does not divide p-1={p - 1}")
    if T == 1:
        return [1]
    return [x for x in range(2, p) if multiplicative_order(x, p) == T]


def find_lambda(p: int, T: int) -> int:
    """Smallest primitive T-th root of unity mod p (1 when T == 1)."""
    if (p - 1) % T:
        raise ValueError(f"T={T} does not divide p-1={p - 1}")
    if T == 1:
        return 1
    # x^((p-1)/T) ranges over the T-th roots; scanning x directly keeps "smallest"
    for x in range(2, p):
        if pow(x, T, p) == 1 and multiplicative_order(x, p) == T:
            return x
    raise AssertionError("unreachable: cyclic group has elements of every order dividing p-1")


@dataclass(frozen=True)
class GnbParams:
    k: int
    T: int
    p: int
    s: int
    lam: int
    cosets: tuple[tuple[int, ...], ...]
    # coset_map[e] = i for e in D_i; coset_map[0] = -1
    coset_map: tuple[int, ...] = field(repr=False)

    def F(self, e: int) -> int:
        """Index i of the coset containing e (e taken mod p, nonzero)."""
        i = self.coset_map[e % self.p]
        if i < 0:
            raise ValueError("exponent 0 lies in no coset")
        return i


def build_params(k: int, T: int, lam: int | None = None) -> GnbParams:
    """Construct the coset description of the type-T GNB of GF(2^k).

    ``lam`` overrides the default (smallest) primitive T-th root of unity.
    Raises GnbNotFoundError when the basis does not exist.
    """
    chk = check_gnb(k, T)
    if not chk:
        raise GnbNotFoundError(k, T, chk.reason)
    p = T * k + 1
    s = multiplicative_order(2, p)
    if lam is None:
        lam = find_lambda(p, T)
    elif lam % p == 0 or multiplicative_order(lam, p) != T:
        raise ValueError(f"{lam} is not a primitive {T}-th root of unity mod {p}")

    lam_powers = [pow(lam, j, p) for j in range(T)]
    cosets = []
    cmap = [-1] * p
    two_i = 1
    for i in range(k):
        d = tuple(two_i * lp % p for lp in lam_powers)
        for e in d:
            if cmap[e] != -1:
                raise AssertionError(f"cosets overlap at {e}")
            cmap[e] = i
        cosets.append(d)
        two_i = two_i * 2 % p
    return GnbParams(k, T, p, s, lam, tuple(cosets), tuple(cmap))


def smallest_type(k: int, t_max: int = DEFAULT_T_MAX) -> int | None:
    for T in range(1, t_max + 1):
        if check_gnb(k, T):
            return T
    return None
