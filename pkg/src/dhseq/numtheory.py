"""Elementary number theory underpinning the sequence construction.

Everything here is deterministic and pure: primality is Miller-Rabin with a
fixed witness set (exact below 2**64), primitive roots are always the
smallest positive ones, and factorization is plain trial division (periods
arrive factored; only totients and small survey inputs get factored here).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import EvenOrRepeatedPrime, GcdConditionViolated, NotPrime

# Witness set proving primality for every integer below 3.3e24 (> 2**64).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

SUPPORTED_BITS = 63


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test, exact for n < 2**64."""
    if n < 2:
        return False
    if n in _MR_WITNESSES:
        return True
    if any(n % p == 0 for p in _MR_WITNESSES):
        return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Factor n > 0 by trial division; (prime, exponent) pairs, ascending."""
    if n <= 0:
        raise ValueError("factorize expects a positive integer")
    out: list[tuple[int, int]] = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out.append((p, e))
        f += 6
    if n > 1:
        out.append((n, 1))
    return out


def _divisors_from_factors(factors) -> list[int]:
    divs = [1]
    for p, e in factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def proper_divisors_gt1(n: int) -> list[int]:
    """All divisors d > 1 of n (including n itself), ascending."""
    return [d for d in _divisors_from_factors(factorize(n)) if d > 1]


@dataclass(frozen=True)
class Modulus:
    """A validated period n = p1^e1 * ... * pt^et; build via validate_modulus."""

    factors: tuple[tuple[int, int], ...]
    n: int

    @property
    def t(self) -> int:
        return len(self.factors)

    def prime_powers(self) -> tuple[int, ...]:
        return tuple(p**e for p, e in self.factors)

    def divisors_gt1(self) -> list[int]:
        return [d for d in _divisors_from_factors(self.factors) if d > 1]

    def divisor_factorization(self, d: int) -> tuple[tuple[int, int], ...]:
        """Factorization of a divisor d > 1 of n, ascending primes."""
        if d <= 1 or self.n % d != 0:
            raise ValueError(f"{d} is not a divisor > 1 of {self.n}")
        out = []
        for p, _ in self.factors:
            l = 0
            while d % p == 0:
                d //= p
                l += 1
            if l:
                out.append((p, l))
        return tuple(out)

    def factor_string(self) -> str:
        return "*".join(f"{p}^{e}" for p, e in self.factors)


def validate_modulus(factor_list) -> Modulus:
    """Check a (prime, exponent) list and assemble the Modulus.

    The bases must be pairwise-distinct odd primes with positive exponents
    whose totients p^(e-1)(p-1) have pairwise gcd exactly 2.
    """
    factors = [(int(p), int(e)) for p, e in factor_list]
    if not factors:
        raise ValueError("factor list is empty")
    for p, e in factors:
        if e < 1:
            raise ValueError(f"exponent for {p} must be >= 1, got {e}")
        if p <= 2 or p % 2 == 0:
            raise EvenOrRepeatedPrime(p)
        if not is_prime(p):
            raise NotPrime(p)
    factors.sort()
    for (p1, _), (p2, _) in zip(factors, factors[1:]):
        if p1 == p2:
            raise EvenOrRepeatedPrime(p1)
    units = [p ** (e - 1) * (p - 1) for p, e in factors]
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            g = math.gcd(units[i], units[j])
            if g != 2:
                raise GcdConditionViolated(factors[i][0], factors[j][0], g)
    n = math.prod(p**e for p, e in factors)
    if n >= 1 << SUPPORTED_BITS:
        raise ValueError(f"n = {n} exceeds the supported range (< 2**{SUPPORTED_BITS})")
    return Modulus(tuple(factors), n)


@dataclass(frozen=True)
class CrtView:
    """Residues of some x modulo each prime-power factor, ascending primes."""

    residues: tuple[int, ...]


def crt_view(x: int, modulus: Modulus) -> CrtView:
    return CrtView(tuple(x % q for q in modulus.prime_powers()))


def crt_combine(view: CrtView, modulus: Modulus) -> int:
    """Least nonnegative x congruent to every residue in the view."""
    qs = modulus.prime_powers()
    if len(view.residues) != len(qs):
        raise ValueError("one residue per prime-power factor required")
    n = modulus.n
    x = 0
    for r, q in zip(view.residues, qs):
        m = n // q
        x += r * m * pow(m, -1, q)
    return x % n


def primitive_root(p: int, e: int = 1) -> int:
    """Smallest positive primitive root modulo p**e, for an odd prime p."""
    if p <= 2 or not is_prime(p):
        raise NotPrime(p)
    if e < 1:
        raise ValueError("exponent must be >= 1")
    q = p**e
    phi = q // p * (p - 1)
    checks = [phi // r for r, _ in factorize(phi)]
    for g in range(2, q):
        if g % p == 0:
            continue
        if all(pow(g, c, q) != 1 for c in checks):
            return g
    raise ArithmeticError(f"no primitive root found modulo {q}")


def combined_root(modulus: Modulus) -> int:
    """CRT combination of the per-factor smallest primitive roots."""
    view = CrtView(tuple(primitive_root(p, e) for p, e in modulus.factors))
    return crt_combine(view, modulus)


def carmichael(n: int) -> int:
    """Carmichael function (exponent of the unit group modulo n)."""
    lam = 1
    for p, e in factorize(n):
        if p == 2:
            block = 1 if e == 1 else 2 if e == 2 else 1 << (e - 2)
        else:
            block = p ** (e - 1) * (p - 1)
        lam = math.lcm(lam, block)
    return lam


def multiplicative_order(a: int, m: int) -> int:
    """Order of a in the unit group modulo m."""
    if m < 2:
        raise ValueError("modulus must be >= 2")
    a %= m
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    for d in _divisors_from_factors(factorize(carmichael(m))):
        if pow(a, d, m) == 1:
            return d
    raise ArithmeticError("order search failed")


def order_of_two(n: int) -> int:
    """Multiplicative order of 2 modulo odd n > 1 (the extension degree)."""
    if n <= 1 or n % 2 == 0:
        raise ValueError("n must be odd and > 1")
    return multiplicative_order(2, n)


def legendre(a: int, p: int) -> int:
    """Legendre symbol of a modulo an odd prime p, via Euler's criterion."""
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _odd_primes_upto(limit: int) -> list[int]:
    if limit < 3:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(3, limit + 1, 2) if sieve[i]]


def enumerate_valid_moduli(max_n: int) -> list[Modulus]:
    """Every valid modulus with n <= max_n, ascending by n."""
    primes = _odd_primes_upto(max_n)
    out: list[Modulus] = []

    def extend(idx: int, facs: tuple[tuple[int, int], ...], units: tuple[int, ...], n: int):
        if facs:
            out.append(Modulus(facs, n))
        for j in range(idx, len(primes)):
            p = primes[j]
            if n * p > max_n:
                break
            q, e = p, 1
            while n * q <= max_n:
                u = q // p * (p - 1)
                if all(math.gcd(u, v) == 2 for v in units):
                    extend(j + 1, facs + ((p, e),), units + (u,), n * q)
                q *= p
                e += 1

    extend(0, (), (), 1)
    return sorted(out, key=lambda m: m.n)
