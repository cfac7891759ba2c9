"""Binary sequence materialization and its on-disk format."""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import cyclotomy
from .cyclotomy import VectorAssignment
from .numtheory import Modulus


@dataclass(frozen=True)
class DHSequence:
    """One period of the two-class binary sequence (bit i is 1 iff i in C1)."""

    modulus: Modulus
    assignment: VectorAssignment
    bits: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.modulus.n

    @property
    def weight(self) -> int:
        return sum(self.bits)


@dataclass(frozen=True)
class RawPeriod:
    """A bare period of bits with no construction metadata."""

    bits: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.bits)


def delta(n: int) -> int:
    """1 when n = 3 (mod 4), else 0 (equivalently: the full-period sum
    (n+1)/2 is even exactly then)."""
    return 1 if n % 4 == 3 else 0


def generate(modulus: Modulus, assignment: VectorAssignment) -> DHSequence:
    """Materialize one period.

    Index 0 is always a one; every other index i belongs to exactly one
    block (n/d)*Z_d*, and its bit is the class of the unit part of i there.
    """
    n = modulus.n
    facs = {d: modulus.divisor_factorization(d) for d in modulus.divisors_gt1()}
    vecs = {d: assignment.vector_for(d) for d in facs}
    bits = [0] * n
    bits[0] = 1
    for i in range(1, n):
        g = math.gcd(i, n)
        d = n // g
        bits[i] = cyclotomy.class_index(i // g, facs[d], vecs[d])
    return DHSequence(modulus, assignment, tuple(bits))


def sequence_line(seq) -> str:
    """The sequence file payload: one ASCII line of 0/1 characters."""
    return "".join(map(str, seq.bits)) + "\n"


def metadata_block(seq: DHSequence) -> str:
    """Sidecar key=value block describing a generated sequence."""
    lines = [
        f"n={seq.n}",
        f"factors={','.join(f'{p}:{e}' for p, e in seq.modulus.factors)}",
        f"assignment={seq.assignment.spec_string()}",
        f"weight={seq.weight}",
    ]
    return "\n".join(lines) + "\n"


def parse_bit_line(text: str) -> tuple[int, ...]:
    """Read a sequence file payload back into a bit tuple."""
    line = text.strip()
    if not line or set(line) - {"0", "1"}:
        raise ValueError("sequence file must be a single line of 0/1 characters")
    return tuple(int(c) for c in line)
