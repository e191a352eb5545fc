"""Length profiles a cycle packing can be asked to satisfy.

plain        any pairwise distinct lengths
even         all lengths even (and distinct)
div:R        all lengths divisible by R (and distinct)
residues:R   exactly R cycles, cycle i of length congruent to i mod R

The string forms above are the CLI and certificate encoding.  Residue
systems with even modulus are rejected here: an even modulus forces an
odd length in every residue system, which bipartite targets rule out,
and the guarantees implemented elsewhere only cover odd moduli.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParameters


@dataclass(frozen=True)
class Profile:
    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in ("plain", "even", "divisible", "residues"):
            raise BadParameters(f"unknown profile kind {self.kind!r}")
        if self.kind in ("divisible", "residues"):
            if self.modulus is None or self.modulus < 2:
                raise BadParameters(f"profile {self.kind} needs a modulus >= 2")
            if self.kind == "residues" and self.modulus % 2 == 0:
                raise BadParameters("residue systems require an odd modulus")
        elif self.modulus is not None:
            raise BadParameters(f"profile {self.kind} takes no modulus")

    def admits(self, length: int) -> bool:
        """Whether a single cycle length fits the per-cycle constraint."""
        if self.kind == "even":
            return length % 2 == 0
        if self.kind == "divisible":
            return length % self.modulus == 0
        return True

    def encode(self) -> str:
        if self.kind == "divisible":
            return f"div:{self.modulus}"
        if self.kind == "residues":
            return f"residues:{self.modulus}"
        return self.kind

    @staticmethod
    def decode(text: str) -> "Profile":
        t = text.strip()
        if t == "plain":
            return PLAIN
        if t == "even":
            return EVEN
        for prefix, kind in (("div:", "divisible"), ("residues:", "residues")):
            if t.startswith(prefix):
                try:
                    r = int(t[len(prefix):])
                except ValueError:
                    raise BadParameters(f"bad profile {text!r}") from None
                return Profile(kind, r)
        raise BadParameters(f"bad profile {text!r}")

    def __str__(self):
        return self.encode()


PLAIN = Profile("plain")
EVEN = Profile("even")


def divisible(r: int) -> Profile:
    return Profile("divisible", r)


def residues(r: int) -> Profile:
    return Profile("residues", r)
