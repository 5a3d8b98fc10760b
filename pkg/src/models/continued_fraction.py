"""
Continued fraction of a rational with prime denominator, and the set E.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Iterator, Tuple


@dataclass(frozen=True)
class ContinuedFraction:
    """
    Canonical expansion numerator/denominator = [a_0; a_1, ..., a_n].

    Attributes:
        numerator: Non-negative numerator
        denominator: Odd prime p
        partials: Partial quotients a_0..a_n
        convergents: Pairs (p_i, q_i) for i = 0..n
    """
    numerator: int
    denominator: int
    partials: Tuple[int, ...]
    convergents: Tuple[Tuple[int, int], ...]

    @property
    def length(self) -> int:
        """Index n of the last partial quotient."""
        return len(self.partials) - 1

    @property
    def q(self) -> Tuple[int, ...]:
        return tuple(qi for _, qi in self.convergents)

    @property
    def p_seq(self) -> Tuple[int, ...]:
        return tuple(pi for pi, _ in self.convergents)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def reconstruct(self) -> Fraction:
        """Evaluate the partial quotients from the innermost term outwards."""
        acc = Fraction(self.partials[-1])
        for partial in reversed(self.partials[:-1]):
            acc = partial + 1 / acc
        return acc

    def to_dict(self) -> Dict[str, Any]:
        return {
            'numerator': self.numerator,
            'denominator': self.denominator,
            'partials': list(self.partials),
            'length': self.length,
            'p_seq': list(self.p_seq),
            'q_seq': list(self.q),
        }

    def __str__(self) -> str:
        head, tail = self.partials[0], self.partials[1:]
        if not tail:
            return f"[{head}]"
        return f"[{head}; {', '.join(map(str, tail))}]"


@dataclass(frozen=True)
class ESet:
    """Indices h whose fractional multiple frac(h*a/p) is a strict running minimum."""
    p: int
    a: int
    members: Tuple[int, ...]

    def __contains__(self, h: object) -> bool:
        return h in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def to_list(self) -> list:
        return list(self.members)
