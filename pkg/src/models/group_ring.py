"""
Elements of Z[sigma]/(sigma^p - 1) and valuation-tracked coefficients.
"""
import math
from dataclasses import dataclass
from typing import Tuple, Union

from ..utils.exceptions import ParameterError


@dataclass(frozen=True)
class GroupRingElement:
    """
    Exact element of the cyclic group ring of order p.

    ``coeffs[k]`` is the coefficient of sigma^k. Indexing accepts any
    integer, so ``x[-k]`` reads the coefficient of sigma^{-k} = sigma^{p-k}.
    """
    p: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.p:
            raise ParameterError(
                f"expected {self.p} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def zero(cls, p: int) -> 'GroupRingElement':
        return cls(p, (0,) * p)

    @classmethod
    def one(cls, p: int) -> 'GroupRingElement':
        return cls.sigma(p, 0)

    @classmethod
    def sigma(cls, p: int, k: int = 1) -> 'GroupRingElement':
        coeffs = [0] * p
        coeffs[k % p] = 1
        return cls(p, tuple(coeffs))

    @classmethod
    def antisymmetric(cls, p: int, k: int = 1) -> 'GroupRingElement':
        """sigma^k - sigma^{-k}."""
        return cls.sigma(p, k) - cls.sigma(p, -k)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k % self.p]

    def _check(self, other: 'GroupRingElement') -> None:
        if other.p != self.p:
            raise ParameterError(f"group rings differ: p={self.p} vs p={other.p}")

    def __add__(self, other: 'GroupRingElement') -> 'GroupRingElement':
        self._check(other)
        return GroupRingElement(
            self.p, tuple(x + y for x, y in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> 'GroupRingElement':
        return GroupRingElement(self.p, tuple(-x for x in self.coeffs))

    def __sub__(self, other: 'GroupRingElement') -> 'GroupRingElement':
        return self + (-other)

    def __mul__(self, other: Union['GroupRingElement', int]) -> 'GroupRingElement':
        if isinstance(other, int):
            return GroupRingElement(self.p, tuple(other * x for x in self.coeffs))
        self._check(other)
        out = [0] * self.p
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in enumerate(other.coeffs):
                if y:
                    out[(i + j) % self.p] += x * y
        return GroupRingElement(self.p, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'GroupRingElement':
        if exponent < 0:
            raise ParameterError("negative powers are not defined in the group ring")
        result = GroupRingElement.one(self.p)
        for _ in range(exponent):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}*s^{k}" for k, c in enumerate(self.coeffs) if c]
        return ' + '.join(terms) if terms else '0'


INF = math.inf


@dataclass(frozen=True)
class ValCoeff:
    """
    K-valuation of a coefficient.

    ``exact`` means the coefficient is a unit times pi^val; otherwise
    ``val`` is only a lower bound. ``val == inf`` encodes the zero
    coefficient.
    """
    val: Union[int, float]
    exact: bool = True

    @classmethod
    def zero(cls) -> 'ValCoeff':
        return cls(INF, True)

    @property
    def is_zero(self) -> bool:
        return self.val == INF

    def __mul__(self, other: 'ValCoeff') -> 'ValCoeff':
        if self.is_zero or other.is_zero:
            return ValCoeff.zero()
        return ValCoeff(self.val + other.val, self.exact and other.exact)

    def __add__(self, other: 'ValCoeff') -> 'ValCoeff':
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.val < other.val:
            return self
        if other.val < self.val:
            return other
        # equal valuations may cancel
        return ValCoeff(self.val, False)

    def __repr__(self) -> str:
        if self.is_zero:
            return 'ValCoeff(0)'
        return f"ValCoeff({self.val}, {'exact' if self.exact else '>='})"
