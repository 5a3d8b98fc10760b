"""
Valuation profile of the associated order.

The sequences nu_i and n_i are the exponents of the O_K-bases
{pi^-nu_i w^i} of the order attached to the generator and
{pi^-n_i w^i} of the associated order.
"""
import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..models.continued_fraction import ESet
from ..models.order_profile import OrderProfile, RingConditionReport
from ..models.ramification import RamificationData
from ..utils.exceptions import NotApplicable, ParameterError, StructureMismatch
from .cfrac import e_set_bruteforce

logger = logging.getLogger(__name__)


def _require_unit(rd: RamificationData) -> None:
    if rd.a == 0:
        raise NotApplicable(f"valuation profile is degenerate for a = 0 ({rd!r})")


def _require_dihedral_total(rd: RamificationData) -> None:
    if not rd.is_dihedral_total:
        raise NotApplicable("needs totally ramified dihedral data")


def nu_sequence(rd: RamificationData) -> List[int]:
    """nu_i = i*a0 + floor((i+1)a/p) for i = 0..p-1."""
    _require_unit(rd)
    p, a, a0 = rd.p, rd.a, rd.a0
    i = np.arange(p, dtype=np.int64)
    return (i * a0 + (i + 1) * a // p).tolist()


def n_sequence_min(rd: RamificationData, nu: Optional[Sequence[int]] = None) -> List[int]:
    """n_i = min over j of nu_{i+j} - nu_j."""
    _require_unit(rd)
    nu = nu_sequence(rd) if nu is None else nu
    p = rd.p
    values = np.asarray(nu, dtype=np.int64)
    shift = np.arange(p)[:, None]
    start = np.arange(p)[None, :]
    end = shift + start
    inside = end <= p - 1
    diffs = np.where(inside, values[np.minimum(end, p - 1)] - values[start], np.iinfo(np.int64).max)
    return diffs.min(axis=1).tolist()


def n_sequence_eps(rd: RamificationData, E: Optional[ESet] = None) -> List[int]:
    """n_i = i*a0 + floor(i*a/p) + [p - i in E]."""
    _require_unit(rd)
    p, a, a0 = rd.p, rd.a, rd.a0
    E = e_set_bruteforce(a, p) if E is None else E
    members = set(E.members)
    return [i * a0 + i * a // p + (1 if i > 0 and (p - i) in members else 0) for i in range(p)]


def d_max(rd: RamificationData, m: int, nu: Optional[Sequence[int]] = None) -> int:
    """Largest even d with m + d <= p-1 and nu_{m+d} = nu_m + d/2 (0 if none)."""
    _require_unit(rd)
    p = rd.p
    if not 1 <= m <= p - 1:
        raise ParameterError(f"m must lie in [1, {p - 1}], got {m}")
    values = np.asarray(nu_sequence(rd) if nu is None else nu, dtype=np.int64)
    steps = np.arange(2, p - m, 2)
    hits = steps[values[m + steps] == values[m] + steps // 2]
    return int(hits.max()) if hits.size else 0


def d_max_table(rd: RamificationData, nu: Optional[Sequence[int]] = None) -> Dict[int, int]:
    """d_max for every m at once."""
    _require_unit(rd)
    p = rd.p
    values = np.asarray(nu_sequence(rd) if nu is None else nu, dtype=np.int64)
    ms = np.arange(1, p)[:, None]
    steps = np.arange(2, p, 2)[None, :]
    end = ms + steps
    hits = (end <= p - 1) & (values[np.minimum(end, p - 1)] == values[ms] + steps // 2)
    best = np.where(hits, steps, 0).max(axis=1, initial=0)
    return {m: int(d) for m, d in zip(range(1, p), best)}


def ring_conditions(rd: RamificationData, nu: Optional[Sequence[int]] = None) -> RingConditionReport:
    """
    Closure of the order attached to the generator under multiplication.

    cond1: nu_i + nu_j <= nu_{i+j} whenever i + j <= p-1.
    cond2: nu_i + nu_j <= e + (p-1)/2 + nu_{i+j+1-p} whenever i + j >= p.
    Pairs are reported with i <= j.
    """
    _require_unit(rd)
    _require_dihedral_total(rd)
    values = np.asarray(nu_sequence(rd) if nu is None else nu, dtype=np.int64)
    p, top = rd.p, rd.e + rd.half
    rows, cols = np.triu_indices(p)
    total = rows + cols
    inside = total <= p - 1
    pair_sum = values[rows] + values[cols]
    fail1 = inside & (pair_sum > values[np.where(inside, total, 0)])
    fail2 = ~inside & (pair_sum > top + values[np.where(inside, 0, total + 1 - p)])
    failing = fail1 | fail2
    violations = tuple((int(i), int(j)) for i, j in zip(rows[failing], cols[failing]))
    return RingConditionReport(not fail1.any(), not fail2.any(), violations)


def orders_equal(rd: RamificationData) -> bool:
    """Associated order equals the order of the generator iff a = 0 or a | p-1."""
    _require_dihedral_total(rd)
    return rd.a == 0 or (rd.p - 1) % rd.a == 0


def scaffold_precision(rd: RamificationData, nu: Optional[Sequence[int]] = None) -> Tuple[int, int]:
    """
    (c, l) with c = pe - (p-1)t/2 and l = e + (p-1)/2 - nu_{p-1}.

    Raises:
        StructureMismatch: if c != l*p + a
    """
    _require_unit(rd)
    _require_dihedral_total(rd)
    nu = nu_sequence(rd) if nu is None else nu
    p, e, t = rd.p, rd.e, rd.t
    c = p * e - (p - 1) * t // 2
    l = e + rd.half - nu[-1]
    if c != l * p + rd.a:
        raise StructureMismatch(f"scaffold precision {c} != {l}*{p} + {rd.a}")
    return c, l


def build_profile(rd: RamificationData) -> OrderProfile:
    """
    Full valuation profile of ``rd``.

    Cyclic data get nu, n, E and d_m (same formulas with t in place of ell)
    but no scaffold fields.
    """
    _require_unit(rd)
    nu = nu_sequence(rd)
    E = e_set_bruteforce(rd.a, rd.p)
    n_min = n_sequence_min(rd, nu)
    n_eps = n_sequence_eps(rd, E)
    if n_min != n_eps:
        raise StructureMismatch(f"n formulas disagree for {rd!r}: {n_min} vs {n_eps}")

    scaffold_c = scaffold_l = None
    if rd.is_dihedral_total:
        scaffold_c, scaffold_l = scaffold_precision(rd, nu)

    profile = OrderProfile(
        rd=rd,
        nu=tuple(nu),
        n=tuple(n_min),
        E=E,
        d_max_table=d_max_table(rd, nu),
        scaffold_c=scaffold_c,
        scaffold_l=scaffold_l,
    )
    logger.debug("profile %r: nu=%s n=%s E=%s", rd, nu, n_min, E.members)
    return profile


def profile_violations(profile: OrderProfile) -> List[str]:
    """Every failing structural property of the nu/n sequences."""
    rd, nu, n = profile.rd, profile.nu, profile.n
    p, a, a0 = rd.p, rd.a, rd.a0
    members = set(profile.E.members)
    failures = []

    if any(nu[i] > nu[i + 1] for i in range(p - 1)):
        failures.append("nu is not non-decreasing")
    if nu[-1] != a + (p - 1) * a0:
        failures.append("nu_{p-1} != a + (p-1) a0")
    for i in range(p):
        if not 0 <= nu[i] - n[i] <= 1:
            failures.append(f"nu_{i} - n_{i} = {nu[i] - n[i]}")
        if i > 0 and (p - i) in members and nu[i] != n[i]:
            failures.append(f"p - {i} in E but nu_{i} != n_{i}")

    if rd.is_dihedral_total:
        top = profile.top
        if nu[-1] > top:
            failures.append("nu_{p-1} exceeds e + (p-1)/2")
        step = 2 if a0 > 0 else 1
        for k in range(p - 2):
            if nu[k + 2] - nu[k] < step:
                failures.append(f"nu_{k + 2} - nu_{k} < {step}")
        if nu[p - 1] - nu[p - 2] < 1 or nu[p - 2] - nu[p - 3] < 1:
            failures.append("last two increments of nu are not positive")
        for s in range(p - 1):
            if not nu[s] < rd.e + (s + 1) // 2:
                failures.append(f"nu_{s} >= e + ceil({s}/2)")
        if profile.scaffold_l is not None and profile.scaffold_l < 0:
            failures.append("scaffold l is negative")
    return failures
