"""
Residue patterns of M(pi^{-nu_k} w^k) and the determinant arguments
deciding whether a generator of the associated order exists.

Cell (j, i) of M(pi^{-nu_k} w^k) is the coordinate mu_{j,i}^{(k)} of
pi^{-nu_k - n_i} w^{k+i} on pi^{-nu_j} w^j. Fractional parts frac(x a/p)
are handled as the integer residues x*a mod p.
"""
import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..models.group_ring import ValCoeff
from ..models.order_profile import OrderProfile
from ..models.pattern import (
    EntryClass,
    NecessityCertificate,
    ResiduePatternMatrix,
    SufficiencyWitness,
)
from ..utils.exceptions import ParameterError, PreconditionViolated, StructureMismatch
from .cfrac import cf_expand
from .groupring import WPowerTable

logger = logging.getLogger(__name__)


def _residue(profile: OrderProfile, x: int) -> int:
    return x * profile.a % profile.p


def _require_pattern_profile(profile: OrderProfile) -> None:
    if profile.a == 0:
        raise PreconditionViolated("patterns need a != 0")
    if not profile.rd.is_dihedral_total:
        raise PreconditionViolated("patterns need totally ramified dihedral data")


def nonzero_rows(profile: OrderProfile, k: int, i: int) -> List[Tuple[int, EntryClass]]:
    """
    Non-zero cells of column i of M(pi^{-nu_k} w^k), ascending by row.

    k + i <= p-1: only row k+i can be non-zero; it is 1 when h = p, when
    h is in E, or when frac((k+1)a/p) < frac(h a/p).
    k + i > p-1, m = k+i-(p-1): rows j = m, m+2, ..., m+d_m are non-zero when
    a/p + frac((k+1)a/p) < frac(h a/p) (plus 1 if h is in E); for m = p-1
    the rows below m of the same parity are UNKNOWN.
    """
    _require_pattern_profile(profile)
    p = profile.p
    if not (0 <= k < p and 0 <= i < p):
        raise ParameterError(f"indices out of range: k={k}, i={i}")
    h = p - i

    if k + i <= p - 1:
        j = k + i
        if h == p or h in profile.E or _residue(profile, k + 1) < _residue(profile, h):
            return [(j, EntryClass.ONE)]
        return []

    if not profile.high_band:
        raise PreconditionViolated("k + i > p-1 needs nu_{p-1} = e + (p-1)/2")
    m = k + i - (p - 1)
    lhs = profile.a + _residue(profile, k + 1)
    rhs = _residue(profile, h) + (p if h in profile.E else 0)
    window_live = lhs < rhs

    cells: List[Tuple[int, EntryClass]] = []
    if m == p - 1:
        cells.extend((j, EntryClass.UNKNOWN) for j in range(m % 2, m, 2))
    if window_live:
        top = m + profile.d_max(m)
        cells.extend((j, EntryClass.NONZERO) for j in range(m, top + 1, 2))
    return cells


def entry_class(profile: OrderProfile, k: int, i: int, j: int) -> EntryClass:
    """Residue class of mu_{j,i}^{(k)}."""
    p = profile.p
    if not 0 <= j < p:
        raise ParameterError(f"row index out of range: j={j}")
    for row, cls in nonzero_rows(profile, k, i):
        if row == j:
            return cls
    return EntryClass.ZERO


def build_pattern(profile: OrderProfile, k: int) -> ResiduePatternMatrix:
    """Pattern of M(pi^{-nu_k} w^k)."""
    pattern = ResiduePatternMatrix.zeros(profile.p, provenance=f"k={k}")
    for i in range(profile.p):
        for j, cls in nonzero_rows(profile, k, i):
            pattern.set_cell(j, i, cls)
    return pattern


def build_pattern_alpha(profile: OrderProfile, k: int) -> ResiduePatternMatrix:
    """
    Pattern of M(u + pi^{-nu_k} w^k) = u M(1) + M(pi^{-nu_k} w^k).

    M(1) is diagonal, non-zero exactly where n_i = nu_i. Those cells carry
    u; if the k-matrix is also non-zero there the residue depends on u and
    the cell becomes UNKNOWN.
    """
    if not profile.high_band:
        raise PreconditionViolated("alpha patterns need nu_{p-1} = e + (p-1)/2")
    identity = build_pattern(profile, 0)
    pattern = build_pattern(profile, k)
    pattern.provenance = f"u + pi^-nu_{k} w^{k}"
    u_cells = set()
    for i in range(profile.p):
        if identity.cell(i, i) is EntryClass.ZERO:
            continue
        u_cells.add((i, i))
        if pattern.cell(i, i) is EntryClass.ZERO:
            pattern.set_cell(i, i, EntryClass.NONZERO)
        else:
            pattern.set_cell(i, i, EntryClass.UNKNOWN)
    pattern.u_mask = frozenset(u_cells)
    return pattern


def perfect_matchings(pattern: ResiduePatternMatrix, indices: Sequence[int],
                      avoid_u: bool = True, limit: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """
    Backtracking enumeration of permutations of ``indices`` through non-zero cells.

    Yields, for each matching, the row chosen for each column in order.
    With ``avoid_u`` the bare u cells are skipped; an UNKNOWN cell is u plus
    a non-zero term and still takes part through that term.
    """
    allowed = set(indices)
    candidates = []
    for i in indices:
        rows = [j for j in pattern.support(i) if j in allowed]
        if avoid_u:
            rows = [j for j in rows if not pattern.is_u(j, i)
                    or pattern.cell(j, i) is EntryClass.UNKNOWN]
        candidates.append(rows)

    # fewest options first keeps the search shallow
    order = sorted(range(len(indices)), key=lambda c: len(candidates[c]))
    chosen: Dict[int, int] = {}
    used = set()
    found = 0

    def search(depth: int) -> Iterator[Tuple[int, ...]]:
        nonlocal found
        if limit is not None and found >= limit:
            return
        if depth == len(order):
            found += 1
            yield tuple(chosen[c] for c in range(len(indices)))
            return
        column = order[depth]
        for row in candidates[column]:
            if row in used:
                continue
            used.add(row)
            chosen[column] = row
            yield from search(depth + 1)
            used.discard(row)
            del chosen[column]

    yield from search(0)


def expected_matching(p: int, k: int) -> Tuple[int, ...]:
    """Column i -> k+i when k+i <= p-1, else k+i-(p-1), for i = 1..p-1."""
    return tuple(k + i if k + i <= p - 1 else k + i - (p - 1) for i in range(1, p))


def sufficiency_check(profile: OrderProfile) -> SufficiencyWitness:
    """
    Certify that some u + pi^{-nu_k} w^k generates when the expansion has length 3 or 4.

    The first row of the pattern is (u, 0, ..., 0), so det M(alpha) is u
    times the determinant of the minor on rows and columns 1..p-1. That
    minor has exactly one u-free perfect matching, so its determinant is
    a polynomial in u with non-zero constant term and degree at most the
    number of u cells, which is below p-1.

    Raises:
        PreconditionViolated: length outside {3, 4} or not in the high band
        StructureMismatch: the pattern does not have the shape above
    """
    _require_pattern_profile(profile)
    if not profile.high_band:
        raise PreconditionViolated("sufficiency needs nu_{p-1} = e + (p-1)/2")
    cf = cf_expand(profile.a, profile.p)
    if cf.length not in (3, 4):
        raise PreconditionViolated(f"expansion length {cf.length} is not 3 or 4")

    p = profile.p
    k = cf.q[2] - 1
    pattern = build_pattern_alpha(profile, k)

    if not pattern.is_u(0, 0) or pattern.cell(0, 0) is not EntryClass.NONZERO:
        raise StructureMismatch("cell (0, 0) is not the bare unit u")
    if any(pattern.cell(0, i) is not EntryClass.ZERO for i in range(1, p)):
        raise StructureMismatch("first row is not (u, 0, ..., 0)")

    minor = list(range(1, p))
    matchings = list(perfect_matchings(pattern, minor, avoid_u=True, limit=2))
    if len(matchings) != 1:
        raise StructureMismatch(f"{len(matchings)} u-free matchings in the minor, expected 1")
    matching = matchings[0]
    if matching != expected_matching(p, k):
        raise StructureMismatch(f"u-free matching {matching} is not the shifted identity")

    u_cells = tuple(i for i in minor if pattern.is_u(i, i))
    if not u_cells:
        raise StructureMismatch("no u cell on the diagonal of the minor")
    if len(u_cells) == len(minor):
        raise StructureMismatch("M(1) has no zero on the diagonal of the minor")

    logger.debug("sufficiency witness for %r: k=%d, %d u cells", profile.rd, k, len(u_cells))
    return SufficiencyWitness(k, matching, len(u_cells), u_cells)


def necessity_columns(profile: OrderProfile) -> Tuple[int, Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]:
    """
    (s, h values, columns, allowed rows) of the vanishing argument.

    n = 2s+1 or 2s+2; h runs over 2q_{2s-2} and q_{2s-2} + a' q_{2s-1} + q_{2s}
    for 0 <= a' <= a_{2s}; columns are p - h; the only rows reached are
    p-1-q_{2s-2} - c q_{2s-1} for 0 <= c <= a_{2s}.
    """
    cf = cf_expand(profile.a, profile.p)
    n = cf.length
    if n < 5:
        raise PreconditionViolated(f"expansion length {n} is below 5")
    p = profile.p
    s = (n - 1) // 2
    q, partials = cf.q, cf.partials
    base, step, far = q[2 * s - 2], q[2 * s - 1], q[2 * s]
    top = partials[2 * s]

    h_values = (2 * base,) + tuple(base + a_prime * step + far for a_prime in range(top + 1))
    if len(set(h_values)) != len(h_values) or max(h_values) >= p:
        raise StructureMismatch(f"h values {h_values} are not distinct indices below p")
    columns = tuple(sorted(p - h for h in h_values))
    rows = tuple(sorted(p - 1 - base - c * step for c in range(top + 1)))
    return s, h_values, columns, rows


def necessity_check(profile: OrderProfile) -> NecessityCertificate:
    """
    Certify that no alpha generates when the expansion has length at least 5.

    For every k the selected columns of M(pi^{-nu_k} w^k) vanish outside
    the allowed rows, so the same holds for M(alpha) and its determinant
    is zero modulo the maximal ideal.

    Raises:
        PreconditionViolated: length below 5 or not in the high band
        StructureMismatch: a cell outside the allowed rows is not ZERO
    """
    _require_pattern_profile(profile)
    if not profile.high_band:
        raise PreconditionViolated("necessity needs nu_{p-1} = e + (p-1)/2")
    s, h_values, columns, rows = necessity_columns(profile)
    allowed = set(rows)
    checked = 0
    for i in columns:
        for k in range(profile.p):
            for j, cls in nonzero_rows(profile, k, i):
                if j not in allowed:
                    raise StructureMismatch(
                        f"cell (j={j}, i={i}) of k={k} is {cls.name} outside the allowed rows"
                    )
            checked += profile.p - len(allowed)

    certificate = NecessityCertificate(s, h_values, columns, rows, checked)
    if certificate.cover_deficit < 1:
        raise StructureMismatch("allowed rows cover the selected columns")
    logger.debug("necessity certificate for %r: columns %s rows %s", profile.rd, columns, rows)
    return certificate


def valuation_class(profile: OrderProfile, table: WPowerTable, k: int, i: int, j: int) -> EntryClass:
    """
    Residue class of mu_{j,i}^{(k)} from v(mu) = v(C(w^j, w^{k+i})) + nu_j - nu_k - n_i.

    ``table`` must come from ``wpower_val_table(p, e)`` for the profile's p and e.
    Exact valuation 0 gives NONZERO (ONE when C = 1); a lower bound that
    does not exceed 0 gives UNKNOWN.
    """
    p, nu, n = profile.p, profile.nu, profile.n
    power = k + i
    if power <= p - 1:
        coeff = ValCoeff(0, True) if j == power else ValCoeff.zero()
    else:
        coeff = table[power - (p - 1)][j]
    if coeff.is_zero:
        return EntryClass.ZERO
    valuation = coeff.val + nu[j] - nu[k] - n[i]
    if valuation > 0:
        return EntryClass.ZERO
    if not coeff.exact:
        return EntryClass.UNKNOWN
    if valuation < 0:
        raise StructureMismatch(f"mu_({j},{i})^({k}) has negative valuation {valuation}")
    return EntryClass.ONE if power <= p - 1 else EntryClass.NONZERO
