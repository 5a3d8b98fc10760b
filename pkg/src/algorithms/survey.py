"""
Parameter-space sweeps producing one SurveyRecord per valid tuple.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List

from ..models.ramification import Closure, RamificationData
from ..models.survey_record import SurveyRecord
from ..utils.config import Config
from .assocorder import build_profile
from .cfrac import check_odd_prime
from .ramification import valid_jumps, validate
from .verdict import verdict_for

logger = logging.getLogger(__name__)


def build_record(rd: RamificationData) -> SurveyRecord:
    """Verdict plus valuation profile of one tuple; profile fields stay empty when a = 0."""
    verdict = verdict_for(rd)
    nu = n = members = None
    scaffold_c = scaffold_l = None
    if rd.a != 0:
        profile = build_profile(rd)
        nu, n, members = list(profile.nu), list(profile.n), profile.E.to_list()
        scaffold_c, scaffold_l = profile.scaffold_c, profile.scaffold_l

    return SurveyRecord(
        p=rd.p,
        e=rd.e,
        t=rd.t,
        closure=rd.closure.value,
        totally_ramified=rd.totally_ramified,
        a=rd.a,
        a0=rd.a0,
        cf=list(verdict.details['cf']),
        cf_length=verdict.details['cf_length'],
        case=verdict.case.value,
        free=verdict.free,
        reason=verdict.reason,
        ell=rd.ell,
        nu=nu,
        n=n,
        E=members,
        scaffold_c=scaffold_c,
        scaffold_l=scaffold_l,
    )


def enumerate_tuples(p_values: Iterable[int], e_max: int, closure: Closure = Closure.DIHEDRAL,
                     totally_ramified: bool = True) -> List[RamificationData]:
    """Every valid (p, e, t) with 1 <= e <= e_max, ordered by (p, e, t)."""
    tuples = []
    for p in sorted(set(p_values)):
        check_odd_prime(p)
        for e in range(1, e_max + 1):
            for t in valid_jumps(p, e, closure, totally_ramified):
                tuples.append(validate(p, e, t, closure, totally_ramified))
    return tuples


def survey(p_values: Iterable[int], e_max: int, closure: Closure = Closure.DIHEDRAL,
           totally_ramified: bool = True, workers: int = Config.DEFAULT_WORKERS) -> List[SurveyRecord]:
    """
    Records for every valid tuple.

    Tuples are evaluated on a thread pool; ``map`` returns results in
    submission order, so the output does not depend on scheduling.
    """
    tuples = enumerate_tuples(p_values, e_max, Closure(closure), totally_ramified)
    logger.debug("surveying %d tuples on %d workers", len(tuples), workers)
    if not tuples:
        return []
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        records = list(executor.map(build_record, tuples))
    return sorted(records, key=lambda record: record.key)
