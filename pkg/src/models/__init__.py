from .ramification import CaseTag, Closure, RamificationData
from .continued_fraction import ContinuedFraction, ESet
from .order_profile import OrderProfile, RingConditionReport
from .group_ring import GroupRingElement, ValCoeff
from .action_matrix import ActionMatrix, MaximalModel, ReducedPair, UnimodularCertificate
from .pattern import EntryClass, NecessityCertificate, ResiduePatternMatrix, SufficiencyWitness
from .verdict import TensorComparison, Verdict, VerdictCase
from .survey_record import SurveyRecord

__all__ = [
    'CaseTag', 'Closure', 'RamificationData',
    'ContinuedFraction', 'ESet',
    'OrderProfile', 'RingConditionReport',
    'GroupRingElement', 'ValCoeff',
    'ActionMatrix', 'MaximalModel', 'ReducedPair', 'UnimodularCertificate',
    'EntryClass', 'NecessityCertificate', 'ResiduePatternMatrix', 'SufficiencyWitness',
    'TensorComparison', 'Verdict', 'VerdictCase',
    'SurveyRecord',
]
