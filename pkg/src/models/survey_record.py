"""
One row of a parameter-space survey.
"""
from dataclasses import dataclass, fields
from typing import Any, Dict, List, Optional


@dataclass(frozen=True)
class SurveyRecord:
    """
    Flat summary of a single ramification tuple and its verdict.

    Fields that do not apply (``ell`` for cyclic data, the valuation
    lists when a = 0) are None and are left out of ``to_dict``.
    """
    p: int
    e: int
    t: int
    closure: str
    totally_ramified: bool
    a: int
    a0: int
    cf: List[int]
    cf_length: int
    case: str
    free: bool
    reason: str
    ell: Optional[int] = None
    nu: Optional[List[int]] = None
    n: Optional[List[int]] = None
    E: Optional[List[int]] = None
    scaffold_c: Optional[int] = None
    scaffold_l: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if value is not None:
                data[f.name] = list(value) if isinstance(value, (list, tuple)) else value
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SurveyRecord':
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in known})

    @property
    def key(self) -> tuple:
        return (self.p, self.e, self.t)
