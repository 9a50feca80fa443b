"""Fixed-point subalgebras of toral character sets and involution classes.

Inner involutions of e6 fall into exactly two conjugacy classes, told apart
by the dimension of their fixed subalgebra (su(6)+sp(1) versus so(10)+R).
Both reference dimensions are re-derived at start-up from the reference
characters rather than hard-coded, so a broken character engine fails
loudly here instead of silently misclassifying.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable

from .errors import InternalConsistencyError, PreconditionError
from .rootsys import ReductiveType, Root, RootSystem, identify_subsystem
from .toral import TorusCharacter, character_from_simple_values


class ConjClass(Enum):
    IDENTITY = "identity"
    SIGMA1 = "sigma1"
    SIGMA2 = "sigma2"

    @property
    def label(self) -> str:
        return self.value


def sigma1_reference() -> TorusCharacter:
    """Reference involution with fixed subalgebra of type su(6)+sp(1)."""
    return character_from_simple_values((0, 1, 0, 0, 0, 0), 2)


def sigma2_reference() -> TorusCharacter:
    """Reference involution with fixed subalgebra of type so(10)+R."""
    return character_from_simple_values((1, 0, 0, 0, 0, 1), 2)


@dataclass(frozen=True)
class FixedSubalgebra:
    fixed_roots: frozenset[Root]
    rtype: ReductiveType
    dim: int


def fixed_subalgebra(chars: Iterable[TorusCharacter], sys: RootSystem) -> FixedSubalgebra:
    """Joint fixed-point subalgebra of a set of toral characters.

    The Cartan subalgebra is always fixed (toral characters act trivially
    on it), so the dimension is the fixed root count plus the rank.
    """
    chars = tuple(chars)
    fixed = frozenset(r for r in sys.roots
                      if all(c.evaluate(r) == 0 for c in chars))
    rtype = identify_subsystem(fixed, sys)
    return FixedSubalgebra(fixed_roots=fixed, rtype=rtype,
                           dim=len(fixed) + sys.rank)


def _fixed_dim(chi: TorusCharacter, sys: RootSystem) -> int:
    return sys.rank + sum(1 for r in sys.roots if chi.evaluate(r) == 0)


@lru_cache(maxsize=None)
def _class_dims(label: str) -> dict[int, ConjClass]:
    from .rootsys import build_root_system
    sys = build_root_system("E", 6)
    dims = {_fixed_dim(sigma1_reference(), sys): ConjClass.SIGMA1,
            _fixed_dim(sigma2_reference(), sys): ConjClass.SIGMA2}
    if len(dims) != 2:
        raise InternalConsistencyError("reference involutions have equal fixed dimension")
    return dims


def classify_involution(chi: TorusCharacter, sys: RootSystem) -> ConjClass:
    """Conjugacy class of a toral involution of e6, by fixed dimension."""
    if (sys.family, sys.rank) != ("E", 6):
        raise PreconditionError("involution classification is specific to E6")
    if chi.order > 2:
        raise PreconditionError(f"character has order {chi.order}, not an involution")
    if chi.order == 1:
        return ConjClass.IDENTITY
    dims = _class_dims(sys.label)
    d = _fixed_dim(chi, sys)
    if d not in dims:
        raise InternalConsistencyError(
            f"inner involution with fixed dimension {d}; the character engine is broken")
    return dims[d]


def mu(chi: TorusCharacter, sys: RootSystem) -> int:
    """Sign invariant of an involution: -1 on the su(6)+sp(1) class, else +1."""
    cls = classify_involution(chi, sys)
    return -1 if cls is ConjClass.SIGMA1 else 1
