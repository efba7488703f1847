"""Homomorphism verification against group models.

A candidate homomorphism is a generator assignment into a GroupModel; it is
well defined exactly when every relator evaluates to the identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .models import GroupModel, finite_closure
from .presentations import Presentation
from .words import Word


@dataclass(frozen=True)
class RelatorCheck:
    index: int
    relator: Word
    image: str
    trivial: bool
    replay: str


@dataclass(frozen=True)
class HomReport:
    presentation: str
    checks: tuple[RelatorCheck, ...]

    @property
    def all_trivial(self) -> bool:
        return all(c.trivial for c in self.checks)

    def failures(self) -> tuple[RelatorCheck, ...]:
        return tuple(c for c in self.checks if not c.trivial)


def check_hom(p: Presentation, model: GroupModel, assignment: dict) -> HomReport:
    missing = [g for g in p.generators if g not in assignment]
    if missing:
        raise ValueError("generator %s has no assigned image" % missing[0])
    checks = []
    for i, r in enumerate(p.relators):
        image = model.eval_word(assignment, r)
        checks.append(RelatorCheck(
            i, r, str(image), image == model.identity(),
            "braidkit hom-check --relator %d ..." % i))
    return HomReport(p.name, tuple(checks))


def image_order(model: GroupModel, values, budget: int = 20000) -> int:
    """Order of the subgroup generated by the given element values."""
    return len(finite_closure(model, list(values), budget))
