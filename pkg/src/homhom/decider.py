"""Membership in the morphism-extension classes XY.

A structure is in XY when every partial X-morphism between finite induced
substructures extends to a total Y-endomorphism.  Verdicts are tri-state:
``member`` is True, False, or None when the map budget ran out.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .morphism import HOMO, ISO, MONO, MorphismKind, PartialMap
from .structure import ColoredStructure

KINDS = (ISO, MONO, HOMO)


@dataclass(frozen=True)
class ExtensionClass:
    source: MorphismKind
    target: MorphismKind

    @property
    def name(self) -> str:
        return self.source.letter + self.target.letter

    @classmethod
    def parse(cls, name: str) -> "ExtensionClass":
        if len(name) != 2:
            raise ValueError(f"class name must be two letters from I, M, H, got {name!r}")
        return cls(MorphismKind.from_letter(name[0]), MorphismKind.from_letter(name[1]))

    def __str__(self):
        return self.name


ALL_CLASSES = tuple(ExtensionClass(x, y) for x, y in itertools.product(KINDS, KINDS))
CLASS_NAMES = tuple(c.name for c in ALL_CLASSES)


@dataclass(frozen=True)
class ClassVerdict:
    cls: ExtensionClass
    member: bool | None
    witness: PartialMap | None
    checked: int

    def to_json(self, G: ColoredStructure | None = None) -> dict:
        w = None
        if self.witness is not None:
            pairs = self.witness.named(G) if G is not None else [list(p) for p in self.witness.pairs]
            w = {"pairs": pairs}
        return {"class": self.cls.name, "member": self.member, "witness": w, "checked": self.checked}


def _as_class(cls) -> ExtensionClass:
    return cls if isinstance(cls, ExtensionClass) else ExtensionClass.parse(cls)


def decide(G: ColoredStructure, cls: ExtensionClass | str, budget: int | None = None) -> ClassVerdict:
    """Decide whether G belongs to ``cls``.

    The witness of a non-member is the least failing map of minimum domain
    size.  ``budget`` caps the number of partial maps examined.
    """
    cls = _as_class(cls)
    status, dom, img, checked = kernels.decide(
        G.poset.leq_matrix,
        G.vc,
        G.ec,
        int(cls.source),
        int(cls.target),
        -1 if budget is None else int(budget),
    )
    if status == kernels.MEMBER:
        return ClassVerdict(cls, True, None, int(checked))
    if status == kernels.UNKNOWN:
        return ClassVerdict(cls, None, None, int(checked))
    witness = PartialMap(tuple(zip(np.asarray(dom).tolist(), np.asarray(img).tolist())), cls.source)
    return ClassVerdict(cls, False, witness, int(checked))


def _implies(a: bool | None, b: bool | None) -> bool:
    # unknown cells constrain nothing
    return a is not True or b is not False


@dataclass
class Profile:
    verdicts: dict[str, ClassVerdict] = field(default_factory=dict)

    def __getitem__(self, name: str) -> ClassVerdict:
        return self.verdicts[name]

    def member(self, name: str) -> bool | None:
        return self.verdicts[name].member

    @property
    def consistent(self) -> bool:
        """Every inclusion HY <= MY <= IY and XI <= XM <= XH holds."""
        m = self.member
        for y in "IMH":
            if not (_implies(m("H" + y), m("M" + y)) and _implies(m("M" + y), m("I" + y))):
                return False
        for x in "IMH":
            if not (_implies(m(x + "I"), m(x + "M")) and _implies(m(x + "M"), m(x + "H"))):
                return False
        return True

    def to_json(self, G: ColoredStructure | None = None) -> dict:
        return {
            "verdicts": [v.to_json(G) for v in self.verdicts.values()],
            "consistent": self.consistent,
        }


def hierarchy_profile(G: ColoredStructure, budget: int | None = None, classes=CLASS_NAMES) -> Profile:
    return Profile({c: decide(G, c, budget) for c in classes})
