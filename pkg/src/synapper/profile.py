"""Language profiles: everything a target language adds on top of a structure.

A profile fixes the word order (hence the reading direction), optional V1/V2
verb placement, per-category branch placement, the interrogative strategy,
and an ordered list of morpheme rewrites applied to linearized token
sequences. Profiles never change the structure itself.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .model import Category, WordOrder


class VerbPlacement(enum.Enum):
    DEFAULT = "default"
    V1 = "v1"
    V2 = "v2"


class BranchSide(enum.Enum):
    PRE = "pre"
    POST = "post"


class PostOrder(enum.Enum):
    SOURCE = "source"
    REVERSED = "reversed"


@dataclass(frozen=True)
class BranchPlacementRule:
    category: Category
    side: BranchSide
    post_order: PostOrder = PostOrder.SOURCE


class WhRule(enum.Enum):
    INITIAL_WITH_INVERSION = "initial_inversion"
    INITIAL_NO_INVERSION = "initial_plain"
    PRE_SUBJECT = "pre_subject"


class MorphemeKind(enum.Enum):
    DROP_CATEGORY = "drop_category"
    INSERT_BEFORE = "insert_before"
    INSERT_AFTER = "insert_after"
    SUFFIX_ON_ROLE = "suffix_on_role"


@dataclass(frozen=True)
class MorphemeRule:
    """One token-sequence rewrite.

    selector meaning depends on kind: a category name for drop_category, an
    anchor surface for the inserts (applies at every occurrence), a role name
    for suffix_on_role. payload is the inserted word sequence or the suffix.
    """

    kind: MorphemeKind
    selector: str
    payload: str = ""
    ordinal: int = 0


# Unlisted categories place branches before the node in source order.
_DEFAULT_PLACEMENT = (BranchSide.PRE, PostOrder.SOURCE)


@dataclass(frozen=True)
class LanguageProfile:
    name: str
    word_order: WordOrder
    verb_placement: VerbPlacement = VerbPlacement.DEFAULT
    branch_rules: tuple[BranchPlacementRule, ...] = ()
    wh_rule: WhRule = WhRule.INITIAL_NO_INVERSION
    morpheme_rules: tuple[MorphemeRule, ...] = ()

    def placement_for(self, category: Category) -> tuple[BranchSide, PostOrder]:
        for rule in self.branch_rules:
            if rule.category is category:
                return rule.side, rule.post_order
        return _DEFAULT_PLACEMENT

    def rules_in_order(self) -> tuple[MorphemeRule, ...]:
        return tuple(sorted(self.morpheme_rules, key=lambda r: r.ordinal))
