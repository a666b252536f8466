"""Syntax-based translation: swap lexemes, relinearize, rewrite morphemes.

The structure never changes during translation. Lexical substitution maps
each (surface, category) pair to a target surface; linearization under the
target profile produces the new order; morpheme rules then add, change or
remove language-dependent tokens on the flat sequence. Tokens that belong
to a multiword node are treated as one fused unit, so category drops never
reach inside them.
"""

from __future__ import annotations

from dataclasses import replace
from typing import Iterable, Mapping

from .linearize import LinearSentence, PlacedToken, linearize
from .model import (
    Branch,
    Category,
    Constituent,
    Loop,
    Role,
    Synapper,
    SynapperError,
    Token,
    iter_tokens,
)
from .profile import LanguageProfile, MorphemeKind, MorphemeRule
from .transform import normalize_subject_position


class Lexicon:
    """Immutable mapping from (surface, category) to a target surface."""

    def __init__(self, entries: Mapping[tuple[str, Category], str]):
        self._entries = dict(entries)

    def lookup(self, surface: str, category: Category) -> str | None:
        return self._entries.get((surface, category))

    def items(self) -> Iterable[tuple[tuple[str, Category], str]]:
        return tuple(sorted(self._entries.items(), key=lambda kv: (kv[0][0], kv[0][1].value)))

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: tuple[str, Category]) -> bool:
        return key in self._entries


def identity_lexicon(s: Synapper) -> Lexicon:
    return Lexicon({(t.surface, t.category): t.surface for t in iter_tokens(s)})


class MissingLexemeError(SynapperError):
    """Raised with the complete list of uncovered (surface, category) pairs."""

    def __init__(self, pairs: list[tuple[str, Category]]):
        self.pairs = tuple(sorted(set(pairs), key=lambda p: (p[0], p[1].value)))
        listed = ", ".join(f"{s!r}/{c.value}" for s, c in self.pairs)
        super().__init__(f"lexicon misses {len(self.pairs)} pairs: {listed}")


def substitute_lexemes(s: Synapper, lex: Lexicon) -> Synapper:
    missing = [
        (t.surface, t.category)
        for t in iter_tokens(s)
        if lex.lookup(t.surface, t.category) is None
    ]
    if missing:
        raise MissingLexemeError(missing)
    return replace(s, main=_substitute_loop(s.main, lex))


def _substitute_loop(loop: Loop, lex: Lexicon) -> Loop:
    return replace(loop, members=tuple(_substitute_member(m, lex) for m in loop.members))


def _substitute_member(c: Constituent, lex: Lexicon) -> Constituent:
    branches = tuple(
        Branch(tokens=_substitute_tokens(b.tokens, lex), category=b.category, ordinal=b.ordinal)
        for b in c.branches
    )
    if c.node is not None:
        return Constituent(role=c.role, node=_substitute_tokens(c.node, lex), branches=branches)
    assert c.loop is not None
    return Constituent(role=c.role, loop=_substitute_loop(c.loop, lex), branches=branches)


def _substitute_tokens(tokens: tuple[Token, ...], lex: Lexicon) -> tuple[Token, ...]:
    out = []
    for t in tokens:
        target = lex.lookup(t.surface, t.category)
        assert target is not None
        out.append(Token(target, t.category))
    return tuple(out)


def apply_morpheme_rules(sentence: LinearSentence, p: LanguageProfile) -> LinearSentence:
    placed = sentence.placed
    for rule in p.rules_in_order():
        placed = _apply_rule(placed, rule)
    return replace(sentence, placed=placed)


def _apply_rule(placed: tuple[PlacedToken, ...], rule: MorphemeRule) -> tuple[PlacedToken, ...]:
    if rule.kind is MorphemeKind.DROP_CATEGORY:
        category = _category_selector(rule)
        return tuple(pt for pt in placed if pt.unit or pt.category is not category)
    if rule.kind in (MorphemeKind.INSERT_BEFORE, MorphemeKind.INSERT_AFTER):
        words = rule.payload.split()
        if not words:
            raise SynapperError(f"insert rule for {rule.selector!r} has an empty payload")
        out: list[PlacedToken] = []
        for pt in placed:
            hit = pt.surface == rule.selector
            if hit and rule.kind is MorphemeKind.INSERT_BEFORE:
                out.extend(_inserted(words))
            out.append(pt)
            if hit and rule.kind is MorphemeKind.INSERT_AFTER:
                out.extend(_inserted(words))
        return tuple(out)
    assert rule.kind is MorphemeKind.SUFFIX_ON_ROLE
    try:
        role = Role(rule.selector)
    except ValueError:
        raise SynapperError(f"suffix rule selector must be a role, got {rule.selector!r}") from None
    last = None
    for i, pt in enumerate(placed):
        if pt.role is role:
            last = i
    if last is None:
        return placed
    target = placed[last]
    patched = replace(target, surface=target.surface + rule.payload)
    return placed[:last] + (patched,) + placed[last + 1 :]


def _category_selector(rule: MorphemeRule) -> Category:
    try:
        return Category(rule.selector)
    except ValueError:
        raise SynapperError(f"drop rule selector must be a category tag, got {rule.selector!r}") from None


def _inserted(words: list[str]) -> list[PlacedToken]:
    return [PlacedToken(w, Category.OTHER, None, -1, False) for w in words]


def translate(s: Synapper, lex: Lexicon, p: LanguageProfile) -> LinearSentence:
    """normalize subject position, substitute lexemes, linearize, rewrite."""
    prepared = substitute_lexemes(normalize_subject_position(s), lex)
    return apply_morpheme_rules(linearize(prepared, p), p)
