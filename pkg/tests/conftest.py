"""Shared helpers: corpus loaders, a CLI runner, and a random structure generator."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from synapper import (
    Branch,
    Category,
    Constituent,
    Loop,
    LoopKind,
    Role,
    Synapper,
    Token,
    WordOrder,
    parse_profile,
    parse_structure,
)
from synapper.cli import run as cli_run

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
PROFILES = ROOT / "profiles"
LEXICONS = ROOT / "lexicons"


def fixture_path(name: str) -> str:
    return str(FIXTURES / f"{name}.json")


def profile_path(name: str) -> str:
    return str(PROFILES / f"{name}.json")


def lexicon_path(name: str) -> str:
    return str(LEXICONS / f"{name}.tsv")


def load_structure(name: str) -> Synapper:
    return parse_structure((FIXTURES / f"{name}.json").read_text(encoding="utf-8"))


def load_profile(name: str):
    return parse_profile((PROFILES / f"{name}.json").read_text(encoding="utf-8"))


@pytest.fixture
def run_cli(capsys):
    """Invoke the CLI in-process; returns (exit_code, stdout, stderr)."""

    def _run(*args: str):
        try:
            code = cli_run(list(args))
        except SystemExit as e:
            code = e.code if isinstance(e.code, int) else 2
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


# Categories used by generated structures; WH stays out so the interrogative
# transforms accept every generated structure.
_GEN_CATEGORIES = (
    Category.N,
    Category.V,
    Category.AUX,
    Category.ADJ,
    Category.ADV,
    Category.DET,
    Category.PRON,
    Category.PREP,
    Category.OTHER,
)

_GEN_WORDS = (
    "kite", "river", "stone", "lamp", "book", "cloud", "wolf", "engine",
    "salt", "pepper", "tower", "marsh", "violin", "copper", "badge", "ferry",
)


def random_structure(rng: random.Random, max_ring: int = 6, max_depth: int = 3) -> Synapper:
    """A valid-by-construction structure: one subject, one verb per clausal ring."""
    order = rng.choice(list(WordOrder))
    main = _random_clausal(rng, max_ring, max_depth)
    return Synapper(label="generated", word_order=order, surface_subject_final=False, main=main)


def _random_clausal(rng: random.Random, max_ring: int, depth: int) -> Loop:
    n = rng.randint(2, max_ring)
    roles = [Role.SUBJECT, Role.VERB] + [Role.OBJECT] * (n - 2)
    rng.shuffle(roles)
    members = tuple(_random_member(rng, role, depth) for role in roles)
    return Loop(kind=LoopKind.CLAUSAL, members=members)


def _random_phrasal(rng: random.Random, depth: int) -> Loop:
    n = rng.randint(1, 4)
    members = tuple(_random_member(rng, None, depth) for _ in range(n))
    return Loop(kind=LoopKind.PHRASAL, members=members, head_index=rng.randrange(n))


def _random_member(rng: random.Random, role: Role | None, depth: int) -> Constituent:
    if depth > 1 and rng.random() < 0.3:
        if rng.random() < 0.5:
            return Constituent(role=role, loop=_random_clausal(rng, 4, depth - 1))
        return Constituent(role=role, loop=_random_phrasal(rng, depth - 1))
    node = tuple(
        Token(rng.choice(_GEN_WORDS), rng.choice(_GEN_CATEGORIES))
        for _ in range(rng.randint(1, 3))
    )
    branches = tuple(
        Branch(
            tokens=(Token(rng.choice(_GEN_WORDS), rng.choice(_GEN_CATEGORIES)),),
            category=rng.choice(_GEN_CATEGORIES),
            ordinal=i,
        )
        for i in range(rng.randint(0, 2))
    )
    return Constituent(role=role, node=node, branches=branches)


def rotate_main(s: Synapper, k: int) -> Synapper:
    """Same ring, different storage starting index."""
    members = s.main.members
    n = len(members)
    k %= n
    rotated = members[k:] + members[:k]
    head = s.main.head_index
    if s.main.kind is LoopKind.PHRASAL:
        head = (head - k) % n
    main = Loop(kind=s.main.kind, members=rotated, head_index=head)
    return Synapper(
        label=s.label,
        word_order=s.word_order,
        surface_subject_final=s.surface_subject_final,
        main=main,
    )
