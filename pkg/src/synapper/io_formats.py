"""Reading and writing the on-disk formats.

Structures and language profiles are JSON documents with a fixed, strictly
checked vocabulary of keys; lexicons are three-column TSV. Serialization is
byte-deterministic: the same structure always produces the same text, with
keys in a fixed order and branches in ordinal order (the array position IS
the ordinal on re-parse). ``to_dot`` renders a structure as a Graphviz
digraph: one box per node, branch edges pointing into their node, ring
edges following the stored clockwise order, and nested loops as clusters.
"""

from __future__ import annotations

import json

from .model import (
    Category,
    Constituent,
    Loop,
    LoopKind,
    MalformedDocumentError,
    Role,
    Synapper,
    SynapperError,
    UnknownWordOrderError,
    WordOrder,
    _check_keys,
    _expect_str,
    _join,
    build_synapper,
)
from .profile import (
    BranchPlacementRule,
    BranchSide,
    LanguageProfile,
    MorphemeKind,
    MorphemeRule,
    PostOrder,
    VerbPlacement,
    WhRule,
)
from .translate import Lexicon


class MalformedSyntaxError(SynapperError):
    """Text that is not even parseable; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


def _loads(text: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedSyntaxError(f"invalid JSON: {e.msg}", e.lineno) from None


def parse_structure(text: str) -> Synapper:
    doc = _loads(text)
    if not isinstance(doc, dict):
        raise MalformedDocumentError("", "expected an object")
    return build_synapper(doc)


def serialize_structure(s: Synapper) -> str:
    doc: dict[str, object] = {}
    if s.label:
        doc["label"] = s.label
    doc["word_order"] = s.word_order.value
    if s.surface_subject_final:
        doc["surface_subject_final"] = True
    doc["loop"] = _loop_doc(s.main)
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _loop_doc(loop: Loop) -> dict:
    doc: dict[str, object] = {"kind": loop.kind.value}
    if loop.kind is LoopKind.PHRASAL:
        doc["head_index"] = loop.head_index
    doc["members"] = [_member_doc(m) for m in loop.members]
    return doc


def _member_doc(c: Constituent) -> dict:
    doc: dict[str, object] = {}
    if c.role is not None:
        doc["role"] = c.role.value
    if c.node is not None:
        doc["node"] = [_token_doc(t) for t in c.node]
    else:
        assert c.loop is not None
        doc["loop"] = _loop_doc(c.loop)
    if c.branches:
        doc["branches"] = [
            {"category": b.category.value, "tokens": [_token_doc(t) for t in b.tokens]}
            for b in sorted(c.branches, key=lambda b: b.ordinal)
        ]
    return doc


def _token_doc(t) -> dict:
    return {"surface": t.surface, "category": t.category.value}


_PROFILE_REQUIRED = {"name", "word_order", "wh_rule"}
_PROFILE_OPTIONAL = {"verb_placement", "branch_rules", "morpheme_rules"}


def parse_profile(text: str) -> LanguageProfile:
    raw = _loads(text)
    obj = _check_keys(raw, "", _PROFILE_REQUIRED, _PROFILE_OPTIONAL)
    name = _expect_str(obj["name"], "name")
    if not name:
        raise MalformedDocumentError("name", "profile name must be non-empty")
    order_text = _expect_str(obj["word_order"], "word_order")
    try:
        word_order = WordOrder(order_text)
    except ValueError:
        raise UnknownWordOrderError("word_order", f"unknown word order {order_text!r}") from None
    wh_rule = _enum_value(WhRule, obj["wh_rule"], "wh_rule")
    placement = _enum_value(VerbPlacement, obj.get("verb_placement", "default"), "verb_placement")
    return LanguageProfile(
        name=name,
        word_order=word_order,
        verb_placement=placement,
        branch_rules=_parse_branch_rules(obj.get("branch_rules", [])),
        wh_rule=wh_rule,
        morpheme_rules=_parse_morpheme_rules(obj.get("morpheme_rules", [])),
    )


def _enum_value(enum_cls, value: object, path: str):
    text = _expect_str(value, path)
    try:
        return enum_cls(text)
    except ValueError:
        options = ", ".join(member.value for member in enum_cls)
        raise MalformedDocumentError(path, f"unknown value {text!r} (expected one of: {options})") from None


def _parse_branch_rules(raw: object) -> tuple[BranchPlacementRule, ...]:
    if not isinstance(raw, list):
        raise MalformedDocumentError("branch_rules", "expected an array")
    seen: set[Category] = set()
    rules = []
    for i, r in enumerate(raw):
        path = f"branch_rules[{i}]"
        obj = _check_keys(r, path, {"category", "side"}, {"post_order"})
        category = _enum_value(Category, obj["category"], _join(path, "category"))
        if category in seen:
            raise MalformedDocumentError(
                _join(path, "category"), f"duplicate placement for category {category.value!r}"
            )
        seen.add(category)
        side = _enum_value(BranchSide, obj["side"], _join(path, "side"))
        post_order = _enum_value(PostOrder, obj.get("post_order", "source"), _join(path, "post_order"))
        rules.append(BranchPlacementRule(category=category, side=side, post_order=post_order))
    return tuple(rules)


def _parse_morpheme_rules(raw: object) -> tuple[MorphemeRule, ...]:
    if not isinstance(raw, list):
        raise MalformedDocumentError("morpheme_rules", "expected an array")
    seen_ordinals: set[int] = set()
    rules = []
    for i, r in enumerate(raw):
        path = f"morpheme_rules[{i}]"
        obj = _check_keys(r, path, {"kind", "selector"}, {"payload", "ordinal"})
        kind = _enum_value(MorphemeKind, obj["kind"], _join(path, "kind"))
        selector = _expect_str(obj["selector"], _join(path, "selector"))
        if not selector:
            raise MalformedDocumentError(_join(path, "selector"), "selector must be non-empty")
        payload = _expect_str(obj.get("payload", ""), _join(path, "payload"))
        ordinal = obj.get("ordinal", i)
        if not isinstance(ordinal, int) or isinstance(ordinal, bool):
            raise MalformedDocumentError(_join(path, "ordinal"), "expected an integer")
        if ordinal in seen_ordinals:
            raise MalformedDocumentError(_join(path, "ordinal"), f"duplicate ordinal {ordinal}")
        seen_ordinals.add(ordinal)
        _check_rule_shape(kind, selector, payload, path)
        rules.append(MorphemeRule(kind=kind, selector=selector, payload=payload, ordinal=ordinal))
    return tuple(rules)


def _check_rule_shape(kind: MorphemeKind, selector: str, payload: str, path: str) -> None:
    if kind is MorphemeKind.DROP_CATEGORY:
        try:
            Category(selector)
        except ValueError:
            raise MalformedDocumentError(
                _join(path, "selector"), f"drop selector must be a category tag, got {selector!r}"
            ) from None
        if payload:
            raise MalformedDocumentError(_join(path, "payload"), "drop rules take no payload")
    elif kind is MorphemeKind.SUFFIX_ON_ROLE:
        try:
            Role(selector)
        except ValueError:
            raise MalformedDocumentError(
                _join(path, "selector"), f"suffix selector must be a role, got {selector!r}"
            ) from None
        if not payload:
            raise MalformedDocumentError(_join(path, "payload"), "suffix rules need a payload")
    else:
        if not payload.split():
            raise MalformedDocumentError(_join(path, "payload"), "insert rules need a payload")


def parse_lexicon(text: str) -> Lexicon:
    """Parse tab-separated ``source<TAB>category<TAB>target`` lines.

    Blank lines and lines starting with ``#`` are skipped; every malformed
    line (wrong field count, unknown category, duplicate pair) is reported
    with its 1-based line number.
    """
    entries: dict[tuple[str, Category], str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise MalformedSyntaxError(f"expected 3 tab-separated fields, got {len(parts)}", lineno)
        source, cat_text, target = (p.strip() for p in parts)
        if not source or not target:
            raise MalformedSyntaxError("empty field", lineno)
        try:
            category = Category(cat_text)
        except ValueError:
            raise MalformedSyntaxError(f"unknown category {cat_text!r}", lineno) from None
        key = (source, category)
        if key in entries:
            raise MalformedSyntaxError(f"duplicate entry for {source!r}/{category.value}", lineno)
        entries[key] = target
    return Lexicon(entries)


def to_dot(s: Synapper) -> str:
    """Graphviz source for one structure.

    Every node becomes a box labeled with its joined tokens; branch boxes
    point into their node; ring edges run clockwise through each loop and
    close the cycle whenever the loop has more than one member. Nested
    loops are drawn as clusters named after their position.
    """
    body: list[str] = []
    _dot_loop(s.main, "n", "  ", body)
    return "\n".join(["digraph synapper {", "  node [shape=box];", *body, "}"]) + "\n"


def _dot_loop(loop: Loop, prefix: str, indent: str, out: list[str]) -> str:
    if not loop.members:
        raise SynapperError("cannot draw an empty loop")
    reps = []
    for j, member in enumerate(loop.members):
        mid = f"{prefix}{j}"
        if member.node is not None:
            out.append(f'{indent}{mid} [label="{_esc_label(member.node)}"];')
            rep = mid
        else:
            assert member.loop is not None
            out.append(f"{indent}subgraph cluster_{mid} {{")
            out.append(f'{indent}  label="{member.loop.kind.value} loop";')
            rep = _dot_loop(member.loop, mid + "m", indent + "  ", out)
            out.append(f"{indent}}}")
        for branch in sorted(member.branches, key=lambda b: b.ordinal):
            bid = f"{mid}b{branch.ordinal}"
            out.append(f'{indent}{bid} [label="{_esc_label(branch.tokens)}"];')
            out.append(f"{indent}{bid} -> {rep};")
        reps.append(rep)
    if len(reps) > 1:
        for j, rep in enumerate(reps):
            out.append(f"{indent}{rep} -> {reps[(j + 1) % len(reps)]};")
    return reps[0]


def _esc_label(tokens) -> str:
    text = " ".join(t.surface for t in tokens)
    return text.replace("\\", "\\\\").replace('"', '\\"')
