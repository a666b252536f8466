"""Interrogative and declarative transforms plus subject-position repair."""

import random

import pytest

from synapper import (
    Category,
    InversionMismatchError,
    LanguageProfile,
    NoWhFoundError,
    Token,
    WhAlreadyPresentError,
    WhRule,
    WordOrder,
    declarativize,
    interrogativize,
    linearize,
    normalize_subject_position,
    structural_equal,
    wh_token,
)
from conftest import load_profile, load_structure, random_structure

WHY = wh_token("why")


class TestInterrogativize:
    @pytest.mark.parametrize(
        "profile, expected",
        [
            ("en", "Why is Tim going to the hospital"),
            ("cy-gloss", "Why is Tim going to the hospital"),
            ("ja-gloss", "Why Tim the hospital to going is"),
            ("uz-gloss", "Why Tim the hospital to going is"),
        ],
    )
    def test_reference_questions(self, profile, expected):
        q = interrogativize(load_structure("tim"), WHY, load_profile(profile))
        assert q.render() == expected

    def test_inversion_swaps_whole_blocks(self):
        q = interrogativize(load_structure("colette"), wh_token("what"), load_profile("en"))
        assert q.render() == "What was fact that Colette was Willy a big secret"

    def test_wh_without_inversion_prepends_only(self):
        q = interrogativize(load_structure("tim"), WHY, load_profile("vso"))
        assert q.render() == "Why is Tim the hospital to going"

    def test_pre_subject_rule_lands_before_subject_block(self):
        p = LanguageProfile(name="x", word_order=WordOrder.OVS, wh_rule=WhRule.PRE_SUBJECT)
        q = interrogativize(load_structure("mary"), WHY, p)
        assert q.render() == "Chocolate loves why Mary"

    def test_rejects_non_wh_token(self):
        with pytest.raises(ValueError):
            interrogativize(load_structure("tim"), Token("why", Category.ADV), load_profile("en"))

    def test_rejects_structure_already_containing_wh(self):
        import dataclasses

        s = load_structure("mary")
        member = s.main.members[2]
        patched = dataclasses.replace(member, node=(Token("what", Category.WH),))
        s = dataclasses.replace(
            s, main=dataclasses.replace(s.main, members=s.main.members[:2] + (patched,))
        )
        with pytest.raises(WhAlreadyPresentError):
            interrogativize(s, WHY, load_profile("en"))

    def test_question_adds_exactly_one_token(self):
        rng = random.Random(314159)
        for profile_name in ("en", "ja-gloss", "vso"):
            p = load_profile(profile_name)
            for _ in range(30):
                s = random_structure(rng)
                base = linearize(s, p)
                q = interrogativize(s, WHY, p)
                assert sorted(q.surfaces()) == sorted(base.surfaces() + ("why",))
                assert sum(1 for t in q.tokens if t.category is Category.WH) == 1


class TestDeclarativize:
    @pytest.mark.parametrize("profile", ["en", "cy-gloss", "ja-gloss", "vso"])
    def test_round_trip_tim(self, profile):
        s = load_structure("tim")
        p = load_profile(profile)
        q = interrogativize(s, WHY, p)
        back = declarativize(q, s, p)
        assert structural_equal(back, s)

    def test_round_trip_random_structures(self):
        rng = random.Random(271828)
        for profile_name in ("en", "ja-gloss", "vso"):
            p = load_profile(profile_name)
            for _ in range(25):
                s = random_structure(rng)
                q = interrogativize(s, WHY, p)
                assert declarativize(q, s, p) is s

    def test_requires_a_wh_token(self):
        s = load_structure("tim")
        p = load_profile("en")
        with pytest.raises(NoWhFoundError):
            declarativize(linearize(s, p), s, p)

    def test_rejects_wrong_skeleton(self):
        p = load_profile("en")
        q = interrogativize(load_structure("tim"), WHY, p)
        with pytest.raises(InversionMismatchError):
            declarativize(q, load_structure("mary"), p)

    def test_rejects_uninverted_question_under_inversion_rule(self):
        s = load_structure("tim")
        en = load_profile("en")
        plain = interrogativize(s, WHY, load_profile("cy-gloss"))
        # cy-gloss fronts the verb already, so its question happens to start
        # with the same tokens; build a truly uninverted one instead.
        uninverted = interrogativize(
            s, WHY, LanguageProfile(name="x", word_order=WordOrder.SVO, wh_rule=WhRule.INITIAL_NO_INVERSION)
        )
        with pytest.raises(InversionMismatchError):
            declarativize(uninverted, s, en)
        assert plain.render() == "Why is Tim going to the hospital"

    def test_rejects_wh_not_initial(self):
        s = load_structure("mary")
        builder = LanguageProfile(name="x", word_order=WordOrder.OVS, wh_rule=WhRule.PRE_SUBJECT)
        q = interrogativize(s, WHY, builder)
        assert q.surfaces()[0] != "why"
        with pytest.raises(InversionMismatchError):
            declarativize(q, s, load_profile("en"))


class TestNormalizeSubjectPosition:
    def test_clears_the_flag(self):
        s = load_structure("mary")
        assert s.surface_subject_final
        n = normalize_subject_position(s)
        assert not n.surface_subject_final
        assert structural_equal(n, s)

    def test_identity_when_already_clear(self):
        s = load_structure("tim")
        assert normalize_subject_position(s) is s

    def test_idempotent(self):
        s = load_structure("space_news")
        once = normalize_subject_position(s)
        assert normalize_subject_position(once) is once
