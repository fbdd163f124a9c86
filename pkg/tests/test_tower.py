"""Word problem in centralizer extensions, cross-checked against a
brute-force rewriting oracle that knows nothing about pinch reduction."""

from collections import deque

import pytest
from hypothesis import given, settings, strategies as st

from centex import GroupSpec, Tower
from centex.errors import NameClash, TrivialCenter, UnknownSymbol


def rewrite_oracle(word, depth=12):
    """Breadth-first search over free reduction plus the commutations
    [a, t1] = 1, on flat letter sequences over {a, b, t1}.

    Returns True iff the empty word is reachable within the depth bound.
    """

    def reduce_flat(seq):
        out = []
        for letter in seq:
            if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
                out.pop()
            else:
                out.append(letter)
        return tuple(out)

    start = reduce_flat(word)
    if not start:
        return True
    seen = {start}
    frontier = deque([(start, 0)])
    commuting = {"a", "t1"}
    while frontier:
        current, steps = frontier.popleft()
        if steps >= depth:
            continue
        for i in range(len(current) - 1):
            x, y = current[i], current[i + 1]
            if x[0] in commuting and y[0] in commuting and x[0] != y[0]:
                swapped = reduce_flat(current[:i] + (y, x) + current[i + 2:])
                if not swapped:
                    return True
                if swapped not in seen:
                    seen.add(swapped)
                    frontier.append((swapped, steps + 1))
    return False


def flat(letters):
    out = []
    for sym, exp in letters:
        step = 1 if exp > 0 else -1
        out.extend([(sym, step)] * abs(exp))
    return tuple(out)


class TestWordProblem:
    def test_defining_relation(self, t1):
        assert t1.is_trivial("t1 a t1^-1 a^-1")

    def test_non_relation_retains_t(self, t1):
        word = "t1 b t1^-1 b^-1"
        assert not t1.is_trivial(word)
        assert not rewrite_oracle(flat(t1.elem(word).letters), depth=10)

    def test_free_cancellation_then_pinch(self, t1):
        assert t1.is_trivial("t1 a^2 t1 t1^-2 a^-2")

    def test_base_embedding(self, t1, f2):
        for text in ["a b a^-1 b^-1", "a a^-1", "b^2", "a b"]:
            assert t1.is_trivial(text) == f2.word(text).is_identity

    def test_stable_letters_survive(self, f2):
        tower = Tower(f2).extend_centralizer("a", "t1")
        tower = tower.extend_centralizer("t1 b", "t2")
        for t in ("t1", "t2"):
            assert not tower.is_trivial(t)

    def test_centralizer_relation(self, t1):
        for g in ["a", "a^3", "a^-2", "t1", "t1 a"]:
            assert t1.centralizer_member(g, "a")
            assert t1.is_trivial(t1.elem(g).comm(t1.gen("t1")).letters)

    def test_unknown_symbol(self, t1):
        with pytest.raises(UnknownSymbol):
            t1.is_trivial("t9")


class TestEqualAndNormalForm:
    def test_equal_commuting(self, t1):
        assert t1.equal("t1 a", "a t1")

    def test_equal_noncommuting(self, t1):
        assert not t1.equal("t1 b", "b t1")

    def test_normal_t_form(self, t1):
        assert str(t1.normal_t_form("t1 t1^-1 b")) == "b"

    def test_normal_t_form_is_equal_to_input(self, t1):
        for text in ["t1 a t1", "b t1 a t1^-1", "t1^2 a^2 t1^-1"]:
            assert t1.equal(text, t1.normal_t_form(text).letters)


class TestExtend:
    def test_levels_stack(self, f2):
        tower = Tower(f2).extend_centralizer("a", "t1")
        tower2 = tower.extend_centralizer("t1 b", "t2")
        assert tower2.height == 2
        assert tower2.stable_letters == ("t1", "t2")
        assert tower2.is_trivial("t2^-1 t1 b t2 b^-1 t1^-1")

    def test_trivial_center_rejected(self, f2):
        with pytest.raises(TrivialCenter):
            Tower(f2).extend_centralizer("a a^-1", "t1")

    def test_name_clash_rejected(self, t1):
        with pytest.raises(NameClash):
            t1.extend_centralizer("b", "t1")
        with pytest.raises(NameClash):
            t1.extend_centralizer("b", "a")


class TestElementAlgebra:
    def test_equality_is_word_problem(self, t1):
        assert t1.elem("t1 a") == t1.elem("a t1")
        assert t1.elem("t1 b") != t1.elem("b t1")

    def test_algebra(self, t1):
        x = t1.gen("a")
        y = t1.gen("t1")
        assert (x * ~x).is_trivial
        assert x.comm(y).is_trivial
        assert (x ** 3).conj(y) == x ** 3

    def test_lift_after_extension(self, t1):
        g = t1.gen("b")
        tower2 = t1.extend_centralizer("b", "t2")
        assert g.lift(tower2).comm(tower2.gen("t2")).is_trivial


class TestOracleAgreement:
    def test_spot_corpus(self, t1):
        words = [
            "t1 a t1^-1 a^-1",
            "t1 b t1^-1 b^-1",
            "t1 a^2 t1 t1^-2 a^-2",
            "a t1 a t1^-1 a^-2",
            "b t1 a t1^-1 a^-1 b^-1",
            "t1 a b t1^-1 b^-1 a^-1",
            "t1^2 a t1^-2 a^-1",
            "b a t1 b^-1 t1^-1",
        ]
        for text in words:
            letters = t1.elem(text).letters
            assert t1.is_trivial(text) == rewrite_oracle(flat(letters))

    @settings(max_examples=150, deadline=None)
    @given(
        st.lists(
            st.tuples(st.sampled_from(["a", "b", "t1"]), st.sampled_from([1, -1])),
            max_size=8,
        )
    )
    def test_randomized_agreement(self, letters):
        f2 = GroupSpec.free("a", "b")
        tower = Tower(f2).extend_centralizer("a", "t1")
        letters = tuple(letters)
        assert tower.is_trivial(letters) == rewrite_oracle(flat(letters))
