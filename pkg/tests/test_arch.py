import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from scatfact import (
    NONE_POS,
    Alphabet,
    arch_factorize,
    is_min_perfect_universal,
    is_perfect_universal,
    letters_of,
    next_alph_pos,
    next_alph_pos_table,
    parse_word,
    render_factorization,
    universality_index,
)


def test_two_arch_word_with_rest():
    f = arch_factorize(parse_word("aabbbaa", alphabet=Alphabet("ab")))
    assert [a.text for a in f.arches()] == ["aab", "bba"]
    assert f.rest.text == "a"
    assert f.iota == 2
    assert f.modus.text == "ba"
    assert [f.inner(i).text for i in (1, 2)] == ["aa", "bb"]
    assert f.render() == "(aab)(bba)a"
    assert render_factorization(parse_word("aabbbaa")) == "(aab)(bba)a"


def test_arch_example_larger_alphabet():
    f = arch_factorize(parse_word("tomatoatm"))
    assert [a.text for a in f.arches()] == ["toma", "toatm"]
    assert f.rest.text == ""
    assert f.iota == 2
    assert f.modus.text == "am"


def test_empty_and_sub_alphabet_words_have_no_arch():
    assert universality_index(parse_word("", alphabet=Alphabet("ab"))) == 0
    assert universality_index(parse_word("aaa", alphabet=Alphabet("ab"))) == 0
    f = arch_factorize(parse_word("bbb", alphabet=Alphabet("ab")))
    assert f.arch_ranges == ()
    assert f.rest.text == "bbb"


def test_five_arch_word():
    assert universality_index(parse_word("abcddcbaabcddcbaabcd")) == 5


def test_arch_index_bounds():
    f = arch_factorize(parse_word("abab"))
    assert f.arch(1).text == "ab"
    with pytest.raises(ValueError):
        f.arch(0)
    with pytest.raises(ValueError):
        f.inner(3)


def test_perfect_universal_predicates():
    assert is_perfect_universal(parse_word("abba"), 2)
    assert is_min_perfect_universal(parse_word("abba"), 2)
    assert not is_perfect_universal(parse_word("aabb"), 1)  # rest "b" is nonempty
    assert not is_perfect_universal(parse_word("abba"), 1)
    assert is_perfect_universal(parse_word("aabab"), 2)
    assert not is_min_perfect_universal(parse_word("aabab"), 2)


def _max_full_factor_chain(symbols, sigma):
    # max t over ALL factorizations into t consecutive factors that each
    # contain the whole alphabet (every candidate end point is explored)
    n = len(symbols)
    best = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        seen = set()
        top = 0
        for j in range(i, n):
            seen.add(symbols[j])
            if len(seen) == sigma:
                top = max(top, 1 + best[j + 1])
        best[i] = top
    return best[0]


@pytest.mark.parametrize("sigma,max_n", [(2, 10), (3, 7)])
def test_greedy_factorization_maximizes_arch_count(sigma, max_n):
    alpha = Alphabet("abc"[:sigma])
    for n in range(0, max_n + 1):
        for tup in itertools.product(range(sigma), repeat=n):
            w = parse_word("".join(alpha.letters[s] for s in tup), alphabet=alpha)
            assert universality_index(w) == _max_full_factor_chain(tup, sigma)


def test_greedy_factorization_maximal_on_longer_random_words():
    rng = random.Random(99)
    alpha = Alphabet("abc")
    for _ in range(200):
        n = rng.randint(8, 12)
        tup = tuple(rng.randrange(3) for _ in range(n))
        w = parse_word("".join(alpha.letters[s] for s in tup), alphabet=alpha)
        assert universality_index(w) == _max_full_factor_chain(tup, 3)


def test_next_alph_pos_examples():
    w = parse_word("abcddcbaabcd")
    assert universality_index(w) == 3
    assert next_alph_pos(w, 2, 2) == 4
    assert next_alph_pos(w, 3, 2) == 6
    assert next_alph_pos(w, 10, 3) == NONE_POS
    assert next_alph_pos(w, 0, 1) == 1
    assert next_alph_pos(w, 0, 4) == 4


def test_next_alph_pos_argument_validation():
    w = parse_word("abab")
    with pytest.raises(ValueError):
        next_alph_pos(w, 0, 0)
    with pytest.raises(ValueError):
        next_alph_pos(w, 0, 3)
    with pytest.raises(ValueError):
        next_alph_pos(w, -1, 1)
    with pytest.raises(ValueError):
        next_alph_pos(w, 5, 1)


@given(st.text(alphabet="abc", min_size=0, max_size=14))
def test_next_alph_pos_matches_definition_and_table(text):
    w = parse_word(text, alphabet=Alphabet("abc"))
    table = next_alph_pos_table(w)
    for i in range(len(w) + 1):
        for s in range(1, 4):
            j = next_alph_pos(w, i, s)
            assert table[i, s - 1] == j
            if j == NONE_POS:
                assert len(set(w.symbols[i:])) < s
            else:
                assert len(set(w.symbols[i:j])) == s
                assert len(set(w.symbols[i : j - 1])) == s - 1


@given(st.text(alphabet="ab", min_size=1, max_size=16))
@settings(max_examples=60)
def test_factorization_invariants(text):
    w = parse_word(text, alphabet=Alphabet("ab"))
    f = arch_factorize(w)
    sigma = w.alphabet.size
    # arches tile a prefix, the rest is the leftover suffix
    pos = 1
    for lo, hi in f.arch_ranges:
        assert lo == pos
        pos = hi + 1
    assert f.rest_start == pos
    for i in range(1, f.iota + 1):
        arch = f.arch(i)
        assert letters_of(arch) == frozenset(range(sigma))
        # the arch's last letter occurs exactly once in the arch
        assert arch.symbols.count(arch.symbols[-1]) == 1
        assert len(letters_of(f.inner(i))) == sigma - 1
    assert len(letters_of(f.rest)) < sigma
    assert f.iota <= len(w) // sigma


def test_next_alph_pos_laws_on_words_of_minimal_universal_length():
    # words of length iota*sigma: every arch is a permutation of the alphabet
    rng = random.Random(7)
    for sigma, iota in [(2, 3), (3, 2), (3, 4), (4, 3)]:
        alpha = Alphabet("abcd"[:sigma])
        for _ in range(30):
            perms = ["".join(rng.sample(alpha.letters, sigma)) for _ in range(iota)]
            w = parse_word("".join(perms), alphabet=alpha)
            assert universality_index(w) == iota and len(w) == iota * sigma
            for j in range(0, len(w) + 1):
                for s in range(1, sigma + 1):
                    val = next_alph_pos(w, j, s)
                    if val == NONE_POS:
                        continue
                    assert val <= (j // sigma) * sigma + sigma + s
                    if j % sigma == 0 or s <= sigma - (j % sigma):
                        assert val == j + s
