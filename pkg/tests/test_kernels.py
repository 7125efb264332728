"""LCS kernel: backend agreement, encoding, and algebraic properties."""

from itertools import combinations

from hypothesis import given
from hypothesis import strategies as st

from simscan import kernels

ids = st.lists(st.integers(min_value=0, max_value=4), max_size=24)
short_ids = st.lists(st.integers(min_value=0, max_value=2), max_size=8)


def exhaustive_lcs(xs, ys) -> int:
    """Oracle: longest subsequence of xs that is also a subsequence of ys."""
    def subsequences(seq):
        for r in range(len(seq), -1, -1):
            for picks in combinations(range(len(seq)), r):
                yield [seq[i] for i in picks]

    def is_subsequence(needle, haystack):
        it = iter(haystack)
        return all(any(tok == h for h in it) for tok in needle)

    for candidate in subsequences(list(xs)):
        if is_subsequence(candidate, ys):
            return len(candidate)
    return 0


def test_backend_is_declared():
    assert kernels.LCS_BACKEND in ("compiled", "pure-python")


@given(short_ids, short_ids)
def test_matches_exhaustive_oracle(xs, ys):
    assert kernels.lcs_length(xs, ys) == exhaustive_lcs(xs, ys)


@given(ids, ids)
def test_backends_agree(xs, ys):
    a, b = kernels.encode_pair(xs, ys)
    pure = kernels.lcs_length_ids_py(a, b)
    assert kernels.lcs_length(xs, ys) == pure
    compiled = getattr(kernels, "_lcs_length_ids_compiled", None)
    if compiled is not None:
        assert compiled(a, b) == pure


@given(ids, ids)
def test_symmetry_and_bounds(xs, ys):
    length = kernels.lcs_length(xs, ys)
    assert length == kernels.lcs_length(ys, xs)
    assert 0 <= length <= min(len(xs), len(ys))


@given(ids)
def test_identity(xs):
    assert kernels.lcs_length(xs, xs) == len(xs)


@given(ids, ids, st.integers(min_value=0, max_value=4))
def test_appending_common_token_adds_one(xs, ys, token):
    base = kernels.lcs_length(xs, ys)
    assert kernels.lcs_length(xs + [token], ys + [token]) == base + 1


def test_encode_pair_shares_ids():
    a, b = kernels.encode_pair(["x", "y", "x"], ["y", "z"])
    assert list(a) == [0, 1, 0]
    assert list(b) == [1, 2]


@given(st.lists(st.text(max_size=3), max_size=15), st.lists(st.text(max_size=3), max_size=15))
def test_encoding_preserves_equality_structure(xs, ys):
    a, b = kernels.encode_pair(xs, ys)
    joined_tokens = list(xs) + list(ys)
    joined_ids = list(a) + list(b)
    for i in range(len(joined_tokens)):
        for j in range(len(joined_tokens)):
            assert (joined_tokens[i] == joined_tokens[j]) == (
                joined_ids[i] == joined_ids[j]
            )


def test_word_level_tokens():
    assert kernels.lcs_length(
        "player kicked the ball".split(), "player kick the ball".split()
    ) == 3
    assert kernels.lcs_length(
        "player kicked the ball".split(), "the ball kick player".split()
    ) == 2


def test_empty_inputs():
    assert kernels.lcs_length([], []) == 0
    assert kernels.lcs_length(["a"], []) == 0
    assert kernels.lcs_length([], ["a"]) == 0
