from __future__ import annotations

from hypothesis import HealthCheck, settings, strategies as st

from braidforge.words import A, Sigma, Word, free_reduce, pure_pairs

settings.register_profile("braidforge", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("braidforge")


def raw_syllables(symbols, max_len: int = 12, exponents=(1, -1, 2, -2)):
    return st.lists(st.tuples(st.sampled_from(symbols), st.sampled_from(exponents)), max_size=max_len)


def words(symbols, max_len: int = 12, exponents=(1, -1, 2, -2)):
    return raw_syllables(symbols, max_len, exponents).map(free_reduce)


def pure_words(n: int, max_len: int = 6):
    return words(pure_pairs(n), max_len)


def short_pure_words(n: int, max_len: int = 8):
    """Words small enough for the Artin oracle, whose images grow exponentially with length."""
    return words(pure_pairs(n), max_len, (1, -1))


def braid_syllables(n: int, max_len: int = 10):
    return words([Sigma(i) for i in range(1, n)], max_len)


FREE_LETTERS = ["a", "b", "c"]
