from functools import lru_cache

from dhseq import numtheory


@lru_cache(maxsize=None)
def valid_moduli(max_n: int):
    return tuple(numtheory.enumerate_valid_moduli(max_n))
