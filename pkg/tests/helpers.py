import random

from carterd.perm import MarkedPermutation


def random_element(rng: random.Random, n: int) -> MarkedPermutation:
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    signs = [rng.choice((1, -1)) for _ in range(n)]
    if signs.count(-1) % 2:
        signs[rng.randrange(n)] *= -1
    return MarkedPermutation(tuple(s * p for s, p in zip(signs, perm)))


def all_classes(max_n: int, min_n: int = 4):
    for n in range(min_n, max_n + 1):
        for m in range(1, n // 2 + 1):
            yield n, m
