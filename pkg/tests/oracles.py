"""
Independent brute-force oracles. Nothing here imports from qschroeder.

Words are generated as all strings over E/D/N of a given length and filtered
by their endpoint, statistics are computed straight from their definitions,
and polynomials are plain coefficient lists.
"""
import itertools
import math


def all_words(length):
    return ["".join(t) for t in itertools.product("EDN", repeat=length)]


def ends_at(w, m, n):
    x = sum(1 for c in w if c in "ED")
    y = sum(1 for c in w if c in "DN")
    return (x, y) == (m, n)


def above_diagonal(w):
    x = y = 0
    for c in w:
        if c in "ED":
            x += 1
        if c in "DN":
            y += 1
        if y > x:
            return True
    return False


def del_words(m, n, l):
    return [w for w in all_words(l) if ends_at(w, m, n)]


def sch_words(n, l):
    return [w for w in del_words(n, n, l) if not above_diagonal(w)]


def bdel_words(n, l):
    return [w for w in del_words(n, n, l) if above_diagonal(w)]


def maj(w, order):
    """order is a string like 'EDN', smallest first."""
    total = 0
    for i in range(1, len(w)):
        if order.index(w[i - 1]) > order.index(w[i]):
            total += i
    return total


def distribution(words, order):
    """Coefficient list of sum q^maj, trailing zeros stripped."""
    coeffs = []
    for w in words:
        k = maj(w, order)
        while len(coeffs) <= k:
            coeffs.append(0)
        coeffs[k] += 1
    return coeffs


def inversion_binomial(a, b):
    """[a choose b]_q as sum of q^inv over 0/1 words with b ones."""
    coeffs = []
    for ones in itertools.combinations(range(a), b):
        word = [1 if i in ones else 0 for i in range(a)]
        inv = sum(1 for i in range(a) for j in range(i + 1, a) if word[i] > word[j])
        while len(coeffs) <= inv:
            coeffs.append(0)
        coeffs[inv] += 1
    return coeffs


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def large_schroeder(n):
    r = [1]
    for k in range(1, n + 1):
        r.append(r[k - 1] + sum(r[i] * r[k - 1 - i] for i in range(k)))
    return r[n]


def multinomial(*parts):
    out = math.factorial(sum(parts))
    for p in parts:
        out //= math.factorial(p)
    return out


def psi(w):
    x = y = 0
    for i, c in enumerate(w):
        if c in "ED":
            x += 1
        if c in "DN":
            y += 1
        if y > x:
            j = i
            while j + 1 < len(w) and w[j + 1] == "N":
                j += 1
            return w[:j] + "E" + w[j + 1:]
    raise ValueError(w)
