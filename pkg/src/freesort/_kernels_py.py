"""Pure-Python twin of the compiled ``_kernels`` module (same API)."""


def _fold(row, k, table, unit):
    acc = unit
    for x in reversed(row):
        acc = table[x * k + acc]
    return acc


def fold_word(word, table, k, unit):
    return _fold([int(x) for x in word], int(k), [int(x) for x in table], int(unit))


def invariance_sweep(words, perms, table, k, unit):
    words = [list(map(int, w)) for w in words]
    perms = [list(map(int, p)) for p in perms]
    table = [int(x) for x in table]
    k, unit = int(k), int(unit)
    if words and perms and len(words[0]) != len(perms[0]):
        raise ValueError("word length and permutation size differ")
    for r, w in enumerate(words):
        base = _fold(w, k, table, unit)
        for j, p in enumerate(perms):
            if _fold([w[i] for i in p], k, table, unit) != base:
                return (r, j)
    return None


def _is_total_order(code, n):
    def bit(x, y):
        return (code >> (x * n + y)) & 1

    if not all(bit(x, x) for x in range(n)):
        return False
    for x in range(n):
        for y in range(n):
            if x != y and bit(x, y) == bit(y, x):
                return False
    for x in range(n):
        for y in range(n):
            if bit(x, y):
                for z in range(n):
                    if bit(y, z) and not bit(x, z):
                        return False
    return True


def total_order_codes(n):
    if n < 0 or n * n > 63:
        raise ValueError("table does not fit in 64 bits")
    return [code for code in range(1 << (n * n)) if _is_total_order(code, n)]
