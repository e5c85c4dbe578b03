"""Independent brute-force references. Nothing here imports the search code."""
import cmath
import itertools
import math


def unit_sum_float(q, x):
    return sum(cmath.exp(2j * math.pi * a * x / q) for a in range(1, q + 1) if math.gcd(a, q) == 1)


def ref_weight_table(q, kind):
    """Homogeneous weights from the case definition (standard) or a rounded
    complex character sum (honold)."""
    if kind == "standard":
        p = next(d for d in range(2, q + 1) if q % d == 0)
        k = round(math.log(q, p))
        assert p**k == q
        out = []
        for x in range(q):
            if x == 0:
                out.append(0)
            elif x % p ** (k - 1) == 0:
                out.append(p ** (k - 1))
            else:
                out.append((p - 1) * p ** (k - 2) if k >= 2 else 1)
        return out
    phi = sum(1 for a in range(1, q + 1) if math.gcd(a, q) == 1)
    return [round((phi - unit_sum_float(q, x)).real) for x in range(q)]


def ref_fourier(m):
    return [[(i * j) % m for j in range(m)] for i in range(m)]


def ref_kron(a, b, q):
    na, nb = len(a), len(b)
    return [
        [(a[i][j] + b[k][l]) % q for j in range(na) for l in range(nb)]
        for i in range(na)
        for k in range(nb)
    ]


def ref_bh_code(rows, q):
    return sorted({tuple((e + s) % q for e in r) for r in rows for s in range(q)})


def ref_covering_radius(words, q, weights):
    """Unpruned, single-threaded max-min over all of Z_q^n in lexicographic order."""
    n = len(words[0])
    best, hole = -1, None
    for x in itertools.product(range(q), repeat=n):
        d = min(sum(weights[(x[i] - c[i]) % q] for i in range(n)) for c in words)
        if d > best:
            best, hole = d, x
    return best, hole


def ref_bent_vectors(rows, q):
    """All x in Z_q^n with |(Hx)_i|^2 == n, by floating evaluation."""
    n = len(rows)
    z = [cmath.exp(2j * math.pi * k / q) for k in range(q)]
    out = []
    for x in itertools.product(range(q), repeat=n):
        if all(abs(abs(sum(z[(r[k] + x[k]) % q] for k in range(n))) ** 2 - n) < 1e-9 for r in rows):
            out.append(x)
    return out
