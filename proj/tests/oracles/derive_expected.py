#!/usr/bin/env python3
"""Independent 50-digit evaluations used to freeze expected values in the C++ tests.

Run: python3 tests/oracles/derive_expected.py
Each line is `name = value`; the unit tests carry these numbers verbatim.
"""
from mpmath import mp, mpf, log, sqrt, exp

mp.dps = 50


def shannon(p):
    return -sum(x * log(x) for x in p if x > 0)


def tsallis_entropy(p, a):
    return (1 - sum(x ** a for x in p)) / (a - 1)


def tsallis_extropy(p, a):
    return (len(p) - 1 - sum((1 - x) ** a for x in p)) / (a - 1)


def distance(a1, a2, b1, b2):
    mid = (a1 + a2) / 2 - (b1 + b2) / 2
    return sqrt(mid ** 2 + ((a2 - a1) / 2) ** 2 / 3 + ((b2 - b1) / 2) ** 2 / 3)


def similarity(a1, a2, b1, b2, g):
    return 1 / (1 + g * distance(a1, a2, b1, b2))


TABLE_1A = [
    [(4.4, 5.8), (2.3, 4.4), (1.0, 1.9), (0.1, 0.6)],
    [(4.9, 7.0), (2.0, 3.4), (3.0, 5.1), (1.0, 1.7)],
    [(4.9, 7.9), (2.2, 3.8), (4.5, 6.9), (1.4, 2.5)],
]


def column(feature, value, g=5):
    s = [similarity(mpf(str(c[feature][0])), mpf(str(c[feature][1])), mpf(str(value)), mpf(str(value)), g)
         for c in TABLE_1A]
    t = sum(s)
    return [x / t for x in s]


def pipeline(sample, a, g=5):
    cols = [column(f, v, g) for f, v in enumerate(sample)]
    js = [tsallis_extropy(c, a) for c in cols]
    e = [exp(-j) for j in js]
    w = [x / sum(e) for x in e]
    fused = [sum(w[f] * cols[f][k] for f in range(4)) for k in range(3)]
    return cols, js, w, fused


def out(name, v):
    if isinstance(v, (list, tuple)):
        print(f"{name} = " + ", ".join(mp.nstr(x, 17) for x in v))
    else:
        print(f"{name} = {mp.nstr(v, 17)}")


p = [mpf("0.3058"), mpf("0.4148"), mpf("0.2794")]
out("shannon(0.3058,0.4148,0.2794)", shannon(p))
out("tsallis_entropy(0.3058,0.4148,0.2794; 0.5)", tsallis_entropy(p, mpf("0.5")))
out("binary(0.3; 1.5)", (1 - mpf("0.3") ** mpf("1.5") - mpf("0.7") ** mpf("1.5")) / mpf("0.5"))
u10 = [mpf(1) / 10] * 10
out("tsallis_extropy(uniform10; 0.5)", tsallis_extropy(u10, mpf("0.5")))
out("extropy(uniform3)", -3 * (mpf(2) / 3) * log(mpf(2) / 3))
for a in ("1.5", "3"):
    a = mpf(a)
    N = mpf(3)
    out(f"diffuni(N=3; {a})", (2 * N ** (a - 1) - N ** a - 1 + (N - 1) ** a) / ((a - 1) * N ** (a - 1)))
for N in (3, 100):
    N = mpf(N)
    out(f"G({int(N)})", log(N / (N - 2) * log(N - 1) / log(N)) / log(N / (N - 1)))
    out(f"confronto({int(N)})", [(N - 2) / (N - 1), log(N - 1) / log(N), N * (N - 2) / (N - 1) ** 2])
out("distance([4.4,5.8],[6.1,6.1])", distance(mpf("4.4"), mpf("5.8"), mpf("6.1"), mpf("6.1")))
out("similarity([0,2],[1,1]; 5)", similarity(0, 2, 1, 1, 5))
for sample in ((6.1, 3.0, 4.9, 1.8), (5.9, 3.0, 5.1, 1.8)):
    for a in ("0.5", "2"):
        cols, js, w, fused = pipeline(sample, mpf(a))
        for f, c in zip("SL SW PL PW".split(), cols):
            out(f"column{sample} {f}", c)
        out(f"extropies{sample} a={a}", js)
        out(f"weights{sample} a={a}", w)
        out(f"fused{sample} a={a}", fused)
table1b = [[mpf(x) for x in c] for c in (("0.3058", "0.4148", "0.2794"), ("0.2748", "0.3516", "0.3736"),
                                          ("0.1391", "0.3801", "0.4808"), ("0.1563", "0.3737", "0.4700"))]
for a in ("0.5", "0.7", "1.5", "2"):
    js = [tsallis_extropy(c, mpf(a)) for c in table1b]
    e = [exp(-j) for j in js]
    w = [x / sum(e) for x in e]
    out(f"table1b extropies a={a}", js)
    out(f"table1b weights a={a}", w)
    out(f"table1b fused a={a}", [sum(w[f] * table1b[f][k] for f in range(4)) for k in range(3)])
