"""Transcribed extremal-vertex tables for the R(s, t) family."""

from fractions import Fraction as F

LO, HI = F(4, 9), F(5, 9)


def vidx(*bits):
    return sum(b << i for i, b in enumerate(bits))


def vset(*vertices):
    return {vidx(*v) for v in vertices}


# main extremal vertices of R(s, t) on [4/9, 5/9]^2, by facet
TABLE1 = {
    1: vset((0, 0, 0, 0, 0), (0, 0, 1, 0, 0), (1, 0, 0, 0, 0), (1, 0, 1, 0, 0)),
    2: vset((0, 1, 0, 0, 0), (0, 1, 1, 0, 0), (1, 1, 0, 0, 0), (1, 1, 1, 0, 0)),
    3: vset((0, 0, 0, 1, 0), (0, 0, 1, 1, 0), (0, 1, 0, 1, 0), (0, 1, 1, 1, 0),
            (1, 0, 0, 1, 0), (1, 0, 1, 1, 0), (1, 1, 0, 1, 0), (1, 1, 1, 1, 0)),
    4: vset((0, 0, 1, 0, 1), (0, 0, 1, 1, 1), (0, 1, 1, 0, 1), (0, 1, 1, 1, 1),
            (1, 0, 1, 0, 1), (1, 0, 1, 1, 1), (1, 1, 1, 0, 1), (1, 1, 1, 1, 1)),
    5: vset((1, 0, 0, 0, 1), (1, 0, 0, 1, 1), (1, 1, 0, 0, 1), (1, 1, 0, 1, 1)),
    6: vset((0, 0, 0, 0, 1), (0, 0, 0, 1, 1), (0, 1, 0, 0, 1), (0, 1, 0, 1, 1)),
}

# additional extremal vertices on the boundary of the square: facet -> (condition, vertices)
TABLE2 = {
    1: (lambda s, t: t == LO, vset((0, 0, 0, 0, 1), (0, 0, 1, 0, 1), (1, 0, 0, 0, 1), (1, 0, 1, 0, 1))),
    2: (lambda s, t: t == HI, vset((0, 1, 0, 0, 1), (0, 1, 1, 0, 1), (1, 1, 0, 0, 1), (1, 1, 1, 0, 1))),
    5: (lambda s, t: s == HI, vset((1, 0, 0, 0, 0), (1, 0, 0, 1, 0), (1, 1, 0, 0, 0), (1, 1, 0, 1, 0))),
    6: (lambda s, t: s == LO, vset((0, 0, 0, 0, 0), (0, 0, 0, 1, 0), (0, 1, 0, 0, 0), (0, 1, 0, 1, 0))),
}


def facets_by_class(incidence):
    out = {}
    for v, fs in incidence.items():
        for j in fs:
            out.setdefault(j, set()).add(v)
    return out


def expected_classes(s, t):
    exp = {j: set(vs) for j, vs in TABLE1.items()}
    for j, (cond, extra) in TABLE2.items():
        if cond(s, t):
            exp[j] |= extra
    return exp
