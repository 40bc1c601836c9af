#!/usr/bin/env python3
"""Writes data/catalog.json.

Products for pair-table W rows are the member-product formulas (dumped from
q_product_expr). Products for T/S rows, sign-twisted rows and the single sums
used by the index-extraction relations were found once by exponent recognition
on the computed series and are pinned here as periodic exponent vectors.
"""
import json
import sys
from pathlib import Path


def f(sign, a, m, x=0):
    d = {"sign": sign, "a": a, "m": m}
    if x:
        d["x"] = x
    return d


def tp(sign, a, b, m):
    # (s q^a, s q^b, q^m; q^m)_inf
    return [f(sign, a, m), f(sign, b, m), f(1, m, m)]


def prod(num, den, scale=1):
    p = {"num": num, "den": den}
    if scale != 1:
        p["scale"] = scale
    return p


def periodic(a):
    # f = prod_m (1-q^m)^{-a_m} with a of period len(a)
    P = len(a)
    num, den = [], []
    for r, e in enumerate(a, start=1):
        (den if e > 0 else num).extend([f(1, r, P)] * abs(e))
    return prod(num, den)


def mbp(fam, d, e, k, case, i, sign=1, lam=0, twist=False, variant=None, q_negate=False):
    l = {"type": "mbp", "family": fam, "d": d, "e": e, "k": k, "case": case, "i": i,
         "x": {"sign": sign, "lam": lam}}
    if twist:
        l["twist"] = True
    if variant:
        l["variant"] = variant
    if q_negate:
        l["q_negate"] = True
    return l


def builtin(key, x=None):
    l = {"type": "builtin", "key": key}
    if x:
        l["x"] = x
    return l


records = []


def ident(id_, kind, label, lhs, rhs, notes="", skip=None):
    r = {"id": id_, "source": {"kind": kind, "label": label}, "lhs": lhs}
    if rhs is not None:
        r["rhs"] = rhs
    r["order"] = 100
    r["notes"] = notes
    if skip:
        r["skip"] = skip
    records.append(r)


def rel(id_, kind, label, relation, target, notes="", skip=None):
    r = {"id": id_, "source": {"kind": kind, "label": label}, "relation": relation}
    if target is not None:
        r["target"] = target
    r["order"] = 100
    r["notes"] = notes
    if skip:
        r["skip"] = skip
    records.append(r)


def slater(sn, lhs, rhs, notes="", skip=None):
    ident(f"SL{sn}", "slater", str(sn), lhs, rhs, notes, skip)


def slater_rel(sn, relation, target, notes="", skip=None, suffix=""):
    rel(f"SL{sn}{suffix}", "slater", str(sn), relation, target, notes, skip)


# ---- pair table: W rows, member product at x = 1
lemma = {
    1: ([(1, 1, 3), (1, 2, 3), (1, 3, 3)], [(1, 1, 1)]),
    3: ([(1, 1, 2), (1, 1, 2), (1, 2, 2)], [(1, 1, 1)]),
    7: ([(1, 2, 4), (1, 2, 4), (1, 4, 4)], [(1, 1, 1)]),
    9: ([(-1, 1, 4), (-1, 3, 4), (1, 4, 4)], [(1, 2, 2)]),
    14: ([(1, 1, 5), (1, 4, 5), (1, 5, 5)], [(1, 1, 1)]),
    15: ([(1, 1, 5), (1, 4, 5), (1, 5, 5)], [(1, 2, 2)]),
    18: ([(1, 2, 5), (1, 3, 5), (1, 5, 5)], [(1, 1, 1)]),
    19: ([(1, 2, 5), (1, 3, 5), (1, 5, 5)], [(1, 2, 2)]),
    31: ([(1, 1, 7), (1, 6, 7), (1, 7, 7)], [(1, 2, 2)]),
    32: ([(1, 2, 7), (1, 5, 7), (1, 7, 7)], [(1, 2, 2)]),
    33: ([(1, 3, 7), (1, 4, 7), (1, 7, 7)], [(1, 2, 2)]),
    38: ([(-1, 1, 8), (-1, 7, 8), (1, 8, 8)], [(1, 2, 2)]),
    39: ([(-1, 3, 8), (-1, 5, 8), (1, 8, 8)], [(1, 2, 2)]),
    40: ([(1, 1, 9), (1, 8, 9), (1, 9, 9)], [(1, 3, 3)]),
    41: ([(1, 3, 9), (1, 6, 9), (1, 9, 9)], [(1, 3, 3)]),
    42: ([(1, 4, 9), (1, 5, 9), (1, 9, 9)], [(1, 3, 3)]),
    44: ([(1, 2, 10), (1, 8, 10), (1, 10, 10)], [(1, 1, 1)]),
    46: ([(1, 4, 10), (1, 6, 10), (1, 10, 10)], [(1, 1, 1)]),
    50: ([(1, 2, 12), (1, 10, 12), (1, 12, 12)], [(1, 1, 1)]),
    51: ([(1, 4, 12), (1, 8, 12), (1, 12, 12)], [(1, 1, 1)]),
    53: ([(-1, 5, 12), (-1, 7, 12), (1, 12, 12)], [(1, 4, 4)]),
    56: ([(-1, 2, 24), (-1, 22, 24), (1, 24, 24)], [(1, 2, 2)]),
    57: ([(-1, 1, 12), (-1, 11, 12), (1, 12, 12)], [(1, 4, 4)]),
    58: ([(-1, 10, 24), (-1, 14, 24), (1, 24, 24)], [(1, 2, 2)]),
    59: ([(1, 2, 14), (1, 12, 14), (1, 14, 14)], [(1, 1, 1)]),
    60: ([(1, 4, 14), (1, 10, 14), (1, 14, 14)], [(1, 1, 1)]),
    61: ([(1, 6, 14), (1, 8, 14), (1, 14, 14)], [(1, 1, 1)]),
    85: ([(-1, 1, 4), (-1, 3, 4), (1, 4, 4)], [(1, 2, 2)]),
    90: ([(1, 3, 27), (1, 24, 27), (1, 27, 27)], [(1, 1, 1)]),
    91: ([(1, 6, 27), (1, 21, 27), (1, 27, 27)], [(1, 1, 1)]),
    92: ([(1, 9, 27), (1, 18, 27), (1, 27, 27)], [(1, 1, 1)]),
    93: ([(1, 12, 27), (1, 15, 27), (1, 27, 27)], [(1, 1, 1)]),
}


def lp(sn):
    n, d = lemma[sn]
    return prod([f(*t) for t in n], [f(*t) for t in d])


W = {
    1: ("S", 1, 1, 1, 1), 3: ("E", 1, 1, 1, 1), 7: ("E", 1, 1, 2, 2), 9: ("JS", 1, 1, 1, 1),
    14: ("S", 1, 1, 2, 1), 15: ("S", 1, 2, 1, 1), 18: ("S", 1, 1, 2, 2), 19: ("S", 1, 2, 1, 2),
    31: ("S", 1, 2, 2, 1), 32: ("S", 1, 2, 2, 2), 33: ("S", 1, 2, 2, 3), 38: ("JS", 1, 1, 2, 1),
    39: ("JS", 1, 1, 2, 2), 40: ("S", 1, 3, 2, 1), 41: ("S", 1, 3, 2, 3), 42: ("S", 1, 3, 2, 4),
    44: ("S", 2, 1, 2, 1), 46: ("S", 2, 1, 2, 2), 50: ("E", 2, 1, 3, 1), 51: ("E", 2, 1, 3, 2),
    53: ("JS", 1, 2, 2, 3), 56: ("JS", 2, 1, 3, 1), 57: ("JS", 1, 2, 2, 1), 58: ("JS", 2, 1, 3, 3),
    59: ("S", 2, 1, 3, 1), 60: ("S", 2, 1, 3, 2), 61: ("S", 2, 1, 3, 3), 85: ("JS", 1, 1, 1, 1),
    90: ("S", 3, 1, 4, 1), 91: ("S", 3, 1, 4, 2), 92: ("S", 3, 1, 4, 3), 93: ("S", 3, 1, 4, 4),
}
w_notes = {
    1: "pentagonal number theorem; both sides are 1",
    3: "euler1 with q -> -q",
    41: "catalogued with i = 3 as printed; this member is the trivial identity 1 = 1, the mod 9 product sits at i = 2",
    53: "the index-extraction relations use this series with q -> -q",
}

# rows are emitted in table order
P4 = [-1, -1, -1, 0]
rows = {}
for sn, (fam, d, e, k, i) in W.items():
    rows[sn] = lambda sn=sn, fam=fam, d=d, e=e, k=k, i=i: slater(
        sn, mbp(fam, d, e, k, "W", i), lp(sn), w_notes.get(sn, ""))

rows[2] = lambda: slater_rel(2, {"kind": "q_dilation", "operands": ["SL7"], "m": 2}, None,
                             "same as row 7 with q -> q^(1/2)",
                             skip="series (2) is not written out, so there is nothing to compare against")
rows[4] = lambda: slater(4, mbp("E", 1, 1, 1, "T", 1), periodic(P4))
rows[6] = lambda: (slater(6, mbp("S", 1, 1, 1, "W", 1, twist=True), periodic([2, 1, 0, 1, 2, 0]),
                          "sign variant of row 1: alpha_n twisted by (-1)^(n/d)"),
                   slater_rel(6, {"kind": "sign_variant", "operands": ["SL1"], "alpha_twist": True},
                              {"record": "SL6", "side": "rhs"}, suffix="-sv"))
rows[8] = lambda: slater(8, mbp("S", 1, 1, 2, "S", 1, variant="xq"),
                         prod([f(1, 4, 4)], [f(1, 1, 1)]),
                         "x = q specialisation with the (-q;q)_n weight; the 1/(1-q) prefactor is cleared")
rows[12] = lambda: slater(12, mbp("S", 1, 1, 2, "S", None), periodic([2, -1, 2, 0]),
                          "i column empty as printed; evaluated at x = 1")
rows[13] = lambda: slater_rel(13, {"kind": "linear_combination", "operands": ["SL8", "SL12"]}, None,
                              skip="coefficients and the combined series are not given")
rows[16] = lambda: slater(16, mbp("S", 1, 2, 2, "T", 1), None,
                          skip="member 1 needs an x value not reachable from x^e; x = 1 gives the row 20 identity")
rows[20] = lambda: slater(20, mbp("S", 1, 2, 2, "T", 2),
                          periodic([1, -1, 0, 1, 0, 0, 0, 0, 1, -1, 1, 0, 0, 0, 0, 1, 0, -1, 1, 0]))
rows[21] = lambda: slater_rel(21, {"kind": "sign_variant", "operands": ["SL20"], "alpha_twist": True},
                              {"product": periodic([1, 1, 2, 0, 0, -1, 2, 2, 1, -1, 1, 2, 2, -1, 0, 0, 2, 1, 1, 0])})
rows[23] = lambda: (slater(23, mbp("JS", 1, 1, 2, "T", 2, sign=-1), prod([f(1, 1, 2)], []),
                           "evaluated at x = -1"),
                    slater_rel(23, {"kind": "linear_combination", "operands": ["SL23"], "coeffs": [1]},
                               {"record": "SL3", "side": "rhs"}, "equivalent to row 3", suffix="-eq"))
rows[25] = lambda: slater(25, mbp("E", 1, 1, 2, "T", 2), periodic([1, 0, -1, 1, 1, -1, 1, 1, -1, 0, 1, 0]))
rows[27] = lambda: slater(27, mbp("E", 1, 2, 2, "W", 1, q_negate=True),
                          prod(tp(-1, 1, 5, 6), [f(1, 2, 2)]), "member product with q -> -q")
rows[29] = lambda: slater(29, mbp("JS", 1, 1, 2, "T", 1), periodic([1, 1, 1, 1, 1, -1, 1, 1, 1, 1, 1, 0]))
rows[34] = lambda: slater(34, mbp("S", 1, 1, 2, "T", 1, lam=2), prod(tp(1, 1, 7, 8) + [f(-1, 1, 2)], [f(1, 2, 2)]),
                          "x = q^2 in the lemma variable")
rows[36] = lambda: slater(36, mbp("S", 1, 1, 2, "T", 2), prod(tp(1, 3, 5, 8) + [f(-1, 1, 2)], [f(1, 2, 2)]))
for sn in (47, 48):
    rows[sn] = lambda sn=sn: slater_rel(sn, {"kind": "linear_combination", "operands": ["SL54", "SL49"]}, None,
                                        skip="coefficients and the combined series are not given")
rows[49] = lambda: slater_rel(49, {"kind": "sign_variant", "operands": ["SL56"], "alpha_twist": True}, None,
                              skip="the twisted member 1 is not a product under any tried specialisation")
rows[52] = lambda: slater(52, mbp("S", 2, 1, 2, "T", 2), periodic([1, 0]))
rows[54] = lambda: slater_rel(54, {"kind": "sign_variant", "operands": ["SL58"], "alpha_twist": True},
                              {"product": periodic([0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0])})
rows[55] = lambda: slater_rel(55, {"kind": "sign_variant", "operands": ["SL57"]},
                              {"product": prod(tp(1, 1, 11, 12), [f(1, 4, 4)])})
for sn, ops in ((66, ["SL71", "SL68"]), (67, ["SL71", "SL68"])):
    rows[sn] = lambda sn=sn, ops=ops: slater_rel(sn, {"kind": "linear_combination", "operands": ops}, None,
                                                 skip="coefficients and the combined series are not given")
rows[68] = lambda: slater_rel(68, {"kind": "sign_variant", "operands": ["SL69"], "alpha_twist": True}, None,
                              skip="operand row 69 is not reproduced")
rows[69] = lambda: slater(69, mbp("JS", 2, 1, 3, "T", 1), None,
                          skip="member 1 needs an x value not reachable from x^e; x = 1 gives the row 72 identity")
rows[70] = lambda: (slater(70, mbp("JS", 2, 1, 3, "T", 2), None,
                           skip="member 2 needs an x value not reachable from x^e; x = 1 gives the row 72 identity"),
                    slater_rel(70, {"kind": "sign_variant", "operands": ["SL70"], "alpha_twist": True}, None,
                               skip="operand row 70 is not reproduced", suffix="-sv"))
rows[71] = lambda: slater_rel(71, {"kind": "sign_variant", "operands": ["SL72"], "alpha_twist": True},
                              {"product": periodic([1, 0, 1, 1, 1, -1, 1, 1, 1, -1, 1, 1, 1, 0, 1, 0])})
rows[72] = lambda: slater(72, mbp("JS", 2, 1, 3, "T", 3),
                          periodic([1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0]))
rows[79] = lambda: slater(79, mbp("S", 2, 1, 3, "T", 3),
                          periodic([1, 0, 1, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0, 1, 0]),
                          "T at i = 3 as printed; x = 1")
rows[84] = lambda: slater_rel(84, {"kind": "linear_combination", "operands": ["SL9"], "coeffs": [1]},
                              {"record": "SL9", "side": "rhs"}, "identical to row 9")
rows[87] = lambda: slater_rel(87, {"kind": "linear_combination", "operands": ["SL27"], "coeffs": [1]},
                              {"record": "SL27", "side": "rhs"}, "identical to row 27")
rows[88] = lambda: slater_rel(88, {"kind": "linear_combination", "operands": ["SL90", "SL91"]}, None,
                              skip="coefficients and the combined series are not given")
rows[89] = lambda: slater_rel(89, {"kind": "linear_combination", "operands": ["SL93", "SL91"]}, None,
                              skip="coefficients and the combined series are not given")
for sn, ops in ((111, ["SL114", "SL115"]), (112, ["SL115", "SL116"]), (113, ["SL114", "SL116"])):
    rows[sn] = lambda sn=sn, ops=ops: slater_rel(sn, {"kind": "linear_combination", "operands": ops}, None,
                                                 skip="coefficients and the combined series are not given")
rows[114] = lambda: slater(114, mbp("S", 3, 1, 4, "T", 4),
                           periodic([1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 0, 1, 1, 0, 1, 1, 0, 0, 1, 1,
                                     1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 0]))
for sn, i in ((115, 3), (116, 2)):
    rows[sn] = lambda sn=sn, i=i: slater(sn, mbp("S", 3, 1, 4, "T", i), None,
                                         skip=f"member {i} needs an x value not reachable from x^e; x = 1 gives the row 114 identity")

# row 3 also states the q -> -q link to euler1; emitted after the classical block
for sn in sorted(rows):
    rows[sn]()

# ---- classical displays
qq = [f(1, 1, 1)]
q2 = [f(1, 2, 2)]
q4 = [f(1, 4, 4)]
q6 = [f(1, 6, 6)]
mq_q2 = [f(-1, 1, 2)]
mq2_q4 = [f(-1, 2, 4)]
classical = [
    ("euler1", prod(tp(1, 2, 2, 4), qq)),
    ("euler2", prod(tp(1, 1, 3, 4), qq)),
    ("eulerx", prod([f(-1, 0, 1, x=1)], [])),
    ("RR1", prod(tp(1, 2, 3, 5), qq)),
    ("RR2", prod(tp(1, 1, 4, 5), qq)),
    ("JS1", prod(tp(-1, 3, 5, 8), q2)),
    ("JS2", prod(tp(-1, 1, 7, 8), q2)),
    ("GG1", prod(tp(1, 3, 5, 8) + mq_q2, q2)),
    ("GG2", prod(tp(1, 1, 7, 8) + mq_q2, q2)),
]
for key, rhs in classical:
    ident(key, "classical", key, builtin(key, "formal" if key == "eulerx" else None), rhs,
          "x kept formal" if key == "eulerx" else "")
rel("SL3-qneg", "slater", "3", {"kind": "sign_variant", "operands": ["euler1"]},
    {"record": "SL3", "side": "rhs"}, "euler1 with q -> -q")

ident("LJS50A", "classical", "LJS50A", builtin("LJS50A"), prod(tp(1, 6, 6, 12), qq),
      "tilde-beta (2,1,3) into W")
ident("MP70a", "paper_new", "MP70a", builtin("MP70a"), prod(tp(1, 8, 8, 16) + mq_q2, q2),
      "tilde-beta (2,1,3) into T")

# ---- double sums
dsums = [
    ("new-mod8-a", builtin("Ftilde1234", "one"), prod(tp(1, 4, 4, 8), q2), "tilde-beta (1,2,3) into W"),
    ("new-mod8-b", builtin("Ftilde1231", "one"), prod(tp(1, 1, 7, 8), q2), "member 1 of the (1,2,3) tilde family at x = 1"),
    ("new-mod8-c", builtin("Ftilde1232", "one"), prod(tp(1, 2, 6, 8), q2), "member 2 of the (1,2,3) tilde family at x = 1"),
    ("new-mod8-d", builtin("Ftilde1233-x1-doubled"), prod(tp(1, 3, 5, 8), q2, scale=2),
     "member 3 of the (1,2,3) tilde family at x = 1; both sides doubled so (-1;q)_m stays integral"),
    ("new-mod10-a", builtin("S124W"), prod(tp(1, 5, 5, 10), q2), "tilde-beta (1,2,4) into W"),
    ("new-mod12-a", builtin("JS123T"), prod(tp(-1, 5, 7, 12) + mq2_q4, q4), "bar-beta (1,2,3) into T"),
    ("new-mod12-b", builtin("E123T"), prod(tp(1, 6, 6, 12) + mq2_q4, q4),
     "tilde-beta (1,2,3) into T; the malformed token (-q^2;q^4;n+r) read as (-q^2;q^4)_{n+r}"),
    ("new-mod12-c", builtin("E164T"), prod(tp(1, 6, 6, 12) + [f(-1, 3, 6)], q6), "tilde-beta (1,6,4) into T"),
    ("mod16", builtin("mod16"), prod(tp(-1, 7, 9, 16), qq), "bar-beta (2,1,4) into W"),
    ("new-mod16-a", builtin("JS123W"), prod(tp(-1, 7, 9, 16), q4), "bar-beta (1,2,3) into W"),
    ("new-mod16-b", builtin("JS124T"), prod(tp(-1, 7, 9, 16) + mq2_q4, q4), "bar-beta (1,2,4) into T"),
    ("new-mod16-c", builtin("E214W"), prod(tp(1, 8, 8, 16), qq), "tilde-beta (2,1,4) into W"),
    ("new-mod16-d", builtin("E224T"), prod(tp(1, 8, 8, 16) + mq_q2, q2), "tilde-beta (2,2,4) into T"),
    ("new-mod16-e", builtin("E124T"), prod(tp(1, 8, 8, 16) + mq2_q4, q4), "tilde-beta (1,2,4) into T"),
    ("new-mod18-a", builtin("E164W"), prod(tp(1, 9, 9, 18), q6), "tilde-beta (1,6,4) into W"),
    ("new-mod20-c", builtin("JS215W"), prod(tp(-1, 9, 11, 20), qq), "bar-beta (2,1,5) into W"),
    ("new-mod20-b", builtin("ex2"), prod(tp(-1, 9, 11, 20), q4), "bar-beta (1,2,4) into W"),
    ("new-mod20-a", builtin("ex1"), prod(tp(1, 10, 10, 20), qq), "tilde-beta (2,1,5) into W"),
    ("new-mod20-d", builtin("E225T"), prod(tp(1, 10, 10, 20) + mq_q2, q2), "tilde-beta (2,2,5) into T"),
    ("new-mod24-a", builtin("JS214T"), prod(tp(-1, 10, 14, 24) + mq_q2, q2), "bar-beta (2,1,4) into T"),
    ("mod24", builtin("mod24"), prod(tp(-1, 11, 13, 24), q2), "bar-beta (2,2,4) into W"),
    ("new-mod24-b", builtin("E224W"), prod(tp(1, 12, 12, 24), q2), "tilde-beta (2,2,4) into W"),
    ("new-mod24-c", builtin("E214T"), prod(tp(1, 12, 12, 24) + mq_q2, q2), "tilde-beta (2,1,4) into T"),
    ("new-mod28-b", builtin("JS225W"), prod(tp(-1, 13, 15, 28), q2), "bar-beta (2,2,5) into W"),
    ("new-mod28-a", builtin("ex3"), prod(tp(1, 14, 14, 28), q2), "tilde-beta (2,2,5) into W"),
    ("new-mod32-a", builtin("E215T"), prod(tp(1, 16, 16, 32) + mq_q2, q2), "tilde-beta (2,1,5) into T"),
]
for id_, lhs, rhs, notes in dsums:
    ident(id_, "paper_new", id_, lhs, rhs, notes)

# ---- single sums behind the index-extraction relations (products by recognition)
single = [
    ("SL4-sum", "4", prod([f(1, 1, 4), f(1, 2, 4), f(1, 3, 4)], []), "(-1)^n form; equals row 4"),
    ("SL4-sum-unsigned", "4", periodic([1, 0, -1, 1, 1, -1, 1, 1, -1, 0, 1, 0]), "row 4 series without (-1)^n; same product as row 25"),
    ("SL53-sum", "53", prod(tp(1, 5, 7, 12), q4), "row 53 series with q -> -q"),
    ("SL16-sum", "16", periodic([0, 0, 1, 0, 0, -1, 1, 1, 0, -1, 0, 1, 1, -1, 0, 0, 1, 0, 0, 0]), ""),
    ("SL20-sum", "20", periodic([1, -1, 0, 1, 0, 0, 0, 0, 1, -1, 1, 0, 0, 0, 0, 1, 0, -1, 1, 0]), "same product as row 20"),
    ("SL94-sum", "94", periodic([1, 1, 0, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 0, 1, 1, 0]), ""),
    ("SL96-sum", "96", periodic([1, 0, 1, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 0, 1, 0, 1, 0]), ""),
    ("SL98-sum", "98", periodic([1, 0, 1, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0, 1, 0]), ""),
    ("SL99-sum", "99", periodic([0, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0]), ""),
]
for id_, label, rhs, notes in single:
    ident(id_, "slater", label, builtin(id_), rhs, notes)

# ---- index-extraction relations
rel("splitSL53half-N", "paper_new", "splitSL53half", {"kind": "linear_combination", "operands": ["mod24"], "coeffs": [1]},
    {"builtin": "mod24-N"}, "regroup with N = n + r into a Gaussian-binomial inner sum")
rel("splitSL53", "paper_new", "splitSL53", {"kind": "average_of_sign_variants", "operands": ["SL53-sum"]},
    {"record": "mod24", "side": "rhs", "q_dilation": 2, "scale": 2},
    "A(q) + A(-q) compared with twice the mod 24 product at q^2")
rel("SL53-sum-row53", "slater", "53", {"kind": "sign_variant", "operands": ["SL53-sum"]},
    {"record": "SL53", "side": "rhs"}, "the single sum with q -> -q is the row 53 identity")
rel("splitSL4", "paper_new", "splitSL4", {"kind": "linear_combination", "operands": ["SL4-sum", "SL4-sum-unsigned"],
                                          "coeffs": [1, 1]},
    {"record": "SL53-sum", "side": "lhs", "q_negate": True, "scale": 2},
    "signed plus unsigned row 4 series against twice the q -> -q single sum")
rel("splitSL4-even", "paper_new", "splitSL4", {"kind": "parity_even", "operands": ["SL4-sum"]},
    {"record": "SL53-sum", "side": "lhs", "q_negate": True})
rel("SL4-sum-row4", "slater", "4", {"kind": "linear_combination", "operands": ["SL4-sum"], "coeffs": [1]},
    {"record": "SL4", "side": "rhs"})
rel("split20-even", "slater", "98", {"kind": "parity_even", "operands": ["SL20-sum"]},
    {"record": "SL98-sum", "side": "lhs", "q_dilation": 4})
rel("split20-odd", "slater", "94", {"kind": "parity_odd", "operands": ["SL20-sum"]},
    {"record": "SL94-sum", "side": "lhs", "q_dilation": 4, "shift": 1})
rel("split16-even", "slater", "99", {"kind": "parity_even", "operands": ["SL16-sum"]},
    {"record": "SL99-sum", "side": "lhs", "q_dilation": 4})
rel("split16-odd", "slater", "96", {"kind": "parity_odd", "operands": ["SL16-sum"]},
    {"record": "SL96-sum", "side": "lhs", "q_dilation": 4, "shift": 3})

ids = [r["id"] for r in records]
assert len(ids) == len(set(ids)), "duplicate ids"

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "catalog.json"
out.write_text(json.dumps(records, indent=1) + "\n")
print(f"{len(records)} records -> {out}")
