#!/usr/bin/env python3
"""Generate unipotent and nilpotent data packs for classical types.

Unipotent principal-series data for W(B_n) and W(D_n) comes from Lusztig
symbols. Nilpotent data for so_{2n+1}, sp_{2n} and so_{2n} is computed from
the classification of rational nilpotent orbits by partitions plus forms on
the multiplicity spaces (q odd, q = 1 mod 4). Green values are point counts of
Springer fibres, obtained by recursion over x-stable isotropic lines. Orbits
are those of the adjoint group.

    tools/gen_classical_data.py B3 C3 D4 --out data
    tools/gen_classical_data.py --selftest
"""
import argparse
import itertools
import json
import math
import sys
from fractions import Fraction
from functools import lru_cache

import sympy as sp

q = sp.Symbol("q")


def coeffs(expr):
    p = sp.Poly(sp.expand(expr), q, domain="QQ")
    out = [sp.Rational(c) for c in reversed(p.all_coeffs())]
    while out and out[-1] == 0:
        out.pop()
    return out


def coeffs_json(expr):
    res = []
    for c in coeffs(expr):
        c = sp.Rational(c)
        res.append(int(c) if c.q == 1 else f"{c.p}/{c.q}")
    return res


def partitions(n, maxpart=None):
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def hook_dim(p):
    n = sum(p)
    if n == 0:
        return 1
    conj = [sum(1 for x in p if x > j) for j in range(p[0])] if p else []
    hooks = 1
    for i, row in enumerate(p):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return math.factorial(n) // hooks


# ---------------------------------------------------------------- unipotent

def symbol_of(alpha, beta, defect):
    """Reduced symbol (S, T) for a bipartition; |S| = |T| + defect."""
    m = max(len(alpha) - defect, len(beta))
    a = sorted(list(alpha) + [0] * (m + defect - len(alpha)))
    b = sorted(list(beta) + [0] * (m - len(beta)))
    return tuple(x + i for i, x in enumerate(a)), tuple(x + i for i, x in enumerate(b))


def symbol_degree(S, T, n, family, degenerate=False):
    e = len(S) + len(T)
    num = sp.Integer(1)
    if family == "B":
        for i in range(1, n + 1):
            num *= q ** (2 * i) - 1
        twos = (e - 1) // 2
    else:
        num *= q**n - 1
        for i in range(1, n):
            num *= q ** (2 * i) - 1
        twos = (e - 2) // 2 + (1 if degenerate else 0)
    for X in (S, T):
        for x, y in itertools.combinations(sorted(X), 2):
            num *= q**y - q**x
    for x in S:
        for y in T:
            num *= q**x + q**y
    den = sp.Integer(2) ** twos
    k = e - 2
    while k >= 2:
        den *= q ** (k * (k - 1) // 2)
        k -= 2
    for X in (S, T):
        for x in X:
            for h in range(1, x + 1):
                den *= q ** (2 * h) - 1
    return sp.factor(sp.cancel(num / den))


def symbol_label(S, T, suffix=""):
    return "(" + "".join(map(str, S)) + ";" + "".join(map(str, T)) + ")" + suffix


def unipotent_B(n):
    out = []
    for k in range(n, -1, -1):
        for alpha in partitions(k):
            for beta in partitions(n - k):
                S, T = symbol_of(alpha, beta, 1)
                dim = math.comb(n, k) * hook_dim(alpha) * hook_dim(beta)
                out.append({"rho": symbol_label(S, T), "dim": dim, "degree": symbol_degree(S, T, n, "B")})
    return out


def unipotent_D(n):
    out = []
    seen = set()
    for k in range(n, -1, -1):
        for alpha in partitions(k):
            for beta in partitions(n - k):
                key = tuple(sorted([alpha, beta]))
                if key in seen:
                    continue
                seen.add(key)
                S, T = symbol_of(alpha, beta, 0)
                if alpha == beta:
                    dim = math.comb(n, k) * hook_dim(alpha) ** 2 // 2
                    deg = symbol_degree(S, T, n, "D", degenerate=True)
                    for s in ("+", "-"):
                        out.append({"rho": symbol_label(S, T, s), "dim": dim, "degree": deg})
                else:
                    dim = math.comb(n, k) * hook_dim(alpha) * hook_dim(beta)
                    out.append({"rho": symbol_label(S, T), "dim": dim, "degree": symbol_degree(S, T, n, "D")})
    return out


# ---------------------------------------------------------------- nilpotent
#
# A state is a tuple over part sizes 1..N of (multiplicity, disc) where disc
# is 0 (square) or 1 (non-square) for parts carrying an orthogonal form and
# None for parts carrying a symplectic form.

def form_parts(kind, i):
    """True when part i carries an orthogonal form on its multiplicity space."""
    return (i % 2 == 1) if kind == "orth" else (i % 2 == 0)


def iso_count(m, d):
    """Nonzero isotropic vectors in an m-dim quadratic space of disc d."""
    if m == 0:
        return sp.Integer(0)
    if m % 2 == 1:
        k = m // 2
        return q ** (2 * k) - 1
    k = m // 2
    eps = 1 if d == 0 else -1
    return (q**k - eps) * (q ** (k - 1) + eps)


def value_count(m, d, s):
    """Vectors with Q(v) in the square class s (s = 0 squares, 1 non-squares)."""
    if m == 0:
        return sp.Integer(0)
    if m % 2 == 1:
        k = m // 2
        eta = 1 if (s ^ d) == 0 else -1
        per = q ** (2 * k) + eta * q**k
    else:
        k = m // 2
        eps = 1 if d == 0 else -1
        per = q ** (2 * k - 1) - eps * q ** (k - 1)
    return (q - 1) / 2 * per


def order_O(m, d):
    if m == 0:
        return sp.Integer(1)
    if m % 2 == 1:
        k = m // 2
        r = 2 * q ** (k * k)
        for j in range(1, k + 1):
            r *= q ** (2 * j) - 1
        return r
    k = m // 2
    eps = 1 if d == 0 else -1
    r = 2 * q ** (k * (k - 1)) * (q**k - eps)
    for j in range(1, k):
        r *= q ** (2 * j) - 1
    return r


def order_Sp(m):
    k = m // 2
    r = q ** (k * k)
    for j in range(1, k + 1):
        r *= q ** (2 * j) - 1
    return r


def normalize(state):
    return tuple((m, d if m > 0 else (0 if d is not None else None)) for m, d in state)


def dimension_of(state):
    return sum((i + 1) * m for i, (m, _) in enumerate(state))


def stop_dim(kind, N):
    return {"B": 1, "D": 2, "C": 0}[kind]


@lru_cache(maxsize=None)
def springer_count(kind, state):
    """Number of rational Borel subalgebras containing x (Springer fibre)."""
    fkind = "sp" if kind == "C" else "orth"
    N = dimension_of(state)
    if N <= stop_dim(kind, N):
        return sp.Integer(1)
    total = sp.Integer(0)
    L = len(state)
    for k in range(1, L + 1):
        m, d = state[k - 1]
        if m == 0:
            continue
        weight = q ** sum(state[i][0] for i in range(k, L))
        ortho = form_parts(fkind, k)
        moves = []  # (number of vectors, new state)

        def with_changes(changes):
            st = list(state)
            for idx, (dm, dd) in changes.items():
                if idx == 0:
                    continue
                mm, od = st[idx - 1]
                nd = None if od is None else (od ^ dd)
                st[idx - 1] = (mm + dm, nd)
            return normalize(tuple(st))

        if ortho:
            moves.append((iso_count(m, d), with_changes({k: (-2, 0), k - 1: (2, 0)})))
            if not (fkind == "orth" and k == 1):
                for s in (0, 1):
                    moves.append((value_count(m, d, s), with_changes({k: (-1, s), k - 2: (1, s)})))
        else:
            moves.append((q**m - 1, with_changes({k: (-2, 0), k - 1: (2, 0)})))
        for count, new in moves:
            if count == 0:
                continue
            if any(mm < 0 for mm, _ in new):
                continue
            total += sp.expand(count * weight / (q - 1)) * springer_count(kind, new)
    return sp.expand(total)


def valid_partitions(kind, N):
    fkind = "sp" if kind == "C" else "orth"
    for p in partitions(N):
        mult = [p.count(i) for i in range(1, N + 1)]
        if all(mult[i - 1] % 2 == 0 for i in range(1, N + 1) if not form_parts(fkind, i)):
            yield p, mult


def rational_orbits(kind, n):
    """Rational orbits of the full isometry group: list of (partition, state)."""
    N = 2 * n + 1 if kind == "B" else 2 * n
    fkind = "sp" if kind == "C" else "orth"
    res = []
    for p, mult in valid_partitions(kind, N):
        form_idx = [i for i in range(1, N + 1) if form_parts(fkind, i) and mult[i - 1] > 0]
        for discs in itertools.product((0, 1), repeat=len(form_idx)):
            if fkind == "orth" and sum(discs) % 2 != 0:
                continue
            st = []
            for i in range(1, N + 1):
                if form_parts(fkind, i):
                    st.append((mult[i - 1], discs[form_idx.index(i)] if i in form_idx else 0))
                else:
                    st.append((mult[i - 1], None))
            res.append((p, normalize(tuple(st))))
    return res


def centralizer(kind, p, state):
    """(order, dimension) of the centralizer in O_N or Sp_N."""
    conj = [sum(1 for x in p if x > j) for j in range(p[0])]
    odd = sum(1 for x in p if x % 2 == 1)
    sq = sum(c * c for c in conj)
    dim_c = (sq - odd) // 2 if kind != "C" else (sq + odd) // 2
    red_dim = 0
    order = sp.Integer(1)
    for m, d in state:
        if m == 0:
            continue
        if d is None:
            red_dim += m * (m + 1) // 2
            order *= order_Sp(m)
        else:
            red_dim += m * (m - 1) // 2
            order *= order_O(m, d)
    return q ** (dim_c - red_dim) * order, dim_c


def group_order(kind, n):
    r = q ** (n * n)
    for j in range(1, n + 1):
        r *= q ** (2 * j) - 1
    if kind == "D":
        r = q ** (n * (n - 1)) * (q**n - 1)
        for j in range(1, n):
            r *= q ** (2 * j) - 1
    return r


def isometry_order(kind, n):
    if kind == "C":
        return group_order(kind, n)
    return 2 * group_order(kind, n)


def partition_label(p):
    out = []
    for v in sorted(set(p), reverse=True):
        out.append(f"{v}^{p.count(v)}")
    return " ".join(out)


def nilpotent_data(kind, n):
    N = 2 * n + 1 if kind == "B" else 2 * n
    dimG = N * (N - 1) // 2 if kind != "C" else N * (N + 1) // 2
    iso = isometry_order(kind, n)
    orbits = []
    for p, st in rational_orbits(kind, n):
        cent, dim_c = centralizer(kind, p, st)
        size = sp.cancel(iso / cent)
        green = springer_count(kind, st)
        very_even = kind == "D" and all(x % 2 == 0 for x in p)
        if very_even:
            for s in ("+", "-"):
                orbits.append({"p": p, "st": st, "size": sp.cancel(size / 2), "green": green,
                               "dim": dimG - dim_c, "suffix": s})
        else:
            orbits.append({"p": p, "st": st, "size": size, "green": green, "dim": dimG - dim_c, "suffix": ""})
    if kind in ("C", "D"):
        # similitudes with non-square multiplier fuse orbits
        fused = {}
        for o in orbits:
            flip = tuple((m, None if d is None else d ^ (m % 2)) for m, d in o["st"])
            key = (o["p"], o["suffix"], min(o["st"], normalize(flip), key=repr))
            if key in fused:
                f = fused[key]
                if sp.expand(f["green"] - o["green"]) != 0:
                    raise SystemExit(f"fused orbits disagree on Green values for {o['p']}")
                f["size"] = sp.cancel(f["size"] + o["size"])
            else:
                fused[key] = dict(o)
        orbits = list(fused.values())
    orbits.sort(key=lambda o: (o["dim"], o["p"], repr(o["st"]), o["suffix"]))
    # star suffixes tell rational forms of one partition apart
    seen = {}
    out = []
    for o in orbits:
        base = partition_label(o["p"]) + o["suffix"]
        k = seen.get(base, 0)
        seen[base] = k + 1
        out.append({"label": base + "*" * k, "orbit_dim": o["dim"], "size": sp.factor(o["size"]),
                    "green": sp.factor(o["green"])})
    return out


# ---------------------------------------------------------------- checks

def weyl_poincare(kind, n):
    degs = list(range(2, 2 * n + 1, 2)) if kind in "BC" else list(range(2, 2 * n - 1, 2)) + [n]
    r = sp.Integer(1)
    for d in degs:
        r *= sum(q**i for i in range(d))
    return sp.expand(r), degs


def check(kind, n, uni, nil):
    N_pos = n * n if kind in "BC" else n * (n - 1)
    PW, degs = weyl_poincare(kind, n)
    G = group_order(kind, n)
    assert sp.expand(sum(o["size"] for o in nil) - q ** (2 * N_pos)) == 0, "nilpotent cone count"
    assert sp.cancel(sum(o["size"] * o["green"] for o in nil) - G / (q - 1) ** n) == 0, "first orthogonality"
    W = math.prod(degs)
    assert sp.cancel(sum(o["size"] * o["green"] ** 2 for o in nil) - W * G / (q - 1) ** n) == 0, "second orthogonality"
    zero = [o for o in nil if o["orbit_dim"] == 0]
    assert len(zero) == 1 and sp.expand(zero[0]["green"] - PW) == 0, "zero orbit"
    if uni is not None:
        assert sum(u["dim"] ** 2 for u in uni) == W, "sum of squares"
        flag = sp.expand(sum(u["dim"] * u["degree"] for u in uni))
        assert sp.expand(flag - PW) == 0, "flag identity"


def as_json(ctype, uni, nil):
    j = {"cartan_type": ctype}
    if uni is not None:
        j["unipotent"] = [{"rho": u["rho"], "dim": u["dim"], "generic_degree": coeffs_json(u["degree"])} for u in uni]
    j["nilpotent"] = [{"label": o["label"], "orbit_dim": o["orbit_dim"], "size": coeffs_json(o["size"]),
                       "green": coeffs_json(o["green"])} for o in nil]
    return j


def build(ctype):
    kind, n = ctype[0], int(ctype[1:])
    uni = {"B": unipotent_B, "C": None, "D": unipotent_D}[kind]
    uni = uni(n) if uni else None
    nil = nilpotent_data(kind, n)
    check(kind, n, uni if uni is not None else unipotent_B(n), nil)
    return as_json(ctype, uni, nil)


def dump(j):
    lines = ["{", f' "cartan_type": "{j["cartan_type"]}",']
    for key in ("unipotent", "nilpotent"):
        if key not in j:
            continue
        lines.append(f' "{key}": [')
        rows = [" " + json.dumps(e, ensure_ascii=False) for e in j[key]]
        lines.append(",\n".join(" " + r for r in rows))
        lines.append(" ]" + ("," if key == "unipotent" and "nilpotent" in j else ""))
    lines.append("}")
    return "\n".join(lines) + "\n"


def selftest():
    bundled = json.load(open("data/B2.json"))
    fresh = build("B2")
    for key, fields in (("unipotent", ("dim", "generic_degree")), ("nilpotent", ("orbit_dim", "size", "green"))):
        a = sorted(json.dumps([e[f] for f in fields]) for e in bundled[key])
        b = sorted(json.dumps([e[f] for f in fields]) for e in fresh[key])
        if a != b:
            print(f"B2 {key} mismatch\n{a}\n{b}")
            return 1
    for t in ("B2", "C2", "B3", "C3", "D4", "D3"):
        build(t)
    print("selftest passed")
    return 0


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("types", nargs="*")
    ap.add_argument("--out", default="data")
    ap.add_argument("--selftest", action="store_true")
    a = ap.parse_args()
    if a.selftest:
        return selftest()
    for t in a.types:
        path = f"{a.out}/{t}.json"
        with open(path, "w") as f:
            f.write(dump(build(t)))
        print("wrote", path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
