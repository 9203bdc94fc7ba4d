#!/usr/bin/env python3
"""Derive the built-in catalog models from toric fans.

Every catalog variety (and every point blow-up used by a point profile) is a
smooth projective toric variety obtained from P^2, P^1xP^1 or P^3 by blowing
up torus-fixed points. For such varieties

  * the Mori cone is generated by the torus-invariant curves,
  * the pseudo-effective divisor cone is generated by the invariant divisors,

so all four positive cones follow from the fan by exact enumeration. The
script is an independent oracle for the C++ library: it shares no code with
it, and its output (catalog/*.json) is what the library loads and validates.

Volumes of surfaces come from Zariski chambers; every volume polynomial is
cross-checked against the lattice-polytope volume n! * vol(P_D).

Usage: python3 tools/derive_catalog.py [outdir]
"""

import itertools
import json
import math
import random
import sys
from fractions import Fraction as Q
from pathlib import Path


# ---------------------------------------------------------------------------
# exact linear algebra


def rank(rows):
    m = [list(map(Q, r)) for r in rows]
    rk = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rk, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(len(m)):
            if i != rk and m[i][c] != 0:
                f = m[i][c] / m[rk][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rk])]
        rk += 1
    return rk


def solve(a, b):
    """Unique solution of a square nonsingular system."""
    n = len(a)
    m = [list(map(Q, a[i])) + [Q(b[i])] for i in range(n)]
    for c in range(n):
        piv = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] / m[i][i] for i in range(n)]


def nullspace_1(rows, d):
    """Generator of a one-dimensional kernel (rows have rank d-1)."""
    m = [list(map(Q, r)) for r in rows]
    pivcols = []
    rk = 0
    for c in range(d):
        piv = next((i for i in range(rk, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        m[rk] = [x / m[rk][c] for x in m[rk]]
        for i in range(len(m)):
            if i != rk and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rk])]
        pivcols.append(c)
        rk += 1
    free = [c for c in range(d) if c not in pivcols]
    assert len(free) == 1
    v = [Q(0)] * d
    v[free[0]] = Q(1)
    for i, c in enumerate(pivcols):
        v[c] = -m[i][free[0]]
    return v


def primitive(v):
    den = 1
    for x in v:
        den = den * Q(x).denominator // math.gcd(den, Q(x).denominator)
    iv = [int(Q(x) * den) for x in v]
    g = 0
    for x in iv:
        g = math.gcd(g, abs(x))
    iv = [x // g for x in iv]
    return tuple(iv)


def dot(a, b):
    return sum(Q(x) * Q(y) for x, y in zip(a, b))


def matvec(m, v):
    return [dot(row, v) for row in m]


def transpose(m):
    return [list(r) for r in zip(*m)]


def extreme_rays(normals, d):
    """Extreme rays of the pointed cone {x : n.x >= 0 for n in normals}."""
    out = set()
    for sub in itertools.combinations(normals, d - 1):
        if rank(sub) != d - 1:
            continue
        v = nullspace_1(sub, d)
        for s in (1, -1):
            w = [s * x for x in v]
            if all(dot(n, w) >= 0 for n in normals):
                out.add(primitive(w))
    return sorted(out)


def minimal_generators(rays, d):
    """Drop generators that are not extreme (cone assumed full-dimensional)."""
    facets = extreme_rays([list(r) for r in rays], d)
    keep = set()
    for r in rays:
        tight = [f for f in facets if dot(f, r) == 0]
        if rank(tight) == d - 1:
            keep.add(primitive(r))
    return sorted(keep)


# ---------------------------------------------------------------------------
# toric varieties


class Toric:
    def __init__(self, rays, cones, basis_reps, basis_labels):
        self.rays = [tuple(r) for r in rays]
        self.cones = [tuple(sorted(c)) for c in cones]
        self.dim = len(rays[0])
        # basis divisor classes, each a dict ray-index -> coefficient
        self.basis_reps = basis_reps
        self.basis_labels = basis_labels

    def blowup(self, cone, label):
        """Star subdivision at the torus-fixed point of a maximal cone."""
        cone = tuple(sorted(cone))
        assert cone in self.cones
        w = tuple(sum(self.rays[i][k] for i in cone) for k in range(self.dim))
        rays = self.rays + [w]
        wi = len(rays) - 1
        cones = [c for c in self.cones if c != cone]
        for drop in cone:
            cones.append(tuple(sorted([i for i in cone if i != drop] + [wi])))
        # pullback of a torus-invariant divisor: the new coefficient is the sum
        # of the coefficients on the generators of the subdivided cone
        reps = []
        for rep in self.basis_reps:
            r = dict(rep)
            r[wi] = sum(rep.get(i, 0) for i in cone)
            reps.append(r)
        reps.append({wi: 1})
        return Toric(rays, cones, reps, self.basis_labels + [label])

    def point_on(self, cone):
        """Ray indices of the invariant divisors through the fixed point."""
        return set(cone)

    def ray_classes(self):
        """Coordinates of every invariant divisor D_rho in the chosen basis."""
        nr = len(self.rays)
        rels = [[self.rays[r][k] for r in range(nr)] for k in range(self.dim)]
        basis = [[rep.get(r, 0) for r in range(nr)] for rep in self.basis_reps]
        nb = len(basis)
        assert nb == nr - self.dim, "basis size must equal Picard rank"
        assert rank(basis + rels) == nr, "basis does not span Pic"
        cols = basis + rels  # D_rho = sum c_k basis_k + sum m_j rel_j
        mat = transpose(cols)
        out = []
        for r in range(nr):
            e = [0] * nr
            e[r] = 1
            sol = solve(mat, e)
            out.append(sol[:nb])
        return out

    def walls(self):
        n = self.dim
        seen = {}
        for c in self.cones:
            for tau in itertools.combinations(c, n - 1):
                seen.setdefault(tau, []).append(c)
        out = []
        for tau, cs in seen.items():
            assert len(cs) == 2, "fan must be complete"
            k = next(i for i in cs[0] if i not in tau)
            l = next(i for i in cs[1] if i not in tau)
            # u_k + u_l + sum b_i u_i = 0
            target = [-(self.rays[k][j] + self.rays[l][j]) for j in range(n)]
            a = transpose([list(self.rays[i]) for i in tau])
            # least-squares free exact solve: n equations, n-1 unknowns
            sub = None
            for rows in itertools.combinations(range(n), n - 1):
                if rank([a[r] for r in rows]) == n - 1:
                    sub = rows
                    break
            b = solve([a[r] for r in sub], [target[r] for r in sub])
            chk = [sum(b[i] * self.rays[tau[i]][j] for i in range(n - 1)) for j in range(n)]
            assert chk == target
            inter = {k: Q(1), l: Q(1)}
            for i, t in enumerate(tau):
                inter[t] = b[i]
            out.append((tau, inter))
        return out

    def curve_vectors(self):
        """For each invariant curve: (B_k . C)_k over basis divisors."""
        vecs = []
        for tau, inter in self.walls():
            v = [sum(Q(rep.get(r, 0)) * inter.get(r, 0) for r in rep) for rep in self.basis_reps]
            vecs.append((tau, v))
        return vecs

    def polytope_volume(self, coeffs_basis):
        """n! * Euclidean volume of P_D for D given in basis coordinates."""
        import numpy as np
        from scipy.optimize import linprog
        from scipy.spatial import ConvexHull, HalfspaceIntersection

        nr = len(self.rays)
        a = [0.0] * nr
        for k, rep in enumerate(self.basis_reps):
            for r, c in rep.items():
                a[r] += float(coeffs_basis[k]) * c
        # P_D = {m : <m, u_r> >= -a_r}
        A = np.array([[-x for x in u] for u in self.rays], dtype=float)
        b = np.array(a, dtype=float)
        n = self.dim
        # Chebyshev centre for an interior point
        c = np.zeros(n + 1)
        c[-1] = -1
        norms = np.linalg.norm(A, axis=1)
        res = linprog(c, A_ub=np.hstack([A, norms[:, None]]), b_ub=b,
                      bounds=[(None, None)] * n + [(0, None)])
        if res.status != 0 or res.x[-1] < 1e-9:
            return 0.0
        hs = HalfspaceIntersection(np.hstack([A, -b[:, None]]), res.x[:n])
        return ConvexHull(hs.intersections).volume * math.factorial(n)


# ---------------------------------------------------------------------------
# cones of a toric variety in (divisor basis, curve basis) coordinates


def cones_of(t, pairing):
    classes = t.ray_classes()
    d = len(t.basis_reps)
    curves = []
    for tau, v in t.curve_vectors():
        # B.C = P gamma
        gamma = solve(pairing, v)
        assert all(x.denominator == 1 for x in gamma), (tau, gamma)
        curves.append(gamma)
    eff_div = minimal_generators([primitive(c) for c in classes], d)
    eff_curves = minimal_generators([primitive(c) for c in curves if any(c)], d)
    # Nef = {D : D.gamma >= 0 for gamma in Eff_1}; D.gamma = D^T P gamma
    nef = extreme_rays([matvec(pairing, g) for g in eff_curves], d)
    pt = transpose(pairing)
    mov_curves = extreme_rays([matvec(pt, dv) for dv in eff_div], d)
    return {
        "classes": classes,
        "curves": curves,
        "nef": nef,
        "eff_div": eff_div,
        "eff_curves": eff_curves,
        "mov_curves": mov_curves,
    }


def pair(p, d, g):
    return dot(d, matvec(p, g))


# ---------------------------------------------------------------------------
# polynomials: dict exponent-tuple -> Fraction


def poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def linear_poly(coeffs):
    n = len(coeffs)
    out = {}
    for i, c in enumerate(coeffs):
        if c != 0:
            e = [0] * n
            e[i] = 1
            out[tuple(e)] = Q(c)
    return out


def quad_form_poly(mat_rows):
    """Polynomial v^T M v where M rows are linear forms... M as list of lists."""
    n = len(mat_rows)
    out = {}
    for i in range(n):
        for j in range(n):
            c = Q(mat_rows[i][j])
            if c == 0:
                continue
            e = [0] * n
            e[i] += 1
            e[j] += 1
            out[tuple(e)] = out.get(tuple(e), 0) + c
    return {e: c for e, c in out.items() if c != 0}


def poly_eval(p, v):
    total = Q(0)
    for e, c in p.items():
        term = Q(c)
        for x, k in zip(v, e):
            term *= Q(x) ** k
        total += term
    return total


def poly_json(p):
    return [{"exp": list(e), "coef": fstr(c)} for e, c in sorted(p.items(), reverse=True)]


def fstr(x):
    x = Q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def vjson(v):
    return [fstr(x) for x in v]


def cone_json(rays):
    return {"rays": [vjson(r) for r in rays]}


# ---------------------------------------------------------------------------
# surfaces: Zariski chambers


def zariski_chambers(pairing, nef, neg_curves):
    """Chambers of the volume function on a surface with the given negative curves."""
    d = len(pairing)
    chambers = []
    idx = list(range(len(neg_curves)))
    for k in range(0, len(idx) + 1):
        for sub in itertools.combinations(idx, k):
            curves = [neg_curves[i] for i in sub]
            gram = [[pair(pairing, a, b) for b in curves] for a in curves]
            if k and not negative_definite(gram):
                continue
            face = [r for r in nef if all(pair(pairing, r, c) == 0 for c in curves)]
            gens = face + [primitive(c) for c in curves]
            if not gens or rank(gens) < d:
                continue
            # P(L) = L - sum c_i C_i with gram * c = (L.C_j)
            # linear map on coordinates; volume = P^T Q P
            pmat = []  # P = M L, M = I - C^T G^{-1} C Q
            ident = [[Q(int(i == j)) for j in range(d)] for i in range(d)]
            if k:
                ginv = invert(gram)
                # (L.C_j) = sum_a L_a (Q C_j)_a
                qc = [matvec(pairing, c) for c in curves]
                m = [[ident[i][j] - sum(curves[a][i] * ginv[a][b] * qc[b][j]
                                        for a in range(k) for b in range(k))
                      for j in range(d)] for i in range(d)]
            else:
                m = ident
            # vol(L) = (M L)^T Q (M L) = L^T (M^T Q M) L
            mt = transpose(m)
            qm = [[sum(pairing[i][a] * m[a][j] for a in range(d)) for j in range(d)] for i in range(d)]
            form = [[sum(mt[i][a] * qm[a][j] for a in range(d)) for j in range(d)] for i in range(d)]
            rays = minimal_generators(gens, d)
            chambers.append({"support": sub, "rays": rays, "poly": quad_form_poly(form), "pmap": m})
    return chambers


def invert(m):
    n = len(m)
    cols = []
    for j in range(n):
        e = [Q(int(i == j)) for i in range(n)]
        cols.append(solve(m, e))
    return transpose(cols)


def negative_definite(g):
    n = len(g)
    for k in range(1, n + 1):
        sub = [row[:k] for row in g[:k]]
        det = determinant(sub)
        if (det > 0) != (k % 2 == 0):
            return False
        if det == 0:
            return False
    return True


def determinant(m):
    m = [list(map(Q, r)) for r in m]
    n = len(m)
    det = Q(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Q(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


# ---------------------------------------------------------------------------
# exit parameters (independent oracle for golden values)


def facets_of(rays, form):
    """Inward normals of cone(rays) with respect to <f, v> = f^T form v."""
    d = len(rays[0])
    return extreme_rays([matvec(form, r) for r in rays], d)


def exit_param(rays, form, base, direction):
    """sup{t >= 0 : base + t dir in cone(rays)}; <f, v> = f^T form v."""
    fs = facets_of(rays, form)
    best = None
    for f in fs:
        fb = dot(f, matvec(form, base))
        assert fb >= 0
        fd = dot(f, matvec(form, direction))
        if fd < 0:
            t = fb / -fd
            best = t if best is None else min(best, t)
    return best


# ---------------------------------------------------------------------------
# model assembly


def block_pairing(p):
    d = len(p)
    out = [[Q(0)] * (d + 1) for _ in range(d + 1)]
    for i in range(d):
        for j in range(d):
            out[i][j] = Q(p[i][j])
    out[d][d] = Q(-1)
    return out


def build_model(desc):
    t = desc["toric"]
    p = [[Q(x) for x in row] for row in desc["pairing"]]
    n = t.dim
    d = len(p)
    c = cones_of(t, p)
    pt = transpose(p)
    model = {
        "name": desc["name"],
        "dim": n,
        "divisor_basis": desc["divisor_basis"],
        "curve_basis": desc["curve_basis"],
        "pairing": [vjson(r) for r in p],
        "top_intersection": poly_json(desc["top"]),
        "nef": cone_json(c["nef"]),
        "eff_div": cone_json(c["eff_div"]),
        "eff_curves": cone_json(c["eff_curves"]),
        "mov_curves": cone_json(c["mov_curves"]),
    }
    labels = desc.get("labels", {})
    model["prime_divisors"] = [
        {"label": labels.get(primitive(r), "D" + "".join(map(str, r))), "class": vjson(r)}
        for r in c["eff_div"]
    ]
    neg = []
    if n == 2:
        seen = set()
        for g in c["curves"]:
            si = pair(p, g, g)
            if si < 0 and primitive(g) not in seen:
                seen.add(primitive(g))
                neg.append({"label": labels[primitive(g)], "class": vjson(g), "self_int": fstr(si)})
        chambers = zariski_chambers(p, c["nef"], [[Q(x) for x in nc["class"]] for nc in neg])
        model["negative_curves"] = neg
        model["volume"] = [{"rays": [vjson(r) for r in ch["rays"]], "poly": poly_json(ch["poly"])}
                           for ch in chambers]
        vol_chambers = [(ch["rays"], ch["poly"]) for ch in chambers]
    else:
        model["negative_curves"] = []
        model["volume"] = [{"rays": [vjson(r) for r in rays], "poly": poly_json(poly)}
                           for rays, poly in desc["volume"]]
        vol_chambers = desc["volume"]
    check_volume(t, c, vol_chambers, desc["top"])
    model["provenance"] = desc["provenance"]
    model["vanishing_cases"] = desc.get("vanishing_cases", [])

    profiles = []
    for prof in desc["profiles"]:
        y = t.blowup(prof["cone"], "E")
        py = block_pairing(p)
        cy = cones_of(y, py)
        lies_on = prof.get("lies_on", [])
        through = t.point_on(prof["cone"])
        # Seshadri-exceptional curves: Mori generators meeting E positively
        curves = []
        for g in cy["eff_curves"]:
            mult = -g[-1]  # E.C = -gamma_E
            if mult > 0:
                down = list(g[:-1])
                curves.append({"label": curve_label(down, labels, "C"), "class": vjson(down),
                               "mult": fstr(mult)})
        divisors = []
        for dv in cy["eff_div"]:
            mult = -dv[-1]  # D' = pi^*D - m E
            if mult > 0:
                down = list(dv[:-1])
                divisors.append({"label": curve_label(down, labels, "D"), "class": vjson(down),
                                 "mult": fstr(mult)})
        profiles.append({
            "name": prof["name"],
            "lies_on": lies_on,
            "provenance": prof["provenance"],
            "blowup": {
                "pairing": [vjson(r) for r in py],
                "nef": cone_json(cy["nef"]),
                "eff_div": cone_json(cy["eff_div"]),
                "eff_curves": cone_json(cy["eff_curves"]),
                "mov_curves": cone_json(cy["mov_curves"]),
            },
            "curves_through_x": curves,
            "divisors_through_x": divisors,
            "_cy": cy,
            "_py": py,
        })
    model["profiles"] = profiles
    return model, c


def curve_label(cls, labels, prefix):
    return labels.get(primitive(cls), prefix + "(" + ",".join(fstr(x) for x in cls) + ")")


def check_volume(t, c, chambers, top):
    """Chamber polynomials versus lattice-polytope volume, plus top power on nef."""
    rng = random.Random(11)
    d = len(t.basis_reps)
    n = t.dim
    for rays, poly in chambers:
        for _ in range(6):
            w = [rng.randint(1, 5) for _ in rays]
            v = [sum(Q(w[i]) * rays[i][k] for i in range(len(rays))) for k in range(d)]
            exact = poly_eval(poly, v)
            approx = t.polytope_volume(v)
            assert abs(float(exact) - approx) < 1e-6 * max(1.0, approx), (rays, v, exact, approx)
    # top power equals volume on nef rays/sums
    nef = c["nef"]
    for _ in range(10):
        w = [rng.randint(0, 4) for _ in nef]
        v = [sum(Q(w[i]) * nef[i][k] for i in range(len(nef))) for k in range(d)]
        approx = t.polytope_volume(v)
        assert abs(float(poly_eval(top, v)) - approx) < 1e-6 * max(1.0, approx), (v, approx)


# ---------------------------------------------------------------------------
# the five catalog varieties


def p2():
    return Toric([(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (2, 0)], [{2: 1}], ["H"])


def p1p1():
    return Toric([(1, 0), (-1, 0), (0, 1), (0, -1)], [(0, 2), (2, 1), (1, 3), (3, 0)],
                 [{0: 1}, {2: 1}], ["f1", "f2"])


def p3():
    rays = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]
    cones = list(itertools.combinations(range(4), 3))
    return Toric(rays, cones, [{3: 1}], ["H"])


def model_descriptions():
    out = []
    one = [[1]]

    t = p2()
    out.append({
        "name": "P2", "toric": t, "pairing": one,
        "divisor_basis": ["H"], "curve_basis": ["l"],
        "top": {(2,): Q(1)},
        "labels": {(1,): "line"},
        "provenance": "Toric fan of P^2 (rays e1, e2, -e1-e2). Blow-up at a fixed point gives "
                      "Bl_1P^2; cones from invariant curves/divisors. Homogeneous, so one profile.",
        "profiles": [{"name": "generic", "cone": (0, 1),
                      "provenance": "Any point; PGL_3 acts transitively."}],
        "extra_golden": [
            {"op": "vol", "class": ["3"], "expected": "9", "note": "[TRIVIAL] (3H)^2 = 9"},
            {"op": "volhat", "class": ["1"], "expected": "1",
             "note": "[DERIVED] one-ray cone, (l.H / vol(H)^(1/2))^2 = 1"},
            {"op": "s_curves", "profile": "generic", "class": ["1"], "expected": "1",
             "note": "[DERIVED] line through x, H.l / 1 = 1"},
        ],
    })

    t = p1p1()
    out.append({
        "name": "P1xP1", "toric": t, "pairing": [[0, 1], [1, 0]],
        "divisor_basis": ["f1", "f2"], "curve_basis": ["f1", "f2"],
        "top": {(1, 1): Q(2)},
        "labels": {(1, 0): "f1", (0, 1): "f2"},
        "provenance": "Toric fan of P^1xP^1; the blow-up at a fixed point is del Pezzo of degree 7. "
                      "Homogeneous, so one profile.",
        "profiles": [{"name": "generic", "cone": (0, 2),
                      "provenance": "Any point; Aut acts transitively."}],
        "extra_golden": [
            {"op": "M", "class": ["1", "1"], "expected": "2",
             "note": "[DERIVED] AM-GM, inf ((a+b)/sqrt(2ab))^2 = 2 at a = b"},
            {"op": "vol", "class": ["2", "1"], "expected": "4", "note": "[DERIVED] vol(a,b) = 2ab"},
        ],
    })

    t = p2().blowup((0, 1), "F")
    out.append({
        "name": "BlqP2", "toric": t, "pairing": [[1, 0], [0, -1]],
        "divisor_basis": ["H", "F"], "curve_basis": ["H", "F"],
        "top": {(2, 0): Q(1), (0, 2): Q(-1)},
        "labels": {(0, 1): "F", (1, -1): "H-F"},
        "provenance": "P^2 blown up at a fixed point q (exceptional curve F). Profiles: x off F "
                      "(Bl of P^2 at two points) and x on F (infinitely near point), both toric.",
        "extra_golden": [
            {"op": "vol", "class": ["1", "1"], "expected": "1",
             "note": "[DERIVED] Zariski decomposition H+F = H + F, vol = H^2 = 1"},
            {"op": "S_divisors", "profile": "on_curve_F", "class": ["1", "0"], "expected": "0",
             "note": "[DERIVED] divisor route, H.F / mult_x F = 0"},
            {"op": "s_curves", "profile": "on_curve_F", "class": ["1", "0"], "expected": "0",
             "note": "[DERIVED] F through x, H.F / 1 = 0"},
        ],
        "vanishing_cases": [{"alpha": ["1", "0"], "enk_divisorial": ["F"],
                             "note": "alpha = H: P(H) = H, H.F = 0, so F is the divisorial part"}],
        "profiles": [
            {"name": "generic", "cone": (1, 2), "lies_on": [],
             "provenance": "Fixed point of cone(e2,-e1-e2), not on F; Aut(Bl_qP^2) is transitive off F."},
            {"name": "on_curve_F", "cone": (0, 3), "lies_on": ["F"],
             "provenance": "Fixed point of cone(e1,u) on F; the stabiliser of q is transitive on F."},
        ],
    })

    t = p2().blowup((0, 1), "F1").blowup((1, 2), "F2")
    out.append({
        "name": "Bl2P2", "toric": t, "pairing": [[1, 0, 0], [0, -1, 0], [0, 0, -1]],
        "divisor_basis": ["H", "F1", "F2"], "curve_basis": ["H", "F1", "F2"],
        "top": {(2, 0, 0): Q(1), (0, 2, 0): Q(-1), (0, 0, 2): Q(-1)},
        "labels": {(0, 1, 0): "F1", (0, 0, 1): "F2", (1, -1, -1): "L12",
                   (1, -1, 0): "H-F1", (1, 0, -1): "H-F2"},
        "provenance": "P^2 blown up at two fixed points q1, q2 (del Pezzo of degree 7). Profiles: "
                      "generic (three points in general position, del Pezzo 6), on F1, on F2.",
        "vanishing_cases": [{"alpha": ["1", "0", "0"], "enk_divisorial": ["F1", "F2"],
                             "note": "alpha = H is orthogonal to both exceptional curves"}],
        "profiles": [
            {"name": "generic", "cone": (2, 0), "lies_on": [],
             "provenance": "Fixed point of cone(-e1-e2, e1): off F1, F2 and L12."},
            {"name": "on_F1", "cone": (0, 3), "lies_on": ["F1"],
             "provenance": "Fixed point of cone(e1,u1): on F1, off L12."},
            {"name": "on_F2", "cone": (4, 2), "lies_on": ["F2"],
             "provenance": "Fixed point of cone(u2,-e1-e2): on F2, off L12."},
        ],
    })

    t = p3().blowup((0, 1, 2), "E1")
    vol_nef = {(3, 0): Q(1), (0, 3): Q(1)}
    out.append({
        "name": "BlpP3", "toric": t, "pairing": [[1, 0], [0, -1]],
        "divisor_basis": ["H", "E1"], "curve_basis": ["l", "lE1"],
        "top": vol_nef,
        "labels": {(0, 1): "E1", (1, -1): "H-E1"},
        "volume": [([(1, 0), (1, -1)], vol_nef), ([(1, 0), (0, 1)], {(3, 0): Q(1)})],
        "extra_golden": [
            {"op": "vol", "class": ["2", "-1"], "expected": "7",
             "note": "[DERIVED] chamber polynomial a^3 - b^3 at (2H - E1), equals (2H - E1)^3"},
        ],
        "provenance": "P^3 blown up at a fixed point p (exceptional divisor E1). vol(aH-bE1) = "
                      "a^3-b^3 for 0<=b<=a and a^3 for b<=0, checked against lattice-polytope volume. "
                      "Profiles: x off E1 (Bl of P^3 at two points) and x on E1.",
        "profiles": [
            {"name": "generic", "cone": (1, 2, 3), "lies_on": [],
             "provenance": "Fixed point of cone(e2,e3,-e1-e2-e3), off E1."},
            {"name": "on_E1", "cone": (0, 1, 4), "lies_on": ["E1"],
             "provenance": "Fixed point of cone(e1,e2,u) on E1; the stabiliser of p is transitive on E1."},
        ],
    })
    return out


# ---------------------------------------------------------------------------
# golden values from the oracle


def golden(model, desc):
    p = [[Q(x) for x in r] for r in desc["pairing"]]
    pt = transpose(p)
    d = len(p)
    n = model["dim"]
    out = []
    for prof in model["profiles"]:
        cy = prof["_cy"]
        py = prof["_py"]
        pyt = transpose(py)
        E = [Q(0)] * d + [Q(1)]
        e = [Q(0)] * d + [Q(-1)]
        nef_x = [list(map(Q, r)) for r in desc["_c"]["nef"]]
        eff_x = [list(map(Q, r)) for r in desc["_c"]["eff_div"]]
        effc_x = [list(map(Q, r)) for r in desc["_c"]["eff_curves"]]
        movc_x = [list(map(Q, r)) for r in desc["_c"]["mov_curves"]]

        def up(v):
            return list(v) + [Q(0)]

        def s_x(L):
            # divisor cone: <curve f, D> = f^T P^T D
            return exit_param(cy["nef"], pyt, up(L), [-x for x in E])

        def n_x(L):
            return exit_param(cy["eff_div"], pyt, up(L), [-x for x in E])

        def N_x(a):
            return exit_param(cy["eff_curves"], py, up(a), e)

        def S_x(a):
            return exit_param(cy["mov_curves"], py, up(a), e)

        for r in nef_x:
            out.append(oracle("s", prof, r, s_x(r)))
        for r in eff_x:
            out.append(oracle("n", prof, r, n_x(r)))
        for r in effc_x:
            out.append(oracle("N", prof, r, N_x(r)))
        for r in movc_x:
            out.append(oracle("S", prof, r, S_x(r)))
        # one interior class on each side
        ln = [sum(r[k] for r in nef_x) for k in range(d)]
        out.append(oracle("s", prof, ln, s_x(ln)))
        am = [sum(r[k] for r in movc_x) for k in range(d)]
        out.append(oracle("S", prof, am, S_x(am)))
        out.append(oracle("N", prof, am, N_x(am)))
    return out


def oracle(op, prof, cls, value):
    return {"op": op, "profile": prof["name"], "class": vjson(cls), "expected": fstr(value),
            "note": "[DERIVED] exit parameter over the toric blow-up cones (derive_catalog.py)"}


def main():
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "catalog"
    outdir.mkdir(parents=True, exist_ok=True)
    for desc in model_descriptions():
        model, c = build_model(desc)
        desc["_c"] = c
        gold = golden(model, desc)
        # hand-checked values
        gold += desc.get("extra_golden", [])
        model["golden"] = gold
        for prof in model["profiles"]:
            prof.pop("_cy")
            prof.pop("_py")
        path = outdir / f"{desc['name']}.json"
        path.write_text(json.dumps(model, indent=1) + "\n")
        print(f"wrote {path}: nef={c['nef']} eff={c['eff_div']} effc={c['eff_curves']} movc={c['mov_curves']}")
        for prof in model["profiles"]:
            b = prof["blowup"]
            print(f"  {prof['name']}: nefY={b['nef']['rays']} effY={b['eff_div']['rays']}")
            print(f"     effcY={b['eff_curves']['rays']} movcY={b['mov_curves']['rays']}")


if __name__ == "__main__":
    main()
