#!/usr/bin/env python3
"""Independent oracle for frozen test values.

Works directly with dense component matrices over the extended basis
{unit, d/dx_1, ..., d/dx_n} and sympy rationals.  Nothing here shares code
with the C++ engine: forms are evaluated through the Chevalley-Eilenberg sum
on explicit operators, and linear systems are solved with sympy's dense
solver.

Run:  python3 tests/oracle/oracle.py
"""
import itertools
import json
import sympy as sp


class Op:
    """First-order operator s + sum v_i d/dx_i acting on sympy expressions."""

    def __init__(self, coords, s, v):
        self.coords, self.s, self.v = coords, sp.sympify(s), [sp.sympify(t) for t in v]

    def __call__(self, f):
        return sp.expand(self.s * f + sum(vi * sp.diff(f, c) for vi, c in zip(self.v, self.coords)))

    def comps(self):
        return [self.s] + self.v


def basis(coords):
    n = len(coords)
    out = [Op(coords, 1, [0] * n)]
    for i in range(n):
        out.append(Op(coords, 0, [1 if j == i else 0 for j in range(n)]))
    return out


def commutator(a, b):
    x = sp.Symbol("_probe")
    coords = a.coords
    # scalar part = a.v(b.s) - b.v(a.s); vector part = [a.v, b.v]
    s = sum(ai * sp.diff(b.s, c) for ai, c in zip(a.v, coords)) - sum(bi * sp.diff(a.s, c) for bi, c in zip(b.v, coords))
    v = []
    for k in range(len(coords)):
        v.append(sum(ai * sp.diff(b.v[k], c) for ai, c in zip(a.v, coords)) - sum(bi * sp.diff(a.v[k], c) for bi, c in zip(b.v, coords)))
    return Op(coords, sp.expand(s), [sp.expand(t) for t in v])


def form_eval(comp, degree, ops):
    """comp: dict increasing tuple -> expr; evaluate on ops via determinants."""
    total = 0
    for idx, c in comp.items():
        m = sp.Matrix([[op.comps()[i] for i in idx] for op in ops])
        total += c * m.det()
    return sp.expand(total)


def ce_delta(comp, degree, alpha_comp, ops):
    """CE sum with anchor phi -> phi + alpha(phi) and the commutator bracket."""
    p1 = len(ops)
    total = 0
    for i in range(p1):
        rest = ops[:i] + ops[i + 1:]
        val = form_eval(comp, degree, rest) if degree > 0 else comp.get((), 0)
        a = form_eval(alpha_comp, 1, [ops[i]]) if alpha_comp else 0
        total += (-1) ** i * (ops[i](val) + val * a)
    for i in range(p1):
        for j in range(i + 1, p1):
            rest = [commutator(ops[i], ops[j])] + [ops[k] for k in range(p1) if k not in (i, j)]
            total += (-1) ** (i + j) * form_eval(comp, degree, rest)
    return sp.expand(total)


def components_on_basis(fn, coords, degree):
    b = basis(coords)
    out = {}
    for idx in itertools.combinations(range(len(coords) + 1), degree):
        val = sp.simplify(fn([b[i] for i in idx]))
        if val != 0:
            out[idx] = val
    return out


def matrix_of(comp, size):
    m = sp.zeros(size, size)
    for (i, j), c in comp.items():
        m[i, j] = c
        m[j, i] = -c
    return m


def standard_contact(n_pairs):
    xs = sp.symbols(" ".join(f"x{i+1}" for i in range(n_pairs)))
    ys = sp.symbols(" ".join(f"y{i+1}" for i in range(n_pairs)))
    if n_pairs == 1:
        xs, ys = (sp.Symbol("x"),), (sp.Symbol("y"),)
    xs, ys = list(xs) if isinstance(xs, (list, tuple)) else [xs], list(ys) if isinstance(ys, (list, tuple)) else [ys]
    z = sp.Symbol("z")
    coords = []
    for a, b in zip(xs, ys):
        coords += [a, b]
    coords.append(z)
    n = len(coords)
    beta = [0] * n
    for a, b in zip(xs, ys):
        beta[coords.index(a)] = -b
    beta[n - 1] = 1
    return coords, beta


def lifted(coords, beta, c):
    """Build Omega_tilde and alpha for Omega = d beta, E = d/dz, g = 0 through
    the definitions: Omega_bar(phi, psi) = Omega(P phi, P psi) with
    P phi = pi(phi) - beta(pi(phi)) E, Omega_tilde = Omega_bar + (d1) ^ beta~."""
    n = len(coords)
    size = n + 1
    dbeta = sp.zeros(n, n)
    for i in range(n):
        for j in range(n):
            dbeta[i, j] = sp.diff(beta[j], coords[i]) - sp.diff(beta[i], coords[j])
    E = [0] * n
    E[n - 1] = 1
    def P(vec):
        b = sum(bi * vi for bi, vi in zip(beta, vec))
        return [vi - b * ei for vi, ei in zip(vec, E)]
    big = sp.zeros(size, size)
    for i in range(size):
        for j in range(size):
            vi = [0] * n if i == 0 else [1 if k == i - 1 else 0 for k in range(n)]
            vj = [0] * n if j == 0 else [1 if k == j - 1 else 0 for k in range(n)]
            pi, pj = P(vi), P(vj)
            ob = sum(pi[a] * dbeta[a, b] * pj[b] for a in range(n) for b in range(n))
            u_i = 1 if i == 0 else 0
            u_j = 1 if j == 0 else 0
            bt_i = 0 if i == 0 else beta[i - 1]
            bt_j = 0 if j == 0 else beta[j - 1]
            big[i, j] = sp.expand(ob + u_i * bt_j - u_j * bt_i)
    # alpha = (1+c) d1 + i_E delta beta~ + 0 ; i_E delta beta~ evaluated by CE sum
    bt = {(i,): beta[i - 1] for i in range(1, size) if beta[i - 1] != 0}
    b = basis(coords)
    Eop = Op(coords, 0, E)
    alpha = [0] * size
    for k in range(size):
        iE = ce_delta(bt, 1, None, [Eop, b[k]])
        alpha[k] = sp.expand((1 + c) * (1 if k == 0 else 0) + iE)
    return big, alpha


def solve_interior(big, rhs):
    """Solve sum_j phi_j W[j,k] = rhs_k with a dense rational solve."""
    size = big.shape[0]
    phi = sp.symbols(f"p0:{size}")
    eqs = [sum(phi[j] * big[j, k] for j in range(size)) - rhs[k] for k in range(size)]
    sol = sp.solve(eqs, phi, dict=True)[0]
    return [sp.simplify(sol[p]) for p in phi]


def delta_alpha_scalar(coords, alpha, f):
    return [sp.expand(f + f * alpha[0])] + [sp.expand(sp.diff(f, c) + f * alpha[i + 1]) for i, c in enumerate(coords)]


def bracket(big, coords, alpha, f, g):
    pf = solve_interior(big, delta_alpha_scalar(coords, alpha, f))
    pg = solve_interior(big, delta_alpha_scalar(coords, alpha, g))
    size = big.shape[0]
    return sp.simplify(-sum(pf[i] * big[i, j] * pg[j] for i in range(size) for j in range(size)))


def main():
    out = {}
    coords, beta = standard_contact(1)
    x, y, z = coords
    for c in (-1, 0):
        big, alpha = lifted(coords, beta, c)
        tag = f"r3_c{c}"
        out[f"{tag}_omega_tilde"] = {f"{i}{j}": str(big[i, j]) for i in range(4) for j in range(i + 1, 4) if big[i, j] != 0}
        out[f"{tag}_alpha"] = [str(a) for a in alpha]
        out[f"{tag}_pfaffian"] = str(sp.sqrt(big.det()))
        H = solve_interior(big, [-1, 0, 0, 0])
        out[f"{tag}_reeb"] = [str(h) for h in H]
        out[f"{tag}_bracket_x_z"] = str(bracket(big, coords, alpha, x, z))
        out[f"{tag}_bracket_x_y"] = str(bracket(big, coords, alpha, x, y))
        out[f"{tag}_phi_z"] = [str(t) for t in solve_interior(big, delta_alpha_scalar(coords, alpha, z))]
        # conformal closure residual: delta Omega~ + alpha ^ Omega~ on basis triples, computed by CE sum
        omega_comp = {(i, j): big[i, j] for i in range(4) for j in range(i + 1, 4) if big[i, j] != 0}
        b = basis(coords)
        resid = {}
        for idx in itertools.combinations(range(4), 3):
            ops = [b[i] for i in idx]
            d = ce_delta(omega_comp, 2, None, ops)
            alpha_comp = {(k,): alpha[k] for k in range(4) if alpha[k] != 0}
            # (alpha ^ w)(a,b,c) = alpha(a)w(b,c) - alpha(b)w(a,c) + alpha(c)w(a,b)
            aw = 0
            for k in range(3):
                rest = ops[:k] + ops[k + 1:]
                aw += (-1) ** k * form_eval(alpha_comp, 1, [ops[k]]) * form_eval(omega_comp, 2, rest)
            r = sp.simplify(d + aw)
            if r != 0:
                resid["".join(map(str, idx))] = str(r)
        out[f"{tag}_conformal_residual"] = resid
    # scaled omega: reeb of 2 * Omega~
    big, alpha = lifted(coords, beta, 0)
    out["r3_scaled_reeb"] = [str(h) for h in solve_interior(2 * big, [-1, 0, 0, 0])]
    out["r3_scaled_pfaffian"] = str(sp.sqrt((2 * big).det()))
    # R5 volume coefficient: (i_1 w | X) ^ (w | X)^2 top coefficient
    coords5, beta5 = standard_contact(2)
    big5, alpha5 = lifted(coords5, beta5, 0)
    n = 5
    i1 = [big5[0, k + 1] for k in range(n)]
    wX = sp.Matrix(n, n, lambda a, b: big5[a + 1, b + 1])
    # top coefficient of b ^ w ^ w with shuffle convention = sum over perms
    # of sign * b(s0) * w(s1,s2) * w(s3,s4), divided by the shuffle multiplicity 1*2*2
    tot = 0
    for perm in itertools.permutations(range(n)):
        sign = sp.combinatorics.Permutation(list(perm)).signature()
        tot += sign * i1[perm[0]] * wX[perm[1], perm[2]] * wX[perm[3], perm[4]]
    out["r5_volume_coefficient"] = str(sp.simplify(tot / 4))
    print(json.dumps(out, indent=1, sort_keys=True))


if __name__ == "__main__":
    import sympy.combinatorics  # noqa: F401
    main()
