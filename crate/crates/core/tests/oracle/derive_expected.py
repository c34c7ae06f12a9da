"""Independent sympy oracle for the frozen expected values in the Rust tests.

Run with `python3 derive_expected.py`; nothing here shares code with the crate.
"""
import sympy as sp
from itertools import combinations

x, y, z, s, t, lam, mu = sp.symbols("x y z s t lam mu")


def line_through(p, q):
    return sp.Matrix(p).cross(sp.Matrix(q))


def line_pair(l, m):
    L, M = sp.Matrix(l), sp.Matrix(m)
    return L * M.T + M * L.T


def form(mat):
    v = sp.Matrix([x, y, z])
    return sp.expand((v.T * mat * v)[0])


def meet(l, m):
    return sp.Matrix(l).cross(sp.Matrix(m))


def hom(p):
    return [sp.Rational(p[0]), sp.Rational(p[1]), 1]


print("== meet y=2x, y=2-x")
P = meet([2, -1, 0], [1, 1, -2])
print((P / P[2]).T)

print("== harmonic conjugate of 1 wrt 0,3")
n = sp.symbols("n")
print(sp.solve(sp.Eq(((1 - 0) * (n - 3)) / ((1 - 3) * (n - 0)), -1), n))

print("== general position (0,0),(2,0),(0,2),(2,4)")
pts = [hom(p) for p in [(0, 0), (2, 0), (0, 2), (2, 4)]]
print([sp.Matrix([pts[i], pts[j], pts[k]]).det() for i, j, k in combinations(range(4), 3)])

print("== conic through five")
five = [(1, 0), (0, 1), (-1, 0), (0, -1), (sp.Rational(3, 5), sp.Rational(4, 5))]
rows = [[X * X, X * Y, Y * Y, X, Y, 1] for X, Y in five]
print(sp.Matrix(rows).nullspace())

print("== eleven-point conic of (0,0),(2,0),(0,2),(2,4)")
A, B, C, D = [sp.Matrix(p) for p in pts]
G1 = line_pair(line_through(A, B), line_through(C, D))
G2 = line_pair(line_through(A, D), line_through(B, C))
G3 = line_pair(line_through(A, C), line_through(B, D))
print("G1", form(G1), " G2", form(G2), " G3", form(G3))
X = sp.Matrix([x, y, z])
u, v = G1 * X, G2 * X
implicit = sp.factor(sp.expand(u[0] * v[1] - u[1] * v[0]))
print("locus of centers (implicit):", implicit)


def ev(p):
    return sp.simplify(implicit.subs({x: p[0], y: p[1], z: p[2]}))


wit = [(-2, 0, 1), (0, 1, 0), (sp.Rational(2, 3), sp.Rational(4, 3), 1), (1, 0, 1), (0, 1, 1), (1, 2, 1), (1, 1, 1), (2, 2, 1), (1, 3, 1)]
print("witness evals", [ev(w) for w in wit])
r = [sp.expand((sp.Matrix([s, t, 0]).T * G * sp.Matrix([s, t, 0]))[0]) for G in (G1, G2, G3)]
print("restrictions at infinity", r)
a_, b_, c_ = sp.symbols("a_ b_ c_")
eqs = []
for q in r:
    P = sp.Poly(q, s, t)
    qa, qb, qc = P.coeff_monomial(s * s), P.coeff_monomial(s * t) / 2, P.coeff_monomial(t * t)
    eqs.append(qa * c_ + qc * a_ - 2 * qb * b_)
M_ = sp.Matrix([[e.coeff(a_), e.coeff(b_), e.coeff(c_)] for e in eqs])
fixed = M_.nullspace()
print("fixed form (A,B,C)", [f.T for f in fixed])
A_, B_, C_ = fixed[0]
for rt in sp.solve(A_ * s ** 2 + 2 * B_ * s + C_, s):
    print("fixed point (", rt, ": 1 : 0) eval", ev((rt, 1, 0)))
if A_ == 0:
    print("fixed point (1:0:0) eval", ev((1, 0, 0)))

print("== generic pencil (0,0),(3,0),(1,2),(-1,5): fit vs implicit")
gp = [sp.Matrix(hom(p)) for p in [(0, 0), (3, 0), (1, 2), (-1, 5)]]
A, B, C, D = gp
H1 = line_pair(line_through(A, B), line_through(C, D))
H2 = line_pair(line_through(A, D), line_through(B, C))
u, v = H1 * X, H2 * X
imp = sp.Poly(sp.expand(u[0] * v[1] - u[1] * v[0]), x, y, z)
ic = [imp.coeff_monomial(m) for m in (x * x, x * y, y * y, x * z, y * z, z * z)]
cs = []
for l_, m_ in [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2)]:
    cs.append((l_ * H1 + m_ * H2).adjugate() * sp.Matrix([0, 0, 1]))
rows = [[c[0] ** 2, c[0] * c[1], c[1] ** 2, c[0] * c[2], c[1] * c[2], c[2] ** 2] for c in cs[:5]]
fit = sp.Matrix(rows).nullspace()
print("fit nullity", len(fit))
ratio = [sp.nsimplify(f / i) if i != 0 else (f, i) for f, i in zip(fit[0], ic)]
print("fit/implicit ratios", ratio)

print("== member_through square pencil")
Asq = [hom(p) for p in [(1, 1), (-1, 1), (-1, -1), (1, -1)]]
A, B, C, D = [sp.Matrix(p) for p in Asq]
S1 = line_pair(line_through(A, B), line_through(C, D))
S2 = line_pair(line_through(A, D), line_through(B, C))
print("G1", form(S1), " G2", form(S2))
X = sp.Matrix([0, sp.Rational(1, 2), 1])
e1, e2 = (X.T * S1 * X)[0], (X.T * S2 * X)[0]
print("param", (e2, -e1), "member", sp.factor(form(e2 * S1 - e1 * S2)))

print("== pole of (2,0) wrt unit circle")
U = sp.diag(1, 1, -1)
print((U * sp.Matrix([2, 0, 1])).T)

print("== parabola x^2 = yz center")
Pm = sp.Matrix([[1, 0, 0], [0, 0, -sp.Rational(1, 2)], [0, -sp.Rational(1, 2), 0]])
print((Pm.adjugate() * sp.Matrix([0, 0, 1])).T)

print("== unit circle cap y=2")
print(sp.solve(x ** 2 + 4 - 1, x))

print("== axes of x^2+xy+y^2-1")
print(sp.Matrix([[1, sp.Rational(1, 2)], [sp.Rational(1, 2), 1]]).eigenvects())

print("== apolar (1,0,-1) vs (1,0,-4)")
print(1 * (-4) + (-1) * 1 - 0)
print("cross ratio (1,-1;2,-2)", ((1 - 2) * (-1 + 2)) / sp.Rational((1 + 2) * (-1 - 2)))

print("== square pencil on y=0: Desargues involution and circumcircle pair")
rs = [sp.Poly(sp.expand(form(G).subs({y: 0})).subs({x: s, z: t}), s, t) for G in (S1, S2, S1 - S2)]
eqs = []
for P in rs:
    qa, qb, qc = P.coeff_monomial(s * s), P.coeff_monomial(s * t) / 2, P.coeff_monomial(t * t)
    eqs.append(qa * c_ + qc * a_ - 2 * qb * b_)
fixed = sp.Matrix([[e.coeff(a_), e.coeff(b_), e.coeff(c_)] for e in eqs]).nullspace()
print("fixed form (A,B,C)", [f.T for f in fixed])
# the oracle basis has G1 = -8(y² - z²), so the circumcircle is S2 - S1
circ = sp.expand(form(S2 - S1).subs({y: 0, z: 1}))
print("circumcircle on y=0", circ, "roots", sp.solve(circ, x))
r1, r2 = sp.solve(circ, x)
# (0, inf; r1, r2) = (0 - r1)/(0 - r2)
print("cross ratio (0, inf; r1, r2)", sp.simplify((0 - r1) / (0 - r2)))
