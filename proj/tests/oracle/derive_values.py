# Copyright 2026 The cremona Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent oracle for the frozen constants in tests/oracle_values.hpp.

Uses sympy for exact polynomial algebra and mpmath for high-precision roots;
shares no code with the C++ library. Run: python3 derive_values.py
"""
import sympy as sp
from mpmath import mp, mpf, polyroots, matrix, lu_solve

mp.dps = 60
x = sp.symbols("x")


def chi_pk(k, n):
    return sp.expand((x**(n + k) - 1) * (x**2 - 1) - x * (x**(k + 1) - 1) * (x**(n - 1) - 1))


def chi_bi(k, n):
    c = [1] + [2] * (k - 1) + [1]
    s = sum(c[j] * x**j for j in range(k + 1))
    return sp.expand(x**n * (x**(k + 2) - s) + x**2 * s - 1)


def largest_real_root(p):
    coeffs = [mpf(int(c)) for c in sp.Poly(p, x).all_coeffs()]
    roots = polyroots(coeffs, maxsteps=800, extraprec=600)
    return max(mp.re(z) for z in roots if abs(mp.im(z)) < mpf(10)**-40)


def tpqr_charpoly(p, q, r):
    # Coxeter element of the T(p,q,r) diagram: arms numbered outward, branch node last.
    arms = [p - 1, q - 1, r - 1]
    nodes = sum(arms) + 1
    adj = sp.zeros(nodes, nodes)
    idx = 0
    branch = nodes - 1
    for a in arms:
        prev = branch
        for _ in range(a):
            adj[prev, idx] = adj[idx, prev] = 1
            prev = idx
            idx += 1
    gram = -2 * sp.eye(nodes) + adj
    m = sp.eye(nodes)
    for i in range(nodes):
        e = sp.zeros(nodes, 1)
        e[i] = 1
        refl = sp.eye(nodes) + e * (e.T * gram)
        m = m * refl
    return sp.expand(m.charpoly(x).as_expr())


def show(name, value):
    print(f"{name} = {mp.nstr(value, 40)}")


for k, n in [(2, 8), (2, 9), (3, 6), (4, 5), (5, 5)]:
    show(f"pk({k},{n})", largest_real_root(chi_pk(k, n)))
for k, n in [(2, 5), (3, 4), (6, 3)]:
    show(f"biproj({k},{n})", largest_real_root(chi_bi(k, n)))
for p, q, r in [(2, 3, 7), (2, 3, 9), (3, 3, 6)]:
    show(f"T({p},{q},{r})", largest_real_root(tpqr_charpoly(p, q, r)))

# t_j^+ for pk(2,8) straight from the parameter formula.
k, n = 2, 8
d = largest_real_root(chi_pk(k, n))
for j in range(k + 1):
    t = d**j * mpf(k + 1) / (k - 1) * (d * d - 1) / (d * (d**(k + 1) - 1)) - mpf(2) / (k - 1)
    show(f"pk(2,8) t_{j}^+", t)

# biproj(2,5) t^+ from t_{j+1}^+ = t_j^- = delta (t_j^+ - 2) - 1 and sum t^- = -(k+1) delta.
k, n = 2, 5
d = largest_real_root(chi_bi(k, n))
c = -2 * d - 1
A = sum(d**i for i in range(k + 1))
B = sum(c * (d**i - 1) / (d - 1) for i in range(k + 1))
t0m = (-(k + 1) * d - B) / A
tm = [d**i * t0m + c * (d**i - 1) / (d - 1) for i in range(k + 1)]
for j, t in enumerate(tm):
    show(f"biproj(2,5) t_{j}^+", (t + 1) / d + 2)

print("pk(2,8) full polynomial (low to high):", sp.Poly(chi_pk(2, 8), x).all_coeffs()[::-1])
print("T(2,3,7) char poly (low to high):", sp.Poly(tpqr_charpoly(2, 3, 7), x).all_coeffs()[::-1])
