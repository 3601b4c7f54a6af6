#!/usr/bin/env python3
"""Generate the bundled finite-group fixtures (fixtures/*.json).

Each fixture carries the multiplication table and one unitary matrix per
group element for every irreducible representation.  Element 0 is the
identity.  Matrices are stored as nested lists of [re, im] pairs.
"""

import json
import os
import numpy as np


def mult_table(elements, op):
    index = {e: i for i, e in enumerate(elements)}
    return [[index[op(a, b)] for b in elements] for a in elements]


def mat_json(m):
    m = np.asarray(m, dtype=complex)
    return [[[float(x.real), float(x.imag)] for x in row] for row in m]


def fixture(name, elements, op, irreps):
    return {
        "name": name,
        "order": len(elements),
        "mult_table": mult_table(elements, op),
        "irreps": [
            {
                "label": label,
                "dim": int(np.asarray(mats[0]).shape[0]),
                "matrices": [mat_json(m) for m in mats],
            }
            for label, mats in irreps
        ],
    }


def cyclic(n):
    elements = list(range(n))
    op = lambda a, b: (a + b) % n
    w = np.exp(2j * np.pi / n)
    irreps = [(f"chi{k}", [np.array([[w ** (k * g)]]) for g in elements]) for k in range(n)]
    return fixture(f"z{n}", elements, op, irreps)


def klein_four():
    elements = [(0, 0), (1, 0), (0, 1), (1, 1)]
    op = lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2)
    irreps = []
    for (p, q) in elements:
        mats = [np.array([[(-1.0) ** (p * g[0] + q * g[1]) + 0j]]) for g in elements]
        irreps.append((f"chi{p}{q}", mats))
    return fixture("z2z2", elements, op, irreps)


def s3():
    # permutations of {0,1,2} as tuples; identity first
    elements = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (2, 1, 0), (1, 0, 2)]
    op = lambda a, b: tuple(a[b[i]] for i in range(3))  # (a*b)(i) = a(b(i))
    sign = lambda p: 1 if p in elements[:3] else -1

    def std_mat(p):
        # permutation action on the plane orthogonal to (1,1,1)
        P = np.zeros((3, 3))
        for i in range(3):
            P[p[i], i] = 1.0
        basis = np.array([[1, -1, 0], [1, 1, -2]]).T / np.array([np.sqrt(2), np.sqrt(6)])
        return basis.T @ P @ basis

    irreps = [
        ("triv", [np.eye(1) + 0j for _ in elements]),
        ("sign", [np.array([[sign(p) + 0j]]) for p in elements]),
        ("std", [std_mat(p) + 0j for p in elements]),
    ]
    return fixture("s3", elements, op, irreps)


def d4():
    # r = rotation by 90 degrees, s = reflection; elements s^b r^a
    elements = [(a, b) for b in range(2) for a in range(4)]

    def op(x, y):
        a, b = x
        c, d = y
        # (s^b r^a)(s^d r^c) = s^(b+d) r^(c + a*(-1)^d)
        return ((c + a * (1 if d == 0 else -1)) % 4, (b + d) % 2)

    def two_dim(x):
        a, b = x
        c, s = np.cos(np.pi * a / 2), np.sin(np.pi * a / 2)
        r = np.array([[c, -s], [s, c]])
        f = np.array([[1.0, 0.0], [0.0, -1.0]])
        return (np.linalg.matrix_power(f, b) @ r) + 0j

    def chi(x, pa, pb):
        a, b = x
        return np.array([[((-1.0) ** (pa * a)) * ((-1.0) ** (pb * b)) + 0j]])

    irreps = [
        ("triv", [chi(x, 0, 0) for x in elements]),
        ("chi_r", [chi(x, 1, 0) for x in elements]),
        ("chi_s", [chi(x, 0, 1) for x in elements]),
        ("chi_rs", [chi(x, 1, 1) for x in elements]),
        ("two", [two_dim(x) for x in elements]),
    ]
    return fixture("d4", elements, op, irreps)


def q8():
    # quaternion units as 2x2 matrices over the labels 1,-1,i,-i,j,-j,k,-k
    one = np.eye(2) + 0j
    I = np.array([[1j, 0], [0, -1j]])
    J = np.array([[0, 1 + 0j], [-1, 0]])
    K = I @ J
    reps = {
        "1": one, "-1": -one, "i": I, "-i": -I,
        "j": J, "-j": -J, "k": K, "-k": -K,
    }
    elements = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

    def op(a, b):
        m = reps[a] @ reps[b]
        for name, mat in reps.items():
            if np.allclose(m, mat):
                return name
        raise RuntimeError("not closed")

    def chi(x, pi, pj):
        # characters factor through Q8 / {+-1} = Z2 x Z2
        si = (-1.0) ** pi if x in ("i", "-i") else 1.0
        sj = (-1.0) ** pj if x in ("j", "-j") else 1.0
        sk = (-1.0) ** (pi + pj) if x in ("k", "-k") else 1.0
        return np.array([[si * sj * sk + 0j]])

    irreps = [
        ("triv", [chi(x, 0, 0) for x in elements]),
        ("chi_i", [chi(x, 1, 0) for x in elements]),
        ("chi_j", [chi(x, 0, 1) for x in elements]),
        ("chi_k", [chi(x, 1, 1) for x in elements]),
        ("two", [reps[x] for x in elements]),
    ]
    return fixture("q8", elements, op, irreps)


def sanity(fx):
    n = fx["order"]
    t = fx["mult_table"]
    assert all(t[0][g] == g and t[g][0] == g for g in range(n))
    # associativity
    for a in range(n):
        for b in range(n):
            for c in range(n):
                assert t[t[a][b]][c] == t[a][t[b][c]]
    # homomorphism + unitarity + sum of squares
    total = 0
    for irr in fx["irreps"]:
        d = irr["dim"]
        total += d * d
        mats = [np.array([[complex(re, im) for (re, im) in row] for row in m]) for m in irr["matrices"]]
        assert np.allclose(mats[0], np.eye(d))
        for g in range(n):
            assert np.allclose(mats[g] @ mats[g].conj().T, np.eye(d)), (fx["name"], irr["label"], g)
            for h in range(n):
                assert np.allclose(mats[g] @ mats[h], mats[t[g][h]]), (fx["name"], irr["label"], g, h)
    assert total == n, fx["name"]
    # irreducibility + pairwise inequivalence via character orthonormality
    chars = []
    for irr in fx["irreps"]:
        mats = [np.array([[complex(re, im) for (re, im) in row] for row in m]) for m in irr["matrices"]]
        chars.append(np.array([np.trace(m) for m in mats]))
    for i, ci in enumerate(chars):
        for j, cj in enumerate(chars):
            ip = np.vdot(ci, cj) / n
            assert np.isclose(ip, 1.0 if i == j else 0.0), (fx["name"], i, j, ip)


def main():
    out = os.path.join(os.path.dirname(__file__), "..", "fixtures")
    os.makedirs(out, exist_ok=True)
    for fx in [cyclic(2), cyclic(3), cyclic(4), klein_four(), s3(), d4(), q8()]:
        sanity(fx)
        path = os.path.join(out, fx["name"] + ".json")
        with open(path, "w") as f:
            json.dump(fx, f)
        print("wrote", path)


if __name__ == "__main__":
    main()
