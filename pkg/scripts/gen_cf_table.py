"""Generate the pole/residue table for the (N-1,N) best rational
approximation of exp on (-inf, 0] and freeze it into _cf_data.py.

Uses the Caratheodory-Fejer construction on the unit disk (FFT of the
transplanted exponential, SVD of the Hankel matrix of its Chebyshev
coefficients).  Run once; the output module is checked in.
"""

import numpy as np

NF = 4096
K = 120
SCL = 9.0


def cf_exp(n):
    """Poles and residues of the degree-(n-1,n) CF approximant of e^x on (-inf,0]."""
    w = np.exp(2j * np.pi * np.arange(NF) / NF)
    t = w.real
    # x = scl*(t-1)/(t+1) maps the unit circle to (-inf, 0]
    F = np.exp(SCL * (t - 1.0) / (t + 1.0 + 1e-16))
    c = np.real(np.fft.fft(F)) / NF                     # Chebyshev-ish coefficients
    hank = np.array(
        [[c[i + j + 1] if i + j + 1 <= K else 0.0 for j in range(K)] for i in range(K)]
    )
    U, S, V = np.linalg.svd(hank)
    s = S[n]
    u = U[::-1, n]
    v = V[n, :]

    zz = np.zeros(NF - K)
    b = np.fft.fft(np.concatenate([u, zz])) / np.fft.fft(np.concatenate([v, zz]))
    ft = np.polyval(c[K::-1], w)
    rt = ft - s * w**K * b                              # deflated rational part
    zr = np.roots(v)
    qk = zr[np.abs(zr) > 1.0]                           # roots outside the disk
    assert len(qk) == n, (n, len(qk))
    qc = np.poly(qk).real
    pt = rt * np.polyval(qc, w)
    ptc = np.real(np.fft.fft(pt) / NF)
    ptc = ptc[n::-1]
    ck = np.zeros(n, dtype=complex)
    for k in range(n):
        q = qk[k]
        q2 = np.poly(qk[np.arange(n) != k])
        ck[k] = np.polyval(ptc, q) / np.polyval(q2, q)
    # transplant back to the x-plane
    zk = SCL * (qk - 1.0) ** 2 / (qk + 1.0) ** 2
    ck = 4.0 * ck * zk / (qk**2 - 1.0)
    order = np.argsort(zk.imag)
    return zk[order], ck[order]


def sup_error(poles, residues, npts=4000):
    x = -np.logspace(-6, 4, npts)
    x = np.concatenate([x, [0.0]])
    r = np.zeros_like(x, dtype=complex)
    for p, c in zip(poles, residues):
        r += c / (x - p)
    return np.max(np.abs(np.exp(x) - r.real))


def main():
    out = [
        '"""Precomputed pole/residue pairs of the (N-1,N) best rational',
        "approximation to exp on (-inf, 0], keyed by degree N.",
        "",
        'Generated offline by scripts/gen_cf_table.py; do not edit by hand."""',
        "",
        "# fmt: off",
        "CF_POLES_RESIDUES = {",
    ]
    for n in range(2, 17):
        zk, ck = cf_exp(n)
        err = sup_error(zk, ck)
        print(f"N={n:2d}  sup-error {err:.3e}")
        pole_s = ",\n         ".join(repr(complex(z)) for z in zk)
        res_s = ",\n         ".join(repr(complex(c)) for c in ck)
        out.append(f"    {n}: (")
        out.append(f"        [{pole_s}],")
        out.append(f"        [{res_s}],")
        out.append("    ),")
    out.append("}")
    out.append("# fmt: on")
    with open("src/expquad/_cf_data.py", "w") as fh:
        fh.write("\n".join(out) + "\n")
    print("wrote src/expquad/_cf_data.py")


if __name__ == "__main__":
    main()
