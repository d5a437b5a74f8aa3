"""Growing a Hankel factorization one border at a time.

Each new order adds one row and column of moments to G_n.  The factor S
with S G S^T = H diagonal only needs one fresh column per step, and its
columns are the coefficient vectors of the monic orthogonal polynomials.
"""

from classicalseq import (DELTA, LEGENDRE, QuasiDefiniteViolation, build_gram, cholesky_extend,
                          cholesky_init, extract_polynomials, generate_moments,
                          hankel_determinants, verify_factorization)

m = generate_moments(LEGENDRE, 2, 5)
st = cholesky_init(m)
print(f"order 0: h = {st.h[0]}")
for _ in range(5):
    st = cholesky_extend(st, m)
    n = st.order
    print(f"order {n}: h_{n} = {st.h[n]},  new column = {[str(x) for x in st.column(n)]}")

print("\nS G S^T == H:", verify_factorization(st, build_gram(m, 5)))

dets = hankel_determinants(m, 5)
print("h_j == det G_j / det G_(j-1):",
      all(st.h[j] == dets[j] / (dets[j - 1] if j else 1) for j in range(6)))

print("\nMonic Legendre polynomials:")
for j, p in enumerate(extract_polynomials(st)):
    print(f"  P_{j} = {p}")

# The point mass at 0 has a singular G_1, so bordering stops there.
d = generate_moments(DELTA, 1, 2)
try:
    cholesky_extend(cholesky_init(d), d)
except QuasiDefiniteViolation as exc:
    print("\npoint mass:", exc)
