"""Five ways to tell that a moment sequence is classical.

Every check below works on exact matrices built from the moments and the
Pearson data; nothing is approximated.
"""

from classicalseq import (FIXTURES, bochner_verify, build_gram, factorize, first_structure,
                          generate_moments, hahn_basis, hahn_verify, ngn_check,
                          rodrigues_verify, second_structure, sigma_chain)

fx = FIXTURES["legendre"]
p = fx.pearson
m = generate_moments(p, fx.mu0, 9)
st = factorize(m, 8)

rep = bochner_verify(st.truncate(5), p)
print("eigenvalues of D_5:", [str(x) for x in rep.eigenvalues], "all columns pass:", rep.ok)

chain = sigma_chain(m, 2)
for k in (1, 2):
    db = hahn_basis(st, p, k, 5)
    ok = hahn_verify(db, build_gram(chain[k], 5))
    print(f"depth {k}: h^({k}) = {[str(x) for x in db.h]}  orthogonal: {ok}")

print("NGN identity for n <= 3:", all(ngn_check(m, p, n) for n in range(4)))

fs = first_structure(m, st, p, 5)
print("\nphi Q_j = a_j P_(j+2) + b_j P_(j+1) + c_j P_j")
for j, (a, b, c) in enumerate(fs.triples):
    print(f"  j={j}: a={a}, b={b}, c={c}")
print(f"  psi recovered from c_0: d = {fs.d_hat}, e = {fs.e_hat}")

ss = second_structure(m, st, p, 5)
print("\nP_j = Q_j + kappa_j Q_(j-1) + xi_j Q_(j-2)")
for j, (kappa, xi) in enumerate(ss.pairs):
    print(f"  j={j}: kappa={kappa}, xi={xi}")
print(f"  recovered data is {ss.t} times the input")

for k in (1, 2, 3):
    r = rodrigues_verify(m, st, p, 4, k)
    print(f"Rodrigues k={k}: varpi = {r.varpi}, identity holds: {r.passed}")

# Break one moment and watch the checks react.
bad = m.replace(7, m[7] + 1)
print("\nafter corrupting mu_7:")
print("  NGN at n=3:", ngn_check(bad, p, 3))
print("  Bochner at order 4:", bochner_verify(factorize(bad, 4), p).ok)
