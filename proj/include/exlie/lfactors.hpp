#pragma once

#include <vector>

#include "exlie/laurent.hpp"
#include "exlie/scalar.hpp"

namespace exlie {

// Satake parameter on the G2 maximal torus inside the SO7 torus, with the
// third coordinate (u1 u2)^{-1}.  Scalars may be Gaussian rationals so that
// exact roots of unity are representable.
struct G2SatakeParam {
    Scalar u1, u2;
};

// Std: the seven eigenvalues {1, u1, u2, u1 u2, and inverses}
std::vector<Scalar> std_eigenvalues(const G2SatakeParam& p);

// Spin: the eight half-spin sign vectors, simplified on the G2 locus where
// every eigenvalue is an integral monomial; equals Std plus one extra 1
std::vector<Scalar> spin_eigenvalues(const G2SatakeParam& p);

// symbolic versions over Q[u1^, u2^]
std::vector<LaurentPoly> std_eigenvalues_symbolic();
std::vector<LaurentPoly> spin_eigenvalues_symbolic();

// reciprocal local factor det(1 - X rho(s)) = prod (1 - lambda X);
// coefficient k of the result belongs to X^k
std::vector<Scalar> local_factor(const std::vector<Scalar>& eigs);

// same thing with symbolic eigenvalues, as a Laurent polynomial in
// (u1, u2, X)
LaurentPoly local_factor_symbolic(const std::vector<LaurentPoly>& eigs);

// det(1 - X Spin) = (1 - X) det(1 - X Std)
bool factorization_check(const G2SatakeParam& p);
bool factorization_check_symbolic();

// Hecke polynomial det(T - ell^3 Spin(s)), monic of degree 8;
// coefficient k of the result belongs to T^k
std::vector<Scalar> hecke_polynomial(long ell, const G2SatakeParam& p);

// for exact-unitary parameters every root has absolute value ell^3,
// certified algebraically through lambda conj(lambda) = 1
bool hecke_roots_modulus_ok(long ell, const G2SatakeParam& p);

}  // namespace exlie
