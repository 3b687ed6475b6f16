#include "exlie/lfactors.hpp"

#include <stdexcept>

namespace exlie {

namespace {
const std::vector<std::string> kUVars{"u1", "u2", "X"};

// spin sign vectors as exponent pairs on (u1, u2): each (e1, e2, e3) in
// {+-1}^3 contributes u1^{(e1-e3)/2} u2^{(e2-e3)/2}
std::vector<std::pair<int, int>> spin_exponents() {
    std::vector<std::pair<int, int>> out;
    for (int mask = 0; mask < 8; ++mask) {
        int e1 = (mask & 1) ? 1 : -1;
        int e2 = (mask & 2) ? 1 : -1;
        int e3 = (mask & 4) ? 1 : -1;
        out.emplace_back((e1 - e3) / 2, (e2 - e3) / 2);
    }
    return out;
}

std::vector<std::pair<int, int>> std_exponents() {
    return {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}};
}

Scalar power(const Scalar& base, int e) {
    Scalar acc(1);
    Scalar b = e >= 0 ? base : inverse(base);
    for (int k = 0; k < std::abs(e); ++k) acc *= b;
    return acc;
}
}  // namespace

std::vector<Scalar> std_eigenvalues(const G2SatakeParam& p) {
    if (p.u1.is_zero() || p.u2.is_zero())
        throw std::invalid_argument("Satake coordinates must be invertible");
    std::vector<Scalar> out;
    for (auto [a, b] : std_exponents()) out.push_back(power(p.u1, a) * power(p.u2, b));
    return out;
}

std::vector<Scalar> spin_eigenvalues(const G2SatakeParam& p) {
    if (p.u1.is_zero() || p.u2.is_zero())
        throw std::invalid_argument("Satake coordinates must be invertible");
    std::vector<Scalar> out;
    for (auto [a, b] : spin_exponents()) out.push_back(power(p.u1, a) * power(p.u2, b));
    return out;
}

std::vector<LaurentPoly> std_eigenvalues_symbolic() {
    std::vector<LaurentPoly> out;
    for (auto [a, b] : std_exponents())
        out.push_back(LaurentPoly::monomial(kUVars, {a, b, 0}, Scalar(1)));
    return out;
}

std::vector<LaurentPoly> spin_eigenvalues_symbolic() {
    std::vector<LaurentPoly> out;
    for (auto [a, b] : spin_exponents())
        out.push_back(LaurentPoly::monomial(kUVars, {a, b, 0}, Scalar(1)));
    return out;
}

std::vector<Scalar> local_factor(const std::vector<Scalar>& eigs) {
    std::vector<Scalar> coeff{Scalar(1)};
    for (const auto& lam : eigs) {
        std::vector<Scalar> next(coeff.size() + 1);
        for (size_t i = 0; i < coeff.size(); ++i) {
            next[i] += coeff[i];
            next[i + 1] -= coeff[i] * lam;
        }
        coeff = std::move(next);
    }
    return coeff;
}

LaurentPoly local_factor_symbolic(const std::vector<LaurentPoly>& eigs) {
    LaurentPoly acc = LaurentPoly::constant(kUVars, Scalar(1));
    LaurentPoly x = LaurentPoly::monomial(kUVars, {0, 0, 1}, Scalar(1));
    for (const auto& lam : eigs) acc = acc * (LaurentPoly::constant(kUVars, Scalar(1)) - lam * x);
    return acc;
}

bool factorization_check(const G2SatakeParam& p) {
    auto spin = local_factor(spin_eigenvalues(p));
    auto stdf = local_factor(std_eigenvalues(p));
    // multiply std factor by (1 - X)
    std::vector<Scalar> prod(stdf.size() + 1);
    for (size_t i = 0; i < stdf.size(); ++i) {
        prod[i] += stdf[i];
        prod[i + 1] -= stdf[i];
    }
    return spin == prod;
}

bool factorization_check_symbolic() {
    auto spin = local_factor_symbolic(spin_eigenvalues_symbolic());
    auto stdf = local_factor_symbolic(std_eigenvalues_symbolic());
    LaurentPoly one = LaurentPoly::constant(kUVars, Scalar(1));
    LaurentPoly x = LaurentPoly::monomial(kUVars, {0, 0, 1}, Scalar(1));
    return spin == stdf * (one - x);
}

std::vector<Scalar> hecke_polynomial(long ell, const G2SatakeParam& p) {
    if (ell < 2) throw std::invalid_argument("ell must be at least 2");
    Scalar l3(Rat(ell * ell * ell));
    std::vector<Scalar> coeff{Scalar(1)};  // monic in T
    for (const auto& lam : spin_eigenvalues(p)) {
        Scalar root = l3 * lam;
        std::vector<Scalar> next(coeff.size() + 1);
        for (size_t i = 0; i < coeff.size(); ++i) {
            next[i + 1] += coeff[i];
            next[i] -= coeff[i] * root;
        }
        coeff = std::move(next);
    }
    return coeff;
}

bool hecke_roots_modulus_ok(long ell, const G2SatakeParam& p) {
    if (ell < 2) throw std::invalid_argument("ell must be at least 2");
    // roots are ell^3 lambda; |root| = ell^3 exactly iff lambda conj(lambda) = 1
    for (const auto& lam : spin_eigenvalues(p))
        if (!(lam * lam.conj() == Scalar(1))) return false;
    return true;
}

}  // namespace exlie
