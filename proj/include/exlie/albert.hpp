#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exlie/cubic.hpp"
#include "exlie/g2.hpp"
#include "exlie/octonion.hpp"

namespace exlie {

// Element of the Albert algebra: the hermitian matrix
//     ( d   zbar  y    )
//     ( z   e     xbar )
//     ( ybar x    f    )
// with rational (or symbolic) diagonal and octonion off-diagonal entries.
template <class K>
struct AlbertElement {
    K d, e, f;
    Octonion<K> x, y, z;

    bool is_zero() const {
        return exlie::is_zero(d) && exlie::is_zero(e) && exlie::is_zero(f) &&
               x.is_zero() && y.is_zero() && z.is_zero();
    }
    friend bool operator==(const AlbertElement& a, const AlbertElement& b) {
        return a.d == b.d && a.e == b.e && a.f == b.f && a.x == b.x && a.y == b.y &&
               a.z == b.z;
    }
    friend AlbertElement operator-(const AlbertElement& a, const AlbertElement& b) {
        return {a.d - b.d, a.e - b.e, a.f - b.f, a.x - b.x, a.y - b.y, a.z - b.z};
    }
};

template <class K>
K albert_det(const AlbertElement<K>& A) {
    return A.d * A.e * A.f - A.d * A.x.norm() - A.e * A.y.norm() - A.f * A.z.norm() +
           ((A.x * A.y) * A.z).trace();
}

template <class K>
K albert_trace(const AlbertElement<K>& A) {
    return A.d + A.e + A.f;
}

namespace detail {
// full 3x3 octonion matrix of an Albert element
template <class K>
std::array<std::array<Octonion<K>, 3>, 3> albert_matrix(const AlbertElement<K>& A) {
    return {{{Octonion<K>::scalar(A.d), A.z.conj(), A.y},
             {A.z, Octonion<K>::scalar(A.e), A.x.conj()},
             {A.y.conj(), A.x, Octonion<K>::scalar(A.f)}}};
}

template <class K>
std::array<std::array<Octonion<K>, 3>, 3> mat_mul(
    const std::array<std::array<Octonion<K>, 3>, 3>& a,
    const std::array<std::array<Octonion<K>, 3>, 3>& b) {
    std::array<std::array<Octonion<K>, 3>, 3> r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    return r;
}
}  // namespace detail

// A^2 of a hermitian matrix is hermitian again; return it as an element
template <class K>
AlbertElement<K> albert_square(const AlbertElement<K>& A) {
    auto m = detail::mat_mul(detail::albert_matrix(A), detail::albert_matrix(A));
    AlbertElement<K> r;
    r.d = m[0][0].c[S4] + m[0][0].c[T4];
    r.d = r.d / K(2);  // scalar entry t*1 has both coordinates equal to t
    r.e = (m[1][1].c[S4] + m[1][1].c[T4]) / K(2);
    r.f = (m[2][2].c[S4] + m[2][2].c[T4]) / K(2);
    r.z = m[1][0];
    r.x = m[2][1];
    r.y = m[0][2];
    return r;
}

template <class K>
AlbertElement<K> albert_scale(const AlbertElement<K>& A, const K& c) {
    return {A.d * c, A.e * c, A.f * c, A.x.scaled(c), A.y.scaled(c), A.z.scaled(c)};
}

template <class K>
AlbertElement<K> albert_identity() {
    return {K(1), K(1), K(1), {}, {}, {}};
}

// rank stratification: 0, 1 (adjoint vanishes), 3 (det nonzero), else 2
template <class K>
int albert_rank(const AlbertElement<K>& A) {
    if (A.is_zero()) return 0;
    K tr = albert_trace(A);
    AlbertElement<K> sq = albert_square(A);
    K sigma = (tr * tr - albert_trace(sq)) / K(2);
    AlbertElement<K> adj = sq - albert_scale(A, tr);
    adj.d = adj.d + sigma;
    adj.e = adj.e + sigma;
    adj.f = adj.f + sigma;
    if (adj.is_zero()) return 1;
    if (!is_zero(albert_det(A))) return 3;
    return 2;
}

// the six entry equations characterizing rank <= 1
template <class K>
bool rank_one_entry_equations(const AlbertElement<K>& A) {
    return A.x.norm() == A.e * A.f && A.y.norm() == A.d * A.f && A.z.norm() == A.d * A.e &&
           A.x.scaled(A.d) == A.y.conj() * A.z.conj() &&
           A.y.scaled(A.e) == A.z.conj() * A.x.conj() &&
           A.z.scaled(A.f) == A.x.conj() * A.y.conj();
}

// the symmetric matrix beta(A) with psi_A|U3 : u -> Tr(beta u)
template <class K>
SparseMat<K> siegel_character_matrix(const AlbertElement<K>& A) {
    SparseMat<K> b(3, 3);
    b.set(0, 0, A.d);
    b.set(1, 1, A.e);
    b.set(2, 2, A.f);
    K hz = A.z.trace() / K(2), hy = A.y.trace() / K(2), hx = A.x.trace() / K(2);
    b.set(0, 1, hz); b.set(1, 0, hz);
    b.set(0, 2, hy); b.set(2, 0, hy);
    b.set(1, 2, hx); b.set(2, 1, hx);
    return b;
}

// Membership in omega: d=0, e=-D, f=1, x and z trace zero with
// N(x) = -D, N(z) = 0, z perp x, y = -D^{-1} z x.
template <class K>
struct OmegaDiagnostic {
    bool ok = false;
    std::string first_failure;  // empty when ok
};

template <class K>
OmegaDiagnostic<K> omega_membership(const AlbertElement<K>& A, const K& D) {
    if (is_zero(D)) throw std::invalid_argument("omega requires D != 0");
    auto fail = [](const char* why) { return OmegaDiagnostic<K>{false, why}; };
    if (!(A.d == K(0))) return fail("d != 0");
    if (!(A.e == -D)) return fail("e != -D");
    if (!(A.f == K(1))) return fail("f != 1");
    if (!is_zero(A.x.trace())) return fail("Tr(x) != 0");
    if (!is_zero(A.z.trace())) return fail("Tr(z) != 0");
    if (!(A.x.norm() == -D)) return fail("N(x) != -D");
    if (!is_zero(A.z.norm())) return fail("N(z) != 0");
    if (!is_zero(trace_pairing(A.z, A.x))) return fail("z not perpendicular to x");
    if (!(A.y == (A.z * A.x).scaled(K(-1) / D))) return fail("y != -D^{-1} z x");
    return {true, ""};
}

template <class K>
AlbertElement<K> make_omega(const Octonion<K>& x, const Octonion<K>& z, const K& D) {
    AlbertElement<K> A;
    A.d = K(0);
    A.e = -D;
    A.f = K(1);
    A.x = x;
    A.z = z;
    A.y = (z * x).scaled(K(-1) / D);
    return A;
}

// U0 = upper-row unipotent of GL3, acting as (x, y, z) -> (x + a y + b z, y, z)
template <class K>
struct U0Element {
    K a, b;
};

template <class K>
AlbertElement<K> u0_act(const U0Element<K>& u, const AlbertElement<K>& A) {
    AlbertElement<K> r = A;
    r.x = A.x + A.y.scaled(u.a) + A.z.scaled(u.b);
    return r;
}

// orbit representative with stabilizer data
template <class K>
struct OrbitRepresentative {
    std::string name;        // A3, A2, A1, A0
    AlbertElement<K> rep;
    std::string stabilizer;  // structural description
    int stabilizer_dim;
};

template <class K>
std::vector<OrbitRepresentative<K>> orbit_representatives(const G2Algebra<K>& g2, const K& D,
                                                          bool square, const K& sqrt_d = K(0)) {
    if (is_zero(D)) throw std::invalid_argument("orbits require D != 0");
    using O = Octonion<K>;
    std::vector<OrbitRepresentative<K>> out;
    auto stab_dim = [&](const AlbertElement<K>& A) {
        return (int)g2.stabilizer_subalgebra({A.x, A.y, A.z}).size();
    };
    auto stab_contains = [&](const AlbertElement<K>& A, const std::string& label) {
        auto stab = g2.stabilizer_subalgebra({A.x, A.y, A.z});
        // membership of the root vector in the stabilizer span of g2 coefficients
        RowReducer<K> rr;
        for (const auto& c : stab) {
            SpVec<K> w;
            int k = 0;
            for (const auto& bvec : g2.basis()) {
                K coeff = vec_get(c, k++);
                vec_add_scaled(w, bvec, coeff);
            }
            rr.add(w);
        }
        return rr.contains(g2.root(label).elt.wedge);
    };
    if (square) {
        const K& dd = sqrt_d;
        O x = (O::basis(S4) - O::basis(T4)).scaled(dd);
        auto a3 = make_omega(x, O(), D);
        out.push_back({"A3", a3, "SL3", stab_dim(a3)});
        auto a2 = make_omega(x, O::basis(T3), D);
        auto a1 = make_omega(x, O::basis(S3), D);
        auto describe = [&](const AlbertElement<K>& A) {
            bool upper = stab_contains(A, "a+3b") && stab_contains(A, "2a+3b");
            return std::string(upper ? "SL2.V" : "SL2.Vbar");
        };
        out.push_back({"A2", a2, describe(a2), stab_dim(a2)});
        out.push_back({"A1", a1, describe(a1), stab_dim(a1)});
        auto a0 = make_omega(x, O::basis(S1) + O::basis(T3), D);
        out.push_back({"A0", a0, "U_D", stab_dim(a0)});
    } else {
        O x = O::basis(S2) + O::basis(T2).scaled(D);
        auto a1 = make_omega(x, O(), D);
        out.push_back({"A1", a1, "SU_D(2,1)", stab_dim(a1)});
        auto a0 = make_omega(x, O::basis(T3), D);
        out.push_back({"A0", a0, "U_D", stab_dim(a0)});
    }
    return out;
}

// open-orbit representative used by the Heisenberg-to-U0 comparison
template <class K>
AlbertElement<K> open_orbit_rep(const K& D, bool square, const K& sqrt_d = K(0)) {
    using O = Octonion<K>;
    if (square) {
        O x = (O::basis(S4) - O::basis(T4)).scaled(sqrt_d);
        return make_omega(x, (O::basis(S1) + O::basis(T3)).scaled(sqrt_d), D);
    }
    return make_omega(O::basis(S2) + O::basis(T2).scaled(D), O::basis(T3), D);
}

// word in the one-parameter subgroups of U_H
template <class K>
using UHWord = std::vector<std::pair<std::string, K>>;

template <class K>
SparseMat<K> uh_matrix(const G2Algebra<K>& g2, const UHWord<K>& word) {
    auto labels = g2.heisenberg_labels();
    SparseMat<K> m = SparseMat<K>::identity(kV7Dim);
    for (const auto& [label, lam] : word) {
        bool known = false;
        for (const auto& l : labels) known = known || l == label;
        if (!known) throw std::invalid_argument("factor outside U_H: " + label);
        m = m * g2.exp_nilpotent(g2.root(label).elt.action.scaled(lam));
    }
    return m;
}

// The map p : U_H -> U_0 on the open orbit: u acts on the triple (x, y, z)
// as (x + a y + b z, y, z); returns (a, b).
template <class K>
U0Element<K> heisenberg_to_u0(const G2Algebra<K>& g2, const UHWord<K>& word, const K& D,
                              bool square, const K& sqrt_d = K(0)) {
    AlbertElement<K> A = open_orbit_rep(D, square, sqrt_d);
    SparseMat<K> u = uh_matrix(g2, word);
    Octonion<K> ux = g2.apply_v7_map(u, A.x);
    Octonion<K> uy = g2.apply_v7_map(u, A.y);
    Octonion<K> uz = g2.apply_v7_map(u, A.z);
    if (!(uy == A.y) || !(uz == A.z))
        throw std::domain_error("element does not stabilize the line configuration");
    // solve ux - x = a y + b z over the octonion coordinates
    Octonion<K> rhs = ux - A.x;
    SparseMat<K> sys(8, 2);
    for (int i = 0; i < 8; ++i) {
        if (!is_zero(A.y.c[i])) sys.set(i, 0, A.y.c[i]);
        if (!is_zero(A.z.c[i])) sys.set(i, 1, A.z.c[i]);
    }
    SpVec<K> b;
    for (int i = 0; i < 8; ++i)
        if (!is_zero(rhs.c[i])) b[i] = rhs.c[i];
    auto sol = solve_linear(sys, b);
    if (!sol) throw std::domain_error("element does not stabilize the line configuration");
    return U0Element<K>{vec_get(*sol, 0), vec_get(*sol, 1)};
}

// The binary cubic of the character psi_0 . p, computed from the map p on
// the four generators of V_H (not hard-coded).
template <class K>
BinaryCubic<K> induced_binary_cubic(const G2Algebra<K>& g2, const K& D, bool square,
                                    const K& sqrt_d = K(0)) {
    if (is_zero(D)) throw std::invalid_argument("induced cubic requires D != 0");
    const char* gens[4] = {"a", "a+b", "a+2b", "a+3b"};
    std::array<K, 4> aval;
    for (int i = 0; i < 4; ++i) {
        UHWord<K> w{{gens[i], K(1)}};
        aval[i] = heisenberg_to_u0(g2, w, D, square, sqrt_d).a;
    }
    // psi_0(p(n)) = sum_i mu_i a_i matches the pairing with
    // w = (a_4, -a_3, a_2, -a_1) under the cubic-coefficient dictionary
    return BinaryCubic<K>{aval[3], -aval[2], aval[1], -aval[0]};
}

}  // namespace exlie
