#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "exlie/matrix.hpp"
#include "exlie/scalar.hpp"
#include "exlie/upoly.hpp"

namespace exlie {

// Binary cubic form a x^3 + b x^2 y + c x y^2 + d y^3.
template <class K>
struct BinaryCubic {
    K a, b, c, d;

    friend bool operator==(const BinaryCubic& f, const BinaryCubic& g) {
        return f.a == g.a && f.b == g.b && f.c == g.c && f.d == g.d;
    }
};

// Cubic ring on the basis (1, i, j) attached to a binary cubic:
//   ij = ji = -ad,  i^2 = -ac + b i - a j,  j^2 = -bd + d i - c j.
template <class K>
struct CubicRing {
    using Elt = std::array<K, 3>;
    std::array<std::array<Elt, 3>, 3> table;  // table[x][y] = coords of basis_x * basis_y

    Elt mul(const Elt& u, const Elt& v) const {
        Elt r{K(0), K(0), K(0)};
        for (int x = 0; x < 3; ++x) {
            if (is_zero(u[x])) continue;
            for (int y = 0; y < 3; ++y) {
                if (is_zero(v[y])) continue;
                K c = u[x] * v[y];
                for (int k = 0; k < 3; ++k) r[k] = r[k] + c * table[x][y][k];
            }
        }
        return r;
    }

    bool commutative_associative() const {
        Elt basis[3] = {{K(1), K(0), K(0)}, {K(0), K(1), K(0)}, {K(0), K(0), K(1)}};
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) {
                if (mul(basis[x], basis[y]) != mul(basis[y], basis[x])) return false;
                for (int z = 0; z < 3; ++z)
                    if (mul(mul(basis[x], basis[y]), basis[z]) !=
                        mul(basis[x], mul(basis[y], basis[z])))
                        return false;
            }
        return true;
    }

    // 3x3 matrix of multiplication by an element
    SparseMat<K> left_mult(const Elt& u) const {
        SparseMat<K> m(3, 3);
        Elt basis[3] = {{K(1), K(0), K(0)}, {K(0), K(1), K(0)}, {K(0), K(0), K(1)}};
        for (int j = 0; j < 3; ++j) {
            Elt col = mul(u, basis[j]);
            for (int i = 0; i < 3; ++i)
                if (!is_zero(col[i])) m.set(i, j, col[i]);
        }
        return m;
    }

    K ring_trace(const Elt& u) const {
        auto m = left_mult(u);
        return m.get(0, 0) + m.get(1, 1) + m.get(2, 2);
    }

    // Gram matrix of the trace form; nondegenerate exactly for etale rings
    SparseMat<K> trace_gram() const {
        Elt basis[3] = {{K(1), K(0), K(0)}, {K(0), K(1), K(0)}, {K(0), K(0), K(1)}};
        SparseMat<K> g(3, 3);
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) {
                K t = ring_trace(mul(basis[x], basis[y]));
                if (!is_zero(t)) g.set(x, y, t);
            }
        return g;
    }
};

template <class K>
K det3(const SparseMat<K>& m) {
    K d = m.get(0, 0) * (m.get(1, 1) * m.get(2, 2) - m.get(1, 2) * m.get(2, 1));
    d = d - m.get(0, 1) * (m.get(1, 0) * m.get(2, 2) - m.get(1, 2) * m.get(2, 0));
    d = d + m.get(0, 2) * (m.get(1, 0) * m.get(2, 1) - m.get(1, 1) * m.get(2, 0));
    return d;
}

template <class K>
CubicRing<K> cubic_ring(const BinaryCubic<K>& f) {
    CubicRing<K> r;
    using Elt = typename CubicRing<K>::Elt;
    auto one = [](const K& v) { return Elt{v, K(0), K(0)}; };
    r.table[0][0] = one(K(1));
    r.table[0][1] = r.table[1][0] = Elt{K(0), K(1), K(0)};
    r.table[0][2] = r.table[2][0] = Elt{K(0), K(0), K(1)};
    r.table[1][2] = r.table[2][1] = one(-(f.a * f.d));
    r.table[1][1] = Elt{-(f.a * f.c), f.b, -f.a};
    r.table[2][2] = Elt{-(f.b * f.d), f.d, -f.c};
    if (!r.commutative_associative())
        throw std::logic_error("cubic ring structure constants fail associativity");
    return r;
}

template <class K>
K discriminant(const BinaryCubic<K>& f) {
    const K &a = f.a, &b = f.b, &c = f.c, &d = f.d;
    return b * b * c * c - K(4) * a * c * c * c - K(4) * b * b * b * d -
           K(27) * a * a * d * d + K(18) * a * b * c * d;
}

inline Rat square_class_of_disc(const BinaryCubic<Rat>& f) {
    return square_class(discriminant(f));
}

// Twisted GL2 action (g.f)(x, y) = det(g)^{-1} f((x, y) g).
template <class K>
BinaryCubic<K> gl2_act(const std::array<std::array<K, 2>, 2>& g, const BinaryCubic<K>& f) {
    K det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    if (is_zero(det)) throw std::invalid_argument("singular matrix in gl2_act");
    // substitute (x, y) -> (p x + r y, q x + s y), row-vector convention
    const K &p = g[0][0], &q = g[0][1], &r = g[1][0], &s = g[1][1];
    // powers of the two linear forms, as coefficient arrays in (x, y)
    auto lin_pow = [](const K& u, const K& v, int n) {
        std::vector<K> out(n + 1, K(0));
        // (u x + v y)^n: binomials stay tiny
        long binom = 1;
        for (int k = 0; k <= n; ++k) {
            K term(binom);
            for (int t = 0; t < n - k; ++t) term = term * u;
            for (int t = 0; t < k; ++t) term = term * v;
            out[k] = term;
            binom = binom * (n - k) / (k + 1);
        }
        return out;
    };
    std::array<K, 4> out{K(0), K(0), K(0), K(0)};
    const K coef[4] = {f.a, f.b, f.c, f.d};
    for (int m = 0; m < 4; ++m) {
        if (is_zero(coef[m])) continue;
        auto xs = lin_pow(p, r, 3 - m);
        auto ys = lin_pow(q, s, m);
        for (int i = 0; i <= 3 - m; ++i)
            for (int j = 0; j <= m; ++j) out[i + j] = out[i + j] + coef[m] * xs[i] * ys[j];
    }
    for (auto& v : out) v = v / det;
    return BinaryCubic<K>{out[0], out[1], out[2], out[3]};
}

// Coordinates on V_H = U_H/[U_H, U_H] and its symplectic pairing.
template <class K>
using VHVector = std::array<K, 4>;

template <class K>
K vh_pairing(const VHVector<K>& v, const VHVector<K>& w) {
    K third = K(1) / K(3);
    return v[0] * w[3] - third * v[1] * w[2] + third * v[2] * w[1] - v[3] * w[0];
}

// Linear data of the Fourier characters on the unipotent radicals.
struct UnipotentCharacterData {
    std::string group;               // "U3", "UP" or "UH"
    SparseMat<Rat> sym_coeffs;       // U3/UP: symmetric matrix alpha with u -> Tr(alpha u)
    std::array<Rat, 2> v_coeffs;     // UP: coefficients on (v1, v2)
    VHVector<Rat> vh;                // UH: the pairing vector
    Rat D;

    Rat eval_u3(const SparseMat<Rat>& u) const {
        Rat acc(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) acc += sym_coeffs.get(i, j) * u.get(j, i);
        return acc;
    }
};

UnipotentCharacterData psi_D_data(const std::string& group, const Rat& D);

}  // namespace exlie
