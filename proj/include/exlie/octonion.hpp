#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "exlie/scalar.hpp"

namespace exlie {

// Basis indices of the split octonions in the fixed order
// (s1, s2, s3, t1, t2, t3, s4, t4).  The identity is s4 + t4.
enum OctBasis : int { S1 = 0, S2, S3, T1, T2, T3, S4, T4 };

inline const char* oct_basis_name(int i) {
    static const char* names[8] = {"s1", "s2", "s3", "t1", "t2", "t3", "s4", "t4"};
    return names[i];
}

namespace detail {
template <class K>
bool kz(const K& v) { return is_zero(v); }

struct OctTableEntry {
    int coeff;  // -1, 0, 1
    int basis;  // meaningful when coeff != 0
};

// Product of basis elements, row * column.  Zero products keep basis 0.
inline const OctTableEntry (&oct_table())[8][8] {
    static const OctTableEntry t[8][8] = {
        /* s1 */ {{0, 0}, {-1, T3}, {1, T2}, {1, S4}, {0, 0}, {0, 0}, {0, 0}, {1, S1}},
        /* s2 */ {{1, T3}, {0, 0}, {-1, T1}, {0, 0}, {1, S4}, {0, 0}, {0, 0}, {1, S2}},
        /* s3 */ {{-1, T2}, {1, T1}, {0, 0}, {0, 0}, {0, 0}, {1, S4}, {0, 0}, {1, S3}},
        /* t1 */ {{1, T4}, {0, 0}, {0, 0}, {0, 0}, {1, S3}, {-1, S2}, {1, T1}, {0, 0}},
        /* t2 */ {{0, 0}, {1, T4}, {0, 0}, {-1, S3}, {0, 0}, {1, S1}, {1, T2}, {0, 0}},
        /* t3 */ {{0, 0}, {0, 0}, {1, T4}, {1, S2}, {-1, S1}, {0, 0}, {1, T3}, {0, 0}},
        /* s4 */ {{1, S1}, {1, S2}, {1, S3}, {0, 0}, {0, 0}, {0, 0}, {1, S4}, {0, 0}},
        /* t4 */ {{0, 0}, {0, 0}, {0, 0}, {1, T1}, {1, T2}, {1, T3}, {0, 0}, {1, T4}},
    };
    return t;
}
}  // namespace detail

// Split octonion with coefficients in a field K (exact rationals, Gaussian
// rationals, or rational functions of a formal parameter).
template <class K>
struct Octonion {
    std::array<K, 8> c{};

    Octonion() = default;

    static Octonion basis(int i) {
        Octonion x;
        x.c[i] = K(1);
        return x;
    }
    static Octonion one() {
        Octonion x;
        x.c[S4] = K(1);
        x.c[T4] = K(1);
        return x;
    }
    static Octonion scalar(const K& v) {
        Octonion x;
        x.c[S4] = v;
        x.c[T4] = v;
        return x;
    }

    bool is_zero() const {
        for (const auto& v : c)
            if (!detail::kz(v)) return false;
        return true;
    }

    friend Octonion operator+(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend Octonion operator-(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    Octonion operator-() const {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = -c[i];
        return r;
    }
    Octonion scaled(const K& v) const {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = c[i] * v;
        return r;
    }
    friend bool operator==(const Octonion& a, const Octonion& b) { return a.c == b.c; }
    friend bool operator!=(const Octonion& a, const Octonion& b) { return !(a == b); }

    friend Octonion operator*(const Octonion& a, const Octonion& b) {
        Octonion r;
        const auto& tbl = detail::oct_table();
        for (int i = 0; i < 8; ++i) {
            if (detail::kz(a.c[i])) continue;
            for (int j = 0; j < 8; ++j) {
                if (detail::kz(b.c[j])) continue;
                const auto& e = tbl[i][j];
                if (e.coeff == 0) continue;
                K term = a.c[i] * b.c[j];
                if (e.coeff < 0) term = -term;
                r.c[e.basis] = r.c[e.basis] + term;
            }
        }
        return r;
    }

    // conj(si) = -si, conj(ti) = -ti (i <= 3), conj(s4) = t4, conj(t4) = s4
    Octonion conj() const {
        Octonion r;
        for (int i = S1; i <= T3; ++i) r.c[i] = -c[i];
        r.c[S4] = c[T4];
        r.c[T4] = c[S4];
        return r;
    }

    K trace() const { return c[S4] + c[T4]; }

    // N(x) 1 = x conj(x); the product is scalar, so its s4 coordinate is N(x)
    K norm() const {
        Octonion p = (*this) * conj();
        return p.c[S4];
    }
};

template <class K>
K trace_pairing(const Octonion<K>& x, const Octonion<K>& y) {
    return (x * y.conj()).trace();
}

// V7, the trace-zero octonions, in the basis (s1,s2,s3,t1,t2,t3,s4-t4).
constexpr int kV7Dim = 7;

template <class K>
Octonion<K> v7_basis(int i) {
    if (i < 6) return Octonion<K>::basis(i);
    return Octonion<K>::basis(S4) - Octonion<K>::basis(T4);
}

template <class K>
std::array<K, kV7Dim> v7_coords(const Octonion<K>& x) {
    if (!detail::kz(x.trace())) throw std::invalid_argument("octonion has nonzero trace");
    std::array<K, kV7Dim> v{};
    for (int i = 0; i < 6; ++i) v[i] = x.c[i];
    v[6] = x.c[S4];  // coefficient of s4 - t4
    return v;
}

template <class K>
Octonion<K> v7_octonion(const std::array<K, kV7Dim>& v) {
    Octonion<K> x;
    for (int i = 0; i < 6; ++i) x.c[i] = v[i];
    x.c[S4] = v[6];
    x.c[T4] = -v[6];
    return x;
}

}  // namespace exlie
