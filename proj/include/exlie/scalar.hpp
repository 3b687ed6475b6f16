#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

namespace exlie {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline Rat inverse(const Rat& r) {
    if (sgn(r) == 0) throw std::domain_error("division by zero rational");
    return Rat(1) / r;
}

inline std::string rat_str(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

// true iff r = q^2 for some rational q
inline bool rat_is_square(const Rat& r) {
    if (sgn(r) < 0) return false;
    if (sgn(r) == 0) return true;
    Rat c = r;
    c.canonicalize();
    return mpz_perfect_square_p(c.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(c.get_den().get_mpz_t());
}

inline std::optional<Rat> rat_sqrt(const Rat& r) {
    if (!rat_is_square(r)) return std::nullopt;
    Rat c = r;
    c.canonicalize();
    Int n, d;
    mpz_sqrt(n.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), c.get_den().get_mpz_t());
    return Rat(n, d);
}

// squarefree representative of the class of r in Q^x / (Q^x)^2
inline Rat square_class(const Rat& r) {
    if (sgn(r) == 0) return Rat(0);
    Rat c = r;
    c.canonicalize();
    Int n = c.get_num() * c.get_den();  // same class, integral
    Int s = sgn(n) < 0 ? Int(-1) : Int(1);
    n = abs(n);
    Int out = 1;
    // trial division is fine at the sizes this library meets
    for (Int p = 2; p * p <= n; ++p) {
        unsigned long e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e % 2) out *= p;
    }
    return Rat(s * out * n);
}

// Gaussian rational a + b*i with i^2 = -1. The imaginary part is zero in
// purely rational contexts; the compact-group machinery needs it.
struct Scalar {
    Rat re, im;

    Scalar() : re(0), im(0) {}
    Scalar(long v) : re(v), im(0) {}
    Scalar(const Rat& r) : re(r), im(0) {}
    Scalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i() { return Scalar(Rat(0), Rat(1)); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_rational() const { return sgn(im) == 0; }

    Scalar conj() const { return Scalar(re, -im); }
    Rat norm() const { return re * re + im * im; }

    Scalar operator-() const { return Scalar(-re, -im); }
    Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
    Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
    Scalar& operator*=(const Scalar& o) {
        Rat r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        Rat n = o.norm();
        if (sgn(n) == 0) throw std::domain_error("division by zero Scalar");
        Rat r = (re * o.re + im * o.im) / n;
        im = (im * o.re - re * o.im) / n;
        re = r;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const {
        if (sgn(im) == 0) return rat_str(re);
        return rat_str(re) + (sgn(im) < 0 ? "-" : "+") + rat_str(abs(im)) + "i";
    }
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline Scalar inverse(const Scalar& s) { return Scalar(1) / s; }
inline bool is_zero(long v) { return v == 0; }

// uniform small rationals, for property tests; deterministic under a fixed seed
inline Rat make_rat(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Rat random_rat(std::mt19937_64& rng, long num_bound = 9, long den_bound = 4) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    return make_rat(num(rng), den(rng));
}

}  // namespace exlie
