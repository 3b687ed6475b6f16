#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exlie/scalar.hpp"

namespace exlie {

// Dense univariate polynomial over Q.  Coefficient i belongs to X^i.
struct UPoly {
    std::vector<Rat> c;

    UPoly() {}
    UPoly(const Rat& r) { if (sgn(r) != 0) c = {r}; }
    UPoly(long v) : UPoly(Rat(v)) {}
    static UPoly var() { return UPoly::from({Rat(0), Rat(1)}); }
    static UPoly from(std::vector<Rat> v) {
        UPoly p;
        p.c = std::move(v);
        p.trim();
        return p;
    }

    void trim() {
        while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }  // -1 for zero
    Rat lead() const { return c.empty() ? Rat(0) : c.back(); }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        UPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
        r.trim();
        return r;
    }
    UPoly operator-() const {
        UPoly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        UPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }

    // quotient and remainder
    static std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        UPoly q;
        if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, Rat(0));
        while (!a.is_zero() && a.degree() >= b.degree()) {
            Rat f = a.lead() / b.lead();
            int k = a.degree() - b.degree();
            q.c[k] += f;
            for (size_t i = 0; i < b.c.size(); ++i) a.c[i + k] -= f * b.c[i];
            a.trim();
        }
        q.trim();
        return {q, a};
    }

    static UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            a = b;
            b = r;
        }
        if (!a.is_zero()) {
            Rat inv = 1 / a.lead();
            for (auto& x : a.c) x *= inv;  // monic normalization
        }
        return a;
    }

    UPoly derivative() const {
        UPoly r;
        for (size_t i = 1; i < c.size(); ++i) r.c.push_back(Rat((long)i) * c[i]);
        r.trim();
        return r;
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // exact square root, if one exists
    std::optional<UPoly> sqrt_exact() const {
        if (is_zero()) return UPoly();
        if (degree() % 2) return std::nullopt;
        if (!rat_is_square(lead())) return std::nullopt;
        int m = degree() / 2;
        UPoly r;
        r.c.assign(m + 1, Rat(0));
        r.c[m] = *rat_sqrt(lead());
        for (int k = m - 1; k >= 0; --k) {
            // coefficient of X^(k+m) in r^2 must match ours
            Rat s(0);
            for (int i = k + 1; i < m; ++i) {
                int j = k + m - i;
                if (j > m || j <= k) continue;
                s += r.c[i] * r.c[j];
            }
            Rat target = (size_t)(k + m) < c.size() ? c[k + m] : Rat(0);
            r.c[k] = (target - s) / (Rat(2) * r.c[m]);
        }
        return (r * r == *this) ? std::optional<UPoly>(r) : std::nullopt;
    }

    std::string str(const std::string& var = "D") const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            if (sgn(c[i]) == 0) continue;
            if (!s.empty()) s += sgn(c[i]) > 0 ? "+" : "-";
            else if (sgn(c[i]) < 0) s += "-";
            Rat a = abs(c[i]);
            if (i == 0 || a != 1) s += rat_str(a);
            if (i > 0) {
                if (a != 1) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }
};

// Rational function p/q over Q in one symbol; denominator kept monic and
// coprime to the numerator.  This is the coefficient field for the
// symbolic-parameter runs of the orbit calculus.
struct RatFunc {
    UPoly num, den;

    RatFunc() : num(), den(Rat(1)) {}
    RatFunc(long v) : num(Rat(v)), den(Rat(1)) {}
    RatFunc(const Rat& r) : num(r), den(Rat(1)) {}
    RatFunc(UPoly n, UPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }
    static RatFunc var() { return RatFunc(UPoly::var(), UPoly(Rat(1))); }

    void normalize() {
        if (den.is_zero()) throw std::domain_error("zero denominator");
        if (num.is_zero()) { den = UPoly(Rat(1)); return; }
        UPoly g = UPoly::gcd(num, den);
        if (g.degree() > 0) {
            num = UPoly::divmod(num, g).first;
            den = UPoly::divmod(den, g).first;
        }
        Rat l = den.lead();
        if (l != 1) {
            for (auto& x : num.c) x /= l;
            for (auto& x : den.c) x /= l;
        }
    }

    bool is_zero() const { return num.is_zero(); }
    bool is_constant() const { return num.degree() <= 0 && den.degree() == 0; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    RatFunc operator-() const { RatFunc r = *this; r.num = -r.num; return r; }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.num, a.den * b.den);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFunc(a.num * b.den, a.den * b.num);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // square in Q(D): p/q square iff p*q is a square polynomial
    bool is_square() const {
        if (is_zero()) return true;
        return (num * den).sqrt_exact().has_value();
    }

    std::string str(const std::string& var = "D") const {
        if (den == UPoly(Rat(1))) return num.str(var);
        return "(" + num.str(var) + ")/(" + den.str(var) + ")";
    }
};

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }
inline RatFunc inverse(const RatFunc& f) { return RatFunc(1) / f; }

}  // namespace exlie
