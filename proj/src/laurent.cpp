#include "exlie/laurent.hpp"

#include <stdexcept>

namespace exlie {

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, const Scalar& c) {
    LaurentPoly p(std::move(vars));
    p.add_term(Expo(p.vars_.size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, Expo e, const Scalar& c) {
    LaurentPoly p(std::move(vars));
    if (e.size() != p.vars_.size()) throw std::invalid_argument("exponent arity mismatch");
    p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(const Expo& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar LaurentPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("Laurent variable sets differ");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
    LaurentPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r(vars_);
    Expo e(vars_.size());
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Scalar LaurentPoly::eval(const std::vector<Scalar>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("evaluation arity mismatch");
    Scalar acc;
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (point[i].is_zero() && e[i] < 0)
                throw std::domain_error("evaluation at zero for variable with negative exponent");
            Scalar base = e[i] > 0 ? point[i] : inverse(point[i]);
            for (int k = 0; k < std::abs(e[i]); ++k) t *= base;
        }
        acc += t;
    }
    return acc;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
    check_compatible(d);
    if (d.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    if (is_zero()) return LaurentPoly(vars_);
    const size_t n = vars_.size();
    // For an exact quotient q, Newton(q) + Newton(d) = Newton(this), so the
    // support of q lies in the coordinate box below.  Quotient exponents
    // escaping it certify a remainder (and bound the loop).
    Expo lo(n), hi(n);
    for (size_t i = 0; i < n; ++i) {
        int rmin = 0, rmax = 0, dmin = 0, dmax = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            rmin = first ? e[i] : std::min(rmin, e[i]);
            rmax = first ? e[i] : std::max(rmax, e[i]);
            first = false;
        }
        first = true;
        for (const auto& [e, c] : d.terms_) {
            dmin = first ? e[i] : std::min(dmin, e[i]);
            dmax = first ? e[i] : std::max(dmax, e[i]);
            first = false;
        }
        lo[i] = rmin - dmin;
        hi[i] = rmax - dmax;
    }
    LaurentPoly q(vars_);
    LaurentPoly r = *this;
    const auto& [dl, dc] = *d.terms_.rbegin();  // lex-leading term of the divisor
    Expo e(n);
    while (!r.terms_.empty()) {
        const auto& [rl, rc] = *r.terms_.rbegin();
        for (size_t i = 0; i < n; ++i) {
            e[i] = rl[i] - dl[i];
            if (e[i] < lo[i] || e[i] > hi[i])
                throw std::domain_error("inexact Laurent division");
        }
        Scalar f = rc / dc;
        q.add_term(e, f);
        // r -= f * x^e * d
        Expo t(n);
        for (const auto& [de, dv] : d.terms_) {
            for (size_t i = 0; i < n; ++i) t[i] = de[i] + e[i];
            r.add_term(t, -(f * dv));
        }
    }
    return q;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += "(" + it->second.str() + ")";
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (it->first[i] == 0) continue;
            s += "*" + vars_[i];
            if (it->first[i] != 1) s += "^" + std::to_string(it->first[i]);
        }
    }
    return s;
}

}  // namespace exlie
