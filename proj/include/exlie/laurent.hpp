#pragma once

#include <map>
#include <string>
#include <vector>

#include "exlie/scalar.hpp"

namespace exlie {

// Multivariate Laurent polynomial: exponent vectors (negative entries
// allowed) over a fixed, ordered variable list.  Monomials are ordered
// lexicographically on the exponent vector.  No zero coefficient is stored.
class LaurentPoly {
public:
    using Expo = std::vector<int>;

    LaurentPoly() {}
    explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static LaurentPoly constant(std::vector<std::string> vars, const Scalar& c);
    static LaurentPoly monomial(std::vector<std::string> vars, Expo e, const Scalar& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Expo, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add_term(const Expo& e, const Scalar& c);
    Scalar coeff(const Expo& e) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(const Scalar& c) const;
    bool operator==(const LaurentPoly& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }

    // exact value at a point; every coordinate must be invertible when it
    // meets a negative exponent
    Scalar eval(const std::vector<Scalar>& point) const;

    // exact quotient; throws if the division leaves a remainder
    LaurentPoly exact_div(const LaurentPoly& d) const;

    std::string str() const;

private:
    void check_compatible(const LaurentPoly& o) const;
    std::vector<std::string> vars_;
    std::map<Expo, Scalar> terms_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

}  // namespace exlie
