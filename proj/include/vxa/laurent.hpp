#pragma once

// Sparse multivariate Laurent polynomials with exact rational coefficients.
// Exponents may be negative; zero coefficients are never stored.

#include "vxa/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace vxa {

/// Variable name -> exponent; entries with exponent 0 are not stored.
using Monomial = std::map<std::string, int>;

class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Scalar& c);

    static LaurentPoly variable(const std::string& name, int exp = 1);
    static LaurentPoly term(const Scalar& c, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The constant term's value (0 if absent).
    Scalar constant_value() const;

    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Scalar& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Scalar& c, const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    /// All variables that occur in some term.
    std::vector<std::string> variables() const;
    bool depends_on(const std::string& var) const;

    int min_exponent(const std::string& var) const;  // 0 when var absent
    int max_exponent(const std::string& var) const;

    /// Coefficient of var^e, a LaurentPoly in the remaining variables.
    LaurentPoly coefficient_of(const std::string& var, int e) const;

    LaurentPoly derivative(const std::string& var) const;

    /// Substitute var := value. Requires all exponents of var to be >= 0.
    LaurentPoly substitute(const std::string& var, const LaurentPoly& value) const;

    /// Rename variables; missing names are kept. Collisions merge exponents.
    LaurentPoly rename(const std::map<std::string, std::string>& names) const;

    std::string str() const;

private:
    std::map<Monomial, Scalar> terms_;
};

inline LaurentPoly laurent_one() { return LaurentPoly(Scalar(1)); }

/// Sparse exact product (same as operator*, spelled as a free function).
LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Res_var f := the coefficient of var^{-1}, in the remaining variables.
LaurentPoly residue(const LaurentPoly& f, const std::string& var);

/// a^n for n >= 0.
LaurentPoly laurent_pow(const LaurentPoly& a, unsigned n);

}  // namespace vxa
