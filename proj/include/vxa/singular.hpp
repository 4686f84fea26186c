#pragma once

// Elements of the singular coefficient rings: Laurent-style fractions whose
// denominators are products of shifted differences of point variables,
//   additive mode:        (x_i - x_j - n*t)   n integer, t a formal parameter
//   multiplicative mode:  (x_i/x_j - q^n)     q a formal lattice generator
// The classical ring S_e is the additive mode with every shift n = 0.
//
// Canonical form: factors carry i < j (swaps absorb a unit into the
// numerator), powers are positive, and factors dividing the numerator are
// cancelled. Equality of canonical forms is structural.

#include "vxa/laurent.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace vxa {

enum class SingMode { Additive, Multiplicative };

/// Name of the point variable x_i.
std::string point_var(int i);

struct FactorKey {
    int i = 0;       // smaller point index
    int j = 0;       // larger point index
    long shift = 0;  // n in (x_i - x_j - n t) resp. (x_i/x_j - q^n)
    auto operator<=>(const FactorKey&) const = default;
};

class SingularFn {
public:
    SingularFn() = default;  // zero
    explicit SingularFn(SingMode mode) : mode_(mode) {}

    static SingularFn from_laurent(const LaurentPoly& p, SingMode mode = SingMode::Additive);
    static SingularFn from_scalar(const Scalar& c, SingMode mode = SingMode::Additive);
    static SingularFn one(SingMode mode = SingMode::Additive);

    /// 1 / (x_i - x_j - shift t)^power (resp. multiplicative), any i != j.
    static SingularFn factor_inverse(SingMode mode, int i, int j, long shift, int power);
    /// (x_i - x_j - shift t)^power as a numerator-only element.
    static SingularFn factor_poly(SingMode mode, int i, int j, long shift, int power);

    bool is_zero() const { return num_.is_zero(); }
    bool is_regular() const { return den_.empty(); }
    SingMode mode() const { return mode_; }
    const LaurentPoly& numerator() const { return num_; }
    const std::map<FactorKey, int>& denominator() const { return den_; }

    /// The denominator expanded as a Laurent polynomial.
    LaurentPoly denominator_poly() const;

    SingularFn operator-() const;
    friend SingularFn operator+(const SingularFn& a, const SingularFn& b);
    friend SingularFn operator-(const SingularFn& a, const SingularFn& b);
    friend SingularFn operator*(const SingularFn& a, const SingularFn& b);
    friend SingularFn operator*(const Scalar& c, const SingularFn& a);
    SingularFn& operator+=(const SingularFn& o) { return *this = *this + o; }
    SingularFn& operator*=(const SingularFn& o) { return *this = *this * o; }

    /// Structural equality of canonical forms.
    friend bool operator==(const SingularFn& a, const SingularFn& b);

    /// d/dx_i (additive-mode H-action is by derivations).
    SingularFn derivative_point(int i) const;
    /// (1/d!) d^d/dx_i^d.
    SingularFn divided_derivative_point(int i, unsigned d) const;

    /// x_i -> q^k x_i (multiplicative-mode H-action is by shift operators).
    SingularFn shift_point(int i, long k) const;

    /// Relabel point indices. Merging two points of a common factor is legal
    /// only when the shift is nonzero (the factor becomes the unit -n t).
    SingularFn rename_points(const std::map<int, int>& relabel) const;

    /// Additive mode: set the shift parameter t to 0 (S_Y -> S_e collapse).
    SingularFn substitute_shift_zero() const;

    /// Geometric-series expansion in a region |v_0| >> |v_1| >> ..., exact
    /// through subordinate total order < window. Every denominator factor
    /// must involve the dominant variable.
    LaurentPoly expand(const std::vector<std::string>& region, unsigned window) const;

    /// Reads the value as a Laurent polynomial in the single difference
    /// (x_i - x_j): exponent -> coefficient. Empty optional when the value
    /// is not a function of that difference alone.
    std::optional<std::map<int, Scalar>> as_difference_laurent(int i, int j) const;

    std::string str() const;

private:
    void normalize();
    SingMode mode_ = SingMode::Additive;
    LaurentPoly num_;
    std::map<FactorKey, int> den_;
};

/// Equality by cross-multiplication, independent of canonical forms.
bool cross_equal(const SingularFn& a, const SingularFn& b);

inline SingularFn singular_mul(const SingularFn& a, const SingularFn& b) { return a * b; }

}  // namespace vxa
