#pragma once

// Formal delta-function calculus. Delta terms are symbols with rewrite
// rules; infinite series appear only inside windowed verification ops.

#include "vxa/singular.hpp"

namespace vxa {

/// coefficient * d^n/dx_i^n delta(x_i, x_j), kept symbolic.
struct DeltaTerm {
    int i = 1;
    int j = 2;
    unsigned derivative_order = 0;
    SingularFn coefficient = SingularFn::one();
};

/// Windowed expansion sum_{n=-window}^{window} z^{-n-1} w^n.
LaurentPoly delta_window(const std::string& z, const std::string& w, unsigned window);

/// Res_{x_i} f * d^n delta(x_i,x_j) = (-1)^n (d^n f)(x_j); f finite Laurent in x_i.
LaurentPoly delta_contract_poly(const LaurentPoly& f, int i, int j, unsigned n);

/// Same pairing with the delta term's singular coefficient multiplied in.
SingularFn delta_contract(const LaurentPoly& f, const DeltaTerm& d);

enum class CheckStatus { True, False, Indeterminate };

struct DeltaCheckResult {
    CheckStatus status = CheckStatus::Indeterminate;
    LaurentPoly residual;  // certified nonzero part on failure
};

/// Expands d_w^order delta(z,w) over the window, multiplies by (z-w)^power
/// and tests the certified coefficients for zero. power defaults to order+1
/// (the annihilation identity); power = order gives the negative control.
DeltaCheckResult delta_annihilation_check(unsigned order, unsigned window, int power);
DeltaCheckResult delta_annihilation_check(unsigned order, unsigned window);

}  // namespace vxa
