#include "vxa/delta.hpp"

namespace vxa {

LaurentPoly delta_window(const std::string& z, const std::string& w, unsigned window) {
    LaurentPoly d;
    for (long n = -static_cast<long>(window); n <= static_cast<long>(window); ++n) {
        Monomial m;
        if (-n - 1 != 0) m[z] = static_cast<int>(-n - 1);
        if (n != 0) m[w] = static_cast<int>(n);
        d.add_term(m, Scalar(1));
    }
    return d;
}

LaurentPoly delta_contract_poly(const LaurentPoly& f, int i, int j, unsigned n) {
    LaurentPoly g = f;
    const std::string xi = point_var(i);
    for (unsigned l = 0; l < n; ++l) g = g.derivative(xi);
    if (n % 2 == 1) g = -g;
    // rename x_i -> x_j (exact: the pairing evaluates at the second point)
    return g.rename({{xi, point_var(j)}});
}

SingularFn delta_contract(const LaurentPoly& f, const DeltaTerm& d) {
    LaurentPoly v = delta_contract_poly(f, d.i, d.j, d.derivative_order);
    return SingularFn::from_laurent(v, d.coefficient.mode()) * d.coefficient;
}

DeltaCheckResult delta_annihilation_check(unsigned order, unsigned window, int power) {
    const std::string z = "z", w = "w";
    const long W = static_cast<long>(window);
    const long j = static_cast<long>(order);

    // certified w-exponents: contributions to w^b use modes n in
    // [b+j-power, b+j]; the slice is complete iff that range lies in [-W, W].
    const long b_lo = static_cast<long>(power) - j - W;
    const long b_hi = W - j;
    DeltaCheckResult res;
    if (b_lo > b_hi) return res;  // indeterminate: window cannot certify anything

    LaurentPoly d = delta_window(z, w, window);
    for (unsigned l = 0; l < order; ++l) d = d.derivative(w);
    LaurentPoly zw = LaurentPoly::variable(z) - LaurentPoly::variable(w);
    LaurentPoly prod = d * laurent_pow(zw, static_cast<unsigned>(power));

    LaurentPoly bad;
    for (const auto& [m, c] : prod.terms()) {
        auto it = m.find(w);
        long b = it == m.end() ? 0 : it->second;
        if (b >= b_lo && b <= b_hi) bad.add_term(m, c);
    }
    res.residual = bad;
    res.status = bad.is_zero() ? CheckStatus::True : CheckStatus::False;
    return res;
}

DeltaCheckResult delta_annihilation_check(unsigned order, unsigned window) {
    return delta_annihilation_check(order, window, static_cast<int>(order) + 1);
}

}  // namespace vxa
