#pragma once

// Fields as mode operators on a PBW state space, the normal-ordered product
// :f(z)g(w): = f(z)_+ g(w) + g(w) f(z)_-, and windowed series application.
// The +/- split routes annihilation modes to the right, per the family's
// creation convention.

#include "vxa/algebra.hpp"

#include <memory>
#include <optional>

namespace vxa {

class Field {
public:
    /// The identity field 1(z): coefficient of z^0 is id, all others vanish.
    static Field identity();
    /// The generator field of the label: sum_m g_m z^{-m-wt}.
    static Field generator(int label);
    /// Right-nested normal ordering :first(z_a) rest:, first must be a leaf.
    static Field normal_ordered(Field first, Field rest);

    /// Number of point variables (leaves).
    unsigned arity() const;

    /// Coefficient extraction: applies the coefficient of
    /// prod_k z_k^{exponents[k]} to the state.
    State apply_coefficient(const std::vector<long>& exponents, const State& s) const;

    bool is_leaf() const { return kind_ != Kind::Pair; }

private:
    enum class Kind { Identity, Generator, Pair };
    Kind kind_ = Kind::Identity;
    int label_ = 0;
    std::shared_ptr<const Field> first_, rest_;
};

Field normal_order_pair(const Field& a, const Field& b);

/// Truncated series of a one-variable field applied to a state. Modes outside
/// the window are unknown, not zero.
struct FieldSeries {
    std::string variable;
    std::map<long, State> coefficients;
    long min_mode = 0;
    long max_mode = 0;
};

/// Applies a one-variable field to a state over [min_mode, max_mode]; the
/// window is sound: exponents below min_needed(s) are exactly zero, so the
/// series is exact on the window whenever min_mode <= that bound.
FieldSeries apply_field(const Field& f, const State& s, long min_mode, long max_mode,
                        const std::string& variable = "z");

}  // namespace vxa
