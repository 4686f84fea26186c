#include "vxa/fields.hpp"

#include <stdexcept>

namespace vxa {

Field Field::identity() { return Field{}; }

Field Field::generator(int label) {
    Field f;
    f.kind_ = Kind::Generator;
    f.label_ = label;
    return f;
}

Field Field::normal_ordered(Field first, Field rest) {
    if (!first.is_leaf())
        throw std::domain_error("normal ordering is right-nested: first factor must be a leaf");
    Field f;
    f.kind_ = Kind::Pair;
    f.first_ = std::make_shared<Field>(std::move(first));
    f.rest_ = std::make_shared<Field>(std::move(rest));
    return f;
}

unsigned Field::arity() const {
    if (kind_ != Kind::Pair) return 1;
    return first_->arity() + rest_->arity();
}

State Field::apply_coefficient(const std::vector<long>& exponents, const State& s) const {
    if (!s.family()) throw std::domain_error("state without family");
    if (exponents.size() != arity()) throw std::domain_error("exponent tuple arity mismatch");
    const AlgebraFamily& fam = *s.family();
    switch (kind_) {
        case Kind::Identity:
            return exponents[0] == 0 ? s : State(s.family());
        case Kind::Generator: {
            // coefficient of z^k in sum_m g_m z^{-m-wt} is the mode -k-wt
            Generator g{label_, -exponents[0] - fam.weight()};
            return mode_action(g, s);
        }
        case Kind::Pair: {
            std::vector<long> restExp(exponents.begin() + 1, exponents.end());
            const long k = exponents[0];
            if (first_->kind_ == Kind::Identity) {
                // 1(z)_+ = 1(z), 1(z)_- = 0
                if (k != 0) return State(s.family());
                return rest_->apply_coefficient(restExp, s);
            }
            Generator g{first_->label_, -k - fam.weight()};
            if (fam.is_creation(g.mode))
                return mode_action(g, rest_->apply_coefficient(restExp, s));
            return rest_->apply_coefficient(restExp, mode_action(g, s));
        }
    }
    return State(s.family());
}

Field normal_order_pair(const Field& a, const Field& b) { return Field::normal_ordered(a, b); }

FieldSeries apply_field(const Field& f, const State& s, long min_mode, long max_mode,
                        const std::string& variable) {
    if (f.arity() != 1) throw std::domain_error("apply_field expects a one-variable field");
    FieldSeries out;
    out.variable = variable;
    out.min_mode = min_mode;
    out.max_mode = max_mode;
    for (long k = min_mode; k <= max_mode; ++k) {
        State v = f.apply_coefficient({k}, s);
        if (!v.is_zero()) out.coefficients[k] = std::move(v);
    }
    return out;
}

}  // namespace vxa
