#pragma once

// PBW state spaces and straightening for the three generator families:
// Heisenberg, loop/affine (arbitrary finite-dimensional Lie data with an
// invariant form), and Virasoro. States are finite rational combinations
// of sorted creation words applied to the vacuum.

#include "vxa/divided_powers.hpp"
#include "vxa/scalar.hpp"

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace vxa {

enum class FamilyKind { Heisenberg, Affine, Virasoro };

/// Finite-dimensional Lie algebra data with an invariant symmetric form.
struct LieData {
    std::vector<std::string> labels;
    /// bracket[{i,j}][k] = coefficient of a_k in [a_i, a_j]; sparse, i < j only.
    std::map<std::pair<int, int>, std::map<int, Scalar>> bracket;
    std::vector<std::vector<Scalar>> form;

    Scalar form_at(int i, int j) const { return form[i][j]; }
    /// [a_i, a_j] for any index order.
    std::map<int, Scalar> bracket_at(int i, int j) const;
    /// Throws std::invalid_argument on antisymmetry/Jacobi/invariance failure.
    void validate() const;
};

class AlgebraFamily {
public:
    static AlgebraFamily heisenberg(const Scalar& level);
    static AlgebraFamily affine(const std::string& name, LieData lie, const Scalar& level);
    static AlgebraFamily virasoro(const Scalar& central_charge);

    FamilyKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    /// Level k (Heisenberg/affine) or central charge c (Virasoro).
    const Scalar& parameter() const { return parameter_; }
    const LieData& lie() const { return lie_; }

    int num_labels() const;
    const std::string& label_name(int idx) const;
    int label_index(const std::string& name) const;  // -1 when unknown

    /// Conformal weight of the generators (1, or 2 for Virasoro).
    int weight() const { return kind_ == FamilyKind::Virasoro ? 2 : 1; }
    /// Largest creation mode (-1, or -2 for Virasoro).
    long creation_max() const { return kind_ == FamilyKind::Virasoro ? -2 : -1; }
    bool is_creation(long mode) const { return mode <= creation_max(); }

    /// Same algebra at a different level / central charge.
    AlgebraFamily at_parameter(const Scalar& p) const;

    friend bool operator==(const AlgebraFamily&, const AlgebraFamily&) = default;

private:
    FamilyKind kind_ = FamilyKind::Heisenberg;
    std::string name_;
    Scalar parameter_ = Scalar(1);
    LieData lie_;
};

using FamilyPtr = std::shared_ptr<const AlgebraFamily>;

struct Generator {
    int label = 0;
    long mode = 0;
    auto operator<=>(const Generator&) const = default;
};

/// Sorted creation word; the trailing vacuum is implicit.
using PBWMonomial = std::vector<Generator>;

long monomial_degree(const PBWMonomial& w);

/// [g, h] as a linear part plus a central scalar.
struct CommutatorResult {
    std::map<Generator, Scalar> linear;
    Scalar central = Scalar(0);
};
CommutatorResult commutator(const Generator& g, const Generator& h, const AlgebraFamily& fam);

class State {
public:
    State() = default;
    explicit State(FamilyPtr fam) : family_(std::move(fam)) {}

    static State vacuum(FamilyPtr fam);
    static State monomial(FamilyPtr fam, const PBWMonomial& w, const Scalar& c = Scalar(1));

    const FamilyPtr& family() const { return family_; }
    const std::map<PBWMonomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const PBWMonomial& w, const Scalar& c);
    Scalar coefficient(const PBWMonomial& w) const;

    /// Coefficient of the vacuum monomial (the counit).
    Scalar vacuum_component() const { return coefficient({}); }

    long max_degree() const;  // 0 for the zero state
    bool homogeneous(long d) const;

    State operator-() const;
    friend State operator+(const State& a, const State& b);
    friend State operator-(const State& a, const State& b);
    friend State operator*(const Scalar& c, const State& a);
    State& operator+=(const State& o) { return *this = *this + o; }
    friend bool operator==(const State& a, const State& b);

    std::string str() const;

private:
    FamilyPtr family_;
    std::map<PBWMonomial, Scalar> terms_;
};

enum class StraightenSchedule { LeftmostInversion, RightmostInversion };

/// Rewrites an arbitrary word of generators into the PBW basis. Annihilation
/// modes reaching the vacuum kill the term.
State straighten(const std::vector<Generator>& word, FamilyPtr fam,
                 StraightenSchedule schedule = StraightenSchedule::LeftmostInversion);

/// Prepend g and straighten.
State mode_action(const Generator& g, const State& s);

/// Prepend a word (leftmost letter acts last).
State word_action(const std::vector<Generator>& word, const State& s);

/// The merged product f_*: concatenation of words, straightened.
State merge_product(const State& a, const State& b);

/// All sorted monomials of the given degree, deterministic order.
std::vector<PBWMonomial> graded_basis(const AlgebraFamily& fam, long degree);

/// Coordinates of s on graded_basis(degree); throws if s is not homogeneous
/// of that degree.
std::vector<Scalar> basis_coordinates(const State& s, long degree);

/// Coproduct legs of a monomial: order-preserving two-block splits.
std::vector<std::pair<PBWMonomial, PBWMonomial>> coproduct_legs(const PBWMonomial& w);

/// Primitive-generator coproduct of a state, as a sum of left⊗right terms.
struct TensorState {
    FamilyPtr family;
    std::map<std::pair<PBWMonomial, PBWMonomial>, Scalar> terms;
};
TensorState state_coproduct(const State& s);

/// The divided-power action: D^(i) shifts each letter by the family rule
/// (Leibniz across the word), then re-straightens.
State dp_act_state(const DPElement& a, const State& s);

/// Translation T = D^(1).
State translation(const State& s);

/// The identification H_a(M) -> PBW module on generator powers:
/// D^(i) (g^n) |0> as a straightened state (g = the base generator label).
State universal_extension_basis(FamilyPtr fam, int label, unsigned i, unsigned n);

}  // namespace vxa
