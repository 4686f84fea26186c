#pragma once

// Bicharacters on the PBW state spaces: a table of values on the base
// generators determines the whole pairing through bimultiplicativity and
// H-invariance (derivatives of table values in the point variables).
// Also: the convolution monoid, twisted products (merged two-point and
// provenance-preserving multi-point), and the singular multi-point
// extension of a bicharacter.

#include "vxa/algebra.hpp"
#include "vxa/singular.hpp"

#include <map>
#include <optional>
#include <vector>

namespace vxa {

class Bicharacter {
public:
    Bicharacter() = default;

    /// The counit bicharacter (unit of the convolution monoid).
    static Bicharacter epsilon(FamilyPtr fam, SingMode mode = SingMode::Additive);
    /// Table of values r(g_base ⊗ h_base) indexed by label pairs; values are
    /// oriented with the left argument at point 1.
    static Bicharacter from_table(FamilyPtr fam, std::map<std::pair<int, int>, SingularFn> table,
                                  SingMode mode = SingMode::Additive);

    const FamilyPtr& family() const { return family_; }
    SingMode mode() const { return mode_; }
    bool is_epsilon() const;
    const std::map<std::pair<int, int>, SingularFn>& table() const { return table_; }

    /// Value on a pair of base generators (by label), with H-invariance
    /// derivative shifts d1 in x_1 and d2 in x_2.
    SingularFn pair_value(int left_label, unsigned d1, int right_label, unsigned d2) const;

    /// r(a ⊗ b) with a at point 1, b at point 2.
    SingularFn eval(const State& a, const State& b) const;
    /// r on a pair of PBW words (the permanent over letter bijections).
    SingularFn eval_words(const PBWMonomial& a, const PBWMonomial& b) const;
    /// Same with explicit point labels (values renamed to x_pa, x_pb).
    SingularFn eval_points(const State& a, int pa, const State& b, int pb) const;

    /// Convolution (r*s)(a⊗b) = sum r(a'⊗b') s(a''⊗b'').
    Bicharacter convolve(const Bicharacter& o) const;
    /// Inverse in the convolution monoid, via the antipode.
    Bicharacter inverse() const;

private:
    FamilyPtr family_;
    SingMode mode_ = SingMode::Additive;
    std::map<std::pair<int, int>, SingularFn> table_;
    bool epsilon_ = true;  // empty table <=> counit
};

/// Merged two-point twisted product: sum over coproduct legs of the merged
/// PBW product scaled by r on the complementary legs; coefficients live in
/// the singular ring over (x_1, x_2).
struct TwistedState {
    FamilyPtr family;
    std::map<PBWMonomial, SingularFn> terms;

    void add(const PBWMonomial& w, const SingularFn& c);
    friend bool operator==(const TwistedState&, const TwistedState&);
};
TwistedState twisted_product(const State& a, const State& b, const Bicharacter& r);
/// Relabel x_1 <-> x_2 in all coefficients.
TwistedState swap_points_12(const TwistedState& t);

/// Multi-point object: one word per point, with a singular coefficient over
/// all the points. The twisted product of such objects never merges points;
/// pairwise r-factors carry the variable pair (x_p, x_q).
struct MultiPointState {
    FamilyPtr family;
    std::vector<int> points;
    std::map<std::vector<PBWMonomial>, SingularFn> terms;

    void add(const std::vector<PBWMonomial>& t, const SingularFn& c);
    friend bool operator==(const MultiPointState&, const MultiPointState&);
};
MultiPointState pin_at_point(const State& a, int point);
MultiPointState twisted_tensor_product(const MultiPointState& A, const MultiPointState& B,
                                       const Bicharacter& r);

/// The singular extension of r to tensors over disjoint point sets:
/// r(⊗_{i∈I} a_i ⊗ ⊗_{j∈J} b_j) = Σ Π_{i,j} r(a_i^{(j)} ⊗ b_j^{(i)}),
/// each factor in the variables of its point pair.
SingularFn singular_extension(const Bicharacter& r,
                              const std::vector<std::pair<State, int>>& left,
                              const std::vector<std::pair<State, int>>& right);

/// The family's textbook twist: level/(x1-x2)^2 on the Heisenberg generator,
/// level*(a,b)/(x1-x2)^2 on affine pairs, (c/2)/(x1-x2)^4 for Virasoro.
Bicharacter standard_bicharacter(FamilyPtr fam);

}  // namespace vxa
