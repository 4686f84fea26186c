#pragma once

// Vertex operators from the singular-commutative data: the canonical
// two-point vacuum correlation
//     Y(a,x1) Y(b,x2) |0>  =  sum_n  e^{x2 T}(C_n) (x1-x2)^{-n-1},
// its computation by bicharacter twisting over the untwisted base family,
// OPE extraction, and machine verification of the vertex-algebra axioms at
// finite truncation.

#include "vxa/bicharacter.hpp"

#include <map>
#include <string>
#include <vector>

namespace vxa {

struct VertexAlgebraInstance {
    FamilyPtr family;     // the twisted algebra's parameter (level / charge)
    Bicharacter bichar;   // epsilon for the untwisted algebra

    State vacuum() const { return State::vacuum(family); }
};

VertexAlgebraInstance make_instance(FamilyPtr family, Bicharacter bichar);
VertexAlgebraInstance untwisted_instance(FamilyPtr family_at_zero);

/// External OPE view: principal-part states by pole order plus a regular
/// (i,j)-grid truncated at total order `truncation`.
struct OpeResult {
    std::map<int, State> principal;
    std::map<std::pair<long, long>, State> regular;
    long truncation = 0;
};

/// Two-point vacuum correlations in canonical form: term(n) = C_n with
///   F(x1,x2) = sum_n e^{x2 T}(C_n) (x1-x2)^{-n-1}.
/// n >= 0 entries are the poles (always exact and finite); negative n form
/// the regular tail, exact through n >= tail_min.
class OpePoints {
public:
    OpePoints() = default;
    OpePoints(FamilyPtr fam, long tail_min) : family_(std::move(fam)), tail_min_(tail_min) {}

    const FamilyPtr& family() const { return family_; }
    long tail_min() const { return tail_min_; }
    const std::map<long, State>& terms() const { return terms_; }
    State term(long n) const;
    void add_term(long n, const State& v);

    OpePoints& operator+=(const OpePoints& o);
    friend OpePoints operator*(const Scalar& c, const OpePoints& p);

    /// Multiply by sum_e coef_e (x1-x2)^e; entries that become incomplete
    /// are dropped and the tail bound adjusts.
    OpePoints shifted(const std::map<int, Scalar>& diff_laurent) const;

    /// Exact exchange x1 <-> x2 of the represented function.
    OpePoints swapped() const;

    bool equal_through(const OpePoints& o, long tail) const;
    OpePoints subtract(const OpePoints& o) const;

    /// Largest pole order (0 when regular).
    int max_pole() const;

    OpeResult to_ope_result(long truncation) const;

private:
    FamilyPtr family_;
    long tail_min_ = 0;
    std::map<long, State> terms_;
};

/// Reconstruction modes: a_(n) applied to s, computed in the family carried
/// by the states (level enters through the straightening brackets).
State apply_field_mode(const State& a, long n, const State& s);

/// The two-point correlation of the twisted algebra, by bicharacter legs
/// over the untwisted base: exact poles, tail through -N-1.
OpePoints phi_r(const VertexAlgebraInstance& va, const State& a, const State& b, long N);

/// Y(a,x1) b: coefficient[i] is exact for every i <= N (all pole
/// coefficients are exact).
struct VertexOpSeries {
    std::map<long, State> coefficients;
    long max_exponent = 0;
};
VertexOpSeries vertex_op(const VertexAlgebraInstance& va, const State& a, const State& b, long N);

/// Merge-Taylor of a plain tensor u (x) v: grid (i,j) -> f_*(D^(i)u D^(j)v),
/// total order <= N.
std::map<std::pair<long, long>, State> taylor_two_point(const State& u, const State& v, long N);

struct ModeMatrixSlice {
    long mode = 0;
    long degree = 0;
    long target_degree = 0;
    std::vector<PBWMonomial> domain, codomain;
    std::vector<std::vector<Scalar>> entries;  // [codomain][domain]
};
ModeMatrixSlice mode_matrix(const VertexAlgebraInstance& va, const State& a, long n, long degree);

struct CheckReport {
    bool pass = false;
    std::string witness;
};

struct LocalityReport {
    bool found = false;
    long order = -1;
    std::string witness;
};

/// Least N <= n_max with (x1-x2)^N [Y(a,x1),Y(b,x2)] u3 = 0 on the tested
/// coefficient window, swept over basis states u3 of degree <= window_degree.
LocalityReport check_locality(const VertexAlgebraInstance& va, const State& a, const State& b,
                              long n_max, long window_degree, long coeff_window = 6);

/// [T, Y(a,z)] = dz Y(a,z) on basis states of degree <= window_degree,
/// coefficient exponents through order_n. corrupt_scale != 1 corrupts the
/// left-hand translation action (negative-control hook).
CheckReport check_translation(const VertexAlgebraInstance& va, const State& a, long order_n,
                              long window_degree, const Scalar& corrupt_scale = Scalar(1));

/// Y(a,x)|0> has no pole and constant term a; the tail agrees with the
/// divided-power shifts through order n.
CheckReport check_vacuum(const VertexAlgebraInstance& va, const State& a, long n);

/// Verified singular commutativity plus the formal-distribution commutator
/// data: principal = the delta coefficients {p: C_p}, regular = the exact
/// residual between Phi_r(a,b) and the swapped Phi_r(b,a) (zero when local).
struct OpeCommutator {
    OpeResult data;
    bool commutes = false;
};
OpeCommutator ope_commutator(const VertexAlgebraInstance& va, const State& a, const State& b,
                             long N);

}  // namespace vxa
