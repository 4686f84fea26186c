#pragma once

// R-matrices materialized on graded basis pairs, Yang-Baxter and
// multiplication-compatibility sweeps, and braided commutativity of
// bicharacter twists.

#include "vxa/bicharacter.hpp"

#include <array>
#include <map>
#include <string>

namespace vxa {

using PairKey = std::pair<PBWMonomial, PBWMonomial>;
using TripleKey = std::array<PBWMonomial, 3>;

/// Bilinear operator on V ⊗ V stored entrywise on basis pairs up to a total
/// degree bound; coefficients live in the singular ring over (x_1, x_2).
struct RMatrixOp {
    FamilyPtr family;
    long degree_bound = 0;
    std::map<PairKey, std::map<PairKey, SingularFn>> entries;

    static RMatrixOp identity(FamilyPtr fam, long degree_bound);
    bool is_identity() const;
};

/// The braided-ring R-matrix of an invertible bicharacter twist:
/// R(a ⊗ b) = sum a' ⊗ b' r'(b'' ⊗ a'').
RMatrixOp braided_R_from_bichar(const Bicharacter& r, long degree_bound);

struct SweepReport {
    bool pass = false;
    std::string witness;
};

/// R12 R13 R23 = R23 R13 R12 on basis triples of total degree <= bound.
SweepReport ybe_check(const RMatrixOp& R, long degree_bound);

/// R12 m12 = m12 R23 R13 and R12 m23 = m23 R12 R13, with m the family's
/// straightened (merged) product.
SweepReport rmatrix_hexagon_check(const RMatrixOp& R, long degree_bound);

/// Braided commutativity of the twisted product: m_r R = m_r tau on basis
/// pairs of total degree <= bound.
SweepReport braided_comm_check(const Bicharacter& r, const RMatrixOp& R, long degree_bound);

/// Plain commutativity m_r = m_r tau (fails for non-symmetric twists; the
/// negative-space control for braided_comm_check).
SweepReport plain_comm_check(const Bicharacter& r, long degree_bound);

}  // namespace vxa
