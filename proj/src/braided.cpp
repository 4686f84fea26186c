#include "vxa/braided.hpp"

#include <sstream>
#include <stdexcept>

namespace vxa {

namespace {

std::vector<std::pair<PBWMonomial, long>> basis_through(const AlgebraFamily& fam, long bound) {
    std::vector<std::pair<PBWMonomial, long>> out;
    for (long d = 0; d <= bound; ++d)
        for (const auto& w : graded_basis(fam, d)) out.emplace_back(w, d);
    return out;
}

/// r'(u ⊗ w) = sum r(u' ⊗ w') r^{-1}(w'' ⊗ u''), with u at point pu and w
/// at point pw.
SingularFn r_prime_words(const Bicharacter& r, const Bicharacter& rinv, const PBWMonomial& u,
                         int pu, const PBWMonomial& w, int pw) {
    SingularFn total;
    for (const auto& [u1, u2] : coproduct_legs(u))
        for (const auto& [w1, w2] : coproduct_legs(w)) {
            SingularFn f = r.eval_words(u1, w1);
            if (f.is_zero()) continue;
            SingularFn g = rinv.eval_words(w2, u2);
            if (g.is_zero()) continue;
            total = total + f.rename_points({{1, pu}, {2, pw}}) *
                                g.rename_points({{1, pw}, {2, pu}});
        }
    return total;
}

struct PairState {
    std::map<PairKey, SingularFn> terms;
    void add(const PairKey& k, const SingularFn& c) {
        if (c.is_zero()) return;
        auto it = terms.find(k);
        if (it == terms.end()) {
            terms[k] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    friend bool operator==(const PairState&, const PairState&) = default;
};

struct TripleState {
    std::map<TripleKey, SingularFn> terms;
    void add(const TripleKey& k, const SingularFn& c) {
        if (c.is_zero()) return;
        auto it = terms.find(k);
        if (it == terms.end()) {
            terms[k] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    friend bool operator==(const TripleState&, const TripleState&) = default;
};

const std::map<PairKey, SingularFn>* lookup(const RMatrixOp& R, const PairKey& k) {
    auto it = R.entries.find(k);
    return it == R.entries.end() ? nullptr : &it->second;
}

/// Applies R to tensor slots (sa, sb) of a triple, with point variables
/// (x_{pa}, x_{pb}).
TripleState apply_R(const RMatrixOp& R, const TripleState& t, int sa, int sb, int pa, int pb) {
    TripleState out;
    for (const auto& [key, coef] : t.terms) {
        const PairKey in{key[static_cast<size_t>(sa)], key[static_cast<size_t>(sb)]};
        const auto* row = lookup(R, in);
        if (!row) throw std::domain_error("R-matrix entry outside the degree bound");
        for (const auto& [outpair, c] : *row) {
            TripleKey nk = key;
            nk[static_cast<size_t>(sa)] = outpair.first;
            nk[static_cast<size_t>(sb)] = outpair.second;
            out.add(nk, coef * c.rename_points({{1, pa}, {2, pb}}));
        }
    }
    return out;
}

PairState apply_R_pair(const RMatrixOp& R, const PairState& t, int pa, int pb) {
    PairState out;
    for (const auto& [key, coef] : t.terms) {
        const auto* row = lookup(R, key);
        if (!row) throw std::domain_error("R-matrix entry outside the degree bound");
        for (const auto& [outpair, c] : *row)
            out.add(outpair, coef * c.rename_points({{1, pa}, {2, pb}}));
    }
    return out;
}

/// Merge two slots of a triple with the plain straightened product; the
/// surviving slots are re-labelled to points (p_keep_a, p_keep_b) and the
/// merged slot's old variable is renamed to its new point.
PairState merge_slots(const FamilyPtr& fam, const TripleState& t, int sa, int sb, int skeep,
                      const std::map<int, int>& var_rename) {
    PairState out;
    for (const auto& [key, coef] : t.terms) {
        State merged = merge_product(State::monomial(fam, key[static_cast<size_t>(sa)]),
                                     State::monomial(fam, key[static_cast<size_t>(sb)]));
        SingularFn c = var_rename.empty() ? coef : coef.rename_points(var_rename);
        for (const auto& [w, cw] : merged.terms()) {
            PairKey pk = sa == 0 ? PairKey{w, key[static_cast<size_t>(skeep)]}
                                 : PairKey{key[static_cast<size_t>(skeep)], w};
            out.add(pk, cw * c);
        }
    }
    return out;
}

}  // namespace

RMatrixOp RMatrixOp::identity(FamilyPtr fam, long degree_bound) {
    RMatrixOp R;
    R.family = std::move(fam);
    R.degree_bound = degree_bound;
    auto basis = basis_through(*R.family, degree_bound);
    for (const auto& [wa, da] : basis)
        for (const auto& [wb, db] : basis) {
            if (da + db > degree_bound) continue;
            PairKey k{wa, wb};
            R.entries[k][k] = SingularFn::one();
        }
    return R;
}

bool RMatrixOp::is_identity() const {
    for (const auto& [in, row] : entries) {
        for (const auto& [out, c] : row) {
            if (in == out) {
                if (!(c == SingularFn::one(c.mode()))) return false;
            } else if (!c.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

RMatrixOp braided_R_from_bichar(const Bicharacter& r, long degree_bound) {
    RMatrixOp R;
    R.family = r.family();
    R.degree_bound = degree_bound;
    Bicharacter rinv = r.inverse();
    auto basis = basis_through(*R.family, degree_bound);
    for (const auto& [wa, da] : basis)
        for (const auto& [wb, db] : basis) {
            if (da + db > degree_bound) continue;
            PairKey in{wa, wb};
            auto& row = R.entries[in];
            for (const auto& [a1, a2] : coproduct_legs(wa))
                for (const auto& [b1, b2] : coproduct_legs(wb)) {
                    SingularFn c = r_prime_words(r, rinv, b2, 2, a2, 1);
                    if (c.is_zero()) continue;
                    PairKey out{a1, b1};
                    auto it = row.find(out);
                    if (it == row.end())
                        row[out] = c;
                    else {
                        it->second = it->second + c;
                        if (it->second.is_zero()) row.erase(it);
                    }
                }
        }
    return R;
}

SweepReport ybe_check(const RMatrixOp& R, long degree_bound) {
    const FamilyPtr& fam = R.family;
    auto basis = basis_through(*fam, degree_bound);
    for (const auto& [wa, da] : basis)
        for (const auto& [wb, db] : basis) {
            if (da + db > degree_bound) continue;
            for (const auto& [wc, dc] : basis) {
                if (da + db + dc > degree_bound) continue;
                TripleState t;
                t.add({wa, wb, wc}, SingularFn::one());
                TripleState lhs = apply_R(R, apply_R(R, apply_R(R, t, 1, 2, 2, 3), 0, 2, 1, 3),
                                          0, 1, 1, 2);
                TripleState rhs = apply_R(R, apply_R(R, apply_R(R, t, 0, 1, 1, 2), 0, 2, 1, 3),
                                          1, 2, 2, 3);
                if (!(lhs == rhs)) {
                    std::ostringstream os;
                    os << "YBE fails on triple degrees (" << da << "," << db << "," << dc << ")";
                    return SweepReport{false, os.str()};
                }
            }
        }
    return SweepReport{true, ""};
}

SweepReport rmatrix_hexagon_check(const RMatrixOp& R, long degree_bound) {
    const FamilyPtr& fam = R.family;
    auto basis = basis_through(*fam, degree_bound);
    for (const auto& [wa, da] : basis)
        for (const auto& [wb, db] : basis) {
            if (da + db > degree_bound) continue;
            for (const auto& [wc, dc] : basis) {
                if (da + db + dc > degree_bound) continue;
                TripleState t;
                t.add({wa, wb, wc}, SingularFn::one());

                // R12 m12 = m12 R23 R13  (poles of the surviving pair at x1, x3)
                PairState lhs1 = apply_R_pair(R, merge_slots(fam, t, 0, 1, 2, {}), 1, 3);
                PairState rhs1 = merge_slots(
                    fam, apply_R(R, apply_R(R, t, 0, 2, 1, 3), 1, 2, 2, 3), 0, 1, 2,
                    {{2, 1}});
                if (!(lhs1 == rhs1))
                    return SweepReport{false, "R12 m12 = m12 R23 R13 fails on degrees (" +
                                                  std::to_string(da) + "," + std::to_string(db) +
                                                  "," + std::to_string(dc) + ")"};

                // R12 m23 = m23 R12 R13  (surviving pair at x1, x2)
                PairState lhs2 = apply_R_pair(R, merge_slots(fam, t, 1, 2, 0, {}), 1, 2);
                PairState rhs2 = merge_slots(
                    fam, apply_R(R, apply_R(R, t, 0, 2, 1, 3), 0, 1, 1, 2), 1, 2, 0,
                    {{3, 2}});
                if (!(lhs2 == rhs2))
                    return SweepReport{false, "R12 m23 = m23 R12 R13 fails on degrees (" +
                                                  std::to_string(da) + "," + std::to_string(db) +
                                                  "," + std::to_string(dc) + ")"};
            }
        }
    return SweepReport{true, ""};
}

SweepReport braided_comm_check(const Bicharacter& r, const RMatrixOp& R, long degree_bound) {
    const FamilyPtr& fam = R.family;
    auto basis = basis_through(*fam, degree_bound);
    for (const auto& [wa, da] : basis)
        for (const auto& [wb, db] : basis) {
            if (da + db > degree_bound) continue;
            State a = State::monomial(fam, wa), b = State::monomial(fam, wb);
            // m_r R
            TwistedState lhs;
            lhs.family = fam;
            const auto* row = lookup(R, PairKey{wa, wb});
            if (!row) throw std::domain_error("R-matrix entry outside the degree bound");
            for (const auto& [outpair, c] : *row) {
                TwistedState m = twisted_product(State::monomial(fam, outpair.first),
                                                 State::monomial(fam, outpair.second), r);
                for (const auto& [w, cw] : m.terms) lhs.add(w, cw * c);
            }
            // m_r tau
            TwistedState rhs = twisted_product(b, a, r);
            if (!(lhs == rhs)) {
                std::ostringstream os;
                os << "braided commutativity fails on pair degrees (" << da << "," << db << ")";
                return SweepReport{false, os.str()};
            }
        }
    return SweepReport{true, ""};
}

SweepReport plain_comm_check(const Bicharacter& r, long degree_bound) {
    const FamilyPtr& fam = r.family();
    auto basis = basis_through(*fam, degree_bound);
    for (const auto& [wa, da] : basis)
        for (const auto& [wb, db] : basis) {
            if (da + db > degree_bound) continue;
            State a = State::monomial(fam, wa), b = State::monomial(fam, wb);
            if (!(twisted_product(a, b, r) == twisted_product(b, a, r))) {
                std::ostringstream os;
                os << "plain commutativity fails on pair degrees (" << da << "," << db << ")";
                return SweepReport{false, os.str()};
            }
        }
    return SweepReport{true, ""};
}

}  // namespace vxa
