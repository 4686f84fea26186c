#include "vxa/bicharacter.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vxa {

namespace {

/// r on a pair of single letters, with the H-invariance derivative shifts.
SingularFn letter_value(const Bicharacter& r, const Generator& g, const Generator& h) {
    const AlgebraFamily& fam = *r.family();
    const unsigned dg = static_cast<unsigned>(-g.mode - fam.weight());
    const unsigned dh = static_cast<unsigned>(-h.mode - fam.weight());
    return r.pair_value(g.label, dg, h.label, dh);
}

SingularFn eval_words(const Bicharacter& r, const PBWMonomial& a, const PBWMonomial& b) {
    return r.eval_words(a, b);
}

}  // namespace

// Permanent formula over letter bijections; unequal lengths pair against a
// counit factor and vanish.
SingularFn Bicharacter::eval_words(const PBWMonomial& a, const PBWMonomial& b) const {
    if (a.size() != b.size()) return SingularFn{};
    if (a.empty()) return SingularFn::one(mode_);
    std::vector<size_t> perm(b.size());
    std::iota(perm.begin(), perm.end(), 0u);
    SingularFn total;
    do {
        SingularFn prod = SingularFn::one(mode_);
        bool dead = false;
        for (size_t l = 0; l < a.size(); ++l) {
            SingularFn v = letter_value(*this, a[l], b[perm[l]]);
            if (v.is_zero()) {
                dead = true;
                break;
            }
            prod = prod * v;
        }
        if (!dead) total = total + prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Bicharacter Bicharacter::epsilon(FamilyPtr fam, SingMode mode) {
    Bicharacter r;
    r.family_ = std::move(fam);
    r.mode_ = mode;
    return r;
}

Bicharacter Bicharacter::from_table(FamilyPtr fam,
                                    std::map<std::pair<int, int>, SingularFn> table,
                                    SingMode mode) {
    Bicharacter r;
    r.family_ = std::move(fam);
    r.mode_ = mode;
    r.table_ = std::move(table);  // explicit zero entries are legitimate
    r.epsilon_ = true;
    for (const auto& [k, v] : r.table_)
        if (!v.is_zero()) {
            r.epsilon_ = false;
            break;
        }
    return r;
}

Bicharacter standard_bicharacter(FamilyPtr fam) {
    std::map<std::pair<int, int>, SingularFn> table;
    const Scalar& p = fam->parameter();
    switch (fam->kind()) {
        case FamilyKind::Heisenberg:
            table[{0, 0}] = p * SingularFn::factor_inverse(SingMode::Additive, 1, 2, 0, 2);
            break;
        case FamilyKind::Affine:
            for (int a = 0; a < fam->num_labels(); ++a)
                for (int b = 0; b < fam->num_labels(); ++b)
                    table[{a, b}] = (p * fam->lie().form_at(a, b)) *
                                    SingularFn::factor_inverse(SingMode::Additive, 1, 2, 0, 2);
            break;
        case FamilyKind::Virasoro:
            table[{0, 0}] =
                (p / 2) * SingularFn::factor_inverse(SingMode::Additive, 1, 2, 0, 4);
            break;
    }
    return Bicharacter::from_table(std::move(fam), std::move(table));
}

bool Bicharacter::is_epsilon() const { return epsilon_; }

SingularFn Bicharacter::pair_value(int left_label, unsigned d1, int right_label,
                                   unsigned d2) const {
    auto it = table_.find({left_label, right_label});
    if (it == table_.end()) {
        if (epsilon_) return SingularFn{};
        // all-zero rows are stored explicitly; a missing key is a data error
        throw std::domain_error("bicharacter table misses generator pair (" +
                                family_->label_name(left_label) + "," +
                                family_->label_name(right_label) + ")");
    }
    return it->second.divided_derivative_point(1, d1).divided_derivative_point(2, d2);
}

SingularFn Bicharacter::eval(const State& a, const State& b) const {
    SingularFn total;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            SingularFn v = eval_words(*this, wa, wb);
            if (v.is_zero()) continue;
            total = total + (ca * cb) * v;
        }
    return total;
}

SingularFn Bicharacter::eval_points(const State& a, int pa, const State& b, int pb) const {
    SingularFn v = eval(a, b);
    if (pa == 1 && pb == 2) return v;
    return v.rename_points({{1, pa}, {2, pb}});
}

Bicharacter Bicharacter::convolve(const Bicharacter& o) const {
    if (family_ && o.family_ && *family_ != *o.family_)
        throw std::domain_error("bicharacter family mismatch");
    if (!table_.empty() && !o.table_.empty() && mode_ != o.mode_)
        throw std::domain_error("bicharacter mode mismatch");
    std::map<std::pair<int, int>, SingularFn> merged = table_;
    for (const auto& [k, v] : o.table_) {
        auto it = merged.find(k);
        if (it == merged.end())
            merged[k] = v;
        else
            it->second = it->second + v;
    }
    return from_table(family_ ? family_ : o.family_, std::move(merged),
                      table_.empty() ? o.mode_ : mode_);
}

Bicharacter Bicharacter::inverse() const {
    std::map<std::pair<int, int>, SingularFn> neg;
    for (const auto& [k, v] : table_) neg[k] = -v;
    return from_table(family_, std::move(neg), mode_);
}

void TwistedState::add(const PBWMonomial& w, const SingularFn& c) {
    if (c.is_zero()) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms[w] = c;
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

bool operator==(const TwistedState& a, const TwistedState& b) { return a.terms == b.terms; }

TwistedState twisted_product(const State& a, const State& b, const Bicharacter& r) {
    if (!a.family()) throw std::domain_error("state without family");
    TwistedState out;
    out.family = a.family();
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms())
            for (const auto& [a1, a2] : coproduct_legs(wa))
                for (const auto& [b1, b2] : coproduct_legs(wb)) {
                    SingularFn v = eval_words(r, a2, b2);
                    if (v.is_zero()) continue;
                    std::vector<Generator> w;
                    w.reserve(a1.size() + b1.size());
                    w.insert(w.end(), a1.begin(), a1.end());
                    w.insert(w.end(), b1.begin(), b1.end());
                    State merged = straighten(w, a.family());
                    for (const auto& [wm, cm] : merged.terms())
                        out.add(wm, (ca * cb * cm) * v);
                }
    return out;
}

TwistedState swap_points_12(const TwistedState& t) {
    TwistedState out;
    out.family = t.family;
    for (const auto& [w, c] : t.terms) out.add(w, c.rename_points({{1, 2}, {2, 1}}));
    return out;
}

void MultiPointState::add(const std::vector<PBWMonomial>& t, const SingularFn& c) {
    if (c.is_zero()) return;
    auto it = terms.find(t);
    if (it == terms.end()) {
        terms[t] = c;
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

bool operator==(const MultiPointState& a, const MultiPointState& b) {
    return a.points == b.points && a.terms == b.terms;
}

MultiPointState pin_at_point(const State& a, int point) {
    MultiPointState m;
    m.family = a.family();
    m.points = {point};
    for (const auto& [w, c] : a.terms())
        m.add({w}, SingularFn::from_scalar(c));
    return m;
}

namespace {

/// All splits of a word into `slots` ordered pieces (letters keep order).
void enumerate_splits(const PBWMonomial& w, size_t slots,
                      std::vector<std::vector<PBWMonomial>>& out) {
    std::vector<size_t> assign(w.size(), 0);
    while (true) {
        std::vector<PBWMonomial> pieces(slots);
        for (size_t l = 0; l < w.size(); ++l) pieces[assign[l]].push_back(w[l]);
        out.push_back(std::move(pieces));
        size_t pos = 0;
        while (pos < assign.size()) {
            if (++assign[pos] < slots) break;
            assign[pos] = 0;
            ++pos;
        }
        if (pos == assign.size()) break;
    }
}

}  // namespace

MultiPointState twisted_tensor_product(const MultiPointState& A, const MultiPointState& B,
                                       const Bicharacter& r) {
    MultiPointState out;
    out.family = A.family ? A.family : B.family;
    out.points = A.points;
    out.points.insert(out.points.end(), B.points.begin(), B.points.end());
    const size_t P = A.points.size(), Q = B.points.size();

    for (const auto& [ta, ca] : A.terms) {
        // splits of each A-word into 1 principal + Q partner pieces
        std::vector<std::vector<std::vector<PBWMonomial>>> splitsA(P);
        for (size_t p = 0; p < P; ++p) enumerate_splits(ta[p], Q + 1, splitsA[p]);
        for (const auto& [tb, cb] : B.terms) {
            std::vector<std::vector<std::vector<PBWMonomial>>> splitsB(Q);
            for (size_t q = 0; q < Q; ++q) enumerate_splits(tb[q], P + 1, splitsB[q]);

            // iterate the cartesian product of split choices
            std::vector<size_t> ia(P, 0), ib(Q, 0);
            while (true) {
                SingularFn val = ca * cb;
                for (size_t p = 0; p < P && !val.is_zero(); ++p)
                    for (size_t q = 0; q < Q && !val.is_zero(); ++q) {
                        const PBWMonomial& pa = splitsA[p][ia[p]][1 + q];
                        const PBWMonomial& pb = splitsB[q][ib[q]][1 + p];
                        SingularFn f = eval_words(r, pa, pb);
                        if (f.is_zero()) {
                            val = SingularFn{};
                            break;
                        }
                        val = val * f.rename_points({{1, A.points[p]}, {2, B.points[q]}});
                    }
                if (!val.is_zero()) {
                    std::vector<PBWMonomial> tuple(P + Q);
                    for (size_t p = 0; p < P; ++p) tuple[p] = splitsA[p][ia[p]][0];
                    for (size_t q = 0; q < Q; ++q) tuple[P + q] = splitsB[q][ib[q]][0];
                    out.add(tuple, val);
                }
                // advance the odometer
                size_t pos = 0;
                bool done = false;
                while (true) {
                    if (pos < P) {
                        if (++ia[pos] < splitsA[pos].size()) break;
                        ia[pos] = 0;
                        ++pos;
                    } else if (pos < P + Q) {
                        size_t q = pos - P;
                        if (++ib[q] < splitsB[q].size()) break;
                        ib[q] = 0;
                        ++pos;
                    } else {
                        done = true;
                        break;
                    }
                }
                if (done) break;
            }
        }
    }
    return out;
}

SingularFn singular_extension(const Bicharacter& r,
                              const std::vector<std::pair<State, int>>& left,
                              const std::vector<std::pair<State, int>>& right) {
    const size_t I = left.size(), J = right.size();
    {
        std::vector<int> pts;
        for (const auto& [s, p] : left) pts.push_back(p);
        for (const auto& [s, p] : right) pts.push_back(p);
        std::sort(pts.begin(), pts.end());
        if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
            throw std::domain_error("point label collision");
    }
    if (I == 0 || J == 0) {
        // empty tensor: the pairing degenerates to counits
        Scalar c(1);
        for (const auto& [s, p] : left) c *= s.vacuum_component();
        for (const auto& [s, p] : right) c *= s.vacuum_component();
        return SingularFn::from_scalar(c, r.mode());
    }
    SingularFn total;
    // iterate monomials of every argument
    std::vector<std::vector<std::pair<PBWMonomial, Scalar>>> lmon(I), rmon(J);
    for (size_t i = 0; i < I; ++i)
        for (const auto& [w, c] : left[i].first.terms()) lmon[i].push_back({w, c});
    for (size_t j = 0; j < J; ++j)
        for (const auto& [w, c] : right[j].first.terms()) rmon[j].push_back({w, c});

    std::vector<size_t> li(I, 0), rj(J, 0);
    auto advance = [&]() {
        size_t pos = 0;
        while (true) {
            if (pos < I) {
                if (!lmon[pos].empty() && ++li[pos] < lmon[pos].size()) return true;
                li[pos] = 0;
                ++pos;
            } else if (pos < I + J) {
                size_t j = pos - I;
                if (!rmon[j].empty() && ++rj[j] < rmon[j].size()) return true;
                rj[j] = 0;
                ++pos;
            } else {
                return false;
            }
        }
    };
    for (size_t i = 0; i < I; ++i)
        if (lmon[i].empty()) return SingularFn{};
    for (size_t j = 0; j < J; ++j)
        if (rmon[j].empty()) return SingularFn{};

    while (true) {
        Scalar coef(1);
        std::vector<std::vector<std::vector<PBWMonomial>>> sl(I), sr(J);
        for (size_t i = 0; i < I; ++i) {
            coef *= lmon[i][li[i]].second;
            enumerate_splits(lmon[i][li[i]].first, J, sl[i]);
        }
        for (size_t j = 0; j < J; ++j) {
            coef *= rmon[j][rj[j]].second;
            enumerate_splits(rmon[j][rj[j]].first, I, sr[j]);
        }
        std::vector<size_t> si(I, 0), sj(J, 0);
        while (true) {
            SingularFn val = SingularFn::from_scalar(coef, r.mode());
            for (size_t i = 0; i < I && !val.is_zero(); ++i)
                for (size_t j = 0; j < J && !val.is_zero(); ++j) {
                    SingularFn f = eval_words(r, sl[i][si[i]][j], sr[j][sj[j]][i]);
                    if (f.is_zero()) {
                        val = SingularFn{};
                        break;
                    }
                    val = val * f.rename_points({{1, left[i].second}, {2, right[j].second}});
                }
            if (!val.is_zero()) total = total + val;

            size_t pos = 0;
            bool done = false;
            while (true) {
                if (pos < I) {
                    if (++si[pos] < sl[pos].size()) break;
                    si[pos] = 0;
                    ++pos;
                } else if (pos < I + J) {
                    size_t j = pos - I;
                    if (++sj[j] < sr[j].size()) break;
                    sj[j] = 0;
                    ++pos;
                } else {
                    done = true;
                    break;
                }
            }
            if (done) break;
        }
        if (!advance()) break;
    }
    return total;
}

}  // namespace vxa
