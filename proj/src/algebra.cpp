#include "vxa/algebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace vxa {

std::map<int, Scalar> LieData::bracket_at(int i, int j) const {
    if (i == j) return {};
    if (i < j) {
        auto it = bracket.find({i, j});
        return it == bracket.end() ? std::map<int, Scalar>{} : it->second;
    }
    auto it = bracket.find({j, i});
    std::map<int, Scalar> r;
    if (it != bracket.end())
        for (const auto& [k, c] : it->second) r[k] = -c;
    return r;
}

void LieData::validate() const {
    const int d = static_cast<int>(labels.size());
    if (static_cast<int>(form.size()) != d)
        throw std::invalid_argument("form matrix size mismatch");
    for (const auto& row : form)
        if (static_cast<int>(row.size()) != d)
            throw std::invalid_argument("form matrix size mismatch");
    for (const auto& [ij, terms] : bracket) {
        if (ij.first < 0 || ij.second < 0 || ij.first >= d || ij.second >= d ||
            ij.first >= ij.second)
            throw std::invalid_argument("bracket indices out of range");
        for (const auto& [k, c] : terms)
            if (k < 0 || k >= d) throw std::invalid_argument("bracket target out of range");
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (form[i][j] != form[j][i]) throw std::invalid_argument("form not symmetric");

    auto bracket_lin = [this, d](const std::map<int, Scalar>& x, int j) {
        std::map<int, Scalar> r;
        for (const auto& [i, c] : x)
            for (const auto& [k, ck] : bracket_at(i, j)) {
                r[k] += c * ck;
                if (is_zero(r[k])) r.erase(k);
            }
        (void)d;
        return r;
    };

    // Jacobi: [[a_i,a_j],a_k] + [[a_j,a_k],a_i] + [[a_k,a_i],a_j] = 0
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                std::map<int, Scalar> total;
                auto acc = [&total](const std::map<int, Scalar>& x) {
                    for (const auto& [l, c] : x) {
                        total[l] += c;
                        if (is_zero(total[l])) total.erase(l);
                    }
                };
                acc(bracket_lin(bracket_at(i, j), k));
                acc(bracket_lin(bracket_at(j, k), i));
                acc(bracket_lin(bracket_at(k, i), j));
                if (!total.empty()) throw std::invalid_argument("Jacobi identity fails");
            }

    // invariance: ([a_i,a_j], a_k) = (a_i, [a_j,a_k])
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                Scalar lhs(0), rhs(0);
                for (const auto& [l, c] : bracket_at(i, j)) lhs += c * form[l][k];
                for (const auto& [l, c] : bracket_at(j, k)) rhs += c * form[i][l];
                if (lhs != rhs) throw std::invalid_argument("form not invariant");
            }
}

AlgebraFamily AlgebraFamily::heisenberg(const Scalar& level) {
    AlgebraFamily f;
    f.kind_ = FamilyKind::Heisenberg;
    f.name_ = "heisenberg";
    f.parameter_ = level;
    f.lie_.labels = {"b"};
    f.lie_.form = {{Scalar(1)}};
    return f;
}

AlgebraFamily AlgebraFamily::affine(const std::string& name, LieData lie, const Scalar& level) {
    lie.validate();
    AlgebraFamily f;
    f.kind_ = FamilyKind::Affine;
    f.name_ = name;
    f.parameter_ = level;
    f.lie_ = std::move(lie);
    return f;
}

AlgebraFamily AlgebraFamily::virasoro(const Scalar& central_charge) {
    AlgebraFamily f;
    f.kind_ = FamilyKind::Virasoro;
    f.name_ = "virasoro";
    f.parameter_ = central_charge;
    f.lie_.labels = {"L"};
    f.lie_.form = {{Scalar(0)}};
    return f;
}

int AlgebraFamily::num_labels() const { return static_cast<int>(lie_.labels.size()); }

const std::string& AlgebraFamily::label_name(int idx) const { return lie_.labels.at(idx); }

int AlgebraFamily::label_index(const std::string& name) const {
    for (int i = 0; i < num_labels(); ++i)
        if (lie_.labels[static_cast<size_t>(i)] == name) return i;
    return -1;
}

AlgebraFamily AlgebraFamily::at_parameter(const Scalar& p) const {
    AlgebraFamily f = *this;
    f.parameter_ = p;
    return f;
}

long monomial_degree(const PBWMonomial& w) {
    long d = 0;
    for (const auto& g : w) d -= g.mode;
    return d;
}

CommutatorResult commutator(const Generator& g, const Generator& h, const AlgebraFamily& fam) {
    CommutatorResult r;
    switch (fam.kind()) {
        case FamilyKind::Heisenberg:
            if (g.mode + h.mode == 0) r.central = Scalar(g.mode) * fam.parameter();
            break;
        case FamilyKind::Affine: {
            for (const auto& [k, c] : fam.lie().bracket_at(g.label, h.label)) {
                Generator t{k, g.mode + h.mode};
                r.linear[t] += c;
                if (is_zero(r.linear[t])) r.linear.erase(t);
            }
            if (g.mode + h.mode == 0) {
                Scalar pairing = fam.lie().form_at(g.label, h.label);
                if (!is_zero(pairing)) r.central = Scalar(g.mode) * fam.parameter() * pairing;
            }
            break;
        }
        case FamilyKind::Virasoro: {
            if (g.mode != h.mode) {
                Generator t{0, g.mode + h.mode};
                r.linear[t] = Scalar(g.mode - h.mode);
            }
            if (g.mode + h.mode == 0) {
                Integer m3 = Integer(g.mode) * Integer(g.mode) * Integer(g.mode) - Integer(g.mode);
                r.central = Scalar(Scalar(m3) / 12) * fam.parameter();
            }
            break;
        }
    }
    return r;
}

State State::vacuum(FamilyPtr fam) {
    State s(std::move(fam));
    s.terms_[{}] = Scalar(1);
    return s;
}

State State::monomial(FamilyPtr fam, const PBWMonomial& w, const Scalar& c) {
    State s(std::move(fam));
    s.add_term(w, c);
    return s;
}

void State::add_term(const PBWMonomial& w, const Scalar& c) {
    if (vxa::is_zero(c)) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_[w] = c;
    } else {
        it->second += c;
        if (vxa::is_zero(it->second)) terms_.erase(it);
    }
}

Scalar State::coefficient(const PBWMonomial& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

long State::max_degree() const {
    long d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, monomial_degree(w));
    return d;
}

bool State::homogeneous(long d) const {
    for (const auto& [w, c] : terms_)
        if (monomial_degree(w) != d) return false;
    return true;
}

State State::operator-() const {
    State r(family_);
    for (const auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

namespace {
FamilyPtr join_families(const State& a, const State& b) {
    if (a.family() && b.family() && *a.family() != *b.family())
        throw std::domain_error("family mismatch");
    return a.family() ? a.family() : b.family();
}
}  // namespace

State operator+(const State& a, const State& b) {
    State r(join_families(a, b));
    for (const auto& [w, c] : a.terms()) r.add_term(w, c);
    for (const auto& [w, c] : b.terms()) r.add_term(w, c);
    return r;
}

State operator-(const State& a, const State& b) { return a + (-b); }

State operator*(const Scalar& c, const State& a) {
    State r(a.family());
    for (const auto& [w, v] : a.terms()) r.add_term(w, c * v);
    return r;
}

bool operator==(const State& a, const State& b) {
    if (a.family() && b.family() && *a.family() != *b.family()) return false;
    return a.terms() == b.terms();
}

std::string State::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c) << "*";
        if (w.empty()) {
            os << "|0>";
            continue;
        }
        for (const auto& g : w) {
            os << (family_ ? family_->label_name(g.label) : std::string("g")) << "(" << g.mode
               << ")";
        }
        os << "|0>";
    }
    return os.str();
}

State straighten(const std::vector<Generator>& word, FamilyPtr fam,
                 StraightenSchedule schedule) {
    if (!fam) throw std::domain_error("straighten needs a family");
    State out(fam);
    // worklist of pending (coefficient, word)
    std::vector<std::pair<Scalar, std::vector<Generator>>> work;
    work.emplace_back(Scalar(1), word);
    while (!work.empty()) {
        auto [coef, w] = std::move(work.back());
        work.pop_back();
        // annihilation letter adjacent to the vacuum kills the term
        if (!w.empty() && !fam->is_creation(w.back().mode)) continue;
        if (vxa::is_zero(coef)) continue;

        // locate an adjacent inversion
        long pos = -1;
        const long n = static_cast<long>(w.size());
        if (schedule == StraightenSchedule::LeftmostInversion) {
            for (long p = 0; p + 1 < n; ++p)
                if (w[static_cast<size_t>(p + 1)] < w[static_cast<size_t>(p)]) {
                    pos = p;
                    break;
                }
        } else {
            for (long p = n - 2; p >= 0; --p)
                if (w[static_cast<size_t>(p + 1)] < w[static_cast<size_t>(p)]) {
                    pos = p;
                    break;
                }
        }
        if (pos < 0) {
            out.add_term(w, coef);
            continue;
        }
        const size_t p = static_cast<size_t>(pos);
        Generator g = w[p], h = w[p + 1];
        // g h = h g + [g, h]
        std::vector<Generator> swapped = w;
        std::swap(swapped[p], swapped[p + 1]);
        work.emplace_back(coef, std::move(swapped));
        CommutatorResult br = commutator(g, h, *fam);
        for (const auto& [t, c] : br.linear) {
            std::vector<Generator> shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<long>(p));
            shorter.push_back(t);
            shorter.insert(shorter.end(), w.begin() + static_cast<long>(p) + 2, w.end());
            work.emplace_back(coef * c, std::move(shorter));
        }
        if (!vxa::is_zero(br.central)) {
            std::vector<Generator> rest;
            rest.reserve(w.size() - 2);
            rest.insert(rest.end(), w.begin(), w.begin() + static_cast<long>(p));
            rest.insert(rest.end(), w.begin() + static_cast<long>(p) + 2, w.end());
            work.emplace_back(coef * br.central, std::move(rest));
        }
    }
    return out;
}

State mode_action(const Generator& g, const State& s) {
    if (!s.family()) throw std::domain_error("state without family");
    State r(s.family());
    for (const auto& [w, c] : s.terms()) {
        std::vector<Generator> nw;
        nw.reserve(w.size() + 1);
        nw.push_back(g);
        nw.insert(nw.end(), w.begin(), w.end());
        r += c * straighten(nw, s.family());
    }
    return r;
}

State word_action(const std::vector<Generator>& word, const State& s) {
    State r = s;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = mode_action(*it, r);
    return r;
}

State merge_product(const State& a, const State& b) {
    FamilyPtr fam = join_families(a, b);
    State r(fam);
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            std::vector<Generator> w;
            w.reserve(wa.size() + wb.size());
            w.insert(w.end(), wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            r += (ca * cb) * straighten(w, fam);
        }
    return r;
}

std::vector<PBWMonomial> graded_basis(const AlgebraFamily& fam, long degree) {
    if (degree < 0) return {};
    std::vector<PBWMonomial> out;
    PBWMonomial acc;
    const long min_part = -fam.creation_max();  // 1, or 2 for Virasoro
    // letters in word order: modes ascending, i.e. parts non-increasing
    std::function<void(long, long, int)> rec = [&](long remaining, long max_part, int min_label) {
        if (remaining == 0) {
            out.push_back(acc);
            return;
        }
        for (long part = std::min(remaining, max_part); part >= min_part; --part) {
            int lab0 = part == max_part ? min_label : 0;
            for (int lab = lab0; lab < fam.num_labels(); ++lab) {
                acc.push_back(Generator{lab, -part});
                rec(remaining - part, part, lab);
                acc.pop_back();
            }
        }
    };
    rec(degree, degree, 0);
    // word order built parts-descending; monomials store modes ascending
    for (auto& w : out) std::reverse(w.begin(), w.end());
    return out;
}

std::vector<Scalar> basis_coordinates(const State& s, long degree) {
    if (!s.family()) throw std::domain_error("state without family");
    auto basis = graded_basis(*s.family(), degree);
    std::map<PBWMonomial, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    std::vector<Scalar> coords(basis.size(), Scalar(0));
    for (const auto& [w, c] : s.terms()) {
        auto it = index.find(w);
        if (it == index.end()) throw std::domain_error("state not homogeneous of degree");
        coords[it->second] = c;
    }
    return coords;
}

std::vector<std::pair<PBWMonomial, PBWMonomial>> coproduct_legs(const PBWMonomial& w) {
    const size_t n = w.size();
    std::vector<std::pair<PBWMonomial, PBWMonomial>> out;
    out.reserve(1u << n);
    for (size_t mask = 0; mask < (1u << n); ++mask) {
        PBWMonomial left, right;
        for (size_t i = 0; i < n; ++i) {
            if (mask & (1u << i))
                left.push_back(w[i]);
            else
                right.push_back(w[i]);
        }
        out.emplace_back(std::move(left), std::move(right));
    }
    return out;
}

TensorState state_coproduct(const State& s) {
    TensorState t;
    t.family = s.family();
    for (const auto& [w, c] : s.terms()) {
        for (auto& [l, r] : coproduct_legs(w)) {
            auto key = std::make_pair(l, r);
            t.terms[key] += c;
            if (is_zero(t.terms[key])) t.terms.erase(key);
        }
    }
    return t;
}

namespace {

/// D^(i) on a single letter: coefficient C(m+i-wt, i), mode shifted by -i.
std::pair<Scalar, Generator> dp_shift_letter(const AlgebraFamily& fam, const Generator& g,
                                             unsigned i) {
    long m = -g.mode;
    Integer bin = gen_binomial(m + static_cast<long>(i) - fam.weight(), i);
    return {Scalar(bin), Generator{g.label, g.mode - static_cast<long>(i)}};
}

void compositions_rec(unsigned total, size_t parts, std::vector<unsigned>& acc,
                      const std::function<void(const std::vector<unsigned>&)>& emit) {
    if (parts == 0) {
        if (total == 0) emit(acc);
        return;
    }
    if (parts == 1) {
        acc.push_back(total);
        emit(acc);
        acc.pop_back();
        return;
    }
    for (unsigned first = 0; first <= total; ++first) {
        acc.push_back(first);
        compositions_rec(total - first, parts - 1, acc, emit);
        acc.pop_back();
    }
}

}  // namespace

State dp_act_state(const DPElement& a, const State& s) {
    if (!s.family()) throw std::domain_error("state without family");
    State out(s.family());
    for (const auto& [i, ci] : a.terms()) {
        for (const auto& [w, cw] : s.terms()) {
            if (i == 0) {
                out.add_term(w, ci * cw);
                continue;
            }
            if (w.empty()) continue;  // D^(i) |0> = 0 for i > 0
            std::vector<unsigned> acc;
            compositions_rec(i, w.size(), acc, [&](const std::vector<unsigned>& parts) {
                Scalar coef = ci * cw;
                std::vector<Generator> nw;
                nw.reserve(w.size());
                for (size_t l = 0; l < w.size(); ++l) {
                    auto [c, g] = dp_shift_letter(*s.family(), w[l], parts[l]);
                    coef *= c;
                    if (vxa::is_zero(coef)) return;
                    nw.push_back(g);
                }
                out += coef * straighten(nw, s.family());
            });
        }
    }
    return out;
}

State translation(const State& s) { return dp_act_state(DPElement::generator(1), s); }

State universal_extension_basis(FamilyPtr fam, int label, unsigned i, unsigned n) {
    if (!fam) throw std::domain_error("family required");
    PBWMonomial w(n, Generator{label, fam->creation_max()});
    return dp_act_state(DPElement::generator(i), State::monomial(std::move(fam), w));
}

}  // namespace vxa
