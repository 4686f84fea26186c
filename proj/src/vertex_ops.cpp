#include "vxa/vertex_ops.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vxa {

VertexAlgebraInstance make_instance(FamilyPtr family, Bicharacter bichar) {
    return VertexAlgebraInstance{std::move(family), std::move(bichar)};
}

VertexAlgebraInstance untwisted_instance(FamilyPtr family_at_zero) {
    Bicharacter eps = Bicharacter::epsilon(family_at_zero);
    return VertexAlgebraInstance{std::move(family_at_zero), std::move(eps)};
}

State OpePoints::term(long n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? State(family_) : it->second;
}

void OpePoints::add_term(long n, const State& v) {
    if (v.is_zero()) return;
    auto it = terms_.find(n);
    if (it == terms_.end()) {
        terms_[n] = v;
    } else {
        it->second += v;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

OpePoints& OpePoints::operator+=(const OpePoints& o) {
    if (!family_) family_ = o.family_;
    tail_min_ = std::max(tail_min_, o.tail_min_);
    for (const auto& [n, v] : o.terms_) add_term(n, v);
    // entries below the common exact range are no longer trustworthy
    while (!terms_.empty() && terms_.begin()->first < tail_min_) terms_.erase(terms_.begin());
    return *this;
}

OpePoints operator*(const Scalar& c, const OpePoints& p) {
    OpePoints r(p.family(), p.tail_min());
    if (is_zero(c)) return r;
    for (const auto& [n, v] : p.terms()) r.add_term(n, c * v);
    return r;
}

OpePoints OpePoints::shifted(const std::map<int, Scalar>& diff_laurent) const {
    if (diff_laurent.empty()) return OpePoints(family_, tail_min_);
    int e_min = diff_laurent.begin()->first;
    OpePoints r(family_, tail_min_ - e_min);
    for (const auto& [n, v] : terms_)
        for (const auto& [e, c] : diff_laurent) {
            long nn = n - e;
            if (nn < r.tail_min_) continue;  // incomplete slot
            r.add_term(nn, c * v);
        }
    return r;
}

OpePoints OpePoints::swapped() const {
    OpePoints r(family_, tail_min_);
    if (terms_.empty()) return r;
    const long n_max = terms_.rbegin()->first;
    for (long nn = tail_min_; nn <= n_max; ++nn) {
        State acc(family_);
        for (const auto& [n, v] : terms_) {
            if (n < nn) continue;
            State shifted = dp_act_state(DPElement::generator(static_cast<unsigned>(n - nn)), v);
            if (shifted.is_zero()) continue;
            if ((n + 1) % 2 != 0) shifted = -shifted;
            acc += shifted;
        }
        r.add_term(nn, acc);
    }
    return r;
}

bool OpePoints::equal_through(const OpePoints& o, long tail) const {
    long lo = std::max({tail, tail_min_, o.tail_min_});
    std::vector<long> keys;
    for (const auto& [n, v] : terms_)
        if (n >= lo) keys.push_back(n);
    for (const auto& [n, v] : o.terms_)
        if (n >= lo) keys.push_back(n);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (long n : keys)
        if (!(term(n) == o.term(n))) return false;
    return true;
}

OpePoints OpePoints::subtract(const OpePoints& o) const {
    OpePoints r = *this;
    r += Scalar(-1) * o;
    return r;
}

int OpePoints::max_pole() const {
    int p = 0;
    for (const auto& [n, v] : terms_)
        if (n >= 0) p = std::max<int>(p, static_cast<int>(n) + 1);
    return p;
}

OpeResult OpePoints::to_ope_result(long truncation) const {
    OpeResult res;
    res.truncation = truncation;
    for (const auto& [n, v] : terms_)
        if (n >= 0) res.principal[static_cast<int>(n) + 1] = v;
    for (long i = 0; i <= truncation; ++i)
        for (long j = 0; i + j <= truncation; ++j) {
            State acc(family_);
            for (long q = i; q <= i + j; ++q) {
                if (-q - 1 < tail_min_) throw std::domain_error("regular grid beyond the tail");
                State cq = term(-q - 1);
                if (cq.is_zero()) continue;
                State t = dp_act_state(DPElement::generator(static_cast<unsigned>(j - q + i)), cq);
                if (t.is_zero()) continue;
                Scalar c = Scalar(binomial(static_cast<unsigned long>(q),
                                           static_cast<unsigned long>(i)));
                if ((q - i) % 2 != 0) c = -c;
                acc += c * t;
            }
            if (!acc.is_zero()) res.regular[{i, j}] = acc;
        }
    return res;
}

namespace {

State rebind(const State& s, const FamilyPtr& fam) {
    State r(fam);
    for (const auto& [w, c] : s.terms()) r.add_term(w, c);
    return r;
}

/// [z^K] Y(word, z) s via the right-nested normal-ordered reconstruction.
State field_coeff(const FamilyPtr& fam, const PBWMonomial& a, long K, const State& s) {
    if (a.empty()) return K == 0 ? s : State(fam);
    const AlgebraFamily& F = *fam;
    const int wt = F.weight();
    const Generator lead = a.front();
    const PBWMonomial rest(a.begin() + 1, a.end());
    const long m = -lead.mode;
    const unsigned d = static_cast<unsigned>(m - wt);
    const long cmax = F.creation_max();
    const long rest_deg = monomial_degree(rest);
    const long s_deg = s.max_degree();

    State out(fam);
    // creation side: the lead field's mode acts after the tail fields
    for (long i = -cmax - m; i <= K + rest_deg + s_deg; ++i) {
        const long l = -i - m;
        Integer bin = gen_binomial(-l - wt, d);
        if (bin == 0) continue;
        State inner = field_coeff(fam, rest, K - i, s);
        if (inner.is_zero()) continue;
        out += Scalar(bin) * mode_action(Generator{lead.label, l}, inner);
    }
    // annihilation side: the lead field's mode acts first
    for (long l = cmax + 1; l <= s_deg; ++l) {
        Integer bin = gen_binomial(-l - wt, d);
        if (bin == 0) continue;
        State hit = mode_action(Generator{lead.label, l}, s);
        if (hit.is_zero()) continue;
        const long i = -l - m;
        State tail = field_coeff(fam, rest, K - i, hit);
        if (tail.is_zero()) continue;
        out += Scalar(bin) * tail;
    }
    return out;
}

}  // namespace

State apply_field_mode(const State& a, long n, const State& s) {
    if (!a.family()) throw std::domain_error("state without family");
    State out(a.family());
    for (const auto& [w, c] : a.terms()) out += c * field_coeff(a.family(), w, -n - 1, s);
    return out;
}

namespace {

/// Untwisted two-point correlation in canonical form, exact for n >= tail.
OpePoints base_two_point(const FamilyPtr& base, const State& a, const State& b, long tail) {
    OpePoints out(base, tail);
    const long n_hi = a.max_degree() + b.max_degree();  // a_(n) b = 0 beyond
    for (long n = tail; n <= n_hi; ++n) out.add_term(n, apply_field_mode(a, n, b));
    return out;
}

}  // namespace

OpePoints phi_r(const VertexAlgebraInstance& va, const State& a, const State& b, long N) {
    if (!va.family) throw std::domain_error("instance without family");
    const long target_tail = -N - 1;
    FamilyPtr base = std::make_shared<AlgebraFamily>(va.family->at_parameter(Scalar(0)));
    OpePoints out(va.family, target_tail);

    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms())
            for (const auto& [a1, a2] : coproduct_legs(wa))
                for (const auto& [b1, b2] : coproduct_legs(wb)) {
                    SingularFn v = va.bichar.eval_words(a2, b2);
                    if (v.is_zero()) continue;
                    auto diff = v.as_difference_laurent(1, 2);
                    if (!diff)
                        throw std::domain_error(
                            "bicharacter value is not a function of x1-x2");
                    if (diff->empty()) continue;
                    const int e_min = diff->begin()->first;
                    OpePoints basept =
                        base_two_point(base, State::monomial(base, a1),
                                       State::monomial(base, b1), target_tail + e_min);
                    OpePoints shifted = basept.shifted(*diff);
                    out += (ca * cb) * shifted;
                }
    // results live in the twisted family
    OpePoints rebound(va.family, out.tail_min());
    for (const auto& [n, v] : out.terms()) rebound.add_term(n, rebind(v, va.family));
    return rebound;
}

VertexOpSeries vertex_op(const VertexAlgebraInstance& va, const State& a, const State& b,
                         long N) {
    OpePoints pts = phi_r(va, a, b, N);
    VertexOpSeries out;
    out.max_exponent = N;
    for (const auto& [n, v] : pts.terms()) out.coefficients[-n - 1] = v;
    return out;
}

std::map<std::pair<long, long>, State> taylor_two_point(const State& u, const State& v, long N) {
    std::map<std::pair<long, long>, State> grid;
    for (long i = 0; i <= N; ++i) {
        State du = dp_act_state(DPElement::generator(static_cast<unsigned>(i)), u);
        if (du.is_zero()) continue;
        for (long j = 0; i + j <= N; ++j) {
            State dv = dp_act_state(DPElement::generator(static_cast<unsigned>(j)), v);
            if (dv.is_zero()) continue;
            State merged = merge_product(du, dv);
            if (!merged.is_zero()) grid[{i, j}] = merged;
        }
    }
    return grid;
}

ModeMatrixSlice mode_matrix(const VertexAlgebraInstance& va, const State& a, long n,
                            long degree) {
    ModeMatrixSlice slice;
    slice.mode = n;
    slice.degree = degree;
    const long da = a.max_degree();
    if (!a.homogeneous(da)) throw std::domain_error("mode_matrix needs a homogeneous state");
    slice.target_degree = degree + da - n - 1;
    slice.domain = graded_basis(*va.family, degree);
    slice.codomain =
        slice.target_degree < 0 ? std::vector<PBWMonomial>{} : graded_basis(*va.family,
                                                                            slice.target_degree);
    slice.entries.assign(slice.codomain.size(),
                         std::vector<Scalar>(slice.domain.size(), Scalar(0)));
    const long N = std::max<long>(0, -n - 1);
    for (size_t col = 0; col < slice.domain.size(); ++col) {
        OpePoints pts = phi_r(va, a, State::monomial(va.family, slice.domain[col]), N);
        State img = pts.term(n);
        if (img.is_zero()) continue;
        std::vector<Scalar> coords = basis_coordinates(img, slice.target_degree);
        for (size_t row = 0; row < coords.size(); ++row) slice.entries[row][col] = coords[row];
    }
    return slice;
}

namespace {

using Grid = std::map<std::pair<long, long>, State>;

/// G[i][j] = [x1^i][x2^j] Y(a,x1) Y(b,x2) u3, exact through the window.
Grid composition_grid(const VertexAlgebraInstance& va, const State& a, const State& b,
                      const State& u3, long coeff_window, bool x1_first) {
    Grid g;
    VertexOpSeries inner = vertex_op(va, b, u3, coeff_window);
    for (const auto& [j, sj] : inner.coefficients) {
        VertexOpSeries outer = vertex_op(va, a, sj, coeff_window);
        for (const auto& [i, sij] : outer.coefficients) {
            auto key = x1_first ? std::make_pair(i, j) : std::make_pair(j, i);
            auto it = g.find(key);
            if (it == g.end())
                g[key] = sij;
            else {
                it->second += sij;
                if (it->second.is_zero()) g.erase(it);
            }
        }
    }
    return g;
}

Grid grid_subtract(const Grid& a, const Grid& b) {
    Grid d = a;
    for (const auto& [k, v] : b) {
        auto it = d.find(k);
        if (it == d.end())
            d[k] = -v;
        else {
            it->second = it->second - v;
            if (it->second.is_zero()) d.erase(it);
        }
    }
    return d;
}

/// Multiplies the grid by (x1-x2)^N and tests the certified window.
bool grid_killed(const Grid& d, long N, long hi) {
    Grid prod;
    for (const auto& [k, v] : d) {
        for (long t = 0; t <= N; ++t) {
            Scalar c = Scalar(binomial(static_cast<unsigned long>(N),
                                       static_cast<unsigned long>(t)));
            if (t % 2 != 0) c = -c;
            auto key = std::make_pair(k.first + N - t, k.second + t);
            auto it = prod.find(key);
            if (it == prod.end())
                prod[key] = c * v;
            else {
                it->second += c * v;
                if (it->second.is_zero()) prod.erase(it);
            }
        }
    }
    for (const auto& [k, v] : prod)
        if (k.first <= hi && k.second <= hi && !v.is_zero()) return false;
    return true;
}

}  // namespace

LocalityReport check_locality(const VertexAlgebraInstance& va, const State& a, const State& b,
                              long n_max, long window_degree, long coeff_window) {
    LocalityReport rep;
    long best = 0;
    for (long deg = 0; deg <= window_degree; ++deg) {
        for (const auto& w : graded_basis(*va.family, deg)) {
            State u3 = State::monomial(va.family, w);
            Grid g1 = composition_grid(va, a, b, u3, coeff_window, true);
            Grid g2 = composition_grid(va, b, a, u3, coeff_window, false);
            Grid d = grid_subtract(g1, g2);
            long n = 0;
            for (; n <= n_max; ++n)
                if (grid_killed(d, n, coeff_window)) break;
            if (n > n_max) {
                std::ostringstream os;
                os << "no N <= " << n_max << " kills the commutator on u3 = " << u3.str();
                rep.witness = os.str();
                return rep;
            }
            best = std::max(best, n);
        }
    }
    rep.found = true;
    rep.order = best;
    return rep;
}

CheckReport check_translation(const VertexAlgebraInstance& va, const State& a, long order_n,
                              long window_degree, const Scalar& corrupt_scale) {
    for (long deg = 0; deg <= window_degree; ++deg) {
        for (const auto& w : graded_basis(*va.family, deg)) {
            State u = State::monomial(va.family, w);
            VertexOpSeries fu = vertex_op(va, a, u, order_n);
            VertexOpSeries ftu = vertex_op(va, a, translation(u), order_n);
            long lo = 0;
            for (const auto& [i, v] : fu.coefficients) lo = std::min(lo, i);
            for (long i = lo; i < order_n; ++i) {
                State yi = fu.coefficients.count(i) ? fu.coefficients[i] : State(va.family);
                State yti = ftu.coefficients.count(i) ? ftu.coefficients[i] : State(va.family);
                State lhs = corrupt_scale * translation(yi) - yti;
                State rhs = Scalar(i + 1) * (fu.coefficients.count(i + 1) ? fu.coefficients[i + 1]
                                                                          : State(va.family));
                if (!(lhs == rhs)) {
                    std::ostringstream os;
                    os << "[T,Y(a,z)] != dz Y(a,z) at u = " << u.str() << ", exponent " << i;
                    return CheckReport{false, os.str()};
                }
            }
        }
    }
    return CheckReport{true, ""};
}

CheckReport check_vacuum(const VertexAlgebraInstance& va, const State& a, long n) {
    OpePoints pts = phi_r(va, a, va.vacuum(), n);
    if (pts.max_pole() > 0)
        return CheckReport{false, "Y(a,x)|0> has a pole of order " +
                                      std::to_string(pts.max_pole()) + " for a = " + a.str()};
    if (!(pts.term(-1) == a))
        return CheckReport{false, "constant term of Y(a,x)|0> differs from a = " + a.str()};
    // the regular tail is the divided-power flow e^{xT} a
    for (long q = 1; q <= n; ++q) {
        State expect = dp_act_state(DPElement::generator(static_cast<unsigned>(q)), a);
        if (!(pts.term(-q - 1) == expect))
            return CheckReport{false, "x^" + std::to_string(q) +
                                          " coefficient of Y(a,x)|0> is not D^(q) a"};
    }
    return CheckReport{true, ""};
}

OpeCommutator ope_commutator(const VertexAlgebraInstance& va, const State& a, const State& b,
                             long N) {
    OpePoints ab = phi_r(va, a, b, N);
    OpePoints ba = phi_r(va, b, a, N);
    OpePoints ba_swapped = ba.swapped();
    OpeCommutator out;
    out.commutes = ab.equal_through(ba_swapped, -N - 1);
    OpePoints residual = ab.subtract(ba_swapped);
    out.data.truncation = N;
    for (const auto& [n, v] : ab.terms())
        if (n >= 0) out.data.principal[static_cast<int>(n) + 1] = v;
    for (const auto& [n, v] : residual.terms()) {
        if (v.is_zero()) continue;
        out.data.regular[{-n - 1, 0}] = v;  // residual tail indexed by order
    }
    return out;
}

}  // namespace vxa
