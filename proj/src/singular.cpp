#include "vxa/singular.hpp"

#include <sstream>
#include <stdexcept>

namespace vxa {

namespace {

constexpr const char* kAddShift = "t";
constexpr const char* kMulShift = "q";

// The factor as a Laurent polynomial, any index order.
LaurentPoly factor_laurent(SingMode mode, int i, int j, long shift) {
    if (mode == SingMode::Additive) {
        LaurentPoly p = LaurentPoly::variable(point_var(i)) - LaurentPoly::variable(point_var(j));
        if (shift != 0)
            p -= Scalar(shift) * LaurentPoly::variable(kAddShift);
        return p;
    }
    LaurentPoly p = LaurentPoly::variable(point_var(i)) *
                    LaurentPoly::variable(point_var(j), -1);
    p -= LaurentPoly::variable(kMulShift, static_cast<int>(shift));
    return p;
}

// Canonical placement of 1/(factor(i,j,shift))^power with i > j: returns the
// flipped key plus the unit absorbed into the numerator.
std::pair<FactorKey, LaurentPoly> absorb_flipped_inverse(SingMode mode, int i, int j, long shift,
                                                         int power) {
    FactorKey key{j, i, -shift};
    if (mode == SingMode::Additive) {
        // 1/(x_i-x_j-st)^p = (-1)^p / (x_j-x_i+st)^p
        LaurentPoly unit(Scalar(power % 2 == 0 ? 1 : -1));
        return {key, unit};
    }
    // 1/(x_i/x_j-q^s)^p = (-1)^p q^{-sp} (x_j/x_i)^p / (x_j/x_i-q^{-s})^p
    Monomial m;
    if (shift != 0) m[kMulShift] = static_cast<int>(-shift) * power;
    m[point_var(j)] = power;
    m[point_var(i)] = -power;
    LaurentPoly unit = LaurentPoly::term(Scalar(power % 2 == 0 ? 1 : -1), m);
    return {key, unit};
}

// Divides f by the monic linear polynomial (xi - root); root must not
// involve xi. Returns the quotient, or nothing when not divisible.
std::optional<LaurentPoly> divide_linear(const LaurentPoly& f, const std::string& xi,
                                         const LaurentPoly& root) {
    if (f.is_zero()) return f;
    if (!f.depends_on(xi)) return std::nullopt;
    int mn = f.min_exponent(xi);
    int clear = mn < 0 ? -mn : 0;
    LaurentPoly g = clear ? f * LaurentPoly::variable(xi, clear) : f;
    int d = g.max_exponent(xi);
    if (d <= 0) return std::nullopt;
    std::vector<LaurentPoly> coef(static_cast<size_t>(d) + 1);
    for (int e = 0; e <= d; ++e) coef[static_cast<size_t>(e)] = g.coefficient_of(xi, e);
    std::vector<LaurentPoly> quot(static_cast<size_t>(d));
    LaurentPoly carry = coef[static_cast<size_t>(d)];
    for (int e = d - 1; e >= 0; --e) {
        quot[static_cast<size_t>(e)] = carry;
        carry = coef[static_cast<size_t>(e)] + root * carry;
    }
    if (!carry.is_zero()) return std::nullopt;
    LaurentPoly q;
    for (int e = 0; e < d; ++e)
        q += quot[static_cast<size_t>(e)] * LaurentPoly::variable(xi, e);
    if (clear) q = q * LaurentPoly::variable(xi, -clear);
    return q;
}

std::optional<LaurentPoly> try_divide_once(const LaurentPoly& num, SingMode mode,
                                           const FactorKey& k) {
    const std::string xi = point_var(k.i);
    if (mode == SingMode::Additive) {
        LaurentPoly root = LaurentPoly::variable(point_var(k.j));
        if (k.shift != 0) root += Scalar(k.shift) * LaurentPoly::variable(kAddShift);
        return divide_linear(num, xi, root);
    }
    // x_i/x_j - q^s = x_j^{-1} (x_i - q^s x_j)
    LaurentPoly root = LaurentPoly::variable(kMulShift, static_cast<int>(k.shift)) *
                       LaurentPoly::variable(point_var(k.j));
    auto q = divide_linear(num, xi, root);
    if (!q) return q;
    return *q * LaurentPoly::variable(point_var(k.j));
}

SingMode join_modes(const SingularFn& a, const SingularFn& b) {
    if (a.is_regular() && !b.is_regular()) return b.mode();
    if (!a.is_regular() && b.is_regular()) return a.mode();
    if (a.mode() != b.mode() && !(a.is_regular() && b.is_regular()))
        throw std::domain_error("singular ring mode mismatch");
    return a.mode();
}

}  // namespace

std::string point_var(int i) { return "x" + std::to_string(i); }

SingularFn SingularFn::from_laurent(const LaurentPoly& p, SingMode mode) {
    SingularFn f(mode);
    f.num_ = p;
    return f;
}

SingularFn SingularFn::from_scalar(const Scalar& c, SingMode mode) {
    return from_laurent(LaurentPoly(c), mode);
}

SingularFn SingularFn::one(SingMode mode) { return from_scalar(Scalar(1), mode); }

SingularFn SingularFn::factor_inverse(SingMode mode, int i, int j, long shift, int power) {
    if (i == j) throw std::domain_error("pole factor needs two distinct points");
    if (power == 0) return one(mode);
    if (power < 0) return factor_poly(mode, i, j, shift, -power);
    SingularFn f(mode);
    if (i < j) {
        f.num_ = laurent_one();
        f.den_[FactorKey{i, j, shift}] = power;
    } else {
        auto [key, unit] = absorb_flipped_inverse(mode, i, j, shift, power);
        f.num_ = unit;
        f.den_[key] = power;
    }
    return f;
}

SingularFn SingularFn::factor_poly(SingMode mode, int i, int j, long shift, int power) {
    if (power < 0) return factor_inverse(mode, i, j, shift, -power);
    return from_laurent(laurent_pow(factor_laurent(mode, i, j, shift), static_cast<unsigned>(power)),
                        mode);
}

LaurentPoly SingularFn::denominator_poly() const {
    LaurentPoly d = laurent_one();
    for (const auto& [k, p] : den_)
        d = d * laurent_pow(factor_laurent(mode_, k.i, k.j, k.shift), static_cast<unsigned>(p));
    return d;
}

void SingularFn::normalize() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        bool erased = false;
        while (it->second > 0) {
            auto q = try_divide_once(num_, mode_, it->first);
            if (!q) break;
            num_ = *q;
            if (--it->second == 0) {
                it = den_.erase(it);
                erased = true;
                break;
            }
        }
        if (!erased) ++it;
    }
}

SingularFn SingularFn::operator-() const {
    SingularFn r = *this;
    r.num_ = -r.num_;
    return r;
}

SingularFn operator+(const SingularFn& a, const SingularFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    SingularFn r(join_modes(a, b));
    // common denominator with per-factor maximal powers
    r.den_ = a.den_;
    for (const auto& [k, p] : b.den_) {
        auto it = r.den_.find(k);
        if (it == r.den_.end() || it->second < p) r.den_[k] = p;
    }
    LaurentPoly na = a.num_, nb = b.num_;
    for (const auto& [k, p] : r.den_) {
        auto ia = a.den_.find(k);
        auto ib = b.den_.find(k);
        int da = p - (ia == a.den_.end() ? 0 : ia->second);
        int db = p - (ib == b.den_.end() ? 0 : ib->second);
        if (da)
            na = na * laurent_pow(factor_laurent(r.mode_, k.i, k.j, k.shift),
                                  static_cast<unsigned>(da));
        if (db)
            nb = nb * laurent_pow(factor_laurent(r.mode_, k.i, k.j, k.shift),
                                  static_cast<unsigned>(db));
    }
    r.num_ = na + nb;
    r.normalize();
    return r;
}

SingularFn operator-(const SingularFn& a, const SingularFn& b) { return a + (-b); }

SingularFn operator*(const SingularFn& a, const SingularFn& b) {
    if (a.is_zero() || b.is_zero()) return SingularFn{};
    SingularFn r(join_modes(a, b));
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_;
    for (const auto& [k, p] : b.den_) r.den_[k] += p;
    r.normalize();
    return r;
}

SingularFn operator*(const Scalar& c, const SingularFn& a) {
    SingularFn r = a;
    r.num_ = c * r.num_;
    if (r.num_.is_zero()) r.den_.clear();
    return r;
}

bool operator==(const SingularFn& a, const SingularFn& b) {
    if (a.num_ != b.num_) return false;
    if (a.den_ != b.den_) return false;
    if (!a.den_.empty() && a.mode_ != b.mode_) return false;
    return true;
}

SingularFn SingularFn::derivative_point(int i) const {
    const std::string xi = point_var(i);
    SingularFn r(mode_);
    r.num_ = num_.derivative(xi);
    r.den_ = den_;
    r.normalize();
    for (const auto& [k, p] : den_) {
        LaurentPoly dfac;
        if (mode_ == SingMode::Additive) {
            if (k.i == i)
                dfac = laurent_one();
            else if (k.j == i)
                dfac = -laurent_one();
        } else {
            if (k.i == i)
                dfac = LaurentPoly::variable(point_var(k.j), -1);
            else if (k.j == i)
                dfac = -(LaurentPoly::variable(point_var(k.i)) *
                         LaurentPoly::variable(point_var(k.j), -2));
        }
        if (dfac.is_zero()) continue;
        SingularFn term(mode_);
        term.num_ = Scalar(-p) * (num_ * dfac);
        term.den_ = den_;
        term.den_[k] = p + 1;
        term.normalize();
        r = r + term;
    }
    return r;
}

SingularFn SingularFn::divided_derivative_point(int i, unsigned d) const {
    SingularFn f = *this;
    for (unsigned l = 1; l <= d; ++l) f = Scalar(1, l) * f.derivative_point(i);
    return f;
}

SingularFn SingularFn::shift_point(int i, long k) const {
    if (mode_ != SingMode::Multiplicative)
        throw std::domain_error("shift_point applies to the multiplicative ring");
    if (k == 0 || is_zero()) return *this;
    const std::string xi = point_var(i);
    SingularFn r(mode_);
    for (const auto& [m, c] : num_.terms()) {
        auto it = m.find(xi);
        int e = it == m.end() ? 0 : it->second;
        Monomial nm = m;
        if (e != 0) nm[kMulShift] += static_cast<int>(k) * e;
        r.num_.add_term(nm, c);
    }
    LaurentPoly unit = laurent_one();
    for (const auto& [key, p] : den_) {
        FactorKey nk = key;
        if (key.i == i) {
            // q^k x_i/x_j - q^s = q^k (x_i/x_j - q^{s-k})
            nk.shift = key.shift - k;
            Monomial m{{kMulShift, static_cast<int>(-k) * p}};
            unit = unit * LaurentPoly::term(Scalar(1), m);
        } else if (key.j == i) {
            nk.shift = key.shift + k;
            Monomial m{{kMulShift, static_cast<int>(k) * p}};
            unit = unit * LaurentPoly::term(Scalar(1), m);
        }
        r.den_[nk] += p;
    }
    r.num_ = r.num_ * unit;
    r.normalize();
    return r;
}

SingularFn SingularFn::rename_points(const std::map<int, int>& relabel) const {
    if (is_zero()) return *this;
    auto ren = [&relabel](int p) {
        auto it = relabel.find(p);
        return it == relabel.end() ? p : it->second;
    };
    std::map<std::string, std::string> names;
    for (const auto& [from, to] : relabel) names[point_var(from)] = point_var(to);
    SingularFn r(mode_);
    r.num_ = num_.rename(names);
    for (const auto& [key, p] : den_) {
        int a = ren(key.i), b = ren(key.j);
        if (a == b) {
            if (mode_ != SingMode::Additive || key.shift == 0)
                throw std::domain_error("rename collapses a pole onto the diagonal");
            // (x-x-st)^p = (-st)^p, a unit of R[t^{±1}]
            Monomial m{{kAddShift, -p}};
            Scalar c = Scalar(1);
            Scalar base = Scalar(-key.shift);
            for (int l = 0; l < p; ++l) c /= base;
            r.num_ = r.num_ * LaurentPoly::term(c, m);
            continue;
        }
        if (a < b) {
            r.den_[FactorKey{a, b, key.shift}] += p;
        } else {
            auto [nk, unit] = absorb_flipped_inverse(mode_, a, b, key.shift, p);
            r.den_[nk] += p;
            r.num_ = r.num_ * unit;
        }
    }
    r.normalize();
    return r;
}

SingularFn SingularFn::substitute_shift_zero() const {
    if (mode_ != SingMode::Additive)
        throw std::domain_error("shift substitution applies to the additive ring");
    SingularFn r(mode_);
    for (const auto& [m, c] : num_.terms()) {
        auto it = m.find(kAddShift);
        int e = it == m.end() ? 0 : it->second;
        if (e < 0) throw std::domain_error("t=0 hits a negative power of t");
        if (e > 0) continue;
        r.num_.add_term(m, c);
    }
    for (const auto& [key, p] : den_) r.den_[FactorKey{key.i, key.j, 0}] += p;
    r.normalize();
    return r;
}

LaurentPoly SingularFn::expand(const std::vector<std::string>& region, unsigned window) const {
    if (is_zero() || window == 0) return LaurentPoly{};
    if (region.empty()) throw std::domain_error("empty expansion region");
    const std::string& dom = region.front();
    auto rank = [&region](const std::string& v) -> int {
        for (size_t r = 0; r < region.size(); ++r)
            if (region[r] == v) return static_cast<int>(r);
        return -1;
    };

    LaurentPoly result = num_;
    for (const auto& [k, p] : den_) {
        const std::string xi = point_var(k.i), xj = point_var(k.j);
        const char* shv = mode_ == SingMode::Additive ? kAddShift : kMulShift;
        bool has_shift = mode_ == SingMode::Additive ? (k.shift != 0) : true;
        // the expansion direction must be decided by the dominant variable
        if (dom != xi && dom != xj && !(has_shift && dom == shv && mode_ == SingMode::Additive))
            throw std::domain_error("region leaves factor expansion ambiguous: " + xi + "," + xj);
        if (rank(xi) < 0 || rank(xj) < 0)
            throw std::domain_error("region must order all factor points");

        LaurentPoly expansion;
        if (mode_ == SingMode::Additive) {
            LaurentPoly shift_term =
                k.shift == 0 ? LaurentPoly{}
                             : Scalar(k.shift) * LaurentPoly::variable(kAddShift);
            if (dom == xi) {
                LaurentPoly small = LaurentPoly::variable(xj) + shift_term;
                for (unsigned m = 0; m < window; ++m)
                    expansion += Scalar(binomial(static_cast<unsigned long>(p) + m - 1, m)) *
                                 (laurent_pow(small, m) *
                                  LaurentPoly::variable(xi, -(p + static_cast<int>(m))));
            } else if (dom == xj) {
                LaurentPoly small = LaurentPoly::variable(xi) - shift_term;
                Scalar sign(p % 2 == 0 ? 1 : -1);
                for (unsigned m = 0; m < window; ++m)
                    expansion += sign * Scalar(binomial(static_cast<unsigned long>(p) + m - 1, m)) *
                                 (laurent_pow(small, m) *
                                  LaurentPoly::variable(xj, -(p + static_cast<int>(m))));
            } else {  // dominant t, shift != 0
                // 1/(x_i-x_j-st)^p = (-s)^{-p} / (t - (x_i-x_j)/s)^p
                Scalar pre(1);
                for (int l = 0; l < p; ++l) pre /= Scalar(-k.shift);
                LaurentPoly small = (Scalar(1) / Scalar(k.shift)) *
                                    (LaurentPoly::variable(xi) - LaurentPoly::variable(xj));
                for (unsigned m = 0; m < window; ++m)
                    expansion += pre * Scalar(binomial(static_cast<unsigned long>(p) + m - 1, m)) *
                                 (laurent_pow(small, m) *
                                  LaurentPoly::variable(kAddShift, -(p + static_cast<int>(m))));
            }
        } else {
            if (dom == xi) {
                // x_b^p / (x_a - q^s x_b)^p expanded in x_a
                LaurentPoly small = LaurentPoly::variable(kMulShift, static_cast<int>(k.shift)) *
                                    LaurentPoly::variable(xj);
                for (unsigned m = 0; m < window; ++m)
                    expansion += Scalar(binomial(static_cast<unsigned long>(p) + m - 1, m)) *
                                 (laurent_pow(small, m) *
                                  LaurentPoly::variable(xj, p) *
                                  LaurentPoly::variable(xi, -(p + static_cast<int>(m))));
            } else if (dom == xj) {
                // (x_a/x_b - q^s)^{-p} = (-q^s)^{-p} (1 - q^{-s} x_a/x_b)^{-p}
                Monomial pm;
                if (k.shift != 0) pm[kMulShift] = static_cast<int>(-k.shift) * p;
                LaurentPoly pre = LaurentPoly::term(Scalar(p % 2 == 0 ? 1 : -1), pm);
                LaurentPoly small = LaurentPoly::variable(kMulShift, static_cast<int>(-k.shift)) *
                                    LaurentPoly::variable(xi) * LaurentPoly::variable(xj, -1);
                LaurentPoly acc;
                for (unsigned m = 0; m < window; ++m)
                    acc += Scalar(binomial(static_cast<unsigned long>(p) + m - 1, m)) *
                           laurent_pow(small, m);
                expansion = pre * acc;
            } else {
                throw std::domain_error("multiplicative expansion needs a dominant point");
            }
        }
        result = result * expansion;
    }

    // truncate at subordinate total order < window
    LaurentPoly out;
    for (const auto& [m, c] : result.terms()) {
        long order = 0;
        for (const auto& [v, e] : m)
            if (v != dom) order += e;
        if (order < static_cast<long>(window)) out.add_term(m, c);
    }
    return out;
}

std::optional<std::map<int, Scalar>> SingularFn::as_difference_laurent(int i, int j) const {
    std::map<int, Scalar> out;
    if (is_zero()) return out;
    if (mode_ != SingMode::Additive) return std::nullopt;
    int pole = 0;
    for (const auto& [k, p] : den_) {
        if (k.i != i || k.j != j || k.shift != 0) return std::nullopt;
        pole += p;
    }
    const std::string xi = point_var(i), xj = point_var(j), u = "_u";
    if (num_.min_exponent(xi) < 0) return std::nullopt;
    LaurentPoly n = num_.substitute(xi, LaurentPoly::variable(u) + LaurentPoly::variable(xj));
    for (const auto& [m, c] : n.terms()) {
        int ue = 0;
        for (const auto& [v, e] : m) {
            if (v == u)
                ue = e;
            else
                return std::nullopt;  // genuine dependence beyond the difference
        }
        out[ue - pole] += c;
        if (vxa::is_zero(out[ue - pole])) out.erase(ue - pole);
    }
    return out;
}

std::string SingularFn::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << "(" << num_.str() << ")";
    if (!den_.empty()) {
        os << " / ";
        for (const auto& [k, p] : den_) {
            os << "(" << factor_laurent(mode_, k.i, k.j, k.shift).str() << ")";
            if (p != 1) os << "^" << p;
        }
    }
    return os.str();
}

bool cross_equal(const SingularFn& a, const SingularFn& b) {
    return a.numerator() * b.denominator_poly() == b.numerator() * a.denominator_poly();
}

}  // namespace vxa
