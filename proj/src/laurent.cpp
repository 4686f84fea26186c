#include "vxa/laurent.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace vxa {

LaurentPoly::LaurentPoly(const Scalar& c) {
    if (!vxa::is_zero(c)) terms_[Monomial{}] = c;
}

LaurentPoly LaurentPoly::variable(const std::string& name, int exp) {
    LaurentPoly p;
    Monomial m;
    if (exp != 0) m[name] = exp;
    p.terms_[m] = Scalar(1);
    return p;
}

LaurentPoly LaurentPoly::term(const Scalar& c, const Monomial& m) {
    LaurentPoly p;
    p.add_term(m, c);
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar LaurentPoly::constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Scalar(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Scalar& c) {
    if (vxa::is_zero(c)) return;
    Monomial key;
    for (const auto& [v, e] : m)
        if (e != 0) key[v] = e;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_[key] = c;
    } else {
        it->second += c;
        if (vxa::is_zero(it->second)) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (const auto& [v, e] : mb) {
                int ne = (m.count(v) ? m[v] : 0) + e;
                if (ne == 0)
                    m.erase(v);
                else
                    m[v] = ne;
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

LaurentPoly operator*(const Scalar& c, const LaurentPoly& a) {
    LaurentPoly r;
    if (is_zero(c)) return r;
    for (const auto& [m, v] : a.terms()) r.add_term(m, c * v);
    return r;
}

std::vector<std::string> LaurentPoly::variables() const {
    std::set<std::string> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) vs.insert(v);
    return {vs.begin(), vs.end()};
}

bool LaurentPoly::depends_on(const std::string& var) const {
    for (const auto& [m, c] : terms_)
        if (m.count(var)) return true;
    return false;
}

int LaurentPoly::min_exponent(const std::string& var) const {
    bool seen = false;
    int r = 0;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        int e = it == m.end() ? 0 : it->second;
        if (!seen || e < r) r = e;
        seen = true;
    }
    return r;
}

int LaurentPoly::max_exponent(const std::string& var) const {
    bool seen = false;
    int r = 0;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        int e = it == m.end() ? 0 : it->second;
        if (!seen || e > r) r = e;
        seen = true;
    }
    return r;
}

LaurentPoly LaurentPoly::coefficient_of(const std::string& var, int e) const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        int me = it == m.end() ? 0 : it->second;
        if (me != e) continue;
        Monomial rest = m;
        rest.erase(var);
        r.add_term(rest, c);
    }
    return r;
}

LaurentPoly LaurentPoly::derivative(const std::string& var) const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        if (it == m.end()) continue;
        int e = it->second;
        Monomial nm = m;
        if (e == 1)
            nm.erase(var);
        else
            nm[var] = e - 1;
        r.add_term(nm, c * Scalar(e));
    }
    return r;
}

LaurentPoly LaurentPoly::substitute(const std::string& var, const LaurentPoly& value) const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        int e = it == m.end() ? 0 : it->second;
        if (e < 0) throw std::domain_error("substitute: negative exponent of " + var);
        Monomial rest = m;
        rest.erase(var);
        r += LaurentPoly::term(c, rest) * laurent_pow(value, static_cast<unsigned>(e));
    }
    return r;
}

LaurentPoly LaurentPoly::rename(const std::map<std::string, std::string>& names) const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) {
        Monomial nm;
        for (const auto& [v, e] : m) {
            auto it = names.find(v);
            const std::string& nv = it == names.end() ? v : it->second;
            nm[nv] += e;
        }
        r.add_term(nm, c);
    }
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c);
        for (const auto& [v, e] : m) {
            os << "*" << v;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

LaurentPoly residue(const LaurentPoly& f, const std::string& var) {
    return f.coefficient_of(var, -1);
}

LaurentPoly laurent_pow(const LaurentPoly& a, unsigned n) {
    LaurentPoly r = laurent_one();
    for (unsigned i = 0; i < n; ++i) r = r * a;
    return r;
}

}  // namespace vxa
