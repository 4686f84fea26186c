#include "vxa/divided_powers.hpp"

#include <functional>
#include <stdexcept>

namespace vxa {

DPElement DPElement::generator(unsigned i) {
    DPElement e;
    e.terms_[i] = Scalar(1);
    return e;
}

void DPElement::add_term(unsigned i, const Scalar& c) {
    if (is_zero(c)) return;
    auto it = terms_.find(i);
    if (it == terms_.end()) {
        terms_[i] = c;
    } else {
        it->second += c;
        if (vxa::is_zero(it->second)) terms_.erase(it);
    }
}

DPElement operator+(const DPElement& a, const DPElement& b) {
    DPElement r = a;
    for (const auto& [i, c] : b.terms_) r.add_term(i, c);
    return r;
}

DPElement operator*(const Scalar& c, const DPElement& a) {
    DPElement r;
    for (const auto& [i, v] : a.terms()) r.add_term(i, c * v);
    return r;
}

Scalar DPElement::counit() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Scalar(0) : it->second;
}

DPElement DPElement::antipode() const {
    DPElement r;
    for (const auto& [i, c] : terms_) r.add_term(i, i % 2 == 0 ? c : -c);
    return r;
}

void TensorDP::add_term(const std::vector<unsigned>& idx, const Scalar& c) {
    if (is_zero(c)) return;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_[idx] = c;
    } else {
        it->second += c;
        if (vxa::is_zero(it->second)) terms_.erase(it);
    }
}

TensorDP operator+(const TensorDP& a, const TensorDP& b) {
    if (a.arity_ != b.arity_) throw std::domain_error("tensor arity mismatch");
    TensorDP r = a;
    for (const auto& [idx, c] : b.terms_) r.add_term(idx, c);
    return r;
}

TensorDP operator*(const TensorDP& a, const TensorDP& b) {
    if (a.arity_ != b.arity_) throw std::domain_error("tensor arity mismatch");
    TensorDP r(a.arity_);
    for (const auto& [ia, ca] : a.terms_) {
        for (const auto& [ib, cb] : b.terms_) {
            std::vector<unsigned> idx(a.arity_);
            Scalar c = ca * cb;
            for (unsigned s = 0; s < a.arity_; ++s) {
                idx[s] = ia[s] + ib[s];
                c *= Scalar(binomial(ia[s] + ib[s], ia[s]));
            }
            r.add_term(idx, c);
        }
    }
    return r;
}

TensorDP TensorDP::swap_factors(unsigned a, unsigned b) const {
    TensorDP r(arity_);
    for (const auto& [idx, c] : terms_) {
        std::vector<unsigned> ni = idx;
        std::swap(ni[a], ni[b]);
        r.add_term(ni, c);
    }
    return r;
}

DPElement dp_mul(const DPElement& a, const DPElement& b) {
    DPElement r;
    for (const auto& [i, ca] : a.terms())
        for (const auto& [j, cb] : b.terms())
            r.add_term(i + j, ca * cb * Scalar(binomial(i + j, i)));
    return r;
}

TensorDP dp_coproduct(unsigned i) {
    TensorDP t(2);
    for (unsigned j = 0; j <= i; ++j) t.add_term({j, i - j}, Scalar(1));
    return t;
}

namespace {
void compositions(unsigned total, unsigned parts, std::vector<unsigned>& acc,
                  const std::function<void(const std::vector<unsigned>&)>& emit) {
    if (parts == 1) {
        acc.push_back(total);
        emit(acc);
        acc.pop_back();
        return;
    }
    for (unsigned first = 0; first <= total; ++first) {
        acc.push_back(first);
        compositions(total - first, parts - 1, acc, emit);
        acc.pop_back();
    }
}
}  // namespace

TensorDP iterated_coproduct(const DPElement& a, unsigned k) {
    if (k == 0) throw std::domain_error("arity must be positive");
    TensorDP r(k);
    for (const auto& [i, c] : a.terms()) {
        if (k == 1) {
            r.add_term({i}, c);
            continue;
        }
        std::vector<unsigned> acc;
        compositions(i, k, acc, [&](const std::vector<unsigned>& idx) { r.add_term(idx, c); });
    }
    return r;
}

LaurentPoly dp_act_laurent(const DPElement& a, const LaurentPoly& f, const std::string& var) {
    LaurentPoly r;
    for (const auto& [i, c] : a.terms()) {
        for (const auto& [m, fc] : f.terms()) {
            auto it = m.find(var);
            long e = it == m.end() ? 0 : it->second;
            Integer bin = gen_binomial(e, i);
            if (bin == 0) continue;
            Monomial nm = m;
            long ne = e - static_cast<long>(i);
            if (ne == 0)
                nm.erase(var);
            else
                nm[var] = static_cast<int>(ne);
            r.add_term(nm, c * fc * Scalar(bin));
        }
    }
    return r;
}

}  // namespace vxa
