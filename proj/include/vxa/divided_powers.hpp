#pragma once

// The divided-power bialgebra spanned by D^(i) ("D^i/i!") with
// D^(i) D^(j) = binom(i+j,i) D^(i+j) and the shuffle coproduct.

#include "vxa/laurent.hpp"

#include <map>
#include <vector>

namespace vxa {

class DPElement {
public:
    DPElement() = default;
    static DPElement unit() { return generator(0); }
    static DPElement generator(unsigned i);

    const std::map<unsigned, Scalar>& terms() const { return terms_; }
    void add_term(unsigned i, const Scalar& c);
    bool is_zero() const { return terms_.empty(); }

    friend DPElement operator+(const DPElement& a, const DPElement& b);
    friend DPElement operator*(const Scalar& c, const DPElement& a);
    friend bool operator==(const DPElement&, const DPElement&) = default;

    Scalar counit() const;      // coefficient of D^(0)
    DPElement antipode() const; // S(D^(i)) = (-1)^i D^(i)

private:
    std::map<unsigned, Scalar> terms_;
};

/// Element of the k-fold tensor power; arity is a value-level attribute.
class TensorDP {
public:
    explicit TensorDP(unsigned arity = 1) : arity_(arity) {}

    unsigned arity() const { return arity_; }
    const std::map<std::vector<unsigned>, Scalar>& terms() const { return terms_; }
    void add_term(const std::vector<unsigned>& idx, const Scalar& c);
    bool is_zero() const { return terms_.empty(); }

    friend TensorDP operator+(const TensorDP& a, const TensorDP& b);
    friend bool operator==(const TensorDP&, const TensorDP&) = default;

    /// Component-wise product (the algebra structure on H^{otimes k}).
    friend TensorDP operator*(const TensorDP& a, const TensorDP& b);

    TensorDP swap_factors(unsigned a, unsigned b) const;

private:
    unsigned arity_;
    std::map<std::vector<unsigned>, Scalar> terms_;
};

DPElement dp_mul(const DPElement& a, const DPElement& b);

/// Delta(D^(i)) = sum_j D^(j) ⊗ D^(i-j).
TensorDP dp_coproduct(unsigned i);

/// Delta^{k-1}(a); k = 1 returns a as an arity-1 tensor.
TensorDP iterated_coproduct(const DPElement& a, unsigned k);

/// D^(i)(x^m) = C(m,i) x^{m-i} on the named variable, extended linearly.
LaurentPoly dp_act_laurent(const DPElement& a, const LaurentPoly& f, const std::string& var);

}  // namespace vxa
