#pragma once

#include <stdexcept>
#include <string>
#include "zetaforge/rat.hpp"

namespace zetaforge {

// Residue in Z/p^k, the coefficient rings of the level-k solution counts.
class ZmodElem {
public:
    ZmodElem(long p, long k, const Int& value) : p_(p), k_(k) {
        if (p < 2 || k < 1) throw std::invalid_argument("ZmodElem: need p >= 2, k >= 1");
        modulus_ = int_pow(Int(p), static_cast<unsigned long>(k));
        value_ = value % modulus_;
        if (value_ < 0) value_ += modulus_;
    }

    long p() const { return p_; }
    long k() const { return k_; }
    const Int& modulus() const { return modulus_; }
    const Int& value() const { return value_; }

    ZmodElem operator+(const ZmodElem& o) const {
        require_same_ring(o);
        return ZmodElem(p_, k_, value_ + o.value_);
    }
    ZmodElem operator-(const ZmodElem& o) const {
        require_same_ring(o);
        return ZmodElem(p_, k_, value_ - o.value_);
    }
    ZmodElem operator*(const ZmodElem& o) const {
        require_same_ring(o);
        return ZmodElem(p_, k_, value_ * o.value_);
    }
    bool operator==(const ZmodElem& o) const {
        return p_ == o.p_ && k_ == o.k_ && value_ == o.value_;
    }
    bool operator!=(const ZmodElem& o) const { return !(*this == o); }
    bool is_zero() const { return value_ == 0; }

    std::string to_string() const { return value_.get_str(); }

private:
    void require_same_ring(const ZmodElem& o) const {
        if (p_ != o.p_ || k_ != o.k_)
            throw std::invalid_argument("ZmodElem: operands from different rings");
    }
    long p_;
    long k_;
    Int modulus_;
    Int value_;
};

} // namespace zetaforge
