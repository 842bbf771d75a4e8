#include "zetaforge/series.hpp"

#include <sstream>
#include <stdexcept>

namespace zetaforge {

TruncSeries::TruncSeries(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncSeries: empty coefficient list");
}

TruncSeries TruncSeries::zero(std::size_t order) {
    return TruncSeries(std::vector<Rat>(order + 1, Rat(0)));
}

TruncSeries TruncSeries::one(std::size_t order) {
    TruncSeries s = zero(order);
    s.coeffs_[0] = 1;
    return s;
}

void TruncSeries::require_same_order(const TruncSeries& o) const {
    if (order() != o.order())
        throw std::invalid_argument("TruncSeries: mismatched truncation orders");
}

TruncSeries TruncSeries::add(const TruncSeries& o) const {
    require_same_order(o);
    std::vector<Rat> v(coeffs_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.coeffs_[i];
    return TruncSeries(std::move(v));
}

TruncSeries TruncSeries::sub(const TruncSeries& o) const {
    require_same_order(o);
    std::vector<Rat> v(coeffs_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.coeffs_[i];
    return TruncSeries(std::move(v));
}

TruncSeries TruncSeries::mul(const TruncSeries& o) const {
    require_same_order(o);
    std::size_t n = coeffs_.size();
    std::vector<Rat> v(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return TruncSeries(std::move(v));
}

TruncSeries TruncSeries::invert() const {
    if (coeffs_[0] == 0)
        throw std::domain_error("TruncSeries::invert: zero constant term");
    std::size_t n = coeffs_.size();
    std::vector<Rat> v(n, Rat(0));
    Rat inv0 = Rat(1) / coeffs_[0];
    v[0] = inv0;
    for (std::size_t i = 1; i < n; ++i) {
        Rat acc(0);
        for (std::size_t k = 1; k <= i; ++k) acc += coeffs_[k] * v[i - k];
        v[i] = -inv0 * acc;
    }
    return TruncSeries(std::move(v));
}

TruncSeries TruncSeries::exp() const {
    if (coeffs_[0] != 0)
        throw std::domain_error("TruncSeries::exp: nonzero constant term");
    std::size_t n = coeffs_.size();
    std::vector<Rat> e(n, Rat(0));
    e[0] = 1;
    // n*e_n = sum_{k=1..n} k*s_k*e_{n-k}
    for (std::size_t i = 1; i < n; ++i) {
        Rat acc(0);
        for (std::size_t k = 1; k <= i; ++k)
            acc += Rat(static_cast<long>(k)) * coeffs_[k] * e[i - k];
        e[i] = acc / Rat(static_cast<long>(i));
    }
    return TruncSeries(std::move(e));
}

TruncSeries TruncSeries::log() const {
    if (coeffs_[0] != 1)
        throw std::domain_error("TruncSeries::log: constant term must be 1");
    std::size_t n = coeffs_.size();
    std::vector<Rat> l(n, Rat(0));
    // n*s_n = n*l_n + sum_{k=1..n-1} k*l_k*s_{n-k}
    for (std::size_t i = 1; i < n; ++i) {
        Rat acc(0);
        for (std::size_t k = 1; k < i; ++k)
            acc += Rat(static_cast<long>(k)) * l[k] * coeffs_[i - k];
        l[i] = coeffs_[i] - acc / Rat(static_cast<long>(i));
    }
    return TruncSeries(std::move(l));
}

std::string TruncSeries::to_tsv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out << i << "\t" << coeffs_[i].get_num().get_str() << "/"
            << coeffs_[i].get_den().get_str() << "\n";
    return out.str();
}

} // namespace zetaforge
