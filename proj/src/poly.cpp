#include "zetaforge/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace zetaforge {

QPoly QPoly::constant(const Rat& c) {
    if (c == 0) return QPoly();
    return QPoly(std::vector<Rat>{c});
}

QPoly QPoly::monomial(const Rat& c, std::size_t deg) {
    if (c == 0) return QPoly();
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat QPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-() const {
    std::vector<Rat> v = coeffs_;
    for (auto& c : v) c = -c;
    return QPoly(std::move(v));
}

QPoly QPoly::scaled(const Rat& c) const {
    if (c == 0) return QPoly();
    std::vector<Rat> v = coeffs_;
    for (auto& x : v) x *= c;
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * o.coeffs_[j];
    return QPoly(std::move(v));
}

void QPoly::divmod(const QPoly& num, const QPoly& den, QPoly& quot, QPoly& rem) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> r = num.coeffs_;
    long dd = den.degree();
    Rat lead = den.leading();
    std::vector<Rat> q(num.degree() >= dd ? num.degree() - dd + 1 : 0, Rat(0));
    for (long i = num.degree(); i >= dd; --i) {
        Rat c = r[i] / lead;
        if (c == 0) continue;
        q[i - dd] = c;
        for (long j = 0; j <= dd; ++j) r[i - dd + j] -= c * den.coeffs_[j];
    }
    quot = QPoly(std::move(q));
    rem = QPoly(std::move(r));
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return x.scaled(Rat(1) / x.leading());
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        Rat a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace zetaforge
