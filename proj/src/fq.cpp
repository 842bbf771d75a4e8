#include "zetaforge/fq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zetaforge {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

void trim_mod(std::vector<long>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of num by monic den, coefficients mod p.
std::vector<long> polymod_rem(std::vector<long> num, const std::vector<long>& den, long p) {
    long dd = static_cast<long>(den.size()) - 1;
    for (long i = static_cast<long>(num.size()) - 1; i >= dd; --i) {
        long c = num[i] % p;
        if (c == 0) continue;
        for (long j = 0; j <= dd; ++j) {
            long& t = num[i - dd + j];
            t = (t - c * den[j]) % p;
            if (t < 0) t += p;
        }
    }
    num.resize(static_cast<std::size_t>(dd));
    for (auto& c : num) c = ((c % p) + p) % p;
    trim_mod(num);
    return num;
}

} // namespace

bool is_irreducible_mod_p(const std::vector<long>& poly, long p) {
    long deg = static_cast<long>(poly.size()) - 1;
    if (deg < 1) return false;
    // A reducible polynomial of degree d has a monic factor of degree <= d/2.
    std::vector<long> divisor;
    for (long d = 1; 2 * d <= deg; ++d) {
        divisor.assign(static_cast<std::size_t>(d) + 1, 0);
        divisor[static_cast<std::size_t>(d)] = 1;
        bool more = true;
        while (more) {
            if (polymod_rem(poly, divisor, p).empty()) return false;
            more = false;
            for (long i = 0; i < d; ++i) {
                if (++divisor[static_cast<std::size_t>(i)] < p) { more = true; break; }
                divisor[static_cast<std::size_t>(i)] = 0;
            }
        }
    }
    return true;
}

FieldPtr field_make(long p, long m) {
    if (!is_prime(p)) throw std::invalid_argument("field_make: p is not prime");
    if (m < 1) throw std::invalid_argument("field_make: extension degree must be >= 1");
    std::vector<long> low(static_cast<std::size_t>(m), 0); // non-leading coefficients
    for (;;) {
        std::vector<long> candidate = low;
        candidate.push_back(1);
        if (is_irreducible_mod_p(candidate, p)) {
            auto fd = std::make_shared<FieldDesc>();
            fd->p = p;
            fd->m = m;
            fd->modulus = std::move(candidate);
            return fd;
        }
        // Next candidate in lexicographic order, low-degree coefficient most
        // significant: advance the highest-degree entry fastest.
        long i = m - 1;
        while (i >= 0 && ++low[static_cast<std::size_t>(i)] == p) {
            low[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0)
            throw std::logic_error("field_make: no irreducible polynomial found");
    }
}

FqElem::FqElem(FieldPtr field, std::vector<long> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw std::invalid_argument("FqElem: null field");
    if (coeffs_.size() != static_cast<std::size_t>(field_->m))
        throw std::invalid_argument("FqElem: coefficient count does not match degree");
    for (auto& c : coeffs_) c = ((c % field_->p) + field_->p) % field_->p;
}

FqElem FqElem::zero(const FieldPtr& field) {
    return FqElem(field, std::vector<long>(static_cast<std::size_t>(field->m), 0));
}

FqElem FqElem::one(const FieldPtr& field) {
    std::vector<long> v(static_cast<std::size_t>(field->m), 0);
    v[0] = 1 % field->p;
    return FqElem(field, v);
}

FqElem FqElem::from_int(const FieldPtr& field, const Int& n) {
    Int r = n % field->p;
    if (r < 0) r += field->p;
    std::vector<long> v(static_cast<std::size_t>(field->m), 0);
    v[0] = r.get_si();
    return FqElem(field, v);
}

FqElem FqElem::from_index(const FieldPtr& field, unsigned long idx) {
    std::vector<long> v(static_cast<std::size_t>(field->m), 0);
    for (long i = 0; i < field->m; ++i) {
        v[static_cast<std::size_t>(i)] = static_cast<long>(idx % static_cast<unsigned long>(field->p));
        idx /= static_cast<unsigned long>(field->p);
    }
    return FqElem(field, v);
}

unsigned long FqElem::index() const {
    unsigned long idx = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        idx = idx * static_cast<unsigned long>(field_->p) + static_cast<unsigned long>(*it);
    return idx;
}

bool FqElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](long c) { return c == 0; });
}

void FqElem::require_same_field(const FqElem& o) const {
    if (!(*field_ == *o.field_))
        throw std::invalid_argument("FqElem: operands from different fields");
}

FqElem FqElem::operator+(const FqElem& o) const {
    require_same_field(o);
    std::vector<long> v(coeffs_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] + o.coeffs_[i]) % field_->p;
    return FqElem(field_, std::move(v));
}

FqElem FqElem::operator-(const FqElem& o) const {
    require_same_field(o);
    std::vector<long> v(coeffs_);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = ((v[i] - o.coeffs_[i]) % field_->p + field_->p) % field_->p;
    return FqElem(field_, std::move(v));
}

FqElem FqElem::operator-() const {
    std::vector<long> v(coeffs_);
    for (auto& c : v) c = (field_->p - c) % field_->p;
    return FqElem(field_, std::move(v));
}

FqElem FqElem::operator*(const FqElem& o) const {
    require_same_field(o);
    long p = field_->p, m = field_->m;
    std::vector<long> prod(static_cast<std::size_t>(2 * m - 1), 0);
    for (long i = 0; i < m; ++i) {
        if (coeffs_[static_cast<std::size_t>(i)] == 0) continue;
        for (long j = 0; j < m; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                (prod[static_cast<std::size_t>(i + j)] +
                 coeffs_[static_cast<std::size_t>(i)] * o.coeffs_[static_cast<std::size_t>(j)]) % p;
    }
    // reduce by the monic modulus
    for (long i = 2 * m - 2; i >= m; --i) {
        long c = prod[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(i)] = 0;
        for (long j = 0; j < m; ++j) {
            long& t = prod[static_cast<std::size_t>(i - m + j)];
            t = ((t - c * field_->modulus[static_cast<std::size_t>(j)]) % p + p) % p;
        }
    }
    prod.resize(static_cast<std::size_t>(m));
    return FqElem(field_, std::move(prod));
}

FqElem FqElem::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    FqElem base = *this;
    FqElem acc = one(field_);
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

FqElem FqElem::inverse() const {
    if (is_zero()) throw std::domain_error("FqElem: inverse of zero");
    return pow(field_->q() - 2);
}

bool FqElem::operator==(const FqElem& o) const {
    return *field_ == *o.field_ && coeffs_ == o.coeffs_;
}

std::string FqElem::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ",";
        out << coeffs_[i];
    }
    out << "]";
    return out.str();
}

} // namespace zetaforge
