#include "zetaforge/ratfn.hpp"

#include <sstream>
#include <stdexcept>

namespace zetaforge {

RatFn::RatFn(const QPoly& numer, const QPoly& denom) {
    if (denom.is_zero()) throw std::invalid_argument("RatFn: zero denominator");
    if (numer.is_zero()) {
        numer_ = QPoly();
        denom_ = QPoly::constant(Rat(1));
        return;
    }
    QPoly g = QPoly::gcd(numer, denom);
    QPoly q1, q2, r;
    QPoly::divmod(numer, g, q1, r);
    QPoly::divmod(denom, g, q2, r);
    Rat c0 = q2.coeff(0);
    if (c0 == 0)
        throw std::domain_error("RatFn: pole at T = 0 is out of scope");
    numer_ = q1.scaled(Rat(1) / c0);
    denom_ = q2.scaled(Rat(1) / c0);
}

TruncSeries RatFn::expand(std::size_t order) const {
    std::vector<Rat> e(order + 1, Rat(0));
    // denom(0) = 1, so e_n = numer_n - sum_{k=1..n} denom_k * e_{n-k}
    for (std::size_t n = 0; n <= order; ++n) {
        Rat acc = numer_.coeff(n);
        for (std::size_t k = 1; k <= n && static_cast<long>(k) <= denom_.degree(); ++k)
            acc -= denom_.coeff(k) * e[n - k];
        e[n] = acc;
    }
    return TruncSeries(std::move(e));
}

std::string RatFn::to_string() const {
    // clear to integer coefficients
    Int lcm(1);
    for (const auto& c : numer_.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& c : denom_.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    QPoly n = numer_.scaled(Rat(lcm));
    QPoly d = denom_.scaled(Rat(lcm));
    std::ostringstream out;
    out << "(" << n.to_string() << ") / (" << d.to_string() << ")";
    return out.str();
}

RatFn ratfn_substitute_inverse(const RatFn& f, long q, long genus) {
    if (q < 2) throw std::invalid_argument("ratfn_substitute_inverse: q must be >= 2");
    const QPoly& N = f.numer();
    const QPoly& D = f.denom();
    if (N.is_zero()) return RatFn();
    long k = std::max(N.degree(), D.degree());
    // With inv(P)(T) := (qT)^k P(1/(qT)), a polynomial again,
    // f(1/(qT)) = inv(N)(T) / inv(D)(T).
    auto substituted = [&](const QPoly& P) {
        std::vector<Rat> v(static_cast<std::size_t>(k) + 1, Rat(0));
        for (long j = 0; j <= k; ++j) {
            long i = k - j;
            if (i <= P.degree())
                v[static_cast<std::size_t>(j)] =
                    P.coeff(static_cast<std::size_t>(i)) * rat_pow(Rat(q), j);
        }
        return QPoly(std::move(v));
    };
    QPoly Ni = substituted(N);
    QPoly Di = substituted(D);
    long e = 2 - 2 * genus;
    QPoly t_pos = QPoly::monomial(Rat(1), static_cast<std::size_t>(e > 0 ? e : 0));
    QPoly t_neg = QPoly::monomial(Rat(1), static_cast<std::size_t>(e < 0 ? -e : 0));
    Rat scale = rat_pow(Rat(q), 1 - genus);
    // q^{1-g} T^e N/D - Ni/Di over the common denominator T^{max(0,-e)} D Di
    QPoly top = (N * Di * t_pos).scaled(scale) - Ni * D * t_neg;
    QPoly bottom = D * Di * t_neg;
    if (top.is_zero()) return RatFn();
    // shared factors, including powers of T, cancel in the constructor
    return RatFn(top, bottom);
}

} // namespace zetaforge
