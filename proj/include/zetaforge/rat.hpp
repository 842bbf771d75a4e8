#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace zetaforge {

// Exact rational arithmetic is provided by GMP. Rat values are kept in
// canonical form (gcd(|num|, den) = 1, den >= 1); gmp arithmetic preserves
// canonical form, so only raw num/den construction needs an explicit
// canonicalize step.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den = 1) {
    return make_rat(Int(num), Int(den));
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// q^a for a of either sign, as an exact rational.
inline Rat rat_pow(const Rat& base, long e) {
    if (e >= 0) {
        Rat r;
        mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        r.canonicalize();
        return r;
    }
    if (base == 0) throw std::domain_error("rat_pow: 0 to a negative power");
    Rat inv = Rat(base.get_den(), base.get_num());
    inv.canonicalize();
    return rat_pow(inv, -e);
}

inline std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

} // namespace zetaforge
