#pragma once

#include <initializer_list>
#include <random>
#include <vector>
#include "zetaforge/rat.hpp"
#include "zetaforge/series.hpp"

namespace ztest {

using zetaforge::Int;
using zetaforge::Rat;

inline zetaforge::TruncSeries series_of(std::initializer_list<long> coeffs) {
    std::vector<Rat> v;
    for (long c : coeffs) v.emplace_back(c);
    return zetaforge::TruncSeries(std::move(v));
}

inline std::vector<Rat> rats_of(std::initializer_list<long> coeffs) {
    std::vector<Rat> v;
    for (long c : coeffs) v.emplace_back(c);
    return v;
}

// small random rationals with a fixed seed; tests stay deterministic
class RatGen {
public:
    explicit RatGen(unsigned seed) : rng_(seed) {}
    Rat next(long num_range = 9, long den_range = 4) {
        std::uniform_int_distribution<long> num(-num_range, num_range);
        std::uniform_int_distribution<long> den(1, den_range);
        return zetaforge::make_rat(num(rng_), den(rng_));
    }
    long next_int(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(rng_);
    }

private:
    std::mt19937 rng_;
};

} // namespace ztest
