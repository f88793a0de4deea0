#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sprod/exactnum.hpp"

namespace sprod {

/*
 * Seeded source of test rationals p/q with p in [-20, 20] and q in {1, 2, 3}.
 * fresh() rejects values whose difference with anything already drawn (in
 * this pool) is 0 or +-1, so weights f, g and the DWPF entries stay finite.
 */
class RandomRationals {
public:
    explicit RandomRationals(std::uint64_t seed) : rng_(seed) {}

    Rat any();
    Rat fresh();
    std::vector<Rat> fresh(int n);
    void reset_pool() { pool_.clear(); }
    void avoid(const Rat& x) { pool_.push_back(x); }
    // Uniform integer in [lo, hi].
    int integer(int lo, int hi);

private:
    std::mt19937_64 rng_;
    std::vector<Rat> pool_;
};

} // namespace sprod
