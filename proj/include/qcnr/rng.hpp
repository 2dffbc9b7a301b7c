#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <random>

namespace qcnr {

// Seeded deterministic generator. All randomized operations in the library
// draw from one of these, so a fixed seed reproduces keys and matrices
// bit-exactly.
class rng {
  public:
    explicit rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Unbiased integer in [0, bound) via masked rejection.
    std::uint64_t below(std::uint64_t bound) {
        assert(bound > 0);
        if (bound == 1)
            return 0;
        const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
        for (;;) {
            const std::uint64_t v = eng_() & mask;
            if (v < bound)
                return v;
        }
    }

  private:
    std::mt19937_64 eng_;
};

} // namespace qcnr
