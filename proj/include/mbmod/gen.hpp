#pragma once

#include <cstdint>
#include <optional>

#include "mbmod/table.hpp"

namespace mbmod {

/// SplitMix64 (Steele/Lea/Flood, published constants).  Chosen over the
/// standard-library engines because its output is pinned bit-for-bit by
/// the algorithm itself, so generated instances reproduce across
/// standard libraries and platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Unbiased uniform draw in [0, n) by rejection.  n >= 1.
    std::uint64_t below(std::uint64_t n);

    /// Uniform in [0, 1) with 53 random bits.
    double unit();

private:
    std::uint64_t state_;
};

struct GenSpec {
    std::size_t v_size = 0;
    std::size_t w_size = 0;
    double density = 0.0; // probability a pair (i, j) acts nonzero
    std::uint64_t seed = 0;
    FieldSpec field = FieldSpec::rationals();
    std::optional<std::size_t> target_components; // exact block count
    bool star_multiplicative = false;
};

/// Deterministic instance construction: draws the two defining mappings
/// (target index, coefficient) per selected pair.  Pure function of the
/// spec -- equal specs give structurally identical tables.
///
/// With target_components set, I is pre-split into that many contiguous
/// pools and targets stay inside the source's pool, so the block count
/// never falls below the target; seeds are retried (bounded, perturbed
/// deterministically) until the count is exact, else Unsatisfiable.
/// With star_multiplicative, symmetrize runs on the result.
ActionTable generate(const GenSpec& spec);

/// Adds, for every entry (b, j, a) with a != b that no entry (a, *, b)
/// answers, a fresh W column and the entry (a, j_new, b, 1).  One pass
/// suffices: each added entry's own barred requirement is met by the
/// entry that demanded it.  Component structure is unchanged (each new
/// edge parallels an existing support edge); a table that already
/// satisfies check_star_multiplicative comes back equal.
ActionTable symmetrize(const ActionTable& t);

} // namespace mbmod
