#include "mbmod/gen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "mbmod/connect.hpp"
#include "mbmod/error.hpp"

namespace mbmod {

std::uint64_t SplitMix64::below(std::uint64_t n) {
    // Reject the partial top interval so every residue is equally likely.
    std::uint64_t cutoff = (0 - n) % n; // 2^64 mod n
    for (;;) {
        std::uint64_t r = next();
        if (r >= cutoff) return r % n;
    }
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {

Scalar draw_coefficient(SplitMix64& rng, const FieldSpec& fs) {
    if (fs.kind == FieldSpec::Kind::prime)
        // Residue route: exact for any 64-bit modulus, no signed narrowing.
        return Scalar::parse(std::to_string(1 + rng.below(fs.modulus - 1)), fs);
    // Nonzero numerator in [-9, 9], denominator in [1, 9].
    std::uint64_t u = rng.below(18);
    long long num = u < 9 ? static_cast<long long>(u) - 9 : static_cast<long long>(u) - 8;
    long long den = static_cast<long long>(1 + rng.below(9));
    return Scalar::from_fraction(num, den);
}

// One full draw pass for a fixed attempt seed.
ActionTable generate_attempt(const GenSpec& spec, std::uint64_t attempt_seed) {
    SplitMix64 rng(attempt_seed);

    // Pool p = [bound[p], bound[p+1]); contiguous, nonempty for c <= v.
    std::size_t pools = spec.target_components.value_or(1);
    std::vector<std::size_t> bound(pools + 1);
    for (std::size_t p = 0; p <= pools; ++p) bound[p] = p * spec.v_size / pools;

    std::vector<Entry> entries;
    entries.reserve(static_cast<std::size_t>(
                        std::ceil(spec.density * static_cast<double>(spec.v_size) *
                                  static_cast<double>(spec.w_size) * 1.02)) +
                    1024);
    std::size_t pool = 0;
    for (std::size_t i = 0; i < spec.v_size; ++i) {
        while (bound[pool + 1] <= i) ++pool;
        std::size_t lo = bound[pool], hi = bound[pool + 1];
        for (std::size_t j = 0; j < spec.w_size; ++j) {
            if (!(rng.unit() < spec.density)) continue;
            Index k = static_cast<Index>(lo + rng.below(hi - lo));
            Scalar c = draw_coefficient(rng, spec.field);
            entries.push_back({static_cast<Index>(i), static_cast<Index>(j), k, std::move(c)});
        }
    }
    return build_table(std::move(entries), spec.v_size, spec.w_size, spec.field);
}

} // namespace

ActionTable generate(const GenSpec& spec) {
    if (!(spec.density >= 0.0 && spec.density <= 1.0))
        throw std::invalid_argument("density must lie in [0, 1]");
    if (spec.target_components &&
        (*spec.target_components == 0 || *spec.target_components > spec.v_size))
        throw std::invalid_argument("target_components must lie in [1, v_size]");

    constexpr int max_attempts = 64;
    for (int a = 0; a < max_attempts; ++a) {
        // Attempt a perturbs the seed by a golden-ratio multiple; attempt 0
        // is the seed itself, so the common no-retry path is the plain seed.
        ActionTable t =
            generate_attempt(spec, spec.seed ^ (static_cast<std::uint64_t>(a) * 0x9E3779B97F4A7C15ull));
        if (spec.target_components && components(t).size() != *spec.target_components)
            continue;
        if (spec.star_multiplicative) return symmetrize(t);
        return t;
    }
    fail(errc::unsatisfiable, "component target " + std::to_string(*spec.target_components) +
                                  " not hit within " + std::to_string(max_attempts) + " attempts");
}

ActionTable symmetrize(const ActionTable& t) {
    // Forward pairs present so far; grown as columns are added so one
    // demand per missing (a, b) pair fires even when several entries
    // make the same demand.
    std::vector<std::uint64_t> pairs;
    pairs.reserve(t.entries().size());
    for (const Entry& e : t.entries())
        pairs.push_back((static_cast<std::uint64_t>(e.i) << 32) | e.k);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    std::unordered_set<std::uint64_t> added;

    std::vector<Entry> entries(t.entries().begin(), t.entries().end());
    std::size_t w = t.w_size();
    for (const Entry& e : t.entries()) {
        if (e.i == e.k) continue;
        std::uint64_t rev = (static_cast<std::uint64_t>(e.k) << 32) | e.i;
        if (std::binary_search(pairs.begin(), pairs.end(), rev) || added.contains(rev)) continue;
        added.insert(rev);
        entries.push_back({e.k, static_cast<Index>(w++), e.i, Scalar::one(t.field())});
    }
    if (w == t.w_size()) return t;

    auto w_labels = t.w_labels();
    if (w_labels) {
        std::size_t serial = 0;
        while (w_labels->size() < w) {
            std::string name = "sym" + std::to_string(serial++);
            if (!t.w_id_of_label(name)) w_labels->push_back(name);
        }
    }
    return build_table(std::move(entries), t.v_size(), w, t.field(), t.v_labels(),
                       std::move(w_labels));
}

} // namespace mbmod
