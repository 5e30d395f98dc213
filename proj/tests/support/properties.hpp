#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

/*
 * Randomized checks shared by the unit tests and the acceptance binary.
 * Each returns how many cases ran, how many failed and the first failure.
 */
namespace wittspan::testing {

struct PropertyReport {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string example;

    bool ok() const { return cases > 0 && failures == 0; }
    void fail(std::string const & what)
    {
        if (failures++ == 0)
            example = what;
    }
};

PropertyReport check_hilbert_reciprocity(std::size_t n, std::uint64_t seed);
PropertyReport check_hasse_invariance(std::size_t n, std::uint64_t seed);
PropertyReport check_congruence_invariance(std::size_t n, std::uint64_t seed);
PropertyReport check_unit_peel_roundtrip(std::size_t n, std::uint64_t seed);
PropertyReport check_isotropy_vs_oracle(std::size_t n, std::uint64_t seed);
PropertyReport check_span_range(std::size_t n, std::uint64_t seed);
PropertyReport check_span_unit_stability(std::size_t n, std::uint64_t seed);
PropertyReport check_rank_one_equivalence(std::size_t n, std::uint64_t seed);

/// Rank-2 forms anisotropic at p, extended by <1,1> and by <-1,-1>.
struct AppendingReport {
    PropertyReport odd;
    PropertyReport dyadic;
    /// p = 2 restricted to pairs whose discriminant is a 2-adic square.
    PropertyReport dyadic_square_disc;
};

AppendingReport check_unit_pair_appending(std::size_t n, std::uint64_t seed);

} // namespace wittspan::testing
