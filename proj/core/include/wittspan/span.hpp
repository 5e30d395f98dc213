#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wittspan/forms.hpp"
#include "wittspan/witt.hpp"

namespace wittspan {

/// Anisotropic part of [f] + shift * [1].
struct SpanCandidate {
    long shift = 0;
    long signature = 0;
    FormInvariants anisotropic;
};

struct SpanAnalysis {
    int ws = 0;
    long signature = 0;
    /// Every shift whose candidate signature lies in [-3, 3], ascending.
    std::vector<SpanCandidate> window;

    /// shift -> anisotropic rank.
    std::map<long, std::size_t> witness() const;
    /// rank r in {1, 2, 3} -> signatures of rank-r anisotropic candidates.
    std::map<int, std::set<long>> signature_sets() const;
};

/// Minimal anisotropic rank over the classes [f] + n[1].
SpanAnalysis witt_span(DiagonalForm const & f);
std::map<int, std::set<long>> signature_sets(DiagonalForm const & f);

/// Some d in {+P, -P}, P the product of the primes where del(f) is nonzero,
/// with del(<d>) = del(f). Present exactly when the span is at most 1.
std::optional<mpz_class> rank_one_representative(DiagonalForm const & f);

/// Span read off directly when del is supported at a single prime p = 1
/// mod 4 with value [b] (span 2) or [1]+[b] (span 3).
std::optional<int> single_prime_span(DelImage const & d);

/// A diagonal form with the given residue image.
DiagonalForm del_preimage(DelImage const & d);

/// Case label for a rank-2 signature set, if it is one of the seven possible.
std::optional<std::string> rank_two_case_label(std::set<long> const & rank_two_set);

} // namespace wittspan
