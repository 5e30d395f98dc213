#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "wittspan/forms.hpp"
#include "wittspan/witt.hpp"

namespace wittspan {

/// Square integer matrix V; the knot form is V + V^T.
struct SeifertMatrix {
    std::vector<std::vector<mpz_class>> rows;

    SymmetricMatrix symmetrized() const;
};

struct KnotInput {
    std::string name;
    std::variant<SeifertMatrix, DiagonalForm> presentation;
};

DiagonalForm knot_witt_form(KnotInput const & k);

/// |det(V + V^T)|, or |prod a_i| for a diagonal representative.
mpz_class knot_det(KnotInput const & k);
long knot_signature(KnotInput const & k);

struct BoundsReport {
    WittClassQ witt_class;
    mpz_class det;
    long signature = 0;
    int ws = 0;
    int gamma_c_lower = 0;
    int gamma_3_lower = 0;
};

BoundsReport crosscap_bounds(KnotInput const & k);

/// P(p, p, 2p) for a prime p = 1 mod 20.
struct ThreeStrandPretzel {
    mpz_class p;
};

/// The four-strand family indexed by m >= 0. The form has 21 + 5^(2m+1)
/// entries, so m is capped at 3.
struct FourStrandPretzel {
    long m = 0;
};

using PretzelFamily = std::variant<ThreeStrandPretzel, FourStrandPretzel>;

inline constexpr long kMaxFourStrandIndex = 3;

DiagonalForm pretzel_family_witt(PretzelFamily const & family);

struct Fixture {
    KnotInput knot;
    std::optional<int> expected_ws;
    std::map<int, std::set<long>> expected_sets;
    std::string note;
};

std::vector<Fixture> const & fixtures();

} // namespace wittspan
