#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "wittspan/forms.hpp"
#include "wittspan/witt.hpp"

namespace wittspan::testing {

/// Squares mod p listed explicitly.
int legendre_by_enumeration(long u, long p);

/// r in (Q_p*)^2 decided by searching x^2 = n mod p^k, n = num * den.
bool square_by_search(mpq_class const & r, long p);

/// Direct enumeration of all coefficient tuples mod p^k.
bool naive_primitive_solvable(std::vector<long> const & coeffs, long p, unsigned k);

/// Hilbert symbol through solvability of a x^2 + b y^2 = z^2.
int hilbert_by_oracle(mpq_class const & a, mpq_class const & b, long p);

/// Nonzero x in F_p^n with sum c_i x_i^2 = 0, by enumeration.
bool fp_isotropic(std::vector<long> const & coeffs, long p);

/// Smallest rank (1 or 2) of a diagonal form over squarefree products of
/// `pool` (with signs) whose del equals `target`; nullopt when none.
std::optional<int> small_preimage_rank(DelImage const & target,
                                       std::vector<long> const & pool);

struct Sampler {
    std::mt19937_64 rng;

    explicit Sampler(std::uint64_t seed) : rng(seed) {}

    long integer(long lo, long hi);
    long nonzero(long lo, long hi);
    mpq_class rational(long bound);
    DiagonalForm form(std::size_t min_rank, std::size_t max_rank, long bound);
    std::vector<std::vector<mpq_class>> unimodular(std::size_t n, int steps);
    std::vector<std::vector<mpq_class>> symmetric(std::size_t n, long bound);
};

} // namespace wittspan::testing
