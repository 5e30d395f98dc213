#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "wittspan/forms.hpp"

/*
 * Brute-force local solvability, used to cross-check the invariant-based
 * isotropy criteria. Exhaustive over residues mod p^k; slow for large p.
 */
namespace wittspan::oracle {

std::uint64_t default_max_modulus() noexcept;
void set_default_max_modulus(std::uint64_t modulus) noexcept;

/// 2 * max ord_p(a_i) + 3 for odd p, + 5 for p = 2.
unsigned lifting_exponent(DiagonalForm const & f, mpz_class const & p);

/// Whether sum a_i x_i^2 = 0 mod p^k has a solution with some x_i a unit.
/// Throws OracleTooLarge when p^k exceeds `max_modulus`.
bool mod_pk_solvable(DiagonalForm const & f, mpz_class const & p,
                     std::uint64_t max_modulus);
bool mod_pk_solvable(DiagonalForm const & f, mpz_class const & p);

} // namespace wittspan::oracle
