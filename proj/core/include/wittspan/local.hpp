#pragma once

#include <vector>

#include <gmpxx.h>

#include "wittspan/forms.hpp"

namespace wittspan {

bool is_isotropic_over_R(FormInvariants const & inv);
bool is_isotropic_over_Qp(FormInvariants const & inv, mpz_class const & p);

/// Local-global: only the primes in relevant_primes(inv) can obstruct.
bool is_isotropic_over_Q(FormInvariants const & inv);

/// {2} together with the primes dividing the discriminant and the primes
/// where the Hasse symbol is -1, ascending.
std::vector<mpz_class> relevant_primes(FormInvariants const & inv);

} // namespace wittspan
