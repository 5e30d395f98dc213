#pragma once

#include <gmpxx.h>

#include "wittspan/forms.hpp"

namespace wittspan {

/// (a, b)_p: +1 iff a x^2 + b y^2 = 1 has a solution in Q_p.
int hilbert_symbol(mpq_class const & a, mpq_class const & b, mpz_class const & p);

/// The same symbol at the real place.
int hilbert_symbol_real(mpq_class const & a, mpq_class const & b);

/// Product of (a_i, a_j)_p over i < j.
int hasse_symbol(DiagonalForm const & f, mpz_class const & p);

} // namespace wittspan
