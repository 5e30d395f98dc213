#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace wittspan {

/* sign * prod(p^e) reproduces the factored integer exactly. */
struct Factorization {
    int sign = 1;
    std::map<mpz_class, unsigned> factors;

    mpz_class value() const;
    std::vector<mpz_class> primes() const;
};

/* r = p^ord * unit with unit a p-adic unit. */
struct PadicDecomposition {
    long ord = 0;
    mpq_class unit;
};

/* Valuation and the first two binary digits of the odd unit part. */
struct TwoAdicDigits {
    long ord = 0;
    int a1 = 0;
    int a2 = 0;
};

/*
 * Process-wide limits. Setters are thread-safe; the values are read at the
 * start of each call.
 */
std::uint64_t default_factor_effort() noexcept;
void set_default_factor_effort(std::uint64_t effort) noexcept;
std::uint64_t default_prime_search_limit() noexcept;
void set_default_prime_search_limit(std::uint64_t steps) noexcept;

/// Trial division below 10^6, then Brent's variant of Pollard rho.
/// `effort` bounds the total number of rho iterations spent on composite
/// cofactors; exceeding it throws FactorizationLimitExceeded.
Factorization factorize(mpz_class const & n, std::uint64_t effort);
Factorization factorize(mpz_class const & n);

/// Miller-Rabin. Deterministic below 3.3e24 (first 13 prime bases), strong
/// probabilistic (additional fixed pseudo-random bases) above.
bool is_prime(mpz_class const & n);

mpz_class squarefree_part(mpz_class const & n);
mpz_class squarefree_class(mpq_class const & r);

/// Squarefree class of a*b for squarefree a, b. No factoring required.
mpz_class squarefree_product(mpz_class const & a, mpz_class const & b);

/// p-adic order of a nonzero integer.
long padic_ord(mpz_class const & n, mpz_class const & p);
PadicDecomposition padic_decompose(mpq_class const & r, mpz_class const & p);
TwoAdicDigits two_adic_digits(mpq_class const & r);

/// Unit part of r read in F_p, i.e. numerator * denominator^-1 mod p.
mpz_class unit_residue(mpq_class const & r, mpz_class const & p);

bool is_square_in_Qp(mpq_class const & r, mpz_class const & p);

int legendre(mpz_class const & u, mpz_class const & p);
mpz_class least_nonsquare(mpz_class const & p);

/// Combined residue modulo the lcm of the moduli. Throws
/// InconsistentCongruence when no solution exists.
std::pair<mpz_class, mpz_class>
crt(std::vector<std::pair<mpz_class, mpz_class>> const & congruences);

/// Smallest prime q with q = residue (mod modulus).
mpz_class prime_in_progression(mpz_class const & residue,
                               mpz_class const & modulus);
mpz_class prime_in_progression(mpz_class const & residue,
                               mpz_class const & modulus,
                               std::uint64_t max_steps);

} // namespace wittspan
