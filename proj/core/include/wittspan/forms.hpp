#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace wittspan {

/*
 * <a_1> + ... + <a_n> with every a_i a nonzero squarefree integer. Entry
 * order is kept for display but equality is multiset equality.
 */
class DiagonalForm
{
    std::vector<mpz_class> entries_;

  public:
    struct Trusted {};

    DiagonalForm() = default;
    /// Canonicalizes every entry to its squarefree class.
    explicit DiagonalForm(std::vector<mpz_class> entries);
    DiagonalForm(std::initializer_list<long> entries);
    /// Caller guarantees the entries are already nonzero and squarefree.
    DiagonalForm(Trusted, std::vector<mpz_class> entries);

    static DiagonalForm from_rationals(std::vector<mpq_class> const & entries);

    std::vector<mpz_class> const & entries() const & noexcept { return entries_; }
    std::vector<mpz_class> entries() && { return std::move(entries_); }
    std::size_t rank() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    bool operator==(DiagonalForm const & other) const;
};

DiagonalForm direct_sum(DiagonalForm const & f, DiagonalForm const & g);

/// `count` copies of <value>.
DiagonalForm repeated(long value, std::size_t count);

class SymmetricMatrix
{
    std::size_t n_ = 0;
    std::vector<mpq_class> entries_;

  public:
    SymmetricMatrix() = default;
    /// Throws InvalidInput unless `rows` is square and symmetric.
    explicit SymmetricMatrix(std::vector<std::vector<mpq_class>> const & rows);

    static SymmetricMatrix diagonal(std::vector<mpq_class> const & values);

    std::size_t size() const noexcept { return n_; }
    mpq_class const & at(std::size_t i, std::size_t j) const
    {
        return entries_[i * n_ + j];
    }

    /// X^T M X; X need not be square-invertible, only n x n.
    SymmetricMatrix congruent(std::vector<std::vector<mpq_class>> const & x) const;
};

mpq_class determinant(SymmetricMatrix const & m);

/// Throws DegenerateForm when det(m) = 0.
DiagonalForm diagonalize(SymmetricMatrix const & m);

/*
 * Rank, signature, squarefree discriminant and Hasse symbols. Only primes
 * with Hasse symbol -1 are stored.
 */
struct FormInvariants {
    std::size_t rank = 0;
    long signature = 0;
    mpz_class disc = 1;
    std::map<mpz_class, int> hasse;

    int hasse_at(mpz_class const & p) const;
    std::vector<mpz_class> hasse_support() const;

    /// All structural constraints, including the product formula.
    bool consistent() const;

    bool operator==(FormInvariants const & other) const;
    bool operator!=(FormInvariants const & other) const { return !(*this == other); }
};

FormInvariants invariants(DiagonalForm const & f);

/// Invariants of F + <eps> given those of F.
FormInvariants add_unit(FormInvariants const & inv, int eps);

/// Invariants of B where the input describes B + H. Throws RankUnderflow
/// below rank 2.
FormInvariants peel_hyperbolic(FormInvariants const & inv);

} // namespace wittspan
