#include "wittspan/forms.hpp"

#include <algorithm>
#include <set>

#include "wittspan/arith.hpp"
#include "wittspan/error.hpp"
#include "wittspan/hilbert.hpp"

namespace wittspan {

namespace {

void set_hasse(std::map<mpz_class, int> & hasse, mpz_class const & p, int value)
{
    if (value == -1)
        hasse[p] = -1;
    else
        hasse.erase(p);
}

std::vector<mpz_class> primes_with_two(mpz_class const & d)
{
    std::vector<mpz_class> out{mpz_class(2)};
    for (auto const & p : factorize(d).primes())
        if (p != 2)
            out.push_back(p);
    return out;
}

using Grid = std::vector<std::vector<mpq_class>>;

} // namespace

DiagonalForm::DiagonalForm(std::vector<mpz_class> entries)
{
    entries_.reserve(entries.size());
    for (auto const & a : entries) {
        if (a == 0)
            throw Error(ErrorKind::InvalidInput,
                        "diagonal entries must be nonzero");
        entries_.push_back(squarefree_part(a));
    }
}

DiagonalForm::DiagonalForm(std::initializer_list<long> entries)
    : DiagonalForm(std::vector<mpz_class>(entries.begin(), entries.end()))
{
}

DiagonalForm::DiagonalForm(Trusted, std::vector<mpz_class> entries)
    : entries_(std::move(entries))
{
}

DiagonalForm DiagonalForm::from_rationals(std::vector<mpq_class> const & entries)
{
    std::vector<mpz_class> out;
    out.reserve(entries.size());
    for (auto const & r : entries) {
        if (r == 0)
            throw Error(ErrorKind::InvalidInput,
                        "diagonal entries must be nonzero");
        out.push_back(squarefree_class(r));
    }
    return DiagonalForm(Trusted{}, std::move(out));
}

bool DiagonalForm::operator==(DiagonalForm const & other) const
{
    if (rank() != other.rank())
        return false;
    auto a = entries_;
    auto b = other.entries_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

DiagonalForm direct_sum(DiagonalForm const & f, DiagonalForm const & g)
{
    std::vector<mpz_class> e = f.entries();
    e.insert(e.end(), g.entries().begin(), g.entries().end());
    return DiagonalForm(DiagonalForm::Trusted{}, std::move(e));
}

DiagonalForm repeated(long value, std::size_t count)
{
    mpz_class const a = squarefree_part(mpz_class(value));
    return DiagonalForm(DiagonalForm::Trusted{}, std::vector<mpz_class>(count, a));
}

SymmetricMatrix::SymmetricMatrix(std::vector<std::vector<mpq_class>> const & rows)
    : n_(rows.size())
{
    entries_.reserve(n_ * n_);
    for (auto const & row : rows) {
        if (row.size() != n_)
            throw Error(ErrorKind::InvalidInput, "matrix is not square");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i))
                throw Error(ErrorKind::InvalidInput, "matrix is not symmetric");
}

SymmetricMatrix SymmetricMatrix::diagonal(std::vector<mpq_class> const & values)
{
    Grid rows(values.size(), std::vector<mpq_class>(values.size(), 0));
    for (std::size_t i = 0; i < values.size(); ++i)
        rows[i][i] = values[i];
    return SymmetricMatrix(rows);
}

SymmetricMatrix SymmetricMatrix::congruent(Grid const & x) const
{
    if (x.size() != n_)
        throw Error(ErrorKind::InvalidInput, "congruence matrix has wrong size");
    for (auto const & row : x)
        if (row.size() != n_)
            throw Error(ErrorKind::InvalidInput,
                        "congruence matrix has wrong size");
    Grid mx(n_, std::vector<mpq_class>(n_, 0));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            if (at(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < n_; ++j)
                mx[i][j] += at(i, k) * x[k][j];
        }
    Grid out(n_, std::vector<mpq_class>(n_, 0));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            if (x[k][i] == 0)
                continue;
            for (std::size_t j = 0; j < n_; ++j)
                out[i][j] += x[k][i] * mx[k][j];
        }
    return SymmetricMatrix(out);
}

mpq_class determinant(SymmetricMatrix const & m)
{
    std::size_t const n = m.size();
    Grid a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m.at(i, j);
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0)
                continue;
            mpq_class const f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k)
                a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

DiagonalForm diagonalize(SymmetricMatrix const & m)
{
    std::size_t const n = m.size();
    Grid a(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m.at(i, j);

    /* Basis change e_i <- e_i + s e_j on the trailing block. */
    auto shear = [&](std::size_t i, std::size_t j, int s) {
        for (std::size_t k = i; k < n; ++k)
            a[i][k] += s * a[j][k];
        for (std::size_t k = i; k < n; ++k)
            a[k][i] += s * a[k][j];
    };

    std::vector<mpq_class> pivots;
    pivots.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i][i] == 0) {
            std::size_t j = i + 1;
            while (j < n && 2 * a[i][j] + a[j][j] == 0)
                ++j;
            if (j < n) {
                shear(i, j, 1);
            } else {
                j = i + 1;
                while (j < n && a[i][j] == 0)
                    ++j;
                if (j == n)
                    throw Error(ErrorKind::DegenerateForm,
                                "matrix is singular");
                shear(i, j, -1);
            }
        }
        mpq_class const d = a[i][i];
        for (std::size_t r = i + 1; r < n; ++r) {
            if (a[r][i] == 0)
                continue;
            mpq_class const f = a[r][i] / d;
            for (std::size_t k = i; k < n; ++k)
                a[r][k] -= f * a[i][k];
            for (std::size_t k = i; k < n; ++k)
                a[k][r] -= f * a[k][i];
        }
        pivots.push_back(d);
    }
    return DiagonalForm::from_rationals(pivots);
}

int FormInvariants::hasse_at(mpz_class const & p) const
{
    return hasse.count(p) ? -1 : 1;
}

std::vector<mpz_class> FormInvariants::hasse_support() const
{
    std::vector<mpz_class> out;
    for (auto const & kv : hasse)
        out.push_back(kv.first);
    return out;
}

bool FormInvariants::consistent() const
{
    long const r = static_cast<long>(rank);
    if (signature > r || signature < -r || ((r - signature) & 1))
        return false;
    if (disc == 0)
        return false;
    long const t = (r - signature) / 2;
    if ((disc < 0) != bool(t & 1))
        return false;
    if (rank == 0 && (disc != 1 || !hasse.empty()))
        return false;
    int product = ((t * (t - 1) / 2) & 1) ? -1 : 1;
    for (auto const & kv : hasse) {
        if (kv.second != -1)
            return false;
        product = -product;
    }
    return product == 1;
}

bool FormInvariants::operator==(FormInvariants const & other) const
{
    return rank == other.rank && signature == other.signature &&
           disc == other.disc && hasse == other.hasse;
}

FormInvariants invariants(DiagonalForm const & f)
{
    FormInvariants inv;
    inv.rank = f.rank();
    std::set<mpz_class> primes{mpz_class(2)};
    for (auto const & a : f.entries()) {
        inv.signature += sgn(a) > 0 ? 1 : -1;
        inv.disc = squarefree_product(inv.disc, a);
        for (auto const & p : factorize(a).primes())
            primes.insert(p);
    }
    /* S(F + <a>) = S(F) (d_F, a) turns the pairwise product into one pass. */
    for (auto const & p : primes) {
        mpz_class d = 1;
        int s = 1;
        for (auto const & a : f.entries()) {
            s *= hilbert_symbol(mpq_class(d), mpq_class(a), p);
            d = squarefree_product(d, a);
        }
        set_hasse(inv.hasse, p, s);
    }
    return inv;
}

FormInvariants add_unit(FormInvariants const & inv, int eps)
{
    if (eps != 1 && eps != -1)
        throw Error(ErrorKind::PreconditionViolated, "unit must be +1 or -1");
    FormInvariants out = inv;
    out.rank += 1;
    out.signature += eps;
    if (eps == 1)
        return out;
    out.disc = -inv.disc;
    for (auto const & p : primes_with_two(inv.disc))
        set_hasse(out.hasse, p,
                  inv.hasse_at(p) * hilbert_symbol(mpq_class(inv.disc), -1, p));
    return out;
}

FormInvariants peel_hyperbolic(FormInvariants const & inv)
{
    if (inv.rank < 2)
        throw Error(ErrorKind::RankUnderflow,
                    "cannot split a hyperbolic plane off a form of rank " +
                        std::to_string(inv.rank));
    FormInvariants out = inv;
    out.rank -= 2;
    out.disc = -inv.disc;
    for (auto const & p : primes_with_two(inv.disc))
        set_hasse(out.hasse, p,
                  inv.hasse_at(p) * hilbert_symbol(mpq_class(out.disc), -1, p));
    return out;
}

} // namespace wittspan
