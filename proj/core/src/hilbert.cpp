#include "wittspan/hilbert.hpp"

#include "wittspan/arith.hpp"
#include "wittspan/error.hpp"

namespace wittspan {

namespace {

int omega(TwoAdicDigits const & t) { return (t.a1 + t.a2) & 1; }

int residue_symbol(mpq_class const & r, mpz_class const & p)
{
    return legendre(unit_residue(r, p), p);
}

} // namespace

int hilbert_symbol(mpq_class const & a, mpq_class const & b, mpz_class const & p)
{
    if (a == 0 || b == 0)
        throw Error(ErrorKind::PreconditionViolated,
                    "hilbert symbol needs nonzero arguments");
    if (p < 2)
        throw Error(ErrorKind::PreconditionViolated,
                    p.get_str() + " is not a prime");

    if (p == 2) {
        TwoAdicDigits const x = two_adic_digits(a);
        TwoAdicDigits const y = two_adic_digits(b);
        long const e = long(x.a1) * y.a1 + (x.ord & 1) * omega(y) +
                       (y.ord & 1) * omega(x);
        return (e & 1) ? -1 : 1;
    }

    long const alpha = padic_decompose(a, p).ord;
    long const beta = padic_decompose(b, p).ord;
    int s = 1;
    if ((alpha & 1) && (beta & 1) && mpz_tstbit(p.get_mpz_t(), 1))
        s = -s;
    if (beta & 1)
        s *= residue_symbol(a, p);
    if (alpha & 1)
        s *= residue_symbol(b, p);
    return s;
}

int hilbert_symbol_real(mpq_class const & a, mpq_class const & b)
{
    if (a == 0 || b == 0)
        throw Error(ErrorKind::PreconditionViolated,
                    "hilbert symbol needs nonzero arguments");
    return (a < 0 && b < 0) ? -1 : 1;
}

int hasse_symbol(DiagonalForm const & f, mpz_class const & p)
{
    auto const & e = f.entries();
    int s = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            s *= hilbert_symbol(mpq_class(e[i]), mpq_class(e[j]), p);
    return s;
}

} // namespace wittspan
