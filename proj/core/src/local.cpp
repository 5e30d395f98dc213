#include "wittspan/local.hpp"

#include <set>

#include "wittspan/arith.hpp"
#include "wittspan/hilbert.hpp"

namespace wittspan {

bool is_isotropic_over_R(FormInvariants const & inv)
{
    long const r = static_cast<long>(inv.rank);
    return r >= 2 && inv.signature < r && inv.signature > -r;
}

bool is_isotropic_over_Qp(FormInvariants const & inv, mpz_class const & p)
{
    mpq_class const d(inv.disc);
    switch (inv.rank) {
    case 0:
    case 1:
        return false;
    case 2:
        return is_square_in_Qp(-d, p);
    case 3:
        return inv.hasse_at(p) == hilbert_symbol(-1, -d, p);
    case 4:
        return !(is_square_in_Qp(d, p) &&
                 inv.hasse_at(p) == -hilbert_symbol(-1, -1, p));
    default:
        return true;
    }
}

std::vector<mpz_class> relevant_primes(FormInvariants const & inv)
{
    std::set<mpz_class> primes{mpz_class(2)};
    for (auto const & p : factorize(inv.disc).primes())
        primes.insert(p);
    for (auto const & kv : inv.hasse)
        primes.insert(kv.first);
    return {primes.begin(), primes.end()};
}

bool is_isotropic_over_Q(FormInvariants const & inv)
{
    if (inv.rank <= 1)
        return false;
    if (inv.rank == 2)
        return inv.disc == -1;
    if (!is_isotropic_over_R(inv))
        return false;
    if (inv.rank >= 5)
        return true;
    for (auto const & p : relevant_primes(inv))
        if (!is_isotropic_over_Qp(inv, p))
            return false;
    return true;
}

} // namespace wittspan
