#include "wittspan/witt.hpp"

#include <set>

#include "wittspan/arith.hpp"
#include "wittspan/error.hpp"
#include "wittspan/local.hpp"

namespace wittspan {

WfpElement::WfpElement(mpz_class p) : p_(std::move(p))
{
    if (p_ < 2)
        throw Error(ErrorKind::PreconditionViolated,
                    p_.get_str() + " is not a prime");
}

WfpElement::WfpElement(mpz_class p, int ones, int betas) : WfpElement(std::move(p))
{
    auto mod = [](int v, int m) { return ((v % m) + m) % m; };
    switch (kind()) {
    case Kind::Dyadic:
        ones_ = mod(ones + betas, 2);
        break;
    case Kind::OneMod4:
        ones_ = mod(ones, 2);
        betas_ = mod(betas, 2);
        break;
    case Kind::ThreeMod4:
        ones_ = mod(ones - betas, 4);
        break;
    }
}

WfpElement::Kind WfpElement::kind() const noexcept
{
    if (p_ == 2)
        return Kind::Dyadic;
    return mpz_tstbit(p_.get_mpz_t(), 1) ? Kind::ThreeMod4 : Kind::OneMod4;
}

WfpElement wfp_from_unit(mpz_class const & u, mpz_class const & p)
{
    if (p == 2) {
        if (mpz_even_p(u.get_mpz_t()))
            throw Error(ErrorKind::PreconditionViolated, "unit must be odd");
        return WfpElement(p, 1, 0);
    }
    return legendre(u, p) == 1 ? WfpElement(p, 1, 0) : WfpElement(p, 0, 1);
}

WfpElement wfp_add(WfpElement const & x, WfpElement const & y)
{
    if (x.prime() != y.prime())
        throw Error(ErrorKind::PreconditionViolated,
                    "cannot add elements of W(F_" + x.prime().get_str() +
                        ") and W(F_" + y.prime().get_str() + ")");
    return WfpElement(x.prime(), x.ones() + y.ones(), x.betas() + y.betas());
}

WfpElement wfp_neg(WfpElement const & x)
{
    return WfpElement(x.prime(), -x.ones(), -x.betas());
}

std::string wfp_label(WfpElement const & x)
{
    if (x.is_zero())
        return "0";
    if (x.kind() == WfpElement::Kind::OneMod4) {
        if (x.ones() && x.betas())
            return "1+b";
        return x.ones() ? "1" : "b";
    }
    return std::to_string(x.ones());
}

void DelImage::set(WfpElement const & x)
{
    if (x.is_zero())
        parts_.erase(x.prime());
    else
        parts_.insert_or_assign(x.prime(), x);
}

void DelImage::add(WfpElement const & x) { set(wfp_add(at(x.prime()), x)); }

WfpElement DelImage::at(mpz_class const & p) const
{
    auto it = parts_.find(p);
    return it == parts_.end() ? WfpElement(p) : it->second;
}

std::vector<mpz_class> DelImage::support() const
{
    std::vector<mpz_class> out;
    for (auto const & kv : parts_)
        out.push_back(kv.first);
    return out;
}

DelImage operator+(DelImage const & x, DelImage const & y)
{
    DelImage out = x;
    for (auto const & kv : y.parts())
        out.add(kv.second);
    return out;
}

WfpElement del_p(DiagonalForm const & f, mpz_class const & p)
{
    WfpElement sum(p);
    for (auto const & a : f.entries()) {
        PadicDecomposition const d = padic_decompose(mpq_class(a), p);
        if ((d.ord & 1) == 0)
            continue;
        sum = wfp_add(sum, wfp_from_unit(unit_residue(mpq_class(a), p), p));
    }
    return sum;
}

DelImage del(DiagonalForm const & f)
{
    std::set<mpz_class> primes;
    for (auto const & a : f.entries())
        for (auto const & p : factorize(a).primes())
            primes.insert(p);
    DelImage out;
    for (auto const & p : primes)
        out.set(del_p(f, p));
    return out;
}

WittClassQ witt_class(DiagonalForm const & f)
{
    long signature = 0;
    for (auto const & a : f.entries())
        signature += sgn(a) > 0 ? 1 : -1;
    return WittClassQ{signature, del(f)};
}

Reduction anisotropic_reduce(FormInvariants const & inv)
{
    Reduction out{inv, 0};
    while (is_isotropic_over_Q(out.anisotropic)) {
        out.anisotropic = peel_hyperbolic(out.anisotropic);
        ++out.peels;
    }
    return out;
}

} // namespace wittspan
