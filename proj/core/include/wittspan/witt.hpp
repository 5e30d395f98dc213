#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "wittspan/forms.hpp"

namespace wittspan {

/*
 * Element of W(F_p).
 *   p = 2:       one bit.
 *   p = 1 mod 4: W = Z/2 [1] + Z/2 [b], b the least nonsquare.
 *   p = 3 mod 4: W = Z/4 generated by [1], with [b] = [-1] = 3[1].
 */
class WfpElement
{
    mpz_class p_ = 2;
    int ones_ = 0;
    int betas_ = 0;

  public:
    enum class Kind { Dyadic, OneMod4, ThreeMod4 };

    WfpElement() = default;
    /// Zero of W(F_p).
    explicit WfpElement(mpz_class p);
    /// ones * [1] + betas * [b], reduced.
    WfpElement(mpz_class p, int ones, int betas);

    mpz_class const & prime() const noexcept { return p_; }
    Kind kind() const noexcept;
    int ones() const noexcept { return ones_; }
    int betas() const noexcept { return betas_; }
    bool is_zero() const noexcept { return ones_ == 0 && betas_ == 0; }

    bool operator==(WfpElement const & other) const
    {
        return p_ == other.p_ && ones_ == other.ones_ && betas_ == other.betas_;
    }
    bool operator!=(WfpElement const & other) const { return !(*this == other); }
};

/// Class of <u mod p>.
WfpElement wfp_from_unit(mpz_class const & u, mpz_class const & p);
WfpElement wfp_add(WfpElement const & x, WfpElement const & y);
WfpElement wfp_neg(WfpElement const & x);

/// Short label: "0", "1", "b", "1+b", "2", "3".
std::string wfp_label(WfpElement const & x);

/// prime -> nonzero element of W(F_p).
class DelImage
{
    std::map<mpz_class, WfpElement> parts_;

  public:
    DelImage() = default;

    void set(WfpElement const & x);
    void add(WfpElement const & x);
    WfpElement at(mpz_class const & p) const;

    std::map<mpz_class, WfpElement> const & parts() const & noexcept { return parts_; }
    std::map<mpz_class, WfpElement> parts() && { return std::move(parts_); }
    std::vector<mpz_class> support() const;
    bool empty() const noexcept { return parts_.empty(); }
    std::size_t size() const noexcept { return parts_.size(); }

    bool operator==(DelImage const & other) const { return parts_ == other.parts_; }
    bool operator!=(DelImage const & other) const { return !(*this == other); }
};

DelImage operator+(DelImage const & x, DelImage const & y);

struct WittClassQ {
    long signature = 0;
    DelImage del;

    bool operator==(WittClassQ const & other) const
    {
        return signature == other.signature && del == other.del;
    }
};

WfpElement del_p(DiagonalForm const & f, mpz_class const & p);
DelImage del(DiagonalForm const & f);
WittClassQ witt_class(DiagonalForm const & f);

struct Reduction {
    FormInvariants anisotropic;
    std::size_t peels = 0;
};

Reduction anisotropic_reduce(FormInvariants const & inv);

} // namespace wittspan
