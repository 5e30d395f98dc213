#include "wittspan/span.hpp"

#include <algorithm>
#include <limits>

#include "wittspan/arith.hpp"
#include "wittspan/error.hpp"

namespace wittspan {

namespace {

constexpr long kMaxSpan = 3;

} // namespace

std::map<long, std::size_t> SpanAnalysis::witness() const
{
    std::map<long, std::size_t> out;
    for (auto const & c : window)
        out[c.shift] = c.anisotropic.rank;
    return out;
}

std::map<int, std::set<long>> SpanAnalysis::signature_sets() const
{
    std::map<int, std::set<long>> out{{1, {}}, {2, {}}, {3, {}}};
    for (auto const & c : window) {
        auto const r = static_cast<int>(c.anisotropic.rank);
        if (r >= 1 && r <= 3)
            out[r].insert(c.signature);
    }
    return out;
}

SpanAnalysis witt_span(DiagonalForm const & f)
{
    FormInvariants const start = anisotropic_reduce(invariants(f)).anisotropic;

    SpanAnalysis out;
    out.signature = start.signature;
    long const lo = -out.signature - kMaxSpan;
    long const hi = -out.signature + kMaxSpan;

    auto record = [&](long n, FormInvariants const & inv) {
        if (n >= lo && n <= hi)
            out.window.push_back(SpanCandidate{n, out.signature + n, inv});
    };

    /* Shifting by one unit at a time keeps every intermediate tuple small. */
    record(0, start);
    FormInvariants cur = start;
    for (long n = 1; n <= hi; ++n) {
        cur = anisotropic_reduce(add_unit(cur, 1)).anisotropic;
        record(n, cur);
    }
    cur = start;
    for (long n = -1; n >= lo; --n) {
        cur = anisotropic_reduce(add_unit(cur, -1)).anisotropic;
        record(n, cur);
    }
    std::sort(out.window.begin(), out.window.end(),
              [](SpanCandidate const & a, SpanCandidate const & b) {
                  return a.shift < b.shift;
              });

    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (auto const & c : out.window)
        best = std::min(best, c.anisotropic.rank);
    out.ws = static_cast<int>(best);
    return out;
}

std::map<int, std::set<long>> signature_sets(DiagonalForm const & f)
{
    return witt_span(f).signature_sets();
}

std::optional<mpz_class> rank_one_representative(DiagonalForm const & f)
{
    DelImage const target = del(f);
    mpz_class product = 1;
    for (auto const & p : target.support())
        product *= p;
    for (int eps : {1, -1}) {
        mpz_class const d = eps * product;
        if (del(DiagonalForm(DiagonalForm::Trusted{}, {d})) == target)
            return d;
    }
    return std::nullopt;
}

std::optional<int> single_prime_span(DelImage const & d)
{
    if (d.size() != 1)
        return std::nullopt;
    WfpElement const & x = d.parts().begin()->second;
    if (x.kind() != WfpElement::Kind::OneMod4 || x.betas() == 0)
        return std::nullopt;
    return x.ones() ? 3 : 2;
}

DiagonalForm del_preimage(DelImage const & d)
{
    std::vector<mpz_class> entries;
    for (auto const & [p, x] : d.parts()) {
        switch (x.kind()) {
        case WfpElement::Kind::Dyadic:
            entries.push_back(p);
            break;
        case WfpElement::Kind::ThreeMod4:
            if (x.ones() == 3) {
                entries.push_back(-p);
            } else {
                for (int i = 0; i < x.ones(); ++i)
                    entries.push_back(p);
            }
            break;
        case WfpElement::Kind::OneMod4:
            if (x.ones())
                entries.push_back(p);
            if (x.betas()) {
                auto const [residue, modulus] =
                    crt({{mpz_class(3), mpz_class(4)}, {least_nonsquare(p), p}});
                mpz_class const a = prime_in_progression(residue, modulus);
                entries.push_back(p * a);
                entries.push_back(a);
            }
            break;
        }
    }
    return DiagonalForm(DiagonalForm::Trusted{}, std::move(entries));
}

std::optional<std::string> rank_two_case_label(std::set<long> const & s)
{
    using Set = std::set<long>;
    if (s == Set{-2, 0, 2})
        return "a1";
    if (s == Set{0, 2})
        return "a2";
    if (s == Set{0, -2})
        return "a2 (mirrored)";
    if (s == Set{-2, 2})
        return "b1";
    if (s == Set{2})
        return "b2";
    if (s == Set{-2})
        return "b2 (mirrored)";
    if (s == Set{0})
        return "C&D";
    return std::nullopt;
}

} // namespace wittspan
