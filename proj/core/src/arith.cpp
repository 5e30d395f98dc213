#include "wittspan/arith.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <string>

#include "wittspan/error.hpp"

namespace wittspan {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::RankUnderflow: return "RankUnderflow";
    case ErrorKind::InconsistentCongruence: return "InconsistentCongruence";
    case ErrorKind::FactorizationLimitExceeded: return "FactorizationLimitExceeded";
    case ErrorKind::SearchLimitExceeded: return "SearchLimitExceeded";
    case ErrorKind::OracleTooLarge: return "OracleTooLarge";
    }
    return "Unknown";
}

namespace {

constexpr std::uint32_t kTrialBound = 1'000'000;

std::atomic<std::uint64_t> g_factor_effort{5'000'000};
std::atomic<std::uint64_t> g_prime_search_limit{10'000'000};

std::vector<std::uint32_t> sieve(std::uint32_t bound)
{
    std::vector<bool> composite(bound + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t i = 2; i <= bound; ++i) {
        if (composite[i])
            continue;
        primes.push_back(i);
        for (std::uint64_t j = std::uint64_t(i) * i; j <= bound; j += i)
            composite[j] = true;
    }
    return primes;
}

std::vector<std::uint32_t> const & small_primes()
{
    static std::vector<std::uint32_t> const primes = sieve(kTrialBound);
    return primes;
}

/* Composite cofactors left after the cheap trial division are worth
 * remembering; small inputs are not. */
class FactorCache
{
    std::mutex mutex_;
    std::map<mpz_class, std::map<mpz_class, unsigned>> entries_;

  public:
    bool lookup(mpz_class const & n, std::map<mpz_class, unsigned> & out)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = entries_.find(n);
        if (it == entries_.end())
            return false;
        out = it->second;
        return true;
    }

    void store(mpz_class const & n, std::map<mpz_class, unsigned> const & f)
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (entries_.size() > 4096)
            entries_.clear();
        entries_.emplace(n, f);
    }
};

FactorCache & factor_cache()
{
    static FactorCache cache;
    return cache;
}

bool miller_rabin_round(mpz_class const & n, mpz_class const & n_minus_1,
                        mpz_class const & d, unsigned long s,
                        mpz_class const & base)
{
    mpz_class x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1)
        return true;
    for (unsigned long r = 1; r < s; ++r) {
        mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
        if (x == n_minus_1)
            return true;
        if (x == 1)
            return false;
    }
    return false;
}

[[noreturn]] void throw_factor_limit(mpz_class const & n)
{
    throw Error(ErrorKind::FactorizationLimitExceeded,
                "composite cofactor " + n.get_str() +
                    " resisted the configured factoring effort");
}

void charge(std::uint64_t & budget, std::uint64_t amount, mpz_class const & n)
{
    if (amount > budget)
        throw_factor_limit(n);
    budget -= amount;
}

/* Brent's cycle-finding variant of Pollard rho; returns a proper divisor. */
mpz_class brent_rho(mpz_class const & n, std::uint64_t & budget)
{
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    constexpr std::uint64_t batch = 128;
    for (unsigned long c = 1;; ++c) {
        auto step = [&](mpz_class & v) {
            v = v * v + c;
            v %= n;
        };
        mpz_class y = 2, x, ys, q = 1, g = 1, diff;
        std::uint64_t r = 1;
        while (g == 1) {
            x = y;
            charge(budget, r, n);
            for (std::uint64_t i = 0; i < r; ++i)
                step(y);
            for (std::uint64_t k = 0; k < r && g == 1; k += batch) {
                ys = y;
                std::uint64_t const todo = std::min(batch, r - k);
                charge(budget, todo, n);
                for (std::uint64_t i = 0; i < todo; ++i) {
                    step(y);
                    diff = x - y;
                    q = (q * abs(diff)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (g == n) {
            do {
                charge(budget, 1, n);
                step(ys);
                diff = x - ys;
                diff = abs(diff);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void split_composite(mpz_class const & n, std::uint64_t & budget,
                     std::map<mpz_class, unsigned> & out, unsigned multiplicity)
{
    if (is_prime(n)) {
        out[n] += multiplicity;
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        split_composite(root, budget, out, 2 * multiplicity);
        return;
    }
    mpz_class const d = brent_rho(n, budget);
    split_composite(d, budget, out, multiplicity);
    split_composite(mpz_class(n / d), budget, out, multiplicity);
}

} // namespace

mpz_class Factorization::value() const
{
    mpz_class v = sign;
    for (auto const & [p, e] : factors) {
        mpz_class pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

std::vector<mpz_class> Factorization::primes() const
{
    std::vector<mpz_class> out;
    out.reserve(factors.size());
    for (auto const & kv : factors)
        out.push_back(kv.first);
    return out;
}

std::uint64_t default_factor_effort() noexcept { return g_factor_effort.load(); }
void set_default_factor_effort(std::uint64_t effort) noexcept
{
    g_factor_effort.store(effort);
}
std::uint64_t default_prime_search_limit() noexcept
{
    return g_prime_search_limit.load();
}
void set_default_prime_search_limit(std::uint64_t steps) noexcept
{
    g_prime_search_limit.store(steps);
}

bool is_prime(mpz_class const & n)
{
    if (n < 2)
        return false;
    static constexpr unsigned long small[] = {2,  3,  5,  7,  11, 13, 17,
                                              19, 23, 29, 31, 37, 41};
    for (unsigned long p : small) {
        if (n == p)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p))
            return false;
    }
    if (n < 43 * 43)
        return true;

    mpz_class const n_minus_1 = n - 1;
    mpz_class d = n_minus_1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    for (unsigned long p : small)
        if (!miller_rabin_round(n, n_minus_1, d, s, mpz_class(p)))
            return false;

    static mpz_class const deterministic_bound("3317044064679887385961981");
    if (n < deterministic_bound)
        return true;

    std::mt19937_64 gen(0x5eed'0f'b17ULL);
    mpz_class base;
    for (int round = 0; round < 24; ++round) {
        mpz_class const r = mpz_class(std::to_string(gen())) * mpz_class(std::to_string(gen()));
        base = r % (n - 3) + 2;
        if (!miller_rabin_round(n, n_minus_1, d, s, base))
            return false;
    }
    return true;
}

namespace {

/* Strips primes[from..] from m by trial division; false when m is left prime. */
bool trial_divide(mpz_class & m, std::size_t from, std::map<mpz_class, unsigned> & out)
{
    auto const & primes = small_primes();
    for (std::size_t i = from; i < primes.size() && m > 1; ++i) {
        unsigned long const p = primes[i];
        if (m < mpz_class(p) * p)
            return false;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
            out[mpz_class(p)] = e;
        }
    }
    return m > 1 && !is_prime(m);
}

} // namespace

Factorization factorize(mpz_class const & n, std::uint64_t effort)
{
    if (n == 0)
        throw Error(ErrorKind::PreconditionViolated, "cannot factor zero");
    Factorization f;
    f.sign = sgn(n) < 0 ? -1 : 1;
    mpz_class m = abs(n);

    /* The first 168 primes (below 1000) are cheap; past that a large prime
     * cofactor would otherwise cost the full trial range. */
    constexpr std::size_t kCheap = 168;
    auto const & primes = small_primes();
    for (std::size_t i = 0; i < kCheap && m > 1; ++i) {
        unsigned long const p = primes[i];
        if (m < mpz_class(p) * p)
            break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
            f.factors[mpz_class(p)] = e;
        }
    }
    if (m == 1)
        return f;
    if (m < mpz_class(primes[kCheap]) * primes[kCheap] || is_prime(m)) {
        f.factors[m] += 1;
        return f;
    }

    std::map<mpz_class, unsigned> rest;
    if (!factor_cache().lookup(m, rest)) {
        mpz_class cofactor = m;
        if (trial_divide(cofactor, kCheap, rest)) {
            std::uint64_t budget = effort;
            split_composite(cofactor, budget, rest, 1);
        } else if (cofactor > 1) {
            rest[cofactor] += 1;
        }
        factor_cache().store(m, rest);
    }
    for (auto const & [p, e] : rest)
        f.factors[p] += e;
    return f;
}

Factorization factorize(mpz_class const & n)
{
    return factorize(n, default_factor_effort());
}

mpz_class squarefree_part(mpz_class const & n)
{
    if (n == 0)
        throw Error(ErrorKind::PreconditionViolated,
                    "zero has no square class");
    if (n == 1 || n == -1)
        return n;
    Factorization const f = factorize(n);
    mpz_class d = f.sign;
    for (auto const & [p, e] : f.factors)
        if (e % 2 == 1)
            d *= p;
    return d;
}

mpz_class squarefree_class(mpq_class const & r)
{
    if (r == 0)
        throw Error(ErrorKind::PreconditionViolated,
                    "zero has no square class");
    return squarefree_part(mpz_class(r.get_num() * r.get_den()));
}

mpz_class squarefree_product(mpz_class const & a, mpz_class const & b)
{
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return mpz_class(a / g) * mpz_class(b / g);
}

long padic_ord(mpz_class const & n, mpz_class const & p)
{
    if (n == 0)
        throw Error(ErrorKind::PreconditionViolated, "ord of zero");
    mpz_class tmp;
    return static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

PadicDecomposition padic_decompose(mpq_class const & r, mpz_class const & p)
{
    if (r == 0)
        throw Error(ErrorKind::PreconditionViolated, "ord of zero");
    mpz_class num, den;
    long const e_num = static_cast<long>(
        mpz_remove(num.get_mpz_t(), r.get_num_mpz_t(), p.get_mpz_t()));
    long const e_den = static_cast<long>(
        mpz_remove(den.get_mpz_t(), r.get_den_mpz_t(), p.get_mpz_t()));
    PadicDecomposition out;
    out.ord = e_num - e_den;
    out.unit = mpq_class(num, den);
    out.unit.canonicalize();
    return out;
}

mpz_class unit_residue(mpq_class const & r, mpz_class const & p)
{
    PadicDecomposition const d = padic_decompose(r, p);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), d.unit.get_den_mpz_t(), p.get_mpz_t());
    mpz_class out = d.unit.get_num() * inv;
    mpz_fdiv_r(out.get_mpz_t(), out.get_mpz_t(), p.get_mpz_t());
    return out;
}

TwoAdicDigits two_adic_digits(mpq_class const & r)
{
    PadicDecomposition const d = padic_decompose(r, mpz_class(2));
    /* Odd denominators are their own inverses modulo 8. */
    mpz_class u = d.unit.get_num() * d.unit.get_den();
    mpz_fdiv_r_ui(u.get_mpz_t(), u.get_mpz_t(), 8);
    unsigned long const bits = u.get_ui();
    return TwoAdicDigits{d.ord, int((bits >> 1) & 1), int((bits >> 2) & 1)};
}

bool is_square_in_Qp(mpq_class const & r, mpz_class const & p)
{
    if (p == 2) {
        TwoAdicDigits const t = two_adic_digits(r);
        return t.ord % 2 == 0 && t.a1 == 0 && t.a2 == 0;
    }
    PadicDecomposition const d = padic_decompose(r, p);
    if (d.ord % 2 != 0)
        return false;
    return legendre(unit_residue(r, p), p) == 1;
}

int legendre(mpz_class const & u, mpz_class const & p)
{
    if (p < 3 || mpz_even_p(p.get_mpz_t()))
        throw Error(ErrorKind::PreconditionViolated,
                    "legendre symbol needs an odd prime, got " + p.get_str());
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
    if (r == 0)
        throw Error(ErrorKind::PreconditionViolated,
                    u.get_str() + " is not coprime to " + p.get_str());
    return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

mpz_class least_nonsquare(mpz_class const & p)
{
    for (mpz_class b = 2;; ++b)
        if (legendre(b, p) == -1)
            return b;
}

std::pair<mpz_class, mpz_class>
crt(std::vector<std::pair<mpz_class, mpz_class>> const & congruences)
{
    mpz_class r = 0, m = 1;
    for (auto const & [res, mod] : congruences) {
        if (mod <= 0)
            throw Error(ErrorKind::PreconditionViolated,
                        "crt moduli must be positive");
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), mod.get_mpz_t());
        mpz_class diff = res - r;
        if (!mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t()))
            throw Error(ErrorKind::InconsistentCongruence,
                        "congruences x = " + r.get_str() + " mod " +
                            m.get_str() + " and x = " + res.get_str() +
                            " mod " + mod.get_str() + " are incompatible");
        mpz_class const m_red = m / g;
        mpz_class const mod_red = mod / g;
        mpz_class inv = 0;
        if (mod_red != 1)
            mpz_invert(inv.get_mpz_t(), m_red.get_mpz_t(), mod_red.get_mpz_t());
        mpz_class t = (diff / g) * inv;
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), mod_red.get_mpz_t());
        r += m * t;
        m *= mod_red;
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
    }
    return {r, m};
}

mpz_class prime_in_progression(mpz_class const & residue,
                               mpz_class const & modulus,
                               std::uint64_t max_steps)
{
    if (modulus <= 0)
        throw Error(ErrorKind::PreconditionViolated,
                    "modulus must be positive");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t());
    if (g != 1)
        throw Error(ErrorKind::PreconditionViolated,
                    "progression " + residue.get_str() + " mod " +
                        modulus.get_str() + " holds at most one prime");
    mpz_class q;
    mpz_fdiv_r(q.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t());
    for (std::uint64_t steps = 0; q < 2 || !is_prime(q); q += modulus) {
        if (++steps > max_steps)
            throw Error(ErrorKind::SearchLimitExceeded,
                        "no prime found in progression " + residue.get_str() +
                            " mod " + modulus.get_str() + " within " +
                            std::to_string(max_steps) + " steps");
    }
    return q;
}

mpz_class prime_in_progression(mpz_class const & residue,
                               mpz_class const & modulus)
{
    return prime_in_progression(residue, modulus, default_prime_search_limit());
}

} // namespace wittspan
