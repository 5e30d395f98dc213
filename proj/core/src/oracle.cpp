#include "wittspan/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "wittspan/arith.hpp"
#include "wittspan/error.hpp"

namespace wittspan::oracle {

namespace {

std::atomic<std::uint64_t> g_max_modulus{std::uint64_t(1) << 24};

/*
 * Values a x^2 mod M split by whether x is a unit. The unit layer is
 * periodic with a small period; both layers are stored projected onto
 * Z/quotient, which is a multiple of that period.
 */
struct Layers {
    std::uint64_t period = 1;
    std::uint64_t quotient = 1;
    std::vector<char> units;
    std::vector<char> nonunits;
};

Layers compute_layers(std::uint64_t a, std::uint64_t p, std::uint64_t modulus,
                      std::uint64_t quotient_floor)
{
    std::vector<bool> unit_values(modulus, false);
    std::vector<bool> other_values(modulus, false);
    for (std::uint64_t x = 0; x < modulus; ++x) {
        std::uint64_t const v = (a * ((x * x) % modulus)) % modulus;
        if (x % p == 0)
            other_values[v] = true;
        else
            unit_values[v] = true;
    }

    Layers out;
    out.period = modulus;
    for (std::uint64_t step = 1; step < modulus; step *= p) {
        bool closed = true;
        for (std::uint64_t v = 0; v < modulus && closed; ++v)
            if (unit_values[v] && !unit_values[(v + step) % modulus])
                closed = false;
        if (closed) {
            out.period = step;
            break;
        }
    }
    out.quotient = std::min(modulus, std::max(out.period, quotient_floor));
    out.units.assign(out.quotient, 0);
    out.nonunits.assign(out.quotient, 0);
    for (std::uint64_t v = 0; v < modulus; ++v) {
        if (unit_values[v])
            out.units[v % out.quotient] = 1;
        if (other_values[v])
            out.nonunits[v % out.quotient] = 1;
    }
    return out;
}

class LayerCache
{
    std::mutex mutex_;
    std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, Layers> entries_;

  public:
    Layers get(std::uint64_t a, std::uint64_t p, std::uint64_t modulus,
               std::uint64_t quotient_floor)
    {
        auto const key = std::make_tuple(a, p, modulus);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = entries_.find(key);
            if (it != entries_.end() && it->second.quotient >= quotient_floor)
                return it->second;
        }
        Layers fresh = compute_layers(a, p, modulus, quotient_floor);
        std::lock_guard<std::mutex> lock(mutex_);
        entries_[key] = fresh;
        return fresh;
    }
};

LayerCache & layer_cache()
{
    static LayerCache cache;
    return cache;
}

std::vector<char> project(std::vector<char> const & set, std::uint64_t q)
{
    std::vector<char> out(q, 0);
    for (std::uint64_t v = 0; v < set.size(); ++v)
        if (set[v])
            out[v % q] = 1;
    return out;
}

std::vector<char> sumset(std::vector<char> const & s, std::vector<char> const & t)
{
    std::uint64_t const q = s.size();
    std::vector<char> out(q, 0);
    for (std::uint64_t i = 0; i < q; ++i) {
        if (!s[i])
            continue;
        for (std::uint64_t j = 0; j < q; ++j)
            if (t[j])
                out[(i + j) % q] = 1;
    }
    return out;
}

} // namespace

std::uint64_t default_max_modulus() noexcept { return g_max_modulus.load(); }
void set_default_max_modulus(std::uint64_t modulus) noexcept
{
    g_max_modulus.store(modulus);
}

unsigned lifting_exponent(DiagonalForm const & f, mpz_class const & p)
{
    long max_ord = 0;
    for (auto const & a : f.entries())
        max_ord = std::max(max_ord, padic_ord(a, p));
    return static_cast<unsigned>(2 * max_ord + (p == 2 ? 5 : 3));
}

bool mod_pk_solvable(DiagonalForm const & f, mpz_class const & p,
                     std::uint64_t max_modulus)
{
    if (f.rank() <= 1)
        return false;
    unsigned const k = lifting_exponent(f, p);
    if (!p.fits_ulong_p() || p > max_modulus)
        throw Error(ErrorKind::OracleTooLarge,
                    "prime " + p.get_str() + " is too large for the oracle");
    std::uint64_t const pp = p.get_ui();
    std::uint64_t modulus = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (modulus > max_modulus / pp)
            throw Error(ErrorKind::OracleTooLarge,
                        "search modulus " + p.get_str() + "^" +
                            std::to_string(k) + " exceeds the oracle limit");
        modulus *= pp;
    }

    std::uint64_t floor = 1;
    for (unsigned i = 0; i < (pp == 2 ? 5u : 3u) && floor * pp <= modulus; ++i)
        floor *= pp;

    std::vector<std::uint64_t> coeffs;
    for (auto const & a : f.entries()) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), modulus);
        coeffs.push_back(r.get_ui());
    }

    std::vector<Layers> layers;
    std::uint64_t q = 1;
    for (auto c : coeffs) {
        layers.push_back(layer_cache().get(c, pp, modulus, floor));
        q = std::max(q, layers.back().period);
    }
    for (std::size_t i = 0; i < layers.size(); ++i)
        if (layers[i].quotient < q)
            layers[i] = layer_cache().get(coeffs[i], pp, modulus, q);

    /* Each primitive sum contains a unit-layer term, so it is q-periodic and
       zero mod M exactly when its image in Z/q contains zero. */
    std::vector<char> primitive(q, 0), nonprimitive(q, 0);
    nonprimitive[0] = 1;
    for (auto const & layer : layers) {
        auto const units = project(layer.units, q);
        auto const others = project(layer.nonunits, q);
        std::vector<char> all(q);
        for (std::uint64_t v = 0; v < q; ++v)
            all[v] = units[v] | others[v];
        auto next_primitive = sumset(primitive, all);
        auto const lifted = sumset(nonprimitive, units);
        for (std::uint64_t v = 0; v < q; ++v)
            next_primitive[v] |= lifted[v];
        nonprimitive = sumset(nonprimitive, others);
        primitive = std::move(next_primitive);
    }
    return primitive[0] != 0;
}

bool mod_pk_solvable(DiagonalForm const & f, mpz_class const & p)
{
    return mod_pk_solvable(f, p, default_max_modulus());
}

} // namespace wittspan::oracle
