#include "wittspan/knots.hpp"

#include "wittspan/arith.hpp"
#include "wittspan/error.hpp"
#include "wittspan/span.hpp"

namespace wittspan {

namespace {

template <class... Fs> struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs> Overloaded(Fs...) -> Overloaded<Fs...>;

KnotInput diagonal_knot(std::string name, std::initializer_list<long> entries)
{
    return KnotInput{std::move(name), DiagonalForm(entries)};
}

long signature_of(DiagonalForm const & f)
{
    long s = 0;
    for (auto const & a : f.entries())
        s += sgn(a) > 0 ? 1 : -1;
    return s;
}

} // namespace

SymmetricMatrix SeifertMatrix::symmetrized() const
{
    std::size_t const n = rows.size();
    std::vector<std::vector<mpq_class>> sym(n, std::vector<mpq_class>(n));
    for (auto const & row : rows)
        if (row.size() != n)
            throw Error(ErrorKind::InvalidInput, "Seifert matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            sym[i][j] = rows[i][j] + rows[j][i];
    return SymmetricMatrix(sym);
}

DiagonalForm knot_witt_form(KnotInput const & k)
{
    return std::visit(Overloaded{
                          [](SeifertMatrix const & v) {
                              return diagonalize(v.symmetrized());
                          },
                          [](DiagonalForm const & f) { return f; },
                      },
                      k.presentation);
}

mpz_class knot_det(KnotInput const & k)
{
    return std::visit(Overloaded{
                          [](SeifertMatrix const & v) {
                              mpq_class const d = determinant(v.symmetrized());
                              return mpz_class(abs(d.get_num()));
                          },
                          [](DiagonalForm const & f) {
                              mpz_class d = 1;
                              for (auto const & a : f.entries())
                                  d *= a;
                              return mpz_class(abs(d));
                          },
                      },
                      k.presentation);
}

long knot_signature(KnotInput const & k) { return signature_of(knot_witt_form(k)); }

BoundsReport crosscap_bounds(KnotInput const & k)
{
    DiagonalForm const f = knot_witt_form(k);
    BoundsReport r;
    r.witt_class = witt_class(f);
    r.det = knot_det(k);
    r.signature = r.witt_class.signature;
    r.ws = witt_span(f).ws;
    r.gamma_c_lower = r.ws;
    r.gamma_3_lower = r.ws;
    return r;
}

DiagonalForm pretzel_family_witt(PretzelFamily const & family)
{
    return std::visit(
        Overloaded{
            [](ThreeStrandPretzel const & t) {
                mpz_class const & p = t.p;
                if (p < 2 || !is_prime(p) || p % 20 != 1)
                    throw Error(ErrorKind::PreconditionViolated,
                                "three-strand pretzel needs a prime p = 1 mod 20, got " +
                                    p.get_str());
                if (!p.fits_slong_p() || p > 1'000'000)
                    throw Error(ErrorKind::PreconditionViolated,
                                "three-strand pretzel parameter too large: " +
                                    p.get_str());
                std::vector<mpz_class> e{2 * p, 10 * p};
                e.insert(e.end(), 2 * p.get_ui(), mpz_class(-1));
                return DiagonalForm(e);
            },
            [](FourStrandPretzel const & q) {
                if (q.m < 0 || q.m > kMaxFourStrandIndex)
                    throw Error(ErrorKind::PreconditionViolated,
                                "four-strand index must lie in [0, " +
                                    std::to_string(kMaxFourStrandIndex) +
                                    "], got " + std::to_string(q.m));
                mpz_class count;
                mpz_ui_pow_ui(count.get_mpz_t(), 5, 2 * q.m + 1);
                count += 18;
                std::vector<mpz_class> e{10, 2, 5};
                e.insert(e.end(), count.get_ui(), mpz_class(-1));
                return DiagonalForm(DiagonalForm::Trusted{}, std::move(e));
            },
        },
        family);
}

std::vector<Fixture> const & fixtures()
{
    static std::vector<Fixture> const catalog = [] {
        std::vector<Fixture> out;
        out.push_back({diagonal_knot("9_40", {-10, -30}), 2,
                       {{2, {-2, 0, 2}}}, "rank-2 anisotropic representative"});
        out.push_back({diagonal_knot("7_5", {-1, -1, -3, -51}), 2,
                       {{2, {-2, 2}}}, ""});
        out.push_back({diagonal_knot("9_49", {-2, -14, -10, -70}), 3,
                       {{3, {-3, -1, 1, 3}}}, ""});
        out.push_back({diagonal_knot("T(2,3)", {3}), 1, {}, "torus knot class [p]"});
        out.push_back({diagonal_knot("T(2,5)", {5}), 1, {}, "torus knot class [p]"});
        out.push_back({diagonal_knot("T(2,7)", {7}), 1, {}, "torus knot class [p]"});
        out.push_back({KnotInput{"trefoil-seifert",
                                 SeifertMatrix{{{-1, 1}, {0, -1}}}},
                       1, {}, "Seifert presentation; orientation differs from [3]"});
        out.push_back({diagonal_knot("rank10",
                                     {-35, -21, -20, -15, -3, 55, 77, 78, 98, 150}),
                       2, {}, "del = [1]_3 + [-1]_7 + [b]_13"});
        out.push_back({diagonal_knot("q(-5,3,21,7)", {-5, 3, 21, 7}), std::nullopt,
                       {}, "anisotropic at 3 and over Q"});
        out.push_back({KnotInput{"slice", DiagonalForm{}}, 0, {}, ""});
        out.push_back({KnotInput{"P(41,41,82)",
                                 pretzel_family_witt(ThreeStrandPretzel{41})},
                       2, {}, ""});
        out.push_back({KnotInput{"four-strand(0)",
                                 pretzel_family_witt(FourStrandPretzel{0})},
                       3, {}, ""});
        return out;
    }();
    return catalog;
}

} // namespace wittspan
