#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wittspan/arith.hpp"
#include "wittspan/error.hpp"
#include "wittspan/knots.hpp"
#include "wittspan/span.hpp"

using namespace wittspan;
using wittspan::testing::Sampler;

namespace {

SeifertMatrix trefoil() { return SeifertMatrix{{{-1, 1}, {0, -1}}}; }

SeifertMatrix stabilize(SeifertMatrix const & v)
{
    std::size_t const n = v.rows.size();
    SeifertMatrix out;
    out.rows.assign(n + 2, std::vector<mpz_class>(n + 2, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.rows[i][j] = v.rows[i][j];
    out.rows[n][n + 1] = 1;
    return out;
}

SeifertMatrix block_sum(SeifertMatrix const & a, SeifertMatrix const & b)
{
    std::size_t const n = a.rows.size();
    std::size_t const m = b.rows.size();
    SeifertMatrix out;
    out.rows.assign(n + m, std::vector<mpz_class>(n + m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.rows[i][j] = a.rows[i][j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            out.rows[n + i][n + j] = b.rows[i][j];
    return out;
}

} // namespace

TEST(Knots, TrefoilFromSeifert)
{
    KnotInput const k{"trefoil", trefoil()};
    DiagonalForm const f = knot_witt_form(k);
    EXPECT_EQ(f, (DiagonalForm{-2, -6}));
    FormInvariants const inv = invariants(f);
    EXPECT_EQ(inv.rank, 2u);
    EXPECT_EQ(inv.signature, -2);
    EXPECT_EQ(inv.disc, 3);
    EXPECT_EQ(knot_det(k), 3);
    EXPECT_EQ(knot_signature(k), -2);
    EXPECT_EQ(del(f), del(DiagonalForm{3}));
    EXPECT_EQ(witt_span(f).ws, 1);
}

TEST(Knots, StabilizationAndConnectedSum)
{
    KnotInput const k{"t", trefoil()};
    KnotInput const s{"t'", stabilize(stabilize(trefoil()))};
    EXPECT_EQ(knot_det(s), knot_det(k));
    EXPECT_EQ(knot_signature(s), knot_signature(k));
    EXPECT_EQ(crosscap_bounds(s).witt_class, crosscap_bounds(k).witt_class);

    KnotInput const twice{"t#t", block_sum(trefoil(), trefoil())};
    EXPECT_EQ(knot_det(twice), 9);
    EXPECT_EQ(knot_signature(twice), -4);
    EXPECT_TRUE(del(knot_witt_form(twice)) ==
                del(knot_witt_form(k)) + del(knot_witt_form(k)));
}

TEST(Knots, BoundsReport)
{
    KnotInput const k{"9_40", DiagonalForm{-10, -30}};
    BoundsReport const r = crosscap_bounds(k);
    EXPECT_EQ(r.ws, 2);
    EXPECT_EQ(r.gamma_c_lower, 2);
    EXPECT_EQ(r.gamma_3_lower, 2);
    EXPECT_EQ(r.signature, -2);
    EXPECT_EQ(r.det, 300);
}

TEST(Knots, RejectsBadSeifertMatrices)
{
    KnotInput const ragged{"x", SeifertMatrix{{{1, 2}, {3}}}};
    EXPECT_THROW(knot_witt_form(ragged), Error);
    KnotInput const singular{"x", SeifertMatrix{{{1, 0}, {0, 0}}}};
    try {
        knot_witt_form(singular);
        FAIL();
    } catch (Error const & e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegenerateForm);
    }
}

TEST(Pretzel, ThreeStrand)
{
    DiagonalForm const f = pretzel_family_witt(ThreeStrandPretzel{41});
    EXPECT_EQ(f, direct_sum(DiagonalForm{82, 410}, repeated(-1, 82)));
    EXPECT_EQ(witt_span(f).ws, 2);
    for (long p : {61L, 101L, 181L}) {
        DiagonalForm const g = pretzel_family_witt(ThreeStrandPretzel{p});
        EXPECT_EQ(witt_span(g).ws, 2) << p;
        EXPECT_EQ(single_prime_span(del(g)).value_or(0), 2) << p;
    }
    EXPECT_THROW(pretzel_family_witt(ThreeStrandPretzel{43}), Error);
    EXPECT_THROW(pretzel_family_witt(ThreeStrandPretzel{21}), Error);
}

TEST(Pretzel, FourStrand)
{
    DiagonalForm const f = pretzel_family_witt(FourStrandPretzel{0});
    EXPECT_EQ(f, direct_sum(DiagonalForm{10, 2, 5}, repeated(-1, 23)));
    EXPECT_EQ(witt_span(f).ws, 3);
    for (long m = 1; m <= 2; ++m)
        EXPECT_EQ(witt_span(pretzel_family_witt(FourStrandPretzel{m})).ws, 3) << m;
    EXPECT_THROW(pretzel_family_witt(FourStrandPretzel{-1}), Error);
    EXPECT_THROW(pretzel_family_witt(FourStrandPretzel{kMaxFourStrandIndex + 1}), Error);
}

TEST(Fixtures, CatalogIsWellFormed)
{
    auto const & all = fixtures();
    EXPECT_GE(all.size(), 10u);
    std::set<std::string> names;
    for (auto const & fx : all) {
        EXPECT_TRUE(names.insert(fx.knot.name).second) << fx.knot.name;
        BoundsReport const r = crosscap_bounds(fx.knot);
        if (fx.expected_ws)
            EXPECT_EQ(r.ws, *fx.expected_ws) << fx.knot.name;
    }
}

TEST(Fixtures, RandomSeifertMatricesAreConsistent)
{
    Sampler s(71);
    int done = 0;
    while (done < 200) {
        auto const n = static_cast<std::size_t>(2 * s.integer(1, 2));
        SeifertMatrix v;
        v.rows.assign(n, std::vector<mpz_class>(n, 0));
        for (auto & row : v.rows)
            for (auto & x : row)
                x = s.integer(-3, 3);
        KnotInput const k{"r", v};
        if (determinant(v.symmetrized()) == 0)
            continue;
        ++done;
        DiagonalForm const f = knot_witt_form(k);
        FormInvariants const inv = invariants(f);
        EXPECT_EQ(inv.disc, squarefree_class(determinant(v.symmetrized())));
        EXPECT_EQ(knot_signature(k), inv.signature);
        EXPECT_EQ(crosscap_bounds(k).witt_class, witt_class(f));
    }
}
