#include "test_support.hpp"

#include <quadlat/catalog.hpp>
#include <quadlat/morphism_engine.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace quadlat;

namespace {

std::vector<FieldPtr> fields_up_to(std::uint32_t hi)
{
    std::vector<FieldPtr> out;
    for (const auto & pp : odd_prime_powers(3, hi))
        out.push_back(Field::make(pp.p, pp.d));
    return out;
}

std::vector<Permutation> naive_automorphisms(const LatinSquare & L)
{
    std::vector<Permutation> out;
    for (auto & t : oracle::automorphisms(L))
        out.emplace_back(std::move(t));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IsotopismTriple> naive_autotopisms(const LatinSquare & L)
{
    std::vector<IsotopismTriple> out;
    for (auto & t : oracle::isotopisms(L, L))
        out.push_back({Permutation(t.alpha), Permutation(t.beta), Permutation(t.gamma)});
    std::sort(out.begin(), out.end());
    return out;
}

template <class E>
E compose_elem(const E & x, const E & y)
{
    if constexpr (std::is_same_v<E, Permutation>)
        return x * y;
    else
        return IsotopismTriple{x.alpha * y.alpha, x.beta * y.beta, x.gamma * y.gamma};
}

template <class E>
E inverse_elem(const E & x)
{
    if constexpr (std::is_same_v<E, Permutation>)
        return x.inverse();
    else
        return IsotopismTriple{x.alpha.inverse(), x.beta.inverse(), x.gamma.inverse()};
}

/// Full closure check for small groups, random products otherwise.
template <class E>
void expect_group(const std::vector<E> & g)
{
    ASSERT_FALSE(g.empty());
    auto has = [&](const E & x) { return std::binary_search(g.begin(), g.end(), x); };
    for (const auto & x : g)
        ASSERT_TRUE(has(inverse_elem(x)));
    if (g.size() <= 1200) {
        for (const auto & x : g)
            for (const auto & y : g)
                ASSERT_TRUE(has(compose_elem(x, y)));
    }
    else {
        std::mt19937_64 rng(g.size());
        std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
        for (int i = 0; i < 20000; ++i)
            ASSERT_TRUE(has(compose_elem(g[pick(rng)], g[pick(rng)])));
    }
    ASSERT_TRUE(has(compose_elem(g.front(), inverse_elem(g.front()))));
}

} // namespace

TEST(Criteria, Isomorphism)
{
    const auto f7 = Field::make(7, 1);
    const auto p35 = quad_pair(f7, Elem{3}, Elem{5});
    EXPECT_TRUE(isomorphic_quad(p35, p35.swapped()));
    for (const auto & other : enumerate_valid_pairs(f7)) {
        if (! ((other.a.idx == 3 && other.b.idx == 5) || (other.a.idx == 5 && other.b.idx == 3))) {
            EXPECT_FALSE(isomorphic_quad(p35, other));
        }
    }

    const auto f9 = Field::make(3, 2);
    for (const auto & pair : enumerate_valid_pairs(f9)) {
        const auto img = quad_pair(f9, f9->pow(pair.a, 3), f9->pow(pair.b, 3));
        EXPECT_TRUE(isomorphic_quad(pair, img));
    }
    EXPECT_THROW(isomorphic_quad(p35, quad_pair(Field::make(11, 1), Elem{3}, Elem{3})), std::invalid_argument);
    EXPECT_THROW(isomorphic_quad(p35, quad_pair(f7, Elem{1}, Elem{1})), invalid_pair);
}

TEST(Criteria, Isotopy)
{
    for (const auto & f : fields_up_to(13)) {
        const auto pairs = enumerate_valid_pairs(f);
        for (const auto & x : pairs)
            for (const auto & y : pairs) {
                if (x.a == x.b && y.a == y.b)
                    EXPECT_TRUE(isotopic_quad(x, y));
                else if ((x.a == x.b) != (y.a == y.b))
                    EXPECT_FALSE(isotopic_quad(x, y));
                else
                    EXPECT_EQ(isotopic_quad(x, y), isomorphic_quad(x, y));
            }
    }
    EXPECT_THROW(isotopic_quad(quad_pair(Field::make(7, 1), Elem{3}, Elem{3}), quad_pair(Field::make(3, 2), Elem{2}, Elem{2})),
                 std::invalid_argument);
}

TEST(Criteria, IsomorphismIsAnEquivalence)
{
    for (const auto & f : fields_up_to(13)) {
        const auto pairs = enumerate_valid_pairs(f);
        const auto n = pairs.size();
        std::vector<std::vector<char>> rel(n, std::vector<char>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                rel[i][j] = isomorphic_quad(pairs[i], pairs[j]);
        for (std::size_t i = 0; i < n; ++i) {
            ASSERT_TRUE(rel[i][i]);
            for (std::size_t j = 0; j < n; ++j) {
                ASSERT_EQ(rel[i][j], rel[j][i]);
                if (rel[i][j])
                    for (std::size_t k = 0; k < n; ++k) {
                        if (rel[j][k]) {
                            ASSERT_TRUE(rel[i][k]);
                        }
                    }
            }
        }
    }
}

TEST(AutGroup, SevenElementOrders)
{
    const auto f7 = Field::make(7, 1);
    for (const auto & pair : enumerate_valid_pairs(f7)) {
        const auto naive = naive_automorphisms(latin_square(pair));
        const auto g = aut_group(pair);
        ASSERT_TRUE(g.materialized);
        EXPECT_EQ(g.elements, naive);
        EXPECT_EQ(g.order, naive.size());
        const bool exceptional = (pair.a.idx == 3 && pair.b.idx == 5) || (pair.a.idx == 5 && pair.b.idx == 3);
        if (exceptional) {
            EXPECT_EQ(g.order, 168);
            EXPECT_EQ(g.label, "PSL2(7)");
        }
        else if (pair.a == pair.b)
            EXPECT_EQ(g.order, 42);
        else
            EXPECT_EQ(g.order, 21);
    }
    // no generic a != b pair exists over F_7 (all valid a != b pairs are {3,5})
    const auto f11 = Field::make(11, 1);
    for (const auto & pair : enumerate_valid_pairs(f11)) {
        if (pair.a != pair.b) {
            EXPECT_EQ(aut_group(pair).order, 11 * 5);
        }
    }
}

TEST(AutGroup, MatchesSearchUpToThirteen)
{
    for (const auto & f : fields_up_to(13))
        for (const auto & pair : enumerate_valid_pairs(f)) {
            const auto g = aut_group(pair);
            const auto s = brute_force_automorphisms(latin_square(pair));
            ASSERT_EQ(g.order, s.order) << "q=" << f->q() << " a=" << pair.a.idx << " b=" << pair.b.idx;
            ASSERT_EQ(g.elements, s.elements);
        }
}

TEST(AutGroup, GroupAxiomsAndTranslations)
{
    for (const auto & f : fields_up_to(27))
        for (const auto & pair : enumerate_valid_pairs(f)) {
            const auto g = aut_group(pair);
            ASSERT_TRUE(g.materialized) << "q=" << f->q();
            const auto L = latin_square(pair);
            for (const auto & t : g.elements)
                ASSERT_TRUE(is_automorphism(L, t));
            expect_group(g.elements);
            for (std::uint32_t c = 0; c < f->q(); ++c)
                ASSERT_TRUE(std::binary_search(g.elements.begin(), g.elements.end(), translation(*f, Elem{c})));
            ASSERT_LE(g.order, atp_upper_bound(f->q()));
        }
}

TEST(AutGroup, TwistedCase)
{
    // over F_9 with K = F_9, zeta = 3: pairs with b = a^3 pick up the non-square family
    const auto f9 = Field::make(3, 2);
    std::size_t twisted = 0;
    for (const auto & pair : enumerate_valid_pairs(f9)) {
        if (pair.a == pair.b)
            continue;
        const auto g = aut_group(pair);
        if (pair.b == f9->pow(pair.a, 3)) {
            ++twisted;
            EXPECT_EQ(g.label, "AGammaL1tw");
        }
        EXPECT_EQ(g.order, brute_force_automorphisms(latin_square(pair)).order);
    }
    EXPECT_GT(twisted, 0u);
}

TEST(AutGroup, LargeFieldsCarryOrderOnly)
{
    const auto f = Field::make(29, 1);
    const auto pair = enumerate_valid_pairs(f).front();
    const auto g = aut_group(pair);
    EXPECT_FALSE(g.materialized);
    EXPECT_TRUE(g.elements.empty());
    EXPECT_GT(g.order, 0);
}

TEST(AtpGroup, SevenElementOrders)
{
    const auto f7 = Field::make(7, 1);
    for (const auto & pair : enumerate_valid_pairs(f7)) {
        const auto g = atp_group(pair);
        const auto naive = naive_autotopisms(latin_square(pair));
        EXPECT_EQ(g.elements, naive);
        if (pair.a == pair.b)
            EXPECT_EQ(g.order, 294);
        else {
            EXPECT_EQ(g.order, 168);
            for (const auto & t : g.elements)
                EXPECT_TRUE(t.diagonal());
        }
    }
}

TEST(AtpGroup, AdditiveTableOfFive)
{
    const auto L = additive_cayley_table(*Field::make(5, 1));
    EXPECT_EQ(naive_autotopisms(L).size(), 100u);
    const auto g = brute_force_autotopisms(L);
    EXPECT_EQ(g.order, 100);
    EXPECT_EQ(g.elements, naive_autotopisms(L));
    // automorphisms of a group table are the group automorphisms: x -> cx on (F_7,+)
    EXPECT_EQ(brute_force_automorphisms(additive_cayley_table(*Field::make(7, 1))).order, 6);
}

TEST(AtpGroup, DiagonalForDistinctParameters)
{
    for (const auto & f : fields_up_to(9))
        for (const auto & pair : enumerate_valid_pairs(f)) {
            const auto L = latin_square(pair);
            const auto atp = brute_force_autotopisms(L);
            if (pair.a != pair.b) {
                std::vector<IsotopismTriple> diag;
                for (const auto & t : brute_force_automorphisms(L).elements)
                    diag.push_back({t, t, t});
                ASSERT_EQ(atp.elements, diag);
            }
            ASSERT_EQ(atp_group(pair).elements, atp.elements);
            expect_group(atp.elements);
            ASSERT_LE(atp.order, atp_upper_bound(f->q()));
        }
}

TEST(AtpGroup, EqualParametersOrder)
{
    for (const auto & f : fields_up_to(13))
        for (const auto & pair : enumerate_valid_pairs(f)) {
            if (pair.a != pair.b)
                continue;
            const auto g = atp_group(pair);
            ASSERT_EQ(g.order, BigInt(f->q()) * f->q() * gl_order(f->p(), f->d()));
            ASSERT_EQ(brute_force_autotopisms(latin_square(pair)).order, g.order);
        }
}

TEST(AtpGroup, CyclotomicIndexSixOnSeven)
{
    const auto L = quasigroup_from_orthomorphism(catalog::q7_index6());
    EXPECT_EQ(naive_automorphisms(L).size(), 7u);
    EXPECT_EQ(naive_autotopisms(L).size(), 168u);
    EXPECT_EQ(brute_force_automorphisms(L).order, 7);
    EXPECT_EQ(brute_force_autotopisms(L).order, 168);
}

namespace {

// Over F_9 the pairs {c+x, c-x}, c in F_3, i.e. b = a^3 with a != b, fall into one isomorphism
// class although x^3 = -x fixes each pair as a set.
bool nine_element_exception(const QuadPair & x, const QuadPair & y)
{
    const auto & f = x.F();
    auto in_class = [&](const QuadPair & p) { return p.a != p.b && p.b == f.frobenius(p.a, 1); };
    return f.q() == 9 && in_class(x) && in_class(y) && ! isomorphic_quad(x, y);
}

} // namespace

TEST(Search, IsotopismExistenceMatchesCriteria)
{
    std::size_t exceptions = 0;
    for (const auto & f : fields_up_to(9)) {
        const auto pairs = enumerate_valid_pairs(f);
        for (const auto & x : pairs)
            for (const auto & y : pairs) {
                const auto lx = latin_square(x), ly = latin_square(y);
                const auto t = brute_force_isotopism(lx, ly);
                const auto iso = brute_force_isomorphism(lx, ly);
                if (t) {
                    ASSERT_TRUE(is_isotopism(lx, ly, *t));
                }
                if (iso) {
                    ASSERT_TRUE(is_isotopism(lx, ly, {*iso, *iso, *iso}));
                }
                ASSERT_EQ(brute_force_isotopism(lx, ly, {}, false).has_value(), t.has_value());
                if (nine_element_exception(x, y)) {
                    // the criteria say no; the search finds a verified isomorphism
                    ++exceptions;
                    ASSERT_FALSE(isotopic_quad(x, y));
                    ASSERT_TRUE(iso.has_value());
                    ASSERT_TRUE(t.has_value());
                    continue;
                }
                ASSERT_EQ(t.has_value(), isotopic_quad(x, y)) << "q=" << f->q() << " " << x.a.idx << "," << x.b.idx << " vs " << y.a.idx << "," << y.b.idx;
                ASSERT_EQ(iso.has_value(), isomorphic_quad(x, y)) << "q=" << f->q() << " " << x.a.idx << "," << x.b.idx << " vs " << y.a.idx << "," << y.b.idx;
            }
    }
    EXPECT_EQ(exceptions, 24u);
}

TEST(Search, NineElementCounterexample)
{
    // F_3[x]/(x^2+1): the F_3-linear map c0 + c1 x -> (c0 + c1) + c1 x carries L[x,-x] to L[1+x,1-x]
    const auto f = Field::make(3, 2, std::vector<std::int64_t>{1, 0, 1});
    const auto x = f->parse("x");
    const auto p = quad_pair(f, x, f->neg(x));
    const auto r = quad_pair(f, f->parse("x+1"), f->parse("1-x"));
    ASSERT_TRUE(p.valid && r.valid);
    EXPECT_FALSE(isomorphic_quad(p, r));
    std::vector<std::uint32_t> img(9);
    for (std::uint32_t e = 0; e < 9; ++e)
        img[e] = (e % 3 + e / 3) % 3 + 3 * (e / 3);
    const Permutation sigma(img);
    EXPECT_TRUE(is_isotopism(latin_square(p), latin_square(r), {sigma, sigma, sigma}));
}

TEST(Search, NaiveIsotopyAgreesOnSeven)
{
    const auto f7 = Field::make(7, 1);
    const auto pairs = enumerate_valid_pairs(f7);
    for (const auto & x : pairs)
        for (const auto & y : pairs) {
            const auto lx = latin_square(x), ly = latin_square(y);
            EXPECT_EQ(! oracle::isotopisms(lx, ly, true).empty(), brute_force_isotopism(lx, ly, {}, false).has_value());
        }
}

TEST(Search, SelfIsotopismIsIdentity)
{
    const auto L = latin_square(quad_pair(Field::make(11, 1), Elem{2}, Elem{6}));
    const auto t = brute_force_isotopism(L, L);
    ASSERT_TRUE(t.has_value());
    EXPECT_TRUE(t->alpha.is_identity());
    EXPECT_TRUE(t->beta.is_identity());
    EXPECT_TRUE(t->gamma.is_identity());
}

TEST(Search, EqualParametersToAddition)
{
    for (const auto & f : fields_up_to(13))
        for (std::uint32_t a = 2; a < f->q(); ++a) {
            const auto pair = quad_pair(f, Elem{a}, Elem{a});
            if (! pair.valid)
                continue;
            const auto L = latin_square(pair), add = additive_cayley_table(*f);
            const IsotopismTriple t{scaling(*f, f->sub(f->one(), Elem{a})), scaling(*f, Elem{a}), Permutation::identity(f->q())};
            EXPECT_TRUE(is_isotopism(L, add, t));
            EXPECT_TRUE(brute_force_isotopism(L, add).has_value());
        }
}

TEST(Search, IndexFourPairOverNine)
{
    const auto [m1, m2] = catalog::f9_pair();
    const auto l1 = quasigroup_from_orthomorphism(m1), l2 = quasigroup_from_orthomorphism(m2);
    const auto t = brute_force_isotopism(l1, l2);
    ASSERT_TRUE(t.has_value());
    EXPECT_TRUE(is_isotopism(l1, l2, *t));
    EXPECT_FALSE(brute_force_isomorphism(l1, l2).has_value());
    EXPECT_TRUE(oracle::isotopisms(l1, l2, true).size() == 1);
}

TEST(Search, BudgetIsEnforced)
{
    const auto L = latin_square(quad_pair(Field::make(13, 1), Elem{4}, Elem{4}));
    try {
        brute_force_autotopisms(L, {50});
        FAIL() << "expected budget exhaustion";
    }
    catch (const budget_exhausted & e) {
        EXPECT_GT(e.nodes_visited, 50u);
    }
    EXPECT_THROW(brute_force_isotopism(L, latin_square(quad_pair(Field::make(11, 1), Elem{2}, Elem{2}))), std::invalid_argument);
}

TEST(Parastrophes, LatinAndInvertible)
{
    const auto L = latin_square(quad_pair(Field::make(7, 1), Elem{3}, Elem{5}));
    const auto ps = parastrophes(L);
    ASSERT_EQ(ps.size(), 6u);
    EXPECT_EQ(ps.front(), L);
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_TRUE(LatinSquare::has_latin_property(ps[i].order(), ps[i].cells()));
        const auto perm = parastrophe_orders()[i];
        std::array<int, 3> inv{};
        for (int k = 0; k < 3; ++k)
            inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])] = k;
        EXPECT_EQ(parastrophe(ps[i], inv), L);
    }
    // transposing a commutative table changes nothing
    const auto add = additive_cayley_table(*Field::make(7, 1));
    EXPECT_EQ(parastrophe(add, {1, 0, 2}), add);
    EXPECT_THROW(parastrophe(add, {0, 0, 1}), std::invalid_argument);

    for (const auto & f : fields_up_to(13))
        for (const auto & pair : enumerate_valid_pairs(f))
            for (const auto & p : parastrophes(latin_square(pair)))
                ASSERT_TRUE(LatinSquare::has_latin_property(p.order(), p.cells()));
}

TEST(Bound, Values)
{
    EXPECT_EQ(atp_upper_bound(1), 1);
    EXPECT_EQ(atp_upper_bound(7), 49 * 6 * 5);
    EXPECT_EQ(atp_upper_bound(8), 64 * 7 * 6 * 4);
    EXPECT_THROW(atp_upper_bound(0), std::invalid_argument);
    // the elementary abelian group of order 8 attains the bound
    const auto z2cubed = [] {
        std::vector<std::vector<std::uint32_t>> rows(8, std::vector<std::uint32_t>(8));
        for (std::uint32_t x = 0; x < 8; ++x)
            for (std::uint32_t y = 0; y < 8; ++y)
                rows[x][y] = x ^ y;
        return LatinSquare::from_rows(rows);
    }();
    EXPECT_EQ(brute_force_autotopisms(z2cubed).order, atp_upper_bound(8));
    EXPECT_EQ(oracle::isotopisms(z2cubed, z2cubed).size(), 10752u);
    // large orders stay exact
    EXPECT_EQ(atp_upper_bound(65536) % 65536, 0);
}

TEST(LinearMaps, CountsMatchGeneralLinearGroups)
{
    EXPECT_EQ(gl_order(3, 2), 48);
    EXPECT_EQ(gl_order(2, 3), 168);
    for (const auto & [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {5, 2}, {3, 3}, {7, 2}, {13, 1}}) {
        const auto f = Field::make(p, d);
        const auto maps = linear_bijections(*f, subfield_of_degree(*f, 1));
        ASSERT_EQ(maps.size(), gl_order(p, d));
        for (const auto & m : maps)
            for (std::uint32_t x = 0; x < f->q(); ++x)
                for (std::uint32_t y = 0; y < f->q(); ++y)
                    ASSERT_EQ(m(f->add(Elem{x}, Elem{y}).idx), f->add(Elem{m(x)}, Elem{m(y)}).idx);
        EXPECT_EQ(linear_bijections(*f, subfield_of_degree(*f, d)).size(), f->q() - 1);
    }
}
