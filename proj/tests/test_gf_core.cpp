#include "test_support.hpp"

#include <quadlat/gf_core.hpp>
#include <quadlat/verify.hpp>

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

// true when c_0 + c_1 x + ... + x^d has a root mod p (only a full test for d <= 3)
bool has_root(const std::vector<std::int64_t> & c, std::int64_t p)
{
    for (std::int64_t x = 0; x < p; ++x) {
        std::int64_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;)
            v = (v * x + c[i]) % p;
        if (v == 0)
            return true;
    }
    return false;
}

} // namespace

TEST(Field, PrimeFieldOfOrderSeven)
{
    const auto f = Field::make(7, 1);
    EXPECT_EQ(f->q(), 7u);
    std::vector<std::uint32_t> r;
    for (auto x : f->residues())
        r.push_back(x.idx);
    EXPECT_EQ(r, (std::vector<std::uint32_t>{1, 2, 4}));
    EXPECT_EQ(std::set<std::uint32_t>(r.begin(), r.end()), oracle::squares(*f));
    EXPECT_EQ(f->chi(Elem{3}), -1);
    EXPECT_EQ(f->chi(Elem{0}), 0);
    EXPECT_EQ(f->primitive().idx, 3u);
}

TEST(Field, RejectsBadParameters)
{
    EXPECT_THROW(Field::make(2, 3), invalid_field);
    EXPECT_THROW(Field::make(9, 1), invalid_field);
    EXPECT_THROW(Field::make(3, 0), invalid_field);
    EXPECT_THROW(Field::make(3, 11), invalid_field); // 177147 > 2^16
    EXPECT_NO_THROW(Field::make(3, 10));
    // x^2 + 1 = (x - 2)(x - 3) over F_5
    EXPECT_THROW(Field::make(5, 2, std::vector<std::int64_t>{1, 0, 1}), invalid_field);
    EXPECT_THROW(Field::make(3, 2, std::vector<std::int64_t>{1, 0, 2}), invalid_field);
    EXPECT_THROW(Field::make(3, 2, std::vector<std::int64_t>{1, 1}), invalid_field);
}

TEST(Field, ExplicitModulusIsReduced)
{
    const auto f = Field::make(3, 2, std::vector<std::int64_t>{-1, -1, 1});
    EXPECT_EQ(f->modulus(), (std::vector<std::uint32_t>{2, 2, 1}));
    const auto x = f->parse("x");
    EXPECT_EQ(f->mul(x, x), f->add(x, f->one()));
}

TEST(Field, DefaultModulusIsSmallestIrreducible)
{
    for (std::uint32_t p : {3u, 5u, 7u, 11u})
        for (std::uint32_t d : {2u, 3u}) {
            // constant-term-first lexicographic order of monic c_0 + ... + x^d
            std::vector<std::int64_t> want;
            std::vector<std::int64_t> c(d + 1, 0);
            c[d] = 1;
            for (std::int64_t code = 0;; ++code) {
                auto v = code;
                for (std::uint32_t i = d; i-- > 0;) {
                    c[i] = v % p;
                    v /= p;
                }
                if (! has_root(c, p)) {
                    want = c;
                    break;
                }
            }
            const auto f = Field::make(p, d);
            std::vector<std::int64_t> got(f->modulus().begin(), f->modulus().end());
            EXPECT_EQ(got, want) << "p=" << p << " d=" << d;
        }
}

TEST(Field, ArithmeticMatchesSchoolbookPolynomials)
{
    for (const auto & f : {Field::make(3, 2), Field::make(5, 2), Field::make(3, 3), Field::make(7, 2), Field::make(3, 4)}) {
        for (std::uint32_t x = 0; x < f->q(); ++x)
            for (std::uint32_t y = 0; y < f->q(); ++y) {
                ASSERT_EQ(f->mul(Elem{x}, Elem{y}).idx, oracle::poly_mul(*f, x, y));
                ASSERT_EQ(f->add(Elem{x}, Elem{y}).idx, oracle::poly_add(*f, x, y));
            }
        for (std::uint32_t x = 1; x < f->q(); ++x) {
            EXPECT_EQ(f->mul(Elem{x}, f->inv(Elem{x})), f->one());
            EXPECT_EQ(f->add(Elem{x}, f->neg(Elem{x})), f->zero());
        }
    }
}

TEST(Field, PrimitiveIsSmallestGenerator)
{
    for (const auto & f : fields_up_to(81)) {
        std::uint32_t want = 0;
        for (std::uint32_t g = 1; g < f->q() && want == 0; ++g) {
            std::uint32_t x = g, order = 1;
            while (x != 1) {
                x = oracle::poly_mul(*f, x, g);
                ++order;
            }
            if (order == f->q() - 1)
                want = g;
        }
        EXPECT_EQ(f->primitive().idx, want) << "q=" << f->q();
    }
}

TEST(Field, QuadraticCharacterProperties)
{
    for (const auto & f : fields_up_to(49)) {
        const auto sq = oracle::squares(*f);
        std::size_t plus = 0, minus = 0;
        for (std::uint32_t x = 0; x < f->q(); ++x) {
            ASSERT_EQ(f->chi(Elem{x}), oracle::chi(sq, x));
            plus += f->chi(Elem{x}) == 1;
            minus += f->chi(Elem{x}) == -1;
            for (std::uint32_t y = 0; y < f->q(); ++y)
                ASSERT_EQ(f->chi(f->mul(Elem{x}, Elem{y})), f->chi(Elem{x}) * f->chi(Elem{y}));
        }
        EXPECT_EQ(plus, (f->q() - 1) / 2);
        EXPECT_EQ(minus, (f->q() - 1) / 2);
    }
}

TEST(Field, AutomorphismsAreFieldMaps)
{
    for (const auto & f : fields_up_to(128)) {
        const auto auts = field_automorphisms(*f);
        ASSERT_EQ(auts.size(), f->d());
        for (const auto & theta : auts) {
            std::set<std::uint32_t> image;
            for (std::uint32_t x = 0; x < f->q(); ++x) {
                image.insert(theta.apply(*f, Elem{x}).idx);
                for (std::uint32_t y = 0; y < f->q(); ++y) {
                    ASSERT_EQ(theta.apply(*f, f->add(Elem{x}, Elem{y})), f->add(theta.apply(*f, Elem{x}), theta.apply(*f, Elem{y})));
                    ASSERT_EQ(theta.apply(*f, f->mul(Elem{x}, Elem{y})), f->mul(theta.apply(*f, Elem{x}), theta.apply(*f, Elem{y})));
                }
            }
            EXPECT_EQ(image.size(), f->q());
        }
    }
    // above the exhaustive range the reduced check still runs
    EXPECT_EQ(field_automorphisms(*Field::make(3, 6)).size(), 6u);
}

TEST(Field, FrobeniusFixesTheRightSubfield)
{
    for (const auto & f : {Field::make(3, 2), Field::make(3, 4), Field::make(5, 2), Field::make(3, 6), Field::make(7, 2), Field::make(5, 3)}) {
        for (std::uint32_t e = 0; e <= 2 * f->d(); ++e) {
            std::uint64_t fixed = 0;
            for (std::uint32_t x = 0; x < f->q(); ++x)
                fixed += f->frobenius(Elem{x}, e) == Elem{x};
            std::uint64_t want = 1;
            for (std::uint32_t i = 0; i < std::gcd(e, f->d()); ++i)
                want *= f->p();
            EXPECT_EQ(fixed, want) << "q=" << f->q() << " e=" << e;
        }
    }
}

TEST(Field, SubfieldGenerated)
{
    const auto f9 = Field::make(3, 2);
    EXPECT_EQ(subfield_generated(*f9, {Elem{1}, Elem{2}}).degree, 1u);
    EXPECT_EQ(subfield_generated(*f9, {f9->parse("x")}).degree, 2u);
    EXPECT_EQ(subfield_generated(*f9, {f9->parse("x")}).zeta(3), std::optional<std::uint64_t>(3));

    const auto f729 = Field::make(3, 6);
    const auto k27 = subfield_of_degree(*f729, 3);
    EXPECT_EQ(k27.order, 27u);
    const std::vector<Elem> gens(k27.elements.begin() + 5, k27.elements.begin() + 7);
    const auto gen = subfield_generated(*f729, gens);
    EXPECT_TRUE(gen.degree == 3 || gen.degree == 1);
    for (auto g : gens)
        EXPECT_TRUE(gen.contains(g));
}

TEST(Field, HalfOrderScalingElement)
{
    for (const auto & f : fields_up_to(49)) {
        const auto mu2 = f->mul(f->primitive(), f->primitive());
        std::vector<std::uint32_t> img(f->q());
        for (std::uint32_t x = 0; x < f->q(); ++x)
            img[x] = f->mul(mu2, Elem{x}).idx;
        EXPECT_EQ(Permutation(img).order(), (f->q() - 1) / 2) << "q=" << f->q();
    }
}

TEST(Field, RenderAndParseRoundTrip)
{
    for (const auto & f : {Field::make(3, 2), Field::make(5, 2), Field::make(3, 3), Field::make(13, 1)})
        for (std::uint32_t x = 0; x < f->q(); ++x)
            EXPECT_EQ(f->parse(f->to_string(Elem{x})).idx, x);
    const auto f = Field::make(3, 2);
    EXPECT_EQ(f->to_string(f->from_coeffs(std::vector<std::int64_t>{1, 2})), "2x+1");
    EXPECT_EQ(f->parse("-x+1"), f->from_coeffs(std::vector<std::int64_t>{1, -1}));
    EXPECT_EQ(f->parse("2*x"), f->from_coeffs(std::vector<std::int64_t>{0, 2}));
    EXPECT_THROW(f->parse("x^"), std::invalid_argument);
    EXPECT_THROW(f->parse(""), std::invalid_argument);
}

TEST(Field, ValueWrapperArithmetic)
{
    const auto f = Field::make(7, 1);
    const Fq three(*f, 3);
    EXPECT_TRUE(three * 5 == 1);
    EXPECT_TRUE(1 - three == 5);
    EXPECT_TRUE((three / 2) * 2 == three);
    EXPECT_TRUE(-three == 4);
    EXPECT_TRUE(three.nonresidue());
    EXPECT_EQ(three.pow(6).elem(), f->one());
}

TEST(Field, OddPrimePowers)
{
    std::vector<std::uint32_t> qs;
    for (const auto & pp : odd_prime_powers(3, 49))
        qs.push_back(pp.q);
    EXPECT_EQ(qs, (std::vector<std::uint32_t>{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49}));
}

TEST(CharacterSum, Examples)
{
    const auto f7 = Field::make(7, 1);
    const std::vector<Elem> two_roots = poly_from_roots(*f7, f7->one(), std::vector<Elem>{Elem{0}, Elem{1}});
    EXPECT_TRUE(weil_check(*f7, two_roots));
    EXPECT_LE(std::abs(char_sum(*f7, two_roots)), 1);

    for (const auto & f : fields_up_to(49)) {
        const std::vector<Elem> x{Elem{0}, Elem{1}};
        EXPECT_EQ(char_sum(*f, x), 0);
        EXPECT_TRUE(weil_check(*f, x));
    }

    const auto f25 = Field::make(5, 2);
    const auto quartic = poly_from_roots(*f25, f25->one(), std::vector<Elem>{Elem{0}, Elem{1}, Elem{2}, Elem{3}});
    const auto sq = oracle::squares(*f25);
    std::int64_t direct = 0;
    for (std::uint32_t c = 0; c < 25; ++c)
        direct += oracle::chi(sq, eval_poly(*f25, quartic, Elem{c}).idx);
    EXPECT_EQ(char_sum(*f25, quartic), direct);
    EXPECT_LE(std::abs(direct), 15);
    EXPECT_TRUE(weil_check(*f25, quartic));
}

TEST(CharacterSum, PreconditionsAreReportedSeparately)
{
    const auto f7 = Field::make(7, 1);
    const std::vector<Elem> x_squared{Elem{0}, Elem{0}, Elem{1}};
    const std::vector<Elem> x2_plus_1{Elem{1}, Elem{0}, Elem{1}}; // -1 is a non-square mod 7
    const std::vector<Elem> zero{Elem{0}};
    const std::vector<Elem> constant{Elem{3}};
    EXPECT_THROW(weil_check(*f7, x_squared), precondition_violation);
    EXPECT_THROW(weil_check(*f7, x2_plus_1), precondition_violation);
    EXPECT_THROW(weil_check(*f7, zero), precondition_violation);
    EXPECT_THROW(weil_check(*f7, constant), precondition_violation);
}

TEST(CharacterSum, RandomSplitPolynomials)
{
    for (const auto & f : fields_up_to(49)) {
        std::mt19937_64 rng(f->q());
        const auto sq = oracle::squares(*f);
        for (int i = 0; i < 1000; ++i) {
            const auto poly = random_split_polynomial(*f, rng);
            ASSERT_TRUE(weil_check(*f, poly)) << "q=" << f->q();
            if (i < 20) {
                std::int64_t direct = 0;
                for (std::uint32_t c = 0; c < f->q(); ++c)
                    direct += oracle::chi(sq, eval_poly(*f, poly, Elem{c}).idx);
                ASSERT_EQ(char_sum(*f, poly), direct);
            }
        }
    }
}
