#ifndef QUADLAT_VERIFY_HPP
#define QUADLAT_VERIFY_HPP

// Exhaustive cross-checks of the structural results against the search oracles and direct counts.
// Each suite walks every odd prime power q <= qmax and reports instances, failures and skips.

#include <quadlat/io.hpp>
#include <quadlat/morphism_engine.hpp>
#include <quadlat/square_analysis.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace quadlat {

struct VerifyOptions {
    std::uint32_t qmin = 3;
    std::uint32_t qmax = 13;
    std::uint64_t budget = 20'000'000; ///< node limit per search
    std::uint64_t seed = 20240601;
    std::uint32_t weil_samples = 1000;
};

struct VerifyReport {
    std::string theorem;
    std::uint64_t instances = 0;
    std::vector<json> failures; ///< each a self-contained reproducer
    std::uint64_t skipped = 0;  ///< instances abandoned on budget
    double wall_seconds = 0;

    bool ok() const { return failures.empty(); }
};

inline json to_json(const VerifyReport & r)
{
    return {{"theorem", r.theorem}, {"instances", r.instances}, {"failures", r.failures}, {"skipped", r.skipped}, {"wall_seconds", r.wall_seconds}};
}

namespace detail {

    inline json reproducer(const QuadPair & pair, const std::string & what)
    {
        return {{"field", field_json(pair.F())}, {"pair", pair_json(pair)}, {"detail", what}};
    }

    inline json reproducer(const QuadPair & x, const QuadPair & y, const std::string & what)
    {
        return {{"field", field_json(x.F())}, {"pair", pair_json(x)}, {"other", pair_json(y)}, {"detail", what}};
    }

    /// Runs body once per field in range, timing the whole suite.
    template <class Body>
    VerifyReport run_suite(const std::string & id, const VerifyOptions & opt, Body body)
    {
        VerifyReport rep;
        rep.theorem = id;
        const auto t0 = std::chrono::steady_clock::now();
        for (const auto & pp : odd_prime_powers(opt.qmin, opt.qmax))
            body(Field::make(pp.p, pp.d), rep);
        rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return rep;
    }

} // namespace detail

/// Intercalate existence against the excluded-set / N2-condition criterion.
inline VerifyReport verify_n2(const VerifyOptions & opt)
{
    return detail::run_suite("t:n2", opt, [](const FieldPtr & f, VerifyReport & rep) {
        for (const auto & pair : enumerate_valid_pairs(f)) {
            ++rep.instances;
            const auto n = count_intercalates(latin_square(pair));
            if (predicts_intercalate(pair) != (n > 0))
                rep.failures.push_back(detail::reproducer(pair, "criterion disagrees with N = " + std::to_string(n)));
            if (in_excluded_set(pair) && f->q() % 4 != 1)
                rep.failures.push_back(detail::reproducer(pair, "excluded-set member with q = 3 mod 4"));
        }
    });
}

/// Intercalate counts against the zero / q(q-1) / bounded prediction and the row-permutation formula.
inline VerifyReport verify_quadinterc(const VerifyOptions & opt)
{
    return detail::run_suite("t:quadinterc", opt, [](const FieldPtr & f, VerifyReport & rep) {
        for (const auto & pair : enumerate_valid_pairs(f)) {
            ++rep.instances;
            const auto sq = latin_square(pair);
            const auto n = count_intercalates(sq);
            const auto pred = predicted_intercalates(pair);
            if (! pred.admits(n))
                rep.failures.push_back(detail::reproducer(pair, "N = " + std::to_string(n) + " outside " + pred.kind_name() + " prediction"));
            if (pair.a != pair.b && intercalates_via_rows(pair) != n)
                rep.failures.push_back(detail::reproducer(pair, "row-permutation formula gives " + std::to_string(intercalates_via_rows(pair))));
            if (f->q() <= 13 && count_intercalates(sq, IntercalateMethod::CellScan) != n)
                rep.failures.push_back(detail::reproducer(pair, "cell scan disagrees with row-permutation count"));
        }
    });
}

/// Frobenius-orbit criterion against isomorphism search, over all ordered pairs of valid pairs.
inline VerifyReport verify_quadiso(const VerifyOptions & opt)
{
    return detail::run_suite("t:quadiso", opt, [&](const FieldPtr & f, VerifyReport & rep) {
        const auto pairs = enumerate_valid_pairs(f);
        std::vector<LatinSquare> squares;
        for (const auto & p : pairs)
            squares.push_back(latin_square(p));
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = 0; j < pairs.size(); ++j) {
                ++rep.instances;
                try {
                    const bool found = brute_force_isomorphism(squares[i], squares[j], {opt.budget}).has_value();
                    if (found != isomorphic_quad(pairs[i], pairs[j]))
                        rep.failures.push_back(detail::reproducer(pairs[i], pairs[j], found ? "search found an isomorphism" : "search found none"));
                }
                catch (const budget_exhausted &) {
                    ++rep.skipped;
                }
            }
    });
}

/// Isotopy criterion against isotopism search, over all ordered pairs of valid pairs.
inline VerifyReport verify_quadisotop(const VerifyOptions & opt)
{
    return detail::run_suite("t:quadisotop", opt, [&](const FieldPtr & f, VerifyReport & rep) {
        const auto pairs = enumerate_valid_pairs(f);
        std::vector<LatinSquare> squares;
        for (const auto & p : pairs)
            squares.push_back(latin_square(p));
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = 0; j < pairs.size(); ++j) {
                ++rep.instances;
                try {
                    const auto t = brute_force_isotopism(squares[i], squares[j], {opt.budget});
                    if (t.has_value() != isotopic_quad(pairs[i], pairs[j]))
                        rep.failures.push_back(detail::reproducer(pairs[i], pairs[j], t ? "search found an isotopism" : "search found none"));
                }
                catch (const budget_exhausted &) {
                    ++rep.skipped;
                }
            }
    });
}

/// Constructed automorphism groups against exhaustive search.
inline VerifyReport verify_quadaut(const VerifyOptions & opt)
{
    return detail::run_suite("t:quadaut", opt, [&](const FieldPtr & f, VerifyReport & rep) {
        for (const auto & pair : enumerate_valid_pairs(f)) {
            ++rep.instances;
            try {
                const auto built = aut_group(pair, {opt.budget});
                const auto found = brute_force_automorphisms(latin_square(pair), {opt.budget});
                if (built.order != found.order || (built.materialized && built.elements != found.elements))
                    rep.failures.push_back(detail::reproducer(pair, "constructed order " + built.order.str() + ", search order " + found.order.str()));
            }
            catch (const budget_exhausted &) {
                ++rep.skipped;
            }
        }
    });
}

/// For a != b every autotopism is diagonal; for a = b the group has the stated form and order.
inline VerifyReport verify_quadatp(const VerifyOptions & opt)
{
    return detail::run_suite("t:quadatp", opt, [&](const FieldPtr & f, VerifyReport & rep) {
        for (const auto & pair : enumerate_valid_pairs(f)) {
            ++rep.instances;
            try {
                const auto sq = latin_square(pair);
                const auto atp = brute_force_autotopisms(sq, {opt.budget});
                const auto built = atp_group(pair, {opt.budget});
                if (atp.order > atp_upper_bound(f->q()))
                    rep.failures.push_back(detail::reproducer(pair, "autotopism group exceeds the order bound"));
                if (pair.a != pair.b) {
                    const auto aut = brute_force_automorphisms(sq, {opt.budget});
                    std::vector<IsotopismTriple> diag;
                    for (const auto & t : aut.elements)
                        diag.push_back({t, t, t});
                    if (atp.elements != diag)
                        rep.failures.push_back(detail::reproducer(pair, "autotopisms are not the diagonal automorphisms"));
                }
                else if (atp.order != BigInt(f->q()) * f->q() * gl_order(f->p(), f->d()))
                    rep.failures.push_back(detail::reproducer(pair, "autotopism order " + atp.order.str()));
                if (built.materialized ? built.elements != atp.elements : built.order != atp.order)
                    rep.failures.push_back(detail::reproducer(pair, "constructed autotopism group disagrees with search"));
            }
            catch (const budget_exhausted &) {
                ++rep.skipped;
            }
        }
    });
}

/// Type One count is 0 or 2, matches the closed-form criteria, and matches direct classification.
inline VerifyReport verify_t1(const VerifyOptions & opt)
{
    return detail::run_suite("l:t1", opt, [](const FieldPtr & f, VerifyReport & rep) {
        for (const auto & pair : enumerate_valid_pairs(f)) {
            if (pair.a == pair.b)
                continue;
            ++rep.instances;
            const auto t1 = type_one_count(pair);
            if (t1 != 0 && t1 != 2)
                rep.failures.push_back(detail::reproducer(pair, "Type One count " + std::to_string(t1)));
            if (type_one_by_criteria(pair) != t1)
                rep.failures.push_back(detail::reproducer(pair, "closed-form criteria give " + std::to_string(type_one_by_criteria(pair))));
            if (type_one_transpositions(pair) != t1)
                rep.failures.push_back(detail::reproducer(pair, "direct Type One classification gives " + std::to_string(type_one_transpositions(pair))));
            if (in_excluded_set(pair) && t1 != 0)
                rep.failures.push_back(detail::reproducer(pair, "Type One transposition with b in the excluded set"));
        }
    });
}

/// Transposition count trichotomy and the Type One / Type Two / special decomposition.
inline VerifyReport verify_transcount(const VerifyOptions & opt)
{
    return detail::run_suite("l:transcount", opt, [](const FieldPtr & f, VerifyReport & rep) {
        for (const auto & pair : enumerate_valid_pairs(f)) {
            if (pair.a == pair.b)
                continue;
            ++rep.instances;
            const auto m = transposition_count(pair);
            const auto t2 = type_two_count(pair);
            const auto sp = special_transpositions(pair);
            if (in_excluded_set(pair)) {
                if (f->q() >= 169 && ! transposition_bounds(f->q()).contains(static_cast<std::int64_t>(m)))
                    rep.failures.push_back(detail::reproducer(pair, "M = " + std::to_string(m) + " outside bounds"));
            }
            else {
                if (m != 0 && m != 2)
                    rep.failures.push_back(detail::reproducer(pair, "M = " + std::to_string(m)));
                if (t2 != 0 || sp != 0)
                    rep.failures.push_back(detail::reproducer(pair, "Type Two or special transposition outside the excluded set"));
            }
            if (m != type_one_count(pair) + t2 + sp)
                rep.failures.push_back(detail::reproducer(pair, "M = " + std::to_string(m) + " but decomposition sums to " +
                                                                   std::to_string(type_one_count(pair) + t2 + sp)));
        }
    });
}

/// Row permutations follow the translation formula and share the predicted cycle structures.
inline VerifyReport verify_quadrowperms(const VerifyOptions & opt)
{
    return detail::run_suite("l:quadrowperms", opt, [](const FieldPtr & f, VerifyReport & rep) {
        for (const auto & pair : enumerate_valid_pairs(f)) {
            ++rep.instances;
            const auto sq = latin_square(pair);
            bool formula_ok = true;
            for (std::uint32_t i = 0; i < f->q() && formula_ok; ++i)
                for (std::uint32_t j = 0; j < f->q(); ++j)
                    if (i != j && row_permutation(sq, i, j) != row_permutation_formula(pair, Elem{i}, Elem{j})) {
                        rep.failures.push_back(detail::reproducer(pair, "row " + std::to_string(i) + " -> " + std::to_string(j) + " formula mismatch"));
                        formula_ok = false;
                        break;
                    }
            if (! cycle_invariance_check(pair))
                rep.failures.push_back(detail::reproducer(pair, "row permutation cycle structures vary"));
        }
    });
}

/// Random monic-or-not split square-free polynomial of degree 1..max_degree.
inline std::vector<Elem> random_split_polynomial(const Field & f, std::mt19937_64 & rng, std::uint32_t max_degree = 4)
{
    const auto deg = std::uniform_int_distribution<std::uint32_t>(1, std::min(max_degree, f.q()))(rng);
    std::vector<std::uint32_t> pool(f.q());
    std::iota(pool.begin(), pool.end(), 0u);
    std::vector<Elem> roots;
    for (std::uint32_t i = 0; i < deg; ++i) {
        const auto k = std::uniform_int_distribution<std::size_t>(i, pool.size() - 1)(rng);
        std::swap(pool[i], pool[k]);
        roots.push_back(Elem{pool[i]});
    }
    const Elem lead{std::uniform_int_distribution<std::uint32_t>(1, f.q() - 1)(rng)};
    return poly_from_roots(f, lead, roots);
}

/// Character-sum bound on random split square-free polynomials; the generator is seeded per field.
inline VerifyReport verify_weil(const VerifyOptions & opt)
{
    return detail::run_suite("weil", opt, [&](const FieldPtr & f, VerifyReport & rep) {
        std::mt19937_64 rng(opt.seed ^ (std::uint64_t{f->q()} * 0x9E3779B97F4A7C15ull));
        for (std::uint32_t s = 0; s < opt.weil_samples; ++s) {
            ++rep.instances;
            const auto poly = random_split_polynomial(*f, rng);
            if (! weil_check(*f, poly)) {
                json coeffs = json::array();
                for (auto c : poly)
                    coeffs.push_back(c.idx);
                rep.failures.push_back({{"field", field_json(*f)}, {"polynomial", coeffs}, {"char_sum", char_sum(*f, poly)}, {"seed", opt.seed}});
            }
        }
    });
}

using VerifySuite = std::function<VerifyReport(const VerifyOptions &)>;

/// Suites by theorem id, in run order.
inline const std::vector<std::pair<std::string, VerifySuite>> & verify_suites()
{
    static const std::vector<std::pair<std::string, VerifySuite>> suites{
        {"t:n2", verify_n2},           {"t:quadinterc", verify_quadinterc}, {"t:quadiso", verify_quadiso},
        {"t:quadisotop", verify_quadisotop}, {"t:quadaut", verify_quadaut},   {"t:quadatp", verify_quadatp},
        {"l:t1", verify_t1},           {"l:transcount", verify_transcount}, {"l:quadrowperms", verify_quadrowperms},
        {"weil", verify_weil}};
    return suites;
}

} // namespace quadlat

#endif
