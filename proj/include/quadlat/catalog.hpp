#ifndef QUADLAT_CATALOG_HPP
#define QUADLAT_CATALOG_HPP

// Named cyclotomic orthomorphisms used by the CLI examples and the acceptance suite.

#include <quadlat/gf_core.hpp>
#include <quadlat/quad_quasigroup.hpp>

#include <string>
#include <utility>
#include <vector>

namespace quadlat::catalog {

namespace detail {
    inline CyclotomicMap from_strings(const FieldPtr & f, std::uint32_t n, const std::string & kappa, const std::vector<std::string> & coeffs)
    {
        std::vector<Elem> c;
        for (const auto & s : coeffs)
            c.push_back(f->parse(s));
        return make_cyclotomic(f, n, f->parse(kappa), std::move(c));
    }
} // namespace detail

/// F_9 = F_3[x]/(x^2 - x - 1).
inline FieldPtr f9() { return Field::make(3, 2, std::vector<std::int64_t>{-1, -1, 1}); }

/// F_25 = F_5[x]/(x^2 - x + 2).
inline FieldPtr f25() { return Field::make(5, 2, std::vector<std::int64_t>{2, -1, 1}); }

/// Index-4 orthomorphisms over F_9 with kappa = x.
inline std::pair<CyclotomicMap, CyclotomicMap> f9_pair()
{
    const auto f = f9();
    return {detail::from_strings(f, 4, "x", {"-1", "x+1", "-x+1", "x-1"}), detail::from_strings(f, 4, "x", {"x", "x+1", "-x-1", "-x+1"})};
}

/// Index-6 orthomorphisms over F_25 with kappa = x.
inline std::pair<CyclotomicMap, CyclotomicMap> f25_pair()
{
    const auto f = f25();
    return {detail::from_strings(f, 6, "x", {"2", "-1", "-x-2", "x-1", "2x-2", "2x-2"}),
            detail::from_strings(f, 6, "x", {"2", "-2", "2x", "1-x", "x", "2-2x"})};
}

/// Index-6 orthomorphism over F_7 with kappa = 3.
inline CyclotomicMap q7_index6() { return detail::from_strings(Field::make(7, 1), 6, "3", {"3", "3", "6", "3", "2", "4"}); }

/// The pair (3, 5) over F_7.
inline QuadPair q7_exceptional() { return quad_pair(Field::make(7, 1), Elem{3}, Elem{5}); }

} // namespace quadlat::catalog

#endif
