#ifndef QUADLAT_SQUARE_ANALYSIS_HPP
#define QUADLAT_SQUARE_ANALYSIS_HPP

// Row permutations, intercalates, and the transposition bookkeeping for omega = r_{0,1} of L[a,b].
//
// A transposition of the row permutation r_{i,j} is exactly an intercalate on rows i and j, so
// intercalates are counted per unordered row pair. For quadratic squares every r_{i,j} has the
// cycle structure of omega[a,b] or omega[b,a], which reduces the count to two permutations.

#include <quadlat/errors.hpp>
#include <quadlat/gf_core.hpp>
#include <quadlat/latin_square.hpp>
#include <quadlat/permutation.hpp>
#include <quadlat/quad_quasigroup.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace quadlat {

/// A signature (z_0, z_1, z_2, z_3) over {-1, 0, 1}.
struct SatSequence {
    std::array<int, 4> z{};

    bool even_periodic() const { return z[0] == z[2] && z[1] == z[3]; }
    bool nonzero() const { return z[0] != 0 && z[1] != 0 && z[2] != 0 && z[3] != 0; }
    std::string to_string() const
    {
        std::string s = "(";
        for (int i = 0; i < 4; ++i)
            s += (i ? "," : "") + std::to_string(z[static_cast<std::size_t>(i)]);
        return s + ")";
    }
    auto operator<=>(const SatSequence &) const = default;
};

/// T_1: signatures of Type One transpositions.
inline const std::vector<SatSequence> & type_one_sequences()
{
    static const std::vector<SatSequence> t1{
        {{-1, -1, -1, 1}}, {{-1, -1, 1, -1}}, {{-1, 1, 1, 1}}, {{1, -1, 1, 1}}};
    return t1;
}

/// T_{2,i}, i in {1,2,3}.
inline const std::vector<SatSequence> & type_two_sequences(int family)
{
    static const std::vector<SatSequence> t21{{{-1, -1, -1, -1}}, {{-1, -1, 1, 1}}, {{-1, 1, 1, -1}}, {{1, 1, 1, 1}}};
    static const std::vector<SatSequence> t22{{{-1, -1, 1, 1}}, {{-1, 1, -1, 1}}, {{-1, 1, 1, -1}}, {{1, -1, 1, -1}}};
    static const std::vector<SatSequence> t23{{{-1, -1, -1, -1}}, {{-1, -1, 1, 1}}, {{-1, 1, -1, 1}},
                                              {{-1, 1, 1, -1}},   {{1, -1, 1, -1}}, {{1, 1, 1, 1}}};
    switch (family) {
    case 1: return t21;
    case 2: return t22;
    case 3: return t23;
    default: throw std::out_of_range("Type Two family must be 1, 2 or 3");
    }
}

/// P_{2,i}: the even periodic members of T_{2,i}.
inline std::vector<SatSequence> periodic_sequences(int family)
{
    std::vector<SatSequence> out;
    for (const auto & z : type_two_sequences(family))
        if (z.even_periodic())
            out.push_back(z);
    return out;
}

/// r_{i,j}: L[i][k] -> L[j][k].
inline Permutation row_permutation(const LatinSquare & sq, std::uint32_t i, std::uint32_t j)
{
    if (i == j)
        throw std::invalid_argument("row permutation needs two distinct rows");
    const auto n = sq.order();
    std::vector<std::uint32_t> img(n);
    for (std::size_t k = 0; k < n; ++k)
        img[sq.at(i, k)] = sq.at(j, k);
    return Permutation(std::move(img));
}

/// tau_j o phi o tau_{i-j} o phi^{-1} o tau_{-i}, with phi = phi[a,b].
inline Permutation row_permutation_formula(const QuadPair & pair, Elem i, Elem j)
{
    require_valid(pair);
    const auto & f = pair.F();
    const auto phi = quadratic_map(pair).as_permutation();
    return translation(f, j) * phi * translation(f, f.sub(i, j)) * phi.inverse() * translation(f, f.neg(i));
}

enum class IntercalateMethod {
    RowPermutations, ///< transpositions of r_{i,j} over unordered row pairs, O(n^3)
    CellScan         ///< every row pair against every column pair, O(n^4); independent oracle
};

/// Number of 2x2 subsquares, each counted once as a {rows} x {columns} configuration.
inline std::uint64_t count_intercalates(const LatinSquare & sq, IntercalateMethod method = IntercalateMethod::RowPermutations)
{
    const auto n = sq.order();
    std::uint64_t total = 0;
    if (method == IntercalateMethod::CellScan) {
        for (std::size_t r1 = 0; r1 < n; ++r1)
            for (std::size_t r2 = r1 + 1; r2 < n; ++r2)
                for (std::size_t c1 = 0; c1 < n; ++c1)
                    for (std::size_t c2 = c1 + 1; c2 < n; ++c2)
                        if (sq.at(r1, c1) == sq.at(r2, c2) && sq.at(r1, c2) == sq.at(r2, c1))
                            ++total;
        return total;
    }
    std::vector<std::uint32_t> img(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k)
                img[sq.at(i, k)] = sq.at(j, k);
            std::uint64_t twice = 0;
            for (std::size_t s = 0; s < n; ++s)
                if (img[s] != s && img[img[s]] == s)
                    ++twice;
            total += twice / 2;
        }
    }
    return total;
}

/// b in {-a, 2-a, a/(2a-1)}.
inline bool in_excluded_set(const QuadPair & pair)
{
    const auto & f = pair.F();
    const Fq a(f, pair.a), b(f, pair.b);
    if (b == -a || b == 2 - a)
        return true;
    const auto den = 2 * a - 1;
    return ! den.is_zero() && b == a / den;
}

/// (2ab-a-b)(a+b)(a-1) a nonzero square and {2(a+b-2)(a-1), 2a(a+b)} non-squares.
/// Defined for valid pairs outside the excluded set.
inline bool n2_condition(const QuadPair & pair)
{
    require_valid(pair);
    if (in_excluded_set(pair))
        throw invalid_pair("N2 condition is only defined for b outside {-a, 2-a, a/(2a-1)}");
    const auto & f = pair.F();
    const Fq a(f, pair.a), b(f, pair.b);
    return ((2 * a * b - a - b) * (a + b) * (a - 1)).residue() && (2 * (a + b - 2) * (a - 1)).nonresidue() &&
           (2 * a * (a + b)).nonresidue();
}

/// Whether L[a,b] has an intercalate, by the excluded-set / N2-condition criterion.
inline bool predicts_intercalate(const QuadPair & pair)
{
    require_valid(pair);
    return in_excluded_set(pair) || n2_condition(pair);
}

namespace detail {

    __extension__ typedef __int128 i128;

    // den * n <= c + k sqrt(q), exactly.
    inline bool le_affine_sqrt(i128 n, i128 c, i128 k, i128 q, i128 den)
    {
        const i128 r = den * n - c;
        if (k >= 0)
            return r <= 0 || r * r <= k * k * q;
        return r <= 0 && r * r >= k * k * q;
    }

    /// floor((c + k sqrt(q)) / den) for den > 0.
    inline std::int64_t floor_affine_sqrt(std::int64_t c, std::int64_t k, std::int64_t q, std::int64_t den)
    {
        const long double approx = (static_cast<long double>(c) + static_cast<long double>(k) * std::sqrt(static_cast<long double>(q))) / den;
        auto n = static_cast<i128>(std::floor(approx));
        while (! le_affine_sqrt(n, c, k, q, den))
            --n;
        while (le_affine_sqrt(n + 1, c, k, q, den))
            ++n;
        return static_cast<std::int64_t>(n);
    }

    /// ceil((c + k sqrt(q)) / den) for den > 0.
    inline std::int64_t ceil_affine_sqrt(std::int64_t c, std::int64_t k, std::int64_t q, std::int64_t den)
    {
        return -floor_affine_sqrt(-c, -k, q, den);
    }

} // namespace detail

/// Integer interval [lo, hi] implied by a real interval with sqrt(q) terms; lo may be negative.
struct IntBounds {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    bool contains(std::int64_t v) const { return std::max<std::int64_t>(lo, 0) <= v && v <= hi; }
};

/// Bounds on the transposition count M of omega when b is in the excluded set:
/// (q - 11 sqrt q - 38)/16 <= M <= (q + 11 sqrt q + 70)/16.
inline IntBounds transposition_bounds(std::uint32_t q)
{
    const std::int64_t Q = q;
    return {detail::ceil_affine_sqrt(Q - 38, -11, Q, 16), detail::floor_affine_sqrt(Q + 70, 11, Q, 16)};
}

/// Bounds on the Type Two count: (q - 11 sqrt q - 38)/16 <= M_2 <= (q + 11 sqrt q + 38)/16.
inline IntBounds type_two_bounds(std::uint32_t q)
{
    const std::int64_t Q = q;
    return {detail::ceil_affine_sqrt(Q - 38, -11, Q, 16), detail::floor_affine_sqrt(Q + 38, 11, Q, 16)};
}

/// q(q-1)(q - 11 sqrt q - 38)/32 <= N <= q(q-1)(q + 11 sqrt q + 70)/32.
inline IntBounds intercalate_bounds(std::uint32_t q)
{
    const std::int64_t Q = q, A = Q * (Q - 1);
    return {detail::ceil_affine_sqrt(A * (Q - 38), -11 * A, Q, 32), detail::floor_affine_sqrt(A * (Q + 70), 11 * A, Q, 32)};
}

struct IntercalatePrediction {
    enum class Kind { Zero, Exact, Bounded };

    Kind kind = Kind::Zero;
    std::uint64_t exact = 0; ///< q(q-1) for Exact
    IntBounds bounds;        ///< for Bounded; lower end read as max(lo, 0)

    bool admits(std::uint64_t n) const
    {
        switch (kind) {
        case Kind::Zero: return n == 0;
        case Kind::Exact: return n == exact;
        case Kind::Bounded: return bounds.contains(static_cast<std::int64_t>(n));
        }
        return false;
    }

    std::string kind_name() const
    {
        switch (kind) {
        case Kind::Zero: return "zero";
        case Kind::Exact: return "exact";
        case Kind::Bounded: return "bounded";
        }
        return "?";
    }
};

inline IntercalatePrediction predicted_intercalates(const QuadPair & pair)
{
    require_valid(pair);
    const std::uint64_t q = pair.F().q();
    IntercalatePrediction pred;
    if (pair.a == pair.b)
        return pred;
    if (in_excluded_set(pair)) {
        pred.kind = IntercalatePrediction::Kind::Bounded;
        pred.bounds = intercalate_bounds(pair.F().q());
    }
    else if (n2_condition(pair)) {
        pred.kind = IntercalatePrediction::Kind::Exact;
        pred.exact = q * (q - 1);
    }
    return pred;
}

/// omega = r_{0,1} of L[a,b] together with phi^{-1}, for the signature machinery.
class OmegaView {
public:
    explicit OmegaView(const QuadPair & pair) : pair_(pair)
    {
        require_valid(pair);
        const auto & f = pair.F();
        const auto q = f.q();
        const auto phi = quadratic_map(pair);
        phi_inv_.assign(q, 0);
        for (std::uint32_t x = 0; x < q; ++x)
            phi_inv_[phi(Elem{x}).idx] = x;
        // Row i of L is k -> i + phi(k - i).
        std::vector<std::uint32_t> img(q);
        for (std::uint32_t k = 0; k < q; ++k) {
            const auto r0 = phi(Elem{k});
            const auto r1 = f.add(f.one(), phi(f.sub(Elem{k}, f.one())));
            img[r0.idx] = r1.idx;
        }
        omega_ = Permutation(std::move(img));
    }

    const QuadPair & pair() const noexcept { return pair_; }
    const Permutation & omega() const noexcept { return omega_; }
    Elem phi_inv(Elem x) const { return Elem{phi_inv_[x.idx]}; }

    /// (chi(j), chi(phi^{-1}(j) - 1), chi(omega(j)), chi(phi^{-1}(omega(j)) - 1)).
    SatSequence signature(Elem j) const
    {
        const auto & f = pair_.F();
        const Elem w{omega_(j.idx)};
        return {{f.chi(j), f.chi(f.sub(phi_inv(j), f.one())), f.chi(w), f.chi(f.sub(phi_inv(w), f.one()))}};
    }

    bool in_two_cycle(Elem j) const { return omega_(omega_(j.idx)) == j.idx; }

    bool satisfies(const SatSequence & z, Elem j) const { return in_two_cycle(j) && signature(j) == z; }

    std::uint64_t count_satisfying(const SatSequence & z) const
    {
        std::uint64_t n = 0;
        for (std::uint32_t j = 0; j < pair_.F().q(); ++j)
            if (satisfies(z, Elem{j}))
                ++n;
        return n;
    }

private:
    QuadPair pair_;
    Permutation omega_;
    std::vector<std::uint32_t> phi_inv_;
};

namespace detail {
    inline void require_distinct(const QuadPair & pair)
    {
        require_valid(pair);
        if (pair.a == pair.b)
            throw invalid_pair("operation requires a != b");
    }
} // namespace detail

/// r_{0,1} of L[a,b].
inline Permutation omega(const QuadPair & pair) { return OmegaView(pair).omega(); }

inline bool satisfies(const QuadPair & pair, const SatSequence & z, Elem j)
{
    detail::require_distinct(pair);
    return OmegaView(pair).satisfies(z, j);
}

/// e(omega, z): the number of j with which omega satisfies z.
inline std::uint64_t count_satisfying(const QuadPair & pair, const SatSequence & z)
{
    detail::require_distinct(pair);
    return OmegaView(pair).count_satisfying(z);
}

/// 1 if -a != b in R_q, 2 if -a != b in N_q, 3 if b = -a.
inline int type_two_family(const QuadPair & pair)
{
    const auto & f = pair.F();
    if (pair.b == f.neg(pair.a))
        return 3;
    return f.is_residue(pair.b) ? 1 : 2;
}

/// Number of sequences in T_1 that omega satisfies; equals the Type One transposition count.
inline std::uint32_t type_one_count(const QuadPair & pair)
{
    detail::require_distinct(pair);
    const OmegaView view(pair);
    std::uint32_t n = 0;
    for (const auto & z : type_one_sequences())
        if (view.count_satisfying(z) > 0)
            ++n;
    return n;
}

/// Closed-form test for "omega satisfies z" for z in T_1, split on whether a is a square.
inline bool type_one_criterion(const QuadPair & pair, const SatSequence & z)
{
    detail::require_distinct(pair);
    const auto & f = pair.F();
    const Fq a(f, pair.a), b(f, pair.b);
    const auto d = a - b;
    auto R = [](Fq v) { return v.residue(); };
    auto N = [](Fq v) { return v.nonresidue(); };
    const auto & t1 = type_one_sequences();
    const auto which = static_cast<std::size_t>(std::find(t1.begin(), t1.end(), z) - t1.begin());
    if (which >= t1.size())
        throw std::invalid_argument("sequence is not in T_1");
    if (a.residue()) {
        switch (which) {
        case 0: return R(2 * (b - 1) * d) && N((2 * a * b - a - b) * d) && N(b * (a + b) * (b - 1) * d) && N(b * (a + b - 2) * d);
        case 1: return R(2 * a * (1 - b) * d) && N((a + b) * (1 - b) * d) && N(b * (a + b - 2 * a * b) * d) && N((2 - a - b) * d);
        case 2: return R((a + b - 2) * d) && R((a - 1) * (a + b) * d) && R(a * (2 * a * b - a - b) * d) && N(2 * b * (a - 1) * d);
        default: return R(a * (2 - a - b) * d) && R((a + b - 2 * a * b) * d) && R(a * (1 - a) * (a + b) * d) && N(2 * (1 - a) * d);
        }
    }
    switch (which) {
    case 0: return R(a * (1 - a) * (a + b) * d) && N(a * (2 - a - b) * d) && N(2 * (1 - a) * d) && N((a + b - 2 * a * b) * d);
    case 1: return R((1 - b) * (a + b) * d) && N(2 * a * (1 - b) * d) && N((2 - a - b) * d) && N(b * (a + b - 2 * a * b) * d);
    case 2: return R(a * (2 * a * b - a - b) * d) && R(2 * b * (a - 1) * d) && R((a + b - 2) * d) && N((a - 1) * (a + b) * d);
    default: return R((2 * a * b - a - b) * d) && R(b * (a + b - 2) * d) && R(2 * (b - 1) * d) && N(b * (b - 1) * (a + b) * d);
    }
}

/// Number of T_1 sequences accepted by the closed-form criteria.
inline std::uint32_t type_one_by_criteria(const QuadPair & pair)
{
    std::uint32_t n = 0;
    for (const auto & z : type_one_sequences())
        if (type_one_criterion(pair, z))
            ++n;
    return n;
}

/// Type One transpositions counted directly: 2-cycles (j, omega(j)) avoiding 0 and a whose
/// signature at j or at omega(j) lies in T_1.
inline std::uint64_t type_one_transpositions(const QuadPair & pair)
{
    detail::require_distinct(pair);
    const OmegaView view(pair);
    const auto & t1 = type_one_sequences();
    const auto & w = view.omega();
    std::uint64_t n = 0;
    for (const auto & c : w.cycles()) {
        if (c.size() != 2)
            continue;
        if (c[0] == 0 || c[1] == 0 || c[0] == pair.a.idx || c[1] == pair.a.idx)
            continue;
        const auto s0 = view.signature(Elem{c[0]}), s1 = view.signature(Elem{c[1]});
        if (std::find(t1.begin(), t1.end(), s0) != t1.end() || std::find(t1.begin(), t1.end(), s1) != t1.end())
            ++n;
    }
    return n;
}

/// Type Two count: sum over T_{2,i} \ P_{2,i} of e(omega, z) plus half the sum over P_{2,i}.
inline std::uint64_t type_two_count(const QuadPair & pair)
{
    detail::require_distinct(pair);
    const OmegaView view(pair);
    std::uint64_t aperiodic = 0, periodic = 0;
    for (const auto & z : type_two_sequences(type_two_family(pair))) {
        const auto e = view.count_satisfying(z);
        (z.even_periodic() ? periodic : aperiodic) += e;
    }
    if (periodic % 2 != 0)
        throw std::logic_error("periodic Type Two sequences satisfied an odd number of times");
    return aperiodic + periodic / 2;
}

/// Transpositions among the cycles of omega through 0 and through a.
inline std::uint64_t special_transpositions(const QuadPair & pair)
{
    detail::require_distinct(pair);
    const auto w = omega(pair);
    const bool zero_two = w.cycle_length_at(0) == 2;
    const bool a_two = w.cycle_length_at(pair.a.idx) == 2;
    const bool same = w(0) == pair.a.idx;
    return (zero_two ? 1u : 0u) + (a_two && ! (zero_two && same) ? 1u : 0u);
}

/// M: the number of 2-cycles of omega.
inline std::uint64_t transposition_count(const QuadPair & pair)
{
    detail::require_distinct(pair);
    return omega(pair).cycle_structure().transpositions();
}

/// N from M = transpositions of omega[a,b] and M' = those of omega[b,a]:
/// q = 3 mod 4 gives N = M q(q-1)/2, q = 1 mod 4 gives N = (M + M') q(q-1)/4.
inline std::uint64_t intercalates_via_rows(const QuadPair & pair)
{
    detail::require_distinct(pair);
    const std::uint64_t q = pair.F().q();
    const auto m = transposition_count(pair);
    if (q % 4 == 3)
        return m * q * (q - 1) / 2;
    const auto m2 = transposition_count(pair.swapped());
    return (m + m2) * q * (q - 1) / 4;
}

/// Every r_{i,j} of L[a,b] has the cycle structure of omega[a,b], except that for q = 1 mod 4
/// those with chi(j - i) = -1 match omega[b,a] instead.
inline bool cycle_invariance_check(const QuadPair & pair)
{
    require_valid(pair);
    const auto & f = pair.F();
    const auto q = f.q();
    const auto sq = latin_square(pair);
    const auto base = row_permutation(sq, 0, 1).cycle_structure();
    const auto alt = q % 4 == 1 ? row_permutation(latin_square(pair.swapped()), 0, 1).cycle_structure() : base;
    for (std::uint32_t i = 0; i < q; ++i)
        for (std::uint32_t j = 0; j < q; ++j) {
            if (i == j)
                continue;
            const auto & want = f.chi(f.sub(Elem{j}, Elem{i})) == 1 ? base : alt;
            if (row_permutation(sq, i, j).cycle_structure() != want)
                return false;
        }
    return true;
}

} // namespace quadlat

#endif
