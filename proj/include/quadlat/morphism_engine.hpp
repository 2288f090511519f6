#ifndef QUADLAT_MORPHISM_ENGINE_HPP
#define QUADLAT_MORPHISM_ENGINE_HPP

// Isomorphism and isotopy of quadratic quasigroups, their automorphism and autotopism groups,
// parastrophes, and brute-force search oracles for all of it.
//
// An isotopism (alpha, beta, gamma) from L to L' satisfies L'[alpha(x)][beta(y)] = gamma(L[x][y]);
// an isomorphism is an isotopism with alpha = beta = gamma.

#include <quadlat/errors.hpp>
#include <quadlat/gf_core.hpp>
#include <quadlat/latin_square.hpp>
#include <quadlat/permutation.hpp>
#include <quadlat/quad_quasigroup.hpp>
#include <quadlat/square_analysis.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <string>
#include <vector>

namespace quadlat {

using BigInt = boost::multiprecision::cpp_int;

struct IsotopismTriple {
    Permutation alpha; ///< rows
    Permutation beta;  ///< columns
    Permutation gamma; ///< symbols

    bool diagonal() const { return alpha == beta && beta == gamma; }
    auto operator<=>(const IsotopismTriple &) const = default;
};

inline bool is_isotopism(const LatinSquare & src, const LatinSquare & dst, const IsotopismTriple & t)
{
    const auto n = src.order();
    if (dst.order() != n || t.alpha.size() != n || t.beta.size() != n || t.gamma.size() != n)
        return false;
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            if (dst.at(t.alpha(x), t.beta(y)) != t.gamma(src.at(x, y)))
                return false;
    return true;
}

inline bool is_automorphism(const LatinSquare & sq, const Permutation & theta)
{
    return is_isotopism(sq, sq, {theta, theta, theta});
}

/// A permutation group given by its elements (when materialized), its order and a structural tag.
template <class Element>
struct GroupDesc {
    std::vector<Element> elements; ///< sorted, distinct; empty when not materialized
    BigInt order = 0;
    std::string label;
    bool materialized = false;
};

using AutGroup = GroupDesc<Permutation>;
using AtpGroup = GroupDesc<IsotopismTriple>;

/// Explicit element lists are produced only up to this order of field and group.
inline constexpr std::uint32_t max_materialized_q = 27;
inline constexpr std::uint64_t max_materialized_elements = 1u << 19;

namespace detail {
    inline void require_same_field(const QuadPair & x, const QuadPair & y)
    {
        if (! x.F().same_as(y.F()))
            throw std::invalid_argument("pairs live over different fields");
    }

    template <class E>
    void finish_group(GroupDesc<E> & g)
    {
        std::sort(g.elements.begin(), g.elements.end());
        g.elements.erase(std::unique(g.elements.begin(), g.elements.end()), g.elements.end());
        g.materialized = true;
        g.order = g.elements.size();
    }
} // namespace detail

/// {a,b} = {theta(a'), theta(b')} for some Frobenius power theta.
inline bool isomorphic_quad(const QuadPair & x, const QuadPair & y)
{
    require_valid(x);
    require_valid(y);
    detail::require_same_field(x, y);
    const auto & f = x.F();
    for (std::uint32_t e = 0; e < f.d(); ++e) {
        const auto ta = f.frobenius(y.a, e), tb = f.frobenius(y.b, e);
        if ((x.a == ta && x.b == tb) || (x.a == tb && x.b == ta))
            return true;
    }
    return false;
}

/// Isomorphic, or both of the form (c, c).
inline bool isotopic_quad(const QuadPair & x, const QuadPair & y)
{
    if (isomorphic_quad(x, y))
        return true;
    return x.a == x.b && y.a == y.b;
}

/// |GL_k(Q)| = prod_{i<k} (Q^k - Q^i).
inline BigInt gl_order(std::uint64_t field_order, std::uint32_t k)
{
    BigInt qk = 1;
    for (std::uint32_t i = 0; i < k; ++i)
        qk *= field_order;
    BigInt out = 1, qi = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        out *= qk - qi;
        qi *= field_order;
    }
    return out;
}

/// n^2 prod_{i=1}^{floor(log2 n)} (n - 2^{i-1}): an upper bound on |Atp| of any quasigroup of order n.
inline BigInt atp_upper_bound(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("order must be positive");
    BigInt out = BigInt(n) * n;
    const auto terms = static_cast<std::uint32_t>(std::bit_width(n) - 1);
    for (std::uint32_t i = 1; i <= terms; ++i)
        out *= n - (std::uint64_t{1} << (i - 1));
    return out;
}

/// Every K-linear bijection of F_q, as permutations of element indices.
inline std::vector<Permutation> linear_bijections(const Field & f, const SubfieldDesc & k_field)
{
    const auto q = f.q();
    const auto & kel = k_field.elements;
    const auto dim = f.d() / k_field.degree;

    auto span_with = [&](std::vector<std::uint8_t> span, Elem v) {
        std::vector<std::uint8_t> out(q, 0);
        for (std::uint32_t s = 0; s < q; ++s)
            if (span[s])
                for (auto c : kel)
                    out[f.add(Elem{s}, f.mul(c, v)).idx] = 1;
        return out;
    };

    std::vector<Elem> basis;
    std::vector<std::uint8_t> span(q, 0);
    span[0] = 1;
    for (std::uint32_t x = 1; x < q && basis.size() < dim; ++x)
        if (! span[x]) {
            basis.push_back(Elem{x});
            span = span_with(span, Elem{x});
        }

    // combos[t] lists the K-coordinates of the element with mixed-radix code t.
    std::vector<std::vector<std::uint32_t>> coords;
    std::vector<std::uint32_t> target;
    {
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < dim; ++i)
            total *= kel.size();
        for (std::uint64_t t = 0; t < total; ++t) {
            std::vector<std::uint32_t> c(dim);
            auto v = t;
            Elem x = f.zero();
            for (std::uint32_t i = 0; i < dim; ++i) {
                c[i] = static_cast<std::uint32_t>(v % kel.size());
                v /= kel.size();
                x = f.add(x, f.mul(kel[c[i]], basis[i]));
            }
            coords.push_back(std::move(c));
            target.push_back(x.idx);
        }
    }

    std::vector<Permutation> out;
    std::vector<Elem> images;
    std::vector<std::vector<std::uint8_t>> spans{std::vector<std::uint8_t>(q, 0)};
    spans[0][0] = 1;
    auto rec = [&](auto && self) -> void {
        if (images.size() == dim) {
            std::vector<std::uint32_t> img(q);
            for (std::size_t t = 0; t < coords.size(); ++t) {
                Elem y = f.zero();
                for (std::uint32_t i = 0; i < dim; ++i)
                    y = f.add(y, f.mul(kel[coords[t][i]], images[i]));
                img[target[t]] = y.idx;
            }
            out.emplace_back(std::move(img));
            return;
        }
        for (std::uint32_t v = 1; v < q; ++v) {
            if (spans.back()[v])
                continue;
            images.push_back(Elem{v});
            spans.push_back(span_with(spans.back(), Elem{v}));
            self(self);
            spans.pop_back();
            images.pop_back();
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

/// Bounds for the brute-force oracles.
struct SearchLimits {
    std::uint64_t max_nodes = 50'000'000;
};

namespace detail {

    /// Depth-first isotopism search with full propagation: in every cell (x, y), any two of
    /// alpha(x), beta(y), gamma(L[x][y]) force the third through the target square. In linked
    /// mode the three maps are one map, which turns the search into an isomorphism search.
    class IsotopismSearch {
    public:
        IsotopismSearch(const LatinSquare & src, const LatinSquare & dst, bool linked, std::uint64_t max_nodes)
            : n_(static_cast<std::uint32_t>(src.order())), src_(src), dst_(dst), linked_(linked), max_nodes_(max_nodes)
        {
            if (src.order() != dst.order())
                throw std::invalid_argument("squares have different orders");
            const auto n = n_;
            src_col_of_.assign(std::size_t{n} * n, 0);
            dst_col_of_.assign(std::size_t{n} * n, 0);
            dst_row_of_.assign(std::size_t{n} * n, 0);
            for (std::uint32_t r = 0; r < n; ++r)
                for (std::uint32_t c = 0; c < n; ++c) {
                    src_col_of_[std::size_t{r} * n + src.at(r, c)] = c;
                    dst_col_of_[std::size_t{r} * n + dst.at(r, c)] = c;
                    dst_row_of_[std::size_t{c} * n + dst.at(r, c)] = r;
                }
            for (auto & m : fwd_)
                m.assign(n, none);
            for (auto & m : bwd_)
                m.assign(n, none);
        }

        /// Calls visit(alpha, beta, gamma) for every isotopism; visit returns false to stop.
        template <class Visit>
        void run(Visit && visit)
        {
            stop_ = false;
            dfs(visit);
        }

        std::uint64_t nodes() const noexcept { return nodes_; }

    private:
        static constexpr std::int32_t none = -1;
        enum : int { rows = 0, cols = 1, syms = 2 };

        int slot(int kind) const { return linked_ ? 0 : kind; }
        std::int32_t get(int kind, std::uint32_t x) const { return fwd_[static_cast<std::size_t>(slot(kind))][x]; }

        bool assign(int kind, std::uint32_t x, std::uint32_t y)
        {
            auto & fwd = fwd_[static_cast<std::size_t>(slot(kind))];
            auto & bwd = bwd_[static_cast<std::size_t>(slot(kind))];
            if (fwd[x] == static_cast<std::int32_t>(y))
                return true;
            if (fwd[x] != none || bwd[y] != none)
                return false;
            fwd[x] = static_cast<std::int32_t>(y);
            bwd[y] = static_cast<std::int32_t>(x);
            trail_.push_back({slot(kind), x});
            queue_.push_back({slot(kind), x});
            return true;
        }

        void undo(std::size_t mark)
        {
            while (trail_.size() > mark) {
                auto [s, x] = trail_.back();
                trail_.pop_back();
                auto & fwd = fwd_[static_cast<std::size_t>(s)];
                bwd_[static_cast<std::size_t>(s)][static_cast<std::uint32_t>(fwd[x])] = none;
                fwd[x] = none;
            }
        }

        bool process_row(std::uint32_t r)
        {
            const auto A = static_cast<std::uint32_t>(get(rows, r));
            for (std::uint32_t c = 0; c < n_; ++c) {
                const auto sym = src_.at(r, c);
                const auto B = get(cols, c);
                if (B != none) {
                    if (! assign(syms, sym, dst_.at(A, static_cast<std::uint32_t>(B))))
                        return false;
                }
                else if (const auto G = get(syms, sym); G != none) {
                    if (! assign(cols, c, dst_col_of_[std::size_t{A} * n_ + static_cast<std::uint32_t>(G)]))
                        return false;
                }
            }
            return true;
        }

        bool process_col(std::uint32_t c)
        {
            const auto B = static_cast<std::uint32_t>(get(cols, c));
            for (std::uint32_t r = 0; r < n_; ++r) {
                const auto sym = src_.at(r, c);
                const auto A = get(rows, r);
                if (A != none) {
                    if (! assign(syms, sym, dst_.at(static_cast<std::uint32_t>(A), B)))
                        return false;
                }
                else if (const auto G = get(syms, sym); G != none) {
                    if (! assign(rows, r, dst_row_of_[std::size_t{B} * n_ + static_cast<std::uint32_t>(G)]))
                        return false;
                }
            }
            return true;
        }

        bool process_sym(std::uint32_t s)
        {
            const auto G = static_cast<std::uint32_t>(get(syms, s));
            for (std::uint32_t r = 0; r < n_; ++r) {
                const auto c = src_col_of_[std::size_t{r} * n_ + s];
                const auto A = get(rows, r);
                if (A != none) {
                    if (! assign(cols, c, dst_col_of_[std::size_t{static_cast<std::uint32_t>(A)} * n_ + G]))
                        return false;
                }
                else if (const auto B = get(cols, c); B != none) {
                    if (! assign(rows, r, dst_row_of_[std::size_t{static_cast<std::uint32_t>(B)} * n_ + G]))
                        return false;
                }
            }
            return true;
        }

        bool propagate()
        {
            while (! queue_.empty()) {
                auto [s, x] = queue_.back();
                queue_.pop_back();
                if (linked_) {
                    if (! process_row(x) || ! process_col(x) || ! process_sym(x))
                        return false;
                }
                else if (! (s == rows ? process_row(x) : s == cols ? process_col(x) : process_sym(x)))
                    return false;
            }
            return true;
        }

        // Branch on alpha(0), then beta(0), then the first open alpha, then the first open beta.
        bool choose(int & kind, std::uint32_t & x) const
        {
            auto first_open = [&](int k) -> std::int32_t {
                for (std::uint32_t i = 0; i < n_; ++i)
                    if (get(k, i) == none)
                        return static_cast<std::int32_t>(i);
                return none;
            };
            if (linked_) {
                const auto i = first_open(rows);
                kind = rows;
                x = static_cast<std::uint32_t>(i);
                return i != none;
            }
            const auto open_r = first_open(rows), open_c = first_open(cols);
            const bool any_r = open_r != 0, any_c = open_c != 0;
            if (! any_r) {
                kind = rows;
                x = 0;
                return true;
            }
            if (! any_c) {
                kind = cols;
                x = 0;
                return true;
            }
            if (open_r != none) {
                kind = rows;
                x = static_cast<std::uint32_t>(open_r);
                return true;
            }
            if (open_c != none) {
                kind = cols;
                x = static_cast<std::uint32_t>(open_c);
                return true;
            }
            return false;
        }

        template <class Visit>
        void dfs(Visit & visit)
        {
            if (stop_)
                return;
            if (++nodes_ > max_nodes_)
                throw budget_exhausted(nodes_);
            int kind = rows;
            std::uint32_t x = 0;
            if (! choose(kind, x)) {
                emit(visit);
                return;
            }
            const auto s = static_cast<std::size_t>(slot(kind));
            for (std::uint32_t y = 0; y < n_ && ! stop_; ++y) {
                if (bwd_[s][y] != none)
                    continue;
                const auto mark = trail_.size();
                queue_.clear();
                if (assign(kind, x, y) && propagate())
                    dfs(visit);
                undo(mark);
            }
        }

        template <class Visit>
        void emit(Visit & visit)
        {
            auto as_perm = [&](int kind) {
                const auto & m = fwd_[static_cast<std::size_t>(slot(kind))];
                std::vector<std::uint32_t> img(n_);
                for (std::uint32_t i = 0; i < n_; ++i) {
                    if (m[i] == none)
                        throw std::logic_error("isotopism search reached a leaf with an open symbol");
                    img[i] = static_cast<std::uint32_t>(m[i]);
                }
                return Permutation(std::move(img));
            };
            IsotopismTriple t{as_perm(rows), as_perm(cols), as_perm(syms)};
            if (! is_isotopism(src_, dst_, t))
                throw std::logic_error("isotopism search produced an invalid triple");
            if (! visit(std::move(t)))
                stop_ = true;
        }

        std::uint32_t n_;
        const LatinSquare & src_;
        const LatinSquare & dst_;
        bool linked_;
        std::uint64_t max_nodes_;
        std::uint64_t nodes_ = 0;
        bool stop_ = false;
        std::vector<std::uint32_t> src_col_of_, dst_col_of_, dst_row_of_;
        std::array<std::vector<std::int32_t>, 3> fwd_, bwd_;
        std::vector<std::pair<int, std::uint32_t>> trail_, queue_;
    };

    inline std::vector<CycleStructure> row_cycle_profile(const LatinSquare & sq)
    {
        std::vector<CycleStructure> out;
        for (std::uint32_t i = 0; i < sq.order(); ++i)
            for (std::uint32_t j = 0; j < sq.order(); ++j)
                if (i != j)
                    out.push_back(row_permutation(sq, i, j).cycle_structure());
        std::sort(out.begin(), out.end());
        return out;
    }

} // namespace detail

/// All automorphisms of a Latin square, found by exhaustive search.
inline AutGroup brute_force_automorphisms(const LatinSquare & sq, SearchLimits limits = {})
{
    AutGroup g;
    g.label = "search";
    detail::IsotopismSearch search(sq, sq, true, limits.max_nodes);
    search.run([&](IsotopismTriple t) {
        g.elements.push_back(std::move(t.alpha));
        return true;
    });
    detail::finish_group(g);
    return g;
}

/// All autotopisms of a Latin square, found by exhaustive search.
inline AtpGroup brute_force_autotopisms(const LatinSquare & sq, SearchLimits limits = {})
{
    AtpGroup g;
    g.label = "search";
    detail::IsotopismSearch search(sq, sq, false, limits.max_nodes);
    search.run([&](IsotopismTriple t) {
        g.elements.push_back(std::move(t));
        return true;
    });
    detail::finish_group(g);
    return g;
}

/// Same-order check plus the cheap isotopism invariants: intercalate count and the multiset of
/// cycle structures of all row permutations.
inline bool isotopism_invariants_agree(const LatinSquare & x, const LatinSquare & y)
{
    if (x.order() != y.order())
        return false;
    if (count_intercalates(x) != count_intercalates(y))
        return false;
    return detail::row_cycle_profile(x) == detail::row_cycle_profile(y);
}

/// Some isotopism from src to dst, if one exists.
inline std::optional<IsotopismTriple> brute_force_isotopism(const LatinSquare & src, const LatinSquare & dst, SearchLimits limits = {},
                                                            bool invariant_filter = true)
{
    if (src.order() != dst.order())
        throw std::invalid_argument("squares have different orders");
    if (invariant_filter && ! isotopism_invariants_agree(src, dst))
        return std::nullopt;
    std::optional<IsotopismTriple> found;
    detail::IsotopismSearch search(src, dst, false, limits.max_nodes);
    search.run([&](IsotopismTriple t) {
        found = std::move(t);
        return false;
    });
    return found;
}

/// Some isomorphism from src to dst, if one exists.
inline std::optional<Permutation> brute_force_isomorphism(const LatinSquare & src, const LatinSquare & dst, SearchLimits limits = {})
{
    if (src.order() != dst.order())
        throw std::invalid_argument("squares have different orders");
    std::optional<Permutation> found;
    detail::IsotopismSearch search(src, dst, true, limits.max_nodes);
    search.run([&](IsotopismTriple t) {
        found = std::move(t.alpha);
        return false;
    });
    return found;
}

/// Aut(Q_{a,b}) from its known description:
///   a = b:                    tau_mu o sigma, sigma K-linear              (AGL_k(K))
///   |K| = zeta^2, b = a^zeta: nu theta(x) + mu, nu square, and nu theta(x^zeta) + mu, nu non-square
///   q = 7, {a,b} = {3,5}:     found by search (PSL_2(7), order 168)
///   otherwise:                nu theta(x) + mu, nu square, theta in Gal(F_q | K)
/// where K is the subfield generated by a and b. Listed elements are checked against the table.
inline AutGroup aut_group(const QuadPair & pair, SearchLimits limits = {})
{
    require_valid(pair);
    const auto & f = pair.F();
    const auto q = f.q();
    const auto kf = subfield_generated(f, {pair.a, pair.b});
    const auto rel_degree = f.d() / kf.degree;

    AutGroup g;
    if (q == 7 && ((pair.a.idx == 3 && pair.b.idx == 5) || (pair.a.idx == 5 && pair.b.idx == 3))) {
        g = brute_force_automorphisms(latin_square(pair), limits);
        g.label = "PSL2(7)";
        return g;
    }

    const auto zeta = kf.zeta(f.p());
    const bool twisted = pair.a != pair.b && zeta && pair.b == f.pow(pair.a, *zeta);
    if (pair.a == pair.b) {
        g.order = BigInt(q) * gl_order(kf.order, rel_degree);
        g.label = "AGL(" + std::to_string(rel_degree) + "," + std::to_string(kf.order) + ")";
    }
    else {
        g.order = BigInt(q) * ((q - 1) / 2) * rel_degree * (twisted ? 2 : 1);
        g.label = twisted ? "AGammaL1tw" : "AGamma2L1";
    }
    if (q > max_materialized_q || g.order > max_materialized_elements)
        return g;

    const auto expected = g.order;
    std::vector<Permutation> translations;
    for (std::uint32_t mu = 0; mu < q; ++mu)
        translations.push_back(translation(f, Elem{mu}));

    if (pair.a == pair.b) {
        for (const auto & sigma : linear_bijections(f, kf))
            for (const auto & tau : translations)
                g.elements.push_back(tau * sigma);
    }
    else {
        auto add_family = [&](const std::vector<Elem> & multipliers, bool zeta_power) {
            for (std::uint32_t t = 0; t < rel_degree; ++t) {
                const FieldAut theta{t * kf.degree};
                for (auto nu : multipliers)
                    for (std::uint32_t mu = 0; mu < q; ++mu) {
                        std::vector<std::uint32_t> img(q);
                        for (std::uint32_t x = 0; x < q; ++x) {
                            const auto base = zeta_power ? f.pow(Elem{x}, *zeta) : Elem{x};
                            img[x] = f.add(f.mul(nu, theta.apply(f, base)), Elem{mu}).idx;
                        }
                        g.elements.emplace_back(std::move(img));
                    }
            }
        };
        add_family(f.residues(), false);
        if (twisted)
            add_family(f.nonresidues(), true);
    }
    detail::finish_group(g);
    if (g.order != expected)
        throw std::logic_error("automorphism family has " + g.order.str() + " distinct maps, expected " + expected.str());
    const auto sq = latin_square(pair);
    for (const auto & theta : g.elements)
        if (! is_automorphism(sq, theta))
            throw std::logic_error("listed map is not an automorphism of the square");
    return g;
}

/// Atp(Q_{a,b}). For a != b every autotopism is an automorphism, so this is the diagonal of
/// aut_group. For a = b it is every
///   (lambda_{1-a}^{-1} theta tau_u lambda_{1-a}, lambda_a^{-1} theta tau_v lambda_a, theta tau_{u+v})
/// with theta additive and u, v in F_q, of order q^2 |GL_d(p)|.
inline AtpGroup atp_group(const QuadPair & pair, SearchLimits limits = {})
{
    require_valid(pair);
    const auto & f = pair.F();
    const auto q = f.q();
    AtpGroup g;
    if (pair.a != pair.b) {
        auto aut = aut_group(pair, limits);
        g.order = aut.order;
        g.label = aut.label;
        if (aut.materialized) {
            for (auto & theta : aut.elements)
                g.elements.push_back({theta, theta, theta});
            g.materialized = true;
        }
        return g;
    }

    g.order = BigInt(q) * q * gl_order(f.p(), f.d());
    g.label = "Tq^2:GL(" + std::to_string(f.d()) + "," + std::to_string(f.p()) + ")";
    if (q > max_materialized_q || g.order > max_materialized_elements)
        return g;

    const auto expected = g.order;
    const auto a = pair.a;
    const auto one_minus_a = f.sub(f.one(), a);
    const auto row_scale = scaling(f, one_minus_a), col_scale = scaling(f, a);
    const auto row_unscale = row_scale.inverse(), col_unscale = col_scale.inverse();
    std::vector<Permutation> translations;
    for (std::uint32_t u = 0; u < q; ++u)
        translations.push_back(translation(f, Elem{u}));
    for (const auto & theta : linear_bijections(f, subfield_of_degree(f, 1)))
        for (std::uint32_t u = 0; u < q; ++u)
            for (std::uint32_t v = 0; v < q; ++v)
                g.elements.push_back({row_unscale * theta * translations[u] * row_scale, col_unscale * theta * translations[v] * col_scale,
                                      theta * translations[f.add(Elem{u}, Elem{v}).idx]});
    detail::finish_group(g);
    if (g.order != expected)
        throw std::logic_error("autotopism family has " + g.order.str() + " distinct triples, expected " + expected.str());
    const auto sq = latin_square(pair);
    for (const auto & t : g.elements)
        if (! is_isotopism(sq, sq, t))
            throw std::logic_error("listed triple is not an autotopism of the square");
    return g;
}

/// The parastrophe that sends each triple t = (x, y, L[x][y]) to the cell (t[perm[0]], t[perm[1]])
/// with symbol t[perm[2]].
inline LatinSquare parastrophe(const LatinSquare & sq, std::array<int, 3> perm)
{
    auto sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{0, 1, 2})
        throw std::invalid_argument("coordinate permutation must be a permutation of {0,1,2}");
    const auto n = sq.order();
    std::vector<std::uint32_t> cells(n * n);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            const std::array<std::uint32_t, 3> t{x, y, sq.at(x, y)};
            cells[std::size_t{t[static_cast<std::size_t>(perm[0])]} * n + t[static_cast<std::size_t>(perm[1])]] =
                t[static_cast<std::size_t>(perm[2])];
        }
    return LatinSquare(n, std::move(cells));
}

/// Coordinate permutations in lexicographic order; the first is the identity.
inline const std::array<std::array<int, 3>, 6> & parastrophe_orders()
{
    static const std::array<std::array<int, 3>, 6> orders{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    return orders;
}

/// The six parastrophes, in the order of parastrophe_orders().
inline std::vector<LatinSquare> parastrophes(const LatinSquare & sq)
{
    std::vector<LatinSquare> out;
    for (const auto & perm : parastrophe_orders())
        out.push_back(parastrophe(sq, perm));
    return out;
}

} // namespace quadlat

#endif
