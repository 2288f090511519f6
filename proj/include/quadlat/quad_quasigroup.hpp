#ifndef QUADLAT_QUAD_QUASIGROUP_HPP
#define QUADLAT_QUAD_QUASIGROUP_HPP

// Quadratic quasigroups Q_{a,b} on F_q, their Latin squares, and cyclotomic maps of index n.
//
//   x *_{a,b} y = x                if y = x
//               = x + a (y - x)    if y - x is a nonzero square
//               = x + b (y - x)    otherwise
//
// which is x + phi(y - x) for the index-2 cyclotomic map phi = phi[a,b].

#include <quadlat/errors.hpp>
#include <quadlat/gf_core.hpp>
#include <quadlat/latin_square.hpp>
#include <quadlat/permutation.hpp>

#include <optional>
#include <string>
#include <vector>

namespace quadlat {

struct QuadPair {
    FieldPtr field;
    Elem a;
    Elem b;
    bool valid = false;

    const Field & F() const { return *field; }
    /// The same field with a and b swapped.
    QuadPair swapped() const { return {field, b, a, valid}; }
};

/// {ab, (a-1)(b-1)} both nonzero squares: the exact condition for *_{a,b} to be a quasigroup.
inline bool is_valid_pair(const Field & f, Elem a, Elem b)
{
    const Fq A(f, a), B(f, b);
    return (A * B).residue() && ((A - 1) * (B - 1)).residue();
}

inline bool is_valid_pair(const QuadPair & pair) { return is_valid_pair(pair.F(), pair.a, pair.b); }

/// Pairs are always constructible; invalid ones carry valid = false and are refused downstream.
inline QuadPair quad_pair(FieldPtr f, Elem a, Elem b)
{
    if (! f->contains(a) || ! f->contains(b))
        throw std::out_of_range("pair element outside the field");
    const bool v = is_valid_pair(*f, a, b);
    return {std::move(f), a, b, v};
}

inline void require_valid(const QuadPair & pair)
{
    if (! pair.valid)
        throw invalid_pair("(" + pair.F().to_string(pair.a) + ", " + pair.F().to_string(pair.b) +
                           ") is not a valid pair: ab and (a-1)(b-1) must both be nonzero squares");
}

inline Elem quad_op(const QuadPair & pair, Elem x, Elem y)
{
    require_valid(pair);
    const auto & f = pair.F();
    const auto diff = f.sub(y, x);
    switch (f.chi(diff)) {
    case 0: return x;
    case 1: return f.add(x, f.mul(pair.a, diff));
    default: return f.add(x, f.mul(pair.b, diff));
    }
}

inline LatinSquare latin_square(const QuadPair & pair)
{
    require_valid(pair);
    const auto q = pair.F().q();
    std::vector<std::uint32_t> cells(static_cast<std::size_t>(q) * q);
    for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y)
            cells[static_cast<std::size_t>(x) * q + y] = quad_op(pair, Elem{x}, Elem{y}).idx;
    return LatinSquare(q, std::move(cells));
}

/// Every valid (a,b) in index order (a major).
inline std::vector<QuadPair> enumerate_valid_pairs(const FieldPtr & f)
{
    std::vector<QuadPair> out;
    for (std::uint32_t a = 0; a < f->q(); ++a)
        for (std::uint32_t b = 0; b < f->q(); ++b)
            if (is_valid_pair(*f, Elem{a}, Elem{b}))
                out.push_back({f, Elem{a}, Elem{b}, true});
    return out;
}

/// Cayley table of (F_q, +).
inline LatinSquare additive_cayley_table(const Field & f)
{
    const auto q = f.q();
    std::vector<std::uint32_t> cells(static_cast<std::size_t>(q) * q);
    for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y)
            cells[static_cast<std::size_t>(x) * q + y] = f.add(Elem{x}, Elem{y}).idx;
    return LatinSquare(q, std::move(cells));
}

/// tau_c : x -> x + c.
inline Permutation translation(const Field & f, Elem c)
{
    std::vector<std::uint32_t> img(f.q());
    for (std::uint32_t x = 0; x < f.q(); ++x)
        img[x] = f.add(Elem{x}, c).idx;
    return Permutation(std::move(img));
}

/// lambda_c : x -> c x, for c != 0.
inline Permutation scaling(const Field & f, Elem c)
{
    if (c.idx == 0)
        throw std::invalid_argument("scaling by zero is not a permutation");
    std::vector<std::uint32_t> img(f.q());
    for (std::uint32_t x = 0; x < f.q(); ++x)
        img[x] = f.mul(c, Elem{x}).idx;
    return Permutation(std::move(img));
}

/// phi_kappa[a_0, ..., a_{n-1}]: phi(0) = 0 and phi(x) = a_j x on the coset
/// C_j = { kappa^{n i + j} } of the index-n subgroup of F_q^*.
class CyclotomicMap {
public:
    const FieldPtr & field() const noexcept { return field_; }
    std::uint32_t index() const noexcept { return n_; }
    Elem kappa() const noexcept { return kappa_; }
    const std::vector<Elem> & coeffs() const noexcept { return coeffs_; }

    Elem operator()(Elem x) const { return Elem{values_[x.idx]}; }
    /// j with x in C_j; -1 for zero.
    int coset(Elem x) const { return coset_[x.idx]; }
    std::span<const std::uint32_t> values() const noexcept { return values_; }

    bool is_permutation() const
    {
        std::vector<std::uint8_t> hit(values_.size(), 0);
        for (auto v : values_) {
            if (hit[v])
                return false;
            hit[v] = 1;
        }
        return true;
    }

    Permutation as_permutation() const { return Permutation(values_); }

    friend CyclotomicMap make_cyclotomic(FieldPtr, std::uint32_t, std::optional<Elem>, std::vector<Elem>);

private:
    FieldPtr field_;
    std::uint32_t n_ = 1;
    Elem kappa_{};
    std::vector<Elem> coeffs_;
    std::vector<std::uint32_t> values_;
    std::vector<int> coset_;
};

/// Tabulates a cyclotomic map. For n = 2 the cosets are the squares and non-squares whatever
/// kappa is, so kappa is ignored and recorded as the field's primitive element.
inline CyclotomicMap make_cyclotomic(FieldPtr f, std::uint32_t n, std::optional<Elem> kappa, std::vector<Elem> coeffs)
{
    const auto q = f->q();
    if (n == 0 || (q - 1) % n != 0)
        throw std::invalid_argument("cyclotomic index must divide q-1");
    if (coeffs.size() != n)
        throw std::invalid_argument("cyclotomic map of index " + std::to_string(n) + " needs exactly that many coefficients");
    for (auto c : coeffs)
        if (! f->contains(c))
            throw std::out_of_range("coefficient outside the field");
    Elem k = f->primitive();
    if (kappa && n != 2) {
        if (! f->contains(*kappa) || kappa->idx == 0 || f->mult_order(*kappa) != q - 1)
            throw std::invalid_argument("kappa must be a primitive element");
        k = *kappa;
    }

    CyclotomicMap m;
    m.n_ = n;
    m.kappa_ = k;
    m.coeffs_ = std::move(coeffs);
    m.values_.assign(q, 0);
    m.coset_.assign(q, -1);
    Elem x = f->one();
    for (std::uint32_t t = 0; t + 1 < q; ++t) {
        const auto j = static_cast<int>(t % n);
        m.coset_[x.idx] = j;
        m.values_[x.idx] = f->mul(m.coeffs_[static_cast<std::size_t>(j)], x).idx;
        x = f->mul(x, k);
    }
    m.field_ = std::move(f);
    return m;
}

/// phi[a,b] as an index-2 cyclotomic map.
inline CyclotomicMap quadratic_map(const QuadPair & pair) { return make_cyclotomic(pair.field, 2, std::nullopt, {pair.a, pair.b}); }

/// Both x -> phi(x) and x -> phi(x) - x are bijections.
inline bool is_orthomorphism(const CyclotomicMap & m)
{
    if (! m.is_permutation())
        return false;
    const auto & f = *m.field();
    std::vector<std::uint8_t> hit(f.q(), 0);
    for (std::uint32_t x = 0; x < f.q(); ++x) {
        const auto v = f.sub(m(Elem{x}), Elem{x}).idx;
        if (hit[v])
            return false;
        hit[v] = 1;
    }
    return true;
}

/// Smallest n' | q-1 for which phi(x)/x is constant on each coset of the index-n' subgroup.
inline std::uint32_t least_index(const CyclotomicMap & m)
{
    const auto & f = *m.field();
    const auto order = f.q() - 1;
    for (std::uint32_t n = 1; n <= order; ++n) {
        if (order % n != 0)
            continue;
        std::vector<std::uint32_t> multiplier(n, 0);
        std::vector<std::uint8_t> seen(n, 0);
        bool constant = true;
        for (std::uint32_t x = 1; x < f.q() && constant; ++x) {
            const auto cls = f.log(Elem{x}) % n;
            const auto mult = f.div(m(Elem{x}), Elem{x}).idx;
            if (! seen[cls]) {
                seen[cls] = 1;
                multiplier[cls] = mult;
            }
            else if (multiplier[cls] != mult)
                constant = false;
        }
        if (constant)
            return n;
    }
    return order;
}

/// Table of x . y = x + phi(y - x).
inline LatinSquare quasigroup_from_orthomorphism(const CyclotomicMap & m)
{
    if (! is_orthomorphism(m))
        throw std::invalid_argument("map is not an orthomorphism");
    const auto & f = *m.field();
    const auto q = f.q();
    std::vector<std::uint32_t> cells(static_cast<std::size_t>(q) * q);
    for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y)
            cells[static_cast<std::size_t>(x) * q + y] = f.add(Elem{x}, m(f.sub(Elem{y}, Elem{x}))).idx;
    return LatinSquare(q, std::move(cells));
}

} // namespace quadlat

#endif
