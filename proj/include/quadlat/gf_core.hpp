#ifndef QUADLAT_GF_CORE_HPP
#define QUADLAT_GF_CORE_HPP

// Finite fields GF(p^d), p odd, built as F_p[x]/(m) with full log/exp/Zech tables.
//
// Elements are addressed by a canonical index: the residue c_0 + c_1 x + ... + c_{d-1} x^{d-1}
// has index c_0 + c_1 p + ... + c_{d-1} p^{d-1}. Index 0 is zero and index 1 is one.

#include <quadlat/errors.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace quadlat {

/// A field element, by canonical index. Meaningless without the Field it came from.
struct Elem {
    std::uint32_t idx = 0;

    constexpr auto operator<=>(const Elem &) const = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace detail {

    // Dense polynomials over F_p, constant term first, used only while building a field.
    using poly = std::vector<std::int64_t>;

    inline std::int64_t mod(std::int64_t v, std::int64_t p)
    {
        v %= p;
        return v < 0 ? v + p : v;
    }

    inline void trim(poly & f)
    {
        while (! f.empty() && f.back() == 0)
            f.pop_back();
    }

    inline std::int64_t inv_mod(std::int64_t a, std::int64_t p)
    {
        std::int64_t r = 1, base = mod(a, p);
        for (std::int64_t e = p - 2; e > 0; e >>= 1) {
            if (e & 1)
                r = r * base % p;
            base = base * base % p;
        }
        return r;
    }

    inline poly poly_rem(poly a, const poly & m, std::int64_t p)
    {
        poly divisor = m;
        trim(divisor);
        trim(a);
        const auto dm = static_cast<std::ptrdiff_t>(divisor.size()) - 1;
        const auto lead_inv = inv_mod(divisor.back(), p);
        while (static_cast<std::ptrdiff_t>(a.size()) - 1 >= dm && ! a.empty()) {
            const auto shift = static_cast<std::ptrdiff_t>(a.size()) - 1 - dm;
            const auto factor = a.back() * lead_inv % p;
            for (std::ptrdiff_t i = 0; i <= dm; ++i)
                a[i + shift] = mod(a[i + shift] - factor * divisor[i], p);
            trim(a);
        }
        return a;
    }

    inline poly poly_mulmod(const poly & a, const poly & b, const poly & m, std::int64_t p)
    {
        if (a.empty() || b.empty())
            return {};
        poly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        return poly_rem(std::move(r), m, p);
    }

    inline poly poly_powmod(poly base, std::uint64_t e, const poly & m, std::int64_t p)
    {
        poly r = poly_rem({1}, m, p);
        base = poly_rem(std::move(base), m, p);
        for (; e > 0; e >>= 1) {
            if (e & 1)
                r = poly_mulmod(r, base, m, p);
            base = poly_mulmod(base, base, m, p);
        }
        return r;
    }

    inline poly poly_gcd(poly a, poly b, std::int64_t p)
    {
        trim(a);
        trim(b);
        while (! b.empty()) {
            auto r = poly_rem(a, b, p);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    inline bool is_prime(std::uint64_t n)
    {
        if (n < 2)
            return false;
        for (std::uint64_t f = 2; f * f <= n; ++f)
            if (n % f == 0)
                return false;
        return true;
    }

    inline std::vector<std::uint64_t> prime_factors(std::uint64_t n)
    {
        std::vector<std::uint64_t> out;
        for (std::uint64_t f = 2; f * f <= n; ++f) {
            if (n % f == 0) {
                out.push_back(f);
                while (n % f == 0)
                    n /= f;
            }
        }
        if (n > 1)
            out.push_back(n);
        return out;
    }

    // Rabin's test for a monic m of degree d over F_p.
    inline bool is_irreducible(const poly & m, std::int64_t p)
    {
        const auto d = static_cast<std::uint64_t>(m.size() - 1);
        if (d == 1)
            return true;
        const poly x = poly_rem({0, 1}, m, p);
        std::vector<poly> frob{x}; // frob[k] = x^{p^k} mod m
        for (std::uint64_t k = 1; k <= d; ++k)
            frob.push_back(poly_powmod(frob.back(), static_cast<std::uint64_t>(p), m, p));
        if (frob[d] != x)
            return false;
        for (auto r : prime_factors(d)) {
            poly diff = frob[d / r];
            diff.resize(std::max(diff.size(), x.size()), 0);
            for (std::size_t i = 0; i < x.size(); ++i)
                diff[i] = mod(diff[i] - x[i], p);
            trim(diff);
            if (poly_gcd(diff, m, p).size() != 1)
                return false;
        }
        return true;
    }

} // namespace detail

/// Largest field order the tables are built for.
inline constexpr std::uint64_t max_field_order = 1u << 16;

/// An immutable, fully tabulated GF(p^d). Construct through Field::make; share through FieldPtr.
class Field {
public:
    /// Builds GF(p^d). Without an explicit modulus, the lexicographically smallest monic
    /// irreducible (comparing coefficient sequences constant term first) is used.
    static FieldPtr make(std::uint32_t p, std::uint32_t d, std::optional<std::vector<std::int64_t>> modulus = std::nullopt)
    {
        return std::shared_ptr<const Field>(new Field(p, d, std::move(modulus)));
    }

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t d() const noexcept { return d_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Monic modulus, coefficients in [0,p), constant term first, length d+1.
    const std::vector<std::uint32_t> & modulus() const noexcept { return modulus_; }
    /// Smallest-index element of multiplicative order q-1.
    Elem primitive() const noexcept { return primitive_; }

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }

    bool contains(Elem x) const noexcept { return x.idx < q_; }

    Elem from_int(std::int64_t v) const { return Elem{static_cast<std::uint32_t>(detail::mod(v, p_))}; }

    Elem from_coeffs(std::span<const std::int64_t> c) const
    {
        if (c.size() > d_)
            throw std::invalid_argument("element has more than d coefficients");
        std::uint32_t idx = 0;
        for (std::size_t i = c.size(); i-- > 0;)
            idx = idx * p_ + static_cast<std::uint32_t>(detail::mod(c[i], p_));
        return Elem{idx};
    }

    std::vector<std::uint32_t> coeffs(Elem x) const
    {
        std::vector<std::uint32_t> c(d_);
        for (std::uint32_t i = 0; i < d_; ++i) {
            c[i] = x.idx % p_;
            x.idx /= p_;
        }
        return c;
    }

    Elem add(Elem x, Elem y) const
    {
        if (x.idx == 0)
            return y;
        if (y.idx == 0)
            return x;
        const auto lx = log_[x.idx];
        const auto diff = (log_[y.idx] + order_mul_ - lx) % order_mul_;
        const auto z = zech_[diff];
        if (z == no_zech)
            return zero();
        return Elem{exp_[lx + z]};
    }

    Elem neg(Elem x) const { return Elem{neg_[x.idx]}; }
    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }

    Elem mul(Elem x, Elem y) const
    {
        if (x.idx == 0 || y.idx == 0)
            return zero();
        return Elem{exp_[log_[x.idx] + log_[y.idx]]};
    }

    Elem inv(Elem x) const
    {
        if (x.idx == 0)
            throw std::domain_error("inverse of zero");
        return Elem{exp_[(order_mul_ - log_[x.idx]) % order_mul_]};
    }

    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }

    Elem pow(Elem x, std::uint64_t e) const
    {
        if (x.idx == 0)
            return e == 0 ? one() : zero();
        const auto k = static_cast<std::uint64_t>(log_[x.idx]) * (e % order_mul_) % order_mul_;
        return Elem{exp_[k]};
    }

    /// Discrete log to base primitive(); x must be nonzero.
    std::uint32_t log(Elem x) const
    {
        if (x.idx == 0)
            throw std::domain_error("log of zero");
        return log_[x.idx];
    }

    Elem exp(std::uint64_t k) const { return Elem{exp_[k % order_mul_]}; }

    std::uint64_t mult_order(Elem x) const
    {
        if (x.idx == 0)
            throw std::domain_error("order of zero");
        return order_mul_ / std::gcd<std::uint64_t, std::uint64_t>(log_[x.idx], order_mul_);
    }

    /// Extended quadratic character: 0 at zero, 1 on nonzero squares, -1 on non-squares.
    int chi(Elem x) const { return chi_[x.idx]; }
    bool is_residue(Elem x) const { return chi_[x.idx] == 1; }
    bool is_nonresidue(Elem x) const { return chi_[x.idx] == -1; }

    /// x -> x^{p^e}.
    Elem frobenius(Elem x, std::uint32_t e) const
    {
        if (x.idx == 0)
            return x;
        std::uint64_t k = log_[x.idx];
        for (std::uint32_t i = 0; i < e % d_; ++i)
            k = k * p_ % order_mul_;
        return Elem{exp_[k]};
    }

    std::vector<Elem> elements() const
    {
        std::vector<Elem> out(q_);
        for (std::uint32_t i = 0; i < q_; ++i)
            out[i] = Elem{i};
        return out;
    }

    std::vector<Elem> residues() const { return with_chi(1); }
    std::vector<Elem> nonresidues() const { return with_chi(-1); }

    /// Polynomial rendering in x, highest degree first: "2x+1", "x^2+x+2", "0".
    std::string to_string(Elem x) const
    {
        const auto c = coeffs(x);
        std::string out;
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c[i] == 0)
                continue;
            if (! out.empty())
                out += '+';
            if (i == 0 || c[i] != 1)
                out += std::to_string(c[i]);
            if (i >= 1)
                out += 'x';
            if (i >= 2)
                out += '^' + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

    /// Parses an integer-coefficient polynomial in x ("-x+1", "2x-2", "3", "x^2+2*x").
    Elem parse(std::string_view text) const
    {
        std::vector<std::int64_t> c(d_, 0);
        std::size_t pos = 0;
        auto skip = [&] {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                ++pos;
        };
        auto fail = [&]() -> Elem { throw std::invalid_argument("cannot parse field element '" + std::string(text) + "'"); };
        skip();
        if (pos == text.size())
            return fail();
        bool first = true;
        while (pos < text.size()) {
            std::int64_t sign = 1;
            if (text[pos] == '+' || text[pos] == '-') {
                sign = text[pos] == '-' ? -1 : 1;
                ++pos;
                skip();
            }
            else if (! first)
                return fail();
            first = false;
            std::int64_t coef = 1;
            bool have_digits = false;
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                coef = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    coef = coef * 10 + (text[pos++] - '0');
                have_digits = true;
                skip();
                if (pos < text.size() && text[pos] == '*') {
                    ++pos;
                    skip();
                }
            }
            std::size_t degree = 0;
            if (pos < text.size() && text[pos] == 'x') {
                ++pos;
                degree = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    degree = 0;
                    if (pos == text.size() || ! std::isdigit(static_cast<unsigned char>(text[pos])))
                        return fail();
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                        degree = degree * 10 + static_cast<std::size_t>(text[pos++] - '0');
                }
            }
            else if (! have_digits)
                return fail();
            if (degree >= d_)
                throw std::invalid_argument("term degree exceeds field degree in '" + std::string(text) + "'");
            c[degree] += sign * coef;
            skip();
        }
        return from_coeffs(c);
    }

    bool same_as(const Field & other) const noexcept { return p_ == other.p_ && d_ == other.d_ && modulus_ == other.modulus_; }

private:
    static constexpr std::uint32_t no_zech = 0xffffffffu;

    Field(std::uint32_t p, std::uint32_t d, std::optional<std::vector<std::int64_t>> modulus) : p_(p), d_(d)
    {
        if (p % 2 == 0)
            throw invalid_field("characteristic must be odd, got " + std::to_string(p));
        if (! detail::is_prime(p))
            throw invalid_field("characteristic must be prime, got " + std::to_string(p));
        if (d < 1)
            throw invalid_field("extension degree must be at least 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < d; ++i) {
            q *= p;
            if (q > max_field_order)
                throw invalid_field("field order exceeds 2^16");
        }
        q_ = static_cast<std::uint32_t>(q);
        order_mul_ = q_ - 1;

        detail::poly m;
        if (modulus) {
            if (modulus->size() != d + 1u)
                throw invalid_field("modulus must have d+1 coefficients");
            for (auto c : *modulus)
                m.push_back(detail::mod(c, p));
            if (m.back() != 1)
                throw invalid_field("modulus must be monic");
            if (! detail::is_irreducible(m, p))
                throw invalid_field("modulus is reducible over F_" + std::to_string(p));
        }
        else {
            m = smallest_irreducible(p, d);
        }
        for (auto c : m)
            modulus_.push_back(static_cast<std::uint32_t>(c));

        build_tables(m);
    }

    static detail::poly smallest_irreducible(std::uint32_t p, std::uint32_t d)
    {
        // Lexicographic in (c_0, ..., c_{d-1}), so the last coefficient varies fastest.
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i)
            count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            detail::poly m(d + 1, 0);
            auto v = t;
            for (std::uint32_t i = d; i-- > 0;) {
                m[i] = static_cast<std::int64_t>(v % p);
                v /= p;
            }
            m[d] = 1;
            if (detail::is_irreducible(m, p))
                return m;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    detail::poly as_poly(std::uint32_t idx) const
    {
        detail::poly f(d_);
        for (std::uint32_t i = 0; i < d_; ++i) {
            f[i] = idx % p_;
            idx /= p_;
        }
        detail::trim(f);
        return f;
    }

    std::uint32_t as_index(const detail::poly & f) const
    {
        std::uint32_t idx = 0;
        for (std::size_t i = f.size(); i-- > 0;)
            idx = idx * p_ + static_cast<std::uint32_t>(f[i]);
        return idx;
    }

    void build_tables(const detail::poly & m)
    {
        const std::int64_t p = p_;
        const std::uint64_t n = order_mul_;
        const auto factors = detail::prime_factors(n);

        std::uint32_t g = 0;
        for (std::uint32_t cand = 2; cand < q_ && g == 0; ++cand) {
            const auto base = as_poly(cand);
            bool primitive = true;
            for (auto r : factors)
                if (detail::poly_powmod(base, n / r, m, p) == detail::poly{1}) {
                    primitive = false;
                    break;
                }
            if (primitive)
                g = cand;
        }
        if (g == 0)
            throw std::logic_error("no primitive element found");
        primitive_ = Elem{g};

        exp_.assign(2 * n, 0);
        log_.assign(q_, 0);
        const auto gp = as_poly(g);
        detail::poly cur{1};
        for (std::uint64_t k = 0; k < n; ++k) {
            const auto idx = as_index(cur);
            exp_[k] = idx;
            log_[idx] = static_cast<std::uint32_t>(k);
            cur = detail::poly_mulmod(cur, gp, m, p);
        }
        for (std::uint64_t k = n; k < 2 * n; ++k)
            exp_[k] = exp_[k - n];

        neg_.assign(q_, 0);
        for (std::uint32_t i = 0; i < q_; ++i) {
            std::uint32_t out = 0, v = i, place = 1;
            for (std::uint32_t j = 0; j < d_; ++j) {
                out += ((p_ - v % p_) % p_) * place;
                v /= p_;
                place *= p_;
            }
            neg_[i] = out;
        }

        // zech_[k] = log(1 + g^k), or no_zech when 1 + g^k = 0.
        zech_.assign(n, no_zech);
        for (std::uint64_t k = 0; k < n; ++k) {
            const auto x = exp_[k];
            const auto c0 = x % p_;
            const auto s = x - c0 + (c0 + 1) % p_;
            if (s != 0)
                zech_[k] = log_[s];
        }

        chi_.assign(q_, 0);
        for (std::uint32_t i = 1; i < q_; ++i)
            chi_[i] = pow(Elem{i}, n / 2).idx == 1 ? 1 : -1;
    }

    std::vector<Elem> with_chi(int v) const
    {
        std::vector<Elem> out;
        for (std::uint32_t i = 0; i < q_; ++i)
            if (chi_[i] == v)
                out.push_back(Elem{i});
        return out;
    }

    std::uint32_t p_ = 0, d_ = 0, q_ = 0;
    std::uint64_t order_mul_ = 0;
    std::vector<std::uint32_t> modulus_;
    Elem primitive_{};
    std::vector<std::uint32_t> exp_, log_, zech_, neg_;
    std::vector<std::int8_t> chi_;
};

/// Field-bound value with arithmetic operators, for writing formulas like 2*(b-1)*(a-b).
class Fq {
public:
    Fq(const Field & f, Elem e) : f_(&f), e_(e) {}
    Fq(const Field & f, std::int64_t v) : f_(&f), e_(f.from_int(v)) {}

    Elem elem() const noexcept { return e_; }
    const Field & field() const noexcept { return *f_; }
    int chi() const { return f_->chi(e_); }
    bool residue() const { return f_->is_residue(e_); }
    bool nonresidue() const { return f_->is_nonresidue(e_); }
    bool is_zero() const { return e_.idx == 0; }
    Fq inv() const { return {*f_, f_->inv(e_)}; }
    Fq pow(std::uint64_t k) const { return {*f_, f_->pow(e_, k)}; }

    friend Fq operator+(Fq x, Fq y) { return {*x.f_, x.f_->add(x.e_, y.e_)}; }
    friend Fq operator-(Fq x, Fq y) { return {*x.f_, x.f_->sub(x.e_, y.e_)}; }
    friend Fq operator*(Fq x, Fq y) { return {*x.f_, x.f_->mul(x.e_, y.e_)}; }
    friend Fq operator/(Fq x, Fq y) { return {*x.f_, x.f_->div(x.e_, y.e_)}; }
    friend Fq operator-(Fq x) { return {*x.f_, x.f_->neg(x.e_)}; }

    friend Fq operator+(Fq x, std::int64_t y) { return x + Fq(*x.f_, y); }
    friend Fq operator+(std::int64_t x, Fq y) { return Fq(*y.f_, x) + y; }
    friend Fq operator-(Fq x, std::int64_t y) { return x - Fq(*x.f_, y); }
    friend Fq operator-(std::int64_t x, Fq y) { return Fq(*y.f_, x) - y; }
    friend Fq operator*(Fq x, std::int64_t y) { return x * Fq(*x.f_, y); }
    friend Fq operator*(std::int64_t x, Fq y) { return Fq(*y.f_, x) * y; }
    friend Fq operator/(Fq x, std::int64_t y) { return x / Fq(*x.f_, y); }
    friend Fq operator/(std::int64_t x, Fq y) { return Fq(*y.f_, x) / y; }

    friend bool operator==(Fq x, Fq y) { return x.e_ == y.e_; }
    friend bool operator==(Fq x, std::int64_t y) { return x.e_ == x.f_->from_int(y); }

private:
    const Field * f_;
    Elem e_;
};

/// Field automorphism x -> x^{p^exponent}.
struct FieldAut {
    std::uint32_t exponent = 0;

    Elem apply(const Field & f, Elem x) const { return f.frobenius(x, exponent); }
    std::uint32_t order(const Field & f) const { return f.d() / std::gcd(exponent, f.d()); }
    auto operator<=>(const FieldAut &) const = default;
};

inline FieldAut compose(const Field & f, FieldAut outer, FieldAut inner)
{
    return FieldAut{(outer.exponent + inner.exponent) % f.d()};
}

/// All d automorphisms of f, each checked to be an additive, multiplicative bijection.
/// The pairwise check is exhaustive for q <= 128; above that additivity is checked against
/// the additive basis {p^i} and multiplicativity against the primitive element, which together imply it.
inline std::vector<FieldAut> field_automorphisms(const Field & f)
{
    std::vector<FieldAut> out;
    const auto q = f.q();
    for (std::uint32_t e = 0; e < f.d(); ++e) {
        FieldAut theta{e};
        std::vector<std::uint8_t> hit(q, 0);
        for (std::uint32_t x = 0; x < q; ++x)
            hit[theta.apply(f, Elem{x}).idx] = 1;
        bool ok = std::all_of(hit.begin(), hit.end(), [](auto h) { return h != 0; });
        auto check = [&](Elem x, Elem y) {
            ok = ok && theta.apply(f, f.add(x, y)) == f.add(theta.apply(f, x), theta.apply(f, y));
            ok = ok && theta.apply(f, f.mul(x, y)) == f.mul(theta.apply(f, x), theta.apply(f, y));
        };
        if (q <= 128) {
            for (std::uint32_t x = 0; x < q && ok; ++x)
                for (std::uint32_t y = 0; y < q && ok; ++y)
                    check(Elem{x}, Elem{y});
        }
        else {
            std::vector<Elem> gens{f.primitive()};
            for (std::uint32_t i = 0, place = 1; i < f.d(); ++i, place *= f.p())
                gens.push_back(Elem{place});
            for (std::uint32_t x = 0; x < q && ok; ++x)
                for (auto g : gens)
                    check(Elem{x}, g);
        }
        if (! ok)
            throw std::logic_error("Frobenius power failed the automorphism check");
        out.push_back(theta);
    }
    return out;
}

/// The subfield F_{p^degree} of f, listed by element index.
struct SubfieldDesc {
    std::uint32_t degree = 1;
    std::uint64_t order = 0;
    std::vector<Elem> elements;

    bool contains(Elem x) const { return std::binary_search(elements.begin(), elements.end(), x); }
    /// sqrt(order) when the subfield order is a perfect square.
    std::optional<std::uint64_t> zeta(std::uint32_t p) const
    {
        if (degree % 2 != 0)
            return std::nullopt;
        std::uint64_t z = 1;
        for (std::uint32_t i = 0; i < degree / 2; ++i)
            z *= p;
        return z;
    }
};

inline SubfieldDesc subfield_of_degree(const Field & f, std::uint32_t e)
{
    if (e == 0 || f.d() % e != 0)
        throw std::invalid_argument("subfield degree must divide d");
    SubfieldDesc s;
    s.degree = e;
    for (std::uint32_t x = 0; x < f.q(); ++x)
        if (f.frobenius(Elem{x}, e) == Elem{x})
            s.elements.push_back(Elem{x});
    s.order = s.elements.size();
    return s;
}

/// Smallest subfield containing every generator.
inline SubfieldDesc subfield_generated(const Field & f, std::span<const Elem> gens)
{
    for (std::uint32_t e = 1; e <= f.d(); ++e) {
        if (f.d() % e != 0)
            continue;
        if (std::all_of(gens.begin(), gens.end(), [&](Elem g) { return f.frobenius(g, e) == g; }))
            return subfield_of_degree(f, e);
    }
    return subfield_of_degree(f, f.d());
}

inline SubfieldDesc subfield_generated(const Field & f, std::initializer_list<Elem> gens)
{
    return subfield_generated(f, std::span<const Elem>(gens.begin(), gens.size()));
}

/// Polynomials over F_q as coefficient vectors, constant term first.
inline Elem eval_poly(const Field & f, std::span<const Elem> coeffs, Elem x)
{
    Elem acc = f.zero();
    for (std::size_t i = coeffs.size(); i-- > 0;)
        acc = f.add(f.mul(acc, x), coeffs[i]);
    return acc;
}

inline std::size_t poly_degree(std::span<const Elem> coeffs)
{
    std::size_t n = coeffs.size();
    while (n > 0 && coeffs[n - 1].idx == 0)
        --n;
    if (n == 0)
        throw precondition_violation("zero polynomial");
    return n - 1;
}

/// lead * prod (x - r).
inline std::vector<Elem> poly_from_roots(const Field & f, Elem lead, std::span<const Elem> roots)
{
    std::vector<Elem> c{lead};
    for (auto r : roots) {
        std::vector<Elem> next(c.size() + 1, f.zero());
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] = f.add(next[i + 1], c[i]);
            next[i] = f.sub(next[i], f.mul(r, c[i]));
        }
        c = std::move(next);
    }
    return c;
}

/// Exact sum of chi(f(c)) over all c in F_q.
inline std::int64_t char_sum(const Field & f, std::span<const Elem> coeffs)
{
    poly_degree(coeffs);
    std::int64_t s = 0;
    for (std::uint32_t c = 0; c < f.q(); ++c)
        s += f.chi(eval_poly(f, coeffs, Elem{c}));
    return s;
}

/// Checks |sum chi(f(c))| <= (n-1) sqrt(q) for f of degree n > 0 with n distinct roots in F_q,
/// and the sharper bound 1 when n = 2. Compared in exact integer arithmetic.
inline bool weil_check(const Field & f, std::span<const Elem> coeffs)
{
    const auto n = poly_degree(coeffs);
    if (n == 0)
        throw precondition_violation("polynomial must have positive degree");
    std::size_t roots = 0;
    for (std::uint32_t c = 0; c < f.q(); ++c)
        if (eval_poly(f, coeffs, Elem{c}).idx == 0)
            ++roots;
    if (roots != n)
        throw precondition_violation("polynomial does not split into distinct linear factors over F_q");
    const auto s = char_sum(f, coeffs);
    const auto k = static_cast<std::int64_t>(n) - 1;
    if (s * s > k * k * static_cast<std::int64_t>(f.q()))
        return false;
    if (n == 2 && std::abs(s) > 1)
        return false;
    return true;
}

/// (p, d) for every odd prime power p^d in [lo, hi], ascending.
struct PrimePower {
    std::uint32_t p, d, q;
};

inline std::vector<PrimePower> odd_prime_powers(std::uint32_t lo, std::uint32_t hi)
{
    std::vector<PrimePower> out;
    for (std::uint32_t q = std::max<std::uint32_t>(lo, 3); q <= hi; ++q) {
        if (q % 2 == 0)
            continue;
        const auto fs = detail::prime_factors(q);
        if (fs.size() != 1)
            continue;
        std::uint32_t d = 0;
        for (std::uint32_t v = q; v > 1; v /= static_cast<std::uint32_t>(fs[0]))
            ++d;
        out.push_back({static_cast<std::uint32_t>(fs[0]), d, q});
    }
    return out;
}

} // namespace quadlat

#endif
