#ifndef QUADLAT_PERMUTATION_HPP
#define QUADLAT_PERMUTATION_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadlat {

/// Sorted multiset of cycle lengths.
struct CycleStructure {
    std::vector<std::uint32_t> lengths;

    std::size_t count(std::uint32_t len) const { return static_cast<std::size_t>(std::count(lengths.begin(), lengths.end(), len)); }
    std::size_t transpositions() const { return count(2); }
    std::uint64_t total() const { return std::accumulate(lengths.begin(), lengths.end(), std::uint64_t{0}); }

    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < lengths.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(lengths[i]);
        }
        return s + "]";
    }

    auto operator<=>(const CycleStructure &) const = default;
};

/// A bijection of {0, ..., n-1}, stored as its image array.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images))
    {
        std::vector<std::uint8_t> seen(images_.size(), 0);
        for (auto v : images_) {
            if (v >= images_.size() || seen[v])
                throw std::invalid_argument("image array is not a bijection");
            seen[v] = 1;
        }
    }

    static Permutation identity(std::size_t n)
    {
        std::vector<std::uint32_t> id(n);
        std::iota(id.begin(), id.end(), 0u);
        return Permutation(std::move(id), unchecked{});
    }

    std::size_t size() const noexcept { return images_.size(); }
    std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
    std::span<const std::uint32_t> images() const noexcept { return images_; }

    Permutation inverse() const
    {
        std::vector<std::uint32_t> inv(images_.size());
        for (std::uint32_t i = 0; i < images_.size(); ++i)
            inv[images_[i]] = i;
        return Permutation(std::move(inv), unchecked{});
    }

    /// f * g is the composition x -> f(g(x)).
    friend Permutation operator*(const Permutation & f, const Permutation & g)
    {
        if (f.size() != g.size())
            throw std::invalid_argument("composing permutations of different degree");
        std::vector<std::uint32_t> out(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
            out[i] = f.images_[g.images_[i]];
        return Permutation(std::move(out), unchecked{});
    }

    bool is_identity() const
    {
        for (std::uint32_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i)
                return false;
        return true;
    }

    bool is_derangement() const
    {
        for (std::uint32_t i = 0; i < images_.size(); ++i)
            if (images_[i] == i)
                return false;
        return true;
    }

    /// Disjoint cycles, each starting at its smallest point, ordered by that point.
    std::vector<std::vector<std::uint32_t>> cycles() const
    {
        std::vector<std::vector<std::uint32_t>> out;
        std::vector<std::uint8_t> seen(images_.size(), 0);
        for (std::uint32_t s = 0; s < images_.size(); ++s) {
            if (seen[s])
                continue;
            auto & c = out.emplace_back();
            for (auto x = s; ! seen[x]; x = images_[x]) {
                seen[x] = 1;
                c.push_back(x);
            }
        }
        return out;
    }

    std::uint32_t cycle_length_at(std::uint32_t x) const
    {
        std::uint32_t len = 1;
        for (auto y = images_[x]; y != x; y = images_[y])
            ++len;
        return len;
    }

    CycleStructure cycle_structure() const
    {
        CycleStructure cs;
        std::vector<std::uint8_t> seen(images_.size(), 0);
        for (std::uint32_t s = 0; s < images_.size(); ++s) {
            if (seen[s])
                continue;
            std::uint32_t len = 0;
            for (auto x = s; ! seen[x]; x = images_[x]) {
                seen[x] = 1;
                ++len;
            }
            cs.lengths.push_back(len);
        }
        std::sort(cs.lengths.begin(), cs.lengths.end());
        return cs;
    }

    std::uint64_t order() const
    {
        std::uint64_t o = 1;
        for (auto len : cycle_structure().lengths)
            o = std::lcm(o, std::uint64_t{len});
        return o;
    }

    auto operator<=>(const Permutation &) const = default;

private:
    struct unchecked {};
    Permutation(std::vector<std::uint32_t> images, unchecked) : images_(std::move(images)) {}

    std::vector<std::uint32_t> images_;
};

inline CycleStructure cycle_structure(const Permutation & perm) { return perm.cycle_structure(); }

} // namespace quadlat

#endif
