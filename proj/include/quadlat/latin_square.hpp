#ifndef QUADLAT_LATIN_SQUARE_HPP
#define QUADLAT_LATIN_SQUARE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace quadlat {

/// An n x n table over symbols {0..n-1} in which every row and every column is a permutation.
/// Rows, columns and symbols share one index set, so the table is a quasigroup operation table.
class LatinSquare {
public:
    LatinSquare() = default;

    /// Row-major cells; throws unless the table has the Latin property.
    LatinSquare(std::size_t n, std::vector<std::uint32_t> cells) : n_(n), cells_(std::move(cells))
    {
        if (cells_.size() != n_ * n_)
            throw std::invalid_argument("cell count is not n^2");
        if (! has_latin_property(n_, cells_))
            throw std::invalid_argument("table is not a Latin square");
    }

    static LatinSquare from_rows(const std::vector<std::vector<std::uint32_t>> & rows)
    {
        std::vector<std::uint32_t> cells;
        for (const auto & r : rows) {
            if (r.size() != rows.size())
                throw std::invalid_argument("rows must have length n");
            cells.insert(cells.end(), r.begin(), r.end());
        }
        return LatinSquare(rows.size(), std::move(cells));
    }

    static bool has_latin_property(std::size_t n, std::span<const std::uint32_t> cells)
    {
        if (cells.size() != n * n)
            return false;
        std::vector<std::uint8_t> seen(n);
        for (std::size_t r = 0; r < n; ++r) {
            std::fill(seen.begin(), seen.end(), 0);
            for (std::size_t c = 0; c < n; ++c) {
                const auto v = cells[r * n + c];
                if (v >= n || seen[v])
                    return false;
                seen[v] = 1;
            }
        }
        for (std::size_t c = 0; c < n; ++c) {
            std::fill(seen.begin(), seen.end(), 0);
            for (std::size_t r = 0; r < n; ++r) {
                const auto v = cells[r * n + c];
                if (seen[v])
                    return false;
                seen[v] = 1;
            }
        }
        return true;
    }

    std::size_t order() const noexcept { return n_; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return cells_[r * n_ + c]; }
    std::span<const std::uint32_t> row(std::size_t r) const { return {cells_.data() + r * n_, n_}; }
    std::span<const std::uint32_t> cells() const noexcept { return cells_; }

    std::vector<std::vector<std::uint32_t>> rows() const
    {
        std::vector<std::vector<std::uint32_t>> out;
        for (std::size_t r = 0; r < n_; ++r)
            out.emplace_back(row(r).begin(), row(r).end());
        return out;
    }

    bool operator==(const LatinSquare &) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> cells_;
};

} // namespace quadlat

#endif
