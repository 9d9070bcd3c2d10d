#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

namespace superplactic {

/// A box of a Ferrers diagram, 1-indexed (row, column).
struct Cell {
    std::size_t row = 0;
    std::size_t col = 0;

    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of positive parts. The empty partition is allowed.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<std::size_t> parts)
      : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] == 0)
                fail(Errc::invalid_partition, "partition: part " + std::to_string(i + 1) + " is zero");
            if (i > 0 && parts_[i] > parts_[i - 1])
                fail(Errc::invalid_partition, "partition: parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<std::size_t> parts)
      : Partition(std::vector<std::size_t>(parts))
    {
    }

    const std::vector<std::size_t>& parts() const noexcept { return parts_; }
    std::size_t height() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Width of the first row.
    std::size_t width() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// Number of boxes.
    std::size_t size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0}); }

    /// Part i (1-indexed); 0 past the last part.
    std::size_t part(std::size_t i) const noexcept
    {
        return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0;
    }

    /// Sum of the first k parts.
    std::size_t partial_sum(std::size_t k) const noexcept
    {
        k = std::min(k, parts_.size());
        return std::accumulate(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(k), std::size_t{0});
    }

    Partition conjugate() const
    {
        std::vector<std::size_t> out(width(), 0);
        for (std::size_t len : parts_)
            for (std::size_t j = 0; j < len; ++j)
                ++out[j];
        return Partition(std::move(out));
    }

    /// Componentwise mu_i <= lambda_i.
    bool contains(const Partition& mu) const noexcept
    {
        if (mu.height() > height())
            return false;
        for (std::size_t i = 1; i <= mu.height(); ++i)
            if (mu.part(i) > part(i))
                return false;
        return true;
    }

    /// Last box of row i is also last in its column.
    bool is_corner_row(std::size_t i) const noexcept
    {
        return i >= 1 && i <= height() && part(i) > part(i + 1);
    }

    std::vector<Cell> cells() const
    {
        std::vector<Cell> out;
        for (std::size_t i = 1; i <= height(); ++i)
            for (std::size_t j = 1; j <= part(i); ++j)
                out.push_back({i, j});
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<std::size_t> parts_;
};

inline Partition conjugate_partition(const Partition& lambda) { return lambda.conjugate(); }

inline bool contains(const Partition& lambda, const Partition& mu) { return lambda.contains(mu); }

/// Every partition of n, largest first in reverse lexicographic order.
inline std::vector<Partition> partitions_of(std::size_t n)
{
    std::vector<Partition> out;
    std::vector<std::size_t> current;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t cap) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (std::size_t part = std::min(remaining, cap); part >= 1; --part) {
            current.push_back(part);
            rec(remaining - part, part);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

/// D(outer / inner) with inner contained in outer.
class SkewDiagram {
public:
    SkewDiagram() = default;

    SkewDiagram(Partition outer, Partition inner)
      : outer_(std::move(outer)), inner_(std::move(inner))
    {
        if (!outer_.contains(inner_))
            fail(Errc::invalid_skew_shape, "skew diagram: inner partition is not contained in outer");
    }

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }

    std::size_t size() const noexcept { return outer_.size() - inner_.size(); }
    bool empty() const noexcept { return size() == 0; }
    bool is_straight() const noexcept { return inner_.empty(); }

    std::vector<Cell> cells() const
    {
        std::vector<Cell> out;
        for (std::size_t i = 1; i <= outer_.height(); ++i)
            for (std::size_t j = inner_.part(i) + 1; j <= outer_.part(i); ++j)
                out.push_back({i, j});
        return out;
    }

    SkewDiagram conjugate() const { return SkewDiagram(outer_.conjugate(), inner_.conjugate()); }

    /// No two cells share a column.
    bool is_horizontal_strip() const noexcept
    {
        // Column j holds cells in rows i with inner_i < j <= outer_i; two such rows exist
        // exactly when some row i+1 reaches past inner_i.
        for (std::size_t i = 1; i < outer_.height(); ++i)
            if (outer_.part(i + 1) > inner_.part(i))
                return false;
        return true;
    }

    /// No two cells share a row.
    bool is_vertical_strip() const noexcept
    {
        for (std::size_t i = 1; i <= outer_.height(); ++i)
            if (outer_.part(i) > inner_.part(i) + 1)
                return false;
        return true;
    }

    friend bool operator==(const SkewDiagram&, const SkewDiagram&) = default;

private:
    Partition outer_;
    Partition inner_;
};

inline bool is_horizontal_strip(const SkewDiagram& s) { return s.is_horizontal_strip(); }
inline bool is_vertical_strip(const SkewDiagram& s) { return s.is_vertical_strip(); }

} // namespace superplactic
