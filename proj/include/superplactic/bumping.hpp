#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "error.hpp"
#include "shape.hpp"
#include "tableau.hpp"

namespace superplactic {

/// One step of a bumping sequence: `letter` came to rest in line q (row q for row
/// insertion, column q for column insertion) at 1-indexed `position` along that line.
struct BumpStep {
    Letter letter;
    std::size_t position = 0;
};

struct Insertion {
    Tableau tableau;
    /// The box added to the shape.
    Cell box;
    /// x_1, x_2, ... with the place each one landed; the last step created `box`.
    std::vector<BumpStep> trace;

    /// Row index reported by row insertion.
    std::size_t row() const noexcept { return box.row; }
    /// Column index reported by column insertion.
    std::size_t column() const noexcept { return box.col; }
};

struct Deletion {
    Tableau tableau;
    Letter letter;
};

/// Row insertion T <- x.
///
/// In each row an even x bumps the leftmost entry strictly greater than x, an odd x the
/// leftmost entry >= x; when nothing is bumped x is appended to that row.
inline Insertion row_insert(const Tableau& t, Letter x)
{
    const Alphabet& a = t.alphabet();
    a.require(x);
    Rows rows = t.rows();
    std::vector<BumpStep> trace;
    for (std::size_t i = 0;; ++i) {
        if (i == rows.size())
            rows.emplace_back();
        auto& row = rows[i];
        auto it = a.is_even(x) ? std::upper_bound(row.begin(), row.end(), x)
                               : std::lower_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            trace.push_back({x, row.size()});
            Cell box{i + 1, row.size()};
            return {Tableau::unchecked(a, std::move(rows)), box, std::move(trace)};
        }
        trace.push_back({x, static_cast<std::size_t>(it - row.begin()) + 1});
        std::swap(*it, x);
    }
}

/// Row deletion [i <- T]: removes the corner box at the end of row i and reverse-bumps
/// the removed letter up to the first row, returning the letter ejected there.
inline Deletion row_delete(const Tableau& t, std::size_t i)
{
    const Alphabet& a = t.alphabet();
    if (i < 1 || i > t.height())
        fail(Errc::empty_row, "row_delete: row " + std::to_string(i) + " is empty");
    if (!t.shape().is_corner_row(i))
        fail(Errc::not_a_corner, "row_delete: last cell of row " + std::to_string(i) + " is not a corner");
    Rows rows = t.rows();
    Letter x = rows[i - 1].back();
    rows[i - 1].pop_back();
    if (rows[i - 1].empty())
        rows.pop_back();
    for (std::size_t h = i - 1; h >= 1; --h) {
        auto& row = rows[h - 1];
        // rightmost entry < x (even) or <= x (odd)
        auto it = a.is_even(x) ? std::lower_bound(row.begin(), row.end(), x)
                               : std::upper_bound(row.begin(), row.end(), x);
        if (it == row.begin())
            break;
        --it;
        std::swap(*it, x);
    }
    return {Tableau::unchecked(a, std::move(rows)), x};
}

/// Column insertion x -> T.
///
/// In each column an even x bumps the topmost entry >= x, an odd x the topmost entry
/// strictly greater than x; when nothing is bumped x is appended below that column.
inline Insertion col_insert(Letter x, const Tableau& t)
{
    const Alphabet& a = t.alphabet();
    a.require(x);
    Rows rows = t.rows();
    std::vector<BumpStep> trace;
    for (std::size_t j = 0;; ++j) {
        std::size_t len = 0;
        while (len < rows.size() && rows[len].size() > j)
            ++len;
        std::size_t k = 0;
        if (a.is_even(x)) {
            while (k < len && rows[k][j] < x)
                ++k;
        } else {
            while (k < len && !(x < rows[k][j]))
                ++k;
        }
        if (k == len) {
            if (len == rows.size())
                rows.emplace_back();
            if (rows[len].size() != j)
                fail(Errc::internal, "col_insert: input is not a tableau");
            rows[len].push_back(x);
            trace.push_back({x, len + 1});
            Cell box{len + 1, j + 1};
            return {Tableau::unchecked(a, std::move(rows)), box, std::move(trace)};
        }
        trace.push_back({x, k + 1});
        std::swap(rows[k][j], x);
    }
}

/// Column deletion T -> j, the transpose-dual of row deletion: removes the corner box at
/// the bottom of column j and reverse-bumps leftward through the columns.
inline Deletion col_delete(const Tableau& t, std::size_t j)
{
    const Alphabet& a = t.alphabet();
    std::size_t len = t.column_length(j);
    if (j < 1 || len == 0)
        fail(Errc::empty_row, "col_delete: column " + std::to_string(j) + " is empty");
    if (t.row_length(len) != j)
        fail(Errc::not_a_corner, "col_delete: last cell of column " + std::to_string(j) + " is not a corner");
    Rows rows = t.rows();
    Letter x = rows[len - 1].back();
    rows[len - 1].pop_back();
    if (rows[len - 1].empty())
        rows.pop_back();
    for (std::size_t h = j - 1; h >= 1; --h) {
        std::size_t col_len = 0;
        while (col_len < rows.size() && rows[col_len].size() >= h)
            ++col_len;
        // bottommost entry <= x (even) or < x (odd)
        std::size_t k = col_len;
        while (k > 0) {
            Letter y = rows[k - 1][h - 1];
            if (a.is_even(x) ? !(x < y) : y < x)
                break;
            --k;
        }
        if (k == 0)
            break;
        std::swap(rows[k - 1][h - 1], x);
    }
    return {Tableau::unchecked(a, std::move(rows)), x};
}

/// Left fold of row insertion over `w`.
inline Tableau row_insert_word(const Tableau& t, const Word& w)
{
    require_same(t.alphabet(), w.alphabet(), "row_insert_word");
    Tableau out = t;
    for (Letter x : w.letters())
        out = row_insert(out, x).tableau;
    return out;
}

/// T(w): row insertion of w's letters into the empty tableau.
inline Tableau tableau_of_word(const Word& w)
{
    return row_insert_word(Tableau(w.alphabet()), w);
}

/// Inverts row_insert_word for a horizontal strip: given U of shape mu and lambda with
/// mu/lambda a horizontal strip, returns (T, w) with T of shape lambda, w a row word and
/// [T <- w] = U. Strip boxes are deleted right to left.
inline std::pair<Tableau, Word> factor_by_row(const Tableau& u, const Partition& lambda)
{
    SkewDiagram strip(u.shape(), lambda);
    if (!strip.is_horizontal_strip())
        fail(Errc::invalid_skew_shape, "factor_by_row: skew shape is not a horizontal strip");
    auto cells = strip.cells();
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.col > b.col; });
    Tableau t = u;
    std::vector<Letter> reversed;
    for (const Cell& c : cells) {
        auto d = row_delete(t, c.row);
        reversed.push_back(d.letter);
        t = std::move(d.tableau);
    }
    std::reverse(reversed.begin(), reversed.end());
    return {std::move(t), Word(u.alphabet(), std::move(reversed))};
}

} // namespace superplactic
