#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "error.hpp"
#include "shape.hpp"

namespace superplactic {

using Rows = std::vector<std::vector<Letter>>;

/// Finite word over a signed alphabet.
class Word {
public:
    explicit Word(Alphabet alphabet, std::vector<Letter> letters = {})
      : alphabet_(std::move(alphabet)), letters_(std::move(letters))
    {
        for (Letter x : letters_)
            alphabet_.require(x);
    }

    static Word from_symbols(const Alphabet& alphabet, const std::vector<std::string>& symbols)
    {
        std::vector<Letter> letters;
        letters.reserve(symbols.size());
        for (const auto& s : symbols)
            letters.push_back(alphabet.letter(s));
        return Word(alphabet, std::move(letters));
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    std::vector<std::string> symbols() const
    {
        std::vector<std::string> out;
        out.reserve(letters_.size());
        for (Letter x : letters_)
            out.push_back(alphabet_.symbol(x));
        return out;
    }

    friend Word operator*(const Word& u, const Word& v)
    {
        require_same(u.alphabet_, v.alphabet_, "word product");
        std::vector<Letter> out = u.letters_;
        out.insert(out.end(), v.letters_.begin(), v.letters_.end());
        return Word(u.alphabet_, std::move(out));
    }

    friend bool operator==(const Word& a, const Word& b)
    {
        return a.letters_ == b.letters_ && a.alphabet_ == b.alphabet_;
    }

    friend bool operator<(const Word& a, const Word& b) { return a.letters_ < b.letters_; }

private:
    Alphabet alphabet_;
    std::vector<Letter> letters_;
};

namespace detail {

inline std::string cell_name(std::size_t row, std::size_t col)
{
    return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

/// Checks rows as a (possibly skew) filling: rows[i] holds columns inner[i]+1 .. inner[i]+rows[i].size().
inline void check_filling(const Alphabet& a, const Rows& rows, const std::vector<std::size_t>& inner)
{
    auto offset = [&](std::size_t i) { return i < inner.size() ? inner[i] : std::size_t{0}; };
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (Letter x : rows[i])
            a.require(x);
        for (std::size_t j = 0; j + 1 < rows[i].size(); ++j) {
            if (!a.row_compatible(rows[i][j], rows[i][j + 1]))
                fail(Errc::row_condition,
                     "condition (i) fails at cell " + cell_name(i + 1, offset(i) + j + 2) + ": '" +
                         a.symbol(rows[i][j + 1]) + "' right of '" + a.symbol(rows[i][j]) + "'");
        }
    }
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        for (std::size_t k = 0; k < rows[i + 1].size(); ++k) {
            std::size_t col = offset(i + 1) + k;
            if (col < offset(i) || col >= offset(i) + rows[i].size())
                continue;
            Letter above = rows[i][col - offset(i)];
            Letter below = rows[i + 1][k];
            if (!a.column_compatible(above, below))
                fail(Errc::column_condition,
                     "condition (ii) fails at cell " + cell_name(i + 2, col + 1) + ": '" + a.symbol(below) +
                         "' below '" + a.symbol(above) + "'");
        }
    }
}

inline std::vector<std::size_t> row_lengths(const Rows& rows)
{
    std::vector<std::size_t> out;
    for (const auto& r : rows)
        out.push_back(r.size());
    return out;
}

} // namespace detail

/// Super semistandard Young tableau of straight shape.
///
/// Rows weakly increase with repeats only at even letters; columns weakly increase
/// with repeats only at odd letters.
class Tableau {
public:
    explicit Tableau(Alphabet alphabet)
      : alphabet_(std::move(alphabet))
    {
    }

    /// Validates `rows` (top to bottom) against the super semistandard conditions.
    static Tableau from_rows(Alphabet alphabet, Rows rows)
    {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].empty())
                fail(Errc::shape_not_partition, "tableau: row " + std::to_string(i + 1) + " is empty");
            if (i > 0 && rows[i].size() > rows[i - 1].size())
                fail(Errc::shape_not_partition,
                     "tableau: row lengths are not weakly decreasing at row " + std::to_string(i + 1));
        }
        detail::check_filling(alphabet, rows, {});
        return unchecked(std::move(alphabet), std::move(rows));
    }

    /// Caller guarantees that `rows` already satisfies every tableau condition.
    static Tableau unchecked(Alphabet alphabet, Rows rows)
    {
        Tableau t(std::move(alphabet));
        t.rows_ = std::move(rows);
        return t;
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const Rows& rows() const noexcept { return rows_; }
    Partition shape() const { return Partition(detail::row_lengths(rows_)); }
    std::size_t height() const noexcept { return rows_.size(); }
    std::size_t width() const noexcept { return rows_.empty() ? 0 : rows_.front().size(); }
    bool empty() const noexcept { return rows_.empty(); }

    std::size_t size() const noexcept
    {
        std::size_t n = 0;
        for (const auto& r : rows_)
            n += r.size();
        return n;
    }

    std::size_t row_length(std::size_t i) const noexcept { return i >= 1 && i <= rows_.size() ? rows_[i - 1].size() : 0; }

    std::size_t column_length(std::size_t j) const noexcept
    {
        std::size_t n = 0;
        while (n < rows_.size() && rows_[n].size() >= j)
            ++n;
        return j == 0 ? 0 : n;
    }

    /// Entry at 1-indexed (row, col).
    Letter at(std::size_t row, std::size_t col) const { return rows_.at(row - 1).at(col - 1); }

    /// Multiset of entries as a sorted letter list.
    std::vector<Letter> content() const
    {
        std::vector<Letter> out;
        for (const auto& r : rows_)
            out.insert(out.end(), r.begin(), r.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const Tableau& a, const Tableau& b)
    {
        return a.rows_ == b.rows_ && a.alphabet_ == b.alphabet_;
    }

private:
    Alphabet alphabet_;
    Rows rows_;
};

/// Canonical order: shape first, then row-major entries.
struct TableauOrder {
    bool operator()(const Tableau& a, const Tableau& b) const
    {
        const auto& ra = a.rows();
        const auto& rb = b.rows();
        if (ra.size() != rb.size())
            return ra.size() < rb.size();
        for (std::size_t i = 0; i < ra.size(); ++i)
            if (ra[i].size() != rb[i].size())
                return ra[i].size() < rb[i].size();
        return ra < rb;
    }
};

/// Tableau of skew shape outer/inner; row i stores only its skew cells, left to right.
class SkewTableau {
public:
    SkewTableau(Alphabet alphabet, Partition inner, Rows rows)
      : alphabet_(std::move(alphabet))
    {
        std::vector<std::size_t> outer;
        std::size_t h = std::max(inner.height(), rows.size());
        rows.resize(h);
        for (std::size_t i = 0; i < h; ++i)
            outer.push_back(inner.part(i + 1) + rows[i].size());
        while (!outer.empty() && outer.back() == 0) {
            outer.pop_back();
            rows.pop_back();
        }
        std::vector<std::size_t> checked_outer;
        for (std::size_t i = 0; i < outer.size(); ++i) {
            if (outer[i] == 0 || (i > 0 && outer[i] > outer[i - 1]))
                fail(Errc::shape_not_partition, "skew tableau: outer shape is not a partition");
        }
        diagram_ = SkewDiagram(Partition(outer), inner);
        detail::check_filling(alphabet_, rows, inner.parts());
        rows_ = std::move(rows);
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const SkewDiagram& diagram() const noexcept { return diagram_; }
    const Rows& rows() const noexcept { return rows_; }
    std::size_t size() const noexcept { return diagram_.size(); }
    bool empty() const noexcept { return diagram_.empty(); }

    friend bool operator==(const SkewTableau& a, const SkewTableau& b)
    {
        return a.diagram_ == b.diagram_ && a.rows_ == b.rows_ && a.alphabet_ == b.alphabet_;
    }

private:
    Alphabet alphabet_;
    SkewDiagram diagram_;
    Rows rows_;
};

inline Tableau validate(const std::vector<std::vector<std::string>>& rows, const Alphabet& alphabet)
{
    Rows letters;
    for (const auto& row : rows) {
        letters.emplace_back();
        for (const auto& s : row)
            letters.back().push_back(alphabet.letter(s));
    }
    return Tableau::from_rows(alphabet, std::move(letters));
}

/// Rows read from the bottom upward, concatenated.
inline Word word_of(const Tableau& t)
{
    std::vector<Letter> out;
    out.reserve(t.size());
    for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it)
        out.insert(out.end(), it->begin(), it->end());
    return Word(t.alphabet(), std::move(out));
}

inline Word word_of(const SkewTableau& t)
{
    if (!t.diagram().is_straight())
        fail(Errc::not_straight_shape, "word_of: tableau has skew shape");
    return word_of(Tableau::unchecked(t.alphabet(), t.rows()));
}

/// Transposed tableau over the conjugate alphabet.
inline Tableau transpose(const Tableau& t)
{
    Rows out(t.width());
    for (const auto& row : t.rows())
        for (std::size_t j = 0; j < row.size(); ++j)
            out[j].push_back(row[j]);
    return Tableau::unchecked(t.alphabet().conjugate(), std::move(out));
}

/// Splits off the entries among the first `threshold` letters of the alphabet.
inline std::pair<Tableau, SkewTableau> split_by_threshold(const Tableau& t, std::size_t threshold)
{
    Rows low;
    Rows high;
    std::vector<std::size_t> inner;
    for (const auto& row : t.rows()) {
        auto cut = std::find_if(row.begin(), row.end(), [&](Letter x) { return x.rank >= threshold; });
        if (std::any_of(cut, row.end(), [&](Letter x) { return x.rank < threshold; }))
            fail(Errc::not_straight_shape, "split_by_threshold: low entries do not form a straight shape");
        if (cut != row.begin()) {
            if (low.size() != high.size())
                fail(Errc::not_straight_shape, "split_by_threshold: low entries do not form a straight shape");
            low.emplace_back(row.begin(), cut);
            inner.push_back(low.back().size());
        }
        high.emplace_back(cut, row.end());
    }
    for (std::size_t i = 1; i < inner.size(); ++i)
        if (inner[i] > inner[i - 1])
            fail(Errc::not_straight_shape, "split_by_threshold: low entries do not form a straight shape");
    Tableau t0 = Tableau::unchecked(t.alphabet(), std::move(low));
    SkewTableau t1(t.alphabet(), t0.shape(), std::move(high));
    return {std::move(t0), std::move(t1)};
}

/// Calls `visit(const Tableau&)` for every tableau of `shape` over `alphabet`,
/// filling cells row by row with letters in increasing order.
template <typename Visitor>
void for_each_tableau(const Partition& shape, const Alphabet& alphabet, Visitor&& visit)
{
    Rows rows(shape.height());
    for (std::size_t i = 0; i < rows.size(); ++i)
        rows[i].reserve(shape.part(i + 1));
    const auto cells = shape.cells();
    const auto letters = alphabet.letters();

    auto rec = [&](auto& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            visit(Tableau::unchecked(alphabet, rows));
            return;
        }
        const auto [r, c] = cells[idx];
        for (Letter x : letters) {
            if (c > 1 && !alphabet.row_compatible(rows[r - 1][c - 2], x))
                continue;
            if (r > 1 && !alphabet.column_compatible(rows[r - 2][c - 1], x))
                continue;
            rows[r - 1].push_back(x);
            self(self, idx + 1);
            rows[r - 1].pop_back();
        }
    };
    rec(rec, 0);
}

inline std::vector<Tableau> enumerate_tableaux(const Partition& shape, const Alphabet& alphabet)
{
    std::vector<Tableau> out;
    for_each_tableau(shape, alphabet, [&](const Tableau& t) { out.push_back(t); });
    return out;
}

/// Number of standard Young tableaux of the given shape, by placing 1..n one box at a time.
inline std::uint64_t enumerate_standard(const Partition& shape)
{
    const auto target = shape.parts();
    std::vector<std::size_t> filled(target.size(), 0);
    auto rec = [&](auto& self, std::size_t remaining) -> std::uint64_t {
        if (remaining == 0)
            return 1;
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < target.size(); ++i) {
            if (filled[i] == target[i])
                continue;
            if (i > 0 && filled[i] == filled[i - 1])
                continue;
            ++filled[i];
            total += self(self, remaining - 1);
            --filled[i];
        }
        return total;
    };
    return rec(rec, shape.size());
}

/// Entries separated by single spaces, one line per row; skew cells padded with blanks.
inline std::string to_text(const Alphabet& alphabet, const Rows& rows, const std::vector<std::size_t>& inner = {})
{
    std::size_t width = 1;
    for (const auto& r : rows)
        for (Letter x : r)
            width = std::max(width, alphabet.symbol(x).size());
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::string line;
        std::size_t skip = i < inner.size() ? inner[i] : 0;
        for (std::size_t k = 0; k < skip; ++k)
            line += std::string(width, ' ') + ' ';
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            const auto& s = alphabet.symbol(rows[i][j]);
            if (j > 0)
                line += ' ';
            line += std::string(width - s.size(), ' ') + s;
        }
        out += line + '\n';
    }
    return out;
}

inline std::string to_text(const Tableau& t) { return to_text(t.alphabet(), t.rows()); }

inline std::string to_text(const SkewTableau& t)
{
    return to_text(t.alphabet(), t.rows(), t.diagram().inner().parts());
}

} // namespace superplactic
