#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "bumping.hpp"
#include "error.hpp"
#include "shape.hpp"
#include "tableau.hpp"

namespace superplactic {

/// One column (a, b) of a two-rowed array: a over the top alphabet, b over the bottom.
struct ArrayColumn {
    Letter top;
    Letter bottom;

    friend constexpr bool operator==(ArrayColumn, ArrayColumn) = default;
};

/// Right-lexicographic order on L x P: compare bottoms first, then tops.
constexpr bool product_less(ArrayColumn x, ArrayColumn y) noexcept
{
    return x.bottom < y.bottom || (x.bottom == y.bottom && x.top < y.top);
}

/// Signed two-rowed array over alphabets L (top) and P (bottom).
///
/// Columns weakly increase in the product order; two adjacent equal columns are allowed
/// only when |a| + |b| = 0.
class TwoRowedArray {
public:
    TwoRowedArray(Alphabet top, Alphabet bottom, std::vector<ArrayColumn> columns = {})
      : top_(std::move(top)), bottom_(std::move(bottom)), columns_(std::move(columns))
    {
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            top_.require(columns_[i].top);
            bottom_.require(columns_[i].bottom);
            if (i == 0)
                continue;
            const auto prev = columns_[i - 1];
            const auto cur = columns_[i];
            if (product_less(cur, prev))
                fail(Errc::unsorted_array, "two-rowed array: column " + std::to_string(i + 1) +
                                               " is smaller than column " + std::to_string(i));
            if (prev == cur && pair_parity(cur) == Parity::odd)
                fail(Errc::repeated_odd_pair, "two-rowed array: odd pair repeated at column " + std::to_string(i + 1));
        }
    }

    const Alphabet& top_alphabet() const noexcept { return top_; }
    const Alphabet& bottom_alphabet() const noexcept { return bottom_; }
    const std::vector<ArrayColumn>& columns() const noexcept { return columns_; }
    std::size_t size() const noexcept { return columns_.size(); }
    bool empty() const noexcept { return columns_.empty(); }

    Parity pair_parity(ArrayColumn c) const { return top_.parity(c.top) + bottom_.parity(c.bottom); }

    std::vector<Letter> top_row() const
    {
        std::vector<Letter> out;
        for (auto c : columns_)
            out.push_back(c.top);
        return out;
    }

    std::vector<Letter> bottom_row() const
    {
        std::vector<Letter> out;
        for (auto c : columns_)
            out.push_back(c.bottom);
        return out;
    }

    friend bool operator==(const TwoRowedArray& x, const TwoRowedArray& y)
    {
        return x.columns_ == y.columns_ && x.top_ == y.top_ && x.bottom_ == y.bottom_;
    }

private:
    Alphabet top_;
    Alphabet bottom_;
    std::vector<ArrayColumn> columns_;
};

inline TwoRowedArray validate_array(const std::vector<std::string>& top, const std::vector<std::string>& bottom,
                                    const Alphabet& l, const Alphabet& p)
{
    if (top.size() != bottom.size())
        fail(Errc::length_mismatch, "two-rowed array: rows have different lengths");
    std::vector<ArrayColumn> columns;
    for (std::size_t i = 0; i < top.size(); ++i)
        columns.push_back({l.letter(top[i]), p.letter(bottom[i])});
    return TwoRowedArray(l, p, std::move(columns));
}

struct TableauPair {
    Tableau insertion;
    Tableau recording;

    friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

/// S -> (T, U). Columns are processed left to right: an even bottom letter y row-inserts
/// the top letter into T and records y at the end of the reported row of U; an odd y
/// column-inserts and records y at the bottom of the reported column.
inline TableauPair rsk_forward(const TwoRowedArray& s)
{
    Tableau t(s.top_alphabet());
    Rows u;
    for (const auto& [x, y] : s.columns()) {
        Insertion ins = s.bottom_alphabet().is_even(y) ? row_insert(t, x) : col_insert(x, t);
        const auto [r, c] = ins.box;
        if (r > u.size())
            u.emplace_back();
        if (u[r - 1].size() + 1 != c)
            fail(Errc::internal, "rsk_forward: recording tableau lost shape");
        u[r - 1].push_back(y);
        t = std::move(ins.tableau);
    }
    try {
        return {std::move(t), Tableau::from_rows(s.bottom_alphabet(), std::move(u))};
    } catch (const Error& e) {
        fail(Errc::internal, std::string("rsk_forward: recording tableau is invalid: ") + e.what());
    }
}

/// (T, U) -> S. Repeatedly removes the largest entry y of U: for even y the copy in the
/// topmost row (a corner, last in its row) is removed and T row-deleted there; for odd y
/// the copy in the leftmost column, with T column-deleted. Extracted pairs are returned in
/// increasing product order.
inline TwoRowedArray rsk_inverse(const Tableau& t, const Tableau& u)
{
    if (!(t.shape() == u.shape()))
        fail(Errc::shape_mismatch, "rsk_inverse: T and U have different shapes");
    const Alphabet& p = u.alphabet();
    Tableau current = t;
    Rows rec = u.rows();
    std::vector<ArrayColumn> pairs;
    while (!rec.empty()) {
        Letter y = rec.front().back();
        for (const auto& row : rec)
            y = std::max(y, row.back());
        if (p.is_even(y)) {
            std::size_t i = 0;
            while (!(rec[i].back() == y && (i + 1 == rec.size() || rec[i + 1].size() < rec[i].size())))
                if (++i == rec.size())
                    fail(Errc::internal, "rsk_inverse: no removable copy of the largest entry");
            auto d = row_delete(current, i + 1);
            rec[i].pop_back();
            if (rec[i].empty())
                rec.pop_back();
            pairs.push_back({d.letter, y});
            current = std::move(d.tableau);
        } else {
            // Leftmost column whose bottom entry is y and is a corner.
            std::size_t best_col = 0;
            std::size_t best_row = 0;
            for (std::size_t i = 0; i < rec.size(); ++i) {
                bool corner = i + 1 == rec.size() || rec[i + 1].size() < rec[i].size();
                if (rec[i].back() == y && corner && (best_col == 0 || rec[i].size() < best_col)) {
                    best_col = rec[i].size();
                    best_row = i;
                }
            }
            if (best_col == 0)
                fail(Errc::internal, "rsk_inverse: no removable copy of the largest entry");
            auto d = col_delete(current, best_col);
            rec[best_row].pop_back();
            if (rec[best_row].empty())
                rec.pop_back();
            pairs.push_back({d.letter, y});
            current = std::move(d.tableau);
        }
    }
    std::stable_sort(pairs.begin(), pairs.end(), product_less);
    return TwoRowedArray(t.alphabet(), p, std::move(pairs));
}

inline TwoRowedArray rsk_inverse(const TableauPair& tu) { return rsk_inverse(tu.insertion, tu.recording); }

/// Letters "1".."n", all even: the place alphabet of the word embedding.
inline Alphabet place_alphabet(std::size_t n) { return Alphabet::uniform(n, Parity::even); }

/// w = x1...xn  ->  [x1 ... xn / 1 ... n].
inline TwoRowedArray word_to_array(const Word& w)
{
    std::vector<ArrayColumn> columns;
    for (std::size_t k = 0; k < w.size(); ++k)
        columns.push_back({w[k], Letter{static_cast<std::uint32_t>(k)}});
    return TwoRowedArray(w.alphabet(), place_alphabet(w.size()), std::move(columns));
}

/// Number of words in the plactic class of w: standard tableaux of the shape of T(w).
inline std::uint64_t class_size(const Word& w, std::size_t max_length = 9)
{
    if (w.size() > max_length)
        fail(Errc::length_bound_exceeded, "class_size: word length " + std::to_string(w.size()) +
                                              " exceeds bound " + std::to_string(max_length));
    return enumerate_standard(tableau_of_word(w).shape());
}

/// Swaps the rows and re-sorts over P x L.
inline TwoRowedArray array_involution(const TwoRowedArray& s)
{
    std::vector<ArrayColumn> swapped;
    for (auto c : s.columns())
        swapped.push_back({c.bottom, c.top});
    std::stable_sort(swapped.begin(), swapped.end(), product_less);
    return TwoRowedArray(s.bottom_alphabet(), s.top_alphabet(), std::move(swapped));
}

/// S -> (T, U) and S' -> (U, T).
inline bool has_symmetry(const TwoRowedArray& s)
{
    auto [t, u] = rsk_forward(s);
    auto [t2, u2] = rsk_forward(array_involution(s));
    return t2 == u && u2 == t;
}

/// Alphabets ordered L0 < L1 and P0 < P1, or L1 < L0 and P1 < P0, and every column of
/// pair parity 0.
inline bool susy_hypothesis(const TwoRowedArray& s)
{
    const auto& l = s.top_alphabet();
    const auto& p = s.bottom_alphabet();
    bool ordered = (l.even_before_odd() && p.even_before_odd()) || (l.odd_before_even() && p.odd_before_even());
    if (!ordered)
        return false;
    return std::all_of(s.columns().begin(), s.columns().end(),
                       [&](ArrayColumn c) { return s.pair_parity(c) == Parity::even; });
}

inline bool check_susy(const TwoRowedArray& s)
{
    if (!susy_hypothesis(s))
        fail(Errc::susy_hypothesis, "check_susy: alphabets or column parities violate the hypothesis");
    return has_symmetry(s);
}

/// S = [S0 S1] with S0 the columns over L0 x P0. Both halves keep the full alphabets.
inline std::pair<TwoRowedArray, TwoRowedArray> split_array(const TwoRowedArray& s)
{
    const auto& l = s.top_alphabet();
    const auto& p = s.bottom_alphabet();
    if (!(l.even_before_odd() && p.even_before_odd()))
        fail(Errc::susy_hypothesis, "split_array: requires L0 < L1 and P0 < P1");
    for (auto c : s.columns())
        if (l.parity(c.top) != p.parity(c.bottom))
            fail(Errc::susy_hypothesis, "split_array: column with |a| != |b|");
    auto cut = std::find_if(s.columns().begin(), s.columns().end(), [&](ArrayColumn c) { return p.is_odd(c.bottom); });
    return {TwoRowedArray(l, p, {s.columns().begin(), cut}), TwoRowedArray(l, p, {cut, s.columns().end()})};
}

/// Row i holds 1, 2, ..., lambda_i over the all-odd alphabet {1, ..., lambda_1}.
inline Tableau c_lambda(const Partition& lambda)
{
    Alphabet a = Alphabet::uniform(lambda.width(), Parity::odd);
    Rows rows;
    for (std::size_t len : lambda.parts()) {
        rows.emplace_back();
        for (std::size_t j = 0; j < len; ++j)
            rows.back().push_back(Letter{static_cast<std::uint32_t>(j)});
    }
    return Tableau::from_rows(a, std::move(rows));
}

/// Calls `visit(const TwoRowedArray&)` for every valid array over L, P with at most
/// `max_cols` columns, shortest first.
template <typename Visitor>
void for_each_array(const Alphabet& l, const Alphabet& p, std::size_t max_cols, Visitor&& visit)
{
    ProductAlphabet lp(l, p);
    const Alphabet& flat = lp.alphabet();
    std::vector<Letter> seq;
    auto rec = [&](auto& self, std::size_t remaining) -> void {
        if (remaining == 0) {
            std::vector<ArrayColumn> columns;
            for (Letter ab : seq) {
                auto [a, b] = lp.split(ab);
                columns.push_back({a, b});
            }
            visit(TwoRowedArray(l, p, std::move(columns)));
            return;
        }
        std::uint32_t start = seq.empty() ? 0 : seq.back().rank;
        for (std::uint32_t r = start; r < flat.size(); ++r) {
            Letter ab{r};
            if (!seq.empty() && !flat.row_compatible(seq.back(), ab))
                continue;
            seq.push_back(ab);
            self(self, remaining - 1);
            seq.pop_back();
        }
    };
    for (std::size_t n = 0; n <= max_cols; ++n)
        rec(rec, n);
}

struct SymmetryReport {
    static constexpr std::size_t examples_per_cell = 3;

    /// counts[hypothesis][symmetric]
    std::array<std::array<std::size_t, 2>, 2> counts{};
    std::array<std::array<std::vector<TwoRowedArray>, 2>, 2> examples;

    std::size_t total() const noexcept
    {
        return counts[0][0] + counts[0][1] + counts[1][0] + counts[1][1];
    }
};

/// Classifies every valid array with at most `max_cols` columns by whether it satisfies
/// the parity hypothesis of the symmetry proposition and whether it has symmetry.
template <typename Visitor>
SymmetryReport symmetry_probe(const Alphabet& l, const Alphabet& p, std::size_t max_cols, Visitor&& on_array,
                              std::size_t max_cols_bound = 8)
{
    if (max_cols > max_cols_bound)
        fail(Errc::size_bound_exceeded, "symmetry_probe: max_cols " + std::to_string(max_cols) + " exceeds bound " +
                                            std::to_string(max_cols_bound));
    SymmetryReport report;
    for_each_array(l, p, max_cols, [&](const TwoRowedArray& s) {
        bool hyp = susy_hypothesis(s);
        bool sym = has_symmetry(s);
        ++report.counts[hyp][sym];
        auto& ex = report.examples[hyp][sym];
        if (ex.size() < SymmetryReport::examples_per_cell)
            ex.push_back(s);
        on_array(s, hyp, sym);
    });
    return report;
}

inline SymmetryReport symmetry_probe(const Alphabet& l, const Alphabet& p, std::size_t max_cols)
{
    return symmetry_probe(l, p, max_cols, [](const TwoRowedArray&, bool, bool) {});
}

} // namespace superplactic
