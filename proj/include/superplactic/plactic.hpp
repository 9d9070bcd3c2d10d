#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "bumping.hpp"
#include "error.hpp"
#include "shape.hpp"
#include "tableau.hpp"

namespace superplactic {

inline Parity z2_degree(const Word& w)
{
    Parity p = Parity::even;
    for (Letter x : w.letters())
        p = p + w.alphabet().parity(x);
    return p;
}

inline bool is_row_word(const Word& w)
{
    const auto& xs = w.letters();
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        if (!w.alphabet().row_compatible(xs[i], xs[i + 1]))
            return false;
    return true;
}

/// Reading word of a one-column tableau: weakly decreasing, repeats only at odd letters.
inline bool is_column_word(const Word& w)
{
    const auto& xs = w.letters();
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        if (!w.alphabet().column_compatible(xs[i + 1], xs[i]))
            return false;
    return true;
}

namespace detail {

/// x <= y <= z with "x = y only if |y| = 0" and "y = z only if |y| = 1".
inline bool k1_triple(const Alphabet& a, Letter x, Letter y, Letter z)
{
    return a.row_compatible(x, y) && a.column_compatible(y, z);
}

/// x <= y <= z with "x = y only if |y| = 1" and "y = z only if |y| = 0".
inline bool k2_triple(const Alphabet& a, Letter x, Letter y, Letter z)
{
    return a.column_compatible(x, y) && a.row_compatible(y, z);
}

struct LetterSeqHash {
    std::size_t operator()(const std::vector<Letter>& v) const noexcept
    {
        std::uint64_t h = 1469598103934665603ull;
        for (Letter x : v) {
            h ^= x.rank + 1;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

template <typename Visitor>
void for_each_knuth_move(const Alphabet& a, const std::vector<Letter>& w, Visitor&& visit)
{
    for (std::size_t p = 0; p + 2 < w.size(); ++p) {
        Letter u = w[p], v = w[p + 1], s = w[p + 2];
        // (K1) x z y <-> z x y: the first two letters swap.
        if (k1_triple(a, u, s, v) || k1_triple(a, v, s, u)) {
            auto next = w;
            std::swap(next[p], next[p + 1]);
            visit(std::move(next));
        }
        // (K2) y x z <-> y z x: the last two letters swap.
        if (k2_triple(a, v, u, s) || k2_triple(a, s, u, v)) {
            auto next = w;
            std::swap(next[p + 1], next[p + 2]);
            visit(std::move(next));
        }
    }
}

} // namespace detail

/// Every word one signed Knuth move (K1 or K2, either direction, any position) away from w.
inline std::set<Word> knuth_neighbors(const Word& w)
{
    std::set<Word> out;
    detail::for_each_knuth_move(w.alphabet(), w.letters(),
                                [&](std::vector<Letter> next) { out.insert(Word(w.alphabet(), std::move(next))); });
    return out;
}

struct ClassLimits {
    std::size_t max_length = 9;
    std::size_t max_states = 1'000'000;
};

/// Closure of {w} under Knuth moves, by breadth-first search.
inline std::set<Word> plactic_class(const Word& w, const ClassLimits& limits = {})
{
    if (w.size() > limits.max_length)
        fail(Errc::length_bound_exceeded, "plactic_class: word length " + std::to_string(w.size()) +
                                              " exceeds bound " + std::to_string(limits.max_length));
    const Alphabet& a = w.alphabet();
    std::unordered_set<std::vector<Letter>, detail::LetterSeqHash> seen{w.letters()};
    std::deque<std::vector<Letter>> frontier{w.letters()};
    while (!frontier.empty()) {
        auto current = std::move(frontier.front());
        frontier.pop_front();
        detail::for_each_knuth_move(a, current, [&](std::vector<Letter> next) {
            if (seen.insert(next).second) {
                if (seen.size() > limits.max_states)
                    fail(Errc::state_cap_exceeded,
                         "plactic_class: more than " + std::to_string(limits.max_states) + " words");
                frontier.push_back(std::move(next));
            }
        });
    }
    std::set<Word> out;
    for (const auto& letters : seen)
        out.insert(Word(a, letters));
    return out;
}

/// w ~ w' iff T(w) = T(w').
inline bool equivalent(const Word& w, const Word& v)
{
    require_same(w.alphabet(), v.alphabet(), "equivalent");
    return tableau_of_word(w) == tableau_of_word(v);
}

/// Reading word of T(w): the cross-section representative of w's class.
inline Word canonical(const Word& w) { return word_of(tableau_of_word(w)); }

struct PlacticClass {
    Word representative;
    Word canonical;

    explicit PlacticClass(Word w)
      : representative(w), canonical(superplactic::canonical(w))
    {
    }
};

enum class GreeneMode { row, col };

struct GreeneLimits {
    std::size_t max_length_small_k = 10;
    std::size_t max_length = 8;
    std::size_t small_k = 3;
};

/// l_k(w) (row mode) or l~_k(w) (col mode) by exhaustive search over families of k
/// index-disjoint row (column) subwords.
///
/// Row and column subwords are closed under taking subsequences, so a family of k
/// disjoint subwords covers exactly the position sets that are a union of k admissible
/// sets. The search enumerates every admissible position subset and grows the reachable
/// unions one subword at a time.
inline std::size_t greene_brute_force(const Word& w, std::size_t k, GreeneMode mode, const GreeneLimits& limits = {})
{
    const std::size_t n = w.size();
    if (k == 0 || n == 0)
        return 0;
    if (k >= n)
        return n;
    std::size_t bound = k <= limits.small_k ? limits.max_length_small_k : limits.max_length;
    if (n > bound)
        fail(Errc::length_bound_exceeded, "greene: word length " + std::to_string(n) + " exceeds bound " +
                                              std::to_string(bound) + " for k = " + std::to_string(k));
    const Alphabet& a = w.alphabet();
    const auto& xs = w.letters();
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;

    std::vector<char> admissible(full + 1, 0);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        bool ok = true;
        int prev = -1;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(mask >> i & 1u))
                continue;
            if (prev >= 0) {
                Letter p = xs[static_cast<std::size_t>(prev)];
                ok = mode == GreeneMode::row ? a.row_compatible(p, xs[i]) : a.column_compatible(xs[i], p);
            }
            prev = static_cast<int>(i);
        }
        admissible[mask] = ok;
    }
    // Only inclusion-maximal admissible sets matter when unions may overlap.
    std::vector<std::uint32_t> maximal;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        if (!admissible[mask])
            continue;
        bool is_max = true;
        for (std::size_t i = 0; i < n && is_max; ++i)
            if (!(mask >> i & 1u) && admissible[mask | (1u << i)])
                is_max = false;
        if (is_max)
            maximal.push_back(mask);
    }

    std::vector<char> reach(full + 1, 0);
    reach[0] = 1;
    for (std::size_t step = 0; step < k; ++step) {
        std::vector<char> next(full + 1, 0);
        for (std::uint32_t mask = 0; mask <= full; ++mask) {
            if (!reach[mask])
                continue;
            for (std::uint32_t m : maximal)
                next[mask | m] = 1;
        }
        reach = std::move(next);
    }
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask <= full; ++mask)
        if (reach[mask])
            best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    return best;
}

inline std::size_t greene_row(const Word& w, std::size_t k, const GreeneLimits& limits = {})
{
    return greene_brute_force(w, k, GreeneMode::row, limits);
}

inline std::size_t greene_col(const Word& w, std::size_t k, const GreeneLimits& limits = {})
{
    return greene_brute_force(w, k, GreeneMode::col, limits);
}

/// Partial sums of the shape of T(w) (row) or of its conjugate (col).
inline std::size_t greene_via_shape(const Word& w, std::size_t k, GreeneMode mode)
{
    Partition shape = tableau_of_word(w).shape();
    return mode == GreeneMode::row ? shape.partial_sum(k) : shape.conjugate().partial_sum(k);
}

} // namespace superplactic
