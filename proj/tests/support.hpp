#pragma once

// Fixtures, enumerators and independent oracles shared by the unit and acceptance suites.
// Nothing here calls into the insertion code it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "superplactic/io.hpp"
#include "superplactic/superplactic.hpp"

namespace superplactic::testing {

/// Letters 1..6 with L0 = odd numbers.
inline Alphabet odd_even_alphabet(std::size_t n = 6)
{
    std::vector<int> parities;
    for (std::size_t i = 1; i <= n; ++i)
        parities.push_back(i % 2 == 1 ? 0 : 1);
    return Alphabet::numbered(parities);
}

/// 1 < 2 < 3 < 4 with L0 = {1,2}, L1 = {3,4}.
inline Alphabet mixed4() { return Alphabet::numbered({0, 0, 1, 1}); }

/// 1 < 2 < 3 < 4 with L0 = {1,3}, L1 = {2,4}.
inline Alphabet interleaved4() { return Alphabet::numbered({0, 1, 0, 1}); }

/// Every signature on letters 1..n.
inline std::vector<Alphabet> all_signatures(std::size_t n)
{
    std::vector<Alphabet> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> p;
        for (std::size_t i = 0; i < n; ++i)
            p.push_back(static_cast<int>(mask >> i & 1u));
        out.push_back(Alphabet::numbered(p));
    }
    return out;
}

/// Every signature on 1..n for every n in [1, max_n].
inline std::vector<Alphabet> all_signatures_up_to(std::size_t max_n)
{
    std::vector<Alphabet> out;
    for (std::size_t n = 1; n <= max_n; ++n)
        for (auto& a : all_signatures(n))
            out.push_back(a);
    return out;
}

inline Tableau tab(const Alphabet& a, const std::vector<std::vector<std::string>>& rows) { return validate(rows, a); }

inline Word word(const Alphabet& a, const std::string& csv) { return io::parse_word(csv, a); }

template <typename F>
void for_each_word(const Alphabet& a, std::size_t length, F&& f)
{
    std::vector<Letter> w(length);
    auto rec = [&](auto& self, std::size_t i) -> void {
        if (i == length) {
            f(Word(a, w));
            return;
        }
        for (Letter x : a.letters()) {
            w[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

template <typename F>
void for_each_word_up_to(const Alphabet& a, std::size_t max_length, F&& f)
{
    for (std::size_t n = 0; n <= max_length; ++n)
        for_each_word(a, n, f);
}

/// Every tableau with at most max_cells boxes.
template <typename F>
void for_each_small_tableau(const Alphabet& a, std::size_t max_cells, F&& f)
{
    for (std::size_t n = 0; n <= max_cells; ++n)
        for (const auto& shape : partitions_of(n))
            for_each_tableau(shape, a, f);
}

/// f^lambda = n! / prod(hook lengths).
inline std::uint64_t hook_length_count(const Partition& shape)
{
    const auto conj = shape.conjugate();
    std::uint64_t num = 1;
    for (std::uint64_t k = 2; k <= shape.size(); ++k)
        num *= k;
    std::uint64_t den = 1;
    for (std::size_t i = 1; i <= shape.height(); ++i)
        for (std::size_t j = 1; j <= shape.part(i); ++j)
            den *= (shape.part(i) - j) + (conj.part(j) - i) + 1;
    return num / den;
}

/// Classical Knuth moves on integer words: yzx <-> yxz for x < y <= z, xzy <-> zxy for x <= y < z.
inline std::set<std::vector<int>> classical_knuth_neighbors(const std::vector<int>& w)
{
    std::set<std::vector<int>> out;
    for (std::size_t p = 0; p + 2 < w.size(); ++p) {
        int a = w[p], b = w[p + 1], c = w[p + 2];
        // y z x -> y x z  (x < y <= z): a = y, b = z, c = x
        if (c < a && a <= b) {
            auto v = w;
            std::swap(v[p + 1], v[p + 2]);
            out.insert(v);
        }
        // y x z -> y z x
        if (b < a && a <= c) {
            auto v = w;
            std::swap(v[p + 1], v[p + 2]);
            out.insert(v);
        }
        // x z y -> z x y  (x <= y < z): a = x, b = z, c = y
        if (a <= c && c < b) {
            auto v = w;
            std::swap(v[p], v[p + 1]);
            out.insert(v);
        }
        // z x y -> x z y
        if (b <= c && c < a) {
            auto v = w;
            std::swap(v[p], v[p + 1]);
            out.insert(v);
        }
    }
    return out;
}

/// All distinct rearrangements of w's letters.
inline std::set<std::vector<Letter>> rearrangements(const Word& w)
{
    std::vector<Letter> v = w.letters();
    std::sort(v.begin(), v.end());
    std::set<std::vector<Letter>> out;
    do {
        out.insert(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace superplactic::testing
