#include <gtest/gtest.h>

#include "support.hpp"

using namespace superplactic;
using namespace superplactic::testing;

namespace {

Alphabet greene_alphabet() { return Alphabet::numbered({0, 0, 1, 0, 1}); }

std::vector<int> ints(const Word& w)
{
    std::vector<int> out;
    for (Letter x : w.letters())
        out.push_back(static_cast<int>(x.rank));
    return out;
}

} // namespace

TEST(Plactic, Z2Degree)
{
    Alphabet a = Alphabet::numbered({0, 0, 1});
    EXPECT_EQ(z2_degree(word(a, "")), Parity::even);
    EXPECT_EQ(z2_degree(word(a, "3")), Parity::odd);
    EXPECT_EQ(z2_degree(word(a, "3,3")), Parity::even);
    EXPECT_EQ(z2_degree(word(a, "1,3,2")), Parity::odd);
}

TEST(Plactic, RowAndColumnWords)
{
    Alphabet a = Alphabet::numbered({0, 0, 1});
    EXPECT_TRUE(is_row_word(word(a, "1,1,2")));
    EXPECT_FALSE(is_row_word(word(a, "3,3")));
    EXPECT_TRUE(is_column_word(word(a, "3,3")));
    EXPECT_TRUE(is_column_word(word(a, "3,2,1")));
    EXPECT_FALSE(is_column_word(word(a, "1,1")));
    EXPECT_FALSE(is_column_word(word(a, "1,2")));
    for (const auto& sig : all_signatures_up_to(4))
        for_each_word_up_to(sig, 2, [](const Word& w) { ASSERT_TRUE(is_row_word(w) || is_column_word(w)); });
}

TEST(Plactic, ColumnWordsAreOneColumnReadings)
{
    for (const auto& a : all_signatures(3))
        for_each_word_up_to(a, 4, [&](const Word& w) {
            bool one_column = false;
            if (!w.empty()) {
                Rows rows;
                for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
                    rows.push_back({*it});
                try {
                    Tableau::from_rows(a, rows);
                    one_column = true;
                } catch (const Error&) {
                }
            }
            ASSERT_EQ(is_column_word(w), one_column || w.empty());
        });
}

TEST(Plactic, ShortWordsHaveNoNeighbors)
{
    Alphabet a = mixed4();
    for_each_word_up_to(a, 2, [](const Word& w) { ASSERT_TRUE(knuth_neighbors(w).empty()); });
}

TEST(Plactic, KnuthMovesOnExample)
{
    // x z y -> z x y with x <= y <= z, x = y only for even y, y = z only for odd y
    Alphabet a = mixed4();
    auto n = knuth_neighbors(word(a, "1,3,3"));
    EXPECT_TRUE(n.count(word(a, "3,1,3")));
    auto m = knuth_neighbors(word(a, "3,1,3"));
    EXPECT_TRUE(m.count(word(a, "1,3,3")));
    // y = z = 2 even: (K1) does not apply
    EXPECT_FALSE(knuth_neighbors(word(a, "1,2,2")).count(word(a, "2,1,2")));
}

TEST(Plactic, ClassicalKnuthOracle)
{
    Alphabet a = Alphabet::uniform(3, Parity::even);
    for_each_word_up_to(a, 6, [&](const Word& w) {
        std::set<std::vector<int>> got;
        for (const Word& v : knuth_neighbors(w))
            got.insert(ints(v));
        ASSERT_EQ(got, classical_knuth_neighbors(ints(w)));
    });
}

TEST(Plactic, MovesPreserveContentAndDegree)
{
    for (const auto& a : all_signatures(4))
        for_each_word(a, 4, [](const Word& w) {
            auto content = w.letters();
            std::sort(content.begin(), content.end());
            for (const Word& v : knuth_neighbors(w)) {
                auto c = v.letters();
                std::sort(c.begin(), c.end());
                ASSERT_EQ(c, content);
                ASSERT_EQ(z2_degree(v), z2_degree(w));
                ASSERT_TRUE(knuth_neighbors(v).count(w));
            }
        });
}

TEST(Plactic, KnuthTripleTableaux)
{
    for (const auto& a : all_signatures(4)) {
        for (Letter x : a.letters())
            for (Letter y : a.letters())
                for (Letter z : a.letters()) {
                    if (a.row_compatible(x, y) && a.column_compatible(y, z)) {
                        Word w(a, {x, z, y});
                        Tableau expected = Tableau::from_rows(a, {{x, y}, {z}});
                        ASSERT_EQ(tableau_of_word(w), expected);
                        ASSERT_EQ(tableau_of_word(Word(a, {z, x, y})), expected);
                    }
                    if (a.column_compatible(x, y) && a.row_compatible(y, z)) {
                        Tableau expected = Tableau::from_rows(a, {{x, z}, {y}});
                        ASSERT_EQ(tableau_of_word(Word(a, {y, x, z})), expected);
                        ASSERT_EQ(tableau_of_word(Word(a, {y, z, x})), expected);
                    }
                }
    }
}

TEST(Plactic, CrossSection)
{
    for (const auto& a : {mixed4(), interleaved4()})
        for_each_word_up_to(a, 5, [&](const Word& w) {
            Tableau t = tableau_of_word(w);
            std::set<Word> fiber;
            for (const auto& letters : rearrangements(w)) {
                Word v(a, letters);
                if (tableau_of_word(v) == t)
                    fiber.insert(v);
            }
            ASSERT_EQ(plactic_class(w), fiber);
        });
}

TEST(Plactic, Equivalence)
{
    Alphabet a = mixed4();
    for_each_word_up_to(a, 5, [&](const Word& w) { ASSERT_TRUE(equivalent(w, canonical(w))); });
    // distinct row words are never equivalent
    EXPECT_FALSE(equivalent(word(a, "1,1,2"), word(a, "1,2,2")));
    EXPECT_FALSE(equivalent(word(a, "1,2,3"), word(a, "1,2,4")));
}

TEST(Plactic, CanonicalIdempotent)
{
    Alphabet a = interleaved4();
    for_each_word_up_to(a, 5, [&](const Word& w) {
        Word c = canonical(w);
        ASSERT_EQ(canonical(c), c);
        PlacticClass pc(w);
        ASSERT_EQ(pc.canonical, c);
    });
}

TEST(Plactic, ClassBounds)
{
    Alphabet a = mixed4();
    EXPECT_EQ(plactic_class(word(a, "2")), std::set<Word>{word(a, "2")});
    try {
        plactic_class(word(a, "1,2,3,4,1,2,3,4,1,2"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::length_bound_exceeded);
    }
    try {
        plactic_class(word(a, "4,3,2,1,4,3,2"), ClassLimits{9, 5});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::state_cap_exceeded);
    }
}

TEST(Plactic, GreeneExample)
{
    Word w = word(greene_alphabet(), "1,2,3,3,4,5,5");
    EXPECT_EQ(greene_row(w, 1), 5u);
    EXPECT_EQ(greene_row(w, 2), 7u);
    EXPECT_EQ(greene_row(w, 3), 7u);
    const std::size_t col[] = {2, 4, 5, 6, 7};
    for (std::size_t k = 1; k <= 5; ++k) {
        EXPECT_EQ(greene_col(w, k), col[k - 1]) << "k = " << k;
        EXPECT_EQ(greene_via_shape(w, k, GreeneMode::col), col[k - 1]);
    }
    EXPECT_EQ(greene_via_shape(w, 1, GreeneMode::row), 5u);
    EXPECT_EQ(greene_via_shape(w, 2, GreeneMode::row), 7u);
}

TEST(Plactic, GreeneTrivialCases)
{
    Alphabet a = mixed4();
    EXPECT_EQ(greene_row(word(a, ""), 3), 0u);
    EXPECT_EQ(greene_col(word(a, "3,1"), 0), 0u);
    EXPECT_EQ(greene_row(word(a, "4,3,2,1"), 10), 4u);
    EXPECT_EQ(greene_via_shape(word(a, "4,3,2,1"), 10, GreeneMode::row), 4u);
    try {
        greene_row(word(a, "1,2,3,4,1,2,3,4,1,2,3"), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::length_bound_exceeded);
    }
}

TEST(Plactic, GreeneTheoremSmall)
{
    for (const auto& a : all_signatures(3))
        for_each_word_up_to(a, 6, [&](const Word& w) {
            for (std::size_t k = 1; k <= 4; ++k) {
                ASSERT_EQ(greene_row(w, k), greene_via_shape(w, k, GreeneMode::row));
                ASSERT_EQ(greene_col(w, k), greene_via_shape(w, k, GreeneMode::col));
            }
        });
}

TEST(Plactic, GreeneInvariantAlongMoves)
{
    Alphabet a = interleaved4();
    for_each_word(a, 6, [&](const Word& w) {
        for (const Word& v : knuth_neighbors(w))
            for (std::size_t k = 1; k <= 3; ++k) {
                ASSERT_EQ(greene_row(w, k), greene_row(v, k));
                ASSERT_EQ(greene_col(w, k), greene_col(v, k));
            }
    });
}
