#include <gtest/gtest.h>

#include "support.hpp"

using namespace superplactic;
using namespace superplactic::testing;

TEST(Ring, Generators)
{
    Alphabet a = Alphabet::numbered({0, 1});
    FormalSum row = s_row(2, a);
    EXPECT_EQ(row.size(), 2u);
    EXPECT_EQ(row.coefficient(tab(a, {{"1", "1"}})), 1);
    EXPECT_EQ(row.coefficient(tab(a, {{"1", "2"}})), 1);
    FormalSum col = s_col(2, a);
    EXPECT_EQ(col.size(), 2u);
    EXPECT_EQ(col.coefficient(tab(a, {{"2"}, {"2"}})), 1);
    EXPECT_EQ(s_row(0, a), FormalSum::unity(a));
    EXPECT_EQ(s_lambda(Partition{2, 1}, a).size(), enumerate_tableaux(Partition{2, 1}, a).size());
}

TEST(Ring, Arithmetic)
{
    Alphabet a = mixed4();
    FormalSum f = s_lambda(Partition{2}, a);
    FormalSum zero(a);
    EXPECT_EQ(f - f, zero);
    EXPECT_EQ(f + zero, f);
    FormalSum twice = f + f;
    for (const auto& [t, c] : twice.terms())
        EXPECT_EQ(c, 2);
    EXPECT_EQ(ring_product(FormalSum::unity(a), f), f);
    EXPECT_EQ(ring_product(f, FormalSum::unity(a)), f);
    EXPECT_EQ(ring_product(f, zero), zero);
}

TEST(Ring, AlphabetMismatchRejected)
{
    FormalSum f(mixed4());
    try {
        f += FormalSum::unity(interleaved4());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::alphabet_mismatch);
    }
}

TEST(Ring, ProductIsAssociative)
{
    Alphabet a = Alphabet::numbered({0, 1, 1});
    FormalSum x = s_lambda(Partition{1}, a);
    FormalSum y = s_row(2, a);
    FormalSum z = s_col(2, a);
    EXPECT_EQ(ring_product(ring_product(x, y), z), ring_product(x, ring_product(y, z)));
}

TEST(Ring, TableauProductMatchesConcatenation)
{
    Alphabet a = interleaved4();
    for_each_small_tableau(a, 3, [&](const Tableau& t) {
        for_each_small_tableau(a, 2, [&](const Tableau& u) {
            Tableau tu = tableau_product(t, u);
            ASSERT_EQ(tu, tableau_of_word(word_of(t) * word_of(u)));
            ASSERT_EQ(tu.size(), t.size() + u.size());
        });
    });
}

TEST(Ring, PieriRow)
{
    for (const Alphabet& a : {Alphabet::numbered({0, 1, 0}), mixed4()})
        for (std::size_t n = 0; n <= 3; ++n)
            for (const auto& lambda : partitions_of(n))
                for (std::size_t p = 0; p <= 2; ++p) {
                    PieriReport r = pieri_check(lambda, p, a, PieriMode::row);
                    ASSERT_TRUE(r.equal) << "lambda size " << n << " p " << p;
                }
}

TEST(Ring, PieriColumn)
{
    for (const Alphabet& a : {Alphabet::numbered({1, 0, 1}), interleaved4()})
        for (std::size_t n = 0; n <= 3; ++n)
            for (const auto& lambda : partitions_of(n))
                for (std::size_t p = 0; p <= 2; ++p)
                    ASSERT_TRUE(pieri_check(lambda, p, a, PieriMode::col).equal);
}

TEST(Ring, PieriReportShapes)
{
    Alphabet a = mixed4();
    PieriReport r = pieri_check(Partition{1}, 1, a, PieriMode::row);
    ASSERT_EQ(r.shapes.size(), 2u);
    for (const auto& d : r.shapes) {
        EXPECT_TRUE(d.expected);
        EXPECT_EQ(d.lhs_terms, d.rhs_terms);
        EXPECT_EQ(d.mismatched, 0u);
    }
    try {
        pieri_check(Partition{4, 3}, 2, a, PieriMode::row);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::size_bound_exceeded);
    }
}
