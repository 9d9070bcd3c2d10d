#include <gtest/gtest.h>

#include "support.hpp"

using namespace superplactic;
using namespace superplactic::testing;

namespace {

Tableau worked_t()
{
    return tab(odd_even_alphabet(), {{"1", "1", "1", "2", "4", "5"}, {"2", "3", "3", "4"}, {"2", "4"}, {"2", "4"}, {"2"}, {"3"}});
}

bool validates(const Tableau& t)
{
    try {
        Tableau::from_rows(t.alphabet(), t.rows());
        return true;
    } catch (const Error&) {
        return false;
    }
}

template <typename F>
void for_each_domain_tableau(F&& f)
{
    for (const auto& a : all_signatures_up_to(4))
        for_each_small_tableau(a, 6, [&](const Tableau& t) { f(a, t); });
}

} // namespace

TEST(Bumping, WorkedInsertions)
{
    Alphabet a = odd_even_alphabet();
    Insertion first = row_insert(worked_t(), a.letter("6"));
    EXPECT_EQ(first.row(), 1u);
    EXPECT_EQ(to_text(first.tableau), "1 1 1 2 4 5 6\n2 3 3 4\n2 4\n2 4\n2\n3\n");

    Insertion second = row_insert(first.tableau, a.letter("1"));
    EXPECT_EQ(second.row(), 7u);
    EXPECT_EQ(to_text(second.tableau), "1 1 1 1 4 5 6\n2 3 3 4\n2 4\n2 4\n2\n2\n3\n");
    ASSERT_EQ(second.trace.size(), 7u);
    EXPECT_TRUE(validates(second.tableau));

    Deletion back = row_delete(second.tableau, 7);
    EXPECT_EQ(back.tableau, first.tableau);
    EXPECT_EQ(back.letter, a.letter("1"));
}

TEST(Bumping, DeletionErrors)
{
    Tableau t = worked_t();
    auto code = [&](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::internal;
    };
    EXPECT_EQ(code([&] { row_delete(t, 0); }), Errc::empty_row);
    EXPECT_EQ(code([&] { row_delete(t, 7); }), Errc::empty_row);
    EXPECT_EQ(code([&] { row_delete(t, 3); }), Errc::not_a_corner);
    EXPECT_EQ(code([&] { col_delete(t, 7); }), Errc::empty_row);
    EXPECT_NO_THROW(col_delete(t, 1));
    EXPECT_EQ(code([&] { col_delete(t, 3); }), Errc::not_a_corner);
}

TEST(Bumping, InsertIntoEmpty)
{
    Alphabet a = interleaved4();
    for (Letter x : a.letters()) {
        Insertion r = row_insert(Tableau(a), x);
        Insertion c = col_insert(x, Tableau(a));
        EXPECT_EQ(r.tableau, c.tableau);
        EXPECT_EQ(r.box, (Cell{1, 1}));
    }
}

TEST(Bumping, RowInsertDeleteInverse)
{
    for_each_domain_tableau([](const Alphabet& a, const Tableau& t) {
        for (Letter x : a.letters()) {
            Insertion ins = row_insert(t, x);
            ASSERT_TRUE(validates(ins.tableau));
            ASSERT_EQ(ins.tableau.size(), t.size() + 1);
            ASSERT_EQ(ins.tableau.row_length(ins.row()), ins.box.col);
            Deletion d = row_delete(ins.tableau, ins.row());
            ASSERT_EQ(d.tableau, t);
            ASSERT_EQ(d.letter, x);
        }
    });
}

TEST(Bumping, ColumnInsertDeleteInverse)
{
    for_each_domain_tableau([](const Alphabet& a, const Tableau& t) {
        for (Letter x : a.letters()) {
            Insertion ins = col_insert(x, t);
            ASSERT_TRUE(validates(ins.tableau));
            ASSERT_EQ(ins.tableau.column_length(ins.column()), ins.box.row);
            Deletion d = col_delete(ins.tableau, ins.column());
            ASSERT_EQ(d.tableau, t);
            ASSERT_EQ(d.letter, x);
        }
    });
}

TEST(Bumping, DeleteInsertInverse)
{
    for_each_domain_tableau([](const Alphabet&, const Tableau& t) {
        const Partition shape = t.shape();
        for (std::size_t i = 1; i <= t.height(); ++i) {
            if (!shape.is_corner_row(i))
                continue;
            Deletion d = row_delete(t, i);
            ASSERT_TRUE(validates(d.tableau));
            Insertion ins = row_insert(d.tableau, d.letter);
            ASSERT_EQ(ins.tableau, t);
            ASSERT_EQ(ins.row(), i);

            std::size_t j = t.row_length(i);
            Deletion dc = col_delete(t, j);
            ASSERT_TRUE(validates(dc.tableau));
            Insertion cins = col_insert(dc.letter, dc.tableau);
            ASSERT_EQ(cins.tableau, t);
            ASSERT_EQ(cins.column(), j);
        }
    });
}

TEST(Bumping, RowColumnDuality)
{
    for (const auto& a : all_signatures_up_to(3))
        for_each_small_tableau(a, 5, [&](const Tableau& t) {
            Tableau tt = transpose(t);
            for (Letter x : a.letters()) {
                Insertion c = col_insert(x, t);
                Insertion r = row_insert(tt, x);
                ASSERT_EQ(transpose(r.tableau), c.tableau);
                ASSERT_EQ(r.box.row, c.box.col);
                ASSERT_EQ(r.box.col, c.box.row);
            }
            for (std::size_t j = 1; j <= t.width(); ++j) {
                if (!tt.shape().is_corner_row(j))
                    continue;
                Deletion c = col_delete(t, j);
                Deletion r = row_delete(tt, j);
                ASSERT_EQ(transpose(r.tableau), c.tableau);
                ASSERT_EQ(r.letter, c.letter);
            }
        });
}

TEST(Bumping, RowBumpingLemma)
{
    for_each_domain_tableau([](const Alphabet& a, const Tableau& t) {
        for (Letter x : a.letters()) {
            Insertion first = row_insert(t, x);
            for (Letter y : a.letters()) {
                Insertion second = row_insert(first.tableau, y);
                bool cond_a = a.row_compatible(x, y);
                bool cond_b = first.box.col < second.box.col;
                ASSERT_EQ(cond_a, cond_b);
                if (cond_b) {
                    ASSERT_GE(first.box.row, second.box.row);
                }
            }
        }
    });
}

TEST(Bumping, ColumnBumpingLemma)
{
    for_each_domain_tableau([](const Alphabet& a, const Tableau& t) {
        for (Letter x : a.letters()) {
            Insertion first = col_insert(x, t);
            for (Letter y : a.letters()) {
                Insertion second = col_insert(y, first.tableau);
                bool cond_a = a.column_compatible(x, y);
                bool cond_b = first.box.row < second.box.row;
                ASSERT_EQ(cond_a, cond_b);
                if (cond_b) {
                    ASSERT_GE(first.box.col, second.box.col);
                }
            }
        }
    });
}

TEST(Bumping, BumpingSequencesIncrease)
{
    for_each_domain_tableau([](const Alphabet& a, const Tableau& t) {
        for (Letter x : a.letters()) {
            auto trace = row_insert(t, x).trace;
            for (std::size_t q = 0; q + 1 < trace.size(); ++q) {
                ASSERT_LE(trace[q].letter, trace[q + 1].letter);
                if (trace[q].letter == trace[q + 1].letter) {
                    ASSERT_TRUE(a.is_odd(trace[q].letter));
                }
                // bumped positions move weakly left
                ASSERT_GE(trace[q].position, trace[q + 1].position);
            }
            auto ctrace = col_insert(x, t).trace;
            for (std::size_t q = 0; q + 1 < ctrace.size(); ++q) {
                ASSERT_LE(ctrace[q].letter, ctrace[q + 1].letter);
                if (ctrace[q].letter == ctrace[q + 1].letter) {
                    ASSERT_TRUE(a.is_even(ctrace[q].letter));
                }
                ASSERT_GE(ctrace[q].position, ctrace[q + 1].position);
            }
        }
    });
}

TEST(Bumping, TableauOfReadingWord)
{
    for (const auto& a : all_signatures_up_to(4))
        for_each_small_tableau(a, 6, [&](const Tableau& t) { ASSERT_EQ(tableau_of_word(word_of(t)), t); });
}

TEST(Bumping, FactorByRow)
{
    Alphabet a = mixed4();
    for_each_small_tableau(a, 4, [&](const Tableau& t) {
        for (std::size_t p = 0; p <= 3; ++p)
            for_each_small_tableau(a, p, [&](const Tableau& r) {
                if (r.size() != p || r.height() > 1)
                    return;
                Word w = word_of(r);
                Tableau u = row_insert_word(t, w);
                SkewDiagram strip(u.shape(), t.shape());
                ASSERT_TRUE(strip.is_horizontal_strip());
                auto [t2, w2] = factor_by_row(u, t.shape());
                ASSERT_EQ(t2, t);
                ASSERT_EQ(w2, w);
            });
    });
}
