#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "bumping.hpp"
#include "error.hpp"
#include "plactic.hpp"
#include "shape.hpp"
#include "tableau.hpp"

namespace superplactic {

/// Element of the plactic group ring: integer combination of tableaux over one alphabet.
class FormalSum {
public:
    using Terms = std::map<Tableau, std::int64_t, TableauOrder>;

    explicit FormalSum(Alphabet alphabet)
      : alphabet_(std::move(alphabet))
    {
    }

    /// The empty tableau with coefficient 1.
    static FormalSum unity(const Alphabet& alphabet)
    {
        FormalSum f(alphabet);
        f.add(Tableau(alphabet), 1);
        return f;
    }

    static FormalSum single(const Tableau& t, std::int64_t coeff = 1)
    {
        FormalSum f(t.alphabet());
        f.add(t, coeff);
        return f;
    }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }

    std::int64_t coefficient(const Tableau& t) const
    {
        auto it = terms_.find(t);
        return it == terms_.end() ? 0 : it->second;
    }

    void add(const Tableau& t, std::int64_t coeff)
    {
        require_same(alphabet_, t.alphabet(), "formal sum");
        if (coeff == 0)
            return;
        auto [it, inserted] = terms_.emplace(t, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    FormalSum& operator+=(const FormalSum& g)
    {
        require_same(alphabet_, g.alphabet_, "formal sum");
        for (const auto& [t, c] : g.terms_)
            add(t, c);
        return *this;
    }

    friend FormalSum operator+(FormalSum f, const FormalSum& g) { return f += g; }

    friend FormalSum operator-(FormalSum f, const FormalSum& g)
    {
        require_same(f.alphabet_, g.alphabet_, "formal sum");
        for (const auto& [t, c] : g.terms_)
            f.add(t, -c);
        return f;
    }

    friend bool operator==(const FormalSum& f, const FormalSum& g)
    {
        return f.alphabet_ == g.alphabet_ && f.terms_ == g.terms_;
    }

private:
    Alphabet alphabet_;
    Terms terms_;
};

/// T . T' := T(w(T) w(T')).
inline Tableau tableau_product(const Tableau& t, const Tableau& u)
{
    require_same(t.alphabet(), u.alphabet(), "tableau product");
    return row_insert_word(t, word_of(u));
}

inline FormalSum ring_product(const FormalSum& f, const FormalSum& g)
{
    require_same(f.alphabet(), g.alphabet(), "ring_product");
    FormalSum out(f.alphabet());
    for (const auto& [t, a] : f.terms())
        for (const auto& [u, b] : g.terms())
            out.add(tableau_product(t, u), a * b);
    return out;
}

/// Sum of all tableaux of shape lambda.
inline FormalSum s_lambda(const Partition& lambda, const Alphabet& alphabet)
{
    FormalSum f(alphabet);
    for_each_tableau(lambda, alphabet, [&](const Tableau& t) { f.add(t, 1); });
    return f;
}

/// Sum of all row words of length p, as one-row tableaux.
inline FormalSum s_row(std::size_t p, const Alphabet& alphabet)
{
    return p == 0 ? FormalSum::unity(alphabet) : s_lambda(Partition{p}, alphabet);
}

/// Sum of all column words of length p, as one-column tableaux.
inline FormalSum s_col(std::size_t p, const Alphabet& alphabet)
{
    return p == 0 ? FormalSum::unity(alphabet) : s_lambda(Partition(std::vector<std::size_t>(p, 1)), alphabet);
}

enum class PieriMode { row, col };

struct PieriShapeDiff {
    Partition shape;
    /// mu / lambda is a strip of the requested kind, so S_mu belongs on the right side.
    bool expected = false;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
    /// Tableaux of this shape whose coefficients differ between the two sides.
    std::size_t mismatched = 0;
};

struct PieriReport {
    bool equal = false;
    Partition lambda;
    std::size_t p = 0;
    PieriMode mode = PieriMode::row;
    std::vector<PieriShapeDiff> shapes;
};

struct PieriLimits {
    std::size_t max_total = 8;
    std::size_t max_alphabet = 6;
};

/// Compares S_lambda . S_(p) (row) or S_lambda . S_(1^p) (col) with the sum of S_mu over
/// mu/lambda a horizontal (vertical) strip of size p.
inline PieriReport pieri_check(const Partition& lambda, std::size_t p, const Alphabet& alphabet, PieriMode mode,
                               const PieriLimits& limits = {})
{
    if (lambda.size() + p > limits.max_total || alphabet.size() > limits.max_alphabet)
        fail(Errc::size_bound_exceeded, "pieri_check: |lambda| + p must be <= " + std::to_string(limits.max_total) +
                                            " and |A| <= " + std::to_string(limits.max_alphabet));
    FormalSum lhs = ring_product(s_lambda(lambda, alphabet), mode == PieriMode::row ? s_row(p, alphabet)
                                                                                   : s_col(p, alphabet));
    FormalSum rhs(alphabet);
    PieriReport report;
    report.lambda = lambda;
    report.p = p;
    report.mode = mode;
    for (const Partition& mu : partitions_of(lambda.size() + p)) {
        bool strip = false;
        if (mu.contains(lambda)) {
            SkewDiagram skew(mu, lambda);
            strip = mode == PieriMode::row ? skew.is_horizontal_strip() : skew.is_vertical_strip();
        }
        if (strip)
            rhs += s_lambda(mu, alphabet);
        PieriShapeDiff diff;
        diff.shape = mu;
        diff.expected = strip;
        report.shapes.push_back(std::move(diff));
    }
    auto index_of = [&](const Partition& shape) -> PieriShapeDiff& {
        for (auto& d : report.shapes)
            if (d.shape == shape)
                return d;
        fail(Errc::internal, "pieri_check: product produced a tableau of unexpected size");
    };
    for (const auto& [t, c] : lhs.terms()) {
        auto& d = index_of(t.shape());
        ++d.lhs_terms;
        if (rhs.coefficient(t) != c)
            ++d.mismatched;
    }
    for (const auto& [t, c] : rhs.terms()) {
        auto& d = index_of(t.shape());
        ++d.rhs_terms;
        if (lhs.coefficient(t) == 0)
            ++d.mismatched;
    }
    report.equal = lhs == rhs;
    return report;
}

} // namespace superplactic
