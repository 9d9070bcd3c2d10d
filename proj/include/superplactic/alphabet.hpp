#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace superplactic {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) noexcept
{
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr Parity flip(Parity p) noexcept
{
    return p == Parity::even ? Parity::odd : Parity::even;
}

/// A letter is its position in the governing alphabet; comparison is alphabet order.
struct Letter {
    std::uint32_t rank = 0;

    friend constexpr auto operator<=>(Letter, Letter) = default;
};

/// Finite totally ordered alphabet with a Z2 grading on its letters.
///
/// Immutable and cheap to copy (shared storage). Two alphabets compare equal when
/// they list the same symbols in the same order with the same parities.
class Alphabet {
public:
    static Alphabet make(std::vector<std::string> letters, const std::vector<int>& parities)
    {
        if (letters.size() != parities.size())
            fail(Errc::length_mismatch, "alphabet: " + std::to_string(letters.size()) + " letters but " +
                                            std::to_string(parities.size()) + " parities");
        std::vector<Parity> p;
        p.reserve(parities.size());
        for (std::size_t i = 0; i < parities.size(); ++i) {
            if (parities[i] != 0 && parities[i] != 1)
                fail(Errc::invalid_parity, "alphabet: parity of '" + letters[i] + "' must be 0 or 1, got " +
                                               std::to_string(parities[i]));
            p.push_back(static_cast<Parity>(parities[i]));
        }
        return Alphabet(std::move(letters), std::move(p));
    }

    Alphabet(std::vector<std::string> letters, std::vector<Parity> parities)
    {
        if (letters.size() != parities.size())
            fail(Errc::length_mismatch, "alphabet: letter and parity counts differ");
        auto data = std::make_shared<Data>();
        data->index.reserve(letters.size());
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (!data->index.emplace(letters[i], static_cast<std::uint32_t>(i)).second)
                fail(Errc::duplicate_letter, "alphabet: duplicate letter '" + letters[i] + "'");
        }
        data->symbols = std::move(letters);
        data->parities = std::move(parities);
        data_ = std::move(data);
    }

    /// Letters "1".."n" with the given parities.
    static Alphabet numbered(const std::vector<int>& parities)
    {
        std::vector<std::string> letters;
        for (std::size_t i = 1; i <= parities.size(); ++i)
            letters.push_back(std::to_string(i));
        return make(std::move(letters), parities);
    }

    static Alphabet uniform(std::size_t n, Parity parity)
    {
        return numbered(std::vector<int>(n, static_cast<int>(parity)));
    }

    std::size_t size() const noexcept { return data_->symbols.size(); }
    bool empty() const noexcept { return size() == 0; }

    bool contains(Letter x) const noexcept { return x.rank < size(); }

    const std::string& symbol(Letter x) const { return data_->symbols.at(x.rank); }
    Parity parity(Letter x) const { return data_->parities.at(x.rank); }
    bool is_even(Letter x) const { return parity(x) == Parity::even; }
    bool is_odd(Letter x) const { return parity(x) == Parity::odd; }

    Letter letter(std::size_t rank) const
    {
        if (rank >= size())
            fail(Errc::unknown_letter, "alphabet has no letter at position " + std::to_string(rank));
        return Letter{static_cast<std::uint32_t>(rank)};
    }

    std::optional<Letter> find(std::string_view symbol) const
    {
        auto it = data_->index.find(std::string(symbol));
        if (it == data_->index.end())
            return std::nullopt;
        return Letter{it->second};
    }

    Letter letter(std::string_view symbol) const
    {
        if (auto x = find(symbol))
            return *x;
        fail(Errc::unknown_letter, "letter '" + std::string(symbol) + "' is not in the alphabet");
    }

    void require(Letter x) const
    {
        if (!contains(x))
            fail(Errc::unknown_letter, "letter rank " + std::to_string(x.rank) + " is not in the alphabet");
    }

    const std::vector<std::string>& symbols() const noexcept { return data_->symbols; }
    const std::vector<Parity>& parities() const noexcept { return data_->parities; }

    std::vector<Letter> letters() const
    {
        std::vector<Letter> out(size());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = Letter{static_cast<std::uint32_t>(i)};
        return out;
    }

    std::vector<Letter> letters_of(Parity p) const
    {
        std::vector<Letter> out;
        for (Letter x : letters())
            if (parity(x) == p)
                out.push_back(x);
        return out;
    }

    /// L0 < L1: every even letter precedes every odd letter.
    bool even_before_odd() const noexcept { return grouped(Parity::even); }
    /// L1 < L0.
    bool odd_before_even() const noexcept { return grouped(Parity::odd); }

    /// `a` may sit immediately left of `b` in a row.
    bool row_compatible(Letter a, Letter b) const { return a < b || (a == b && is_even(a)); }
    /// `a` may sit immediately above `b` in a column.
    bool column_compatible(Letter a, Letter b) const { return a < b || (a == b && is_odd(a)); }

    /// Same letters and order, every parity flipped.
    Alphabet conjugate() const
    {
        std::vector<Parity> flipped;
        flipped.reserve(size());
        for (Parity p : data_->parities)
            flipped.push_back(flip(p));
        return Alphabet(data_->symbols, std::move(flipped));
    }

    bool same_storage(const Alphabet& other) const noexcept { return data_ == other.data_; }

    friend bool operator==(const Alphabet& a, const Alphabet& b)
    {
        return a.data_ == b.data_ ||
               (a.data_->symbols == b.data_->symbols && a.data_->parities == b.data_->parities);
    }

private:
    struct Data {
        std::vector<std::string> symbols;
        std::vector<Parity> parities;
        std::unordered_map<std::string, std::uint32_t> index;
    };

    bool grouped(Parity first) const noexcept
    {
        bool seen_other = false;
        for (Parity p : data_->parities) {
            if (p != first)
                seen_other = true;
            else if (seen_other)
                return false;
        }
        return true;
    }

    std::shared_ptr<const Data> data_;
};

inline Alphabet make_alphabet(std::vector<std::string> letters, const std::vector<int>& parities)
{
    return Alphabet::make(std::move(letters), parities);
}

inline Alphabet conjugate_alphabet(const Alphabet& a) { return a.conjugate(); }

inline void require_same(const Alphabet& a, const Alphabet& b, std::string_view context)
{
    if (!(a == b))
        fail(Errc::alphabet_mismatch, std::string(context) + ": operands are over different alphabets");
}

/// L x P with right-lexicographic order and additive parity.
class ProductAlphabet {
public:
    ProductAlphabet(Alphabet left, Alphabet right)
      : left_(std::move(left)), right_(std::move(right)), flat_(build(left_, right_))
    {
    }

    const Alphabet& left() const noexcept { return left_; }
    const Alphabet& right() const noexcept { return right_; }
    const Alphabet& alphabet() const noexcept { return flat_; }

    Letter pair(Letter a, Letter b) const
    {
        left_.require(a);
        right_.require(b);
        return Letter{static_cast<std::uint32_t>(b.rank * left_.size() + a.rank)};
    }

    std::pair<Letter, Letter> split(Letter ab) const
    {
        flat_.require(ab);
        auto n = static_cast<std::uint32_t>(left_.size());
        return {Letter{ab.rank % n}, Letter{ab.rank / n}};
    }

private:
    static Alphabet build(const Alphabet& l, const Alphabet& p)
    {
        std::vector<std::string> symbols;
        std::vector<Parity> parities;
        symbols.reserve(l.size() * p.size());
        for (Letter b : p.letters()) {
            for (Letter a : l.letters()) {
                symbols.push_back("(" + l.symbol(a) + "," + p.symbol(b) + ")");
                parities.push_back(l.parity(a) + p.parity(b));
            }
        }
        return Alphabet(std::move(symbols), std::move(parities));
    }

    Alphabet left_;
    Alphabet right_;
    Alphabet flat_;
};

inline ProductAlphabet product_alphabet(const Alphabet& l, const Alphabet& p)
{
    return ProductAlphabet(l, p);
}

} // namespace superplactic
