#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace superplactic {

/// Domain error categories. The CLI prints `name(code)` on the diagnostic stream.
enum class Errc {
    duplicate_letter,
    length_mismatch,
    invalid_parity,
    unknown_letter,
    alphabet_mismatch,
    invalid_partition,
    invalid_skew_shape,
    shape_not_partition,
    row_condition,
    column_condition,
    not_straight_shape,
    not_a_corner,
    empty_row,
    length_bound_exceeded,
    state_cap_exceeded,
    unsorted_array,
    repeated_odd_pair,
    shape_mismatch,
    susy_hypothesis,
    size_bound_exceeded,
    malformed_input,
    internal,
};

constexpr std::string_view name(Errc code) noexcept
{
    switch (code) {
    case Errc::duplicate_letter: return "DuplicateLetter";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::invalid_parity: return "InvalidParity";
    case Errc::unknown_letter: return "UnknownLetter";
    case Errc::alphabet_mismatch: return "AlphabetMismatch";
    case Errc::invalid_partition: return "InvalidPartition";
    case Errc::invalid_skew_shape: return "InvalidSkewShape";
    case Errc::shape_not_partition: return "ShapeNotPartition";
    case Errc::row_condition: return "RowConditionViolation";
    case Errc::column_condition: return "ColumnConditionViolation";
    case Errc::not_straight_shape: return "NotStraightShape";
    case Errc::not_a_corner: return "NotACorner";
    case Errc::empty_row: return "EmptyRow";
    case Errc::length_bound_exceeded: return "LengthBoundExceeded";
    case Errc::state_cap_exceeded: return "StateCapExceeded";
    case Errc::unsorted_array: return "UnsortedArray";
    case Errc::repeated_odd_pair: return "RepeatedOddPair";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::susy_hypothesis: return "SusyHypothesisViolation";
    case Errc::size_bound_exceeded: return "SizeBoundExceeded";
    case Errc::malformed_input: return "MalformedInput";
    case Errc::internal: return "InternalError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace superplactic
