// include/bperm/error.hpp - error kinds shared by every bperm module.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bperm {

enum class Errc {
    // signed permutations
    zero_letter,
    repeated_absolute_value,
    out_of_range,
    malformed_prefix,
    not_plain,
    has_fixed_point,
    not_desarrangement,
    // words
    unbounded_family,
    // weighted signed permutations
    length_mismatch,
    wsp1,
    wsp2,
    wsp3,
    wsp4,
    insertion_conflict,
    negative_b_letter,
    // algebra
    half_integer_exponent,
    inexact_division,
    not_invertible,
    truncation_violation,
    // verification / cli
    cap_exceeded,
    unknown_identity,
    parse_error,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library. `index()` is the 1-based position of
/// the offending letter or column when the error concerns one.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &what, std::optional<std::size_t> index = std::nullopt)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), index_(index) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }
    [[nodiscard]] std::optional<std::size_t> index() const noexcept { return index_; }

private:
    Errc code_;
    std::optional<std::size_t> index_;
};

inline std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::zero_letter: return "ZeroLetter";
    case Errc::repeated_absolute_value: return "RepeatedAbsoluteValue";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::malformed_prefix: return "MalformedPrefix";
    case Errc::not_plain: return "NotPlain";
    case Errc::has_fixed_point: return "HasFixedPoint";
    case Errc::not_desarrangement: return "NotDesarrangement";
    case Errc::unbounded_family: return "UnboundedFamily";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::wsp1: return "Wsp1";
    case Errc::wsp2: return "Wsp2";
    case Errc::wsp3: return "Wsp3";
    case Errc::wsp4: return "Wsp4";
    case Errc::insertion_conflict: return "InsertionConflict";
    case Errc::negative_b_letter: return "NegativeBLetter";
    case Errc::half_integer_exponent: return "HalfIntegerExponent";
    case Errc::inexact_division: return "InexactDivision";
    case Errc::not_invertible: return "NotInvertible";
    case Errc::truncation_violation: return "TruncationViolation";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::unknown_identity: return "UnknownIdentity";
    case Errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

} // namespace bperm
