/**
 * @file common.hpp
 * @brief Error types and resource policy shared by the two diagram oracles.
 */
#pragma once

#include <cstddef>
#include <stdexcept>

namespace skein {

/// Composition of diagrams whose boundary sizes (or orientations) do not match.
struct SizeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A closed evaluation was requested for a diagram with nonempty boundary.
struct NotClosed : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The number of terms in an oracle linear combination exceeded the configured cap.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A formula argument outside its documented range.
struct OutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Default cap on the number of distinct diagrams held in one linear combination.
inline constexpr std::size_t kDefaultMaxTerms = 10'000'000;

}  // namespace skein
