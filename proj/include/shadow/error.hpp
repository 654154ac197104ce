/**************************************************************************
 * error.hpp
 *
 * Copyright 2026 The shadowcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace shadow {

enum class Errc {
    not_prime,
    overflow,
    zero_polynomial,
    not_enough_polynomials,
    order_mismatch,
    zero_argument,
    dimension_mismatch,
    bad_positions,
    ambiguous,
    inconsistent,
    too_large,
    zero_exponent_vector,
    domain_error,
    condition_failed,
    parse_error,
};

constexpr std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::not_prime: return "not_prime";
    case Errc::overflow: return "overflow";
    case Errc::zero_polynomial: return "zero_polynomial";
    case Errc::not_enough_polynomials: return "not_enough_polynomials";
    case Errc::order_mismatch: return "order_mismatch";
    case Errc::zero_argument: return "zero_argument";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::bad_positions: return "bad_positions";
    case Errc::ambiguous: return "ambiguous";
    case Errc::inconsistent: return "inconsistent";
    case Errc::too_large: return "too_large";
    case Errc::zero_exponent_vector: return "zero_exponent_vector";
    case Errc::domain_error: return "domain_error";
    case Errc::condition_failed: return "condition_failed";
    case Errc::parse_error: return "parse_error";
    }
    return "unknown";
}

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-readable code. `count` holds the numeric payload where one is
/// meaningful (available polynomials for not_enough_polynomials, r^L for
/// too_large).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::optional<std::uint64_t> count = std::nullopt)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), count_(count) {}

    Errc code() const noexcept { return code_; }
    std::optional<std::uint64_t> count() const noexcept { return count_; }

private:
    Errc code_;
    std::optional<std::uint64_t> count_;
};

/// Raised when an internal invariant is violated. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace detail {

[[noreturn]] inline void fail(Errc code, const std::string& what,
                              std::optional<std::uint64_t> count = std::nullopt) {
    throw Error(code, what, count);
}

inline void ensure(bool condition, const char* what) {
    if (!condition)
        throw InvariantViolation(what);
}

}  // namespace detail

}  // namespace shadow
