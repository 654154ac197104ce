/**************************************************************************
 * primes.hpp
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

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "error.hpp"

namespace shadow {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// base^exp, or nullopt when the result does not fit in 64 bits.
inline std::optional<u64> checked_pow(u64 base, unsigned exp) {
    u64 result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<u64>::max() / base)
            return std::nullopt;
        result *= base;
    }
    return result;
}

/// Deterministic Miller-Rabin. The first twelve primes as witnesses are
/// exact for every n < 3.3 * 10^24, which covers all 64-bit inputs.
inline bool is_prime(u64 n) {
    if (n < 2)
        return false;
    static constexpr std::array<u64, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 w : witnesses) {
        if (n % w == 0)
            return n == w;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : witnesses) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

/// floor(n^(1/k)) for k >= 1.
inline u64 integer_root(u64 n, unsigned k) {
    if (k == 1 || n < 2)
        return n;
    u64 lo = 1, hi = u64{1} << ((64 + k - 1) / k);
    // invariant: lo^k <= n, hi^k > n (or overflows)
    while (hi - lo > 1) {
        u64 mid = lo + (hi - lo) / 2;
        auto p = checked_pow(mid, k);
        if (p && *p <= n)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

struct PrimePower {
    u64 prime;
    unsigned exponent;
};

/// Writes n = p^e with p prime, if possible.
inline std::optional<PrimePower> as_prime_power(u64 n) {
    if (n < 2)
        return std::nullopt;
    if (is_prime(n))
        return PrimePower{n, 1};
    for (unsigned k = 2; k < 64 && (u64{1} << k) <= n; ++k) {
        u64 root = integer_root(n, k);
        if (checked_pow(root, k) == n && is_prime(root))
            return PrimePower{root, k};
    }
    return std::nullopt;
}

inline bool is_prime_power(u64 n) { return as_prime_power(n).has_value(); }

/// Least prime power strictly greater than x, optionally restricted to odd ones.
inline u64 next_prime_power_gt(u64 x, bool odd_only) {
    if (x < 2)
        detail::fail(Errc::domain_error, "next_prime_power_gt expects x >= 2");
    for (u64 y = x + 1; y > x; ++y) {
        if (odd_only && (y & 1) == 0)
            continue;
        if (is_prime_power(y))
            return y;
    }
    detail::fail(Errc::overflow, "no prime power above x fits in 64 bits");
}

/// Distinct prime divisors in increasing order.
inline std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

}  // namespace shadow
