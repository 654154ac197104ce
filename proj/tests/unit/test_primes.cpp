/**************************************************************************
 * test_primes.cpp
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

#include <gtest/gtest.h>

#include <shadow/primes.hpp>

using namespace shadow;

namespace {

bool slow_is_prime(u64 n) {
    if (n < 2)
        return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

}  // namespace

TEST(Primes, MatchesTrialDivisionBelowTenThousand) {
    for (u64 n = 0; n < 10000; ++n)
        ASSERT_EQ(is_prime(n), slow_is_prime(n)) << n;
}

TEST(Primes, LargeKnownValues) {
    EXPECT_TRUE(is_prime(1000000007));
    EXPECT_TRUE(is_prime(18446744073709551557ULL));
    EXPECT_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Primes, PrimePowerDecomposition) {
    auto pp = as_prime_power(1331);
    ASSERT_TRUE(pp);
    EXPECT_EQ(pp->prime, 11u);
    EXPECT_EQ(pp->exponent, 3u);
    EXPECT_FALSE(as_prime_power(12));
    EXPECT_FALSE(as_prime_power(1));
    EXPECT_TRUE(is_prime_power(1024));
}

TEST(Primes, NextPrimePower) {
    EXPECT_EQ(next_prime_power_gt(std::uint64_t{1} << 20, true), 1048583u);
    EXPECT_EQ(next_prime_power_gt(7, false), 8u);
    EXPECT_EQ(next_prime_power_gt(7, true), 9u);
    EXPECT_EQ(next_prime_power_gt(2, true), 3u);
    EXPECT_THROW(next_prime_power_gt(1, true), Error);
}

TEST(Primes, CheckedPowDetectsOverflow) {
    EXPECT_EQ(checked_pow(2, 63), std::uint64_t{1} << 63);
    EXPECT_FALSE(checked_pow(2, 64));
    EXPECT_EQ(checked_pow(3, 0), 1u);
}
