/**************************************************************************
 * character.hpp
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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "polynomial.hpp"
#include "primes.hpp"

namespace shadow {

/// An order-r multiplicative character of F_q^* composed with a fixed
/// isomorphism of its image onto (F_r, +).
///
/// a maps to the j in [0, r) with a^((q-1)/r) = zeta^j. zeta is the first
/// power b = a^((q-1)/r) != 1 found scanning a over element indices 2, 3, ...
/// so the character is a deterministic function of (field, r).
class Character {
public:
    Character(FiniteField field, std::uint64_t r) : field_(std::move(field)) {
        const std::uint64_t q = field_.size();
        if (!is_prime(r) || (q - 1) % r != 0)
            detail::fail(Errc::order_mismatch, "character order " + std::to_string(r) +
                                                   " must be a prime dividing q - 1 = " + std::to_string(q - 1));
        r_ = static_cast<std::uint32_t>(r);
        exponent_ = (q - 1) / r;
        for (std::uint64_t a = 2; a < q; ++a) {
            Element b = field_.pow(Element{static_cast<std::uint32_t>(a)}, exponent_);
            if (b != field_.one()) {
                zeta_ = b;
                break;
            }
        }
        detail::ensure(zeta_ != field_.one() && !zeta_.is_zero(), "no element of order r found");

        table_.reserve(r_);
        Element z = field_.one();
        for (std::uint32_t j = 0; j < r_; ++j) {
            table_.emplace_back(z.index, j);
            z = field_.mul(z, zeta_);
        }
        detail::ensure(z == field_.one(), "zeta^r must be 1");
        std::sort(table_.begin(), table_.end());
    }

    const FiniteField& field() const { return field_; }
    std::uint32_t order() const { return r_; }
    Element zeta() const { return zeta_; }

    /// The class of a != 0 in F_r.
    std::uint32_t value(Element a) const {
        if (a.is_zero())
            detail::fail(Errc::zero_argument, "character evaluated at zero");
        return lookup(field_.pow(a, exponent_));
    }

    std::optional<std::uint32_t> try_value(Element a) const {
        if (a.is_zero())
            return std::nullopt;
        return lookup(field_.pow(a, exponent_));
    }

private:
    std::uint32_t lookup(Element power) const {
        auto it = std::lower_bound(table_.begin(), table_.end(), std::pair{power.index, std::uint32_t{0}});
        detail::ensure(it != table_.end() && it->first == power.index, "power outside the order-r subgroup");
        return it->second;
    }

    FiniteField field_;
    std::uint32_t r_ = 0;
    std::uint64_t exponent_ = 0;
    Element zeta_{};
    std::vector<std::pair<std::uint32_t, std::uint32_t>> table_;
};

/// Per-class counts N_j = #{x in F_q : class(f(x)) = j}.
struct ClassCounts {
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

    /// N_0 - N_1; the quadratic character sum when r = 2.
    std::int64_t signed_sum() const {
        return static_cast<std::int64_t>(counts.at(0)) - static_cast<std::int64_t>(counts.at(1));
    }
};

/// Character sum of f over all of F_q, in canonical index order.
inline ClassCounts char_sum(const Character& chi, const Polynomial& f) {
    const FiniteField& F = chi.field();
    ClassCounts out{std::vector<std::uint64_t>(chi.order(), 0)};
    for (std::uint32_t x = 0; x < F.size(); ++x) {
        Element v = poly::evaluate(F, f, Element{x});
        if (v.is_zero())
            detail::fail(Errc::zero_argument, "polynomial vanishes at element index " + std::to_string(x));
        ++out.counts[chi.value(v)];
    }
    return out;
}

}  // namespace shadow
