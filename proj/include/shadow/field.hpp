/**************************************************************************
 * field.hpp
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
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "primes.hpp"

namespace shadow {

/// An element of F_q, identified by its canonical index in [0, q): the
/// coefficient vector over F_p read as base-p digits, lowest degree first.
/// For prime fields the index is the residue itself.
struct Element {
    std::uint32_t index = 0;

    constexpr Element() = default;
    constexpr explicit Element(std::uint32_t i) : index(i) {}

    constexpr bool is_zero() const { return index == 0; }
    friend constexpr auto operator<=>(Element, Element) = default;
};

/// Arithmetic context for F_q, q = p^ell < 2^32.
///
/// The modulus is stored as ell + 1 digits over F_p, lowest first, monic.
/// Use make_field() (polynomial.hpp) to get the canonical modulus; the
/// constructor below trusts the caller's modulus.
class FiniteField {
public:
    static constexpr unsigned max_degree = 32;

    /// Prime field F_p.
    explicit FiniteField(std::uint64_t p) : FiniteField(p, std::vector<std::uint32_t>{0, 1}) {}

    /// F_p[t]/(modulus). Irreducibility is not checked here.
    FiniteField(std::uint64_t p, std::vector<std::uint32_t> modulus) : modulus_(std::move(modulus)) {
        if (!is_prime(p))
            detail::fail(Errc::not_prime, "characteristic " + std::to_string(p) + " is not prime");
        if (modulus_.size() < 2 || modulus_.back() != 1)
            detail::fail(Errc::domain_error, "field modulus must be monic of degree >= 1");
        ell_ = static_cast<unsigned>(modulus_.size() - 1);
        auto q = checked_pow(p, ell_);
        if (!q || *q > std::numeric_limits<std::uint32_t>::max())
            detail::fail(Errc::overflow, "field size p^ell must be below 2^32");
        for (auto c : modulus_) {
            if (c >= p)
                detail::fail(Errc::domain_error, "modulus coefficient out of range");
        }
        p_ = static_cast<std::uint32_t>(p);
        q_ = static_cast<std::uint32_t>(*q);
        if (ell_ == 1)
            modulus_ = {0, 1};
    }

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return ell_; }
    std::uint32_t size() const { return q_; }
    bool is_prime_field() const { return ell_ == 1; }
    std::span<const std::uint32_t> modulus() const { return modulus_; }

    Element zero() const { return Element{0}; }
    Element one() const { return Element{1}; }

    Element element(std::uint64_t index) const {
        if (index >= q_)
            detail::fail(Errc::domain_error, "element index out of range");
        return Element{static_cast<std::uint32_t>(index)};
    }

    /// Image of an integer in the prime subfield.
    Element from_integer(std::int64_t n) const {
        std::int64_t m = n % static_cast<std::int64_t>(p_);
        if (m < 0)
            m += p_;
        return Element{static_cast<std::uint32_t>(m)};
    }

    Element add(Element a, Element b) const {
        if (ell_ == 1) {
            std::uint64_t s = std::uint64_t{a.index} + b.index;
            return Element{static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
        }
        std::uint32_t x = a.index, y = b.index, out = 0, place = 1;
        for (unsigned i = 0; i < ell_; ++i) {
            std::uint32_t d = x % p_ + y % p_;
            if (d >= p_)
                d -= p_;
            out += d * place;
            x /= p_;
            y /= p_;
            place *= p_;
        }
        return Element{out};
    }

    Element neg(Element a) const {
        if (ell_ == 1)
            return Element{a.index == 0 ? 0 : p_ - a.index};
        std::uint32_t x = a.index, out = 0, place = 1;
        for (unsigned i = 0; i < ell_; ++i) {
            std::uint32_t d = x % p_;
            out += (d == 0 ? 0 : p_ - d) * place;
            x /= p_;
            place *= p_;
        }
        return Element{out};
    }

    Element sub(Element a, Element b) const { return add(a, neg(b)); }

    Element mul(Element a, Element b) const {
        if (ell_ == 1)
            return Element{static_cast<std::uint32_t>(std::uint64_t{a.index} * b.index % p_)};
        if (a.is_zero() || b.is_zero())
            return zero();
        Digits x = digits(a), y = digits(b);
        std::array<std::uint64_t, 2 * max_degree> prod{};
        for (unsigned i = 0; i < ell_; ++i) {
            if (x[i] == 0)
                continue;
            for (unsigned j = 0; j < ell_; ++j)
                prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_;
        }
        // reduce from the top by the monic modulus
        for (unsigned k = 2 * ell_ - 2; k >= ell_; --k) {
            std::uint64_t c = prod[k];
            if (c == 0)
                continue;
            prod[k] = 0;
            for (unsigned i = 0; i < ell_; ++i) {
                std::uint64_t sub = c * modulus_[i] % p_;
                prod[k - ell_ + i] = (prod[k - ell_ + i] + p_ - sub) % p_;
            }
        }
        std::uint32_t out = 0;
        for (unsigned i = ell_; i-- > 0;)
            out = out * p_ + static_cast<std::uint32_t>(prod[i]);
        return Element{out};
    }

    Element pow(Element a, std::uint64_t e) const {
        if (ell_ == 1)
            return Element{static_cast<std::uint32_t>(powmod(a.index, e, p_))};
        Element result = one();
        while (e) {
            if (e & 1)
                result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }

    Element inv(Element a) const {
        if (a.is_zero())
            detail::fail(Errc::zero_argument, "inverse of zero");
        return pow(a, q_ - 2);
    }

    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    using Digits = std::array<std::uint32_t, max_degree>;

    /// Coefficients over F_p, lowest degree first.
    Digits digits(Element a) const {
        Digits d{};
        std::uint32_t x = a.index;
        for (unsigned i = 0; i < ell_; ++i) {
            d[i] = x % p_;
            x /= p_;
        }
        return d;
    }

    friend bool operator==(const FiniteField& a, const FiniteField& b) {
        return a.p_ == b.p_ && a.modulus_ == b.modulus_;
    }

private:
    std::uint32_t p_ = 0;
    unsigned ell_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
};

}  // namespace shadow
