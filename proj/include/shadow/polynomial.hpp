/**************************************************************************
 * polynomial.hpp
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
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "primes.hpp"

namespace shadow {

/// Polynomial over some F_q, coefficients lowest degree first, never with
/// trailing zeros. The owning field is passed to every operation.
///
/// Ordering is canonical: by degree, then by coefficient indices read from
/// the top down. Among monic polynomials of one degree this is the order of
/// the non-leading coefficient vector read as a base-q integer with c_0 as
/// the least significant digit.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial from_indices(std::span<const std::uint32_t> indices) {
        std::vector<Element> c;
        c.reserve(indices.size());
        for (auto i : indices)
            c.emplace_back(i);
        return Polynomial(std::move(c));
    }

    static Polynomial from_indices(std::initializer_list<std::uint32_t> indices) {
        return from_indices(std::span<const std::uint32_t>(indices.begin(), indices.size()));
    }

    static Polynomial monomial(Element c, std::size_t deg) {
        std::vector<Element> v(deg + 1);
        v[deg] = c;
        return Polynomial(std::move(v));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().index == 1; }

    Element coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Element{}; }
    Element leading() const { return coeffs_.empty() ? Element{} : coeffs_.back(); }
    std::span<const Element> coefficients() const { return coeffs_; }

    std::vector<std::uint32_t> indices() const {
        std::vector<std::uint32_t> out;
        out.reserve(coeffs_.size());
        for (auto c : coeffs_)
            out.push_back(c.index);
        return out;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0)
            return c;
        for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
            if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0)
                return c;
        }
        return std::strong_ordering::equal;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    std::vector<Element> coeffs_;
};

namespace poly {

inline Polynomial add(const FiniteField& F, const Polynomial& a, const Polynomial& b) {
    std::size_t n = std::max(a.coefficients().size(), b.coefficients().size());
    std::vector<Element> c(n);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = F.add(a.coefficient(i), b.coefficient(i));
    return Polynomial(std::move(c));
}

inline Polynomial sub(const FiniteField& F, const Polynomial& a, const Polynomial& b) {
    std::size_t n = std::max(a.coefficients().size(), b.coefficients().size());
    std::vector<Element> c(n);
    for (std::size_t i = 0; i < n; ++i)
        c[i] = F.sub(a.coefficient(i), b.coefficient(i));
    return Polynomial(std::move(c));
}

inline Polynomial mul(const FiniteField& F, const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    auto ac = a.coefficients(), bc = b.coefficients();
    std::vector<Element> c(ac.size() + bc.size() - 1);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i].is_zero())
            continue;
        for (std::size_t j = 0; j < bc.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(ac[i], bc[j]));
    }
    return Polynomial(std::move(c));
}

inline Polynomial scale(const FiniteField& F, const Polynomial& a, Element s) {
    std::vector<Element> c(a.coefficients().begin(), a.coefficients().end());
    for (auto& x : c)
        x = F.mul(x, s);
    return Polynomial(std::move(c));
}

/// Quotient and remainder of a by a nonzero b.
inline std::pair<Polynomial, Polynomial> divmod(const FiniteField& F, const Polynomial& a, const Polynomial& b) {
    if (b.is_zero())
        detail::fail(Errc::zero_polynomial, "division by the zero polynomial");
    if (a.degree() < b.degree())
        return {Polynomial{}, a};
    std::vector<Element> rem(a.coefficients().begin(), a.coefficients().end());
    std::vector<Element> quot(a.coefficients().size() - b.coefficients().size() + 1);
    auto bc = b.coefficients();
    Element lead_inv = F.inv(b.leading());
    for (std::size_t k = quot.size(); k-- > 0;) {
        Element c = F.mul(rem[k + bc.size() - 1], lead_inv);
        quot[k] = c;
        if (c.is_zero())
            continue;
        for (std::size_t i = 0; i < bc.size(); ++i)
            rem[k + i] = F.sub(rem[k + i], F.mul(c, bc[i]));
    }
    rem.resize(bc.size() - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

inline Polynomial mod(const FiniteField& F, const Polynomial& a, const Polynomial& b) { return divmod(F, a, b).second; }

inline Polynomial make_monic(const FiniteField& F, const Polynomial& a) {
    if (a.is_zero())
        return a;
    return scale(F, a, F.inv(a.leading()));
}

/// Monic gcd; gcd(0, 0) = 0.
inline Polynomial gcd(const FiniteField& F, Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(F, a);
}

inline Polynomial mulmod(const FiniteField& F, const Polynomial& a, const Polynomial& b, const Polynomial& m) {
    return mod(F, mul(F, a, b), m);
}

inline Polynomial powmod(const FiniteField& F, Polynomial base, std::uint64_t e, const Polynomial& m) {
    Polynomial result = mod(F, Polynomial({F.one()}), m);
    base = mod(F, base, m);
    while (e) {
        if (e & 1)
            result = mulmod(F, result, base, m);
        base = mulmod(F, base, base, m);
        e >>= 1;
    }
    return result;
}

/// Horner evaluation.
inline Element evaluate(const FiniteField& F, const Polynomial& f, Element x) {
    Element acc{};
    auto c = f.coefficients();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = F.add(F.mul(acc, x), c[i]);
    return acc;
}

/// f^e by repeated squaring, exact (no reduction).
inline Polynomial pow(const FiniteField& F, Polynomial f, std::uint64_t e) {
    Polynomial result({F.one()});
    while (e) {
        if (e & 1)
            result = mul(F, result, f);
        e >>= 1;
        if (e)
            f = mul(F, f, f);
    }
    return result;
}

}  // namespace poly

namespace detail {

/// Root absence for a monic quadratic in odd characteristic: irreducible
/// iff the discriminant is a nonzero nonsquare.
inline bool quadratic_has_no_root(const FiniteField& F, const Polynomial& f) {
    Element b = f.coefficient(1), c = f.coefficient(0);
    Element disc = F.sub(F.mul(b, b), F.mul(F.from_integer(4), c));
    if (disc.is_zero())
        return false;
    return F.pow(disc, (F.size() - 1) / 2) != F.one();
}

}  // namespace detail

/// Irreducibility over the owning field.
///
/// Rabin's test: f of degree n is irreducible iff x^(q^n) = x mod f and
/// gcd(x^(q^(n/t)) - x, f) = 1 for every prime t | n. Monic quadratics in odd
/// characteristic short-circuit through the discriminant.
inline bool is_irreducible(const FiniteField& F, const Polynomial& f) {
    if (f.is_zero())
        detail::fail(Errc::zero_polynomial, "irreducibility of the zero polynomial");
    if (f.degree() < 1)
        return false;
    if (f.degree() == 1)
        return true;
    Polynomial g = poly::make_monic(F, f);
    if (g.degree() == 2 && F.characteristic() != 2)
        return detail::quadratic_has_no_root(F, g);

    const auto n = static_cast<std::uint64_t>(g.degree());
    const Polynomial x = Polynomial::monomial(F.one(), 1);

    // frob[k] = x^(q^k) mod g
    std::vector<Polynomial> frob{poly::mod(F, x, g)};
    for (std::uint64_t k = 1; k <= n; ++k)
        frob.push_back(poly::powmod(F, frob.back(), F.size(), g));

    if (frob[n] != poly::mod(F, x, g))
        return false;
    for (u64 t : prime_divisors(n)) {
        Polynomial h = poly::sub(F, frob[n / t], x);
        if (poly::gcd(F, h, g).degree() != 0)
            return false;
    }
    return true;
}

/// Number of monic irreducibles of degree d over F_q (necklace formula).
inline std::uint64_t count_monic_irreducibles(std::uint64_t q, unsigned d) {
    if (d == 0)
        detail::fail(Errc::domain_error, "degree must be positive");
    auto mobius = [](unsigned n) {
        int mu = 1;
        for (unsigned p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                n /= p;
                if (n % p == 0)
                    return 0;
                mu = -mu;
            }
        }
        return n > 1 ? -mu : mu;
    };
    i128 total = 0;
    for (unsigned e = 1; e <= d; ++e) {
        if (d % e != 0)
            continue;
        int mu = mobius(e);
        if (mu == 0)
            continue;
        auto term = checked_pow(q, d / e);
        if (!term)
            detail::fail(Errc::overflow, "q^d does not fit in 64 bits");
        total += mu * static_cast<i128>(*term);
    }
    return static_cast<std::uint64_t>(total / d);
}

/// Monic polynomial of degree d whose non-leading coefficients are the
/// base-q digits of `code` (c_0 least significant).
inline Polynomial monic_from_code(const FiniteField& F, unsigned d, std::uint64_t code) {
    std::vector<Element> c(d + 1);
    for (unsigned i = 0; i < d; ++i) {
        c[i] = Element{static_cast<std::uint32_t>(code % F.size())};
        code /= F.size();
    }
    c[d] = F.one();
    return Polynomial(std::move(c));
}

/// The first `count` monic irreducibles of degree d in canonical order.
inline std::vector<Polynomial> enumerate_monic_irreducibles(const FiniteField& F, unsigned d, std::uint64_t count) {
    const std::uint64_t total = count_monic_irreducibles(F.size(), d);
    if (d == 2)
        detail::ensure(total == (std::uint64_t{F.size()} * F.size() - F.size()) / 2,
                       "quadratic irreducible count must be (q^2 - q)/2");
    if (count > total)
        detail::fail(Errc::not_enough_polynomials,
                     "requested " + std::to_string(count) + " but only " + std::to_string(total) + " exist",
                     total);
    std::vector<Polynomial> out;
    out.reserve(count);
    for (std::uint64_t code = 0; out.size() < count; ++code) {
        Polynomial f = monic_from_code(F, d, code);
        if (is_irreducible(F, f))
            out.push_back(std::move(f));
    }
    return out;
}

/// F_{p^ell} with the canonical modulus: the first monic irreducible of
/// degree ell over F_p in canonical order.
inline FiniteField make_field(std::uint64_t p, unsigned ell) {
    if (ell == 0)
        detail::fail(Errc::domain_error, "extension degree must be >= 1");
    FiniteField prime(p);
    if (ell == 1)
        return prime;
    auto q = checked_pow(p, ell);
    if (!q || *q > std::numeric_limits<std::uint32_t>::max())
        detail::fail(Errc::overflow, "field size p^ell must be below 2^32");
    Polynomial m = enumerate_monic_irreducibles(prime, ell, 1).front();
    return FiniteField(p, m.indices());
}

/// Field of the given prime-power order.
inline FiniteField make_field(std::uint64_t q) {
    auto pp = as_prime_power(q);
    if (!pp)
        detail::fail(Errc::not_prime, std::to_string(q) + " is not a prime power");
    return make_field(pp->prime, pp->exponent);
}

}  // namespace shadow
