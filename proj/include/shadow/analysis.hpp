/**************************************************************************
 * analysis.hpp
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

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "character.hpp"
#include "error.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"
#include "shadow_code.hpp"

namespace shadow {

using Rational = boost::rational<std::int64_t>;

inline constexpr std::uint64_t default_enumeration_cap = std::uint64_t{1} << 24;

/// r^L, or too_large when it exceeds cap.
inline std::uint64_t message_count(std::uint32_t r, std::size_t L, std::uint64_t cap) {
    auto total = checked_pow(r, static_cast<unsigned>(L));
    if (!total || *total > cap)
        detail::fail(Errc::too_large,
                     "r^L = " + (total ? std::to_string(*total) : std::string(">2^64")) + " exceeds the cap " +
                         std::to_string(cap),
                     total.value_or(std::numeric_limits<std::uint64_t>::max()));
    return *total;
}

namespace detail {

/// Digit of the modular r-ary Gray code that changes between k-1 and k: the
/// position of the lowest nonzero base-r digit of k. That digit moves by +1.
inline std::size_t gray_step_digit(std::uint64_t k, std::uint32_t r) {
    if (r == 2)
        return static_cast<std::size_t>(std::countr_zero(k));
    std::size_t i = 0;
    while (k % r == 0) {
        k /= r;
        ++i;
    }
    return i;
}

/// Gray vector of counter k: g_j = (k_j - k_{j+1}) mod r.
inline std::vector<std::uint32_t> gray_vector(std::uint64_t k, std::uint32_t r, std::size_t L) {
    std::vector<std::uint32_t> digits(L + 1, 0), g(L);
    for (std::size_t j = 0; j < L; ++j) {
        digits[j] = static_cast<std::uint32_t>(k % r);
        k /= r;
    }
    for (std::size_t j = 0; j < L; ++j)
        g[j] = (digits[j] + r - digits[j + 1]) % r;
    return g;
}

inline void enumerate_binary(const GeneratorMatrix& G, std::uint64_t begin, std::uint64_t end,
                             std::vector<std::uint64_t>& hist) {
    const std::size_t L = G.rows(), n = G.cols(), words = (n + 63) / 64;
    std::vector<std::uint64_t> packed(L * words, 0);
    for (std::size_t i = 0; i < L; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (G.at(i, j))
                packed[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
        }
    }
    std::vector<std::uint64_t> word(words, 0);
    auto g = gray_vector(begin, 2, L);
    for (std::size_t i = 0; i < L; ++i) {
        if (g[i]) {
            for (std::size_t w = 0; w < words; ++w)
                word[w] ^= packed[i * words + w];
        }
    }
    auto count = [&] {
        std::size_t wt = 0;
        for (auto w : word)
            wt += static_cast<std::size_t>(std::popcount(w));
        return wt;
    };
    ++hist[count()];
    for (std::uint64_t k = begin + 1; k < end; ++k) {
        const std::uint64_t* row = packed.data() + gray_step_digit(k, 2) * words;
        std::size_t wt = 0;
        for (std::size_t w = 0; w < words; ++w) {
            word[w] ^= row[w];
            wt += static_cast<std::size_t>(std::popcount(word[w]));
        }
        ++hist[wt];
    }
}

inline void enumerate_general(const GeneratorMatrix& G, std::uint64_t begin, std::uint64_t end,
                              std::vector<std::uint64_t>& hist) {
    const std::uint32_t r = G.r();
    const std::size_t L = G.rows(), n = G.cols();
    auto g = gray_vector(begin, r, L);
    std::vector<Symbol> word = encode(G, g);
    std::size_t wt = weight(word);
    ++hist[wt];
    for (std::uint64_t k = begin + 1; k < end; ++k) {
        auto row = G.row(gray_step_digit(k, r));
        for (std::size_t j = 0; j < n; ++j) {
            if (row[j] == 0)
                continue;
            const bool was = word[j] != 0;
            unsigned s = word[j] + row[j];
            word[j] = static_cast<Symbol>(s >= r ? s - r : s);
            wt = wt - was + (word[j] != 0);
        }
        ++hist[wt];
    }
}

}  // namespace detail

/// Weight histogram over all r^L messages (index = weight). Messages are
/// visited in modular Gray order so each step adds one generator row; the
/// message space is split into contiguous counter ranges across workers.
inline std::vector<std::uint64_t> message_weight_histogram(const GeneratorMatrix& G,
                                                           std::uint64_t cap = default_enumeration_cap,
                                                           unsigned workers = 1) {
    const std::uint64_t total = message_count(G.r(), G.rows(), cap);
    std::vector<std::vector<std::uint64_t>> partial(std::max(1u, workers),
                                                    std::vector<std::uint64_t>(G.cols() + 1, 0));
    detail::parallel_chunks(total, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        if (begin == end)
            return;
        if (G.r() == 2)
            detail::enumerate_binary(G, begin, end, partial[w]);
        else
            detail::enumerate_general(G, begin, end, partial[w]);
    });
    std::vector<std::uint64_t> hist(G.cols() + 1, 0);
    for (const auto& p : partial) {
        for (std::size_t i = 0; i < hist.size(); ++i)
            hist[i] += p[i];
    }
    return hist;
}

/// (r-1)q/r - L * maxdeg * sqrt(q). Reported as is; negative means vacuous.
struct DistanceBound {
    double value;
    bool vacuous;
};

inline DistanceBound distance_lower_bound(std::uint64_t q, std::uint32_t r, std::size_t L, unsigned max_degree) {
    const long double v = static_cast<long double>(q) * (r - 1) / r -
                          static_cast<long double>(L) * max_degree * std::sqrt(static_cast<long double>(q));
    return {static_cast<double>(v), v <= 0};
}

/// (r-1)q/r + L * maxdeg * sqrt(q); the O(L sqrt q) upper estimate with the
/// constant mirrored from the lower bound.
inline double distance_upper_hint(std::uint64_t q, std::uint32_t r, std::size_t L, unsigned max_degree) {
    return static_cast<double>(static_cast<long double>(q) * (r - 1) / r +
                               static_cast<long double>(L) * max_degree * std::sqrt(static_cast<long double>(q)));
}

struct CodeReport {
    std::size_t n = 0;
    std::size_t L = 0;
    std::size_t k = 0;
    std::optional<std::size_t> d_exact;
    /// codeword weight -> number of codewords
    std::optional<std::map<std::size_t, std::uint64_t>> weight_distribution;
    double d_lower_bound = 0;
    bool d_lower_bound_vacuous = false;
    double d_upper_hint = 0;
    double genus_bound = 0;
    bool enumeration_exhaustive = false;
};

struct AnalysisOptions {
    std::uint64_t cap = default_enumeration_cap;
    unsigned workers = 1;
    unsigned max_degree = 2;
    bool exhaustive = true;
};

/// Rank, bound evaluations and (optionally) the exact weight distribution.
/// Message multiplicities are divided out so the distribution counts distinct
/// codewords and sums to r^k.
inline CodeReport analyze(const GeneratorMatrix& G, const AnalysisOptions& opts = {}) {
    CodeReport rep;
    rep.n = G.cols();
    rep.L = G.rows();
    rep.k = rank(G);
    auto lb = distance_lower_bound(rep.n, G.r(), rep.L, opts.max_degree);
    rep.d_lower_bound = lb.value;
    rep.d_lower_bound_vacuous = lb.vacuous;
    rep.d_upper_hint = distance_upper_hint(rep.n, G.r(), rep.L, opts.max_degree);
    rep.genus_bound = static_cast<double>(G.r()) * rep.L * opts.max_degree / 2.0;
    if (!opts.exhaustive)
        return rep;

    auto hist = message_weight_histogram(G, opts.cap, opts.workers);
    const std::uint64_t multiplicity = *checked_pow(G.r(), static_cast<unsigned>(rep.L - rep.k));
    std::map<std::size_t, std::uint64_t> dist;
    for (std::size_t w = 0; w < hist.size(); ++w) {
        if (hist[w] == 0)
            continue;
        detail::ensure(hist[w] % multiplicity == 0, "message histogram not divisible by kernel size");
        dist[w] = hist[w] / multiplicity;
    }
    detail::ensure(dist[0] == 1, "exactly one zero codeword expected");
    for (const auto& [w, c] : dist) {
        if (w > 0) {
            rep.d_exact = w;
            break;
        }
    }
    rep.weight_distribution = std::move(dist);
    rep.enumeration_exhaustive = true;
    return rep;
}

/// Affine points of y^r = f(x): each x contributes r points when f(x) is a
/// nonzero r-th power, one point (y = 0) when f(x) = 0, none otherwise.
inline std::uint64_t curve_point_count(const Character& chi, const Polynomial& f) {
    if (f.is_zero())
        detail::fail(Errc::zero_polynomial, "curve of the zero polynomial");
    const FiniteField& F = chi.field();
    std::uint64_t n = 0;
    for (std::uint32_t x = 0; x < F.size(); ++x) {
        Element v = poly::evaluate(F, f, Element{x});
        if (v.is_zero())
            n += 1;
        else if (chi.value(v) == 0)
            n += chi.order();
    }
    return n;
}

inline std::uint64_t curve_point_count(const FiniteField& F, std::uint32_t r, const Polynomial& f) {
    return curve_point_count(Character(F, r), f);
}

/// prod_i p_i^(e_i mod r).
inline Polynomial exponent_product(const FiniteField& F, std::span<const Polynomial> polys,
                                   std::span<const std::uint64_t> exponents, std::uint32_t r) {
    if (polys.size() != exponents.size())
        detail::fail(Errc::dimension_mismatch, "exponent vector length does not match the polynomial count");
    Polynomial f({F.one()});
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (exponents[i] % r)
            f = poly::mul(F, f, poly::pow(F, polys[i], exponents[i] % r));
    }
    return f;
}

struct GenusBound {
    /// (r-1)/2 (-1 + sum of degrees with e_i != 0) - (gcd(r, deg f) - 1)/2
    Rational fine;
    /// r L / 2 * max degree
    Rational clean;
};

inline GenusBound genus_bound(std::uint32_t r, std::span<const unsigned> degrees, std::span<const std::uint64_t> exponents) {
    if (degrees.size() != exponents.size())
        detail::fail(Errc::dimension_mismatch, "degree and exponent vectors differ in length");
    std::int64_t support_degree = 0, deg_f = 0;
    unsigned max_degree = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        const std::uint64_t e = exponents[i] % r;
        max_degree = std::max(max_degree, degrees[i]);
        if (e) {
            support_degree += degrees[i];
            deg_f += static_cast<std::int64_t>(e * degrees[i]);
        }
    }
    if (deg_f == 0)
        detail::fail(Errc::zero_exponent_vector, "exponent vector is zero mod r");
    const std::int64_t g = std::gcd(static_cast<std::int64_t>(r), deg_f);
    Rational fine = Rational(r - 1, 2) * (support_degree - 1) - Rational(g - 1, 2);
    Rational clean = Rational(static_cast<std::int64_t>(r) * static_cast<std::int64_t>(degrees.size()), 2) *
                     static_cast<std::int64_t>(max_degree);
    return {fine, clean};
}

struct HasseWeilResult {
    std::uint64_t points;
    Rational genus;
    /// 1 + 2 g sqrt(q)
    double allowed;
    /// |points - q|
    double deviation;
    bool pass;
};

/// |N - q| <= 1 + 2 g sqrt(q) for the curve y^r = prod p_i^e_i, g the fine
/// genus bound.
inline HasseWeilResult hasse_weil_check(const Character& chi, std::span<const Polynomial> polys,
                                        std::span<const std::uint64_t> exponents) {
    const FiniteField& F = chi.field();
    std::vector<unsigned> degrees;
    for (const auto& p : polys)
        degrees.push_back(static_cast<unsigned>(p.degree()));
    GenusBound gb = genus_bound(chi.order(), degrees, exponents);
    Polynomial f = exponent_product(F, polys, exponents, chi.order());
    const std::uint64_t n = curve_point_count(chi, f);
    const double g = boost::rational_cast<double>(gb.fine);
    const double allowed = 1.0 + 2.0 * g * std::sqrt(static_cast<double>(F.size()));
    const double dev = std::fabs(static_cast<double>(n) - static_cast<double>(F.size()));
    return {n, gb.fine, allowed, dev, dev <= allowed + 1e-9};
}

}  // namespace shadow
