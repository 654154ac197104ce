/**************************************************************************
 * shadow_code.hpp
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
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "character.hpp"
#include "error.hpp"
#include "field.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"

namespace shadow {

/// A symbol of F_r. Matrices store one byte per entry, so r < 256.
using Symbol = std::uint8_t;

/// Marks an erased coordinate in a received word.
inline constexpr Symbol erased = 0xFF;

namespace detail {

inline std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t r) {
    return static_cast<std::uint32_t>(powmod(a, r - 2, r));
}

}  // namespace detail

/// Parameters of an (r, P)-shadow code of length q. The coordinates are all
/// of F_q in canonical index order.
class ShadowCodeSpec {
public:
    ShadowCodeSpec(Character chi, std::vector<Polynomial> polys) : chi_(std::move(chi)), polys_(std::move(polys)) {
        const FiniteField& F = chi_.field();
        if (chi_.order() > 255)
            detail::fail(Errc::domain_error, "symbols are stored as bytes; r must be below 256");
        if (polys_.empty())
            detail::fail(Errc::domain_error, "a shadow code needs at least one polynomial");
        std::vector<Polynomial> sorted = polys_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            detail::fail(Errc::domain_error, "polynomials must be distinct");
        for (const auto& p : polys_) {
            if (!p.is_monic() || p.degree() < 2)
                detail::fail(Errc::domain_error, "polynomials must be monic of degree >= 2");
            for (auto c : p.coefficients()) {
                if (c.index >= F.size())
                    detail::fail(Errc::domain_error, "coefficient outside the field");
            }
            if (!is_irreducible(F, p))
                detail::fail(Errc::domain_error, "polynomials must be irreducible");
        }
    }

    const Character& character() const { return chi_; }
    const FiniteField& field() const { return chi_.field(); }
    std::uint32_t r() const { return chi_.order(); }
    std::uint32_t length() const { return chi_.field().size(); }
    std::size_t size() const { return polys_.size(); }
    std::span<const Polynomial> polynomials() const { return polys_; }

    unsigned max_degree() const {
        int d = 0;
        for (const auto& p : polys_)
            d = std::max(d, p.degree());
        return static_cast<unsigned>(d);
    }

private:
    Character chi_;
    std::vector<Polynomial> polys_;
};

/// L x n matrix over F_r, row-major, one byte per entry.
class GeneratorMatrix {
public:
    GeneratorMatrix() = default;

    GeneratorMatrix(std::size_t rows, std::size_t cols, std::uint32_t r)
        : rows_(rows), cols_(cols), r_(r), data_(rows * cols, 0) {
        if (r < 2 || r > 255 || !is_prime(r))
            detail::fail(Errc::domain_error, "alphabet size r must be a prime below 256");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t r() const { return r_; }

    Symbol at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Symbol& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const Symbol> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<Symbol> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

    friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint32_t r_ = 2;
    std::vector<Symbol> data_;
};

/// Row i, column j holds the class of p_i at the element of index j.
inline GeneratorMatrix build(const ShadowCodeSpec& spec, unsigned workers = 1) {
    const FiniteField& F = spec.field();
    const Character& chi = spec.character();
    GeneratorMatrix G(spec.size(), spec.length(), spec.r());
    detail::parallel_chunks(spec.length(), workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        for (std::size_t i = 0; i < spec.size(); ++i) {
            const Polynomial& p = spec.polynomials()[i];
            for (std::uint64_t j = begin; j < end; ++j) {
                Element v = poly::evaluate(F, p, Element{static_cast<std::uint32_t>(j)});
                if (v.is_zero())
                    detail::fail(Errc::zero_argument, "polynomial " + std::to_string(i) +
                                                          " has a root at element index " + std::to_string(j));
                G.at(i, j) = static_cast<Symbol>(chi.value(v));
            }
        }
    });
    return G;
}

/// Sum of message[i] * row i over F_r.
inline std::vector<Symbol> encode(const GeneratorMatrix& G, std::span<const std::uint32_t> message) {
    if (message.size() != G.rows())
        detail::fail(Errc::dimension_mismatch, "message length " + std::to_string(message.size()) +
                                                   " does not match " + std::to_string(G.rows()) + " rows");
    const std::uint32_t r = G.r();
    std::vector<std::uint32_t> acc(G.cols(), 0);
    for (std::size_t i = 0; i < G.rows(); ++i) {
        std::uint32_t v = message[i] % r;
        if (v == 0)
            continue;
        auto row = G.row(i);
        for (std::size_t j = 0; j < G.cols(); ++j)
            acc[j] = (acc[j] + v * row[j]) % r;
    }
    return {acc.begin(), acc.end()};
}

/// The evaluation map by definition: the class of prod_i p_i(x)^e_i at each
/// coordinate. Exponents are arbitrary nonnegative lifts of the message.
inline std::vector<Symbol> evaluate_direct(const ShadowCodeSpec& spec, std::span<const std::uint64_t> exponents) {
    if (exponents.size() != spec.size())
        detail::fail(Errc::dimension_mismatch, "exponent vector length does not match the polynomial count");
    const FiniteField& F = spec.field();
    std::vector<Symbol> out(spec.length());
    for (std::uint32_t j = 0; j < spec.length(); ++j) {
        Element prod = F.one();
        for (std::size_t i = 0; i < spec.size(); ++i) {
            if (exponents[i] == 0)
                continue;
            Element v = poly::evaluate(F, spec.polynomials()[i], Element{j});
            prod = F.mul(prod, F.pow(v, exponents[i]));
        }
        out[j] = static_cast<Symbol>(spec.character().value(prod));
    }
    return out;
}

inline std::size_t weight(std::span<const Symbol> word) {
    return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Symbol s) { return s != 0; }));
}

/// Rank over F_r by Gaussian elimination.
inline std::size_t rank(const GeneratorMatrix& G) {
    const std::uint32_t r = G.r();
    std::vector<std::vector<std::uint32_t>> m(G.rows());
    for (std::size_t i = 0; i < G.rows(); ++i)
        m[i].assign(G.row(i).begin(), G.row(i).end());
    std::size_t rank = 0;
    for (std::size_t col = 0; col < G.cols() && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[rank], m[pivot]);
        std::uint32_t inv = detail::inverse_mod(m[rank][col], r);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            std::uint32_t factor = m[i][col] * inv % r;
            if (factor == 0)
                continue;
            for (std::size_t j = col; j < G.cols(); ++j)
                m[i][j] = (m[i][j] + (r - factor) * m[rank][j]) % r;
        }
        ++rank;
    }
    return rank;
}

/// Sufficient condition for full dimension: every degree below
/// (q(r-1) - 1) / (r L sqrt(q)).
inline bool dimension_condition_holds(std::uint64_t q, std::uint32_t r, std::size_t L, unsigned max_degree) {
    const long double threshold = (static_cast<long double>(q) * (r - 1) - 1) /
                                  (static_cast<long double>(r) * L * std::sqrt(static_cast<long double>(q)));
    return max_degree < threshold;
}

enum class DimensionStatus {
    condition_holds,
    condition_fails_full_rank,
    condition_fails_rank_deficient,
};

constexpr std::string_view to_string(DimensionStatus s) {
    switch (s) {
    case DimensionStatus::condition_holds: return "condition_holds";
    case DimensionStatus::condition_fails_full_rank: return "condition_fails_full_rank";
    case DimensionStatus::condition_fails_rank_deficient: return "condition_fails_rank_deficient";
    }
    return "unknown";
}

struct RankReport {
    std::size_t rank = 0;
    DimensionStatus status = DimensionStatus::condition_holds;
};

inline RankReport rank_report(const ShadowCodeSpec& spec, const GeneratorMatrix& G) {
    RankReport out{rank(G), DimensionStatus::condition_holds};
    if (dimension_condition_holds(spec.length(), spec.r(), spec.size(), spec.max_degree())) {
        detail::ensure(out.rank == spec.size(), "dimension condition holds but the rank is deficient");
    } else {
        out.status = out.rank == spec.size() ? DimensionStatus::condition_fails_full_rank
                                             : DimensionStatus::condition_fails_rank_deficient;
    }
    return out;
}

/// Deletes the given columns. Duplicates are ignored.
inline GeneratorMatrix puncture(const GeneratorMatrix& G, std::span<const std::size_t> positions) {
    std::vector<bool> drop(G.cols(), false);
    std::size_t dropped = 0;
    for (auto p : positions) {
        if (p >= G.cols())
            detail::fail(Errc::bad_positions, "position " + std::to_string(p) + " outside the code length");
        if (!drop[p]) {
            drop[p] = true;
            ++dropped;
        }
    }
    if (dropped >= G.cols())
        detail::fail(Errc::bad_positions, "cannot puncture every coordinate");
    GeneratorMatrix out(G.rows(), G.cols() - dropped, G.r());
    for (std::size_t i = 0; i < G.rows(); ++i) {
        std::size_t k = 0;
        for (std::size_t j = 0; j < G.cols(); ++j) {
            if (!drop[j])
                out.at(i, k++) = G.at(i, j);
        }
    }
    return out;
}

/// Punctures the last t coordinates.
inline GeneratorMatrix puncture_trailing(const GeneratorMatrix& G, std::size_t t) {
    if (t >= G.cols())
        detail::fail(Errc::bad_positions, "cannot puncture every coordinate");
    std::vector<std::size_t> pos(t);
    for (std::size_t i = 0; i < t; ++i)
        pos[i] = G.cols() - t + i;
    return puncture(G, pos);
}

/// Recovers the message from a word whose erased coordinates hold `erased`.
///
/// Each surviving coordinate j gives one equation sum_i v_i G[i][j] = c_j;
/// equations are folded into a reduced row-echelon basis of at most L rows,
/// so the cost is O(n L^2). Throws inconsistent when no message matches and
/// ambiguous when more than one does.
inline std::vector<std::uint32_t> erasure_decode(const GeneratorMatrix& G, std::span<const Symbol> received) {
    if (received.size() != G.cols())
        detail::fail(Errc::dimension_mismatch, "received word length does not match the code length");
    const std::uint32_t r = G.r();
    const std::size_t L = G.rows();

    struct Equation {
        std::vector<std::uint32_t> coeffs;
        std::uint32_t rhs;
        std::size_t pivot;
    };
    std::vector<Equation> basis;
    std::vector<std::uint32_t> eq(L);

    for (std::size_t j = 0; j < G.cols(); ++j) {
        if (received[j] == erased)
            continue;
        if (received[j] >= r)
            detail::fail(Errc::domain_error, "received symbol outside F_r");
        for (std::size_t i = 0; i < L; ++i)
            eq[i] = G.at(i, j);
        std::uint32_t rhs = received[j];
        for (const auto& b : basis) {
            std::uint32_t f = eq[b.pivot];
            if (f == 0)
                continue;
            for (std::size_t i = 0; i < L; ++i)
                eq[i] = (eq[i] + (r - f) * b.coeffs[i]) % r;
            rhs = (rhs + (r - f) * b.rhs) % r;
        }
        auto nz = std::find_if(eq.begin(), eq.end(), [](std::uint32_t v) { return v != 0; });
        if (nz == eq.end()) {
            if (rhs != 0)
                detail::fail(Errc::inconsistent, "received word is not a codeword on its surviving coordinates");
            continue;
        }
        std::size_t pivot = static_cast<std::size_t>(nz - eq.begin());
        std::uint32_t inv = detail::inverse_mod(eq[pivot], r);
        for (auto& v : eq)
            v = v * inv % r;
        rhs = rhs * inv % r;
        // keep the basis fully reduced
        for (auto& b : basis) {
            std::uint32_t f = b.coeffs[pivot];
            if (f == 0)
                continue;
            for (std::size_t i = 0; i < L; ++i)
                b.coeffs[i] = (b.coeffs[i] + (r - f) * eq[i]) % r;
            b.rhs = (b.rhs + (r - f) * rhs) % r;
        }
        basis.push_back({eq, rhs, pivot});
    }
    if (basis.size() < L)
        detail::fail(Errc::ambiguous, std::to_string(L - basis.size()) + " message symbols are undetermined");
    std::vector<std::uint32_t> message(L);
    for (const auto& b : basis)
        message[b.pivot] = b.rhs;
    return message;
}

/// Degree-2 construction with L = floor(q^(1/2 - epsilon)) polynomials taken
/// in canonical order.
struct EpsilonConstruction {
    ShadowCodeSpec spec;
    GeneratorMatrix matrix;
    double epsilon;
    std::size_t L;
    /// (r-1)q/r - 2 q^(1-epsilon)
    double claimed_distance;
    /// L < sqrt(q)/4 - 1/(4 sqrt(q)) <= (q(r-1)-1)/(2 r sqrt(q))
    bool length_inequality_holds;
    /// L when the length inequality holds.
    std::optional<std::size_t> claimed_dimension;
    RankReport rank;
    std::vector<std::string> warnings;
};

inline std::size_t epsilon_length(std::uint64_t q, double epsilon) {
    return static_cast<std::size_t>(std::floor(std::pow(static_cast<long double>(q), 0.5L - epsilon)));
}

inline EpsilonConstruction construct_from_epsilon(std::uint64_t q, std::uint32_t r, double epsilon,
                                                  unsigned workers = 1) {
    if (!(epsilon > 0.0 && epsilon < 0.5))
        detail::fail(Errc::domain_error, "epsilon must lie in (0, 1/2)");
    FiniteField F = make_field(q);
    Character chi(F, r);

    std::vector<std::string> warnings;
    const long double threshold = std::pow(6.0L, 1.0L / epsilon);
    if (static_cast<long double>(q) <= threshold)
        warnings.push_back("q = " + std::to_string(q) + " does not exceed 6^(1/epsilon) = " +
                           std::to_string(static_cast<double>(threshold)) +
                           "; the dimension and distance guarantees need not hold");

    const std::size_t L = epsilon_length(q, epsilon);
    const long double sq = std::sqrt(static_cast<long double>(q));
    const long double middle = sq / 4 - 1 / (4 * sq);
    const long double right = ((static_cast<long double>(q) * (r - 1) - 1) / (r * sq)) / 2;
    const bool inequality = static_cast<long double>(L) < middle && middle <= right;

    std::vector<Polynomial> polys = enumerate_monic_irreducibles(F, 2, L);
    ShadowCodeSpec spec(chi, std::move(polys));
    GeneratorMatrix G = build(spec, workers);
    RankReport rr = rank_report(spec, G);
    const double claimed = static_cast<double>(static_cast<long double>(q) * (r - 1) / r -
                                               2 * std::pow(static_cast<long double>(q), 1.0L - epsilon));
    std::optional<std::size_t> dim;
    if (inequality) {
        dim = L;
        detail::ensure(rr.rank == L, "length inequality holds but the rank is deficient");
    }
    return EpsilonConstruction{std::move(spec), std::move(G), epsilon, L, claimed, inequality, dim, rr,
                               std::move(warnings)};
}

}  // namespace shadow
