/**************************************************************************
 * bounds.hpp
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

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "error.hpp"

namespace shadow {

using BigInt = mpz_class;

/// r-ary entropy H_r(x) = x log_r(r-1) - x log_r x - (1-x) log_r(1-x),
/// extended by continuity to x = 0 and x = 1.
inline double entropy(std::uint32_t r, double x) {
    if (r < 2)
        detail::fail(Errc::domain_error, "entropy needs r >= 2");
    if (!(x >= 0.0 && x <= 1.0))
        detail::fail(Errc::domain_error, "entropy argument outside [0, 1]");
    const long double lr = std::log(static_cast<long double>(r));
    const long double xl = x;
    long double h = xl * std::log(static_cast<long double>(r - 1)) / lr;
    if (x > 0.0)
        h -= xl * std::log(xl) / lr;
    if (x < 1.0)
        h -= (1 - xl) * std::log1p(-xl) / lr;
    return static_cast<double>(h);
}

namespace detail {

inline void check_nd(std::uint64_t n, std::uint64_t d, std::uint32_t r) {
    if (r < 2)
        fail(Errc::domain_error, "alphabet size must be at least 2");
    if (d < 1 || d > n)
        fail(Errc::domain_error, "need 1 <= d <= n");
}

/// sum_{j=0}^{t} C(n, j) (r-1)^j, exact.
inline BigInt ball_volume(std::uint64_t n, std::uint64_t t, std::uint32_t r) {
    BigInt term = 1, sum = 1;
    for (std::uint64_t j = 0; j < t && j < n; ++j) {
        // C(n, j+1)(r-1)^(j+1) = C(n, j)(r-1)^j * (n-j)(r-1)/(j+1)
        mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(n - j));
        mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), r - 1);
        mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(j + 1));
        sum += term;
    }
    return sum;
}

inline BigInt power(std::uint32_t r, std::uint64_t n) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), r, static_cast<unsigned long>(n));
    return out;
}

}  // namespace detail

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

/// floor(r^n / sum_{j<=t} C(n,j)(r-1)^j), t = floor((d-1)/2).
inline BigInt hamming_bound(std::uint64_t n, std::uint64_t d, std::uint32_t r) {
    detail::check_nd(n, d, r);
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), detail::power(r, n).get_mpz_t(), detail::ball_volume(n, (d - 1) / 2, r).get_mpz_t());
    return q;
}

/// ceil(r^n / sum_{i<=d-1} C(n,i)(r-1)^i).
inline BigInt gv_bound(std::uint64_t n, std::uint64_t d, std::uint32_t r) {
    detail::check_nd(n, d, r);
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), detail::power(r, n).get_mpz_t(), detail::ball_volume(n, d - 1, r).get_mpz_t());
    return q;
}

/// Binary Plotkin estimate 4d + 4, applicable when 2d + 1 >= n.
inline std::optional<std::uint64_t> plotkin_binary(std::uint64_t n, std::uint64_t d) {
    if (2 * d + 1 >= n)
        return 4 * d + 4;
    return std::nullopt;
}

struct McElieceBound {
    std::uint64_t value;
    /// n - 2d <= sqrt(n), standing in for n - 2d = o(sqrt n)
    bool in_regime;
};

/// n(n - 2d + 2) for d <= n/2.
inline McElieceBound mceliece_bound(std::uint64_t n, std::uint64_t d) {
    if (2 * d > n)
        detail::fail(Errc::domain_error, "McEliece bound needs d <= n/2");
    const std::uint64_t gap = n - 2 * d;
    return {n * (gap + 2), static_cast<long double>(gap) <= std::sqrt(static_cast<long double>(n))};
}

/// Largest eigenvalue of the size x size symmetric tridiagonal matrix with
/// zero diagonal and off-diagonal s_i = sqrt(i (n + 1 - i)), i = 1..size-1.
///
/// Bisection on Sturm sequence sign counts: the number of negative pivots of
/// the LDL^T factorisation of (S - x I) equals the number of eigenvalues
/// below x.
inline double spectral_max_eigenvalue(std::uint64_t n, std::size_t size, double tolerance) {
    if (size == 0)
        detail::fail(Errc::domain_error, "matrix size must be positive");
    if (size == 1)
        return 0.0;
    std::vector<long double> off2(size - 1);
    long double radius = 0;
    for (std::size_t i = 1; i < size; ++i) {
        off2[i - 1] = static_cast<long double>(i) * (static_cast<long double>(n) + 1 - i);
        if (off2[i - 1] < 0)
            off2[i - 1] = 0;
    }
    // Gershgorin radius
    for (std::size_t i = 0; i < size; ++i) {
        long double row = 0;
        if (i > 0)
            row += std::sqrt(off2[i - 1]);
        if (i + 1 < size)
            row += std::sqrt(off2[i]);
        radius = std::max(radius, row);
    }
    auto count_below = [&](long double x) {
        std::size_t count = 0;
        long double d = -x;
        if (d < 0)
            ++count;
        for (std::size_t i = 1; i < size; ++i) {
            if (d == 0)
                d = -1e-300L;
            d = -x - off2[i - 1] / d;
            if (d < 0)
                ++count;
        }
        return count;
    };
    long double lo = 0, hi = radius + 1;
    while (hi - lo > tolerance) {
        long double mid = (lo + hi) / 2;
        if (count_below(mid) >= size)
            hi = mid;
        else
            lo = mid;
    }
    return static_cast<double>((lo + hi) / 2);
}

struct SpectralReport {
    std::uint64_t k = 0;
    /// max eigenvalue of the (k+1) x (k+1) matrix
    double lambda_k = 0;
    /// max eigenvalue of the k x k matrix
    double lambda_km1 = 0;
    /// lambda_{k-1} >= n - 2d
    bool valid = false;
    /// ceil(4(n-k)/(n - lambda_k) * C(n,k)) when valid
    std::optional<BigInt> bound;
};

/// Binary spectral estimate A_2(n,d) <= 4(n-k)/(n-lambda_k) C(n,k), valid when
/// lambda_{k-1} >= n - 2d. Eigenvalues to absolute tolerance 1e-9 n. The
/// prefactor is rounded up to a multiple of 2^-40 before the exact product.
inline SpectralReport spectral_bound(std::uint64_t n, std::uint64_t d, std::uint64_t k) {
    if (k < 1 || k > n)
        detail::fail(Errc::domain_error, "spectral bound needs 1 <= k <= n");
    if (d < 1 || d > n)
        detail::fail(Errc::domain_error, "need 1 <= d <= n");
    const double tol = 1e-9 * static_cast<double>(n);
    SpectralReport rep;
    rep.k = k;
    rep.lambda_km1 = spectral_max_eigenvalue(n, k, tol);
    rep.lambda_k = spectral_max_eigenvalue(n, k + 1, tol);
    rep.valid = rep.lambda_km1 >= static_cast<double>(n) - 2.0 * static_cast<double>(d);
    if (rep.valid && rep.lambda_k < static_cast<double>(n)) {
        const long double prefactor = 4.0L * static_cast<long double>(n - k) / (static_cast<long double>(n) - rep.lambda_k);
        const long double scaled = std::ceil(std::ldexp(prefactor, 40));
        // split so the conversion to mpz never rounds down
        const double head = static_cast<double>(scaled);
        BigInt num;
        mpz_set_d(num.get_mpz_t(), head);
        num += static_cast<long>(std::ceil(scaled - static_cast<long double>(head)));
        num *= binomial(n, k);
        BigInt out;
        mpz_cdiv_q_2exp(out.get_mpz_t(), num.get_mpz_t(), 40);
        rep.bound = out;
    } else {
        rep.valid = false;
    }
    return rep;
}

/// Delsarte-Goethals code parameters for length 2^m and order s.
struct DGParams {
    unsigned m = 0;
    unsigned s = 0;
    std::uint64_t n = 0;
    std::uint64_t log2_size = 0;
    /// 2^(m-1) - 2^(m/2 - 1 + s); exact when m is even
    double d = 0;
    bool d_integral = false;
    std::optional<std::uint64_t> d_exact;
    /// (s(m-1) + 2m) / 2^m
    double rate = 0;
};

inline DGParams dg_params(unsigned m, unsigned s) {
    if (m < 4 || m > 62)
        detail::fail(Errc::domain_error, "need 4 <= m <= 62");
    if (s < 1 || 2 * s + 2 > m)
        detail::fail(Errc::domain_error, "need 1 <= s <= m/2 - 1");
    DGParams p;
    p.m = m;
    p.s = s;
    p.n = std::uint64_t{1} << m;
    p.log2_size = static_cast<std::uint64_t>(s) * (m - 1) + 2 * m;
    p.rate = static_cast<double>(p.log2_size) / static_cast<double>(p.n);
    p.d_integral = m % 2 == 0;
    if (p.d_integral) {
        p.d_exact = (std::uint64_t{1} << (m - 1)) - (std::uint64_t{1} << (m / 2 - 1 + s));
        p.d = static_cast<double>(*p.d_exact);
    } else {
        p.d = std::ldexp(1.0, static_cast<int>(m - 1)) - std::pow(2.0, m / 2.0 - 1.0 + s);
    }
    return p;
}

/// All bounds at one (n, d, r). Binary-only entries are empty for r != 2 or
/// outside their regime.
struct BoundReport {
    std::uint64_t n = 0;
    std::uint64_t d = 0;
    std::uint32_t r = 0;
    BigInt hamming;
    BigInt gv;
    std::optional<std::uint64_t> plotkin;
    std::optional<McElieceBound> mceliece;
    std::vector<SpectralReport> spectral;
    /// H_r(d/n)
    double entropy_relative_distance = 0;
    /// H_r((r-1)/(2r))
    double entropy_half_radius = 0;
};

inline BoundReport bound_report(std::uint64_t n, std::uint64_t d, std::uint32_t r, std::uint64_t k_first = 1,
                                std::uint64_t k_last = 0) {
    BoundReport rep;
    rep.n = n;
    rep.d = d;
    rep.r = r;
    rep.hamming = hamming_bound(n, d, r);
    rep.gv = gv_bound(n, d, r);
    rep.entropy_relative_distance = entropy(r, static_cast<double>(d) / static_cast<double>(n));
    rep.entropy_half_radius = entropy(r, (r - 1.0) / (2.0 * r));
    if (r == 2) {
        rep.plotkin = plotkin_binary(n, d);
        if (2 * d <= n)
            rep.mceliece = mceliece_bound(n, d);
        for (std::uint64_t k = k_first; k <= k_last && k <= n; ++k)
            rep.spectral.push_back(spectral_bound(n, d, k));
    }
    return rep;
}

}  // namespace shadow
