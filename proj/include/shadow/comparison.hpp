/**************************************************************************
 * comparison.hpp
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

#include "analysis.hpp"
#include "bounds.hpp"
#include "character.hpp"
#include "polynomial.hpp"
#include "primes.hpp"
#include "shadow_code.hpp"

namespace shadow {

/// One row of the shadow-code versus Delsarte-Goethals comparison at length
/// about 2^m.
struct DGComparison {
    unsigned m = 0;
    double delta = 0;
    unsigned s_m = 0;
    std::uint64_t q_m = 0;
    double epsilon = 0;
    std::size_t L = 0;
    std::size_t rank = 0;
    DGParams dg;
    DistanceBound shadow_lower_bound{};
    std::optional<std::size_t> shadow_measured;
    /// L / log2 |D_m|
    double size_ratio = 0;
    /// 2^(m delta / 2) / m^2, the growth rate the ratio is compared with
    double reference_growth = 0;
    /// d(D_m) <= d(C_m), using the measured distance when available
    bool distance_dominates = false;
};

/// Builds the binary shadow code over the smallest odd prime power q_m > 2^m
/// with epsilon = (1 - delta)/2 and s_m = ceil(delta m) + 1, and compares it
/// with the Delsarte-Goethals code of order s_m. The distance is measured
/// exhaustively when L <= measure_max_L, otherwise the generic lower bound
/// is used.
inline DGComparison compare_with_delsarte_goethals(unsigned m, double delta, unsigned workers = 1,
                                                   std::size_t measure_max_L = 20) {
    if (!(delta > 0.0 && delta < 5.0 / 12.0))
        detail::fail(Errc::domain_error, "delta must lie in (0, 5/12)");
    if (m < 4 || m > 31)
        detail::fail(Errc::domain_error, "need 4 <= m <= 31 so that q_m fits the field index");
    // the small slack keeps delta*m = 4.0000000001 from rounding up
    const auto s_m = static_cast<unsigned>(std::ceil(delta * m - 1e-9)) + 1;
    if (2 * s_m + 2 > m)
        detail::fail(Errc::domain_error, "s_m = ceil(delta m) + 1 exceeds m/2 - 1");

    DGComparison out;
    out.m = m;
    out.delta = delta;
    out.s_m = s_m;
    out.dg = dg_params(m, s_m);
    out.q_m = next_prime_power_gt(std::uint64_t{1} << m, true);
    out.epsilon = (1.0 - delta) / 2.0;
    out.L = epsilon_length(out.q_m, out.epsilon);

    FiniteField F = make_field(out.q_m);
    ShadowCodeSpec spec(Character(F, 2), enumerate_monic_irreducibles(F, 2, out.L));
    GeneratorMatrix G = build(spec, workers);
    out.shadow_lower_bound = distance_lower_bound(out.q_m, 2, out.L, spec.max_degree());

    AnalysisOptions opts;
    opts.workers = workers;
    opts.max_degree = spec.max_degree();
    opts.exhaustive = out.L <= measure_max_L;
    CodeReport rep = analyze(G, opts);
    out.rank = rep.k;
    out.shadow_measured = rep.d_exact;

    out.size_ratio = static_cast<double>(out.rank) / static_cast<double>(out.dg.log2_size);
    out.reference_growth = std::pow(2.0, m * delta / 2.0) / (static_cast<double>(m) * m);
    const double shadow_d =
        out.shadow_measured ? static_cast<double>(*out.shadow_measured) : out.shadow_lower_bound.value;
    out.distance_dominates = out.dg.d <= shadow_d;
    return out;
}

}  // namespace shadow
