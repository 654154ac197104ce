/**************************************************************************
 * io.hpp
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
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "analysis.hpp"
#include "bounds.hpp"
#include "charsum.hpp"
#include "comparison.hpp"
#include "error.hpp"
#include "field.hpp"
#include "polynomial.hpp"
#include "shadow_code.hpp"

namespace shadow::io {

using nlohmann::json;

// Text matrix format:
//   q r L
//   <L lines of q symbols, one character each: 0-9 then a-z>

inline constexpr std::uint32_t max_text_alphabet = 36;

inline char symbol_char(Symbol s) { return static_cast<char>(s < 10 ? '0' + s : 'a' + (s - 10)); }

inline int char_symbol(char c) {
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'z')
        return c - 'a' + 10;
    return -1;
}

inline std::string row_string(const GeneratorMatrix& G, std::size_t i) {
    std::string s;
    s.reserve(G.cols());
    for (auto v : G.row(i))
        s.push_back(symbol_char(v));
    return s;
}

inline std::string word_string(std::span<const Symbol> word) {
    std::string s;
    s.reserve(word.size());
    for (auto v : word)
        s.push_back(v == erased ? '?' : symbol_char(v));
    return s;
}

/// Parses a word; '?' marks an erasure.
inline std::vector<Symbol> parse_word(std::string_view text, std::uint32_t r) {
    std::vector<Symbol> out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '?') {
            out.push_back(erased);
            continue;
        }
        int v = char_symbol(c);
        if (v < 0 || static_cast<std::uint32_t>(v) >= r)
            detail::fail(Errc::parse_error, std::string("invalid symbol '") + c + "'");
        out.push_back(static_cast<Symbol>(v));
    }
    return out;
}

inline void write_matrix_text(std::ostream& os, const GeneratorMatrix& G) {
    if (G.r() > max_text_alphabet)
        detail::fail(Errc::domain_error, "text matrix format supports r <= 36");
    os << G.cols() << ' ' << G.r() << ' ' << G.rows() << '\n';
    for (std::size_t i = 0; i < G.rows(); ++i)
        os << row_string(G, i) << '\n';
}

inline GeneratorMatrix read_matrix_text(std::istream& is) {
    std::string header;
    if (!std::getline(is, header))
        detail::fail(Errc::parse_error, "empty matrix file");
    std::istringstream hs(header);
    std::uint64_t q = 0, r = 0, L = 0;
    std::string extra;
    if (!(hs >> q >> r >> L) || (hs >> extra))
        detail::fail(Errc::parse_error, "header must be 'q r L'");
    if (q == 0 || L == 0)
        detail::fail(Errc::parse_error, "q and L must be positive");
    if (r < 2 || r > max_text_alphabet || !is_prime(r))
        detail::fail(Errc::parse_error, "r must be a prime <= 36");
    GeneratorMatrix G(L, q, static_cast<std::uint32_t>(r));
    std::string line;
    for (std::size_t i = 0; i < L; ++i) {
        if (!std::getline(is, line))
            detail::fail(Errc::parse_error, "expected " + std::to_string(L) + " rows");
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.size() != q)
            detail::fail(Errc::parse_error, "row " + std::to_string(i) + " has length " +
                                                std::to_string(line.size()) + ", expected " + std::to_string(q));
        auto word = parse_word(line, static_cast<std::uint32_t>(r));
        for (std::size_t j = 0; j < q; ++j) {
            if (word[j] == erased)
                detail::fail(Errc::parse_error, "erasure marker in a generator row");
            G.at(i, j) = word[j];
        }
    }
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            detail::fail(Errc::parse_error, "trailing content after the last row");
    }
    return G;
}

inline json to_json(const FiniteField& F) {
    return json{{"p", F.characteristic()},
                {"ell", F.degree()},
                {"modulus", std::vector<std::uint32_t>(F.modulus().begin(), F.modulus().end())}};
}

inline json to_json(const Polynomial& f) { return f.indices(); }

inline Polynomial polynomial_from_json(const json& j) {
    if (!j.is_array())
        detail::fail(Errc::parse_error, "polynomial must be an array of element indices");
    return Polynomial::from_indices(j.get<std::vector<std::uint32_t>>());
}

inline FiniteField field_from_json(const json& j) {
    try {
        return FiniteField(j.at("p").get<std::uint64_t>(), j.at("modulus").get<std::vector<std::uint32_t>>());
    } catch (const json::exception& e) {
        detail::fail(Errc::parse_error, e.what());
    }
}

inline json to_json(const ShadowCodeSpec& spec) {
    json polys = json::array();
    for (const auto& p : spec.polynomials())
        polys.push_back(to_json(p));
    return json{{"q", spec.length()},
                {"r", spec.r()},
                {"L", spec.size()},
                {"field", to_json(spec.field())},
                {"zeta", spec.character().zeta().index},
                {"polynomials", polys}};
}

/// Spec fields plus one base-r digit string per row.
inline json matrix_to_json(const GeneratorMatrix& G, const ShadowCodeSpec* spec = nullptr) {
    json j = spec ? to_json(*spec) : json{{"q", G.cols()}, {"r", G.r()}, {"L", G.rows()}};
    j["q"] = G.cols();
    json rows = json::array();
    for (std::size_t i = 0; i < G.rows(); ++i)
        rows.push_back(row_string(G, i));
    j["rows"] = rows;
    return j;
}

inline GeneratorMatrix matrix_from_json(const json& j) {
    try {
        const auto q = j.at("q").get<std::uint64_t>();
        const auto r = j.at("r").get<std::uint32_t>();
        const auto& rows = j.at("rows");
        if (r < 2 || r > max_text_alphabet || !is_prime(r))
            detail::fail(Errc::parse_error, "r must be a prime <= 36");
        if (rows.empty() || q == 0)
            detail::fail(Errc::parse_error, "matrix has no rows");
        GeneratorMatrix G(rows.size(), q, r);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            auto word = parse_word(rows[i].get<std::string>(), r);
            if (word.size() != q)
                detail::fail(Errc::parse_error, "row length mismatch");
            for (std::size_t c = 0; c < q; ++c) {
                if (word[c] == erased)
                    detail::fail(Errc::parse_error, "erasure marker in a generator row");
                G.at(i, c) = word[c];
            }
        }
        return G;
    } catch (const json::exception& e) {
        detail::fail(Errc::parse_error, e.what());
    }
}

inline json to_json(const CodeReport& rep) {
    json j{{"n", rep.n},
           {"L", rep.L},
           {"k", rep.k},
           {"d_exact", nullptr},
           {"weight_distribution", nullptr},
           {"d_lower_bound", rep.d_lower_bound},
           {"d_lower_bound_vacuous", rep.d_lower_bound_vacuous},
           {"d_upper_hint", rep.d_upper_hint},
           {"genus_bound", rep.genus_bound},
           {"enumeration_exhaustive", rep.enumeration_exhaustive}};
    if (rep.d_exact)
        j["d_exact"] = *rep.d_exact;
    if (rep.weight_distribution) {
        json dist = json::array();
        for (auto [w, c] : *rep.weight_distribution)
            dist.push_back(json{{"weight", w}, {"count", c}});
        j["weight_distribution"] = dist;
    }
    return j;
}

inline void write_weights_csv(std::ostream& os, const std::map<std::size_t, std::uint64_t>& dist) {
    os << "weight,count\n";
    for (auto [w, c] : dist)
        os << w << ',' << c << '\n';
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline json to_json(const SpectralReport& s) {
    return json{{"k", s.k},
                {"lambda_k", s.lambda_k},
                {"lambda_km1", s.lambda_km1},
                {"valid", s.valid},
                {"bound", s.bound ? json(to_string(*s.bound)) : json(nullptr)}};
}

/// Big integers are emitted as decimal strings.
inline json to_json(const BoundReport& rep) {
    json spectral = json::array();
    for (const auto& s : rep.spectral)
        spectral.push_back(to_json(s));
    json j{{"n", rep.n},
           {"d", rep.d},
           {"r", rep.r},
           {"hamming", to_string(rep.hamming)},
           {"gv", to_string(rep.gv)},
           {"plotkin", rep.plotkin ? json(std::to_string(*rep.plotkin)) : json(nullptr)},
           {"mceliece", nullptr},
           {"spectral", spectral},
           {"entropy_relative_distance", rep.entropy_relative_distance},
           {"entropy_half_radius", rep.entropy_half_radius}};
    if (rep.mceliece)
        j["mceliece"] = json{{"value", std::to_string(rep.mceliece->value)}, {"in_regime", rep.mceliece->in_regime}};
    return j;
}

inline std::string exponent_string(std::span<const std::uint32_t> e) {
    std::string s;
    for (auto v : e)
        s.push_back(symbol_char(static_cast<Symbol>(v)));
    return s;
}

inline json to_json(const CharSumResult& res) {
    json hist = json::array();
    for (auto [s, c] : res.histogram)
        hist.push_back(json{{"sum", s}, {"count", c}});
    return json{{"q", res.q},
                {"r", res.r},
                {"ell", res.ell},
                {"max_abs", res.max_abs},
                {"argmax_abs", res.argmax_abs},
                {"max_signed", res.max_signed ? json(*res.max_signed) : json(nullptr)},
                {"argmax_signed", res.argmax_signed},
                {"histogram", hist},
                {"ratio_sqrt_q", res.ratio_sqrt_q}};
}

inline json to_json(const CharSumClaimReport& rep) {
    return json{{"q", rep.q},
                {"mode", std::string(to_string(rep.claim))},
                {"ell", rep.ell},
                {"rank", rep.rank.rank},
                {"dimension_status", std::string(to_string(rep.rank.status))},
                {"witness_found", rep.witness_found},
                {"min_distance", rep.min_distance},
                {"identity_holds", rep.identity_holds},
                {"sums", to_json(rep.sums)}};
}

inline void write_charsum_csv_header(std::ostream& os) { os << "q,ell,max_sum,ratio_sqrt_q,argmax_exponents\n"; }

inline void write_charsum_csv_row(std::ostream& os, const CharSumResult& res) {
    std::ostringstream ratio;
    ratio.precision(10);
    ratio << res.ratio_sqrt_q;
    os << res.q << ',' << res.ell << ',' << res.max_abs << ',' << ratio.str() << ','
       << exponent_string(res.argmax_abs) << '\n';
}

inline void write_comparison_csv_header(std::ostream& os) {
    os << "m,delta,s_m,q_m,epsilon,L,rank,d_dg,log2_size_dg,d_shadow_lower,d_shadow_measured,size_ratio,"
          "reference_growth,distance_dominates\n";
}

inline void write_comparison_csv_row(std::ostream& os, const DGComparison& c) {
    std::ostringstream row;
    row.precision(10);
    row << c.m << ',' << c.delta << ',' << c.s_m << ',' << c.q_m << ',' << c.epsilon << ',' << c.L << ','
        << c.rank << ',';
    if (c.dg.d_exact)
        row << *c.dg.d_exact;
    else
        row << c.dg.d;
    row << ',' << c.dg.log2_size << ',' << c.shadow_lower_bound.value << ',';
    if (c.shadow_measured)
        row << *c.shadow_measured;
    row << ',' << c.size_ratio << ',' << c.reference_growth << ',' << (c.distance_dominates ? "true" : "false")
        << '\n';
    os << row.str();
}

inline json to_json(const DGParams& p) {
    return json{{"m", p.m},
                {"s", p.s},
                {"n", p.n},
                {"log2_size", p.log2_size},
                {"d", p.d},
                {"d_exact", p.d_exact ? json(*p.d_exact) : json(nullptr)},
                {"rate", p.rate}};
}

inline json to_json(const DGComparison& c) {
    return json{{"m", c.m},
                {"delta", c.delta},
                {"s_m", c.s_m},
                {"q_m", c.q_m},
                {"epsilon", c.epsilon},
                {"L", c.L},
                {"rank", c.rank},
                {"dg", to_json(c.dg)},
                {"d_shadow_lower", c.shadow_lower_bound.value},
                {"d_shadow_measured", c.shadow_measured ? json(*c.shadow_measured) : json(nullptr)},
                {"size_ratio", c.size_ratio},
                {"reference_growth", c.reference_growth},
                {"distance_dominates", c.distance_dominates}};
}

inline json to_json(const EpsilonConstruction& c) {
    return json{{"epsilon", c.epsilon},
                {"L", c.L},
                {"claimed_distance", c.claimed_distance},
                {"length_inequality_holds", c.length_inequality_holds},
                {"claimed_dimension", c.claimed_dimension ? json(*c.claimed_dimension) : json(nullptr)},
                {"rank", c.rank.rank},
                {"dimension_status", std::string(to_string(c.rank.status))},
                {"warnings", c.warnings}};
}

}  // namespace shadow::io
