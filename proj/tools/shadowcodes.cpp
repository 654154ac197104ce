/**************************************************************************
 * shadowcodes.cpp
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

// Command-line front end. Primary output goes to stdout (or --out files)
// and is byte-identical across runs; timings go only to the --log sidecar.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include <shadow/shadow.hpp>

namespace {

using nlohmann::json;
using namespace shadow;

enum ExitCode { ok = 0, input_error = 2, resource_cap = 3, internal_error = 4 };

struct Options {
    unsigned workers = detail::default_workers();
    std::string log_path;

    // construct
    std::uint64_t q = 0;
    std::uint32_t r = 2;
    double epsilon = 0;
    std::size_t L = 0;
    unsigned degree = 2;
    std::vector<std::string> polys;
    std::string out;
    std::string format = "text";
    std::uint64_t cap = default_enumeration_cap;

    // analyze / decode / puncture
    std::string matrix;
    unsigned max_degree = 2;
    bool no_exhaustive = false;
    std::string weights_csv;
    std::string received;
    std::vector<std::size_t> positions;
    std::size_t trailing = 0;

    // bounds
    std::uint64_t n = 0, d = 0;
    std::string k_range;

    // compare-dg
    std::vector<unsigned> ms;
    double delta = 0;
    std::size_t measure_max_L = 20;

    // charsum
    std::vector<std::uint64_t> qs;
    std::size_t ell = 0;
    std::string mode;

    // next-prime-power
    std::uint64_t x = 0;
    bool odd = false;
};

/// Writes to the named file, or stdout for "" and "-".
void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os)
        detail::fail(Errc::parse_error, "cannot open " + path + " for writing");
    os << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is)
        detail::fail(Errc::parse_error, "cannot open " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

/// Text or JSON matrix, chosen by the first non-blank character.
GeneratorMatrix load_matrix(const std::string& path) {
    const std::string text = slurp(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            detail::fail(Errc::parse_error, e.what());
        }
        return io::matrix_from_json(j);
    }
    std::istringstream is(text);
    return io::read_matrix_text(is);
}

/// "c0,c1,...,1" lowest degree first, entries are element indices.
Polynomial parse_poly(const std::string& s) {
    std::vector<std::uint32_t> c;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            unsigned long v = std::stoul(item, &used);
            if (used != item.size() || v > std::numeric_limits<std::uint32_t>::max())
                throw std::invalid_argument(item);
            c.push_back(static_cast<std::uint32_t>(v));
        } catch (const std::logic_error&) {
            detail::fail(Errc::parse_error, "bad polynomial coefficient '" + item + "' in '" + s + "'");
        }
    }
    return Polynomial::from_indices(c);
}

std::vector<Polynomial> chosen_polys(const FiniteField& F, const Options& o, std::size_t count) {
    if (!o.polys.empty()) {
        std::vector<Polynomial> out;
        for (const auto& s : o.polys)
            out.push_back(parse_poly(s));
        return out;
    }
    return enumerate_monic_irreducibles(F, o.degree, count);
}

void write_matrix(const Options& o, const GeneratorMatrix& G, const ShadowCodeSpec* spec) {
    if (o.out.empty())
        return;
    if (o.format == "json") {
        emit(o.out, dump(io::matrix_to_json(G, spec)));
    } else {
        std::ostringstream os;
        io::write_matrix_text(os, G);
        emit(o.out, os.str());
    }
}

json analysis_json(const GeneratorMatrix& G, const Options& o, unsigned max_degree, bool exhaustive) {
    AnalysisOptions a;
    a.cap = o.cap;
    a.workers = o.workers;
    a.max_degree = max_degree;
    a.exhaustive = exhaustive;
    return io::to_json(analyze(G, a));
}

int cmd_construct(const Options& o) {
    json out;
    if (o.epsilon > 0) {
        auto c = construct_from_epsilon(o.q, o.r, o.epsilon, o.workers);
        out = io::matrix_to_json(c.matrix, &c.spec);
        out["construction"] = io::to_json(c);
        const bool small = checked_pow(o.r, static_cast<unsigned>(c.L)).value_or(o.cap + 1) <= o.cap;
        out["analysis"] = analysis_json(c.matrix, o, c.spec.max_degree(), small);
        write_matrix(o, c.matrix, &c.spec);
        for (const auto& w : c.warnings)
            std::cerr << "warning: " << w << "\n";
    } else {
        FiniteField F = make_field(o.q);
        Character chi(F, o.r);
        if (o.polys.empty() && o.L == 0)
            detail::fail(Errc::domain_error, "give one of --epsilon, --L or --poly");
        ShadowCodeSpec spec(chi, chosen_polys(F, o, o.L));
        GeneratorMatrix G = build(spec, o.workers);
        RankReport rr = rank_report(spec, G);
        out = io::matrix_to_json(G, &spec);
        out["rank"] = rr.rank;
        out["dimension_status"] = std::string(to_string(rr.status));
        const bool small = checked_pow(o.r, static_cast<unsigned>(spec.size())).value_or(o.cap + 1) <= o.cap;
        out["analysis"] = analysis_json(G, o, spec.max_degree(), small);
        write_matrix(o, G, &spec);
    }
    std::cout << dump(out);
    return ok;
}

int cmd_analyze(const Options& o) {
    GeneratorMatrix G = load_matrix(o.matrix);
    AnalysisOptions a;
    a.cap = o.cap;
    a.workers = o.workers;
    a.max_degree = o.max_degree;
    a.exhaustive = !o.no_exhaustive;
    CodeReport rep = analyze(G, a);
    if (!o.weights_csv.empty()) {
        if (!rep.weight_distribution)
            detail::fail(Errc::domain_error, "--weights-csv needs an exhaustive run");
        std::ostringstream csv;
        io::write_weights_csv(csv, *rep.weight_distribution);
        emit(o.weights_csv, csv.str());
    }
    std::cout << dump(io::to_json(rep));
    return ok;
}

int cmd_decode(const Options& o) {
    GeneratorMatrix G = load_matrix(o.matrix);
    auto word = io::parse_word(o.received, G.r());
    auto msg = erasure_decode(G, word);
    const auto erasures = std::count(word.begin(), word.end(), erased);
    std::string text;
    for (auto v : msg)
        text.push_back(io::symbol_char(static_cast<Symbol>(v)));
    json out{{"message", msg},
             {"message_string", text},
             {"erasures", erasures},
             {"codeword", io::word_string(encode(G, msg))}};
    std::cout << dump(out);
    return ok;
}

int cmd_puncture(const Options& o) {
    GeneratorMatrix G = load_matrix(o.matrix);
    GeneratorMatrix P = o.positions.empty() ? puncture_trailing(G, o.trailing) : puncture(G, o.positions);
    json out = io::matrix_to_json(P);
    out["original_length"] = G.cols();
    out["original_rank"] = rank(G);
    out["rank"] = rank(P);
    out["rank_preserved"] = rank(P) == rank(G);
    write_matrix(o, P, nullptr);
    std::cout << dump(out);
    return ok;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
    if (s.empty())
        return {1, 0};
    const auto sep = s.find_first_of(":-");
    try {
        if (sep == std::string::npos) {
            auto k = std::stoull(s);
            return {k, k};
        }
        return {std::stoull(s.substr(0, sep)), std::stoull(s.substr(sep + 1))};
    } catch (const std::logic_error&) {
        detail::fail(Errc::parse_error, "--k-range expects 'a:b'");
    }
}

int cmd_bounds(const Options& o) {
    auto [k1, k2] = parse_range(o.k_range);
    if (k1 == 0)
        detail::fail(Errc::domain_error, "spectral k starts at 1");
    std::cout << dump(io::to_json(bound_report(o.n, o.d, o.r, k1, k2)));
    return ok;
}

int cmd_compare_dg(const Options& o) {
    std::ostringstream os;
    json rows = json::array();
    if (o.format != "json")
        io::write_comparison_csv_header(os);
    for (unsigned m : o.ms) {
        auto c = compare_with_delsarte_goethals(m, o.delta, o.workers, o.measure_max_L);
        if (o.format == "json")
            rows.push_back(io::to_json(c));
        else
            io::write_comparison_csv_row(os, c);
    }
    emit(o.out, o.format == "json" ? dump(rows) : os.str());
    return ok;
}

int cmd_charsum(const Options& o) {
    std::ostringstream csv;
    json rows = json::array();
    io::write_charsum_csv_header(csv);
    for (std::uint64_t q : o.qs) {
        if (!o.mode.empty()) {
            const auto claim = o.mode == "sum_gt_one" ? CharSumClaim::sum_gt_one : CharSumClaim::omega_sqrt;
            auto rep = verify_character_sum_claims(q, claim, o.workers, o.cap);
            io::write_charsum_csv_row(csv, rep.sums);
            rows.push_back(io::to_json(rep));
        } else {
            FiniteField F = make_field(q);
            Character chi(F, o.r);
            if (o.polys.empty() && o.ell == 0)
                detail::fail(Errc::domain_error, "give one of --ell, --mode or --poly");
            auto polys = chosen_polys(F, o, o.ell);
            ShadowCodeSpec spec(chi, polys);  // validates the family
            auto res = max_charsum(chi, spec.polynomials(), o.cap, o.workers);
            io::write_charsum_csv_row(csv, res);
            rows.push_back(io::to_json(res));
        }
    }
    emit(o.out, o.format == "json" ? dump(rows) : csv.str());
    return ok;
}

int cmd_next_prime_power(const Options& o) {
    const std::uint64_t q = next_prime_power_gt(o.x, o.odd);
    auto pp = as_prime_power(q);
    std::cout << dump(json{{"x", o.x}, {"odd_only", o.odd}, {"q", q}, {"p", pp->prime}, {"ell", pp->exponent}});
    return ok;
}

void print_error(const std::string& code, const std::string& message, std::optional<std::uint64_t> count = {}) {
    json err{{"error", code}, {"message", message}};
    if (count)
        err["count"] = *count;
    std::cerr << err.dump() << "\n";
}

void write_log(const Options& o, const std::string& subcommand, double seconds, int status) {
    if (o.log_path.empty())
        return;
    std::ofstream log(o.log_path, std::ios::app);
    const std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    log << json{{"time", stamp},
                {"subcommand", subcommand},
                {"seconds", seconds},
                {"workers", o.workers},
                {"exit_code", status}}
               .dump()
        << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Shadow codes: construction, analysis and character-sum experiments"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--workers", o.workers, "Worker threads for enumeration")->check(CLI::Range(1u, 1024u));
    app.add_option("--log", o.log_path, "Append a JSON timing record to this file");
    app.add_option("--exhaustive-cap", o.cap, "Largest number of messages to enumerate");

    auto* construct = app.add_subcommand("construct", "Build a shadow code generator matrix");
    construct->add_option("--q", o.q, "Field size (prime power)")->required();
    construct->add_option("--r", o.r, "Character order (prime dividing q - 1)");
    auto* eps = construct->add_option("--epsilon", o.epsilon, "Take L = floor(q^(1/2 - epsilon)) quadratics");
    auto* len = construct->add_option("--L", o.L, "Number of canonical irreducibles");
    auto* poly = construct->add_option("--poly", o.polys, "Explicit polynomial as coefficient indices, lowest first");
    eps->excludes(len)->excludes(poly);
    len->excludes(poly);
    construct->add_option("--degree", o.degree, "Degree of the canonical irreducibles")->check(CLI::Range(2u, 32u));
    construct->add_option("--out", o.out, "Matrix output file");
    construct->add_option("--format", o.format, "Matrix file format")->check(CLI::IsMember({"text", "json"}));

    auto* an = app.add_subcommand("analyze", "Rank, bounds and weight distribution of a matrix file");
    an->add_option("--matrix", o.matrix, "Matrix file (text or JSON)")->required();
    an->add_option("--max-degree", o.max_degree, "Largest polynomial degree, for the bounds");
    an->add_flag("--no-exhaustive", o.no_exhaustive, "Skip the codeword enumeration");
    an->add_option("--weights-csv", o.weights_csv, "Write the weight distribution as CSV");

    auto* dec = app.add_subcommand("decode", "Erasure decoding; '?' marks an erased symbol");
    dec->add_option("--matrix", o.matrix, "Matrix file (text or JSON)")->required();
    dec->add_option("--received", o.received, "Received word")->required();

    auto* pun = app.add_subcommand("puncture", "Delete coordinates");
    pun->add_option("--matrix", o.matrix, "Matrix file (text or JSON)")->required();
    auto* pos = pun->add_option("--positions", o.positions, "Column indices to delete")->delimiter(',');
    auto* tr = pun->add_option("--trailing", o.trailing, "Delete the last t columns");
    pos->excludes(tr);
    pun->add_option("--out", o.out, "Matrix output file");
    pun->add_option("--format", o.format, "Matrix file format")->check(CLI::IsMember({"text", "json"}));

    auto* bnd = app.add_subcommand("bounds", "Classical bounds at (n, d, r)");
    bnd->add_option("--n", o.n, "Length")->required();
    bnd->add_option("--d", o.d, "Minimum distance")->required();
    bnd->add_option("--r", o.r, "Alphabet size");
    bnd->add_option("--k-range", o.k_range, "Spectral parameters a:b (binary only)");

    auto* dg = app.add_subcommand("compare-dg", "Compare with Delsarte-Goethals codes at length about 2^m");
    dg->add_option("--m", o.ms, "One or more m values")->required()->delimiter(',');
    dg->add_option("--delta", o.delta, "delta in (0, 5/12)")->required();
    dg->add_option("--measure-max-L", o.measure_max_L, "Measure d exactly when L is at most this");
    dg->add_option("--out", o.out, "Output file");
    dg->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* cs = app.add_subcommand("charsum", "Maximum character sum over products of irreducibles");
    cs->add_option("--q", o.qs, "One or more field sizes")->required()->delimiter(',');
    cs->add_option("--r", o.r, "Character order");
    auto* ell = cs->add_option("--ell", o.ell, "Number of canonical quadratics");
    auto* mode = cs->add_option("--mode", o.mode, "Choose ell from q and verify the claim")
                     ->check(CLI::IsMember({"sum_gt_one", "omega_sqrt"}));
    auto* cpoly = cs->add_option("--poly", o.polys, "Explicit polynomial as coefficient indices, lowest first");
    ell->excludes(mode)->excludes(cpoly);
    mode->excludes(cpoly);
    cs->add_option("--out", o.out, "Output file");
    cs->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* npp = app.add_subcommand("next-prime-power", "Smallest prime power above x");
    npp->add_option("--x", o.x, "Lower limit (exclusive)")->required();
    npp->add_flag("--odd", o.odd, "Odd prime powers only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("usage_error", e.what());
        return input_error;
    }

    // text formats are the default for matrices, csv for sweeps
    if ((dg->parsed() || cs->parsed()) && o.format == "text")
        o.format = "csv";
    if ((cs->parsed() && !o.mode.empty()) && o.r != 2) {
        print_error("domain_error", "--mode uses the quadratic character; drop --r");
        return input_error;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const auto start = std::chrono::steady_clock::now();
    int status = ok;
    try {
        if (name == "construct")
            status = cmd_construct(o);
        else if (name == "analyze")
            status = cmd_analyze(o);
        else if (name == "decode")
            status = cmd_decode(o);
        else if (name == "puncture")
            status = cmd_puncture(o);
        else if (name == "bounds")
            status = cmd_bounds(o);
        else if (name == "compare-dg")
            status = cmd_compare_dg(o);
        else if (name == "charsum")
            status = cmd_charsum(o);
        else
            status = cmd_next_prime_power(o);
    } catch (const Error& e) {
        print_error(std::string(to_string(e.code())), e.what(), e.count());
        status = e.code() == Errc::too_large ? resource_cap : input_error;
    } catch (const InvariantViolation& e) {
        print_error("invariant_violation", e.what());
        status = internal_error;
    } catch (const std::bad_alloc&) {
        print_error("too_large", "out of memory");
        status = resource_cap;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_log(o, name, seconds, status);
    return status;
}
