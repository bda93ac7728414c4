// Copyright 2026 The scissorsim developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: runs scissors and teleportation experiments,
// sweeps the detector efficiency, and emits machine-readable results.
//
//   scissorsim scissors --alphas "0.7071,0.7071" --eta 1
//   scissorsim teleport -d 3 --gammas random:42 --eta 0.9 --format json
//   scissorsim teleport-basis -d 2 --gammas "1,0" --target-species "HG:0,HG:1"
//   scissorsim sweep-eta -d 2 --gammas random:7 --eta-from 0.1 --eta-to 1 --eta-steps 10
//   scissorsim verify --d-max 4
//
// SCISSORSIM_THREADS caps the sweep parallelism.

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "scissim/io.hpp"
#include "scissim/verify.hpp"

namespace {

using namespace scissim;
using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_double(std::string_view text, const std::string& what) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);  // from_chars rejects '+'
    double value = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw UsageError("cannot parse " + what + ": '" + std::string(text) + "'");
    return value;
}

/// Comma-separated complex tokens: `re` or `re+imi` (also `imi` alone).
std::vector<Complex> parse_complex_list(const std::string& text) {
    std::vector<Complex> values;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        std::erase_if(token, [](unsigned char c) { return std::isspace(c); });
        if (token.empty()) throw UsageError("empty amplitude token");
        if (token.back() == 'i' || token.back() == 'I') {
            std::string body = token.substr(0, token.size() - 1);
            // split point: a sign that is neither leading nor part of an exponent
            std::size_t split = std::string::npos;
            for (std::size_t k = body.size(); k-- > 1;) {
                if ((body[k] == '+' || body[k] == '-') &&
                    body[k - 1] != 'e' && body[k - 1] != 'E') {
                    split = k;
                    break;
                }
            }
            if (split == std::string::npos) {
                std::string imag = body.empty() || body == "+" || body == "-" ? body + "1" : body;
                values.emplace_back(0.0, parse_double(imag, "amplitude"));
            } else {
                std::string imag = body.substr(split);
                if (imag == "+" || imag == "-") imag += "1";
                values.emplace_back(parse_double(body.substr(0, split), "amplitude"),
                                    parse_double(imag, "amplitude"));
            }
        } else {
            values.emplace_back(parse_double(token, "amplitude"), 0.0);
        }
    }
    if (values.empty()) throw UsageError("no amplitudes given");
    return values;
}

/// Normalizes in place: warn when the norm is off by more than 1e-6, reject
/// beyond 1e-2.
void normalize_amplitudes(std::vector<Complex>& values, const std::string& what) {
    double n2 = 0.0;
    for (const auto& v : values) n2 += std::norm(v);
    if (n2 <= 0.0) throw UsageError(what + ": all amplitudes are zero");
    const double deviation = std::abs(std::sqrt(n2) - 1.0);
    if (deviation > 1e-2)
        throw UsageError(what + ": norm deviates from 1 by " + io::format_double(deviation) +
                         " (more than 1e-2); refusing to normalize silently");
    if (deviation > 1e-6)
        std::cerr << "warning: " << what << " norm off by " << io::format_double(deviation)
                  << "; normalizing\n";
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& v : values) v *= inv;
}

QuditVector resolve_gammas(const std::string& spec, int d) {
    if (spec.rfind("random:", 0) == 0) {
        const std::string seed_text = spec.substr(7);
        std::uint64_t seed = 0;
        auto [end, ec] = std::from_chars(seed_text.data(), seed_text.data() + seed_text.size(),
                                         seed);
        if (ec != std::errc{} || end != seed_text.data() + seed_text.size())
            throw UsageError("bad seed in '" + spec + "'");
        return haar_random_qudit(d, seed);
    }
    std::vector<Complex> values = parse_complex_list(spec);
    if (static_cast<int>(values.size()) != d)
        throw UsageError("got " + std::to_string(values.size()) + " gammas for d = " +
                         std::to_string(d));
    normalize_amplitudes(values, "gammas");
    return QuditVector(std::move(values));
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file '" + out_path + "'");
    file << content;
}

json gammas_json(const QuditVector& q) {
    json arr = json::array();
    for (const auto& g : q.gammas) arr.push_back(io::complex_to_json(g));
    return arr;
}

std::string render_ensemble_table(const HeraldedEnsemble& ensemble) {
    std::ostringstream os;
    for (const auto& branch : ensemble.branches) {
        os << "  branch p=" << io::format_double(branch.probability) << ":";
        for (const auto& [occ, amp] : branch.state.amplitudes()) {
            os << "  " << occ.to_string() << " -> (" << io::format_double(amp.real()) << ", "
               << io::format_double(amp.imag()) << ")";
        }
        os << "\n";
    }
    return os.str();
}

int cmd_scissors(const std::string& alphas_text, double eta, const std::string& format,
                 const std::string& out_path) {
    std::vector<Complex> alphas = parse_complex_list(alphas_text);
    normalize_amplitudes(alphas, "alphas");

    auto reg = make_registry({{0, "c", ModeRole::input_c, "c", "OAM:0"}});
    FockState::AmplitudeMap terms;
    for (std::size_t n = 0; n < alphas.size(); ++n)
        terms[OccupationVector({static_cast<int>(n)})] = alphas[n];
    FockState input(reg, static_cast<int>(alphas.size()) - 1, std::move(terms));

    ScissorsReport report = run_scissors(input, eta);

    if (format == "json") {
        json doc = {{"config",
                     {{"command", "scissors"}, {"alphas", gammas_json(QuditVector(alphas))},
                      {"eta", eta}}},
                    {"report", io::scissors_report_to_json(report)}};
        emit(out_path, doc.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "scissors  eta=" << io::format_double(eta) << "\n";
        for (const auto& [pattern, p] : report.per_pattern)
            os << "  P(" << (pattern == "a" ? "D1" : "D2") << ") = " << io::format_double(p)
               << "\n";
        os << "  total success = " << io::format_double(report.total_probability) << "\n";
        os << "  heralded output (mode b):\n" << render_ensemble_table(report.output);
        emit(out_path, os.str());
    }
    return 0;
}

json sampling_json(const TeleporterCircuit& circuit, const QuditVector& qudit, double eta,
                   int shots, std::uint64_t seed) {
    FockState psi = transcribe(qudit, circuit.registry, circuit.d + 2);
    for (int a : circuit.ancilla_modes) psi = create(psi, a);
    FockState phi = apply_circuit(std::move(psi), circuit.elements);
    std::vector<DetectorModel> detectors = circuit.detectors;
    for (auto& det : detectors) det.efficiency = eta;

    auto dist = measure_distribution(phi, detectors);
    std::vector<double> weights;
    std::vector<DetectionPattern> patterns;
    for (const auto& [pattern, p] : dist) {
        patterns.push_back(pattern);
        weights.push_back(p);
    }
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());

    std::map<std::string, int> accepted_counts;
    int accepted = 0;
    for (int s = 0; s < shots; ++s) {
        const DetectionPattern& drawn = patterns[pick(rng)];
        for (const auto& name : circuit.accepted_patterns) {
            if (scissim::detail::pattern_clicks(name) == drawn) {
                accepted_counts[name]++;
                accepted++;
                break;
            }
        }
    }
    json counts = json::object();
    for (const auto& [name, count] : accepted_counts) counts[name] = count;
    return {{"shots", shots},
            {"seed", seed},
            {"accepted", accepted},
            {"accepted_fraction", static_cast<double>(accepted) / shots},
            {"per_pattern_counts", counts}};
}

int cmd_teleport(int d, const std::string& gammas_text, double eta,
                 const std::vector<std::string>& target_species, int sample_shots,
                 std::uint64_t seed, const std::string& format, const std::string& out_path) {
    QuditVector qudit = resolve_gammas(gammas_text, d);
    const bool basis_change = !target_species.empty();
    TeleporterCircuit circuit =
        basis_change ? build_teleporter_to_basis(d, target_species) : build_teleporter(d);
    TeleportationReport report = run_teleporter(circuit, qudit, eta);

    if (format == "json") {
        json config = {{"command", basis_change ? "teleport-basis" : "teleport"},
                       {"d", d},
                       {"eta", eta},
                       {"gammas", gammas_json(qudit)},
                       {"seed", seed}};
        if (basis_change) config["target_species"] = target_species;
        json doc = {{"config", config}, {"report", io::teleport_report_to_json(report)}};
        if (sample_shots > 0)
            doc["sampling"] = sampling_json(circuit, qudit, eta, sample_shots, seed);
        emit(out_path, doc.dump(2) + "\n");
    } else if (format == "csv") {
        emit(out_path, std::string(io::kSweepCsvHeader) + "\n" + io::sweep_csv_row(report) + "\n");
    } else {
        std::ostringstream os;
        os << (basis_change ? "teleport-basis" : "teleport") << "  d=" << d
           << "  eta=" << io::format_double(eta) << "\n"
           << "  success probability        = " << io::format_double(report.success_probability)
           << "\n"
           << "  announcement probability   = "
           << io::format_double(report.announcement_probability) << "\n"
           << "  conditional fidelity       = " << io::format_double(report.conditional_fidelity)
           << "\n"
           << "  paper fidelity 1-eta(1-eta)= " << io::format_double(report.paper_fidelity)
           << "\n"
           << "  false announcement         = "
           << io::format_double(report.false_announcement_probability) << "\n"
           << "  two-photon event mass      = "
           << io::format_double(report.two_photon_event_probability) << "\n";
        os << "  per accepted pattern (true success share):\n";
        for (const auto& [pattern, p] : report.per_pattern)
            os << "    " << pattern << " -> " << io::format_double(p) << "\n";
        os << "  heralded output (b rails):\n" << render_ensemble_table(report.output);
        if (sample_shots > 0) {
            json s = sampling_json(circuit, qudit, eta, sample_shots, seed);
            os << "  sampled " << sample_shots << " shots (seed " << seed
               << "): accepted fraction = " << io::format_double(s["accepted_fraction"]) << "\n";
        }
        emit(out_path, os.str());
    }
    return 0;
}

int cmd_sweep_eta(int d, const std::string& gammas_text, double from, double to, int steps,
                  const std::string& format, const std::string& out_path) {
    if (steps < 1) throw UsageError("eta-steps must be >= 1");
    if (from < 0.0 || to > 1.0 || from > to) throw UsageError("eta range must lie inside [0,1]");
    QuditVector qudit = resolve_gammas(gammas_text, d);
    TeleporterCircuit circuit = build_teleporter(d);

    std::vector<double> etas;
    for (int i = 0; i < steps; ++i)
        etas.push_back(steps == 1 ? from : from + (to - from) * i / (steps - 1));

    unsigned threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    if (const char* env = std::getenv("SCISSORSIM_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) threads = static_cast<unsigned>(cap);
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(etas.size()));

    // grid points are independent; rows are stored by index so the output
    // order never depends on scheduling
    std::vector<TeleportationReport> rows(etas.size());
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t i = t; i < etas.size(); i += threads)
                rows[i] = run_teleporter(circuit, qudit, etas[i]);
        });
    }
    for (auto& worker : pool) worker.join();

    if (format == "json") {
        json arr = json::array();
        for (const auto& row : rows)
            arr.push_back({{"eta", row.eta},
                           {"success", row.success_probability},
                           {"paper_fidelity", row.paper_fidelity},
                           {"conditional_fidelity", row.conditional_fidelity},
                           {"false_announcement", row.false_announcement_probability}});
        json doc = {{"config",
                     {{"command", "sweep-eta"},
                      {"d", d},
                      {"gammas", gammas_json(qudit)},
                      {"eta_from", from},
                      {"eta_to", to},
                      {"eta_steps", steps}}},
                    {"rows", arr}};
        emit(out_path, doc.dump(2) + "\n");
    } else if (format == "table") {
        std::ostringstream os;
        os << std::left << std::setw(8) << "eta" << std::setw(14) << "success" << std::setw(16)
           << "paper_fid" << std::setw(18) << "conditional_fid" << "false_announce\n";
        for (const auto& row : rows)
            os << std::left << std::setw(8) << io::format_double(row.eta) << std::setw(14)
               << io::format_double(row.success_probability) << std::setw(16)
               << io::format_double(row.paper_fidelity) << std::setw(18)
               << io::format_double(row.conditional_fidelity)
               << io::format_double(row.false_announcement_probability) << "\n";
        emit(out_path, os.str());
    } else {
        std::string csv = std::string(io::kSweepCsvHeader) + "\n";
        for (const auto& row : rows) csv += io::sweep_csv_row(row) + "\n";
        emit(out_path, csv);
    }
    return 0;
}

int cmd_verify(int d_max, int trials, std::uint64_t seed, bool inject,
               const std::string& out_path) {
    verify::VerifyOptions options;
    options.seed = seed;
    options.d_max = d_max;
    options.gamma_trials = trials;
    options.inject_bs2_sign_flip = inject;

    auto t0 = std::chrono::steady_clock::now();
    auto results = verify::run_acceptance_checks(options);
    auto t1 = std::chrono::steady_clock::now();

    std::ostringstream os;
    bool all = verify::print_check_results(os, results);
    os << (all ? "verify: all checks passed" : "verify: FAILURES above") << " ("
       << io::format_double(std::chrono::duration<double>(t1 - t0).count()) << " s total)\n";
    emit(out_path, os.str());
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fock-basis simulator of quantum-scissors circuits and qudit teleportation"};
    app.require_subcommand(1);

    std::string alphas_text, gammas_text = "random:1", format = "table", out_path;
    std::string target_species_text;
    double eta = 1.0, eta_from = 0.1, eta_to = 1.0;
    int d = 1, eta_steps = 10, sample_shots = 0, d_max = 4, trials = 200;
    std::uint64_t seed = 1;
    bool inject = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json, csv or table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        cmd->add_option("--out", out_path, "write to a file instead of stdout");
    };

    CLI::App* scissors = app.add_subcommand("scissors", "run one quantum scissors");
    scissors->add_option("--alphas", alphas_text, "input amplitudes a0,a1,...")->required();
    scissors->add_option("--eta", eta, "detector efficiency")->check(CLI::Range(0.0, 1.0));
    add_format(scissors);

    CLI::App* teleport = app.add_subcommand("teleport", "teleport a d-dimensional qudit");
    teleport->add_option("-d,--dimension", d, "qudit dimension")->required()
        ->check(CLI::PositiveNumber);
    teleport->add_option("--gammas", gammas_text, "amplitudes g0,g1,... or random:SEED");
    teleport->add_option("--eta", eta, "detector efficiency")->check(CLI::Range(0.0, 1.0));
    teleport->add_option("--sample", sample_shots, "also draw this many sampled shots");
    teleport->add_option("--seed", seed, "seed for the sampling demonstration");
    add_format(teleport);

    CLI::App* basis = app.add_subcommand(
        "teleport-basis", "teleport onto a different output mode basis");
    basis->add_option("-d,--dimension", d, "qudit dimension")->required()
        ->check(CLI::PositiveNumber);
    basis->add_option("--gammas", gammas_text, "amplitudes g0,g1,... or random:SEED");
    basis->add_option("--eta", eta, "detector efficiency")->check(CLI::Range(0.0, 1.0));
    basis->add_option("--target-species", target_species_text,
                      "comma-separated species tags, one per rail (default HG:j)");
    add_format(basis);

    CLI::App* sweep = app.add_subcommand("sweep-eta", "tabulate the figures over an eta grid");
    sweep->add_option("-d,--dimension", d, "qudit dimension")->required()
        ->check(CLI::PositiveNumber);
    sweep->add_option("--gammas", gammas_text, "amplitudes g0,g1,... or random:SEED");
    sweep->add_option("--eta-from", eta_from, "grid start")->check(CLI::Range(0.0, 1.0));
    sweep->add_option("--eta-to", eta_to, "grid end")->check(CLI::Range(0.0, 1.0));
    sweep->add_option("--eta-steps", eta_steps, "number of grid points");
    format = "csv";
    add_format(sweep);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
    verify_cmd->add_option("--d-max", d_max, "largest dimension checked")
        ->check(CLI::Range(1, 6));
    verify_cmd->add_option("--trials", trials, "random qudits per dimension")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", seed, "base seed");
    verify_cmd->add_flag("--inject-bs-sign-error", inject,
                         "debug: corrupt one BS2 sign; the transfer check must fail");
    verify_cmd->add_option("--out", out_path, "write to a file instead of stdout");

    // subcommand defaults differ: sweep emits csv, the others a table
    scissors->preparse_callback([&](std::size_t) { format = "table"; });
    teleport->preparse_callback([&](std::size_t) { format = "table"; });
    basis->preparse_callback([&](std::size_t) { format = "table"; });
    sweep->preparse_callback([&](std::size_t) { format = "csv"; });

    CLI11_PARSE(app, argc, argv);

    try {
        if (scissors->parsed()) return cmd_scissors(alphas_text, eta, format, out_path);
        if (teleport->parsed())
            return cmd_teleport(d, gammas_text, eta, {}, sample_shots, seed, format, out_path);
        if (basis->parsed()) {
            std::vector<std::string> species;
            if (target_species_text.empty()) {
                for (int j = 0; j < d; ++j) species.push_back("HG:" + std::to_string(j));
            } else {
                std::stringstream ss(target_species_text);
                std::string token;
                while (std::getline(ss, token, ',')) species.push_back(token);
                if (static_cast<int>(species.size()) != d)
                    throw UsageError("need exactly d target species");
            }
            return cmd_teleport(d, gammas_text, eta, species, sample_shots, seed, format,
                                out_path);
        }
        if (sweep->parsed())
            return cmd_sweep_eta(d, gammas_text, eta_from, eta_to, eta_steps, format, out_path);
        if (verify_cmd->parsed()) return cmd_verify(d_max, trials, seed, inject, out_path);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
