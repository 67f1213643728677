// Copyright 2026 The stoqkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stoqkit/cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "stoqkit/curing.hpp"
#include "stoqkit/decomposition.hpp"
#include "stoqkit/qmc.hpp"
#include "stoqkit/reductions.hpp"
#include "stoqkit/stoq_check.hpp"
#include "stoqkit/verify.hpp"

#ifndef STOQKIT_VERSION
#define STOQKIT_VERSION "0.0.0"
#endif

namespace stoq {

using nlohmann::json;

const char *version() {
    return STOQKIT_VERSION;
}

std::string sha256_hex(const std::string &data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr)) {
        throw std::runtime_error("SHA-256 failed");
    }
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) {
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return hex.str();
}

json CommandReport::to_json() const {
    json in = json::array();
    for (const auto &i : inputs) {
        in.push_back({{"path", i.path}, {"sha256", i.sha256}, {"bytes", i.bytes}});
    }
    return {{"command", command}, {"version", version},   {"inputs", in},
            {"verdict", verdict}, {"exit_code", exit_code}, {"result", result},
            {"timing", {{"seconds", seconds}}}};
}

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Report under construction plus the human-readable lines.
struct Outcome {
    CommandReport report;
    std::ostringstream text;

    void set(int code, const std::string &verdict) {
        report.exit_code = code;
        report.verdict = verdict;
    }
};

std::string read_input(const std::string &path, Outcome &o) {
    std::string data;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        data = ss.str();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw IoError("cannot open " + path);
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        data = ss.str();
    }
    o.report.inputs.push_back({path, sha256_hex(data), data.size()});
    return data;
}

void write_output(const std::string &path, const std::string &data) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << data)) {
        throw IoError("cannot write " + path);
    }
}

// Wraps a parser so format errors surface as ParseError.
template <typename F>
auto parse_input(F &&parse) {
    try {
        return parse();
    } catch (const ParseError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw ParseError(ParseError::Kind::Malformed, 0, e.what());
    }
}

Rational rational_option(const std::string &text, const char *what) {
    auto r = parse_rational(text);
    if (!r) {
        throw UsageError(std::string("invalid ") + what + ": " + text);
    }
    return *r;
}

// ---------------------------------------------------------------- commands

void check_global_cmd(const std::string &file, std::size_t budget, Outcome &o) {
    Hamiltonian h = parse_input([&] { return parse_hsum(read_input(file, o)); });
    GlobalVerdict v = check_global(h, budget);
    o.report.result = v.to_json();
    o.text << "global: " << to_string(v.status) << "\n";
    if (v.witness) {
        o.text << "witness: <" << v.witness->first.to_string() << "|H|" << v.witness->second.to_string()
               << "> = " << to_string(v.witness_value) << "\n";
    }
    if (v.undecided_flip) {
        o.text << "undecided on flip set " << v.undecided_flip->to_string() << " (budget " << budget << ")\n";
    }
    switch (v.status) {
        case GlobalStatus::Stoquastic:
            o.set(kExitYes, "yes");
            break;
        case GlobalStatus::NotStoquastic:
            o.set(kExitNo, "no");
            break;
        case GlobalStatus::Undecided:
            o.set(kExitUndecided, "undecided");
            break;
    }
}

void check_termwise_cmd(const std::string &file, std::size_t m, Outcome &o) {
    Hamiltonian h = parse_input([&] { return parse_hsum(read_input(file, o)); });
    TermwiseCertificate c = check_termwise(h, m);
    o.report.result = c.to_json();
    o.text << m << "-termwise: " << (c.yes ? "YES" : "NO") << "\n";
    if (c.yes) {
        o.text << "generators: " << c.generators.size() << "\n";
    } else {
        if (c.failing_flip) {
            o.text << "failing flip set: " << c.failing_flip->to_string() << "\n";
        }
        o.text << "reason: " << c.reason << "\n";
    }
    o.set(c.yes ? kExitYes : kExitNo, c.yes ? "yes" : "no");
}

void decompose_cmd(const std::string &file, Outcome &o) {
    Hamiltonian h = parse_input([&] { return parse_hsum(read_input(file, o)); });
    try {
        StoqDecomposition d = decompose_global(h);
        o.report.result = d.to_json();
        o.text << "beta: " << to_string(d.beta) << "\n"
               << "terms: " << d.terms.size() << "\n"
               << "M: " << to_string(d.norm_bound) << "\n";
        for (const auto &t : d.terms) {
            o.text << "flip " << t.flip.to_string() << " rep " << t.representative.to_string() << " circuit [";
            for (std::size_t i = 0; i < t.circuit.size(); ++i) {
                o.text << (i ? ", " : "") << t.circuit[i].to_string();
            }
            o.text << "] norm " << to_string(t.norm) << "\n";
        }
        o.set(kExitYes, "success");
    } catch (const NotGloballyStoquastic &e) {
        o.report.result = {{"error", e.what()}};
        o.text << "not globally stoquastic: " << e.what() << "\n";
        o.set(kExitNo, "no");
    }
}

void cure_hadamard_cmd(const std::string &file, std::size_t max_n, Outcome &o) {
    Hamiltonian h = parse_input([&] { return parse_hsum(read_input(file, o)); });
    try {
        auto mask = search_hadamard_mask(h, max_n);
        if (mask) {
            o.report.result = {{"mask", mask->to_string()},
                               {"transformed", serialize_hsum(conjugate_hadamard(h, *mask))}};
            o.text << "mask: " << mask->to_string() << "\n";
            o.set(kExitYes, "yes");
        } else {
            o.report.result = {{"mask", nullptr}};
            o.text << "no Hadamard mask cures the input\n";
            o.set(kExitNo, "no");
        }
    } catch (const UndecidedError &e) {
        o.report.result = {{"error", e.what()}};
        o.text << "undecided: " << e.what() << "\n";
        o.set(kExitUndecided, "undecided");
    }
}

void cure_xyz_cmd(const std::string &file, const std::string &method, Outcome &o) {
    XyzChain chain = parse_input([&] {
        XyzChain c = parse_chain(read_input(file, o));
        c.validate();
        return c;
    });
    if (method == "single-qubit") {
        auto cure = search_xyz_single_qubit(chain);
        if (!cure) {
            o.report.result = {{"method", method}, {"assignment", nullptr}};
            o.text << "no signed-permutation assignment cures the chain\n";
            o.set(kExitNo, "no");
            return;
        }
        json assignment = json::array();
        for (auto idx : cure->assignment) {
            assignment.push_back(SignedPermutation::all()[idx].to_string());
        }
        o.report.result = {{"method", method},
                           {"assignment", assignment},
                           {"tableau", cure->tableau.to_json()},
                           {"transformed", serialize_hsum(cure->transformed)}};
        o.text << "assignment:";
        for (const auto &a : assignment) {
            o.text << " " << a.get<std::string>();
        }
        o.text << "\n";
        o.set(kExitYes, "yes");
        return;
    }
    try {
        CliffordCure cure = cure_xyz_clifford(chain);
        o.report.result = cure.to_json();
        o.report.result["method"] = method;
        o.text << "clifford cure: 4-termwise " << (cure.certificate.yes ? "YES" : "NO")
               << (cure.relabeled ? " (relabeled)" : "") << (cure.identity ? " (identity)" : "") << "\n"
               << serialize_hsum(cure.transformed);
        o.set(kExitYes, "yes");
    } catch (const NotApplicable &e) {
        o.report.result = {{"method", method}, {"error", e.what()}};
        o.text << "not applicable: " << e.what() << "\n";
        o.set(kExitUndecided, "undecided");
    }
}

struct GenOptions {
    std::string kind;
    std::string file;
    std::string k;
    std::string eps = "1/2";
    std::string out;
};

void gen_cmd(const GenOptions &g, Outcome &o) {
    std::string text;
    if (g.kind == "prop1" || g.kind == "conp") {
        IsingInstance graph = parse_input([&] {
            IsingInstance i = parse_graph(read_input(g.file, o));
            i.validate();
            return i;
        });
        if (g.kind == "prop1") {
            Prop1Instance p = gen_prop1(graph);
            o.report.result = {{"e0", to_string(p.e0)}, {"frustrated", p.frustrated}};
            text = serialize_hsum(p.h);
        } else {
            if (g.k.empty()) {
                throw UsageError("gen conp requires --k");
            }
            Rational eps = rational_option(g.eps, "--eps");
            if (sgn(eps) <= 0 || eps >= 1) {
                throw UsageError("--eps must lie in (0, 1)");
            }
            text = serialize_hsum(gen_conp(graph, rational_option(g.k, "--k"), eps));
            o.report.result = {{"k", g.k}, {"eps", g.eps}};
        }
    } else {
        CnfFormula f = parse_input([&] {
            CnfFormula c = parse_dimacs(read_input(g.file, o));
            c.validate();
            return c;
        });
        if (g.kind == "minmax") {
            MinmaxInstance m = gadget_3sat_to_minmax(f);
            o.report.result = {{"k", m.k}, {"padded_clauses", m.padded_clauses}};
            text = serialize_dimacs(m.formula);
        } else {
            if (g.k.empty()) {
                throw UsageError("gen sigma2 requires --k");
            }
            long k = 0;
            try {
                k = std::stol(g.k);
            } catch (const std::exception &) {
                throw UsageError("invalid --k: " + g.k);
            }
            if (k < 0) {
                throw UsageError("--k must be nonnegative");
            }
            Sigma2Instance inst = assemble_sigma2(f, static_cast<std::size_t>(k));
            o.report.result = {{"k", k}, {"layout", inst.layout.to_json()}};
            text = serialize_hsum(inst.h);
        }
    }
    o.report.result["kind"] = g.kind;
    o.report.result["output_sha256"] = sha256_hex(text);
    if (g.out.empty()) {
        o.report.result["text"] = text;
        o.text << text;
    } else {
        write_output(g.out, text);
        o.report.result["path"] = g.out;
        o.text << "wrote " << g.out << "\n";
    }
    o.set(kExitYes, "success");
}

void qmc_cmd(const std::string &file, QmcParams p, Outcome &o) {
    Hamiltonian h = parse_input([&] { return parse_hsum(read_input(file, o)); });
    try {
        QmcResult r = run_qmc(h, p);
        o.report.result = r.to_json();
        o.text << "energy: " << r.energy << " +- " << r.energy_stderr << "\n"
               << "avg_sign: " << r.avg_sign << " +- " << r.sign_stderr << "\n"
               << "acceptance: " << r.acceptance << "\n"
               << "seed: " << p.seed << "\n";
        o.set(kExitYes, "success");
    } catch (const std::invalid_argument &e) {
        // Direct mode on a non-stoquastic input, or tau too large.
        o.report.result = {{"error", e.what()}, {"params", p.to_json()}};
        o.text << "rejected: " << e.what() << "\n";
        o.set(kExitNo, "no");
    }
}

void verify_cmd(const std::string &suite, uint64_t seed, Outcome &o) {
    std::vector<SuiteReport> reports;
    if (suite == "all") {
        reports = run_all_suites(seed);
    } else {
        const auto &names = suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end()) {
            throw UsageError("unknown suite: " + suite);
        }
        reports.push_back(run_suite(suite, seed));
    }
    bool ok = true;
    json list = json::array();
    for (const auto &r : reports) {
        ok &= r.passed();
        list.push_back(r.to_json());
        for (const auto &c : r.checks) {
            o.text << (c.passed ? "PASS " : "FAIL ") << r.suite << "/" << c.name << "\n";
        }
    }
    o.text << "seed: " << seed << "\n";
    o.report.result = {{"seed", seed}, {"suites", list}};
    o.set(ok ? kExitYes : kExitNo, ok ? "yes" : "no");
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Stoquasticity deciders, sign-curing and path-integral tools", "stoqkit"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Print the JSON command report");

    std::string file;
    std::size_t budget = kDefaultGlobalBudget, m = 0, max_n = 20;
    auto *check = app.add_subcommand("check", "Decide stoquasticity")->require_subcommand(1);
    auto *check_global_app = check->add_subcommand("global", "Global stoquasticity");
    check_global_app->add_option("file", file, "HSUM file")->required();
    check_global_app->add_option("--budget", budget, "Largest relevant support enumerated");
    auto *check_termwise_app = check->add_subcommand("termwise", "m-termwise stoquasticity");
    check_termwise_app->add_option("file", file, "HSUM file")->required();
    check_termwise_app->add_option("--m", m, "Locality of the terms")->required()->check(CLI::PositiveNumber);

    auto *decompose = app.add_subcommand("decompose", "Decomposition of a globally stoquastic Hamiltonian");
    decompose->add_option("file", file, "HSUM file")->required();

    std::string method = "single-qubit";
    auto *cure = app.add_subcommand("cure", "Sign-curing searches")->require_subcommand(1);
    auto *cure_hadamard = cure->add_subcommand("hadamard", "Hadamard-mask search");
    cure_hadamard->add_option("file", file, "HSUM file")->required();
    cure_hadamard->add_option("--max-n", max_n, "Largest qubit count searched");
    auto *cure_xyz = cure->add_subcommand("xyz", "XYZ chain curing");
    cure_xyz->add_option("file", file, "Chain file")->required();
    cure_xyz->add_option("--method", method, "single-qubit or clifford")
        ->check(CLI::IsMember({"single-qubit", "clifford"}));

    GenOptions gen_opts;
    auto *gen = app.add_subcommand("gen", "Instance generators");
    gen->add_option("kind", gen_opts.kind, "prop1, conp, sigma2 or minmax")
        ->required()
        ->check(CLI::IsMember({"prop1", "conp", "sigma2", "minmax"}));
    gen->add_option("file", gen_opts.file, "Graph file (prop1, conp) or DIMACS CNF (sigma2, minmax)")->required();
    gen->add_option("--k", gen_opts.k, "Threshold K (conp) or k (sigma2)");
    gen->add_option("--eps", gen_opts.eps, "Epsilon in (0, 1) for conp");
    gen->add_option("--out", gen_opts.out, "Write the instance here instead of stdout");

    QmcParams qp;
    std::string mode = "direct", norm = "per-slice";
    auto *qmc = app.add_subcommand("qmc", "Path-integral Monte Carlo");
    qmc->add_option("file", file, "HSUM file")->required();
    qmc->add_option("--beta", qp.beta, "Inverse temperature")->check(CLI::NonNegativeNumber);
    qmc->add_option("--slices", qp.slices, "Trotter slices");
    qmc->add_option("--sweeps", qp.sweeps, "Recorded sweeps");
    qmc->add_option("--burn-in", qp.burn_in, "Discarded sweeps");
    qmc->add_option("--thinning", qp.thinning, "Sweeps between samples");
    qmc->add_option("--chains", qp.chains, "Independent chains");
    qmc->add_option("--seed", qp.seed, "Random seed");
    qmc->add_option("--mode", mode, "direct or reweighted")->check(CLI::IsMember({"direct", "reweighted"}));
    qmc->add_option("--normalization", norm, "per-slice or per-slice-minus-one")
        ->check(CLI::IsMember({"per-slice", "per-slice-minus-one"}));

    std::string suite;
    uint64_t seed = kDefaultVerifySeed;
    auto *verify = app.add_subcommand("verify", "Run invariant suites");
    verify->add_option("suite", suite, "Suite name or 'all'")->required();
    verify->add_option("--seed", seed, "Seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion &) {
        out << version() << "\n";
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "stoqkit: " << e.what() << "\n";
        return kExitUsage;
    }

    Outcome o;
    o.report.version = version();
    auto start = std::chrono::steady_clock::now();
    try {
        if (check_global_app->parsed()) {
            o.report.command = "check global";
            check_global_cmd(file, budget, o);
        } else if (check_termwise_app->parsed()) {
            o.report.command = "check termwise";
            check_termwise_cmd(file, m, o);
        } else if (decompose->parsed()) {
            o.report.command = "decompose";
            decompose_cmd(file, o);
        } else if (cure_hadamard->parsed()) {
            o.report.command = "cure hadamard";
            cure_hadamard_cmd(file, max_n, o);
        } else if (cure_xyz->parsed()) {
            o.report.command = "cure xyz";
            cure_xyz_cmd(file, method, o);
        } else if (gen->parsed()) {
            o.report.command = "gen " + gen_opts.kind;
            gen_cmd(gen_opts, o);
        } else if (qmc->parsed()) {
            o.report.command = "qmc";
            qp.mode = mode == "direct" ? QmcMode::Direct : QmcMode::Reweighted;
            qp.normalization = norm == "per-slice" ? Normalization::PerSlice : Normalization::PerSliceMinusOne;
            qmc_cmd(file, qp, o);
        } else if (verify->parsed()) {
            o.report.command = "verify";
            verify_cmd(suite, seed, o);
        }
    } catch (const UsageError &e) {
        err << "stoqkit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError &e) {
        o.set(kExitIo, "error");
        o.report.result = {{"error", e.what()}};
        o.text.str("");
        err << "stoqkit: " << e.what() << "\n";
    } catch (const ParseError &e) {
        o.set(kExitParse, "error");
        o.report.result = {{"error", e.what()}, {"line", e.line}};
        o.text.str("");
        err << "stoqkit: parse error: " << e.what() << "\n";
    } catch (const BudgetExceeded &e) {
        o.set(kExitUndecided, "undecided");
        o.report.result = {{"error", e.what()}};
        o.text.str("");
        o.text << "budget exceeded: " << e.what() << "\n";
    } catch (const NonRealHamiltonian &e) {
        o.set(kExitParse, "error");
        o.report.result = {{"error", e.what()}};
        o.text.str("");
        err << "stoqkit: " << e.what() << "\n";
    }
    o.report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (as_json) {
        out << o.report.to_json().dump(2) << "\n";
    } else {
        out << o.text.str();
    }
    return o.report.exit_code;
}

}  // namespace stoq
