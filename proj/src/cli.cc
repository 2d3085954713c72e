// Copyright 2026 The hdlab Authors
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

#include "hdlab/cli.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hdlab/io.h"
#include "hdlab/random.h"
#include "hdlab/verify.h"

namespace hdlab {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitBadInput = 2;

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    return out;
}

uint64_t parse_seed(const std::string &s, const std::string &source) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
            return c >= '0' && c <= '9';
        })) {
        throw std::invalid_argument(source + " must be a nonnegative integer, got '" + s + "'");
    }
    try {
        return std::stoull(s);
    } catch (const std::out_of_range &) {
        throw std::invalid_argument(source + " is out of range: '" + s + "'");
    }
}

uint64_t default_seed() {
    const char *env = std::getenv("HDLAB_SEED");
    if (env == nullptr) {
        return 42;
    }
    return parse_seed(env, "HDLAB_SEED");
}

std::string format_text(const VerificationReport &r, bool timing) {
    std::string out = "prop " + r.id + " (" + r.theory + ")";
    if (!r.groups.empty()) {
        out += " groups=";
        for (size_t i = 0; i < r.groups.size(); i++) {
            out += (i ? "," : "") + r.groups[i];
        }
    }
    if (!r.dims.empty()) {
        out += " dims=";
        for (size_t i = 0; i < r.dims.size(); i++) {
            out += (i ? "," : "") + std::to_string(r.dims[i]);
        }
    }
    out += " trials=" + std::to_string(r.trials) + " seed=" + std::to_string(r.seed) +
           " tol=" + format_double(r.tolerance) + ": " + (r.pass ? "PASS" : "FAIL") +
           " max_violation=" + format_double(r.max_violation);
    if (timing) {
        out += " elapsed_ms=" + format_double(r.elapsed_ms);
    }
    out += "\n";
    for (const auto &c : r.checks) {
        out += std::string("  ") + (c.pass ? "pass " : "FAIL ") + c.name + ": " + format_double(c.value) +
               (c.kind == CheckKind::Bound ? " <= " : " >= ") + format_double(c.threshold) + "\n";
    }
    for (const auto &[name, v] : r.fitted_scalars) {
        out += "  fitted " + name + " = " + format_double(v) + "\n";
    }
    for (const auto &[name, v] : r.statistics) {
        out += "  stat " + name + " = " + format_double(v) + "\n";
    }
    return out;
}

struct CheckOptions {
    std::string prop;
    std::string group;
    std::string dim;
    int trials = 200;
    std::string seed;
    double tol = kDefaultTol;
    std::string format = "text";
    bool timing = false;
};

int run_check(const CheckOptions &o, std::ostream &out) {
    RunConfig config = RunConfig::defaults();
    config.trials = o.trials;
    config.tol = o.tol;
    config.seed = o.seed.empty() ? default_seed() : parse_seed(o.seed, "--seed");
    if (!o.group.empty()) {
        config.groups.clear();
        for (const auto &s : split(o.group, ',')) {
            config.groups.push_back(parse_group_spec(s));
        }
        config.explicit_sizes = true;
    }
    if (!o.dim.empty()) {
        config.dims.clear();
        for (const auto &s : split(o.dim, ',')) {
            config.dims.push_back(static_cast<size_t>(parse_seed(s, "--dim")));
        }
        config.explicit_sizes = true;
    }
    // A lone size flag fixes the other one too. Group orders outside the
    // supported dimension range leave the default dims in place.
    if (!o.group.empty() && o.dim.empty()) {
        std::vector<size_t> dims;
        for (const auto &g : config.groups) {
            if (g.order() <= 5 && std::find(dims.begin(), dims.end(), g.order()) == dims.end()) {
                dims.push_back(g.order());
            }
        }
        if (!dims.empty()) {
            config.dims = dims;
        }
    }
    if (o.group.empty() && !o.dim.empty()) {
        config.groups.clear();
        for (size_t d : config.dims) {
            config.groups.push_back(FiniteAbelianGroup::cyclic(static_cast<int>(d)));
        }
    }
    std::vector<VerificationReport> reports;
    if (o.prop == "all") {
        reports = run_all(config);
    } else {
        reports.push_back(run_proposition(o.prop, config));
    }
    bool pass = std::all_of(reports.begin(), reports.end(), [](const auto &r) {
        return r.pass;
    });
    if (o.format == "json") {
        Json arr = Json::array();
        for (const auto &r : reports) {
            arr.push_back(report_to_json(r, o.timing));
        }
        out << dump_canonical(Json{{"pass", pass}, {"reports", arr}});
    } else {
        for (const auto &r : reports) {
            out << format_text(r, o.timing);
        }
        out << (pass ? "all checks passed" : "some checks failed") << "\n";
    }
    return pass ? kExitOk : kExitFailed;
}

int run_denote(const std::string &in, const std::string &out_path) {
    auto doc = parse_document(read_file(in));
    if (!doc.is_object()) {
        throw DocumentError("map file must hold a realization object", 0);
    }
    ComplexTensor t;
    if (doc.value("kind", "") == "cp-map") {
        // A bare CP map denotes with the trivial bridge.
        t = denote(DHRealization{cp_map_from_json(doc), white(FiniteAbelianGroup())});
    } else {
        t = denote(realization_from_json(doc));
    }
    write_file(out_path, dump_canonical(tensor_to_json(t)));
    return kExitOk;
}

int run_sample(const std::string &kind_name, size_t dim, const std::string &seed, const std::string &out_path) {
    RandomKind kind = parse_random_kind(kind_name);
    uint64_t s = seed.empty() ? default_seed() : parse_seed(seed, "--seed");
    auto value = random_suite(kind, dim, s);
    Json doc;
    if (auto *st = std::get_if<DHState>(&value)) {
        doc = tensor_to_json(st->tensor);
    } else if (auto *dd = std::get_if<DDState>(&value)) {
        doc = tensor_to_json(dd->tensor);
        doc["amplitudes"] = tensor_to_json(*dd->amplitudes);
    } else if (auto *cp = std::get_if<CPMap>(&value)) {
        doc = cp_map_to_json(*cp);
    } else {
        doc = realization_to_json(std::get<DHRealization>(std::get<DHMap>(value).certificate));
    }
    write_file(out_path, dump_canonical(doc));
    return kExitOk;
}

int run_povm(const std::string &state_path, std::ostream &out) {
    auto t = tensor_from_json(parse_document(read_file(state_path)));
    DHState state(t);
    auto effects = povm_complete(state.dim());
    std::string line;
    for (size_t k = 0; k < effects.size(); k++) {
        double p = effects[k](state).real();
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.10g", p);
        std::string label = k + 1 == effects.size() ? "UHfB" : std::to_string(k);
        line += (k ? " " : "") + std::string("P(") + label + ")=" + buf;
    }
    out << line << "\n";
    return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"hdlab: density hypercubes, double dilation and double mixing", "hdlab"};
    app.require_subcommand(1);

    CheckOptions check;
    auto *cmd_check = app.add_subcommand("check", "Run proposition check batteries");
    cmd_check->add_option("--prop", check.prop, "Proposition id or 'all'")->required();
    cmd_check->add_option("--group", check.group, "Group spec such as Z3 or Z2xZ2 (comma list allowed)");
    cmd_check->add_option("--dim", check.dim, "Dimension (comma list allowed)");
    cmd_check->add_option("--trials", check.trials, "Random trials per check")->check(CLI::PositiveNumber);
    cmd_check->add_option("--seed", check.seed, "Base seed (default: HDLAB_SEED or 42)");
    cmd_check->add_option("--tol", check.tol, "Tolerance")->check(CLI::PositiveNumber);
    cmd_check->add_option("--format", check.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd_check->add_flag("--timing", check.timing, "Include elapsed times");

    std::string denote_in, denote_out;
    auto *cmd_denote = app.add_subcommand("denote", "Denote a realization file as a rank-8 tensor");
    cmd_denote->add_option("--in", denote_in, "Realization file")->required();
    cmd_denote->add_option("--out", denote_out, "Tensor file")->required();

    std::string sample_kind, sample_seed, sample_out;
    size_t sample_dim = 2;
    auto *cmd_sample = app.add_subcommand("sample", "Write a seeded random value");
    cmd_sample->add_option("--kind", sample_kind, "dh-state, dd-state, cp-map or dh-map")->required();
    cmd_sample->add_option("--dim", sample_dim, "Dimension (2-5)");
    cmd_sample->add_option("--seed", sample_seed, "Seed (default: HDLAB_SEED or 42)");
    cmd_sample->add_option("--out", sample_out, "Output file")->required();

    std::string povm_state;
    auto *cmd_demo = app.add_subcommand("demo", "Demonstrations");
    cmd_demo->require_subcommand(1);
    auto *cmd_povm = cmd_demo->add_subcommand("povm", "Outcome probabilities of the completed basis measurement");
    cmd_povm->add_option("--state", povm_state, "State tensor file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitBadInput;
    }

    try {
        if (cmd_check->parsed()) {
            return run_check(check, out);
        }
        if (cmd_denote->parsed()) {
            return run_denote(denote_in, denote_out);
        }
        if (cmd_sample->parsed()) {
            return run_sample(sample_kind, sample_dim, sample_seed, sample_out);
        }
        if (cmd_povm->parsed()) {
            return run_povm(povm_state, out);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    err << app.help();
    return kExitBadInput;
}

}  // namespace hdlab
