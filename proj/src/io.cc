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

#include "hdlab/io.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hdlab {

namespace {

Json number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return v;
}

double read_number(const Json &j, const std::string &where) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s == "inf") {
            return INFINITY;
        }
        if (s == "-inf") {
            return -INFINITY;
        }
        if (s == "nan") {
            return NAN;
        }
    }
    throw DocumentError(where + ": expected a number", 0);
}

const Json &field(const Json &j, const char *key, const std::string &where) {
    if (!j.is_object() || !j.contains(key)) {
        throw DocumentError(where + ": missing field '" + key + "'", 0);
    }
    return j.at(key);
}

bool is_scalar(const Json &j) {
    return !j.is_array() && !j.is_object();
}

bool is_flat(const Json &j) {
    if (!j.is_array()) {
        return is_scalar(j);
    }
    return std::all_of(j.begin(), j.end(), [](const Json &e) {
        return is_scalar(e) || (e.is_array() && std::all_of(e.begin(), e.end(), is_scalar));
    });
}

void dump(const Json &j, int indent, std::string &out) {
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    std::string inner(static_cast<size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            bool flat = is_flat(j);
            out += "[";
            bool first = true;
            for (const auto &e : j) {
                if (!first) {
                    out += flat ? ", " : ",";
                }
                first = false;
                if (!flat) {
                    out += "\n" + inner;
                }
                dump(e, indent + 1, out);
            }
            if (!flat) {
                out += "\n" + pad;
            }
            out += "]";
            return;
        }
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{";
            bool first = true;
            for (const auto &[k, v] : j.items()) {
                if (!first) {
                    out += ",";
                }
                first = false;
                out += "\n" + inner + Json(k).dump() + ": ";
                dump(v, indent + 1, out);
            }
            out += "\n" + pad + "}";
            return;
        }
        default:
            out += j.dump();
    }
}

std::string dressing_type(const Dressing &d) {
    switch (d.index()) {
        case 0:
            return "plain";
        case 1:
            return "half";
        case 2:
            return "phase";
        default:
            return "explicit";
    }
}

std::string kind_name(CheckKind k) {
    return k == CheckKind::Bound ? "bound" : "exclusion";
}

Json named_values(const std::vector<std::pair<std::string, double>> &v) {
    Json out = Json::array();
    for (const auto &[name, value] : v) {
        out.push_back({{"name", name}, {"value", number(value)}});
    }
    return out;
}

std::vector<std::pair<std::string, double>> read_named_values(const Json &j, const std::string &where) {
    std::vector<std::pair<std::string, double>> out;
    if (!j.is_array()) {
        throw DocumentError(where + ": expected an array", 0);
    }
    for (const auto &e : j) {
        out.emplace_back(field(e, "name", where).get<std::string>(), read_number(field(e, "value", where), where));
    }
    return out;
}

}  // namespace

std::string format_double(double v) {
    if (v == 0) {
        return std::signbit(v) ? "-0.0" : "0.0";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    std::string s = buf;
    // Keep floats recognisable as floats on re-parse.
    if (s.find_first_of(".eEn") == std::string::npos) {
        s += ".0";
    }
    return s;
}

std::string dump_canonical(const Json &j) {
    std::string out;
    dump(j, 0, out);
    out += "\n";
    return out;
}

Json parse_document(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw DocumentError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what(), e.byte);
    }
}

FiniteAbelianGroup parse_group_spec(const std::string &spec) {
    std::string s;
    for (char ch : spec) {
        s += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    std::vector<int> factors;
    size_t pos = 0;
    while (true) {
        if (pos >= s.size() || s[pos] != 'z') {
            throw std::invalid_argument("bad group spec '" + spec + "': expected Z<n> factors joined by x");
        }
        pos++;
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            pos++;
        }
        if (pos == start || pos - start > 4) {
            throw std::invalid_argument("bad group spec '" + spec + "': missing or oversized factor order");
        }
        int n = std::stoi(s.substr(start, pos - start));
        if (n < 1) {
            throw std::invalid_argument("bad group spec '" + spec + "': factor orders must be positive");
        }
        factors.push_back(n);
        if (pos == s.size()) {
            break;
        }
        if (s[pos] != 'x') {
            throw std::invalid_argument("bad group spec '" + spec + "': expected x between factors");
        }
        pos++;
    }
    std::erase(factors, 1);
    return FiniteAbelianGroup(std::move(factors));
}

Json tensor_to_json(const ComplexTensor &t) {
    Json entries = Json::array();
    for (cplx v : t.entries()) {
        entries.push_back(Json::array({number(v.real()), number(v.imag())}));
    }
    return {{"shape", t.shape()}, {"entries", entries}};
}

ComplexTensor tensor_from_json(const Json &j) {
    const auto &shape_j = field(j, "shape", "tensor");
    const auto &entries_j = field(j, "entries", "tensor");
    if (!shape_j.is_array() || !entries_j.is_array()) {
        throw DocumentError("tensor: shape and entries must be arrays", 0);
    }
    std::vector<size_t> shape;
    for (const auto &d : shape_j) {
        if (!d.is_number_unsigned() || d.get<size_t>() == 0) {
            throw DocumentError("tensor: shape entries must be positive integers", 0);
        }
        shape.push_back(d.get<size_t>());
    }
    std::vector<cplx> entries;
    for (const auto &e : entries_j) {
        if (!e.is_array() || e.size() != 2) {
            throw DocumentError("tensor: each entry must be [re, im]", 0);
        }
        entries.emplace_back(read_number(e[0], "tensor entry"), read_number(e[1], "tensor entry"));
    }
    try {
        return ComplexTensor(std::move(shape), std::move(entries));
    } catch (const std::invalid_argument &e) {
        throw DocumentError(std::string("tensor: ") + e.what(), 0);
    }
}

Json cp_map_to_json(const CPMap &phi) {
    Json kraus = Json::array();
    for (const auto &k : phi.kraus()) {
        kraus.push_back(tensor_to_json(k));
    }
    return {{"kind", "cp-map"}, {"kraus", kraus}};
}

CPMap cp_map_from_json(const Json &j) {
    const auto &kj = field(j, "kraus", "cp-map");
    if (!kj.is_array() || kj.empty()) {
        throw DocumentError("cp-map: kraus must be a nonempty array", 0);
    }
    std::vector<ComplexTensor> kraus;
    for (const auto &k : kj) {
        kraus.push_back(tensor_from_json(k));
    }
    try {
        return CPMap(std::move(kraus));
    } catch (const std::invalid_argument &e) {
        throw DocumentError(std::string("cp-map: ") + e.what(), 0);
    }
}

Json realization_to_json(const DHRealization &r) {
    Json j = cp_map_to_json(r.phi);
    j["kind"] = "dh-realization";
    j["bridge"] = r.bridge.group.name();
    j["flavor"] = r.bridge.flavor == Flavor::Group ? "group" : "fourier";
    Json d = {{"type", dressing_type(r.dressing)}};
    if (auto *h = std::get_if<BridgeHalf>(&r.dressing)) {
        d["matrix"] = tensor_to_json(h->half);
    } else if (auto *p = std::get_if<BridgePhase>(&r.dressing)) {
        Json angles = Json::array();
        for (double a : p->phase.angles()) {
            angles.push_back(number(a));
        }
        d["angles"] = angles;
    } else if (auto *e = std::get_if<ExplicitBridge>(&r.dressing)) {
        d["matrix"] = tensor_to_json(e->matrix);
    }
    j["dressing"] = d;
    return j;
}

DHRealization realization_from_json(const Json &j) {
    CPMap phi = cp_map_from_json(j);
    FiniteAbelianGroup group;
    try {
        group = parse_group_spec(field(j, "bridge", "realization").get<std::string>());
    } catch (const Json::exception &e) {
        throw DocumentError("realization: bridge must be a group spec string", 0);
    } catch (const std::invalid_argument &e) {
        throw DocumentError(std::string("realization: ") + e.what(), 0);
    }
    Flavor flavor = Flavor::Group;
    if (j.contains("flavor")) {
        auto f = j.at("flavor");
        if (f == "fourier") {
            flavor = Flavor::Fourier;
        } else if (f != "group") {
            throw DocumentError("realization: flavor must be 'group' or 'fourier'", 0);
        }
    }
    Dressing dressing = PlainBridge{};
    if (j.contains("dressing")) {
        const auto &d = j.at("dressing");
        std::string type = field(d, "type", "dressing").get<std::string>();
        if (type == "half") {
            dressing = BridgeHalf{tensor_from_json(field(d, "matrix", "dressing"))};
        } else if (type == "explicit") {
            dressing = ExplicitBridge{tensor_from_json(field(d, "matrix", "dressing"))};
        } else if (type == "phase") {
            std::vector<double> angles;
            for (const auto &a : field(d, "angles", "dressing")) {
                angles.push_back(read_number(a, "dressing angle"));
            }
            try {
                dressing = BridgePhase{PhaseFunction(group, angles)};
            } catch (const std::invalid_argument &e) {
                throw DocumentError(std::string("dressing: ") + e.what(), 0);
            }
        } else if (type != "plain") {
            throw DocumentError("dressing: unknown type '" + type + "'", 0);
        }
    }
    return {std::move(phi), ClassicalStructure{group, flavor}, std::move(dressing)};
}

Json report_to_json(const VerificationReport &r, bool with_timing) {
    Json checks = Json::array();
    for (const auto &c : r.checks) {
        checks.push_back({{"name", c.name},
                          {"kind", kind_name(c.kind)},
                          {"value", number(c.value)},
                          {"threshold", number(c.threshold)},
                          {"pass", c.pass}});
    }
    Json j = {
        {"id", r.id},
        {"theory", r.theory},
        {"groups", r.groups},
        {"dims", r.dims},
        {"trials", r.trials},
        {"seed", r.seed},
        {"tolerance", number(r.tolerance)},
        {"max_violation", number(r.max_violation)},
        {"fitted_scalars", named_values(r.fitted_scalars)},
        {"statistics", named_values(r.statistics)},
        {"checks", checks},
        {"pass", r.pass},
    };
    if (with_timing) {
        j["elapsed_ms"] = number(r.elapsed_ms);
    }
    return j;
}

VerificationReport report_from_json(const Json &j) {
    const std::string w = "report";
    VerificationReport r;
    try {
        r.id = field(j, "id", w).get<std::string>();
        r.theory = field(j, "theory", w).get<std::string>();
        r.groups = field(j, "groups", w).get<std::vector<std::string>>();
        r.dims = field(j, "dims", w).get<std::vector<size_t>>();
        r.trials = field(j, "trials", w).get<int>();
        r.seed = field(j, "seed", w).get<uint64_t>();
        r.tolerance = read_number(field(j, "tolerance", w), w);
        r.max_violation = read_number(field(j, "max_violation", w), w);
        r.fitted_scalars = read_named_values(field(j, "fitted_scalars", w), w);
        r.statistics = read_named_values(field(j, "statistics", w), w);
        for (const auto &c : field(j, "checks", w)) {
            CheckResult cr;
            cr.name = field(c, "name", w).get<std::string>();
            auto kind = field(c, "kind", w).get<std::string>();
            if (kind != "bound" && kind != "exclusion") {
                throw DocumentError("report: unknown check kind '" + kind + "'", 0);
            }
            cr.kind = kind == "bound" ? CheckKind::Bound : CheckKind::Exclusion;
            cr.value = read_number(field(c, "value", w), w);
            cr.threshold = read_number(field(c, "threshold", w), w);
            cr.pass = field(c, "pass", w).get<bool>();
            r.checks.push_back(std::move(cr));
        }
        r.pass = field(j, "pass", w).get<bool>();
        if (j.contains("elapsed_ms")) {
            r.elapsed_ms = read_number(j.at("elapsed_ms"), w);
        }
    } catch (const Json::exception &e) {
        throw DocumentError(std::string("report: ") + e.what(), 0);
    }
    return r;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("cannot open '" + path + "' for writing");
    }
    out << text;
    if (!out) {
        throw std::invalid_argument("failed writing '" + path + "'");
    }
}

}  // namespace hdlab
