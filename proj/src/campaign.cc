// Copyright 2026 The hgpsim Authors
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

#include "hgpsim/campaign.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <tuple>

#include "hgpsim/errors.h"
#include "hgpsim/rng.h"
#include "hgpsim/ssf.h"

namespace hgpsim {

const std::vector<std::string> kCampaignColumns = {
    "code_id", "n_qubits", "k",        "d",      "p_phys", "p_mask", "mask_model",
    "schedule", "tau",     "trials",   "failures", "p_log", "stderr", "base_seed",
};

namespace {

const std::vector<std::string> kFitColumns = {
    "kind",  "code_id", "n_qubits",     "k",      "d",             "p_phys", "p_mask",   "mask_model",
    "schedule", "points", "eps_L", "eps_L_stderr", "Lambda", "Lambda_stderr", "C",    "C_stderr",
};

std::string trim(std::string_view s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        b++;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        e--;
    }
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

template <typename T>
bool parse_number(const std::string &text, T &value) {
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    return ec == std::errc() && ptr == end && !text.empty();
}

std::string join(const std::vector<std::string> &items, const std::string &sep) {
    std::string out;
    for (size_t i = 0; i < items.size(); i++) {
        if (i) {
            out += sep;
        }
        out += items[i];
    }
    return out;
}

std::string distance_field(const std::optional<size_t> &d) {
    if (!d.has_value()) {
        return "na";
    }
    return *d == kInfiniteDistance ? "inf" : std::to_string(*d);
}

uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string canonical_config(const CampaignConfig &c) {
    std::ostringstream s;
    for (const auto &code : c.codes) {
        if (code.path) {
            s << "file:" << *code.path << ';';
        } else {
            s << "gen:" << code.n << ',' << code.dv << ',' << code.dc << ',' << code.seed << ',' << code.switch_sweeps
              << ';';
        }
    }
    s << "|p_phys:";
    for (double p : c.p_phys) {
        s << format_double(p) << ',';
    }
    s << "|p_mask:";
    for (double p : c.p_mask) {
        s << format_double(p) << ',';
    }
    s << "|schedule:";
    for (auto k : c.schedules) {
        s << schedule_name(k) << ',';
    }
    s << "|tau:";
    for (size_t t : c.taus) {
        s << t << ',';
    }
    s << "|trials:" << c.trials << "|base_seed:" << c.base_seed << "|mask_model:" << mask_model_name(c.mask_model);
    return s.str();
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

CampaignConfig parse_config(std::istream &in) {
    CampaignConfig config;
    std::vector<std::string> bad;
    std::vector<std::string> problems;
    std::vector<size_t> base_n;
    std::vector<uint64_t> code_seeds{0};
    std::vector<std::string> code_files;
    size_t dv = 5, dc = 6;
    size_t switch_sweeps = BiregularOptions{}.switch_sweeps;

    auto fail = [&](const std::string &key, const std::string &why) {
        bad.push_back(key);
        problems.push_back(key + ": " + why);
    };
    auto parse_list = [&](const std::string &key, const std::string &value, auto &out) {
        out.clear();
        for (const auto &item : split(value, ',')) {
            typename std::decay_t<decltype(out)>::value_type v{};
            if (!parse_number(item, v)) {
                fail(key, "cannot parse '" + item + "'");
                return;
            }
            out.push_back(v);
        }
    };
    auto parse_one = [&](const std::string &key, const std::string &value, auto &out) {
        if (!parse_number(value, out)) {
            fail(key, "cannot parse '" + value + "'");
        }
    };

    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::string text = trim(line);
        if (text.empty()) {
            continue;
        }
        auto eq = text.find('=');
        if (eq == std::string::npos) {
            fail("line " + std::to_string(line_no), "expected 'key = value'");
            continue;
        }
        std::string key = trim(std::string_view(text).substr(0, eq));
        std::string value = trim(std::string_view(text).substr(eq + 1));
        if (key == "code_files") {
            code_files = split(value, ',');
        } else if (key == "base_n") {
            parse_list(key, value, base_n);
        } else if (key == "dv") {
            parse_one(key, value, dv);
        } else if (key == "dc") {
            parse_one(key, value, dc);
        } else if (key == "switch_sweeps") {
            parse_one(key, value, switch_sweeps);
        } else if (key == "code_seed") {
            parse_list(key, value, code_seeds);
        } else if (key == "p_phys") {
            parse_list(key, value, config.p_phys);
        } else if (key == "p_mask") {
            parse_list(key, value, config.p_mask);
        } else if (key == "tau") {
            parse_list(key, value, config.taus);
        } else if (key == "schedule") {
            config.schedules.clear();
            for (const auto &item : split(value, ',')) {
                try {
                    config.schedules.push_back(parse_schedule(item));
                } catch (const ArgumentError &e) {
                    fail(key, e.what());
                }
            }
        } else if (key == "trials") {
            parse_one(key, value, config.trials);
        } else if (key == "base_seed") {
            parse_one(key, value, config.base_seed);
        } else if (key == "parallelism") {
            parse_one(key, value, config.parallelism);
        } else if (key == "mask_model") {
            try {
                config.mask_model = parse_mask_model(value);
            } catch (const ArgumentError &e) {
                fail(key, e.what());
            }
        } else if (key == "output") {
            config.output = value;
        } else {
            fail(key, "unknown key");
        }
    }

    for (const auto &path : code_files) {
        if (path.empty()) {
            continue;
        }
        CodeSource src;
        src.path = path;
        config.codes.push_back(src);
    }
    if (!base_n.empty()) {
        if (code_seeds.size() != 1 && code_seeds.size() != base_n.size()) {
            fail("code_seed", "needs one value or one per base_n entry");
        }
        for (size_t i = 0; i < base_n.size(); i++) {
            CodeSource src;
            src.n = base_n[i];
            src.dv = dv;
            src.dc = dc;
            src.switch_sweeps = switch_sweeps;
            src.seed = code_seeds.size() == 1 ? code_seeds[0] : code_seeds[std::min(i, code_seeds.size() - 1)];
            config.codes.push_back(src);
        }
    }
    if (!bad.empty()) {
        throw ConfigError("invalid config: " + join(problems, "; "), bad);
    }
    return config;
}

CampaignConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config '" + path + "'", {"config"});
    }
    return parse_config(in);
}

void validate_config(const CampaignConfig &c) {
    std::vector<std::string> bad;
    std::vector<std::string> problems;
    auto fail = [&](const std::string &key, const std::string &why) {
        if (std::find(bad.begin(), bad.end(), key) == bad.end()) {
            bad.push_back(key);
        }
        problems.push_back(key + ": " + why);
    };
    auto probabilities = [&](const std::string &key, const std::vector<double> &ps) {
        if (ps.empty()) {
            fail(key, "empty");
        }
        for (double p : ps) {
            if (!(p >= 0 && p <= 1)) {
                fail(key, format_double(p) + " outside [0, 1]");
            }
        }
    };
    if (c.codes.empty()) {
        fail("codes", "set code_files or base_n");
    }
    for (const auto &code : c.codes) {
        if (code.path && !std::filesystem::exists(*code.path)) {
            fail("code_files", "'" + *code.path + "' does not exist");
        }
    }
    probabilities("p_phys", c.p_phys);
    probabilities("p_mask", c.p_mask);
    if (c.schedules.empty()) {
        fail("schedule", "empty");
    }
    if (c.taus.empty()) {
        fail("tau", "empty");
    }
    if (c.trials < 1) {
        fail("trials", "must be at least 1");
    }
    if (c.parallelism < 1) {
        fail("parallelism", "must be at least 1");
    }
    if (!bad.empty()) {
        throw ConfigError("invalid config: " + join(problems, "; "), bad);
    }
}

uint64_t config_hash(const CampaignConfig &config) {
    return fnv1a(canonical_config(config));
}

uint64_t cell_seed(uint64_t base_seed, uint64_t cell_index) {
    return derive_seed(base_seed ^ 0x63656C6CULL, cell_index);
}

std::string code_id_for(const ClassicalCode &base, size_t switch_sweeps) {
    std::string id = "n" + std::to_string(base.n) + "-dv" + std::to_string(base.dv) + "-dc" + std::to_string(base.dc);
    if (base.seed) {
        id += "-s" + std::to_string(*base.seed);
    }
    if (switch_sweeps != BiregularOptions{}.switch_sweeps) {
        id += "-w" + std::to_string(switch_sweeps);
    }
    return id;
}

LoadedCode materialize_code(const CodeSource &source) {
    ClassicalCode base;
    std::string id;
    if (source.path) {
        base = load_code(*source.path);
        id = std::filesystem::path(*source.path).stem().string();
    } else {
        base = sample_biregular_code(source.n, source.dv, source.dc, source.seed, {source.switch_sweeps});
        id = code_id_for(base, source.switch_sweeps);
    }
    if (!base.d && base.k <= kMaxEnumerationDimension) {
        base.d = classical_distance(base);
    }
    return {id, hgp_product(base)};
}

void write_campaign_header(std::ostream &out, const CampaignConfig &config) {
    char hash[32];
    std::snprintf(hash, sizeof(hash), "%016llx", static_cast<unsigned long long>(config_hash(config)));
    out << "# hgpsim campaign\n";
    out << "# config_hash=" << hash << '\n';
    out << "# base_seed=" << config.base_seed << '\n';
    out << "# mask_model=" << mask_model_name(config.mask_model) << '\n';
    out << "# mask_sampling=per-trial\n";
    out << "# seeds: cell=cell_seed(base_seed, cell_index); trial=trial_seed(cell, trial_index)\n";
    out << join(kCampaignColumns, ",") << '\n';
}

void write_campaign_row(std::ostream &out, const CampaignRecord &r) {
    out << r.code_id << ',' << r.n_qubits << ',' << r.k << ',' << distance_field(r.d) << ',' << format_double(r.p_phys)
        << ',' << format_double(r.p_mask) << ',' << mask_model_name(r.mask_model) << ',' << schedule_name(r.schedule)
        << ',' << r.tau << ',' << r.trials << ',' << r.failures << ',' << format_double(r.p_log) << ','
        << format_double(r.std_error) << ',' << r.base_seed << '\n';
}

std::vector<CampaignRow> read_campaign_csv(std::istream &in, const std::string &source_name) {
    std::vector<CampaignRow> rows;
    std::string line;
    size_t line_no = 0;
    bool have_header = false;
    auto error = [&](const std::string &why) {
        return ParseError(source_name + ":" + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        auto fields = split(line, ',');
        if (!have_header) {
            if (fields != kCampaignColumns) {
                throw error("header does not match the campaign schema (" + join(kCampaignColumns, ",") + ")");
            }
            have_header = true;
            continue;
        }
        if (fields.size() != kCampaignColumns.size()) {
            throw error("expected " + std::to_string(kCampaignColumns.size()) + " fields, found " +
                        std::to_string(fields.size()));
        }
        CampaignRow row;
        row.line = line_no;
        CampaignRecord &r = row.record;
        r.code_id = fields[0];
        size_t d = 0;
        bool ok = parse_number(fields[1], r.n_qubits) && parse_number(fields[2], r.k) &&
                  parse_number(fields[4], r.p_phys) && parse_number(fields[5], r.p_mask) &&
                  parse_number(fields[8], r.tau) && parse_number(fields[9], r.trials) &&
                  parse_number(fields[10], r.failures) && parse_number(fields[11], r.p_log) &&
                  parse_number(fields[12], r.std_error) && parse_number(fields[13], r.base_seed);
        if (!ok) {
            throw error("malformed numeric field");
        }
        if (fields[3] == "inf") {
            r.d = kInfiniteDistance;
        } else if (fields[3] != "na") {
            if (!parse_number(fields[3], d)) {
                throw error("malformed distance '" + fields[3] + "'");
            }
            r.d = d;
        }
        try {
            r.mask_model = parse_mask_model(fields[6]);
            r.schedule = parse_schedule(fields[7]);
        } catch (const ArgumentError &e) {
            throw error(e.what());
        }
        if (r.trials == 0 || r.failures > r.trials || !(r.p_log >= 0 && r.p_log <= 1)) {
            throw error("inconsistent trials/failures/p_log");
        }
        rows.push_back(std::move(row));
    }
    if (!have_header) {
        throw ParseError(source_name + ": missing header row");
    }
    return rows;
}

std::vector<CampaignRecord> run_config(const CampaignConfig &config, std::ostream &out, std::ostream *log) {
    validate_config(config);
    write_campaign_header(out, config);
    std::vector<CampaignRecord> records;
    uint64_t cell = 0;
    for (const auto &source : config.codes) {
        LoadedCode loaded = materialize_code(source);
        SmallSetTable table(loaded.code);
        if (log) {
            *log << "code " << loaded.code_id << " " << loaded.code.parameter_string() << "\n";
        }
        for (double p_phys : config.p_phys) {
            for (double p_mask : config.p_mask) {
                for (ScheduleKind schedule : config.schedules) {
                    for (size_t tau : config.taus) {
                        CampaignSpec spec;
                        spec.schedule = schedule;
                        spec.p_mask = p_mask;
                        spec.mask_model = config.mask_model;
                        spec.p_phys = p_phys;
                        spec.tau = tau;
                        spec.trials = config.trials;
                        spec.base_seed = cell_seed(config.base_seed, cell);
                        spec.parallelism = config.parallelism;
                        CampaignRecord rec = run_campaign(loaded.code, table, spec, loaded.code_id);
                        rec.base_seed = config.base_seed;
                        write_campaign_row(out, rec);
                        out.flush();
                        if (log) {
                            *log << "  cell " << cell << ": p_phys=" << format_double(p_phys)
                                 << " p_mask=" << format_double(p_mask) << " " << schedule_name(schedule)
                                 << " tau=" << tau << " failures=" << rec.failures << "/" << rec.trials << "\n";
                        }
                        records.push_back(std::move(rec));
                        cell++;
                    }
                }
            }
        }
    }
    return records;
}

FitReport fit_campaign(const std::vector<CampaignRow> &rows, size_t t_min) {
    FitReport report;
    using CurveKey = std::tuple<std::string, size_t, size_t, std::optional<size_t>, double, double, int, int>;
    std::map<CurveKey, size_t> curve_index;
    std::vector<CampaignRecord> curve_keys;
    std::vector<std::vector<RoundsCurvePoint>> curve_points;

    for (const auto &row : rows) {
        const auto &r = row.record;
        if (r.failures == 0) {
            report.warnings.push_back("line " + std::to_string(row.line) + ": zero failures; excluded from fit");
        } else if (r.failures == r.trials) {
            report.warnings.push_back("line " + std::to_string(row.line) + ": p_log = 1; excluded from fit");
        }
        CurveKey key{r.code_id,  r.n_qubits, r.k, r.d, r.p_phys, r.p_mask, static_cast<int>(r.mask_model),
                     static_cast<int>(r.schedule)};
        auto [it, inserted] = curve_index.try_emplace(key, curve_keys.size());
        if (inserted) {
            curve_keys.push_back(r);
            curve_points.emplace_back();
        }
        curve_points[it->second].push_back({r.tau, r.p_log, r.std_error, r.trials});
    }

    for (size_t c = 0; c < curve_keys.size(); c++) {
        try {
            report.curves.push_back({curve_keys[c], fit_error_per_round(curve_points[c], t_min)});
        } catch (const InsufficientDataError &e) {
            report.warnings.push_back("curve " + curve_keys[c].code_id + " p_mask=" +
                                      format_double(curve_keys[c].p_mask) + " " +
                                      std::string(schedule_name(curve_keys[c].schedule)) + ": " + e.what());
        }
    }

    using FamilyKey = std::tuple<double, double, int, int>;
    std::map<FamilyKey, size_t> family_index;
    std::vector<CampaignRecord> family_keys;
    std::vector<std::vector<DistancePoint>> family_points;
    for (const auto &curve : report.curves) {
        const auto &r = curve.key;
        if (!r.d || *r.d == kInfiniteDistance) {
            continue;
        }
        FamilyKey key{r.p_phys, r.p_mask, static_cast<int>(r.mask_model), static_cast<int>(r.schedule)};
        auto [it, inserted] = family_index.try_emplace(key, family_keys.size());
        if (inserted) {
            family_keys.push_back(r);
            family_points.emplace_back();
        }
        family_points[it->second].push_back({*r.d, curve.fit.eps_L, curve.fit.std_error});
    }
    for (size_t f = 0; f < family_keys.size(); f++) {
        try {
            report.families.push_back({family_keys[f], fit_lambda(family_points[f])});
        } catch (const InsufficientDataError &e) {
            report.warnings.push_back("family p_mask=" + format_double(family_keys[f].p_mask) + " " +
                                      std::string(schedule_name(family_keys[f].schedule)) + ": " + e.what());
        }
    }
    return report;
}

void write_fit_csv(std::ostream &out, const FitReport &report) {
    out << "# hgpsim fits\n";
    out << "# error bars: weighted least-squares regression standard errors\n";
    out << join(kFitColumns, ",") << '\n';
    for (const auto &c : report.curves) {
        const auto &r = c.key;
        out << "eps_L," << r.code_id << ',' << r.n_qubits << ',' << r.k << ',' << distance_field(r.d) << ','
            << format_double(r.p_phys) << ',' << format_double(r.p_mask) << ',' << mask_model_name(r.mask_model)
            << ',' << schedule_name(r.schedule) << ',' << c.fit.points_used << ',' << format_double(c.fit.eps_L)
            << ',' << format_double(c.fit.std_error) << ",,,,\n";
    }
    for (const auto &f : report.families) {
        const auto &r = f.key;
        out << "lambda,,,,," << format_double(r.p_phys) << ',' << format_double(r.p_mask) << ','
            << mask_model_name(r.mask_model) << ',' << schedule_name(r.schedule) << ',' << f.fit.points_used << ",,,"
            << format_double(f.fit.lambda) << ',' << format_double(f.fit.lambda_std_error) << ','
            << format_double(f.fit.c) << ',' << format_double(f.fit.c_std_error) << '\n';
    }
}

int cmd_gen_code(size_t n, size_t dv, size_t dc, uint64_t seed, size_t switch_sweeps, const std::string &output,
                 std::ostream &out, std::ostream &err) {
    try {
        ClassicalCode base = sample_biregular_code(n, dv, dc, seed, {switch_sweeps});
        if (base.k <= kMaxEnumerationDimension) {
            base.d = classical_distance(base);
        }
        save_code(output, base);
        HgpCode code = hgp_product(base);
        std::string d = base.d ? distance_field(base.d) : "?";
        out << "base [" << base.n << ", " << base.k << ", " << d << "] (" << base.dv << ", " << base.dc
            << ")-biregular, seed " << seed << " -> " << output << "\n";
        out << code.parameter_string() << "\n";
        return 0;
    } catch (const ArgumentError &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_run(const std::string &config_path, std::optional<std::string> output_override,
            std::optional<size_t> parallelism_override, std::ostream &out, std::ostream &err) {
    CampaignConfig config;
    try {
        config = load_config(config_path);
        if (output_override) {
            config.output = *output_override;
        }
        if (parallelism_override) {
            config.parallelism = *parallelism_override;
        }
        validate_config(config);
        if (config.output.empty()) {
            throw ConfigError("invalid config: output: not set", {"output"});
        }
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << "\n";
        err << "offending fields: " << join(e.fields, ", ") << "\n";
        return 1;
    } catch (const ArgumentError &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    try {
        std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw std::runtime_error("cannot open '" + config.output + "' for writing");
        }
        auto records = run_config(config, file, &out);
        if (!file) {
            throw std::runtime_error("failed writing '" + config.output + "'");
        }
        out << records.size() << " rows written to " << config.output << "\n";
        return 0;
    } catch (const ArgumentError &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_fit(const std::vector<std::string> &inputs, size_t t_min, const std::string &output, std::ostream &out,
            std::ostream &err) {
    std::vector<CampaignRow> rows;
    try {
        for (const auto &path : inputs) {
            std::ifstream in(path);
            if (!in) {
                throw ArgumentError("cannot open '" + path + "'");
            }
            auto part = read_campaign_csv(in, path);
            rows.insert(rows.end(), part.begin(), part.end());
        }
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ArgumentError &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    try {
        FitReport report = fit_campaign(rows, t_min);
        for (const auto &w : report.warnings) {
            err << "warning: " << w << "\n";
        }
        std::ofstream file(output, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw std::runtime_error("cannot open '" + output + "' for writing");
        }
        write_fit_csv(file, report);
        if (!file) {
            throw std::runtime_error("failed writing '" + output + "'");
        }
        for (const auto &f : report.families) {
            out << "p_mask=" << format_double(f.key.p_mask) << " " << schedule_name(f.key.schedule)
                << ": Lambda = " << format_double(f.fit.lambda) << " +- " << format_double(f.fit.lambda_std_error)
                << "\n";
        }
        out << report.curves.size() << " curve fits, " << report.families.size() << " Lambda fits written to "
            << output << "\n";
        return 0;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace hgpsim
