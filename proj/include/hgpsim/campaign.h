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

#ifndef HGPSIM_CAMPAIGN_H
#define HGPSIM_CAMPAIGN_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hgpsim/code.h"
#include "hgpsim/errors.h"
#include "hgpsim/fit.h"
#include "hgpsim/mask.h"
#include "hgpsim/protocol.h"

namespace hgpsim {

/// Validation failure; `fields` names every offending config key.
struct ConfigError : ArgumentError {
    ConfigError(const std::string &what, std::vector<std::string> fields)
        : ArgumentError(what), fields(std::move(fields)) {
    }
    std::vector<std::string> fields;
};

/// Either a stored base-code file or generation parameters.
struct CodeSource {
    std::optional<std::string> path;
    size_t n = 0;
    size_t dv = 5;
    size_t dc = 6;
    uint64_t seed = 0;
    size_t switch_sweeps = BiregularOptions{}.switch_sweeps;
};

struct CampaignConfig {
    std::vector<CodeSource> codes;
    std::vector<double> p_phys;
    std::vector<double> p_mask;
    std::vector<ScheduleKind> schedules;
    std::vector<size_t> taus;
    size_t trials = 0;
    uint64_t base_seed = 0;
    size_t parallelism = 1;
    MaskModel mask_model = MaskModel::fixed_fraction;
    std::string output;
};

/// Parses flat `key = value` text; list values are comma-separated and `#` starts a comment.
///
/// Keys: code_files | base_n (+ dv, dc, code_seed, switch_sweeps), p_phys, p_mask, schedule, tau,
/// trials, base_seed, parallelism, mask_model, output.
CampaignConfig parse_config(std::istream &in);
CampaignConfig load_config(const std::string &path);
/// Throws ConfigError listing every invalid field.
void validate_config(const CampaignConfig &config);
/// FNV-1a over the canonical config, excluding parallelism and output.
uint64_t config_hash(const CampaignConfig &config);

/// Seed for cell `cell_index` of the sweep (codes x p_phys x p_mask x schedule x tau, last fastest).
uint64_t cell_seed(uint64_t base_seed, uint64_t cell_index);

struct LoadedCode {
    std::string code_id;
    HgpCode code;
};
LoadedCode materialize_code(const CodeSource &source);
std::string code_id_for(const ClassicalCode &base, size_t switch_sweeps = BiregularOptions{}.switch_sweeps);

/// Column order of campaign CSVs.
extern const std::vector<std::string> kCampaignColumns;

std::string format_double(double v);
void write_campaign_header(std::ostream &out, const CampaignConfig &config);
void write_campaign_row(std::ostream &out, const CampaignRecord &record);

struct CampaignRow {
    CampaignRecord record;
    size_t line = 0;
};
/// Skips '#' lines; requires the exact header. Throws ParseError naming the line.
std::vector<CampaignRow> read_campaign_csv(std::istream &in, const std::string &source_name = "<input>");

/// Runs every cell and returns the records in cell order; rows are streamed to `out`
/// (after the metadata and header) as they complete.
std::vector<CampaignRecord> run_config(const CampaignConfig &config, std::ostream &out, std::ostream *log = nullptr);

struct CurveFit {
    CampaignRecord key;
    ErrorPerRoundFit fit;
};
struct FamilyFit {
    CampaignRecord key;
    SuppressionFit fit;
};
struct FitReport {
    std::vector<CurveFit> curves;
    std::vector<FamilyFit> families;
    std::vector<std::string> warnings;
};

/// Groups rows into curves (one per code, p_phys, p_mask, mask model and schedule),
/// fits eps_L per curve and Lambda per (p_phys, p_mask, mask model, schedule) family.
FitReport fit_campaign(const std::vector<CampaignRow> &rows, size_t t_min);
void write_fit_csv(std::ostream &out, const FitReport &report);

/// Subcommand bodies; return the process exit code (0 ok, 1 validation, 2 runtime).
int cmd_gen_code(size_t n, size_t dv, size_t dc, uint64_t seed, size_t switch_sweeps, const std::string &output,
                 std::ostream &out, std::ostream &err);
int cmd_run(const std::string &config_path, std::optional<std::string> output_override,
            std::optional<size_t> parallelism_override, std::ostream &out, std::ostream &err);
int cmd_fit(const std::vector<std::string> &inputs, size_t t_min, const std::string &output, std::ostream &out,
            std::ostream &err);

}  // namespace hgpsim

#endif
