#include "rugbypi/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rugbypi/error.hpp"
#include "rugbypi/numeric.hpp"
#include "rugbypi/records.hpp"
#include "rugbypi/schema.hpp"

namespace rugbypi {

ReportTable build_report_table(const PairedDataset& paired, const AnalyzeOptions& options) {
    ReportTable table;
    table.stage = paired.stage_filter;

    const auto& names = all_names();
    for (size_t idx = 0; idx < names.size(); ++idx) {
        std::vector<std::optional<double>> w, l;
        w.reserve(paired.rows.size());
        l.reserve(paired.rows.size());
        for (const auto& row : paired.rows) {
            w.push_back(row.winner_values[idx]);
            l.push_back(row.loser_values[idx]);
        }
        table.rows.push_back(analyze_indicator(names[idx], w, l, options));
    }

    // descending r at 2 d.p., then ascending p, then name; rows without a
    // defined test follow, all-undefined dash rows last
    auto category = [](const PiTestRow& r) {
        if (r.n_pairs == 0) return 2;
        if (!r.p || !r.effect) return 1;
        return 0;
    };
    std::sort(table.rows.begin(), table.rows.end(), [&](const PiTestRow& a, const PiTestRow& b) {
        const int ca = category(a), cb = category(b);
        if (ca != cb) return ca < cb;
        if (ca == 0) {
            const long ra = std::lround(a.effect->r * 100.0);
            const long rb = std::lround(b.effect->r * 100.0);
            if (ra != rb) return ra > rb;
            if (*a.p != *b.p) return *a.p < *b.p;
        }
        return a.name < b.name;
    });
    return table;
}

namespace {

std::string stat_cell(const std::optional<DescriptiveStats>& s, int field) {
    if (!s) return "-";
    switch (field) {
    case 0: return format_fixed(s->mean, 3);
    case 1: return format_fixed(s->median, 3);
    case 2: return format_fixed(s->min, 3);
    case 3: return format_fixed(s->max, 3);
    default: return s->stddev ? format_fixed(*s->stddev, 3) : "-";
    }
}

} // namespace

std::string render_table(const ReportTable& table, ReportFormat format) {
    std::string out;
    if (format == ReportFormat::markdown) {
        out += "| indicator | w_mean | w_median | w_min | w_max | w_sd "
               "| l_mean | l_median | l_min | l_max | l_sd | p | r | sign |\n";
        out += "|---|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
        for (const auto& row : table.rows) {
            out += "| " + row.name + " |";
            for (int f = 0; f < 5; ++f) out += " " + stat_cell(row.winner, f) + " |";
            for (int f = 0; f < 5; ++f) out += " " + stat_cell(row.loser, f) + " |";
            out += row.p ? " " + format_fixed(*row.p, 4) + row.stars + " |" : " - |";
            out += row.effect ? " " + format_fixed(row.effect->r, 2) + " |" : " - |";
            out += row.n_pairs ? std::string(" ") + row.median_sign + " |" : " - |";
            out += "\n";
        }
        return out;
    }

    out += "indicator,w_mean,w_median,w_min,w_max,w_sd,"
           "l_mean,l_median,l_min,l_max,l_sd,p,stars,r,sign\n";
    for (const auto& row : table.rows) {
        out += row.name;
        auto cell = [&](const std::string& v) { out += "," + (v == "-" ? std::string() : v); };
        for (int f = 0; f < 5; ++f) cell(stat_cell(row.winner, f));
        for (int f = 0; f < 5; ++f) cell(stat_cell(row.loser, f));
        cell(row.p ? format_fixed(*row.p, 4) : "-");
        cell(row.stars.empty() ? "-" : row.stars);
        cell(row.effect ? format_fixed(row.effect->r, 2) : "-");
        cell(row.n_pairs ? std::string(1, row.median_sign) : "-");
        out += "\n";
    }
    return out;
}

ripper::Dataset to_ripper_dataset(const LongDataset& longd) {
    ripper::Dataset data;
    for (const auto& name : all_names()) data.attributes.push_back({name, false, {}});
    data.class_names = {"won", "lost"};
    data.class_attr_name = "result";
    for (const auto& row : longd.rows) {
        ripper::Instance inst;
        inst.x = row.values;
        inst.y = row.result == MatchResult::won ? 0 : 1;
        data.rows.push_back(std::move(inst));
    }
    return data;
}

uint64_t dataset_hash(const LongDataset& longd) {
    uint64_t h = 1469598103934665603ull; // FNV-1a offset basis
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= '\x1f';
        h *= 1099511628211ull;
    };
    mix(stage_filter_name(longd.stage_filter));
    for (const auto& row : longd.rows) {
        mix(row.match_id);
        mix(row.team);
        mix(result_name(row.result));
        for (const auto& v : row.values) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.17g", v ? *v : std::nan(""));
            mix(buf);
        }
    }
    return h;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
    out << content;
    if (!out) throw Error(ErrorCode::IoError, "short write to " + path);
}

namespace {

std::vector<AugmentedRecord> load_augmented(const std::string& input_path) {
    const auto records = parse_records(read_text_file(input_path));
    return augment_records(records);
}

} // namespace

void run_analysis(const AnalysisConfig& config) {
    const auto augmented = load_augmented(config.input_path);
    const auto paired = build_paired(augmented, config.stage);
    if (paired.rows.empty())
        throw Error(ErrorCode::EmptyStage,
                    std::string("no matches in stage ") + stage_filter_name(config.stage));
    const auto table = build_report_table(paired, config.wilcoxon);
    write_text_file(config.out_path, render_table(table, config.format));
}

void run_rules(const AnalysisConfig& config) {
    const auto augmented = load_augmented(config.input_path);
    const auto longd = build_long(augmented, config.stage);
    if (longd.rows.empty())
        throw Error(ErrorCode::EmptyStage,
                    std::string("no matches in stage ") + stage_filter_name(config.stage));
    const auto data = to_ripper_dataset(longd);
    const auto ruleset = ripper::fit(data, config.ripper);

    std::string out = ripper::render_ruleset(ruleset);
    char hash_buf[32];
    std::snprintf(hash_buf, sizeof(hash_buf), "%016llx",
                  (unsigned long long)dataset_hash(longd));
    const auto& rc = config.ripper;
    out += "\n# seed: " + std::to_string(rc.seed) + "\n";
    out += "# config: min_no=" + std::to_string(rc.min_no) +
           " pruning=" + (rc.use_pruning ? "on" : "off") +
           " folds=" + std::to_string(rc.folds) +
           " optimization_runs=" + std::to_string(rc.optimization_runs) + " target_class=" +
           (rc.target_class ? data.class_names[size_t(*rc.target_class)] : "auto") + "\n";
    out += "# dataset: stage=" + std::string(stage_filter_name(config.stage)) +
           " rows=" + std::to_string(longd.rows.size()) + " hash=" + hash_buf + "\n";
    write_text_file(config.out_path, out);
}

} // namespace rugbypi
