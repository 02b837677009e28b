#pragma once

#include <string>
#include <vector>

#include "rugbypi/analyze.hpp"
#include "rugbypi/datasets.hpp"
#include "rugbypi/ripper.hpp"

namespace rugbypi {

enum class ReportFormat { markdown, csv };

struct AnalysisConfig {
    std::string input_path;
    StageFilter stage = StageFilter::all;
    AnalyzeOptions wilcoxon;
    ReportFormat format = ReportFormat::markdown;
    ripper::RipperConfig ripper;
    std::string out_path;
};

struct ReportTable {
    StageFilter stage = StageFilter::all;
    std::vector<PiTestRow> rows; // sorted: descending r (2 d.p.), ascending p, name
};

// One row per indicator (dash rows for all-undefined indicators), sorted by
// descending effect size r at 2 d.p., ties by ascending p, then name.
ReportTable build_report_table(const PairedDataset& paired, const AnalyzeOptions& options);

std::string render_table(const ReportTable& table, ReportFormat format);

// Convert a long layout into the rule learner's representation (numeric
// attributes in schema order, class column last).
ripper::Dataset to_ripper_dataset(const LongDataset& longd);

// Parse, validate, derive, reshape and write the statistics table.
void run_analysis(const AnalysisConfig& config);

// Fit the rule learner on the stage's long dataset and write the rendered
// listing plus a provenance footer (seed, config, dataset hash).
void run_rules(const AnalysisConfig& config);

// FNV-1a over a canonical serialization of the long dataset.
uint64_t dataset_hash(const LongDataset& longd);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace rugbypi
