#include <cstdio>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "rugbypi/error.hpp"
#include "rugbypi/records.hpp"
#include "rugbypi/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

rugbypi::StageFilter parse_stage(const std::string& s) {
    if (s == "group") return rugbypi::StageFilter::group;
    if (s == "playoff") return rugbypi::StageFilter::playoff;
    return rugbypi::StageFilter::all;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rugby match performance-indicator toolkit: paired nonparametric "
                 "statistics and decision-rule induction over per-team match CSVs"};
    app.require_subcommand(1);

    const std::map<std::string, std::string> stage_values = {
        {"group", "group"}, {"playoff", "playoff"}, {"all", "all"}};

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Winner/loser statistics table");
    std::string an_input, an_stage, an_format, an_out, an_wilcoxon = "auto";
    bool an_no_continuity = false;
    analyze->add_option("--input", an_input, "input CSV path")->required();
    analyze->add_option("--stage", an_stage, "match stage")
        ->required()
        ->check(CLI::IsMember({"group", "playoff", "all"}));
    analyze->add_option("--format", an_format, "output format")
        ->required()
        ->check(CLI::IsMember({"md", "csv"}));
    analyze->add_option("--out", an_out, "output path")->required();
    analyze->add_option("--wilcoxon", an_wilcoxon, "p-value method")
        ->check(CLI::IsMember({"auto", "exact", "approx"}));
    analyze->add_flag("--no-continuity", an_no_continuity,
                      "disable the continuity correction in the normal approximation");

    // rules
    auto* rules = app.add_subcommand("rules", "Decision-rule induction listing");
    std::string ru_input, ru_stage, ru_out, ru_target = "auto";
    int ru_min_no = 0;
    bool ru_no_pruning = false;
    long long ru_seed = 1;
    rules->add_option("--input", ru_input, "input CSV path")->required();
    rules->add_option("--stage", ru_stage, "match stage")
        ->required()
        ->check(CLI::IsMember({"group", "playoff", "all"}));
    rules->add_option("--min-no", ru_min_no, "minimum rows a rule must cover")
        ->required()
        ->check(CLI::PositiveNumber);
    rules->add_flag("--no-pruning", ru_no_pruning, "disable reduced-error pruning");
    rules->add_option("--seed", ru_seed, "grow/prune split seed (default 1)");
    rules->add_option("--target-class", ru_target, "class the rules describe")
        ->check(CLI::IsMember({"won", "lost", "auto"}));
    rules->add_option("--out", ru_out, "output path")->required();

    // derive
    auto* derive = app.add_subcommand("derive", "Append the derived indicator columns");
    std::string de_input, de_out;
    derive->add_option("--input", de_input, "input CSV path")->required();
    derive->add_option("--out", de_out, "output CSV path")->required();

    // validate
    auto* validate = app.add_subcommand("validate", "Check the turnover consistency rule");
    std::string va_input;
    validate->add_option("--input", va_input, "input CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*analyze) {
            rugbypi::AnalysisConfig config;
            config.input_path = an_input;
            config.stage = parse_stage(an_stage);
            config.format = an_format == "csv" ? rugbypi::ReportFormat::csv
                                               : rugbypi::ReportFormat::markdown;
            config.out_path = an_out;
            config.wilcoxon.continuity = !an_no_continuity;
            config.wilcoxon.mode = an_wilcoxon == "exact"  ? rugbypi::WilcoxonMode::exact
                                   : an_wilcoxon == "approx" ? rugbypi::WilcoxonMode::normal_approx
                                                             : rugbypi::WilcoxonMode::auto_select;
            rugbypi::run_analysis(config);
        } else if (*rules) {
            rugbypi::AnalysisConfig config;
            config.input_path = ru_input;
            config.stage = parse_stage(ru_stage);
            config.out_path = ru_out;
            config.ripper.min_no = ru_min_no;
            config.ripper.use_pruning = !ru_no_pruning;
            config.ripper.seed = (uint64_t)ru_seed;
            if (ru_target == "won") config.ripper.target_class = 0;
            else if (ru_target == "lost") config.ripper.target_class = 1;
            rugbypi::run_rules(config);
        } else if (*derive) {
            const auto records = rugbypi::parse_records(rugbypi::read_text_file(de_input));
            const auto augmented = rugbypi::augment_records(records);
            rugbypi::write_text_file(de_out, rugbypi::write_augmented_csv(augmented));
        } else if (*validate) {
            const auto records = rugbypi::parse_records(rugbypi::read_text_file(va_input));
            const auto report = rugbypi::validate_turnover_consistency(records);
            if (!report.note.empty()) std::printf("note: %s\n", report.note.c_str());
            for (const auto& issue : report.issues)
                std::printf("issue: match %s team %s violates %s (%s)\n",
                            issue.match_id.c_str(), issue.team.c_str(), issue.rule.c_str(),
                            issue.observed.c_str());
            if (!report.passed) {
                std::fprintf(stderr, "validation failed: %zu issue(s)\n", report.issues.size());
                return kExitData;
            }
            std::printf("validation passed (%zu records)\n", records.size());
        }
    } catch (const rugbypi::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    }
    return kExitOk;
}
