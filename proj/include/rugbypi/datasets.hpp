#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rugbypi/records.hpp"

namespace rugbypi {

enum class StageFilter { group, playoff, all };

const char* stage_filter_name(StageFilter f);
bool stage_matches(Stage s, StageFilter f);

// One match: winner and loser indicator vectors side by side
// (2 x 48 indicator values per row).
struct PairedRow {
    std::string match_id;
    Stage stage = Stage::group;
    std::string winner_team;
    std::string loser_team;
    std::vector<std::optional<double>> winner_values; // aligned with all_names()
    std::vector<std::optional<double>> loser_values;
};

struct PairedDataset {
    StageFilter stage_filter = StageFilter::all;
    std::vector<PairedRow> rows;
};

// One team-match per row with a won/lost class label.
struct LongRow {
    std::string match_id;
    std::string team;
    MatchResult result = MatchResult::won;
    std::vector<std::optional<double>> values; // aligned with all_names()
};

struct LongDataset {
    StageFilter stage_filter = StageFilter::all;
    std::vector<LongRow> rows;
};

PairedDataset build_paired(const std::vector<AugmentedRecord>& records, StageFilter filter);

// Two rows per match, winner first; attribute order = schema order.
LongDataset build_long(const std::vector<AugmentedRecord>& records, StageFilter filter);

} // namespace rugbypi
