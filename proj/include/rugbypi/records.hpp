#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rugbypi {

enum class Stage { group, playoff };
enum class MatchResult { won, lost };

const char* stage_name(Stage s);
const char* result_name(MatchResult r);

// One team's raw indicator values for one match. Values are stored in raw
// schema order; absent cells stay absent rather than defaulting to zero.
struct TeamMatchRecord {
    std::string match_id;
    Stage stage = Stage::group;
    std::string team;
    std::string opponent;
    MatchResult result = MatchResult::won;
    std::vector<std::optional<double>> raw; // aligned with raw_names()

    // optional extra columns, outside the indicator schema
    std::optional<double> turnovers_won;
    std::optional<double> turnovers_won_opp_half;
    std::optional<double> turnovers_won_own_half;
    bool has_turnover_columns = false;

    std::optional<double> raw_value(const std::string& name) const;
};

struct AugmentedRecord {
    TeamMatchRecord base;
    std::vector<std::optional<double>> derived; // aligned with derived_names()

    std::optional<double> value(const std::string& name) const;
    std::optional<double> value(size_t schema_index) const; // index into all_names()
};

struct ValidationIssue {
    std::string match_id;
    std::string team;
    std::string rule;
    std::string observed;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool passed = true;
    std::string note; // e.g. turnover columns absent
};

// Parse the CSV contract: header `match_id,stage,team,opponent,result` +
// 34 raw indicator names (+ optional turnover columns). Enforces pairing
// (two rows per match, one won / one lost, consistent stage, mirrored
// team/opponent, winner points strictly greater) and value ranges.
std::vector<TeamMatchRecord> parse_records(const std::string& csv_text);

// Diagnostic check that turnovers_won == opp_half + own_half on each row.
ValidationReport validate_turnover_consistency(const std::vector<TeamMatchRecord>& records);

// Compute the 14 derived indicators for one record; lineout_steal_pct joins
// against the opponent's lineouts. Zero denominator or absent input leaves
// the value undefined.
AugmentedRecord derive_indicators(const TeamMatchRecord& record,
                                  const TeamMatchRecord& opponent_record);

// derive_indicators over a parsed record list, pairing by match_id.
// Output preserves input row order.
std::vector<AugmentedRecord> augment_records(const std::vector<TeamMatchRecord>& records);

// CSV with the input layout plus the 14 derived columns appended; undefined
// derived values serialize as empty cells.
std::string write_augmented_csv(const std::vector<AugmentedRecord>& records);

} // namespace rugbypi
