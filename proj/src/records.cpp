#include "rugbypi/records.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

#include "rugbypi/error.hpp"
#include "rugbypi/numeric.hpp"
#include "rugbypi/schema.hpp"

namespace rugbypi {

namespace {

const std::vector<std::string> kMetaColumns = {"match_id", "stage", "team", "opponent", "result"};
const std::vector<std::string> kTurnoverColumns = {"turnovers_won", "turnovers_won_opp_half",
                                                   "turnovers_won_own_half"};

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_number(const std::string& text, const std::string& where) {
    const char* begin = text.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || !std::isfinite(v))
        throw Error(ErrorCode::RangeViolation, "not a number in " + where + ": '" + text + "'");
    return v;
}

void check_range(double v, Units units, const std::string& where) {
    switch (units) {
    case Units::fraction:
        if (v < 0.0 || v > 1.0)
            throw Error(ErrorCode::RangeViolation,
                        where + " must lie in [0,1], got " + format_trimmed(v));
        break;
    case Units::count:
        if (v < 0.0)
            throw Error(ErrorCode::RangeViolation, where + " must be non-negative");
        if (std::fabs(v - std::round(v)) > 1e-9)
            throw Error(ErrorCode::RangeViolation, where + " must be an integer count");
        break;
    case Units::metres:
        if (v < 0.0)
            throw Error(ErrorCode::RangeViolation, where + " must be non-negative");
        break;
    }
}

} // namespace

const char* stage_name(Stage s) { return s == Stage::group ? "group" : "playoff"; }
const char* result_name(MatchResult r) { return r == MatchResult::won ? "won" : "lost"; }

std::optional<double> TeamMatchRecord::raw_value(const std::string& name) const {
    const auto& names = raw_names();
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return raw[i];
    return std::nullopt;
}

std::optional<double> AugmentedRecord::value(const std::string& name) const {
    const auto& rn = raw_names();
    for (size_t i = 0; i < rn.size(); ++i)
        if (rn[i] == name) return base.raw[i];
    const auto& dn = derived_names();
    for (size_t i = 0; i < dn.size(); ++i)
        if (dn[i] == name) return derived[i];
    return std::nullopt;
}

std::optional<double> AugmentedRecord::value(size_t schema_index) const {
    const size_t raw_count = raw_names().size();
    if (schema_index < raw_count) return base.raw[schema_index];
    return derived[schema_index - raw_count];
}

std::vector<TeamMatchRecord> parse_records(const std::string& csv_text) {
    std::istringstream in(csv_text);
    std::string line;

    // header
    if (!std::getline(in, line) || split_line(line).size() < 2)
        throw Error(ErrorCode::MissingHeader, "input has no header row");
    const auto header = split_line(line);

    std::vector<std::string> expected = kMetaColumns;
    for (const auto& n : raw_names()) expected.push_back(n);

    if (header.size() < expected.size()) {
        throw Error(ErrorCode::MissingHeader,
                    "header has " + std::to_string(header.size()) + " columns, expected at least " +
                        std::to_string(expected.size()) + " (first missing: " +
                        expected[header.size()] + ")");
    }
    for (size_t i = 0; i < expected.size(); ++i) {
        if (header[i] == expected[i]) continue;
        bool known = false;
        for (const auto& e : expected)
            if (e == header[i]) known = true;
        if (known)
            throw Error(ErrorCode::MissingHeader, "expected column '" + expected[i] +
                                                      "' at position " + std::to_string(i + 1) +
                                                      ", found '" + header[i] + "'");
        throw Error(ErrorCode::UnknownColumn, "'" + header[i] + "'");
    }
    bool has_turnovers = false;
    if (header.size() > expected.size()) {
        // the optional turnover block is all-or-none, in fixed order
        if (header.size() != expected.size() + kTurnoverColumns.size())
            throw Error(ErrorCode::UnknownColumn,
                        "'" + header[expected.size()] +
                            "' (turnover columns must be all three, in order)");
        for (size_t i = 0; i < kTurnoverColumns.size(); ++i)
            if (header[expected.size() + i] != kTurnoverColumns[i])
                throw Error(ErrorCode::UnknownColumn, "'" + header[expected.size() + i] + "'");
        has_turnovers = true;
    }

    const auto& defs = schema();
    std::vector<TeamMatchRecord> records;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_line(line);
        if (fields.size() != header.size())
            throw Error(ErrorCode::RangeViolation,
                        "line " + std::to_string(line_no) + " has " +
                            std::to_string(fields.size()) + " fields, header has " +
                            std::to_string(header.size()));

        TeamMatchRecord rec;
        rec.match_id = fields[0];
        rec.team = fields[2];
        rec.opponent = fields[3];
        const std::string where_base = "match " + rec.match_id + " team " + rec.team;

        if (fields[1] == "group") rec.stage = Stage::group;
        else if (fields[1] == "playoff") rec.stage = Stage::playoff;
        else throw Error(ErrorCode::RangeViolation,
                         where_base + ": stage must be group|playoff, got '" + fields[1] + "'");

        if (fields[4] == "won") rec.result = MatchResult::won;
        else if (fields[4] == "lost") rec.result = MatchResult::lost;
        else throw Error(ErrorCode::RangeViolation,
                         where_base + ": result must be won|lost, got '" + fields[4] + "'");

        rec.raw.resize(raw_names().size());
        for (size_t i = 0; i < raw_names().size(); ++i) {
            const std::string& cell = fields[kMetaColumns.size() + i];
            if (cell.empty()) continue; // explicitly absent
            const std::string where = where_base + ", column " + raw_names()[i];
            double v = parse_number(cell, where);
            check_range(v, defs[i].units, where);
            rec.raw[i] = v;
        }
        rec.has_turnover_columns = has_turnovers;
        if (has_turnovers) {
            std::optional<double>* slots[3] = {&rec.turnovers_won, &rec.turnovers_won_opp_half,
                                               &rec.turnovers_won_own_half};
            for (size_t i = 0; i < 3; ++i) {
                const std::string& cell = fields[expected.size() + i];
                if (cell.empty()) continue;
                const std::string where = where_base + ", column " + kTurnoverColumns[i];
                double v = parse_number(cell, where);
                check_range(v, Units::count, where);
                *slots[i] = v;
            }
        }
        records.push_back(std::move(rec));
    }

    // pairing checks, matches in first-appearance order
    std::map<std::string, std::vector<size_t>> by_match;
    std::vector<std::string> match_order;
    for (size_t i = 0; i < records.size(); ++i) {
        auto [it, inserted] = by_match.try_emplace(records[i].match_id);
        if (inserted) match_order.push_back(records[i].match_id);
        it->second.push_back(i);
    }
    const size_t points_idx = 0; // first raw column
    for (const auto& id : match_order) {
        const auto& idx = by_match[id];
        if (idx.size() != 2)
            throw Error(ErrorCode::PairingViolation,
                        "match " + id + " has " + std::to_string(idx.size()) + " rows, expected 2");
        const auto& a = records[idx[0]];
        const auto& b = records[idx[1]];
        if (a.result == b.result)
            throw Error(ErrorCode::PairingViolation,
                        "match " + id + ": both rows labelled " + result_name(a.result));
        if (a.stage != b.stage)
            throw Error(ErrorCode::PairingViolation, "match " + id + ": inconsistent stage");
        if (a.opponent != b.team || b.opponent != a.team)
            throw Error(ErrorCode::PairingViolation,
                        "match " + id + ": team/opponent columns do not mirror");
        const auto& winner = a.result == MatchResult::won ? a : b;
        const auto& loser = a.result == MatchResult::won ? b : a;
        if (winner.raw[points_idx] && loser.raw[points_idx]) {
            if (*winner.raw[points_idx] == *loser.raw[points_idx])
                throw Error(ErrorCode::PairingViolation,
                            "match " + id + " is drawn (equal points); draws are unsupported");
            if (*winner.raw[points_idx] < *loser.raw[points_idx])
                throw Error(ErrorCode::PairingViolation,
                            "match " + id + ": winner has fewer points than loser");
        }
    }
    return records;
}

ValidationReport validate_turnover_consistency(const std::vector<TeamMatchRecord>& records) {
    ValidationReport report;
    bool any_columns = false;
    for (const auto& rec : records)
        if (rec.has_turnover_columns) any_columns = true;
    if (!any_columns) {
        report.note = "turnover columns absent; nothing to check";
        return report;
    }
    for (const auto& rec : records) {
        if (!rec.turnovers_won || !rec.turnovers_won_opp_half || !rec.turnovers_won_own_half)
            continue;
        double total = *rec.turnovers_won;
        double parts = *rec.turnovers_won_opp_half + *rec.turnovers_won_own_half;
        if (total != parts) {
            report.issues.push_back(
                {rec.match_id, rec.team, "turnovers_won == opp_half + own_half",
                 format_trimmed(total) + " vs " + format_trimmed(*rec.turnovers_won_opp_half) +
                     " + " + format_trimmed(*rec.turnovers_won_own_half)});
        }
    }
    report.passed = report.issues.empty();
    return report;
}

AugmentedRecord derive_indicators(const TeamMatchRecord& record,
                                  const TeamMatchRecord& opponent_record) {
    if (record.match_id != opponent_record.match_id)
        throw Error(ErrorCode::OpponentMismatch,
                    "records belong to different matches: " + record.match_id + " vs " +
                        opponent_record.match_id);
    if (record.opponent != opponent_record.team || opponent_record.opponent != record.team)
        throw Error(ErrorCode::OpponentMismatch,
                    "match " + record.match_id + ": teams are not opponents");

    auto get = [](const TeamMatchRecord& r, const char* name) {
        return r.raw_value(name);
    };
    auto ratio = [](std::optional<double> num, std::optional<double> den) -> std::optional<double> {
        if (!num || !den || *den == 0.0) return std::nullopt;
        return *num / *den;
    };

    const auto carries = get(record, "carries");
    const auto kicks = get(record, "kicks");
    const auto carry_metres = get(record, "carry_metres");
    const auto kick_metres = get(record, "kick_metres");

    std::optional<double> total_metres;
    if (carry_metres && kick_metres) total_metres = *kick_metres + *carry_metres;

    AugmentedRecord out;
    out.base = record;
    out.derived = {
        ratio(carry_metres, carries),
        ratio(get(record, "carries_over_gainline"), carries),
        ratio(get(record, "defenders_beaten"), carries),
        ratio(get(record, "clean_breaks"), carries),
        ratio(get(record, "offloads"), carries),
        ratio(kick_metres, kicks),
        ratio(get(record, "kicks_regathered"), kicks),
        ratio(get(record, "kicks_to_touch"), kicks),
        ratio(get(record, "kicks_charged"), kicks),
        ratio(get(record, "lineout_steals"), get(opponent_record, "lineouts")),
        ratio(get(record, "passes_made"), carries),
        total_metres,
        ratio(carry_metres, total_metres),
        ratio(kick_metres, total_metres),
    };
    return out;
}

std::vector<AugmentedRecord> augment_records(const std::vector<TeamMatchRecord>& records) {
    std::map<std::string, std::vector<size_t>> by_match;
    for (size_t i = 0; i < records.size(); ++i) by_match[records[i].match_id].push_back(i);

    std::vector<AugmentedRecord> out;
    out.reserve(records.size());
    for (size_t i = 0; i < records.size(); ++i) {
        const auto& idx = by_match[records[i].match_id];
        if (idx.size() != 2)
            throw Error(ErrorCode::PairingViolation,
                        "match " + records[i].match_id + " has " + std::to_string(idx.size()) +
                            " rows, expected 2");
        const auto& opp = records[idx[0] == i ? idx[1] : idx[0]];
        out.push_back(derive_indicators(records[i], opp));
    }
    return out;
}

std::string write_augmented_csv(const std::vector<AugmentedRecord>& records) {
    bool has_turnovers = false;
    for (const auto& rec : records)
        if (rec.base.has_turnover_columns) has_turnovers = true;

    std::string out;
    for (const auto& m : kMetaColumns) {
        out += m;
        out += ',';
    }
    auto cell = [](const std::optional<double>& v) {
        return v ? format_trimmed(*v) : std::string();
    };
    {
        std::string sep;
        for (const auto& n : raw_names()) {
            out += sep + n;
            sep = ",";
        }
        if (has_turnovers)
            for (const auto& n : kTurnoverColumns) out += "," + n;
        for (const auto& n : derived_names()) out += "," + n;
        out += '\n';
    }
    for (const auto& rec : records) {
        out += rec.base.match_id;
        out += ',';
        out += stage_name(rec.base.stage);
        out += ',';
        out += rec.base.team;
        out += ',';
        out += rec.base.opponent;
        out += ',';
        out += result_name(rec.base.result);
        for (const auto& v : rec.base.raw) out += "," + cell(v);
        if (has_turnovers) {
            out += "," + cell(rec.base.turnovers_won);
            out += "," + cell(rec.base.turnovers_won_opp_half);
            out += "," + cell(rec.base.turnovers_won_own_half);
        }
        for (const auto& v : rec.derived) out += "," + cell(v);
        out += '\n';
    }
    return out;
}

} // namespace rugbypi
