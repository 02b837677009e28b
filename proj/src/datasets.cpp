#include "rugbypi/datasets.hpp"

#include <map>

#include "rugbypi/error.hpp"
#include "rugbypi/schema.hpp"

namespace rugbypi {

const char* stage_filter_name(StageFilter f) {
    switch (f) {
    case StageFilter::group: return "group";
    case StageFilter::playoff: return "playoff";
    case StageFilter::all: return "all";
    }
    return "all";
}

bool stage_matches(Stage s, StageFilter f) {
    if (f == StageFilter::all) return true;
    return (f == StageFilter::group) == (s == Stage::group);
}

namespace {

std::vector<std::optional<double>> full_values(const AugmentedRecord& rec) {
    std::vector<std::optional<double>> vals;
    vals.reserve(all_names().size());
    for (const auto& v : rec.base.raw) vals.push_back(v);
    for (const auto& v : rec.derived) vals.push_back(v);
    return vals;
}

// (winner, loser) index pairs per match, in first-appearance order
std::vector<std::pair<size_t, size_t>> match_pairs(const std::vector<AugmentedRecord>& records,
                                                   StageFilter filter) {
    std::map<std::string, std::vector<size_t>> by_match;
    std::vector<std::string> order;
    for (size_t i = 0; i < records.size(); ++i) {
        if (!stage_matches(records[i].base.stage, filter)) continue;
        auto [it, inserted] = by_match.try_emplace(records[i].base.match_id);
        if (inserted) order.push_back(records[i].base.match_id);
        it->second.push_back(i);
    }
    std::vector<std::pair<size_t, size_t>> pairs;
    for (const auto& id : order) {
        const auto& idx = by_match[id];
        if (idx.size() != 2)
            throw Error(ErrorCode::PairingViolation,
                        "match " + id + " has " + std::to_string(idx.size()) + " rows, expected 2");
        const auto& a = records[idx[0]];
        const auto& b = records[idx[1]];
        if (a.base.result == b.base.result)
            throw Error(ErrorCode::PairingViolation,
                        "match " + id + ": both rows labelled " + result_name(a.base.result));
        if (a.base.result == MatchResult::won)
            pairs.emplace_back(idx[0], idx[1]);
        else
            pairs.emplace_back(idx[1], idx[0]);
    }
    return pairs;
}

} // namespace

PairedDataset build_paired(const std::vector<AugmentedRecord>& records, StageFilter filter) {
    PairedDataset out;
    out.stage_filter = filter;
    for (const auto& [wi, li] : match_pairs(records, filter)) {
        PairedRow row;
        row.match_id = records[wi].base.match_id;
        row.stage = records[wi].base.stage;
        row.winner_team = records[wi].base.team;
        row.loser_team = records[li].base.team;
        row.winner_values = full_values(records[wi]);
        row.loser_values = full_values(records[li]);
        out.rows.push_back(std::move(row));
    }
    return out;
}

LongDataset build_long(const std::vector<AugmentedRecord>& records, StageFilter filter) {
    LongDataset out;
    out.stage_filter = filter;
    for (const auto& [wi, li] : match_pairs(records, filter)) {
        for (size_t i : {wi, li}) { // winner first
            LongRow row;
            row.match_id = records[i].base.match_id;
            row.team = records[i].base.team;
            row.result = records[i].base.result;
            row.values = full_values(records[i]);
            out.rows.push_back(std::move(row));
        }
    }
    return out;
}

} // namespace rugbypi
