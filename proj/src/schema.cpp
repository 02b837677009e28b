#include "rugbypi/schema.hpp"

#include <unordered_map>

namespace rugbypi {

namespace {

std::vector<IndicatorDef> make_schema() {
    using GA = GameArea;
    using K = IndicatorKind;
    using U = Units;
    std::vector<IndicatorDef> defs = {
        // raw, in CSV column order
        {"points", GA::attack, K::raw, U::count},
        {"territory_last_10_mins", GA::attack, K::raw, U::fraction},
        {"territory", GA::attack, K::raw, U::fraction},
        {"possession", GA::attack, K::raw, U::fraction},
        {"possession_first_half", GA::attack, K::raw, U::fraction},
        {"carry_metres", GA::attack, K::raw, U::metres},
        {"carries", GA::attack, K::raw, U::count},
        {"carries_over_gainline", GA::attack, K::raw, U::count},
        {"passes_made", GA::attack, K::raw, U::count},
        {"defenders_beaten", GA::attack, K::raw, U::count},
        {"clean_breaks", GA::attack, K::raw, U::count},
        {"offloads", GA::attack, K::raw, U::count},
        {"mauls_won", GA::breakdown, K::raw, U::count},
        {"rucks_won", GA::breakdown, K::raw, U::count},
        {"kicks_from_hand", GA::kicking, K::raw, U::count},
        {"kick_metres", GA::kicking, K::raw, U::metres},
        {"kicks_regathered", GA::kicking, K::raw, U::count},
        {"kicks_to_touch", GA::kicking, K::raw, U::count},
        {"kicks_charged", GA::kicking, K::raw, U::count},
        {"kicks", GA::kicking, K::raw, U::count},
        {"set_pieces_won", GA::set_piece, K::raw, U::count},
        {"scrums", GA::set_piece, K::raw, U::count},
        {"scrums_won", GA::set_piece, K::raw, U::count},
        {"scrum_success_pct", GA::set_piece, K::raw, U::fraction},
        {"lineouts", GA::set_piece, K::raw, U::count},
        {"lineouts_won", GA::set_piece, K::raw, U::count},
        {"lineout_success_pct", GA::set_piece, K::raw, U::fraction},
        {"lineout_steals", GA::set_piece, K::raw, U::count},
        {"penalties_conceded", GA::discipline, K::raw, U::count},
        {"red_cards", GA::discipline, K::raw, U::count},
        {"yellow_cards", GA::discipline, K::raw, U::count},
        {"tackles_made", GA::defence, K::raw, U::count},
        {"tackles_missed", GA::defence, K::raw, U::count},
        {"tackle_success_pct", GA::defence, K::raw, U::fraction},
        // derived
        {"carry_metres_per_carry", GA::attack, K::derived, U::metres},
        {"pct_carries_over_gainline", GA::attack, K::derived, U::fraction},
        {"defenders_beaten_per_carry", GA::attack, K::derived, U::count},
        {"clean_breaks_per_carry", GA::attack, K::derived, U::count},
        {"offloads_per_carry", GA::attack, K::derived, U::count},
        {"kick_metres_per_kick", GA::kicking, K::derived, U::metres},
        {"kicks_regathered_per_kick", GA::kicking, K::derived, U::count},
        {"kicks_to_touch_per_kick", GA::kicking, K::derived, U::count},
        {"kicks_charged_per_kick", GA::kicking, K::derived, U::count},
        {"lineout_steal_pct", GA::set_piece, K::derived, U::fraction},
        {"passes_per_carry", GA::attack, K::derived, U::count},
        {"kick_metres_plus_carry_metres", GA::attack_kicking, K::derived, U::metres},
        {"pct_metres_from_carries", GA::attack_kicking, K::derived, U::fraction},
        {"pct_metres_from_kicks", GA::attack_kicking, K::derived, U::fraction},
    };
    return defs;
}

std::vector<std::string> names_of_kind(IndicatorKind kind) {
    std::vector<std::string> out;
    for (const auto& def : schema())
        if (def.kind == kind) out.push_back(def.name);
    return out;
}

} // namespace

const std::vector<IndicatorDef>& schema() {
    static const std::vector<IndicatorDef> defs = make_schema();
    return defs;
}

const std::vector<std::string>& raw_names() {
    static const std::vector<std::string> names = names_of_kind(IndicatorKind::raw);
    return names;
}

const std::vector<std::string>& derived_names() {
    static const std::vector<std::string> names = names_of_kind(IndicatorKind::derived);
    return names;
}

const std::vector<std::string>& all_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& def : schema()) out.push_back(def.name);
        return out;
    }();
    return names;
}

const IndicatorDef* find_indicator(const std::string& name) {
    static const std::unordered_map<std::string, const IndicatorDef*> index = [] {
        std::unordered_map<std::string, const IndicatorDef*> m;
        for (const auto& def : schema()) m.emplace(def.name, &def);
        return m;
    }();
    auto it = index.find(name);
    return it == index.end() ? nullptr : it->second;
}

bool is_raw_indicator(const std::string& name) {
    const auto* def = find_indicator(name);
    return def && def->kind == IndicatorKind::raw;
}

bool is_derived_indicator(const std::string& name) {
    const auto* def = find_indicator(name);
    return def && def->kind == IndicatorKind::derived;
}

std::string display_name(const std::string& schema_name) {
    static const std::unordered_map<std::string, std::string> table = {
        {"scrum_success_pct", "scrum_success_%"},
        {"lineout_success_pct", "lineout_success_%"},
        {"tackle_success_pct", "tackle_success_%"},
        {"lineout_steal_pct", "lineout_steal_%"},
    };
    auto it = table.find(schema_name);
    return it == table.end() ? schema_name : it->second;
}

} // namespace rugbypi
