#pragma once

#include <string>
#include <vector>

namespace rugbypi {

enum class GameArea { attack, breakdown, kicking, set_piece, discipline, defence, attack_kicking };
enum class IndicatorKind { raw, derived };
enum class Units { count, metres, fraction };

struct IndicatorDef {
    std::string name;
    GameArea area;
    IndicatorKind kind;
    Units units;
};

// The full indicator schema: 34 raw entries in CSV column order followed by
// 14 derived entries. Schema order is also the attribute tie-break order for
// rule growth, so it is fixed.
const std::vector<IndicatorDef>& schema();

const std::vector<std::string>& raw_names();
const std::vector<std::string>& derived_names();
const std::vector<std::string>& all_names();

bool is_raw_indicator(const std::string& name);
bool is_derived_indicator(const std::string& name);
const IndicatorDef* find_indicator(const std::string& name);

// Display name used in rendered rule text; maps the four *_pct schema names
// to their *_% spellings, every other name is returned unchanged.
std::string display_name(const std::string& schema_name);

} // namespace rugbypi
