#pragma once

// Deterministic synthetic fixtures shared by the test binaries: a full
// 45-match tournament CSV and planted-concept datasets for the rule learner.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rugbypi/ripper.hpp"

namespace synth {

struct TournamentOptions {
    uint64_t seed = 20190920;
    bool turnover_columns = false;
    // plant turnovers_won != opp+own on every k-th team row (0 = consistent)
    int bad_turnover_every = 0;
};

// 37 group + 8 playoff matches, two rows per match, all contract rules
// satisfied: winner points strictly greater, integer counts, fractions in
// [0,1], mirrored team/opponent columns. The points column is fully
// determined by the result; every other indicator overlaps between winners
// and losers so that points dominates the effect-size ordering.
inline std::string tournament_csv(const TournamentOptions& opt = {}) {
    std::mt19937_64 rng(opt.seed);
    auto uni = [&](int lo, int hi) { return int(lo + rng() % uint64_t(hi - lo + 1)); };
    auto frac = [&](double lo, double hi) {
        double v = lo + (hi - lo) * (double(rng() % 1000003) / 1000002.0);
        return double(int(v * 1000 + 0.5)) / 1000.0; // 3 decimals, stays in [lo,hi]
    };

    std::string csv =
        "match_id,stage,team,opponent,result,points,territory_last_10_mins,territory,"
        "possession,possession_first_half,carry_metres,carries,carries_over_gainline,"
        "passes_made,defenders_beaten,clean_breaks,offloads,mauls_won,rucks_won,"
        "kicks_from_hand,kick_metres,kicks_regathered,kicks_to_touch,kicks_charged,kicks,"
        "set_pieces_won,scrums,scrums_won,scrum_success_pct,lineouts,lineouts_won,"
        "lineout_success_pct,lineout_steals,penalties_conceded,red_cards,yellow_cards,"
        "tackles_made,tackles_missed,tackle_success_pct";
    if (opt.turnover_columns)
        csv += ",turnovers_won,turnovers_won_opp_half,turnovers_won_own_half";
    csv += "\n";

    int row_counter = 0;
    for (int m = 1; m <= 45; ++m) {
        const bool playoff = m > 37;
        const int ta = uni(1, 10), tb_off = uni(1, 9);
        const int tb = (ta + tb_off - 1) % 10 + 11; // distinct team pools
        char ma[16], tna[8], tnb[8];
        std::snprintf(ma, sizeof(ma), "m%02d", m);
        std::snprintf(tna, sizeof(tna), "T%02d", ta);
        std::snprintf(tnb, sizeof(tnb), "T%02d", tb);

        const int loser_points = uni(0, 20);
        const int winner_points = loser_points + uni(1, 40);

        for (int side = 0; side < 2; ++side) {
            const bool is_winner = side == 0;
            ++row_counter;
            std::string line = std::string(ma) + "," + (playoff ? "playoff" : "group") + "," +
                               (is_winner ? tna : tnb) + "," + (is_winner ? tnb : tna) + "," +
                               (is_winner ? "won" : "lost");
            auto add_int = [&](int v) { line += "," + std::to_string(v); };
            auto add_frac = [&](double v) {
                char buf[16];
                std::snprintf(buf, sizeof(buf), "%.3f", v);
                line += std::string(",") + buf;
            };
            add_int(is_winner ? winner_points : loser_points);
            add_frac(frac(0.2, 0.8));  // territory_last_10_mins
            add_frac(frac(0.3, 0.7));  // territory
            add_frac(frac(0.3, 0.7));  // possession
            add_frac(frac(0.3, 0.7));  // possession_first_half
            add_int(uni(200, 650));    // carry_metres
            const int carries = uni(60, 150);
            add_int(carries);
            add_int(uni(10, carries)); // carries_over_gainline
            add_int(uni(60, 220));     // passes_made
            add_int(uni(5, 40));       // defenders_beaten
            add_int(uni(1, 16));       // clean_breaks
            add_int(uni(2, 18));       // offloads
            add_int(uni(0, 9));        // mauls_won
            add_int(uni(40, 140));     // rucks_won
            add_int(uni(8, 30));       // kicks_from_hand
            add_int(uni(300, 900));    // kick_metres
            add_int(uni(0, 18));       // kicks_regathered
            add_int(uni(2, 16));       // kicks_to_touch
            add_int(uni(0, 3));        // kicks_charged
            add_int(uni(10, 35));      // kicks
            add_int(uni(8, 25));       // set_pieces_won
            const int scrums = uni(3, 12);
            add_int(scrums);
            add_int(uni(2, scrums));   // scrums_won
            add_frac(frac(0.6, 1.0));  // scrum_success_pct
            const int lineouts = uni(5, 18);
            add_int(lineouts);
            add_int(uni(3, lineouts)); // lineouts_won
            add_frac(frac(0.6, 1.0));  // lineout_success_pct
            add_int(uni(0, 4));        // lineout_steals
            add_int(uni(5, 16));       // penalties_conceded
            add_int(uni(0, 1));        // red_cards
            add_int(uni(0, 3));        // yellow_cards
            add_int(uni(60, 220));     // tackles_made
            add_int(uni(5, 40));       // tackles_missed
            add_frac(frac(0.7, 0.98)); // tackle_success_pct
            if (opt.turnover_columns) {
                const int opp_half = uni(0, 8), own_half = uni(0, 8);
                int total = opp_half + own_half;
                if (opt.bad_turnover_every > 0 && row_counter % opt.bad_turnover_every == 0)
                    total += 1;
                add_int(total);
                add_int(opp_half);
                add_int(own_half);
            }
            csv += line + "\n";
        }
    }
    return csv;
}

// --- planted-concept datasets for the rule learner ---

inline rugbypi::ripper::Dataset make_numeric_dataset(
    const std::vector<std::string>& attr_names,
    const std::vector<std::pair<std::vector<double>, int>>& rows,
    std::vector<std::string> class_names = {"won", "lost"}) {
    rugbypi::ripper::Dataset data;
    for (const auto& n : attr_names) data.attributes.push_back({n, false, {}});
    data.class_names = std::move(class_names);
    for (const auto& [x, y] : rows) {
        rugbypi::ripper::Instance inst;
        for (double v : x) inst.x.emplace_back(v);
        inst.y = y;
        data.rows.push_back(std::move(inst));
    }
    return data;
}

// class lost (1) <=> a <= 5; 20 rows per class, thresholds 5 and 6 present.
// Rows come won-then-lost so the balanced tie resolves to the lost class,
// mirroring the winner-first layout of the long match dataset.
inline rugbypi::ripper::Dataset planted_one_condition() {
    std::vector<std::pair<std::vector<double>, int>> rows;
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        double a2 = i == 0 ? 6.0 : 6.0 + double(rng() % 5);    // won side, min 6
        double b2 = double(rng() % 100);
        rows.push_back({{a2, b2}, 0});
        double a = i == 0 ? 5.0 : double(rng() % 6);           // lost side, max 5
        double b = double(rng() % 100);
        rows.push_back({{a, b}, 1});
    }
    return make_numeric_dataset({"a", "b"}, rows);
}

// class lost (1) <=> (a <= 5) and (b >= 7); 90 rows with both boundary
// values observed on each side of each threshold
inline rugbypi::ripper::Dataset planted_two_condition() {
    std::vector<std::pair<std::vector<double>, int>> rows;
    std::mt19937_64 rng(11);
    for (int i = 0; i < 90; ++i) {
        double a = double(rng() % 11);
        double b = double(rng() % 11);
        if (i == 0) { a = 5; b = 7; }  // inside both boundaries
        if (i == 1) { a = 6; b = 7; }  // just outside on a
        if (i == 2) { a = 5; b = 6; }  // just outside on b
        const int y = (a <= 5 && b >= 7) ? 1 : 0;
        rows.push_back({{a, b, double(rng() % 50)}, y});
    }
    return make_numeric_dataset({"a", "b", "c"}, rows);
}

} // namespace synth
