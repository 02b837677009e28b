#include "rugbypi/ripper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "rugbypi/error.hpp"
#include "rugbypi/numeric.hpp"
#include "rugbypi/schema.hpp"

namespace rugbypi::ripper {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct ClassCounts {
    double pos = 0;
    double neg = 0;
};

ClassCounts count_classes(const Dataset& data, const std::vector<int>& rows, int positive_class) {
    ClassCounts c;
    for (int r : rows) {
        if (data.rows[r].y == positive_class)
            c.pos += 1;
        else
            c.neg += 1;
    }
    return c;
}

std::vector<int> covered_rows(const Dataset& data, const std::vector<int>& rows,
                              const Condition& cond) {
    std::vector<int> out;
    for (int r : rows)
        if (cond.matches(data.rows[r])) out.push_back(r);
    return out;
}

std::vector<int> rule_covered(const Dataset& data, const std::vector<int>& rows,
                              const Rule& rule) {
    std::vector<int> out;
    for (int r : rows)
        if (rule.matches(data.rows[r])) out.push_back(r);
    return out;
}

std::vector<int> subtract_rows(const std::vector<int>& rows, const std::vector<int>& remove) {
    std::set<int> gone(remove.begin(), remove.end());
    std::vector<int> out;
    for (int r : rows)
        if (!gone.count(r)) out.push_back(r);
    return out;
}

} // namespace

bool Condition::matches(const Instance& inst) const {
    const auto& v = inst.x[attr];
    if (!v) return false; // a missing value fails any condition
    switch (op) {
    case ConditionOp::Le: return *v <= value;
    case ConditionOp::Ge: return *v >= value;
    case ConditionOp::Eq: return *v == value;
    }
    return false;
}

bool Rule::matches(const Instance& inst) const {
    for (const auto& c : conditions)
        if (!c.matches(inst)) return false;
    return true;
}

std::vector<int> all_rows(const Dataset& data) {
    std::vector<int> rows(data.rows.size());
    for (size_t i = 0; i < rows.size(); ++i) rows[i] = int(i);
    return rows;
}

std::vector<Condition> candidate_conditions(const Dataset& data,
                                            const std::vector<int>& rows,
                                            int attr) {
    std::vector<double> observed;
    for (int r : rows) {
        const auto& v = data.rows[r].x[attr];
        if (v) observed.push_back(*v);
    }
    std::sort(observed.begin(), observed.end());
    observed.erase(std::unique(observed.begin(), observed.end()), observed.end());

    std::vector<Condition> out;
    if (observed.empty()) return out;

    if (data.attributes[attr].nominal) {
        for (double v : observed) out.push_back({attr, ConditionOp::Eq, v});
        return out;
    }

    auto covers_all = [&](const Condition& c) {
        for (int r : rows)
            if (!c.matches(data.rows[r])) return false;
        return true;
    };
    // all <= thresholds first, then all >=, each by ascending value: this is
    // exactly the growth tie-break order (op before threshold)
    for (double v : observed) {
        Condition c{attr, ConditionOp::Le, v};
        if (!covers_all(c)) out.push_back(c);
    }
    for (double v : observed) {
        Condition c{attr, ConditionOp::Ge, v};
        if (!covers_all(c)) out.push_back(c);
    }
    return out;
}

double foil_gain(double p0, double n0, double p1, double n1) {
    if (p1 <= 0.0) return kNegInf;
    return p1 * (std::log2(p1 / (p1 + n1)) - std::log2(p0 / (p0 + n0)));
}

std::optional<Rule> grow_rule(const Dataset& data,
                              const std::vector<int>& rows,
                              int positive_class,
                              int min_no) {
    Rule rule;
    rule.predicted_class = positive_class;
    std::vector<int> covered = rows;

    for (;;) {
        const auto counts = count_classes(data, covered, positive_class);
        if (counts.pos <= 0.0) return std::nullopt;
        if (counts.neg == 0.0) break; // pure

        double best_gain = 0.0;
        std::optional<Condition> best;
        for (int attr = 0; attr < int(data.attributes.size()); ++attr) {
            for (const auto& cond : candidate_conditions(data, covered, attr)) {
                double p1 = 0, n1 = 0;
                for (int r : covered) {
                    if (!cond.matches(data.rows[r])) continue;
                    if (data.rows[r].y == positive_class)
                        p1 += 1;
                    else
                        n1 += 1;
                }
                if (p1 < double(min_no)) continue; // would starve the rule
                const double gain = foil_gain(counts.pos, counts.neg, p1, n1);
                if (std::isfinite(gain) && gain > best_gain) {
                    best_gain = gain;
                    best = cond;
                }
            }
        }
        if (!best) {
            if (rule.conditions.empty()) return std::nullopt;
            break; // impure but unimprovable
        }
        rule.conditions.push_back(*best);
        covered = covered_rows(data, covered, *best);
    }
    return rule;
}

Rule prune_rule(const Dataset& data,
                const std::vector<int>& prune_rows,
                const Rule& rule,
                int positive_class) {
    if (prune_rows.empty()) return rule;

    // metric (p-n)/(p+n) for each prefix length; zero coverage is worst
    auto worth = [&](size_t k) {
        Rule prefix;
        prefix.predicted_class = rule.predicted_class;
        prefix.conditions.assign(rule.conditions.begin(), rule.conditions.begin() + k);
        double p = 0, n = 0;
        for (int r : prune_rows) {
            if (!prefix.matches(data.rows[r])) continue;
            if (data.rows[r].y == positive_class)
                p += 1;
            else
                n += 1;
        }
        if (p + n == 0.0) return -2.0;
        return (p - n) / (p + n);
    };

    size_t best_k = 0;
    double best = worth(0);
    for (size_t k = 1; k <= rule.conditions.size(); ++k) {
        const double m = worth(k);
        if (m > best) { // ties keep the shorter prefix
            best = m;
            best_k = k;
        }
    }
    Rule out = rule;
    out.conditions.resize(best_k);
    return out;
}

double ruleset_description_length(const std::vector<Rule>& rules,
                                  const Dataset& data,
                                  const std::vector<int>& rows,
                                  int positive_class,
                                  double theory_cost_factor) {
    double total_conditions = 0;
    for (int attr = 0; attr < int(data.attributes.size()); ++attr)
        total_conditions += double(candidate_conditions(data, rows, attr).size());
    const double log2_t = total_conditions > 0 ? std::log2(total_conditions) : 0.0;

    double theory_bits = 0;
    for (const auto& rule : rules) {
        const double k = double(rule.conditions.size());
        if (k > 0) theory_bits += theory_cost_factor * (std::log2(k) + k * log2_t);
    }

    // sequential exceptions: false positives among covered rows, false
    // negatives among the rest
    std::vector<int> remaining = rows;
    long long covered_total = 0, fp = 0;
    for (const auto& rule : rules) {
        const auto cov = rule_covered(data, remaining, rule);
        covered_total += (long long)cov.size();
        for (int r : cov)
            if (data.rows[r].y != rule.predicted_class) ++fp;
        remaining = subtract_rows(remaining, cov);
    }
    long long fn = 0;
    for (int r : remaining)
        if (data.rows[r].y == positive_class) ++fn;

    const double exception_bits = log2_binomial(covered_total, fp) +
                                  log2_binomial((long long)remaining.size(), fn);
    return theory_bits + exception_bits;
}

namespace {

struct GrowPruneSplit {
    std::vector<int> grow;
    std::vector<int> prune;
};

// stratified split: shuffle each class, hold out the last 1/folds for pruning
GrowPruneSplit split_rows(const Dataset& data, const std::vector<int>& rows, int folds,
                          std::mt19937_64& rng) {
    GrowPruneSplit out;
    std::vector<std::vector<int>> by_class(2);
    for (int r : rows) by_class[data.rows[r].y].push_back(r);
    for (auto& cls : by_class) {
        std::shuffle(cls.begin(), cls.end(), rng);
        const size_t hold = cls.size() / size_t(folds);
        const size_t keep = cls.size() - hold;
        for (size_t i = 0; i < keep; ++i) out.grow.push_back(cls[i]);
        for (size_t i = keep; i < cls.size(); ++i) out.prune.push_back(cls[i]);
    }
    return out;
}

double rule_error(const Dataset& data, const std::vector<int>& rows, const Rule& rule) {
    double covered = 0, wrong = 0;
    for (int r : rows) {
        if (!rule.matches(data.rows[r])) continue;
        covered += 1;
        if (data.rows[r].y != rule.predicted_class) wrong += 1;
    }
    if (covered == 0.0) return 1.0;
    return wrong / covered;
}

bool has_min_positives(const Dataset& data, const std::vector<int>& rows, int positive_class,
                       int min_no) {
    int count = 0;
    for (int r : rows)
        if (data.rows[r].y == positive_class && ++count >= min_no) return true;
    return false;
}

} // namespace

RuleSet fit(const Dataset& data, const RipperConfig& config) {
    if (data.rows.empty()) throw Error(ErrorCode::EmptyDataset, "no rows");
    if (data.attributes.empty()) throw Error(ErrorCode::EmptyDataset, "no attributes");
    if (data.class_names.size() != 2)
        throw Error(ErrorCode::NotBinary, "need exactly two classes, got " +
                                              std::to_string(data.class_names.size()));
    for (const auto& row : data.rows)
        if (row.y != 0 && row.y != 1)
            throw Error(ErrorCode::NotBinary, "class index out of range");
    if (config.min_no < 1) throw Error(ErrorCode::OutOfRange, "min_no must be >= 1");
    if (config.use_pruning && config.folds < 2)
        throw Error(ErrorCode::OutOfRange, "folds must be >= 2 with pruning enabled");

    // target: explicit, else minority, ties to the class appearing later
    int target;
    if (config.target_class) {
        if (*config.target_class != 0 && *config.target_class != 1)
            throw Error(ErrorCode::OutOfRange, "target_class index out of range");
        target = *config.target_class;
    } else {
        long long counts[2] = {0, 0};
        long long first_row[2] = {-1, -1};
        for (size_t i = 0; i < data.rows.size(); ++i) {
            const int y = data.rows[i].y;
            ++counts[y];
            if (first_row[y] < 0) first_row[y] = (long long)i;
        }
        if (counts[0] != counts[1])
            target = counts[0] < counts[1] ? 0 : 1;
        else
            target = first_row[0] > first_row[1] ? 0 : 1;
    }

    std::mt19937_64 rng(config.seed);
    const std::vector<int> full = all_rows(data);
    std::vector<Rule> learned;
    std::vector<int> residual = full;

    auto dl_of = [&](const std::vector<Rule>& rules) {
        return ruleset_description_length(rules, data, full, target, config.theory_cost_factor);
    };

    if (!config.use_pruning) {
        while (has_min_positives(data, residual, target, config.min_no)) {
            auto rule = grow_rule(data, residual, target, config.min_no);
            if (!rule) break;
            const auto cov = rule_covered(data, residual, *rule);
            learned.push_back(std::move(*rule));
            residual = subtract_rows(residual, cov);
        }
    } else {
        double best_dl = dl_of(learned);
        auto covering_loop = [&]() {
            while (has_min_positives(data, residual, target, config.min_no)) {
                const auto split = split_rows(data, residual, config.folds, rng);
                auto rule = grow_rule(data, split.grow, target, config.min_no);
                if (!rule) break;
                *rule = prune_rule(data, split.prune, *rule, target);

                if (rule_error(data, residual, *rule) >= 0.5) break;
                std::vector<Rule> candidate = learned;
                candidate.push_back(*rule);
                const double dl = dl_of(candidate);
                if (dl > best_dl + config.dl_slack_bits) break;

                best_dl = std::min(best_dl, dl);
                const auto cov = rule_covered(data, residual, *rule);
                learned.push_back(std::move(*rule));
                residual = subtract_rows(residual, cov);
            }
        };
        covering_loop();

        for (int pass = 0; pass < config.optimization_runs; ++pass) {
            for (size_t i = 0; i < learned.size(); ++i) {
                // rows that actually reach rule i under first-match evaluation
                std::vector<int> reach = full;
                for (size_t j = 0; j < i; ++j)
                    reach = subtract_rows(reach, rule_covered(data, reach, learned[j]));
                if (!has_min_positives(data, reach, target, config.min_no)) continue;

                const auto split = split_rows(data, reach, config.folds, rng);

                std::optional<Rule> replacement = grow_rule(data, split.grow, target,
                                                            config.min_no);
                if (replacement)
                    *replacement = prune_rule(data, split.prune, *replacement, target);

                // revision: keep the conditions, try to extend on the grow set
                std::optional<Rule> revision;
                {
                    const auto base_cov = rule_covered(data, split.grow, learned[i]);
                    Rule extended = learned[i];
                    if (auto grown = grow_rule(data, base_cov, target, config.min_no)) {
                        for (const auto& c : grown->conditions)
                            extended.conditions.push_back(c);
                    }
                    revision = prune_rule(data, split.prune, extended, target);
                }

                const double dl_original = dl_of(learned);
                auto with_variant = [&](const Rule& v) {
                    std::vector<Rule> rules = learned;
                    rules[i] = v;
                    return rules;
                };
                double best_variant_dl = dl_original;
                int choice = 0; // ties prefer original, then replacement
                if (replacement) {
                    const double dl = dl_of(with_variant(*replacement));
                    if (dl < best_variant_dl) {
                        best_variant_dl = dl;
                        choice = 1;
                    }
                }
                if (revision) {
                    const double dl = dl_of(with_variant(*revision));
                    if (dl < best_variant_dl) {
                        best_variant_dl = dl;
                        choice = 2;
                    }
                }
                if (choice == 1) learned[i] = *replacement;
                else if (choice == 2) learned[i] = *revision;
            }

            // mop up positives the optimized rules no longer cover
            residual = full;
            for (const auto& rule : learned)
                residual = subtract_rows(residual, rule_covered(data, residual, rule));
            best_dl = std::min(best_dl, dl_of(learned));
            covering_loop();

            // drop rules that cover nothing sequentially
            std::vector<Rule> kept;
            std::vector<int> remaining = full;
            for (const auto& rule : learned) {
                const auto cov = rule_covered(data, remaining, rule);
                if (!cov.empty()) {
                    kept.push_back(rule);
                    remaining = subtract_rows(remaining, cov);
                }
            }
            learned = std::move(kept);
        }
    }

    RuleSet rs;
    rs.default_class = 1 - target;
    rs.attributes = data.attributes;
    rs.class_names = data.class_names;
    rs.class_attr_name = data.class_attr_name;
    rs.config_used = config;
    rs.seed_used = config.seed;

    // final sequential coverage counts over the full training data
    std::vector<int> remaining = full;
    for (auto& rule : learned) {
        const auto cov = rule_covered(data, remaining, rule);
        rule.covered = double(cov.size());
        rule.misclassified = 0;
        for (int r : cov)
            if (data.rows[r].y != rule.predicted_class) rule.misclassified += 1;
        remaining = subtract_rows(remaining, cov);
    }
    rs.rules = std::move(learned);
    rs.default_covered = double(remaining.size());
    rs.default_misclassified = 0;
    for (int r : remaining)
        if (data.rows[r].y != rs.default_class) rs.default_misclassified += 1;
    return rs;
}

Prediction predict(const RuleSet& ruleset, const Instance& inst) {
    for (size_t i = 0; i < ruleset.rules.size(); ++i)
        if (ruleset.rules[i].matches(inst)) return {ruleset.rules[i].predicted_class, i};
    return {ruleset.default_class, ruleset.rules.size()};
}

namespace {

std::string render_condition(const RuleSet& rs, const Condition& c) {
    const auto& attr = rs.attributes[c.attr];
    std::string op;
    std::string value;
    switch (c.op) {
    case ConditionOp::Le: op = "<="; break;
    case ConditionOp::Ge: op = ">="; break;
    case ConditionOp::Eq: op = "="; break;
    }
    if (attr.nominal)
        value = attr.values[size_t(c.value)];
    else
        value = format_trimmed(c.value);
    return "(" + display_name(attr.name) + " " + op + " " + value + ")";
}

std::string render_rule_line(const RuleSet& rs, const std::vector<Condition>& conditions,
                             int cls, double covered, double misclassified) {
    std::string line;
    for (size_t i = 0; i < conditions.size(); ++i) {
        if (i) line += " and ";
        line += render_condition(rs, conditions[i]);
    }
    if (!conditions.empty()) line += " ";
    line += "=> " + rs.class_attr_name + "=" + rs.class_names[cls] + " (" +
            format_fixed(covered, 1) + "/" + format_fixed(misclassified, 1) + ")";
    return line;
}

} // namespace

std::string render_ruleset(const RuleSet& ruleset) {
    std::string out = "JRIP rules:\n===========\n\n";
    for (const auto& rule : ruleset.rules)
        out += render_rule_line(ruleset, rule.conditions, rule.predicted_class, rule.covered,
                                rule.misclassified) + "\n";
    out += render_rule_line(ruleset, {}, ruleset.default_class, ruleset.default_covered,
                            ruleset.default_misclassified) + "\n";
    out += "\nNumber of Rules : " + std::to_string(ruleset.rules.size() + 1) + "\n";
    return out;
}

} // namespace rugbypi::ripper
