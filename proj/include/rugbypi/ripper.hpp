#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rugbypi::ripper {

struct Attribute {
    std::string name;
    bool nominal = false;
    std::vector<std::string> values; // nominal value table; empty for numeric
};

struct Instance {
    std::vector<std::optional<double>> x; // nominal values stored as value-table indices
    int y = 0;                            // index into Dataset::class_names
};

struct Dataset {
    std::vector<Attribute> attributes;
    std::vector<std::string> class_names; // binary: exactly two
    std::string class_attr_name = "result";
    std::vector<Instance> rows;
};

enum class ConditionOp { Le, Ge, Eq };

struct Condition {
    int attr = 0;
    ConditionOp op = ConditionOp::Le;
    double value = 0;

    bool matches(const Instance& inst) const;
    bool operator==(const Condition&) const = default;
};

struct Rule {
    std::vector<Condition> conditions; // conjunction; empty matches everything
    int predicted_class = 0;
    // training coverage, filled in sequentially by fit
    double covered = 0;
    double misclassified = 0;

    bool matches(const Instance& inst) const;
};

struct RipperConfig {
    int min_no = 2;
    bool use_pruning = true;
    int folds = 3; // 1/folds of the data held out for pruning
    int optimization_runs = 2;
    uint64_t seed = 1;
    std::optional<int> target_class; // unset = auto (minority class)

    // description-length constants from the rule-induction lineage
    double dl_slack_bits = 64.0;
    double theory_cost_factor = 0.5;
};

struct RuleSet {
    std::vector<Rule> rules; // learned rules, without the default
    int default_class = 0;
    double default_covered = 0;
    double default_misclassified = 0;

    std::vector<Attribute> attributes; // copied for rendering/prediction
    std::vector<std::string> class_names;
    std::string class_attr_name = "result";
    RipperConfig config_used;
    uint64_t seed_used = 0;
};

// All usable conditions on one attribute: (attr <= v) and (attr >= v) per
// distinct observed value for numeric attributes (minus any condition every
// row satisfies), (attr = v) per observed value for nominal ones.
std::vector<Condition> candidate_conditions(const Dataset& data,
                                            const std::vector<int>& rows,
                                            int attr);

// FOIL information gain: p1 * (log2(p1/(p1+n1)) - log2(p0/(p0+n0))).
// p1 == 0 yields -infinity (condition unusable).
double foil_gain(double p0, double n0, double p1, double n1);

// Greedy FOIL-gain growth over `rows`. Ties break by attribute order, then
// <= before >=, then smaller threshold. Conditions that would leave fewer
// than min_no covered positives are skipped. Returns nothing when the empty
// rule covers negatives and no candidate has positive finite gain.
std::optional<Rule> grow_rule(const Dataset& data,
                              const std::vector<int>& rows,
                              int positive_class,
                              int min_no);

// Reduced-error pruning: evaluate the rule and every prefix reachable by
// deleting a final sequence of conditions (including the empty prefix) on
// the prune rows; keep the maximizer of (p-n)/(p+n), ties to fewer
// conditions.
Rule prune_rule(const Dataset& data,
                const std::vector<int>& prune_rows,
                const Rule& rule,
                int positive_class);

// Total description length in bits: per-rule theory cost
// 0.5*(log2 k + k*log2 T) plus binomial coding of the false positives among
// covered rows and false negatives among uncovered rows.
double ruleset_description_length(const std::vector<Rule>& rules,
                                  const Dataset& data,
                                  const std::vector<int>& rows,
                                  int positive_class,
                                  double theory_cost_factor = 0.5);

// Sequential covering with optional reduced-error pruning, description-
// length stopping and optimization passes. Deterministic for a fixed seed.
RuleSet fit(const Dataset& data, const RipperConfig& config);

struct Prediction {
    int predicted_class = 0;
    size_t fired_rule_index = 0; // == rules.size() when the default fired
};

// First-match-wins evaluation; a missing value fails any condition on it.
Prediction predict(const RuleSet& ruleset, const Instance& inst);

// JRip-style text: header, separator, one line per rule
// `(attr <= v) and (...) => result=class (covered.0/misclassified.0)`,
// the default rule with an empty antecedent, and a rule-count trailer.
std::string render_ruleset(const RuleSet& ruleset);

std::vector<int> all_rows(const Dataset& data);

} // namespace rugbypi::ripper
