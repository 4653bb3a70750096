#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mhbench/catalog.hpp"
#include "mhbench/tokens.hpp"
#include "mhbench/types.hpp"

namespace mhbench::prompt {

// A labeled exemplar for few-shot prompts.
struct Exemplar {
    Record record;
    ClassLabel label;
};

// A fully resolved prompt: the strategy/variant choice plus the rendered
// text. Rendering is deterministic in these fields.
struct PromptPlan {
    TaskSpec task;
    Strategy strategy = Strategy::basic;
    int part1_index = 0;
    int part2_index = 0;
    Mode mode = Mode::zero_shot;
    std::vector<Exemplar> exemplars;  // few_shot only
    std::string rendered;
    int token_estimate = 0;
};

// All (part1_index, part2_index) pairs for a strategy and the task's
// question list, row-major in catalog order.
std::vector<std::pair<int, int>> enumerate_variants(const TaskSpec& task, Strategy strategy,
                                                    const StrategyCatalog& catalog);

// "Only return Yes or No." / "Only return Minimal, Mild, Moderate, or
// Severe." — class names title-cased, enumerated in class order.
std::string build_output_constraint(const TaskSpec& task);

// The same enumeration with the step-by-step suffix:
// "Return Yes or No. Provide reasons step by step."
std::string build_cot_constraint(const TaskSpec& task);

// Text, optional part-1 prefix, question with the state word substituted,
// output constraint — joined with single newlines, empty part 1 skipped.
PromptPlan build_zero_shot(const Record& record, const TaskSpec& task, Strategy strategy,
                           int part1_index, int part2_index, const StrategyCatalog& catalog,
                           const TokenCounter& counter = default_token_counter());

// M blocks of (exemplar zero-shot prompt + "Answer: <Label>") followed by
// the query's zero-shot prompt, blocks separated by blank lines. Throws
// PromptBudgetError when the estimate exceeds token_budget (never
// truncates), std::invalid_argument on an empty exemplar list or an
// exemplar sharing the query's record id.
PromptPlan build_few_shot(const Record& record, const std::vector<Exemplar>& exemplars,
                          const TaskSpec& task, Strategy strategy, int part1_index,
                          int part2_index, const StrategyCatalog& catalog, int token_budget,
                          const TokenCounter& counter = default_token_counter());

// Zero-shot with the chain-of-thought constraint as the final line.
PromptPlan build_cot(const Record& record, const TaskSpec& task, Strategy strategy,
                     int part1_index, int part2_index, const StrategyCatalog& catalog,
                     const TokenCounter& counter = default_token_counter());

// Title-case of a class name as it appears in constraints and answer lines.
std::string canonical_answer(const std::string& class_name);

// Default exemplar count: one per class (M=2 binary, M=|classes| multiclass).
int default_few_shot_m(const TaskSpec& task);

}  // namespace mhbench::prompt
