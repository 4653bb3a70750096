#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mhbench {

// One class of a task's label set. `ordinal` is the position in the task's
// class list (contiguous from 0); names are stored normalized (lowercase,
// trimmed).
struct ClassLabel {
    std::string name;
    int ordinal = 0;

    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

enum class TaskCategory { mental_state, critical_action };
enum class Granularity { post, user };

// One of the six prediction tasks (or an external task reusing their shape).
struct TaskSpec {
    int task_id = 0;                 // 1..6 for the built-in tasks, 0 for custom
    std::string tag;                 // short name, e.g. "dreaddit-stress"
    TaskCategory category = TaskCategory::mental_state;
    Granularity granularity = Granularity::post;
    std::vector<ClassLabel> classes; // enumeration order == output-constraint order
    std::string state_word;          // substituted into the question templates

    bool binary() const { return classes.size() == 2; }

    // Class lookup by normalized name; nullptr when unknown.
    const ClassLabel* find_class(const std::string& normalized_name) const;
};

// Built-in task definitions #1..#6. Throws std::out_of_range for other ids.
//
//   #1 binary stress (post)          #4 binary suicide ideation (post)
//   #2 binary depression (post)      #5 binary suicide risk (user)
//   #3 4-level depression (post)     #6 5-level suicide risk (user)
const TaskSpec& builtin_task(int task_id);

// One labeled text item; the unit of prediction.
struct Record {
    std::string id;
    std::string text;
    ClassLabel label;
    std::string user_id;
    std::string source;  // dataset name
};

struct DatasetSplit {
    std::vector<Record> train;
    std::vector<Record> test;
    std::uint64_t seed = 0;
    double ratio = 0.0;
};

enum class Strategy { basic, context, mh, both };
enum class Mode { zero_shot, few_shot, cot };

const char* to_string(Strategy s);
const char* to_string(Mode m);
const char* to_string(TaskCategory c);
const char* to_string(Granularity g);

std::optional<Strategy> strategy_from_string(const std::string& s);
std::optional<Mode> mode_from_string(const std::string& s);

// Lowercase + trim: the canonical on-disk label form.
std::string normalize_label_name(std::string_view raw);

}  // namespace mhbench
