#include "mhbench/types.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

namespace mhbench {

namespace {

std::vector<ClassLabel> make_classes(std::initializer_list<const char*> names) {
    std::vector<ClassLabel> out;
    int ord = 0;
    for (const char* n : names) out.push_back({n, ord++});
    return out;
}

TaskSpec make_task(int id, std::string tag, TaskCategory cat, Granularity gran,
                   std::vector<ClassLabel> classes, std::string state_word) {
    TaskSpec t;
    t.task_id = id;
    t.tag = std::move(tag);
    t.category = cat;
    t.granularity = gran;
    t.classes = std::move(classes);
    t.state_word = std::move(state_word);
    return t;
}

}  // namespace

const TaskSpec& builtin_task(int task_id) {
    // "yes" first so the constraint enumeration reads "Yes or No".
    static const std::array<TaskSpec, 6> tasks = {
        make_task(1, "dreaddit-stress", TaskCategory::mental_state, Granularity::post,
                  make_classes({"yes", "no"}), "stressed"),
        make_task(2, "depseverity-binary", TaskCategory::mental_state, Granularity::post,
                  make_classes({"yes", "no"}), "depressed"),
        make_task(3, "depseverity-4level", TaskCategory::mental_state, Granularity::post,
                  make_classes({"minimal", "mild", "moderate", "severe"}), "depressed"),
        make_task(4, "sdcnl-ideation", TaskCategory::critical_action, Granularity::post,
                  make_classes({"yes", "no"}), "suicide"),
        make_task(5, "cssrs-binary", TaskCategory::critical_action, Granularity::user,
                  make_classes({"yes", "no"}), "suicide"),
        make_task(6, "cssrs-5level", TaskCategory::critical_action, Granularity::user,
                  make_classes({"supportive", "indicator", "ideation", "behavior", "attempt"}),
                  "suicide"),
    };
    if (task_id < 1 || task_id > 6) {
        throw std::out_of_range("builtin_task: no task #" + std::to_string(task_id));
    }
    return tasks[static_cast<size_t>(task_id - 1)];
}

const ClassLabel* TaskSpec::find_class(const std::string& normalized_name) const {
    for (const auto& c : classes) {
        if (c.name == normalized_name) return &c;
    }
    return nullptr;
}

const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::basic: return "basic";
        case Strategy::context: return "context";
        case Strategy::mh: return "mh";
        case Strategy::both: return "both";
    }
    return "?";
}

const char* to_string(Mode m) {
    switch (m) {
        case Mode::zero_shot: return "zero_shot";
        case Mode::few_shot: return "few_shot";
        case Mode::cot: return "cot";
    }
    return "?";
}

const char* to_string(TaskCategory c) {
    return c == TaskCategory::mental_state ? "mental_state" : "critical_action";
}

const char* to_string(Granularity g) {
    return g == Granularity::post ? "post" : "user";
}

std::optional<Strategy> strategy_from_string(const std::string& s) {
    if (s == "basic") return Strategy::basic;
    if (s == "context") return Strategy::context;
    if (s == "mh") return Strategy::mh;
    if (s == "both") return Strategy::both;
    return std::nullopt;
}

std::optional<Mode> mode_from_string(const std::string& s) {
    if (s == "zero_shot") return Mode::zero_shot;
    if (s == "few_shot") return Mode::few_shot;
    if (s == "cot") return Mode::cot;
    return std::nullopt;
}

std::string normalize_label_name(std::string_view raw) {
    size_t b = 0, e = raw.size();
    while (b < e && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
    std::string out;
    out.reserve(e - b);
    for (size_t i = b; i < e; ++i) {
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(raw[i]))));
    }
    return out;
}

}  // namespace mhbench
