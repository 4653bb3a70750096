#include "mhbench/catalog.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mhbench {

namespace {

constexpr const char* kBlankToken = "{blank}";

std::string section_for_part1(Strategy s) {
    return std::string("part1.") + to_string(s);
}

std::string section_for_part2(TaskCategory cat, bool multiclass) {
    return std::string("part2.") + to_string(cat) + "." + (multiclass ? "multiclass" : "binary");
}

std::string encode_entry(const std::string& s) {
    return s.empty() ? kBlankToken : s;
}

std::string decode_entry(const std::string& s) {
    return s == kBlankToken ? std::string() : s;
}

}  // namespace

const std::vector<std::string>& StrategyCatalog::part1_variants(Strategy s) const {
    auto it = part1.find(s);
    if (it == part1.end()) {
        throw std::runtime_error(std::string("catalog: no part1 variants for strategy ") +
                                 to_string(s));
    }
    return it->second;
}

const std::vector<std::string>& StrategyCatalog::part2_variants(const TaskSpec& task) const {
    auto it = part2.find({task.category, !task.binary()});
    if (it == part2.end()) {
        throw std::runtime_error("catalog: no part2 variants for " +
                                 section_for_part2(task.category, !task.binary()));
    }
    return it->second;
}

std::vector<std::string> StrategyCatalog::synonyms_for(const std::string& class_name) const {
    auto it = synonyms.find(class_name);
    if (it != synonyms.end()) return it->second;
    return {class_name};
}

void StrategyCatalog::validate() const {
    auto basic = part1.find(Strategy::basic);
    if (basic == part1.end() || basic->second.size() != 1 || !basic->second[0].empty()) {
        throw std::runtime_error("catalog: basic strategy must have exactly one empty variant");
    }
    for (Strategy s : {Strategy::context, Strategy::mh, Strategy::both}) {
        auto it = part1.find(s);
        if (it == part1.end() || it->second.empty()) {
            throw std::runtime_error(std::string("catalog: missing part1 variants for ") +
                                     to_string(s));
        }
    }
    for (TaskCategory cat : {TaskCategory::mental_state, TaskCategory::critical_action}) {
        for (bool multi : {false, true}) {
            auto it = part2.find({cat, multi});
            if (it == part2.end() || it->second.empty()) {
                throw std::runtime_error("catalog: missing " + section_for_part2(cat, multi));
            }
        }
    }
}

StrategyCatalog parse_catalog(const std::string& text) {
    StrategyCatalog cat;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;

    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("catalog line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail("unterminated section header");
            section = line.substr(1, line.size() - 2);
            continue;
        }
        if (section.empty()) fail("entry before any [section] header");

        const std::string entry = decode_entry(line);
        if (section.rfind("part1.", 0) == 0) {
            auto strat = strategy_from_string(section.substr(6));
            if (!strat) fail("unknown strategy in section [" + section + "]");
            cat.part1[*strat].push_back(entry);
        } else if (section.rfind("part2.", 0) == 0) {
            std::string rest = section.substr(6);
            auto dot = rest.find('.');
            if (dot == std::string::npos) fail("expected part2.<category>.<arity>");
            std::string cat_name = rest.substr(0, dot);
            std::string arity = rest.substr(dot + 1);
            TaskCategory category;
            if (cat_name == "mental_state") category = TaskCategory::mental_state;
            else if (cat_name == "critical_action") category = TaskCategory::critical_action;
            else { fail("unknown category '" + cat_name + "'"); return cat; }
            bool multiclass;
            if (arity == "binary") multiclass = false;
            else if (arity == "multiclass") multiclass = true;
            else { fail("unknown arity '" + arity + "'"); return cat; }
            cat.part2[{category, multiclass}].push_back(entry);
        } else if (section.rfind("synonyms.", 0) == 0) {
            cat.synonyms[section.substr(9)].push_back(normalize_label_name(entry));
        } else {
            fail("unknown section [" + section + "]");
        }
    }
    cat.validate();
    return cat;
}

std::string serialize_catalog(const StrategyCatalog& catalog) {
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const std::string& header, const std::vector<std::string>& entries) {
        if (!first) out << "\n";
        first = false;
        out << "[" << header << "]\n";
        for (const auto& e : entries) out << encode_entry(e) << "\n";
    };

    for (Strategy s : {Strategy::basic, Strategy::context, Strategy::mh, Strategy::both}) {
        auto it = catalog.part1.find(s);
        if (it != catalog.part1.end()) emit(section_for_part1(s), it->second);
    }
    for (TaskCategory cat : {TaskCategory::mental_state, TaskCategory::critical_action}) {
        for (bool multi : {false, true}) {
            auto it = catalog.part2.find({cat, multi});
            if (it != catalog.part2.end()) emit(section_for_part2(cat, multi), it->second);
        }
    }
    for (const auto& [name, syns] : catalog.synonyms) {
        emit("synonyms." + name, syns);
    }
    return out.str();
}

StrategyCatalog load_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("catalog: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str());
}

const StrategyCatalog& default_catalog() {
    static const StrategyCatalog cat = [] {
        StrategyCatalog c;
        c.part1[Strategy::basic] = {""};
        c.part1[Strategy::context] = {
            "This person wrote this paragraph on social media.",
            "Consider this post on social media to answer the question.",
        };
        c.part1[Strategy::mh] = {
            "As a psychologist, read the post on social media and answer the question.",
            "If you are a psychologist, read the post on social media and answer the question.",
        };
        c.part1[Strategy::both] = {
            "This person wrote this paragraph on social media. As a psychologist, read the "
            "post on social media and answer the question.",
            "This person wrote this paragraph on social media. As a psychologist, consider "
            "the mental well-being condition expressed in this post, read the post on social "
            "media, and answer the question.",
        };
        c.part2[{TaskCategory::mental_state, false}] = {
            "Is the poster {state_word}?",
            "Is the poster of this post {state_word}?",
            "Determine if the poster of this post is {state_word}.",
        };
        c.part2[{TaskCategory::mental_state, true}] = {
            "Which level is the person {state_word}?",
            "How {state_word} is the person?",
            "Determine how {state_word} the person is.",
        };
        c.part2[{TaskCategory::critical_action, false}] = {
            "Does the poster want to {state_word}?",
            "Is the poster likely to {state_word}?",
            "Determine if the poster of this post want to {state_word}.",
        };
        c.part2[{TaskCategory::critical_action, true}] = {
            "Which level of {state_word} risk does the person have?",
            "How suicidal is the person?",
            "Determine which level of {state_word} risk does the person have.",
        };
        c.synonyms["yes"] = {"yes", "true"};
        c.synonyms["no"] = {"no", "false"};
        c.synonyms["minimal"] = {"minimal", "minimum"};
        c.synonyms["mild"] = {"mild"};
        c.synonyms["moderate"] = {"moderate"};
        c.synonyms["severe"] = {"severe"};
        c.synonyms["supportive"] = {"supportive"};
        c.synonyms["indicator"] = {"indicator"};
        c.synonyms["ideation"] = {"ideation"};
        c.synonyms["behavior"] = {"behavior", "behaviour"};
        c.synonyms["attempt"] = {"attempt"};
        c.validate();
        return c;
    }();
    return cat;
}

}  // namespace mhbench
