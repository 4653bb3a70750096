#pragma once

#include <map>
#include <string>
#include <vector>

#include "mhbench/types.hpp"

namespace mhbench {

// The prompt strategy catalog: part-1 prefix variants per strategy, part-2
// question templates per (category, arity), and the answer synonym tables
// the parser anchors on. Loaded once from its text file and shared
// read-only.
//
// File format: `[section]` headers followed by one entry per line, in
// order. `{blank}` encodes the empty string; `#` lines and blank lines are
// skipped. Sections:
//   [part1.<basic|context|mh|both>]
//   [part2.<mental_state|critical_action>.<binary|multiclass>]
//   [synonyms.<class name>]
struct StrategyCatalog {
    std::map<Strategy, std::vector<std::string>> part1;
    // key: (category, is_multiclass)
    std::map<std::pair<TaskCategory, bool>, std::vector<std::string>> part2;
    std::map<std::string, std::vector<std::string>> synonyms;

    const std::vector<std::string>& part1_variants(Strategy s) const;
    const std::vector<std::string>& part2_variants(const TaskSpec& task) const;

    // Synonyms for a class name; falls back to {name} when the catalog has
    // no entry, so custom tasks parse without catalog edits.
    std::vector<std::string> synonyms_for(const std::string& class_name) const;

    // Structural validation: basic == exactly one empty variant, every
    // non-basic part1 list non-empty, every part2 list non-empty.
    // Throws std::runtime_error on violation.
    void validate() const;

    friend bool operator==(const StrategyCatalog&, const StrategyCatalog&) = default;
};

// Parse the catalog text format. Throws std::runtime_error with the line
// number on malformed input.
StrategyCatalog parse_catalog(const std::string& text);

// Canonical serialization; parse_catalog(serialize_catalog(c)) == c, and
// serialize∘parse is the identity on canonical files.
std::string serialize_catalog(const StrategyCatalog& catalog);

StrategyCatalog load_catalog(const std::string& path);

// The catalog shipped with the repo (same content as data/catalog.txt),
// for callers that don't care about file location.
const StrategyCatalog& default_catalog();

}  // namespace mhbench
