#include "mhbench/corpus.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mhbench::corpus {

namespace {

using nlohmann::json;

// Bounded uniform draw by rejection; avoids std::uniform_int_distribution,
// whose output is implementation-defined.
std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    std::uint64_t r;
    do {
        r = rng();
    } while (r < threshold);
    return r % n;
}

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string path_stem(const std::string& path) {
    size_t slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    size_t dot = name.find_last_of('.');
    return dot == std::string::npos ? name : name.substr(0, dot);
}

std::string detect_format(const std::string& path, const Schema& schema) {
    if (!schema.format.empty()) return schema.format;
    std::string lower = path;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower.ends_with(".jsonl") || lower.ends_with(".ndjson")) return "jsonl";
    if (lower.ends_with(".tsv")) return "tsv";
    return "csv";
}

// RFC4180-style parser: quoted fields may contain delimiters, doubled
// quotes, and newlines.
std::vector<std::vector<std::string>> parse_delimited(const std::string& content, char delim) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool row_started = false;

    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
    };
    auto end_row = [&] {
        end_field();
        rows.push_back(std::move(row));
        row.clear();
        row_started = false;
    };

    for (size_t i = 0; i < content.size(); ++i) {
        char c = content[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < content.size() && content[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        if (c == '"' && field.empty()) {
            in_quotes = true;
            row_started = true;
        } else if (c == delim) {
            end_field();
            row_started = true;
        } else if (c == '\n') {
            if (row_started || !field.empty()) end_row();
        } else if (c == '\r') {
            // swallowed; \r\n handled at the \n
        } else {
            field.push_back(c);
            row_started = true;
        }
    }
    if (row_started || !field.empty()) end_row();
    return rows;
}

struct RawRow {
    std::string text, label, user_id;
    std::optional<std::string> id;
    std::optional<std::string> error;  // structural problem found before validation
};

void validate_and_append(const RawRow& raw, int row_number, const Schema& schema,
                         const TaskSpec& task, const std::string& source,
                         std::unordered_set<std::string>& seen_ids, LoadResult& out) {
    auto report = [&](const std::string& msg) { out.errors.push_back({row_number, msg}); };

    if (raw.error) {
        report(*raw.error);
        return;
    }
    Record rec;
    rec.text = trim(raw.text);
    if (rec.text.empty()) {
        report("empty text");
        return;
    }
    std::string label = normalize_label_name(raw.label);
    if (auto it = schema.label_map.find(label); it != schema.label_map.end()) {
        label = normalize_label_name(it->second);
    }
    const ClassLabel* cls = task.find_class(label);
    if (cls == nullptr) {
        report("unknown label '" + raw.label + "'");
        return;
    }
    rec.label = *cls;
    rec.user_id = trim(raw.user_id);
    if (rec.user_id.empty()) {
        report("empty user_id");
        return;
    }
    rec.id = raw.id ? trim(*raw.id) : source + "#" + std::to_string(row_number);
    if (rec.id.empty()) {
        report("empty record id");
        return;
    }
    if (!seen_ids.insert(rec.id).second) {
        report("duplicate record id '" + rec.id + "'");
        return;
    }
    rec.source = source;
    out.records.push_back(std::move(rec));
}

}  // namespace

LoadResult load_dataset(const std::string& path, const Schema& schema, const TaskSpec& task) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("load_dataset: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string content = buf.str();
    const std::string source = path_stem(path);
    const std::string format = detect_format(path, schema);

    LoadResult out;
    std::unordered_set<std::string> seen_ids;

    if (format == "jsonl") {
        std::istringstream lines(content);
        std::string line;
        int row = 0;
        while (std::getline(lines, line)) {
            if (trim(line).empty()) continue;
            ++row;
            RawRow raw;
            json obj = json::parse(line, nullptr, false);
            if (obj.is_discarded() || !obj.is_object()) {
                raw.error = "malformed JSON object";
            } else {
                auto fetch = [&](const std::string& key, std::string& dst) -> bool {
                    if (!obj.contains(key)) {
                        raw.error = "missing field '" + key + "'";
                        return false;
                    }
                    const auto& v = obj.at(key);
                    dst = v.is_string() ? v.get<std::string>() : v.dump();
                    return true;
                };
                fetch(schema.text, raw.text) && fetch(schema.label, raw.label) &&
                    fetch(schema.user_id, raw.user_id);
                if (!raw.error && schema.id) {
                    std::string id;
                    if (fetch(*schema.id, id)) raw.id = id;
                }
            }
            validate_and_append(raw, row, schema, task, source, seen_ids, out);
        }
        return out;
    }

    const char delim = format == "tsv" ? '\t' : ',';
    auto rows = parse_delimited(content, delim);
    if (rows.empty()) return out;

    std::unordered_map<std::string, size_t> col;
    for (size_t i = 0; i < rows[0].size(); ++i) col[trim(rows[0][i])] = i;
    auto col_index = [&](const std::string& name) {
        auto it = col.find(name);
        if (it == col.end()) {
            throw std::runtime_error("load_dataset: " + path + " has no column '" + name + "'");
        }
        return it->second;
    };
    const size_t text_col = col_index(schema.text);
    const size_t label_col = col_index(schema.label);
    const size_t user_col = col_index(schema.user_id);
    std::optional<size_t> id_col;
    if (schema.id) id_col = col_index(*schema.id);

    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& cells = rows[r];
        RawRow raw;
        size_t needed = std::max({text_col, label_col, user_col, id_col.value_or(0)});
        if (cells.size() <= needed) {
            raw.error = "row has " + std::to_string(cells.size()) + " cells, expected at least " +
                        std::to_string(needed + 1);
        } else {
            raw.text = cells[text_col];
            raw.label = cells[label_col];
            raw.user_id = cells[user_col];
            if (id_col) raw.id = cells[*id_col];
        }
        validate_and_append(raw, static_cast<int>(r), schema, task, source, seen_ids, out);
    }
    return out;
}

LoadResult aggregate_by_user(const std::vector<Record>& records, const TaskSpec& task) {
    (void)task;
    LoadResult out;
    std::vector<std::string> order;
    std::unordered_map<std::string, std::vector<const Record*>> by_user;
    for (const auto& r : records) {
        auto [it, inserted] = by_user.try_emplace(r.user_id);
        if (inserted) order.push_back(r.user_id);
        it->second.push_back(&r);
    }
    int row = 0;
    for (const auto& user : order) {
        ++row;
        const auto& posts = by_user.at(user);
        bool consistent = std::all_of(posts.begin(), posts.end(), [&](const Record* p) {
            return p->label == posts[0]->label;
        });
        if (!consistent) {
            out.errors.push_back({row, "user '" + user + "' has conflicting labels"});
            continue;
        }
        Record rec;
        rec.id = user;
        rec.user_id = user;
        rec.label = posts[0]->label;
        rec.source = posts[0]->source;
        std::string text;
        for (size_t i = 0; i < posts.size(); ++i) {
            if (i > 0) text += "\n\n";
            text += posts[i]->text;
        }
        rec.text = std::move(text);
        out.records.push_back(std::move(rec));
    }
    return out;
}

void seeded_shuffle(std::vector<size_t>& indices, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (size_t i = indices.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(bounded_rand(rng, i));
        std::swap(indices[i - 1], indices[j]);
    }
}

DatasetSplit split_user_exclusive(const std::vector<Record>& records, double ratio,
                                  std::uint64_t seed) {
    if (!(ratio > 0.0 && ratio < 1.0)) {
        throw std::invalid_argument("split_user_exclusive: ratio must be in (0,1)");
    }
    std::vector<std::string> users;
    std::unordered_map<std::string, size_t> user_size;
    for (const auto& r : records) {
        if (r.user_id.empty()) {
            throw std::invalid_argument("split_user_exclusive: record '" + r.id +
                                        "' has no user_id");
        }
        auto [it, inserted] = user_size.try_emplace(r.user_id, 0);
        if (inserted) users.push_back(r.user_id);
        ++it->second;
    }
    if (users.size() < 2) {
        throw std::invalid_argument("split_user_exclusive: need at least 2 distinct users");
    }

    std::vector<size_t> order(users.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    seeded_shuffle(order, seed);

    const double target = ratio * static_cast<double>(records.size());
    std::set<std::string> train_users;
    size_t train_count = 0;
    for (size_t idx : order) {
        if (static_cast<double>(train_count) >= target) break;
        train_users.insert(users[idx]);
        train_count += user_size.at(users[idx]);
    }

    DatasetSplit split;
    split.seed = seed;
    split.ratio = ratio;
    for (const auto& r : records) {
        (train_users.count(r.user_id) ? split.train : split.test).push_back(r);
    }
    return split;
}

std::vector<Record> downsample_train(const std::vector<Record>& train, double fraction,
                                     std::uint64_t seed, std::string* warning) {
    if (!(fraction > 0.0 && fraction <= 1.0)) {
        throw std::invalid_argument("downsample_train: fraction must be in (0,1]");
    }
    if (fraction == 1.0 || train.empty()) return train;

    size_t total = static_cast<size_t>(std::llround(fraction * static_cast<double>(train.size())));
    if (total == 0) {
        total = 1;
        if (warning) {
            *warning = "downsample_train: fraction " + std::to_string(fraction) +
                       " rounds to 0 records; clamped to 1";
        }
    }

    // Indices per class, in first-appearance class order.
    std::vector<std::pair<ClassLabel, std::vector<size_t>>> classes;
    for (size_t i = 0; i < train.size(); ++i) {
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const auto& c) { return c.first == train[i].label; });
        if (it == classes.end()) {
            classes.push_back({train[i].label, {i}});
        } else {
            it->second.push_back(i);
        }
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.first.ordinal < b.first.ordinal; });

    // Largest-remainder apportionment keeps each class within one record of
    // its exact quota while the total stays exactly `total`.
    struct Share {
        size_t class_idx;
        size_t base;
        double remainder;
    };
    std::vector<Share> shares;
    size_t allocated = 0;
    for (size_t c = 0; c < classes.size(); ++c) {
        double quota = fraction * static_cast<double>(classes[c].second.size());
        size_t base = static_cast<size_t>(quota);
        shares.push_back({c, base, quota - static_cast<double>(base)});
        allocated += base;
    }
    std::vector<size_t> take(classes.size());
    for (const auto& s : shares) take[s.class_idx] = s.base;
    std::stable_sort(shares.begin(), shares.end(),
                     [](const Share& a, const Share& b) { return a.remainder > b.remainder; });
    for (size_t i = 0; allocated < total && i < shares.size(); ++i) {
        if (take[shares[i].class_idx] < classes[shares[i].class_idx].second.size()) {
            ++take[shares[i].class_idx];
            ++allocated;
        }
    }
    // Quotas all integral but total rounded up, or caps hit: top up wherever
    // records remain.
    for (size_t c = 0; allocated < total && c < classes.size(); ++c) {
        while (allocated < total && take[c] < classes[c].second.size()) {
            ++take[c];
            ++allocated;
        }
    }

    std::vector<size_t> chosen;
    for (size_t c = 0; c < classes.size(); ++c) {
        auto members = classes[c].second;
        seeded_shuffle(members, seed ^ (0x9e3779b97f4a7c15ull * (c + 1)));
        chosen.insert(chosen.end(), members.begin(), members.begin() + static_cast<long>(take[c]));
    }
    std::sort(chosen.begin(), chosen.end());

    std::vector<Record> out;
    out.reserve(chosen.size());
    for (size_t i : chosen) out.push_back(train[i]);
    return out;
}

DatasetStats dataset_stats(const std::vector<Record>& records, const TaskSpec& task,
                           const TokenCounter& counter) {
    if (records.empty()) throw std::invalid_argument("dataset_stats: no records");

    DatasetStats stats;
    stats.count = records.size();

    std::map<std::string, size_t> counts;
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& r : records) {
        ++counts[r.label.name];
        double t = counter.count(r.text);
        sum += t;
        sum_sq += t * t;
    }
    const double n = static_cast<double>(records.size());
    stats.token_mean = sum / n;
    const double var = std::max(0.0, sum_sq / n - stats.token_mean * stats.token_mean);
    stats.token_stddev = std::sqrt(var);

    for (const auto& c : task.classes) {
        size_t k = counts.count(c.name) ? counts.at(c.name) : 0;
        stats.per_class.emplace_back(c.name, k, 100.0 * static_cast<double>(k) / n);
    }
    return stats;
}

std::string split_manifest_jsonl(const DatasetSplit& split) {
    std::ostringstream out;
    auto emit = [&](const std::vector<Record>& recs, const char* which) {
        for (const auto& r : recs) {
            nlohmann::json line{{"id", r.id},
                                {"split", which},
                                {"seed", split.seed},
                                {"ratio", split.ratio}};
            out << line.dump() << "\n";
        }
    };
    emit(split.train, "train");
    emit(split.test, "test");
    return out.str();
}

}  // namespace mhbench::corpus
