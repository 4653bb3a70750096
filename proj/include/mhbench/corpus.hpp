#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhbench/tokens.hpp"
#include "mhbench/types.hpp"

namespace mhbench::corpus {

// Column/field mapping for dataset files. `format` is "csv", "tsv" or
// "jsonl"; empty means: decide by file extension (.jsonl/.ndjson -> jsonl,
// .tsv -> tsv, else csv).
struct Schema {
    std::string text = "text";
    std::string label = "label";
    std::string user_id = "user_id";
    std::optional<std::string> id;                 // autogenerated "<source>#<row>" when absent
    std::map<std::string, std::string> label_map;  // raw (normalized) -> class name
    std::string format;
};

struct RowError {
    int row = 0;  // 1-based data row (header excluded for csv)
    std::string message;
};

struct LoadResult {
    std::vector<Record> records;
    std::vector<RowError> errors;  // malformed rows are reported, never dropped silently
};

// Load and validate a dataset file. Every input row becomes either a Record
// or a RowError. Throws std::runtime_error when the file is missing or the
// header lacks a mapped column.
LoadResult load_dataset(const std::string& path, const Schema& schema, const TaskSpec& task);

// Collapse per-post records into one record per user (dataset order,
// blank-line separated), for user-granularity tasks. Users with conflicting
// labels are reported as errors and skipped.
LoadResult aggregate_by_user(const std::vector<Record>& records, const TaskSpec& task);

// 80/20-style split where each user's records land entirely in train or in
// test: users are shuffled by seed and assigned whole to train until the
// target count is reached. Throws std::invalid_argument on ratio outside
// (0,1) or fewer than 2 distinct users.
DatasetSplit split_user_exclusive(const std::vector<Record>& records, double ratio,
                                  std::uint64_t seed);

// Class-stratified subsample of round(fraction * |train|) records
// (largest-remainder apportionment across classes, original order kept).
// fraction 1.0 returns the input unchanged. A nonzero fraction that rounds
// to zero is clamped to one record and reported via *warning.
std::vector<Record> downsample_train(const std::vector<Record>& train, double fraction,
                                     std::uint64_t seed, std::string* warning = nullptr);

struct DatasetStats {
    size_t count = 0;
    // class name -> (count, percentage); iteration order == task class order
    std::vector<std::tuple<std::string, size_t, double>> per_class;
    double token_mean = 0.0;
    double token_stddev = 0.0;  // population stddev
};

DatasetStats dataset_stats(const std::vector<Record>& records, const TaskSpec& task,
                           const TokenCounter& counter = default_token_counter());

// Split manifest lines {id, split, seed, ratio}, one JSON object per line.
std::string split_manifest_jsonl(const DatasetSplit& split);

// Deterministic Fisher-Yates shuffle (implementation-independent, unlike
// std::shuffle), shared by every seeded corpus operation.
void seeded_shuffle(std::vector<size_t>& indices, std::uint64_t seed);

}  // namespace mhbench::corpus
