#pragma once

#include <stdexcept>
#include <string>

namespace mhbench {

// Invalid or missing experiment configuration. CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A completion provider failed after retries. Carries the request
// fingerprint so the failing call can be replayed. CLI maps this to exit 4.
class BackendError : public std::runtime_error {
public:
    BackendError(const std::string& what, std::string fingerprint)
        : std::runtime_error(what), fingerprint_(std::move(fingerprint)) {}

    const std::string& fingerprint() const { return fingerprint_; }

private:
    std::string fingerprint_;
};

// A few-shot prompt does not fit the token budget. The caller is expected
// to resample or shrink the exemplar set; nothing is ever truncated here.
class PromptBudgetError : public std::runtime_error {
public:
    PromptBudgetError(const std::string& what, int token_estimate, int budget)
        : std::runtime_error(what), token_estimate_(token_estimate), budget_(budget) {}

    int token_estimate() const { return token_estimate_; }
    int budget() const { return budget_; }

private:
    int token_estimate_;
    int budget_;
};

}  // namespace mhbench
