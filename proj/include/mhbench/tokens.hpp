#pragma once

#include <string_view>

namespace mhbench {

// Token-count proxy for dataset statistics and prompt budgeting.
//
// count() is the raw heuristic (used for corpus statistics);
// estimate() applies the safety factor and is what prompt budgets compare
// against, since the real tokenizer is backend-specific.
class TokenCounter {
public:
    virtual ~TokenCounter() = default;
    virtual int count(std::string_view text) const = 0;
    virtual int estimate(std::string_view text) const = 0;
};

// Default counter: each run of alphanumeric characters (UTF-8 continuation
// bytes included) is one token, each other printable character is one token,
// whitespace separates. estimate() = ceil(count * safety_factor).
class HeuristicTokenCounter final : public TokenCounter {
public:
    explicit HeuristicTokenCounter(double safety_factor = 1.3)
        : safety_factor_(safety_factor) {}

    int count(std::string_view text) const override;
    int estimate(std::string_view text) const override;

private:
    double safety_factor_;
};

// Shared process-wide default instance.
const TokenCounter& default_token_counter();

}  // namespace mhbench
