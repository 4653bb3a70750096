#include "mhbench/tokens.hpp"

#include <cctype>
#include <cmath>

namespace mhbench {

namespace {

bool is_word_byte(unsigned char c) {
    // Bytes >= 0x80 are UTF-8 multibyte pieces; treat them as word content.
    return std::isalnum(c) != 0 || c >= 0x80;
}

}  // namespace

int HeuristicTokenCounter::count(std::string_view text) const {
    int tokens = 0;
    bool in_word = false;
    for (unsigned char c : text) {
        if (is_word_byte(c)) {
            if (!in_word) {
                ++tokens;
                in_word = true;
            }
        } else {
            in_word = false;
            if (std::isspace(c) == 0) ++tokens;  // punctuation counts as a token
        }
    }
    return tokens;
}

int HeuristicTokenCounter::estimate(std::string_view text) const {
    return static_cast<int>(std::ceil(count(text) * safety_factor_));
}

const TokenCounter& default_token_counter() {
    static const HeuristicTokenCounter counter;
    return counter;
}

}  // namespace mhbench
