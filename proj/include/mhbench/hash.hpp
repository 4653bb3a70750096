#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mhbench {

// SHA-256 of `data`, lowercase hex.
std::string sha256_hex(std::string_view data);

// SHA-256 of a file's contents, lowercase hex. Throws std::runtime_error if
// the file cannot be read.
std::string sha256_file_hex(const std::string& path);

// FNV-1a, used to derive child RNG seeds from cell identities.
std::uint64_t fnv1a64(std::string_view data);

}  // namespace mhbench
