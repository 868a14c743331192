#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace sfi::cli {

enum ExitCode : int { ok = 0, violation = 1, input_error = 2 };

// FNV-1a 64-bit hash, printed as 16 hex digits.
std::string fnv1a64(std::string_view bytes);

// Runs `sfi <area> <verb> [flags]` with args excluding the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sfi::cli
