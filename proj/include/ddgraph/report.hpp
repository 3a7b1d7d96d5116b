#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace ddg {

// SHA-256 of a byte string, lowercase hex.
std::string sha256_hex(const std::string& bytes);

// Envelope written by every CLI subcommand. Field order is fixed so identical
// invocations produce byte-identical output; timing is opt-in because it would
// break that guarantee.
struct RunReport {
    std::string command;
    std::string input_digest;
    nlohmann::json results;
    int exit_status = 0;
    bool with_timing = false;
    double timing_ms = 0.0;

    nlohmann::json to_json() const;
};

}  // namespace ddg
