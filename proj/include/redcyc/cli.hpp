#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

// Command front end shared by the binary and the integration tests.
// Exit codes: 0 success, 1 verification mismatch, 2 invalid input or
// resource limit.

namespace redcyc::cli {

enum class Format { table, json, csv };

struct RunConfig {
    std::string command;  // count | verify | census | reps | sweep
    std::optional<std::uint64_t> m;
    std::optional<std::string> field;  // "q" or "p^k"
    std::optional<std::uint64_t> m_max;
    std::optional<std::uint64_t> q_max;
    Format format = Format::table;
    std::optional<std::string> out_path;
    bool quiet = false;
    unsigned threads = 1;
};

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace redcyc::cli
