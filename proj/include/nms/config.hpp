#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nms/errors.hpp"

namespace nms {

// Shared CLI configuration. Command-specific knobs live on the subcommands;
// this is the part that every run carries and that goes into the provenance
// header of every output file.
struct RunConfig {
    int m = 1;
    std::vector<double> probs;  // empty = uniform over m+1 rules
    std::uint64_t seed = 1;
    std::string format = "csv";  // csv | json | svg
    std::string out;             // empty = stdout

    // Fills `probs` with the uniform vector when empty, then validates.
    void finalize();

    bool operator==(const RunConfig& o) const = default;
};

std::string emit_config(const RunConfig& cfg);
RunConfig parse_config(const std::string& json_text);

// FNV-1a hash of the emitted config; stamped into output provenance headers.
std::uint64_t config_hash(const RunConfig& cfg);

}  // namespace nms
