#include "nms/config.hpp"

#include <json.hpp>

#include "nms/subst.hpp"

namespace nms {

void RunConfig::finalize() {
    if (m < 1) throw ConfigError("config: m must be >= 1");
    if (probs.empty())
        probs.assign(static_cast<std::size_t>(m) + 1, 1.0 / (m + 1));
    validate_probs(m, probs);
    if (format != "csv" && format != "json" && format != "svg")
        throw ConfigError("config: format must be csv, json or svg");
}

std::string emit_config(const RunConfig& cfg) {
    nlohmann::json j;
    j["m"] = cfg.m;
    j["probs"] = cfg.probs;
    j["seed"] = cfg.seed;
    j["format"] = cfg.format;
    j["out"] = cfg.out;
    return j.dump();
}

RunConfig parse_config(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config: invalid JSON: ") + e.what());
    }
    RunConfig cfg;
    cfg.m = j.value("m", 1);
    cfg.probs = j.value("probs", std::vector<double>{});
    cfg.seed = j.value("seed", static_cast<std::uint64_t>(1));
    cfg.format = j.value("format", std::string("csv"));
    cfg.out = j.value("out", std::string());
    return cfg;
}

std::uint64_t config_hash(const RunConfig& cfg) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : emit_config(cfg)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace nms
