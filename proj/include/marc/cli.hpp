#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "marc/channel.hpp"

namespace marc::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kUnsupportedDimension = 3 };

struct LoadedConfig {
    ChannelConfig config;
    std::string form;  // "raw" or "snr"
};

/// Accepts exactly one of
///   {K, P:[...], P_r, N_r, N_delta}
///   {snr_relay:[...], snr_dest:[...], snr_relay_dest}   (normalized to N_r = 1)
/// Throws ValidationError naming the offending field.
LoadedConfig parse_config(const nlohmann::json& doc);
LoadedConfig load_config(const std::string& path);

nlohmann::json config_to_json(const ChannelConfig& cfg);

struct RunManifest {
    std::string command;
    std::string config_path;
    nlohmann::json resolved;
    nlohmann::json params = nlohmann::json::object();
    std::string version;

    nlohmann::json to_json() const;
    /// 64-bit FNV-1a over the compact JSON serialization, 16 hex digits.
    std::string digest() const;
    /// "# manifest digest=<hex> <json>"
    std::string comment_line() const;
};

std::string tool_version();

/// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace marc::cli
