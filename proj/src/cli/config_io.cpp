#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>

#include "marc/cli.hpp"
#include "marc/error.hpp"

#ifndef MARC_CAP_VERSION
#define MARC_CAP_VERSION "0.0.0"
#endif

namespace marc::cli {

using nlohmann::json;

namespace {

double number(const json& doc, const std::string& key) {
    if (!doc.contains(key)) throw ValidationError(key, "missing field");
    const auto& v = doc.at(key);
    if (!v.is_number()) throw ValidationError(key, "expected a number");
    return v.get<double>();
}

std::vector<double> numbers(const json& doc, const std::string& key) {
    if (!doc.contains(key)) throw ValidationError(key, "missing field");
    const auto& v = doc.at(key);
    if (!v.is_array()) throw ValidationError(key, "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number())
            throw ValidationError(key + "[" + std::to_string(i + 1) + "]", "expected a number");
        out.push_back(v[i].get<double>());
    }
    return out;
}

const std::set<std::string> kRawKeys{"K", "P", "P_r", "N_r", "N_delta"};
const std::set<std::string> kSnrKeys{"snr_relay", "snr_dest", "snr_relay_dest"};

LoadedConfig parse_raw(const json& doc) {
    ChannelParams p;
    if (!doc.contains("K")) throw ValidationError("K", "missing field");
    if (!doc.at("K").is_number_integer()) throw ValidationError("K", "expected an integer");
    p.K = doc.at("K").get<int>();
    p.P = numbers(doc, "P");
    p.P_r = number(doc, "P_r");
    p.N_r = number(doc, "N_r");
    p.N_delta = number(doc, "N_delta");
    return {validate(p), "raw"};
}

LoadedConfig parse_snr(const json& doc) {
    const auto relay = numbers(doc, "snr_relay");
    const auto dest = numbers(doc, "snr_dest");
    const double rd = number(doc, "snr_relay_dest");
    if (dest.size() != relay.size())
        throw ValidationError("snr_dest", "length differs from snr_relay");

    // N_r = 1, so P_k = snr_relay_k and N_d = snr_relay_k / snr_dest_k for every k.
    double n_d = -1.0;
    for (std::size_t k = 0; k < relay.size(); ++k) {
        const std::string field = "snr_dest[" + std::to_string(k + 1) + "]";
        if (!(relay[k] > 0.0)) continue;
        if (!(dest[k] > 0.0)) throw ValidationError(field, "must be positive when snr_relay is");
        const double nd = relay[k] / dest[k];
        if (n_d < 0.0) {
            n_d = nd;
        } else if (std::abs(nd - n_d) > 1e-9 * n_d) {
            throw ValidationError(field, "implies a destination noise inconsistent with the other users");
        }
    }
    if (n_d < 0.0) throw ValidationError("snr_relay", "at least one positive entry is required");
    if (n_d < 1.0 - 1e-12)
        throw ValidationError("snr_dest", "exceeds snr_relay; the channel would not be degraded");

    ChannelParams p;
    p.K = static_cast<int>(relay.size());
    p.P = relay;
    p.P_r = rd * n_d;
    p.N_r = 1.0;
    p.N_delta = std::max(0.0, n_d - 1.0);
    try {
        return {validate(p), "snr"};
    } catch (const ValidationError& e) {
        // Map back onto the SNR field names.
        const std::string f = e.field();
        const std::string msg = std::string(e.what()).substr(f.size() + 2);
        if (f == "P_r") throw ValidationError("snr_relay_dest", msg);
        if (f == "K") throw ValidationError("snr_relay", msg);
        if (f.rfind("P[", 0) == 0) throw ValidationError("snr_relay" + f.substr(1), msg);
        throw;
    }
}

}  // namespace

LoadedConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw ValidationError("config", "expected a JSON object");
    bool raw = false, snr = false;
    for (const auto& [key, _] : doc.items()) {
        if (kRawKeys.count(key)) raw = true;
        else if (kSnrKeys.count(key)) snr = true;
        else throw ValidationError(key, "unknown field");
    }
    if (raw && snr) throw ValidationError("config", "mixes the raw and SNR forms; use exactly one");
    if (!raw && !snr) throw ValidationError("config", "empty configuration");
    return raw ? parse_raw(doc) : parse_snr(doc);
}

LoadedConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("config", "cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("config", std::string("malformed JSON: ") + e.what());
    }
    return parse_config(doc);
}

json config_to_json(const ChannelConfig& cfg) {
    return json{{"K", cfg.K()},
                {"P", std::vector<double>(cfg.P().begin(), cfg.P().end())},
                {"P_r", cfg.P_r()},
                {"N_r", cfg.N_r()},
                {"N_delta", cfg.N_delta()}};
}

json RunManifest::to_json() const {
    return json{{"command", command}, {"config", config_path}, {"resolved", resolved},
                {"params", params},   {"version", version}};
}

std::string RunManifest::digest() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : to_json().dump()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string RunManifest::comment_line() const {
    return "# manifest digest=" + digest() + " " + to_json().dump();
}

std::string tool_version() { return MARC_CAP_VERSION; }

}  // namespace marc::cli
