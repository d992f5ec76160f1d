#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "skinsim/mechanics.hpp"
#include "skinsim/optics.hpp"

namespace skinsim {

struct DetectorParams {
    double on_threshold_v = 0.1;
    double off_threshold_v = 0.05;
    double min_hold_s = 0.1;

    void validate() const;
};

/// Everything one run needs. Defaults reproduce the characterized prototype:
/// Ecoflex-0030 Mooney-Rivlin constants, 22 mm body with a 2 mm optical gap,
/// the fitted linear photoreflector model on [1, 2] mm, 0.0144 V noise floor.
struct Config {
    MaterialParams material;
    SensorGeometry geometry;
    OpticalModel optics = OpticalModel::linear(1.9374, -1.8875, 1.0, 2.0);
    PigmentMix pigment;
    double noise_rms_v = 0.0144;
    std::uint64_t seed = 12345;
    DetectorParams detector;

    void validate() const;
};

/// Parses and validates a config document. Missing fields take defaults,
/// unknown keys are rejected with their full path.
Config parse_config(const nlohmann::json& doc);

/// Loads a config JSON file; the literal path "default" (or "") yields the
/// built-in defaults without touching the filesystem.
Config load_config(const std::string& path);

/// Effective configuration as a JSON document; reloading it reproduces the
/// same behavior.
nlohmann::json config_to_json(const Config& cfg);

} // namespace skinsim
