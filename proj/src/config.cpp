#include "skinsim/config.hpp"

#include <fstream>
#include <set>

#include "skinsim/csv.hpp"
#include "skinsim/errors.hpp"

namespace skinsim {

void DetectorParams::validate() const {
    if (!(on_threshold_v > off_threshold_v) || off_threshold_v < 0.0)
        throw ConfigError("detector", "thresholds must satisfy on > off >= 0");
    if (min_hold_s < 0.0)
        throw ConfigError("detector.min_hold_s", "must be >= 0");
}

void Config::validate() const {
    try {
        material.validate();
        geometry.validate();
        pigment.validate();
    } catch (const ParameterError& e) {
        throw ConfigError("config", e.what());
    }
    if (noise_rms_v < 0.0)
        throw ConfigError("noise_rms_v", "must be >= 0");
    detector.validate();
}

namespace {

void reject_unknown_keys(const nlohmann::json& obj, const std::string& prefix,
                         const std::set<std::string>& allowed) {
    for (const auto& item : obj.items())
        if (!allowed.count(item.key()))
            throw ConfigError(prefix.empty() ? item.key() : prefix + "." + item.key(),
                              "unknown key");
}

double get_number(const nlohmann::json& obj, const std::string& prefix,
                  const std::string& key, double fallback) {
    if (!obj.contains(key))
        return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number())
        throw ConfigError(prefix + key, "must be a number");
    return v.get<double>();
}

void check_positive(double v, const std::string& field) {
    if (!(v > 0.0))
        throw ConfigError(field, "must be positive");
}

void check_non_negative(double v, const std::string& field) {
    if (v < 0.0)
        throw ConfigError(field, "must be >= 0");
}

MaterialParams parse_material(const nlohmann::json& obj) {
    reject_unknown_keys(obj, "material",
                        {"c10_mpa", "c01_mpa", "damping_n_s_per_mm", "deadzone_mm"});
    MaterialParams m;
    m.c10_mpa = get_number(obj, "material.", "c10_mpa", m.c10_mpa);
    m.c01_mpa = get_number(obj, "material.", "c01_mpa", m.c01_mpa);
    m.damping_n_s_per_mm = get_number(obj, "material.", "damping_n_s_per_mm",
                                      m.damping_n_s_per_mm);
    m.deadzone_mm = get_number(obj, "material.", "deadzone_mm", m.deadzone_mm);
    if (!(2.0 * (m.c10_mpa + m.c01_mpa) > 0.0))
        throw ConfigError("material.c01_mpa", "2*(c10_mpa + c01_mpa) must be positive");
    check_non_negative(m.damping_n_s_per_mm, "material.damping_n_s_per_mm");
    check_non_negative(m.deadzone_mm, "material.deadzone_mm");
    return m;
}

SensorGeometry parse_geometry(const nlohmann::json& obj) {
    reject_unknown_keys(obj, "geometry",
                        {"height_mm", "width_mm", "depth_mm", "gap0_mm", "kappa"});
    SensorGeometry g;
    g.height_mm = get_number(obj, "geometry.", "height_mm", g.height_mm);
    g.width_mm = get_number(obj, "geometry.", "width_mm", g.width_mm);
    g.depth_mm = get_number(obj, "geometry.", "depth_mm", g.depth_mm);
    g.gap0_mm = get_number(obj, "geometry.", "gap0_mm", g.gap0_mm);
    g.kappa = get_number(obj, "geometry.", "kappa", g.kappa);
    check_positive(g.height_mm, "geometry.height_mm");
    check_positive(g.width_mm, "geometry.width_mm");
    check_positive(g.depth_mm, "geometry.depth_mm");
    check_positive(g.gap0_mm, "geometry.gap0_mm");
    if (!(g.kappa > 0.0 && g.kappa <= 1.0))
        throw ConfigError("geometry.kappa", "must be in (0, 1]");
    return g;
}

OpticalModel parse_optics(const nlohmann::json& obj) {
    reject_unknown_keys(obj, "optics",
                        {"type", "slope_v_per_mm", "offset_v", "range_mm", "out_of_range",
                         "csv", "samples"});
    std::string type = "linear";
    if (obj.contains("type")) {
        if (!obj.at("type").is_string())
            throw ConfigError("optics.type", "must be \"linear\" or \"lookup\"");
        type = obj.at("type").get<std::string>();
    }

    RangePolicy policy = RangePolicy::Error;
    if (obj.contains("out_of_range")) {
        const std::string p = obj.at("out_of_range").is_string()
                                  ? obj.at("out_of_range").get<std::string>()
                                  : std::string();
        if (p == "error")
            policy = RangePolicy::Error;
        else if (p == "clamp")
            policy = RangePolicy::Clamp;
        else
            throw ConfigError("optics.out_of_range", "must be \"error\" or \"clamp\"");
    }

    if (type == "lookup") {
        std::vector<SweepSample> sweep;
        if (obj.contains("samples")) {
            const auto& arr = obj.at("samples");
            if (!arr.is_array())
                throw ConfigError("optics.samples", "must be an array of [distance_mm, voltage_v]");
            for (const auto& p : arr) {
                if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
                    throw ConfigError("optics.samples", "must be an array of [distance_mm, voltage_v]");
                sweep.push_back({p[0].get<double>(), p[1].get<double>()});
            }
        } else if (obj.contains("csv") && obj.at("csv").is_string()) {
            sweep = read_sweep_csv(obj.at("csv").get<std::string>());
        } else {
            throw ConfigError("optics.csv", "lookup model needs a sweep CSV path or inline samples");
        }
        try {
            return OpticalModel::lookup(std::move(sweep), policy);
        } catch (const ParameterError& e) {
            throw ConfigError("optics", e.what());
        }
    }
    if (type != "linear")
        throw ConfigError("optics.type", "must be \"linear\" or \"lookup\"");

    double a = get_number(obj, "optics.", "slope_v_per_mm", 1.9374);
    double b = get_number(obj, "optics.", "offset_v", -1.8875);
    double x_min = 1.0, x_max = 2.0;
    if (obj.contains("range_mm")) {
        const auto& r = obj.at("range_mm");
        if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number())
            throw ConfigError("optics.range_mm", "must be [x_min, x_max]");
        x_min = r[0].get<double>();
        x_max = r[1].get<double>();
    }
    if (!(a > 0.0))
        throw ConfigError("optics.slope_v_per_mm", "must be positive");
    if (!(x_min < x_max))
        throw ConfigError("optics.range_mm", "x_min must be below x_max");
    return OpticalModel::linear(a, b, x_min, x_max, policy);
}

PigmentMix parse_pigment(const nlohmann::json& obj) {
    reject_unknown_keys(obj, "pigment", {"white_fraction", "rho_black"});
    PigmentMix p;
    p.white_fraction = get_number(obj, "pigment.", "white_fraction", p.white_fraction);
    p.rho_black = get_number(obj, "pigment.", "rho_black", p.rho_black);
    if (!(p.white_fraction >= 0.0 && p.white_fraction <= 1.0))
        throw ConfigError("pigment.white_fraction", "must be in [0, 1]");
    if (!(p.rho_black > 0.0 && p.rho_black < 1.0))
        throw ConfigError("pigment.rho_black", "must be in (0, 1)");
    return p;
}

DetectorParams parse_detector(const nlohmann::json& obj) {
    reject_unknown_keys(obj, "detector",
                        {"on_threshold_v", "off_threshold_v", "min_hold_s"});
    DetectorParams d;
    d.on_threshold_v = get_number(obj, "detector.", "on_threshold_v", d.on_threshold_v);
    d.off_threshold_v = get_number(obj, "detector.", "off_threshold_v", d.off_threshold_v);
    d.min_hold_s = get_number(obj, "detector.", "min_hold_s", d.min_hold_s);
    d.validate();
    return d;
}

const nlohmann::json& object_field(const nlohmann::json& doc, const std::string& key) {
    static const nlohmann::json empty = nlohmann::json::object();
    if (!doc.contains(key))
        return empty;
    if (!doc.at(key).is_object())
        throw ConfigError(key, "must be an object");
    return doc.at(key);
}

} // namespace

Config parse_config(const nlohmann::json& doc) {
    if (!doc.is_object())
        throw ConfigError("config", "top level must be a JSON object");
    reject_unknown_keys(doc, "",
                        {"material", "geometry", "optics", "pigment", "noise_rms_v", "seed",
                         "detector"});

    Config cfg;
    cfg.material = parse_material(object_field(doc, "material"));
    cfg.geometry = parse_geometry(object_field(doc, "geometry"));
    cfg.optics = parse_optics(object_field(doc, "optics"));
    cfg.pigment = parse_pigment(object_field(doc, "pigment"));
    cfg.noise_rms_v = get_number(doc, "", "noise_rms_v", cfg.noise_rms_v);
    check_non_negative(cfg.noise_rms_v, "noise_rms_v");
    if (doc.contains("seed")) {
        if (!doc.at("seed").is_number_unsigned() && !doc.at("seed").is_number_integer())
            throw ConfigError("seed", "must be a non-negative integer");
        const auto s = doc.at("seed").get<long long>();
        if (s < 0)
            throw ConfigError("seed", "must be a non-negative integer");
        cfg.seed = static_cast<std::uint64_t>(s);
    }
    cfg.detector = parse_detector(object_field(doc, "detector"));
    return cfg;
}

Config load_config(const std::string& path) {
    if (path.empty() || path == "default")
        return Config{};
    std::ifstream f(path);
    if (!f)
        throw IoError("cannot open config file " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config", std::string("parse error: ") + e.what());
    }
    return parse_config(doc);
}

nlohmann::json config_to_json(const Config& cfg) {
    nlohmann::json optics;
    if (cfg.optics.is_linear()) {
        optics = {{"type", "linear"},
                  {"slope_v_per_mm", cfg.optics.slope()},
                  {"offset_v", cfg.optics.offset()},
                  {"range_mm", {cfg.optics.x_min(), cfg.optics.x_max()}},
                  {"out_of_range",
                   cfg.optics.policy() == RangePolicy::Error ? "error" : "clamp"}};
    } else {
        // lookup models echo their sample table inline for inspection
        nlohmann::json pts = nlohmann::json::array();
        for (const auto& s : cfg.optics.samples())
            pts.push_back({s.distance_mm, s.voltage_v});
        optics = {{"type", "lookup"},
                  {"samples", pts},
                  {"out_of_range",
                   cfg.optics.policy() == RangePolicy::Error ? "error" : "clamp"}};
    }
    return {
        {"material",
         {{"c10_mpa", cfg.material.c10_mpa},
          {"c01_mpa", cfg.material.c01_mpa},
          {"damping_n_s_per_mm", cfg.material.damping_n_s_per_mm},
          {"deadzone_mm", cfg.material.deadzone_mm}}},
        {"geometry",
         {{"height_mm", cfg.geometry.height_mm},
          {"width_mm", cfg.geometry.width_mm},
          {"depth_mm", cfg.geometry.depth_mm},
          {"gap0_mm", cfg.geometry.gap0_mm},
          {"kappa", cfg.geometry.kappa}}},
        {"optics", optics},
        {"pigment",
         {{"white_fraction", cfg.pigment.white_fraction},
          {"rho_black", cfg.pigment.rho_black}}},
        {"noise_rms_v", cfg.noise_rms_v},
        {"seed", cfg.seed},
        {"detector",
         {{"on_threshold_v", cfg.detector.on_threshold_v},
          {"off_threshold_v", cfg.detector.off_threshold_v},
          {"min_hold_s", cfg.detector.min_hold_s}}},
    };
}

} // namespace skinsim
