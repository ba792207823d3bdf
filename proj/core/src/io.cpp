#include "adnf/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "adnf/random.hpp"

namespace adnf {

namespace {

using nlohmann::json;

constexpr int kSnapshotVersion = 1;

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    return in;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot open " + path.string() + " for writing");
    }
    return out;
}

FeatureMatrix load_features_csv(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::vector<double> row;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            const std::size_t comma = std::min(line.find(',', pos), line.size());
            const std::string field = line.substr(pos, comma - pos);
            char* end = nullptr;
            const double value = std::strtod(field.c_str(), &end);
            if (field.empty() || end != field.c_str() + field.size() || !std::isfinite(value)) {
                throw ParseError(path.string() + ":" + std::to_string(line_no) +
                                 ": invalid numeric field '" + field + "'");
            }
            row.push_back(value);
            pos = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError(path.string() + ":" + std::to_string(line_no) + ": row has " +
                             std::to_string(row.size()) + " fields, expected " +
                             std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError(path.string() + ":1: no data rows");
    }
    return FeatureMatrix::from_rows(rows);
}

FeatureMatrix load_features_json(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    if (!doc.is_array() || doc.empty()) {
        throw ParseError(path.string() + ": expected a non-empty array of arrays");
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(doc.size());
    for (std::size_t r = 0; r < doc.size(); ++r) {
        const json& row = doc[r];
        if (!row.is_array()) {
            throw ParseError(path.string() + ": row " + std::to_string(r) + " is not an array");
        }
        std::vector<double> values;
        values.reserve(row.size());
        for (const json& v : row) {
            if (!v.is_number()) {
                throw ParseError(path.string() + ": non-numeric entry in row " +
                                 std::to_string(r));
            }
            values.push_back(v.get<double>());
        }
        rows.push_back(std::move(values));
    }
    try {
        return FeatureMatrix::from_rows(rows);
    } catch (const Error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

json config_to_json(const ADNFConfig& cfg) {
    return json{{"c", cfg.c},
                {"m0", cfg.m0},
                {"lambda_min", cfg.lambda_min},
                {"rho_merge", cfg.rho_merge},
                {"k_sigma", cfg.k_sigma},
                {"gamma", cfg.gamma},
                {"eps_split", cfg.eps_split},
                {"min_samples", cfg.min_samples},
                {"min_split_cardinality", cfg.min_split_cardinality},
                {"m_max", cfg.m_max},
                {"fcm_max_iter", cfg.fcm_max_iter},
                {"fcm_tol", cfg.fcm_tol},
                {"numeric_eps", cfg.numeric_eps},
                {"history_cap", cfg.history_cap}};
}

ADNFConfig config_from_json(const json& j, const ADNFConfig& base) {
    ADNFConfig cfg = base;
    for (const auto& [key, value] : j.items()) {
        if (key == "c") cfg.c = value.get<std::size_t>();
        else if (key == "m0") cfg.m0 = value.get<double>();
        else if (key == "lambda_min") cfg.lambda_min = value.get<double>();
        else if (key == "rho_merge") cfg.rho_merge = value.get<double>();
        else if (key == "k_sigma") cfg.k_sigma = value.get<double>();
        else if (key == "gamma") cfg.gamma = value.get<double>();
        else if (key == "eps_split") cfg.eps_split = value.get<double>();
        else if (key == "min_samples") cfg.min_samples = value.get<std::size_t>();
        else if (key == "min_split_cardinality") cfg.min_split_cardinality = value.get<std::size_t>();
        else if (key == "m_max") cfg.m_max = value.get<double>();
        else if (key == "fcm_max_iter") cfg.fcm_max_iter = value.get<std::size_t>();
        else if (key == "fcm_tol") cfg.fcm_tol = value.get<double>();
        else if (key == "numeric_eps") cfg.numeric_eps = value.get<double>();
        else if (key == "history_cap") cfg.history_cap = value.get<std::size_t>();
        else throw ParseError("unknown config key '" + key + "'");
    }
    return cfg;
}

json cluster_to_json(const MicroCluster& mc) {
    json history = json::array();
    for (const HistoryEntry& e : mc.history) {
        history.push_back(json{{"point", e.point}, {"membership", e.membership}});
    }
    return json{{"centroid", mc.centroid},
                {"density", mc.density},
                {"fuzzy_count", mc.fuzzy_count},
                {"radius", mc.radius},
                {"fuzziness", mc.fuzziness},
                {"entropy", mc.entropy},
                {"prev_entropy", mc.prev_entropy},
                {"prev_centroid", mc.prev_centroid},
                {"anchor_centroid", mc.anchor_centroid},
                {"prev_density", mc.prev_density},
                {"history", std::move(history)},
                {"last_update_step", mc.last_update_step}};
}

MicroCluster cluster_from_json(const json& j) {
    MicroCluster mc;
    mc.centroid = j.at("centroid").get<std::vector<double>>();
    mc.density = j.at("density").get<double>();
    mc.fuzzy_count = j.at("fuzzy_count").get<double>();
    mc.radius = j.at("radius").get<double>();
    mc.fuzziness = j.at("fuzziness").get<double>();
    mc.entropy = j.at("entropy").get<double>();
    mc.prev_entropy = j.at("prev_entropy").get<double>();
    mc.prev_centroid = j.at("prev_centroid").get<std::vector<double>>();
    mc.anchor_centroid = j.at("anchor_centroid").get<std::vector<double>>();
    mc.prev_density = j.at("prev_density").get<double>();
    for (const json& e : j.at("history")) {
        mc.history.push_back(
            HistoryEntry{e.at("point").get<std::vector<double>>(), e.at("membership").get<double>()});
    }
    mc.last_update_step = j.at("last_update_step").get<std::size_t>();
    return mc;
}

}  // namespace

FeatureMatrix load_features(const std::filesystem::path& path, FeatureFormat format) {
    if (format == FeatureFormat::Auto) {
        format = path.extension() == ".json" ? FeatureFormat::Json : FeatureFormat::Csv;
    }
    return format == FeatureFormat::Json ? load_features_json(path) : load_features_csv(path);
}

void save_features(const FeatureMatrix& x, const std::filesystem::path& path) {
    std::ofstream out = open_for_write(path);
    for (std::size_t r = 0; r < x.rows(); ++r) {
        for (std::size_t c = 0; c < x.cols(); ++c) {
            if (c > 0) out << ',';
            out << format_double(x(r, c));
        }
        out << '\n';
    }
}

std::vector<int> load_labels(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    std::vector<int> labels;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        try {
            std::size_t consumed = 0;
            const int value = std::stoi(line, &consumed);
            if (consumed != line.size()) {
                throw std::invalid_argument(line);
            }
            labels.push_back(value);
        } catch (const std::exception&) {
            throw ParseError(path.string() + ":" + std::to_string(line_no) +
                             ": invalid label '" + line + "'");
        }
    }
    if (labels.empty()) {
        throw ParseError(path.string() + ":1: no labels");
    }
    return labels;
}

void save_labels(std::span<const int> labels, const std::filesystem::path& path) {
    std::ofstream out = open_for_write(path);
    for (int label : labels) {
        out << label << '\n';
    }
}

void save_model(const ModelState& state, const ADNFConfig& cfg,
                const std::filesystem::path& path) {
    json clusters = json::array();
    for (const MicroCluster& mc : state.clusters) {
        clusters.push_back(cluster_to_json(mc));
    }
    const json doc{{"version", kSnapshotVersion},
                   {"config", config_to_json(cfg)},
                   {"clusters", std::move(clusters)},
                   {"d_max", state.d_max},
                   {"p_max", state.p_max},
                   {"step", state.step}};
    std::ofstream out = open_for_write(path);
    out << doc.dump(2) << '\n';
}

LoadedModel load_model(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    try {
        const int version = doc.at("version").get<int>();
        if (version != kSnapshotVersion) {
            throw ParseError(path.string() + ": unsupported snapshot version " +
                             std::to_string(version) + ", expected " +
                             std::to_string(kSnapshotVersion));
        }
        LoadedModel loaded;
        loaded.config = config_from_json(doc.at("config"), ADNFConfig{});
        for (const json& c : doc.at("clusters")) {
            loaded.state.clusters.push_back(cluster_from_json(c));
        }
        loaded.state.d_max = doc.at("d_max").get<double>();
        loaded.state.p_max = doc.at("p_max").get<double>();
        loaded.state.step = doc.at("step").get<std::size_t>();
        return loaded;
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void SyntheticStreamSpec::validate() const {
    if (components.empty()) {
        throw ConfigError("stream spec needs at least one component");
    }
    const std::size_t d = components.front().mean.size();
    double weight_sum = 0.0;
    for (const MixtureComponent& comp : components) {
        if (comp.mean.size() != d) {
            throw ConfigError("all component means must share one dimension");
        }
        if (!comp.drift.empty() && comp.drift.size() != d) {
            throw ConfigError("drift dimension must match the mean");
        }
        if (comp.stddev < 0.0) {
            throw ConfigError("component std must be >= 0");
        }
        if (comp.weight < 0.0) {
            throw ConfigError("component weights must be >= 0");
        }
        weight_sum += comp.weight;
    }
    if (std::abs(weight_sum - 1.0) > 1e-9) {
        throw ConfigError("component weights must sum to 1");
    }
    if (count < 1) {
        throw ConfigError("stream spec count must be >= 1");
    }
}

GeneratedStream generate_stream(const SyntheticStreamSpec& spec) {
    spec.validate();
    const std::size_t d = spec.components.front().mean.size();
    Rng rng(spec.seed);

    FeatureMatrix points(spec.count, d);
    std::vector<int> sources(spec.count);
    for (std::size_t t = 0; t < spec.count; ++t) {
        const double pick = rng.uniform01();
        std::size_t chosen = spec.components.size() - 1;
        double cumulative = 0.0;
        for (std::size_t i = 0; i < spec.components.size(); ++i) {
            cumulative += spec.components[i].weight;
            if (pick < cumulative) {
                chosen = i;
                break;
            }
        }
        const MixtureComponent& comp = spec.components[chosen];
        const double progress = static_cast<double>(t) / static_cast<double>(spec.count);
        for (std::size_t k = 0; k < d; ++k) {
            const double drift = comp.drift.empty() ? 0.0 : comp.drift[k] * progress;
            points(t, k) = rng.normal(comp.mean[k] + drift, comp.stddev);
        }
        sources[t] = static_cast<int>(chosen);
    }
    return GeneratedStream{std::move(points), std::move(sources)};
}

SyntheticStreamSpec load_stream_spec(const std::filesystem::path& path) {
    std::ifstream in = open_for_read(path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    try {
        SyntheticStreamSpec spec;
        spec.seed = doc.value("seed", std::uint64_t{0});
        spec.count = doc.at("count").get<std::size_t>();
        for (const json& c : doc.at("components")) {
            MixtureComponent comp;
            comp.mean = c.at("mean").get<std::vector<double>>();
            comp.stddev = c.at("std").get<double>();
            comp.weight = c.at("weight").get<double>();
            if (c.contains("drift")) {
                comp.drift = c.at("drift").get<std::vector<double>>();
            }
            spec.components.push_back(std::move(comp));
        }
        spec.validate();
        return spec;
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

ADNFConfig load_config(const std::filesystem::path& path, const ADNFConfig& base) {
    std::ifstream in = open_for_read(path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError(path.string() + ": config must be a JSON object");
    }
    try {
        return config_from_json(doc, base);
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

}  // namespace adnf
