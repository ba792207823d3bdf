#ifndef ADNF_IO_HPP
#define ADNF_IO_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "adnf/types.hpp"

namespace adnf {

enum class FeatureFormat {
    Auto,  // by extension: .json -> Json, anything else -> Csv
    Csv,   // no header, comma-separated decimal floats, one row per sample
    Json,  // array of arrays of numbers
};

// Parses a feature file; rows are validated equal-length and finite.
// Throws ParseError (with a line number for CSV) on malformed input.
FeatureMatrix load_features(const std::filesystem::path& path,
                            FeatureFormat format = FeatureFormat::Auto);

// Writes CSV with round-trip precision (%.17g).
void save_features(const FeatureMatrix& x, const std::filesystem::path& path);

// Integer labels, one per line.
std::vector<int> load_labels(const std::filesystem::path& path);
void save_labels(std::span<const int> labels, const std::filesystem::path& path);

struct LoadedModel {
    ModelState state;
    ADNFConfig config;
};

// Versioned JSON snapshot of the full model (clusters with histories and
// trackers, global maxima, step counter) plus its configuration. Numeric
// fields round-trip bit-exactly.
void save_model(const ModelState& state, const ADNFConfig& cfg,
                const std::filesystem::path& path);
LoadedModel load_model(const std::filesystem::path& path);

// One mixture component of a synthetic stream. The mean drifts linearly:
// at point index t of n, the effective mean is mean + drift * (t / n).
struct MixtureComponent {
    std::vector<double> mean;
    double stddev = 1.0;  // isotropic, >= 0
    double weight = 1.0;
    std::vector<double> drift;  // empty = no drift
};

struct SyntheticStreamSpec {
    std::vector<MixtureComponent> components;  // weights must sum to 1
    std::size_t count = 0;
    std::uint64_t seed = 0;

    void validate() const;  // throws ConfigError
};

struct GeneratedStream {
    FeatureMatrix points;
    std::vector<int> components;  // ground-truth component index per point
};

// Seeded Gaussian mixture draw with per-component drift; identical seeds
// produce identical streams.
GeneratedStream generate_stream(const SyntheticStreamSpec& spec);

// Reads a stream spec from JSON: {"seed":..,"count":..,"components":[
//   {"mean":[..],"std":..,"weight":..,"drift":[..]}, ..]}.
SyntheticStreamSpec load_stream_spec(const std::filesystem::path& path);

// Applies the key/value pairs of a JSON config file over `base`; keys match
// the ADNFConfig field names. Unknown keys raise ParseError.
ADNFConfig load_config(const std::filesystem::path& path, const ADNFConfig& base = {});

}  // namespace adnf

#endif  // ADNF_IO_HPP
