#pragma once

#include <string>
#include <vector>

namespace cmfd {

enum class Arm { block, keypoint, hybrid };

Arm parse_arm(const std::string& name);  // throws std::invalid_argument
std::string arm_name(Arm arm);

/// Every detector tunable, with defaults. Serialized as a flat
/// `key = value` config file; CLI flags override file values, file
/// overrides defaults.
struct DetectorConfig {
    // block arm
    int block_size = 16;
    int block_stride = 1;
    double quant_factor = 0.1;       // sort-key quantization, in std-dev units
    int sort_window = 8;             // rows compared after lexicographic sort
    double block_dist_threshold = 0.3;  // Euclidean, standardized units
    double min_shift = 32;           // minimum spatial separation, both arms

    // keypoint arm
    double sigma0 = 1.6;
    int scales_per_octave = 3;
    int max_octaves = 4;
    double contrast_threshold = 0.03;
    double edge_ratio = 10;
    double match_ratio = 0.6;

    // fusion and post-processing
    double cluster_tolerance = 8;    // L-inf shift-cluster radius, pixels
    int t_block = 10;                // accept: block support alone
    int t_kp = 4;                    // accept: keypoint support alone
    int t_mix = 6;                   // accept: total support with both arms present
    int intensity_patch = 9;         // odd patch side for the NCC filter
    double min_corr = 0.7;           // NCC acceptance threshold
    int close_radius = 2;            // morphological close radius
    int min_area = 64;               // drop smaller mask components
};

struct ConfigKey {
    std::string name;
    std::string description;
    double min_value;
    double max_value;
    bool is_integer;
    double (*get)(const DetectorConfig&);
    void (*set)(DetectorConfig&, double);
};

/// The full key table (single source of truth for file parsing, CLI flags,
/// and --help text).
const std::vector<ConfigKey>& config_keys();

/// Applies `key = value` lines from a config file onto cfg. '#' starts a
/// comment. Unknown keys, malformed lines, and out-of-range values throw
/// std::invalid_argument naming the offending key.
void apply_config_file(DetectorConfig& cfg, const std::string& path);

/// Sets one key by name with range validation; throws on violations.
void set_config_value(DetectorConfig& cfg, const std::string& key, double value);

}  // namespace cmfd
