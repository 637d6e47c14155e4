#pragma once

#include <cstdint>

namespace ringlab {

enum class OutputFormat { text, json };

/// Global knobs for construction and analysis. Reports record the config
/// they were produced under.
struct Config {
    std::uint64_t max_ring_size = 65536;  // hard cap on |R| for any construction
    std::uint64_t table_cap = 4096;       // precompute op tables when |R| <= this
    std::uint64_t mu1_bound = 1000000;    // give up on sweeps past this exponential period
    OutputFormat output = OutputFormat::text;
    std::uint64_t rng_seed = 0x72696e676c6162ULL;  // sampled law checks
};

inline const Config& default_config() {
    static const Config cfg{};
    return cfg;
}

} // namespace ringlab
