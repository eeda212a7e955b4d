#pragma once

#include "crmoser/json_io.hpp"
#include "crmoser/models.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace crmoser {

struct CensusConfig {
    std::size_t n = 2;
    std::size_t m = 0;
    std::size_t samples = 200;
    std::uint64_t seed = 0;
    unsigned max_weight = 8;
    std::vector<Rational> pool{Rational(-2), Rational(-1), Rational(-1, 2), Rational(1, 2), Rational(1), Rational(2), Rational(3)};
    unsigned threads = 1;
    unsigned max_attempts = 64;
};

enum class SampleMode { RandomTerms, FormAndU, ModelFamily, Rotated, Mixed };
std::string to_string(SampleMode mode);

struct CensusSample {
    std::size_t index = 0;
    SampleMode mode = SampleMode::RandomTerms;
    // Draws rejected by the normal-form filter before this one was accepted.
    unsigned rejected = 0;
    Poly F;
    Classification result;
};

struct CensusResult {
    CensusConfig config;
    std::vector<CensusSample> samples;  // sorted by index
    std::size_t gap_violations = 0;
    std::size_t positive_controls = 0;
    std::size_t rejected = 0;
    std::map<std::size_t, std::size_t> dim_histogram;
    std::map<std::string, std::size_t> case_counts;
};

// The index-th random normal-form surface; depends only on (config, index).
Hypersurface census_surface(const CensusConfig& config, std::size_t index, SampleMode* mode = nullptr,
                            unsigned* rejected = nullptr);

CensusResult run_census(const CensusConfig& config);

Json census_to_json(const CensusResult& result, bool include_surfaces = false);

}  // namespace crmoser
