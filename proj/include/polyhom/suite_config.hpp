#pragma once

#include <cstdint>
#include <stdexcept>

#include "polyhom/field.hpp"

namespace polyhom {

/// Configuration of the verification suites. All randomness derives from the
/// seed through SplitMix64 substreams, so reports are reproducible.
struct SuiteConfig {
    std::uint64_t seed = 1;
    int instance_count = 50;
    int max_gens = 6;
    int max_degree = 6;
    int piece_bound = 12;
    FieldSpec field = FieldSpec::prime(32003);
    int artin_rees_bound = 16;
    int kpoly_ses_count = 100;
    bool rationals_pass = true;  // small extra pass over Q when field is prime

    void validate() const {
        if (instance_count < 0) throw std::invalid_argument("SuiteConfig: negative count");
        if (max_gens <= 0 || max_degree <= 0 || piece_bound <= 0 || artin_rees_bound <= 0)
            throw std::invalid_argument("SuiteConfig: bounds must be positive");
    }
};

}  // namespace polyhom
