#pragma once

#include <cstdint>

namespace cyclespec {

// Hard size limits. Exceeding one yields an explicit refusal, never a silent
// approximation. All are configuration, not constants.
struct Limits {
    int max_n_general = 16;  // spectrum of an arbitrary graph
    int max_chords = 24;     // spectrum of Hamilton cycle + chords
    int max_census_n = 7;    // exhaustive labeled census
    int max_stream_n = 11;   // graph6 stream census
    int max_family_n = 12;   // explicit container-family enumeration
};

struct RunConfig {
    int K = 1;  // the "sufficiently large constant"; 1 keeps small instances nontrivial
    Limits limits;
    int jobs = 1;
    std::uint64_t seed = 0;
    // Logarithm base is fixed at 2 throughout.
};

}  // namespace cyclespec
