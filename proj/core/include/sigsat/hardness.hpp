#ifndef SIGSAT_HARDNESS_HPP
#define SIGSAT_HARDNESS_HPP

#include "sigsat/bigint.hpp"
#include "sigsat/formula.hpp"

#include <string>

namespace sigsat {

/// Advisory hardness classification labels.
inline constexpr const char* kSubExponentialLabel = "sub-exponential-indicated";
inline constexpr const char* kExponentialLabel = "exponential";

/// How large the pseudomodel search space at one sigma target is, in absolute
/// and per-variable terms. The classification compares log2(bound) against
/// sqrt(n)*log2(n) + c; it is a heuristic reading of the bound, not a proof.
struct HardnessReport {
    Count sigma0 = 0;
    BigCount bound;
    double log2_bound = 0.0;
    int num_variables = 0;
    double log2_per_n = 0.0;
    double log2_per_sqrt_n = 0.0;
    double threshold = 0.0;
    std::string classification;
};

/// Evaluates the pseudomodel bound at sigma0 and classifies it.
/// threshold_constant is the additive constant c in sqrt(n)*log2(n) + c.
HardnessReport hardness_report(const Formula& f, Count sigma0,
                               double threshold_constant = 4.0);

} // namespace sigsat

#endif
