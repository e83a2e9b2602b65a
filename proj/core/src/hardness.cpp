#include "sigsat/hardness.hpp"

#include "sigsat/counting.hpp"

#include <cmath>

namespace sigsat {

HardnessReport hardness_report(const Formula& f, Count sigma0, double threshold_constant) {
    const auto d = decompose(occurrence_profile(f));
    HardnessReport r;
    r.sigma0 = sigma0;
    r.bound = count_pseudomodels(d, sigma0);
    r.log2_bound = log2_big(r.bound);
    r.num_variables = f.num_variables;
    const double n = static_cast<double>(f.num_variables);
    r.log2_per_n = n > 0 ? r.log2_bound / n : 0.0;
    r.log2_per_sqrt_n = n > 0 ? r.log2_bound / std::sqrt(n) : 0.0;
    r.threshold = n > 0 ? std::sqrt(n) * std::log2(n) + threshold_constant
                        : threshold_constant;
    r.classification =
        r.log2_bound <= r.threshold ? kSubExponentialLabel : kExponentialLabel;
    return r;
}

} // namespace sigsat
