#pragma once

#include <string>
#include <vector>

#include "disporder/distribution.hpp"

namespace disporder {

// Parametric families, keyed by name:
//   bernoulli(p)              p in [0,1]; boundary values degenerate
//   binomial(n, p)            n >= 0 integer, p in [0,1]
//   poisson(lambda)           lambda > 0
//   neg_binomial(r, p)        r > 0 real (failures before the r-th success), p in (0,1)
//   geometric(p)              p in (0,1); trials until first success, support {1,2,...}
//   logarithmic(p)            p in (0,1); support {1,2,...}
//   hermite(a, b)             a,b > 0; built as Poisson(a) + 2*Poisson(b)
//   discrete_uniform(a, b, step)
//
// Infinite supports are truncated at the smallest upper point that leaves the
// discarded tail mass within the budget; the deficit is recorded on the
// result. discrete_uniform is built on the exact backend (unit counts).
Distribution make_family(const std::string& name, const std::vector<double>& params,
                         TailBudget budget = {},
                         std::size_t max_support = kDefaultMaxSupport);

const std::vector<std::string>& family_names();

}  // namespace disporder
