#ifndef DELTAQ_COMPUTE_HPP
#define DELTAQ_COMPUTE_HPP

#include <optional>
#include <string>
#include <vector>

#include "deltaq/partition.hpp"

namespace deltaq {

// Bag of optional CLI parameters; each compute target validates the subset
// it needs and ignores the rest.
struct ComputeParams {
    std::optional<int> n, k, m, j, p, alpha, x, y, z;
    std::optional<Partition> lam, mu, nu;
};

// Target ids accepted by compute_command, in canonical order.
std::vector<std::string> compute_target_names();

// Computes one target and returns its JSON encoding (compact or pretty).
// RangeError when a required parameter is missing or out of range.
std::string compute_command(const std::string& target, const ComputeParams& params,
                            bool pretty);

} // namespace deltaq

#endif
