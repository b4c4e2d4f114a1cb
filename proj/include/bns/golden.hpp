#pragma once

#include "bns/exact.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace bns {

// Reference B(n,s) values for n = 2..20 (nonzero entries only), compiled in.
const std::map<std::pair<int, int>, ExactInt>& golden_table();

// Golden value for (n,s); vanishing entries (s > n/2) resolve to 0, keys
// outside the tabulated n range to nullopt.
std::optional<ExactInt> golden_value(int n, int s);

int golden_n_max();

// Path of the versioned JSON copy of the table shipped with the sources.
std::string golden_data_path();

}  // namespace bns
