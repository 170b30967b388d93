#pragma once

#include <vector>

#include "elliptic_bohr/condenser.hpp"

namespace ebohr::detail {

/// In-place DFT: data[k] <- sum_j data[j] exp(sign * 2 pi i j k / M), unnormalized.
/// sign is -1 (analysis) or +1 (synthesis). Thread-safe.
void dft(std::vector<cplx>& data, int sign);

}  // namespace ebohr::detail
