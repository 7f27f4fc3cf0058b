#pragma once

#include <string>
#include <vector>

#include "mhn/rational.hpp"

namespace mhn {

/// Integer partition; canonical form is weakly decreasing with positive parts.
using Partition = std::vector<unsigned>;

/// Sorted copy in canonical (weakly decreasing) order; zero parts dropped.
Partition canonical_partition(Partition mu);

/// Sum of the parts.
unsigned partition_weight(const Partition& mu);

/// Product of mult! over the distinct part values.
Integer multiplicity_factorial(const Partition& mu);

/// All partitions of d in canonical form (d = 0 gives the empty partition).
std::vector<Partition> partitions_of(unsigned d);

std::string partition_to_string(const Partition& mu);

/// Parses "3,2,1" (any order, canonicalised); rejects empty and zero parts.
Partition partition_from_string(const std::string& s);

}  // namespace mhn
