#pragma once

#include <map>

#include "mhn/partition.hpp"
#include "mhn/rational.hpp"

namespace mhn {

/// Tallies from a full enumeration of transposition sequences in S_d.
struct OracleCounts {
    Integer total;                         // sequences passing the filters
    std::map<Partition, Integer> by_type;  // binned by product cycle type
};

/// Enumerates all length-m sequences of transpositions (a b), a < b, of
/// {1..d} by depth-first search.
///   monotone_only:   keep sequences whose larger entries b_1 <= ... <= b_m
///   transitive_only: keep sequences whose transpositions connect {1..d}
/// The product is formed left to right; its cycle type keys by_type (the
/// tallies are independent of that convention since reversal inverts the
/// product without changing its type).
OracleCounts count_factorisations(unsigned d, unsigned m, bool monotone_only,
                                  bool transitive_only);

/// Number of monotone sequences of m transpositions in S_d with no further
/// constraint; equals count_factorisations(d, m, true, false).total but runs
/// in O(d m) via the lattice recurrence.
Integer monotone_sequence_count(unsigned d, unsigned m);

/// Genus-g monotone Hurwitz number with ramification profile mu, from the
/// definition: (prod of multiplicity factorials) * N / d! where N counts
/// monotone transitive factorisations of a fixed-type product into
/// m = 2g - 2 + n + d transpositions.
Rational oracle_hurwitz(unsigned g, const Partition& mu);

/// One DFS sweep of (d, m) -> every Hurwitz number it settles: entries
/// (g, mu) for each product type mu of weight d whenever
/// 2g = m + 2 - len(mu) - d is a nonnegative even integer.
std::map<std::pair<unsigned, Partition>, Rational> oracle_hurwitz_sweep(unsigned d,
                                                                        unsigned m);

}  // namespace mhn
