#pragma once

#include <map>
#include <utility>

#include "mhn/partition.hpp"
#include "mhn/rational.hpp"

namespace mhn {

/// Disc amplitude H_{0,1}(mu) = binom(2 mu, mu) / (2 mu (2 mu - 1)).
Rational h01(unsigned mu);

/// Cylinder amplitude
/// H_{0,2}(a, b) = binom(2a, a) binom(2b, b) / (2 (a + b)).
Rational h02(unsigned a, unsigned b);

/// Memoised table of monotone Hurwitz numbers computed by the cut-and-join
/// recursion on the head part, floored at the closed (0,1) and (0,2)
/// amplitudes. Values are keyed by (genus, canonical profile).
class HurwitzTable {
 public:
    const Rational& get(unsigned g, const Partition& mu);
    size_t size() const { return memo_.size(); }

 private:
    std::map<std::pair<unsigned, Partition>, Rational> memo_;
};

/// One value through a table local to the call.
Rational cutjoin_hurwitz(unsigned g, const Partition& mu);

/// Right-hand side of the cut-and-join recursion with mu[head_index] as the
/// distinguished part, divided by that part. Independence of head_index, and
/// agreement with the closed (0,1)/(0,2) floors, are checkable properties.
Rational cutjoin_rhs_over_head(unsigned g, const Partition& mu, size_t head_index,
                               HurwitzTable& table);

}  // namespace mhn
