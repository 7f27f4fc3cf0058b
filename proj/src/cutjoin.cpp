#include "mhn/cutjoin.hpp"

#include <algorithm>

namespace mhn {

Rational h01(unsigned mu) {
    if (mu == 0) throw Error("h01 needs a positive part");
    return make_rational(central_binomial(mu), Integer(2) * mu * (2 * mu - 1));
}

Rational h02(unsigned a, unsigned b) {
    if (a == 0 || b == 0) throw Error("h02 needs positive parts");
    return make_rational(central_binomial(a) * central_binomial(b),
                         Integer(2) * (a + b));
}

const Rational& HurwitzTable::get(unsigned g, const Partition& mu_in) {
    Partition mu = canonical_partition(mu_in);
    if (mu.empty()) throw Error("Hurwitz profile must be nonempty");
    auto key = std::make_pair(g, mu);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    Rational value;
    size_t n = mu.size();
    if (g == 0 && n == 1) {
        value = h01(mu[0]);
    } else if (g == 0 && n == 2) {
        value = h02(mu[0], mu[1]);
    } else {
        value = cutjoin_rhs_over_head(g, mu, 0, *this);
    }
    return memo_.emplace(std::move(key), std::move(value)).first->second;
}

Rational cutjoin_rhs_over_head(unsigned g, const Partition& mu, size_t head_index,
                               HurwitzTable& table) {
    if (head_index >= mu.size()) throw Error("head index out of range");
    unsigned head = mu[head_index];
    Partition rest;
    for (size_t i = 0; i < mu.size(); ++i)
        if (i != head_index) rest.push_back(mu[i]);

    Rational rhs(0);

    // Join: merge the head with another marked part.
    for (size_t i = 0; i < rest.size(); ++i) {
        Partition merged;
        merged.reserve(rest.size());
        for (size_t j = 0; j < rest.size(); ++j)
            merged.push_back(j == i ? head + rest[j] : rest[j]);
        rhs += Rational(head + rest[i]) * table.get(g, merged);
    }

    // Cut, staying connected: the head splits and the genus drops.
    if (g >= 1) {
        for (unsigned alpha = 1; alpha < head; ++alpha) {
            unsigned beta = head - alpha;
            Partition next = rest;
            next.push_back(alpha);
            next.push_back(beta);
            rhs += Rational(alpha) * Rational(beta) * table.get(g - 1, next);
        }
    }

    // Cut, disconnecting: ordered pairs of stable-or-unstable factors over
    // every genus split and every distribution of the remaining parts.
    size_t r = rest.size();
    for (unsigned alpha = 1; alpha < head; ++alpha) {
        unsigned beta = head - alpha;
        for (unsigned g1 = 0; g1 <= g; ++g1) {
            unsigned g2 = g - g1;
            for (size_t mask = 0; mask < (size_t{1} << r); ++mask) {
                Partition left{alpha}, right{beta};
                for (size_t j = 0; j < r; ++j)
                    (mask >> j & 1 ? left : right).push_back(rest[j]);
                rhs += Rational(alpha) * Rational(beta) * table.get(g1, left) *
                       table.get(g2, right);
            }
        }
    }

    return rhs / Rational(head);
}

Rational cutjoin_hurwitz(unsigned g, const Partition& mu) {
    HurwitzTable table;
    return table.get(g, mu);
}

}  // namespace mhn
