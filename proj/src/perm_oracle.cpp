#include "mhn/perm_oracle.hpp"

#include <numeric>
#include <utility>
#include <vector>

namespace mhn {

namespace {

/// Exhaustive DFS over transposition sequences. The running product lives in
/// perm_ (perm_[i] = image of i); appending the transposition (a b) on the
/// right swaps the entries at positions a and b, so each edge is O(1) to
/// apply and to undo.
class Enumerator {
 public:
    Enumerator(unsigned d, unsigned m, bool monotone, bool transitive)
        : d_(d), m_(m), monotone_(monotone), transitive_(transitive),
          perm_(d), parent_(d) {
        std::iota(perm_.begin(), perm_.end(), 0u);
    }

    OracleCounts run() {
        counts_.total = 0;
        step(0, 1);
        return std::move(counts_);
    }

 private:
    void step(unsigned i, unsigned min_b) {
        if (i == m_) {
            leaf();
            return;
        }
        for (unsigned b = monotone_ ? min_b : 1; b < d_; ++b) {
            for (unsigned a = 0; a < b; ++a) {
                std::swap(perm_[a], perm_[b]);
                edges_.emplace_back(a, b);
                step(i + 1, b);
                edges_.pop_back();
                std::swap(perm_[a], perm_[b]);
            }
        }
    }

    void leaf() {
        if (transitive_ && !connected()) return;
        counts_.total += 1;
        counts_.by_type[cycle_type()] += 1;
    }

    bool connected() {
        if (d_ <= 1) return true;
        std::iota(parent_.begin(), parent_.end(), 0u);
        unsigned merges = 0;
        for (auto [a, b] : edges_) {
            unsigned ra = find(a), rb = find(b);
            if (ra != rb) {
                parent_[ra] = rb;
                ++merges;
            }
        }
        return merges == d_ - 1;
    }

    unsigned find(unsigned v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    Partition cycle_type() {
        Partition type;
        std::vector<bool> seen(d_, false);
        for (unsigned s = 0; s < d_; ++s) {
            if (seen[s]) continue;
            unsigned len = 0;
            for (unsigned v = s; !seen[v]; v = perm_[v]) {
                seen[v] = true;
                ++len;
            }
            type.push_back(len);
        }
        return canonical_partition(std::move(type));
    }

    unsigned d_, m_;
    bool monotone_, transitive_;
    std::vector<unsigned> perm_, parent_;
    std::vector<std::pair<unsigned, unsigned>> edges_;
    OracleCounts counts_;
};

}  // namespace

OracleCounts count_factorisations(unsigned d, unsigned m, bool monotone_only,
                                  bool transitive_only) {
    return Enumerator(d, m, monotone_only, transitive_only).run();
}

Integer monotone_sequence_count(unsigned d, unsigned m) {
    // f(d, m) = (d-1) f(d, m-1) + f(d-1, m): split on whether the final
    // (largest-entry) transposition moves the symbol d.
    std::vector<Integer> row(m + 1, Integer(0));
    row[0] = 1;  // d = 0
    for (unsigned dd = 1; dd <= d; ++dd) {
        std::vector<Integer> next(m + 1);
        next[0] = 1;
        for (unsigned mm = 1; mm <= m; ++mm)
            next[mm] = Integer(dd - 1) * next[mm - 1] + row[mm];
        row = std::move(next);
    }
    return row[m];
}

Rational oracle_hurwitz(unsigned g, const Partition& mu) {
    Partition type = canonical_partition(mu);
    if (type.empty()) throw Error("oracle_hurwitz needs a nonempty profile");
    unsigned d = partition_weight(type);
    unsigned n = static_cast<unsigned>(type.size());
    int m = 2 * static_cast<int>(g) - 2 + static_cast<int>(n) + static_cast<int>(d);
    if (m < 0) return 0;
    OracleCounts counts = count_factorisations(d, static_cast<unsigned>(m), true, true);
    auto it = counts.by_type.find(type);
    Integer hits = (it == counts.by_type.end()) ? Integer(0) : it->second;
    return make_rational(multiplicity_factorial(type) * hits, factorial(d));
}

std::map<std::pair<unsigned, Partition>, Rational> oracle_hurwitz_sweep(unsigned d,
                                                                        unsigned m) {
    std::map<std::pair<unsigned, Partition>, Rational> out;
    OracleCounts counts = count_factorisations(d, m, true, true);
    Integer dfact = factorial(d);
    for (const auto& [type, hits] : counts.by_type) {
        int t = static_cast<int>(m) + 2 - static_cast<int>(type.size()) - static_cast<int>(d);
        if (t < 0 || t % 2 != 0) continue;
        unsigned g = static_cast<unsigned>(t / 2);
        out[{g, type}] = make_rational(multiplicity_factorial(type) * hits, dfact);
    }
    return out;
}

}  // namespace mhn
