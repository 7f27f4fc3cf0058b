#include "mhn/wave.hpp"

#include <string>

#include "mhn/errors.hpp"

namespace mhn {

BivariateSeries::BivariateSeries(unsigned D_, unsigned M_)
    : D(D_), M(M_), valid_D(D_), valid_M(M_),
      c(D_ + 1, std::vector<Rational>(M_ + 1, Rational(0))) {}

Rational BivariateSeries::at(int d, int m) const {
    if (d < 0 || m < 0) return 0;
    if (d > static_cast<int>(D) || m > static_cast<int>(M))
        throw InvalidWindow("grid cell (" + std::to_string(d) + ", " +
                            std::to_string(m) + ") outside storage");
    return c[static_cast<unsigned>(d)][static_cast<unsigned>(m)];
}

const Integer& StirlingTable::get(unsigned n, unsigned k) {
    if (k > n) return zero_;
    while (rows_.size() <= n) {
        const unsigned r = static_cast<unsigned>(rows_.size());
        std::vector<Integer> row(r + 1, Integer(0));
        if (r == 0) {
            row[0] = 1;
        } else {
            for (unsigned j = 1; j <= r; ++j) {
                const Integer above =
                    j < rows_[r - 1].size() ? rows_[r - 1][j] : Integer(0);
                row[j] = Integer(j) * above + rows_[r - 1][j - 1];
            }
        }
        rows_.push_back(std::move(row));
    }
    return rows_[n][k];
}

Integer f_count(unsigned d, unsigned m) {
    // small exact DP; purity preferred over shared memoization
    std::vector<std::vector<Integer>> f(d + 1, std::vector<Integer>(m + 1));
    for (unsigned dd = 0; dd <= d; ++dd)
        for (unsigned mm = 0; mm <= m; ++mm) {
            if (mm == 0)
                f[dd][mm] = 1;
            else if (dd == 0)
                f[dd][mm] = 0;
            else
                f[dd][mm] = Integer(dd - 1) * f[dd][mm - 1] + f[dd - 1][mm];
        }
    return f[d][m];
}

void stirling_identity_check(unsigned d_max, unsigned m_max) {
    StirlingTable table;
    for (unsigned d = 1; d <= d_max; ++d)
        for (unsigned m = 0; m <= m_max; ++m)
            if (f_count(d, m) != table.get(d + m - 1, d - 1))
                throw IdentityViolated(
                    "monotone sequence count differs from the Stirling number at d=" +
                    std::to_string(d) + ", m=" + std::to_string(m));
}

BivariateSeries wave_function_direct(unsigned D, unsigned M) {
    BivariateSeries z(D, M);
    z.c[0][0] = 1;
    for (unsigned d = 1; d <= D; ++d)
        for (unsigned m = 0; m <= M; ++m)
            z.c[d][m] = make_rational(f_count(d, m), factorial(d));
    return z;
}

namespace {

/// Grid product; both factors must be valid on the full target grid.
BivariateSeries grid_mul(const BivariateSeries& a, const BivariateSeries& b,
                         unsigned D, unsigned M) {
    BivariateSeries out(D, M);
    for (unsigned d1 = 0; d1 <= D; ++d1)
        for (unsigned m1 = 0; m1 <= M; ++m1) {
            if (a.c[d1][m1] == 0) continue;
            for (unsigned d2 = 0; d1 + d2 <= D; ++d2)
                for (unsigned m2 = 0; m1 + m2 <= M; ++m2) {
                    if (b.c[d2][m2] == 0) continue;
                    out.c[d1 + d2][m1 + m2] += a.c[d1][m1] * b.c[d2][m2];
                }
        }
    return out;
}

}  // namespace

BivariateSeries wave_function_from_free_energies(
    unsigned D, unsigned M,
    const std::function<Rational(unsigned, const Partition&)>& hurwitz) {
    // Exponent grid: log Z = sum_{g,n} hbar^{2g-2+n}/n! F_{g,n}(x,...,x);
    // the diagonal coefficient of x^d collects ordered n-tuples summing to d,
    // i.e. each partition weighted by n!/prod mult!; the 1/n! cancels.
    BivariateSeries log_z(D, M);
    log_z.c[0][0] = 0;
    for (unsigned d = 1; d <= D; ++d) {
        for (const Partition& lambda : partitions_of(d)) {
            const unsigned n = static_cast<unsigned>(lambda.size());
            const Integer weight = multiplicity_factorial(lambda);
            for (unsigned g = 0;; ++g) {
                const int m = 2 * static_cast<int>(g) - 2 + static_cast<int>(n) +
                              static_cast<int>(d);
                if (m > static_cast<int>(M)) break;
                if (m < 0) continue;
                log_z.c[d][static_cast<unsigned>(m)] +=
                    hurwitz(g, lambda) / Rational(weight);
            }
        }
    }

    // exp via the x-grading: the exponent has no d = 0 cells, so terms of
    // order k in the exponential only touch d >= k and the sum is finite.
    BivariateSeries z(D, M);
    z.c[0][0] = 1;
    BivariateSeries term(D, M);
    term.c[0][0] = 1;
    for (unsigned k = 1; k <= D; ++k) {
        term = grid_mul(term, log_z, D, M);
        const Rational inv_k = make_rational(1, k);
        for (unsigned d = 0; d <= D; ++d)
            for (unsigned m = 0; m <= M; ++m) {
                term.c[d][m] *= inv_k;
                z.c[d][m] += term.c[d][m];
            }
    }
    return z;
}

BivariateSeries quantum_curve_residual(const BivariateSeries& z) {
    if (z.valid_D == 0)
        throw InvalidWindow("residual needs at least two columns of x-validity");
    BivariateSeries r(z.valid_D - 1, z.valid_M);
    for (unsigned d = 0; d <= r.D; ++d)
        for (unsigned m = 0; m <= r.M; ++m) {
            // x hbar^2 d^2/dx^2 pulls from (d+1, m-1); hbar d/dx from (d+1, m)
            const Rational from_second =
                Rational((d + 1) * d) * z.at(static_cast<int>(d) + 1,
                                             static_cast<int>(m) - 1);
            const Rational from_first =
                Rational(d + 1) * z.at(static_cast<int>(d) + 1,
                                       static_cast<int>(m));
            r.c[d][m] = from_second - from_first + z.at(static_cast<int>(d),
                                                        static_cast<int>(m));
        }
    return r;
}

}  // namespace mhn
