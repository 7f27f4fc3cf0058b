#pragma once

#include <functional>
#include <vector>

#include "mhn/partition.hpp"
#include "mhn/rational.hpp"

namespace mhn {

/// Element of Q[[x hbar^{-1}, hbar]] on a finite grid: entry c[d][m] is the
/// coefficient of x^d hbar^{m-d} for 0 <= d <= D, 0 <= m <= M. Coefficients
/// are guaranteed correct on the (valid_D, valid_M) sub-grid; operations
/// that consume neighbouring cells shrink these bounds.
struct BivariateSeries {
    unsigned D = 0, M = 0;
    unsigned valid_D = 0, valid_M = 0;
    std::vector<std::vector<Rational>> c;

    BivariateSeries(unsigned D_, unsigned M_);

    /// Stored coefficient; exact zero for negative indices (no such
    /// monomial), InvalidWindow beyond storage.
    Rational at(int d, int m) const;
};

/// Stirling numbers of the second kind, computed by the triangular
/// recurrence S(n,k) = k S(n-1,k) + S(n-1,k-1) and grown on demand.
class StirlingTable {
 public:
    const Integer& get(unsigned n, unsigned k);

 private:
    std::vector<std::vector<Integer>> rows_;
    Integer zero_ = 0;
};

/// Number of weakly monotone transposition sequences of length m in the
/// symmetric group on d symbols (transitivity not required):
/// f(d,m) = (d-1) f(d,m-1) + f(d-1,m), f(d,0) = 1, f(0,m) = [m = 0].
Integer f_count(unsigned d, unsigned m);

/// Asserts f(d,m) = S(d+m-1, d-1) on the rectangle 1 <= d <= d_max,
/// 0 <= m <= m_max; throws IdentityViolated on mismatch.
void stirling_identity_check(unsigned d_max, unsigned m_max);

/// Z(x,hbar) = 1 + sum_{d>=1, m>=0} f(d,m)/d! x^d hbar^{m-d}.
BivariateSeries wave_function_direct(unsigned D, unsigned M);

/// The same wave function assembled as exp of the diagonal free-energy
/// generating series: cell (d, m) of the exponent collects
/// H_{g,n}(lambda)/prod mult! over partitions lambda of d with n parts and
/// 2g - 2 + n = m - d. hurwitz supplies the values (any exact pipeline).
BivariateSeries wave_function_from_free_energies(
    unsigned D, unsigned M,
    const std::function<Rational(unsigned, const Partition&)>& hurwitz);

/// (x hbar^2 d^2/dx^2 - hbar d/dx + 1) Z restricted to the sub-grid where
/// every consumed cell is valid; the caller asserts it vanishes.
BivariateSeries quantum_curve_residual(const BivariateSeries& z);

}  // namespace mhn
