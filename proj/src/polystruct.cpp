#include "mhn/polystruct.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "mhn/errors.hpp"

namespace mhn {

Rational CoefficientTensor::coeff(const std::vector<unsigned>& a) const {
    auto it = coeffs.find(a);
    return it == coeffs.end() ? Rational(0) : it->second;
}

bool CoefficientTensor::is_symmetric() const {
    for (const auto& [a, c] : coeffs) {
        std::vector<unsigned> s = a;
        std::sort(s.begin(), s.end());
        do {
            if (coeff(s) != c) return false;
        } while (std::next_permutation(s.begin(), s.end()));
    }
    return true;
}

int CoefficientTensor::total_degree() const {
    int deg = -1;
    for (const auto& [a, c] : coeffs) {
        int sum = 0;
        for (unsigned e : a) sum += static_cast<int>(e);
        deg = std::max(deg, sum);
    }
    return deg;
}

namespace {

std::string tuple_to_string(const std::vector<unsigned>& a) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ")";
    return os.str();
}

}  // namespace

CoefficientTensor omega_to_C(const PoleBasisDifferential& w) {
    if (2 * static_cast<int>(w.g) - 2 + static_cast<int>(w.n) < 1)
        throw NotStable("the derivative-basis conversion needs a stable level");
    const int a_max = 3 * static_cast<int>(w.g) - 3 + static_cast<int>(w.n);
    std::vector<std::map<int, Rational>> pole;  // pole[a] = decomposition of f_a'
    for (int a = 0; a <= a_max; ++a)
        pole.push_back(f_prime_pole_coeffs(static_cast<unsigned>(a)));

    // Keys hold pole orders in slots not yet converted and a-indices in
    // converted ones; slots are converted left to right.
    std::map<std::vector<int>, Rational> current;
    for (const auto& [ks, c] : w.coeffs) current.emplace(ks, c);

    for (unsigned slot = 0; slot < w.n; ++slot) {
        std::map<std::vector<int>, std::map<int, Rational>> groups;
        for (const auto& [key, c] : current) {
            std::vector<int> rest = key;
            rest.erase(rest.begin() + slot);
            groups[rest][key[slot]] += c;
        }
        std::map<std::vector<int>, Rational> next;
        for (auto& [rest, column] : groups) {
            for (int a = a_max; a >= 0; --a) {
                const int top = 2 * a + 2;
                auto it = column.find(top);
                if (it == column.end() || it->second == 0) continue;
                const Rational d = it->second / pole[a].at(top);
                for (const auto& [k, pc] : pole[a]) column[k] -= d * pc;
                std::vector<int> key = rest;
                key.insert(key.begin() + slot, a);
                next[key] = d;
            }
            for (const auto& [k, residual] : column)
                if (residual != 0)
                    throw BasisMembershipViolated(
                        "pole order " + std::to_string(k) +
                        " is not reachable from the derivative basis");
        }
        current = std::move(next);
    }

    CoefficientTensor out;
    out.g = w.g;
    out.n = w.n;
    for (const auto& [key, c] : current) {
        if (c == 0) continue;
        std::vector<unsigned> a(key.begin(), key.end());
        int sum = 0;
        for (unsigned e : a) sum += static_cast<int>(e);
        if (sum > a_max)
            throw BasisMembershipViolated(
                "monomial " + tuple_to_string(a) + " breaks the degree bound");
        out.coeffs.emplace(std::move(a), c);
    }
    return out;
}

Rational evaluate_P(const CoefficientTensor& t, const std::vector<Rational>& args) {
    if (args.size() != t.n)
        throw ArityMismatch("expected " + std::to_string(t.n) + " arguments, got " +
                            std::to_string(args.size()));
    Rational total = 0;
    for (const auto& [a, c] : t.coeffs) {
        Rational term = c;
        for (std::size_t i = 0; i < a.size(); ++i)
            term *= pow_rational(args[i], static_cast<long>(a[i]));
        total += term;
    }
    return total;
}

Rational hurwitz_from_P(const CoefficientTensor& t, const Partition& mu) {
    const Partition p = canonical_partition(mu);
    std::vector<Rational> args;
    Rational prefactor = 1;
    for (unsigned part : p) {
        args.emplace_back(part);
        prefactor *= Rational(central_binomial(part));
    }
    return prefactor * evaluate_P(t, args);
}

namespace {

using Monomials = std::map<std::vector<unsigned>, Rational>;

void drop_zeros(Monomials& m) {
    for (auto it = m.begin(); it != m.end();)
        it = (it->second == 0) ? m.erase(it) : std::next(it);
}

/// Collapses the first slot of P_{g,n+1} by evaluating it at the constant c.
Monomials pin_first_slot(const CoefficientTensor& t, const Rational& c) {
    Monomials out;
    for (const auto& [a, coeff] : t.coeffs) {
        std::vector<unsigned> rest(a.begin() + 1, a.end());
        out[rest] += coeff * pow_rational(c, static_cast<long>(a[0]));
    }
    drop_zeros(out);
    return out;
}

void require_same(const Monomials& lhs, const Monomials& rhs, const char* what) {
    if (lhs == rhs) return;
    for (const auto& [a, c] : lhs)
        if (rhs.find(a) == rhs.end() || rhs.at(a) != c)
            throw IdentityViolated(std::string(what) + " fails at monomial " +
                                   tuple_to_string(a));
    for (const auto& [a, c] : rhs)
        if (lhs.find(a) == lhs.end())
            throw IdentityViolated(std::string(what) + " fails at monomial " +
                                   tuple_to_string(a));
    throw IdentityViolated(std::string(what) + " fails");
}

}  // namespace

void p_level_string_dilaton(unsigned g, unsigned n,
                            const CoefficientTensor& c_np1,
                            const CoefficientTensor& c_n) {
    if (c_np1.g != g || c_np1.n != n + 1 || c_n.g != g || c_n.n != n)
        throw ArityMismatch("tensors do not belong to the requested levels");

    Monomials at_half = pin_first_slot(c_np1, make_rational(-1, 2));
    Monomials at_zero = pin_first_slot(c_np1, Rational(0));

    Monomials string_rhs;
    for (const auto& [a, c] : c_n.coeffs)
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::vector<unsigned> bumped = a;
            bumped[i] += 1;
            string_rhs[bumped] += 2 * c;
        }
    drop_zeros(string_rhs);
    require_same(at_half, string_rhs, "string identity");

    Monomials dilaton_lhs;
    for (const auto& [a, c] : at_zero) dilaton_lhs[a] += c;
    for (const auto& [a, c] : at_half) dilaton_lhs[a] -= c;
    drop_zeros(dilaton_lhs);
    Monomials dilaton_rhs;
    const Rational euler = 2 * static_cast<int>(g) - 2 + static_cast<int>(n);
    for (const auto& [a, c] : c_n.coeffs) dilaton_rhs[a] = c * euler;
    drop_zeros(dilaton_rhs);
    require_same(dilaton_lhs, dilaton_rhs, "dilaton identity");
}

std::map<std::vector<unsigned>, Rational> leading_intersection_numbers(
    const CoefficientTensor& t) {
    const int top = 3 * static_cast<int>(t.g) - 3 + static_cast<int>(t.n);
    const Rational scale = pow_rational(2, top);
    std::map<std::vector<unsigned>, Rational> out;
    for (const auto& [a, c] : t.coeffs) {
        int sum = 0;
        for (unsigned e : a) sum += static_cast<int>(e);
        if (sum == top) out[a] = c / scale;
    }
    return out;
}

std::map<std::vector<unsigned>, Rational> airy_intersection_numbers(
    const PoleBasisDifferential& w) {
    const Rational scale =
        pow_rational(2, 2 * static_cast<int>(w.g) - 2 + static_cast<int>(w.n));
    std::map<std::vector<unsigned>, Rational> out;
    for (const auto& [ks, c] : w.coeffs) {
        std::vector<unsigned> a;
        Rational den = 1;
        for (int k : ks) {
            if (k < 2 || k % 2 != 0)
                throw IdentityViolated("expected even pole orders >= 2, found " +
                                       std::to_string(k));
            const unsigned ai = static_cast<unsigned>((k - 2) / 2);
            a.push_back(ai);
            den *= Rational(double_factorial_odd(ai));
        }
        out[a] = c * scale / den;
    }
    return out;
}

namespace {

/// Weakly decreasing tuples of the given length with entries in [lo, hi].
void decreasing_tuples(unsigned length, unsigned lo, unsigned hi,
                       std::vector<unsigned>& scratch,
                       std::vector<std::vector<unsigned>>& out) {
    if (scratch.size() == length) {
        out.push_back(scratch);
        return;
    }
    unsigned cap = scratch.empty() ? hi : scratch.back();
    for (unsigned v = lo; v <= cap; ++v) {
        scratch.push_back(v);
        decreasing_tuples(length, lo, hi, scratch, out);
        scratch.pop_back();
    }
}

/// Value of the symmetrized monomial for the multiset a at the point mu.
Rational symmetrized_monomial(const std::vector<unsigned>& a,
                              const std::vector<unsigned>& mu) {
    std::vector<unsigned> p = a;
    std::sort(p.begin(), p.end());
    Rational total = 0;
    do {
        Rational term = 1;
        for (std::size_t i = 0; i < p.size(); ++i)
            term *= pow_rational(Rational(mu[i]), static_cast<long>(p[i]));
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

}  // namespace

CoefficientTensor interpolate_P(
    unsigned g, unsigned n,
    const std::function<Rational(unsigned, const Partition&)>& hurwitz) {
    if (2 * static_cast<int>(g) - 2 + static_cast<int>(n) < 1)
        throw NotStable("interpolation needs a stable level");
    const unsigned degree = 3 * g + n - 3;

    std::vector<std::vector<unsigned>> basis;  // decreasing exponent multisets
    {
        std::vector<std::vector<unsigned>> all;
        std::vector<unsigned> scratch;
        decreasing_tuples(n, 0, degree, scratch, all);
        for (auto& a : all) {
            unsigned sum = 0;
            for (unsigned e : a) sum += e;
            if (sum <= degree) basis.push_back(a);
        }
    }
    std::vector<std::vector<unsigned>> grid;
    {
        std::vector<unsigned> scratch;
        decreasing_tuples(n, 1, degree + 2, scratch, grid);
    }
    if (grid.size() < basis.size())
        throw Error("interpolation grid smaller than the monomial basis");

    // Augmented system rows: sum_j m_j(mu) x_j = H(mu) / prod binom.
    const std::size_t cols = basis.size();
    std::vector<std::vector<Rational>> rows;
    for (const auto& mu : grid) {
        std::vector<Rational> row(cols + 1, Rational(0));
        for (std::size_t j = 0; j < cols; ++j)
            row[j] = symmetrized_monomial(basis[j], mu);
        Rational value = hurwitz(g, Partition(mu.begin(), mu.end()));
        for (unsigned part : mu) value /= Rational(central_binomial(part));
        row[cols] = value;
        rows.push_back(std::move(row));
    }

    // Exact Gaussian elimination with consistency check.
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_of_col(cols);
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t r = pivot_row;
        while (r < rows.size() && rows[r][col] == 0) ++r;
        if (r == rows.size())
            throw Error("interpolation system is rank deficient");
        std::swap(rows[pivot_row], rows[r]);
        for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            const Rational factor = rows[i][col] / rows[pivot_row][col];
            for (std::size_t j = col; j <= cols; ++j)
                rows[i][j] -= factor * rows[pivot_row][j];
        }
        pivot_of_col[col] = pivot_row;
        ++pivot_row;
    }
    for (std::size_t i = pivot_row; i < rows.size(); ++i)
        if (rows[i][cols] != 0)
            throw IdentityViolated("grid values are not polynomial of the expected degree");
    std::vector<Rational> solution(cols, Rational(0));
    for (std::size_t col = cols; col-- > 0;) {
        const auto& row = rows[pivot_of_col[col]];
        Rational acc = row[cols];
        for (std::size_t j = col + 1; j < cols; ++j) acc -= row[j] * solution[j];
        solution[col] = acc / row[col];
    }

    CoefficientTensor out;
    out.g = g;
    out.n = n;
    for (std::size_t j = 0; j < cols; ++j) {
        if (solution[j] == 0) continue;
        std::vector<unsigned> p = basis[j];
        std::sort(p.begin(), p.end());
        do {
            out.coeffs[p] = solution[j];
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return out;
}

}  // namespace mhn
