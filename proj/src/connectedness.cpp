#include "adjsurf/connectedness.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace adjsurf {

void ConfiguredDivisor::validate() const {
    const std::size_t n = multiplicities.size();
    if (n == 0) throw std::invalid_argument("configured divisor: no components");
    if (components.size() != n || gram.size() != n || k_degrees.size() != n)
        throw std::invalid_argument("configured divisor: field sizes disagree");
    for (const auto& m : multiplicities)
        if (m <= 0) throw std::invalid_argument("configured divisor: multiplicities must be positive");
    for (std::size_t i = 0; i < n; ++i) {
        if (gram[i].size() != n) throw std::invalid_argument("configured divisor: gram is not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (gram[i][j] != gram[j][i])
                throw std::invalid_argument("configured divisor: gram is not symmetric");
            if (i != j && gram[i][j] < 0)
                throw std::invalid_argument(
                    "configured divisor: distinct components cannot meet negatively");
        }
        if ((gram[i][i] + k_degrees[i]) % 2 != 0)
            throw std::invalid_argument(
                "configured divisor: C^2 + K.C must be even for every component");
    }
}

namespace {

Int pairing(const ConfiguredDivisor& d, const std::vector<Int>& a, const std::vector<Int>& b) {
    Int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        Int row = 0;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) row += d.gram[i][j] * b[j];
        acc += a[i] * row;
    }
    return acc;
}

Int split_count(const ConfiguredDivisor& d) {
    Int count = 1;
    for (const auto& m : d.multiplicities) count *= m + 1;
    return count;
}

void require_budget(const ConfiguredDivisor& d, std::int64_t budget) {
    const Int count = split_count(d);
    if (count > budget) throw BudgetExceeded(count);
}

/* Odometer over 0 <= a <= mults; calls f on every vector including the
 * endpoints (callers skip the improper ones they do not want). */
void for_each_subvector(const std::vector<Int>& mults,
                        const std::function<void(const std::vector<Int>&)>& f) {
    std::vector<Int> a(mults.size(), 0);
    for (;;) {
        f(a);
        std::size_t i = 0;
        while (i < a.size() && a[i] == mults[i]) a[i++] = 0;
        if (i == a.size()) return;
        ++a[i];
    }
}

bool is_zero(const std::vector<Int>& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

std::vector<Int> complement(const std::vector<Int>& mults, const std::vector<Int>& a) {
    std::vector<Int> b(mults);
    for (std::size_t i = 0; i < b.size(); ++i) b[i] -= a[i];
    return b;
}

/* Exact determinant by fraction-free (Bareiss) elimination. */
Int determinant(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

}  // namespace

Int ConfiguredDivisor::self_intersection() const {
    return pairing(*this, multiplicities, multiplicities);
}

Int ConfiguredDivisor::canonical_degree() const {
    Int acc = 0;
    for (std::size_t i = 0; i < size(); ++i) acc += multiplicities[i] * k_degrees[i];
    return acc;
}

DecompositionReport analyze_decompositions(const ConfiguredDivisor& divisor,
                                           std::int64_t budget) {
    divisor.validate();
    require_budget(divisor, budget);

    DecompositionReport report;
    for_each_subvector(divisor.multiplicities, [&](const std::vector<Int>& a) {
        if (is_zero(a) || a == divisor.multiplicities) return;
        const std::vector<Int> b = complement(divisor.multiplicities, a);
        const Int v = pairing(divisor, a, b);
        if (!report.min_value || v < *report.min_value ||
            (v == *report.min_value && a < report.witness_d1)) {
            report.min_value = v;
            report.witness_d1 = a;
            report.witness_d2 = b;
        }
    });
    return report;
}

bool is_minus_one_divisor(const ConfiguredDivisor& divisor, std::int64_t budget) {
    divisor.validate();
    if (divisor.self_intersection() != -1) return false;
    if (divisor.canonical_degree() != -1) return false;
    if (!analyze_decompositions(divisor, budget).is_m_connected(1)) return false;
    // Negative definiteness of the support Gram: (-1)^k det_k > 0 for all k.
    const std::size_t n = divisor.size();
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<Int>> minor(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = divisor.gram[i][j];
        const Int det = determinant(std::move(minor));
        const bool positive = (k % 2 == 0) ? det > 0 : det < 0;
        if (!positive) return false;
    }
    return true;
}

UnitSplitReport check_lemma_1conn_cases(const ConfiguredDivisor& divisor, std::int64_t budget) {
    divisor.validate();
    require_budget(divisor, budget);

    const Int d2 = divisor.self_intersection();
    UnitSplitReport report;
    bool any_unit = false;
    for_each_subvector(divisor.multiplicities, [&](const std::vector<Int>& a) {
        if (is_zero(a) || a == divisor.multiplicities) return;
        const std::vector<Int> b = complement(divisor.multiplicities, a);
        if (b < a) return;  // visit each unordered pair once
        if (pairing(divisor, a, b) != 1) return;
        any_unit = true;
        Int a2 = pairing(divisor, a, a);
        Int b2 = pairing(divisor, b, b);
        std::vector<Int> av = a, bv = b;
        if (a2 > b2) {
            std::swap(a2, b2);
            std::swap(av, bv);
        }
        if (a2 == -1) {
            report.cases.push_back({UnitSplitCase::Label::AMinusOne, av, bv, a2, b2});
        } else if (a2 == 0) {
            report.cases.push_back({UnitSplitCase::Label::AZero, av, bv, a2, b2});
        } else if (a2 == 1 && b2 == 1 && d2 == 4) {
            report.cases.push_back({UnitSplitCase::Label::BothOne, av, bv, a2, b2});
        } else {
            report.violations.push_back(av);
        }
    });
    if (!any_unit)
        throw std::invalid_argument("check_lemma_1conn_cases: no splitting with A.B = 1 exists");
    return report;
}

ZeroSquareVerdict zero_square_nef_structure(const ConfiguredDivisor& divisor,
                                            std::int64_t budget) {
    divisor.validate();
    if (divisor.self_intersection() != 0)
        throw std::invalid_argument("zero_square_nef_structure: D^2 must be 0");
    require_budget(divisor, budget);

    ZeroSquareVerdict verdict;
    for_each_subvector(divisor.multiplicities, [&](const std::vector<Int>& a) {
        if (is_zero(a)) return;
        const bool touches_d = pairing(divisor, divisor.multiplicities, a) != 0;
        const bool positive_square = pairing(divisor, a, a) > 0;
        if (touches_d || positive_square) verdict.violating_subdivisors.push_back(a);
    });
    verdict.min_value = analyze_decompositions(divisor, budget).min_value;
    verdict.pass = verdict.violating_subdivisors.empty() &&
                   (!verdict.min_value || *verdict.min_value >= 0);
    return verdict;
}

}  // namespace adjsurf
