#pragma once

/* m-connectedness of effective divisors with a known component Gram matrix.
 *
 * A configured divisor is D = sum m_i C_i with the exact pairing C_i.C_j
 * supplied as a Gram matrix (off-diagonal entries >= 0: distinct curves on a
 * surface never meet negatively) plus the canonical degrees K.C_i.  The
 * connectedness level is the exact minimum of D1.D2 over every proper split
 * D = D1 + D2 with 0 <= D1 <= D componentwise; a divisor with no proper
 * split (a single reduced component) is m-connected for every m, reported as
 * an absent minimum.
 *
 * Enumeration is mixed-radix over the multiplicity box and is guarded by a
 * split budget (product of (m_i + 1)); the default is 10^7 and callers may
 * raise it.
 */

#include "adjsurf/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace adjsurf {

struct ConfiguredDivisor {
    std::vector<std::string> components;        // labels, size n
    std::vector<Int> multiplicities;            // positive, size n
    std::vector<std::vector<Int>> gram;         // symmetric n x n, off-diagonal >= 0
    std::vector<Int> k_degrees;                 // K.C_i, gram[i][i] + k_degrees[i] even

    void validate() const;  // throws std::invalid_argument on any violation
    std::size_t size() const { return multiplicities.size(); }
    Int self_intersection() const;              // D^2
    Int canonical_degree() const;               // K.D
};

inline constexpr std::int64_t kDefaultSplitBudget = 10'000'000;

struct DecompositionReport {
    /* Smallest D1.D2 over proper splits; absent means no proper split exists
     * (the divisor is m-connected for every m). */
    std::optional<Int> min_value;
    std::vector<Int> witness_d1, witness_d2;  // lexicographically smallest minimiser

    bool is_m_connected(const Int& m) const { return !min_value || *min_value >= m; }
};

DecompositionReport analyze_decompositions(const ConfiguredDivisor& divisor,
                                           std::int64_t budget = kDefaultSplitBudget);

/* D is a (-1)-divisor: D^2 = K.D = -1, D is 1-connected, and the Gram matrix
 * of its support is negative definite (exact leading-principal-minor test). */
bool is_minus_one_divisor(const ConfiguredDivisor& divisor,
                          std::int64_t budget = kDefaultSplitBudget);

/* Splittings D = A + B with A.B = 1 of a 1-connected divisor in a big-and-nef
 * class (caller's assertion) fall into three shapes, taking A^2 <= B^2:
 *   (a) A^2 = -1 (whence D.A = 0)
 *   (b) A^2 =  0 (whence D.A = 1)
 *   (c) A^2 = B^2 = 1 and D^2 = 4
 * Every unit split is classified; anything else lands in `violations`.     */
struct UnitSplitCase {
    enum class Label { AMinusOne, AZero, BothOne };
    Label label;
    std::vector<Int> a_mults, b_mults;
    Int a2, b2;
};

struct UnitSplitReport {
    std::vector<UnitSplitCase> cases;
    std::vector<std::vector<Int>> violations;  // A-side multiplicities of unmatched splits
    bool all_classified() const { return violations.empty(); }
};

/* Throws std::invalid_argument when no split with A.B = 1 exists. */
UnitSplitReport check_lemma_1conn_cases(const ConfiguredDivisor& divisor,
                                        std::int64_t budget = kDefaultSplitBudget);

/* Structure of a nef divisor with D^2 = 0 (caller asserts nefness; D^2 = 0
 * is checked): every nonzero sub-divisor A <= D must satisfy D.A = 0 and
 * A^2 <= 0, and D itself must be 0-connected. */
struct ZeroSquareVerdict {
    bool pass;
    std::vector<std::vector<Int>> violating_subdivisors;
    std::optional<Int> min_value;  // connectedness level of D
};

ZeroSquareVerdict zero_square_nef_structure(const ConfiguredDivisor& divisor,
                                            std::int64_t budget = kDefaultSplitBudget);

}  // namespace adjsurf
