#pragma once

/* Shared scalar types and error taxonomy.
 *
 * Every numeric quantity in the library is an exact integer (cpp_int) or an
 * exact rational (cpp_rational).  Floating point is deliberately absent:
 * classification grids reach degrees in the hundreds and the intersection
 * products grow quadratically, so overflow has to be impossible by
 * construction, not merely unlikely.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace adjsurf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/* Three-valued answer for predicates that are only decidable on some models
 * (nefness on blow-ups needs curve classes the lattice alone does not know). */
enum class Ternary { False, True, Unknown };

inline const char* to_string(Ternary t) {
    switch (t) {
        case Ternary::False: return "false";
        case Ternary::True: return "true";
        default: return "unknown";
    }
}

/* Two divisor classes living on different surface models were combined. */
struct ModelMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/* D^2 + K.D odd: the class cannot carry a curve, adjunction is meaningless. */
struct ParityViolation : std::domain_error {
    using std::domain_error::domain_error;
};

/* A cohomology value depends on moduli the caller did not pin down
 * (line bundle of intermediate degree on a curve of genus >= 2). */
struct GeneralityRequired : std::domain_error {
    using std::domain_error::domain_error;
};

/* A decomposition enumeration would exceed the split budget. */
struct BudgetExceeded : std::runtime_error {
    Int required;
    explicit BudgetExceeded(Int req)
        : std::runtime_error("decomposition budget exceeded; required " + req.str()),
          required(std::move(req)) {}
};

}  // namespace adjsurf
