#ifndef CRN_LP_HPP
#define CRN_LP_HPP

#include <optional>
#include <set>
#include <vector>

#include "crn/matrix.hpp"
#include "crn/rational.hpp"

namespace crn {

enum class Relation { LessEq, GreaterEq, Equal };

struct LinearConstraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::LessEq;
  Rational rhs;
};

/// A pure feasibility problem over variables x with x_i >= lower_bounds[i]
/// (all-zero lower bounds when the vector is left empty).
struct LpSystem {
  std::size_t num_vars = 0;
  std::vector<LinearConstraint> constraints;
  std::vector<Rational> lower_bounds;
};

/// Either an exact feasible point or an exact Farkas multiplier vector. The
/// multipliers refer to the constraints rewritten with >= rows negated into
/// <= form and variables shifted to be non-negative: lambda_i >= 0 on
/// inequality rows (free on equality rows), lambda^T A >= 0 componentwise and
/// lambda^T b < 0.
struct LpOutcome {
  bool feasible = false;
  std::vector<Rational> point;
  std::vector<Rational> multipliers;
};

/// Exact phase-1 simplex with Bland's rule; deterministic given input order.
/// Every returned witness is re-verified by rational substitution before
/// being handed back.
LpOutcome lp_feasible(const LpSystem& sys);

enum class FarkasBranch { ConeWitness, PositiveCertificate };

/// Lemma dichotomy for a matrix A: either some x >= 0 with Ax <= 0, Ax != 0
/// (ConeWitness), or some y > 0 with A^T y >= 0 (PositiveCertificate).
/// Exactly one branch is ever returned.
struct FarkasResult {
  FarkasBranch branch;
  std::vector<Rational> witness;
};

FarkasResult farkas_alternative(const RationalMatrix& a);

/// A vector c with M^T c = 0, c_i >= 1 for i in positive_support, c_i = 0 for
/// i in zero_support and c_i >= 0 elsewhere; nullopt when no such c exists.
/// The >= 1 encoding of strict positivity is legal because the constraint set
/// is a cone.
std::optional<std::vector<Rational>> sign_constrained_nullvector(
    const RationalMatrix& m, const std::set<std::size_t>& positive_support,
    const std::set<std::size_t>& zero_support);

}  // namespace crn

#endif
