#include "crn/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace crn {

namespace {

// Equality-form tableau for phase-1: A x = b with x >= 0, b >= 0, one
// artificial variable per row, minimize the sum of artificials.
struct Phase1 {
  std::size_t num_cols = 0;   // structural + slack columns
  std::size_t num_rows = 0;
  std::vector<std::vector<Rational>> tableau;  // num_rows x (total_cols + 1 rhs)
  std::vector<std::size_t> basis;              // column index basic in each row

  std::size_t artificial(std::size_t row) const { return num_cols + row; }
  std::size_t total_cols() const { return num_cols + num_rows; }

  Rational objective() const {
    Rational obj = 0;
    for (std::size_t i = 0; i < num_rows; ++i)
      if (basis[i] >= num_cols) obj += tableau[i].back();
    return obj;
  }

  Rational reduced_cost(std::size_t col) const {
    // Artificials cost 1, everything else 0.
    Rational rc = col >= num_cols ? 1 : 0;
    for (std::size_t i = 0; i < num_rows; ++i)
      if (basis[i] >= num_cols) rc -= tableau[i][col];
    return rc;
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = Rational(1) / tableau[row][col];
    for (auto& entry : tableau[row]) entry *= inv;
    for (std::size_t i = 0; i < num_rows; ++i) {
      if (i == row || tableau[i][col] == 0) continue;
      const Rational factor = tableau[i][col];
      for (std::size_t j = 0; j <= total_cols(); ++j)
        tableau[i][j] -= factor * tableau[row][j];
    }
    basis[row] = col;
  }

  void solve() {
    for (;;) {
      // Bland's rule: lowest-index improving non-artificial column.
      std::size_t entering = total_cols();
      for (std::size_t j = 0; j < num_cols; ++j) {
        if (reduced_cost(j) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == total_cols()) return;

      std::size_t leaving = num_rows;
      Rational best_ratio = 0;
      for (std::size_t i = 0; i < num_rows; ++i) {
        if (tableau[i][entering] <= 0) continue;
        const Rational ratio = tableau[i].back() / tableau[i][entering];
        if (leaving == num_rows || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      // The phase-1 objective is bounded below by zero, so an improving
      // column always admits a pivot row.
      assert(leaving < num_rows);
      pivot(leaving, entering);
    }
  }
};

}  // namespace

LpOutcome lp_feasible(const LpSystem& sys) {
  const std::size_t n = sys.num_vars;
  std::vector<Rational> lower(n, Rational(0));
  if (!sys.lower_bounds.empty()) {
    if (sys.lower_bounds.size() != n) throw std::invalid_argument("lower_bounds size mismatch");
    lower = sys.lower_bounds;
  }
  for (const auto& c : sys.constraints)
    if (c.coeffs.size() != n) throw std::invalid_argument("constraint width mismatch");

  const std::size_t m = sys.constraints.size();

  // Normalized rows: shift x = lower + x' and turn >= into <=.
  // Row i: norm_a[i] . x' (<= or =) norm_b[i].
  std::vector<std::vector<Rational>> norm_a(m);
  std::vector<Rational> norm_b(m);
  std::vector<bool> is_eq(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = sys.constraints[i];
    const Rational sign = c.relation == Relation::GreaterEq ? -1 : 1;
    norm_a[i].resize(n);
    Rational shifted = c.rhs;
    for (std::size_t j = 0; j < n; ++j) {
      norm_a[i][j] = sign * c.coeffs[j];
      shifted -= c.coeffs[j] * lower[j];
    }
    norm_b[i] = sign * shifted;
    is_eq[i] = c.relation == Relation::Equal;
  }

  std::size_t num_slacks = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (!is_eq[i]) ++num_slacks;

  Phase1 ph;
  ph.num_rows = m;
  ph.num_cols = n + num_slacks;
  ph.tableau.assign(m, std::vector<Rational>(ph.total_cols() + 1));
  ph.basis.resize(m);

  std::vector<Rational> row_sign(m, Rational(1));
  std::size_t slack = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (norm_b[i] < 0) row_sign[i] = -1;
    for (std::size_t j = 0; j < n; ++j) ph.tableau[i][j] = row_sign[i] * norm_a[i][j];
    if (!is_eq[i]) ph.tableau[i][n + slack++] = row_sign[i];
    ph.tableau[i][ph.artificial(i)] = 1;
    ph.tableau[i].back() = row_sign[i] * norm_b[i];
    ph.basis[i] = ph.artificial(i);
  }

  ph.solve();

  LpOutcome out;
  if (ph.objective() == 0) {
    out.feasible = true;
    std::vector<Rational> shifted(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (ph.basis[i] < n) shifted[ph.basis[i]] = ph.tableau[i].back();
    out.point.resize(n);
    for (std::size_t j = 0; j < n; ++j) out.point[j] = lower[j] + shifted[j];

    // Exact re-verification of the witness.
    for (const auto& c : sys.constraints) {
      Rational lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += c.coeffs[j] * out.point[j];
      const bool ok = c.relation == Relation::LessEq     ? lhs <= c.rhs
                      : c.relation == Relation::GreaterEq ? lhs >= c.rhs
                                                          : lhs == c.rhs;
      if (!ok) throw std::logic_error("lp_feasible: witness failed re-verification");
    }
    for (std::size_t j = 0; j < n; ++j)
      if (out.point[j] < lower[j]) throw std::logic_error("lp_feasible: bound violated");
    return out;
  }

  // Infeasible: extract the dual of the phase-1 optimum. The reduced cost of
  // the artificial column of row i is 1 - y_i.
  std::vector<Rational> dual(m);
  for (std::size_t i = 0; i < m; ++i) dual[i] = Rational(1) - ph.reduced_cost(ph.artificial(i));

  // Map back through the row sign flips; lambda = -sign*dual certifies
  // lambda^T A >= 0, lambda^T b < 0 over the normalized rows.
  out.multipliers.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.multipliers[i] = -row_sign[i] * dual[i];

  std::vector<Rational> combo(n, Rational(0));
  Rational combo_rhs = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_eq[i] && out.multipliers[i] < 0)
      throw std::logic_error("lp_feasible: negative multiplier on inequality row");
    for (std::size_t j = 0; j < n; ++j) combo[j] += out.multipliers[i] * norm_a[i][j];
    combo_rhs += out.multipliers[i] * norm_b[i];
  }
  for (std::size_t j = 0; j < n; ++j)
    if (combo[j] < 0) throw std::logic_error("lp_feasible: Farkas combination not nonnegative");
  if (combo_rhs >= 0) throw std::logic_error("lp_feasible: Farkas rhs not negative");

  out.feasible = false;
  return out;
}

FarkasResult farkas_alternative(const RationalMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  // Branch 2 first: y > 0 with A^T y >= 0, encoded as y >= 1 (the feasible
  // set is a cone, so any strictly positive solution scales to one with all
  // components >= 1).
  LpSystem branch2;
  branch2.num_vars = m;
  branch2.lower_bounds.assign(m, Rational(1));
  for (std::size_t j = 0; j < n; ++j) {
    LinearConstraint c;
    c.coeffs.resize(m);
    for (std::size_t i = 0; i < m; ++i) c.coeffs[i] = a.at(i, j);
    c.relation = Relation::GreaterEq;
    c.rhs = 0;
    branch2.constraints.push_back(std::move(c));
  }
  if (LpOutcome r2 = lp_feasible(branch2); r2.feasible) {
    return {FarkasBranch::PositiveCertificate, std::move(r2.point)};
  }

  // Branch 1: x >= 0, Ax <= 0, with sum(-Ax) >= 1 normalizing Ax != 0.
  LpSystem branch1;
  branch1.num_vars = n;
  for (std::size_t i = 0; i < m; ++i) {
    LinearConstraint c;
    c.coeffs.resize(n);
    for (std::size_t j = 0; j < n; ++j) c.coeffs[j] = a.at(i, j);
    c.relation = Relation::LessEq;
    c.rhs = 0;
    branch1.constraints.push_back(std::move(c));
  }
  LinearConstraint norm;
  norm.coeffs.assign(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) norm.coeffs[j] -= a.at(i, j);
  norm.relation = Relation::GreaterEq;
  norm.rhs = 1;
  branch1.constraints.push_back(std::move(norm));

  LpOutcome r1 = lp_feasible(branch1);
  if (!r1.feasible) throw std::logic_error("farkas_alternative: both branches infeasible");

  std::vector<Rational> image(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) image[i] += a.at(i, j) * r1.point[j];
  bool nonzero = false;
  for (const auto& q : image) {
    if (q > 0) throw std::logic_error("farkas_alternative: Ax not <= 0");
    if (q != 0) nonzero = true;
  }
  if (!nonzero) throw std::logic_error("farkas_alternative: witness in ker(A)");
  return {FarkasBranch::ConeWitness, std::move(r1.point)};
}

std::optional<std::vector<Rational>> sign_constrained_nullvector(
    const RationalMatrix& m, const std::set<std::size_t>& positive_support,
    const std::set<std::size_t>& zero_support) {
  for (std::size_t i : positive_support)
    if (zero_support.count(i)) throw std::invalid_argument("overlapping supports");

  const std::size_t rows = m.rows();
  LpSystem sys;
  sys.num_vars = rows;
  sys.lower_bounds.assign(rows, Rational(0));
  for (std::size_t i : positive_support) sys.lower_bounds[i] = 1;
  for (std::size_t i : zero_support) {
    LinearConstraint c;
    c.coeffs.assign(rows, Rational(0));
    c.coeffs[i] = 1;
    c.relation = Relation::Equal;
    c.rhs = 0;
    sys.constraints.push_back(std::move(c));
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    LinearConstraint c;
    c.coeffs.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) c.coeffs[i] = m.at(i, j);
    c.relation = Relation::Equal;
    c.rhs = 0;
    sys.constraints.push_back(std::move(c));
  }

  LpOutcome r = lp_feasible(sys);
  if (!r.feasible) return std::nullopt;
  return r.point;
}

}  // namespace crn
