#ifndef CRN_NETWORK_HPP
#define CRN_NETWORK_HPP

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crn/matrix.hpp"
#include "crn/rational.hpp"

namespace crn {

struct Species {
  std::size_t id = 0;
  std::string name;
};

/// A formal non-negative integer combination of species. Zero coefficients
/// are never stored; the empty map is the zero complex.
class Complex {
 public:
  Complex() = default;
  explicit Complex(std::map<std::size_t, long long> coefficients);

  long long coefficient(std::size_t species_id) const;
  void set_coefficient(std::size_t species_id, long long value);

  const std::map<std::size_t, long long>& coefficients() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  bool operator==(const Complex& other) const = default;
  auto operator<=>(const Complex& other) const { return coeffs_ <=> other.coeffs_; }

 private:
  std::map<std::size_t, long long> coeffs_;
};

struct Reaction {
  Complex reactant;
  Complex product;
  Rational rate_exact;   // exact value used by all algebraic paths
  double rate_value = 0; // float mirror for the simulator
};

class Network {
 public:
  Network(std::vector<Species> species, std::vector<Reaction> reactions);

  const std::vector<Species>& species() const { return species_; }
  const std::vector<Reaction>& reactions() const { return reactions_; }
  std::size_t species_count() const { return species_.size(); }
  std::size_t reaction_count() const { return reactions_.size(); }

  const std::string& species_name(std::size_t id) const { return species_[id].name; }
  std::size_t species_id(std::string_view name) const;  // throws on unknown name

 private:
  std::vector<Species> species_;
  std::vector<Reaction> reactions_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses the .crn text format. Species are indexed in first-appearance
/// order unless a `species:` header fixes the order; `<->` lines expand to
/// two reactions with the forward direction listed first.
Network parse_network(std::string_view text);

/// Canonical .crn rendering (species header plus one `->` line per
/// reaction); parse_network is the identity on its output.
std::string render_network(const Network& net);

/// m x r matrix of net stoichiometric change, column per reaction
/// (product minus reactant coefficients).
struct StoichMatrix {
  std::size_t species_count = 0;
  std::size_t reaction_count = 0;
  std::vector<std::vector<long long>> entries;  // [species][reaction]

  RationalMatrix rational() const;
};

StoichMatrix stoichiometric_matrix(const Network& net);

/// Mass-action rates k_i * prod_j x_j^{alpha_ij}, with 0^0 = 1.
/// Throws std::invalid_argument on a negative component.
std::vector<double> rate_vector(const Network& net, std::span<const double> x);
std::vector<Rational> rate_vector_exact(const Network& net, const std::vector<Rational>& x);

/// Gamma * R(x).
std::vector<double> ode_rhs(const Network& net, std::span<const double> x);
std::vector<Rational> ode_rhs_exact(const Network& net, const std::vector<Rational>& x);

}  // namespace crn

#endif
