#include "crn/network.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

namespace crn {

Complex::Complex(std::map<std::size_t, long long> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second < 0) throw std::invalid_argument("negative stoichiometric coefficient");
    it = it->second == 0 ? coeffs_.erase(it) : std::next(it);
  }
}

long long Complex::coefficient(std::size_t species_id) const {
  auto it = coeffs_.find(species_id);
  return it == coeffs_.end() ? 0 : it->second;
}

void Complex::set_coefficient(std::size_t species_id, long long value) {
  if (value < 0) throw std::invalid_argument("negative stoichiometric coefficient");
  if (value == 0)
    coeffs_.erase(species_id);
  else
    coeffs_[species_id] = value;
}

Network::Network(std::vector<Species> species, std::vector<Reaction> reactions)
    : species_(std::move(species)), reactions_(std::move(reactions)) {
  if (species_.empty()) throw std::invalid_argument("network has no species");
  if (reactions_.empty()) throw std::invalid_argument("network has no reactions");
  std::set<std::string> names;
  for (std::size_t i = 0; i < species_.size(); ++i) {
    if (species_[i].id != i) throw std::invalid_argument("species ids not contiguous");
    if (species_[i].name.empty() || !names.insert(species_[i].name).second)
      throw std::invalid_argument("duplicate or empty species name");
  }
  std::vector<bool> mentioned(species_.size(), false);
  for (const auto& rx : reactions_) {
    if (rx.rate_exact <= 0) throw std::invalid_argument("rate constant must be positive");
    if (rx.reactant == rx.product) throw std::invalid_argument("reactant equals product");
    for (const auto& [id, coeff] : rx.reactant.coefficients()) {
      if (id >= species_.size()) throw std::invalid_argument("species id out of range");
      mentioned[id] = true;
      (void)coeff;
    }
    for (const auto& [id, coeff] : rx.product.coefficients()) {
      if (id >= species_.size()) throw std::invalid_argument("species id out of range");
      mentioned[id] = true;
      (void)coeff;
    }
  }
  for (std::size_t i = 0; i < species_.size(); ++i)
    if (!mentioned[i]) throw std::invalid_argument("species " + species_[i].name + " unused");
}

std::size_t Network::species_id(std::string_view name) const {
  for (const auto& sp : species_)
    if (sp.name == name) return sp.id;
  throw std::invalid_argument("unknown species " + std::string(name));
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct LineScanner {
  std::string_view text;
  std::size_t line_no;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_no, pos + 1, message);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  bool try_consume(std::string_view token) {
    skip_ws();
    if (text.substr(pos, token.size()) == token) {
      pos += token.size();
      return true;
    }
    return false;
  }

  std::string_view identifier() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected identifier");
    if (std::isdigit(static_cast<unsigned char>(text[start])))
      fail("identifier may not start with a digit");
    return text.substr(start, pos - start);
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stoll(std::string(text.substr(start, pos - start)));
  }

  std::string_view until(char delim) {
    std::size_t end = text.find(delim, pos);
    std::string_view piece = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    pos = end == std::string_view::npos ? text.size() : end;
    return piece;
  }
};

struct SpeciesTable {
  std::vector<Species> list;
  std::map<std::string, std::size_t, std::less<>> index;
  bool frozen = false;  // set by a species: header

  std::size_t lookup(LineScanner& sc, std::string_view name) {
    if (auto it = index.find(name); it != index.end()) return it->second;
    if (frozen) sc.fail("species " + std::string(name) + " not in species: header");
    const std::size_t id = list.size();
    list.push_back({id, std::string(name)});
    index.emplace(std::string(name), id);
    return id;
  }
};

Complex parse_complex(LineScanner& sc, SpeciesTable& table) {
  std::map<std::size_t, long long> coeffs;
  for (;;) {
    sc.skip_ws();
    if (sc.pos < sc.text.size() && sc.text[sc.pos] == '0' &&
        (sc.pos + 1 >= sc.text.size() ||
         !std::isalnum(static_cast<unsigned char>(sc.text[sc.pos + 1])))) {
      ++sc.pos;  // zero complex term
    } else {
      long long coeff = 1;
      if (sc.pos < sc.text.size() && std::isdigit(static_cast<unsigned char>(sc.text[sc.pos]))) {
        coeff = sc.integer();
        if (coeff <= 0) sc.fail("stoichiometric coefficient must be positive");
      }
      const std::size_t id = table.lookup(sc, sc.identifier());
      coeffs[id] += coeff;
    }
    if (!sc.try_consume("+")) break;
  }
  return Complex(coeffs);
}

Rational parse_rate(LineScanner& sc) {
  sc.skip_ws();
  std::size_t start = sc.pos;
  while (sc.pos < sc.text.size() && sc.text[sc.pos] != ',' && sc.text[sc.pos] != '#')
    ++sc.pos;
  std::string_view token = sc.text.substr(start, sc.pos - start);
  auto q = parse_rational(token);
  if (!q) {
    sc.pos = start;
    sc.fail("expected rate constant");
  }
  if (*q <= 0) {
    sc.pos = start;
    sc.fail("rate constant must be positive");
  }
  return *q;
}

}  // namespace

Network parse_network(std::string_view text) {
  SpeciesTable table;
  std::vector<Reaction> reactions;

  std::size_t line_no = 0;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t eol = text.find('\n', offset);
    std::string_view raw =
        text.substr(offset, eol == std::string_view::npos ? eol : eol - offset);
    offset = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    LineScanner sc{raw, line_no};
    if (sc.eof()) continue;

    if (sc.try_consume("species:")) {
      if (table.frozen || !table.list.empty())
        sc.fail("species: header must come before any species use");
      for (;;) {
        std::string name{sc.identifier()};
        if (table.index.count(name)) sc.fail("duplicate species " + name + " in header");
        const std::size_t id = table.list.size();
        table.list.push_back({id, name});
        table.index.emplace(name, id);
        if (!sc.try_consume(",")) break;
      }
      if (!sc.eof()) sc.fail("trailing text after species header");
      table.frozen = true;
      continue;
    }

    Complex lhs = parse_complex(sc, table);
    bool reversible = false;
    if (sc.try_consume("<->"))
      reversible = true;
    else if (!sc.try_consume("->"))
      sc.fail("expected '->' or '<->'");
    Complex rhs = parse_complex(sc, table);

    if (!sc.try_consume(";")) sc.fail("expected ';' before rate constant");
    if (!sc.try_consume("k")) sc.fail("expected 'k ='");
    if (!sc.try_consume("=")) sc.fail("expected '=' after 'k'");

    Rational forward = parse_rate(sc);
    Rational backward;
    if (reversible) {
      if (!sc.try_consume(",")) sc.fail("reversible reaction needs two rate constants");
      backward = parse_rate(sc);
    } else if (sc.try_consume(",")) {
      sc.fail("irreversible reaction takes one rate constant");
    }
    if (!sc.eof()) sc.fail("trailing text after reaction");

    if (lhs == rhs) sc.fail("reactant equals product");
    reactions.push_back({lhs, rhs, forward, to_double(forward)});
    if (reversible) reactions.push_back({rhs, lhs, backward, to_double(backward)});
  }

  if (table.list.empty()) throw ParseError(line_no, 1, "no species defined");
  if (reactions.empty()) throw ParseError(line_no, 1, "no reactions defined");
  return Network(std::move(table.list), std::move(reactions));
}

namespace {

void render_complex(std::ostream& os, const Network& net, const Complex& cx) {
  if (cx.empty()) {
    os << "0";
    return;
  }
  bool first = true;
  for (const auto& [id, coeff] : cx.coefficients()) {
    if (!first) os << " + ";
    first = false;
    if (coeff != 1) os << coeff << " ";
    os << net.species_name(id);
  }
}

}  // namespace

std::string render_network(const Network& net) {
  std::ostringstream os;
  os << "species: ";
  for (std::size_t i = 0; i < net.species_count(); ++i) {
    if (i) os << ", ";
    os << net.species_name(i);
  }
  os << "\n";
  for (const auto& rx : net.reactions()) {
    render_complex(os, net, rx.reactant);
    os << " -> ";
    render_complex(os, net, rx.product);
    os << " ; k = " << format_rational(rx.rate_exact) << "\n";
  }
  return os.str();
}

RationalMatrix StoichMatrix::rational() const {
  RationalMatrix m(species_count, reaction_count);
  for (std::size_t j = 0; j < species_count; ++j)
    for (std::size_t i = 0; i < reaction_count; ++i) m.at(j, i) = entries[j][i];
  return m;
}

StoichMatrix stoichiometric_matrix(const Network& net) {
  StoichMatrix out;
  out.species_count = net.species_count();
  out.reaction_count = net.reaction_count();
  out.entries.assign(out.species_count, std::vector<long long>(out.reaction_count, 0));
  for (std::size_t i = 0; i < out.reaction_count; ++i) {
    const auto& rx = net.reactions()[i];
    for (const auto& [id, coeff] : rx.product.coefficients()) out.entries[id][i] += coeff;
    for (const auto& [id, coeff] : rx.reactant.coefficients()) out.entries[id][i] -= coeff;
  }
  return out;
}

std::vector<double> rate_vector(const Network& net, std::span<const double> x) {
  if (x.size() != net.species_count()) throw std::invalid_argument("state size mismatch");
  for (double v : x)
    if (v < 0) throw std::invalid_argument("negative concentration");
  std::vector<double> rates(net.reaction_count());
  for (std::size_t i = 0; i < rates.size(); ++i) {
    double rate = net.reactions()[i].rate_value;
    for (const auto& [id, coeff] : net.reactions()[i].reactant.coefficients())
      for (long long p = 0; p < coeff; ++p) rate *= x[id];
    rates[i] = rate;
  }
  return rates;
}

std::vector<Rational> rate_vector_exact(const Network& net, const std::vector<Rational>& x) {
  if (x.size() != net.species_count()) throw std::invalid_argument("state size mismatch");
  for (const auto& v : x)
    if (v < 0) throw std::invalid_argument("negative concentration");
  std::vector<Rational> rates(net.reaction_count());
  for (std::size_t i = 0; i < rates.size(); ++i) {
    Rational rate = net.reactions()[i].rate_exact;
    for (const auto& [id, coeff] : net.reactions()[i].reactant.coefficients())
      for (long long p = 0; p < coeff; ++p) rate *= x[id];
    rates[i] = rate;
  }
  return rates;
}

std::vector<double> ode_rhs(const Network& net, std::span<const double> x) {
  const std::vector<double> rates = rate_vector(net, x);
  const StoichMatrix gamma = stoichiometric_matrix(net);
  std::vector<double> rhs(net.species_count(), 0.0);
  for (std::size_t j = 0; j < rhs.size(); ++j)
    for (std::size_t i = 0; i < rates.size(); ++i)
      rhs[j] += static_cast<double>(gamma.entries[j][i]) * rates[i];
  return rhs;
}

std::vector<Rational> ode_rhs_exact(const Network& net, const std::vector<Rational>& x) {
  const std::vector<Rational> rates = rate_vector_exact(net, x);
  const StoichMatrix gamma = stoichiometric_matrix(net);
  std::vector<Rational> rhs(net.species_count());
  for (std::size_t j = 0; j < rhs.size(); ++j)
    for (std::size_t i = 0; i < rates.size(); ++i) rhs[j] += Rational(gamma.entries[j][i]) * rates[i];
  return rhs;
}

}  // namespace crn
