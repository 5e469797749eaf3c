#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "crn/network.hpp"
#include "crn/sim.hpp"
#include "crn/verdict.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitOverflow = 3;

struct CommonOptions {
  std::string file;
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("file", opts.file, ".crn input file")->required();
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", opts.out, "write output to this path instead of stdout");
}

void emit(const CommonOptions& opts, const std::string& payload) {
  if (opts.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream os(opts.out, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file " + opts.out);
  os << payload;
}

crn::Network load_network(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(kExitParse);
  }
  std::ostringstream buffer;
  buffer << is.rdbuf();
  try {
    return crn::parse_network(buffer.str());
  } catch (const std::exception& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    std::exit(kExitParse);
  }
}

crn::Rational require_rational(const std::string& text, const std::string& what) {
  auto q = crn::parse_rational(text);
  if (!q || *q <= 0) {
    std::cerr << "error: " << what << " must be a positive rational, got '" << text << "'\n";
    std::exit(kExitParse);
  }
  return *q;
}

std::size_t env_threads() {
  if (const char* env = std::getenv("CRNPERSIST_THREADS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value >= 1) return static_cast<std::size_t>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

crn::SpeciesSet parse_siphon_arg(const crn::Network& net, const std::string& text) {
  crn::SpeciesSet members;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty()) continue;
    bool numeric = !token.empty();
    for (char ch : token) numeric = numeric && std::isdigit(static_cast<unsigned char>(ch));
    if (numeric) {
      const std::size_t one_based = std::stoull(token);
      if (one_based < 1 || one_based > net.species_count()) {
        std::cerr << "error: species index " << token << " out of range\n";
        std::exit(kExitParse);
      }
      members.insert(one_based - 1);
    } else {
      members.insert(net.species_id(token));
    }
  }
  if (members.empty()) {
    std::cerr << "error: empty --siphon\n";
    std::exit(kExitParse);
  }
  return members;
}

std::vector<crn::OrderPair> parse_pairs_arg(const crn::Network& net, const std::string& text) {
  std::vector<crn::OrderPair> pairs;
  std::size_t pos = 0;
  while ((pos = text.find('(', pos)) != std::string::npos) {
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos) break;
    std::size_t i = 0, j = 0;
    char comma = 0;
    std::stringstream ss(text.substr(pos + 1, close - pos - 1));
    ss >> i >> comma >> j;
    if (comma != ',' || i < 1 || j < 1 || i > net.reaction_count() || j > net.reaction_count()) {
      std::cerr << "error: bad pair in --pairs near '" << text.substr(pos) << "'\n";
      std::exit(kExitParse);
    }
    pairs.push_back({i - 1, j - 1});
    pos = close + 1;
  }
  return pairs;
}

std::vector<double> parse_vector_arg(const std::string& text, std::size_t expected,
                                     const std::string& what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) values.push_back(std::stod(token));
  if (values.size() != expected) {
    std::cerr << "error: " << what << " needs " << expected << " comma-separated values\n";
    std::exit(kExitParse);
  }
  return values;
}

std::string species_set_text(const crn::SpeciesSet& members, const crn::Network& net) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : members) {
    if (!first) out += ",";
    first = false;
    out += net.species_name(i);
  }
  return out + "}";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Persistence analyzer for mass-action reaction networks"};
  app.require_subcommand(1);

  CommonOptions analyze_opts;
  std::string eps_text = "1/1099511627776";  // 2^-40
  std::size_t j_cap = std::size_t{1} << 16;
  std::size_t siphon_cap = 20;
  bool assume_bounded = false;

  auto* cmd_analyze = app.add_subcommand("analyze", "full persistence analysis");
  add_common(cmd_analyze, analyze_opts);
  cmd_analyze->add_option("--eps", eps_text, "epsilon for the dominance rows (rational)");
  cmd_analyze->add_option("--j-cap", j_cap, "max pair subsets tried per siphon");
  cmd_analyze->add_option("--siphon-cap", siphon_cap, "max species for siphon enumeration");
  cmd_analyze->add_flag("--assume-bounded", assume_bounded,
                        "treat trajectories as bounded when no structural bound is found");

  CommonOptions structure_opts;
  auto* cmd_structure = app.add_subcommand("structure", "complexes, deficiency, conservation");
  add_common(cmd_structure, structure_opts);

  CommonOptions siphon_opts;
  bool minimal_only = false;
  std::size_t siphon_cap2 = 20;
  auto* cmd_siphons = app.add_subcommand("siphons", "enumerate semi-locking sets");
  add_common(cmd_siphons, siphon_opts);
  cmd_siphons->add_flag("--minimal", minimal_only, "inclusion-minimal sets only");
  cmd_siphons->add_option("--siphon-cap", siphon_cap2, "max species for enumeration");

  CommonOptions certify_opts;
  std::string siphon_arg, pairs_arg, certify_eps = "1/1099511627776";
  auto* cmd_certify = app.add_subcommand("certify", "replay one certification manually");
  add_common(cmd_certify, certify_opts);
  cmd_certify->add_option("--siphon", siphon_arg, "species set, e.g. 1,2 or A1,A2")->required();
  cmd_certify->add_option("--pairs", pairs_arg, "dominance pairs, e.g. \"(3,4),(5,4)\"");
  cmd_certify->add_option("--eps", certify_eps, "epsilon (rational)");

  CommonOptions sim_opts;
  std::string x0_arg;
  double t_final = 50.0, tol = 1e-9;
  auto* cmd_simulate = app.add_subcommand("simulate", "integrate the mass-action dynamics");
  add_common(cmd_simulate, sim_opts);
  cmd_simulate->add_option("--x0", x0_arg, "initial state, comma separated")->required();
  cmd_simulate->add_option("--t-final", t_final, "integration horizon");
  cmd_simulate->add_option("--tol", tol, "local error tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_analyze->parsed()) {
      const crn::Network net = load_network(analyze_opts.file);
      crn::AnalysisConfig config;
      config.epsilon = require_rational(eps_text, "--eps");
      config.j_subset_cap = j_cap;
      config.siphon_cap = siphon_cap;
      config.assume_bounded = assume_bounded;
      config.threads = env_threads();
      const crn::AnalysisReport report = crn::analyze(net, config);
      if (analyze_opts.format == "json")
        emit(analyze_opts, crn::report_to_json(report, net).dump(2) + "\n");
      else
        emit(analyze_opts, crn::report_to_text(report, net));
      return kExitOk;
    }

    if (cmd_structure->parsed()) {
      const crn::Network net = load_network(structure_opts.file);
      const crn::StructureSummary s = crn::analyze_structure(net);
      if (structure_opts.format == "json") {
        nlohmann::ordered_json j;
        j["complexes"] = s.complex_count;
        j["linkage_classes"] = s.linkage_count;
        j["rank"] = s.stoich_rank;
        j["deficiency"] = s.deficiency;
        j["weakly_reversible"] = s.weakly_reversible;
        j["conservative"] = s.conservative;
        j["conservation_vector"] =
            s.conservation_vector
                ? nlohmann::ordered_json(crn::format_rational_vector(*s.conservation_vector))
                : nlohmann::ordered_json(nullptr);
        j["complex_balanced_for_all_k"] = s.complex_balanced_for_all_k;
        emit(structure_opts, j.dump(2) + "\n");
      } else {
        std::ostringstream os;
        os << "n=" << s.complex_count << ", l=" << s.linkage_count << ", s=" << s.stoich_rank
           << ", deficiency=" << s.deficiency << "\n"
           << (s.weakly_reversible ? "weakly reversible" : "not weakly reversible") << "\n"
           << (s.conservative ? "conservative" : "not conservative");
        if (s.conservation_vector) {
          os << ", c = (";
          const auto strs = crn::format_rational_vector(*s.conservation_vector);
          for (std::size_t i = 0; i < strs.size(); ++i) os << (i ? ", " : "") << strs[i];
          os << ")";
        }
        os << "\n";
        if (s.complex_balanced_for_all_k) os << "complex balanced for all rate constants\n";
        emit(structure_opts, os.str());
      }
      return kExitOk;
    }

    if (cmd_siphons->parsed()) {
      const crn::Network net = load_network(siphon_opts.file);
      const auto records = crn::enumerate_siphons(net, minimal_only, siphon_cap2);
      if (siphon_opts.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& rec : records) {
          nlohmann::ordered_json j;
          nlohmann::ordered_json names = nlohmann::ordered_json::array();
          for (std::size_t i : rec.members) names.push_back(net.species_name(i));
          j["I"] = std::move(names);
          j["locking"] = rec.locking;
          j["critical"] = rec.critical;
          j["trivial"] = rec.trivial;
          j["full_support_conservation"] = rec.full_support_conservation;
          j["face_dim"] = rec.geometry.face_dim;
          j["is_facet"] = rec.geometry.is_facet;
          j["is_vertex"] = rec.geometry.is_vertex;
          arr.push_back(std::move(j));
        }
        emit(siphon_opts, arr.dump(2) + "\n");
      } else {
        std::ostringstream os;
        for (std::size_t i = 0; i < records.size(); ++i)
          os << (i ? ", " : "") << species_set_text(records[i].members, net);
        os << "\n";
        emit(siphon_opts, os.str());
      }
      return kExitOk;
    }

    if (cmd_certify->parsed()) {
      const crn::Network net = load_network(certify_opts.file);
      const crn::SpeciesSet members = parse_siphon_arg(net, siphon_arg);
      const std::vector<crn::OrderPair> pairs = parse_pairs_arg(net, pairs_arg);
      const crn::Rational eps = require_rational(certify_eps, "--eps");
      const crn::WdneCheck chk = crn::check_wdne(net, members, pairs, eps);
      std::ostringstream os;
      if (chk.certificate) {
        const auto& cert = *chk.certificate;
        os << "certified: " << species_set_text(members, net) << " with J = [";
        for (std::size_t p = 0; p < cert.pairs.size(); ++p) {
          if (p) os << ", ";
          os << "(" << cert.pairs[p].dominated + 1 << "," << cert.pairs[p].dominating + 1 << ")";
        }
        os << "], epsilon = " << crn::format_rational(cert.epsilon) << "\nc = (";
        for (std::size_t i = 0; i < cert.c.size(); ++i)
          os << (i ? ", " : "") << crn::format_rational(cert.c[i]);
        os << ")\nalpha = (";
        for (std::size_t i = 0; i < cert.alpha.size(); ++i)
          os << (i ? ", " : "") << crn::format_rational(cert.alpha[i]);
        os << ")\n";
        emit(certify_opts, os.str());
        return kExitOk;
      }
      os << "not certified at epsilon = " << crn::format_rational(eps) << "; cone witness v = (";
      for (std::size_t i = 0; i < chk.cone_witness.size(); ++i)
        os << (i ? ", " : "") << crn::format_rational(chk.cone_witness[i]);
      os << ")\n";
      emit(certify_opts, os.str());
      return 1;
    }

    if (cmd_simulate->parsed()) {
      const crn::Network net = load_network(sim_opts.file);
      const std::vector<double> x0 =
          parse_vector_arg(x0_arg, net.species_count(), "--x0");
      crn::IntegrateOptions options;
      options.t_final = t_final;
      options.tol = tol;
      const crn::Trajectory traj = crn::integrate(net, x0, options);
      emit(sim_opts, crn::trajectory_csv(traj));
      return kExitOk;
    }
  } catch (const crn::EnumerationOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOverflow;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
