// rampart: batch CLI for the ramified partition algebra engine.
//
// Exit codes: 0 success, 2 validation error, 3 cap/resource error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rampart/rampart.hpp"

namespace {

using nlohmann::json;
using namespace rampart;

struct Config {
  int threads = 1;
  double tol = 1e-10;
  int cap = 12;
};

void apply_config_file(Config& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos)
      throw validation_error("config line " + std::to_string(lineno) +
                             ": expected key=value");
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "threads")
      cfg.threads = std::stoi(val);
    else if (key == "tol")
      cfg.tol = std::stod(val);
    else if (key == "cap")
      cfg.cap = std::stoi(val);
    else
      throw validation_error("config: unknown key '" + key + "'");
  }
}

void validate_config(const Config& cfg) {
  if (cfg.threads < 1) throw validation_error("threads must be >= 1");
  if (!(cfg.tol > 0 && cfg.tol < 1)) throw validation_error("tol must be in (0,1)");
  if (cfg.cap < 1) throw validation_error("cap must be positive");
}

// ---- basis -----------------------------------------------------------------

void cmd_basis(int n, int degree, int plain_m, const Config& cfg) {
  if (plain_m >= 0) {
    auto all = enumerate_ramified(Ground::plain(plain_m), Poset::chain(2), cfg.cap);
    std::cout << "|E(plain(" << plain_m << "))^(<2>)|\t" << all.size() << "\n";
    std::cout << "shape-formula\t" << count_chain2(plain_m) << "\n";
    return;
  }
  Poset poset = Poset::chain(degree);
  auto basis = enumerate_basis(n, poset, cfg.cap);
  if (degree == 2) {
    std::map<PropIndex, std::size_t> per_lambda;
    for (const auto& a : basis) ++per_lambda[prop_profile(a).lambda];
    std::cout << "lambda\tcount\n";
    for (const auto& [lam, cnt] : per_lambda)
      std::cout << lam.str() << "\t" << cnt << "\n";
  }
  std::cout << "total\t" << basis.size() << "\n";
}

// ---- mul -------------------------------------------------------------------

AlgebraElement element_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw validation_error("mul: element must be a nonempty array of terms");
  AlgebraElement acc;
  bool first = true;
  for (const auto& term : j) {
    if (!term.contains("diagram"))
      throw validation_error("mul: term missing 'diagram'");
    RamifiedPartition a = parse_serial(term.at("diagram").get<std::string>());
    std::string coeff = term.value("coeff", std::string("1"));
    AlgebraElement t = AlgebraElement::basis(a).scaled(
        MultiPoly::parse(coeff, q_vars(2)));
    acc = first ? t : acc + t;
    first = false;
  }
  return acc;
}

json element_to_json(const AlgebraElement& x) {
  json out = json::array();
  for (const auto& [a, c] : x.terms())
    out.push_back({{"diagram", print_serial(a)}, {"coeff", c.str()}});
  return out;
}

void cmd_mul(const std::string& path) {
  json input;
  if (path.empty() || path == "-") {
    std::cin >> input;
  } else {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open input file " + path);
    in >> input;
  }
  json ja, jb;
  if (input.is_object() && input.contains("a") && input.contains("b")) {
    ja = input["a"];
    jb = input["b"];
  } else if (input.is_array() && input.size() == 2) {
    ja = input[0];
    jb = input[1];
  } else {
    throw validation_error("mul: expected {\"a\":[...],\"b\":[...]} or a 2-array");
  }
  AlgebraElement prod = element_from_json(ja) * element_from_json(jb);
  std::cout << element_to_json(prod).dump(2) << "\n";
}

// ---- gram-det --------------------------------------------------------------

void cmd_gram_det(int n, const std::string& strategy, const Config& cfg) {
  PolyMatrix G = gram_trivial(n, cfg.cap);
  MultiPoly det(q_vars(2));
  if (strategy == "elimination") {
    det = det_exact(G);
  } else if (strategy == "interpolation") {
    det = det_interpolate(G);
  } else if (strategy == "both") {
    det = det_exact(G);
    if (!(det == det_interpolate(G)))
      throw validation_error("gram-det: strategies disagree (internal bug)");
  } else {
    throw validation_error("gram-det: unknown strategy '" + strategy + "'");
  }
  std::cout << det.str() << "\n";
}

// ---- simples ---------------------------------------------------------------

void cmd_simples(int n) {
  std::cout << "lambda\tsimples\n";
  std::uint64_t total = 0;
  for (const auto& lam : enumerate_prop_indices(n)) {
    std::uint64_t c = count_simples(lam);
    std::cout << lam.str() << "\t" << c << "\n";
    total += c;
  }
  std::cout << "total\t" << total << "\n";
}

// ---- zeros -----------------------------------------------------------------

Graph parse_layer_graph(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw validation_error("--H: expected path:<m> or cycle:<m>");
  std::string kind = spec.substr(0, colon);
  int m = 0;
  try {
    m = std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw validation_error("--H: bad size in '" + spec + "'");
  }
  if (kind == "path") return Graph::path(m);
  if (kind == "cycle") return Graph::cycle(m);
  throw validation_error("--H: unknown layer graph '" + kind + "'");
}

void cmd_zeros(const std::string& hspec, int l, int q, std::vector<int> f,
               const std::string& bc, const std::string& out,
               const std::string& gnuplot, const Config& cfg) {
  Graph H = parse_layer_graph(hspec);
  EdgeHamiltonian ham = EdgeHamiltonian::make(q, std::move(f));
  bool periodic;
  if (bc == "free")
    periodic = false;
  else if (bc == "periodic")
    periodic = true;
  else
    throw validation_error("--bc must be free or periodic");
  UniPoly z = partition_function(H, l, periodic, ham);
  auto roots = partition_zeros(z, cfg.tol);
  write_roots_csv(out, roots);
  if (!gnuplot.empty()) write_gnuplot_script(gnuplot, out);
  std::cout << "deg Z\t" << z.degree() << "\n"
            << "Z(1)\t" << z.evaluate(1) << "\n"
            << "roots\t" << roots.size() << "\n"
            << "csv\t" << out << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for ramified partition algebras and clock-model zeros"};
  app.require_subcommand(1);

  Config cfg;
  if (const char* env = std::getenv("RAMPART_THREADS")) cfg.threads = std::atoi(env);
  std::string config_path;
  app.add_option("--threads", cfg.threads, "worker thread count");
  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--tol", cfg.tol, "root-finder tolerance");
  app.add_option("--cap", cfg.cap, "enumeration cap");

  auto* basis = app.add_subcommand("basis", "basis sizes, per-lambda for <2>");
  int basis_n = 1, basis_degree = 2, basis_plain = -1;
  basis->add_option("-n,--n", basis_n, "diagram size n");
  basis->add_option("-d,--degree", basis_degree, "chain poset length");
  basis->add_option("--plain", basis_plain, "count ramified partitions of plain(m)");

  auto* mul = app.add_subcommand("mul", "multiply two JSON elements");
  std::string mul_in;
  mul->add_option("-i,--in", mul_in, "JSON input file (default stdin)");

  auto* gram = app.add_subcommand("gram-det", "exact gram determinant, trivial lambda");
  int gram_n = 2;
  std::string gram_strategy = "elimination";
  gram->add_option("-n,--n", gram_n, "diagram size n")->required();
  gram->add_option("--strategy", gram_strategy,
                   "elimination | interpolation | both");

  auto* simples = app.add_subcommand("simples", "simple-module counts per lambda (TSV)");
  int simples_n = 2;
  simples->add_option("-n,--n", simples_n, "diagram size n")->required();

  auto* zeros = app.add_subcommand("zeros", "partition-function zeros to CSV");
  std::string z_h = "cycle:4", z_bc = "free", z_out = "roots.csv", z_gnuplot;
  int z_l = 5, z_q = 4;
  std::vector<int> z_f;
  zeros->add_option("--H", z_h, "layer graph, path:<m> or cycle:<m>")->required();
  zeros->add_option("--l", z_l, "number of layers")->required();
  zeros->add_option("--q", z_q, "spin states")->required();
  zeros->add_option("--f", z_f, "f(0..q/2) or f(0..q-1), comma separated")
      ->required()
      ->delimiter(',');
  zeros->add_option("--bc", z_bc, "free | periodic");
  zeros->add_option("--out", z_out, "output CSV path");
  zeros->add_option("--gnuplot", z_gnuplot, "also emit a gnuplot script");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    validate_config(cfg);
    if (*basis) cmd_basis(basis_n, basis_degree, basis_plain, cfg);
    if (*mul) cmd_mul(mul_in);
    if (*gram) cmd_gram_det(gram_n, gram_strategy, cfg);
    if (*simples) cmd_simples(simples_n);
    if (*zeros)
      cmd_zeros(z_h, z_l, z_q, z_f, z_bc, z_out, z_gnuplot, cfg);
  } catch (const cap_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
