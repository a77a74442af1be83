// Command-line driver for the verification suites.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pleth/coreidentities.hpp"

using namespace pleth;
using Json = nlohmann::ordered_json;

namespace {

constexpr const char* kEngineVersion = "pleth 1.0.0";
// Symbolic u_1..u_g share the 16-slot variable registry with q, t, z, w, ...
constexpr int kSymbolicUCeiling = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string identity;
  std::string cache_action;
  int g = -1, k = -1, k2 = -1, n = -1, r = -1, s = -1, size = -1, order = -1;
  int points = 5;
  unsigned seed = 1;
  bool symbolic_x = false;
  std::string parity = "even";
  std::string lambda;
  std::string basis = "s";
  std::string u_mode = "symbolic";
  std::string u_values;
  std::string equality = "exact";
  int workers = 1;
  std::string cache_dir;
  std::string format = "json";
  bool timing = false;
};

int pick(int v, int fallback) { return v >= 0 ? v : fallback; }

void add_common(CLI::App* c, RunConfig& cfg) {
  c->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  c->add_option("--equality", cfg.equality, "exact | probabilistic")->check(CLI::IsMember({"exact", "probabilistic"}));
  c->add_option("--cache-dir", cfg.cache_dir, "Macdonald table cache (default $PLETH_CACHE_DIR)");
  c->add_option("--format", cfg.format, "json | csv | pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  c->add_flag("--timing", cfg.timing, "append wall time and cache hits");
}

void add_params(CLI::App* c, RunConfig& cfg) {
  c->add_option("--g", cfg.g, "genus")->check(CLI::NonNegativeNumber);
  c->add_option("--k", cfg.k, "punctures")->check(CLI::NonNegativeNumber);
  c->add_option("--k2", cfg.k2, "punctures of the second factor (boundary gluing)")->check(CLI::NonNegativeNumber);
  c->add_option("--n", cfg.n, "truncation degree")->check(CLI::NonNegativeNumber);
  c->add_option("--r", cfg.r, "core order / row bound")->check(CLI::PositiveNumber);
  c->add_option("--s", cfg.s, "column bound (cmn)")->check(CLI::NonNegativeNumber);
  c->add_option("--size", cfg.size, "partition size bound")->check(CLI::NonNegativeNumber);
  c->add_option("--order", cfg.order, "series order / u-order")->check(CLI::NonNegativeNumber);
  c->add_option("--points", cfg.points, "random x-specializations per core (bernstein)")->check(CLI::PositiveNumber);
  c->add_option("--seed", cfg.seed, "seed for random specializations");
  c->add_flag("--symbolic-x", cfg.symbolic_x, "keep x_1, x_2 symbolic (bernstein, r <= 2)");
  c->add_option("--parity", cfg.parity, "even | odd (cmn)")->check(CLI::IsMember({"even", "odd"}));
  c->add_option("--u-mode", cfg.u_mode, "symbolic | unit | values")->check(CLI::IsMember({"symbolic", "unit", "values"}));
  c->add_option("--u", cfg.u_values, "comma-separated rationals for --u-mode values");
}

std::vector<RatFunc> resolve_u(const RunConfig& cfg, int g) {
  if (cfg.u_mode == "symbolic") {
    if (g > kSymbolicUCeiling)
      throw UsageError("symbolic u allowed only for g <= " + std::to_string(kSymbolicUCeiling) + "; use --u-mode unit or values");
    return {};
  }
  if (cfg.u_mode == "unit") return std::vector<RatFunc>(static_cast<size_t>(g), RatFunc(1));
  std::vector<RatFunc> vals;
  std::stringstream ss(cfg.u_values);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Rational v = Rational::parse(item);
    if (v.is_zero()) throw UsageError("u values must be nonzero");
    vals.emplace_back(v);
  }
  if (vals.size() == 1) vals.resize(static_cast<size_t>(g), vals[0]);
  if (static_cast<int>(vals.size()) != g) throw UsageError("--u needs one value or g values");
  return vals;
}

Json parts_json(const Partition& p) { return Json(p.parts()); }

Json report_json(const Report& rep) {
  Json j;
  j["identity"] = rep.identity;
  Json params = Json::object();
  for (const auto& [key, value] : rep.parameters) params[key] = value;
  j["parameters"] = params;
  j["order_checked"] = rep.order_checked;
  j["pass"] = rep.pass;
  j["authoritative"] = rep.authoritative;
  j["checks"] = rep.items.size();
  j["failures"] = rep.failures();
  if (const CheckItem* f = rep.first_failure()) j["first_failure"] = {{"label", f->label}, {"lhs", f->lhs}, {"rhs", f->rhs}};
  Json items = Json::array();
  for (const auto& it : rep.items) items.push_back({{"label", it.label}, {"pass", it.pass}});
  j["items"] = items;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string report_pretty(const Report& rep) {
  std::ostringstream os;
  os << "identity: " << rep.identity << "\n";
  os << "parameters:";
  for (const auto& [key, value] : rep.parameters) os << " " << key << "=" << value;
  os << "\norder checked: " << rep.order_checked << "\n";
  os << "result: " << (rep.pass ? "PASS" : "FAIL") << " (" << rep.items.size() - rep.failures() << "/" << rep.items.size()
     << " checks)" << (rep.authoritative ? "" : " [probabilistic, not authoritative]") << "\n";
  if (const CheckItem* f = rep.first_failure()) {
    os << "first failure: " << f->label << "\n";
    if (!f->lhs.empty() || !f->rhs.empty()) os << "  lhs: " << f->lhs << "\n  rhs: " << f->rhs << "\n";
  }
  return os.str();
}

std::string report_csv(const Report& rep) {
  std::ostringstream os;
  os << "identity,label,pass\n";
  for (const auto& it : rep.items) os << csv_field(rep.identity) << "," << csv_field(it.label) << "," << (it.pass ? "true" : "false") << "\n";
  return os.str();
}

struct Output {
  std::string format;
  bool timing;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  double elapsed() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); }

  void stamp(Json& j) const {
    j["engine_version"] = kEngineVersion;
    if (timing) {
      j["wall_time_s"] = elapsed();
      j["cache_hits"] = macdonald_cache_hits();
    }
  }
  std::string timing_line() const {
    std::ostringstream os;
    os << "wall time: " << elapsed() << " s, cache hits: " << macdonald_cache_hits() << "\n";
    return os.str();
  }

  int emit(const Report& rep) const {
    if (format == "json") {
      Json j = report_json(rep);
      stamp(j);
      std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
      std::cout << report_csv(rep);
      if (timing) std::cerr << timing_line();
    } else {
      std::cout << report_pretty(rep);
      if (timing) std::cout << timing_line();
    }
    return rep.pass ? 0 : 1;
  }
};

Report run_identity(const RunConfig& c) {
  const std::string& id = c.identity;
  if (id == "cno") return verify_cno(pick(c.n, 3));
  if (id == "genus1") return verify_genus1(pick(c.n, 4));
  if (id == "tennis") return verify_tennis(pick(c.n, 4));
  if (id == "bridge") return verify_bridge(pick(c.n, 3));
  if (id == "euler") return verify_euler_specialization(pick(c.n, 5));
  if (id == "fernlem") return verify_fernlem(pick(c.n, 5), pick(c.order, 5));
  if (id == "macid") return verify_mac_id(pick(c.r, 2), pick(c.order, pick(c.n, 10)));
  if (id == "2core") return verify_2core(pick(c.n, pick(c.order, 8)));
  if (id == "tcore") return verify_t_core(pick(c.r, 3), pick(c.size, 12));
  if (id == "bernstein") {
    int r = pick(c.r, 3);
    if (c.symbolic_x) {
      if (r > 2) throw UsageError("--symbolic-x supports r <= 2");
      return verify_bernstein_symbolic(r, pick(c.size, 10));
    }
    return verify_bernstein_suite(r, pick(c.size, 12), c.points, c.seed);
  }
  if (id == "h2") return verify_h2_formula(pick(c.g, 1));
  if (id == "h2z1") return verify_h2_specialization(pick(c.g, 1));
  if (id == "cmn") return verify_cmn_polynomiality(c.parity == "odd" ? 1 : 0, pick(c.r, 3), pick(c.s, 3));
  if (id == "gluing") return verify_gluing(pick(c.g, 0), pick(c.k, 0), pick(c.n, 3));
  if (id == "boundary") return verify_boundary_gluing(pick(c.k, 3), pick(c.k2, 3), pick(c.n, 3));
  throw UsageError("unknown identity '" + id + "'");
}

std::string key_text(const Tensor::Key& key) {
  std::string s;
  for (const auto& p : key) s += (s.empty() ? "" : "|") + p.str();
  return s;
}

int cmd_hh(const RunConfig& c, const Output& out) {
  SurfaceSpec spec{pick(c.g, 0), pick(c.k, 0), pick(c.n, 3), {}};
  if (spec.n_max < 1) throw UsageError("--n must be >= 1");
  spec.u = resolve_u(c, spec.g);
  HHTable table = hh_coefficients(spec);
  Report rep = verify_positivity(table);
  rep.param("u_mode", c.u_mode);
  struct Row {
    int n;
    Tensor::Key key;
    std::string num, den;
    bool poly, nonneg;
  };
  std::vector<Row> rows;
  for (const auto& [key, value] : table.entries) {
    RatFunc f = value.normalize();
    bool poly = f.is_laurent_polynomial();
    int n = 0;
    for (const auto& p : key) n = std::max(n, p.size());
    Tensor::Key shown = spec.k == 0 ? Tensor::Key{} : key;
    rows.push_back({n, shown, f.numerator().str(), f.denominator().str(), poly, poly && has_nonneg_coeffs(f, {var("z")})});
  }
  if (c.format == "json") {
    Json j;
    j["command"] = "hh";
    j["g"] = spec.g;
    j["k"] = spec.k;
    j["n_max"] = spec.n_max;
    j["u_mode"] = c.u_mode;
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json lt = Json::array();
      for (const auto& p : r.key) lt.push_back(parts_json(p));
      arr.push_back({{"g", spec.g}, {"k", spec.k}, {"n", r.n}, {"lambda_tuple", lt}, {"numerator", r.num}, {"denominator", r.den},
                     {"is_polynomial", r.poly}, {"nonneg_after_sign_flip", r.nonneg}});
    }
    j["rows"] = arr;
    j["report"] = report_json(rep);
    out.stamp(j);
    std::cout << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::cout << "g,k,n,lambda_tuple,numerator,denominator,is_polynomial,nonneg_after_sign_flip\n";
    for (const auto& r : rows)
      std::cout << spec.g << "," << spec.k << "," << r.n << "," << csv_field(key_text(r.key)) << "," << csv_field(r.num) << ","
                << csv_field(r.den) << "," << (r.poly ? "true" : "false") << "," << (r.nonneg ? "true" : "false") << "\n";
    if (out.timing) std::cerr << out.timing_line();
  } else {
    for (const auto& r : rows) {
      std::cout << "HH" << (r.key.empty() ? "(" + std::to_string(r.n) + ")" : key_text(r.key)) << " = " << r.num;
      if (r.den != "1") std::cout << "  /  " << r.den;
      std::cout << (r.poly ? "" : "  [not polynomial]") << (r.nonneg ? "" : "  [sign]") << "\n";
    }
    std::cout << report_pretty(rep);
    if (out.timing) std::cout << out.timing_line();
  }
  return rep.pass ? 0 : 1;
}

Json symfunc_json(const SymFunc& f, Basis b) {
  Json j = Json::object();
  SymFunc g = f.to(b);
  for (const auto& [mu, c] : g.terms()) j[mu.str()] = c.str();
  return j;
}

int cmd_macdonald(const RunConfig& c, const Output& out) {
  int n = pick(c.n, 2);
  Basis b = parse_basis(c.basis);
  const MacdonaldTable& table = macdonald_table(n);
  std::vector<Partition> order;
  for (const auto& [mu, e] : table.entries()) order.push_back(mu);
  if (c.format == "json") {
    Json j;
    j["command"] = "macdonald";
    j["degree"] = n;
    j["basis"] = basis_name(b);
    Json arr = Json::array();
    for (const auto& mu : order) {
      const MacdonaldEntry& e = table.at(mu);
      arr.push_back({{"mu", parts_json(mu)},
                     {"B", B_of(mu).str()},
                     {"psi", psi_of(mu).str()},
                     {"h_norm", h_norm(mu).str()},
                     {"p_norm", p_norm(mu).str()},
                     {"H", symfunc_json(e.H, b)},
                     {"P", symfunc_json(e.P, b)},
                     {"J", symfunc_json(e.J, b)}});
    }
    j["entries"] = arr;
    out.stamp(j);
    std::cout << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::cout << "mu,family,basis_element,coefficient\n";
    for (const auto& mu : order) {
      const MacdonaldEntry& e = table.at(mu);
      for (auto [name, f] : {std::pair{"H", &e.H}, std::pair{"P", &e.P}, std::pair{"J", &e.J}}) {
        SymFunc g = f->to(b);
        for (const auto& [nu, coef] : g.terms())
          std::cout << csv_field(mu.str()) << "," << name << "," << csv_field(basis_name(b) + nu.str()) << "," << csv_field(coef.str()) << "\n";
      }
    }
    if (out.timing) std::cerr << out.timing_line();
  } else {
    for (const auto& mu : order) {
      const MacdonaldEntry& e = table.at(mu);
      std::cout << "mu = " << mu.str() << "\n";
      std::cout << "  B     = " << B_of(mu).str() << "\n  psi   = " << psi_of(mu).str() << "\n";
      std::cout << "  norm* = " << h_norm(mu).str() << "\n  normqt(P) = " << p_norm(mu).str() << "\n";
      std::cout << "  H~ = " << e.H.to(b).str() << "\n  P  = " << e.P.to(b).str() << "\n  J  = " << e.J.to(b).str() << "\n";
    }
    if (out.timing) std::cout << out.timing_line();
  }
  return 0;
}

Json ints_json(const std::vector<int>& v) { return Json(v); }

int cmd_core(const RunConfig& c, const Output& out) {
  int r = pick(c.r, 3);
  std::vector<Partition> list;
  if (!c.lambda.empty()) list.push_back(Partition::parse(c.lambda));
  else list = cores_up_to(r, pick(c.size, 12));
  Json arr = Json::array();
  std::ostringstream text, csv;
  csv << "lambda,r,size,is_core,core,n_vector,v_vector\n";
  for (const auto& lam : list) {
    Partition core = core_of(lam, r);
    std::vector<int> nv = core_vector(lam, r), vv = core_shifted_vector(core, r);
    arr.push_back({{"lambda", parts_json(lam)}, {"r", r}, {"size", lam.size()}, {"is_core", is_core(lam, r)},
                   {"core", parts_json(core)}, {"n_vector", ints_json(nv)}, {"v_vector", ints_json(vv)}});
    auto vec = [](const std::vector<int>& v) {
      std::string s;
      for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
      return "(" + s + ")";
    };
    text << lam.str() << "  core " << core.str() << "  n " << vec(nv) << "  v " << vec(vv) << "\n";
    csv << csv_field(lam.str()) << "," << r << "," << lam.size() << "," << (is_core(lam, r) ? "true" : "false") << ","
        << csv_field(core.str()) << "," << vec(nv) << "," << vec(vv) << "\n";
  }
  if (c.format == "json") {
    Json j;
    j["command"] = "core";
    j["r"] = r;
    j["cores"] = arr;
    out.stamp(j);
    std::cout << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::cout << csv.str();
    if (out.timing) std::cerr << out.timing_line();
  } else {
    std::cout << text.str();
    if (out.timing) std::cout << out.timing_line();
  }
  return 0;
}

std::optional<MacdonaldTable> read_table(const std::filesystem::path& file, std::string& error) {
  std::ifstream in(file);
  if (!in) {
    error = "missing";
    return std::nullopt;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return MacdonaldTable::parse(ss.str());
  } catch (const std::exception& e) {
    error = e.what();
    return std::nullopt;
  }
}

bool same_table(const MacdonaldTable& a, const MacdonaldTable& b) {
  if (a.degree() != b.degree() || a.entries().size() != b.entries().size()) return false;
  for (const auto& [mu, e] : a.entries()) {
    auto it = b.entries().find(mu);
    if (it == b.entries().end()) return false;
    if (e.P != it->second.P || e.J != it->second.J || e.H != it->second.H) return false;
  }
  return true;
}

Report run_cache(const RunConfig& c) {
  auto dir = macdonald_cache_dir();
  if (!dir) throw UsageError("cache needs --cache-dir or PLETH_CACHE_DIR");
  int n_max = pick(c.n, 4);
  Report rep("cache-" + c.cache_action);
  rep.param("n", n_max).param("version", kMacdonaldCacheVersion);
  rep.order_checked = n_max;
  if (c.cache_action == "build") std::filesystem::create_directories(*dir);
  for (int n = 0; n <= n_max; ++n) {
    auto file = macdonald_cache_file(*dir, n);
    std::string label = "degree " + std::to_string(n);
    if (c.cache_action == "build") {
      std::ofstream outf(file);
      outf << MacdonaldTable::compute(n).serialize();
      rep.check_true(label + " written", static_cast<bool>(outf));
      continue;
    }
    std::string error;
    auto table = read_table(file, error);
    if (!table) {
      rep.check_true(label + " readable", false, error);
      continue;
    }
    if (c.cache_action == "load")
      rep.check_true(label + " loaded", table->degree() == n, std::to_string(table->entries().size()) + " entries");
    else
      rep.check_true(label + " matches recomputation", same_table(*table, MacdonaldTable::compute(n)));
  }
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of hook-function and Macdonald polynomial identities."};
  app.require_subcommand(1);
  app.set_version_flag("--version", kEngineVersion);
  RunConfig cfg;

  auto* hh = app.add_subcommand("hh", "HH coefficients of Omega_{g,k} with polynomiality and sign checks");
  auto* identity = app.add_subcommand("identity", "run one identity suite");
  identity->add_option("name", cfg.identity, "identity name")
      ->required()
      ->check(CLI::IsMember({"cno", "genus1", "tennis", "macid", "tcore", "2core", "euler", "fernlem", "h2", "h2z1", "cmn",
                             "gluing", "boundary", "bridge", "bernstein"}));
  auto* mac = app.add_subcommand("macdonald", "dump H~, P, J, norms and psi for one degree");
  mac->add_option("--basis", cfg.basis, "p | m | e | h | s")->check(CLI::IsMember({"p", "m", "e", "h", "s"}));
  auto* core = app.add_subcommand("core", "r-cores and their vectors");
  core->add_option("--lambda", cfg.lambda, "single partition, e.g. 5,3,1,1");
  auto* cache = app.add_subcommand("cache", "build, load or verify Macdonald table files");
  cache->add_option("action", cfg.cache_action, "build | load | verify")->required()->check(CLI::IsMember({"build", "load", "verify"}));
  for (auto* c : {hh, identity, mac, core, cache}) {
    add_common(c, cfg);
    add_params(c, cfg);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    set_worker_count(cfg.workers);
    set_equality_mode(cfg.equality == "exact" ? EqualityMode::exact : EqualityMode::probabilistic);
    std::string dir = cfg.cache_dir;
    if (dir.empty())
      if (const char* env = std::getenv("PLETH_CACHE_DIR")) dir = env;
    if (!dir.empty()) set_macdonald_cache_dir(std::filesystem::path(dir));

    Output out{cfg.format, cfg.timing};
    if (hh->parsed()) return cmd_hh(cfg, out);
    if (identity->parsed()) return out.emit(run_identity(cfg));
    if (mac->parsed()) return cmd_macdonald(cfg, out);
    if (core->parsed()) return cmd_core(cfg, out);
    return out.emit(run_cache(cfg));
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
