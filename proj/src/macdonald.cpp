#include "pleth/macdonald.hpp"

#include <fstream>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace pleth {

namespace {

RatFunc qpow_tpow(int a, int b) {
  Monomial m;
  m.set(var("q").index(), a);
  m.set(var("t").index(), b);
  return RatFunc::monomial(m);
}

}  // namespace

MPoly B_of(const Partition& mu) {
  MPoly b;
  for (auto [i, j] : mu.cells()) b += qpow_tpow(j, i).polynomial();
  return b;
}

RatFunc psi_of(const Partition& mu) { return RatFunc(1) - QT::natural().M() * RatFunc(B_of(mu)); }

RatFunc j_factor(const Partition& mu) {
  RatFunc r(1);
  for (auto [i, j] : mu.cells()) r *= RatFunc(1) - qpow_tpow(mu.arm(i, j), mu.leg(i, j) + 1);
  return r;
}

RatFunc p_norm(const Partition& mu) {
  RatFunc r(1);
  for (auto [i, j] : mu.cells()) {
    int a = mu.arm(i, j), l = mu.leg(i, j);
    r *= (RatFunc(1) - qpow_tpow(a + 1, l)) / (RatFunc(1) - qpow_tpow(a, l + 1));
  }
  return r;
}

RatFunc h_norm(const Partition& mu) {
  RatFunc r(mu.size() % 2 ? -1 : 1);
  for (auto [i, j] : mu.cells()) {
    int a = mu.arm(i, j), l = mu.leg(i, j);
    r *= (qpow_tpow(a, 0) - qpow_tpow(0, l + 1)) * (qpow_tpow(0, l) - qpow_tpow(a + 1, 0));
  }
  return r;
}

SymFunc swap_qt(const SymFunc& f) {
  int q = var("q").index(), t = var("t").index();
  std::vector<std::pair<int, Monomial>> img{{q, Monomial::of(var("t"))}, {t, Monomial::of(var("q"))}};
  return f.map_coefficients([&](const RatFunc& c) { return c.map_monomials(img); });
}

RatFunc to_zw(const RatFunc& f) {
  std::vector<std::pair<int, Monomial>> img{{var("q").index(), Monomial::of(var("z"), 2)},
                                            {var("t").index(), Monomial::of(var("w"), 2)}};
  return f.map_monomials(img);
}

SymFunc to_zw(const SymFunc& f) {
  return f.map_coefficients([](const RatFunc& c) { return to_zw(c); });
}

SymFunc apply_D0(const SymFunc& f, const QT& qt) {
  Var x("x");
  SymFunc pf = f.in_p();
  SymFunc shifted = gamma_plus(pf, Alphabet::symbolic(qt.M() * RatFunc::monomial(Monomial::of(x, -1))));
  // Group by the power of x^-1, then multiply by Exp(-xX) = sum (-x)^n e_n.
  std::map<int, SymFunc> by_power;
  for (const auto& [mu, c] : shifted.terms())
    for (const auto& [e, ce] : c.coefficients_in(x)) {
      if (e > 0) throw std::logic_error("apply_D0: positive power of x");
      by_power[-e].add(mu, ce);
    }
  SymFunc r;
  for (const auto& [n, g] : by_power) {
    if (n == 0) {
      r += g;
      continue;
    }
    SymFunc en = SymFunc::element(Basis::e, Partition{n});
    r += en * g * RatFunc(n % 2 ? -1 : 1);
  }
  return r;
}

// ---- tables ----

MacdonaldTable MacdonaldTable::compute(int n) {
  MacdonaldTable table(n);
  const auto& parts = partitions(n);
  std::map<Partition, SymFunc, PartitionOrder> P;
  // Increasing lexicographic order is a linear extension of dominance.
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    const Partition& mu = *it;
    SymFunc m = SymFunc::element(Basis::m, mu).in_p();
    SymFunc p = m;
    for (const auto& [nu, pnu] : P) {
      if (!nu.dominated_by(mu)) continue;
      RatFunc c = inner_qt(m, pnu) / p_norm(nu);
      if (!c.is_zero()) p -= pnu * c;
    }
    P.emplace(mu, p);
  }
  int t = var("t").index();
  std::vector<std::pair<int, Monomial>> invert_t{{t, Monomial::of(var("t"), -1)}};
  for (const auto& mu : parts) {
    MacdonaldEntry e;
    e.P = P.at(mu);
    e.J = e.P * j_factor(mu);
    SymFunc h(Basis::p);
    RatFunc pre = RatFunc::monomial(Monomial::of(var("t"), mu.n()));
    for (const auto& [lam, c] : e.J.terms()) {
      RatFunc v = c.map_monomials(invert_t) * pre;
      for (int k : lam.parts()) v /= RatFunc(1) - qpow_tpow(0, -k);
      h.add(lam, v);
    }
    e.H = h;
    table.entries_.emplace(mu, std::move(e));
  }
  return table;
}

const MacdonaldEntry& MacdonaldTable::at(const Partition& mu) const {
  auto it = entries_.find(mu);
  if (it == entries_.end()) throw std::out_of_range("MacdonaldTable: no entry for " + mu.str());
  return it->second;
}

namespace {

const char* kHeader = "pleth-macdonald-table";

void write_symfunc(std::ostream& os, const char* tag, const Partition& mu, const SymFunc& f) {
  for (const auto& [lam, c] : f.terms()) os << tag << ' ' << mu.str() << ' ' << lam.str() << ' ' << c.str() << '\n';
}

}  // namespace

std::string MacdonaldTable::serialize() const {
  std::ostringstream os;
  os << kHeader << ' ' << kMacdonaldCacheVersion << '\n';
  os << "vars " << VarSet({var("q"), var("t")}).str() << '\n';
  os << "degree " << n_ << '\n';
  for (const auto& [mu, e] : entries_) {
    os << "entry " << mu.str() << '\n';
    write_symfunc(os, "P", mu, e.P);
    write_symfunc(os, "J", mu, e.J);
    write_symfunc(os, "H", mu, e.H);
  }
  os << "end\n";
  return os.str();
}

MacdonaldTable MacdonaldTable::parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  auto fail = [](const std::string& why) { throw std::runtime_error("macdonald cache: " + why); };
  if (!std::getline(is, line)) fail("empty file");
  {
    std::istringstream h(line);
    std::string tag;
    int version = -1;
    h >> tag >> version;
    if (tag != kHeader) fail("bad header");
    if (version != kMacdonaldCacheVersion) fail("version " + std::to_string(version) + " does not match");
  }
  if (!std::getline(is, line) || line.rfind("vars ", 0) != 0) fail("missing vars line");
  VarSet vars = VarSet::parse(line.substr(5));
  if (!(vars == VarSet({var("q"), var("t")}))) fail("unexpected variables");
  if (!std::getline(is, line) || line.rfind("degree ", 0) != 0) fail("missing degree line");
  MacdonaldTable table(std::stoi(line.substr(7)));
  bool ended = false;
  while (std::getline(is, line)) {
    if (line == "end") {
      ended = true;
      break;
    }
    std::istringstream l(line);
    std::string tag, mu_s, lam_s;
    l >> tag >> mu_s;
    Partition mu = Partition::parse(mu_s);
    if (mu.size() != table.n_) fail("partition of wrong size");
    if (tag == "entry") {
      table.entries_[mu];
      continue;
    }
    l >> lam_s;
    std::string rest;
    std::getline(l, rest);
    if (rest.empty()) fail("truncated line");
    RatFunc c = RatFunc::parse(rest.substr(1));
    auto it = table.entries_.find(mu);
    if (it == table.entries_.end()) fail("term before entry");
    SymFunc* f = tag == "P" ? &it->second.P : tag == "J" ? &it->second.J : tag == "H" ? &it->second.H : nullptr;
    if (!f) fail("unknown tag '" + tag + "'");
    f->add(Partition::parse(lam_s), c);
  }
  if (!ended) fail("missing end marker");
  if (table.entries_.size() != partitions(table.n_).size()) fail("incomplete table");
  return table;
}

namespace {

struct Memo {
  std::mutex mu;
  std::map<int, std::shared_ptr<const MacdonaldTable>> tables;
  std::optional<std::filesystem::path> dir;
  int hits = 0;
};

Memo& memo() {
  static Memo m;
  return m;
}

std::optional<MacdonaldTable> load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return MacdonaldTable::parse(ss.str());
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

std::filesystem::path macdonald_cache_file(const std::filesystem::path& dir, int n) {
  return dir / ("macdonald-v" + std::to_string(kMacdonaldCacheVersion) + "-n" + std::to_string(n) + ".txt");
}

void set_macdonald_cache_dir(std::optional<std::filesystem::path> dir) {
  std::lock_guard<std::mutex> lock(memo().mu);
  memo().dir = std::move(dir);
}

std::optional<std::filesystem::path> macdonald_cache_dir() {
  std::lock_guard<std::mutex> lock(memo().mu);
  return memo().dir;
}

int macdonald_cache_hits() {
  std::lock_guard<std::mutex> lock(memo().mu);
  return memo().hits;
}

void clear_macdonald_memo() {
  std::lock_guard<std::mutex> lock(memo().mu);
  memo().tables.clear();
}

const MacdonaldTable& macdonald_table(int n) {
  Memo& m = memo();
  std::optional<std::filesystem::path> dir;
  {
    std::lock_guard<std::mutex> lock(m.mu);
    auto it = m.tables.find(n);
    if (it != m.tables.end()) return *it->second;
    dir = m.dir;
  }
  std::optional<MacdonaldTable> table;
  bool from_disk = false;
  if (dir) {
    table = load(macdonald_cache_file(*dir, n));
    from_disk = table.has_value();
  }
  if (!table) table = MacdonaldTable::compute(n);
  if (dir && !from_disk) {
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    auto file = macdonald_cache_file(*dir, n);
    auto tmp = file;
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << table->serialize();
    }
    std::filesystem::rename(tmp, file, ec);
  }
  std::lock_guard<std::mutex> lock(m.mu);
  if (from_disk) ++m.hits;
  auto [it, inserted] = m.tables.emplace(n, std::make_shared<const MacdonaldTable>(std::move(*table)));
  return *it->second;
}

const SymFunc& macdonald_P(const Partition& mu) { return macdonald_table(mu.size()).at(mu).P; }
const SymFunc& macdonald_J(const Partition& mu) { return macdonald_table(mu.size()).at(mu).J; }
const SymFunc& modified_H(const Partition& mu) { return macdonald_table(mu.size()).at(mu).H; }

}  // namespace pleth
