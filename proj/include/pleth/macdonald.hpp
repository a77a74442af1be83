#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "pleth/symfunc.hpp"

namespace pleth {

/// B_mu = sum over cells (i, j) of q^j t^i (0-based).
MPoly B_of(const Partition& mu);
/// psi_mu = 1 - (1-q)(1-t) B_mu, the D_0 eigenvalue of H~_mu.
RatFunc psi_of(const Partition& mu);
/// prod_s (1 - q^a t^(l+1)): J_mu / P_mu.
RatFunc j_factor(const Partition& mu);
/// (P_mu, P_mu)_{q,t} in closed form.
RatFunc p_norm(const Partition& mu);
/// Closed-form star norm (-1)^|mu| prod_s (q^a - t^(l+1)) (t^l - q^(a+1)).
RatFunc h_norm(const Partition& mu);

struct MacdonaldEntry {
  SymFunc P, J, H;  // p basis, natural q, t
};

/// P, J and H~ for every partition of one degree.
class MacdonaldTable {
 public:
  using Map = std::map<Partition, MacdonaldEntry, PartitionOrder>;

  MacdonaldTable() = default;
  explicit MacdonaldTable(int n) : n_(n) {}
  static MacdonaldTable compute(int n);

  int degree() const { return n_; }
  const Map& entries() const { return entries_; }
  const MacdonaldEntry& at(const Partition& mu) const;
  void set(const Partition& mu, MacdonaldEntry e) { entries_[mu] = std::move(e); }

  std::string serialize() const;
  /// Throws std::runtime_error on a bad header, version or body.
  static MacdonaldTable parse(const std::string& text);

 private:
  int n_ = 0;
  Map entries_;
};

inline constexpr int kMacdonaldCacheVersion = 1;

/// Memoized tables; reads and writes per-degree files when a cache directory is set.
const MacdonaldTable& macdonald_table(int n);
void set_macdonald_cache_dir(std::optional<std::filesystem::path> dir);
std::optional<std::filesystem::path> macdonald_cache_dir();
std::filesystem::path macdonald_cache_file(const std::filesystem::path& dir, int n);
/// Disk cache hits since start.
int macdonald_cache_hits();
/// Drops the in-memory memo (disk files untouched).
void clear_macdonald_memo();

const SymFunc& macdonald_P(const Partition& mu);
const SymFunc& macdonald_J(const Partition& mu);
const SymFunc& modified_H(const Partition& mu);

/// [x^0] Gamma_-(-x) Gamma_+(M x^-1) f.
SymFunc apply_D0(const SymFunc& f, const QT& qt = QT::natural());
/// q <-> t in the coefficients.
SymFunc swap_qt(const SymFunc& f);
/// q = z^2, t = w^2 in the coefficients.
SymFunc to_zw(const SymFunc& f);
RatFunc to_zw(const RatFunc& f);

}  // namespace pleth
