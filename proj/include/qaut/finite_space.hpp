#pragma once

// B = M_{n_1} + ... + M_{n_m} with matrix-unit basis e_{kl,x}, ordered by
// block x, then row k, then column l (all 1-based).

#include <cstddef>
#include <optional>
#include <vector>

#include "qaut/gaussq.hpp"

namespace qaut {

struct BasisIndex {
  int k = 1;
  int l = 1;
  int x = 1;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

class FiniteSpace {
 public:
  /// Throws std::invalid_argument for an empty list or a non-positive block.
  explicit FiniteSpace(std::vector<int> blocks);

  static FiniteSpace points(int n) { return FiniteSpace(std::vector<int>(n, 1)); }
  static FiniteSpace matrices(int n) { return FiniteSpace({n}); }

  const std::vector<int>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_size(int x) const { return blocks_[x - 1]; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisIndex>& basis() const { return basis_; }
  const BasisIndex& at(std::size_t pos) const { return basis_[pos]; }
  std::size_t index(int k, int l, int x) const;
  std::size_t index(const BasisIndex& e) const { return index(e.k, e.l, e.x); }

  /// e_{kl,x} e_{rs,y} = delta_xy delta_lr e_{ks,x}; nullopt for zero.
  std::optional<std::size_t> product(std::size_t a, std::size_t b) const;
  /// e_{kl,x}^* = e_{lk,x}.
  std::size_t star(std::size_t a) const;
  /// Coordinates of the unit sum_x sum_p e_{pp,x}.
  std::vector<GaussQ> unit() const;
  /// psi(e_{kl,x}) = delta_kl.
  GaussQ psi(std::size_t a) const;
  std::vector<GaussQ> psi_weights() const;

 private:
  std::vector<int> blocks_;
  std::vector<std::size_t> offset_;
  std::vector<BasisIndex> basis_;
};

}  // namespace qaut
