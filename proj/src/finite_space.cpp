#include "qaut/finite_space.hpp"

#include <stdexcept>

namespace qaut {

FiniteSpace::FiniteSpace(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("FiniteSpace: empty block list");
  std::size_t off = 0;
  for (std::size_t x = 0; x < blocks_.size(); ++x) {
    const int n = blocks_[x];
    if (n <= 0) throw std::invalid_argument("FiniteSpace: block sizes must be positive");
    offset_.push_back(off);
    for (int k = 1; k <= n; ++k) {
      for (int l = 1; l <= n; ++l) basis_.push_back({k, l, static_cast<int>(x) + 1});
    }
    off += static_cast<std::size_t>(n) * n;
  }
}

std::size_t FiniteSpace::index(int k, int l, int x) const {
  const int n = block_size(x);
  return offset_[x - 1] + static_cast<std::size_t>((k - 1) * n + (l - 1));
}

std::optional<std::size_t> FiniteSpace::product(std::size_t a, std::size_t b) const {
  const BasisIndex& e = basis_[a];
  const BasisIndex& f = basis_[b];
  if (e.x != f.x || e.l != f.k) return std::nullopt;
  return index(e.k, f.l, e.x);
}

std::size_t FiniteSpace::star(std::size_t a) const {
  const BasisIndex& e = basis_[a];
  return index(e.l, e.k, e.x);
}

std::vector<GaussQ> FiniteSpace::unit() const {
  std::vector<GaussQ> v(dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    if (basis_[a].k == basis_[a].l) v[a] = GaussQ(1);
  }
  return v;
}

GaussQ FiniteSpace::psi(std::size_t a) const {
  return GaussQ(basis_[a].k == basis_[a].l ? 1 : 0);
}

std::vector<GaussQ> FiniteSpace::psi_weights() const {
  std::vector<GaussQ> w;
  w.reserve(dim());
  for (std::size_t a = 0; a < dim(); ++a) w.push_back(psi(a));
  return w;
}

}  // namespace qaut
