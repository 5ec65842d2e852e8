#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qaut/gaussq.hpp"
#include "qaut/ncalg.hpp"

namespace qaut {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotPositive : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense square matrix over Q(i).
class QMatrix {
 public:
  QMatrix() = default;
  explicit QMatrix(std::size_t dim);
  QMatrix(std::size_t dim, std::vector<GaussQ> row_major);

  static QMatrix identity(std::size_t dim);
  static QMatrix diagonal(const std::vector<GaussQ>& diag);

  std::size_t dim() const { return dim_; }
  const GaussQ& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  GaussQ& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }

  bool is_diagonal() const;
  bool is_identity() const;
  bool is_hermitian() const;
  /// Hermitian with every leading principal minor positive.
  bool is_positive() const;
  /// Throws std::domain_error when singular.
  QMatrix inverse() const;
  GaussQ determinant() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<GaussQ> a_;
};

/// Square matrix with NCPoly entries; products keep the entry order, so
/// (ab)_{ij} = sum_k a_{ik} b_{kj} with a-entries on the left.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

  static PolyMatrix identity(std::size_t dim);
  static PolyMatrix scalar(const QMatrix& q);

  std::size_t dim() const { return dim_; }
  const NCPoly& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  NCPoly& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }

  PolyMatrix transpose() const;
  /// Entrywise star: (a_{ij}^*).
  PolyMatrix conjugate() const;
  /// Conjugate transpose.
  PolyMatrix adjoint() const { return conjugate().transpose(); }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<NCPoly> a_;
};

}  // namespace qaut
