#include "qaut/matrix.hpp"

namespace qaut {

QMatrix::QMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

QMatrix::QMatrix(std::size_t dim, std::vector<GaussQ> row_major)
    : dim_(dim), a_(std::move(row_major)) {
  if (a_.size() != dim_ * dim_) throw DimensionMismatch("QMatrix: entry count is not dim^2");
}

QMatrix QMatrix::identity(std::size_t dim) {
  QMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = GaussQ(1);
  return m;
}

QMatrix QMatrix::diagonal(const std::vector<GaussQ>& diag) {
  QMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool QMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool QMatrix::is_identity() const { return *this == identity(dim_); }

bool QMatrix::is_hermitian() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      if (!((*this)(i, j) == (*this)(j, i).conj())) return false;
    }
  }
  return true;
}

GaussQ QMatrix::determinant() const {
  QMatrix m = *this;
  GaussQ det(1);
  for (std::size_t c = 0; c < dim_; ++c) {
    std::size_t pivot = c;
    while (pivot < dim_ && m(pivot, c).is_zero()) ++pivot;
    if (pivot == dim_) return GaussQ(0);
    if (pivot != c) {
      for (std::size_t k = 0; k < dim_; ++k) std::swap(m(c, k), m(pivot, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < dim_; ++r) {
      if (m(r, c).is_zero()) continue;
      const GaussQ f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < dim_; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

bool QMatrix::is_positive() const {
  if (dim_ == 0 || !is_hermitian()) return false;
  for (std::size_t k = 1; k <= dim_; ++k) {
    QMatrix minor(k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = (*this)(i, j);
    }
    const GaussQ d = minor.determinant();
    if (!d.is_real() || sgn(d.re()) <= 0) return false;
  }
  return true;
}

QMatrix QMatrix::inverse() const {
  QMatrix m = *this;
  QMatrix inv = identity(dim_);
  for (std::size_t c = 0; c < dim_; ++c) {
    std::size_t pivot = c;
    while (pivot < dim_ && m(pivot, c).is_zero()) ++pivot;
    if (pivot == dim_) throw std::domain_error("QMatrix::inverse: singular matrix");
    if (pivot != c) {
      for (std::size_t k = 0; k < dim_; ++k) {
        std::swap(m(c, k), m(pivot, k));
        std::swap(inv(c, k), inv(pivot, k));
      }
    }
    const GaussQ p = m(c, c);
    for (std::size_t k = 0; k < dim_; ++k) {
      m(c, k) /= p;
      inv(c, k) /= p;
    }
    for (std::size_t r = 0; r < dim_; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      const GaussQ f = m(r, c);
      for (std::size_t k = 0; k < dim_; ++k) {
        m(r, k) -= f * m(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("QMatrix product: dimension mismatch");
  QMatrix c(a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t k = 0; k < a.dim_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.dim_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

// ---------------------------------------------------------------------------

PolyMatrix PolyMatrix::identity(std::size_t dim) {
  PolyMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = NCPoly::one();
  return m;
}

PolyMatrix PolyMatrix::scalar(const QMatrix& q) {
  PolyMatrix m(q.dim());
  for (std::size_t i = 0; i < q.dim(); ++i) {
    for (std::size_t j = 0; j < q.dim(); ++j) m(i, j) = NCPoly::constant(q(i, j));
  }
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

PolyMatrix PolyMatrix::conjugate() const {
  PolyMatrix t(dim_);
  for (std::size_t i = 0; i < dim_ * dim_; ++i) t.a_[i] = a_[i].star();
  return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("PolyMatrix product: dimension mismatch");
  PolyMatrix c(a.dim_);
  for (std::size_t i = 0; i < a.dim_; ++i) {
    for (std::size_t j = 0; j < a.dim_; ++j) {
      NCPoly acc;
      for (std::size_t k = 0; k < a.dim_; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        acc += a(i, k) * b(k, j);
      }
      c(i, j) = std::move(acc);
    }
  }
  return c;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionMismatch("PolyMatrix difference: dimension mismatch");
  PolyMatrix c(a.dim_);
  for (std::size_t i = 0; i < a.dim_ * a.dim_; ++i) c.a_[i] = a.a_[i] - b.a_[i];
  return c;
}

}  // namespace qaut
