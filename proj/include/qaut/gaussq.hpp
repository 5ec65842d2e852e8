#pragma once

#include <complex>
#include <cstddef>
#include <string>

#include <gmpxx.h>

namespace qaut {

/// Exact element of the Gaussian rationals Q(i).
class GaussQ {
 public:
  GaussQ() = default;
  GaussQ(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussQ(mpq_class re, mpq_class im);
  explicit GaussQ(mpq_class re);

  static GaussQ i() { return GaussQ(mpq_class(0), mpq_class(1)); }
  static GaussQ fraction(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussQ conj() const { return GaussQ(re_, -im_); }
  /// |z|^2, always a nonnegative rational.
  mpq_class norm_sq() const { return re_ * re_ + im_ * im_; }

  GaussQ operator-() const { return GaussQ(-re_, -im_); }
  GaussQ& operator+=(const GaussQ& o);
  GaussQ& operator-=(const GaussQ& o);
  GaussQ& operator*=(const GaussQ& o);
  /// Throws std::domain_error on division by zero.
  GaussQ& operator/=(const GaussQ& o);

  friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
  friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
  friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
  friend bool operator==(const GaussQ& a, const GaussQ& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  /// Canonical text: "3", "-1/2", "i", "2-3/4i".
  std::string str() const;

  std::size_t hash() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace qaut
