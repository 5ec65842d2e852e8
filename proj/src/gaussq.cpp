#include "qaut/gaussq.hpp"

#include <functional>
#include <stdexcept>

namespace qaut {

GaussQ::GaussQ(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussQ::GaussQ(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }

GaussQ GaussQ::fraction(long num, long den) {
  if (den == 0) throw std::domain_error("GaussQ::fraction: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussQ(q);
}

GaussQ& GaussQ::operator+=(const GaussQ& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussQ& GaussQ::operator-=(const GaussQ& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussQ& GaussQ::operator*=(const GaussQ& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussQ& GaussQ::operator/=(const GaussQ& o) {
  if (o.is_zero()) throw std::domain_error("GaussQ: division by zero");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  const mpq_class d = o.norm_sq();
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

std::string GaussQ::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string im_part;
  if (im_ == 1) {
    im_part = "i";
  } else if (im_ == -1) {
    im_part = "-i";
  } else {
    im_part = im_.get_str() + "i";
  }
  if (sgn(re_) == 0) return im_part;
  if (sgn(im_) > 0) return re_.get_str() + "+" + im_part;
  return re_.get_str() + im_part;
}

std::size_t GaussQ::hash() const {
  std::hash<std::string> h;
  return h(re_.get_str()) * 31u + h(im_.get_str());
}

}  // namespace qaut
