#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace gcat {

using Rational = mpq_class;

/// Element of Q(i): complex number with exact rational real and imaginary
/// parts. All arithmetic is exact; equality is literal.
class CRational {
 public:
  CRational() = default;
  CRational(long v) : re_(v) {}  // NOLINT: implicit by design
  CRational(Rational re) : re_(std::move(re)) {}
  CRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static CRational i() { return CRational(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  CRational conj() const { return CRational(re_, -im_); }
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }

  CRational& operator+=(const CRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  CRational& operator-=(const CRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  CRational& operator*=(const CRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }

  CRational operator-() const { return CRational(-re_, -im_); }

  friend CRational operator+(CRational a, const CRational& b) { return a += b; }
  friend CRational operator-(CRational a, const CRational& b) { return a -= b; }
  friend CRational operator*(CRational a, const CRational& b) { return a *= b; }

  CRational inverse() const {
    if (is_zero()) throw std::domain_error("CRational: division by zero");
    Rational n = norm_sq();
    return CRational(re_ / n, -im_ / n);
  }
  friend CRational operator/(const CRational& a, const CRational& b) {
    return a * b.inverse();
  }

  friend bool operator==(const CRational& a, const CRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const CRational& a, const CRational& b) {
    return !(a == b);
  }

  /// Total order (lexicographic on re, im); used for canonical keys only.
  friend int compare(const CRational& a, const CRational& b) {
    int c = cmp(a.re_, b.re_);
    return c != 0 ? c : cmp(a.im_, b.im_);
  }

  double re_double() const { return re_.get_d(); }
  double im_double() const { return im_.get_d(); }

  /// Canonical string form "p/q+r/s i" (sign of the imaginary part absorbed
  /// into the joining sign, denominators always written).
  std::string str() const {
    std::string out = re_.get_num().get_str() + "/" + re_.get_den().get_str();
    Rational ia = sgn(im_) < 0 ? Rational(-im_) : im_;
    out += (sgn(im_) < 0 ? "-" : "+");
    out += ia.get_num().get_str() + "/" + ia.get_den().get_str() + " i";
    return out;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

}  // namespace gcat
