#pragma once

#include <gmpxx.h>

#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlie {

// Exact rational scalar used everywhere. No floating point anywhere in the kernel.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline Rat rat_parse(const std::string& s) {
  Rat r;
  try {
    r = Rat(s, 10);
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("bad rational literal: '" + s + "'");
  }
  r.canonicalize();
  return r;
}

// Truncated polynomial in the formal deformation parameter.  A value carries its own
// truncation order (coefficients 0..order are stored); binary operations truncate to
// the smaller order of the two operands.
class HTrunc {
 public:
  static int default_order;  // order used by the scalar constructors

  HTrunc() : c_(default_order + 1, Rat(0)) {}
  explicit HTrunc(const Rat& c0) : c_(default_order + 1, Rat(0)) { c_[0] = c0; }
  explicit HTrunc(long v) : HTrunc(rat(v)) {}
  HTrunc(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { assert(!c_.empty()); }

  int order() const { return (int)c_.size() - 1; }
  const Rat& coeff(int k) const {
    static const Rat z(0);
    return (k >= 0 && k <= order()) ? c_[k] : z;
  }
  void set_coeff(int k, const Rat& v) {
    assert(k >= 0 && k <= order());
    c_[k] = v;
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (sgn(x) != 0) return false;
    return true;
  }

  friend HTrunc operator+(const HTrunc& a, const HTrunc& b) {
    int d = std::min(a.order(), b.order());
    std::vector<Rat> r(d + 1);
    for (int k = 0; k <= d; ++k) r[k] = a.c_[k] + b.c_[k];
    return HTrunc(std::move(r));
  }
  friend HTrunc operator-(const HTrunc& a, const HTrunc& b) {
    int d = std::min(a.order(), b.order());
    std::vector<Rat> r(d + 1);
    for (int k = 0; k <= d; ++k) r[k] = a.c_[k] - b.c_[k];
    return HTrunc(std::move(r));
  }
  friend HTrunc operator-(const HTrunc& a) {
    std::vector<Rat> r(a.c_);
    for (auto& x : r) x = -x;
    return HTrunc(std::move(r));
  }
  friend HTrunc operator*(const HTrunc& a, const HTrunc& b) {
    int d = std::min(a.order(), b.order());
    std::vector<Rat> r(d + 1, Rat(0));
    for (int i = 0; i <= d; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (int j = 0; i + j <= d && j <= b.order(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return HTrunc(std::move(r));
  }
  friend HTrunc operator*(const Rat& s, const HTrunc& a) {
    std::vector<Rat> r(a.c_);
    for (auto& x : r) x *= s;
    return HTrunc(std::move(r));
  }

  // Multiply by the deformation parameter (degree shift up by k).
  HTrunc mul_h(int k = 1) const {
    std::vector<Rat> r(c_.size(), Rat(0));
    for (int i = 0; i + k <= order(); ++i) r[i + k] = c_[i];
    return HTrunc(std::move(r));
  }

  // Exact division by the k-th power of the deformation parameter.  The low
  // coefficients must vanish; the result has order reduced by k.
  HTrunc div_h(int k = 1) const {
    for (int i = 0; i < k; ++i) {
      if (i <= order() && sgn(c_[i]) != 0)
        throw std::runtime_error("HTrunc::div_h: low coefficient nonzero");
    }
    if (order() < k) throw std::runtime_error("HTrunc::div_h: order too small");
    std::vector<Rat> r(c_.begin() + k, c_.end());
    return HTrunc(std::move(r));
  }

  friend bool operator==(const HTrunc& a, const HTrunc& b) { return (a - b).is_zero(); }

  std::string str() const;

 private:
  std::vector<Rat> c_;
};

inline std::string HTrunc::str() const {
  std::string out;
  for (int k = 0; k <= order(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    if (!out.empty()) out += " + ";
    out += rat_str(c_[k]);
    if (k > 0) out += "*hb^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace qlie
