#pragma once

#include <Eigen/Dense>

#include <cassert>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace budr {

/// Element of GF(p).  The modulus is a session-wide setting (all values in
/// one computation live over the same prime), set once via set_modulus()
/// or scoped with PrimeScope in tests.
class Fp {
 public:
  Fp() = default;
  Fp(long long x) {  // NOLINT: implicit by design, Eigen casts literals
    assert(p_ != 0 && "GF(p) modulus not set");
    long long r = x % static_cast<long long>(p_);
    if (r < 0) r += p_;
    v_ = static_cast<std::uint32_t>(r);
  }

  static void set_modulus(std::uint32_t p);
  static void clear_modulus() { p_ = 0; }
  static std::uint32_t modulus() { return p_; }
  static std::uint32_t modulus_or_zero() { return p_; }

  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) { return raw((a.v_ + b.v_) % p_); }
  friend Fp operator-(Fp a, Fp b) { return raw((a.v_ + p_ - b.v_) % p_); }
  friend Fp operator*(Fp a, Fp b) {
    return raw(static_cast<std::uint64_t>(a.v_) * b.v_ % p_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  Fp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_); }

  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  /// Multiplicative inverse; a * a.inv() == 1 for a != 0.
  Fp inv() const;

  friend std::ostream& operator<<(std::ostream& os, Fp x) {
    return os << x.v_;
  }

 private:
  static Fp raw(std::uint32_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  std::uint32_t v_ = 0;
  static std::uint32_t p_;
};

inline Fp inverse(Fp a) { return a.inv(); }

/// Sets the modulus for the enclosing scope and restores the previous one
/// on exit.  Tests that walk several primes nest these.
class PrimeScope {
 public:
  explicit PrimeScope(std::uint32_t p) : saved_(Fp::modulus_or_zero()) {
    Fp::set_modulus(p);
  }
  ~PrimeScope() {
    if (saved_ != 0)
      Fp::set_modulus(saved_);
    else
      Fp::clear_modulus();
  }
  PrimeScope(const PrimeScope&) = delete;
  PrimeScope& operator=(const PrimeScope&) = delete;

 private:
  std::uint32_t saved_;
};

}  // namespace budr

namespace Eigen {

template <>
struct NumTraits<budr::Fp> {
  using Real = budr::Fp;
  using NonInteger = budr::Fp;
  using Literal = budr::Fp;
  using Nested = budr::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return budr::Fp(0); }
  static inline Real dummy_precision() { return budr::Fp(0); }
  static inline int digits10() { return 1; }
};

}  // namespace Eigen

namespace budr {

using Mat = Eigen::Matrix<Fp, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Fp, Eigen::Dynamic, 1>;

inline bool is_zero(const Mat& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!a(i, j).is_zero()) return false;
  return true;
}

inline bool equal(const Mat& a, const Mat& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && is_zero(a - b);
}

}  // namespace budr
