#pragma once
// Integer that stays in an int64 until it overflows, then moves to GMP.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <memory>
#include <string>

namespace rrs {

class Int {
 public:
  Int() = default;
  Int(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Int(const mpz_class& z) { set_big(z); }
  Int(const Int& o) : v_(o.v_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
  Int(Int&&) noexcept = default;
  Int& operator=(const Int& o) {
    if (this != &o) {
      v_ = o.v_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Int& operator=(Int&&) noexcept = default;

  static Int from_string(const std::string& s) { return Int(mpz_class(s)); }

  bool is_zero() const { return !big_ && v_ == 0; }
  bool is_small() const { return !big_; }
  int sign() const { return big_ ? sgn(*big_) : (v_ > 0) - (v_ < 0); }
  long long small() const { return v_; }
  mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(v_)); }
  std::string str() const { return big_ ? big_->get_str() : std::to_string(v_); }

  Int& operator+=(const Int& o) {
    if (!big_ && !o.big_) {
      long long r;
      if (!__builtin_add_overflow(v_, o.v_, &r)) {
        v_ = r;
        return *this;
      }
    }
    set_big(to_mpz() + o.to_mpz());
    return *this;
  }
  Int& operator-=(const Int& o) {
    if (!big_ && !o.big_) {
      long long r;
      if (!__builtin_sub_overflow(v_, o.v_, &r)) {
        v_ = r;
        return *this;
      }
    }
    set_big(to_mpz() - o.to_mpz());
    return *this;
  }
  Int operator-() const {
    if (!big_ && v_ != INT64_MIN) return Int(-v_);
    return Int(mpz_class(-to_mpz()));
  }
  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(const Int& a, const Int& b) {
    Int r;
    r.addmul(a, b);
    return r;
  }
  Int& operator*=(const Int& o) { return *this = *this * o; }

  // this += a * b
  void addmul(const Int& a, const Int& b) {
    if (!big_ && !a.big_ && !b.big_) {
      long long p, r;
      if (!__builtin_mul_overflow(a.v_, b.v_, &p) && !__builtin_add_overflow(v_, p, &r)) {
        v_ = r;
        return;
      }
    }
    mpz_class z = to_mpz();
    mpz_addmul(z.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    set_big(z);
  }
  // this -= a * b
  void submul(const Int& a, const Int& b) {
    if (!big_ && !a.big_ && !b.big_) {
      long long p, r;
      if (!__builtin_mul_overflow(a.v_, b.v_, &p) && !__builtin_sub_overflow(v_, p, &r)) {
        v_ = r;
        return;
      }
    }
    mpz_class z = to_mpz();
    mpz_submul(z.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    set_big(z);
  }

  // exact division; throws if not divisible
  Int divexact(long long d) const;

  friend bool operator==(const Int& a, const Int& b) {
    if (!a.big_ && !b.big_) return a.v_ == b.v_;
    return a.to_mpz() == b.to_mpz();
  }
  friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }

 private:
  void set_big(const mpz_class& z) {
    if (z.fits_slong_p()) {
      v_ = z.get_si();
      big_.reset();
    } else {
      if (big_) *big_ = z;
      else big_ = std::make_unique<mpz_class>(z);
      v_ = 0;
    }
  }

  long long v_ = 0;
  std::unique_ptr<mpz_class> big_;
};

inline Int Int::divexact(long long d) const {
  mpz_class z = to_mpz();
  mpz_class q, r;
  mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(d < 0 ? -d : d));
  if (r != 0) throw std::domain_error("Int::divexact: not divisible");
  if (d < 0) q = -q;
  return Int(q);
}

}  // namespace rrs
