#pragma once
// Arbitrary precision integer with an int64 fast path.
// Values that fit in int64 never touch GMP.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace macdo {

class Int {
 public:
  Int() = default;
  Int(long long v) : s_(v) {}  // NOLINT implicit on purpose
  explicit Int(const mpz_class& z) { assign(z); }
  explicit Int(const std::string& dec) { assign(mpz_class(dec)); }

  Int(const Int& o) : s_(o.s_) {
    if (o.b_) b_ = std::make_unique<mpz_class>(*o.b_);
  }
  Int(Int&&) noexcept = default;
  Int& operator=(const Int& o) {
    if (this != &o) {
      s_ = o.s_;
      b_ = o.b_ ? std::make_unique<mpz_class>(*o.b_) : nullptr;
    }
    return *this;
  }
  Int& operator=(Int&&) noexcept = default;

  bool is_small() const { return !b_; }
  int64_t small() const { return s_; }
  bool is_zero() const { return !b_ && s_ == 0; }
  bool is_one() const { return !b_ && s_ == 1; }
  int sign() const {
    if (b_) return sgn(*b_);
    return (s_ > 0) - (s_ < 0);
  }
  mpz_class to_mpz() const {
    if (b_) return *b_;
    mpz_class z;
    set_i64(z, s_);
    return z;
  }
  std::string str() const { return b_ ? b_->get_str() : std::to_string(s_); }

  Int operator-() const {
    if (!b_ && s_ != INT64_MIN) return Int(-s_);
    return Int(mpz_class(-to_mpz()));
  }
  Int& operator+=(const Int& o) {
    if (!b_ && !o.b_) {
      long long r;
      if (!__builtin_add_overflow(s_, o.s_, &r)) {
        s_ = r;
        return *this;
      }
    }
    assign(to_mpz() + o.to_mpz());
    return *this;
  }
  Int& operator-=(const Int& o) {
    if (!b_ && !o.b_) {
      long long r;
      if (!__builtin_sub_overflow(s_, o.s_, &r)) {
        s_ = r;
        return *this;
      }
    }
    assign(to_mpz() - o.to_mpz());
    return *this;
  }
  Int& operator*=(const Int& o) {
    if (!b_ && !o.b_) {
      long long r;
      if (!__builtin_mul_overflow(s_, o.s_, &r)) {
        s_ = r;
        return *this;
      }
    }
    assign(to_mpz() * o.to_mpz());
    return *this;
  }
  // exact division; caller guarantees o | *this
  Int& divexact(const Int& o) {
    if (!b_ && !o.b_ && !(s_ == INT64_MIN && o.s_ == -1)) {
      s_ /= o.s_;
      return *this;
    }
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), to_mpz().get_mpz_t(), o.to_mpz().get_mpz_t());
    assign(r);
    return *this;
  }
  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(Int a, const Int& b) { return a *= b; }

  friend bool operator==(const Int& a, const Int& b) {
    if (!a.b_ && !b.b_) return a.s_ == b.s_;
    if (a.b_ && b.b_) return *a.b_ == *b.b_;
    return false;  // normalized: a big value never fits in int64
  }
  friend int cmp(const Int& a, const Int& b) {
    if (!a.b_ && !b.b_) return (a.s_ > b.s_) - (a.s_ < b.s_);
    int c = ::cmp(a.to_mpz(), b.to_mpz());
    return (c > 0) - (c < 0);
  }
  friend bool operator<(const Int& a, const Int& b) { return cmp(a, b) < 0; }

  // a*b added to this, the hot operation of polynomial products
  void addmul(const Int& a, const Int& b) {
    if (!b_ && !a.b_ && !b.b_) {
      long long p, r;
      if (!__builtin_mul_overflow(a.s_, b.s_, &p) &&
          !__builtin_add_overflow(s_, p, &r)) {
        s_ = r;
        return;
      }
    }
    mpz_class z = to_mpz();
    mpz_addmul(z.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
    assign(z);
  }

  static Int gcd(const Int& a, const Int& b);

 private:
  static void set_i64(mpz_class& z, int64_t v) {
    if (v >= LONG_MIN && v <= LONG_MAX) {
      z = static_cast<long>(v);
    } else {
      z = std::to_string(v);
    }
  }
  void assign(const mpz_class& z) {
    if (z.fits_slong_p()) {
      s_ = z.get_si();
      b_.reset();
    } else {
      s_ = 0;
      b_ = std::make_unique<mpz_class>(z);
    }
  }

  int64_t s_ = 0;
  std::unique_ptr<mpz_class> b_;
};

inline Int Int::gcd(const Int& a, const Int& b) {
  if (a.is_small() && b.is_small() && a.s_ != INT64_MIN && b.s_ != INT64_MIN) {
    int64_t x = a.s_ < 0 ? -a.s_ : a.s_, y = b.s_ < 0 ? -b.s_ : b.s_;
    while (y) {
      int64_t r = x % y;
      x = y;
      y = r;
    }
    return Int(x);
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Int(g);
}

}  // namespace macdo
