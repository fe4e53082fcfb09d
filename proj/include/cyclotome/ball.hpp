#pragma once
// Certified real/complex enclosures backed by MPFR endpoint intervals with
// directed rounding. The midpoint/radius view required by reports is derived
// from the endpoints; every operation's output interval contains the image
// of every point of the inputs.

#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

namespace cyclotome {

class BallReal {
 public:
  BallReal() : BallReal(64) {}
  explicit BallReal(long prec);
  BallReal(const BallReal& o);
  BallReal(BallReal&& o) noexcept;
  BallReal& operator=(const BallReal& o);
  BallReal& operator=(BallReal&& o) noexcept;
  ~BallReal();

  static BallReal exact_long(long v, long prec);
  static BallReal from_mpq(const mpq_class& q, long prec);
  static BallReal from_double(double v, long prec);
  static BallReal pi(long prec);
  // Directed-rounded enclosure of [lo, hi] given as exact rationals.
  static BallReal from_mpq_interval(const mpq_class& lo, const mpq_class& hi, long prec);

  long prec() const { return prec_; }

  friend BallReal operator+(const BallReal& a, const BallReal& b);
  friend BallReal operator-(const BallReal& a, const BallReal& b);
  friend BallReal operator-(const BallReal& a);
  friend BallReal operator*(const BallReal& a, const BallReal& b);

  BallReal sqr() const;
  BallReal sqrt_pos() const;   // requires lo >= 0
  BallReal log_pos() const;    // requires lo > 0
  BallReal abs() const;
  BallReal cos() const;
  BallReal sin() const;
  // x^k for positive x (k any integer) by endpoint monotonicity.
  BallReal pow_si(long k) const;

  // Interval hull and the max-interval [max lo, max hi].
  static BallReal join(const BallReal& a, const BallReal& b);
  static BallReal max_iv(const BallReal& a, const BallReal& b);

  bool contains_zero() const;
  bool is_positive() const;  // lo > 0
  bool is_negative() const;  // hi < 0
  // -1 if certainly a < b (a.hi < b.lo), +1 if certainly a > b, 0 overlap.
  static int compare(const BallReal& a, const BallReal& b);

  // width = hi - lo (rounded up); true iff width <= 2^e.
  bool width_below_2exp(long e) const;

  double lo_d() const;   // rounded down
  double hi_d() const;   // rounded up
  double mid_d() const;
  double rad_d() const;  // rounded up

  std::string mid_str(int digits = 20) const;
  std::string rad_str(int digits = 3) const;

  // Raw endpoint access for the few call sites that need it.
  const mpfr_t& lo_raw() const { return lo_; }
  const mpfr_t& hi_raw() const { return hi_; }
  void set_endpoints(const mpfr_t lo, const mpfr_t hi);

 private:
  mpfr_t lo_, hi_;
  long prec_;
};

struct BallComplex {
  BallReal re, im;

  BallComplex() = default;
  explicit BallComplex(long prec) : re(prec), im(prec) {}
  BallComplex(BallReal re_, BallReal im_) : re(std::move(re_)), im(std::move(im_)) {}

  friend BallComplex operator+(const BallComplex& a, const BallComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BallComplex operator-(const BallComplex& a, const BallComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend BallComplex operator*(const BallComplex& a, const BallComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  BallComplex conj() const { return {re, -im}; }
  BallReal abs2() const { return re.sqr() + im.sqr(); }
};

// Working precision that resolves the equality threshold (10+1/25)^(-k):
// ceil(k * log2(10 + 1/25)) + 64 guard bits.
struct PrecisionPolicy {
  long conductor = 0;  // target conductor N (0 = unspecified)
  long degree = 0;     // k = phi(N) or the caller's equality degree
  long bits = 128;     // working precision

  static long required_bits(long k);
  static PrecisionPolicy for_degree(long k);
};

}  // namespace cyclotome
