#include "cyclotome/ball.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace cyclotome {

BallReal::BallReal(long prec) : prec_(prec) {
  assert(prec >= 2);
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

BallReal::BallReal(const BallReal& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

BallReal::BallReal(BallReal&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, 2);
  mpfr_init2(hi_, 2);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

BallReal& BallReal::operator=(const BallReal& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, o.prec_);
    mpfr_set_prec(hi_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

BallReal& BallReal::operator=(BallReal&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(prec_, o.prec_);
  return *this;
}

BallReal::~BallReal() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

BallReal BallReal::exact_long(long v, long prec) {
  BallReal r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

BallReal BallReal::from_mpq(const mpq_class& q, long prec) {
  BallReal r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

BallReal BallReal::from_double(double v, long prec) {
  BallReal r(prec);
  mpfr_set_d(r.lo_, v, MPFR_RNDD);
  mpfr_set_d(r.hi_, v, MPFR_RNDU);
  return r;
}

BallReal BallReal::pi(long prec) {
  BallReal r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

BallReal BallReal::from_mpq_interval(const mpq_class& lo, const mpq_class& hi, long prec) {
  BallReal r(prec);
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

void BallReal::set_endpoints(const mpfr_t lo, const mpfr_t hi) {
  mpfr_set(lo_, lo, MPFR_RNDD);
  mpfr_set(hi_, hi, MPFR_RNDU);
}

BallReal operator+(const BallReal& a, const BallReal& b) {
  BallReal r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

BallReal operator-(const BallReal& a, const BallReal& b) {
  BallReal r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

BallReal operator-(const BallReal& a) {
  BallReal r(a.prec_);
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

BallReal operator*(const BallReal& a, const BallReal& b) {
  BallReal r(std::max(a.prec_, b.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  // lo = min of the four products rounded down.
  mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
  // hi = max of the four products rounded up.
  mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_mul(t, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_mul(t, a.hi_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return r;
}

BallReal BallReal::sqr() const {
  BallReal r(prec_);
  if (mpfr_sgn(lo_) >= 0) {
    mpfr_sqr(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, hi_, MPFR_RNDU);
  } else if (mpfr_sgn(hi_) <= 0) {
    mpfr_sqr(r.lo_, hi_, MPFR_RNDD);
    mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
    mpfr_sqr(t, hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
  }
  return r;
}

BallReal BallReal::sqrt_pos() const {
  if (mpfr_sgn(lo_) < 0) throw std::domain_error("sqrt_pos: interval extends below 0");
  BallReal r(prec_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

BallReal BallReal::log_pos() const {
  if (mpfr_sgn(lo_) <= 0) throw std::domain_error("log_pos: interval not strictly positive");
  BallReal r(prec_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

BallReal BallReal::abs() const {
  BallReal r(prec_);
  if (mpfr_sgn(lo_) >= 0) return *this;
  if (mpfr_sgn(hi_) <= 0) return -*this;
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
  return r;
}

namespace {

// |f(x) - f(m)| <= |x - m| for f in {cos, sin}: evaluate at the midpoint and
// widen by the half-width, clamping into [-1, 1].
BallReal lipschitz_trig(const BallReal& x, int (*f)(mpfr_t, const mpfr_t, mpfr_rnd_t),
                        long prec) {
  BallReal r(prec);
  mpfr_t m, w, t;
  mpfr_init2(m, prec);
  mpfr_init2(w, prec);
  mpfr_init2(t, prec);
  // m = midpoint (any point inside works for soundness).
  mpfr_add(m, x.lo_raw(), x.hi_raw(), MPFR_RNDN);
  mpfr_div_2si(m, m, 1, MPFR_RNDN);
  // w = max(m - lo, hi - m), rounded up.
  mpfr_sub(w, m, x.lo_raw(), MPFR_RNDU);
  mpfr_sub(t, x.hi_raw(), m, MPFR_RNDU);
  mpfr_max(w, w, t, MPFR_RNDU);
  mpfr_t lo, hi;
  mpfr_init2(lo, prec);
  mpfr_init2(hi, prec);
  f(lo, m, MPFR_RNDD);
  f(hi, m, MPFR_RNDU);
  mpfr_sub(lo, lo, w, MPFR_RNDD);
  mpfr_add(hi, hi, w, MPFR_RNDU);
  mpfr_set_si(t, -1, MPFR_RNDD);
  mpfr_max(lo, lo, t, MPFR_RNDD);
  mpfr_set_si(t, 1, MPFR_RNDU);
  mpfr_min(hi, hi, t, MPFR_RNDU);
  r.set_endpoints(lo, hi);
  mpfr_clears(m, w, t, lo, hi, (mpfr_ptr) nullptr);
  return r;
}

}  // namespace

BallReal BallReal::cos() const { return lipschitz_trig(*this, mpfr_cos, prec_); }
BallReal BallReal::sin() const { return lipschitz_trig(*this, mpfr_sin, prec_); }

BallReal BallReal::pow_si(long k) const {
  if (mpfr_sgn(lo_) <= 0) throw std::domain_error("pow_si: base must be positive");
  BallReal r(prec_);
  if (k >= 0) {
    mpfr_pow_si(r.lo_, lo_, k, MPFR_RNDD);
    mpfr_pow_si(r.hi_, hi_, k, MPFR_RNDU);
  } else {
    mpfr_pow_si(r.lo_, hi_, k, MPFR_RNDD);
    mpfr_pow_si(r.hi_, lo_, k, MPFR_RNDU);
  }
  return r;
}

BallReal BallReal::join(const BallReal& a, const BallReal& b) {
  BallReal r(std::max(a.prec_, b.prec_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

BallReal BallReal::max_iv(const BallReal& a, const BallReal& b) {
  BallReal r(std::max(a.prec_, b.prec_));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

bool BallReal::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool BallReal::is_positive() const { return mpfr_sgn(lo_) > 0; }
bool BallReal::is_negative() const { return mpfr_sgn(hi_) < 0; }

int BallReal::compare(const BallReal& a, const BallReal& b) {
  if (mpfr_less_p(a.hi_, b.lo_)) return -1;
  if (mpfr_greater_p(a.lo_, b.hi_)) return 1;
  return 0;
}

bool BallReal::width_below_2exp(long e) const {
  mpfr_t w, bound;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  mpfr_init2(bound, 32);
  mpfr_set_si_2exp(bound, 1, e, MPFR_RNDD);
  bool ok = mpfr_lessequal_p(w, bound);
  mpfr_clears(w, bound, (mpfr_ptr) nullptr);
  return ok;
}

double BallReal::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double BallReal::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double BallReal::mid_d() const { return (lo_d() + hi_d()) / 2; }

double BallReal::rad_d() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  mpfr_div_2si(w, w, 1, MPFR_RNDU);
  double r = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return r;
}

std::string BallReal::mid_str(int digits) const {
  mpfr_t m;
  mpfr_init2(m, prec_);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2si(m, m, 1, MPFR_RNDN);
  char buf[512];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, m);
  mpfr_clear(m);
  return buf;
}

std::string BallReal::rad_str(int digits) const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  mpfr_div_2si(w, w, 1, MPFR_RNDU);
  char buf[128];
  mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, w);
  mpfr_clear(w);
  return buf;
}

long PrecisionPolicy::required_bits(long k) {
  // log2(10 + 1/25) < 3.3279; round the constant up to stay conservative.
  return static_cast<long>(std::ceil(3.3280 * static_cast<double>(k))) + 64;
}

PrecisionPolicy PrecisionPolicy::for_degree(long k) {
  PrecisionPolicy p;
  p.degree = k;
  p.bits = std::max(128L, required_bits(k));
  return p;
}

}  // namespace cyclotome
