#include "cyclotome/zpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "cyclotome/numtheory.hpp"

namespace cyclotome {

namespace {

using QPoly = std::vector<mpq_class>;  // ascending, trailing zeros trimmed

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const ZPoly& p) {
  QPoly q;
  q.reserve(p.coeffs().size());
  for (const mpz_class& c : p.coeffs()) q.emplace_back(c);
  return q;
}

// Scale to integer coefficients with content 1, preserving sign.
ZPoly to_z_primitive(const QPoly& p) {
  mpz_class den = 1;
  for (const mpq_class& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> z;
  z.reserve(p.size());
  for (const mpq_class& c : p) {
    mpq_class scaled = c * den;
    z.push_back(scaled.get_num());
  }
  ZPoly zp{std::move(z)};
  if (zp.is_zero()) return zp;
  // divide out the content but keep the leading sign
  ZPoly prim = zp.primitive_part();
  return zp.leading() < 0 ? -prim : prim;
}

int qsign(const mpq_class& v) { return sgn(v); }

mpq_class qeval(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Remainder of a by b (b nonzero), both ascending.
QPoly qrem(QPoly a, const QPoly& b) {
  qtrim(a);
  long db = static_cast<long>(b.size()) - 1;
  const mpq_class& lead = b.back();
  while (static_cast<long>(a.size()) - 1 >= db) {
    mpq_class f = a.back() / lead;
    long shift = static_cast<long>(a.size()) - 1 - db;
    for (long i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    qtrim(a);
    if (a.empty()) break;
  }
  return a;
}

// Divide out the content (positive rational) so coefficients stay small.
void qnormalize(QPoly& p) {
  if (p.empty()) return;
  mpq_class scale = abs(p.back());
  for (const mpq_class& c : p)
    if (c != 0 && abs(c) > scale) scale = abs(c);
  for (mpq_class& c : p) c /= scale;
}

// Sturm chain of the squarefree part.
std::vector<QPoly> sturm_chain(const ZPoly& p) {
  ZPoly ps = squarefree_part(p);
  std::vector<QPoly> chain;
  if (ps.degree() <= 0) return chain;
  chain.push_back(to_q(ps));
  chain.push_back(to_q(ps.derivative()));
  while (!chain.back().empty() && static_cast<long>(chain.back().size()) > 1) {
    QPoly r = qrem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (mpq_class& c : r) c = -c;
    qnormalize(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

long variations(const std::vector<QPoly>& chain, const mpq_class& x) {
  long v = 0;
  int prev = 0;
  for (const QPoly& p : chain) {
    int s = qsign(qeval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

long variations_at_inf(const std::vector<QPoly>& chain, int dir) {
  long v = 0;
  int prev = 0;
  for (const QPoly& p : chain) {
    if (p.empty()) continue;
    int s = qsign(p.back());
    if (dir < 0 && (p.size() - 1) % 2 == 1) s = -s;
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// A point strictly inside (lo, hi) where p does not vanish.
mpq_class interior_point(const ZPoly& p, const mpq_class& lo, const mpq_class& hi) {
  static const long num_den[][2] = {{1, 2},  {1, 3}, {2, 3}, {1, 5}, {2, 5},
                                    {3, 5},  {4, 5}, {1, 7}, {3, 7}, {5, 7},
                                    {6, 7},  {1, 11}, {5, 11}, {9, 11}};
  for (const auto& nd : num_den) {
    mpq_class mid = lo + (hi - lo) * mpq_class(nd[0], nd[1]);
    if (p.eval_q(mid) != 0) return mid;
  }
  throw std::logic_error("could not find a nonvanishing interior point");
}

}  // namespace

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::from_longs(std::initializer_list<long> ascending) {
  std::vector<mpz_class> c;
  c.reserve(ascending.size());
  for (long v : ascending) c.emplace_back(v);
  return ZPoly{std::move(c)};
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& ZPoly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of 0");
  return c_.back();
}

mpz_class ZPoly::eval_z(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class ZPoly::eval_q(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BallReal ZPoly::eval_ball(const BallReal& x) const {
  BallReal acc = BallReal::exact_long(0, x.prec());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + BallReal::from_mpq(mpq_class(*it), x.prec());
  return acc;
}

ZPoly ZPoly::derivative() const {
  if (c_.size() <= 1) return ZPoly{};
  std::vector<mpz_class> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return ZPoly{std::move(d)};
}

ZPoly ZPoly::primitive_part() const {
  if (c_.empty()) return ZPoly{};
  mpz_class g = 0;
  for (const mpz_class& c : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (c_.back() < 0) g = -g;
  std::vector<mpz_class> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] / g;
  return ZPoly{std::move(out)};
}

ZPoly ZPoly::operator-() const {
  std::vector<mpz_class> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = -c_[i];
  return ZPoly{std::move(out)};
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  std::vector<mpz_class> out(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return ZPoly{std::move(out)};
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly{};
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return ZPoly{std::move(out)};
}

ZPoly ZPoly::operator*(const mpz_class& k) const {
  std::vector<mpz_class> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * k;
  return ZPoly{std::move(out)};
}

std::string ZPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (long k = degree(); k >= 0; --k) {
    const mpz_class& c = c_[k];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    mpz_class a = abs(c);
    if (a != 1 || k == 0) out += a.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

ZPoly poly_gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return b.is_zero() ? ZPoly{} : b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  QPoly x = to_q(a), y = to_q(b);
  while (!y.empty()) {
    QPoly r = qrem(x, y);
    qnormalize(r);
    x = std::move(y);
    y = std::move(r);
  }
  ZPoly g = to_z_primitive(x);
  return g.leading() < 0 ? (-g) : g;
}

ZPoly squarefree_part(const ZPoly& p) {
  if (p.degree() <= 0) return p.primitive_part();
  ZPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p.primitive_part();
  // exact division p / g over Q
  QPoly num = to_q(p), den = to_q(g), quot;
  long dq = static_cast<long>(num.size()) - static_cast<long>(den.size()) + 1;
  quot.assign(dq, mpq_class(0));
  while (static_cast<long>(num.size()) >= static_cast<long>(den.size()) && !num.empty()) {
    mpq_class f = num.back() / den.back();
    long shift = static_cast<long>(num.size()) - static_cast<long>(den.size());
    quot[shift] = f;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    qtrim(num);
  }
  if (!num.empty()) throw std::logic_error("inexact division in squarefree_part");
  ZPoly q = to_z_primitive(quot);
  return q.leading() < 0 ? (-q) : q;
}

long sturm_count(const ZPoly& p, const mpq_class& lo, const mpq_class& hi) {
  if (lo >= hi) return 0;
  if (p.eval_q(lo) == 0 || p.eval_q(hi) == 0)
    throw std::invalid_argument("sturm_count endpoints must not be roots");
  auto chain = sturm_chain(p);
  if (chain.empty()) return 0;
  return variations(chain, lo) - variations(chain, hi);
}

long sturm_count_all(const ZPoly& p) {
  auto chain = sturm_chain(p);
  if (chain.empty()) return 0;
  return variations_at_inf(chain, -1) - variations_at_inf(chain, +1);
}

namespace {

void isolate_rec(const ZPoly& ps, const std::vector<QPoly>& chain,
                 const mpq_class& lo, const mpq_class& hi, long vlo, long vhi,
                 std::vector<RootInterval>& out) {
  long count = vlo - vhi;
  if (count <= 0) return;
  if (count == 1) {
    out.push_back(RootInterval{lo, hi});
    return;
  }
  // Split at a point that is not a root, so (lo, mid] and (mid, hi]
  // partition the roots cleanly; exact rational roots surface later during
  // refinement (sign bisection detects them).
  mpq_class mid = interior_point(ps, lo, hi);
  long vm = variations(chain, mid);
  isolate_rec(ps, chain, lo, mid, vlo, vm, out);
  isolate_rec(ps, chain, mid, hi, vm, vhi, out);
}

}  // namespace

std::vector<RootInterval> isolate_roots(const ZPoly& p, const mpq_class& lo,
                                        const mpq_class& hi,
                                        const mpq_class& tol) {
  if (p.eval_q(lo) == 0 || p.eval_q(hi) == 0)
    throw std::invalid_argument("isolate_roots endpoints must not be roots");
  ZPoly ps = squarefree_part(p);
  auto chain = sturm_chain(p);
  std::vector<RootInterval> out;
  if (chain.empty()) return out;
  isolate_rec(ps, chain, lo, hi, variations(chain, lo), variations(chain, hi), out);
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  for (RootInterval& iv : out) iv = refine_root(ps, iv, tol);
  return out;
}

RootInterval refine_root(const ZPoly& p, RootInterval iv, const mpq_class& tol) {
  if (iv.lo == iv.hi) return iv;
  ZPoly ps = squarefree_part(p);
  int slo = sgn(ps.eval_q(iv.lo));
  // Single simple root in (lo, hi] with nonvanishing endpoint values: the
  // endpoint signs differ, so plain sign bisection converges.
  while (iv.hi - iv.lo > tol) {
    mpq_class mid = (iv.lo + iv.hi) / 2;
    int sm = sgn(ps.eval_q(mid));
    if (sm == 0) {
      iv.lo = iv.hi = mid;
      return iv;
    }
    if (sm == slo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

namespace {

std::vector<long> small_divisors(const mpz_class& v) {
  mpz_class a = abs(v);
  if (a == 0) throw std::invalid_argument("divisors of zero");
  if (!a.fits_slong_p() || a.get_si() > 1000000000L)
    throw std::invalid_argument("constant term too large for rational root scan");
  return divisors(a.get_si());
}

}  // namespace

bool is_irreducible(const ZPoly& p) {
  ZPoly q = p.primitive_part();
  long d = q.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  if (d > 4) throw std::invalid_argument("is_irreducible supports degree <= 4");

  // rational roots r/s with r | constant, s | leading
  if (q.coeffs()[0] == 0) return false;  // x divides
  for (long r : small_divisors(q.coeffs()[0]))
    for (long s : small_divisors(q.leading())) {
      if (q.eval_q(mpq_class(r, s)) == 0) return false;
      if (q.eval_q(mpq_class(-r, s)) == 0) return false;
    }
  if (d <= 3) return true;

  // degree 4: remains to exclude a product of two quadratics. Monicize
  // (y = lead*x) so any such factorization has monic integer factors.
  const mpz_class& lam = q.leading();
  mpz_class q3 = q.coeffs()[3];
  mpz_class q2 = q.coeffs()[2] * lam;
  mpz_class q1 = q.coeffs()[1] * lam * lam;
  mpz_class q0 = q.coeffs()[0] * lam * lam * lam;
  for (long babs : small_divisors(q0)) {
    for (int bs = 0; bs < 2; ++bs) {
      mpz_class b = bs ? mpz_class(-babs) : mpz_class(babs);
      if (b == 0 || q0 % b != 0) continue;
      mpz_class dd = q0 / b;
      // a + c = q3, a*c = q2 - b - dd
      mpz_class disc = q3 * q3 - 4 * (q2 - b - dd);
      if (disc < 0) continue;
      mpz_class s;
      mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
      if (s * s != disc) continue;
      if ((q3 + s) % 2 != 0) continue;
      mpz_class a = (q3 + s) / 2;
      mpz_class c = q3 - a;
      if (a * dd + b * c == q1) return false;
    }
  }
  return true;
}

}  // namespace cyclotome
