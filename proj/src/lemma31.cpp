#include "cyclotome/lemma31.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "cyclotome/ptable.hpp"

namespace cyclotome {

namespace {

const mpq_class& right_endpoint() {
  static const mpq_class q(126, 25);
  return q;
}

}  // namespace

ZPoly lemma31_g() {
  const std::vector<PTableRow>& rows = p_table();
  ZPoly prod = ZPoly::from_longs({1});
  for (const PTableRow& r : rows) prod = prod * r.poly;

  // G = -1000 * prod - sum_i a_i * P_i' * prod_{j != i} P_j, where
  // a_i = 1000 * alpha_i is an exact integer.
  ZPoly g = -(prod * mpz_class(1000));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    mpq_class scaled = rows[i].alpha * 1000;
    if (scaled.get_den() != 1) throw std::logic_error("alpha denominator must divide 1000");
    ZPoly term = rows[i].poly.derivative();
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j != i) term = term * rows[j].poly;
    }
    g = g - term * scaled.get_num();
  }
  return g;
}

BallReal lemma31_f(const BallReal& x, long prec) {
  long p = prec > x.prec() ? prec : x.prec();
  const std::vector<PTableRow>& rows = p_table();
  BallReal f = BallReal::from_mpq(mpq_class(13, 4), p) - x;
  for (const PTableRow& r : rows) {
    BallReal pv = r.poly.eval_ball(x);
    if (pv.contains_zero()) {
      throw std::domain_error("lemma31_f: interval straddles a singularity of the logarithm");
    }
    f = f - BallReal::from_mpq(r.alpha, p) * pv.abs().log_pos();
  }
  return f;
}

Lemma31Certificate verify_lemma31_positivity(long prec) {
  Lemma31Certificate cert;
  const std::vector<PTableRow>& rows = p_table();
  const mpq_class lo(0);
  const mpq_class& hi = right_endpoint();

  ZPoly g = lemma31_g();
  if (g.degree() != 20) return cert;
  if (g.leading() != -1000) return cert;

  // Coefficients of the logarithms must be positive, and the P_i pairwise
  // coprime, so each singularity sends f to +infinity.
  for (const PTableRow& r : rows) {
    if (!(r.alpha > 0)) return cert;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (poly_gcd(rows[i].poly, rows[j].poly).degree() != 0) return cert;
    }
  }
  cert.asymptotes_diverge = true;

  // No zero of G coincides with a singularity, so the zeros of G inside the
  // interval are exactly the critical points of f there.
  for (const PTableRow& r : rows) {
    if (poly_gcd(g, r.poly).degree() != 0) return cert;
  }

  if (g.eval_q(lo) == 0 || g.eval_q(hi) == 0) return cert;
  cert.zero_count = static_cast<int>(sturm_count(g, lo, hi));

  int asym = 0;
  for (const PTableRow& r : rows) {
    if (r.poly.eval_q(lo) == 0 || r.poly.eval_q(hi) == 0) return cert;
    asym += static_cast<int>(sturm_count(r.poly, lo, hi));
  }
  cert.asymptote_count = asym;

  const mpq_class tol = mpq_class(1) / mpq_class(mpz_class(1) << 60);
  cert.zeros = isolate_roots(g, lo, hi, tol);
  if (static_cast<int>(cert.zeros.size()) != cert.zero_count) return cert;

  bool all_positive = true;
  for (RootInterval& iv : cert.zeros) {
    long p = prec;
    BallReal fv = lemma31_f(BallReal::from_mpq_interval(iv.lo, iv.hi, p), p);
    for (int round = 0; !fv.is_positive() && round < 4; ++round) {
      mpq_class finer = tol / mpq_class(mpz_class(1) << (40 * (round + 1)));
      iv = refine_root(g, iv, finer);
      p *= 2;
      fv = lemma31_f(BallReal::from_mpq_interval(iv.lo, iv.hi, p), p);
    }
    cert.f_at_zeros.push_back(fv);
    if (!fv.is_positive()) all_positive = false;
  }

  cert.f_at_left = lemma31_f(BallReal::from_mpq(lo, prec), prec);
  cert.f_at_right = lemma31_f(BallReal::from_mpq(hi, prec), prec);

  cert.ok = all_positive && cert.f_at_left.is_positive() && cert.f_at_right.is_positive();
  return cert;
}

std::vector<PlotSample> lemma31_plot_samples(long grid_points, const mpq_class& exclusion) {
  if (grid_points < 1) throw std::invalid_argument("grid_points must be >= 1");
  std::vector<PlotSample> out;
  const std::vector<PTableRow>& rows = p_table();

  // Locate every singularity once, to double accuracy.
  std::vector<double> sing;
  const mpq_class tol = mpq_class(1) / mpq_class(mpz_class(1) << 60);
  for (const PTableRow& r : rows) {
    for (const RootInterval& iv : isolate_roots(r.poly, mpq_class(-1), mpq_class(6), tol)) {
      sing.push_back(mpq_class((iv.lo + iv.hi) / 2).get_d());
    }
  }

  const double excl = exclusion.get_d();
  const double xhi = right_endpoint().get_d();
  for (long k = 0; k <= grid_points; ++k) {
    double x = xhi * static_cast<double>(k) / static_cast<double>(grid_points);
    bool skip = false;
    for (double s : sing) {
      if (std::abs(x - s) < excl) {
        skip = true;
        break;
      }
    }
    if (skip) continue;
    try {
      BallReal fv = lemma31_f(BallReal::from_double(x, 128), 128);
      out.push_back(PlotSample{x, fv.mid_d()});
    } catch (const std::domain_error&) {
      // Grid point still too close to a singularity for the enclosure.
    }
  }
  return out;
}

}  // namespace cyclotome
