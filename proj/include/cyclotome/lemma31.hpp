#pragma once

// Certified positivity of the auxiliary function
//
//   f(x) = 13/4 - x - sum_i alpha_i * log |P_i(x)|
//
// on [0, 126/25] away from the logarithmic singularities (the roots of the
// P_i).  The derivative f'(x) equals G(x) / (1000 * prod_i P_i(x)) for an
// integer polynomial G of degree 20, so the critical points of f are exactly
// the real zeros of G that are not roots of any P_i.  The certificate
// establishes:
//
//   * G has exactly 20 zeros in (0, 126/25) (Sturm count), none shared with
//     any P_i (gcd check), each isolated and refined to a narrow rational
//     interval;
//   * f > 0 at every critical point (ball arithmetic, interval input);
//   * f > 0 at both endpoints x = 0 and x = 126/25;
//   * every alpha_i > 0 and the P_i are pairwise coprime, so f -> +infinity
//     at each of the 20 singular points inside the interval.
//
// Together these force f > 0 on the whole punctured interval: on each maximal
// open subinterval f is smooth, positive (or divergent to +infinity) at both
// ends, and any interior minimum is one of the certified critical points.

#include <vector>

#include <gmpxx.h>

#include "cyclotome/ball.hpp"
#include "cyclotome/ptable.hpp"
#include "cyclotome/zpoly.hpp"

namespace cyclotome {

struct Lemma31Certificate {
  bool ok = false;
  // Number of zeros of f' in (0, 126/25), certified by a Sturm count.
  int zero_count = 0;
  // Isolating intervals for those zeros, ascending.
  std::vector<RootInterval> zeros;
  // Ball enclosure of f at each zero (same order); every lo must be > 0.
  std::vector<BallReal> f_at_zeros;
  // Ball enclosures of f at the endpoints x = 0 and x = 126/25.
  BallReal f_at_left;
  BallReal f_at_right;
  // Number of singular points of f in (0, 126/25): total count of roots of
  // the P_i there.  Each is a +infinity asymptote of f.
  int asymptote_count = 0;
  // True once alpha_i > 0 and pairwise coprimality of the P_i are verified,
  // which is what makes every singularity diverge to +infinity.
  bool asymptotes_diverge = false;
};

// The numerator polynomial G with f'(x) = G(x) / (1000 * prod_i P_i(x)).
// Degree 20, leading coefficient -1000, integer coefficients.
ZPoly lemma31_g();

// Evaluate f on a ball.  Throws std::domain_error if any P_i(x) enclosure
// contains zero (the input straddles a singularity).
BallReal lemma31_f(const BallReal& x, long prec = 192);

// Run the full certificate at the given working precision.
Lemma31Certificate verify_lemma31_positivity(long prec = 320);

struct PlotSample {
  double x = 0.0;
  double f = 0.0;
};

// Sample f on a uniform grid over [0, 126/25], skipping points within
// `exclusion` of a singularity.  Intended for plotting, not certification.
std::vector<PlotSample> lemma31_plot_samples(long grid_points = 512,
                                             const mpq_class& exclusion = mpq_class(1, 1000));

}  // namespace cyclotome
