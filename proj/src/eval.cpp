#include "cyclotome/eval.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "cyclotome/numtheory.hpp"

namespace cyclotome {

RootTable::RootTable(long N, long prec) : N_(N), prec_(prec) {
  cos_.reserve(N);
  sin_.reserve(N);
  BallReal pi = BallReal::pi(prec);
  for (long j = 0; j < N; ++j) {
    // angle = 2*pi*j/N; the rational factor is exact, so the enclosure is
    // one rounding plus the width of pi's enclosure.
    BallReal angle = BallReal::from_mpq(mpq_class(2 * j, N), prec) * pi;
    cos_.push_back(angle.cos());
    sin_.push_back(angle.sin());
  }
}

namespace {
std::mutex g_table_mutex;
std::map<std::pair<long, long>, std::shared_ptr<const RootTable>>& table_cache() {
  static std::map<std::pair<long, long>, std::shared_ptr<const RootTable>> cache;
  return cache;
}
}  // namespace

std::shared_ptr<const RootTable> root_table(long N, long prec) {
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto& cache = table_cache();
  auto key = std::make_pair(N, prec);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto table = std::make_shared<const RootTable>(N, prec);
  cache.emplace(key, table);
  return table;
}

BallComplex eval_conjugate(const RootSum& a, long g, const RootTable& table) {
  long N = table.conductor();
  long prec = table.prec();
  BallComplex acc(prec);
  for (const auto& [e, m] : a.terms()) {
    long idx = mod_norm(g % N * (e % N), N);
    BallReal mult = BallReal::exact_long(m, prec);
    acc.re = acc.re + mult * table.cos_at(idx);
    acc.im = acc.im + mult * table.sin_at(idx);
  }
  return acc;
}

BallComplex eval(const RootSum& a, long g, const PrecisionPolicy& p) {
  auto table = root_table(a.conductor(), p.bits);
  return eval_conjugate(a, g, *table);
}

std::vector<BallReal> conjugate_abs_squares(const RootSum& a, long prec) {
  auto table = root_table(a.conductor(), prec);
  std::vector<BallReal> out;
  for (long g : coprime_residues(a.conductor())) {
    out.push_back(eval_conjugate(a, g, *table).abs2());
  }
  return out;
}

}  // namespace cyclotome
