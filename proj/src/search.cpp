// Normalized sweeps over k-term sums of roots of unity: stratified
// enumeration, certified pruning, orbit deduplication, checkpointing, and
// the exact decomposition inequality audit.

#include "cyclotome/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "cyclotome/ball.hpp"
#include "cyclotome/canonical.hpp"
#include "cyclotome/eval.hpp"
#include "cyclotome/mvalue.hpp"
#include "cyclotome/numtheory.hpp"

namespace cyclotome {

namespace {

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// One normalized stratum: tuples (0, second, j_3 <= ... <= j_k) with the
// remaining exponents drawn (with repetition) from the pool.
struct Stratum {
  long second = 0;
  std::vector<long> pool;
  mpz_class tuples;
};

// Number of non-decreasing tuples of the given length over a pool.
mpz_class multiset_count(std::size_t pool, int slots) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(pool + slots - 1),
               static_cast<unsigned long>(slots));
  return c;
}

std::vector<Stratum> build_strata(const SearchSpec& spec) {
  long N = spec.conductor;
  std::vector<Stratum> out;
  if (spec.k == 1) {
    Stratum s;
    s.tuples = 1;  // the single tuple (0)
    out.push_back(std::move(s));
    return out;
  }
  std::vector<long> seconds{0};
  for (long d : divisors(N)) seconds.push_back(d);
  int slots = spec.k - 2;
  for (long i : seconds) {
    Stratum s;
    s.second = i;
    for (long j = 0; j < N; ++j)
      if (std::gcd(N, j) >= i) s.pool.push_back(j);  // gcd(N, 0) = N
    s.tuples = multiset_count(s.pool.size(), slots);
    out.push_back(std::move(s));
  }
  return out;
}

// Lexicographic successor of a non-decreasing index tuple over [0, L).
bool next_multiset(std::vector<int>& idx, int L) {
  for (int p = static_cast<int>(idx.size()) - 1; p >= 0; --p) {
    if (idx[p] + 1 < L) {
      int v = idx[p] + 1;
      for (std::size_t q = static_cast<std::size_t>(p); q < idx.size(); ++q)
        idx[q] = v;
      return true;
    }
  }
  return false;
}

// rank -> non-decreasing index tuple of length slots over [0, L), in
// lexicographic order; rank must be below multiset_count(L, slots).
std::vector<int> unrank_multiset(mpz_class rank, int L, int slots) {
  std::vector<int> idx(static_cast<std::size_t>(slots));
  int m = 0;
  for (int pos = 0; pos < slots; ++pos) {
    for (int t = m; t < L; ++t) {
      mpz_class c =
          multiset_count(static_cast<std::size_t>(L - t), slots - pos - 1);
      if (rank < c) {
        idx[static_cast<std::size_t>(pos)] = t;
        m = t;
        break;
      }
      rank -= c;
    }
  }
  return idx;
}

// Uniform integer in [0, bound) from whole 64-bit draws (rejection on the
// top bits), so resumed runs replay the identical draw sequence.
mpz_class draw_mpz_below(std::mt19937_64& rng, const mpz_class& bound) {
  std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  std::size_t chunks = (bits + 63) / 64;
  mpz_class mask = (mpz_class(1) << bits) - 1;
  for (;;) {
    mpz_class r = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
      r <<= 64;
      r += mpz_class(static_cast<unsigned long>(rng()));
    }
    r &= mask;
    if (r < bound) return r;
  }
}

// Double-precision scan over all embeddings, with a slack wide enough that
// a rejection here is always re-checked by certified arithmetic before a
// candidate is discarded.
struct FastScan {
  long N;
  double limit;
  std::vector<double> cos_t, sin_t;
  std::vector<long> gs;

  FastScan(long N_in, const mpq_class& ceiling_sq)
      : N(N_in),
        limit(ceiling_sq.get_d() + 1e-6),
        cos_t(static_cast<std::size_t>(N_in)),
        sin_t(static_cast<std::size_t>(N_in)),
        gs(coprime_residues(N_in)) {
    const double two_pi = 2.0 * std::acos(-1.0);
    for (long t = 0; t < N; ++t) {
      double a = two_pi * static_cast<double>(t) / static_cast<double>(N);
      cos_t[static_cast<std::size_t>(t)] = std::cos(a);
      sin_t[static_cast<std::size_t>(t)] = std::sin(a);
    }
  }

  // First embedding whose squared magnitude clearly exceeds the ceiling in
  // doubles; 0 when none stands out (candidate goes to full classification).
  long scan(const std::vector<long>& exps) const {
    for (long g : gs) {
      if (g == 0) continue;
      double re = 0.0, im = 0.0;
      for (long e : exps) {
        auto t = static_cast<std::size_t>((g * e) % N);
        re += cos_t[t];
        im += sin_t[t];
      }
      if (re * re + im * im > limit) return g;
    }
    return 0;
  }
};

// Certified confirmation that |sigma_g(beta)|^2 > ceiling, which bounds the
// house from below and soundly discards the candidate.
bool confirm_above(const RootSum& beta, long g, const mpq_class& ceiling_sq,
                   long bits) {
  BallComplex ev = eval(beta, g, PrecisionPolicy{0, 0, bits});
  BallReal ceil = BallReal::from_mpq(ceiling_sq, bits);
  return BallReal::compare(ev.abs2(), ceil) > 0;
}

std::string form_text(const CanonicalForm& f) {
  RootSum r(f.conductor);
  for (std::size_t e = 0; e < f.coeffs.size(); ++e)
    if (f.coeffs[e])
      r.add_term(static_cast<long>(e), static_cast<long>(f.coeffs[e]));
  return r.str();
}

struct RunState {
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
  std::uint64_t above = 0;
  std::uint64_t zeros = 0;
  std::uint64_t sb = 0;
  std::uint64_t unres = 0;
  std::vector<Survivor> survivors;           // in encounter order
  std::map<std::string, std::size_t> index;  // canonical key -> position
  std::size_t stratum = 0;                   // full mode: current stratum
  std::uint64_t consumed = 0;  // tuples done in that stratum, or samples done
};

void save_checkpoint(const std::string& path, std::uint64_t hash,
                     const RunState& st) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out)
      throw std::runtime_error("checkpoint: cannot write " + tmp);
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(hash));
    out << "cyclotome-checkpoint v1\n";
    out << "spec " << hex << "\n";
    out << "cursor " << st.stratum << " " << st.consumed << "\n";
    out << "counters " << st.examined << " " << st.pruned << " " << st.above
        << " " << st.zeros << " " << st.sb << " " << st.unres << "\n";
    for (const auto& s : st.survivors)
      out << "surv " << s.hits << " " << s.beta.str() << "\n";
    out << "end\n";
    out.flush();
    if (!out)
      throw std::runtime_error("checkpoint: write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("checkpoint: rename failed for " + path);
}

// Returns false when no checkpoint exists; throws on any mismatch or damage
// rather than risk silently corrupting a resumed run.
bool load_checkpoint(const std::string& path, std::uint64_t hash,
                     RunState& st) {
  std::ifstream in(path);
  if (!in) return false;
  auto refuse = [&](const std::string& why) {
    throw std::runtime_error("checkpoint: refusing " + path + ": " + why);
  };
  std::string line;
  if (!std::getline(in, line) || line != "cyclotome-checkpoint v1")
    refuse("unrecognized header");
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(hash));
  if (!std::getline(in, line) || line.rfind("spec ", 0) != 0)
    refuse("missing spec line");
  if (line.substr(5) != hex)
    refuse("run parameters differ from the checkpoint's");
  if (!std::getline(in, line) || line.rfind("cursor ", 0) != 0)
    refuse("missing cursor line");
  {
    std::istringstream ls(line.substr(7));
    if (!(ls >> st.stratum >> st.consumed)) refuse("bad cursor line");
  }
  if (!std::getline(in, line) || line.rfind("counters ", 0) != 0)
    refuse("missing counters line");
  {
    std::istringstream ls(line.substr(9));
    if (!(ls >> st.examined >> st.pruned >> st.above >> st.zeros >> st.sb >>
          st.unres))
      refuse("bad counters line");
  }
  bool saw_end = false;
  while (std::getline(in, line)) {
    if (line == "end") {
      saw_end = true;
      break;
    }
    if (line.rfind("surv ", 0) != 0) refuse("unrecognized line");
    std::istringstream ls(line.substr(5));
    std::uint64_t hits = 0;
    std::string text;
    if (!(ls >> hits >> text)) refuse("bad survivor line");
    Survivor s;
    s.beta = RootSum::parse(text);
    s.report = classify(s.beta);  // reclassified, not trusted from disk
    s.canonical_key = orbit_canonical_key(s.beta);
    s.hits = hits;
    st.index.emplace(s.canonical_key, st.survivors.size());
    st.survivors.push_back(std::move(s));
  }
  if (!saw_end) refuse("truncated file");
  return true;
}

// Certified comparison of the house squared against a non-default ceiling:
// +1 above, -1 below, 0 undecided at every precision tried.
int decide_against_ceiling(const RootSum& beta, HouseReport& rep,
                           const SearchSpec& spec) {
  int c = BallReal::compare(
      rep.house.sqr(), BallReal::from_mpq(spec.ceiling_sq, rep.house.prec()));
  if (c != 0) return c;
  for (long bits = std::max(spec.verify_bits, 256L); bits <= 2048; bits *= 2) {
    HouseReport fine = house_of(beta, PrecisionPolicy{0, 0, bits});
    c = BallReal::compare(fine.house.sqr(),
                          BallReal::from_mpq(spec.ceiling_sq, bits));
    if (c != 0) {
      rep.house = fine.house;
      return c;
    }
  }
  return 0;
}

}  // namespace

std::string SearchSpec::canonical_string() const {
  std::ostringstream os;
  os << "cyclotome-search v1 N=" << conductor << " k=" << k
     << " ceiling=" << ceiling_sq.get_str()
     << " mode=" << (sampled ? "sampled" : "full") << " seed=" << seed
     << " count=" << sample_count << " prune=" << prune_bits
     << " verify=" << verify_bits;
  return os.str();
}

mpz_class estimate_full_work(const SearchSpec& spec) {
  if (spec.k < 1)
    throw std::invalid_argument("search: term count k must be at least 1");
  if (spec.conductor < 1)
    throw std::invalid_argument("search: conductor must be positive");
  mpz_class total = 0;
  for (const Stratum& s : build_strata(spec)) total += s.tuples;
  return total;
}

std::string orbit_canonical_key(const RootSum& beta) {
  long N = beta.conductor();
  bool negate_separately = (N % 2) != 0;  // even N: -1 is a rotation already
  bool have = false;
  CanonicalForm best;
  for (long g : coprime_residues(N)) {
    RootSum bg = apply_galois(g == 0 ? 1 : g, beta);
    for (long t = 0; t < N; ++t) {
      RootSum bt = bg.rotated(t);
      CanonicalForm f = canonicalize(bt);
      if (!have || f < best) {
        best = std::move(f);
        have = true;
      }
      if (negate_separately) {
        CanonicalForm fn = canonicalize(-bt);
        if (fn < best) best = std::move(fn);
      }
    }
  }
  return form_text(best);
}

SearchResult enumerate_candidates(const SearchSpec& spec,
                                  const std::string& checkpoint_path,
                                  const SurvivorSink& sink,
                                  std::uint64_t halt_after) {
  if (spec.k < 1)
    throw std::invalid_argument("search: term count k must be at least 1");
  if (spec.conductor < 1)
    throw std::invalid_argument("search: conductor must be positive");
  if (spec.ceiling_sq <= 0)
    throw std::invalid_argument("search: ceiling must be positive");

  std::vector<Stratum> strata = build_strata(spec);
  mpz_class total = 0;
  for (const Stratum& s : strata) total += s.tuples;

  if (!spec.sampled &&
      total > mpz_class(static_cast<unsigned long>(search_work_cap)))
    throw std::runtime_error(
        "search: full enumeration would examine " + total.get_str() +
        " tuples, above the cap of " + std::to_string(search_work_cap) +
        "; rerun in sampled mode (set sampled, seed, sample_count)");

  std::uint64_t hash = fnv1a64(spec.canonical_string());
  RunState st;
  if (!checkpoint_path.empty()) load_checkpoint(checkpoint_path, hash, st);

  const bool default_ceiling = (spec.ceiling_sq == house_sq_cutoff());
  FastScan fast(spec.conductor, spec.ceiling_sq);
  bool halted = false;

  auto maybe_save = [&](bool force) {
    if (checkpoint_path.empty()) return;
    if (force || st.examined % 20000 == 0) save_checkpoint(checkpoint_path, hash, st);
  };

  auto process = [&](const std::vector<long>& exps) {
    ++st.examined;
    ++st.consumed;
    RootSum beta(spec.conductor);
    for (long e : exps) beta.add_term(e, 1);
    long g = fast.scan(exps);
    if (g != 0 && confirm_above(beta, g, spec.ceiling_sq, spec.prune_bits)) {
      ++st.pruned;
    } else if (is_zero_value(beta)) {
      ++st.zeros;
    } else {
      // Key first: a repeat of a known surviving class needs no new
      // certification (equivalent sums share their house exactly).
      std::string key = orbit_canonical_key(beta);
      auto it = st.index.find(key);
      if (it != st.index.end()) {
        ++st.survivors[it->second].hits;
      } else {
        HouseReport rep = classify(beta);
        int decide;
        if (default_ceiling) {
          decide = rep.status == HouseStatus::ProvedExceeds ? 1 : -1;
        } else {
          decide = decide_against_ceiling(beta, rep, spec);
          if (decide == 0) rep.status = HouseStatus::Unresolved;
        }
        if (decide > 0) {
          ++st.above;
        } else {
          if (rep.status == HouseStatus::StrictlyBetween) ++st.sb;
          if (rep.status == HouseStatus::Unresolved) ++st.unres;
          st.index.emplace(key, st.survivors.size());
          st.survivors.push_back(Survivor{beta, rep, key, 1});
          if (sink) sink(beta, rep);
        }
      }
    }
    maybe_save(false);
    if (halt_after != 0 && st.examined >= halt_after) halted = true;
  };

  if (!spec.sampled) {
    while (st.stratum < strata.size() && !halted) {
      const Stratum& s = strata[st.stratum];
      if (mpz_class(static_cast<unsigned long>(st.consumed)) >= s.tuples) {
        ++st.stratum;
        st.consumed = 0;
        continue;
      }
      if (spec.k == 1) {
        process(std::vector<long>{0});
        continue;
      }
      int L = static_cast<int>(s.pool.size());
      int slots = spec.k - 2;
      std::vector<int> idx;
      if (slots > 0)
        idx = unrank_multiset(
            mpz_class(static_cast<unsigned long>(st.consumed)), L, slots);
      std::vector<long> exps(static_cast<std::size_t>(spec.k));
      exps[0] = 0;
      exps[1] = s.second % spec.conductor;
      bool more = true;
      while (more && !halted) {
        for (int q = 0; q < slots; ++q)
          exps[static_cast<std::size_t>(2 + q)] =
              s.pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(q)])];
        process(exps);
        more = slots > 0 && next_multiset(idx, L);
      }
      if (!halted) {
        ++st.stratum;
        st.consumed = 0;
        maybe_save(true);
      }
    }
  } else {
    std::mt19937_64 rng(spec.seed);
    // Replay the draws behind already-consumed samples so the stream
    // continues exactly where the checkpoint left off.
    for (std::uint64_t i = 0; i < st.consumed; ++i)
      (void)draw_mpz_below(rng, total);
    while (st.consumed < spec.sample_count && !halted) {
      mpz_class r = draw_mpz_below(rng, total);
      std::size_t si = 0;
      while (r >= strata[si].tuples) {
        r -= strata[si].tuples;
        ++si;
      }
      const Stratum& s = strata[si];
      std::vector<long> exps;
      exps.reserve(static_cast<std::size_t>(spec.k));
      exps.push_back(0);
      if (spec.k >= 2) {
        exps.push_back(s.second % spec.conductor);
        int slots = spec.k - 2;
        if (slots > 0) {
          std::vector<int> idx =
              unrank_multiset(r, static_cast<int>(s.pool.size()), slots);
          for (int q = 0; q < slots; ++q)
            exps.push_back(s.pool[static_cast<std::size_t>(
                idx[static_cast<std::size_t>(q)])]);
        }
      }
      process(exps);
    }
  }

  maybe_save(true);

  SearchResult out;
  out.spec = spec;
  out.examined = st.examined;
  out.pruned = st.pruned;
  out.above_ceiling = st.above;
  out.zero_values = st.zeros;
  out.strictly_between = st.sb;
  out.unresolved = st.unres;
  out.survivors = std::move(st.survivors);
  std::sort(out.survivors.begin(), out.survivors.end(),
            [](const Survivor& a, const Survivor& b) {
              return a.canonical_key < b.canonical_key;
            });
  out.complete = !halted;
  return out;
}

SInequalityReport check_s_inequality(const std::vector<RootSum>& parts,
                                     long p) {
  if (!is_prime(p))
    throw std::invalid_argument("check_s_inequality: p must be prime");
  std::vector<const RootSum*> nz;
  for (const RootSum& a : parts)
    if (!is_zero_value(a)) nz.push_back(&a);
  SInequalityReport rep;
  rep.threshold = mpq_class(13 * (p - 1)) / mpq_class(4);
  long X = static_cast<long>(nz.size());
  mpq_class msum = 0;
  for (const RootSum* a : nz) msum += m_of(*a);
  mpq_class pair_sum = 0;
  for (std::size_t i = 0; i < nz.size(); ++i)
    for (std::size_t j = i + 1; j < nz.size(); ++j)
      pair_sum += m_of(*nz[i] - *nz[j]);
  rep.s = mpq_class(p - X) * msum + pair_sum;
  rep.contradiction = rep.s >= rep.threshold;
  return rep;
}

}  // namespace cyclotome
