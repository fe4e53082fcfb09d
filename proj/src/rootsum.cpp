#include "cyclotome/rootsum.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cyclotome/numtheory.hpp"

namespace cyclotome {

RootSum::RootSum(long conductor) : conductor_(conductor) {
  if (conductor < 1) throw std::invalid_argument("RootSum: conductor must be >= 1");
}

RootSum RootSum::root(long N, long e, long m) {
  RootSum r(N);
  r.add_term(e, m);
  return r;
}

RootSum RootSum::integer(long c) { return root(1, 0, c); }

long RootSum::term_count() const {
  long n = 0;
  for (auto& [e, m] : terms_) {
    (void)e;
    n += m < 0 ? -m : m;
  }
  return n;
}

void RootSum::add_term(long e, long m) {
  if (m == 0) return;
  long key = mod_norm(e, conductor_);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, m);
  } else if ((it->second += m) == 0) {
    terms_.erase(it);
  }
}

RootSum RootSum::lifted(long M) const {
  if (M % conductor_) throw std::invalid_argument("lifted: conductor must divide target");
  long f = M / conductor_;
  RootSum r(M);
  for (auto& [e, m] : terms_) r.add_term(e * f, m);
  return r;
}

RootSum RootSum::operator+(const RootSum& o) const {
  long M = std::lcm(conductor_, o.conductor_);
  RootSum r = lifted(M);
  long f = M / o.conductor_;
  for (auto& [e, m] : o.terms_) r.add_term(e * f, m);
  return r;
}

RootSum RootSum::operator-() const {
  RootSum r(conductor_);
  for (auto& [e, m] : terms_) r.terms_.emplace(e, -m);
  return r;
}

RootSum RootSum::operator-(const RootSum& o) const { return *this + (-o); }

RootSum RootSum::operator*(const RootSum& o) const {
  long M = std::lcm(conductor_, o.conductor_);
  RootSum a = lifted(M), b = o.lifted(M), r(M);
  for (auto& [ea, ma] : a.terms_)
    for (auto& [eb, mb] : b.terms_) r.add_term(ea + eb, ma * mb);
  return r;
}

RootSum RootSum::conjugate() const {
  RootSum r(conductor_);
  for (auto& [e, m] : terms_) r.add_term(-e, m);
  return r;
}

RootSum RootSum::galois(long k) const {
  if (std::gcd(mod_norm(k, conductor_), conductor_) != 1)
    throw std::invalid_argument("galois: index not coprime to conductor");
  RootSum r(conductor_);
  for (auto& [e, m] : terms_) r.add_term(e * mod_norm(k, conductor_), m);
  return r;
}

RootSum RootSum::rotated(long t) const {
  RootSum r(conductor_);
  for (auto& [e, m] : terms_) r.add_term(e + t, m);
  return r;
}

std::string RootSum::str() const {
  std::ostringstream os;
  os << conductor_ << ':';
  bool first = true;
  for (auto& [e, m] : terms_) {
    if (!first) os << ',';
    first = false;
    os << e << '^' << m;
  }
  return os.str();
}

RootSum RootSum::parse(const std::string& text) {
  size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("RootSum::parse: missing ':' in \"" + text + "\"");
  size_t pos = 0;
  long N = 0;
  try {
    N = std::stol(text.substr(0, colon), &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("RootSum::parse: bad conductor in \"" + text + "\"");
  }
  if (pos != colon || N < 1)
    throw std::invalid_argument("RootSum::parse: bad conductor in \"" + text + "\"");
  RootSum r(N);
  std::string rest = text.substr(colon + 1);
  if (rest.empty()) return r;
  if (rest.back() == ',')
    throw std::invalid_argument("RootSum::parse: trailing ',' in \"" + text + "\"");
  std::istringstream is(rest);
  std::string item;
  while (std::getline(is, item, ',')) {
    size_t caret = item.find('^');
    if (caret == std::string::npos)
      throw std::invalid_argument("RootSum::parse: term missing '^' in \"" + text + "\"");
    try {
      size_t p1 = 0, p2 = 0;
      long e = std::stol(item.substr(0, caret), &p1);
      long m = std::stol(item.substr(caret + 1), &p2);
      if (p1 != caret || p2 != item.size() - caret - 1)
        throw std::invalid_argument("trailing characters");
      r.add_term(e, m);
    } catch (const std::exception&) {
      throw std::invalid_argument("RootSum::parse: bad term \"" + item + "\" in \"" + text + "\"");
    }
  }
  return r;
}

RootSum apply_galois(long g, const RootSum& a) { return a.galois(g); }

}  // namespace cyclotome
