#include "akm/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "akm/errors.hpp"

namespace akm {

MultiPoly MultiPoly::constant(int nvars, const CycloScalar& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::var(int nvars, int i) {
  Exponents e(nvars, 0);
  e.at(i) = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponents& e, const CycloScalar& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::linear(int nvars, int i, const CycloScalar& a, int j, const CycloScalar& b) {
  return var(nvars, i) * a + var(nvars, j) * b;
}

CycloScalar MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CycloScalar() : it->second;
}

void MultiPoly::add_term(const Exponents& e, const CycloScalar& c) {
  if (static_cast<int>(e.size()) != nvars_) throw ArgumentError("exponent length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw ArgumentError("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw ArgumentError("variable count mismatch");
  MultiPoly r(nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return *this = std::move(r);
}

MultiPoly& MultiPoly::operator*=(const CycloScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly r = constant(nvars_, CycloScalar(1));
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

MultiPoly MultiPoly::swapped(int i, int j) const {
  MultiPoly r(nvars_);
  for (const auto& [e0, c] : terms_) {
    Exponents e = e0;
    std::swap(e.at(i), e.at(j));
    r.terms_.emplace(std::move(e), c);
  }
  return r;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int MultiPoly::degree_in(int i) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(i));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  int d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return std::accumulate(t.first.begin(), t.first.end(), 0) == d; });
}

bool MultiPoly::is_symmetric() const {
  for (int i = 0; i + 1 < nvars_; ++i)
    if (!(swapped(i, i + 1) == *this)) return false;
  return true;
}

CycloScalar MultiPoly::evaluate(const std::vector<CycloScalar>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw ArgumentError("point has wrong length");
  CycloScalar r;
  for (const auto& [e, c] : terms_) {
    CycloScalar m = c;
    for (int i = 0; i < nvars_; ++i)
      for (int p = 0; p < e[i]; ++p) m *= point[i];
    r += m;
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw ArgumentError("wrong number of images");
  int m = images.empty() ? 0 : images[0].nvars();
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  MultiPoly r(m);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = constant(m, c);
    for (int i = 0; i < nvars_; ++i) {
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(m, CycloScalar(1)));
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      if (e[i] > 0) t *= pw[e[i]];
    }
    r += t;
  }
  return r;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    for (int i = 0; i < nvars_; ++i) {
      if (it->first[i] == 0) continue;
      os << "*z" << i + 1;
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

nlohmann::json MultiPoly::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [e, c] : terms_) j.push_back({e, c.to_json()});
  return j;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw ArgumentError("division by the zero polynomial");
  int n = f.nvars();
  const auto& [lg, cg] = *g.terms().rbegin();
  MultiPoly rest = f, quo(n);
  Exponents e(n);
  while (!rest.is_zero()) {
    const auto& [lf, cf] = *rest.terms().rbegin();
    for (int i = 0; i < n; ++i) {
      e[i] = lf[i] - lg[i];
      if (e[i] < 0) return std::nullopt;
    }
    MultiPoly t = MultiPoly::monomial(e, cf / cg);
    quo += t;
    rest -= t * g;
  }
  return quo;
}

}  // namespace akm
