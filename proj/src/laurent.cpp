#include "coxcells/laurent.hpp"

#include <algorithm>
#include <cstdlib>

namespace coxcells::laurent {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "integer addition overflow");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "integer multiplication overflow");
  return r;
}

Laurent Laurent::xi() {
  Laurent p;
  p.t_ = {{-1, -1}, {1, 1}};
  return p;
}

Laurent Laurent::eta() {
  Laurent p;
  p.t_ = {{-1, 1}, {1, 1}};
  return p;
}

int64_t Laurent::coeff(int e) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), e,
                             [](const auto& t, int x) { return t.first < x; });
  return (it != t_.end() && it->first == e) ? it->second : 0;
}

void Laurent::prune() {
  t_.erase(std::remove_if(t_.begin(), t_.end(),
                          [](const auto& t) { return t.second == 0; }),
           t_.end());
}

Laurent add_scaled(const Laurent& a, const Laurent& b, int64_t c) {
  Laurent r;
  r.t_.reserve(a.t_.size() + b.t_.size());
  size_t i = 0, j = 0;
  while (i < a.t_.size() || j < b.t_.size()) {
    if (j == b.t_.size() || (i < a.t_.size() && a.t_[i].first < b.t_[j].first)) {
      r.t_.push_back(a.t_[i++]);
    } else if (i == a.t_.size() || b.t_[j].first < a.t_[i].first) {
      r.t_.push_back({b.t_[j].first, checked_mul(c, b.t_[j].second)});
      ++j;
    } else {
      int64_t s = checked_add(a.t_[i].second, checked_mul(c, b.t_[j].second));
      if (s != 0) r.t_.push_back({a.t_[i].first, s});
      ++i;
      ++j;
    }
  }
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  *this = add_scaled(*this, o, 1);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  *this = add_scaled(*this, o, -1);
  return *this;
}

Laurent Laurent::operator+(const Laurent& o) const { return add_scaled(*this, o, 1); }
Laurent Laurent::operator-(const Laurent& o) const { return add_scaled(*this, o, -1); }

Laurent Laurent::operator*(const Laurent& o) const {
  if (t_.empty() || o.t_.empty()) return Laurent();
  // dense accumulation over the exponent range
  int lo = t_.front().first + o.t_.front().first;
  int hi = t_.back().first + o.t_.back().first;
  std::vector<int64_t> acc(static_cast<size_t>(hi - lo + 1), 0);
  for (const auto& [ea, ca] : t_)
    for (const auto& [eb, cb] : o.t_) {
      size_t k = static_cast<size_t>(ea + eb - lo);
      acc[k] = checked_add(acc[k], checked_mul(ca, cb));
    }
  Laurent r;
  for (size_t k = 0; k < acc.size(); ++k)
    if (acc[k] != 0) r.t_.push_back({lo + static_cast<int>(k), acc[k]});
  return r;
}

Laurent Laurent::operator-() const { return scaled(-1); }

Laurent Laurent::scaled(int64_t c) const {
  Laurent r;
  if (c == 0) return r;
  r.t_ = t_;
  for (auto& t : r.t_) t.second = checked_mul(t.second, c);
  return r;
}

Laurent Laurent::shifted(int e) const {
  Laurent r = *this;
  for (auto& t : r.t_) t.first += e;
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  r.t_.assign(t_.rbegin(), t_.rend());
  for (auto& t : r.t_) t.first = -t.first;
  return r;
}

namespace {

void append_exponent(std::string& s, int e) {
  // exponent e in v-units printed as a q-power; even exponents are integral
  if (e == 2) {
    s += "q";
  } else if (e % 2 == 0) {
    s += "q^" + std::to_string(e / 2);
  } else {
    s += "q^(" + std::to_string(e) + "/2)";
  }
}

}  // namespace

std::string Laurent::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    auto [e, c] = *it;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += (c < 0) ? " - " : " + ";
    }
    int64_t a = std::abs(c);
    if (e == 0) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + "*";
      append_exponent(s, e);
    }
  }
  return s;
}

std::string Laurent::json() const {
  std::string s = "[";
  for (size_t i = 0; i < t_.size(); ++i) {
    if (i) s += ",";
    s += "[" + std::to_string(t_[i].first) + "," + std::to_string(t_[i].second) + "]";
  }
  return s + "]";
}

bool BasisExpansion::nonnegative() const {
  for (int64_t x : c)
    if (x < 0) return false;
  return true;
}

Laurent BasisExpansion::to_laurent() const {
  Laurent base = (basis == Basis::XI) ? Laurent::xi() : Laurent::eta();
  Laurent r, pw = Laurent::one();
  for (size_t k = 0; k < c.size(); ++k) {
    if (k) pw = pw * base;
    r = add_scaled(r, pw, c[k]);
  }
  return r;
}

BasisExpansion expand_in(const Laurent& p, Basis basis) {
  BasisExpansion out;
  out.basis = basis;
  if (p.is_zero()) return out;
  int d = p.deg();
  if (d < 0) throw Error(ErrorKind::NotExpressible, "top exponent below zero");
  Laurent base = (basis == Basis::XI) ? Laurent::xi() : Laurent::eta();
  std::vector<Laurent> pw(static_cast<size_t>(d) + 1);
  pw[0] = Laurent::one();
  for (int k = 1; k <= d; ++k) pw[k] = pw[k - 1] * base;
  out.c.assign(static_cast<size_t>(d) + 1, 0);
  Laurent rem = p;
  while (!rem.is_zero()) {
    int e = rem.deg();
    if (e < 0)
      throw Error(ErrorKind::NotExpressible,
                  "remainder " + rem.str() + " is not a polynomial in the basis");
    out.c[e] = rem.coeff(e);
    rem = add_scaled(rem, pw[e], -out.c[e]);
  }
  while (!out.c.empty() && out.c.back() == 0) out.c.pop_back();
  return out;
}

int degree(const Laurent& p, Unit unit) {
  if (p.is_zero()) return kNegInf;
  if (unit == Unit::V) return p.deg();
  for (const auto& [e, c] : p.terms())
    if (e % 2 != 0)
      throw Error(ErrorKind::NotAQPolynomial,
                  "odd v-exponent " + std::to_string(e) + " present");
  return p.deg() / 2;
}

}  // namespace coxcells::laurent
