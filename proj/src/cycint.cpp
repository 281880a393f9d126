#include "coxcells/cycint.hpp"

#include <cassert>
#include <map>

#include "coxcells/laurent.hpp"

namespace coxcells::cyc {

using laurent::checked_add;
using laurent::checked_mul;

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<int64_t> exact_div(std::vector<int64_t> num,
                               const std::vector<int64_t>& den) {
  assert(!den.empty() && den.back() != 0);
  std::vector<int64_t> q(num.size() - den.size() + 1, 0);
  for (size_t k = q.size(); k-- > 0;) {
    assert(num[k + den.size() - 1] % den.back() == 0);
    int64_t c = num[k + den.size() - 1] / den.back();
    q[k] = c;
    for (size_t j = 0; j < den.size(); ++j)
      num[k + j] = checked_add(num[k + j], checked_mul(-c, den[j]));
  }
  for (int64_t r : num) assert(r == 0);
  return q;
}

}  // namespace

std::vector<int64_t> cyclotomic(int n) {
  static std::map<int, std::vector<int64_t>> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  // x^n - 1 divided by Phi_d for all proper divisors d
  std::vector<int64_t> p(static_cast<size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = exact_div(std::move(p), cyclotomic(d));
  memo[n] = p;
  return p;
}

std::vector<int64_t> mincos_poly(int N) {
  if (N == 1) return {2, 1};  // theta = 2cos(pi) = -2
  // Phi_{2N}(y) is palindromic of even degree 2d; substituting z = y + 1/y
  // via W_k (W_0 = 2, W_1 = z, W_{k+1} = z W_k - W_{k-1}) gives the monic
  // minimal polynomial of 2cos(pi/N) of degree d = phi(2N)/2.
  std::vector<int64_t> phi = cyclotomic(2 * N);
  int d = static_cast<int>(phi.size() - 1) / 2;
  std::vector<std::vector<int64_t>> w(static_cast<size_t>(d) + 1);
  w[0] = {2};
  if (d >= 1) w[1] = {0, 1};
  for (int k = 2; k <= d; ++k) {
    w[k].assign(static_cast<size_t>(k) + 1, 0);
    for (size_t j = 0; j < w[k - 1].size(); ++j)
      w[k][j + 1] = checked_add(w[k][j + 1], w[k - 1][j]);
    for (size_t j = 0; j < w[k - 2].size(); ++j)
      w[k][j] = checked_add(w[k][j], -w[k - 2][j]);
  }
  std::vector<int64_t> psi(static_cast<size_t>(d) + 1, 0);
  psi[0] = phi[static_cast<size_t>(d)];
  for (int k = 1; k <= d; ++k) {
    int64_t c = phi[static_cast<size_t>(d + k)];
    if (c == 0) continue;
    for (size_t j = 0; j < w[k].size(); ++j)
      psi[j] = checked_add(psi[j], checked_mul(c, w[k][j]));
  }
  assert(psi.back() == 1);
  return psi;
}

Ring::Ring(int N) : n_(N), psi_(mincos_poly(N)) {
  deg_ = static_cast<int>(psi_.size()) - 1;
}

Ring::Elt Ring::from_int(int64_t c) const {
  Elt e = zero();
  if (deg_ > 0) e[0] = c;
  return e;
}

Ring::Elt Ring::theta_power_sum(int k) const {
  // W_k(theta), reduced; computed by the Chebyshev-style recurrence in-ring
  Elt w0 = from_int(2);
  if (k == 0) return w0;
  Elt theta = zero();
  if (deg_ >= 2) {
    theta[1] = 1;
  } else {
    // degree-1 ring: theta is the root of the linear psi
    theta[0] = -psi_[0];
  }
  Elt w1 = theta;
  for (int i = 2; i <= k; ++i) {
    Elt next = mul(theta, w1);
    sub_into(next, w0);
    w0 = std::move(w1);
    w1 = std::move(next);
  }
  return w1;
}

Ring::Elt Ring::two_cos(int m) const {
  assert(m >= 2 && n_ % m == 0);
  return theta_power_sum(n_ / m);
}

void Ring::add_into(std::span<int64_t> a, std::span<const int64_t> b) const {
  for (int i = 0; i < deg_; ++i) a[i] = checked_add(a[i], b[i]);
}

void Ring::sub_into(std::span<int64_t> a, std::span<const int64_t> b) const {
  for (int i = 0; i < deg_; ++i) a[i] = checked_add(a[i], -b[i]);
}

void Ring::addmul_into(std::span<int64_t> acc, std::span<const int64_t> a,
                       std::span<const int64_t> b) const {
  Elt p = mul(a, b);
  add_into(acc, p);
}

Ring::Elt Ring::mul(std::span<const int64_t> a, std::span<const int64_t> b) const {
  std::vector<int64_t> conv(static_cast<size_t>(2 * deg_ - 1), 0);
  for (int i = 0; i < deg_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < deg_; ++j)
      conv[static_cast<size_t>(i + j)] =
          checked_add(conv[static_cast<size_t>(i + j)], checked_mul(a[i], b[j]));
  }
  // reduce by the monic psi from the top
  for (int k = 2 * deg_ - 2; k >= deg_; --k) {
    int64_t c = conv[static_cast<size_t>(k)];
    if (c == 0) continue;
    conv[static_cast<size_t>(k)] = 0;
    for (int j = 0; j < deg_; ++j)
      conv[static_cast<size_t>(k - deg_ + j)] = checked_add(
          conv[static_cast<size_t>(k - deg_ + j)], checked_mul(-c, psi_[static_cast<size_t>(j)]));
  }
  conv.resize(static_cast<size_t>(deg_));
  return conv;
}

bool Ring::is_zero(std::span<const int64_t> a) const {
  for (int i = 0; i < deg_; ++i)
    if (a[i] != 0) return false;
  return true;
}

std::string Ring::str(std::span<const int64_t> a) const {
  std::string s = "[";
  for (int i = 0; i < deg_; ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + "]";
}

}  // namespace coxcells::cyc
