#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace coxcells::cyc {

// Exact arithmetic in Z[theta], theta = 2cos(pi/N), reduced modulo the
// minimal polynomial of theta. N is the lcm of the finite Coxeter matrix
// entries; when nothing is finite the ring degenerates to Z. Elements are
// coefficient vectors of a fixed length (the ring degree), so equality is
// plain vector equality and no floating point appears anywhere.

// Cyclotomic polynomial Phi_n, ascending integer coefficients.
std::vector<int64_t> cyclotomic(int n);

// Minimal polynomial of 2cos(pi/N) over Z, ascending, monic.
std::vector<int64_t> mincos_poly(int N);

class Ring {
 public:
  explicit Ring(int N);

  int modulus() const { return n_; }        // the N above
  int degree() const { return deg_; }       // coefficient vector length
  const std::vector<int64_t>& minimal_poly() const { return psi_; }

  using Elt = std::vector<int64_t>;

  Elt zero() const { return Elt(static_cast<size_t>(deg_), 0); }
  Elt from_int(int64_t c) const;
  Elt theta_power_sum(int k) const;  // W_k(theta) = 2cos(k*pi/N), exact
  Elt two_cos(int m) const;          // 2cos(pi/m) for finite m dividing N

  void add_into(std::span<int64_t> a, std::span<const int64_t> b) const;
  void sub_into(std::span<int64_t> a, std::span<const int64_t> b) const;
  void addmul_into(std::span<int64_t> acc, std::span<const int64_t> a,
                   std::span<const int64_t> b) const;  // acc += a*b mod psi
  Elt mul(std::span<const int64_t> a, std::span<const int64_t> b) const;

  bool is_zero(std::span<const int64_t> a) const;
  std::string str(std::span<const int64_t> a) const;

 private:
  int n_;
  int deg_;
  std::vector<int64_t> psi_;
};

}  // namespace coxcells::cyc
