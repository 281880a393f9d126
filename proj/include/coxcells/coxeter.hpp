#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxcells/cycint.hpp"
#include "coxcells/errors.hpp"

namespace coxcells::cox {

// Off-diagonal order 0 encodes infinity, both internally and in documents.
inline constexpr int kInf = 0;

struct CoxeterMatrix {
  std::vector<std::string> gens;
  std::vector<std::vector<int>> m;  // symmetric, diag 1, off-diag >= 2 or kInf

  int rank() const { return static_cast<int>(gens.size()); }
  int order(int s, int t) const { return m[static_cast<size_t>(s)][static_cast<size_t>(t)]; }

  // throws InvalidMatrix naming the offending entry
  void validate() const;

  bool complete_graph() const;
  bool crystallographic() const;
  // lcm of the finite off-diagonal orders (1 when none)
  int cos_modulus() const;
  uint64_t fnv_hash() const;
  std::string json() const;

  int gen_index(const std::string& name) const;  // -1 if unknown
};

struct GroupProfile {
  bool complete_graph = false;
  bool crystallographic = false;
  int a0 = 1;
  std::vector<std::pair<int, int>> lambda_pairs;  // generator index pairs, m = a0
  std::vector<int> o_classes;                     // distinct finite off-diagonal orders
};

GroupProfile group_profile(const CoxeterMatrix& m);

struct DihedralInfo {
  int s = -1, t = -1;
  int order = kInf;  // m(s,t)
  bool finite = false;
  int longest = -1;  // element id, present iff finite and order <= radius
  std::string word_st;  // alternating word starting with s
  std::string word_ts;  // alternating word starting with t
};

class Ball;
using BallPtr = std::shared_ptr<const Ball>;

// All elements of length <= radius, enumerated in (length, ShortLex) order.
// Identity of elements is decided by the exact geometric representation
// sigma_s(alpha_t) = alpha_t + 2cos(pi/m(s,t)) alpha_s (coefficient 2 for
// m = infinity), with matrix entries in Z[2cos(pi/N)]. Immutable after
// build; safe for unrestricted concurrent reads.
class Ball {
 public:
  static BallPtr build(const CoxeterMatrix& matrix, int radius,
                       int64_t element_cap = 4'000'000);

  const CoxeterMatrix& matrix() const { return matrix_; }
  const cyc::Ring& ring() const { return ring_; }
  int radius() const { return radius_; }
  int rank() const { return matrix_.rank(); }
  int size() const { return static_cast<int>(length_.size()); }

  int length(int id) const { return length_[static_cast<size_t>(id)]; }
  std::span<const uint8_t> word(int id) const;
  std::string word_str(int id) const;  // generator names joined by "."
  // -1 when id.s (resp. s.id) has length radius+1
  int right(int id, int s) const { return nbr_r_[static_cast<size_t>(id) * rank_ + s]; }
  int left(int id, int s) const { return nbr_l_[static_cast<size_t>(id) * rank_ + s]; }
  uint32_t rdesc(int id) const { return rdesc_[static_cast<size_t>(id)]; }
  uint32_t ldesc(int id) const { return ldesc_[static_cast<size_t>(id)]; }
  bool is_rdesc(int id, int s) const { return (rdesc(id) >> s) & 1u; }
  bool is_ldesc(int id, int s) const { return (ldesc(id) >> s) & 1u; }
  std::vector<int> descents(int id, bool left_side) const;

  int parent(int id) const { return parent_[static_cast<size_t>(id)]; }
  std::span<const int32_t> children(int id) const;
  int first_of_length(int l) const;  // first id of the level, size() past end
  int count_of_length(int l) const;

  int inverse(int id) const;
  // matrix-product multiplication; throws BallExceeded when l(xy) > radius
  int multiply(int x, int y) const;
  // id of the element with the given matrix, -1 when absent
  int lookup(std::span<const int64_t> mat) const;
  std::span<const int64_t> element_matrix(int id) const;

  bool bruhat_leq(int y, int w) const;

  // all reduced words, ShortLex order, truncated at limit
  struct ReducedWords {
    std::vector<std::vector<uint8_t>> words;
    bool overflow = false;
  };
  ReducedWords reduced_expressions(int id, size_t limit = 100000) const;

  DihedralInfo dihedral(int s, int t) const;

  // walks; every intermediate stays in the ball or the walk fails
  // x = p . rest with l additive? returns rest id or -1
  int strip_left(int p, int x) const;
  // x = rest . p with l additive? returns rest id or -1
  int strip_right(int x, int p) const;
  // append letters on the right, requiring every step to ascend; -1 on failure
  int ascend_right(int x, std::span<const uint8_t> letters) const;
  int ascend_left(std::span<const uint8_t> letters, int x) const;
  // follow letters right-multiplying without constraint; -1 when leaving the ball
  int walk_right(int x, std::span<const uint8_t> letters) const;

  // parse "s.t.s" into an element, nullopt when it leaves the ball
  std::optional<int> parse_word(const std::string& dotted) const;

  uint64_t content_hash() const;

 private:
  Ball(const CoxeterMatrix& m, int radius);
  void build_levels(int64_t cap);
  void fill_tables();
  void ensure_bruhat() const;

  CoxeterMatrix matrix_;
  cyc::Ring ring_;
  int radius_;
  int rank_;
  int matlen_;  // rank * rank * ring.degree()

  std::vector<uint8_t> length_;
  std::vector<int32_t> word_off_;
  std::vector<uint8_t> word_;
  std::vector<int64_t> mats_;
  std::vector<int32_t> nbr_r_, nbr_l_;
  std::vector<uint32_t> rdesc_, ldesc_;
  std::vector<int32_t> parent_;
  std::vector<int32_t> child_off_, child_;
  std::vector<int32_t> level_off_;
  std::vector<int32_t> inverse_;

  struct HashSlot {
    uint64_t h;
    int32_t id;
  };
  std::vector<int32_t> bucket_head_;
  std::vector<int32_t> bucket_next_;
  std::vector<uint64_t> mat_hash_;
  uint64_t mask_ = 0;
  int find_in_table(uint64_t h, std::span<const int64_t> mat) const;
  void insert_in_table(uint64_t h, int id);

  // Bruhat rows, built lazily once (write-once cache)
  mutable std::once_flag bruhat_once_;
  mutable std::vector<uint64_t> bruhat_bits_;
  mutable size_t bruhat_stride_ = 0;

  // generator matrices and scratch-free column/row ops
  std::vector<std::vector<int64_t>> gen_cols_;  // 2cos values per pair
  void mul_gen_right(std::span<const int64_t> m, int s, std::span<int64_t> out) const;
  void mul_gen_left(int s, std::span<const int64_t> m, std::span<int64_t> out) const;
};

}  // namespace coxcells::cox
