#include "coxcells/coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace coxcells::cox {

namespace {

uint64_t fnv1a(const void* data, size_t n, uint64_t h = 1469598103934665603ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

void CoxeterMatrix::validate() const {
  int r = rank();
  if (r < 1) throw Error(ErrorKind::InvalidMatrix, "rank must be at least 1");
  for (int i = 0; i < r; ++i) {
    if (gens[static_cast<size_t>(i)].empty())
      throw Error(ErrorKind::InvalidMatrix, "generator " + std::to_string(i) + " has empty name");
    for (int j = i + 1; j < r; ++j)
      if (gens[static_cast<size_t>(i)] == gens[static_cast<size_t>(j)])
        throw Error(ErrorKind::InvalidMatrix,
                    "duplicate generator name '" + gens[static_cast<size_t>(i)] + "'");
  }
  if (static_cast<int>(m.size()) != r)
    throw Error(ErrorKind::InvalidMatrix, "m must be a rank x rank table");
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(m[static_cast<size_t>(i)].size()) != r)
      throw Error(ErrorKind::InvalidMatrix, "row " + std::to_string(i) + " has wrong width");
    for (int j = 0; j < r; ++j) {
      int v = order(i, j);
      std::string at = "m[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (i == j && v != 1)
        throw Error(ErrorKind::InvalidMatrix, at + " must be 1 on the diagonal");
      if (i != j && v != kInf && v < 2)
        throw Error(ErrorKind::InvalidMatrix, at + " must be >= 2 or 0 (infinity)");
      if (v != order(j, i))
        throw Error(ErrorKind::InvalidMatrix, at + " breaks symmetry");
    }
  }
}

bool CoxeterMatrix::complete_graph() const {
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j)
      if (order(i, j) != kInf && order(i, j) < 3) return false;
  return true;
}

bool CoxeterMatrix::crystallographic() const {
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j) {
      int v = order(i, j);
      if (v != kInf && v != 2 && v != 3 && v != 4 && v != 6) return false;
    }
  return true;
}

int CoxeterMatrix::cos_modulus() const {
  int n = 1;
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j)
      if (order(i, j) != kInf) n = std::lcm(n, order(i, j));
  return n;
}

uint64_t CoxeterMatrix::fnv_hash() const {
  uint64_t h = 1469598103934665603ull;
  for (const auto& g : gens) {
    h = fnv1a(g.data(), g.size(), h);
    h = fnv1a("|", 1, h);
  }
  for (const auto& row : m)
    for (int v : row) h = fnv1a(&v, sizeof v, h);
  return h;
}

std::string CoxeterMatrix::json() const {
  std::ostringstream os;
  os << "{\"gens\":[";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ",";
    os << '"' << gens[i] << '"';
  }
  os << "],\"m\":[";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) os << ",";
    os << "[";
    for (size_t j = 0; j < m[i].size(); ++j) {
      if (j) os << ",";
      os << m[i][j];
    }
    os << "]";
  }
  os << "]}";
  return os.str();
}

int CoxeterMatrix::gen_index(const std::string& name) const {
  for (int i = 0; i < rank(); ++i)
    if (gens[static_cast<size_t>(i)] == name) return i;
  return -1;
}

GroupProfile group_profile(const CoxeterMatrix& m) {
  GroupProfile p;
  p.complete_graph = m.complete_graph();
  p.crystallographic = m.crystallographic();
  // Rank >= 3 standard parabolics of a complete graph are infinite, so the
  // finite parabolics have rank <= 2 and a0 is the largest finite order
  // (1 when every off-diagonal entry is infinite).
  int a0 = 1;
  for (int i = 0; i < m.rank(); ++i)
    for (int j = i + 1; j < m.rank(); ++j) {
      int v = m.order(i, j);
      if (v != kInf) {
        a0 = std::max(a0, v);
        if (std::find(p.o_classes.begin(), p.o_classes.end(), v) == p.o_classes.end())
          p.o_classes.push_back(v);
      }
    }
  std::sort(p.o_classes.begin(), p.o_classes.end());
  p.a0 = a0;
  if (a0 >= 2)
    for (int i = 0; i < m.rank(); ++i)
      for (int j = i + 1; j < m.rank(); ++j)
        if (m.order(i, j) == a0) p.lambda_pairs.push_back({i, j});
  return p;
}

Ball::Ball(const CoxeterMatrix& m, int radius)
    : matrix_(m), ring_(m.cos_modulus()), radius_(radius), rank_(m.rank()) {
  matlen_ = rank_ * rank_ * ring_.degree();
  gen_cols_.resize(static_cast<size_t>(rank_) * rank_);
  for (int s = 0; s < rank_; ++s)
    for (int j = 0; j < rank_; ++j) {
      if (s == j) continue;
      int ord = matrix_.order(s, j);
      gen_cols_[static_cast<size_t>(s) * rank_ + j] =
          (ord == kInf) ? ring_.from_int(2) : ring_.two_cos(ord);
    }
}

BallPtr Ball::build(const CoxeterMatrix& matrix, int radius, int64_t element_cap) {
  matrix.validate();
  if (radius < 0) throw Error(ErrorKind::InvalidMatrix, "radius must be >= 0");
  std::shared_ptr<Ball> b(new Ball(matrix, radius));
  b->build_levels(element_cap);
  b->fill_tables();
  return b;
}

std::span<const uint8_t> Ball::word(int id) const {
  size_t a = static_cast<size_t>(word_off_[static_cast<size_t>(id)]);
  size_t z = static_cast<size_t>(word_off_[static_cast<size_t>(id) + 1]);
  return {word_.data() + a, z - a};
}

std::string Ball::word_str(int id) const {
  std::string s;
  for (uint8_t g : word(id)) {
    if (!s.empty()) s += ".";
    s += matrix_.gens[g];
  }
  return s;
}

std::vector<int> Ball::descents(int id, bool left_side) const {
  std::vector<int> out;
  uint32_t mask = left_side ? ldesc(id) : rdesc(id);
  for (int s = 0; s < rank_; ++s)
    if ((mask >> s) & 1u) out.push_back(s);
  return out;
}

std::span<const int32_t> Ball::children(int id) const {
  size_t a = static_cast<size_t>(child_off_[static_cast<size_t>(id)]);
  size_t z = static_cast<size_t>(child_off_[static_cast<size_t>(id) + 1]);
  return {child_.data() + a, z - a};
}

int Ball::first_of_length(int l) const {
  if (l >= static_cast<int>(level_off_.size()) - 1) return size();
  return level_off_[static_cast<size_t>(l)];
}

int Ball::count_of_length(int l) const {
  if (l >= static_cast<int>(level_off_.size()) - 1) return 0;
  return level_off_[static_cast<size_t>(l) + 1] - level_off_[static_cast<size_t>(l)];
}

int Ball::find_in_table(uint64_t h, std::span<const int64_t> mat) const {
  int32_t cur = bucket_head_[h & mask_];
  while (cur >= 0) {
    if (mat_hash_[static_cast<size_t>(cur)] == h) {
      std::span<const int64_t> m = element_matrix(cur);
      if (std::equal(m.begin(), m.end(), mat.begin())) return cur;
    }
    cur = bucket_next_[static_cast<size_t>(cur)];
  }
  return -1;
}

void Ball::insert_in_table(uint64_t h, int id) {
  mat_hash_.push_back(h);
  if (mat_hash_.size() > bucket_head_.size()) {
    size_t nb = bucket_head_.size() * 2;
    bucket_head_.assign(nb, -1);
    mask_ = nb - 1;
    bucket_next_.assign(mat_hash_.size(), -1);
    for (size_t i = 0; i < mat_hash_.size(); ++i) {
      size_t bk = mat_hash_[i] & mask_;
      bucket_next_[i] = bucket_head_[bk];
      bucket_head_[bk] = static_cast<int32_t>(i);
    }
  } else {
    size_t bk = h & mask_;
    bucket_next_.push_back(bucket_head_[bk]);
    bucket_head_[bk] = id;
  }
}

std::span<const int64_t> Ball::element_matrix(int id) const {
  return {mats_.data() + static_cast<size_t>(id) * matlen_, static_cast<size_t>(matlen_)};
}

void Ball::mul_gen_right(std::span<const int64_t> m, int s, std::span<int64_t> out) const {
  // (M sigma_s): col_j += c_{sj} col_s for j != s, col_s negated
  int d = ring_.degree();
  std::copy(m.begin(), m.end(), out.begin());
  for (int i = 0; i < rank_; ++i) {
    std::span<const int64_t> mis = m.subspan(static_cast<size_t>((i * rank_ + s) * d),
                                             static_cast<size_t>(d));
    for (int j = 0; j < rank_; ++j) {
      std::span<int64_t> oij = out.subspan(static_cast<size_t>((i * rank_ + j) * d),
                                           static_cast<size_t>(d));
      if (j == s) {
        for (int k = 0; k < d; ++k) oij[k] = -oij[k];
      } else {
        ring_.addmul_into(oij, mis, gen_cols_[static_cast<size_t>(s) * rank_ + j]);
      }
    }
  }
}

void Ball::mul_gen_left(int s, std::span<const int64_t> m, std::span<int64_t> out) const {
  // (sigma_s M): row_s := -row_s + sum_j c_{sj} row_j, other rows unchanged
  int d = ring_.degree();
  std::copy(m.begin(), m.end(), out.begin());
  for (int j = 0; j < rank_; ++j) {
    std::span<int64_t> osj = out.subspan(static_cast<size_t>((s * rank_ + j) * d),
                                         static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) osj[k] = -osj[k];
    for (int i = 0; i < rank_; ++i) {
      if (i == s) continue;
      std::span<const int64_t> mij = m.subspan(static_cast<size_t>((i * rank_ + j) * d),
                                               static_cast<size_t>(d));
      ring_.addmul_into(osj, mij, gen_cols_[static_cast<size_t>(s) * rank_ + i]);
    }
  }
}

void Ball::build_levels(int64_t cap) {
  int d = ring_.degree();
  bucket_head_.assign(1024, -1);
  mask_ = 1023;

  length_.push_back(0);
  word_off_ = {0, 0};
  parent_.push_back(-1);
  mats_.assign(static_cast<size_t>(matlen_), 0);
  for (int i = 0; i < rank_; ++i) mats_[static_cast<size_t>((i * rank_ + i) * d)] = 1;
  insert_in_table(fnv1a(mats_.data(), sizeof(int64_t) * static_cast<size_t>(matlen_)), 0);
  level_off_ = {0, 1};

  std::vector<int64_t> cand(static_cast<size_t>(matlen_));
  for (int lev = 0; lev < radius_; ++lev) {
    int from = level_off_[static_cast<size_t>(lev)];
    int to = level_off_[static_cast<size_t>(lev) + 1];
    if (from == to) break;  // finite group exhausted
    for (int id = from; id < to; ++id) {
      for (int s = 0; s < rank_; ++s) {
        mul_gen_right(element_matrix(id), s, cand);
        uint64_t h = fnv1a(cand.data(), sizeof(int64_t) * cand.size());
        if (find_in_table(h, cand) >= 0) continue;
        // first-seen candidates arrive in ShortLex order of word(id)+s,
        // so ids within a level are ShortLex-sorted
        int nid = static_cast<int>(length_.size());
        if (nid >= cap)
          throw Error(ErrorKind::ResourceLimit,
                      "element cap " + std::to_string(cap) + " exceeded");
        length_.push_back(static_cast<uint8_t>(lev + 1));
        parent_.push_back(id);
        auto wsp = word(id);
        word_.insert(word_.end(), wsp.begin(), wsp.end());
        word_.push_back(static_cast<uint8_t>(s));
        word_off_.push_back(static_cast<int32_t>(word_.size()));
        mats_.insert(mats_.end(), cand.begin(), cand.end());
        insert_in_table(h, nid);
      }
    }
    level_off_.push_back(static_cast<int32_t>(length_.size()));
  }
}

void Ball::fill_tables() {
  int n = size();
  nbr_r_.assign(static_cast<size_t>(n) * rank_, -1);
  nbr_l_.assign(static_cast<size_t>(n) * rank_, -1);
  rdesc_.assign(static_cast<size_t>(n), 0);
  ldesc_.assign(static_cast<size_t>(n), 0);
  std::vector<int64_t> cand(static_cast<size_t>(matlen_));
  for (int id = 0; id < n; ++id) {
    for (int s = 0; s < rank_; ++s) {
      mul_gen_right(element_matrix(id), s, cand);
      int r = find_in_table(fnv1a(cand.data(), sizeof(int64_t) * cand.size()), cand);
      nbr_r_[static_cast<size_t>(id) * rank_ + s] = r;
      if (r >= 0 && length(r) < length(id)) rdesc_[static_cast<size_t>(id)] |= 1u << s;
      mul_gen_left(s, element_matrix(id), cand);
      int l = find_in_table(fnv1a(cand.data(), sizeof(int64_t) * cand.size()), cand);
      nbr_l_[static_cast<size_t>(id) * rank_ + s] = l;
      if (l >= 0 && length(l) < length(id)) ldesc_[static_cast<size_t>(id)] |= 1u << s;
    }
  }
  // children in creation order = ShortLex order of the canonical words
  child_off_.assign(static_cast<size_t>(n) + 1, 0);
  for (int id = 1; id < n; ++id) child_off_[static_cast<size_t>(parent_[static_cast<size_t>(id)]) + 1]++;
  for (size_t i = 1; i < child_off_.size(); ++i) child_off_[i] += child_off_[i - 1];
  child_.assign(static_cast<size_t>(n - 1 >= 0 ? n - 1 : 0), 0);
  std::vector<int32_t> fill(child_off_.begin(), child_off_.end() - 1);
  for (int id = 1; id < n; ++id) child_[static_cast<size_t>(fill[static_cast<size_t>(parent_[static_cast<size_t>(id)])]++)] = id;

  inverse_.assign(static_cast<size_t>(n), -1);
  for (int id = 0; id < n; ++id) {
    auto w = word(id);
    int cur = 0;
    for (size_t i = w.size(); i-- > 0;) cur = right(cur, w[i]);
    inverse_[static_cast<size_t>(id)] = cur;
  }
}

int Ball::inverse(int id) const { return inverse_[static_cast<size_t>(id)]; }

int Ball::multiply(int x, int y) const {
  std::vector<int64_t> a(element_matrix(x).begin(), element_matrix(x).end());
  std::vector<int64_t> b(static_cast<size_t>(matlen_));
  for (uint8_t s : word(y)) {
    mul_gen_right(a, s, b);
    std::swap(a, b);
  }
  int id = find_in_table(fnv1a(a.data(), sizeof(int64_t) * a.size()), a);
  if (id < 0)
    throw Error(ErrorKind::BallExceeded,
                "product " + word_str(x) + " * " + word_str(y) + " has length > " +
                    std::to_string(radius_));
  return id;
}

int Ball::lookup(std::span<const int64_t> mat) const {
  return find_in_table(fnv1a(mat.data(), sizeof(int64_t) * mat.size()), mat);
}

void Ball::ensure_bruhat() const {
  std::call_once(bruhat_once_, [this] {
    size_t n = static_cast<size_t>(size());
    bruhat_stride_ = (n + 63) / 64;
    std::vector<uint64_t> bits(n * bruhat_stride_, 0);
    bits[0] |= 1ull;  // e <= e
    for (size_t w = 1; w < n; ++w) {
      int s = -1;
      uint32_t m = ldesc(static_cast<int>(w));
      for (int k = 0; k < rank_; ++k)
        if ((m >> k) & 1u) {
          s = k;
          break;
        }
      size_t u = static_cast<size_t>(left(static_cast<int>(w), s));  // sw, shorter
      const uint64_t* ru = &bits[u * bruhat_stride_];
      uint64_t* rw = &bits[w * bruhat_stride_];
      int lw = length(static_cast<int>(w));
      for (size_t y = 0; y < n; ++y) {
        if (length(static_cast<int>(y)) > lw) break;  // ids are length-sorted
        size_t t = is_ldesc(static_cast<int>(y), s)
                       ? static_cast<size_t>(left(static_cast<int>(y), s))
                       : y;
        if ((ru[t / 64] >> (t % 64)) & 1ull) rw[y / 64] |= 1ull << (y % 64);
      }
      rw[w / 64] |= 1ull << (w % 64);
    }
    bruhat_bits_ = std::move(bits);
  });
}

bool Ball::bruhat_leq(int y, int w) const {
  ensure_bruhat();
  return (bruhat_bits_[static_cast<size_t>(w) * bruhat_stride_ + static_cast<size_t>(y) / 64] >>
          (static_cast<size_t>(y) % 64)) &
         1ull;
}

Ball::ReducedWords Ball::reduced_expressions(int id, size_t limit) const {
  ReducedWords out;
  std::vector<uint8_t> prefix;
  // descents taken in ascending generator order give ShortLex output
  auto rec = [&](auto&& self, int cur) -> void {
    if (out.overflow) return;
    if (cur == 0) {
      if (out.words.size() >= limit) {
        out.overflow = true;
        return;
      }
      out.words.push_back(prefix);
      return;
    }
    for (int s = 0; s < rank_; ++s)
      if (is_ldesc(cur, s)) {
        prefix.push_back(static_cast<uint8_t>(s));
        self(self, left(cur, s));
        prefix.pop_back();
      }
  };
  rec(rec, id);
  return out;
}

DihedralInfo Ball::dihedral(int s, int t) const {
  assert(s != t);
  DihedralInfo info;
  info.s = s;
  info.t = t;
  info.order = matrix_.order(s, t);
  info.finite = info.order != kInf;
  auto alt = [&](int a, int b, int len) {
    std::string w;
    for (int i = 0; i < len; ++i) {
      if (i) w += ".";
      w += matrix_.gens[static_cast<size_t>(i % 2 == 0 ? a : b)];
    }
    return w;
  };
  if (!info.finite) return info;
  info.word_st = alt(s, t, info.order);
  info.word_ts = alt(t, s, info.order);
  if (info.order > radius_)
    throw Error(ErrorKind::BallExceeded, "longest element of <" + matrix_.gens[static_cast<size_t>(s)] +
                                             "," + matrix_.gens[static_cast<size_t>(t)] + "> has length " +
                                             std::to_string(info.order) + " > radius");
  std::vector<uint8_t> letters;
  for (int i = 0; i < info.order; ++i)
    letters.push_back(static_cast<uint8_t>(i % 2 == 0 ? s : t));
  info.longest = ascend_right(0, letters);
  assert(info.longest >= 0);
  return info;
}

int Ball::strip_left(int p, int x) const {
  int cur = x;
  for (uint8_t s : word(p)) {
    if (!is_ldesc(cur, s)) return -1;
    cur = left(cur, s);
  }
  return cur;
}

int Ball::strip_right(int x, int p) const {
  auto w = word(p);
  int cur = x;
  for (size_t i = w.size(); i-- > 0;) {
    if (!is_rdesc(cur, w[i])) return -1;
    cur = right(cur, w[i]);
  }
  return cur;
}

int Ball::ascend_right(int x, std::span<const uint8_t> letters) const {
  int cur = x;
  for (uint8_t s : letters) {
    int nxt = right(cur, s);
    if (nxt < 0 || length(nxt) < length(cur)) return -1;
    cur = nxt;
  }
  return cur;
}

int Ball::ascend_left(std::span<const uint8_t> letters, int x) const {
  int cur = x;
  for (size_t i = letters.size(); i-- > 0;) {
    int nxt = left(cur, letters[i]);
    if (nxt < 0 || length(nxt) < length(cur)) return -1;
    cur = nxt;
  }
  return cur;
}

int Ball::walk_right(int x, std::span<const uint8_t> letters) const {
  // matrix fold, so transient excursions above the radius do not matter
  std::vector<int64_t> a(element_matrix(x).begin(), element_matrix(x).end());
  std::vector<int64_t> b(static_cast<size_t>(matlen_));
  for (uint8_t s : letters) {
    mul_gen_right(a, s, b);
    std::swap(a, b);
  }
  return find_in_table(fnv1a(a.data(), sizeof(int64_t) * a.size()), a);
}

std::optional<int> Ball::parse_word(const std::string& dotted) const {
  std::vector<uint8_t> letters;
  size_t pos = 0;
  while (pos < dotted.size()) {
    size_t dot = dotted.find('.', pos);
    if (dot == std::string::npos) dot = dotted.size();
    int g = matrix_.gen_index(dotted.substr(pos, dot - pos));
    if (g < 0) return std::nullopt;
    letters.push_back(static_cast<uint8_t>(g));
    pos = dot + 1;
  }
  int id = walk_right(0, letters);
  if (id < 0) return std::nullopt;
  return id;
}

uint64_t Ball::content_hash() const {
  uint64_t h = 1469598103934665603ull;
  for (int id = 0; id < size(); ++id) {
    uint8_t l = length_[static_cast<size_t>(id)];
    h = fnv1a(&l, 1, h);
    auto w = word(id);
    h = fnv1a(w.data(), w.size(), h);
    h = fnv1a(";", 1, h);
  }
  return h;
}

}  // namespace coxcells::cox
