#include "sgsc/multiindex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sgsc {

int MultiIndex::total() const { return std::accumulate(v_.begin(), v_.end(), 0); }

int MultiIndex::max() const {
  return v_.empty() ? 0 : *std::max_element(v_.begin(), v_.end());
}

bool MultiIndex::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
}

std::string MultiIndex::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
  os << ')';
  return os.str();
}

bool graded_less(const MultiIndex& a, const MultiIndex& b) {
  int ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      std::greater<int>());
}

std::size_t MultiIndexHash::operator()(const MultiIndex& m) const noexcept {
  std::size_t h = m.size();
  for (int x : m) h ^= std::size_t(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

MultiIndexSet::MultiIndexSet(IndexSetKind kind, int order, std::size_t dim,
                             std::vector<MultiIndex> indices)
    : kind_(kind), order_(order), dim_(dim), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end(), graded_less);
  pos_.reserve(indices_.size());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i].size() != dim_)
      throw std::invalid_argument("multi-index dimension mismatch");
    if (!pos_.emplace(indices_[i], i).second)
      throw std::invalid_argument("duplicate multi-index " + indices_[i].str());
  }
}

std::optional<std::size_t> MultiIndexSet::position(const MultiIndex& m) const {
  auto it = pos_.find(m);
  if (it == pos_.end()) return std::nullopt;
  return it->second;
}

bool MultiIndexSet::is_downward_closed() const {
  for (const auto& m : indices_) {
    for (std::size_t n = 0; n < dim_; ++n) {
      if (m[n] == 0) continue;
      MultiIndex k = m;
      --k[n];
      if (!contains(k)) return false;
    }
  }
  return true;
}

namespace {

void check_args(std::size_t N, int p) {
  if (N == 0) throw std::invalid_argument("dimension N must be >= 1");
  if (p < 0) throw std::invalid_argument("order must be >= 0");
}

// Visit every multi-index in the box prod [0, bound_n].
template <class F>
void for_each_in_box(const std::vector<int>& bound, F&& f) {
  const std::size_t N = bound.size();
  for (int b : bound)
    if (b < 0) return;
  MultiIndex m(N);
  while (true) {
    f(m);
    std::size_t n = 0;
    while (n < N && m[n] == bound[n]) m[n++] = 0;
    if (n == N) return;
    ++m[n];
  }
}

void td_recurse(std::size_t n, int budget, MultiIndex& cur,
                std::vector<MultiIndex>& out) {
  if (n == cur.size()) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= budget; ++k) {
    cur[n] = k;
    td_recurse(n + 1, budget - k, cur, out);
  }
  cur[n] = 0;
}

}  // namespace

MultiIndexSet tensor_product_set(std::size_t N, int p) {
  check_args(N, p);
  std::vector<MultiIndex> out;
  for_each_in_box(std::vector<int>(N, p), [&](const MultiIndex& m) { out.push_back(m); });
  return {IndexSetKind::TensorProduct, p, N, std::move(out)};
}

MultiIndexSet total_degree_set(std::size_t N, int p) {
  check_args(N, p);
  std::vector<MultiIndex> out;
  MultiIndex cur(N);
  td_recurse(0, p, cur, out);
  return {IndexSetKind::TotalDegree, p, N, std::move(out)};
}

int smolyak_f(int p) {
  if (p < 0) throw std::invalid_argument("smolyak_f: negative argument");
  if (p <= 1) return p;
  int k = 0;
  while ((1 << k) < p) ++k;
  return k;
}

MultiIndexSet smolyak_set(std::size_t N, int p) {
  check_args(N, p);
  const int fp = smolyak_f(p);
  std::vector<MultiIndex> out;
  for_each_in_box(std::vector<int>(N, p), [&](const MultiIndex& m) {
    int s = 0;
    for (int x : m) s += smolyak_f(x);
    if (s <= fp) out.push_back(m);
  });
  return {IndexSetKind::Smolyak, p, N, std::move(out)};
}

std::uint64_t td_cardinality(std::size_t N, int p) {
  unsigned __int128 r = 1;
  for (int i = 1; i <= p; ++i) r = r * (N + i) / i;
  return static_cast<std::uint64_t>(r);
}

int growth(GrowthRule rule, int level) {
  if (level < 0) throw std::invalid_argument("growth: negative level");
  if (level == 0) return 0;
  if (rule == GrowthRule::Linear) return level;
  if (level == 1) return 1;
  if (level > 30) throw std::overflow_error("growth: level too large");
  return (1 << (level - 1)) + 1;
}

int growth_inverse(GrowthRule rule, int q) {
  if (q <= 1) return 1;
  int k = 1;
  while (growth(rule, k) < q) ++k;
  return k;
}

int level_value(LevelFunction g, const MultiIndex& l) {
  int v = 0;
  for (int x : l) {
    if (x < 1) throw std::invalid_argument("level indices are 1-based");
    switch (g) {
      case LevelFunction::TP: v = std::max(v, x); break;
      case LevelFunction::TD: v += x - 1; break;
      case LevelFunction::SM: v += smolyak_f(x); break;
    }
  }
  return v;
}

std::vector<MultiIndex> admissible_levels(std::size_t N, int L, LevelFunction g) {
  if (N == 0) throw std::invalid_argument("dimension N must be >= 1");
  std::vector<MultiIndex> out;
  if (level_value(g, MultiIndex(std::vector<int>(N, 1))) > L) return out;
  // g is monotone in each level, so bound each level on its own axis.
  std::vector<int> bound(N);
  for (std::size_t n = 0; n < N; ++n) {
    MultiIndex e(std::vector<int>(N, 1));
    while (true) {
      ++e[n];
      if (level_value(g, e) > L) break;
    }
    bound[n] = e[n] - 2;
  }
  for_each_in_box(bound, [&](const MultiIndex& m) {
    MultiIndex l = m;
    for (std::size_t n = 0; n < N; ++n) ++l[n];
    if (level_value(g, l) <= L) out.push_back(l);
  });
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

MultiIndexSet generalized_set(std::size_t N, int L, GrowthRule rule, LevelFunction g) {
  if (N == 0) throw std::invalid_argument("dimension N must be >= 1");
  std::vector<MultiIndex> out;
  for (const auto& l : admissible_levels(N, L, g)) {
    // Degrees q with m^dagger(q+1) == l exactly: m(l-1) <= q < m(l).
    std::vector<int> lo(N), hi(N);
    for (std::size_t n = 0; n < N; ++n) {
      lo[n] = growth(rule, l[n] - 1);
      hi[n] = growth(rule, l[n]) - 1;
    }
    std::vector<int> span(N);
    for (std::size_t n = 0; n < N; ++n) span[n] = hi[n] - lo[n];
    for_each_in_box(span, [&](const MultiIndex& d) {
      MultiIndex q(N);
      for (std::size_t n = 0; n < N; ++n) q[n] = lo[n] + d[n];
      out.push_back(q);
    });
  }
  return {IndexSetKind::Generalized, L, N, std::move(out)};
}

}  // namespace sgsc
