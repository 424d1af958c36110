#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace sgsc {

/// Multi-index in N_0^N.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t dim) : v_(dim, 0) {}
  MultiIndex(std::initializer_list<int> v) : v_(v) {}
  explicit MultiIndex(std::vector<int> v) : v_(std::move(v)) {}

  std::size_t size() const { return v_.size(); }
  int operator[](std::size_t i) const { return v_[i]; }
  int& operator[](std::size_t i) { return v_[i]; }
  const std::vector<int>& values() const { return v_; }

  int total() const;
  int max() const;
  bool is_zero() const;
  std::string str() const;

  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> v_;
};

/// Graded lexicographic order: total degree first, then lexicographic.
bool graded_less(const MultiIndex& a, const MultiIndex& b);

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& m) const noexcept;
};

enum class IndexSetKind { TensorProduct, TotalDegree, Smolyak, Generalized };

/// Immutable, ordered finite set of multi-indices with O(1) position lookup.
class MultiIndexSet {
 public:
  MultiIndexSet() = default;
  MultiIndexSet(IndexSetKind kind, int order, std::size_t dim,
                std::vector<MultiIndex> indices);

  IndexSetKind kind() const { return kind_; }
  int order() const { return order_; }
  std::size_t dim() const { return dim_; }
  std::size_t cardinality() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }

  const MultiIndex& operator[](std::size_t i) const { return indices_[i]; }
  const std::vector<MultiIndex>& indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  std::optional<std::size_t> position(const MultiIndex& m) const;
  bool contains(const MultiIndex& m) const { return position(m).has_value(); }
  bool is_downward_closed() const;

 private:
  IndexSetKind kind_ = IndexSetKind::TotalDegree;
  int order_ = 0;
  std::size_t dim_ = 0;
  std::vector<MultiIndex> indices_;
  std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> pos_;
};

MultiIndexSet tensor_product_set(std::size_t N, int p);
MultiIndexSet total_degree_set(std::size_t N, int p);
MultiIndexSet smolyak_set(std::size_t N, int p);

/// f(0)=0, f(1)=1, f(p)=ceil(log2 p).
int smolyak_f(int p);

/// |TD(N,p)| = C(N+p, N).
std::uint64_t td_cardinality(std::size_t N, int p);

enum class GrowthRule { Linear, Doubling };
enum class LevelFunction { TP, TD, SM };

/// Nodes at level l >= 0 (m(0) = 0).
int growth(GrowthRule rule, int level);
/// Left inverse: min{k >= 1 : m(k) >= q}.
int growth_inverse(GrowthRule rule, int q);
/// g over 1-based level indices.
int level_value(LevelFunction g, const MultiIndex& levels);

/// {q in N_0^N : g(m^dagger(q + 1)) <= L}.
MultiIndexSet generalized_set(std::size_t N, int L, GrowthRule rule,
                              LevelFunction g);

/// All multi-indices of N_+^N (1-based) with g(l) <= L, graded order.
std::vector<MultiIndex> admissible_levels(std::size_t N, int L,
                                          LevelFunction g);

}  // namespace sgsc
