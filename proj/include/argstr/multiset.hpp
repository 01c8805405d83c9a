#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <set>
#include <utility>

namespace argstr {

/// A bag: an unordered collection in which elements may occur more than once.
///
/// Multiplicities are always >= 1 for stored keys; an element with
/// multiplicity zero is simply absent. Iteration order follows `T`'s ordering,
/// which keeps every derived value (folds, printed forms) deterministic.
template <typename T>
class Multiset {
 public:
  using Entries = std::map<T, std::size_t>;

  Multiset() = default;
  Multiset(std::initializer_list<T> items) {
    for (const auto& item : items) add(item);
  }

  void add(const T& item, std::size_t count = 1) {
    if (count == 0) return;
    entries_[item] += count;
  }

  std::size_t multiplicity(const T& item) const {
    auto it = entries_.find(item);
    return it == entries_.end() ? 0 : it->second;
  }

  /// Total number of occurrences (counting multiplicity).
  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& [_, m] : entries_) n += m;
    return n;
  }

  std::size_t distinct() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::set<T> support() const {
    std::set<T> out;
    for (const auto& [item, _] : entries_) out.insert(item);
    return out;
  }

  const Entries& entries() const { return entries_; }

  /// Visits every occurrence: an element with multiplicity 3 is folded 3 times.
  template <typename Acc, typename Fn>
  Acc fold(Acc init, Fn&& fn) const {
    for (const auto& [item, m] : entries_)
      for (std::size_t i = 0; i < m; ++i) init = fn(std::move(init), item);
    return init;
  }

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  Entries entries_;
};

/// Multiset sum: multiplicities add.
template <typename T>
Multiset<T> multiset_sum(const Multiset<T>& a, const Multiset<T>& b) {
  Multiset<T> out = a;
  for (const auto& [item, m] : b.entries()) out.add(item, m);
  return out;
}

/// Multiset union: multiplicities take the maximum.
template <typename T>
Multiset<T> multiset_union(const Multiset<T>& a, const Multiset<T>& b) {
  Multiset<T> out;
  for (const auto& [item, m] : a.entries()) out.add(item, std::max(m, b.multiplicity(item)));
  for (const auto& [item, m] : b.entries())
    if (a.multiplicity(item) == 0) out.add(item, m);
  return out;
}

template <typename T>
std::set<T> multiset_support(const Multiset<T>& a) {
  return a.support();
}

template <typename T, typename Acc, typename Fn>
Acc multiset_fold(const Multiset<T>& a, Acc init, Fn&& fn) {
  return a.fold(std::move(init), std::forward<Fn>(fn));
}

}  // namespace argstr
