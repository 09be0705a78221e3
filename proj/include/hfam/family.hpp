#pragma once

// Bitset kernel for set families over a ground set [n], n <= 64: one machine
// word per set. Families are kept in a fixed canonical order (cardinality,
// then numeric bit value), which makes every output deterministic and every
// membership query a binary search. Hereditary families are stored by their
// bases (an antichain of maximal sets); levels are materialized on demand.

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfam {

std::uint64_t full_mask(int n);

class GroundedSet {
 public:
  GroundedSet() = default;
  GroundedSet(int n, std::uint64_t bits);

  static GroundedSet empty(int n) { return GroundedSet(n, 0); }
  static GroundedSet full(int n) { return GroundedSet(n, full_mask(n)); }
  // Labels are 1-based, as in the interchange format.
  static GroundedSet of(int n, std::initializer_list<int> labels);
  static GroundedSet of(int n, const std::vector<int>& labels);

  int ground() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  int size() const;
  bool is_empty() const { return bits_ == 0; }
  bool contains(int label) const;
  std::vector<int> elements() const;

  bool subset_of(const GroundedSet& other) const;
  GroundedSet unite(const GroundedSet& other) const;
  GroundedSet intersect(const GroundedSet& other) const;
  GroundedSet minus(const GroundedSet& other) const;
  GroundedSet with(int label) const;
  GroundedSet without(int label) const;

  std::string to_string() const;

  friend bool operator==(const GroundedSet& a, const GroundedSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
  int n_ = 0;
};

int intersection_size(const GroundedSet& a, const GroundedSet& b);

// Canonical order: cardinality first, then numeric bit value.
bool canonical_less(const GroundedSet& a, const GroundedSet& b);

// All k-subsets of `base`, in canonical order.
template <typename Fn>
void for_each_subset_of_size(const GroundedSet& base, int k, Fn&& fn) {
  const std::vector<int> elems = base.elements();
  const int m = static_cast<int>(elems.size());
  if (k < 0 || k > m) return;
  if (k == 0) {
    fn(GroundedSet::empty(base.ground()));
    return;
  }
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    std::uint64_t bits = 0;
    for (int i : idx) bits |= std::uint64_t{1} << (elems[i] - 1);
    fn(GroundedSet(base.ground(), bits));
    int p = k - 1;
    while (p >= 0 && idx[p] == m - k + p) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(int n) : n_(n) {}

  // Sorts canonically, removes duplicates, validates the shared ground size.
  static SetFamily canonical(int n, std::vector<GroundedSet> members);

  int ground() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const GroundedSet& at(std::size_t i) const { return members_[i]; }
  const std::vector<GroundedSet>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const GroundedSet& s) const;
  // Index in canonical order; -1 when absent.
  int index_of(const GroundedSet& s) const;
  bool uniform(int k) const;

  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  int n_ = 0;
  std::vector<GroundedSet> members_;
};

// Lexicographic on the canonical member sequence (shorter prefix first).
bool family_less(const SetFamily& a, const SetFamily& b);

class HereditaryFamily {
 public:
  HereditaryFamily() = default;

  // Bases must form a non-empty antichain; throws std::invalid_argument
  // otherwise. The degenerate family {∅} has bases = {∅} and mu = 0.
  static HereditaryFamily from_bases(SetFamily bases);

  int ground() const { return bases_.ground(); }
  const SetFamily& bases() const { return bases_; }
  int mu() const;
  int max_base_size() const;
  bool member(const GroundedSet& s) const;

  friend bool operator==(const HereditaryFamily& a, const HereditaryFamily& b) {
    return a.bases_ == b.bases_;
  }

 private:
  explicit HereditaryFamily(SetFamily bases) : bases_(std::move(bases)) {}
  friend HereditaryFamily downward_closure(const SetFamily& generators);
  SetFamily bases_;
};

// Result of restricting a hereditary family to {H : H ∩ Y = X} and deleting
// X; `empty` marks the case where no member satisfies the restriction.
struct TraceResult {
  bool empty = true;
  SetFamily members;
  int mu = -1;
};

HereditaryFamily downward_closure(const SetFamily& generators);
bool is_hereditary(const SetFamily& f);
const SetFamily& bases(const HereditaryFamily& h);
int mu(const HereditaryFamily& h);
SetFamily level(const HereditaryFamily& h, int r);
SetFamily star(const SetFamily& f, const GroundedSet& t);
SetFamily meets_at_least(const SetFamily& f, const GroundedSet& i, int t);
SetFamily link(const SetFamily& f, const GroundedSet& x);
TraceResult restricted_trace(const HereditaryFamily& h, const GroundedSet& x,
                             const GroundedSet& y);

SetFamily maximal_members(const SetFamily& f);
// Min size among maximal members; defined for arbitrary (non-hereditary)
// families. Throws std::invalid_argument on the empty family.
int family_mu(const SetFamily& f);

// Explicit member list of the implied family. Desk-scale only; throws
// std::runtime_error when the materialization would exceed ~4M sets.
SetFamily all_members(const HereditaryFamily& h);

}  // namespace hfam
