#include "hfam/family.hpp"

#include <algorithm>
#include <bit>

namespace hfam {

std::uint64_t full_mask(int n) {
  if (n < 0 || n > 64) throw std::invalid_argument("ground size must be in [0, 64]");
  if (n == 64) return ~std::uint64_t{0};
  return (std::uint64_t{1} << n) - 1;
}

GroundedSet::GroundedSet(int n, std::uint64_t bits) : bits_(bits), n_(n) {
  if ((bits & ~full_mask(n)) != 0)
    throw std::invalid_argument("bit set outside the ground set");
}

GroundedSet GroundedSet::of(int n, std::initializer_list<int> labels) {
  return of(n, std::vector<int>(labels));
}

GroundedSet GroundedSet::of(int n, const std::vector<int>& labels) {
  std::uint64_t bits = 0;
  full_mask(n);  // validates n
  for (int v : labels) {
    if (v < 1 || v > n) throw std::invalid_argument("element out of [1, n]");
    bits |= std::uint64_t{1} << (v - 1);
  }
  return GroundedSet(n, bits);
}

int GroundedSet::size() const { return std::popcount(bits_); }

bool GroundedSet::contains(int label) const {
  if (label < 1 || label > n_) return false;
  return (bits_ >> (label - 1)) & 1u;
}

std::vector<int> GroundedSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  std::uint64_t b = bits_;
  while (b) {
    out.push_back(std::countr_zero(b) + 1);
    b &= b - 1;
  }
  return out;
}

bool GroundedSet::subset_of(const GroundedSet& other) const {
  return (bits_ & ~other.bits_) == 0;
}

GroundedSet GroundedSet::unite(const GroundedSet& other) const {
  return GroundedSet(n_, bits_ | other.bits_);
}

GroundedSet GroundedSet::intersect(const GroundedSet& other) const {
  return GroundedSet(n_, bits_ & other.bits_);
}

GroundedSet GroundedSet::minus(const GroundedSet& other) const {
  return GroundedSet(n_, bits_ & ~other.bits_);
}

GroundedSet GroundedSet::with(int label) const {
  if (label < 1 || label > n_) throw std::invalid_argument("element out of [1, n]");
  return GroundedSet(n_, bits_ | (std::uint64_t{1} << (label - 1)));
}

GroundedSet GroundedSet::without(int label) const {
  if (label < 1 || label > n_) throw std::invalid_argument("element out of [1, n]");
  return GroundedSet(n_, bits_ & ~(std::uint64_t{1} << (label - 1)));
}

std::string GroundedSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : elements()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  out += "}";
  return out;
}

int intersection_size(const GroundedSet& a, const GroundedSet& b) {
  return std::popcount(a.bits() & b.bits());
}

bool canonical_less(const GroundedSet& a, const GroundedSet& b) {
  const int ca = a.size(), cb = b.size();
  if (ca != cb) return ca < cb;
  return a.bits() < b.bits();
}

SetFamily SetFamily::canonical(int n, std::vector<GroundedSet> members) {
  for (const auto& m : members)
    if (m.ground() != n) throw std::invalid_argument("mixed ground sizes in family");
  std::sort(members.begin(), members.end(), canonical_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SetFamily out(n);
  out.members_ = std::move(members);
  return out;
}

bool SetFamily::contains(const GroundedSet& s) const { return index_of(s) >= 0; }

int SetFamily::index_of(const GroundedSet& s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s, canonical_less);
  if (it != members_.end() && *it == s)
    return static_cast<int>(it - members_.begin());
  return -1;
}

bool SetFamily::uniform(int k) const {
  for (const auto& m : members_)
    if (m.size() != k) return false;
  return true;
}

bool family_less(const SetFamily& a, const SetFamily& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      canonical_less);
}

HereditaryFamily HereditaryFamily::from_bases(SetFamily base_family) {
  if (base_family.empty())
    throw std::invalid_argument("hereditary family needs at least one base");
  const auto& ms = base_family.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j)
      if (i != j && ms[i].subset_of(ms[j]))
        throw std::invalid_argument("bases are not an antichain");
  return HereditaryFamily(std::move(base_family));
}

int HereditaryFamily::mu() const { return bases_.at(0).size(); }

int HereditaryFamily::max_base_size() const {
  return bases_.at(bases_.size() - 1).size();
}

bool HereditaryFamily::member(const GroundedSet& s) const {
  if (s.ground() != ground()) return false;
  for (const auto& b : bases_)
    if (s.subset_of(b)) return true;
  return false;
}

HereditaryFamily downward_closure(const SetFamily& generators) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  std::vector<GroundedSet> maximal;
  const auto& ms = generators.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < ms.size() && !dominated; ++j)
      if (i != j && ms[i].subset_of(ms[j])) dominated = true;
    if (!dominated) maximal.push_back(ms[i]);
  }
  return HereditaryFamily(
      SetFamily::canonical(generators.ground(), std::move(maximal)));
}

bool is_hereditary(const SetFamily& f) {
  for (const auto& m : f) {
    for (int x : m.elements()) {
      if (!f.contains(m.without(x))) return false;
    }
  }
  return true;
}

const SetFamily& bases(const HereditaryFamily& h) { return h.bases(); }

int mu(const HereditaryFamily& h) { return h.mu(); }

SetFamily level(const HereditaryFamily& h, int r) {
  if (r < 0) throw std::invalid_argument("level index must be >= 0");
  std::vector<GroundedSet> out;
  for (const auto& b : h.bases())
    for_each_subset_of_size(b, r, [&](const GroundedSet& s) { out.push_back(s); });
  return SetFamily::canonical(h.ground(), std::move(out));
}

SetFamily star(const SetFamily& f, const GroundedSet& t) {
  if (t.ground() != f.ground())
    throw std::invalid_argument("ground size mismatch");
  std::vector<GroundedSet> out;
  for (const auto& m : f)
    if (t.subset_of(m)) out.push_back(m);
  return SetFamily::canonical(f.ground(), std::move(out));
}

SetFamily meets_at_least(const SetFamily& f, const GroundedSet& i, int t) {
  if (i.ground() != f.ground())
    throw std::invalid_argument("ground size mismatch");
  if (t < 0) throw std::invalid_argument("intersection threshold must be >= 0");
  std::vector<GroundedSet> out;
  for (const auto& m : f)
    if (intersection_size(m, i) >= t) out.push_back(m);
  return SetFamily::canonical(f.ground(), std::move(out));
}

SetFamily link(const SetFamily& f, const GroundedSet& x) {
  if (x.ground() != f.ground())
    throw std::invalid_argument("ground size mismatch");
  std::vector<GroundedSet> out;
  for (const auto& m : f)
    if (x.subset_of(m)) out.push_back(m.minus(x));
  return SetFamily::canonical(f.ground(), std::move(out));
}

TraceResult restricted_trace(const HereditaryFamily& h, const GroundedSet& x,
                             const GroundedSet& y) {
  if (x.ground() != h.ground() || y.ground() != h.ground())
    throw std::invalid_argument("ground size mismatch");
  if (!x.subset_of(y)) throw std::invalid_argument("X not contained in Y");
  // {H\X : H∩Y = X} = union of 2^(B\Y) over bases B containing X, so the
  // trace is itself hereditary and can be rebuilt from shifted bases.
  std::vector<GroundedSet> gens;
  for (const auto& b : h.bases())
    if (x.subset_of(b)) gens.push_back(b.minus(y));
  if (gens.empty()) return TraceResult{};
  HereditaryFamily shifted =
      downward_closure(SetFamily::canonical(h.ground(), std::move(gens)));
  TraceResult out;
  out.empty = false;
  out.members = all_members(shifted);
  out.mu = shifted.mu();
  return out;
}

SetFamily maximal_members(const SetFamily& f) {
  std::vector<GroundedSet> maximal;
  const auto& ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < ms.size() && !dominated; ++j)
      if (i != j && ms[i].subset_of(ms[j])) dominated = true;
    if (!dominated) maximal.push_back(ms[i]);
  }
  return SetFamily::canonical(f.ground(), std::move(maximal));
}

int family_mu(const SetFamily& f) {
  if (f.empty()) throw std::invalid_argument("mu of the empty family");
  return maximal_members(f).at(0).size();
}

SetFamily all_members(const HereditaryFamily& h) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 22;
  std::uint64_t budget = 0;
  for (const auto& b : h.bases()) {
    budget += b.size() >= 63 ? kLimit : (std::uint64_t{1} << b.size());
    if (budget > kLimit)
      throw std::runtime_error("family too large to materialize");
  }
  std::vector<GroundedSet> out;
  for (const auto& b : h.bases()) {
    const std::uint64_t m = b.bits();
    std::uint64_t sub = m;
    for (;;) {
      out.emplace_back(h.ground(), sub);
      if (sub == 0) break;
      sub = (sub - 1) & m;
    }
  }
  return SetFamily::canonical(h.ground(), std::move(out));
}

}  // namespace hfam
