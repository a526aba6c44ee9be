#include "shexd/bag.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "shexd/error.hpp"

namespace shexd {

namespace {

using Counts = std::vector<std::uint8_t>;
using Mask = std::vector<bool>;

class BruteMatcher {
 public:
  explicit BruteMatcher(const ShapeExpr& root) {
    std::set<int> ids;
    for_each_constraint(root, [&](const TripleConstraint& tc) { ids.insert(tc.id); });
    for (int id : ids) {
      index_.emplace(id, symbols_.size());
      symbols_.push_back(id);
    }
    compute_alphabet(root);
  }

  // Returns false if the bag mentions an id foreign to the expression.
  bool to_counts(const ConsumerBag& bag, Counts& out) const {
    out.assign(symbols_.size(), 0);
    for (const auto& [id, count] : bag) {
      if (count == 0) continue;
      auto it = index_.find(id);
      if (it == index_.end()) return false;
      out[it->second] = static_cast<std::uint8_t>(count);
    }
    return true;
  }

  bool match(const ShapeExpr& e, const Counts& w) {
    if (!within(alpha_.at(&e), w)) return false;
    auto key = std::make_pair(&e, w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = compute(e, w);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  const Mask& compute_alphabet(const ShapeExpr& e) {
    Mask m(symbols_.size(), false);
    if (e.kind == ExprKind::TC) m[index_.at(e.tc.id)] = true;
    for (const auto& c : e.children) {
      const Mask& cm = compute_alphabet(c);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = m[i] || cm[i];
    }
    return alpha_[&e] = std::move(m);
  }

  static bool within(const Mask& m, const Counts& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] && !m[i]) return false;
    return true;
  }

  static bool is_empty(const Counts& w) {
    for (auto c : w)
      if (c) return false;
    return true;
  }

  // Calls fn(s) for every sub-bag s of w with lo[i] <= s[i] <= hi[i];
  // stops early when fn returns true.
  static bool each_sub_bag(const Counts& lo, const Counts& hi,
                           const std::function<bool(const Counts&)>& fn) {
    Counts s = lo;
    while (true) {
      if (fn(s)) return true;
      std::size_t i = 0;
      for (; i < s.size(); ++i) {
        if (s[i] < hi[i]) {
          ++s[i];
          break;
        }
        s[i] = lo[i];
      }
      if (i == s.size()) return false;
    }
  }

  bool compute(const ShapeExpr& e, const Counts& w) {
    switch (e.kind) {
      case ExprKind::Empty: return is_empty(w);
      case ExprKind::TC: {
        std::size_t j = index_.at(e.tc.id);
        for (std::size_t i = 0; i < w.size(); ++i)
          if (w[i] != (i == j ? 1 : 0)) return false;
        return true;
      }
      case ExprKind::SomeOf:
        for (const auto& c : e.children)
          if (match(c, w)) return true;
        return false;
      case ExprKind::Group: return match_group(e, 0, w);
      case ExprKind::Repetition: {
        const ShapeExpr& child = e.child();
        bool eps = match(child, Counts(w.size(), 0));
        if (is_empty(w)) return e.min == 0 || eps;
        std::uint64_t ks = parts(child, w);
        for (std::uint32_t k = 1; k < 64; ++k) {
          if (!(ks & (1ull << k))) continue;
          if (k <= e.max && (k >= e.min || eps)) return true;
        }
        return false;
      }
    }
    return false;
  }

  // Children i.. of group e must jointly consume w.
  bool match_group(const ShapeExpr& e, std::size_t i, const Counts& w) {
    const ShapeExpr& c = e.children[i];
    if (i + 1 == e.children.size()) return match(c, w);
    auto key = std::make_tuple(&e, i, w);
    if (auto it = group_memo_.find(key); it != group_memo_.end()) return it->second;

    Mask later(w.size(), false);
    for (std::size_t k = i + 1; k < e.children.size(); ++k) {
      const Mask& m = alpha_.at(&e.children[k]);
      for (std::size_t j = 0; j < w.size(); ++j) later[j] = later[j] || m[j];
    }
    const Mask& mine = alpha_.at(&c);
    Counts lo(w.size(), 0), hi(w.size(), 0);
    bool possible = true;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (!w[j]) continue;
      if (!later[j]) {
        if (!mine[j]) possible = false;
        lo[j] = hi[j] = w[j];
      } else if (mine[j]) {
        hi[j] = w[j];
      }
    }
    bool result = possible && each_sub_bag(lo, hi, [&](const Counts& s) {
      if (!match(c, s)) return false;
      Counts rest = w;
      for (std::size_t j = 0; j < w.size(); ++j) rest[j] -= s[j];
      return match_group(e, i + 1, rest);
    });
    group_memo_.emplace(std::move(key), result);
    return result;
  }

  // Bit k set iff w splits into exactly k non-empty bags of L(child).
  std::uint64_t parts(const ShapeExpr& child, const Counts& w) {
    if (is_empty(w)) return 1ull;
    auto key = std::make_pair(&child, w);
    if (auto it = parts_memo_.find(key); it != parts_memo_.end()) return it->second;
    std::size_t first = 0;
    while (!w[first]) ++first;
    Counts lo(w.size(), 0);
    lo[first] = 1;
    std::uint64_t ks = 0;
    // The part holding one unit of the first symbol is chosen first, so each
    // unordered partition is generated once per multiset of parts.
    each_sub_bag(lo, w, [&](const Counts& s) {
      if (!match(child, s)) return false;
      Counts rest = w;
      for (std::size_t j = 0; j < w.size(); ++j) rest[j] -= s[j];
      ks |= parts(child, rest) << 1;
      return false;
    });
    parts_memo_.emplace(std::move(key), ks);
    return ks;
  }

  std::vector<int> symbols_;
  std::map<int, std::size_t> index_;
  std::map<const ShapeExpr*, Mask> alpha_;
  std::map<std::pair<const ShapeExpr*, Counts>, bool> memo_;
  std::map<std::tuple<const ShapeExpr*, std::size_t, Counts>, bool> group_memo_;
  std::map<std::pair<const ShapeExpr*, Counts>, std::uint64_t> parts_memo_;
};

}  // namespace

bool brute_match(const ShapeExpr& expr, const ConsumerBag& bag, std::size_t bound) {
  std::uint32_t total = bag_total(bag);
  if (total > bound || total > kMaxBagBound) throw BagTooLarge(total, std::min(bound, kMaxBagBound));
  BruteMatcher matcher(expr);
  Counts w;
  if (!matcher.to_counts(bag, w)) return false;
  return matcher.match(expr, w);
}

}  // namespace shexd
