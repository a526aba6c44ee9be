#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "shexd/schema.hpp"

namespace shexd {

// Multiset of triple-constraint ids (the ByConstraint part of a local
// witness). Zero counts are never stored.
using ConsumerBag = std::map<int, std::uint32_t>;

std::uint32_t bag_total(const ConsumerBag& bag);

// A set of naturals {lo, ..., hi}; hi may be kUnbounded. Default: empty.
class Interval {
 public:
  Interval() = default;
  static Interval of(std::uint32_t lo, std::uint32_t hi) { return Interval(lo, hi); }
  static Interval none() { return Interval(); }

  bool empty() const { return empty_; }
  std::uint32_t lo() const { return lo_; }
  std::uint32_t hi() const { return hi_; }
  bool contains(std::uint32_t n) const { return !empty_ && lo_ <= n && n <= hi_; }

  Interval intersect(const Interval& other) const;
  Interval plus(const Interval& other) const;  // Minkowski sum

  std::string to_string() const;
  bool operator==(const Interval&) const = default;

 private:
  Interval(std::uint32_t lo, std::uint32_t hi) : empty_(lo > hi), lo_(lo), hi_(hi) {}

  bool empty_ = true;
  std::uint32_t lo_ = 1;
  std::uint32_t hi_ = 0;
};

// Rewrites every repetition of a non-triple-constraint expression whose
// bounds are not [0;1], [0;*] or [1;*]: E[m;n] becomes m copies of E followed
// by n-m copies of E[0;1]; E[m;*] becomes m copies followed by E[0;*];
// E[0;0] becomes EMPTY. Repetitions of triple constraints are kept.
ShapeExpr unfold_repetitions(const ShapeExpr& expr);

// True iff every triple-constraint id occurs once and every repetition of a
// non-triple-constraint expression is [0;1], [0;*] or [1;*].
bool is_single_occurrence(const ShapeExpr& expr);

// { n : bag is a sum of n bags of L(expr) }. Throws NotSingleOccurrence
// unless is_single_occurrence(expr).
Interval interval(const ShapeExpr& expr, const ConsumerBag& bag);

// 1 in interval(expr, bag).
bool bag_matches(const ShapeExpr& expr, const ConsumerBag& bag);

}  // namespace shexd
