#include "shexd/interval.hpp"

#include <algorithm>
#include <set>

#include "shexd/error.hpp"
#include "shexd/shexc.hpp"

namespace shexd {

std::uint32_t bag_total(const ConsumerBag& bag) {
  std::uint32_t n = 0;
  for (const auto& [id, count] : bag) n += count;
  return n;
}

static std::uint32_t sat_add(std::uint32_t a, std::uint32_t b) {
  if (a == kUnbounded || b == kUnbounded) return kUnbounded;
  std::uint64_t s = std::uint64_t(a) + b;
  return s >= kUnbounded ? kUnbounded : static_cast<std::uint32_t>(s);
}

Interval Interval::intersect(const Interval& other) const {
  if (empty_ || other.empty_) return none();
  return of(std::max(lo_, other.lo_), std::min(hi_, other.hi_));
}

Interval Interval::plus(const Interval& other) const {
  if (empty_ || other.empty_) return none();
  return of(sat_add(lo_, other.lo_), sat_add(hi_, other.hi_));
}

std::string Interval::to_string() const {
  if (empty_) return "{}";
  return "[" + std::to_string(lo_) + ";" + (hi_ == kUnbounded ? "*" : std::to_string(hi_)) + "]";
}

static bool allowed_form(std::uint32_t min, std::uint32_t max) {
  return (min == 0 && max == 1) || (min == 0 && max == kUnbounded) || (min == 1 && max == kUnbounded);
}

ShapeExpr unfold_repetitions(const ShapeExpr& expr) {
  ShapeExpr out = expr;
  for (auto& c : out.children) c = unfold_repetitions(c);
  if (out.kind != ExprKind::Repetition || out.child().kind == ExprKind::TC ||
      allowed_form(out.min, out.max))
    return out;
  if (out.max == 0) return ShapeExpr::empty();
  const ShapeExpr& e = out.child();
  std::vector<ShapeExpr> parts(out.min, e);
  if (out.max == kUnbounded) {
    parts.push_back(ShapeExpr::repeat(e, 0, kUnbounded));
  } else {
    for (std::uint32_t i = out.min; i < out.max; ++i) parts.push_back(ShapeExpr::repeat(e, 0, 1));
  }
  if (parts.size() == 1) return std::move(parts.front());
  return ShapeExpr::group(std::move(parts));
}

static bool single_occurrence(const ShapeExpr& e, std::set<int>& ids) {
  switch (e.kind) {
    case ExprKind::Empty: return true;
    case ExprKind::TC: return ids.insert(e.tc.id).second;
    case ExprKind::Repetition:
      if (e.child().kind != ExprKind::TC && !allowed_form(e.min, e.max)) return false;
      break;
    default: break;
  }
  for (const auto& c : e.children)
    if (!single_occurrence(c, ids)) return false;
  return true;
}

bool is_single_occurrence(const ShapeExpr& expr) {
  std::set<int> ids;
  return single_occurrence(expr, ids);
}

namespace {

void alphabet(const ShapeExpr& e, std::set<int>& out) {
  for_each_constraint(e, [&](const TripleConstraint& tc) { out.insert(tc.id); });
}

ConsumerBag restrict(const ConsumerBag& bag, const ShapeExpr& e) {
  std::set<int> ids;
  alphabet(e, ids);
  ConsumerBag out;
  for (const auto& [id, count] : bag)
    if (ids.count(id)) out.emplace(id, count);
  return out;
}

// { n : n*l <= m <= n*u for some m in child }.
Interval repeat_interval(const Interval& child, std::uint32_t l, std::uint32_t u) {
  if (child.empty()) return Interval::none();
  std::uint32_t a = child.lo(), b = child.hi();
  std::uint32_t lo;
  if (u == 0) {
    if (a > 0) return Interval::none();
    lo = 0;
  } else if (u == kUnbounded) {
    lo = a > 0 ? 1 : 0;
  } else {
    lo = a / u + (a % u ? 1 : 0);
  }
  std::uint32_t hi = (l == 0 || b == kUnbounded) ? kUnbounded : b / l;
  return Interval::of(lo, hi);
}

Interval compute(const ShapeExpr& e, const ConsumerBag& bag) {
  switch (e.kind) {
    case ExprKind::Empty:
      return bag.empty() ? Interval::of(0, kUnbounded) : Interval::none();
    case ExprKind::TC: {
      auto it = bag.find(e.tc.id);
      std::uint32_t c = it == bag.end() ? 0 : it->second;
      return Interval::of(c, c);
    }
    case ExprKind::Repetition:
      return repeat_interval(compute(e.child(), bag), e.min, e.max);
    case ExprKind::Group: {
      Interval acc = Interval::of(0, kUnbounded);
      for (const auto& c : e.children) acc = acc.intersect(compute(c, restrict(bag, c)));
      return acc;
    }
    case ExprKind::SomeOf: {
      Interval acc = Interval::of(0, 0);
      for (const auto& c : e.children) acc = acc.plus(compute(c, restrict(bag, c)));
      return acc;
    }
  }
  return Interval::none();
}

}  // namespace

Interval interval(const ShapeExpr& expr, const ConsumerBag& bag) {
  if (!is_single_occurrence(expr))
    throw NotSingleOccurrence("expression is not single-occurrence: " + expr_to_shexc(expr));
  std::set<int> ids;
  alphabet(expr, ids);
  for (const auto& [id, count] : bag)
    if (count > 0 && !ids.count(id)) return Interval::none();
  return compute(expr, bag);
}

bool bag_matches(const ShapeExpr& expr, const ConsumerBag& bag) { return interval(expr, bag).contains(1); }

}  // namespace shexd
