#include "codb/desc.hpp"

#include <algorithm>
#include <stdexcept>

#include "codb/errors.hpp"

namespace codb {

bool Datoid::contains(std::string_view tag) const {
  return std::any_of(values.begin(), values.end(), [&](const std::string& v) { return decide(v, tag); });
}

namespace {
bool same(const DescPtr& a, const DescPtr& b) { return a == b || (a && b && *a == *b); }
}  // namespace

bool operator==(const Desc& a, const Desc& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* r = std::get_if<Desc::Rec>(&a.node)) return r->kind == std::get<Desc::Rec>(b.node).kind;
  if (const auto* s = std::get_if<Desc::Sg>(&a.node)) {
    const auto& t = std::get<Desc::Sg>(b.node);
    if (!(s->tags == t.tags) || s->arms.size() != t.arms.size()) return false;
    for (const auto& [tag, arm] : s->arms) {
      auto it = t.arms.find(tag);
      if (it == t.arms.end() || !same(arm, it->second)) return false;
    }
    return true;
  }
  if (const auto* p = std::get_if<Desc::Times>(&a.node)) {
    const auto& q = std::get<Desc::Times>(b.node);
    return same(p->left, q.left) && same(p->right, q.right);
  }
  return true;
}

DescPtr rec_d(Kind k) { return std::make_shared<const Desc>(Desc{Desc::Rec{std::move(k)}}); }

DescPtr sg_d(Datoid tags, std::map<std::string, DescPtr, std::less<>> arms) {
  for (const std::string& tag : tags.values) {
    if (arms.find(tag) == arms.end()) throw std::invalid_argument("no arm for tag " + tag);
  }
  for (const auto& [tag, arm] : arms) {
    if (!tags.contains(tag)) throw std::invalid_argument("arm for unknown tag " + tag);
  }
  return std::make_shared<const Desc>(Desc{Desc::Sg{std::move(tags), std::move(arms)}});
}

DescPtr one_d() {
  static const DescPtr one = std::make_shared<const Desc>(Desc{Desc::One{}});
  return one;
}

DescPtr times_d(DescPtr left, DescPtr right) {
  return std::make_shared<const Desc>(Desc{Desc::Times{std::move(left), std::move(right)}});
}

DescPtr spine_desc(const Scope& kz) {
  DescPtr d = one_d();
  for (const Kind& k : kz) d = times_d(std::move(d), rec_d(k));
  return d;
}

std::string to_string(const Desc& d) {
  if (const auto* r = std::get_if<Desc::Rec>(&d.node)) return "Rec " + to_string(r->kind);
  if (const auto* s = std::get_if<Desc::Sg>(&d.node)) {
    std::string out = "Σ {";
    bool first = true;
    for (const std::string& tag : s->tags.values) {
      if (!first) out += "; ";
      first = false;
      out += tag + " → " + to_string(*s->arms.at(tag));
    }
    return out + "}";
  }
  if (const auto* p = std::get_if<Desc::Times>(&d.node)) {
    return "(" + to_string(*p->left) + " × " + to_string(*p->right) + ")";
  }
  return "One";
}

void Syntax::define(Sort sort, DescPtr desc) { by_sort_[std::move(sort)] = std::move(desc); }

const Desc& Syntax::at(const Sort& sort) const {
  auto it = by_sort_.find(sort);
  if (it == by_sort_.end()) throw ShapeError("", "no description for sort " + sort.name);
  return *it->second;
}

}  // namespace codb
