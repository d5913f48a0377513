#pragma once

// Syntax descriptions. A syntax maps each sort to a Desc; a Desc says what a
// construct of that sort is made of.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "codb/scope.hpp"

namespace codb {

/// A finite set of constructor tags with decidable equality.
struct Datoid {
  std::vector<std::string> values;

  bool contains(std::string_view tag) const;
  static bool decide(std::string_view a, std::string_view b) noexcept { return a == b; }

  friend bool operator==(const Datoid&, const Datoid&) = default;
};

struct Desc;
using DescPtr = std::shared_ptr<const Desc>;

struct Desc {
  /// A subterm of kind.sort with kind.scope bound.
  struct Rec {
    Kind kind;
  };
  /// A tag followed by the arm it selects.
  struct Sg {
    Datoid tags;
    std::map<std::string, DescPtr, std::less<>> arms;
  };
  struct One {};
  struct Times {
    DescPtr left;
    DescPtr right;
  };

  std::variant<Rec, Sg, One, Times> node;
};

bool operator==(const Desc& a, const Desc& b);

DescPtr rec_d(Kind k);
/// Throws std::invalid_argument unless the arms cover the datoid exactly.
DescPtr sg_d(Datoid tags, std::map<std::string, DescPtr, std::less<>> arms);
DescPtr one_d();
DescPtr times_d(DescPtr left, DescPtr right);

/// Description of the actual parameters a variable of scope kz needs:
/// One for [], and Times(spine_desc(kz), Rec k) for kz extended by k.
DescPtr spine_desc(const Scope& kz);

std::string to_string(const Desc& d);

/// Sort-indexed family of descriptions.
class Syntax {
 public:
  void define(Sort sort, DescPtr desc);
  /// Throws ShapeError for an undescribed sort.
  const Desc& at(const Sort& sort) const;
  bool has(const Sort& sort) const { return by_sort_.count(sort) != 0; }

 private:
  std::map<Sort, DescPtr> by_sort_;
};

}  // namespace codb
