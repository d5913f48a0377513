#pragma once

// De Bruijn terms over a Syntax. A variable is a position in its scope,
// counted oldest first, applied to its spine of actual parameters.

#include <cstddef>
#include <memory>
#include <string>
#include <variant>

namespace codb {

struct DbNode;

/// Shared handle to a de Bruijn node; equality is structural.
class DbPtr {
 public:
  DbPtr() = default;
  explicit DbPtr(std::shared_ptr<const DbNode> node) : node_(std::move(node)) {}

  const DbNode& operator*() const noexcept { return *node_; }
  const DbNode* operator->() const noexcept { return node_.get(); }
  const DbNode* get() const noexcept { return node_.get(); }
  explicit operator bool() const noexcept { return node_ != nullptr; }

  friend bool operator==(const DbPtr& a, const DbPtr& b);

 private:
  std::shared_ptr<const DbNode> node_;
};

using TermDB = DbPtr;

struct DbVar {
  std::size_t index;  // oldest-first position in scope
  DbPtr spine;

  friend bool operator==(const DbVar&, const DbVar&) = default;
};

struct DbCon {
  DbPtr body;

  friend bool operator==(const DbCon&, const DbCon&) = default;
};

struct DbUnit {
  friend bool operator==(const DbUnit&, const DbUnit&) = default;
};

struct DbTag {
  std::string tag;
  DbPtr body;

  friend bool operator==(const DbTag&, const DbTag&) = default;
};

struct DbPair {
  DbPtr left;
  DbPtr right;

  friend bool operator==(const DbPair&, const DbPair&) = default;
};

/// A subterm under the binders its description position demands.
struct DbRec {
  DbPtr term;

  friend bool operator==(const DbRec&, const DbRec&) = default;
};

struct DbNode {
  std::variant<DbVar, DbCon, DbUnit, DbTag, DbPair, DbRec> value;

  friend bool operator==(const DbNode&, const DbNode&) = default;
};

template <class Alt>
DbPtr make_db(Alt alt) {
  return DbPtr(std::make_shared<const DbNode>(DbNode{std::move(alt)}));
}

DbPtr db_unit();

}  // namespace codb
