#include "codb/term_db.hpp"

namespace codb {

bool operator==(const DbPtr& a, const DbPtr& b) {
  if (a.get() == b.get()) return true;
  if (a.get() == nullptr || b.get() == nullptr) return false;
  return *a == *b;
}

DbPtr db_unit() {
  static const DbPtr unit = make_db(DbUnit{});
  return unit;
}

}  // namespace codb
