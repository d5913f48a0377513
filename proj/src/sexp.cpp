#include "codb/sexp.hpp"

#include <cctype>

#include "codb/errors.hpp"

namespace codb {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

  Datum read() {
    skip();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == ')') throw ParseError(pos_, "unexpected ')'");
    if (c == '(') {
      ++pos_;
      Datum list;
      list.is_atom = false;
      list.position = start;
      for (;;) {
        skip();
        if (pos_ >= text_.size()) throw ParseError(start, "unclosed '('");
        if (text_[pos_] == ')') {
          ++pos_;
          return list;
        }
        list.items.push_back(read());
      }
    }
    Datum atom;
    atom.position = start;
    while (pos_ < text_.size() && !delimiter(text_[pos_])) ++pos_;
    atom.atom = std::string(text_.substr(start, pos_ - start));
    return atom;
  }

 private:
  static bool delimiter(char c) {
    return c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c));
  }

  void skip() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Datum atom(std::string a) {
  Datum d;
  d.atom = std::move(a);
  return d;
}

Datum list(std::vector<Datum> items) {
  Datum d;
  d.is_atom = false;
  d.items = std::move(items);
  return d;
}

Datum relev_datum(const Relev<NodePtr>& r) {
  return list({atom("up"), to_datum(r.thing), atom("thin:" + r.thinning.to_string())});
}

Datum pair_datum(const RPair& p) {
  return list({atom("pair"), relev_datum(p.left), relev_datum(p.right), atom("cover:" + p.cover.to_string())});
}

// ---------------------------------------------------------------------------
// reading

std::string where(const std::string& path, const Datum& d) { return path + " (offset " + std::to_string(d.position) + ")"; }

void expect_list(const Datum& d, std::string_view head, std::size_t arity, const std::string& path) {
  if (!d.headed(head) || d.items.size() != arity + 1) {
    throw ShapeError(where(path, d), "expected (" + std::string(head) + " ...) with " + std::to_string(arity) +
                                         " argument" + (arity == 1 ? "" : "s") + ", got " + to_string(d));
  }
}

std::string prefixed(const Datum& d, std::string_view prefix, const std::string& path) {
  if (!d.is_atom || d.atom.compare(0, prefix.size(), prefix) != 0) {
    throw ShapeError(where(path, d), "expected " + std::string(prefix) + "..., got " + to_string(d));
  }
  return d.atom.substr(prefix.size());
}

Thinning read_thinning(const Datum& d, std::string_view prefix, const Scope& target, const std::string& path) {
  const std::string bits = prefixed(d, prefix, path);
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError(d.position, "bit string may contain only 0 and 1: " + d.atom);
  }
  if (bits.size() != target.size()) {
    throw ShapeError(where(path, d), std::string(prefix) + bits + " has " + std::to_string(bits.size()) +
                                         " bits for a scope of " + std::to_string(target.size()));
  }
  return Thinning(target, BitVec::from_string(bits));
}

Cover read_cover(const Datum& d, const Scope& covered, const std::string& path) {
  const std::string shape = prefixed(d, "cover:", path);
  for (char c : shape) {
    if (c != 'L' && c != 'R' && c != 'B') throw ParseError(d.position, "cover may contain only L, R, B: " + d.atom);
  }
  if (shape.size() != covered.size()) {
    throw ShapeError(where(path, d), "cover:" + shape + " has " + std::to_string(shape.size()) +
                                         " entries for a scope of " + std::to_string(covered.size()));
  }
  return Cover::parse(true, shape, covered);
}

DbPtr read_db_body(const Syntax& syntax, const Desc& desc, const Datum& d, const Scope& kz, const std::string& path);

DbPtr read_db_term(const Syntax& syntax, const Datum& d, const Scope& kz, const Sort& sort, const std::string& path) {
  if (d.headed("var")) {
    expect_list(d, "var", 2, path);
    const Datum& i = d.items[1];
    std::size_t index = 0;
    if (!i.is_atom || i.atom.empty() || i.atom.find_first_not_of("0123456789") != std::string::npos) {
      throw ShapeError(where(path, i), "expected a variable position, got " + to_string(i));
    }
    index = std::stoul(i.atom);
    if (index >= kz.size()) {
      throw ShapeError(where(path, i), "variable " + i.atom + " out of range for a scope of " + std::to_string(kz.size()));
    }
    if (!(kz[index].sort == sort)) throw ShapeError(where(path, i), "variable of the wrong sort");
    return make_db(DbVar{index, read_db_body(syntax, *spine_desc(kz[index].scope), d.items[2], kz, path + "/var.spine")});
  }
  expect_list(d, "con", 1, path);
  return make_db(DbCon{read_db_body(syntax, syntax.at(sort), d.items[1], kz, path + "/con")});
}

DbPtr read_db_body(const Syntax& syntax, const Desc& desc, const Datum& d, const Scope& kz, const std::string& path) {
  if (const auto* r = std::get_if<Desc::Rec>(&desc.node)) {
    expect_list(d, "rec", 1, path);
    return make_db(DbRec{read_db_term(syntax, d.items[1], concat(kz, r->kind.scope), r->kind.sort, path + "/rec")});
  }
  if (const auto* s = std::get_if<Desc::Sg>(&desc.node)) {
    if (d.is_atom || d.items.size() != 2 || !d.items[0].is_atom) {
      throw ShapeError(where(path, d), "expected (TAG body), got " + to_string(d));
    }
    const std::string& tag = d.items[0].atom;
    auto arm = s->arms.find(tag);
    if (arm == s->arms.end()) throw ShapeError(where(path, d), "unknown tag " + tag);
    return make_db(DbTag{tag, read_db_body(syntax, *arm->second, d.items[1], kz, path + "/" + tag)});
  }
  if (std::holds_alternative<Desc::One>(desc.node)) {
    if (!d.is("unit")) throw ShapeError(where(path, d), "expected unit, got " + to_string(d));
    return db_unit();
  }
  const auto& times = std::get<Desc::Times>(desc.node);
  expect_list(d, "pair", 2, path);
  return make_db(DbPair{read_db_body(syntax, *times.left, d.items[1], kz, path + "/pair.left"),
                        read_db_body(syntax, *times.right, d.items[2], kz, path + "/pair.right")});
}

NodePtr read_r_body(const Syntax& syntax, const Desc& desc, const Datum& d, const Scope& scope, const std::string& path);

Relev<NodePtr> read_up_body(const Syntax& syntax, const Desc& desc, const Datum& d, const Scope& ambient,
                            const std::string& path) {
  expect_list(d, "up", 2, path);
  Thinning th = read_thinning(d.items[2], "thin:", ambient, path);
  return Relev<NodePtr>{read_r_body(syntax, desc, d.items[1], th.source(), path), th};
}

NodePtr read_r_term(const Syntax& syntax, const Datum& d, const Scope& scope, const Sort& sort, const std::string& path) {
  if (d.headed("hash")) {
    expect_list(d, "hash", 1, path);
    const Datum& p = d.items[1];
    expect_list(p, "pair", 3, path + "/hash");
    const Datum& var = p.items[1];
    expect_list(var, "up", 2, path + "/hash.var");
    if (!var.items[1].is("only")) throw ShapeError(where(path + "/hash.var", var), "expected only");
    Thinning x = read_thinning(var.items[2], "thin:", scope, path + "/hash.var");
    if (x.source_size() != 1) {
      throw ShapeError(where(path + "/hash.var", var),
                       "variable support has " + std::to_string(x.source_size()) + " positions, not one");
    }
    const Kind& k = scope[x.bits().select(0)];
    if (!(k.sort == sort)) throw ShapeError(where(path + "/hash.var", var), "variable of the wrong sort");
    Relev<NodePtr> spine = read_up_body(syntax, *spine_desc(k.scope), p.items[2], scope, path + "/hash.spine");
    Cover cover = read_cover(p.items[3], scope, path + "/hash");
    return make_node(Hash{RPair{Relev<NodePtr>{make_node(VarLeaf{}), x}, spine, cover}});
  }
  expect_list(d, "con", 1, path);
  return make_node(Con{read_r_body(syntax, syntax.at(sort), d.items[1], scope, path + "/con")});
}

NodePtr read_r_body(const Syntax& syntax, const Desc& desc, const Datum& d, const Scope& scope, const std::string& path) {
  if (const auto* r = std::get_if<Desc::Rec>(&desc.node)) {
    expect_list(d, "bind", 2, path);
    Thinning usage = read_thinning(d.items[1], "usage:", r->kind.scope, path + "/bind");
    return make_node(
        Bind{usage, read_r_term(syntax, d.items[2], concat(scope, usage.source()), r->kind.sort, path + "/bind")});
  }
  if (const auto* s = std::get_if<Desc::Sg>(&desc.node)) {
    if (d.is_atom || d.items.size() != 2 || !d.items[0].is_atom) {
      throw ShapeError(where(path, d), "expected (TAG body), got " + to_string(d));
    }
    const std::string& tag = d.items[0].atom;
    auto arm = s->arms.find(tag);
    if (arm == s->arms.end()) throw ShapeError(where(path, d), "unknown tag " + tag);
    return make_node(Tagged{tag, read_r_body(syntax, *arm->second, d.items[1], scope, path + "/" + tag)});
  }
  if (std::holds_alternative<Desc::One>(desc.node)) {
    if (!d.is("unit")) throw ShapeError(where(path, d), "expected unit, got " + to_string(d));
    return make_node(UnitLeaf{});
  }
  const auto& times = std::get<Desc::Times>(desc.node);
  expect_list(d, "pair", 3, path);
  Relev<NodePtr> left = read_up_body(syntax, *times.left, d.items[1], scope, path + "/pair.left");
  Relev<NodePtr> right = read_up_body(syntax, *times.right, d.items[2], scope, path + "/pair.right");
  return make_node(RPair{left, right, read_cover(d.items[3], scope, path + "/pair")});
}

}  // namespace

std::vector<Datum> parse_datums(std::string_view text) {
  Reader reader(text);
  std::vector<Datum> out;
  while (!reader.at_end()) out.push_back(reader.read());
  return out;
}

Datum parse_datum(std::string_view text) {
  Reader reader(text);
  Datum d = reader.read();
  if (!reader.at_end()) throw ParseError(0, "trailing input after s-expression");
  return d;
}

std::string to_string(const Datum& d) {
  if (d.is_atom) return d.atom;
  std::string out = "(";
  for (std::size_t i = 0; i < d.items.size(); ++i) {
    if (i) out += ' ';
    out += to_string(d.items[i]);
  }
  return out + ")";
}

Datum to_datum(const TermDB& t) {
  return std::visit(
      [](const auto& n) -> Datum {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, DbVar>) {
          return list({atom("var"), atom(std::to_string(n.index)), to_datum(n.spine)});
        } else if constexpr (std::is_same_v<T, DbCon>) {
          return list({atom("con"), to_datum(n.body)});
        } else if constexpr (std::is_same_v<T, DbUnit>) {
          return atom("unit");
        } else if constexpr (std::is_same_v<T, DbTag>) {
          return list({atom(n.tag), to_datum(n.body)});
        } else if constexpr (std::is_same_v<T, DbPair>) {
          return list({atom("pair"), to_datum(n.left), to_datum(n.right)});
        } else {
          return list({atom("rec"), to_datum(n.term)});
        }
      },
      t->value);
}

Datum to_datum(const NodePtr& node) {
  return std::visit(
      [](const auto& n) -> Datum {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, UnitLeaf>) {
          return atom("unit");
        } else if constexpr (std::is_same_v<T, VarLeaf>) {
          return atom("only");
        } else if constexpr (std::is_same_v<T, Tagged>) {
          return list({atom(n.tag), to_datum(n.body)});
        } else if constexpr (std::is_same_v<T, RPair>) {
          return pair_datum(n);
        } else if constexpr (std::is_same_v<T, Bind>) {
          return list({atom("bind"), atom("usage:" + n.usage.to_string()), to_datum(n.body)});
        } else if constexpr (std::is_same_v<T, Hash>) {
          return list({atom("hash"), pair_datum(n.pair)});
        } else {
          return list({atom("con"), to_datum(n.body)});
        }
      },
      node->value);
}

Datum to_datum(const Relev<NodePtr>& r) { return relev_datum(r); }

std::string to_sexp(const TermDB& t) { return to_string(to_datum(t)); }
std::string to_sexp(const Relev<NodePtr>& r) { return to_string(to_datum(r)); }

TermDB db_from_datum(const Syntax& syntax, const Datum& d, const Scope& kz, const Sort& sort) {
  return read_db_term(syntax, d, kz, sort, "$");
}

Relev<NodePtr> r_from_datum(const Syntax& syntax, const Datum& d, const Scope& kz, const Sort& sort) {
  expect_list(d, "up", 2, "$");
  Thinning th = read_thinning(d.items[2], "thin:", kz, "$");
  return Relev<NodePtr>{read_r_term(syntax, d.items[1], th.source(), sort, "$"), th};
}

}  // namespace codb
