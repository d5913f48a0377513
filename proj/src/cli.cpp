#include "codb/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "codb/errors.hpp"
#include "codb/instr.hpp"
#include "codb/lam.hpp"
#include "codb/sexp.hpp"
#include "codb/universe.hpp"

namespace codb::cli {

namespace {

struct Options {
  std::string expr;
  std::string file;
  std::vector<std::string> env;
  std::size_t fuel = 1000;
  std::vector<std::string> formats;
  std::string input = "auto";
  bool debug = false;
  std::size_t count = 200;
  std::size_t max_nodes = 30;
  std::uint64_t seed = 1;
};

// One input term, located for diagnostics.
struct Source {
  std::string where;
  std::string text;
  bool sexp = false;
  std::optional<Datum> datum;
};

struct Term {
  TermDB db;
  Relev<NodePtr> r;
};

class Failure {
 public:
  Failure(int code, std::string message) : code_(code), message_(std::move(message)) {}
  int code() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  int code_;
  std::string message_;
};

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  std::string s = hash == std::string::npos ? line : line.substr(0, hash);
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

bool looks_like_sexp(const std::string& text) {
  for (const char* head : {"(up", "(con", "(var"}) {
    const std::string h = head;
    if (text.compare(0, h.size(), h) == 0 && (text.size() == h.size() || !std::isalnum(static_cast<unsigned char>(text[h.size()])))) {
      return true;
    }
  }
  return false;
}

std::vector<Source> read_sources(const Options& o) {
  std::string text;
  std::string name;
  if (!o.expr.empty()) {
    text = o.expr;
    name = "-e";
  } else {
    std::ifstream in(o.file, std::ios::binary);
    if (!in) throw Failure(kParse, "cannot open " + o.file);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    name = o.file;
  }

  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(strip_comment(line));
  }
  std::string first;
  for (const auto& l : lines) {
    if (!l.empty()) {
      first = l;
      break;
    }
  }
  const bool sexp = o.input == "sexp" || (o.input == "auto" && looks_like_sexp(first));

  std::vector<Source> out;
  if (sexp) {
    std::string joined;
    for (const auto& l : lines) joined += l + "\n";
    auto located = [&](std::size_t pos) {
      if (!o.expr.empty()) return name;
      const auto line = std::count(joined.begin(), joined.begin() + static_cast<long>(std::min(pos, joined.size())), '\n');
      return name + ":" + std::to_string(line + 1);
    };
    std::vector<Datum> ds;
    try {
      ds = parse_datums(joined);
    } catch (const ParseError& e) {
      throw Failure(kParse, located(e.position()) + ": " + e.what());
    }
    for (auto& d : ds) {
      Source s{located(d.position), to_string(d), true, std::move(d)};
      out.push_back(std::move(s));
    }
    return out;
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    const std::string where = o.expr.empty() ? name + ":" + std::to_string(i + 1) : name;
    out.push_back(Source{where, lines[i], false, std::nullopt});
  }
  return out;
}

Term load(const Source& s, const Options& o) {
  const Scope kz = stars(o.env.size());
  try {
    if (!s.sexp) {
      TermDB db = lam::resolve(lam::parse(s.text), o.env);
      return Term{db, lam::code(db, o.env.size())};
    }
    if (s.datum->headed("up")) {
      Relev<NodePtr> r = r_from_datum(lam::syntax(), *s.datum, kz, kIota);
      if (auto bad = validate_r(lam::syntax(), r, kz, kIota)) throw Failure(kInvalid, bad->to_string());
      return Term{lam::decode(r), r};
    }
    TermDB db = db_from_datum(lam::syntax(), *s.datum, kz, kIota);
    if (auto bad = validate_db(lam::syntax(), db, kz, kIota)) throw Failure(kInvalid, bad->to_string());
    return Term{db, lam::code(db, o.env.size())};
  } catch (const ParseError& e) {
    throw Failure(kParse, e.what());
  } catch (const UnboundName& e) {
    throw Failure(kParse, e.what());
  } catch (const ShapeError& e) {
    throw Failure(kInvalid, std::string("ShapeError at ") + e.what());
  }
}

std::vector<lam::Style> styles(const Options& o) {
  std::vector<lam::Style> out;
  for (const auto& f : o.formats) out.push_back(lam::parse_style(f));
  if (out.empty()) out.push_back(lam::Style::Named);
  return out;
}

void print_term(const Relev<NodePtr>& r, const Options& o, std::ostream& out) {
  const auto ss = styles(o);
  for (std::size_t i = 0; i < ss.size(); ++i) {
    if (ss.size() > 1) out << o.formats[i] << ": ";
    out << lam::pretty(r, ss[i], o.env) << '\n';
  }
}

void collect_covers(const NodePtr& node, std::vector<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, RPair>) {
          out.push_back(n.cover.size() == 0 ? "ε" : n.cover.to_string());
          collect_covers(n.left.thing, out);
          collect_covers(n.right.thing, out);
        } else if constexpr (std::is_same_v<T, Hash>) {
          collect_covers(n.pair.right.thing, out);
        } else if constexpr (std::is_same_v<T, Tagged> || std::is_same_v<T, Con> || std::is_same_v<T, Bind>) {
          collect_covers(n.body, out);
        }
      },
      node->value);
}

void print_debug(const Relev<NodePtr>& r, std::ostream& out) {
  out << "support: " << (r.thinning.target_size() == 0 ? "ε" : r.thinning.to_string()) << '\n';
  std::vector<std::string> covers;
  collect_covers(r.thing, covers);
  out << "covers:";
  for (const auto& c : covers) out << ' ' << c;
  out << '\n' << "tree: " << render(r) << '\n';
}

void print_counters(std::ostream& out) {
  const auto& c = instr::counters();
  out << "node_visits: " << c.node_visits << '\n'
      << "search_visits: " << c.search_visits << '\n'
      << "fast_paths: " << c.fast_paths << '\n'
      << "hereditary_calls: " << c.hereditary_calls << '\n'
      << "metric_violations: " << c.metric_violations << '\n';
}

int show(const Term& t, const Options& o, std::ostream& out, std::ostream&) {
  print_term(t.r, o, out);
  if (o.debug) print_debug(t.r, out);
  return kOk;
}

int normalize(const Term& t, const Options& o, const std::string& where, std::ostream& out, std::ostream& err) {
  instr::reset();
  lam::Normalized n = lam::normalize(t.r, o.fuel);
  print_term(n.term, o, out);
  out << "steps: " << n.steps << '\n';
  if (o.debug) print_counters(out);
  if (n.out_of_fuel) {
    err << where << ": out of fuel after " << n.steps << " steps\n";
    return kOutOfFuel;
  }
  return kOk;
}

int check(const Term& t, const Options& o, std::ostream& out, std::ostream&) {
  const Scope kz = stars(o.env.size());
  if (auto bad = validate_db(lam::syntax(), t.db, kz, kIota)) throw Failure(kInvalid, bad->to_string());
  if (auto bad = validate_r(lam::syntax(), t.r, kz, kIota)) throw Failure(kInvalid, bad->to_string());
  if (!is_relevant(t.r)) throw Failure(kInvalid, "RelevanceError at $: recomputed support differs");
  if (!(lam::decode(t.r) == t.db) || !(lam::code(t.db, o.env.size()) == t.r)) {
    throw Failure(kInvalid, "ShapeError at $: translations do not round-trip");
  }
  out << "ok " << lam::pretty(t.r, lam::Style::Named, o.env) << '\n';
  return kOk;
}

int bench(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<TermDB> work;
  if (!o.expr.empty() || !o.file.empty()) {
    for (const auto& s : read_sources(o)) work.push_back(load(s, o).db);
  } else {
    std::mt19937_64 rng(o.seed);
    for (std::size_t i = 0; i < o.count; ++i) work.push_back(lam::random_term(rng, std::max<std::size_t>(o.max_nodes, 2), o.env.size()));
  }
  using clock = std::chrono::steady_clock;
  std::vector<lam::Normalized> fast;
  std::vector<lam::NaiveNormalized> slow;
  std::size_t fast_steps = 0;
  std::size_t slow_steps = 0;

  instr::reset();
  const auto t0 = clock::now();
  for (const auto& t : work) {
    fast.push_back(lam::normalize(lam::code(t, o.env.size()), o.fuel));
    fast_steps += fast.back().steps;
  }
  const auto t1 = clock::now();
  const instr::Counters codb_counts = instr::counters();

  instr::reset();
  const auto t2 = clock::now();
  for (const auto& t : work) {
    slow.push_back(lam::naive_normalize(t, o.env.size(), o.fuel));
    slow_steps += slow.back().steps;
  }
  const auto t3 = clock::now();
  const instr::Counters naive_counts = instr::counters();

  std::size_t agree = 0;
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (fast[i].steps == slow[i].steps && fast[i].out_of_fuel == slow[i].out_of_fuel &&
        lam::decode(fast[i].term) == slow[i].term) {
      ++agree;
    }
  }
  auto ms = [](auto d) { return std::chrono::duration<double, std::milli>(d).count(); };
  out << "terms: " << work.size() << '\n';
  out << "codebruijn: steps=" << fast_steps << " node_visits=" << codb_counts.node_visits
      << " search_visits=" << codb_counts.search_visits << " fast_paths=" << codb_counts.fast_paths
      << " hereditary_calls=" << codb_counts.hereditary_calls << " time_ms=" << ms(t1 - t0) << '\n';
  out << "naive: steps=" << slow_steps << " node_visits=" << naive_counts.naive_visits << " time_ms=" << ms(t3 - t2)
      << '\n';
  out << "agree: " << agree << "/" << work.size() << '\n';
  if (agree != work.size()) {
    err << "engines disagree on " << work.size() - agree << " terms\n";
    return kInvalid;
  }
  return kOk;
}

void add_common(CLI::App* cmd, Options& o, bool input_required) {
  auto* e = cmd->add_option("-e,--expr", o.expr, "Term text");
  auto* f = cmd->add_option("file", o.file, "File with one term per line");
  e->excludes(f);
  f->excludes(e);
  if (input_required) {
    auto* group = cmd->add_option_group("input");
    group->add_option(e);
    group->add_option(f);
    group->require_option(1);
  }
  cmd->add_option("--env", o.env, "Free variable names, oldest first")->delimiter(',');
  cmd->add_option("--fuel", o.fuel, "Reduction step limit")->capture_default_str();
  cmd->add_option("--format", o.formats, "named|index|codebruijn|sexp (repeatable)")
      ->check(CLI::IsMember({"named", "index", "codebruijn", "sexp"}));
  cmd->add_option("--input", o.input, "auto|named|sexp")
      ->check(CLI::IsMember({"auto", "named", "sexp"}))
      ->capture_default_str();
  cmd->add_flag("--debug", o.debug, "Validate as we go and print internals");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"co-de-Bruijn lambda terms", "codb"};
  app.require_subcommand(1);
  Options o;
  auto* show_cmd = app.add_subcommand("show", "Print terms in the requested formats");
  auto* norm_cmd = app.add_subcommand("normalize", "Normal-order beta normalization");
  auto* check_cmd = app.add_subcommand("check", "Validate both representations");
  auto* bench_cmd = app.add_subcommand("bench", "Co-de-Bruijn engine against the naive oracle");
  add_common(show_cmd, o, true);
  add_common(norm_cmd, o, true);
  add_common(check_cmd, o, true);
  add_common(bench_cmd, o, false);
  bench_cmd->add_option("--count", o.count, "Generated terms")->capture_default_str();
  bench_cmd->add_option("--max-nodes", o.max_nodes, "Largest generated term")->capture_default_str();
  bench_cmd->add_option("--seed", o.seed, "Generator seed")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParse;
  }

  std::optional<instr::ScopedChecking> checking;
  if (o.debug) checking.emplace(true);

  try {
    if (bench_cmd->parsed()) return bench(o, out, err);
    int first = kOk;
    for (const auto& s : read_sources(o)) {
      int code = kOk;
      try {
        Term t = load(s, o);
        if (show_cmd->parsed()) {
          code = show(t, o, out, err);
        } else if (norm_cmd->parsed()) {
          code = normalize(t, o, s.where, out, err);
        } else {
          code = check(t, o, out, err);
        }
      } catch (const Failure& f) {
        err << s.where << ": " << f.message() << '\n';
        code = f.code();
      }
      if (first == kOk) first = code;
    }
    return first;
  } catch (const Failure& f) {
    err << f.message() << '\n';
    return f.code();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace codb::cli
