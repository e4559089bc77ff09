#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <variant>

#include "blindsat/arith.hpp"
#include "blindsat/census.hpp"
#include "blindsat/dnf.hpp"
#include "blindsat/error.hpp"
#include "blindsat/logic.hpp"
#include "blindsat/search.hpp"
#include "blindsat/truth_table.hpp"

namespace blindsat::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Powers of two above this many bits are printed as `2^e`; decimal
// conversion of larger values takes seconds.
constexpr std::uint64_t kDecimalExponentLimit = std::uint64_t{1} << 18;

//===----------------------------------------------------------------------===//
// Output model
//===----------------------------------------------------------------------===//

struct Table {
  std::string schema;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
};

/// A single value: printed bare in CSV, as `{schema, field: value}` in JSON.
struct Scalar {
  std::string schema;
  std::string field;
  Json value;
};

/// A trailer line such as `L=3` in CSV, a record in JSON.
struct Summary {
  std::string csv_line;
  Json record;
};

using Block = std::variant<Table, Scalar, Summary>;
using Output = std::vector<Block>;

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "NA";
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  if (!v.is_string()) return v.dump();
  const auto& s = v.get_ref<const std::string&>();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return csv_cell(v);
}

std::string render_csv(const Output& output) {
  std::ostringstream out;
  for (const auto& block : output) {
    if (const auto* t = std::get_if<Table>(&block)) {
      for (std::size_t i = 0; i < t->columns.size(); ++i) out << (i ? "," : "") << t->columns[i];
      out << '\n';
      for (const auto& row : t->rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
        out << '\n';
      }
    } else if (const auto* s = std::get_if<Scalar>(&block)) {
      const auto text = scalar_text(s->value);
      out << text;
      if (text.empty() || text.back() != '\n') out << '\n';
    } else {
      out << std::get<Summary>(block).csv_line << '\n';
    }
  }
  return out.str();
}

std::string render_json(const Output& output) {
  std::vector<Json> records;
  for (const auto& block : output) {
    if (const auto* t = std::get_if<Table>(&block)) {
      for (const auto& row : t->rows) {
        Json record;
        record["schema"] = t->schema;
        for (std::size_t i = 0; i < row.size(); ++i) record[t->columns[i]] = row[i];
        records.push_back(std::move(record));
      }
    } else if (const auto* s = std::get_if<Scalar>(&block)) {
      Json record;
      record["schema"] = s->schema;
      record[s->field] = s->value;
      records.push_back(std::move(record));
    } else {
      records.push_back(std::get<Summary>(block).record);
    }
  }
  std::string out = "[";
  for (std::size_t i = 0; i < records.size(); ++i) out += (i ? ",\n" : "\n") + records[i].dump();
  out += records.empty() ? "]\n" : "\n]\n";
  return out;
}

std::string render_error(const std::string& format, const std::string& kind, int status,
                         const std::string& message) {
  if (format == "json") {
    Json record;
    record["schema"] = "error";
    record["kind"] = kind;
    record["status"] = status;
    record["message"] = message;
    return "[\n" + record.dump() + "\n]\n";
  }
  return "error,status,message\n" + kind + "," + std::to_string(status) + "," +
         csv_cell(Json(message)) + "\n";
}

//===----------------------------------------------------------------------===//
// Argument helpers
//===----------------------------------------------------------------------===//

std::uint64_t parse_count(std::string_view text, const std::string& what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw UsageError("invalid " + what + " '" + std::string(text) + "'");
  return value;
}

/// `3`, `1..5`, `1,4,7` or any comma-separated mix.
std::vector<std::uint64_t> parse_list(std::string_view text, const std::string& what) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_count(item, what));
    } else {
      const auto lo = parse_count(item.substr(0, dots), what);
      const auto hi = parse_count(item.substr(dots + 2), what);
      if (lo > hi) throw UsageError("empty " + what + " range '" + std::string(item) + "'");
      if (hi - lo > (std::uint64_t{1} << 20)) throw UsageError(what + " range is too long");
      for (auto v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

/// Accepts `3`, `p3` or `x3`.
AtomIndex parse_atom(std::string_view text) {
  if (!text.empty() && (text.front() == 'p' || text.front() == 'x')) text.remove_prefix(1);
  const auto v = parse_count(text, "atom");
  if (v == 0 || v > 0xffffffffULL) throw UsageError("atom index must be positive");
  return static_cast<AtomIndex>(v);
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Formula read_formula(const std::string& text, std::istream& in) {
  if (text != "-") return parse_formula(text);
  std::string body = read_all(in);
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
  return parse_formula(body);
}

/// `p1=1,p2=0`; the empty string is the empty assignment.
Assignment parse_assignment(std::string_view text) {
  Assignment a;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw UsageError("assignment entries look like p1=0");
    const auto value = item.substr(eq + 1);
    if (value != "0" && value != "1") throw UsageError("assignment values must be 0 or 1");
    a.set(parse_atom(item.substr(0, eq)), value == "1");
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return a;
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string item(rest.substr(0, comma));
    try {
      out.push_back(parse_rational(item));
    } catch (const Error&) {
      throw UsageError("invalid coordinate '" + item + "'");
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::string bit_string(std::uint64_t bits, unsigned n) {
  std::string out;
  for (unsigned k = 0; k < n; ++k) out += ((bits >> k) & 1U) ? '1' : '0';
  return out;
}

std::string assignment_string(const Assignment& a, unsigned n) {
  std::string out;
  for (AtomIndex k = 1; k <= n; ++k) out += (a.contains(k) && a.at(k)) ? '1' : '0';
  return out;
}

std::string power_text(std::uint64_t exponent) {
  if (exponent <= kDecimalExponentLimit) return pow2(exponent).str();
  return "2^" + std::to_string(exponent);
}

Json optional_cell(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

//===----------------------------------------------------------------------===//
// Commands
//===----------------------------------------------------------------------===//

struct Context {
  std::istream& in;
  Limits limits;
};

struct OrderOptions {
  std::string order;
  std::optional<unsigned> n;

  void attach(CLI::App* cmd) {
    cmd->add_option("--order", order, "Search order, e.g. sigma=3,1,2;d=101");
    cmd->add_option("--n", n, "Atom count for the natural order");
  }

  SearchOrder resolve(const Formula* f) const {
    if (!order.empty()) {
      auto o = SearchOrder::parse(order);
      if (n && *n != o.atom_count()) throw UsageError("--n disagrees with --order");
      return o;
    }
    if (n) return SearchOrder::natural(*n);
    if (f && f->max_atom() > 0) return SearchOrder::natural(f->max_atom());
    throw UsageError("give --order or --n");
  }
};

Output cmd_eval(const Context& ctx, const std::string& formula, const std::string& assign) {
  const auto f = read_formula(formula, ctx.in);
  const bool value = evaluate(f, parse_assignment(assign));
  return {Scalar{"eval", "value", value ? 1 : 0}};
}

Output cmd_table(const Context& ctx, const std::string& formula, const std::string& atoms_text,
                 bool summary) {
  const auto f = read_formula(formula, ctx.in);
  std::vector<AtomIndex> atoms = f.atoms();
  if (!atoms_text.empty()) {
    atoms.clear();
    std::string_view rest = atoms_text;
    while (true) {
      const auto comma = rest.find(',');
      atoms.push_back(parse_atom(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  const auto table = truth_table(f, atoms, ctx.limits);

  if (summary) {
    std::string names;
    for (auto a : atoms) names += (names.empty() ? "p" : " p") + std::to_string(a);
    std::string essential;
    for (auto a : essential_atoms(f, ctx.limits))
      essential += (essential.empty() ? "p" : " p") + std::to_string(a);
    const char* kind = table.all_true()    ? "tautology"
                       : table.all_false() ? "contradiction"
                                           : "contingency";
    return {Table{"table.summary",
                  {"atoms", "rows", "true_rows", "classification", "quasinorm", "class_quasinorm",
                   "essential", "irreducible", "representative"},
                  {{names, table.row_count(), table.count_true(), kind, quasinorm(f),
                    class_quasinorm(f, ctx.limits), essential, is_irreducible(f, ctx.limits),
                    irreducible_representative(f, ctx.limits).to_string()}}}};
  }

  Table out{"table", {}, {}};
  for (auto a : atoms) out.columns.push_back("p" + std::to_string(a));
  out.columns.push_back("result");
  const auto n = atoms.size();
  for (std::uint64_t r = 0; r < table.row_count(); ++r) {
    std::vector<Json> row;
    for (std::size_t j = 0; j < n; ++j) row.emplace_back((r >> (n - 1 - j)) & 1U);
    row.emplace_back(table.at(r) ? 1 : 0);
    out.rows.push_back(std::move(row));
  }
  return {out};
}

struct PolyOptions {
  std::string of = "g";
  unsigned dimension = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--of", of, "h = arithmetization, g = characteristic (h - 1)")
        ->check(CLI::IsMember({"g", "h"}));
    cmd->add_option("--dimension", dimension, "Number of variables (default: largest atom)");
  }

  MultilinearPoly build(const Formula& f) const {
    return of == "h" ? arithmetize(f, dimension) : characteristic(f, dimension);
  }
};

Output cmd_poly(const Context& ctx, const std::string& formula, bool is_characteristic,
                bool factored, unsigned dimension, const std::string& substitute) {
  const auto f = read_formula(formula, ctx.in);
  if (factored) {
    if (is_characteristic || !substitute.empty() || dimension != 0)
      throw UsageError("--factored cannot be combined with other polynomial options");
    return {Scalar{"poly", "polynomial", factored_arithmetize(f).to_string()}};
  }
  auto p = is_characteristic ? characteristic(f, dimension) : arithmetize(f, dimension);
  if (!substitute.empty()) {
    const auto eq = substitute.find('=');
    if (eq == std::string::npos) throw UsageError("--substitute expects FROM=TO, e.g. x2=x1");
    p = substitute_equal(p, parse_atom(std::string_view(substitute).substr(0, eq)),
                         parse_atom(std::string_view(substitute).substr(eq + 1)));
  }
  return {Scalar{"poly", "polynomial", p.to_string()}};
}

Output cmd_roots(const Context& ctx, const std::string& formula, const PolyOptions& poly,
                 bool factored) {
  const auto f = read_formula(formula, ctx.in);
  std::vector<BinaryPoint> roots;
  unsigned dimension = 0;
  if (factored) {
    if (poly.of != "h" || poly.dimension != 0)
      throw UsageError("--factored applies to the arithmetization only (--of h)");
    const auto fp = factored_arithmetize(f);
    dimension = fp.dimension();
    roots = factored_binary_roots(fp, ctx.limits).roots;
  } else {
    const auto p = poly.build(f);
    dimension = p.dimension();
    roots = binary_roots(p, ctx.limits);
  }
  Table out{"roots", {}, {}};
  for (unsigned i = 1; i <= dimension; ++i) out.columns.push_back("x" + std::to_string(i));
  for (const auto& r : roots) out.rows.emplace_back(r.begin(), r.end());
  return {out};
}

Output cmd_solve(const Context& ctx, const std::string& formula, const PolyOptions& poly,
                 const std::string& var_text, const std::string& at) {
  const auto f = read_formula(formula, ctx.in);
  const auto var = parse_atom(var_text);
  const auto result = solve_for_variable(poly.build(f), var, parse_point(at));
  std::vector<Json> row{"x" + std::to_string(var)};
  if (const auto* v = std::get_if<SolvedValue>(&result)) {
    row.emplace_back("solved");
    row.emplace_back(to_string(v->value));
  } else {
    row.emplace_back(std::holds_alternative<Inconsistent>(result) ? "inconsistent" : "indeterminate");
    row.emplace_back(nullptr);
  }
  return {Table{"solve", {"var", "result", "value"}, {row}}};
}

Output cmd_adversary(const OrderOptions& order_opts, const std::optional<std::uint64_t>& row,
                     const std::string& rows, bool worst) {
  const auto order = order_opts.resolve(nullptr);
  const int chosen = (row ? 1 : 0) + (rows.empty() ? 0 : 1) + (worst ? 1 : 0);
  if (chosen != 1) throw UsageError("give exactly one of --row, --rows, --worst");
  Formula f = Formula::top();
  if (row) {
    f = adversary_single_row(order, *row);
  } else if (worst) {
    f = worst_case_formula(order);
  } else {
    const auto list = parse_list(rows, "row");
    f = adversary_rows(order, std::set<Position>(list.begin(), list.end()));
  }
  return {Scalar{"adversary", "formula", f.to_string()}};
}

Output cmd_search(const Context& ctx, const std::string& formula, const OrderOptions& order_opts) {
  const auto f = read_formula(formula, ctx.in);
  const auto order = order_opts.resolve(&f);
  const auto trace = run_search(order, f, ctx.limits);
  Table steps{"search", {"t", "assignment", "result"}, {}};
  for (std::size_t i = 0; i < trace.steps.size(); ++i)
    steps.rows.push_back({i + 1, bit_string(trace.steps[i].assignment, order.atom_count()),
                          trace.steps[i].result ? 1 : 0});
  Json record;
  record["schema"] = "search.summary";
  record["order"] = order.to_string();
  record["L"] = optional_cell(trace.first_success);
  const std::string line =
      "L=" + (trace.first_success ? std::to_string(*trace.first_success) : std::string("none"));
  return {steps, Summary{line, record}};
}

TowerAlgorithm build_tower(const SearchOrder& order, std::uint64_t size) {
  TowerAlgorithm tower(order);
  for (std::uint64_t i = 0; i < size; ++i) tower = tower_extend(tower);
  return tower;
}

Output cmd_tower(const Context& ctx, const std::string& formula, const OrderOptions& order_opts,
                 std::uint64_t size, bool next) {
  std::optional<Formula> f;
  if (!formula.empty()) f = read_formula(formula, ctx.in);
  const auto order = order_opts.resolve(f ? &*f : nullptr);
  const auto tower = build_tower(order, size);
  if (next) {
    if (f) throw UsageError("--next takes no formula");
    return {Scalar{"tower.next", "formula", tower.next_adversary().to_string()}};
  }
  if (!f) {
    Table out{"tower.checklist", {"entry", "formula"}, {}};
    for (std::size_t i = 0; i < tower.size(); ++i)
      out.rows.push_back({i + 1, tower.checklist()[i].to_string()});
    return {out};
  }
  const auto outcome = tower_run(tower, *f, ctx.limits);
  std::optional<std::uint64_t> hit;
  if (outcome.checklist_hit) hit = *outcome.checklist_hit + 1;
  return {Table{"tower",
                {"size", "rows_charged", "effective_position", "checklist_hit"},
                {{tower.size(), outcome.rows_charged, optional_cell(outcome.effective_position),
                  optional_cell(hit)}}}};
}

Output cmd_heuristic(const Context& ctx, const std::string& formula, const OrderOptions& order_opts,
                     const std::string& rows) {
  std::optional<Formula> f;
  if (!formula.empty()) f = read_formula(formula, ctx.in);
  const auto order = order_opts.resolve(f ? &*f : nullptr);
  const auto list = parse_list(rows, "row");
  const HeuristicAlgorithm h(order.atom_count(), std::set<Position>(list.begin(), list.end()));
  if (!f) return {Scalar{"heuristic.adversary", "formula", heuristic_adversary(h, order).to_string()}};
  if (f->max_atom() > order.atom_count())
    throw DomainError("formula uses atoms beyond the order's " + std::to_string(order.atom_count()));
  const auto hit = heuristic_run(h, order, *f);
  if (!hit) return {Table{"heuristic", {"result", "position", "assignment"}, {{"miss", nullptr, nullptr}}}};
  return {Table{"heuristic",
                {"result", "position", "assignment"},
                {{"hit", hit->position, assignment_string(hit->assignment, order.atom_count())}}}};
}

Output cmd_dnf(const Context& ctx, const std::string& action, const std::string& cnf_path,
               const std::string& blowup, std::uint64_t seed) {
  if (cnf_path.empty() == blowup.empty()) throw UsageError("give exactly one of --cnf, --blowup");
  std::optional<CnfFormula> cnf;
  if (!blowup.empty()) {
    const auto nkm = parse_list(blowup, "blow-up parameter");
    if (nkm.size() != 3) throw UsageError("--blowup expects n,k,m");
    for (auto v : nkm)
      if (v > 1'000'000) throw UsageError("blow-up parameters must be at most 1000000");
    cnf = blowup_instance(static_cast<unsigned>(nkm[0]), static_cast<unsigned>(nkm[1]),
                          static_cast<unsigned>(nkm[2]), seed);
  } else if (cnf_path == "-") {
    cnf = parse_dimacs(read_all(ctx.in));
  } else {
    std::ifstream file(cnf_path, std::ios::binary);
    if (!file) throw UsageError("cannot read '" + cnf_path + "'");
    cnf = parse_dimacs(read_all(file));
  }

  const unsigned n = cnf->max_atom();
  if (action == "cnf") return {Scalar{"dnf.cnf", "dimacs", to_dimacs(*cnf)}};
  if (action == "count") {
    return {Table{"dnf.count",
                  {"clauses", "atoms", "disjuncts", "truth_table_rows"},
                  {{cnf->clauses().size(), n, to_string(disjunct_count(*cnf)), power_text(n)}}}};
  }
  const auto dnf = distribute(*cnf, ctx.limits);
  if (action == "print") return {Scalar{"dnf.print", "formula", dnf.to_formula().to_string()}};
  if (action == "classify")
    return {Table{"dnf.classify", {"classification"}, {{to_string(classify(dnf, ctx.limits))}}}};
  // solve
  const auto a = dnf_satisfying_assignment(dnf);
  if (!a) return {Table{"dnf.solve", {"status", "assignment"}, {{"unsat", nullptr}}}};
  return {Table{"dnf.solve", {"status", "assignment"}, {{"sat", assignment_string(*a, n)}}}};
}

Output cmd_census(const Context& ctx, const std::string& selector, const std::string& n_text,
                  const std::string& s_text, const std::string& m_text) {
  const auto ns = parse_list(n_text, "n");
  if (ns.empty()) throw UsageError("--n is required");
  for (auto n : ns)
    if (n == 0) throw UsageError("n must be at least 1");

  if (selector == "classes") {
    Table out{"census.classes", {"n", "u", "class_count"}, {}};
    for (auto n : ns) {
      class_count(n, ctx.limits);  // cap check before any big power is built
      out.rows.push_back({n, std::to_string(std::uint64_t{1} << n), power_text(std::uint64_t{1} << n)});
    }
    return {out};
  }

  if (selector == "rtable") {
    const auto ss = parse_list(s_text, "s");
    if (ss.empty()) throw UsageError("rtable needs --s");
    Table out{"census.rtable", {"n", "s", "ratio_num", "ratio_den", "decimal"}, {}};
    for (auto n : ns) {
      for (auto s : ss) {
        const auto r = r_poly(n, s);
        if (!r.applicable) {
          out.rows.push_back({n, s, nullptr, nullptr, nullptr});
          continue;
        }
        std::string num, den;
        if (r.rows <= kDecimalExponentLimit) {
          const BigInt d = pow2(r.rows);
          num = BigInt(d - 1).str();
          den = d.str();
        } else {
          num = "2^" + std::to_string(r.rows) + "-1";
          den = "2^" + std::to_string(r.rows);
        }
        out.rows.push_back({n, s, num, den, r.fraction_decimal()});
      }
    }
    return {out};
  }

  if (selector == "firsttrue") {
    if (!s_text.empty() && !m_text.empty()) throw UsageError("give --m or --s, not both");
    Table out{"census.firsttrue", {"n", "m", "count"}, {}};
    for (auto n : ns) {
      class_count(n, ctx.limits);
      const std::uint64_t rows = std::uint64_t{1} << n;
      if (!s_text.empty()) {
        for (auto s : parse_list(s_text, "s")) {
          const auto r = r_poly(n, s);
          out.rows.push_back({n, r.rows, r.applicable ? Json(power_text(rows - r.rows)) : Json(nullptr)});
        }
        continue;
      }
      std::vector<std::uint64_t> ms;
      if (m_text.empty()) {
        if (rows > 4096) throw UsageError("give --m when 2^n exceeds 4096");
        for (std::uint64_t m = 1; m <= rows; ++m) ms.push_back(m);
      } else {
        ms = parse_list(m_text, "m");
      }
      for (auto m : ms) {
        if (m == 0 || m > rows)
          throw DomainError("row " + std::to_string(m) + " outside 1.." + std::to_string(rows));
        out.rows.push_back({n, m, power_text(rows - m)});
      }
    }
    return {out};
  }

  // lucky
  const auto ms = parse_list(m_text, "m");
  if (ms.empty()) throw UsageError("lucky needs --m");
  Table out{"census.lucky", {"n", "m", "ratio_num", "ratio_den", "decimal"}, {}};
  for (auto n : ns) {
    for (auto m : ms) {
      const auto ratio = lucky_ratio(n, m, ctx.limits);
      const BigInt& den = denominator(ratio);
      const auto digits = den.str();
      out.rows.push_back({n, m, to_string(numerator(ratio)), digits,
                          digits.size() <= 15 ? to_decimal(ratio) : to_scientific(ratio)});
    }
  }
  return {out};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Propositional search and census workbench", "blindsat"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "csv";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  std::function<Output(const Context&)> action;
  std::string formula;

  auto* eval = app.add_subcommand("eval", "Evaluate a formula under an assignment");
  std::string assign;
  eval->add_option("formula", formula, "Formula, or - for stdin")->required();
  eval->add_option("--assign", assign, "Assignment such as p1=1,p2=0")->required();
  eval->callback([&] { action = [&](const Context& c) { return cmd_eval(c, formula, assign); }; });

  auto* table = app.add_subcommand("table", "Truth table over the formula's atoms");
  std::string table_atoms;
  bool table_summary = false;
  table->add_option("formula", formula, "Formula, or - for stdin")->required();
  table->add_option("--atoms", table_atoms, "Atom list such as p1,p2,p3");
  table->add_flag("--summary", table_summary, "Quasi-norm, essential atoms and representative");
  table->callback([&] {
    action = [&](const Context& c) { return cmd_table(c, formula, table_atoms, table_summary); };
  });

  auto* poly = app.add_subcommand("poly", "Multilinear polynomial of a formula");
  bool poly_characteristic = false, poly_factored = false;
  unsigned poly_dimension = 0;
  std::string poly_substitute;
  poly->add_option("formula", formula, "Formula, or - for stdin")->required();
  poly->add_flag("--characteristic", poly_characteristic, "Print h - 1 instead of h");
  poly->add_flag("--factored", poly_factored, "Keep top-level conjuncts as factors");
  poly->add_option("--dimension", poly_dimension, "Number of variables");
  poly->add_option("--substitute", poly_substitute, "Replace one variable by another, e.g. x2=x1");
  poly->callback([&] {
    action = [&](const Context& c) {
      return cmd_poly(c, formula, poly_characteristic, poly_factored, poly_dimension, poly_substitute);
    };
  });

  auto* roots = app.add_subcommand("roots", "0/1 roots of the formula's polynomial");
  PolyOptions roots_poly;
  bool roots_factored = false;
  roots->add_option("formula", formula, "Formula, or - for stdin")->required();
  roots_poly.attach(roots);
  roots->add_flag("--factored", roots_factored, "Sieve factor by factor");
  roots->callback([&] {
    action = [&](const Context& c) { return cmd_roots(c, formula, roots_poly, roots_factored); };
  });

  auto* solve = app.add_subcommand("solve", "Solve the polynomial for one variable");
  PolyOptions solve_poly;
  std::string solve_var, solve_at;
  solve->add_option("formula", formula, "Formula, or - for stdin")->required();
  solve_poly.attach(solve);
  solve->add_option("--var", solve_var, "Variable to solve for, e.g. x1")->required();
  solve->add_option("--at", solve_at, "Values of the other variables in ascending order");
  solve->callback([&] {
    action = [&](const Context& c) { return cmd_solve(c, formula, solve_poly, solve_var, solve_at); };
  });

  auto* adversary = app.add_subcommand("adversary", "Formula true only at chosen search positions");
  OrderOptions adversary_order;
  std::optional<std::uint64_t> adversary_row;
  std::string adversary_rows_text;
  bool adversary_worst = false;
  adversary_order.attach(adversary);
  adversary->add_option("--row", adversary_row, "Single position");
  adversary->add_option("--rows", adversary_rows_text, "Position list such as 6..8");
  adversary->add_flag("--worst", adversary_worst, "Last position of the order");
  adversary->callback([&] {
    action = [&](const Context&) {
      return cmd_adversary(adversary_order, adversary_row, adversary_rows_text, adversary_worst);
    };
  });

  auto* search = app.add_subcommand("search", "Blind sequential search trace");
  OrderOptions search_order;
  search->add_option("formula", formula, "Formula, or - for stdin")->required();
  search_order.attach(search);
  search->callback([&] { action = [&](const Context& c) { return cmd_search(c, formula, search_order); }; });

  auto* tower = app.add_subcommand("tower", "Search preceded by a checklist of worst cases");
  OrderOptions tower_order;
  std::uint64_t tower_size = 0;
  bool tower_next = false;
  tower->add_option("formula", formula, "Formula to run; omit to list the checklist");
  tower_order.attach(tower);
  tower->add_option("--size", tower_size, "Checklist length");
  tower->add_flag("--next", tower_next, "Print the adversary that defeats this tower");
  tower->callback([&] {
    action = [&](const Context& c) { return cmd_tower(c, formula, tower_order, tower_size, tower_next); };
  });

  auto* heuristic = app.add_subcommand("heuristic", "Search over a fixed subset of positions");
  OrderOptions heuristic_order;
  std::string heuristic_rows;
  heuristic->add_option("formula", formula, "Formula to run; omit for the adversary");
  heuristic_order.attach(heuristic);
  heuristic->add_option("--rows", heuristic_rows, "Explored positions such as 1..5")->required();
  heuristic->callback([&] {
    action = [&](const Context& c) { return cmd_heuristic(c, formula, heuristic_order, heuristic_rows); };
  });

  auto* dnf = app.add_subcommand("dnf", "CNF to DNF distribution experiments");
  std::string dnf_action, dnf_cnf, dnf_blowup;
  std::uint64_t seed = 0;
  dnf->add_option("action", dnf_action, "count, solve, classify, print or cnf")
      ->required()
      ->check(CLI::IsMember({"count", "solve", "classify", "print", "cnf"}));
  dnf->add_option("--cnf", dnf_cnf, "DIMACS file, or - for stdin");
  dnf->add_option("--blowup", dnf_blowup, "Random instance n,k,m");
  dnf->add_option("--seed", seed, "Generator seed");
  dnf->callback([&] {
    action = [&](const Context& c) { return cmd_dnf(c, dnf_action, dnf_cnf, dnf_blowup, seed); };
  });

  auto* census = app.add_subcommand("census", "Exact equivalence-class counts and ratios");
  std::string census_table, census_n, census_s, census_m;
  census->add_option("table", census_table, "classes, rtable, firsttrue or lucky")
      ->required()
      ->check(CLI::IsMember({"classes", "rtable", "firsttrue", "lucky"}));
  census->add_option("--n", census_n, "Atom counts such as 1..5")->required();
  census->add_option("--s", census_s, "Polynomial degrees such as 1..10");
  census->add_option("--m", census_m, "Row counts");
  census->callback([&] {
    action = [&](const Context& c) { return cmd_census(c, census_table, census_n, census_s, census_m); };
  });

  auto fail = [&](const std::string& kind, int status, const std::string& message) {
    out << render_error(format, kind, status, message);
    err << "blindsat: " << message << '\n';
    return status;
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return fail("usage", kExitUsage, e.what());
  }

  try {
    const Context ctx{in, limits_from_environment()};
    const auto output = action(ctx);
    out << (format == "json" ? render_json(output) : render_csv(output));
    return kExitOk;
  } catch (const UsageError& e) {
    return fail("usage", kExitUsage, e.what());
  } catch (const ParseError& e) {
    return fail("parse", kExitUsage, e.what());
  } catch (const CapacityError& e) {
    return fail("capacity", kExitCapacity, e.what());
  } catch (const DomainError& e) {
    return fail("domain", kExitDomain, e.what());
  } catch (const std::exception& e) {
    return fail("domain", kExitDomain, e.what());
  }
}

}  // namespace blindsat::cli
