// qflagk command-line tool. Links only the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <climits>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "qflagk/qflagk.h"

namespace {

constexpr unsigned kDefaultMaxRank = 4;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kInexact = 3 };

struct Options {
  unsigned n = 2;
  bool n_given = false;
  std::uint64_t seed = 1;
  unsigned trials = 100;
  std::string format = "text";
  std::string output;
  unsigned jobs = 1;
  unsigned mutate = 0;
  bool unsafe_n = false;
  bool timing = false;
  std::string suite;
  std::string window;
  bool all = false;
  std::string input;
  std::string model;
};

struct ContextDeleter {
  void operator()(qflagk_context* c) const { qflagk_context_destroy(c); }
};
using Context = std::unique_ptr<qflagk_context, ContextDeleter>;

struct StringDeleter {
  void operator()(char* s) const { qflagk_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

std::optional<unsigned> env_max_rank() {
  const char* v = std::getenv("QFLAGK_MAX_N");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const unsigned long x = std::strtoul(v, &end, 10);
  if (*end != '\0' || x == 0 || x > UINT_MAX) {
    std::cerr << "qflagk: ignoring invalid QFLAGK_MAX_N=" << v << '\n';
    return std::nullopt;
  }
  return static_cast<unsigned>(x);
}

qflagk_format format_of(const Options& o) { return o.format == "json" ? QFLAGK_FORMAT_JSON : QFLAGK_FORMAT_TEXT; }

bool emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) {
    std::cerr << "qflagk: cannot write " << o.output << '\n';
    return false;
  }
  out << text;
  return static_cast<bool>(out);
}

std::optional<std::string> read_input(const Options& o) {
  std::ifstream in;
  std::istream* src = &std::cin;
  if (!o.input.empty() && o.input != "-") {
    in.open(o.input, std::ios::binary);
    if (!in) {
      std::cerr << "qflagk: cannot read " << o.input << '\n';
      return std::nullopt;
    }
    src = &in;
  }
  return std::string(std::istreambuf_iterator<char>(*src), {});
}

int report_error(qflagk_context* ctx, qflagk_status s) {
  std::cerr << "qflagk: " << qflagk_status_name(s) << ": " << qflagk_last_error(ctx) << '\n';
  return kUsage;
}

int cmd_verify(qflagk_context* ctx, const Options& o) {
  qflagk_config c;
  qflagk_config_default(&c);
  c.rank = o.n;
  c.seed = o.seed;
  c.trials = o.trials;
  c.jobs = o.jobs;
  c.mutate = o.mutate;
  c.timing = o.timing ? 1 : 0;
  int passed = 0;
  char* raw = nullptr;
  const qflagk_status s = qflagk_verify(ctx, o.suite.c_str(), &c, format_of(o), &passed, &raw);
  OwnedString report(raw);
  if (s == QFLAGK_ERR_INEXACT_DIVISION) {
    std::cerr << "qflagk: inexact division: " << qflagk_last_error(ctx) << '\n';
    return kInexact;
  }
  if (s != QFLAGK_OK) return report_error(ctx, s);
  if (!emit(o, report.get())) return kUsage;
  return passed ? kOk : kFailed;
}

std::string schubert_text(const nlohmann::ordered_json& tuple, const std::string& label) {
  std::ostringstream os;
  os << "class " << label << '\n';
  for (const auto& [vertex, poly] : tuple["values"].items()) {
    os << "  " << vertex << "  ";
    if (poly.empty()) os << "0";
    // Same grammar as the library's polynomial text form.
    bool first = true;
    for (const auto& term : poly) {
      std::string coef = term[0].get<std::string>();
      const bool negative = coef.front() == '-';
      if (negative) coef.erase(0, 1);
      os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
      first = false;
      bool wrote = false;
      bool constant = true;
      for (const auto& e : term[1]) constant = constant && e.get<int>() == 0;
      if (coef != "1" || constant) {
        os << coef;
        wrote = true;
      }
      for (std::size_t k = 0; k < term[1].size(); ++k) {
        const int e = term[1][k].get<int>();
        if (e == 0) continue;
        os << (wrote ? "*" : "") << 'x' << k + 1;
        if (e != 1) os << '^' << e;
        wrote = true;
      }
    }
    os << '\n';
  }
  return os.str();
}

int cmd_schubert(qflagk_context* ctx, const Options& o) {
  if (o.all == !o.window.empty()) {
    std::cerr << "qflagk: schubert needs exactly one of --w or --all\n";
    return kUsage;
  }
  unsigned n = o.n;
  if (!o.window.empty()) {
    // The window fixes the rank; count its entries.
    unsigned entries = 0;
    bool in_number = false;
    for (char ch : o.window) {
      const bool digit = ch >= '0' && ch <= '9';
      if (digit && !in_number) ++entries;
      in_number = digit;
    }
    if (o.n_given && entries != o.n) {
      std::cerr << "qflagk: window " << o.window << " does not have rank " << o.n << '\n';
      return kUsage;
    }
    n = entries == 0 ? o.n : entries;
  }
  qflagk_schubert_table* table = nullptr;
  qflagk_status s = qflagk_schubert_table_create(ctx, n, &table);
  if (s != QFLAGK_OK) return report_error(ctx, s);
  std::unique_ptr<qflagk_schubert_table, void (*)(qflagk_schubert_table*)> guard(table, qflagk_schubert_table_destroy);
  char* raw = nullptr;
  s = o.all ? qflagk_schubert_table_json(ctx, table, &raw) : qflagk_schubert_table_class(ctx, table, o.window.c_str(), &raw);
  OwnedString json(raw);
  if (s != QFLAGK_OK) return report_error(ctx, s);
  if (o.format == "json") return emit(o, json.get()) ? kOk : kUsage;

  const auto doc = nlohmann::ordered_json::parse(json.get());
  std::string text;
  if (o.all) {
    for (const auto& [w, tuple] : doc["classes"].items()) text += schubert_text(tuple, w);
  } else {
    text = schubert_text(doc, o.window);
  }
  return emit(o, text) ? kOk : kUsage;
}

int cmd_matrix(qflagk_context* ctx, const Options& o, bool decompose) {
  const auto input = read_input(o);
  if (!input) return kUsage;
  char* raw = nullptr;
  const qflagk_status s = decompose ? qflagk_decompose(ctx, input->c_str(), &raw) : qflagk_cell_index(ctx, input->c_str(), &raw);
  OwnedString json(raw);
  if (s == QFLAGK_ERR_SINGULAR) {
    std::cerr << "qflagk: singular matrix: " << qflagk_last_error(ctx) << '\n';
    return kFailed;
  }
  if (s != QFLAGK_OK) return report_error(ctx, s);
  if (o.format == "json") return emit(o, json.get()) ? kOk : kUsage;
  const auto doc = nlohmann::ordered_json::parse(json.get());
  std::string text = "tau " + doc["tau"].dump() + "\n";
  if (decompose) text += "u " + doc["u"].dump() + "\nb " + doc["b"].dump() + "\n";
  return emit(o, text) ? kOk : kUsage;
}

int cmd_check(qflagk_context* ctx, const Options& o) {
  const auto input = read_input(o);
  if (!input) return kUsage;
  int member = 0;
  char* raw = nullptr;
  const qflagk_status s =
      qflagk_check(ctx, o.model.empty() ? nullptr : o.model.c_str(), input->c_str(), format_of(o), &member, &raw);
  OwnedString report(raw);
  if (s != QFLAGK_OK) return report_error(ctx, s);
  if (!emit(o, report.get())) return kUsage;
  return member ? kOk : kFailed;
}

int cmd_basis(qflagk_context* ctx, const Options& o) {
  char* raw = nullptr;
  const qflagk_status s = qflagk_basis(ctx, o.n, format_of(o), &raw);
  OwnedString out(raw);
  if (s != QFLAGK_OK) return report_error(ctx, s);
  return emit(o, out.get()) ? kOk : kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Equivariant K-theory of the quaternionic flag manifold"};
  app.require_subcommand(1);
  app.fallthrough();

  auto* n_opt = app.add_option("--n", o.n, "Rank n")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--trials", o.trials, "Random trials per randomized check")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", o.output, "Write the result to this file instead of stdout");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--unsafe-n", o.unsafe_n, "Lift the rank cap");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "Suite name")->required();
  verify->add_option("--mutate", o.mutate, "Perturb k components of every tuple by +1 before checking");
  verify->add_flag("--timing", o.timing, "Include wall time in the report");

  auto* schubert = app.add_subcommand("schubert", "Emit Schubert classes");
  schubert->add_option("--w", o.window, "Window notation, e.g. \"[-2, 1]\"");
  schubert->add_flag("--all", o.all, "Emit the whole table");

  auto* decompose = app.add_subcommand("decompose", "Factor g = u p_tau b");
  decompose->add_option("--input", o.input, "JSON matrix file (default stdin)");

  auto* cell = app.add_subcommand("cell-index", "Cell index of the flag of a matrix");
  cell->add_option("--input", o.input, "JSON matrix file (default stdin)");

  auto* check = app.add_subcommand("check", "GKM membership of a tuple");
  check->add_option("--model", o.model, "T, X or G (default: the tuple's model tag)")
      ->check(CLI::IsMember({"T", "X", "G"}));
  check->add_option("--input", o.input, "JSON tuple file (default stdin)");

  app.add_subcommand("basis", "Maximal-length coset representatives");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  o.n_given = n_opt->count() > 0;

  qflagk_context* raw_ctx = nullptr;
  if (qflagk_context_create(&raw_ctx) != QFLAGK_OK) return kUsage;
  Context ctx(raw_ctx);
  qflagk_context_set_max_rank(ctx.get(), o.unsafe_n ? UINT_MAX : env_max_rank().value_or(kDefaultMaxRank));

  if (verify->parsed()) return cmd_verify(ctx.get(), o);
  if (schubert->parsed()) return cmd_schubert(ctx.get(), o);
  if (decompose->parsed()) return cmd_matrix(ctx.get(), o, true);
  if (cell->parsed()) return cmd_matrix(ctx.get(), o, false);
  if (check->parsed()) return cmd_check(ctx.get(), o);
  return cmd_basis(ctx.get(), o);
}
