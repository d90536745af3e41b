#include "qflagk/qflagk.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <variant>

#include "qflagk/flag.hpp"
#include "qflagk/gkm.hpp"
#include "qflagk/serialize.hpp"
#include "qflagk/suites.hpp"

struct qflagk_context {
  std::string last_error;
  unsigned max_rank = 4;
};

struct qflagk_poly {
  std::variant<qflagk::ring::LaurentPoly, qflagk::ring::XPoly> value;
};

struct qflagk_schubert_table {
  const qflagk::gkm::SchubertTable* table;
};

namespace {

using namespace qflagk;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qflagk_status fail(qflagk_context* ctx, qflagk_status status, const std::string& message) {
  if (ctx) ctx->last_error = message;
  return status;
}

/// Runs `body`, translating exceptions into status codes.
template <class F>
qflagk_status guarded(qflagk_context* ctx, F&& body) {
  if (!ctx) return QFLAGK_ERR_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(ctx, QFLAGK_ERR_PARSE, e.what());
  } catch (const RankMismatch& e) {
    return fail(ctx, QFLAGK_ERR_RANK_MISMATCH, e.what());
  } catch (const OutOfRange& e) {
    return fail(ctx, QFLAGK_ERR_OUT_OF_RANGE, e.what());
  } catch (const SingularMatrix& e) {
    return fail(ctx, QFLAGK_ERR_SINGULAR, e.what());
  } catch (const InexactDivision& e) {
    return fail(ctx, QFLAGK_ERR_INEXACT_DIVISION, e.what());
  } catch (const MaxNotUnique& e) {
    return fail(ctx, QFLAGK_ERR_MAX_NOT_UNIQUE, e.what());
  } catch (const RankBoundExceeded& e) {
    return fail(ctx, QFLAGK_ERR_RANK_BOUND, e.what());
  } catch (const UnknownSuite& e) {
    return fail(ctx, QFLAGK_ERR_UNKNOWN_SUITE, e.what());
  } catch (const UsageError& e) {
    return fail(ctx, QFLAGK_ERR_USAGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ctx, QFLAGK_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(ctx, QFLAGK_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ctx, QFLAGK_ERR_INTERNAL, "unknown failure");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void check_rank(const qflagk_context* ctx, std::size_t n) {
  if (n == 0) throw OutOfRange("rank must be at least 1");
  if (n > ctx->max_rank)
    throw RankBoundExceeded("rank " + std::to_string(n) + " exceeds the cap " + std::to_string(ctx->max_rank));
}

template <class F>
qflagk_status binary_op(qflagk_context* ctx, const qflagk_poly* a, const qflagk_poly* b, qflagk_poly** out, F op) {
  return guarded(ctx, [&] {
    require(a && b && out, "null argument");
    if (a->value.index() != b->value.index()) throw RankMismatch("polynomials live in different rings");
    *out = std::visit(
        [&](const auto& x) {
          using P = std::decay_t<decltype(x)>;
          return new qflagk_poly{op(x, std::get<P>(b->value))};
        },
        a->value);
    return QFLAGK_OK;
  });
}

std::string render_check(const std::string& model, std::size_t rank, const gkm::CheckResult& r, qflagk_format format) {
  if (format == QFLAGK_FORMAT_JSON) {
    io::Json violations = io::Json::array();
    for (const auto& v : r.violations) violations.push_back(io::to_json(v));
    return io::Json{{"model", model},
                    {"rank", rank},
                    {"checks", r.checks},
                    {"member", r.ok()},
                    {"violations", std::move(violations)}}
               .dump(2) +
           "\n";
  }
  std::ostringstream os;
  os << "model " << model << "  n=" << rank << "  checks=" << r.checks << '\n';
  for (const auto& v : r.violations)
    os << "  violation at " << v.vertex << " / " << v.neighbor << " (" << v.edge << "): remainder " << v.remainder
       << '\n';
  os << (r.ok() ? "MEMBER" : "NOT A MEMBER") << '\n';
  return os.str();
}

}  // namespace

extern "C" {

const char* qflagk_version(void) { return "1.0.0"; }

const char* qflagk_status_name(qflagk_status status) {
  switch (status) {
    case QFLAGK_OK: return "ok";
    case QFLAGK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QFLAGK_ERR_PARSE: return "parse error";
    case QFLAGK_ERR_RANK_MISMATCH: return "rank mismatch";
    case QFLAGK_ERR_OUT_OF_RANGE: return "out of range";
    case QFLAGK_ERR_SINGULAR: return "singular matrix";
    case QFLAGK_ERR_INEXACT_DIVISION: return "inexact division";
    case QFLAGK_ERR_MAX_NOT_UNIQUE: return "maximal representative not unique";
    case QFLAGK_ERR_RANK_BOUND: return "rank bound exceeded";
    case QFLAGK_ERR_UNKNOWN_SUITE: return "unknown suite";
    case QFLAGK_ERR_USAGE: return "usage error";
    case QFLAGK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

qflagk_status qflagk_context_create(qflagk_context** out) {
  if (!out) return QFLAGK_ERR_INVALID_ARGUMENT;
  *out = new (std::nothrow) qflagk_context();
  return *out ? QFLAGK_OK : QFLAGK_ERR_INTERNAL;
}

void qflagk_context_destroy(qflagk_context* ctx) { delete ctx; }

const char* qflagk_last_error(const qflagk_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

void qflagk_context_set_max_rank(qflagk_context* ctx, unsigned max_rank) {
  if (ctx) ctx->max_rank = max_rank;
}

unsigned qflagk_context_max_rank(const qflagk_context* ctx) { return ctx ? ctx->max_rank : 0; }

void qflagk_string_free(char* s) { std::free(s); }

// ---- polynomials

qflagk_status qflagk_poly_parse(qflagk_context* ctx, const char* text, unsigned rank, int variables_x,
                                qflagk_poly** out) {
  return guarded(ctx, [&] {
    require(text && out, "null argument");
    if (rank == 0) throw OutOfRange("rank must be at least 1");
    if (variables_x)
      *out = new qflagk_poly{ring::parse_xpoly(text, rank)};
    else
      *out = new qflagk_poly{ring::parse_laurent(text, rank)};
    return QFLAGK_OK;
  });
}

void qflagk_poly_destroy(qflagk_poly* p) { delete p; }

qflagk_status qflagk_poly_to_string(qflagk_context* ctx, const qflagk_poly* p, char** out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    *out = copy_string(std::visit([](const auto& x) { return ring::to_string(x); }, p->value));
    return QFLAGK_OK;
  });
}

qflagk_status qflagk_poly_to_json(qflagk_context* ctx, const qflagk_poly* p, char** out) {
  return guarded(ctx, [&] {
    require(p && out, "null argument");
    *out = copy_string(std::visit([](const auto& x) { return io::to_json(x).dump(); }, p->value));
    return QFLAGK_OK;
  });
}

qflagk_status qflagk_poly_add(qflagk_context* ctx, const qflagk_poly* a, const qflagk_poly* b, qflagk_poly** out) {
  return binary_op(ctx, a, b, out, [](const auto& x, const auto& y) { return x + y; });
}

qflagk_status qflagk_poly_mul(qflagk_context* ctx, const qflagk_poly* a, const qflagk_poly* b, qflagk_poly** out) {
  return binary_op(ctx, a, b, out, [](const auto& x, const auto& y) { return x * y; });
}

int qflagk_poly_equal(const qflagk_poly* a, const qflagk_poly* b) { return a && b && a->value == b->value; }

qflagk_status qflagk_poly_divide_binomials(qflagk_context* ctx, const qflagk_poly* f, const int* exponents,
                                           size_t factor_count, int* divisible, qflagk_poly** out) {
  return guarded(ctx, [&] {
    require(f && divisible && out && (exponents || factor_count == 0), "null argument");
    const auto* poly = std::get_if<ring::LaurentPoly>(&f->value);
    require(poly != nullptr, "binomial division needs a Laurent polynomial");
    const std::size_t n = poly->rank();
    std::vector<ring::Exponents> factors;
    for (std::size_t k = 0; k < factor_count; ++k) factors.emplace_back(exponents + k * n, exponents + (k + 1) * n);
    const auto q = ring::divide_exact(*poly, ring::BinomialDivisor(std::move(factors)));
    if (const auto* ok = std::get_if<ring::LaurentPoly>(&q)) {
      *divisible = 1;
      *out = new qflagk_poly{*ok};
    } else {
      *divisible = 0;
      *out = new qflagk_poly{std::get<ring::NotDivisible<ring::LaurentPoly>>(q).remainder};
    }
    return QFLAGK_OK;
  });
}

qflagk_status qflagk_poly_divide_x(qflagk_context* ctx, const qflagk_poly* f, unsigned mu, unsigned nu,
                                   int* divisible, qflagk_poly** out) {
  return guarded(ctx, [&] {
    require(f && divisible && out, "null argument");
    const auto* poly = std::get_if<ring::XPoly>(&f->value);
    require(poly != nullptr, "X-division needs an X-polynomial");
    if (mu < 1 || nu < 1 || mu > poly->rank() || nu > poly->rank()) throw OutOfRange("index out of range");
    const auto q = ring::divide_exact(*poly, mu - 1, nu - 1);
    if (const auto* ok = std::get_if<ring::XPoly>(&q)) {
      *divisible = 1;
      *out = new qflagk_poly{*ok};
    } else {
      *divisible = 0;
      *out = new qflagk_poly{std::get<ring::NotDivisible<ring::XPoly>>(q).remainder};
    }
    return QFLAGK_OK;
  });
}

qflagk_status qflagk_poly_basis_decompose(qflagk_context* ctx, const qflagk_poly* f, char** json_out) {
  return guarded(ctx, [&] {
    require(f && json_out, "null argument");
    const auto* poly = std::get_if<ring::LaurentPoly>(&f->value);
    require(poly != nullptr, "basis decomposition needs a Laurent polynomial");
    io::Json out = io::Json::object();
    for (const auto& [eps, c] : ring::basis_decompose(*poly)) out[weyl::to_string(eps)] = io::to_json(c);
    *json_out = copy_string(out.dump());
    return QFLAGK_OK;
  });
}

// ---- Schubert classes

qflagk_status qflagk_schubert_table_create(qflagk_context* ctx, unsigned rank, qflagk_schubert_table** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null argument");
    check_rank(ctx, rank);
    *out = new qflagk_schubert_table{&gkm::shared_schubert_table(rank)};
    return QFLAGK_OK;
  });
}

void qflagk_schubert_table_destroy(qflagk_schubert_table* t) { delete t; }

unsigned qflagk_schubert_table_rank(const qflagk_schubert_table* t) {
  return t ? static_cast<unsigned>(t->table->rank()) : 0;
}

qflagk_status qflagk_schubert_table_class(qflagk_context* ctx, const qflagk_schubert_table* t, const char* window,
                                          char** json_out) {
  return guarded(ctx, [&] {
    require(t && window && json_out, "null argument");
    const auto w = weyl::parse_signed_perm(window);
    *json_out = copy_string(io::to_json(t->table->at(w)).dump(2) + "\n");
    return QFLAGK_OK;
  });
}

qflagk_status qflagk_schubert_table_json(qflagk_context* ctx, const qflagk_schubert_table* t, char** json_out) {
  return guarded(ctx, [&] {
    require(t && json_out, "null argument");
    *json_out = copy_string(io::to_json(*t->table).dump(2) + "\n");
    return QFLAGK_OK;
  });
}

qflagk_status qflagk_basis(qflagk_context* ctx, unsigned rank, qflagk_format format, char** out) {
  return guarded(ctx, [&] {
    require(out != nullptr, "null argument");
    check_rank(ctx, rank);
    const auto& perms = gkm::GroupTables::of(rank).S();
    const auto reps = gkm::max_length_reps(rank);
    std::string text;
    if (format == QFLAGK_FORMAT_JSON) {
      io::Json list = io::Json::array();
      for (std::size_t k = 0; k < reps.size(); ++k)
        list.push_back({{"tau", io::to_json(perms[k])},
                        {"representative", weyl::to_string(reps[k])},
                        {"length", weyl::length(reps[k])}});
      text = io::Json{{"rank", rank}, {"basis", std::move(list)}}.dump(2) + "\n";
    } else {
      std::ostringstream os;
      for (std::size_t k = 0; k < reps.size(); ++k)
        os << weyl::to_string(perms[k]) << "  " << weyl::to_string(reps[k]) << "  length " << weyl::length(reps[k])
           << '\n';
      text = os.str();
    }
    *out = copy_string(text);
    return QFLAGK_OK;
  });
}

// ---- quaternionic flags

qflagk_status qflagk_decompose(qflagk_context* ctx, const char* matrix_json, char** json_out) {
  return guarded(ctx, [&] {
    require(matrix_json && json_out, "null argument");
    const auto g = io::matrix_from_json(io::parse(matrix_json));
    const auto d = flag::bruhat_decompose(g);
    *json_out = copy_string(io::to_json(d).dump(2) + "\n");
    return QFLAGK_OK;
  });
}

qflagk_status qflagk_cell_index(qflagk_context* ctx, const char* matrix_json, char** json_out) {
  return guarded(ctx, [&] {
    require(matrix_json && json_out, "null argument");
    const auto g = io::matrix_from_json(io::parse(matrix_json));
    const auto tau = flag::cell_index(flag::FlagMatrix(g));
    *json_out = copy_string(io::Json{{"tau", io::to_json(tau)}}.dump() + "\n");
    return QFLAGK_OK;
  });
}

// ---- membership and suites

qflagk_status qflagk_check(qflagk_context* ctx, const char* model, const char* tuple_json, qflagk_format format,
                           int* member, char** report_out) {
  return guarded(ctx, [&] {
    require(tuple_json && member && report_out, "null argument");
    const io::Json j = io::parse(tuple_json);
    gkm::Model m;
    if (model) {
      const std::string s = model;
      if (s == "T") m = gkm::Model::T;
      else if (s == "X") m = gkm::Model::X;
      else if (s == "G") m = gkm::Model::G;
      else throw ParseError("unknown model: " + s);
    } else {
      m = io::model_of(j);
    }
    if (j.is_object() && j.contains("rank") && j["rank"].is_number_unsigned())
      check_rank(ctx, j["rank"].get<std::size_t>());
    gkm::CheckResult r;
    std::size_t rank = 0;
    switch (m) {
      case gkm::Model::T: {
        const auto f = io::tuple_from_json<gkm::Model::T>(j);
        rank = f.rank();
        r = gkm::check_T(f);
        break;
      }
      case gkm::Model::X: {
        const auto f = io::tuple_from_json<gkm::Model::X>(j);
        rank = f.rank();
        r = gkm::check_X(f);
        break;
      }
      case gkm::Model::G: {
        const auto f = io::tuple_from_json<gkm::Model::G>(j);
        rank = f.rank();
        r = gkm::check_G(f);
        break;
      }
    }
    *member = r.ok() ? 1 : 0;
    *report_out = copy_string(render_check(gkm::model_name(m), rank, r, format));
    return QFLAGK_OK;
  });
}

void qflagk_config_default(qflagk_config* config) {
  if (!config) return;
  const suites::Config c;
  config->rank = static_cast<unsigned>(c.n);
  config->seed = c.seed;
  config->trials = static_cast<unsigned>(c.trials);
  config->jobs = static_cast<unsigned>(c.jobs);
  config->mutate = static_cast<unsigned>(c.mutate);
  config->timing = c.timing ? 1 : 0;
}

const char* qflagk_suite_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : suites::suite_names()) s += n + "\n";
    return s;
  }();
  return names.c_str();
}

qflagk_status qflagk_verify(qflagk_context* ctx, const char* suite, const qflagk_config* config, qflagk_format format,
                            int* passed, char** report_out) {
  return guarded(ctx, [&] {
    require(suite && config && passed && report_out, "null argument");
    check_rank(ctx, config->rank);
    suites::Config c;
    c.n = config->rank;
    c.seed = config->seed;
    c.trials = config->trials;
    c.jobs = config->jobs == 0 ? 1 : config->jobs;
    c.mutate = config->mutate;
    c.timing = config->timing != 0;
    const auto report = suites::run_suite(suite, c);
    *passed = report.ok() ? 1 : 0;
    *report_out = copy_string(format == QFLAGK_FORMAT_JSON ? suites::to_json(report).dump(2) + "\n"
                                                           : suites::render_text(report));
    return QFLAGK_OK;
  });
}

}  // extern "C"
