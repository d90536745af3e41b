#include <doctest.h>

#include <json.hpp>

#include <cstring>
#include <string>

#include "qflagk/qflagk.h"

namespace {

struct Ctx {
  qflagk_context* c = nullptr;
  Ctx() { REQUIRE(qflagk_context_create(&c) == QFLAGK_OK); }
  ~Ctx() { qflagk_context_destroy(c); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  qflagk_string_free(s);
  return out;
}

qflagk_poly* parse(qflagk_context* c, const char* text, unsigned rank, int x = 0) {
  qflagk_poly* p = nullptr;
  REQUIRE(qflagk_poly_parse(c, text, rank, x, &p) == QFLAGK_OK);
  return p;
}

std::string text_of(qflagk_context* c, const qflagk_poly* p) {
  char* s = nullptr;
  REQUIRE(qflagk_poly_to_string(c, p, &s) == QFLAGK_OK);
  return take(s);
}

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(qflagk_version()).size() > 0);
  CHECK(std::string(qflagk_status_name(QFLAGK_OK)) == "ok");
  CHECK(std::string(qflagk_status_name(QFLAGK_ERR_SINGULAR)) == "singular matrix");
  CHECK(qflagk_context_create(nullptr) == QFLAGK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("polynomial handles") {
  Ctx ctx;
  qflagk_poly* a = parse(ctx.c, "x1^-1", 2);
  qflagk_poly* b = parse(ctx.c, "x1*x2^-1 - 1", 2);
  qflagk_poly* c = parse(ctx.c, "x1*x2 - 1", 2);
  qflagk_poly *ab = nullptr, *abc = nullptr;
  REQUIRE(qflagk_poly_mul(ctx.c, a, b, &ab) == QFLAGK_OK);
  REQUIRE(qflagk_poly_mul(ctx.c, ab, c, &abc) == QFLAGK_OK);
  CHECK(text_of(ctx.c, abc) == "x1 - x2 - x2^-1 + x1^-1");

  const int exps[] = {1, -1, 1, 1};
  int divisible = -1;
  qflagk_poly* q = nullptr;
  REQUIRE(qflagk_poly_divide_binomials(ctx.c, abc, exps, 2, &divisible, &q) == QFLAGK_OK);
  CHECK(divisible == 1);
  CHECK(qflagk_poly_equal(q, a));
  qflagk_poly* r = nullptr;
  REQUIRE(qflagk_poly_divide_binomials(ctx.c, a, exps, 2, &divisible, &r) == QFLAGK_OK);
  CHECK(divisible == 0);

  qflagk_poly* sum = nullptr;
  REQUIRE(qflagk_poly_add(ctx.c, a, a, &sum) == QFLAGK_OK);
  CHECK(text_of(ctx.c, sum) == "2*x1^-1");
  char* json = nullptr;
  REQUIRE(qflagk_poly_to_json(ctx.c, sum, &json) == QFLAGK_OK);
  CHECK(take(json) == R"([["2",[-1,0]]])");

  qflagk_poly* other_rank = parse(ctx.c, "x1", 1);
  qflagk_poly* bad = nullptr;
  CHECK(qflagk_poly_add(ctx.c, a, other_rank, &bad) == QFLAGK_ERR_RANK_MISMATCH);
  CHECK(bad == nullptr);
  CHECK(std::strlen(qflagk_last_error(ctx.c)) > 0);

  for (auto* p : {a, b, c, ab, abc, q, r, sum, other_rank}) qflagk_poly_destroy(p);
}

TEST_CASE("X-polynomials") {
  Ctx ctx;
  qflagk_poly* f = parse(ctx.c, "X1^2 - X2^2", 2, 1);
  int divisible = 0;
  qflagk_poly* q = nullptr;
  REQUIRE(qflagk_poly_divide_x(ctx.c, f, 1, 2, &divisible, &q) == QFLAGK_OK);
  CHECK(divisible == 1);
  CHECK(text_of(ctx.c, q) == "X1 + X2");
  qflagk_poly* g = nullptr;
  CHECK(qflagk_poly_parse(ctx.c, "x1", 1, 1, &g) == QFLAGK_ERR_PARSE);
  CHECK(qflagk_poly_divide_x(ctx.c, f, 2, 2, &divisible, &g) == QFLAGK_ERR_OUT_OF_RANGE);

  qflagk_poly* x1 = parse(ctx.c, "x1", 1);
  char* json = nullptr;
  REQUIRE(qflagk_poly_basis_decompose(ctx.c, x1, &json) == QFLAGK_OK);
  const auto d = nlohmann::json::parse(take(json));
  CHECK(d.size() == 2);
  qflagk_poly_destroy(f);
  qflagk_poly_destroy(q);
  qflagk_poly_destroy(x1);
}

TEST_CASE("Schubert tables and basis") {
  Ctx ctx;
  qflagk_schubert_table* t = nullptr;
  REQUIRE(qflagk_schubert_table_create(ctx.c, 2, &t) == QFLAGK_OK);
  CHECK(qflagk_schubert_table_rank(t) == 2);
  char* json = nullptr;
  REQUIRE(qflagk_schubert_table_class(ctx.c, t, "[-1, -2]", &json) == QFLAGK_OK);
  const auto top = nlohmann::json::parse(take(json));
  for (const auto& [k, v] : top["values"].items()) CHECK(v.dump() == R"([["1",[0,0]]])");
  CHECK(qflagk_schubert_table_class(ctx.c, t, "[1, 1]", &json) == QFLAGK_ERR_PARSE);
  CHECK(qflagk_schubert_table_class(ctx.c, t, "[1]", &json) == QFLAGK_ERR_RANK_MISMATCH);
  REQUIRE(qflagk_schubert_table_json(ctx.c, t, &json) == QFLAGK_OK);
  CHECK(nlohmann::json::parse(take(json))["classes"].size() == 8);
  qflagk_schubert_table_destroy(t);

  qflagk_context_set_max_rank(ctx.c, 1);
  CHECK(qflagk_context_max_rank(ctx.c) == 1);
  CHECK(qflagk_schubert_table_create(ctx.c, 2, &t) == QFLAGK_ERR_RANK_BOUND);
  qflagk_context_set_max_rank(ctx.c, 4);

  REQUIRE(qflagk_basis(ctx.c, 3, QFLAGK_FORMAT_JSON, &json) == QFLAGK_OK);
  CHECK(nlohmann::json::parse(take(json))["basis"].size() == 6);
}

TEST_CASE("matrices") {
  Ctx ctx;
  const char* anti = R"([[["0","0","0","0"],["1","0","0","0"]],[["1","0","0","0"],["0","0","0","0"]]])";
  char* json = nullptr;
  REQUIRE(qflagk_decompose(ctx.c, anti, &json) == QFLAGK_OK);
  CHECK(nlohmann::json::parse(take(json))["tau"].dump() == "[2,1]");
  REQUIRE(qflagk_cell_index(ctx.c, anti, &json) == QFLAGK_OK);
  CHECK(take(json) == "{\"tau\":[2,1]}\n");
  const char* singular = R"([[["1","0","0","0"],["1","0","0","0"]],[["1","0","0","0"],["1","0","0","0"]]])";
  CHECK(qflagk_decompose(ctx.c, singular, &json) == QFLAGK_ERR_SINGULAR);
  CHECK(qflagk_cell_index(ctx.c, "[[", &json) == QFLAGK_ERR_PARSE);
}

TEST_CASE("membership") {
  Ctx ctx;
  const char* good = R"({"model":"G","rank":2,"values":{"[1, 2]":"X1","[2, 1]":"X2"}})";
  const char* bad = R"({"model":"X","rank":2,"values":{"[1, 2]":"x1","[2, 1]":"x2"}})";
  const char* partial = R"({"model":"G","rank":2,"values":{"[1, 2]":"X1"}})";
  int member = -1;
  char* report = nullptr;
  REQUIRE(qflagk_check(ctx.c, nullptr, good, QFLAGK_FORMAT_JSON, &member, &report) == QFLAGK_OK);
  CHECK(member == 1);
  const auto j = nlohmann::json::parse(take(report));
  CHECK(j["checks"] == 2);
  REQUIRE(qflagk_check(ctx.c, "X", bad, QFLAGK_FORMAT_TEXT, &member, &report) == QFLAGK_OK);
  CHECK(member == 0);
  CHECK(take(report).find("NOT A MEMBER") != std::string::npos);
  CHECK(qflagk_check(ctx.c, nullptr, partial, QFLAGK_FORMAT_JSON, &member, &report) == QFLAGK_ERR_PARSE);
  CHECK(qflagk_check(ctx.c, "Q", good, QFLAGK_FORMAT_JSON, &member, &report) != QFLAGK_OK);
}

TEST_CASE("suites through the C API") {
  Ctx ctx;
  qflagk_config cfg;
  qflagk_config_default(&cfg);
  CHECK(cfg.rank == 2);
  CHECK(cfg.trials == 100);
  CHECK(std::string(qflagk_suite_names()).find("theorem2") != std::string::npos);
  int passed = -1;
  char* report = nullptr;
  REQUIRE(qflagk_verify(ctx.c, "presentation", &cfg, QFLAGK_FORMAT_JSON, &passed, &report) == QFLAGK_OK);
  CHECK(passed == 1);
  CHECK(nlohmann::json::parse(take(report))["result"] == "PASS");
  CHECK(qflagk_verify(ctx.c, "nope", &cfg, QFLAGK_FORMAT_JSON, &passed, &report) == QFLAGK_ERR_UNKNOWN_SUITE);
  cfg.mutate = 1;
  CHECK(qflagk_verify(ctx.c, "roots", &cfg, QFLAGK_FORMAT_JSON, &passed, &report) == QFLAGK_ERR_USAGE);
  cfg.rank = 5;
  CHECK(qflagk_verify(ctx.c, "gkm-t", &cfg, QFLAGK_FORMAT_JSON, &passed, &report) == QFLAGK_ERR_RANK_BOUND);
}
