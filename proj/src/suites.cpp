#include "qflagk/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "qflagk/flag.hpp"
#include "qflagk/oracle.hpp"
#include "qflagk/sampling.hpp"

namespace qflagk::suites {

namespace {

using gkm::GroupTables;
using gkm::Violation;
using ring::LaurentPoly;
using ring::XPoly;
using sampling::Rng;
using weyl::Perm;
using weyl::SignedPerm;

// Stream ids keep every random family independent of the others.
enum Stream : std::uint64_t {
  kCells = 1,
  kCombination = 2,
  kClassMutation = 3,
  kWords = 4,
  kIdempotency = 5,
  kExpansion = 6,
  kPullback = 7,
  kXTuple = 8,
  kSymmetrized = 9,
  kGTuple = 10,
  kBridge = 11,
};

Rng stream_rng(const Config& c, Stream s, std::uint64_t trial) {
  return sampling::trial_rng(c.seed ^ (s * 0x9e3779b97f4a7c15ULL), trial);
}

class Tally {
 public:
  template <class Witness>
  void check(const std::string& section, bool ok, Witness&& witness) {
    Section& s = section_for(section);
    ++s.checks;
    if (!ok) {
      ++s.failed;
      findings_.push_back({section, std::forward<Witness>(witness)()});
    }
  }

  void absorb(const std::string& section, const gkm::CheckResult& r) {
    Section& s = section_for(section);
    s.checks += r.checks;
    s.failed += r.violations.size();
    for (const auto& v : r.violations) findings_.push_back({section, v});
  }

  void merge(Tally&& other) {
    for (const auto& s : other.sections_) {
      Section& mine = section_for(s.name);
      mine.checks += s.checks;
      mine.failed += s.failed;
    }
    for (auto& f : other.findings_) findings_.push_back(std::move(f));
  }

  void finish(SuiteReport& r) && {
    r.sections = std::move(sections_);
    r.violations = std::move(findings_);
    r.checks = 0;
    for (const auto& s : r.sections) r.checks += s.checks;
    r.passed = r.checks - r.violations.size();
  }

 private:
  Section& section_for(const std::string& name) {
    for (auto& s : sections_)
      if (s.name == name) return s;
    sections_.push_back({name, 0, 0});
    return sections_.back();
  }

  std::vector<Section> sections_;
  std::vector<Finding> findings_;
};

auto witness(std::string vertex, std::string neighbor, std::string edge, std::string remainder) {
  return [=] { return Violation{vertex, neighbor, edge, remainder}; };
}

/// Runs `fn(trial, tally)` for every trial on up to `jobs` threads; per-trial
/// tallies are merged in trial order so the report does not depend on
/// scheduling.
void run_trials(Tally& into, std::size_t count, std::size_t jobs,
                const std::function<void(std::size_t, Tally&)>& fn) {
  std::vector<Tally> parts(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t t; (t = next++) < count;) {
      try {
        fn(t, parts[t]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, count));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  for (auto& p : parts) into.merge(std::move(p));
}

template <gkm::Model M>
void maybe_mutate(const Config& c, Stream s, std::uint64_t trial, gkm::Tuple<M>& f) {
  if (c.mutate == 0) return;
  Rng rng = stream_rng(c, s, trial + (1ULL << 40));
  sampling::mutate(rng, f, c.mutate);
}

std::string first_difference(const gkm::TupleT& a, const gkm::TupleT& b) {
  for (std::size_t w = 0; w < a.size(); ++w)
    if (a[w] != b[w])
      return "differs at " + weyl::to_string(gkm::TupleT::key(a.rank(), w)) + ": " + ring::to_string(a[w]) +
             " vs " + ring::to_string(b[w]);
  return "";
}

std::size_t factorial(std::size_t n) {
  std::size_t r = 1;
  for (std::size_t k = 2; k <= n; ++k) r *= k;
  return r;
}

// ---------------------------------------------------------------------------
// roots

SignedPerm case_table_reflection(const weyl::Root& alpha) {
  const auto& e = alpha.weight();
  const std::size_t n = e.size();
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i)
    if (e[i] != 0) support.push_back(i);
  std::vector<int> signs(n, 1);
  if (support.size() == 1) {
    signs[support[0]] = -1;
    return SignedPerm(Perm::identity(n), signs);
  }
  const Perm t = Perm::transposition(n, support[0], support[1]);
  if (e[support[0]] != e[support[1]]) return SignedPerm(t, signs);
  signs[support[0]] = signs[support[1]] = -1;
  return SignedPerm(t, signs);
}

/// s_a(l) = l - 2 (l.a)/(a.a) a.
weyl::Weight reflect_by_formula(const weyl::Weight& l, const weyl::Weight& a) {
  int la = 0, aa = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    la += l[i] * a[i];
    aa += a[i] * a[i];
  }
  weyl::Weight out = l;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= 2 * la * a[i] / aa;
  return out;
}

void suite_roots(const Config& c, Tally& t) {
  const std::size_t n = c.n;
  const auto& g = GroupTables::of(n);
  const SignedPerm e = SignedPerm::identity(n);

  for (const auto& alpha : g.roots()) {
    const SignedPerm s = weyl::reflection(alpha);
    const std::string a = weyl::to_string(alpha.weight());
    t.check("reflection-involution", s * s == e, witness(a, "", "s_a^2", weyl::to_string(s * s)));
    weyl::Weight neg = alpha.weight();
    for (auto& x : neg) x = -x;
    t.check("reflection-negates-root", weyl::act(s, alpha.weight()) == neg,
            witness(a, "", "s_a(a)", weyl::to_string(weyl::act(s, alpha.weight()))));
    const SignedPerm expected = case_table_reflection(alpha);
    t.check("reflection-case-table", s == expected, witness(a, weyl::to_string(expected), "case table", weyl::to_string(s)));
    for (std::size_t v = 0; v < n; ++v) {
      weyl::Weight l(n, 0);
      l[v] = 1;
      const auto got = weyl::act(s, l);
      const auto want = reflect_by_formula(l, alpha.weight());
      t.check("reflection-formula", got == want, witness(a, weyl::to_string(l), "s_a(L)", weyl::to_string(got)));
    }
  }

  const auto wg = weyl::enumerate_WG(n);
  const std::size_t expected_w = factorial(n) << n;
  t.check("order-W", g.W().size() == expected_w && std::set<SignedPerm>(g.W().begin(), g.W().end()).size() == expected_w,
          witness("|W|", "", std::to_string(expected_w), std::to_string(g.W().size())));
  const bool all_sign = std::all_of(wg.begin(), wg.end(), [](const SignedPerm& v) { return v.is_sign_change(); });
  t.check("order-WG", wg.size() == (std::size_t{1} << n) && all_sign,
          witness("|W_G|", "", std::to_string(std::size_t{1} << n), std::to_string(wg.size())));

  for (const auto& w : g.W()) {
    const SignedPerm w_inv = weyl::invert(w);
    for (const auto& v : wg) {
      const SignedPerm conj = w * v * w_inv;
      t.check("normality", conj.is_sign_change(), witness(weyl::to_string(w), weyl::to_string(v), "w v w^-1", weyl::to_string(conj)));
    }
  }
  for (std::size_t a = 0; a < g.W().size(); ++a)
    for (std::size_t b = 0; b < g.W().size(); ++b) {
      const SignedPerm ab = g.W()[a] * g.W()[b];
      const Perm lhs = weyl::coset_map(ab);
      const Perm rhs = g.S()[g.coset(a)] * g.S()[g.coset(b)];
      t.check("coset-homomorphism", lhs == rhs,
              witness(weyl::to_string(g.W()[a]), weyl::to_string(g.W()[b]), "coset(wv)", weyl::to_string(lhs)));
    }
  const Perm id = Perm::identity(n);
  for (const auto& w : g.W())
    t.check("coset-kernel", (weyl::coset_map(w) == id) == w.is_sign_change(),
            witness(weyl::to_string(w), "", "kernel", weyl::to_string(weyl::coset_map(w))));
  for (std::size_t w = 0; w < g.W().size(); ++w)
    for (std::size_t i = 1; i <= n; ++i) {
      const auto l0 = static_cast<long>(g.length(w));
      const auto l1 = static_cast<long>(g.length(g.right_simple(i, w)));
      t.check("length-step", l1 - l0 == 1 || l0 - l1 == 1,
              witness(weyl::to_string(g.W()[w]), "s" + std::to_string(i), "length", std::to_string(l1 - l0)));
    }
  for (const auto& tau : g.S()) {
    bool ok = true;
    std::string detail;
    try {
      const SignedPerm rep = weyl::max_length_rep(tau);
      ok = weyl::coset_map(rep) == tau;
      detail = weyl::to_string(rep);
    } catch (const MaxNotUnique& e) {
      ok = false;
      detail = e.what();
    }
    t.check("max-length-rep-unique", ok, witness(weyl::to_string(tau), "", "coset", detail));
  }
}

// ---------------------------------------------------------------------------
// cells

void suite_cells(const Config& c, Tally& t) {
  const std::size_t n = c.n;
  const auto& g = GroupTables::of(n);
  const auto& perms = g.S();

  run_trials(t, c.trials, c.jobs, [&](std::size_t trial, Tally& local) {
    using flag::perm_matrix;
    Rng rng = stream_rng(c, kCells, trial);
    const auto m = quat::random_invertible(rng, n);
    const std::string label = "trial " + std::to_string(trial);
    const auto d = flag::bruhat_decompose(m);
    const std::string tau = weyl::to_string(d.tau);
    local.check("roundtrip", d.u * perm_matrix(d.tau) * d.b == m, witness(label, "", "u p b", tau));
    local.check("u-membership", flag::u_membership(d.u, d.tau), witness(label, "", "U_tau", tau));
    local.check("b-upper-invertible", d.b.is_upper_triangular() && d.b.invertible(), witness(label, "", "B", tau));
    const Perm idx = flag::cell_index(flag::FlagMatrix(m));
    local.check("cell-index-agrees", idx == d.tau, witness(label, tau, "cell_index", weyl::to_string(idx)));
    const auto bp = quat::random_upper_triangular(rng, n);
    const auto d2 = flag::bruhat_decompose(m * bp);
    local.check("uniqueness", d2.u == d.u && d2.tau == d.tau, witness(label, tau, "g b'", weyl::to_string(d2.tau)));

    const Perm& sigma = perms[trial % perms.size()];
    const auto u = flag::random_u(rng, sigma);
    const auto b = quat::random_upper_triangular(rng, n);
    const auto h = u * perm_matrix(sigma) * b;
    const auto dh = flag::bruhat_decompose(h);
    const std::string s = weyl::to_string(sigma);
    local.check("structured-cell", dh.tau == sigma && dh.u == u && dh.b == b,
                witness(label, s, "u p_tau b", weyl::to_string(dh.tau)));
    const Perm hidx = flag::cell_index(flag::FlagMatrix(h));
    local.check("structured-cell-index", hidx == sigma, witness(label, s, "cell_index", weyl::to_string(hidx)));
    std::vector<quat::Quaternion> gamma;
    for (std::size_t k = 0; k < n; ++k) gamma.push_back(quat::random_nonzero_quaternion(rng));
    local.check("diagonal-conjugation", flag::u_membership(flag::conjugate_by_diagonal(gamma, u), sigma),
                witness(label, s, "gamma u gamma^-1", "left U_tau"));
  });

  for (const auto& tau : perms) {
    const std::size_t len = weyl::length(tau);
    const std::size_t free = flag::free_positions(tau).size();
    t.check("free-entries", free == len && free == tau.inversions(),
            witness(weyl::to_string(tau), "", "free entries", std::to_string(free)));
    const auto cell = flag::describe_cell(tau);
    t.check("cell-dimension", cell.dimension == 4 * len,
            witness(weyl::to_string(tau), "", "dimension", std::to_string(cell.dimension)));
  }
  for (const auto& a : perms)
    for (const auto& b : perms) {
      const bool leq = flag::closure_leq(a, b);
      t.check("closure-oracle", leq == oracle::rank_matrix_leq(a, b),
              witness(weyl::to_string(a), weyl::to_string(b), "closure", leq ? "true" : "false"));
      const std::size_t la = weyl::length(a), lb = weyl::length(b);
      t.check("closure-length", !leq || (a == b ? la == lb : la < lb),
              witness(weyl::to_string(a), weyl::to_string(b), "length", std::to_string(la) + " vs " + std::to_string(lb)));
    }
  t.check("cell-count", std::set<Perm>(perms.begin(), perms.end()).size() == factorial(c.n),
          witness("S_n", "", std::to_string(factorial(c.n)), std::to_string(perms.size())));
}

// ---------------------------------------------------------------------------
// gkm-t

void suite_gkm_t(const Config& c, Tally& t) {
  const auto& table = gkm::shared_schubert_table(c.n);
  const auto& g = GroupTables::of(c.n);
  for (std::size_t w = 0; w < g.W().size(); ++w) {
    gkm::TupleT f = table[w];
    maybe_mutate(c, kClassMutation, w, f);
    t.absorb("schubert-class", gkm::check_T(f));
  }
  run_trials(t, c.trials, c.jobs, [&](std::size_t trial, Tally& local) {
    Rng rng = stream_rng(c, kCombination, trial);
    auto comb = sampling::random_combination(rng, table, g.W());
    maybe_mutate(c, kCombination, trial, comb.tuple);
    local.absorb("random-combination", gkm::check_T(comb.tuple));
  });
}

// ---------------------------------------------------------------------------
// schubert

void all_reduced_words(const GroupTables& g, std::size_t w, std::vector<std::size_t>& suffix,
                       std::vector<std::vector<std::size_t>>& out) {
  if (g.length(w) == 0) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (std::size_t i = 1; i <= g.rank(); ++i) {
    const std::size_t ws = g.right_simple(i, w);
    if (g.length(ws) > g.length(w)) continue;
    suffix.push_back(i);
    all_reduced_words(g, ws, suffix, out);
    suffix.pop_back();
  }
}

std::vector<std::size_t> random_reduced_word(const GroupTables& g, std::size_t w, Rng& rng) {
  std::vector<std::size_t> peeled;
  while (g.length(w) > 0) {
    std::vector<std::size_t> descents;
    for (std::size_t i = 1; i <= g.rank(); ++i)
      if (g.length(g.right_simple(i, w)) < g.length(w)) descents.push_back(i);
    const std::size_t i = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
    peeled.push_back(i);
    w = g.right_simple(i, w);
  }
  return {peeled.rbegin(), peeled.rend()};
}

std::string word_string(const std::vector<std::size_t>& word) {
  std::string s = "[";
  for (std::size_t k = 0; k < word.size(); ++k) s += (k ? "," : "") + std::to_string(word[k]);
  return s + "]";
}

void suite_schubert(const Config& c, Tally& t) {
  const std::size_t n = c.n;
  const auto& table = gkm::shared_schubert_table(n);
  const auto& g = GroupTables::of(n);
  const auto conv = table.convention();

  const auto outcomes = gkm::evaluate_conventions();
  const auto first = std::find_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.accepted(); });
  t.check("convention-pinned", first != outcomes.end() && first->convention == conv,
          witness("convention", "", "pinning", std::to_string(conv.point_class_sign) + "," + std::to_string(conv.demazure_sign)));
  const auto e = weyl::index_of(SignedPerm::identity(n));
  t.check("base-point-class", table[e] == gkm::point_class(n, conv),
          witness("e", "", "[O_e]", first_difference(table[e], gkm::point_class(n, conv))));
  const auto one = gkm::TupleT::constant(n, LaurentPoly::constant(n, 1));
  const auto& top = table.at(weyl::longest_element(n));
  t.check("top-class-one", top == one, witness(weyl::to_string(weyl::longest_element(n)), "", "[O_w0]", first_difference(top, one)));

  for (std::size_t w = 0; w < g.W().size(); ++w) t.absorb("class-gkm", gkm::check_T(table[w]));
  t.absorb("triangularity", gkm::triangularity_check(table));
  t.absorb("descent-invariance", gkm::lemma44_check(table));

  auto check_word = [&](Tally& into, std::size_t w, const std::vector<std::size_t>& word) {
    const auto f = gkm::schubert_from_word(word, n, conv);
    into.check("word-independence", f == table[w],
               witness(weyl::to_string(g.W()[w]), "", word_string(word), first_difference(f, table[w])));
  };
  if (n <= 2) {
    for (std::size_t w = 0; w < g.W().size(); ++w) {
      std::vector<std::vector<std::size_t>> words;
      std::vector<std::size_t> suffix;
      all_reduced_words(g, w, suffix, words);
      for (const auto& word : words) check_word(t, w, word);
    }
  } else {
    run_trials(t, c.trials, c.jobs, [&](std::size_t trial, Tally& local) {
      Rng rng = stream_rng(c, kWords, trial);
      const std::size_t w = std::uniform_int_distribution<std::size_t>(0, g.W().size() - 1)(rng);
      check_word(local, w, random_reduced_word(g, w, rng));
    });
  }

  run_trials(t, c.trials, c.jobs, [&](std::size_t trial, Tally& local) {
    Rng rng = stream_rng(c, kIdempotency, trial);
    const auto comb = sampling::random_combination(rng, table, g.W());
    const std::size_t i = std::uniform_int_distribution<std::size_t>(1, n)(rng);
    const auto once = gkm::demazure(i, comb.tuple, conv);
    const auto twice = gkm::demazure(i, once, conv);
    local.check("demazure-idempotent", once == twice,
                witness("trial " + std::to_string(trial), "", "D_" + std::to_string(i), first_difference(once, twice)));
    local.absorb("demazure-preserves-gkm", gkm::check_T(once));
  });
}

// ---------------------------------------------------------------------------
// theorem1

void suite_theorem1(const Config& c, Tally& t) {
  const std::size_t n = c.n;
  const auto& table = gkm::shared_schubert_table(n);
  const auto reps = gkm::max_length_reps(n);
  const auto wg = weyl::enumerate_WG(n);

  for (const auto& rep : reps)
    for (const auto& v : wg) {
      const auto moved = gkm::act_on_indices(v, table.at(rep));
      t.check("max-rep-invariance", moved == table.at(rep),
              witness(weyl::to_string(rep), weyl::to_string(v), "v.[O_w]", first_difference(moved, table.at(rep))));
    }

  run_trials(t, c.trials, c.jobs, [&](std::size_t trial, Tally& local) {
    Rng rng = stream_rng(c, kExpansion, trial);
    const auto comb = sampling::random_combination(rng, table, reps);
    const std::string label = "trial " + std::to_string(trial);
    const auto solved = gkm::expand_in_schubert(comb.tuple, reps, table);
    const auto* coeffs = std::get_if<std::map<SignedPerm, LaurentPoly>>(&solved);
    local.check("expansion-recovers", coeffs && *coeffs == comb.coefficients, [&] {
      const auto* bad = std::get_if<gkm::NotInSpan>(&solved);
      return Violation{label, bad ? bad->vertex : "", "expand", bad ? bad->reason : "coefficients differ"};
    });
    const auto down = gkm::descend_pi(comb.tuple);
    if (const auto* bad = std::get_if<gkm::NotInvariantTuple>(&down)) {
      local.check("combination-descends", false,
                  witness(label, weyl::to_string(bad->w), "v = " + weyl::to_string(bad->v), "not W_G-invariant"));
    } else {
      local.check("combination-descends", true, witness("", "", "", ""));
      local.absorb("descended-gkm", gkm::check_X(std::get<gkm::TupleX>(down)));
    }
  });

  run_trials(t, c.trials, c.jobs, [&](std::size_t trial, Tally& local) {
    Rng rng = stream_rng(c, kPullback, trial);
    const auto x = sampling::random_x_tuple(rng, n);
    const auto up = gkm::pullback_pi(x);
    const std::string label = "trial " + std::to_string(trial);
    local.absorb("pullback-gkm", gkm::check_T(up));
    for (const auto& v : wg) {
      const auto moved = gkm::act_on_indices(v, up);
      local.check("pullback-invariant", moved == up, witness(label, weyl::to_string(v), "v.f", first_difference(moved, up)));
    }
    const auto down = gkm::descend_pi(up);
    const auto* back = std::get_if<gkm::TupleX>(&down);
    local.check("descend-inverts-pullback", back && *back == x, witness(label, "", "descend(pullback(f))", "mismatch"));
  });

  for (std::size_t nu = 1; nu <= n; ++nu) {
    const auto f = gkm::pullback_pi(gkm::j_expand(gkm::canonical_class_L(nu, n)));
    const auto solved = gkm::expand_in_schubert(f, reps, table);
    const auto* bad = std::get_if<gkm::NotInSpan>(&solved);
    t.check("line-class-in-span", bad == nullptr,
            witness("L_" + std::to_string(nu), bad ? bad->vertex : "", bad ? bad->reason : "", bad ? bad->residual : ""));
  }
}

// ---------------------------------------------------------------------------
// gkm-x

void suite_gkm_x(const Config& c, Tally& t) {
  const std::size_t n = c.n;
  const auto& table = gkm::shared_schubert_table(n);
  const auto& g = GroupTables::of(n);
  const auto wg = weyl::enumerate_WG(n);

  run_trials(t, c.trials, c.jobs, [&](std::size_t trial, Tally& local) {
    Rng rng = stream_rng(c, kXTuple, trial);
    const auto x = sampling::random_x_tuple(rng, n);
    local.absorb("pullback-gkm", gkm::check_T(gkm::pullback_pi(x)));
    auto probe = x;
    maybe_mutate(c, kXTuple, trial, probe);
    local.absorb("random-tuple", gkm::check_X(probe));
  });

  run_trials(t, c.trials, c.jobs, [&](std::size_t trial, Tally& local) {
    Rng rng = stream_rng(c, kSymmetrized, trial);
    const auto comb = sampling::random_combination(rng, table, g.W(), {1, 1, 2});
    gkm::TupleT sym = gkm::TupleT::zero(n);
    for (const auto& v : wg) sym += gkm::act_on_indices(v, comb.tuple);
    const auto down = gkm::descend_pi(sym);
    const auto* x = std::get_if<gkm::TupleX>(&down);
    local.check("symmetrized-descends", x != nullptr,
                witness("trial " + std::to_string(trial), "", "descend", "not W_G-invariant"));
    if (!x) return;
    auto probe = *x;
    maybe_mutate(c, kSymmetrized, trial, probe);
    local.absorb("descended-gkm", gkm::check_X(probe));
  });
}

// ---------------------------------------------------------------------------
// theorem2

void suite_theorem2(const Config& c, Tally& t) {
  const std::size_t n = c.n;
  run_trials(t, c.trials, c.jobs, [&](std::size_t trial, Tally& local) {
    Rng rng = stream_rng(c, kGTuple, trial);
    auto f = sampling::random_g_tuple(rng, n);
    maybe_mutate(c, kGTuple, trial, f);
    const auto rg = gkm::check_G(f);
    const auto rx = gkm::check_X(gkm::j_expand(f));
    const std::string label = "trial " + std::to_string(trial);
    local.absorb("g-model", rg);
    local.check("bridge-agrees", rg.ok() == rx.ok(),
                witness(label, "", "G vs X", std::string("G ") + (rg.ok() ? "pass" : "fail") + ", X " + (rx.ok() ? "pass" : "fail")));
    const auto back = gkm::j_descend(gkm::j_expand(f));
    const auto* g = std::get_if<gkm::TupleG>(&back);
    local.check("j-roundtrip", g && *g == f, witness(label, "", "j_descend(j_expand(f))", "mismatch"));
  });

  const auto& pairs = GroupTables::of(n).pairs();
  run_trials(t, c.trials, c.jobs, [&](std::size_t trial, Tally& local) {
    Rng rng = stream_rng(c, kBridge, trial);
    for (const auto& [mu, nu] : pairs) {
      const XPoly diff = XPoly::variable(n, mu) - XPoly::variable(n, nu);
      const XPoly g0 = sampling::random_xpoly(rng, n, {3, 2, 5});
      const std::string edge = "(" + std::to_string(mu + 1) + "," + std::to_string(nu + 1) + ")";
      const XPoly good = diff * g0;
      const auto ok = gkm::lemma53_bridge(good, mu, nu);
      local.check("lemma53-divisible", ok.x_divisible && ok.t_divisible && ok.quotients_agree,
                  witness("trial " + std::to_string(trial), "", edge, ring::to_string(good)));
      ring::Exponents e(n, 0);
      e[mu] = std::uniform_int_distribution<int>(0, 2)(rng);
      const XPoly bad = good + XPoly::monomial(n, e, std::uniform_int_distribution<int>(1, 5)(rng));
      const auto no = gkm::lemma53_bridge(bad, mu, nu);
      local.check("lemma53-rejects", !no.x_divisible && !no.t_divisible,
                  witness("trial " + std::to_string(trial), "", edge, ring::to_string(bad)));
    }
  });
}

// ---------------------------------------------------------------------------
// presentation

void suite_presentation(const Config& c, Tally& t) { t.absorb("presentation", gkm::presentation_check(c.n)); }

using SuiteFn = void (*)(const Config&, Tally&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"roots", suite_roots},         {"cells", suite_cells},       {"gkm-t", suite_gkm_t},
      {"schubert", suite_schubert},   {"theorem1", suite_theorem1}, {"gkm-x", suite_gkm_x},
      {"theorem2", suite_theorem2},   {"presentation", suite_presentation},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool supports_mutation(std::string_view suite) { return suite == "gkm-t" || suite == "gkm-x" || suite == "theorem2"; }

SuiteReport run_suite(std::string_view suite, const Config& config) {
  const auto& r = registry();
  const auto it = std::find_if(r.begin(), r.end(), [&](const auto& e) { return e.first == suite; });
  if (it == r.end()) throw UnknownSuite("unknown suite: " + std::string(suite));
  if (config.n == 0) throw OutOfRange("rank must be at least 1");
  if (config.trials == 0) throw OutOfRange("trials must be at least 1");
  if (config.mutate > 0 && !supports_mutation(suite))
    throw UsageError("--mutate is only supported by gkm-t, gkm-x and theorem2");

  const auto start = std::chrono::steady_clock::now();
  // Warm the shared caches before any worker threads start.
  GroupTables::of(config.n);
  if (suite != "roots" && suite != "cells" && suite != "presentation") gkm::shared_schubert_table(config.n);

  Tally tally;
  it->second(config, tally);
  SuiteReport report;
  report.suite = std::string(suite);
  report.config = config;
  std::move(tally).finish(report);
  if (config.timing)
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

io::Json to_json(const SuiteReport& r) {
  io::Json sections = io::Json::array();
  for (const auto& s : r.sections) sections.push_back({{"name", s.name}, {"checks", s.checks}, {"failed", s.failed}});
  io::Json violations = io::Json::array();
  for (const auto& f : r.violations) {
    io::Json v = io::to_json(f.witness);
    v["section"] = f.section;
    violations.push_back(std::move(v));
  }
  io::Json out{{"suite", r.suite},
               {"n", r.config.n},
               {"seed", r.config.seed},
               {"trials", r.config.trials},
               {"mutate", r.config.mutate},
               {"checks", r.checks},
               {"passed", r.passed},
               {"result", r.ok() ? "PASS" : "FAIL"},
               {"sections", std::move(sections)},
               {"violations", std::move(violations)}};
  if (r.wall_seconds) out["wall_seconds"] = *r.wall_seconds;
  return out;
}

std::string render_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << "  n=" << r.config.n << "  seed=" << r.config.seed << "  trials=" << r.config.trials;
  if (r.config.mutate) os << "  mutate=" << r.config.mutate;
  os << '\n';
  for (const auto& s : r.sections) os << "  " << s.name << ": " << (s.checks - s.failed) << "/" << s.checks << '\n';
  constexpr std::size_t kShown = 20;
  for (std::size_t k = 0; k < r.violations.size() && k < kShown; ++k) {
    const auto& f = r.violations[k];
    os << "  violation [" << f.section << "] at " << f.witness.vertex;
    if (!f.witness.neighbor.empty()) os << " / " << f.witness.neighbor;
    os << " (" << f.witness.edge << "): " << f.witness.remainder << '\n';
  }
  if (r.violations.size() > kShown) os << "  ... " << (r.violations.size() - kShown) << " more\n";
  os << "checks " << r.checks << ", passed " << r.passed << ", violations " << r.violations.size();
  if (r.wall_seconds) os << ", " << *r.wall_seconds << " s";
  os << '\n' << (r.ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace qflagk::suites
