#include "qflagk/serialize.hpp"

#include <optional>

namespace qflagk::io {

namespace {

template <class Poly>
Json poly_to_json(const Poly& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(Json::array({c.str(), Json(e)}));
  return out;
}

template <class Poly>
Poly poly_from_json(const Json& j, std::size_t rank) {
  if (j.is_string()) {
    if constexpr (std::is_same_v<Poly, ring::XPoly>)
      return ring::parse_xpoly(j.get<std::string>(), rank);
    else
      return ring::parse_laurent(j.get<std::string>(), rank);
  }
  if (!j.is_array()) throw ParseError("polynomial must be a list of terms or a string");
  Poly f(rank);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[1].is_array())
      throw ParseError("polynomial term must be [coefficient, [exponents]]");
    ring::BigInt c;
    try {
      c = term[0].is_string() ? ring::BigInt(term[0].get<std::string>()) : ring::BigInt(term[0].get<long long>());
    } catch (const std::exception&) {
      throw ParseError("bad polynomial coefficient");
    }
    if (term[1].size() != rank) throw ParseError("exponent vector has the wrong length");
    ring::Exponents e;
    for (const auto& x : term[1]) {
      if (!x.is_number_integer()) throw ParseError("exponent must be an integer");
      e.push_back(x.get<int>());
    }
    try {
      f.add_term(e, c);
    } catch (const Error& err) {
      throw ParseError(err.what());
    }
  }
  return f;
}

std::string key_string(const weyl::SignedPerm& w) { return weyl::to_string(w); }
std::string key_string(const weyl::Perm& p) { return weyl::to_string(p); }

}  // namespace

Json to_json(const ring::LaurentPoly& f) { return poly_to_json(f); }
Json to_json(const ring::XPoly& f) { return poly_to_json(f); }
ring::LaurentPoly laurent_from_json(const Json& j, std::size_t rank) {
  return poly_from_json<ring::LaurentPoly>(j, rank);
}
ring::XPoly xpoly_from_json(const Json& j, std::size_t rank) { return poly_from_json<ring::XPoly>(j, rank); }

std::string to_string(const quat::Rational& r) { return r.str(); }

quat::Rational rational_from_string(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return quat::Rational(boost::multiprecision::mpz_int(s));
    const boost::multiprecision::mpz_int den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in " + s);
    return quat::Rational(boost::multiprecision::mpz_int(s.substr(0, slash)), den);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad rational: " + s);
  }
}

Json to_json(const quat::Quaternion& q) {
  return Json::array({to_string(q.a), to_string(q.b), to_string(q.c), to_string(q.d)});
}

quat::Quaternion quaternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("quaternion must be a list of four rationals");
  quat::Rational c[4];
  for (int k = 0; k < 4; ++k) {
    if (j[k].is_string())
      c[k] = rational_from_string(j[k].get<std::string>());
    else if (j[k].is_number_integer())
      c[k] = quat::Rational(j[k].get<long long>());
    else
      throw ParseError("quaternion component must be a rational string");
  }
  return {c[0], c[1], c[2], c[3]};
}

Json to_json(const quat::QMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

quat::QMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty list of rows");
  const std::size_t n = j.size();
  quat::QMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw ParseError("matrix must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = quaternion_from_json(j[r][c]);
  }
  return m;
}

Json to_json(const weyl::Perm& p) {
  Json out = Json::array();
  for (int x : p.images()) out.push_back(x + 1);
  return out;
}

weyl::Perm perm_from_json(const Json& j) {
  if (j.is_string()) return weyl::parse_perm(j.get<std::string>());
  if (!j.is_array()) throw ParseError("permutation must be a list");
  std::vector<int> images;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("permutation entries must be integers");
    images.push_back(x.get<int>() - 1);
  }
  try {
    return weyl::Perm(std::move(images));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

template <gkm::Model M>
Json to_json(const gkm::Tuple<M>& f) {
  Json values = Json::object();
  for (std::size_t i = 0; i < f.size(); ++i) values[key_string(gkm::Tuple<M>::key(f.rank(), i))] = to_json(f[i]);
  return Json{{"model", gkm::model_name(M)}, {"rank", f.rank()}, {"values", std::move(values)}};
}

gkm::Model model_of(const Json& j) {
  if (!j.is_object() || !j.contains("model") || !j["model"].is_string()) throw ParseError("tuple has no model tag");
  const auto m = j["model"].get<std::string>();
  if (m == "T") return gkm::Model::T;
  if (m == "X") return gkm::Model::X;
  if (m == "G") return gkm::Model::G;
  throw ParseError("unknown model tag: " + m);
}

template <gkm::Model M>
gkm::Tuple<M> tuple_from_json(const Json& j) {
  using Tuple = gkm::Tuple<M>;
  if (!j.is_object()) throw ParseError("tuple must be a JSON object");
  if (j.contains("model") && model_of(j) != M) throw ParseError("tuple model tag does not match");
  if (!j.contains("rank") || !j["rank"].is_number_unsigned() || j["rank"].get<std::size_t>() == 0)
    throw ParseError("tuple needs a positive integer rank");
  if (!j.contains("values") || !j["values"].is_object()) throw ParseError("tuple needs a values object");
  const auto n = j["rank"].get<std::size_t>();
  const std::size_t count = Tuple::vertex_count(n);
  std::vector<std::optional<typename Tuple::Poly>> slots(count);
  for (const auto& [key, value] : j["values"].items()) {
    std::size_t index;
    if constexpr (M == gkm::Model::T) {
      const auto w = weyl::parse_signed_perm(key);
      if (w.size() != n) throw ParseError("index " + key + " has the wrong rank");
      index = weyl::index_of(w);
    } else {
      const auto p = weyl::parse_perm(key);
      if (p.size() != n) throw ParseError("index " + key + " has the wrong rank");
      index = weyl::index_of(p);
    }
    if (slots[index]) throw ParseError("index " + key + " appears twice");
    if constexpr (M == gkm::Model::G)
      slots[index] = xpoly_from_json(value, n);
    else
      slots[index] = laurent_from_json(value, n);
  }
  std::vector<typename Tuple::Poly> values;
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!slots[i]) throw ParseError("index set is missing " + key_string(Tuple::key(n, i)));
    values.push_back(std::move(*slots[i]));
  }
  return Tuple(n, std::move(values));
}

template Json to_json(const gkm::TupleT&);
template Json to_json(const gkm::TupleX&);
template Json to_json(const gkm::TupleG&);
template gkm::TupleT tuple_from_json<gkm::Model::T>(const Json&);
template gkm::TupleX tuple_from_json<gkm::Model::X>(const Json&);
template gkm::TupleG tuple_from_json<gkm::Model::G>(const Json&);

Json to_json(const gkm::Convention& c) {
  return Json{{"point_class_sign", c.point_class_sign}, {"demazure_sign", c.demazure_sign}};
}

Json to_json(const gkm::SchubertTable& t) {
  Json classes = Json::object();
  for (std::size_t w = 0; w < t.classes().size(); ++w)
    classes[weyl::to_string(gkm::TupleT::key(t.rank(), w))] = to_json(t[w]);
  return Json{{"rank", t.rank()}, {"convention", to_json(t.convention())}, {"classes", std::move(classes)}};
}

Json to_json(const flag::BruhatDecomposition& d) {
  return Json{{"u", to_json(d.u)}, {"tau", to_json(d.tau)}, {"b", to_json(d.b)}};
}

Json to_json(const gkm::Violation& v) {
  Json out{{"vertex", v.vertex}};
  if (!v.neighbor.empty()) out["neighbor"] = v.neighbor;
  out["edge"] = v.edge;
  out["remainder"] = v.remainder;
  return out;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace qflagk::io
