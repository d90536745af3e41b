#pragma once

// JSON encodings. Objects keep insertion order so output is byte-stable.
//
//   polynomial   [["coef", [e1, ..., en]], ...]   (canonical term order)
//   quaternion   ["a", "b", "c", "d"]             (rationals "p" or "p/q")
//   matrix       [[q11, ..., q1n], ..., [qn1, ..., qnn]]
//   tuple        {"model": "T"|"X"|"G", "rank": n, "values": {key: polynomial}}
//
// Tuple keys are window notation (T) or one-line notation (X, G). When
// reading, a polynomial may also be given as a text string.

#include <json.hpp>

#include <string>

#include "qflagk/flag.hpp"
#include "qflagk/gkm.hpp"
#include "qflagk/quaternion.hpp"
#include "qflagk/ring.hpp"

namespace qflagk::io {

using Json = nlohmann::ordered_json;

Json to_json(const ring::LaurentPoly& f);
Json to_json(const ring::XPoly& f);
ring::LaurentPoly laurent_from_json(const Json& j, std::size_t rank);
ring::XPoly xpoly_from_json(const Json& j, std::size_t rank);

std::string to_string(const quat::Rational& r);
quat::Rational rational_from_string(const std::string& s);

Json to_json(const quat::Quaternion& q);
quat::Quaternion quaternion_from_json(const Json& j);
Json to_json(const quat::QMatrix& m);
quat::QMatrix matrix_from_json(const Json& j);

Json to_json(const weyl::Perm& p);
weyl::Perm perm_from_json(const Json& j);

template <gkm::Model M>
Json to_json(const gkm::Tuple<M>& f);
/// Throws ParseError on malformed input or a key set that is not the model's
/// full index set.
template <gkm::Model M>
gkm::Tuple<M> tuple_from_json(const Json& j);
/// Reads the "model" field; throws ParseError if absent or unknown.
gkm::Model model_of(const Json& j);

Json to_json(const gkm::Convention& c);
Json to_json(const gkm::SchubertTable& t);
Json to_json(const flag::BruhatDecomposition& d);
Json to_json(const gkm::Violation& v);

/// Parses text, mapping nlohmann errors to ParseError.
Json parse(const std::string& text);

}  // namespace qflagk::io
