#pragma once

#include <json.hpp>

#include <cctype>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "addvol/affine.hpp"
#include "addvol/error.hpp"
#include "addvol/geometry.hpp"
#include "addvol/morphisms.hpp"
#include "addvol/numeric.hpp"
#include "addvol/reduction.hpp"
#include "addvol/relations.hpp"
#include "addvol/set1d.hpp"
#include "addvol/set2d.hpp"

namespace addvol {

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted

// Integers that fit in 64 bits serialize as numbers, larger ones as decimal
// strings; parsers accept both.
inline Json int_to_json(const Int& v) {
  if (fits_int64(v)) return Json(to_int64(v));
  return Json(to_string(v));
}

inline Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    auto v = parse_int(j.get<std::string>());
    if (v) return *v;
  }
  fail(Errc::parse_error, "expected an integer, got " + j.dump());
}

inline Json rat_to_json(const Rat& v) {
  if (boost::multiprecision::denominator(v) == 1)
    return int_to_json(boost::multiprecision::numerator(v));
  return Json(to_string(v));
}

inline Json to_json(const Set1D& a) {
  Json arr = Json::array();
  for (const Int& x : a.elements()) arr.push_back(int_to_json(x));
  return arr;
}

inline Json to_json(const Point& p) {
  return Json::array({int_to_json(p.x), int_to_json(p.y)});
}

inline Json to_json(const Set2D& a) {
  Json arr = Json::array();
  for (const Point& p : a.points()) arr.push_back(to_json(p));
  return arr;
}

inline Json to_json(const BoundingBox& b) {
  return Json{{"a1", int_to_json(b.a1)},
              {"a2", int_to_json(b.a2)},
              {"h1", int_to_json(b.h1)},
              {"h2", int_to_json(b.h2)}};
}

inline Json to_json(const RatAffineMap2D& m) {
  return Json{{"matrix", Json::array({rat_to_json(m.m11), rat_to_json(m.m12),
                                      rat_to_json(m.m21), rat_to_json(m.m22)})},
              {"translate", Json::array({rat_to_json(m.t1), rat_to_json(m.t2)})}};
}

inline Json to_json(const StripForm& s) {
  return Json{{"set", to_json(s.set)},
              {"box", to_json(s.box)},
              {"transform", to_json(s.transform)},
              {"reflected_x", s.reflected_x},
              {"reflected_y", s.reflected_y}};
}

inline Json to_json(const RelationRow& row) {
  Json arr = Json::array();
  for (const Int& v : row) arr.push_back(int_to_json(v));
  return arr;
}

inline Json to_json(const RelationMatrix& m) {
  Json rows = Json::array();
  for (const RelationRow& r : m.rows) rows.push_back(to_json(r));
  return Json{{"k", m.k}, {"lambda", m.lambda}, {"rows", rows}};
}

template <class S, class D>
Json pairing_to_json(const Pairing<S, D>& phi) {
  Json arr = Json::array();
  for (const auto& [s, d] : phi.pairs) {
    Json side_s, side_d;
    if constexpr (std::is_same_v<S, Int>)
      side_s = int_to_json(s);
    else
      side_s = to_json(s);
    if constexpr (std::is_same_v<D, Int>)
      side_d = int_to_json(d);
    else
      side_d = to_json(d);
    arr.push_back(Json::array({side_s, side_d}));
  }
  return arr;
}

inline Json to_json(const ReductionReport& r) {
  Json gaps = Json::array();
  for (const Int& g : r.gap_values) gaps.push_back(int_to_json(g));
  return Json{{"ref", "dimension-reduction certificate"},
              {"input", to_json(r.input)},
              {"strip", to_json(r.strip)},
              {"ell", Json::array({1, int_to_json(r.spec.m)})},
              {"output", to_json(r.output)},
              {"pairing", pairing_to_json(r.pairing)},
              {"t_before", r.t_before},
              {"t_after", r.t_after},
              {"v_before", int_to_json(r.v_before)},
              {"v_after", int_to_json(r.v_after)},
              {"dim_before", r.dim_before},
              {"dim_after", r.dim_after},
              {"lambda_before", r.lambda_before},
              {"lambda_after", r.lambda_after},
              {"new_relation", to_json(r.new_relation)},
              {"gap_values", gaps},
              {"v_strict", r.v_strict},
              {"v_growth_certified", r.v_growth_certified},
              {"homomorphism", r.homomorphism},
              {"isomorphism", r.isomorphism},
              {"used_fallback", r.used_fallback}};
}

// ---------------------------------------------------------------------------
// Set literals
// ---------------------------------------------------------------------------
// 1D: comma-separated integers, "0,1,3". 2D: JSON array of 2-element integer
// arrays, "[[0,0],[1,2]]". The opening bracket decides the kind.

using SetLiteral = std::variant<Set1D, Set2D>;

inline Set1D parse_set1d(const std::string& text) {
  std::vector<Int> elems;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(pos, comma - pos);
    const std::size_t tok_at = pos;
    // trim
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
      token.erase(token.begin());
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
      token.pop_back();
    auto v = parse_int(token);
    if (!v)
      fail(Errc::parse_error, "bad integer at position " +
                                  std::to_string(tok_at) + " in '" + text + "'");
    elems.push_back(*v);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return Set1D(std::move(elems));  // throws DUPLICATE_ELEMENT on repeats
}

inline Set2D parse_set2d(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_array())
    fail(Errc::parse_error, "expected a JSON array of [x,y] pairs");
  std::vector<Point> pts;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2)
      fail(Errc::parse_error, "each point must be a 2-element array");
    pts.push_back({int_from_json(e[0]), int_from_json(e[1])});
  }
  return Set2D(std::move(pts));
}

inline SetLiteral parse_set_literal(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  if (i == text.size()) fail(Errc::parse_error, "empty set literal");
  if (text[i] == '[') return parse_set2d(text);
  return parse_set1d(text);
}

// PairingMap literal: JSON array of [source, target] pairs; each side an
// integer (1D) or 2-array (2D).
inline Int side_as_int(const Json& j) { return int_from_json(j); }
inline Point side_as_point(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    fail(Errc::parse_error, "expected a 2-element array point");
  return {int_from_json(j[0]), int_from_json(j[1])};
}

template <class S, class D>
Pairing<S, D> parse_pairing(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_array())
    fail(Errc::parse_error, "expected a JSON array of [source,target] pairs");
  Pairing<S, D> phi;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2)
      fail(Errc::parse_error, "each map entry must be [source, target]");
    S s;
    D d;
    if constexpr (std::is_same_v<S, Int>)
      s = side_as_int(e[0]);
    else
      s = side_as_point(e[0]);
    if constexpr (std::is_same_v<D, Int>)
      d = side_as_int(e[1]);
    else
      d = side_as_point(e[1]);
    phi.pairs.push_back({s, d});
  }
  return phi;
}

}  // namespace addvol
