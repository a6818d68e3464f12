#pragma once

// JSON algebra files. Coefficients are exact strings ("3", "-1/2"); zero entries are
// omitted. Tables list nonzero products only and are filled by the kind's symmetry:
// Lie tables by antisymmetry, pair and triple tables in the outer slots, Jordan
// algebra tables by commutativity. An explicitly listed mirror entry wins over the fill,
// so inconsistent files reach the validators instead of being silently repaired.

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "gradlie/assoc.hpp"
#include "gradlie/jordan.hpp"

namespace gradlie::io {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------- primitives

inline FieldTag parse_field(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return FieldTag::rationals();
  if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_unsigned()) {
    const auto p = j["Fp"].get<std::uint64_t>();
    if (p > 0xFFFFFFFFull) throw ParseError("scalars: prime too large");
    return FieldTag::prime(static_cast<std::uint32_t>(p));
  }
  throw ParseError("scalars: expected \"Q\" or {\"Fp\": p}");
}

inline Json field_json(FieldTag f) {
  if (f.is_rational()) return "Q";
  return Json{{"Fp", f.characteristic}};
}

template <ExactField K>
K parse_scalar(FieldTag f, const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return K::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return K::from_int(f, j.get<long long>());
  } catch (const DivisionByZero& e) {
    throw ParseError(where + ": coefficient " + j.dump() + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(where + ": coefficient " + j.dump() + ": " + e.what());
  }
  throw ParseError(where + ": coefficient must be a string like \"-3/4\" or an integer");
}

template <ExactField K>
Json scalar_json(const K& c) {
  return c.str();
}

inline std::size_t parse_index(const Json& j, std::size_t bound, const std::string& where) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() >= bound)
    throw ParseError(where + ": index " + j.dump() + " out of range [0, " + std::to_string(bound) + ")");
  return j.get<std::size_t>();
}

inline const Json& require(const Json& j, const char* key, const std::string& where = "") {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + (where.empty() ? "" : ".") + key + ": missing");
  return j[key];
}

inline std::vector<std::string> parse_names(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a list of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw ParseError(where + "[" + std::to_string(i) + "]: expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

/// [[k, "c"], ...] as a dense vector of length n.
template <ExactField K>
Vec<K> parse_combination(FieldTag f, const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected [[k, \"c\"], ...]");
  auto v = zero_vector<K>(f, n);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const auto w = where + "[" + std::to_string(t) + "]";
    if (!j[t].is_array() || j[t].size() != 2) throw ParseError(w + ": expected [k, \"c\"]");
    v[parse_index(j[t][0], n, w)] += parse_scalar<K>(f, j[t][1], w);
  }
  return v;
}

template <ExactField K>
Json combination_json(const Vec<K>& v) {
  Json out = Json::array();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.push_back(Json::array({k, scalar_json(v[k])}));
  return out;
}

template <ExactField K>
Vec<K> parse_vector(FieldTag f, const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    throw ParseError(where + ": expected a coordinate vector of length " + std::to_string(n));
  Vec<K> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(parse_scalar<K>(f, j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

template <ExactField K>
Json vector_json(const Vec<K>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(scalar_json(c));
  return out;
}

template <ExactField K>
Json matrix_json(const Matrix<K>& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_json(m.row(r)));
  return out;
}

template <ExactField K>
Subspace<K> parse_subspace(FieldTag f, const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a list of coordinate vectors");
  std::vector<Vec<K>> gens;
  for (std::size_t i = 0; i < j.size(); ++i) gens.push_back(parse_vector<K>(f, j[i], n, where + "[" + std::to_string(i) + "]"));
  return Subspace<K>::span(f, n, std::move(gens));
}

template <ExactField K>
Json subspace_json(const Subspace<K>& s) {
  Json out = Json::array();
  for (const auto& b : s.basis()) out.push_back(vector_json(b));
  return out;
}

inline GradingGroup parse_group(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "trivial") return GradingGroup::trivial();
    if (s == "Z") return GradingGroup::integers();
  }
  if (j.is_object() && j.contains("Zn") && j["Zn"].is_number_integer()) return GradingGroup::cyclic(j["Zn"].get<std::int64_t>());
  throw ParseError("grading.group: expected \"trivial\", \"Z\" or {\"Zn\": n}");
}

inline Json group_json(const GradingGroup& g) {
  switch (g.kind()) {
    case GradingGroup::Kind::Trivial: return "trivial";
    case GradingGroup::Kind::Integers: return "Z";
    case GradingGroup::Kind::Cyclic: return Json{{"Zn", g.order()}};
  }
  return "trivial";
}

struct Grading {
  GradingGroup group;
  std::vector<std::int64_t> degrees;
};

inline Grading parse_grading(const Json& doc, std::size_t n) {
  if (!doc.contains("grading")) return {GradingGroup::trivial(), std::vector<std::int64_t>(n, 0)};
  const auto& g = doc["grading"];
  Grading out{parse_group(require(g, "group", "grading")), {}};
  const auto& d = require(g, "degrees", "grading");
  if (!d.is_array() || d.size() != n) throw ParseError("grading.degrees: expected " + std::to_string(n) + " integers");
  for (std::size_t i = 0; i < n; ++i) {
    if (!d[i].is_number_integer()) throw ParseError("grading.degrees[" + std::to_string(i) + "]: expected an integer");
    out.degrees.push_back(d[i].get<std::int64_t>());
  }
  return out;
}

inline Json grading_json(const GradingGroup& g, const std::vector<std::int64_t>& degrees) {
  return Json{{"group", group_json(g)}, {"degrees", degrees}};
}

// ---------------------------------------------------------------- tables

namespace detail {

/// Entries [i0, ..., i_{arity-1}, combination] keyed by the index tuple; duplicates add up.
template <ExactField K>
std::map<std::vector<std::size_t>, Vec<K>> parse_entries(FieldTag f, const Json& j, std::vector<std::size_t> bounds,
                                                         std::size_t out_dim, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a list of entries");
  std::map<std::vector<std::size_t>, Vec<K>> out;
  const std::size_t arity = bounds.size();
  for (std::size_t t = 0; t < j.size(); ++t) {
    const auto w = where + "[" + std::to_string(t) + "]";
    if (!j[t].is_array() || j[t].size() != arity + 1) throw ParseError(w + ": expected " + std::to_string(arity) + " indices and a combination");
    std::vector<std::size_t> key;
    for (std::size_t a = 0; a < arity; ++a) key.push_back(parse_index(j[t][a], bounds[a], w));
    auto v = parse_combination<K>(f, j[t][arity], out_dim, w);
    auto [it, fresh] = out.try_emplace(key, v);
    if (!fresh) it->second = add(std::move(it->second), v);
  }
  return out;
}

/// Adds mirror(key) -> sign * value wherever the mirror entry is absent.
template <ExactField K>
void fill_mirror(std::map<std::vector<std::size_t>, Vec<K>>& entries,
                 const std::function<std::vector<std::size_t>(const std::vector<std::size_t>&)>& mirror, const K& sign) {
  std::vector<std::pair<std::vector<std::size_t>, Vec<K>>> add_list;
  for (const auto& [key, v] : entries) {
    auto m = mirror(key);
    if (m != key && !entries.contains(m)) add_list.emplace_back(m, scaled(v, sign));
  }
  for (auto& [k, v] : add_list) entries.emplace(std::move(k), std::move(v));
}

template <ExactField K>
std::vector<std::pair<std::size_t, K>> sparse(const Vec<K>& v) {
  std::vector<std::pair<std::size_t, K>> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.emplace_back(k, v[k]);
  return out;
}

template <ExactField K>
Vec<K> dense(FieldTag f, const std::vector<std::pair<std::size_t, K>>& cell, std::size_t n) {
  auto v = zero_vector<K>(f, n);
  for (const auto& [k, c] : cell) v[k] += c;
  return v;
}

inline std::vector<std::size_t> swap2(const std::vector<std::size_t>& k) { return {k[1], k[0]}; }
inline std::vector<std::size_t> swap_outer(const std::vector<std::size_t>& k) { return {k[2], k[1], k[0]}; }

template <ExactField K>
SparseTable<K> bilinear_table(FieldTag f, const Json& j, std::size_t n, bool fill, const K& sign, const std::string& where) {
  auto entries = parse_entries<K>(f, j, {n, n}, n, where);
  if (fill) fill_mirror<K>(entries, swap2, sign);
  SparseTable<K> t(n * n);
  for (const auto& [key, v] : entries) t[key[0] * n + key[1]] = sparse(v);
  return t;
}

/// Emits (i, j) for i < j only when the table matches its mirror image under `sign`, and
/// every entry otherwise.
template <ExactField K>
Json bilinear_json(FieldTag f, const SparseTable<K>& t, std::size_t n, std::optional<K> sign) {
  bool mirrored = sign.has_value();
  for (std::size_t i = 0; i < n && mirrored; ++i)
    for (std::size_t j = 0; j < n && mirrored; ++j)
      if (dense(f, t[i * n + j], n) != scaled(dense(f, t[j * n + i], n), *sign)) mirrored = false;
  Json out = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = mirrored ? i : 0; j < n; ++j) {
      auto v = dense(f, t[i * n + j], n);
      if (!is_zero_vector(v)) out.push_back(Json::array({i, j, combination_json(v)}));
    }
  return out;
}

template <ExactField K>
TripleTable<K> trilinear_table(FieldTag f, const Json& j, std::size_t d, std::size_t e, const std::string& where) {
  auto entries = parse_entries<K>(f, j, {d, e, d}, d, where);
  fill_mirror<K>(entries, swap_outer, one_of<K>(f));
  TripleTable<K> t(d * e * d);
  for (const auto& [key, v] : entries) t[(key[0] * e + key[1]) * d + key[2]] = sparse(v);
  return t;
}

template <ExactField K>
Json trilinear_json(FieldTag f, const TripleTable<K>& t, std::size_t d, std::size_t e) {
  Json out = Json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < e; ++j)
      for (std::size_t l = i; l < d; ++l) {
        auto v = dense(f, t[(i * e + j) * d + l], d);
        if (!is_zero_vector(v)) out.push_back(Json::array({i, j, l, combination_json(v)}));
      }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------- documents

/// A parsed file whose payload is built on demand for the field it names.
struct Document {
  Json json;
  std::string kind;
  FieldTag field;
};

inline Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level: expected an object");
  const auto& k = require(j, "kind");
  if (!k.is_string()) throw ParseError("kind: expected a string");
  Document d{j, k.get<std::string>(), parse_field(require(j, "scalars"))};
  static const std::array<const char*, 5> kinds = {"lie", "assoc", "jordan_pair", "jordan_triple", "jordan_algebra"};
  if (std::find_if(kinds.begin(), kinds.end(), [&](const char* s) { return d.kind == s; }) == kinds.end())
    throw ParseError("kind: unknown kind \"" + d.kind + "\"");
  if (j.contains("subalgebra") && j.contains("subpair")) throw ParseError("only one of subalgebra / subpair may be present");
  return d;
}

inline Document load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

/// Calls fn.template operator()<K>(field) with K = Rational or Fp.
template <class F>
decltype(auto) with_field(FieldTag f, F&& fn) {
  if (f.is_rational()) return fn.template operator()<Rational>(f);
  return fn.template operator()<Fp>(f);
}

inline void require_kind(const Document& d, std::string_view kind) {
  if (d.kind != kind) throw ParseError("kind: expected \"" + std::string(kind) + "\", got \"" + d.kind + "\"");
}

template <ExactField K>
LieAlgebra<K> parse_lie(const Document& d) {
  require_kind(d, "lie");
  auto names = parse_names(require(d.json, "basis"), "basis");
  const auto n = names.size();
  auto g = parse_grading(d.json, n);
  auto t = detail::bilinear_table<K>(d.field, require(d.json, "table"), n, true, -one_of<K>(d.field), "table");
  return LieAlgebra<K>(d.field, std::move(names), std::move(t), g.group, std::move(g.degrees));
}

template <ExactField K>
std::optional<Subspace<K>> parse_subalgebra(const Document& d, std::size_t n) {
  if (!d.json.contains("subalgebra")) return std::nullopt;
  return parse_subspace<K>(d.field, d.json["subalgebra"], n, "subalgebra");
}

template <ExactField K>
Json lie_json(const LieAlgebra<K>& L, const std::optional<Subspace<K>>& sub = std::nullopt) {
  Json j;
  j["kind"] = "lie";
  j["scalars"] = field_json(L.field());
  j["basis"] = L.names();
  j["grading"] = grading_json(L.group(), L.degrees());
  j["table"] = detail::bilinear_json<K>(L.field(), L.table(), L.dim(), -one_of<K>(L.field()));
  if (sub) j["subalgebra"] = subspace_json(*sub);
  return j;
}

/// The involution is stored by rows: row i holds the coordinates of b_i*.
template <ExactField K>
AssocAlgebra<K> parse_assoc(const Document& d) {
  require_kind(d, "assoc");
  auto names = parse_names(require(d.json, "basis"), "basis");
  const auto n = names.size();
  auto g = parse_grading(d.json, n);
  auto t = detail::bilinear_table<K>(d.field, require(d.json, "table"), n, false, one_of<K>(d.field), "table");
  std::optional<Matrix<K>> star;
  if (d.json.contains("involution")) {
    const auto& m = d.json["involution"];
    if (!m.is_array() || m.size() != n) throw ParseError("involution: expected " + std::to_string(n) + " rows");
    std::vector<Vec<K>> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(parse_vector<K>(d.field, m[i], n, "involution[" + std::to_string(i) + "]"));
    star = Matrix<K>::from_columns(d.field, n, rows);
  }
  return AssocAlgebra<K>(d.field, std::move(names), std::move(t), g.group, std::move(g.degrees), std::move(star));
}

template <ExactField K>
Json assoc_json(const AssocAlgebra<K>& A, const std::optional<Subspace<K>>& sub = std::nullopt) {
  Json j;
  j["kind"] = "assoc";
  j["scalars"] = field_json(A.field());
  j["basis"] = A.names();
  j["grading"] = grading_json(A.group(), A.degrees());
  j["table"] = detail::bilinear_json<K>(A.field(), A.table(), A.dim(), std::nullopt);
  if (A.has_involution()) j["involution"] = matrix_json(A.involution().transpose());
  if (sub) j["subalgebra"] = subspace_json(*sub);
  return j;
}

template <ExactField K>
JordanPair<K> parse_pair(const Document& d) {
  require_kind(d, "jordan_pair");
  const auto& b = require(d.json, "basis");
  if (!b.is_array() || b.size() != 2) throw ParseError("basis: a pair needs two name lists");
  std::array<std::vector<std::string>, 2> names = {parse_names(b[0], "basis[0]"), parse_names(b[1], "basis[1]")};
  const auto& t = require(d.json, "table");
  const std::size_t p = names[0].size(), m = names[1].size();
  std::array<TripleTable<K>, 2> tables = {detail::trilinear_table<K>(d.field, require(t, "plus", "table"), p, m, "table.plus"),
                                          detail::trilinear_table<K>(d.field, require(t, "minus", "table"), m, p, "table.minus")};
  return JordanPair<K>(d.field, std::move(names), std::move(tables));
}

template <ExactField K>
std::optional<SubPair<K>> parse_subpair(const Document& d, const JordanPair<K>& V) {
  if (!d.json.contains("subpair")) return std::nullopt;
  const auto& s = d.json["subpair"];
  return SubPair<K>{{parse_subspace<K>(d.field, require(s, "plus", "subpair"), V.dim(Sign::Plus), "subpair.plus"),
                     parse_subspace<K>(d.field, require(s, "minus", "subpair"), V.dim(Sign::Minus), "subpair.minus")}};
}

template <ExactField K>
Json pair_json(const JordanPair<K>& V, const std::optional<SubPair<K>>& sub = std::nullopt) {
  Json j;
  j["kind"] = "jordan_pair";
  j["scalars"] = field_json(V.field());
  j["basis"] = Json::array({V.names(Sign::Plus), V.names(Sign::Minus)});
  Json t;
  t["plus"] = detail::trilinear_json<K>(V.field(), V.table(Sign::Plus), V.dim(Sign::Plus), V.dim(Sign::Minus));
  t["minus"] = detail::trilinear_json<K>(V.field(), V.table(Sign::Minus), V.dim(Sign::Minus), V.dim(Sign::Plus));
  j["table"] = std::move(t);
  if (sub) j["subpair"] = Json{{"plus", subspace_json((*sub)[Sign::Plus])}, {"minus", subspace_json((*sub)[Sign::Minus])}};
  return j;
}

template <ExactField K>
JordanTriple<K> parse_triple(const Document& d) {
  require_kind(d, "jordan_triple");
  auto names = parse_names(require(d.json, "basis"), "basis");
  const auto n = names.size();
  auto t = detail::trilinear_table<K>(d.field, require(d.json, "table"), n, n, "table");
  return JordanTriple<K>(d.field, std::move(names), std::move(t));
}

template <ExactField K>
Json triple_json(const JordanTriple<K>& T) {
  Json j;
  j["kind"] = "jordan_triple";
  j["scalars"] = field_json(T.field());
  j["basis"] = T.names();
  j["table"] = detail::trilinear_json<K>(T.field(), T.table(), T.dim(), T.dim());
  return j;
}

template <ExactField K>
JordanAlgebra<K> parse_jordan_algebra(const Document& d) {
  require_kind(d, "jordan_algebra");
  auto names = parse_names(require(d.json, "basis"), "basis");
  const auto n = names.size();
  auto t = detail::bilinear_table<K>(d.field, require(d.json, "table"), n, true, one_of<K>(d.field), "table");
  return JordanAlgebra<K>(d.field, std::move(names), std::move(t));
}

template <ExactField K>
Json jordan_algebra_json(const JordanAlgebra<K>& J) {
  Json j;
  j["kind"] = "jordan_algebra";
  j["scalars"] = field_json(J.field());
  j["basis"] = J.names();
  j["table"] = detail::bilinear_json<K>(J.field(), J.table(), J.dim(), one_of<K>(J.field()));
  return j;
}

// ---------------------------------------------------------------- formatting

namespace detail {

inline void format_into(std::string& out, const Json& j, std::size_t indent) {
  constexpr std::size_t kWidth = 88;
  const std::string flat = j.dump();
  if (flat.size() + indent <= kWidth || !j.is_structured() || j.empty()) {
    out += flat;
    return;
  }
  const std::string pad(indent + 2, ' ');
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    out += pad;
    if (obj) out += Json(it.key()).dump() + ": ";
    format_into(out, *it, indent + 2);
    out += i + 1 < j.size() ? ",\n" : "\n";
  }
  out += std::string(indent, ' ') + (obj ? "}" : "]");
}

}  // namespace detail

/// Deterministic layout: short values on one line, long ones broken per element.
inline std::string format(const Json& j) {
  std::string out;
  detail::format_into(out, j, 0);
  return out + "\n";
}

}  // namespace gradlie::io
