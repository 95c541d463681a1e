// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cjl/io/json_io.hpp"

#include "cjl/algebra/errors.hpp"
#include "cjl/algebra/parse.hpp"

namespace cjl {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError((path.empty() ? "/" : path) + ": " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing key \"" + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

long integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

std::size_t count(const Json& j, const std::string& path) {
  long v = integer(j, path);
  if (v < 0) fail(path, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

std::string text(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

template <typename F>
auto wrap(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
}

Polynomial poly_from_json(const Ring& ring, const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Polynomial::constant(ring, Rational(j.get<long>()));
  return wrap(path, [&] { return parse_polynomial(ring, text(j, path)); });
}

Field field_from_json(const Json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("field")) return Field::rationals();
  std::string name = text(j["field"], path + "/field");
  if (name == "Q") return Field::rationals();
  if (name == "Fp") {
    long p = integer(member(j, "p", path), path + "/p");
    if (p < 2) fail(path + "/p", "characteristic must be a prime");
    return wrap(path + "/p", [&] { return Field::prime(static_cast<unsigned long>(p)); });
  }
  fail(path + "/field", "unknown field \"" + name + "\"");
}

void field_to_json(const Field& f, Json& out) {
  if (f.is_rational()) return;
  out["field"] = "Fp";
  out["p"] = f.characteristic();
}

// {"degrees":[lo,hi],"dims":[...],"d":[...],"labels":[...]?}
struct SpaceData {
  GradedSpace space;
  std::vector<Matrix> d;
};

SpaceData space_from_json(const Field& field, const Json& j, const std::string& path) {
  const Json& deg = array_at(member(j, "degrees", path), path + "/degrees");
  if (deg.size() != 2) fail(path + "/degrees", "expected [lo, hi]");
  long lo = integer(deg[0], path + "/degrees/0");
  long hi = integer(deg[1], path + "/degrees/1");
  if (hi < lo) fail(path + "/degrees", "hi < lo");
  const Json& dims_j = array_at(member(j, "dims", path), path + "/dims");
  if (dims_j.size() != static_cast<std::size_t>(hi - lo + 1)) fail(path + "/dims", "expected hi - lo + 1 entries");
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k < dims_j.size(); ++k) dims.push_back(count(dims_j[k], path + "/dims/" + std::to_string(k)));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& lj = array_at(j["labels"], path + "/labels");
    for (std::size_t k = 0; k < lj.size(); ++k) labels.push_back(text(lj[k], path + "/labels/" + std::to_string(k)));
  }
  SpaceData out{wrap(path, [&] { return GradedSpace(static_cast<int>(lo), dims, labels); }), {}};
  if (j.contains("d")) {
    const Json& dj = array_at(j["d"], path + "/d");
    if (!dj.empty()) {
      if (dj.size() != dims.size() - 1) fail(path + "/d", "expected hi - lo matrices");
      for (std::size_t k = 0; k < dj.size(); ++k) {
        out.d.push_back(matrix_from_json(field, dj[k], dims[k + 1], dims[k], path + "/d/" + std::to_string(k)));
      }
    }
  }
  return out;
}

Json space_to_json(const GradedSpace& s, const std::vector<Matrix>& d) {
  Json out;
  out["degrees"] = {s.lo(), s.hi()};
  out["dims"] = s.dims();
  out["labels"] = s.labels();
  Json dj = Json::array();
  for (const auto& m : d) dj.push_back(matrix_to_json(m));
  out["d"] = dj;
  return out;
}

// Entries {"i","a","j","b","out"}: x = (i, a) in `left`, y = (j, b) in
// `right`, out dense in right's degree i + j.
StructureConstants table_from_json(const Field& field, const Json& j, const GradedSpace& left,
                                   const GradedSpace& right, const std::string& path) {
  StructureConstants sc;
  const Json& arr = array_at(j, path);
  for (std::size_t e = 0; e < arr.size(); ++e) {
    const std::string p = path + "/" + std::to_string(e);
    const Json& entry = arr[e];
    int i = static_cast<int>(integer(member(entry, "i", p), p + "/i"));
    int jd = static_cast<int>(integer(member(entry, "j", p), p + "/j"));
    std::size_t a = count(member(entry, "a", p), p + "/a");
    std::size_t b = count(member(entry, "b", p), p + "/b");
    if (a >= left.dim(i)) fail(p + "/a", "index out of range in degree " + std::to_string(i));
    if (b >= right.dim(jd)) fail(p + "/b", "index out of range in degree " + std::to_string(jd));
    const Json& out = array_at(member(entry, "out", p), p + "/out");
    const int od = i + jd;
    Vector v;
    for (std::size_t k = 0; k < out.size(); ++k) {
      v.push_back(field.normalize(rational_from_json(out[k], p + "/out/" + std::to_string(k))));
    }
    bool zero = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
    if (od < right.lo() || od > right.hi()) {
      if (!zero) fail(p + "/out", "nonzero output outside the degree window");
      continue;
    }
    if (v.size() != right.dim(od)) fail(p + "/out", "expected " + std::to_string(right.dim(od)) + " coefficients");
    SparseVec sv;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] != 0) sv.emplace_back(right.global(od, k), v[k]);
    }
    auto key = std::make_pair(left.global(i, a), right.global(jd, b));
    if (sc.count(key)) fail(p, "duplicate entry");
    if (!sv.empty()) sc[key] = std::move(sv);
  }
  return sc;
}

Json table_to_json(const StructureConstants& sc, const GradedSpace& left, const GradedSpace& right, bool upper_only) {
  Json arr = Json::array();
  for (const auto& [xy, val] : sc) {
    if (upper_only && xy.first > xy.second) continue;
    const int i = left.degree_of(xy.first);
    const int j = right.degree_of(xy.second);
    Json out = Json::array();
    const int od = i + j;
    std::vector<Rational> dense(right.dim(od), Rational(0));
    for (const auto& [k, c] : val) dense[right.local_of(k)] = c;
    for (const auto& c : dense) out.push_back(rational_to_json(c));
    arr.push_back({{"i", i}, {"a", left.local_of(xy.first)}, {"j", j}, {"b", right.local_of(xy.second)}, {"out", out}});
  }
  return arr;
}

}  // namespace

Json parse_json(const std::string& input) {
  try {
    return Json::parse(input);
  } catch (const Json::parse_error& e) {
    throw ValidationError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json rational_to_json(const Rational& r) { return r.get_str(); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return wrap(path, [&] { return parse_rational(text(j, path)); });
}

Json ring_to_json(const Ring& ring) {
  Json out;
  out["field"] = ring->field().is_rational() ? "Q" : "Fp";
  if (!ring->field().is_rational()) out["p"] = ring->field().characteristic();
  out["vars"] = ring->variables();
  out["order"] = order_name(ring->order());
  if (ring->has_quotient()) {
    Json q = Json::array();
    for (const auto& g : ring->quotient_basis()) q.push_back(g.to_string());
    out["quotient"] = q;
  }
  return out;
}

Ring ring_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a ring object");
  Field field = field_from_json(j, path);
  std::vector<std::string> vars;
  if (j.contains("vars")) {
    const Json& v = array_at(j["vars"], path + "/vars");
    for (std::size_t k = 0; k < v.size(); ++k) vars.push_back(text(v[k], path + "/vars/" + std::to_string(k)));
  }
  MonomialOrder order = MonomialOrder::DegRevLex;
  if (j.contains("order")) order = wrap(path + "/order", [&] { return parse_order(text(j["order"], path + "/order")); });
  Ring base = wrap(path + "/vars", [&] { return RingContext::make(field, vars, order); });
  if (!j.contains("quotient")) return base;
  const Json& q = array_at(j["quotient"], path + "/quotient");
  std::vector<Polynomial> rel;
  for (std::size_t k = 0; k < q.size(); ++k) rel.push_back(poly_from_json(base, q[k], path + "/quotient/" + std::to_string(k)));
  return RingContext::quotient(base, rel);
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Matrix matrix_from_json(const Field& field, const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  const Json& arr = array_at(j, path);
  if (arr.size() != rows) fail(path, "expected " + std::to_string(rows) + " rows");
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "/" + std::to_string(r);
    const Json& row = array_at(arr[r], rp);
    if (row.size() != cols) fail(rp, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.normalize(rational_from_json(row[c], rp + "/" + std::to_string(c)));
  }
  return m;
}

Json poly_matrix_to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

Json complex_to_json(const FreeComplex& e) {
  Json out;
  out["ring"] = ring_to_json(e.ring());
  out["lo"] = e.lo();
  out["hi"] = e.hi();
  out["ranks"] = e.ranks();
  Json diffs = Json::array();
  for (const auto& d : e.diffs()) diffs.push_back(poly_matrix_to_json(d));
  out["diffs"] = diffs;
  return out;
}

FreeComplex complex_from_json(const Json& j) {
  Ring ring = ring_from_json(member(j, "ring", ""), "/ring");
  long lo = integer(member(j, "lo", ""), "/lo");
  long hi = integer(member(j, "hi", ""), "/hi");
  if (hi < lo) fail("/hi", "hi < lo");
  const Json& rj = array_at(member(j, "ranks", ""), "/ranks");
  if (rj.size() != static_cast<std::size_t>(hi - lo + 1)) fail("/ranks", "expected hi - lo + 1 ranks");
  std::vector<std::size_t> ranks;
  for (std::size_t k = 0; k < rj.size(); ++k) ranks.push_back(count(rj[k], "/ranks/" + std::to_string(k)));
  const Json& dj = array_at(member(j, "diffs", ""), "/diffs");
  if (dj.size() != ranks.size() - 1) fail("/diffs", "expected hi - lo matrices");
  std::vector<PolyMatrix> diffs;
  for (std::size_t k = 0; k < dj.size(); ++k) {
    const std::string p = "/diffs/" + std::to_string(k);
    const Json& rows = array_at(dj[k], p);
    if (rows.size() != ranks[k + 1]) fail(p, "expected " + std::to_string(ranks[k + 1]) + " rows");
    PolyMatrix m(ring, ranks[k + 1], ranks[k]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::string rp = p + "/" + std::to_string(r);
      const Json& row = array_at(rows[r], rp);
      if (row.size() != ranks[k]) fail(rp, "expected " + std::to_string(ranks[k]) + " entries");
      for (std::size_t c = 0; c < row.size(); ++c) m(r, c) = poly_from_json(ring, row[c], rp + "/" + std::to_string(c));
    }
    diffs.push_back(std::move(m));
  }
  return wrap("/diffs", [&] { return FreeComplex(ring, static_cast<int>(lo), ranks, diffs); });
}

Json pair_to_json(const DglaPair& p) {
  Json out;
  field_to_json(p.field(), out);
  const Dgla& c = p.lie();
  Json lie = space_to_json(c.space(), c.d());
  lie["bracket"] = table_to_json(c.bracket_table(), c.space(), c.space(), true);
  Json mod = space_to_json(p.module(), p.dm());
  mod["action"] = table_to_json(p.action_table(), c.space(), p.module(), false);
  out["lie"] = lie;
  out["module"] = mod;
  return out;
}

DglaPair pair_from_json(const Json& j) {
  Field field = field_from_json(j, "");
  const Json& lj = member(j, "lie", "");
  const Json& mj = member(j, "module", "");
  SpaceData lie = space_from_json(field, lj, "/lie");
  SpaceData mod = space_from_json(field, mj, "/module");
  StructureConstants bracket;
  if (lj.contains("bracket")) bracket = table_from_json(field, lj["bracket"], lie.space, lie.space, "/lie/bracket");
  bracket = complete_skew(lie.space, field, bracket);
  StructureConstants action;
  if (mj.contains("action")) action = table_from_json(field, mj["action"], lie.space, mod.space, "/module/action");
  Dgla c = wrap("/lie", [&] { return Dgla(field, lie.space, lie.d, bracket); });
  return wrap("/module", [&] { return DglaPair(std::move(c), mod.space, mod.d, action); });
}

Json augmentation_to_json(const Augmentation& aug) {
  GradedSpace g(0, {aug.g_dim});
  return {{"g_dim", aug.g_dim}, {"eps0", matrix_to_json(aug.eps0)}, {"g_bracket", table_to_json(aug.g_bracket, g, g, true)}};
}

Augmentation augmentation_from_json(const Json& j, const Field& field) {
  Augmentation aug;
  aug.g_dim = count(member(j, "g_dim", ""), "/g_dim");
  const Json& e = array_at(member(j, "eps0", ""), "/eps0");
  std::size_t cols = e.empty() ? 0 : array_at(e[0], "/eps0/0").size();
  aug.eps0 = matrix_from_json(field, e, aug.g_dim, cols, "/eps0");
  GradedSpace g(0, {aug.g_dim});
  if (j.contains("g_bracket")) {
    aug.g_bracket = complete_skew(g, field, table_from_json(field, j["g_bracket"], g, g, "/g_bracket"));
  }
  return aug;
}

Json arrangement_to_json(const Arrangement& arr) { return {{"normals", matrix_to_json(arr.normals)}}; }

Arrangement arrangement_from_json(const Json& j) {
  const Json& n = array_at(member(j, "normals", ""), "/normals");
  if (n.empty()) fail("/normals", "no hyperplanes");
  std::size_t cols = array_at(n[0], "/normals/0").size();
  Arrangement arr;
  arr.normals = matrix_from_json(Field::rationals(), n, n.size(), cols, "/normals");
  if (j.contains("offsets")) {
    const Json& o = array_at(j["offsets"], "/offsets");
    for (std::size_t k = 0; k < o.size(); ++k) {
      if (rational_from_json(o[k], "/offsets/" + std::to_string(k)) != 0) {
        fail("/offsets/" + std::to_string(k), "arrangement is not central");
      }
    }
  }
  return arr;
}

ArtinLocalAlgebra artin_from_json(const Json& j) {
  Ring ring = ring_from_json(j, "");
  return wrap("", [&] { return make_artin(ring); });
}

Elem elem_from_json(const Json& j, const GradedSpace& space, int degree, const ArtinLocalAlgebra& a,
                    const std::string& key) {
  const Json* arr = &j;
  std::string path;
  if (j.is_object()) {
    arr = &member(j, key, "");
    path = "/" + key;
  }
  array_at(*arr, path);
  const Ring& ring = a.ring();
  Elem out = zero_elem(ring, space.total());
  if (arr->size() == space.total()) {
    for (std::size_t k = 0; k < arr->size(); ++k) out[k] = poly_from_json(ring, (*arr)[k], path + "/" + std::to_string(k));
  } else if (arr->size() == space.dim(degree)) {
    for (std::size_t k = 0; k < arr->size(); ++k) {
      out[space.global(degree, k)] = poly_from_json(ring, (*arr)[k], path + "/" + std::to_string(k));
    }
  } else {
    fail(path, "expected " + std::to_string(space.dim(degree)) + " or " + std::to_string(space.total()) + " entries");
  }
  return out;
}

Json elem_to_json(const Elem& e) {
  Json out = Json::array();
  for (const auto& p : e) out.push_back(p.to_string());
  return out;
}

Json ideal_to_json(const Ideal& ideal) { return ideal.canonical_strings(); }

Json report_to_json(const ResonanceReport& r) {
  Json out;
  out["a"] = r.a;
  out["lo"] = r.ranks.lo;
  out["b"] = r.ranks.b;
  out["beta"] = r.ranks.beta;
  out["chi_a"] = r.chi_a;
  Json claims = Json::array();
  for (const auto& v : r.claims) claims.push_back({{"id", v.id}, {"holds", v.holds}, {"witness", v.witness}});
  out["claims"] = claims;
  Json chern = Json::object();
  for (const auto& [i, cs] : r.chern) {
    Json c = Json::array();
    for (const auto& x : cs.coeffs) c.push_back(rational_to_json(x));
    chern[std::to_string(i)] = c;
  }
  out["chern"] = chern;
  Json q = Json::object();
  for (const auto& [i, pc] : r.q) q[std::to_string(i)] = {{"codim", pc.codim}, {"empty", pc.empty}};
  out["q"] = q;
  out["flags"] = r.flags;
  return out;
}

}  // namespace cjl
