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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "cjl/algebra/errors.hpp"
#include "cjl/dgla/checks.hpp"
#include "cjl/io/json_io.hpp"
#include "cjl/models/models.hpp"
#include "support.hpp"

using namespace cjl;
using namespace cjl::test;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

TEST_CASE("ring round trip") {
  Ring r = qring({"x", "y"}, MonomialOrder::Lex);
  Json j = ring_to_json(r);
  CHECK(j.dump() == R"({"field":"Q","order":"lex","vars":["x","y"]})");
  Ring back = ring_from_json(j);
  CHECK(ring_to_json(back) == j);

  Json quotient = parse_json(R"({"field":"Fp","p":5,"vars":["t"],"quotient":["t^3"]})");
  Json again = ring_to_json(ring_from_json(quotient));
  CHECK(again["p"] == 5);
  CHECK(again["quotient"] == Json::array({"t^3"}));
}

TEST_CASE("complex round trip") {
  Json j = parse_json(
      R"({"ring":{"vars":["x0","x1"]},"lo":0,"hi":2,"ranks":[1,2,1],
          "diffs":[[["x0"],["x1"]],[["-x1","x0"]]]})");
  FreeComplex e = complex_from_json(j);
  CHECK(e.ranks() == std::vector<std::size_t>{1, 2, 1});
  Json dumped = complex_to_json(e);
  CHECK(complex_to_json(complex_from_json(dumped)).dump() == dumped.dump());
  CHECK(dumped["diffs"][1][0][0] == "-x1");
}

TEST_CASE("pair round trip preserves the structure") {
  std::vector<DglaPair> pairs{exterior_pair(2), exterior_pair(2, 2), surface_pair(2), nonabelian_fixture()};
  for (const auto& p : pairs) {
    Json j = pair_to_json(p);
    DglaPair back = pair_from_json(j);
    CHECK(pair_to_json(back).dump() == j.dump());
    CHECK(back.lie().space().dims() == p.lie().space().dims());
    CHECK(back.module().dims() == p.module().dims());
    CHECK(back.lie().bracket_table() == p.lie().bracket_table());
    CHECK(check_pair(back).ok());
  }
}

TEST_CASE("arrangement round trip") {
  Json j = parse_json(R"({"normals":[[1,0],[0,1],["1","1"]]})");
  Arrangement a = arrangement_from_json(j);
  CHECK(a.normals.rows() == 3);
  Json dumped = arrangement_to_json(a);
  CHECK(dumped.dump() == R"({"normals":[["1","0"],["0","1"],["1","1"]]})");
  CHECK(arrangement_to_json(arrangement_from_json(dumped)) == dumped);
  CHECK(starts_with(error_of([] { arrangement_from_json(parse_json(R"({"normals":[[1,0]],"offsets":[2]})")); }),
                    "/offsets/0"));
}

TEST_CASE("errors carry the JSON pointer of the offending value") {
  CHECK(starts_with(error_of([] { parse_json("{\"lo\":"); }), "malformed JSON at byte"));
  CHECK(starts_with(error_of([] {
                      complex_from_json(parse_json(R"({"ring":{"vars":["x"]},"lo":0,"hi":1,"ranks":[1,1],
                                                     "diffs":[[["x","x"]]]})"));
                    }),
                    "/diffs/0/0"));
  CHECK(starts_with(error_of([] {
                      complex_from_json(parse_json(R"({"ring":{"vars":["x"]},"lo":0,"hi":1,"ranks":[1,1],
                                                     "diffs":[[["x^"]]]})"));
                    }),
                    "/diffs/0/0/0"));
  CHECK(starts_with(error_of([] {
                      complex_from_json(parse_json(R"({"ring":{"vars":["x"]},"lo":0,"hi":2,"ranks":[1,1,1],
                                                     "diffs":[[["x"]],[["x"]]]})"));
                    }),
                    "/diffs"));
  CHECK(starts_with(error_of([] { ring_from_json(parse_json(R"({"vars":["x"],"order":"weird"})")); }), "/order"));
  CHECK(starts_with(error_of([] { rational_from_json(Json("1/0"), "/q"); }), "/q"));

  Json p = pair_to_json(exterior_pair(2));
  p["lie"]["dims"][1] = -1;
  CHECK(starts_with(error_of([&] { pair_from_json(p); }), "/lie/dims/1"));
}

TEST_CASE("artin algebras and elements from JSON") {
  ArtinLocalAlgebra a = artin_from_json(parse_json(R"({"vars":["t"],"quotient":["t^2"]})"));
  CHECK(a.dim() == 2);
  CHECK_THROWS_AS(artin_from_json(parse_json(R"({"vars":["t"],"quotient":["t^2 - t"]})")), ValidationError);

  DglaPair p = exterior_pair(2);
  Elem degree_only = elem_from_json(parse_json(R"(["t", "0"])"), p.lie().space(), 1, a, "omega");
  Elem keyed = elem_from_json(parse_json(R"({"omega":["0","t","0","0"]})"), p.lie().space(), 1, a, "omega");
  CHECK(elem_to_json(degree_only) == elem_to_json(keyed));
  CHECK(starts_with(error_of([&] { elem_from_json(parse_json(R"({"omega":["t"]})"), p.lie().space(), 1, a, "omega"); }),
                    "/omega"));
}
