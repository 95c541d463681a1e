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

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "cjl/acceptance/acceptance.hpp"
#include "cjl/algebra/errors.hpp"
#include "cjl/dgla/aomoto.hpp"
#include "cjl/dgla/checks.hpp"
#include "cjl/io/json_io.hpp"
#include "cjl/models/models.hpp"

using namespace cjl;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;
constexpr int kResource = 3;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json read_json(const std::string& path) { return parse_json(read_input(path)); }

DglaPair read_pair(const std::string& path) {
  DglaPair p = pair_from_json(read_json(path));
  require_valid(check_pair(p), "pair");
  return p;
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

void emit_ideal(const Ideal& ideal, const std::string& format) {
  if (format == "text") {
    std::vector<std::string> g = ideal.canonical_strings();
    for (std::size_t k = 0; k < g.size(); ++k) std::cout << (k ? ", " : "") << g[k];
    std::cout << "\n";
  } else {
    emit(Json{{"generators", ideal_to_json(ideal)}, {"ring", ring_to_json(ideal.ring())}});
  }
}

bool claim_selected(const std::string& id, const std::vector<std::string>& wanted) {
  if (wanted.empty()) return true;
  const std::string head = id.substr(0, id.find(':'));
  for (const auto& w : wanted) {
    if (head == w) return true;
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology jump loci of DGLA pairs"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for every sampled quantity")->capture_default_str();

  std::string complex_path, pair_path, artin_path, omega_path, lambda_path, format = "json";
  int deg_i = 0, k = 1;
  bool have_i = false;

  auto* jump = app.add_subcommand("jump", "Jump ideals J^i_k of a complex");
  jump->add_option("--complex", complex_path, "Complex JSON (stdin when omitted)");
  auto* jump_i = jump->add_option("--i", deg_i, "Degree");
  auto* jump_k = jump->add_option("--k", k, "Jump index");
  int kmax = 0;
  jump->add_option("--kmax", kmax, "Table up to this k when --i is omitted (default: largest rank)");

  auto* resonance = app.add_subcommand("resonance", "Resonance ideal R^i_k");
  resonance->add_option("--pair", pair_path, "Pair JSON (stdin when omitted)");
  resonance->add_option("--i", deg_i, "Degree")->required();
  resonance->add_option("--k", k, "Jump index")->required();
  resonance->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* cone = app.add_subcommand("cone", "Quadratic cone ideal");
  cone->add_option("--pair", pair_path, "Pair JSON (stdin when omitted)");
  cone->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::vector<int> jump_args;
  auto* mc = app.add_subcommand("mc", "Maurer-Cartan test and Aomoto jump ideals");
  mc->add_option("--pair", pair_path, "Pair JSON (stdin when omitted)");
  mc->add_option("--artin", artin_path, "Artin algebra JSON")->required();
  mc->add_option("--omega", omega_path, "Element of C^1 tensor m")->required();
  mc->add_option("--jump", jump_args, "I K: also report J^I_K of the Aomoto complex")->expected(2);

  auto* gauge = app.add_subcommand("gauge", "Gauge action on a Maurer-Cartan element");
  gauge->add_option("--pair", pair_path, "Pair JSON (stdin when omitted)");
  gauge->add_option("--artin", artin_path, "Artin algebra JSON")->required();
  gauge->add_option("--lambda", lambda_path, "Element of C^0 tensor m")->required();
  gauge->add_option("--omega", omega_path, "Element of C^1 tensor m")->required();

  std::vector<std::string> claims;
  auto* analyze_cmd = app.add_subcommand("analyze", "Exactness threshold, ranks and resonance claims");
  analyze_cmd->add_option("--pair", pair_path, "Pair JSON (stdin when omitted)");
  analyze_cmd->add_option("--claims", claims, "Claim families to keep, e.g. 9.1c,9.1d")->delimiter(',');

  auto* model = app.add_subcommand("model", "Emit a model pair as JSON");
  model->require_subcommand(1);
  std::size_t n = 2, r = 1, s = 0, g = 1;
  std::string arrangement_path;
  auto* m_ext = model->add_subcommand("exterior", "Exterior algebra pair");
  m_ext->add_option("--n", n, "Number of generators")->required();
  m_ext->add_option("--r", r, "Rank of gl_r")->capture_default_str();
  auto* m_os = model->add_subcommand("os", "Orlik-Solomon pair of a central arrangement");
  m_os->add_option("--arrangement", arrangement_path, "Arrangement JSON (stdin when omitted)");
  m_os->add_option("--r", r, "Rank of gl_r")->capture_default_str();
  auto* m_surface = model->add_subcommand("surface", "Genus g surface pair");
  m_surface->add_option("--g", g, "Genus")->required();
  auto* m_glr = model->add_subcommand("glr", "A tensor gl_r acting on A tensor Mat_{r x s}");
  std::string base = "exterior";
  m_glr->add_option("--base", base, "exterior, surface or os")->check(CLI::IsMember({"exterior", "surface", "os"}));
  m_glr->add_option("--n", n, "Generators (exterior base)");
  m_glr->add_option("--g", g, "Genus (surface base)");
  m_glr->add_option("--arrangement", arrangement_path, "Arrangement JSON (os base)");
  m_glr->add_option("--r", r, "Rank of gl_r")->required();
  m_glr->add_option("--s", s, "Columns of the module (default r)");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*jump) {
      FreeComplex e = complex_from_json(read_json(complex_path));
      have_i = jump_i->count() > 0;
      Json table = Json::object();
      if (have_i) {
        table[std::to_string(deg_i) + "," + std::to_string(k)] = ideal_to_json(jump_ideal(e, deg_i, k));
      } else {
        if (jump_k->count() > 0) throw ValidationError("--k needs --i");
        int top = kmax;
        if (top <= 0) {
          for (auto rk : e.ranks()) top = std::max(top, static_cast<int>(rk));
        }
        for (const auto& [ik, ideal] : jump_table(e, std::max(top, 1))) {
          table[std::to_string(ik.first) + "," + std::to_string(ik.second)] = ideal_to_json(ideal);
        }
      }
      emit(Json{{"J", table}});
    } else if (*resonance) {
      emit_ideal(resonance_ideal(read_pair(pair_path), deg_i, k), format);
    } else if (*cone) {
      QuadraticCone q = quadratic_cone_ideal(read_pair(pair_path).lie());
      emit_ideal(q.ideal, format);
    } else if (*mc || *gauge) {
      DglaPair p = read_pair(pair_path);
      ArtinLocalAlgebra a = artin_from_json(read_json(artin_path));
      const Dgla& c = p.lie();
      Elem omega = elem_from_json(read_json(omega_path), c.space(), 1, a, "omega");
      check_mc_shape(c, a, omega);
      if (*mc) {
        Json out{{"mc", maurer_cartan_check(c, a, omega)}};
        if (!jump_args.empty()) {
          if (!out["mc"].get<bool>()) throw ValidationError("omega is not Maurer-Cartan, no Aomoto complex");
          FreeComplex e = aomoto_complex(p, a, omega);
          out["jump"] = {{std::to_string(jump_args[0]) + "," + std::to_string(jump_args[1]),
                          ideal_to_json(jump_ideal(a, e, jump_args[0], jump_args[1]))}};
        }
        emit(out);
      } else {
        Elem lambda = elem_from_json(read_json(lambda_path), c.space(), 0, a, "lambda");
        check_gauge_shape(c, a, lambda);
        if (!maurer_cartan_check(c, a, omega)) throw ValidationError("omega is not Maurer-Cartan");
        Elem moved = gauge_act(c, a, lambda, omega);
        emit(Json{{"omega", elem_to_json(moved)}, {"mc", maurer_cartan_check(c, a, moved)}});
      }
    } else if (*analyze_cmd) {
      ResonanceReport rep = analyze(read_pair(pair_path));
      std::vector<Verdict> kept;
      for (const auto& v : rep.claims) {
        if (claim_selected(v.id, claims)) kept.push_back(v);
      }
      rep.claims = std::move(kept);
      emit(report_to_json(rep));
    } else if (*model) {
      auto os_algebra = [&] {
        Arrangement arr = arrangement_from_json(read_json(arrangement_path));
        return orlik_solomon(arr);
      };
      if (*m_ext) {
        emit(pair_to_json(exterior_pair(n, r)));
      } else if (*m_os) {
        emit(pair_to_json(cdga_to_pair(os_algebra(), r, r)));
      } else if (*m_surface) {
        emit(pair_to_json(surface_pair(g)));
      } else {
        Cdga alg = base == "exterior" ? exterior_algebra(n) : base == "surface" ? surface_algebra(g) : os_algebra();
        emit(pair_to_json(cdga_to_pair(alg, r, s == 0 ? r : s)));
      }
    } else if (*selftest) {
      auto results = run_all_criteria(seed, std::cout);
      for (const auto& res : results) {
        if (!res.passed) return kFailed;
      }
    }
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}
