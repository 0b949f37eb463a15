// weylfaces: batch CLI over the JSON model format.
// Output: one JSON document on stdout; diagnostics on stderr.
// Exit codes: 0 ok, 2 invalid input, 3 cap exceeded, 4 oracle mismatch.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylfaces/errors.hpp"
#include "weylfaces/model_io.hpp"
#include "weylfaces/oracle.hpp"
#include "weylfaces/universal.hpp"
#include "weylfaces/weights.hpp"

namespace {

using nlohmann::json;
using namespace weylfaces;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitCap = 3;
constexpr int kExitMismatch = 4;

std::uint64_t env_cap(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (!raw) return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return fallback;
  return v;
}

json rational_json(const Rat& x) {
  if (is_integer(x) && x.get_num().fits_slong_p())
    return json(static_cast<long long>(x.get_num().get_si()));
  return json(rational_str(x));
}

json nodes_json(NodeSet s) {
  json out = json::array();
  for (int i : s) out.push_back(i);
  return out;
}

json extint_json(const ExtInt& v) {
  if (v.is_infinite()) return json("inf");
  if (v.value().fits_slong_p()) return json(static_cast<long long>(v.value().get_si()));
  return json(v.value().get_str());
}

json fpoly_json(const ExtPolynomial& f) {
  json out = json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(json::array({e, extint_json(c)}));
  return out;
}

RatVec parse_offset(const std::string& text, int n) {
  RatVec out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ',')) {
    // Trim blanks around each entry.
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    if (b == std::string::npos) throw ModelError("empty offset entry");
    out.push_back(parse_rational(cur.substr(b, e - b + 1)));
  }
  if (static_cast<int>(out.size()) != n)
    throw ModelError("offset needs " + std::to_string(n) + " comma-separated entries");
  return out;
}

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

struct Budgets {
  std::uint64_t orbit;
  std::uint64_t dominance;
};

int run_faces(const Model& model, int max_rank) {
  json out = json::array();
  for (const StandardFace& f : enumerate_standard_faces(model.module, max_rank)) {
    out.push_back(json{{"j_min", nodes_json(f.jmin)}, {"j_max", nodes_json(f.jmax)},
                       {"dim", f.dim}});
  }
  emit(out);
  return kExitOk;
}

int run_fpoly(const Model& model, const Budgets& caps, int max_rank) {
  emit(json{{"fpoly", fpoly_json(f_polynomial(model.module, caps.orbit, max_rank))}});
  return kExitOk;
}

int run_member(const Model& model, const std::string& offset_text, const std::string& mode,
               const Budgets& caps) {
  const ModuleDescriptor& v = model.module;
  if (v.quantum) throw ModelError("membership needs a classical-flavor model");
  const RatVec offset = parse_offset(offset_text, v.cartan.size());
  const Weight mu{v.hw.base, offset};
  Membership m;
  if (mode == "verma") {
    m = in_wt_parabolic_verma(v, mu, caps.dominance);
  } else if (mode == "simple") {
    m = in_wt_simple(v.cartan, v.hw, mu, caps.dominance);
  } else if (mode == "polyhedron") {
    m = in_weyl_polyhedron(make_weyl_polyhedron(v.cartan, v.hw, v.integrability), mu,
                           caps.dominance);
  } else {
    throw ModelError("unknown membership mode: " + mode);
  }
  json val;
  if (m == Membership::cap_exceeded)
    val = "cap_exceeded";
  else
    val = (m == Membership::yes);
  emit(json{{"member", val}});
  return m == Membership::cap_exceeded ? kExitCap : kExitOk;
}

int run_universal(const Model& model, const Budgets& caps, DimConvention conv, int max_rank) {
  if (!model.universal_j) throw ModelError("universal command needs a \"J\" field in the model");
  const CartanData& c = model.module.cartan;
  const NodeSet j = *model.universal_j;
  json strata_json = json::array();
  for (NodeSet k : strata(c, j))
    strata_json.push_back(json{{"K", nodes_json(k)}, {"dim", stratum_dim(c, k, conv)}});
  emit(json{{"fpoly", fpoly_json(universal_f_polynomial(c, j, caps.orbit, conv, max_rank))},
            {"polyhedron", universal_is_polyhedron(c, j)},
            {"strata", strata_json}});
  return kExitOk;
}

int run_oracle(const Model& model, const std::string& check, long samples, std::uint64_t seed,
               int depth, const Budgets& caps, int max_rank) {
  const ModuleDescriptor& v = model.module;
  if (v.quantum) throw ModelError("oracle checks need a classical-flavor model");
  if (check == "fpoly") {
    const ExtPolynomial classified = f_polynomial(v, caps.orbit, max_rank);
    const RayGenerators gen = ray_generators(v, caps.orbit);
    if (gen.truncated || !gen.rays.empty())
      throw ModelError("oracle fpoly check needs a bounded hull (full finite-type integrability)");
    std::vector<RatVec> pts;
    pts.reserve(gen.vertices.size());
    for (const Weight& w : gen.vertices) pts.push_back(w.offset);
    const ExtPolynomial hull = hull_f_polynomial(pts);
    const bool pass = classified == hull;
    emit(json{{"check", "fpoly"},
              {"pass", pass},
              {"fpoly", fpoly_json(classified)},
              {"hull_fpoly", fpoly_json(hull)}});
    return pass ? kExitOk : kExitMismatch;
  }
  if (check == "membership") {
    const CrosscheckReport r = sample_membership_crosscheck(v, samples, seed, caps.orbit);
    const bool pass = r.disagreements == 0;
    emit(json{{"check", "membership"},
              {"pass", pass},
              {"samples", r.samples},
              {"members", r.members},
              {"disagreements", r.disagreements},
              {"cap_exceeded", r.cap_exceeded}});
    return pass ? kExitOk : kExitMismatch;
  }
  if (check == "slices") {
    const std::set<RatVec> weights = enumerate_module_weights(v, depth, caps.orbit);
    long mismatches = 0;
    // Every enumerated weight must pass the membership order, and every
    // lattice point of the depth box must agree with enumeration.
    for (const RatVec& offset : weights) {
      if (in_wt_parabolic_verma(v, Weight{v.hw.base, offset}, caps.dominance) != Membership::yes)
        ++mismatches;
    }
    const int n = v.cartan.size();
    RatVec box = zero_vec(n);
    long checked = 0;
    auto sweep = [&](auto&& self, int pos, int used) -> void {
      if (pos == n) {
        ++checked;
        const bool enumerated = weights.count(box) > 0;
        const bool member =
            in_wt_parabolic_verma(v, Weight{v.hw.base, box}, caps.dominance) == Membership::yes;
        if (enumerated != member) ++mismatches;
        return;
      }
      for (int k = 0; used + k <= depth; ++k) {
        box[pos] = k;
        self(self, pos + 1, used + k);
      }
      box[pos] = 0;
    };
    sweep(sweep, 0, 0);
    const bool pass = mismatches == 0;
    emit(json{{"check", "slices"},
              {"pass", pass},
              {"depth", depth},
              {"weights", static_cast<long>(weights.size())},
              {"lattice_points", checked},
              {"mismatches", mismatches}});
    return pass ? kExitOk : kExitMismatch;
  }
  throw ModelError("unknown oracle check: " + check);
}

int run_quantum(const Model& model, int max_rank) {
  const ModuleDescriptor& v = model.module;
  if (!v.quantum) throw ModelError("quantum command needs a quantum-flavor model");
  if (v.cartan.size() > max_rank)
    throw RankTooLarge("2^|I| table guarded at rank " + std::to_string(max_rank));
  json tables = json::array();
  for (NodeSet j : all_subsets(v.cartan.all_nodes())) {
    tables.push_back(json{{"J", nodes_json(j)},
                          {"j_min", nodes_json(j_min(v, j))},
                          {"j_max", nodes_json(j_max(v, j))}});
  }
  emit(json{{"tables", tables}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"face combinatorics of highest weight modules over Kac-Moody algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  Budgets caps{env_cap("WEYLFACES_ORBIT_CAP", kDefaultOrbitCap),
               env_cap("WEYLFACES_DOMINANCE_CAP", kDefaultDominanceCap)};
  int max_rank = 16;
  app.add_option("--orbit-cap", caps.orbit, "orbit enumeration budget");
  app.add_option("--dominance-cap", caps.dominance, "reflection descent budget");
  app.add_option("--max-rank", max_rank, "guard for 2^|I| enumerations");

  std::string model_path, offset_text, mode = "verma", check = "fpoly", dim_conv = "extended";
  long samples = 500;
  std::uint64_t seed = 7;
  int depth = 4;

  CLI::App* cmd_faces = app.add_subcommand("faces", "standard parabolic face classes");
  cmd_faces->add_option("model", model_path)->required();

  CLI::App* cmd_fpoly = app.add_subcommand("fpoly", "f-polynomial of conv V");
  cmd_fpoly->add_option("model", model_path)->required();

  CLI::App* cmd_member = app.add_subcommand("member", "weight membership");
  cmd_member->add_option("model", model_path)->required();
  cmd_member->add_option("--offset", offset_text, "root coordinates of lambda - mu")->required();
  cmd_member->add_option("--mode", mode, "verma | simple | polyhedron");

  CLI::App* cmd_universal = app.add_subcommand("universal", "universal Weyl polyhedron");
  cmd_universal->add_option("model", model_path)->required();
  cmd_universal->add_option("--dim-convention", dim_conv, "extended | classical");

  CLI::App* cmd_oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  cmd_oracle->add_option("model", model_path)->required();
  cmd_oracle->add_option("--check", check, "fpoly | membership | slices");
  cmd_oracle->add_option("--samples", samples);
  cmd_oracle->add_option("--seed", seed);
  cmd_oracle->add_option("--depth", depth);

  CLI::App* cmd_quantum = app.add_subcommand("quantum", "quantum j_min/j_max tables");
  cmd_quantum->add_option("model", model_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const weylfaces::Model model = weylfaces::parse_model_file(model_path);
    if (cmd_faces->parsed()) return run_faces(model, max_rank);
    if (cmd_fpoly->parsed()) return run_fpoly(model, caps, max_rank);
    if (cmd_member->parsed()) return run_member(model, offset_text, mode, caps);
    if (cmd_universal->parsed()) {
      if (dim_conv != "extended" && dim_conv != "classical")
        throw weylfaces::ModelError("unknown dim convention: " + dim_conv);
      return run_universal(model, caps,
                           dim_conv == "extended" ? weylfaces::DimConvention::extended
                                               : weylfaces::DimConvention::classical,
                           max_rank);
    }
    if (cmd_oracle->parsed()) return run_oracle(model, check, samples, seed, depth, caps, max_rank);
    if (cmd_quantum->parsed()) return run_quantum(model, max_rank);
    std::cerr << "no subcommand\n";
    return kExitInvalid;
  } catch (const weylfaces::CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const weylfaces::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
