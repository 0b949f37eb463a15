// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "weylfaces/errors.hpp"
#include "weylfaces/model_io.hpp"
#include "weylfaces/oracle.hpp"
#include "weylfaces/universal.hpp"

using namespace weylfaces;

namespace {

int failures = 0;
int criterion = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(bool pass, const std::string& name, const std::string& detail = "") {
  ++criterion;
  if (!pass) ++failures;
  std::printf("[%d/9] %s  %s%s%s\n", criterion, pass ? "PASS" : "FAIL", name.c_str(),
              detail.empty() ? "" : " — ", detail.c_str());
  std::fflush(stdout);
}

ExtPolynomial poly(std::vector<std::pair<long, long>> terms) {
  ExtPolynomial p;
  for (auto [e, c] : terms) p.add_term(e, ExtInt(c));
  return p;
}

const CartanData& sl2() {
  static const CartanData c = validate_gcm({{2}});
  return c;
}
const CartanData& a2() {
  static const CartanData c = validate_gcm({{2, -1}, {-1, 2}});
  return c;
}
const CartanData& b2() {
  static const CartanData c = validate_gcm({{2, -1}, {-2, 2}});
  return c;
}
const CartanData& g2() {
  static const CartanData c = validate_gcm({{2, -1}, {-3, 2}});
  return c;
}
const CartanData& a3() {
  static const CartanData c = validate_gcm({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  return c;
}
const CartanData& a1aff() {
  static const CartanData c = validate_gcm({{2, -2}, {-2, 2}});
  return c;
}
const CartanData& aff3() {
  static const CartanData c = validate_gcm({{2, -2, -1}, {-2, 2, 0}, {-1, 0, 2}});
  return c;
}

std::vector<RatVec> orbit_offsets(const CartanData& c, const Weight& w) {
  std::vector<RatVec> pts;
  for (const auto& [offset, word] : orbit(c, c.all_nodes(), w).points) pts.push_back(offset);
  return pts;
}

// --- Criterion 1: the A3 permutohedron -------------------------------------

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  try {
    const ModuleDescriptor v = make_module(a3(), {Rat(1), Rat(2), Rat(1)}, a3().all_nodes());
    const ExtPolynomial expected = poly({{0, 24}, {1, 36}, {2, 14}, {3, 1}});
    const ExtPolynomial f = f_polynomial(v);
    pass = pass && f == expected;

    // Facet decomposition 14 = 4 + 4 + 6 by j_min.
    std::map<std::uint32_t, ExtInt> facet_counts;
    for (const StandardFace& face : enumerate_standard_faces(v)) {
      if (face.dim != 2) continue;
      facet_counts[face.jmin.bits()] =
          parabolic_index(a3(), v.integrability, v.integrability & face.jmax);
    }
    pass = pass && facet_counts[NodeSet::of({0, 1}).bits()] == ExtInt(4);
    pass = pass && facet_counts[NodeSet::of({1, 2}).bits()] == ExtInt(4);
    pass = pass && facet_counts[NodeSet::of({0, 2}).bits()] == ExtInt(6);

    // The independent hull oracle agrees on the 24-point orbit.
    const std::vector<RatVec> pts = orbit_offsets(a3(), v.hw);
    pass = pass && pts.size() == 24;
    pass = pass && hull_f_polynomial(pts) == expected;
    const double elapsed = seconds_since(start);
    pass = pass && elapsed < 5.0;
    detail = "f = " + f.str() + ", " + std::to_string(elapsed) + " s";
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report(pass, "A3 permutohedron f-polynomial, facet split 4+4+6, hull oracle", detail);
}

// --- Criterion 2: closed-form sweep over the small finite types ------------

void criterion_2() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  RatSampler gen(101);
  try {
    for (const CartanData* c : {&sl2(), &a2(), &b2(), &g2(), &a3()}) {
      RatVec base(c->size());
      for (int i = 0; i < c->size(); ++i) base[i] = gen.int_in(1, 5);
      const ModuleDescriptor v = make_module(*c, base, c->all_nodes());
      const ExtPolynomial formula = f_polynomial_regular(*c, c->all_nodes());
      const ExtPolynomial classified = f_polynomial(v);
      const ExtPolynomial hull = hull_f_polynomial(orbit_offsets(*c, v.hw));
      if (formula != classified || classified != hull) {
        pass = false;
        detail += "mismatch at rank " + std::to_string(c->size()) + "; ";
      }
    }
    const double elapsed = seconds_since(start);
    pass = pass && elapsed < 60.0;
    detail += std::to_string(elapsed) + " s";
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report(pass, "regular f-polynomial formula = classification = hull (A1,A2,B2,G2,A3)", detail);
}

// --- Criterion 3: top-slice factorization -----------------------------------

void criterion_3() {
  bool pass = true;
  std::string detail;
  RatSampler gen(202);
  try {
    const std::vector<NodeSet> proper = [] {
      std::vector<NodeSet> out;
      for (NodeSet s : all_subsets(a3().all_nodes()))
        if (!(s == a3().all_nodes())) out.push_back(s);
      return out;
    }();
    for (int trial = 0; trial < 20; ++trial) {
      const NodeSet iv = proper[static_cast<std::size_t>(gen.int_in(0, proper.size() - 1))];
      RatVec base(3);
      for (int i = 0; i < 3; ++i) {
        if (iv.contains(i))
          base[i] = gen.int_in(1, 4);  // regular on the integrability
        else
          base[i] = Rat(gen.int_in(-3, 5)) / gen.int_in(1, 3);
      }
      const ModuleDescriptor v = make_module(a3(), base, iv);
      if (f_polynomial(v) != f_polynomial_int_regular(v)) {
        pass = false;
        detail += "mismatch with I_V=" + to_string(iv) + "; ";
      }
    }
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report(pass, "f = f_top * (1+q)^(|I|-|I_V|) on 20 random A3 integrably-regular cases", detail);
}

// --- Criterion 4: universal Weyl polyhedron values ---------------------------

void criterion_4() {
  bool pass = true;
  std::string detail;
  try {
    pass = pass && universal_f_polynomial(sl2(), sl2().all_nodes()) == poly({{0, 1}, {1, 2}, {2, 1}});
    pass = pass && universal_f_polynomial(sl2(), NodeSet{}) == poly({{1, 1}, {2, 1}});
    const ExtPolynomial a2_expected = poly({{0, 1}, {1, 6}, {2, 12}, {3, 8}, {4, 1}});
    pass = pass && universal_f_polynomial(a2(), a2().all_nodes()) == a2_expected;

    // Independent route 1: stratum fiber polynomials and the summation.
    const std::map<std::uint32_t, ExtPolynomial> fibers = {
        {NodeSet{}.bits(), poly({{0, 6}, {1, 6}, {2, 1}})},
        {NodeSet::of({0}).bits(), poly({{0, 3}, {1, 3}, {2, 1}})},
        {NodeSet::of({1}).bits(), poly({{0, 3}, {1, 3}, {2, 1}})},
        {NodeSet::of({0, 1}).bits(), poly({{0, 1}})},
    };
    ExtPolynomial summed;
    for (NodeSet k : strata(a2(), a2().all_nodes())) {
      const ExtPolynomial fiber = f_polynomial(stratum_module(a2(), a2().all_nodes(), k));
      if (!(fiber == fibers.at(k.bits()))) pass = false;
      summed += fiber.shifted(stratum_dim(a2(), k));
    }
    pass = pass && summed == a2_expected;

    // Independent route 2: the face-class census.
    ExtPolynomial census;
    for (const UniversalFaceClass& cls : universal_face_census(a2(), a2().all_nodes()))
      census.add_term(cls.dim, cls.index);
    pass = pass && census == a2_expected;
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report(pass, "universal f-polynomials: sl2 (1+q)^2 and q(1+q), A2 value via two routes", detail);
}

// --- Criterion 5: interval fibers, with weight-set cross-check ---------------

void criterion_5() {
  bool pass = true;
  long disagreements = 0;
  std::string detail;
  RatSampler gen(303);
  try {
    for (const CartanData* c : {&a2(), &a3(), &aff3()}) {
      const bool finite_diagram = is_finite_type(*c, c->all_nodes());
      const std::vector<NodeSet> ks = all_subsets(c->all_nodes());
      for (int sample = 0; sample < 10; ++sample) {
        // Cycle through strata; fill the rest with random positive integers.
        const NodeSet k = ks[static_cast<std::size_t>(sample) % ks.size()];
        RatVec base(c->size());
        for (int i = 0; i < c->size(); ++i)
          base[i] = k.contains(i) ? Rat(0) : Rat(gen.int_in(1, 4));
        const NodeSet iv =
            (sample % 2 == 0) ? c->all_nodes() : [&] {
              NodeSet s;
              for (int i = 0; i < c->size(); ++i)
                if (gen.int_in(0, 1)) s = s.with(i);
              return s;
            }();
        const ModuleDescriptor v = make_module(*c, base, iv);

        std::map<std::uint32_t, std::set<RatVec>> truncations;
        if (finite_diagram) {
          for (NodeSet j : all_subsets(c->all_nodes()))
            truncations[j.bits()] =
                enumerate_module_weights_within(*c, v.hw, j, j & iv, 5);
        }
        for (NodeSet j : all_subsets(c->all_nodes())) {
          const NodeSet lo = j_min(v, j);
          const NodeSet hi = j_max(v, j);
          for (NodeSet jp : all_subsets(c->all_nodes())) {
            const bool interval = lo.subset_of(jp) && jp.subset_of(hi);
            if (face_equal(v, j, jp) != interval) ++disagreements;
            if (finite_diagram &&
                (truncations[j.bits()] == truncations[jp.bits()]) != interval)
              ++disagreements;
          }
        }
      }
    }
    pass = disagreements == 0;
    detail = std::to_string(disagreements) + " disagreements";
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report(pass, "interval fibers on A2/A3/affine, depth-5 weight-set cross-check", detail);
}

// --- Criterion 6: polyhedron containment is the dominance order --------------

void criterion_6() {
  bool pass = true;
  long disagreements = 0;
  std::string detail;
  RatSampler gen(404);
  try {
    for (const CartanData* c : {&a2(), &b2()}) {
      const NodeSet j = c->all_nodes();
      for (int pair = 0; pair < 100; ++pair) {
        RatVec pmu(2), pnu(2);
        for (int i = 0; i < 2; ++i) {
          pmu[i] = Rat(gen.int_in(0, 6)) / gen.int_in(1, 3);
          pnu[i] = Rat(gen.int_in(0, 6)) / gen.int_in(1, 3);
        }
        const Weight nu = weight_from_pairings(*c, pnu);
        // mu must share nu's base to be comparable: realize the pairings pmu
        // as an offset from nu by solving A * offset = pnu - pmu (A invertible).
        const Rat a = c->a(0, 0), b = c->a(0, 1), cc = c->a(1, 0), d = c->a(1, 1);
        const Rat det = a * d - b * cc;
        const Rat r0 = pnu[0] - pmu[0], r1 = pnu[1] - pmu[1];
        const Weight mu{nu.base, {(d * r0 - b * r1) / det, (a * r1 - cc * r0) / det}};

        const bool contains = polyhedron_contains(*c, j, mu, nu);
        const bool order = leq_j(*c, j, mu, nu, false);
        if (contains != order) ++disagreements;

        const WeylPolyhedron pm = make_weyl_polyhedron(*c, mu, j);
        const WeylPolyhedron pn = make_weyl_polyhedron(*c, nu, j);
        if (contains) {
          // Every sampled member of P(mu) lies in P(nu).
          for (int s = 0; s < 100; ++s) {
            RatVec offset(2);
            for (int i = 0; i < 2; ++i)
              offset[i] = mu.offset[i] + gen.in_range(Rat(-1), Rat(7));
            if (in_weyl_polyhedron(pm, Weight{mu.base, offset}) != Membership::yes) continue;
            if (in_weyl_polyhedron(pn, Weight{nu.base, offset}) != Membership::yes)
              ++disagreements;
          }
        } else {
          // mu itself is the witness.
          if (in_weyl_polyhedron(pn, mu) != Membership::no) ++disagreements;
          if (in_weyl_polyhedron(pm, mu) != Membership::yes) ++disagreements;
        }
      }
    }
    pass = disagreements == 0;
    detail = std::to_string(disagreements) + " disagreements over 200 pairs";
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report(pass, "P(mu,J) in P(nu,J) iff mu <=_J nu, sampled containment cross-check", detail);
}

// --- Criterion 7: closedness and polyhedrality predicates --------------------

void criterion_7() {
  bool pass = true;
  std::string detail;
  try {
    const ModuleDescriptor reg = make_module(a1aff(), {Rat(1), Rat(1)}, a1aff().all_nodes());
    pass = pass && !is_polytope(reg) && !is_polyhedron(reg) && is_closed(reg);

    // Zero pairings on the affine integrability, nontrivial via the third node.
    const ModuleDescriptor open_hull =
        make_module(aff3(), {Rat(0), Rat(0), Rat(1) / 2}, NodeSet::of({0, 1}));
    pass = pass && !is_closed(open_hull);
    pass = pass && !is_polytope(open_hull) && !is_polyhedron(open_hull);
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report(pass, "affine closedness/polyhedrality predicates", detail);
}

// --- Criterion 8: quantum/classical agreement --------------------------------

void criterion_8() {
  bool pass = true;
  long mismatches = 0;
  std::string detail;
  RatSampler gen(505);
  try {
    for (const CartanData* c : {&a2(), &a3()}) {
      for (int trial = 0; trial < 25; ++trial) {
        RatVec base(c->size());
        for (int i = 0; i < c->size(); ++i) base[i] = gen.int_in(0, 4);
        NodeSet iv;
        for (int i = 0; i < c->size(); ++i)
          if (gen.int_in(0, 2)) iv = iv.with(i);
        const ModuleDescriptor classical = make_module(*c, base, iv);
        std::vector<TorusValue> torus;
        for (int i = 0; i < c->size(); ++i)
          torus.push_back(TorusValue::q_power(base[i].get_num().get_si()));
        const ModuleDescriptor quantum = make_quantum_module(*c, torus, iv);
        for (NodeSet j : all_subsets(c->all_nodes())) {
          if (!(j_min(classical, j) == j_min(quantum, j))) ++mismatches;
          if (!(j_max(classical, j) == j_max(quantum, j))) ++mismatches;
        }
      }
    }
    pass = mismatches == 0;
    detail = std::to_string(mismatches) + " mismatches over 50 cases";
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report(pass, "quantum q_power(pairing) descriptors reproduce classical intervals", detail);
}

// --- Criterion 9: half-space representation ----------------------------------

void criterion_9() {
  bool pass = true;
  std::string detail;
  try {
    const ModuleDescriptor cases[] = {
        make_module(a2(), {Rat(1), Rat(1)}, a2().all_nodes()),
        make_module(a3(), {Rat(1), Rat(2), Rat(1)}, a3().all_nodes()),
        make_module(a2(), {Rat(2), Rat(1) / 2}, NodeSet::of({0})),
        make_module(a3(), {Rat(1), Rat(1), Rat(1) / 2}, NodeSet::of({0, 1})),
    };
    for (const ModuleDescriptor& v : cases) {
      const CrosscheckReport r = sample_membership_crosscheck(v, 500, 7);
      if (r.disagreements != 0 || r.cap_exceeded != 0 || r.samples != 500) {
        pass = false;
        detail += "case failed with " + std::to_string(r.disagreements) + " disagreements; ";
      }
    }
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  report(pass, "half-space intersection equals membership on 500 samples (A2/A3)", detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures);
  return 1;
}
