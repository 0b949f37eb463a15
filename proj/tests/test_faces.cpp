#include <doctest.h>

#include "test_support.hpp"
#include "weylfaces/errors.hpp"

using namespace weylfaces;
using namespace weylfaces::test;

namespace {

ExtPolynomial poly(std::vector<std::pair<long, long>> terms) {
  ExtPolynomial p;
  for (auto [e, c] : terms) p.add_term(e, ExtInt(c));
  return p;
}

}  // namespace

TEST_CASE("active nodes, classical and quantum") {
  const ModuleDescriptor v = module(a2(), {Rat(1), Rat(0)}, a2().all_nodes());
  CHECK(active_nodes(v, a2().all_nodes()) == NodeSet::of({0}));
  CHECK(active_nodes(v, NodeSet{}).empty());

  const ModuleDescriptor q = make_quantum_module(
      a2(), {TorusValue::q_power(3), TorusValue::pm_one()}, a2().all_nodes());
  CHECK(active_nodes(q, a2().all_nodes()) == NodeSet::of({0}));
  // q^0 counts as +-1.
  const ModuleDescriptor q0 = make_quantum_module(
      a2(), {TorusValue::q_power(0), TorusValue::q_power(2)}, a2().all_nodes());
  CHECK(active_nodes(q0, a2().all_nodes()) == NodeSet::of({1}));
}

TEST_CASE("quantum descriptors validate torus values on the integrability") {
  CHECK_THROWS_AS(make_quantum_module(a2(), {TorusValue::generic(), TorusValue::pm_one()},
                                      a2().all_nodes()),
                  DescriptorError);
  CHECK_THROWS_AS(make_quantum_module(a2(), {TorusValue::q_power(-2), TorusValue::pm_one()},
                                      a2().all_nodes()),
                  DescriptorError);
  CHECK_NOTHROW(make_quantum_module(a2(), {TorusValue::q_power(-2), TorusValue::pm_one()},
                                    NodeSet::of({1})));
}

TEST_CASE("j_min and j_max on small diagrams") {
  // A3, regular integral: everything active.
  const ModuleDescriptor reg = module(a3(), {Rat(1), Rat(1), Rat(1)}, a3().all_nodes());
  CHECK(j_min(reg, NodeSet::of({0, 2})) == NodeSet::of({0, 2}));
  CHECK(j_max(reg, NodeSet::of({0, 2})) == NodeSet::of({0, 2}));

  // A3 with a singular middle node: it is dormant for J = {} but not for
  // neighbors of j_min.
  const ModuleDescriptor sing = module(a3(), {Rat(1), Rat(0), Rat(1)}, a3().all_nodes());
  CHECK(j_min(sing, NodeSet{}).empty());
  CHECK(j_max(sing, NodeSet{}) == NodeSet::of({1}));

  // Trivial A2 module: everything dormant.
  const ModuleDescriptor triv = module(a2(), {Rat(0), Rat(0)}, a2().all_nodes());
  CHECK(j_min(triv, NodeSet::of({0})).empty());
  CHECK(j_max(triv, NodeSet::of({0})) == a2().all_nodes());
}

TEST_CASE("face subset and equality are interval conditions") {
  const ModuleDescriptor sing = module(a3(), {Rat(1), Rat(0), Rat(1)}, a3().all_nodes());
  CHECK(face_equal(sing, NodeSet{}, NodeSet::of({1})));
  CHECK(face_subset(sing, NodeSet{}, NodeSet{}));

  const ModuleDescriptor reg = module(a2(), {Rat(1), Rat(1)}, a2().all_nodes());
  CHECK_FALSE(face_subset(reg, NodeSet::of({0}), NodeSet::of({1})));
  const FaceInterval fiber = face_map_fiber(sing, NodeSet{});
  CHECK(fiber.lo == NodeSet{});
  CHECK(fiber.hi == NodeSet::of({1}));
}

TEST_CASE("face stabilizers") {
  const ModuleDescriptor reg = module(a3(), {Rat(1), Rat(1), Rat(1)}, a3().all_nodes());
  CHECK(face_stabilizer(reg, NodeSet::of({0, 2})) == NodeSet::of({0, 2}));
  CHECK(face_stabilizer(reg, NodeSet{}).empty());
  const ModuleDescriptor sing = module(a3(), {Rat(1), Rat(0), Rat(1)}, a3().all_nodes());
  CHECK(face_stabilizer(sing, NodeSet{}) == NodeSet::of({1}));
}

TEST_CASE("coset face inclusion distinguishes stabilizer cosets") {
  const ModuleDescriptor reg = module(a2(), {Rat(1), Rat(1)}, a2().all_nodes());
  const NodeSet j0 = NodeSet::of({0});
  // Identity reduces to the plain inclusion.
  CHECK(coset_face_subset(reg, {}, j0, j0) == Membership::yes);
  CHECK(coset_face_subset(reg, {}, NodeSet::of({1}), j0) == Membership::no);
  // s_0 fixes the face setwise, s_1 moves it.
  CHECK(coset_face_subset(reg, {0}, j0, j0) == Membership::yes);
  CHECK(coset_face_subset(reg, {1}, j0, j0) == Membership::no);
  CHECK_THROWS_AS(coset_face_subset(module(a2(), {Rat(1), Rat(1)}, NodeSet::of({0})), {1},
                                    j0, j0),
                  DescriptorError);
}

TEST_CASE("face descriptors name W-translates of faces") {
  const ModuleDescriptor reg = module(a2(), {Rat(1), Rat(1)}, a2().all_nodes());
  const FaceDescriptor id = make_face_descriptor(reg, {}, NodeSet::of({0}));
  const FaceDescriptor s0 = make_face_descriptor(reg, {0}, NodeSet::of({0}));
  const FaceDescriptor s1 = make_face_descriptor(reg, {1}, NodeSet::of({0}));
  CHECK(face_descriptor_eq(id, s0));  // s_0 stabilizes its own face marker
  CHECK_FALSE(face_descriptor_eq(id, s1));
}

TEST_CASE("standard face enumeration") {
  // sl2 Verma: both subsets are their own class.
  const ModuleDescriptor verma = module(sl2(), {Rat(1) / 2}, NodeSet{});
  const auto verma_faces = enumerate_standard_faces(verma);
  REQUIRE(verma_faces.size() == 2);
  CHECK(verma_faces[0].jmin == NodeSet{});
  CHECK(verma_faces[0].jmax == NodeSet{});
  CHECK(verma_faces[0].dim == 0);
  CHECK(verma_faces[1].jmin == NodeSet::of({0}));
  CHECK(verma_faces[1].dim == 1);

  // Trivial module: a single class.
  const ModuleDescriptor triv = module(a2(), {Rat(0), Rat(0)}, a2().all_nodes());
  const auto triv_faces = enumerate_standard_faces(triv);
  REQUIRE(triv_faces.size() == 1);
  CHECK(triv_faces[0].jmin == NodeSet{});
  CHECK(triv_faces[0].jmax == a2().all_nodes());
  CHECK(triv_faces[0].dim == 0);

  // A3 regular integrable: one class per subset.
  const ModuleDescriptor reg = module(a3(), {Rat(2), Rat(1), Rat(1)}, a3().all_nodes());
  CHECK(enumerate_standard_faces(reg).size() == 8);
}

TEST_CASE("f-polynomials on pinned examples") {
  const ModuleDescriptor reg = module(a3(), {Rat(1), Rat(1), Rat(1)}, a3().all_nodes());
  CHECK(f_polynomial(reg) == poly({{0, 24}, {1, 36}, {2, 14}, {3, 1}}));

  const ModuleDescriptor seg = module(sl2(), {Rat(3)}, sl2().all_nodes());
  CHECK(f_polynomial(seg) == poly({{0, 2}, {1, 1}}));

  const ModuleDescriptor verma = module(a2(), {Rat(1) / 3, Rat(1) / 2}, NodeSet{});
  CHECK(f_polynomial(verma) == poly({{0, 1}, {1, 2}, {2, 1}}));
}

TEST_CASE("regular closed forms agree with the general formula") {
  CHECK(f_polynomial_regular(a2(), a2().all_nodes()) == poly({{0, 6}, {1, 6}, {2, 1}}));
  const ModuleDescriptor reg = module(a3(), {Rat(1), Rat(2), Rat(3)}, a3().all_nodes());
  CHECK(f_polynomial_regular(a3(), a3().all_nodes()) == f_polynomial(reg));
  CHECK(f_polynomial_int_regular(reg) == f_polynomial(reg));

  const ModuleDescriptor partial = module(a3(), {Rat(1), Rat(1) / 2, Rat(2)}, NodeSet::of({0, 2}));
  CHECK(f_polynomial_int_regular(partial) == f_polynomial(partial));
  CHECK_THROWS_AS(
      f_polynomial_int_regular(module(a3(), {Rat(0), Rat(1), Rat(1)}, a3().all_nodes())),
      RegularityRequired);
}

TEST_CASE("rank guard trips on oversized enumerations") {
  const ModuleDescriptor reg = module(a3(), {Rat(1), Rat(1), Rat(1)}, a3().all_nodes());
  CHECK_THROWS_AS(enumerate_standard_faces(reg, 2), RankTooLarge);
}

TEST_CASE("tangent cone and localization") {
  const ModuleDescriptor reg = module(a2(), {Rat(1), Rat(2)}, a2().all_nodes());
  CHECK(tangent_cone(reg).integrability.empty());

  const ModuleDescriptor sing = module(a2(), {Rat(1), Rat(0)}, a2().all_nodes());
  CHECK(tangent_cone(sing).integrability == NodeSet::of({1}));

  const ModuleDescriptor triv = module(a2(), {Rat(0), Rat(0)}, a2().all_nodes());
  CHECK(tangent_cone(triv).integrability == a2().all_nodes());

  CHECK(localize_face(reg, NodeSet{}).integrability.empty());
  CHECK(localize_face(reg, a2().all_nodes()).integrability == a2().all_nodes());
  const ModuleDescriptor reg3 = module(a3(), {Rat(1), Rat(1), Rat(1)}, a3().all_nodes());
  CHECK(localize_face(reg3, NodeSet::of({0, 2})).integrability == NodeSet::of({0, 2}));
  CHECK_THROWS_AS(localize_face(sing, NodeSet::of({0})), RegularityRequired);
}

TEST_CASE("branching criteria") {
  const ModuleDescriptor reg = module(a2(), {Rat(1), Rat(1)}, a2().all_nodes());
  CHECK(is_restriction_simple(reg, a2().all_nodes()));
  CHECK_FALSE(is_restriction_simple(reg, NodeSet::of({0})));
  CHECK_FALSE(is_restriction_hw(reg, NodeSet::of({0})));
  const ModuleDescriptor triv = module(a3(), {Rat(0), Rat(0), Rat(0)}, a3().all_nodes());
  for (NodeSet j : all_subsets(a3().all_nodes())) CHECK(is_restriction_simple(triv, j));
}
