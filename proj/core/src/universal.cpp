#include "weylfaces/universal.hpp"

#include <algorithm>
#include <stdexcept>

#include "weylfaces/errors.hpp"

namespace weylfaces {

long base_dim(const CartanData& c, DimConvention conv) {
  return conv == DimConvention::extended ? c.size() + 2L * c.corank() : c.realization_dim();
}

long stratum_dim(const CartanData& c, NodeSet k, DimConvention conv) {
  return base_dim(c, conv) - k.count();
}

UniversalFaceDescriptor make_universal_face(const CartanData& c, NodeSet j, NodeSet k,
                                            NodeSet j_prime, const std::vector<int>& word) {
  return UniversalFaceDescriptor{Stratum{j, k},
                                 make_face_descriptor(stratum_module(c, j, k), word, j_prime)};
}

long universal_face_dim(const CartanData& c, const UniversalFaceDescriptor& f,
                        DimConvention conv) {
  return stratum_dim(c, f.stratum.k, conv) + f.face.jmin.count();
}

std::vector<NodeSet> strata(const CartanData& c, NodeSet j) {
  (void)c;
  std::vector<NodeSet> out = all_subsets(j);
  std::sort(out.begin(), out.end(), [](NodeSet a, NodeSet b) {
    if (a.count() != b.count()) return a.count() > b.count();
    return a.bits() < b.bits();
  });
  return out;
}

NodeSet stratum_of(const CartanData& c, NodeSet j, const Weight& lambda) {
  NodeSet k;
  for (int i : j) {
    const Rat p = pairing(c, lambda, i);
    if (p < 0) throw NotDominant("stratum_of requires lambda in the J dominant chamber");
    if (p == 0) k = k.with(i);
  }
  return k;
}

Weight representative_weight(const CartanData& c, NodeSet j, NodeSet k) {
  if (!k.subset_of(j)) throw DescriptorError("stratum K must be a subset of J");
  return marker_weight(c, c.all_nodes() - k);
}

ModuleDescriptor stratum_module(const CartanData& c, NodeSet j, NodeSet k) {
  return make_module(c, pairings(c, representative_weight(c, j, k)), j);
}

bool universal_face_equal(const CartanData& c, NodeSet j, NodeSet k1, NodeSet j1, NodeSet k2,
                          NodeSet j2) {
  if (k1 != k2) return false;
  return face_equal(stratum_module(c, j, k1), j1, j2);
}

bool universal_face_subset(const CartanData& c, NodeSet j, NodeSet k1, NodeSet j1, NodeSet k2,
                           NodeSet j2) {
  if (!k2.subset_of(k1)) return false;  // base-face containment reverses perps
  return face_subset(stratum_module(c, j, k1), j1, j2);
}

Membership universal_coset_face_subset(const CartanData& c, NodeSet j,
                                       const std::vector<int>& word, NodeSet k1, NodeSet j1,
                                       NodeSet k2, NodeSet j2, std::uint64_t cap) {
  if (!k2.subset_of(k1)) return Membership::no;
  // w wt_{J1} subset of wt_{J2} is wt_{J1} subset of w^{-1} wt_{J2}.
  std::vector<int> inverse(word.rbegin(), word.rend());
  return coset_face_subset(stratum_module(c, j, k1), inverse, j2, j1, cap);
}

ExtPolynomial universal_f_polynomial(const CartanData& c, NodeSet j, std::uint64_t cap,
                                     DimConvention conv, int max_rank) {
  ExtPolynomial total;
  const long lead = base_dim(c, conv);
  for (NodeSet k : all_subsets(j))
    total += f_polynomial(stratum_module(c, j, k), cap, max_rank).shifted(lead - k.count());
  if (!total.is_zero() && total.min_exponent() < 0)
    throw std::logic_error("universal f-polynomial acquired a negative exponent");
  return total;
}

bool universal_is_polyhedron(const CartanData& c, NodeSet j) { return is_finite_type(c, j); }

MinkowskiGenerators minkowski_generators(const CartanData& c, NodeSet j, std::uint64_t cap) {
  MinkowskiGenerators out;
  const int n = c.size();
  for (int i : c.all_nodes() - j) {
    RatVec e = zero_vec(n);
    e[i] = 1;
    RootOrbit ro = root_orbit(c, j, e, cap);
    out.truncated = out.truncated || ro.truncated;
    for (RatVec& r : ro.points)
      out.rays.push_back(MinkowskiGenerators::Generator{zero_vec(n), std::move(r)});
  }
  for (int jj : j) {
    const Weight omega = marker_weight(c, NodeSet::single(jj));
    OrbitReport rep = orbit(c, j, omega, cap);
    out.truncated = out.truncated || rep.truncated;
    for (const auto& [offset, word] : rep.points)
      out.rays.push_back(MinkowskiGenerators::Generator{omega.base, offset});
  }
  for (int k : c.all_nodes() - j) {
    RatVec e = zero_vec(n);
    e[k] = 1;
    out.lines.push_back(MinkowskiGenerators::Generator{std::move(e), zero_vec(n)});
  }
  return out;
}

std::optional<bool> same_stratum_strong_iso(const CartanData& c, NodeSet j, const Weight& lambda,
                                            const Weight& lambda_prime) {
  const NodeSet k1 = stratum_of(c, j, lambda);
  const NodeSet k2 = stratum_of(c, j, lambda_prime);
  if (!is_finite_type(c, k1) || !is_finite_type(c, k2)) return std::nullopt;
  return k1 == k2;
}

std::vector<UniversalFaceClass> universal_face_census(const CartanData& c, NodeSet j,
                                                      std::uint64_t cap, DimConvention conv,
                                                      int max_rank) {
  std::vector<UniversalFaceClass> out;
  for (NodeSet k : strata(c, j)) {
    const ModuleDescriptor v = stratum_module(c, j, k);
    for (const StandardFace& f : enumerate_standard_faces(v, max_rank)) {
      UniversalFaceClass cls;
      cls.k = k;
      cls.jmin = f.jmin;
      cls.jmax = f.jmax;
      cls.dim = stratum_dim(c, k, conv) + f.dim;
      cls.index = parabolic_index(c, j, j & f.jmax, cap);
      out.push_back(std::move(cls));
    }
  }
  return out;
}

}  // namespace weylfaces
