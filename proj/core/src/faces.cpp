#include "weylfaces/faces.hpp"

#include <algorithm>
#include <map>

#include "weylfaces/errors.hpp"

namespace weylfaces {

namespace {

void check_rank_guard(const CartanData& c, int max_rank) {
  if (c.size() > max_rank)
    throw RankTooLarge("2^|I| enumeration guarded at rank " + std::to_string(max_rank));
}

bool node_active(const ModuleDescriptor& v, int node) {
  if (!v.integrability.contains(node)) return true;
  if (v.quantum) return !v.torus[node].is_unit();
  return pairing(v.cartan, v.hw, node) > 0;
}

}  // namespace

ModuleDescriptor make_module(const CartanData& c, RatVec hw_pairings, NodeSet integrability) {
  if (!integrability.subset_of(c.all_nodes()))
    throw DescriptorError("integrability is not a subset of the node set");
  Weight hw = weight_from_pairings(c, std::move(hw_pairings));
  for (int i : integrability) {
    const Rat p = pairing(c, hw, i);
    if (!is_integer(p) || p < 0)
      throw DescriptorError("integrable node " + std::to_string(i) +
                            " needs a nonnegative integer pairing, got " + rational_str(p));
  }
  return ModuleDescriptor{c, std::move(hw), integrability, false, {}};
}

ModuleDescriptor make_quantum_module(const CartanData& c, std::vector<TorusValue> torus,
                                     NodeSet integrability, RatVec hw_pairings) {
  if (!integrability.subset_of(c.all_nodes()))
    throw DescriptorError("integrability is not a subset of the node set");
  if (static_cast<int>(torus.size()) != c.size())
    throw DescriptorError("torus value count does not match Cartan size");
  for (int i : integrability) {
    const TorusValue& t = torus[i];
    const bool ok = t.kind == TorusValue::Kind::pm_one ||
                    (t.kind == TorusValue::Kind::q_power && t.exponent >= 0);
    if (!ok)
      throw DescriptorError("integrable node " + std::to_string(i) +
                            " needs torus value pm_one or q_power(n >= 0)");
  }
  if (hw_pairings.empty()) hw_pairings = zero_vec(c.size());
  Weight hw = weight_from_pairings(c, std::move(hw_pairings));
  return ModuleDescriptor{c, std::move(hw), integrability, true, std::move(torus)};
}

NodeSet active_nodes(const ModuleDescriptor& v, NodeSet j) {
  NodeSet out;
  for (int node : j)
    if (node_active(v, node)) out = out.with(node);
  return out;
}

NodeSet j_min(const ModuleDescriptor& v, NodeSet j) {
  const NodeSet active = active_nodes(v, j);
  NodeSet out;
  for (NodeSet comp : components(v.cartan, j))
    if (!(comp & active).empty()) out = out | comp;
  return out;
}

NodeSet j_max(const ModuleDescriptor& v, NodeSet j) {
  const NodeSet lo = j_min(v, j);
  NodeSet out = lo;
  // Dormant nodes come from all of I_V, not only from J.
  for (int node : v.integrability - lo) {
    if (node_active(v, node)) continue;
    bool touches = false;
    for (int m : lo) {
      if (v.cartan.adjacent(node, m)) {
        touches = true;
        break;
      }
    }
    if (!touches) out = out.with(node);
  }
  return out;
}

bool face_subset(const ModuleDescriptor& v, NodeSet j, NodeSet j_prime) {
  return j_min(v, j).subset_of(j_prime);
}

bool face_equal(const ModuleDescriptor& v, NodeSet j, NodeSet j_prime) {
  return j_min(v, j).subset_of(j_prime) && j_prime.subset_of(j_max(v, j));
}

FaceInterval face_map_fiber(const ModuleDescriptor& v, NodeSet j) {
  return FaceInterval{j_min(v, j), j_max(v, j)};
}

NodeSet face_stabilizer(const ModuleDescriptor& v, NodeSet j) {
  return v.integrability & j_max(v, j);
}

Weight canonical_marker(const ModuleDescriptor& v, NodeSet j) {
  return marker_weight(v.cartan, v.integrability - j_max(v, j));
}

FaceDescriptor make_face_descriptor(const ModuleDescriptor& v, const std::vector<int>& word,
                                    NodeSet j) {
  for (int i : word)
    if (!v.integrability.contains(i))
      throw DescriptorError("face translation words must stay in the integrable Weyl group");
  return FaceDescriptor{j_min(v, j), j_max(v, j),
                        apply_word(v.cartan, canonical_marker(v, j), word)};
}

bool face_descriptor_eq(const FaceDescriptor& a, const FaceDescriptor& b) {
  return a.jmin == b.jmin && a.jmax == b.jmax && weight_eq(a.coset_marker, b.coset_marker);
}

Membership coset_face_subset(const ModuleDescriptor& v, const std::vector<int>& word, NodeSet j,
                             NodeSet j_prime, std::uint64_t cap) {
  for (int i : word)
    if (!v.integrability.contains(i))
      throw DescriptorError("coset words must stay in the integrable Weyl group");
  if (!face_subset(v, j_prime, j)) return Membership::no;
  // The coset w W_{I_V ∩ j_min(J)} meets the stabilizer W_{I_V ∩ j_max(J')}
  // iff w^{-1} m lies in the small orbit of the canonical marker m of J'.
  const NodeSet small = v.integrability & j_min(v, j);
  const Weight m = canonical_marker(v, j_prime);
  std::vector<int> inverse(word.rbegin(), word.rend());
  const Weight moved = apply_word(v.cartan, m, inverse);
  auto conj = to_dominant(v.cartan, small, moved, cap);
  if (!conj) return Membership::cap_exceeded;
  return as_membership(conj->dominant.offset == m.offset);
}

std::vector<StandardFace> enumerate_standard_faces(const ModuleDescriptor& v, int max_rank) {
  check_rank_guard(v.cartan, max_rank);
  std::map<std::pair<NodeSet, NodeSet>, int> classes;
  for (NodeSet j : all_subsets(v.cartan.all_nodes())) {
    const NodeSet lo = j_min(v, j);
    classes.emplace(std::make_pair(lo, j_max(v, j)), lo.count());
  }
  std::vector<StandardFace> out;
  out.reserve(classes.size());
  for (const auto& [key, dim] : classes) out.push_back(StandardFace{key.first, key.second, dim});
  std::sort(out.begin(), out.end(), [](const StandardFace& a, const StandardFace& b) {
    return std::make_tuple(a.dim, a.jmin.bits(), a.jmax.bits()) <
           std::make_tuple(b.dim, b.jmin.bits(), b.jmax.bits());
  });
  return out;
}

ExtPolynomial f_polynomial(const ModuleDescriptor& v, std::uint64_t cap, int max_rank) {
  ExtPolynomial f;
  std::map<NodeSet, ExtInt> index_memo;
  for (const StandardFace& face : enumerate_standard_faces(v, max_rank)) {
    const NodeSet stab = v.integrability & face.jmax;
    auto it = index_memo.find(stab);
    if (it == index_memo.end())
      it = index_memo.emplace(stab, parabolic_index(v.cartan, v.integrability, stab, cap)).first;
    f.add_term(face.dim, it->second);
  }
  return f;
}

ExtPolynomial f_polynomial_regular(const CartanData& c, NodeSet s, std::uint64_t cap) {
  ExtPolynomial f;
  for (NodeSet j : all_subsets(s)) f.add_term(j.count(), parabolic_index(c, s, j, cap));
  return f;
}

ExtPolynomial f_polynomial_int_regular(const ModuleDescriptor& v, std::uint64_t cap) {
  for (int i : v.integrability)
    if (!(pairing(v.cartan, v.hw, i) > 0))
      throw RegularityRequired("highest weight must be regular on the integrability");
  ExtPolynomial top = f_polynomial_regular(v.cartan, v.integrability, cap);
  return top * ExtPolynomial::one_plus_q_pow(v.cartan.size() - v.integrability.count());
}

ModuleDescriptor tangent_cone(const ModuleDescriptor& v) {
  NodeSet perp;
  for (int i : v.integrability)
    if (pairing(v.cartan, v.hw, i) == 0) perp = perp.with(i);
  return make_module(v.cartan, pairings(v.cartan, v.hw), perp);
}

ModuleDescriptor localize_face(const ModuleDescriptor& v, NodeSet j) {
  for (int i : v.integrability)
    if (!(pairing(v.cartan, v.hw, i) > 0))
      throw RegularityRequired("localization needs a trivial integrable stabilizer");
  return make_module(v.cartan, pairings(v.cartan, v.hw), v.integrability & j);
}

bool is_restriction_simple(const ModuleDescriptor& v, NodeSet j) {
  return j_min(v, v.cartan.all_nodes()).subset_of(j);
}

bool is_restriction_hw(const ModuleDescriptor& v, NodeSet j) {
  return j_min(v, v.cartan.all_nodes()).subset_of(j);
}

}  // namespace weylfaces
