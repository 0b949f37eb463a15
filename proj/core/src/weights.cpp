#include "weylfaces/weights.hpp"

#include <set>
#include <utility>

#include "weylfaces/errors.hpp"

namespace weylfaces {

namespace {

// lambda - nu as root coordinates d: nu.offset - lambda.offset.
RatVec diff_coords(const Weight& nu, const Weight& lambda) {
  if (!same_base(nu, lambda)) throw DescriptorError("weights must share a base");
  RatVec d = nu.offset;
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= lambda.offset[i];
  return d;
}

}  // namespace

WeylPolyhedron make_weyl_polyhedron(const CartanData& c, Weight hw, NodeSet j) {
  if (!is_dominant(c, hw, j)) throw NotDominant("P(lambda, J) needs a J-dominant highest weight");
  return WeylPolyhedron{c, std::move(hw), j};
}

bool leq_j(const CartanData& c, NodeSet j, const Weight& nu, const Weight& lambda, bool lattice) {
  const RatVec d = diff_coords(nu, lambda);
  for (const Rat& x : d) {
    if (x < 0) return false;
    if (lattice && !is_integer(x)) return false;
  }
  NodeSet supp_j;
  for (int i : j)
    if (d[i] > 0) supp_j = supp_j.with(i);
  for (NodeSet comp : components(c, supp_j)) {
    bool witness = false;
    for (int node : comp) {
      // (coroot_node, lambda - beta_{I\J})
      Rat p = pairing(c, lambda, node);
      for (int out : c.all_nodes() - j)
        if (d[out] != 0) p -= c.a(node, out) * d[out];
      if (p > 0) {
        witness = true;
        break;
      }
    }
    if (!witness) return false;
  }
  return true;
}

Membership in_weyl_polyhedron(const WeylPolyhedron& p, const Weight& mu, std::uint64_t cap) {
  if (!same_base(p.hw, mu)) throw DescriptorError("membership weight must share the base");
  auto conj = to_dominant(p.cartan, p.j, mu, cap);
  if (!conj) return Membership::cap_exceeded;
  return as_membership(leq_j(p.cartan, p.j, conj->dominant, p.hw, false));
}

namespace {

Membership lattice_membership(const CartanData& c, const Weight& lambda, NodeSet j,
                              const Weight& mu, std::uint64_t cap) {
  if (!same_base(lambda, mu)) throw DescriptorError("membership weight must share the base");
  for (const Rat& x : diff_coords(mu, lambda))
    if (!is_integer(x)) return Membership::no;  // off the root lattice
  auto conj = to_dominant(c, j, mu, cap);
  if (!conj) return Membership::cap_exceeded;
  return as_membership(leq_j(c, j, conj->dominant, lambda, true));
}

}  // namespace

Membership in_wt_parabolic_verma(const ModuleDescriptor& v, const Weight& mu, std::uint64_t cap) {
  if (v.quantum) throw DescriptorError("weight membership is a classical-flavor operation");
  return lattice_membership(v.cartan, v.hw, v.integrability, mu, cap);
}

Membership in_wt_simple(const CartanData& c, const Weight& lambda, const Weight& mu,
                        std::uint64_t cap) {
  NodeSet integrable;
  for (int i : c.all_nodes()) {
    const Rat p = pairing(c, lambda, i);
    if (is_integer(p) && p >= 0) integrable = integrable.with(i);
  }
  return lattice_membership(c, lambda, integrable, mu, cap);
}

bool nondegenerate(const CartanData& c, const Weight& lambda, const Weight& mu) {
  if (!is_dominant(c, lambda, c.all_nodes()))
    throw NotDominant("nondegenerate requires a dominant lambda");
  const RatVec d = diff_coords(mu, lambda);
  NodeSet supp;
  for (int i : c.all_nodes()) {
    if (d[i] < 0 || !is_integer(d[i]))
      throw DescriptorError("nondegenerate requires mu <= lambda in the root lattice");
    if (d[i] > 0) supp = supp.with(i);
  }
  for (NodeSet comp : components(c, supp)) {
    bool meets = false;
    for (int node : comp) {
      if (pairing(c, lambda, node) != 0) {
        meets = true;
        break;
      }
    }
    if (!meets) return false;
  }
  return true;
}

bool polyhedron_contains(const CartanData& c, NodeSet j, const Weight& mu, const Weight& nu) {
  if (!is_dominant(c, mu, j) || !is_dominant(c, nu, j))
    throw NotDominant("polyhedron_contains takes J-dominant weights");
  return leq_j(c, j, mu, nu, false);
}

RayGenerators ray_generators(const ModuleDescriptor& v, std::uint64_t orbit_cap) {
  RayGenerators out;
  const NodeSet non_integrable = v.cartan.all_nodes() - v.integrability;
  // Group elements, not orbit points: for singular lambda the stabilizer
  // still moves the ray directions.
  GroupEnumeration group = enumerate_group(v.cartan, v.integrability, orbit_cap);
  out.truncated = group.truncated;
  std::set<RatVec> seen_vertices;
  std::set<std::pair<RatVec, RatVec>> seen_rays;
  for (const std::vector<int>& word : group.words) {
    Weight vertex = apply_word(v.cartan, v.hw, word);
    if (seen_vertices.insert(vertex.offset).second) out.vertices.push_back(vertex);
    for (int i : non_integrable) {
      RatVec e = zero_vec(v.cartan.size());
      e[i] = 1;
      RatVec dir = apply_word_to_root(v.cartan, std::move(e), word);
      if (seen_rays.emplace(vertex.offset, dir).second)
        out.rays.push_back(RayGenerators::Ray{vertex, std::move(dir)});
    }
  }
  return out;
}

bool HalfSpace::satisfied(const RatVec& offset_coords) const {
  return dot(normal, offset_coords) >= offset;
}

HalfSpaceList half_spaces(const ModuleDescriptor& v, std::uint64_t orbit_cap) {
  if (!is_closed(v)) throw UnclosedError("half-space description needs a closed hull");
  HalfSpaceList out;
  GroupEnumeration group = enumerate_group(v.cartan, v.integrability, orbit_cap);
  out.truncated = group.truncated;
  std::set<std::pair<RatVec, Rat>> seen;
  const int n = v.cartan.size();
  for (const std::vector<int>& word : group.words) {
    const Weight wl = apply_word(v.cartan, v.hw, word);
    for (int i = 0; i < n; ++i) {
      RatVec phi = zero_vec(n);
      phi[i] = 1;
      phi = apply_word_to_coweight(v.cartan, std::move(phi), word);
      Rat off = dot(phi, wl.offset);
      if (seen.emplace(phi, off).second)
        out.list.push_back(HalfSpace{std::move(phi), std::move(off)});
    }
  }
  return out;
}

namespace {

bool component_trivial(const ModuleDescriptor& v, NodeSet comp) {
  if (!comp.subset_of(v.integrability)) return false;
  for (int i : comp)
    if (pairing(v.cartan, v.hw, i) != 0) return false;
  return true;
}

}  // namespace

bool is_polytope(const ModuleDescriptor& v) {
  for (NodeSet comp : components(v.cartan, v.cartan.all_nodes())) {
    if (is_finite_type(v.cartan, comp)) {
      if (!comp.subset_of(v.integrability)) return false;  // a ray escapes
    } else {
      if (!component_trivial(v, comp)) return false;
    }
  }
  return true;
}

bool is_polyhedron(const ModuleDescriptor& v) {
  for (NodeSet comp : components(v.cartan, v.cartan.all_nodes())) {
    if (is_finite_type(v.cartan, comp)) continue;
    if (component_trivial(v, comp)) continue;
    if (!is_finite_type(v.cartan, comp & v.integrability)) return false;
  }
  return true;
}

bool is_closed(const ModuleDescriptor& v) {
  return is_finite_type(v.cartan, stabilizer_nodes(v.cartan, v.integrability, v.hw));
}

}  // namespace weylfaces
