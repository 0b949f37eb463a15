#include "weylfaces/weyl.hpp"

#include <deque>
#include <set>

#include "weylfaces/errors.hpp"

namespace weylfaces {

std::optional<Conjugation> to_dominant(const CartanData& c, NodeSet j, Weight w,
                                       std::uint64_t cap) {
  std::vector<int> word;
  for (std::uint64_t step = 0;; ++step) {
    int neg = -1;
    for (int i : j) {
      if (pairing(c, w, i) < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) return Conjugation{std::move(w), std::move(word)};
    if (step >= cap) return std::nullopt;
    w = reflected(c, neg, std::move(w));
    word.push_back(neg);
  }
}

OrbitReport orbit(const CartanData& c, NodeSet j, const Weight& w, std::uint64_t cap) {
  OrbitReport report;
  report.base = w.base;
  std::deque<const RatVec*> frontier;
  auto [root, inserted] = report.points.emplace(w.offset, std::vector<int>{});
  frontier.push_back(&root->first);
  while (!frontier.empty()) {
    const RatVec& cur = *frontier.front();
    frontier.pop_front();
    const std::vector<int>& word = report.points.at(cur);
    Weight base_weight{report.base, cur};
    for (int i : j) {
      Weight next = reflected(c, i, base_weight);
      if (report.points.count(next.offset)) continue;
      if (report.points.size() >= cap) {
        report.truncated = true;
        return report;
      }
      std::vector<int> next_word = word;
      next_word.push_back(i);
      auto [it, fresh] = report.points.emplace(std::move(next.offset), std::move(next_word));
      frontier.push_back(&it->first);
    }
  }
  return report;
}

RootOrbit root_orbit(const CartanData& c, NodeSet j, const RatVec& coords, std::uint64_t cap) {
  RootOrbit report;
  std::set<RatVec> seen;
  std::deque<RatVec> frontier;
  seen.insert(coords);
  frontier.push_back(coords);
  while (!frontier.empty()) {
    RatVec cur = std::move(frontier.front());
    frontier.pop_front();
    for (int i : j) {
      RatVec next = cur;
      reflect_root_coords(c, i, next);
      if (seen.count(next)) continue;
      if (seen.size() >= cap) {
        report.truncated = true;
        report.points.assign(seen.begin(), seen.end());
        return report;
      }
      frontier.push_back(next);
      seen.insert(std::move(next));
    }
  }
  report.points.assign(seen.begin(), seen.end());
  return report;
}

Membership orbit_is_finite(const CartanData& c, NodeSet j, const Weight& w, std::uint64_t cap) {
  auto conj = to_dominant(c, j, w, cap);
  if (!conj) return Membership::cap_exceeded;
  for (NodeSet comp : components(c, j)) {
    if (is_finite_type(c, comp)) continue;
    for (int node : comp)
      if (pairing(c, conj->dominant, node) != 0) return Membership::no;
  }
  return Membership::yes;
}

NodeSet stabilizer_nodes(const CartanData& c, NodeSet j, const Weight& w) {
  NodeSet out;
  for (int i : j) {
    const Rat p = pairing(c, w, i);
    if (p < 0) throw NotDominant("stabilizer_nodes requires a J-dominant weight");
    if (p == 0) out = out.with(i);
  }
  return out;
}

Membership in_tits_cone_interior(const CartanData& c, NodeSet j, const Weight& w,
                                 std::uint64_t cap) {
  auto conj = to_dominant(c, j, w, cap);
  if (!conj) return Membership::cap_exceeded;
  return as_membership(is_finite_type(c, stabilizer_nodes(c, j, conj->dominant)));
}

ExtInt parabolic_index(const CartanData& c, NodeSet j, NodeSet k, std::uint64_t cap) {
  if (!k.subset_of(j)) throw DescriptorError("parabolic_index requires K subset of J");
  for (NodeSet comp : components(c, j)) {
    if (!is_finite_type(c, comp) && !comp.subset_of(k)) return ExtInt::infinity();
  }
  // Marker with stabilizer exactly W_K inside W_J: pairing 0 on K, 1 on J\K.
  const Weight m = marker_weight(c, j - k);
  OrbitReport rep = orbit(c, j, m, cap);
  if (rep.truncated) throw CapExceededError("parabolic index orbit exceeded cap");
  return ExtInt(static_cast<long>(rep.size()));
}

ExtInt weyl_order(const CartanData& c, NodeSet j, std::uint64_t cap) {
  return parabolic_index(c, j, NodeSet{}, cap);
}

Weight marker_weight(const CartanData& c, NodeSet ones) {
  RatVec p = zero_vec(c.size());
  for (int i : ones) p[i] = 1;
  return weight_from_pairings(c, std::move(p));
}

GroupEnumeration enumerate_group(const CartanData& c, NodeSet j, std::uint64_t cap) {
  const Weight regular = marker_weight(c, j);
  OrbitReport rep = orbit(c, j, regular, cap);
  GroupEnumeration out;
  out.truncated = rep.truncated;
  out.words.reserve(rep.size());
  for (auto& [offset, word] : rep.points) out.words.push_back(word);
  return out;
}

}  // namespace weylfaces
