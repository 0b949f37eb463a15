#include "weylfaces/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "weylfaces/errors.hpp"
#include "weylfaces/linalg.hpp"

namespace weylfaces {

namespace {

using Bitset = std::vector<std::uint64_t>;

Bitset make_bitset(std::size_t n) { return Bitset((n + 63) / 64, 0); }
void bitset_set(Bitset& b, std::size_t i) { b[i / 64] |= (std::uint64_t{1} << (i % 64)); }
bool bitset_test(const Bitset& b, std::size_t i) {
  return (b[i / 64] >> (i % 64)) & 1u;
}
Bitset bitset_and(const Bitset& a, const Bitset& b) {
  Bitset out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}
bool bitset_empty(const Bitset& b) {
  for (std::uint64_t w : b)
    if (w) return false;
  return true;
}

// Rescales a hyperplane (normal, offset) to integer entries with content 1.
// Only positive scaling, so the orientation (inside: dot <= offset) survives.
void canonicalize_hyperplane(RatVec& n, Rat& b) {
  Int l = 1;
  for (const Rat& x : n) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b.get_den().get_mpz_t());
  Int g = 0;
  for (Rat& x : n) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
  }
  b *= l;
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b.get_num().get_mpz_t());
  if (g == 0) g = 1;
  for (Rat& x : n) x /= Rat(g);
  b /= Rat(g);
}

// Coordinates of the points inside their affine hull, via a reduced echelon
// basis of the difference span (coordinates are read off the pivot columns).
struct AffineChart {
  std::vector<RatVec> coords;  // per point, dimension d
  int dim = 0;
};

AffineChart affine_chart(const std::vector<RatVec>& pts) {
  AffineChart chart;
  const std::size_t ambient = pts[0].size();
  RatMatrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    RatVec d(ambient);
    for (std::size_t c = 0; c < ambient; ++c) d[c] = pts[i][c] - pts[0][c];
    diffs.push_back(std::move(d));
  }
  // Reduced row echelon form; record pivot columns.
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ambient && row < diffs.size(); ++col) {
    std::size_t piv = row;
    while (piv < diffs.size() && diffs[piv][col] == 0) ++piv;
    if (piv == diffs.size()) continue;
    std::swap(diffs[row], diffs[piv]);
    const Rat inv = 1 / diffs[row][col];
    for (std::size_t c = 0; c < ambient; ++c) diffs[row][c] *= inv;
    for (std::size_t r = 0; r < diffs.size(); ++r) {
      if (r == row || diffs[r][col] == 0) continue;
      const Rat f = diffs[r][col];
      for (std::size_t c = 0; c < ambient; ++c) diffs[r][c] -= f * diffs[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  chart.dim = static_cast<int>(pivots.size());
  chart.coords.reserve(pts.size());
  for (const RatVec& p : pts) {
    RatVec q(pivots.size());
    for (std::size_t k = 0; k < pivots.size(); ++k) q[k] = p[pivots[k]] - pts[0][pivots[k]];
    chart.coords.push_back(std::move(q));
  }
  return chart;
}

// All size-k index combinations of {0, ..., m-1}, visited in lex order.
template <typename Fn>
void for_combinations(std::size_t m, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > m) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx[i] != i + m - k) break;
      if (i == 0) return;
    }
    ++idx[i];
    for (std::size_t jj = i + 1; jj < k; ++jj) idx[jj] = idx[jj - 1] + 1;
  }
}

}  // namespace

HullComplex hull_complex(const std::vector<RatVec>& input, const HullOptions& opts) {
  if (input.empty()) throw TooLarge("hull of an empty point set");
  std::set<RatVec> dedupe(input.begin(), input.end());
  HullComplex hull;
  hull.points.assign(dedupe.begin(), dedupe.end());
  const std::size_t m = hull.points.size();
  if (m > opts.max_points) throw TooLarge("too many points for exhaustive hull enumeration");
  const std::size_t ambient = hull.points[0].size();

  const AffineChart chart = affine_chart(hull.points);
  const int d = chart.dim;
  hull.dim = d;
  hull.full_dimensional = (static_cast<std::size_t>(d) == ambient);
  if (d == 0) {
    // A single point: its unique extreme point is the whole polytope.
    hull.face_counts[0] = 1;
    return hull;
  }
  if (d > opts.max_dim)
    throw TooLarge("affine dimension " + std::to_string(d) + " beyond the exhaustive-search bound");

  // Supporting-hyperplane search over affinely independent d-subsets.
  std::set<std::pair<RatVec, Rat>> seen;
  std::vector<Bitset> facet_sets;
  for_combinations(m, static_cast<std::size_t>(d), [&](const std::vector<std::size_t>& idx) {
    // Skip subsets lying inside an already-found facet.
    for (const Bitset& fs : facet_sets) {
      bool inside = true;
      for (std::size_t i : idx)
        if (!bitset_test(fs, i)) {
          inside = false;
          break;
        }
      if (inside) return;
    }
    RatMatrix rows;
    for (std::size_t t = 1; t < idx.size(); ++t) {
      RatVec r(d);
      for (int c = 0; c < d; ++c)
        r[c] = chart.coords[idx[t]][c] - chart.coords[idx[0]][c];
      rows.push_back(std::move(r));
    }
    const std::vector<RatVec> kernel = kernel_basis(rows, d);
    if (kernel.size() != 1) return;  // affinely dependent subset
    RatVec n = kernel[0];
    Rat b = dot(n, chart.coords[idx[0]]);
    bool above = false, below = false;
    for (std::size_t i = 0; i < m; ++i) {
      const int s = sgn(dot(n, chart.coords[i]) - b);
      above = above || s > 0;
      below = below || s < 0;
      if (above && below) return;  // not supporting
    }
    if (above) {
      for (Rat& x : n) x = -x;
      b = -b;
    }
    canonicalize_hyperplane(n, b);
    if (!seen.emplace(n, b).second) return;
    HullComplex::Facet facet;
    Bitset fs = make_bitset(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (dot(n, chart.coords[i]) == b) {
        facet.incident.push_back(i);
        bitset_set(fs, i);
      }
    }
    facet.normal = std::move(n);
    facet.offset = std::move(b);
    hull.facets.push_back(std::move(facet));
    facet_sets.push_back(std::move(fs));
  });
  for (const HullComplex::Facet& facet : hull.facets) {
    std::vector<RatVec> pts;
    for (std::size_t i : facet.incident) pts.push_back(chart.coords[i]);
    if (affine_rank(pts) != d - 1)
      throw std::logic_error("hull oracle produced an unsupported facet");
  }

  // Face lattice: closure of the facet point sets under intersection.
  std::set<Bitset> faces(facet_sets.begin(), facet_sets.end());
  std::deque<Bitset> frontier(facet_sets.begin(), facet_sets.end());
  while (!frontier.empty()) {
    Bitset f = std::move(frontier.front());
    frontier.pop_front();
    for (const Bitset& g : facet_sets) {
      Bitset h = bitset_and(f, g);
      if (bitset_empty(h) || faces.count(h)) continue;
      frontier.push_back(h);
      faces.insert(std::move(h));
    }
  }
  for (const Bitset& f : faces) {
    std::vector<RatVec> pts;
    for (std::size_t i = 0; i < m; ++i)
      if (bitset_test(f, i)) pts.push_back(chart.coords[i]);
    ++hull.face_counts[affine_rank(pts)];
  }
  // The polytope itself is a face; the chart never produces it as a facet
  // intersection, so add it regardless of how the input sits in its ambient
  // space.
  ++hull.face_counts[d];

  // Euler relation over the proper faces of a d-polytope.
  Int euler = 0;
  for (long i = 0; i < d; ++i) {
    auto it = hull.face_counts.find(i);
    const long fi = it == hull.face_counts.end() ? 0 : it->second;
    euler += (i % 2 == 0) ? fi : -fi;
  }
  const Int expected = (d % 2 == 0) ? 0 : 2;
  if (euler != expected) throw std::logic_error("hull oracle violated the Euler relation");
  return hull;
}

ExtPolynomial hull_f_polynomial(const std::vector<RatVec>& points, const HullOptions& opts) {
  const HullComplex hull = hull_complex(points, opts);
  ExtPolynomial f;
  for (const auto& [dim, count] : hull.face_counts) f.add_term(dim, ExtInt(count));
  return f;
}

std::set<RatVec> enumerate_integrable_weights(const CartanData& c, const Weight& lambda,
                                              std::uint64_t cap) {
  for (int i : c.all_nodes()) {
    const Rat p = pairing(c, lambda, i);
    if (!is_integer(p) || p < 0)
      throw DescriptorError("integrable enumeration needs a dominant integral highest weight");
  }
  const WeylPolyhedron hullp = make_weyl_polyhedron(c, lambda, c.all_nodes());
  std::set<RatVec> members;
  std::deque<RatVec> frontier;
  members.insert(lambda.offset);
  frontier.push_back(lambda.offset);
  while (!frontier.empty()) {
    RatVec cur = std::move(frontier.front());
    frontier.pop_front();
    for (int i : c.all_nodes()) {
      RatVec child = cur;
      child[i] += 1;
      if (members.count(child)) continue;
      if (in_weyl_polyhedron(hullp, Weight{lambda.base, child}, cap) != Membership::yes) continue;
      if (members.size() >= cap) throw CapExceededError("integrable weight enumeration over cap");
      frontier.push_back(child);
      members.insert(std::move(child));
    }
  }
  return members;
}

std::set<RatVec> enumerate_module_weights_within(const CartanData& c, const Weight& lambda,
                                                 NodeSet ambient, NodeSet integrability, int depth,
                                                 std::uint64_t cap) {
  if (!integrability.subset_of(ambient))
    throw DescriptorError("integrability must lie inside the ambient sub-diagram");
  if (!is_finite_type(c, integrability))
    throw DescriptorError("slice enumeration needs finite-type integrability");
  for (int i : integrability) {
    const Rat p = pairing(c, lambda, i);
    if (!is_integer(p) || p < 0)
      throw DescriptorError("slice enumeration needs integral dominant pairings on J");
  }
  std::set<RatVec> members;
  const std::vector<int> outside = (ambient - integrability).indices();

  // One integrable Levi slice per mu in Z>=0 (pi_ambient \ pi_J), |mu| <= depth.
  auto run_slice = [&](const RatVec& mu_offset, int used) {
    Weight top{lambda.base, lambda.offset};
    for (std::size_t i = 0; i < mu_offset.size(); ++i) top.offset[i] += mu_offset[i];
    const WeylPolyhedron slice = make_weyl_polyhedron(c, top, integrability);
    std::deque<RatVec> frontier;
    std::set<RatVec> local;
    local.insert(top.offset);
    frontier.push_back(top.offset);
    int budget = depth - used;
    while (!frontier.empty()) {
      RatVec cur = std::move(frontier.front());
      frontier.pop_front();
      Rat cur_depth = 0;
      for (std::size_t i = 0; i < cur.size(); ++i) cur_depth += cur[i] - top.offset[i];
      if (cur_depth >= budget) continue;
      for (int i : integrability) {
        RatVec child = cur;
        child[i] += 1;
        if (local.count(child)) continue;
        if (in_weyl_polyhedron(slice, Weight{lambda.base, child}, cap) != Membership::yes)
          continue;
        if (members.size() + local.size() >= cap)
          throw CapExceededError("module weight enumeration over cap");
        frontier.push_back(child);
        local.insert(std::move(child));
      }
    }
    members.insert(local.begin(), local.end());
  };

  // Multi-index enumeration over the non-integrable directions.
  RatVec mu = zero_vec(c.size());
  auto recurse = [&](auto&& self, std::size_t pos, int used) -> void {
    if (pos == outside.size()) {
      run_slice(mu, used);
      return;
    }
    for (int k = 0; used + k <= depth; ++k) {
      mu[outside[pos]] = k;
      self(self, pos + 1, used + k);
    }
    mu[outside[pos]] = 0;
  };
  recurse(recurse, 0, 0);
  return members;
}

std::set<RatVec> enumerate_module_weights(const ModuleDescriptor& v, int depth,
                                          std::uint64_t cap) {
  if (v.quantum) throw DescriptorError("weight enumeration is a classical-flavor operation");
  return enumerate_module_weights_within(v.cartan, v.hw, v.cartan.all_nodes(), v.integrability,
                                         depth, cap);
}

RatSampler::RatSampler(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

std::uint64_t RatSampler::next() {
  // splitmix64: deterministic across platforms.
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rat RatSampler::unit() {
  // 1/64 grid plus 1/1024 jitter.
  const unsigned long grid = next() % 64;
  const unsigned long jitter = next() % 16;
  Rat x(grid * 16 + jitter, 1024);
  x.canonicalize();
  return x;
}

Rat RatSampler::in_range(const Rat& lo, const Rat& hi) { return lo + (hi - lo) * unit(); }

long RatSampler::int_in(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

CrosscheckReport sample_membership_crosscheck(const ModuleDescriptor& v, long n_samples,
                                              std::uint64_t seed, std::uint64_t cap) {
  if (!is_closed(v)) throw UnclosedError("membership crosscheck needs a closed hull");
  const RayGenerators gen = ray_generators(v, cap);
  if (gen.truncated) throw CapExceededError("crosscheck needs the full generator set");
  const HalfSpaceList hs = half_spaces(v, cap);
  if (hs.truncated) throw CapExceededError("crosscheck needs the full half-space set");

  const int n = v.cartan.size();
  const Rat truncation(10);
  RatVec lo = gen.vertices[0].offset, hi = gen.vertices[0].offset;
  auto widen = [&](const RatVec& p) {
    for (int i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  };
  for (const Weight& w : gen.vertices) widen(w.offset);
  for (const RayGenerators::Ray& r : gen.rays) {
    RatVec end = r.vertex.offset;
    for (int i = 0; i < n; ++i) end[i] += truncation * r.direction[i];
    widen(end);
  }
  for (int i = 0; i < n; ++i) {
    lo[i] -= 1;
    hi[i] += 1;
  }

  const WeylPolyhedron hullp = make_weyl_polyhedron(v.cartan, v.hw, v.integrability);
  RatSampler sampler(seed);
  CrosscheckReport report;
  for (long s = 0; s < n_samples; ++s) {
    RatVec offset(n);
    for (int i = 0; i < n; ++i) offset[i] = sampler.in_range(lo[i], hi[i]);
    bool inside_halfspaces = true;
    for (const HalfSpace& h : hs.list) {
      if (!h.satisfied(offset)) {
        inside_halfspaces = false;
        break;
      }
    }
    const Membership member = in_weyl_polyhedron(hullp, Weight{v.hw.base, offset}, cap);
    ++report.samples;
    if (member == Membership::cap_exceeded) {
      ++report.cap_exceeded;
      continue;
    }
    const bool inside = member == Membership::yes;
    if (inside) ++report.members;
    if (inside != inside_halfspaces) ++report.disagreements;
  }
  return report;
}

}  // namespace weylfaces
