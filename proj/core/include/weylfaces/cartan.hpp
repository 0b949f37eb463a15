#pragma once

#include <string>
#include <vector>

#include "weylfaces/nodeset.hpp"
#include "weylfaces/rational.hpp"

namespace weylfaces {

/// A validated generalized Cartan matrix with node labels.
/// Immutable after construction; all operations on it are pure.
class CartanData {
public:
  int size() const { return static_cast<int>(a_.size()); }
  int a(int i, int j) const { return a_[i][j]; }
  bool adjacent(int i, int j) const { return i != j && a_[i][j] != 0; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::vector<int>>& matrix() const { return a_; }

  /// Rank of the matrix over Q.
  int rank_a() const { return rank_; }
  /// Dimension of a realization: 2|I| - rank(A) = |I| + corank(A).
  int realization_dim() const { return 2 * size() - rank_; }
  int corank() const { return size() - rank_; }

  NodeSet all_nodes() const { return NodeSet::full(size()); }

private:
  friend CartanData validate_gcm(const std::vector<std::vector<int>>&, std::vector<std::string>);
  std::vector<std::vector<int>> a_;
  std::vector<std::string> labels_;
  int rank_ = 0;
};

/// Checks the GCM axioms (2 on the diagonal, nonpositive off-diagonal,
/// symmetric vanishing) and computes the exact rank.
/// Throws GcmViolation; labels default to "0", "1", ...
CartanData validate_gcm(const std::vector<std::vector<int>>& matrix,
                        std::vector<std::string> labels = {});

/// Connected components of the sub-diagram on J (i ~ j iff a_ij != 0),
/// ordered by smallest node.
std::vector<NodeSet> components(const CartanData& c, NodeSet j);

/// Positive symmetrizer d on J: d_i a_ij = d_j a_ji for i, j in J.
/// Entries outside J are zero. Throws NotSymmetrizable.
RatVec symmetrizer(const CartanData& c, NodeSet j);

/// True iff the principal submatrix A_J is of finite type, decided by
/// positive definiteness of the symmetrization D_J A_J.
bool is_finite_type(const CartanData& c, NodeSet j);

}  // namespace weylfaces
