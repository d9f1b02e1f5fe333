#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "grcohom/intmat.hpp"
#include "grcohom/polyhedron.hpp"
#include "grcohom/vec.hpp"

namespace grcohom {

// A face of Q: the subset on which a set of facet functionals vanishes.
struct Face {
  int id = 0;
  std::vector<int> facet_indices;      // canonical: all facets vanishing on the face
  std::vector<int> generator_indices;  // generators of Q lying on the face
  long long dim = 0;                   // rank of the lattice ZF
  std::vector<DegreeVector> gens;      // generator vectors on the face
  IntMat lattice_basis;                // HNF basis of ZF (columns); may be 0 cols
  DegreeVector interior;               // sum of face generators (0 for the {0} face)
};

struct ZonotopeLattice {
  RationalPolyhedron polyhedron;
  std::vector<DegreeVector> points;  // lattice points (in ZQ), global degree order
};

// tau-coordinate window used for degreewise computations.
struct DegreeBox {
  std::vector<std::pair<long long, long long>> range;  // per facet functional
  bool contains_tau(const DegreeVector& t) const {
    for (size_t i = 0; i < range.size(); ++i)
      if (t[i] < range[i].first || t[i] > range[i].second) return false;
    return true;
  }
  DegreeBox enlarged(long long amount) const {
    DegreeBox b = *this;
    for (auto& r : b.range) {
      r.first -= amount;
      r.second += amount;
    }
    return b;
  }
};

class AffineSemigroup {
 public:
  // [OP] build_semigroup
  static std::shared_ptr<const AffineSemigroup> build(std::vector<DegreeVector> generators);

  long long dim() const { return d_; }
  const std::vector<DegreeVector>& generators() const { return gens_; }
  const std::vector<DegreeVector>& facet_functionals() const { return tau_; }
  long long num_facets() const { return static_cast<long long>(tau_.size()); }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_.at(id); }
  const Face& zero_face() const { return faces_.front(); }
  const Face& full_face() const { return faces_.back(); }
  const Face& face_by_facet_set(std::vector<int> facet_idx) const;
  bool saturated() const { return saturated_; }
  long long group_index() const { return group_index_; }
  bool has_relattice() const { return group_index_ != 1; }
  const IntMat& group_basis() const { return group_basis_; }  // columns span ZQ

  DegreeVector tau(const DegreeVector& a) const;
  long long tau_i(size_t i, const DegreeVector& a) const { return dot(tau_[i], a); }
  long long sigma(const DegreeVector& a) const;
  bool in_cone(const DegreeVector& a) const;
  bool in_group(const DegreeVector& a) const;  // a in ZQ

  // [OP] membership: a is a nonnegative integer combination of generators.
  bool membership(const DegreeVector& a) const;

  // [OP] prime_generators: generators of Q off the face (degrees of the
  // monomial generators of P_F).
  std::vector<DegreeVector> prime_generators(const Face& f) const;

  // [OP] tau_of
  TauVector tau_of(const Face& f, const DegreeVector& a) const;

  // membership in the face subsemigroup / its lattice
  bool face_membership(const Face& f, const DegreeVector& a) const;
  bool in_face_lattice(const Face& f, const DegreeVector& a) const;

  // beta in alpha + F - Q (as subsets of Z^d; exact for unsaturated Q too)
  bool in_shifted_support(const DegreeVector& alpha, const Face& f, const DegreeVector& beta) const;

  // delta in Q + ZF
  bool in_Q_plus_ZF(const Face& f, const DegreeVector& delta) const;

  // Canonical representative of (beta0 + ZF) cap Q, minimizing (sigma, tau-lex,
  // coords). beta0 must lie in Q.
  DegreeVector canonical_rep(const Face& f, const DegreeVector& beta0) const;

  // Global degree order: lex on (tau_1(a),...,tau_n(a), coords of a).
  bool degree_less(const DegreeVector& a, const DegreeVector& b) const;

  // [OP] saturate: (Q^sat, Q-set generators of Q^sat over Q)
  std::pair<std::shared_ptr<const AffineSemigroup>, std::vector<DegreeVector>> saturate() const;

  // [OP] zonotope: Minkowski sum of [0, rho] over primitive (w.r.t. ZQ) ray
  // generators, with its ZQ lattice points.
  ZonotopeLattice zonotope() const;
  const std::vector<DegreeVector>& ray_primitives() const { return ray_prims_; }

  RationalPolyhedron cone_polyhedron() const;
  RationalPolyhedron tau_box_polyhedron(const DegreeBox& box) const;
  DegreeBox default_box(long long B) const;
  DegreeBox box_containing(const std::vector<DegreeVector>& degrees, long long B) const;
  long long margin() const;  // max_i max_g tau_i(g)

  // All Z^d degrees with tau in the box, sorted in the global degree order.
  std::vector<DegreeVector> degrees_in_box(const DegreeBox& box) const;

  // [OP] strip: Delta(l_1..l_n) from the per-facet sorted tau lists (with
  // sentinels at positions 0 and r+1).
  RationalPolyhedron strip(const std::vector<TauVector>& sorted_taus,
                           const std::vector<long long>& ell) const;

 private:
  AffineSemigroup() = default;
  bool membership_impl(const DegreeVector& a) const;

  long long d_ = 0;
  std::vector<DegreeVector> gens_;
  std::vector<DegreeVector> tau_;
  std::vector<Face> faces_;
  bool saturated_ = false;
  long long group_index_ = 1;
  IntMat group_basis_;
  std::vector<DegreeVector> ray_prims_;  // primitive w.r.t. ZQ

  mutable std::mutex mu_;
  mutable std::map<DegreeVector, bool> member_cache_;
  mutable std::map<std::pair<int, DegreeVector>, bool> face_member_cache_;
  mutable std::map<std::pair<int, DegreeVector>, bool> qzf_cache_;
};

using SemigroupPtr = std::shared_ptr<const AffineSemigroup>;

// Nonnegative-combination membership for an arbitrary generator list inside
// the cone of Q (used by Hilbert-basis reduction); exact bounded search.
bool combo_membership(const AffineSemigroup& q, const std::vector<DegreeVector>& gens,
                      const DegreeVector& target);

}  // namespace grcohom
