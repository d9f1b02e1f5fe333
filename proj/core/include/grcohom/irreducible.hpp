#pragma once

#include "grcohom/module.hpp"
#include "grcohom/monomat.hpp"

namespace grcohom {

// One summand k{alpha + F - Q}_Q of an irreducible sum. `degree` is the
// canonical coset representative mod ZF (inside Q); `raw_degree` is the degree
// of the basis element that produced it.
struct EffectiveSummand {
  int face_id = 0;
  DegreeVector degree;
  DegreeVector raw_degree;
};

struct EffectiveData {
  std::vector<EffectiveSummand> summands;
};

struct EffectiveVector {
  DegreeVector degree;          // degree of the module generator
  std::vector<Scalar> entries;  // one per summand
};

struct EffectiveHull {
  EffectiveData data;
  std::vector<EffectiveVector> vectors;  // one per module generator
};

struct HullOptions {
  bool skip_quotients = false;     // Remark r:avoid.1 shortcut: keep N = M
  bool per_face_zonotope = false;  // Remark r:polytopes.1 alternative
};

// [OP] irreducible_hull (Alg a:irred)
EffectiveHull irreducible_hull(const ModulePtr& m, const DegreeBox& box,
                               const HullOptions& opts = {});

// [OP] halfspace_ideal_generators (Alg a:polytopes + post-filter)
std::vector<DegreeVector> halfspace_ideal_generators(const SemigroupPtr& q, int facet_index,
                                                     const DegreeVector& a,
                                                     bool per_face_zonotope = false);

// [OP] irreducible_ideal_generators (saturated case)
std::vector<DegreeVector> irreducible_ideal_generators(const SemigroupPtr& q, const Face& f,
                                                       const DegreeVector& a,
                                                       bool per_face_zonotope = false);

// [OP] irreducible_ideal_generators_unsat (Alg a:unsat)
std::vector<DegreeVector> irreducible_ideal_generators_unsat(const SemigroupPtr& q, const Face& f,
                                                             const DegreeVector& a,
                                                             const DegreeBox& box);

// W-bar as a presented module plus the embedding M -> W-bar given by the hull.
struct HullEmbedding {
  std::shared_ptr<GradedModule> wbar;  // one degree-0 generator per summand
  GradedMap embed;
};
HullEmbedding hull_embedding(const ModulePtr& m, const EffectiveHull& hull, const DegreeBox& box,
                             const HullOptions& opts = {});

// [OP] hull_cokernel
struct HullCokernel {
  HullEmbedding emb;
  Presentation coker;
};
HullCokernel hull_cokernel(const ModulePtr& m, const EffectiveHull& hull, const DegreeBox& box,
                           const HullOptions& opts = {});

// [OP] irreducible_resolution
struct IrreducibleResolution {
  std::vector<EffectiveData> stages;
  std::vector<MonomialMatrix> maps;  // maps[i]: stage i -> stage i+1
};
IrreducibleResolution irreducible_resolution(const ModulePtr& m, long long n, const DegreeBox& box,
                                             const HullOptions& opts = {});

std::vector<InjLabel> stage_labels(const EffectiveData& data);

// Minimal generators of a Q-set given by a predicate, scanned on the tau-box;
// exact for Q-sets inside the cone whose generators lie in the box.
std::vector<DegreeVector> minimal_qset_generators(const AffineSemigroup& q,
                                                  const std::function<bool(const DegreeVector&)>& in_set,
                                                  const DegreeBox& scan);

}  // namespace grcohom
