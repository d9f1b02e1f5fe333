#pragma once

#include "grcohom/irreducible.hpp"

namespace grcohom {

// Minimal graded free resolution of k = k[Q]/m up to a homological degree.
struct FreeResolution {
  std::vector<std::vector<DegreeVector>> degs;  // generator degrees of F_j
  std::vector<std::vector<TermRow>> d;          // d[j]: rows of F_j -> F_{j-1}; d[0] unused
};
FreeResolution free_resolution_of_k(const SemigroupPtr& q, Field f, long long jmax,
                                    const DegreeBox& box);

// [TYPE] BassTable: (cohomological degree j, degree alpha) -> mu^{j,alpha}(M),
// maximal-ideal Bass numbers, nonzero entries within the box only.
struct BassTable {
  std::map<std::pair<long long, DegreeVector>, long long> mu;
  long long at(long long j, const DegreeVector& a) const {
    auto it = mu.find({j, a});
    return it == mu.end() ? 0 : it->second;
  }
};

// [OP] bass_numbers via Hom(F_., M) homology, degreewise on the box.
BassTable bass_numbers(const ModulePtr& m, long long jmax, const DegreeBox& box);

// Upper bound for dim(M): the largest dimension of an associated face,
// detected by a nonempty localization basis.
long long module_dimension(const ModulePtr& m, const DegreeBox& box);

// [OP] choose_shift: minimal a in Q (global degree order) moving all Bass
// degrees through j = i + 1 + dim(M) into Q.
DegreeVector choose_shift(const ModulePtr& m, long long i, const DegreeBox& box);

// [OP] injective_resolution: irreducible resolution of M(-a) reinterpreted as
// the first n stages of the minimal injective resolution of M(-a).
struct InjectiveResolution {
  DegreeVector shift;        // a, with J^. resolving M(-a)
  IrreducibleResolution res;
};
InjectiveResolution injective_resolution(const ModulePtr& m, long long n, const DegreeBox& box,
                                         const HullOptions& opts = {});

std::vector<InjLabel> resolution_stage_labels(const InjectiveResolution& r, size_t stage);

}  // namespace grcohom
