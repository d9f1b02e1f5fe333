#pragma once

#include "grcohom/injective.hpp"
#include "grcohom/monomat.hpp"

namespace grcohom {

// tau-vectors of the summands plus the per-facet sorted value lists (with
// -inf / +inf sentinels at both ends).
struct TauTable {
  std::vector<TauVector> tau_j;      // one per summand
  std::vector<TauVector> tau_tilde;  // one per facet, length r + 2
};

// [OP] tau_table (Lemma l:store bookkeeping)
TauTable tau_table(const AffineSemigroup& q, const std::vector<InjLabel>& labels);

struct Sector {
  std::vector<int> index;                     // alive summands (into the label list)
  std::vector<std::vector<long long>> ells;   // index tuples of its strips
  std::vector<RationalPolyhedron> regions;    // the strip polyhedra
  long long space_dim = 0;
  Matrix basis;  // rows: representatives of H_S inside k^{index} (cohomology case)
  std::vector<int> a_prime, a_mid, a_second;  // triple split (cohomology case)
};

struct SectorPartition {
  SemigroupPtr q;
  std::vector<InjLabel> labels;
  TauTable table;
  std::vector<Sector> sectors;
  std::map<std::pair<int, int>, Matrix> transitions;  // (from, to) -> H_S -> H_T
  long long block_prime = 0, block_mid = 0, block_second = 0;  // cohomology split sizes

  // index of the sector containing a lattice degree (must be covered)
  int sector_of(const DegreeVector& alpha) const;
};

// [OP] sector_set (Alg a:secset): sectors with regions and indices only.
SectorPartition sector_set(const SemigroupPtr& q, const std::vector<InjLabel>& labels);

// [OP] sector_comparable (Alg a:secposet)
bool sector_comparable(const SectorPartition& sp, size_t ia, size_t ib);

// [OP] sector_partition_injective (Prop p:sectors)
SectorPartition sector_partition_injective(const SemigroupPtr& q,
                                           const std::vector<InjLabel>& labels);

// [OP] sector_partition_cohomology (Thm t:decomp): middle homology of
// phi: J' -> J and psi: J -> J''.
SectorPartition sector_partition_cohomology(const SemigroupPtr& q, const MonomialMatrix& phi,
                                            const MonomialMatrix& psi);

// [OP] gamma_I on a computed injective resolution: keep the summands whose
// associated prime contains I.
InjectiveResolution gamma_I(const SemigroupPtr& q, const InjectiveResolution& res,
                            const std::vector<DegreeVector>& ideal_gens);

// [OP] local_cohomology: sector partition of H^i_I(M).
SectorPartition local_cohomology(const ModulePtr& m, const std::vector<DegreeVector>& ideal_gens,
                                 long long i, const DegreeBox& box,
                                 const HullOptions& opts = {});

// [OP] hilbert_table
struct HilbertRow {
  std::vector<int> index;
  std::vector<RationalPolyhedron> regions;
  long long dim = 0;
};
std::vector<HilbertRow> hilbert_table(const SectorPartition& sp);

SectorPartition translate_partition(SectorPartition sp, const DegreeVector& shift);

}  // namespace grcohom
