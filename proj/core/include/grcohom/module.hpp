#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "grcohom/matrix.hpp"
#include "grcohom/semigroup.hpp"

namespace grcohom {

// One term c * x^mon * e_gen of a relation or map row; mon lies in Q.
struct Term {
  Scalar c;
  int gen = 0;
  DegreeVector mon;
};
using TermRow = std::vector<Term>;

class GradedModule;
using ModulePtr = std::shared_ptr<const GradedModule>;

// Degree component of a presented module: the free coordinates of
// k^{live} / (relation rows).
struct DegreeComponent {
  std::vector<int> live;       // generator indices j with a - deg_j in Q
  Subspace relspace;           // relation row space in live coordinates
  std::vector<int> free_cols;  // quotient coordinates (non-pivot live columns)
  long long dim() const { return static_cast<long long>(free_cols.size()); }
};

// A finitely generated Z^d-graded module over k[Q], presented by generator
// degrees and homogeneous relation rows. Degree components are computed
// lazily and exactly; no global box is needed until generating sets are
// extracted.
class GradedModule : public std::enable_shared_from_this<GradedModule> {
 public:
  GradedModule(SemigroupPtr q, Field f, std::vector<DegreeVector> gen_degrees,
               std::vector<TermRow> relations);

  const SemigroupPtr& semigroup() const { return q_; }
  Field field() const { return f_; }
  const std::vector<DegreeVector>& gen_degrees() const { return gen_degrees_; }
  const std::vector<TermRow>& relations() const { return relations_; }
  bool is_q_graded() const;

  const DegreeComponent& component(const DegreeVector& a) const;
  long long dim_at(const DegreeVector& a) const { return component(a).dim(); }

  // multiplication x^m : M_a -> M_{a+m} on quotient coordinates (m in Q)
  const Matrix& mult_matrix(const DegreeVector& a, const DegreeVector& m) const;

  // conversions between canonical F_a representatives and quotient coordinates
  std::vector<Scalar> to_coords(const DegreeVector& a, const std::vector<Scalar>& frep) const;
  std::vector<Scalar> from_coords(const DegreeVector& a, const std::vector<Scalar>& coords) const;

  DegreeVector relation_degree(const TermRow& row) const;

 private:
  SemigroupPtr q_;
  Field f_;
  std::vector<DegreeVector> gen_degrees_;
  std::vector<TermRow> relations_;
  std::vector<DegreeVector> relation_degrees_;

  mutable std::mutex mu_;
  mutable std::map<DegreeVector, DegreeComponent> cache_;
  mutable std::map<std::pair<DegreeVector, DegreeVector>, Matrix> mult_cache_;
};

// A module element in quotient coordinates at a fixed degree.
struct ModuleElement {
  DegreeVector deg;
  std::vector<Scalar> coords;
};

TermRow element_to_terms(const GradedModule& m, const ModuleElement& e);

// Degree-0 homomorphism given by the images of the source generators.
struct GradedMap {
  ModulePtr source, target;
  std::vector<TermRow> rows;  // rows[j] = image of source generator j

  Matrix at(const DegreeVector& a) const;  // dim_target(a) x dim_source(a)
};

GradedMap zero_map(ModulePtr source, ModulePtr target);

// --- presentation extraction --------------------------------------------------

using SubspaceFn = std::function<Subspace(const DegreeVector&)>;

struct Presentation {
  std::shared_ptr<GradedModule> module;
  std::vector<ModuleElement> generators;  // in the ambient module
};

// Present the subquotient U/W of the ambient module over the box: choose
// minimal generators degree by degree (in the global order), then extract the
// minimal relations among them. W(a) must be contained in U(a) and both must
// be multiplication-stable. Throws BoxTooSmall when a generator or relation
// lands in the margin band at the top of the box.
Presentation present_subquotient(const ModulePtr& ambient, const DegreeBox& box,
                                 const SubspaceFn& U, const SubspaceFn& W,
                                 bool margin_check = true);

Subspace full_component(const GradedModule& m, const DegreeVector& a);

// [OP] kernel / image_cokernel / minimal_generators / colon / gamma
Presentation kernel_module(const GradedMap& f, const DegreeBox& box);
std::pair<Presentation, Presentation> image_cokernel(const GradedMap& f, const DegreeBox& box);
std::vector<DegreeVector> minimal_generators(const ModulePtr& m, const DegreeBox& box);

Subspace colon_subspace(const GradedModule& m, const std::vector<DegreeVector>& ideal_gens,
                        const DegreeVector& a, long long power = 1);
Presentation colon_submodule(const ModulePtr& m, const Face& f, const DegreeBox& box);
Presentation gamma_submodule(const ModulePtr& m, const std::vector<DegreeVector>& ideal_gens,
                             const DegreeBox& box, long long* out_power = nullptr);
Presentation gamma_F(const ModulePtr& m, const Face& f, const DegreeBox& box);

// quotient of m by explicit elements (adds relation rows; no re-presentation)
std::shared_ptr<GradedModule> quotient_by_elements(const ModulePtr& m,
                                                   const std::vector<ModuleElement>& elements);

std::shared_ptr<GradedModule> shifted(const ModulePtr& m, const DegreeVector& a);  // M(-a)

// --- localization bases (Alg a:B / a:B') --------------------------------------

// Greedy k[ZF]-basis of (0 :_M P_F)[ZF]: elements of the colon whose image
// modulo the previously chosen ones has annihilator exactly P_F (tested by
// stabilized multiplication along the face, horizon = the box).
std::vector<ModuleElement> localization_basis(const ModulePtr& m, const Face& f,
                                              const DegreeBox& box);

// Scalar coefficients of z on the basis B (Alg a:B'); zero off B(z).
std::vector<Scalar> coefficient_on_basis(const ModulePtr& m, const Face& f,
                                         const ModuleElement& z,
                                         const std::vector<ModuleElement>& basis);

}  // namespace grcohom
