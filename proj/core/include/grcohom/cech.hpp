#pragma once

#include "grcohom/module.hpp"

namespace grcohom {

// Independent brute-force check for local cohomology: the Cech complex on the
// ideal generators, with localizations computed by stabilized multiplication.
struct CechOracleResult {
  std::map<DegreeVector, long long> dims;            // H^i dimension per degree in the box
  std::vector<DegreeVector> localization_degrees;    // inverted multidegrees (one per subset)
  long long horizon = 0;                             // stabilization level used
};

CechOracleResult cech_oracle(const ModulePtr& m, const std::vector<DegreeVector>& ideal_gens,
                             long long i, const DegreeBox& box);

}  // namespace grcohom
