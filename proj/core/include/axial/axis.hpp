#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axial/algebra.hpp"
#include "axial/exactlin.hpp"
#include "axial/fusion.hpp"

namespace axial {

struct Axis {
  Vec vector;
  // One entry per law value, in law order; spaces may be zero.
  std::vector<EigenPart> eigen;
  FusionLaw law;
  bool primitive = false;
  // Identity on the plus part, minus identity on the minus part.
  Mat miyamoto;
  // Present when the minus part is zero and the law restricted to the
  // occurring eigenvalues still has a nontrivial grading.
  std::optional<Mat> sigma;

  const Subspace& eigenspace(const Rat& lambda) const;
  bool tau_trivial() const;
};

enum class AxisFailure {
  none,
  zero_vector,
  not_idempotent,
  not_semisimple,
  bad_spectrum,
  fusion_violation,
  not_primitive,
};

const char* to_string(AxisFailure f);

struct AxisCheck {
  std::optional<Axis> axis;
  AxisFailure reason = AxisFailure::none;
  std::string detail;
  explicit operator bool() const { return axis.has_value(); }
};

AxisCheck check_axis(const Algebra& alg, const Vec& v, const FusionLaw& law, bool require_primitive = true);

const Mat& miyamoto_involution(const Axis& ax);

// Derivations as flattened matrices (row-major, entry (r,c) at r*n + c).
Subspace derivation_space(const Algebra& alg);
Mat unflatten(const Vec& v, std::size_t n);

// The smallest fusion law (over the eigenvalues of ad_v) that v obeys, or
// nullopt if v is not a semisimple idempotent with rational spectrum.
std::optional<FusionLaw> infer_fusion_law(const Algebra& alg, const Vec& v);

// a (w v) == (a w) v
bool associates(const Algebra& alg, const Vec& a, const Vec& w, const Vec& v);

}  // namespace axial
