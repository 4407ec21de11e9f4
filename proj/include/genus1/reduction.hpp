#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genus1/models.hpp"

namespace genus1 {

/// A point of (weighted) projective space over F_p, normalized so that the
/// first nonzero weight-1 coordinate is 1; the only point with every
/// weight-1 coordinate zero is stored with its remaining coordinate 1.
struct ProjectivePoint {
  std::vector<Fp> coordinates;
  std::vector<unsigned> weights;

  /// "(1:1:1:1)"
  std::string to_string() const;
  std::vector<std::uint64_t> residues() const;
  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.weights == b.weights && a.residues() == b.residues();
  }
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.residues() < b.residues();
  }
};

/// Every point of P(weights) over F_p, each once. Weights other than 1 are
/// supported only where at least one weight is 1.
std::vector<ProjectivePoint> projective_points(const std::vector<unsigned>& weights, PrimeModulus p);

/// F_p-rational singular points of the reduction of a model of degree 1..4,
/// sorted. Criteria:
///   n=1  affine Weierstrass chart: f = f_x = f_y = 0
///   n=2  y^2 + p y - q on P(1,2,1): charts z=1 {F, F_x, F_y} and x=1 {F, F_y, F_z}
///   n=3  F = F_x = F_y = F_z = 0
///   n=4  q1 = q2 = 0 and the 2x4 Jacobian matrix has rank < 2
/// Degree-4 models are reduced through their quadric polynomials. Throws
/// ReductionError when a coefficient does not reduce, DomainError for degree 5.
std::vector<ProjectivePoint> singular_points_mod_p(const GenusOneModel& m, PrimeModulus p);

/// Searches for a singular point of the reduction over the algebraic closure
/// of F_p: F_p first, then F_{p^k} for the k allowed by the degree (a reduced
/// connected curve of arithmetic genus one has at most as many singular
/// points as components, so some singular point lies over F_{p^k}, k <= n).
/// Returns the k of the field where one was certified, or nullopt if smooth.
std::optional<unsigned> geometric_singularity_degree(const GenusOneModel& m, PrimeModulus p);

struct SmoothnessReport {
  std::vector<ProjectivePoint> rational_singular_points;
  std::optional<unsigned> singular_over;  // field degree, nullopt = smooth
  Rational delta;
  bool delta_vanishes = false;  // delta = 0 mod p
  bool consistent = false;      // singular <=> delta_vanishes
};

/// Compares the brute-force smoothness verdict with the discriminant of the
/// model (degree 1..4, p-integral discriminant).
SmoothnessReport smoothness_report(const GenusOneModel& m, PrimeModulus p);
bool smoothness_discriminant_consistency(const GenusOneModel& m, PrimeModulus p);

}  // namespace genus1
