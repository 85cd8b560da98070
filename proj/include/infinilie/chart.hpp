#pragma once

#include <cstdint>
#include <vector>

#include "infinilie/groups.hpp"
#include "infinilie/lie.hpp"
#include "infinilie/rotations.hpp"
#include "infinilie/sampling.hpp"

namespace infinilie {

/// Lie algebra of a simple group spec: so(n) or su(n).
LieAlgebra algebra_of(const GroupSpec& spec);

/// Real coordinates on 𝔤₀(ℛ) in the basis of algebra_of(spec), through an
/// exact left inverse of the basis supported on dim selected entries.
class LieCoordinates {
 public:
  explicit LieCoordinates(const LieAlgebra& g);

  int dim() const { return algebra_.dim(); }
  const LieAlgebra& algebra() const { return algebra_; }

  template <class S>
  Vec<ValSeries> operator()(const Mat<S>& y) const;
  /// Σ x_k B_k.
  template <class S>
  Mat<S> element(const Vec<ValSeries>& x) const;
  /// Matrix of Ad_u = (X ↦ u X u*) in these coordinates; u must be unitary.
  template <class S>
  SeriesMatrix adjoint_matrix(const Mat<S>& u) const;

 private:
  struct Entry {
    Eigen::Index row, col;
    GaussScalar value;
  };
  template <class S>
  ValSeries selected_entry(const Mat<S>& y, std::size_t k) const;

  LieAlgebra algebra_;
  std::vector<std::vector<Entry>> sparse_basis_;
  std::vector<Eigen::Index> selected_;  // realified entry indices
  Mat<QuadExt> left_inverse_;           // dim × dim
};

/// The arc {cayley(t·X) : t ∈ 𝔪} through the identity. SO(n): X = K(axis) in
/// the leading 3×3 block, so points are rho(t, axis). SU(n): X = a₁H + a₂U + a₃V
/// in the leading 2×2 block. In both cases X³ = −qX.
template <class S>
struct ArcJ {
  GroupSpec spec;
  Axis axis;
  ExactMatrix tangent;
  QuadExt q;

  Mat<S> point(const ValSeries& t) const;
};

template <class S>
ArcJ<S> make_arc(const GroupSpec& spec, const Axis& axis);

template <class S>
struct ChartData {
  GroupSpec spec;
  ArcJ<S> arc;
  std::vector<Mat<S>> conjugators;  // h₁ = I
  SeriesMatrix jacobian;            // columns: coordinates of h_i X h_i⁻¹
  Exponent det_val;
  Exponent trunc;
  std::uint64_t seed = 0;
  int attempts = 0;
  LieCoordinates coords;
};

/// Random element of G⁰⁰: cayley of a random Lie element whose coordinates
/// are monomials of valuation v (SU(n), n ≥ 3: a product of 2×2 block ones).
template <class S>
Mat<S> random_G00(const GroupSpec& spec, Sampler& s, Exponent v, std::int64_t height = 5);

/// Conjugators with val(det J) < trunc/2, at most 32 attempts.
template <class S>
ChartData<S> find_conjugators(const GroupSpec& spec, const ArcJ<S>& arc, std::uint64_t seed,
                              std::int64_t height = 5);

/// x₁^{h₁} ⋯ x_n^{h_n} with x_i = arc(t_i).
template <class S>
Mat<S> chart_phi(const ChartData<S>& cd, const std::vector<ValSeries>& t);

struct ChartSolution {
  std::vector<ValSeries> t;
  Exponent grade;  // t is determined modulo ε^grade
  int iterations = 0;
};

/// Newton inversion of chart_phi; the result is certified to trunc − 2·det_val.
template <class S>
ChartSolution chart_solve(const ChartData<S>& cd, const Mat<S>& u);

/// a ⋆ b = chart_solve(φ(a)·φ(b)).
template <class S>
ChartSolution star(const ChartData<S>& cd, const std::vector<ValSeries>& a, const std::vector<ValSeries>& b);

struct AdjointReport {
  int samples = 0;
  bool identity_ok = false;
  int hom_failures = 0;
  int distinct_failures = 0;
  int torsion_failures = 0;
  bool pass() const { return identity_ok && hom_failures == 0 && distinct_failures == 0 && torsion_failures == 0; }
};
AdjointReport adjoint_embedding_check(const GroupSpec& spec, int samples, std::uint64_t seed);

}  // namespace infinilie
