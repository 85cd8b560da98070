#pragma once

#include <string>
#include <utility>
#include <vector>

#include "infinilie/linalg.hpp"

namespace infinilie {

enum class Family { SO, SU, Product };

/// A compact classical group given by its defining algebraic equations:
/// SO(n), SU(n), or a finite product acting block-diagonally.
struct GroupSpec {
  Family family = Family::SO;
  int n = 3;
  std::vector<GroupSpec> factors;  // exactly two for Product

  static GroupSpec so(int n) { return {Family::SO, n, {}}; }
  static GroupSpec su(int n) { return {Family::SU, n, {}}; }
  static GroupSpec product(GroupSpec left, GroupSpec right) {
    return {Family::Product, 0, {std::move(left), std::move(right)}};
  }

  int dim() const;
  /// Side length of the matrices representing the group.
  int matrix_size() const;
  bool is_complex() const;
  std::string name() const;
  /// "so3", "su2", "so3xsu2", …
  static GroupSpec parse(const std::string& name);

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Inverse with a precision certificate: fails unless val(det) < trunc/2.
template <class S>
Mat<S> mat_inv(const Mat<S>& m);

template <class S>
bool in_group(const GroupSpec& spec, const Mat<S>& m);

/// Entrywise standard part; throws DomainError("unbounded entry") when an
/// entry lies outside the valuation ring.
template <class S>
Mat<S> st_matrix(const Mat<S>& m);

/// Membership in G(ℛ) ∩ (I + Mat(𝔪)).
template <class S>
bool in_G00(const GroupSpec& spec, const Mat<S>& m);

/// (I + X)(I − X)⁻¹ for anti-Hermitian X.
template <class S>
Mat<S> cayley(const Mat<S>& x);
/// (M − I)(M + I)⁻¹.
template <class S>
Mat<S> cayley_inv(const Mat<S>& m);

/// Both sides of (A×B)⁰⁰ = A⁰⁰ × B⁰⁰ evaluated on a block matrix.
template <class S>
std::pair<bool, bool> product_G00_check(const GroupSpec& a, const GroupSpec& b,
                                        const Mat<S>& m);

template <class S>
Mat<S> block_diag(const Mat<S>& a, const Mat<S>& b) {
  Mat<S> out = Mat<S>::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

template <class S>
Mat<S> mat_pow(const Mat<S>& m, int k) {
  Mat<S> out = identity<S>(m.rows());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

/// x^h = h x h⁻¹, computed as I + h (x − I) h⁻¹ so that x = I stays exact.
template <class S>
Mat<S> conjugate(const Mat<S>& x, const Mat<S>& h, const Mat<S>& h_inv) {
  const Eigen::Index n = x.rows();
  return identity<S>(n) + h * (x - identity<S>(n)) * h_inv;
}

}  // namespace infinilie
