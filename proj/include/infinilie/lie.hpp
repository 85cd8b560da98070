#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "infinilie/linalg.hpp"

namespace infinilie {

enum class LieFamily { SO, SU };

/// Compact real form 𝔤₀ given by an exact matrix basis. The same matrices
/// read with Gaussian coefficients span the complexification 𝔤.
struct LieAlgebra {
  LieFamily family = LieFamily::SO;
  int n = 3;
  std::vector<ExactMatrix> basis;
  bool simple = true;

  int dim() const { return static_cast<int>(basis.size()); }
  std::string name() const;  // "so(5)", "su(3)"
};

using MatrixList = std::vector<ExactMatrix>;

ExactMatrix bracket(const ExactMatrix& a, const ExactMatrix& b);
/// Conjugation of 𝔤 with fixed points 𝔤₀: X ↦ −X*.
ExactMatrix sigma(const ExactMatrix& x);
/// σ(X) = X.
bool in_real_form(const ExactMatrix& x);

/// so(n), n ≥ 3: L₁, L₂, L₃ with Lₖ v = eₖ × v for n = 3, else E_ji − E_ij
/// for i < j. su(n), n ≥ 2: the diagonal elements i(E_jj − E_{j+1,j+1})/2,
/// then (E_jk − E_kj)/2 and i(E_jk + E_kj)/2 for j < k.
LieAlgebra build_algebra(LieFamily family, int n);
/// "so5", "su3", …
LieAlgebra build_algebra(const std::string& name);

/// Standard maximal torus algebra.
MatrixList cartan_subalgebra(const LieAlgebra& g);

struct Root {
  std::vector<GaussScalar> values;  // α(H_k) on the Cartan basis
  ExactMatrix vec;                  // E_α
  std::string label;                // "e1-e2", "-e1", …
};

struct RootDatum {
  MatrixList cartan;
  std::vector<Root> roots;  // ±α adjacent, positive one first
};

RootDatum root_decomposition(const LieAlgebra& g);

/// Structural facts about a root datum, all decided exactly.
struct RootDatumChecks {
  bool eigen = false;        // [H, E_α] = α(H) E_α
  bool imaginary = false;    // α purely imaginary on 𝔥₀
  bool paired = false;       // E_{−α} = σ(E_α)
  bool spans = false;        // roots span 𝔥*
  bool reduced = false;      // ℂα ∩ Δ = {α, −α}
  bool dimension = false;    // dim 𝔤₀ = dim 𝔥₀ + |Δ|
  bool all() const { return eigen && imaginary && paired && spans && reduced && dimension; }
};
RootDatumChecks check_root_datum(const LieAlgebra& g, const RootDatum& rd);

struct RootUV {
  ExactMatrix U, V, W;
};
/// U = iE − iσ(E), V = E + σ(E), W = [U, V].
RootUV uv_from_root(const RootDatum& rd, std::size_t root);
/// [H, U] = iα(H)V and [H, V] = −iα(H)U for every Cartan basis element.
bool cartan_action_holds(const RootDatum& rd, std::size_t root, const RootUV& uv);
/// Sign of the real number α([E_α, σ(E_α)]).
int negativity_check(const RootDatum& rd, std::size_t root);

/// [U,V] = H, [H,U] = V, [V,H] = U.
struct SO3Triple {
  ExactMatrix H, U, V;
};
bool triple_relations_hold(const SO3Triple& t);
/// Rescales to (c²W, cU, cV) with c² = 1/λ, [W,U] = λV.
SO3Triple normalize_triple(const RootUV& uv);
/// The standard triples of so(3) and su(2).
SO3Triple standard_so3_triple();
SO3Triple standard_su2_triple();

/// Coordinates of x in the ℂ-span of independent matrices, if it lies there.
std::optional<Vec<GaussScalar>> coordinates(const MatrixList& basis, const ExactMatrix& x);
/// Dimension of the real span of elements of 𝔤₀.
int span_dim(const MatrixList& xs);
bool span_contains(const MatrixList& big, const MatrixList& small);
bool span_equal(const MatrixList& a, const MatrixList& b);
/// A basis of the real span.
MatrixList span_basis(const MatrixList& xs);
/// All pairwise brackets.
MatrixList brackets(const MatrixList& a, const MatrixList& b);
bool is_subalgebra(const MatrixList& xs);

/// C_{𝔤₀}(A), computed as the exact kernel of the joint ad-maps.
MatrixList centralizer_subalg(const LieAlgebra& g, const MatrixList& a);

struct LemmaCheck {
  std::string name;
  bool pass = false;
  int dim_lhs = 0;
  int dim_rhs = 0;
};
struct LemmaReport {
  std::string algebra;
  std::string root;
  std::vector<LemmaCheck> checks;
  bool all_pass() const;
};
/// Builds 𝔩 = span(U, V), 𝔰 = span(U, V, W), 𝔰′ = 𝔥₀ ⊕ 𝔩 for one root and
/// checks: closure of 𝔰′, [𝔰′,𝔰′] = 𝔰, C(𝔰′) = ker α, C(C(𝔰′)) = 𝔰′, and the
/// normalized triple. Throws DomainError for non-simple algebras.
LemmaReport verify_lemma_so3(const LieAlgebra& g, const RootDatum& rd, std::size_t root);

}  // namespace infinilie
