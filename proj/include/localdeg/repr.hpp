#pragma once

// Matrix representations of finite groups over prime fields.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "localdeg/extraspecial.hpp"
#include "localdeg/fq.hpp"
#include "localdeg/group.hpp"

namespace localdeg {

struct MatrixRep {
  std::uint32_t q = 2;
  std::size_t dim = 0;
  /// Identifies the acting group; representations are comparable only when
  /// tags, orders and generator lists agree.
  std::string group_tag;
  std::size_t group_order = 0;
  std::vector<Elem> generators;
  std::vector<FqMatrix> generator_images;
  /// Either empty or one image per group element.
  std::vector<FqMatrix> images;

  bool has_all_images() const noexcept { return images.size() == group_order && group_order > 0; }
};

struct BaseModule {
  MatrixRep rep;  // of the Heisenberg group in its symplectic form, all images
  Fq zeta = 0;
  FqMatrix x_image;
  FqMatrix y_image;
  /// [x, y] acts as this scalar.
  Fq commutator_scalar = 0;
  bool homomorphism_verified = false;
};

/// dim p module: x permutes e_1..e_p cyclically, y e_i = zeta^i e_i with zeta
/// the least primitive p-th root of unity mod q. Throws NoRootOfUnity unless
/// p divides q - 1.
BaseModule base_module_W(std::uint32_t p, std::uint32_t q);

struct TensorModule {
  SymplecticExtraspecial group;
  MatrixRep rep;
  Fq zeta = 0;
  Fq central_scalar = 0;
  bool relations_verified = false;
  /// All pairs checked; false when the group is too large to enumerate pairs.
  bool homomorphism_exhaustive = false;
  bool homomorphism_verified = false;
};

/// W tensored m times, descended to the extraspecial group of order p^(2m+1):
/// x_i and y_i act on the i-th tensor factor. Images of every element are
/// materialized when order * dim^2 <= materialize_cap.
TensorModule tensor_power_rep(std::uint32_t p, std::uint32_t q, std::uint32_t m,
                              std::size_t materialize_cap = std::size_t{1} << 22);

struct ProductTensorModule {
  TableGroup product;  // H^m, mixed radix over Heisenberg tables
  Subgroup central_kernel;  // N_m
  MatrixRep rep;
  /// Scalar by which each central generator z_i acts, i = 1..m.
  std::vector<Fq> central_scalars;
};

/// The same tensor module viewed on H^m before descent.
ProductTensorModule tensor_rep_on_product(std::uint32_t p, std::uint32_t q, std::uint32_t m,
                                          std::size_t cap = kDefaultTableCap);

/// Left translation on F_q[E]: g e_h = e_{gh}. Generators are the greedy
/// generating set of the table.
MatrixRep regular_module(const TableGroup& g, std::uint32_t q, std::string tag,
                         std::size_t cap = kDefaultTableCap);
/// Same, with the model's standard generators x_i, y_i.
MatrixRep regular_module(const SymplecticExtraspecial& g, std::uint32_t q,
                         std::size_t cap = kDefaultTableCap);

/// All generators act as the identity.
MatrixRep trivial_rep(const MatrixRep& like, std::size_t dim);

/// Basis of {U : U A_k = B_k U for all k}; U has shape dim(B) x dim(A).
/// Permutation generators are handled by orbit substitution, otherwise a
/// dense linear system is solved.
std::vector<FqMatrix> intertwiners(std::span<const FqMatrix> a, std::span<const FqMatrix> b);

/// dim {T : T R(g) = S(g) T}. Throws GroupMismatch for different groups.
std::size_t hom_space_dimension(const MatrixRep& r, const MatrixRep& s);
std::size_t commutant_dimension(const MatrixRep& r);

/// An invariant subspace of the regular module isomorphic to W, given as the
/// image of a nonzero equivariant map. Throws NoEmbedding if there is none.
FqSubspace equivariant_embedding(const MatrixRep& w, const MatrixRep& regular);

/// Invariance under all images when materialized, else under the generators.
bool is_invariant(const MatrixRep& r, const FqSubspace& s);

/// Dimension of the smallest invariant subspace containing v.
std::size_t spin_closure_dimension(const MatrixRep& r, std::span<const Fq> v);

/// Elements acting as the identity. Needs all images.
std::vector<Elem> kernel(const MatrixRep& r);
bool is_faithful(const MatrixRep& r);

/// Checks R(a) R(b) = R(ab) on all pairs. Needs all images.
template <FiniteGroup G>
bool verify_homomorphism(const MatrixRep& r, const G& g) {
  if (!r.has_all_images() || g.order() != r.group_order) return false;
  const auto n = static_cast<Elem>(g.order());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!(r.images[a] * r.images[b] == r.images[g.mul(a, b)])) return false;
    }
  }
  return true;
}

}  // namespace localdeg
