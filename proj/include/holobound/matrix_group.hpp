#pragma once

#include "holobound/finite_field.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace holobound {

/// Square matrix over a finite field, row-major.
struct FqMatrix {
  unsigned dim = 0;
  std::vector<FqElem> entries;

  FqElem at(unsigned i, unsigned j) const { return entries[i * dim + j]; }
  FqElem& at(unsigned i, unsigned j) { return entries[i * dim + j]; }

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
};

struct FqMatrixHash {
  std::size_t operator()(const FqMatrix& m) const noexcept;
};

FqMatrix identity_matrix(unsigned dim);
FqMatrix multiply(const FiniteField& f, const FqMatrix& a, const FqMatrix& b);
FqElem determinant(const FiniteField& f, const FqMatrix& m);
/// Throws Error(domain, "matrix.singular").
FqMatrix inverse(const FiniteField& f, const FqMatrix& m);
FqMatrix transpose(const FqMatrix& m);
/// Entry-wise lexicographic order under the field's canonical element order.
bool canonical_less(const FiniteField& f, const FqMatrix& a, const FqMatrix& b);
/// Compact text form, e.g. "[[1,0],[1,1]]" for prime fields and coefficient
/// vectors for extension fields.
std::string describe(const FiniteField& f, const FqMatrix& m);

/// Kronecker product a ⊗ b with basis e_i ⊗ f_j at index i·dim(b) + j.
FqMatrix kronecker(const FiniteField& f, const FqMatrix& a, const FqMatrix& b);
/// Inverse transpose: the action on the dual space in the dual basis.
FqMatrix dual_matrix(const FiniteField& f, const FqMatrix& m);
/// Action on degree-n monomials in the basis vectors, monomials in
/// descending lexicographic order of exponent vectors (e1^n first).
FqMatrix sym_power_matrix(const FiniteField& f, const FqMatrix& m, unsigned n);
/// Action on e_I = e_{i1} ∧ ... ∧ e_{in}, I increasing, in lexicographic order.
FqMatrix wedge_power_matrix(const FiniteField& f, const FqMatrix& m, unsigned n);

inline constexpr std::size_t kMaxClosureOrder = 1'000'000;
inline constexpr unsigned kMaxMatrixDim = 16;  // dim² <= 256

/// A finite matrix group: generators plus the full element list in
/// canonical order.
struct MatrixGroup {
  FieldPtr field;
  unsigned dim = 0;
  std::vector<FqMatrix> generators;
  std::vector<FqMatrix> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(const FqMatrix& m) const;
  /// Position of `m` in `elements`, or nullopt.
  std::optional<std::size_t> index_of(const FqMatrix& m) const;
  bool same_elements(const MatrixGroup& other) const;
};

/// Breadth-first closure of the generators under right multiplication.
/// Generators must be invertible; Error(resource, "group.cap_exceeded") once
/// more than `cap` elements are found. An empty generator list gives the
/// trivial group of the given dimension.
MatrixGroup generate_group(const FieldPtr& field, unsigned dim, std::vector<FqMatrix> generators,
                           std::size_t cap = kMaxClosureOrder);

/// [[1,w],[0,1]] and [[1,0],[w,1]] for w = 1, x, ..., x^{e-1}. For a prime
/// field this is the pair of elementary matrices; over F_{p^e} those two only
/// reach SL(2, F_p), so the other powers of x are needed.
std::vector<FqMatrix> sl2_generators(const FiniteField& field);
/// SL(2, F_q), the closure of sl2_generators.
MatrixGroup sl2_generate(const FieldPtr& field, std::size_t cap = kMaxClosureOrder);
/// Closure of [[1,1],[0,1]] and [[1,0],[1,1]] alone; this is SL(2, F_p).
MatrixGroup elementary_closure(const FieldPtr& field, std::size_t cap = kMaxClosureOrder);

struct BurnsideResult {
  unsigned span_dim = 0;
  unsigned full_dim = 0;  // dim²
  bool irreducible = false;
};

/// Dimension of the F_q-span of the group generated by `gens`, computed as
/// the subalgebra generated by them. Irreducible (absolutely) iff the span
/// is the whole matrix algebra.
BurnsideResult burnside_irreducible(const FiniteField& f, unsigned dim,
                                    const std::vector<FqMatrix>& gens);

/// Homomorphism from the free group on `images.size()` generators.
struct FreeGroupRep {
  FieldPtr field;
  unsigned dim = 0;
  std::vector<FqMatrix> images;

  void validate() const;
};

struct HolonomyResult {
  MatrixGroup group;
  std::optional<bool> full;  // set when a target group was supplied
};

HolonomyResult holonomy(const FreeGroupRep& rep, const MatrixGroup* target = nullptr,
                        std::size_t cap = kMaxClosureOrder);

namespace functor {
struct TensorWith {
  FreeGroupRep other;
};
struct Dual {};
struct Sym {
  unsigned n = 1;
};
struct Wedge {
  unsigned n = 1;
};
}  // namespace functor

using RepFunctor = std::variant<functor::TensorWith, functor::Dual, functor::Sym, functor::Wedge>;

/// Dimension of F(V) for dim V = `dim`.
std::size_t functor_dim(const RepFunctor& fn, unsigned dim);
/// The matrix of F(g) for the single-argument functors (dual, Sym, Λ);
/// Error(domain) for TensorWith, which needs the paired representation.
FqMatrix apply_functor(const FiniteField& f, const RepFunctor& fn, const FqMatrix& g);
/// Generator-wise application of a matrix functor. Error(resource) if the
/// result would exceed kMaxMatrixDim.
FreeGroupRep associated_rep(const FreeGroupRep& rep, const RepFunctor& fn);

}  // namespace holobound
