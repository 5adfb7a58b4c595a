#include "holobound/matrix_group.hpp"

#include "holobound/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

namespace holobound {

std::size_t FqMatrixHash::operator()(const FqMatrix& m) const noexcept {
  std::size_t h = 1469598103934665603ull ^ m.dim;
  for (FqElem x : m.entries) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

FqMatrix identity_matrix(unsigned dim) {
  FqMatrix m{dim, std::vector<FqElem>(dim * dim, 0)};
  for (unsigned i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

FqMatrix multiply(const FiniteField& f, const FqMatrix& a, const FqMatrix& b) {
  const unsigned n = a.dim;
  FqMatrix c{n, std::vector<FqElem>(n * n, 0)};
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned k = 0; k < n; ++k) {
      const FqElem aik = a.at(i, k);
      if (aik == 0) continue;
      for (unsigned j = 0; j < n; ++j) {
        c.at(i, j) = f.add(c.at(i, j), f.mul(aik, b.at(k, j)));
      }
    }
  }
  return c;
}

FqElem determinant(const FiniteField& f, const FqMatrix& m) {
  FqMatrix a = m;
  const unsigned n = a.dim;
  FqElem det = 1;
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (unsigned j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      det = f.neg(det);
    }
    const FqElem p = a.at(col, col);
    det = f.mul(det, p);
    const FqElem p_inv = f.inv(p);
    for (unsigned i = col + 1; i < n; ++i) {
      const FqElem factor = f.mul(a.at(i, col), p_inv);
      if (factor == 0) continue;
      for (unsigned j = col; j < n; ++j) {
        a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(col, j)));
      }
    }
  }
  return det;
}

FqMatrix inverse(const FiniteField& f, const FqMatrix& m) {
  const unsigned n = m.dim;
  FqMatrix a = m;
  FqMatrix inv = identity_matrix(n);
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = col;
    while (pivot < n && a.at(pivot, col) == 0) ++pivot;
    if (pivot == n) domain_error("matrix.singular", "matrix is not invertible");
    for (unsigned j = 0; j < n; ++j) {
      std::swap(a.at(pivot, j), a.at(col, j));
      std::swap(inv.at(pivot, j), inv.at(col, j));
    }
    const FqElem p_inv = f.inv(a.at(col, col));
    for (unsigned j = 0; j < n; ++j) {
      a.at(col, j) = f.mul(a.at(col, j), p_inv);
      inv.at(col, j) = f.mul(inv.at(col, j), p_inv);
    }
    for (unsigned i = 0; i < n; ++i) {
      if (i == col) continue;
      const FqElem factor = a.at(i, col);
      if (factor == 0) continue;
      for (unsigned j = 0; j < n; ++j) {
        a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(col, j)));
        inv.at(i, j) = f.sub(inv.at(i, j), f.mul(factor, inv.at(col, j)));
      }
    }
  }
  return inv;
}

FqMatrix transpose(const FqMatrix& m) {
  FqMatrix t = m;
  for (unsigned i = 0; i < m.dim; ++i) {
    for (unsigned j = 0; j < m.dim; ++j) t.at(i, j) = m.at(j, i);
  }
  return t;
}

bool canonical_less(const FiniteField& f, const FqMatrix& a, const FqMatrix& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    const unsigned ka = f.canonical_key(a.entries[i]);
    const unsigned kb = f.canonical_key(b.entries[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

std::string describe(const FiniteField& f, const FqMatrix& m) {
  auto elem = [&](FqElem x) {
    if (f.degree() == 1) return std::to_string(x);
    std::string s = "[";
    const auto c = f.coefficients(x);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s + "]";
  };
  std::string s = "[";
  for (unsigned i = 0; i < m.dim; ++i) {
    if (i) s += ",";
    s += "[";
    for (unsigned j = 0; j < m.dim; ++j) {
      if (j) s += ",";
      s += elem(m.at(i, j));
    }
    s += "]";
  }
  return s + "]";
}

FqMatrix kronecker(const FiniteField& f, const FqMatrix& a, const FqMatrix& b) {
  const unsigned n = a.dim * b.dim;
  FqMatrix k{n, std::vector<FqElem>(n * n, 0)};
  for (unsigned i = 0; i < a.dim; ++i) {
    for (unsigned j = 0; j < a.dim; ++j) {
      for (unsigned r = 0; r < b.dim; ++r) {
        for (unsigned s = 0; s < b.dim; ++s) {
          k.at(i * b.dim + r, j * b.dim + s) = f.mul(a.at(i, j), b.at(r, s));
        }
      }
    }
  }
  return k;
}

FqMatrix dual_matrix(const FiniteField& f, const FqMatrix& m) { return transpose(inverse(f, m)); }

namespace {

using Exponents = std::vector<unsigned>;

// Exponent vectors of total degree n in `vars` variables, descending lex.
std::vector<Exponents> monomials(unsigned vars, unsigned n) {
  std::vector<Exponents> out;
  Exponents current(vars, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned remaining) -> void {
    if (pos + 1 == vars) {
      current[pos] = remaining;
      out.push_back(current);
      return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
      current[pos] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  if (vars == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, n);
  return out;
}

std::vector<std::vector<unsigned>> subsets(unsigned n, unsigned k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  auto rec = [&](auto&& self, unsigned start) -> void {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (unsigned i = start; i < n; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::size_t binom_small(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (1u << 20)) return r;  // large enough to trip any cap
  }
  return r;
}

}  // namespace

FqMatrix sym_power_matrix(const FiniteField& f, const FqMatrix& m, unsigned n) {
  const unsigned r = m.dim;
  const auto basis = monomials(r, n);
  std::map<Exponents, unsigned> position;
  for (unsigned i = 0; i < basis.size(); ++i) position[basis[i]] = i;

  const unsigned d = static_cast<unsigned>(basis.size());
  FqMatrix out{d, std::vector<FqElem>(d * d, 0)};
  for (unsigned col = 0; col < d; ++col) {
    // expand Π_j (Σ_i m_ij e_i)^{β_j}
    std::map<Exponents, FqElem> poly{{Exponents(r, 0), 1}};
    for (unsigned j = 0; j < r; ++j) {
      for (unsigned t = 0; t < basis[col][j]; ++t) {
        std::map<Exponents, FqElem> next;
        for (const auto& [mono, coeff] : poly) {
          for (unsigned i = 0; i < r; ++i) {
            const FqElem c = f.mul(coeff, m.at(i, j));
            if (c == 0) continue;
            Exponents e = mono;
            ++e[i];
            auto& slot = next[e];
            slot = f.add(slot, c);
          }
        }
        poly = std::move(next);
      }
    }
    for (const auto& [mono, coeff] : poly) {
      if (coeff != 0) out.at(position.at(mono), col) = coeff;
    }
  }
  return out;
}

FqMatrix wedge_power_matrix(const FiniteField& f, const FqMatrix& m, unsigned n) {
  const auto basis = subsets(m.dim, n);
  const unsigned d = static_cast<unsigned>(basis.size());
  FqMatrix out{d, std::vector<FqElem>(d * d, 0)};
  for (unsigned row = 0; row < d; ++row) {
    for (unsigned col = 0; col < d; ++col) {
      FqMatrix minor{n, std::vector<FqElem>(n * n, 0)};
      for (unsigned a = 0; a < n; ++a) {
        for (unsigned b = 0; b < n; ++b) minor.at(a, b) = m.at(basis[row][a], basis[col][b]);
      }
      out.at(row, col) = n == 0 ? FqElem{1} : determinant(f, minor);
    }
  }
  return out;
}

bool MatrixGroup::contains(const FqMatrix& m) const { return index_of(m).has_value(); }

std::optional<std::size_t> MatrixGroup::index_of(const FqMatrix& m) const {
  const FiniteField& f = *field;
  auto it = std::lower_bound(elements.begin(), elements.end(), m,
                             [&](const FqMatrix& a, const FqMatrix& b) { return canonical_less(f, a, b); });
  if (it == elements.end() || !(*it == m)) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

bool MatrixGroup::same_elements(const MatrixGroup& other) const {
  return field->same_as(*other.field) && dim == other.dim && elements == other.elements;
}

namespace {

void check_generators(const FiniteField& f, unsigned dim, const std::vector<FqMatrix>& gens) {
  if (dim < 1 || dim > kMaxMatrixDim) {
    resource_error("matrix.dim_cap", "matrix dimension must be in [1, " +
                                         std::to_string(kMaxMatrixDim) + "]");
  }
  for (const auto& g : gens) {
    if (g.dim != dim || g.entries.size() != dim * dim) {
      domain_error("matrix.dim_mismatch", "generator dimension does not match");
    }
    for (FqElem x : g.entries) {
      if (x >= f.size()) domain_error("matrix.bad_entry", "entry outside the field");
    }
    if (determinant(f, g) == 0) domain_error("matrix.singular", "generator is not invertible");
  }
}

}  // namespace

MatrixGroup generate_group(const FieldPtr& field, unsigned dim, std::vector<FqMatrix> generators,
                           std::size_t cap) {
  const FiniteField& f = *field;
  check_generators(f, dim, generators);
  std::unordered_set<FqMatrix, FqMatrixHash> seen;
  std::deque<FqMatrix> frontier;
  const FqMatrix id = identity_matrix(dim);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    const FqMatrix x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      FqMatrix y = multiply(f, x, g);
      if (seen.insert(y).second) {
        if (seen.size() > cap) {
          resource_error("group.cap_exceeded",
                         "group closure exceeds " + std::to_string(cap) + " elements");
        }
        frontier.push_back(std::move(y));
      }
    }
  }
  MatrixGroup group{field, dim, std::move(generators), {seen.begin(), seen.end()}};
  std::sort(group.elements.begin(), group.elements.end(),
            [&](const FqMatrix& a, const FqMatrix& b) { return canonical_less(f, a, b); });
  return group;
}

namespace {

MatrixGroup checked_sl2(const FieldPtr& field, std::vector<FqMatrix> gens, std::size_t cap) {
  MatrixGroup g = generate_group(field, 2, std::move(gens), cap);
  for (const auto& m : g.elements) {
    if (determinant(*field, m) != 1) {
      domain_error("group.sl2_det", "closure produced an element of determinant != 1");
    }
  }
  return g;
}

std::pair<FqMatrix, FqMatrix> elementary_pair(FqElem a) {
  FqMatrix upper = identity_matrix(2);
  upper.at(0, 1) = a;
  FqMatrix lower = identity_matrix(2);
  lower.at(1, 0) = a;
  return {upper, lower};
}

}  // namespace

std::vector<FqMatrix> sl2_generators(const FiniteField& field) {
  std::vector<FqMatrix> gens;
  for (unsigned i = 0; i < field.degree(); ++i) {
    std::vector<unsigned> coeffs(field.degree(), 0);
    coeffs[i] = 1;
    const auto [upper, lower] = elementary_pair(field.from_coefficients(coeffs));
    gens.push_back(upper);
    gens.push_back(lower);
  }
  return gens;
}

MatrixGroup sl2_generate(const FieldPtr& field, std::size_t cap) {
  return checked_sl2(field, sl2_generators(*field), cap);
}

MatrixGroup elementary_closure(const FieldPtr& field, std::size_t cap) {
  const auto [upper, lower] = elementary_pair(1);
  return checked_sl2(field, {upper, lower}, cap);
}

BurnsideResult burnside_irreducible(const FiniteField& f, unsigned dim,
                                    const std::vector<FqMatrix>& gens) {
  check_generators(f, dim, gens);
  const unsigned full = dim * dim;

  // Row-echelon basis of the span; each stored vector has pivot entry 1 and
  // zeros at the pivots of earlier vectors.
  std::vector<std::vector<FqElem>> basis;
  std::vector<unsigned> pivots;
  auto insert = [&](const FqMatrix& m) {
    std::vector<FqElem> v = m.entries;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const FqElem c = v[pivots[b]];
      if (c == 0) continue;
      for (unsigned k = 0; k < full; ++k) v[k] = f.sub(v[k], f.mul(c, basis[b][k]));
    }
    unsigned pivot = 0;
    while (pivot < full && v[pivot] == 0) ++pivot;
    if (pivot == full) return false;
    const FqElem inv = f.inv(v[pivot]);
    for (auto& x : v) x = f.mul(x, inv);
    // keep earlier vectors reduced at the new pivot
    for (auto& b : basis) {
      const FqElem c = b[pivot];
      if (c == 0) continue;
      for (unsigned k = 0; k < full; ++k) b[k] = f.sub(b[k], f.mul(c, v[k]));
    }
    basis.push_back(std::move(v));
    pivots.push_back(pivot);
    return true;
  };

  std::deque<FqMatrix> queue;
  const FqMatrix id = identity_matrix(dim);
  insert(id);
  queue.push_back(id);
  while (!queue.empty() && basis.size() < full) {
    const FqMatrix x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      FqMatrix y = multiply(f, x, g);
      if (insert(y)) queue.push_back(std::move(y));
    }
  }
  const auto span = static_cast<unsigned>(basis.size());
  return {span, full, span == full};
}

void FreeGroupRep::validate() const {
  if (!field) domain_error("rep.no_field", "representation has no field");
  check_generators(*field, dim, images);
}

HolonomyResult holonomy(const FreeGroupRep& rep, const MatrixGroup* target, std::size_t cap) {
  rep.validate();
  HolonomyResult out{generate_group(rep.field, rep.dim, rep.images, cap), std::nullopt};
  if (target) out.full = out.group.same_elements(*target);
  return out;
}

std::size_t functor_dim(const RepFunctor& fn, unsigned dim) {
  return std::visit(
      [dim](const auto& x) -> std::size_t {
        using F = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<F, functor::TensorWith>) {
          return static_cast<std::size_t>(dim) * x.other.dim;
        } else if constexpr (std::is_same_v<F, functor::Dual>) {
          return dim;
        } else if constexpr (std::is_same_v<F, functor::Sym>) {
          return binom_small(dim + x.n - 1, x.n);
        } else {
          return binom_small(dim, x.n);
        }
      },
      fn);
}

FqMatrix apply_functor(const FiniteField& f, const RepFunctor& fn, const FqMatrix& g) {
  return std::visit(
      [&](const auto& x) -> FqMatrix {
        using F = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<F, functor::TensorWith>) {
          domain_error("rep.binary_functor", "tensor product needs the paired representation");
        } else if constexpr (std::is_same_v<F, functor::Dual>) {
          return dual_matrix(f, g);
        } else if constexpr (std::is_same_v<F, functor::Sym>) {
          return sym_power_matrix(f, g, x.n);
        } else {
          return wedge_power_matrix(f, g, x.n);
        }
      },
      fn);
}

FreeGroupRep associated_rep(const FreeGroupRep& rep, const RepFunctor& fn) {
  rep.validate();
  const std::size_t d = functor_dim(fn, rep.dim);
  if (d > kMaxMatrixDim) {
    resource_error("rep.dim_cap", "associated representation has dimension " +
                                      std::to_string(d) + " > " + std::to_string(kMaxMatrixDim));
  }
  if (d == 0) domain_error("rep.zero_dim", "functor produces the zero representation");
  FreeGroupRep out{rep.field, static_cast<unsigned>(d), {}};
  if (const auto* t = std::get_if<functor::TensorWith>(&fn)) {
    t->other.validate();
    if (!t->other.field->same_as(*rep.field)) {
      domain_error("rep.field_mismatch", "tensor factors live over different fields");
    }
    if (t->other.images.size() != rep.images.size()) {
      domain_error("rep.generator_mismatch", "tensor factors have different generator counts");
    }
    for (std::size_t i = 0; i < rep.images.size(); ++i) {
      out.images.push_back(kronecker(*rep.field, rep.images[i], t->other.images[i]));
    }
    return out;
  }
  for (const auto& g : rep.images) out.images.push_back(apply_functor(*rep.field, fn, g));
  return out;
}

}  // namespace holobound
