#include "holobound/group_table.hpp"

#include "holobound/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace holobound {

FiniteGroupTable FiniteGroupTable::from_table(std::vector<std::uint32_t> table, std::size_t order,
                                              std::vector<std::string> labels,
                                              bool check_associativity) {
  if (order == 0) domain_error("table.empty", "group table has no elements");
  if (table.size() != order * order) {
    domain_error("table.shape", "table must have order^2 entries");
  }
  for (auto x : table) {
    if (x >= order) domain_error("table.closure", "table entry outside the element range");
  }
  FiniteGroupTable g;
  g.order_ = order;
  g.table_ = std::move(table);

  bool found_identity = false;
  for (std::size_t e = 0; e < order && !found_identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < order && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      g.identity_ = e;
      found_identity = true;
    }
  }
  if (!found_identity) domain_error("table.identity", "group table has no identity");

  for (std::size_t a = 0; check_associativity && a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t c = 0; c < order; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          domain_error("table.associativity", "group table is not associative");
        }
      }
    }
  }

  g.inverse_.assign(order, order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      if (g.mul(a, b) == g.identity_ && g.mul(b, a) == g.identity_) {
        g.inverse_[a] = b;
        break;
      }
    }
    if (g.inverse_[a] == order) domain_error("table.inverse", "element without inverse");
  }

  if (labels.empty()) {
    labels.resize(order);
    for (std::size_t a = 0; a < order; ++a) labels[a] = std::to_string(a);
  }
  if (labels.size() != order) domain_error("table.labels", "label count does not match order");
  g.labels_ = std::move(labels);
  return g;
}

bool FiniteGroupTable::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::size_t FiniteGroupTable::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::size_t FiniteGroupTable::exponent() const {
  std::size_t e = 1;
  for (std::size_t a = 0; a < order_; ++a) e = std::lcm(e, element_order(a));
  return e;
}

std::vector<std::vector<std::size_t>> FiniteGroupTable::conjugacy_classes() const {
  std::vector<bool> assigned(order_, false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t a = 0; a < order_; ++a) {
    if (assigned[a]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t g = 0; g < order_; ++g) {
      const std::size_t c = mul(mul(g, a), inverse_[g]);
      if (!assigned[c]) {
        assigned[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<std::size_t> FiniteGroupTable::closure(const std::vector<std::size_t>& gens) const {
  std::vector<bool> in(order_, false);
  std::deque<std::size_t> frontier{identity_};
  in[identity_] = true;
  while (!frontier.empty()) {
    const std::size_t x = frontier.front();
    frontier.pop_front();
    for (std::size_t g : gens) {
      const std::size_t y = mul(x, g);
      if (!in[y]) {
        in[y] = true;
        frontier.push_back(y);
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < order_; ++a) {
    if (in[a]) out.push_back(a);
  }
  return out;
}

FiniteGroupTable table_from_matrix_group(const MatrixGroup& g) {
  const std::size_t n = g.order();
  if (n > kMaxTableOrder) {
    resource_error("table.cap_exceeded",
                   "Cayley tables are limited to " + std::to_string(kMaxTableOrder) + " elements");
  }
  std::vector<std::uint32_t> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = describe(*g.field, g.elements[a]);
    for (std::size_t b = 0; b < n; ++b) {
      const auto idx = g.index_of(multiply(*g.field, g.elements[a], g.elements[b]));
      if (!idx) domain_error("table.closure", "matrix group is not closed under products");
      table[a * n + b] = static_cast<std::uint32_t>(*idx);
    }
  }
  return FiniteGroupTable::from_table(std::move(table), n, std::move(labels), false);
}

FiniteGroupTable table_from_permutations(const std::vector<std::vector<unsigned>>& gens,
                                         std::size_t cap) {
  if (gens.empty()) domain_error("table.no_generators", "permutation group needs a generator");
  const std::size_t points = gens.front().size();
  for (const auto& g : gens) {
    std::vector<unsigned> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    bool is_perm = g.size() == points;
    for (std::size_t i = 0; is_perm && i < points; ++i) is_perm = sorted[i] == i;
    if (!is_perm) domain_error("table.bad_permutation", "generator is not a permutation");
  }
  using Perm = std::vector<unsigned>;
  auto compose = [](const Perm& a, const Perm& b) {  // apply b then a
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
  };
  Perm id(points);
  std::iota(id.begin(), id.end(), 0u);
  std::map<Perm, std::size_t> seen{{id, 0}};
  std::deque<Perm> frontier{id};
  while (!frontier.empty()) {
    const Perm x = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      Perm y = compose(x, g);
      if (seen.emplace(y, 0).second) {
        if (seen.size() > cap) {
          resource_error("group.cap_exceeded", "permutation group exceeds " + std::to_string(cap));
        }
        frontier.push_back(std::move(y));
      }
    }
  }
  std::vector<Perm> elements;
  for (auto& [perm, index] : seen) {
    index = elements.size();
    elements.push_back(perm);
  }
  const std::size_t n = elements.size();
  std::vector<std::uint32_t> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::string s = "(";
    for (std::size_t i = 0; i < points; ++i) s += (i ? " " : "") + std::to_string(elements[a][i]);
    labels[a] = s + ")";
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = static_cast<std::uint32_t>(seen.at(compose(elements[a], elements[b])));
    }
  }
  return FiniteGroupTable::from_table(std::move(table), n, std::move(labels), false);
}

bool is_abelian_subset(const FiniteGroupTable& g, const std::vector<std::size_t>& subset) {
  for (std::size_t a : subset) {
    for (std::size_t b : subset) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

bool is_normal_subset(const FiniteGroupTable& g, const std::vector<std::size_t>& subset) {
  std::vector<bool> in(g.order(), false);
  for (std::size_t a : subset) in[a] = true;
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t n : subset) {
      if (!in[g.mul(g.mul(x, n), g.inverse(x))]) return false;
    }
  }
  return true;
}

namespace {

// Bron–Kerbosch with pivoting over a small dense graph.
class MaximalCliques {
 public:
  explicit MaximalCliques(const std::vector<std::vector<bool>>& adj) : adj_(adj) {}

  template <typename Visit>
  void run(Visit&& visit) {
    std::vector<std::size_t> r;
    std::vector<std::size_t> p(adj_.size());
    std::iota(p.begin(), p.end(), std::size_t{0});
    expand(r, p, {}, visit);
  }

 private:
  template <typename Visit>
  void expand(std::vector<std::size_t>& r, std::vector<std::size_t> p, std::vector<std::size_t> x,
              Visit& visit) {
    if (p.empty() && x.empty()) {
      visit(r);
      return;
    }
    std::size_t pivot = p.empty() ? x.front() : p.front();
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
      for (std::size_t u : *set) {
        std::size_t count = 0;
        for (std::size_t v : p) count += adj_[u][v] ? 1 : 0;
        if (count > best) {
          best = count;
          pivot = u;
        }
      }
    }
    const std::vector<std::size_t> candidates = p;
    for (std::size_t v : candidates) {
      if (adj_[pivot][v]) continue;
      std::vector<std::size_t> np;
      std::vector<std::size_t> nx;
      for (std::size_t w : p) {
        if (adj_[v][w]) np.push_back(w);
      }
      for (std::size_t w : x) {
        if (adj_[v][w]) nx.push_back(w);
      }
      r.push_back(v);
      expand(r, std::move(np), std::move(nx), visit);
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  }

  const std::vector<std::vector<bool>>& adj_;
};

bool classes_commute(const FiniteGroupTable& g, const std::vector<std::size_t>& a,
                     const std::vector<std::size_t>& b) {
  for (std::size_t x : a) {
    for (std::size_t y : b) {
      if (g.mul(x, y) != g.mul(y, x)) return false;
    }
  }
  return true;
}

}  // namespace

JordanCertificate jordan_verify(const FiniteGroupTable& g, unsigned r, const BigInt& j_value,
                                std::size_t cap) {
  if (g.order() > cap) {
    resource_error("jordan.cap_exceeded", "Jordan search is limited to groups of order <= " +
                                              std::to_string(cap));
  }
  if (r < 1) domain_error("jordan.bad_rank", "r must be >= 1");

  // Vertices: non-identity conjugacy classes whose elements pairwise commute.
  std::vector<std::vector<std::size_t>> vertices;
  for (auto& cls : g.conjugacy_classes()) {
    if (cls.size() == 1 && cls.front() == g.identity()) continue;
    if (classes_commute(g, cls, cls)) vertices.push_back(std::move(cls));
  }
  std::vector<std::vector<bool>> adj(vertices.size(), std::vector<bool>(vertices.size(), false));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      adj[i][j] = adj[j][i] = classes_commute(g, vertices[i], vertices[j]);
    }
  }

  JordanCertificate cert;
  cert.group_order = g.order();
  cert.rank = r;
  cert.bound = j_value;
  std::vector<std::size_t> best{g.identity()};

  MaximalCliques cliques(adj);
  cliques.run([&](const std::vector<std::size_t>& clique) {
    ++cert.candidates;
    std::vector<std::size_t> gens;
    for (std::size_t v : clique) gens.insert(gens.end(), vertices[v].begin(), vertices[v].end());
    std::vector<std::size_t> n = g.closure(gens);
    if (n.size() > best.size() || (n.size() == best.size() && n < best)) best = std::move(n);
  });

  cert.normal_subgroup = best;
  cert.subgroup_order = best.size();
  cert.index = g.order() / best.size();
  cert.abelian_verified = is_abelian_subset(g, best);
  cert.normal_verified = is_normal_subset(g, best);
  if (!cert.abelian_verified || !cert.normal_verified) {
    domain_error("jordan.certificate", "search produced a subgroup failing certification");
  }
  cert.holds = BigInt(cert.index) <= j_value;
  return cert;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

unsigned parse_small(const std::string& s) {
  if (s.empty() || s.size() > 4 || s.find_first_not_of("0123456789") != std::string::npos) {
    domain_error("group.bad_name", "bad number '" + s + "' in group name");
  }
  return static_cast<unsigned>(std::stoul(s));
}

}  // namespace

FiniteGroupTable named_group(const std::string& name) {
  if (name == "s3") return table_from_permutations({{1, 0, 2}, {1, 2, 0}});
  if (name == "d4") return table_from_permutations({{1, 2, 3, 0}, {3, 2, 1, 0}});
  if (name == "a4") return table_from_permutations({{1, 2, 0, 3}, {0, 2, 3, 1}});
  if (name == "s4") return table_from_permutations({{1, 0, 2, 3}, {1, 2, 3, 0}});
  if (name == "q8") {
    const FieldPtr f3 = FiniteField::make(3, 1);
    const FqMatrix i{2, {0, 2, 1, 0}};
    const FqMatrix j{2, {1, 1, 1, 2}};
    return table_from_matrix_group(generate_group(f3, 2, {i, j}));
  }
  if (name.rfind("sl2:", 0) == 0) {
    const auto parts = split(name, ':');
    if (parts.size() != 3) domain_error("group.bad_name", "expected sl2:<p>:<e>");
    return table_from_matrix_group(sl2_generate(FiniteField::make(parse_small(parts[1]),
                                                                  parse_small(parts[2]))));
  }
  domain_error("group.unknown", "unknown group '" + name + "' (s3, d4, q8, a4, s4, sl2:p:e)");
}

unsigned natural_dimension(const std::string& name) {
  if (name == "s3" || name == "d4" || name == "q8" || name.rfind("sl2:", 0) == 0) return 2;
  if (name == "a4" || name == "s4") return 3;
  domain_error("group.unknown", "unknown group '" + name + "'");
}

}  // namespace holobound
