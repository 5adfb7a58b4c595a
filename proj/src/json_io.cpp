#include "holobound/json_io.hpp"

#include "holobound/error.hpp"

#include <algorithm>

namespace holobound::io {

namespace {

[[noreturn]] void bad(const std::string& what) { domain_error("json.bad_value", what); }

}  // namespace

void require_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) bad(where + ": expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return key == k; });
    if (!known) domain_error("json.unknown_key", where + ": unknown key '" + key + "'");
  }
}

json encode(const Rational& x) { return to_string(x); }
json encode(const BigInt& x) { return to_string(x); }

Rational decode_rational(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  bad("expected an exact rational (string \"p/q\" or integer), got " + j.dump());
}

BigInt decode_bigint(const json& j) {
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  bad("expected an integer (decimal string or JSON integer), got " + j.dump());
}

json encode(const ChernData& e) {
  return {{"rank", encode(e.rank)}, {"deg", encode(e.deg)}, {"c1sq", encode(e.c1sq)},
          {"c2", encode(e.c2)}};
}

ChernData parse_chern_tuple(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
    } else if (c != ' ') {
      current += c;
    }
  }
  parts.push_back(current);
  if (parts.empty() || parts.size() > 4) bad("Chern tuple must be rank[,deg[,c1sq[,c2]]]");
  ChernData e{parse_bigint(parts[0]), 0, 0, 0};
  if (parts.size() > 1) e.deg = parse_rational(parts[1]);
  if (parts.size() > 2) e.c1sq = parse_rational(parts[2]);
  if (parts.size() > 3) e.c2 = parse_rational(parts[3]);
  if (e.rank < 1) domain_error("chern.bad_rank", "rank must be >= 1");
  return e;
}

ChernData decode_chern(const json& j) {
  if (j.is_string()) return parse_chern_tuple(j.get<std::string>());
  require_keys(j, {"rank", "deg", "c1sq", "c2"}, "chern");
  if (!j.contains("rank")) bad("chern: missing rank");
  ChernData e{decode_bigint(j.at("rank")), 0, 0, 0};
  if (j.contains("deg")) e.deg = decode_rational(j.at("deg"));
  if (j.contains("c1sq")) e.c1sq = decode_rational(j.at("c1sq"));
  if (j.contains("c2")) e.c2 = decode_rational(j.at("c2"));
  if (e.rank < 1) domain_error("chern.bad_rank", "rank must be >= 1");
  return e;
}

json encode(const HNProfile& p) {
  json out = json::array();
  for (const auto& f : p.factors) out.push_back(json::array({encode(f.rank), encode(f.deg)}));
  return out;
}

HNProfile decode_profile(const json& j) {
  if (!j.is_array()) bad("HN profile must be an array of [rank, deg] pairs");
  HNProfile p;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2) bad("HN factor must be [rank, deg]");
    p.factors.push_back({decode_bigint(item[0]), decode_rational(item[1])});
  }
  return p;
}

json encode(const SerrePlan& p) {
  return {{"m_degree", encode(p.m_degree)},
          {"n", encode(p.n)},
          {"q_degree", encode(p.q_degree)},
          {"h0_q", encode(p.h0_q)},
          {"h0_qm", encode(p.h0_qm)},
          {"lz_min", encode(p.lz_min)},
          {"stability_floor", encode(p.stability_floor)},
          {"c2_min", encode(p.c2_min)},
          {"twisted_c2_min", encode(p.twisted_c2_min)}};
}

SerrePlan decode_plan(const json& j) {
  require_keys(j, {"m_degree", "n", "q_degree", "h0_q", "h0_qm", "lz_min", "stability_floor",
                   "c2_min", "twisted_c2_min"},
               "plan");
  auto get = [&](const char* key) -> BigInt {
    if (!j.contains(key)) bad(std::string("plan: missing ") + key);
    return decode_bigint(j.at(key));
  };
  SerrePlan p;
  p.m_degree = get("m_degree");
  p.n = get("n");
  p.q_degree = j.contains("q_degree") ? decode_bigint(j.at("q_degree")) : 2 * p.n;
  p.h0_q = j.contains("h0_q") ? decode_bigint(j.at("h0_q")) : h0_plane(p.q_degree);
  p.h0_qm = j.contains("h0_qm") ? decode_bigint(j.at("h0_qm")) : BigInt(0);
  p.lz_min = get("lz_min");
  p.stability_floor = j.contains("stability_floor") ? decode_bigint(j.at("stability_floor")) : BigInt(0);
  p.c2_min = j.contains("c2_min") ? decode_bigint(j.at("c2_min")) : p.lz_min;
  p.twisted_c2_min = j.contains("twisted_c2_min") ? decode_bigint(j.at("twisted_c2_min")) : BigInt(0);
  return p;
}

json encode_element(const FiniteField& f, FqElem x) {
  json out = json::array();
  for (unsigned c : f.coefficients(x)) out.push_back(c);
  return out;
}

FqElem decode_element(const FiniteField& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (!j.is_array()) bad("field element must be a coefficient vector or an integer");
  std::vector<unsigned> coeffs;
  for (const auto& c : j) {
    if (!c.is_number_integer() || c.get<long long>() < 0) bad("coefficients must be integers >= 0");
    coeffs.push_back(c.get<unsigned>());
  }
  return f.from_coefficients(coeffs);
}

json encode(const FiniteField& f, const FqMatrix& m) {
  json rows = json::array();
  for (unsigned i = 0; i < m.dim; ++i) {
    json row = json::array();
    for (unsigned j = 0; j < m.dim; ++j) row.push_back(encode_element(f, m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

FqMatrix decode_matrix(const FiniteField& f, const json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
  const auto n = static_cast<unsigned>(j.size());
  if (n > kMaxMatrixDim) resource_error("matrix.dim_cap", "matrix dimension too large");
  FqMatrix m{n, std::vector<FqElem>(n * n, 0)};
  for (unsigned i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) bad("matrix must be square");
    for (unsigned k = 0; k < n; ++k) m.at(i, k) = decode_element(f, j[i][k]);
  }
  return m;
}

std::vector<FqMatrix> decode_matrices(const FiniteField& f, const json& j) {
  if (!j.is_array()) bad("expected an array of matrices");
  std::vector<FqMatrix> out;
  for (const auto& m : j) out.push_back(decode_matrix(f, m));
  return out;
}

json encode(const MatrixGroup& g, std::size_t samples) {
  json gens = json::array();
  for (const auto& m : g.generators) gens.push_back(encode(*g.field, m));
  json sample = json::array();
  for (std::size_t i = 0; i < std::min(samples, g.elements.size()); ++i) {
    sample.push_back(encode(*g.field, g.elements[i]));
  }
  return {{"order", std::to_string(g.order())}, {"generators", gens}, {"sample_elements", sample}};
}

json encode(const JordanCertificate& c, const FiniteGroupTable& g) {
  json members = json::array();
  for (std::size_t x : c.normal_subgroup) members.push_back(g.label(x));
  return {{"group_order", std::to_string(c.group_order)},
          {"N_order", std::to_string(c.subgroup_order)},
          {"N_elements", members},
          {"index", std::to_string(c.index)},
          {"r", std::to_string(c.rank)},
          {"bound", encode(c.bound)},
          {"holds", c.holds},
          {"abelian_verified", c.abelian_verified},
          {"normal_verified", c.normal_verified},
          {"candidates", std::to_string(c.candidates)}};
}

FiniteGroupTable decode_table(const json& j) {
  require_keys(j, {"order", "table", "labels"}, "group table");
  if (!j.contains("order") || !j.contains("table")) bad("group table needs order and table");
  const BigInt order_big = decode_bigint(j.at("order"));
  if (order_big < 1 || order_big > BigInt(kMaxTableOrder)) {
    resource_error("table.cap_exceeded", "group table order out of range");
  }
  const auto n = order_big.convert_to<std::size_t>();
  const json& rows = j.at("table");
  if (!rows.is_array() || rows.size() != n) bad("table must have `order` rows");
  std::vector<std::uint32_t> table;
  table.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) bad("table rows must have `order` entries");
    for (const auto& x : row) {
      if (!x.is_number_integer() || x.get<long long>() < 0) bad("table entries must be indices");
      table.push_back(x.get<std::uint32_t>());
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) bad("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return FiniteGroupTable::from_table(std::move(table), n, std::move(labels));
}

json encode(const RestrictionReport& r) {
  json summands = json::array();
  for (const auto& s : r.summands) {
    summands.push_back({{"group", s.group},
                        {"chern", encode(s.chern)},
                        {"index", s.index ? encode(*s.index) : json("-inf")}});
  }
  return {{"rank", encode(r.rank)}, {"J", encode(r.jordan)}, {"t", encode(r.sym_rank)},
          {"summands", summands},   {"ell", encode(r.ell)},  {"warnings", r.warnings}};
}

}  // namespace holobound::io
