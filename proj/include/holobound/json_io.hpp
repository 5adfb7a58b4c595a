#pragma once

// JSON encodings shared by the CLI and the Python bindings. Every number
// crosses this boundary as a decimal string ("p/q" for rationals), never as
// a binary float. Decoders also accept JSON integers for convenience.

#include "holobound/bounds.hpp"
#include "holobound/chern.hpp"
#include "holobound/group_table.hpp"
#include "holobound/hn_slopes.hpp"
#include "holobound/matrix_group.hpp"
#include "holobound/serre.hpp"

#include <json.hpp>

namespace holobound::io {

using json = nlohmann::json;

json encode(const Rational& x);
json encode(const BigInt& x);
Rational decode_rational(const json& j);
BigInt decode_bigint(const json& j);

json encode(const ChernData& e);
/// Accepts {"rank","deg","c1sq","c2"} (missing deg/c1sq/c2 default to 0) or
/// the tuple form "rank,deg,c1sq,c2".
ChernData decode_chern(const json& j);
ChernData parse_chern_tuple(const std::string& text);

json encode(const HNProfile& p);
/// [[rank, "p/q"], ...]
HNProfile decode_profile(const json& j);

json encode(const SerrePlan& p);
SerrePlan decode_plan(const json& j);

json encode_element(const FiniteField& f, FqElem x);
/// Coefficient vector [c0, ..., c_{e-1}], or a bare integer n meaning n·1.
FqElem decode_element(const FiniteField& f, const json& j);
json encode(const FiniteField& f, const FqMatrix& m);
FqMatrix decode_matrix(const FiniteField& f, const json& j);
std::vector<FqMatrix> decode_matrices(const FiniteField& f, const json& j);

/// {order, generators, sample_elements}; at most `samples` elements listed.
json encode(const MatrixGroup& g, std::size_t samples = 8);

json encode(const JordanCertificate& c, const FiniteGroupTable& g);
/// {"order": n, "table": [[...]], "labels": [...]}
FiniteGroupTable decode_table(const json& j);

json encode(const RestrictionReport& r);

/// Throws Error(domain, "json.unknown_key") when `j` has a key outside `allowed`.
void require_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where);

}  // namespace holobound::io
