#pragma once

#include "monostruct/chaining.hpp"
#include "monostruct/definability.hpp"
#include "monostruct/formula.hpp"
#include "monostruct/monomorphy.hpp"
#include "monostruct/structure.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace mono {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

/// FNV-1a, 64 bit, as 16 lowercase hex digits.
std::string digest(std::string_view bytes);

Json to_json(const Signature& sig);
/// {signature, size, relations: {name: [[...], ...]}}, tuples in lexicographic order.
Json to_json(const Structure& s);
Json to_json(const LinearOrder& x);
Json to_json(const Bijection& f);
Json to_json(const KMonomorphy& v);
Json to_json(const MonomorphyReport& r);
Json to_json(const ReductCheck& r);
Json to_json(const ChainCheck& c);
Json to_json(const ChainSet& c);
Json to_json(const TrichotomyReport& t);
/// Definition formulas plus the accepted-pattern block.
Json to_json(const QFDefinition& d);
Json to_json(const SignatureReduction& r);
Json to_json(const FrasnayVariant& v);
Json to_json(const FrasnayReport& r);

/// Line-per-leaf rendering of a report: `path.to.key: value`. Arrays of
/// scalars stay on one line; other arrays index their entries as `key[i]`.
std::string render_text(const Json& j);

}  // namespace mono
