#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "divgen/core.hpp"
#include "divgen/diversity.hpp"
#include "divgen/project.hpp"

namespace divgen {

// JSON bindings (nlohmann ADL). Component containers are 1-based on the
// wire where they index components (constraint blocks); value arrays are
// positional and carry no indices.

void to_json(nlohmann::json& j, const BinaryVector& x);
void from_json(const nlohmann::json& j, BinaryVector& x);

void to_json(nlohmann::json& j, const BoundedInterval& iv);
void from_json(const nlohmann::json& j, BoundedInterval& iv);

void to_json(nlohmann::json& j, const BoundedVector& x);
void from_json(const nlohmann::json& j, BoundedVector& x);

void to_json(nlohmann::json& j, const Permutation& p);
void from_json(const nlohmann::json& j, Permutation& p);

void to_json(nlohmann::json& j, const Provenance& p);
void from_json(const nlohmann::json& j, Provenance& p);

void to_json(nlohmann::json& j, const ConstraintSystem& cs);
void from_json(const nlohmann::json& j, ConstraintSystem& cs);

void to_json(nlohmann::json& j, const FrequencyMemory& m);
void from_json(const nlohmann::json& j, FrequencyMemory& m);

void to_json(nlohmann::json& j, const DiversityReport& r);

namespace detail {
template <typename T>
const char* member_type_name();
template <>
inline const char* member_type_name<BinaryVector>() { return "binary"; }
template <>
inline const char* member_type_name<BoundedVector>() { return "bounded"; }
template <>
inline const char* member_type_name<Permutation>() { return "permutation"; }
}  // namespace detail

template <typename T>
void to_json(nlohmann::json& j, const Collection<T>& c) {
  j = nlohmann::json{{"type", "collection"},
                     {"member_type", detail::member_type_name<T>()},
                     {"members", c.members},
                     {"provenance", c.provenance}};
}

template <typename T>
void from_json(const nlohmann::json& j, Collection<T>& c) {
  const std::string mt = j.value("member_type", detail::member_type_name<T>());
  if (mt != detail::member_type_name<T>()) {
    throw std::invalid_argument("collection member_type '" + mt + "' does not match '" +
                                detail::member_type_name<T>() + "'");
  }
  j.at("members").get_to(c.members);
  if (j.contains("provenance")) j.at("provenance").get_to(c.provenance);
}

// CSV. Collections serialize one solution per row under the header
// index,x_1,...,x_n with a 1-based member index in the first column.
// Doubles are written in shortest round-trip form.

std::string format_value(double v);
std::string csv_header(std::size_t n);

void write_collection_csv(std::ostream& os, const BinaryCollection& c);
void write_collection_csv(std::ostream& os, const BoundedCollection& c);
void write_collection_csv(std::ostream& os, const PermutationCollection& c);

extern const char* const kDiversityReportCsvHeader;
std::string to_csv_row(const DiversityReport& r);

// File loading with format sniffing: a leading '{' or '[' means JSON,
// anything else is CSV (optional index,x_1,... header; with the header the
// first column is the member index and is dropped). Malformed content
// raises parse_error naming file, line and column.

BinaryVector load_binary_vector(const std::string& path);
Permutation load_permutation(const std::string& path);

/// JSON only; bounded vectors need their intervals.
BoundedVector load_bounded_vector(const std::string& path);

/// CSV or JSON values with externally supplied uniform bounds.
BoundedVector load_bounded_vector(const std::string& path, const BoundedInterval& bounds,
                                  bool integral);

BinaryCollection load_binary_collection(const std::string& path);
BoundedCollection load_bounded_collection(const std::string& path);
BoundedCollection load_bounded_collection(const std::string& path,
                                          const BoundedInterval& bounds, bool integral);

ConstraintSystem load_constraint_system(const std::string& path);
FrequencyMemory load_frequency_memory(const std::string& path);

// Plain file helpers.

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// FNV-1a 64-bit content digest, "fnv1a64:<16 hex digits>". Used by run
/// manifests to pin inputs and outputs; not a cryptographic hash.
std::string digest(std::string_view bytes);
std::string file_digest(const std::string& path);

}  // namespace divgen
