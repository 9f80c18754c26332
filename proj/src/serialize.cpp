#include "divgen/serialize.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace divgen {

using nlohmann::json;

void to_json(json& j, const BinaryVector& x) {
  j = json{{"type", "binary"}, {"bits", x.bits}};
}

void from_json(const json& j, BinaryVector& x) {
  if (j.is_array()) {
    j.get_to(x.bits);
  } else {
    j.at("bits").get_to(x.bits);
  }
  for (std::uint8_t b : x.bits) {
    if (b > 1) throw std::invalid_argument("binary vector entries must be 0 or 1");
  }
}

void to_json(json& j, const BoundedInterval& iv) {
  j = json{{"lower", iv.lower},
           {"upper", iv.upper},
           {"lambda_lower", iv.lambda_lower},
           {"lambda_upper", iv.lambda_upper}};
}

void from_json(const json& j, BoundedInterval& iv) {
  j.at("lower").get_to(iv.lower);
  j.at("upper").get_to(iv.upper);
  iv.lambda_lower = j.value("lambda_lower", BoundedInterval{}.lambda_lower);
  iv.lambda_upper = j.value("lambda_upper", BoundedInterval{}.lambda_upper);
}

void to_json(json& j, const BoundedVector& x) {
  j = json{{"type", "bounded"}, {"values", x.values}, {"intervals", x.intervals}};
  if (!x.integral.empty()) {
    std::vector<bool> flags(x.integral.begin(), x.integral.end());
    j["integral"] = flags;
  }
}

void from_json(const json& j, BoundedVector& x) {
  j.at("values").get_to(x.values);
  if (j.contains("interval")) {
    // Single interval broadcast over all components.
    BoundedInterval iv = j.at("interval").get<BoundedInterval>();
    x.intervals.assign(x.values.size(), iv);
  } else {
    j.at("intervals").get_to(x.intervals);
  }
  x.integral.clear();
  if (j.contains("integral")) {
    const auto& flags = j.at("integral");
    if (flags.is_boolean()) {
      x.integral.assign(x.values.size(), flags.get<bool>() ? 1 : 0);
    } else {
      for (const auto& f : flags) x.integral.push_back(f.get<bool>() ? 1 : 0);
    }
  }
}

void to_json(json& j, const Permutation& p) {
  j = json{{"type", "permutation"}, {"order", p.order}};
}

void from_json(const json& j, Permutation& p) {
  if (j.is_array()) {
    j.get_to(p.order);
  } else {
    j.at("order").get_to(p.order);
  }
}

void to_json(json& j, const Provenance& p) {
  j = json{{"generator", p.generator}, {"params", p.params}};
  if (p.rng_seed) {
    j["rng_seed"] = *p.rng_seed;
    j["rng_algorithm"] = p.rng_algorithm;
  }
}

void from_json(const json& j, Provenance& p) {
  p.generator = j.value("generator", "");
  if (j.contains("params")) j.at("params").get_to(p.params);
  if (j.contains("rng_seed") && !j.at("rng_seed").is_null()) {
    p.rng_seed = j.at("rng_seed").get<std::uint64_t>();
    p.rng_algorithm = j.value("rng_algorithm", Rng::kAlgorithm);
  }
}

namespace {

std::string kind_name(ConstraintSystem::Kind k) {
  switch (k) {
    case ConstraintSystem::Kind::Gub: return "gub";
    case ConstraintSystem::Kind::GeneralizedMultipleChoice:
      return "generalized-multiple-choice";
    case ConstraintSystem::Kind::Cardinality: return "cardinality";
    case ConstraintSystem::Kind::Box: return "box";
  }
  return "gub";
}

ConstraintSystem::Kind kind_from_name(std::string name) {
  for (char& ch : name) {
    if (ch == '_' || ch == ' ') ch = '-';
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  if (name == "gub" || name == "multiple-choice") return ConstraintSystem::Kind::Gub;
  if (name == "generalized-multiple-choice" || name == "gmc") {
    return ConstraintSystem::Kind::GeneralizedMultipleChoice;
  }
  if (name == "cardinality") return ConstraintSystem::Kind::Cardinality;
  if (name == "box") return ConstraintSystem::Kind::Box;
  throw std::invalid_argument("unknown constraint kind '" + name + "'");
}

}  // namespace

void to_json(json& j, const ConstraintSystem& cs) {
  j = json{{"kind", kind_name(cs.kind)}};
  if (cs.kind == ConstraintSystem::Kind::Box) {
    j["bounds"] = cs.box_bounds;
    return;
  }
  json blocks = json::array();
  for (const auto& block : cs.blocks) {
    json b = json::array();
    for (int idx : block) b.push_back(idx + 1);
    blocks.push_back(std::move(b));
  }
  j["blocks"] = std::move(blocks);
  j["rhs"] = cs.rhs;
}

void from_json(const json& j, ConstraintSystem& cs) {
  cs = ConstraintSystem{};
  cs.kind = kind_from_name(j.at("kind").get<std::string>());
  if (cs.kind == ConstraintSystem::Kind::Box) {
    j.at("bounds").get_to(cs.box_bounds);
    return;
  }
  for (const auto& block : j.at("blocks")) {
    std::vector<int> b;
    for (const auto& idx : block) b.push_back(idx.get<int>() - 1);
    cs.blocks.push_back(std::move(b));
  }
  if (j.contains("rhs")) {
    j.at("rhs").get_to(cs.rhs);
  } else if (cs.kind == ConstraintSystem::Kind::Gub) {
    cs.rhs.assign(cs.blocks.size(), 1);
  } else {
    throw std::invalid_argument("constraint system is missing rhs");
  }
}

void to_json(json& j, const FrequencyMemory& m) {
  j = json{{"counts", m.counts}, {"total", m.total}};
}

void from_json(const json& j, FrequencyMemory& m) {
  j.at("counts").get_to(m.counts);
  j.at("total").get_to(m.total);
}

void to_json(json& j, const DiversityReport& r) {
  auto finite_or_string = [](double v) -> json {
    if (std::isinf(v)) return "inf";
    return v;
  };
  j = json{{"metric", metric_name(r.metric)},
           {"member_count", r.member_count},
           {"min_pairwise", finite_or_string(r.min_pairwise)},
           {"mean_pairwise", finite_or_string(r.mean_pairwise)},
           {"min_to_seed", finite_or_string(r.min_to_seed)}};
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

std::string format_value(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return std::to_string(v);
  return std::string(buf, end);
}

std::string csv_header(std::size_t n) {
  std::string h = "index";
  for (std::size_t j = 1; j <= n; ++j) h += ",x_" + std::to_string(j);
  return h;
}

namespace {

template <typename T, typename FieldFn>
void write_rows(std::ostream& os, const Collection<T>& c, FieldFn field) {
  const std::size_t n = c.members.empty() ? 0 : c.members.front().size();
  os << csv_header(n) << '\n';
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    os << (i + 1);
    for (std::size_t j = 0; j < c.members[i].size(); ++j) {
      os << ',' << field(c.members[i], j);
    }
    os << '\n';
  }
}

}  // namespace

void write_collection_csv(std::ostream& os, const BinaryCollection& c) {
  write_rows(os, c, [](const BinaryVector& x, std::size_t j) {
    return std::string(1, x.bits[j] ? '1' : '0');
  });
}

void write_collection_csv(std::ostream& os, const BoundedCollection& c) {
  write_rows(os, c,
             [](const BoundedVector& x, std::size_t j) { return format_value(x.values[j]); });
}

void write_collection_csv(std::ostream& os, const PermutationCollection& c) {
  write_rows(os, c,
             [](const Permutation& p, std::size_t j) { return std::to_string(p.order[j]); });
}

const char* const kDiversityReportCsvHeader =
    "metric,member_count,min_pairwise,mean_pairwise,min_to_seed";

std::string to_csv_row(const DiversityReport& r) {
  std::string row = metric_name(r.metric);
  row += ',' + std::to_string(r.member_count);
  row += ',' + format_value(r.min_pairwise);
  row += ',' + format_value(r.mean_pairwise);
  row += ',' + format_value(r.min_to_seed);
  return row;
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct CsvCell {
  std::string text;
  std::size_t line;   // 1-based
  std::size_t field;  // 1-based
};

using CsvRow = std::vector<CsvCell>;

[[noreturn]] void fail_at(const std::string& path, const CsvCell& cell,
                          const std::string& message) {
  throw parse_error(path + ":" + std::to_string(cell.line) + ":" +
                    std::to_string(cell.field) + ": " + message);
}

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Splits into non-empty rows of trimmed cells; a leading index,... header
// row is detected and marks the first column of every data row as an index
// to drop.
std::vector<CsvRow> parse_csv(const std::string& text, bool* has_index_column) {
  std::vector<CsvRow> rows;
  std::istringstream is(text);
  std::string line;
  std::size_t line_no = 0;
  *has_index_column = false;
  while (std::getline(is, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    CsvRow row;
    std::size_t start = 0;
    std::size_t field_no = 1;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      const std::string cell =
          trimmed(comma == std::string::npos ? line.substr(start)
                                             : line.substr(start, comma - start));
      row.push_back({cell, line_no, field_no});
      if (comma == std::string::npos) break;
      start = comma + 1;
      ++field_no;
    }
    if (rows.empty() && !row.empty() && row.front().text == "index") {
      *has_index_column = true;
      continue;  // header row carries no data
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double parse_double_cell(const std::string& path, const CsvCell& cell) {
  const char* begin = cell.text.data();
  const char* end = begin + cell.text.size();
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    fail_at(path, cell, "expected a number, got '" + cell.text + "'");
  }
  return v;
}

int parse_int_cell(const std::string& path, const CsvCell& cell) {
  const char* begin = cell.text.data();
  const char* end = begin + cell.text.size();
  int v = 0;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) {
    fail_at(path, cell, "expected an integer, got '" + cell.text + "'");
  }
  return v;
}

std::uint8_t parse_bit_cell(const std::string& path, const CsvCell& cell) {
  if (cell.text == "0") return 0;
  if (cell.text == "1") return 1;
  fail_at(path, cell, "expected 0 or 1, got '" + cell.text + "'");
}

bool looks_like_json(const std::string& text) {
  for (char ch : text) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    return ch == '{' || ch == '[';
  }
  return false;
}

json parse_json(const std::string& text, const std::string& path) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

template <typename T>
T from_json_checked(const json& j, const std::string& path) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
}

std::vector<CsvRow> data_rows(const std::string& path, const std::string& text) {
  bool has_index = false;
  std::vector<CsvRow> rows = parse_csv(text, &has_index);
  if (rows.empty()) {
    throw parse_error(path + ":1:1: no data rows");
  }
  if (has_index) {
    for (auto& row : rows) row.erase(row.begin());
  }
  return rows;
}

}  // namespace

BinaryVector load_binary_vector(const std::string& path) {
  const std::string text = read_text_file(path);
  if (looks_like_json(text)) {
    return from_json_checked<BinaryVector>(parse_json(text, path), path);
  }
  const CsvRow row = data_rows(path, text).front();
  BinaryVector x;
  for (const auto& cell : row) x.bits.push_back(parse_bit_cell(path, cell));
  return x;
}

Permutation load_permutation(const std::string& path) {
  const std::string text = read_text_file(path);
  if (looks_like_json(text)) {
    return from_json_checked<Permutation>(parse_json(text, path), path);
  }
  const CsvRow row = data_rows(path, text).front();
  Permutation p;
  for (const auto& cell : row) p.order.push_back(parse_int_cell(path, cell));
  return p;
}

BoundedVector load_bounded_vector(const std::string& path) {
  const std::string text = read_text_file(path);
  if (!looks_like_json(text)) {
    throw parse_error(path + ":1:1: bounded vectors need a JSON file carrying intervals "
                             "(or pass explicit bounds)");
  }
  return from_json_checked<BoundedVector>(parse_json(text, path), path);
}

BoundedVector load_bounded_vector(const std::string& path, const BoundedInterval& bounds,
                                  bool integral) {
  const std::string text = read_text_file(path);
  if (looks_like_json(text)) {
    const json j = parse_json(text, path);
    if (j.is_object() && j.contains("intervals")) {
      return from_json_checked<BoundedVector>(j, path);
    }
    std::vector<double> values = from_json_checked<std::vector<double>>(
        j.is_object() ? j.at("values") : j, path);
    return BoundedVector::uniform_bounds(std::move(values), bounds, integral);
  }
  const CsvRow row = data_rows(path, text).front();
  std::vector<double> values;
  for (const auto& cell : row) values.push_back(parse_double_cell(path, cell));
  return BoundedVector::uniform_bounds(std::move(values), bounds, integral);
}

BinaryCollection load_binary_collection(const std::string& path) {
  const std::string text = read_text_file(path);
  BinaryCollection c;
  if (looks_like_json(text)) {
    return from_json_checked<BinaryCollection>(parse_json(text, path), path);
  }
  for (const CsvRow& row : data_rows(path, text)) {
    BinaryVector x;
    for (const auto& cell : row) x.bits.push_back(parse_bit_cell(path, cell));
    c.members.push_back(std::move(x));
  }
  return c;
}

BoundedCollection load_bounded_collection(const std::string& path) {
  const std::string text = read_text_file(path);
  if (!looks_like_json(text)) {
    throw parse_error(path + ":1:1: bounded collections need a JSON file carrying "
                             "intervals (or pass explicit bounds)");
  }
  return from_json_checked<BoundedCollection>(parse_json(text, path), path);
}

BoundedCollection load_bounded_collection(const std::string& path,
                                          const BoundedInterval& bounds, bool integral) {
  const std::string text = read_text_file(path);
  if (looks_like_json(text)) {
    const json j = parse_json(text, path);
    if (j.is_object()) {
      return from_json_checked<BoundedCollection>(j, path);
    }
    BoundedCollection c;
    for (const auto& row : j) {
      c.members.push_back(BoundedVector::uniform_bounds(
          from_json_checked<std::vector<double>>(row, path), bounds, integral));
    }
    return c;
  }
  BoundedCollection c;
  for (const CsvRow& row : data_rows(path, text)) {
    std::vector<double> values;
    for (const auto& cell : row) values.push_back(parse_double_cell(path, cell));
    c.members.push_back(BoundedVector::uniform_bounds(std::move(values), bounds, integral));
  }
  return c;
}

ConstraintSystem load_constraint_system(const std::string& path) {
  const std::string text = read_text_file(path);
  if (!looks_like_json(text)) {
    throw parse_error(path + ":1:1: constraint systems are JSON");
  }
  return from_json_checked<ConstraintSystem>(parse_json(text, path), path);
}

FrequencyMemory load_frequency_memory(const std::string& path) {
  const std::string text = read_text_file(path);
  if (!looks_like_json(text)) {
    throw parse_error(path + ":1:1: frequency memory is JSON");
  }
  return from_json_checked<FrequencyMemory>(parse_json(text, path), path);
}

// ---------------------------------------------------------------------------
// Files and digests
// ---------------------------------------------------------------------------

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw io_error("cannot read " + path);
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) throw io_error("cannot write " + path);
}

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hex[h & 0xF];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string("fnv1a64:") + buf;
}

std::string file_digest(const std::string& path) { return digest(read_text_file(path)); }

}  // namespace divgen
