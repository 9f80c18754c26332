#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "divgen/genbin.hpp"
#include "divgen/serialize.hpp"

using namespace divgen;
using nlohmann::json;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& content) {
    path = std::filesystem::temp_directory_path() / name;
    write_text_file(path.string(), content);
  }
  ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
};

}  // namespace

TEST_CASE("JSON round trip is exact for every solution type") {
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng.below(12);

    const BinaryVector b = BinaryVector::random(n, rng);
    CHECK(json(b).get<BinaryVector>() == b);

    Permutation p = Permutation::identity(n);
    for (std::size_t i = n - 1; i > 0; --i) {
      std::swap(p.order[i], p.order[rng.below(i + 1)]);
    }
    CHECK(json(p).get<Permutation>() == p);

    std::vector<double> values;
    std::vector<BoundedInterval> intervals;
    for (std::size_t j = 0; j < n; ++j) {
      const double lo = rng.uniform(-100.0, 100.0);
      const double hi = lo + rng.uniform(0.0, 50.0);
      intervals.emplace_back(lo, hi, rng.uniform(0.0, 0.5), rng.uniform(0.0, 0.5));
      values.push_back(rng.uniform(lo, hi));
    }
    const BoundedVector x(values, intervals, {});
    CHECK(json(x).get<BoundedVector>() == x);
  }
}

TEST_CASE("collection JSON keeps members, order and provenance") {
  const BinaryCollection c = sequential_generator(BinaryVector::zeros(8));
  const json j = c;
  const auto back = j.get<BinaryCollection>();
  CHECK(back.members == c.members);
  CHECK(back.provenance.generator == "sequential");
  CHECK(back.provenance.params.at("n") == "8");

  CHECK_THROWS_AS(j.get<PermutationCollection>(), std::invalid_argument);
}

TEST_CASE("constraint systems use 1-based blocks on the wire") {
  const json j = json::parse(R"({"kind":"gub","blocks":[[1,2,3],[4,5]],"rhs":[1,1]})");
  const auto cs = j.get<ConstraintSystem>();
  CHECK(cs.kind == ConstraintSystem::Kind::Gub);
  REQUIRE(cs.blocks.size() == 2);
  CHECK(cs.blocks[0] == std::vector<int>{0, 1, 2});
  CHECK(cs.blocks[1] == std::vector<int>{3, 4});
  const json round = cs;
  CHECK(round.at("blocks")[0] == json::array({1, 2, 3}));

  // rhs defaults to all ones for GUB
  const auto cs2 =
      json::parse(R"({"kind":"gub","blocks":[[1,2]]})").get<ConstraintSystem>();
  CHECK(cs2.rhs == std::vector<int>{1});

  CHECK_THROWS(json::parse(R"({"kind":"mystery","blocks":[[1]]})").get<ConstraintSystem>());
}

TEST_CASE("CSV output carries the 1-based header and index column") {
  BinaryCollection c;
  c.members.push_back(BinaryVector({1, 0, 1}));
  c.members.push_back(BinaryVector({0, 1, 0}));
  std::ostringstream os;
  write_collection_csv(os, c);
  CHECK(os.str() == "index,x_1,x_2,x_3\n1,1,0,1\n2,0,1,0\n");
}

TEST_CASE("bounded CSV values survive a round trip") {
  BoundedCollection c;
  c.members.push_back(BoundedVector::uniform_bounds({0.1, 2.0 / 3.0, 1e-17},
                                                    BoundedInterval(-1.0, 1.0)));
  std::ostringstream os;
  write_collection_csv(os, c);
  TempFile f("divgen_roundtrip.csv", os.str());
  const BoundedCollection back =
      load_bounded_collection(f.path.string(), BoundedInterval(-1.0, 1.0), false);
  REQUIRE(back.size() == 1);
  CHECK(back.members[0].values == c.members[0].values);
}

TEST_CASE("CSV loaders understand both bare rows and headered files") {
  TempFile plain("divgen_plain.csv", "0,1,1\n");
  CHECK(load_binary_vector(plain.path.string()) == BinaryVector({0, 1, 1}));

  TempFile headered("divgen_headered.csv", "index,x_1,x_2,x_3\n1,0,1,1\n");
  CHECK(load_binary_vector(headered.path.string()) == BinaryVector({0, 1, 1}));

  TempFile perm("divgen_perm.csv", "3,1,2\n");
  CHECK(load_permutation(perm.path.string()) == Permutation({3, 1, 2}));
}

TEST_CASE("parse errors name file, line and column") {
  TempFile bad("divgen_bad.csv", "index,x_1,x_2\n1,0,2\n");
  try {
    load_binary_vector(bad.path.string());
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("divgen_bad.csv:2:3") != std::string::npos);
  }

  TempFile bad_json("divgen_bad.json", "{\"bits\": [0, 1,");
  CHECK_THROWS_AS(load_binary_vector(bad_json.path.string()), parse_error);

  CHECK_THROWS_AS(load_binary_vector("/nonexistent/divgen.csv"), io_error);
}

TEST_CASE("digest is the stable FNV-1a of the content") {
  CHECK(digest("") == "fnv1a64:cbf29ce484222325");
  CHECK(digest("a") == digest("a"));
  CHECK(digest("a") != digest("b"));
  TempFile f("divgen_digest.txt", "payload");
  CHECK(file_digest(f.path.string()) == digest("payload"));
}

TEST_CASE("format_value round trips doubles") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-9, 123456789.0, 8.0}) {
    CHECK(std::stod(format_value(v)) == v);
  }
  CHECK(format_value(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("diversity report serializes to one CSV row") {
  DiversityReport r;
  r.metric = Metric::Hamming;
  r.member_count = 6;
  r.min_pairwise = 2.0;
  r.mean_pairwise = 3.2;
  r.min_to_seed = 2.0;
  CHECK(std::string(kDiversityReportCsvHeader) ==
        "metric,member_count,min_pairwise,mean_pairwise,min_to_seed");
  CHECK(to_csv_row(r) == "hamming,6,2,3.2,2");
}
