#include <doctest.h>

#include <fstream>
#include <sstream>

#include "golden_cases.hpp"
#include "minorb/cli/cli.hpp"
#include "minorb/cli/json_io.hpp"
#include "minorb/cli/tables.hpp"

using namespace minorb;
using namespace minorb::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class T>
void round_trip(const T& value) {
  const json j = encode(value);
  const json reparsed = json::parse(j.dump());
  CHECK(encode(decode<T>(reparsed)) == j);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("golden outputs") {
  for (const auto& c : testing::golden_cases()) {
    CAPTURE(c.name);
    const Result r = invoke(c.args);
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out == read_file(std::string(MINORB_GOLDEN_DIR) + "/" + c.name + ".txt"));
  }
}

TEST_CASE("outputs are deterministic") {
  for (const auto& c : testing::golden_cases()) {
    CHECK(invoke(c.args).out == invoke(c.args).out);
    std::vector<std::string> with_json = c.args;
    with_json.insert(with_json.begin(), "--json");
    CHECK(invoke(with_json).out == invoke(with_json).out);
  }
}

TEST_CASE("residue spectrum output") {
  CHECK(invoke({"grade", "E8", "7", "--mod", "29"}).out ==
        "82X[ 0] +54X[ 1] +27X[ 2] + 2X[ 3] + 2X[26] +27X[27] +54X[28]\n");
  CHECK(invoke({"dim", "A2", "1,0"}).out == "3\n");
}

TEST_CASE("usage and domain errors exit with 2") {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"frobnicate", "E8"},
      {"cartan"},
      {"cartan", "E9"},
      {"cartan", "Q3"},
      {"dim", "A2", "1"},
      {"dim", "A2", "1,x"},
      {"dim", "A2", "--", "-1,0"},
      {"grade", "E8", "9"},
      {"grade", "E8", "0"},
      {"grade", "E8", "7", "--mod", "0"},
      {"levi", "E8", "9"},
      {"minorbit", "A2", "0,0"},
      {"table", "7"},
      {"table", "5", "--max-rank", "0"},
  };
  for (const auto& args : bad) {
    const Result r = invoke(args);
    CAPTURE(r.err);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("help exits with 0") {
  const Result r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("grade") != std::string::npos);
}

TEST_CASE("low-rank coincidences carry a notice") {
  const Result c2 = invoke({"cartan", "c2"});
  CHECK(c2.code == 0);
  CHECK(c2.err.find("B2") != std::string::npos);
  CHECK(c2.out == invoke({"cartan", "B2"}).out);
  const Result d3 = invoke({"roots", "D3"});
  CHECK(d3.err.find("A3") != std::string::npos);
  CHECK(invoke({"cartan", "b2"}).err.empty());
}

TEST_CASE("json envelope") {
  const Result r = invoke({"--json", "grade", "E8", "7", "--mod", "29"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("format_version") == kFormatVersion);
  CHECK(j.at("command") == "grade");
  CHECK(j.at("type") == "E8");
  CHECK(j.at("payload").at("modulus") == 29);
  CHECK(j.at("payload").at("residues").size() == 7);

  const json big = json::parse(invoke({"dim", "E8", "1,1,1,1,1,1,1,1", "--json"}).out);
  CHECK(big.at("payload").at("dim") == "1329227995784915872903807060280344576");
  const json small = json::parse(invoke({"dim", "E8", "0,0,0,0,0,0,0,1", "--json"}).out);
  CHECK(small.at("payload").at("dim") == 248);
  CHECK(json::parse(invoke({"--json", "table", "4"}).out).at("type").is_null());
}

TEST_CASE("json payloads round-trip") {
  const RootSystem e8(SimpleType(Family::E, 8));
  round_trip(levi_data(e8, std::vector<int>{7, 8}));
  round_trip(grade_adjoint(e8, 7));
  round_trip(branch_adjoint(e8, 7));
  round_trip(lowest_weight_of_v_alpha(e8, 7));
  round_trip(BigInt("1329227995784915872903807060280344576"));
  round_trip(cartan_matrix(SimpleType(Family::G, 2)));
  for (const char* label : {"E7", "E8", "A1", "C5", "D4"}) {
    const InvariantReport report = full_report(SimpleType::parse(label));
    round_trip(report);
    const InvariantReport back = decode<InvariantReport>(json::parse(encode(report).dump()));
    CHECK(back.type == report.type);
    CHECK(back.min.argmin == report.min.argmin);
    CHECK(back.d.d == report.d.d);
    CHECK(back.r.factors == report.r.factors);
    CHECK(back.smooth_closure == report.smooth_closure);
  }
}

TEST_CASE("table text and json come from the same rows") {
  const TableReport t = build_table(5, 6);
  const json j = encode(t);
  REQUIRE(j.at("rows").size() == t.rows.size());
  const std::string text = render_text(t);
  for (const auto& row : j.at("rows"))
    CHECK(text.find(row.at("cells").at("G").get<std::string>()) != std::string::npos);
}

TEST_CASE("evaluated table rows") {
  const TableReport t = build_table(5, 12);
  std::map<std::string, std::vector<std::int64_t>> rows;
  for (const auto& row : t.rows) {
    if (row.family) continue;
    rows[std::get<std::string>(row.cells[0])] = {std::get<std::int64_t>(row.cells[1]), std::get<std::int64_t>(row.cells[2]),
                                                 std::get<std::int64_t>(row.cells[3])};
  }
  CHECK(rows.size() == 12 + 11 + 10 + 9 + 5);
  CHECK(rows.at("E7") == std::vector<std::int64_t>{54, 45, 28});
  CHECK(rows.at("E8") == std::vector<std::int64_t>{112, 86, 58});
  CHECK(rows.at("A2") == std::vector<std::int64_t>{4, 4, 3});
  CHECK(rows.at("A3") == std::vector<std::int64_t>{5, 5, 4});
  for (int n = 4; n <= 12; ++n) CHECK(rows.at("A" + std::to_string(n)) == std::vector<std::int64_t>{2 * n, 2 * n, n + 1});
  for (int n = 3; n <= 12; ++n)
    CHECK(rows.at("C" + std::to_string(n)) == std::vector<std::int64_t>{4 * (n - 1), 4 * (n - 1), 2 * n});
}

}  // TEST_SUITE
