#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "basn/dataset.hpp"

using namespace basn;
namespace fs = std::filesystem;

namespace {

std::string write_csv(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / "basn_csv_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream out(p);
  out << content;
  out.close();
  return p.string();
}

}  // namespace

TEST_CASE("make_dataset validates finiteness") {
  const auto d = make_dataset("demo", {1.0, -2.5, 3.0});
  CHECK(d.n() == 3);
  CHECK(d.name == "demo");
  CHECK_THROWS_AS(make_dataset("bad", {1.0, std::numeric_limits<double>::quiet_NaN()}),
                  DataError);
  CHECK_THROWS_AS(make_dataset("bad", {std::numeric_limits<double>::infinity()}), DataError);
}

TEST_CASE("single column without header") {
  const auto path = write_csv("plain.csv", "1.5\n2.5\n-3\n");
  const auto d = ingest_csv(path);
  CHECK(d.name == "plain");
  REQUIRE(d.n() == 3);
  CHECK(d.values[0] == 1.5);
  CHECK(d.values[1] == 2.5);
  CHECK(d.values[2] == -3.0);
}

TEST_CASE("single column with auto-detected header") {
  const auto path = write_csv("with_header.csv", "x\n1\n2\n3\n");
  const auto d = ingest_csv(path);
  REQUIRE(d.n() == 3);
  CHECK(d.values == std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("multi-column selection by name and by index") {
  const auto path = write_csv("multi.csv", "a,b\n1,4\n2,5\n3,6\n");
  const auto by_name = ingest_csv(path, "b");
  CHECK(by_name.values == std::vector<double>{4.0, 5.0, 6.0});
  CHECK(by_name.name == "multi:b");
  const auto by_index = ingest_csv(path, "1");
  CHECK(by_index.values == std::vector<double>{4.0, 5.0, 6.0});
  const auto first = ingest_csv(path, "0");
  CHECK(first.values == std::vector<double>{1.0, 2.0, 3.0});
  const auto first_by_name = ingest_csv(path, "a");
  CHECK(first_by_name.values == std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("multi-column without selection is an error") {
  const auto path = write_csv("multi2.csv", "a,b\n1,4\n");
  CHECK_THROWS_WITH_AS(ingest_csv(path), doctest::Contains("select one with --column"),
                       DataError);
}

TEST_CASE("bad column selections") {
  const auto path = write_csv("multi3.csv", "a,b\n1,4\n");
  CHECK_THROWS_WITH_AS(ingest_csv(path, "5"), doctest::Contains("out of range"), DataError);
  CHECK_THROWS_WITH_AS(ingest_csv(path, "zzz"), doctest::Contains("no column named"),
                       DataError);
  const auto headerless = write_csv("nohdr.csv", "1,2\n3,4\n");
  CHECK_THROWS_WITH_AS(ingest_csv(headerless, "b"), doctest::Contains("no header"), DataError);
}

TEST_CASE("non-numeric cell reports the line") {
  const auto path = write_csv("badcell.csv", "x\n1\nfoo\n3\n");
  CHECK_THROWS_WITH_AS(ingest_csv(path), doctest::Contains(":3: cell 'foo' is not numeric"),
                       DataError);
}

TEST_CASE("ragged rows are rejected") {
  const auto path = write_csv("ragged.csv", "a,b\n1,2\n3\n");
  CHECK_THROWS_WITH_AS(ingest_csv(path, "a"), doctest::Contains("expected 2 cells, found 1"),
                       DataError);
}

TEST_CASE("windows line endings and blank lines") {
  const auto path = write_csv("crlf.csv", "x\r\n1\r\n\r\n2\r\n");
  const auto d = ingest_csv(path);
  CHECK(d.values == std::vector<double>{1.0, 2.0});
}

TEST_CASE("missing and empty files") {
  CHECK_THROWS_WITH_AS(ingest_csv("/no/such/file.csv"), doctest::Contains("cannot open"),
                       DataError);
  const auto path = write_csv("empty.csv", "");
  CHECK_THROWS_WITH_AS(ingest_csv(path), doctest::Contains("no data rows"), DataError);
  const auto blank = write_csv("blank.csv", "\n\n\n");
  CHECK_THROWS_AS(ingest_csv(blank), DataError);
}

TEST_CASE("non-finite values in files are rejected") {
  const auto path = write_csv("infval.csv", "x\n1\ninf\n");
  CHECK_THROWS_WITH_AS(ingest_csv(path), doctest::Contains("non-finite"), DataError);
  const auto nanpath = write_csv("nanval.csv", "x\n1\nnan\n");
  CHECK_THROWS_AS(ingest_csv(nanpath), DataError);
}

TEST_CASE("whitespace around cells is tolerated") {
  const auto path = write_csv("spaces.csv", " x , y \n 1 , 4 \n 2 , 5 \n");
  const auto d = ingest_csv(path, "y");
  CHECK(d.values == std::vector<double>{4.0, 5.0});
}
