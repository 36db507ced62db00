#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "casimir/error.hpp"
#include "casimir/io/csv.hpp"

using namespace casimir;

TEST_CASE("csv cells use 12 significant digits") {
  CHECK(io::format_cell(1.0) == "1.00000000000e+00");
  CHECK(io::format_cell(-6.853891945200944e-03) == "-6.85389194520e-03");
  CHECK(io::format_cell(std::int64_t{42}) == "42");
  CHECK(io::format_cell(std::string("zeta")) == "zeta");
  CHECK(io::format_cell(std::nan("")) == "nan");
}

TEST_CASE("csv writer") {
  const auto dir = std::filesystem::temp_directory_path() / "casimir_csv_test";
  std::filesystem::remove_all(dir);
  {
    io::CsvWriter w(dir / "sub" / "t.csv", {"a", "b"});
    w.row({std::int64_t{1}, 0.5});
    CHECK_THROWS_AS(w.row({std::int64_t{1}}), PreconditionError);
  }
  std::ifstream in(dir / "sub" / "t.csv");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "a,b\n1,5.00000000000e-01\n");
  std::filesystem::remove_all(dir);
}
