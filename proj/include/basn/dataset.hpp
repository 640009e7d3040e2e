#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

// Named samples and CSV ingestion. The CSV dialect is fixed: comma separator,
// '.' decimal point, optional single header row (auto-detected), no locale
// handling. Parse failures carry the file name and line number.
namespace basn {

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Dataset {
  std::string name;
  std::vector<double> values;  // all finite
  std::size_t n() const { return values.size(); }
};

// Validates finiteness. Size floors are enforced where fitting starts, not
// here; tiny datasets are still useful for tabulation and tests.
Dataset make_dataset(std::string name, std::vector<double> values);

// column: empty selects the only column (error if several); otherwise a
// 0-based index or a header name.
Dataset ingest_csv(const std::string& path, const std::string& column = "");

}  // namespace basn
