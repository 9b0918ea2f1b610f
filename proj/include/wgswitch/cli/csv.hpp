#pragma once

#include <string>
#include <vector>

namespace wgswitch::cli {

/// Shortest general form with 17 significant digits, '.' decimal separator,
/// "nan"/"inf"/"-inf" for non-finite values.
std::string format_double(double x);

/// Row-oriented CSV builder with '\n' line endings.
class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string>& header);

  void row(const std::vector<double>& values);
  [[nodiscard]] const std::string& str() const { return out_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }

 private:
  std::size_t columns_;
  std::size_t rows_ = 0;
  std::string out_;
};

}  // namespace wgswitch::cli
