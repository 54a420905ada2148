#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "halobeam/errors.hpp"

namespace halobeam {

/// Decimal text for a real value: 17 significant digits, '.' separator,
/// locale-independent. Identical inputs always format to identical bytes.
std::string format_real(double value);

/// Comma-separated output with a fixed column order per file.
class CsvWriter {
  public:
    /// Opens (truncates) `path`; throws IoError on failure.
    explicit CsvWriter(const std::string& path);

    void write_row(const std::vector<std::string>& fields);

    /// Flushes and verifies the stream; throws IoError on failure.
    void close();

  private:
    std::ofstream out_;
    std::string path_;
};

}  // namespace halobeam
