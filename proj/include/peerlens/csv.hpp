#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace peerlens {

// Shortest round-trip decimal form, locale-independent.
std::string format_double(double value);

// RFC-4180-ish quoting, applied only when needed.
std::string csv_escape(std::string_view field);

class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path& path,
              const std::vector<std::string>& header);

    void row(const std::vector<std::string>& fields);
    void close();

  private:
    std::ofstream out_;
    std::size_t n_columns_;
};

// FNV-1a over raw file bytes; pins bundled data files in tests.
std::uint64_t fnv1a_file(const std::filesystem::path& path);

}  // namespace peerlens
