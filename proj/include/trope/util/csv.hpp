#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace trope {

// RFC-4180-ish CSV: quoted fields, embedded commas/quotes/newlines, CRLF.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in);

  const std::vector<std::string>& header() const { return header_; }
  bool has_column(const std::string& name) const;

  // Returns false at EOF. Rows shorter than the header are padded with
  // empty fields; longer rows keep their extras (accessible by index only).
  bool next_row(std::vector<std::string>& fields);

  std::optional<std::string> field(const std::vector<std::string>& fields,
                                   const std::string& column) const;

 private:
  std::istream& in_;
  std::vector<std::string> header_;
  std::unordered_map<std::string, size_t> index_;
  bool parse_record(std::vector<std::string>& fields);
};

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void write_row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

std::string csv_escape(const std::string& field);

}  // namespace trope
