#include "trope/util/csv.hpp"

#include <istream>
#include <ostream>

namespace trope {

CsvReader::CsvReader(std::istream& in) : in_(in) {
  std::vector<std::string> fields;
  if (parse_record(fields)) {
    header_ = fields;
    for (size_t i = 0; i < header_.size(); ++i) index_[header_[i]] = i;
  }
}

bool CsvReader::has_column(const std::string& name) const {
  return index_.count(name) > 0;
}

bool CsvReader::next_row(std::vector<std::string>& fields) {
  if (!parse_record(fields)) return false;
  while (fields.size() < header_.size()) fields.emplace_back();
  return true;
}

std::optional<std::string> CsvReader::field(
    const std::vector<std::string>& fields, const std::string& column) const {
  auto it = index_.find(column);
  if (it == index_.end() || it->second >= fields.size()) return std::nullopt;
  return fields[it->second];
}

bool CsvReader::parse_record(std::vector<std::string>& fields) {
  fields.clear();
  int c = in_.get();
  if (c == EOF) return false;
  std::string cur;
  bool quoted = false;
  bool any = false;
  while (true) {
    if (c == EOF) {
      fields.push_back(cur);
      return true;
    }
    char ch = static_cast<char>(c);
    if (quoted) {
      if (ch == '"') {
        int nxt = in_.get();
        if (nxt == '"') {
          cur.push_back('"');
        } else {
          quoted = false;
          c = nxt;
          continue;
        }
      } else {
        cur.push_back(ch);
      }
    } else if (ch == '"' && cur.empty() && !any) {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
      any = false;
      c = in_.get();
      continue;
    } else if (ch == '\r') {
      int nxt = in_.get();
      if (nxt == '\n' || nxt == EOF) {
        fields.push_back(cur);
        return true;
      }
      cur.push_back(ch);
      c = nxt;
      continue;
    } else if (ch == '\n') {
      fields.push_back(cur);
      return true;
    } else {
      cur.push_back(ch);
      any = true;
    }
    c = in_.get();
  }
}

std::string csv_escape(const std::string& field) {
  bool needs = false;
  for (char c : field) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') {
      needs = true;
      break;
    }
  }
  if (!needs) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void CsvWriter::write_row(const std::vector<std::string>& fields) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << csv_escape(fields[i]);
  }
  out_ << '\n';
}

}  // namespace trope
