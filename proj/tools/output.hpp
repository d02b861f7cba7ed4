#pragma once

// Rendering of command results as aligned tables, CSV or JSON.

#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace sasaki::cli {

enum class OutputFormat { Table, Json, Csv };

struct Output {
  nlohmann::json doc;
  // Optional tabular view; when empty, table/CSV output flattens `doc`.
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // Key/value lines printed above the table in table mode.
  std::vector<std::pair<std::string, std::string>> summary;
};

inline std::string scalar_text(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

inline void flatten(const nlohmann::json& j, const std::string& prefix,
                    std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const auto& e) {
               return e.is_object() || e.is_array();
             })) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else if (j.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? " " : "") + scalar_text(j[i]);
    out.emplace_back(prefix, s);
  } else {
    out.emplace_back(prefix, scalar_text(j));
  }
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n ") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

inline void print_aligned(std::ostream& os, const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) s += "  ";
      s += std::string(width[c] - cells[c].size(), ' ') + cells[c];
    }
    os << s << '\n';
  };
  line(header);
  std::size_t total = 0;
  for (auto w : width) total += w;
  os << std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') << '\n';
  for (const auto& row : rows) line(row);
}

inline void render(std::ostream& os, const Output& out, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json:
      os << out.doc.dump(2) << '\n';
      return;
    case OutputFormat::Csv: {
      auto header = out.header;
      auto rows = out.rows;
      if (header.empty()) {
        std::vector<std::pair<std::string, std::string>> kv;
        flatten(out.doc, "", kv);
        std::vector<std::string> row;
        for (auto& [k, v] : kv) {
          header.push_back(k);
          row.push_back(v);
        }
        rows = {row};
      }
      for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_field(header[i]);
      os << '\n';
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << '\n';
      }
      return;
    }
    case OutputFormat::Table: {
      std::size_t key_width = 0;
      for (const auto& [k, v] : out.summary) key_width = std::max(key_width, k.size());
      for (const auto& [k, v] : out.summary) {
        os << k << std::string(key_width - k.size(), ' ') << "  " << v << '\n';
      }
      if (!out.header.empty()) {
        if (!out.summary.empty()) os << '\n';
        print_aligned(os, out.header, out.rows);
      } else if (out.summary.empty()) {
        std::vector<std::pair<std::string, std::string>> kv;
        flatten(out.doc, "", kv);
        std::size_t w = 0;
        for (const auto& [k, v] : kv) w = std::max(w, k.size());
        for (const auto& [k, v] : kv) os << k << std::string(w - k.size(), ' ') << "  " << v << '\n';
      }
      return;
    }
  }
}

}  // namespace sasaki::cli
