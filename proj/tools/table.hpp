#pragma once

// Record output shared by the subcommands: csv, json or aligned text.

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace dualg::cli {

enum class Format { csv, json, text };

using Field = std::variant<std::string, std::int64_t, double>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Field>> rows;

  void add(std::vector<Field> row) { rows.push_back(std::move(row)); }
};

inline std::string cell_text(const Field& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  std::ostringstream os;
  os.precision(17);
  os << std::get<double>(c);
  return os.str();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline nlohmann::json cell_json(const Field& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  return std::get<double>(c);
}

inline void write_table(std::ostream& os, const Table& t, Format f) {
  switch (f) {
    case Format::csv: {
      for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << csv_field(t.header[i]);
      os << '\n';
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(row[i]));
        os << '\n';
      }
      break;
    }
    case Format::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& row : t.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size() && i < t.header.size(); ++i) obj[t.header[i]] = cell_json(row[i]);
        arr.push_back(std::move(obj));
      }
      os << arr.dump(2) << '\n';
      break;
    }
    case Format::text: {
      std::vector<std::size_t> width(t.header.size(), 0);
      for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
      for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], cell_text(row[i]).size());
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          std::string c = cells[i];
          if (i + 1 < cells.size() && i < width.size()) c.resize(width[i], ' ');
          s += (i ? "  " : "") + c;
        }
        os << s << '\n';
      };
      line(t.header);
      for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (const auto& c : row) cells.push_back(cell_text(c));
        line(cells);
      }
      break;
    }
  }
}

// gnuplot reads whitespace columns; '#' starts a comment line
inline void write_plot_data(std::ostream& os, const Table& t, const std::string& title) {
  os << "# " << title << '\n' << "#";
  for (const auto& h : t.header) os << ' ' << h;
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::string s = cell_text(row[i]);
      for (char& ch : s)
        if (ch == ' ') ch = '_';
      os << (i ? " " : "") << s;
    }
    os << '\n';
  }
}

}  // namespace dualg::cli
