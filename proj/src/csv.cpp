#include "scsa/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "scsa/error.hpp"

namespace scsa {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_cell(std::string_view cell, std::size_t line) {
  cell = trim(cell);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || end != cell.data() + cell.size() || cell.empty()) {
    throw Error(ErrorKind::MalformedData,
                "line " + std::to_string(line) + ": cannot parse '" + std::string(cell) + "'");
  }
  return value;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "write to '" + path.string() + "' failed");
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

Signal read_signal_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");

  std::string line;
  std::size_t line_no = 0;
  std::vector<double> t;
  std::vector<double> y;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty()) continue;
    if (!header_seen) {
      header_seen = true;
      if (view.find(',') == std::string_view::npos) {
        throw Error(ErrorKind::MalformedData, "header must be 't,y'");
      }
      continue;
    }
    const auto comma = view.find(',');
    if (comma == std::string_view::npos || view.find(',', comma + 1) != std::string_view::npos) {
      throw Error(ErrorKind::MalformedData,
                  "line " + std::to_string(line_no) + ": expected two columns");
    }
    t.push_back(parse_cell(view.substr(0, comma), line_no));
    y.push_back(parse_cell(view.substr(comma + 1), line_no));
  }
  if (in.bad()) throw Error(ErrorKind::Io, "read from '" + path.string() + "' failed");
  if (t.size() < 2) throw Error(ErrorKind::InvalidSignal, "too few samples in '" + path.string() + "'");

  const double delta = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
  if (!(delta > 0.0)) throw Error(ErrorKind::MalformedData, "time column must increase");
  for (std::size_t i = 1; i < t.size(); ++i) {
    const double step = t[i] - t[i - 1];
    if (std::abs(step - delta) > 1e-6 * delta) {
      throw Error(ErrorKind::MalformedData,
                  "time column is not uniformly spaced near row " + std::to_string(i + 1));
    }
  }
  return Signal(std::move(y), delta, t.front());
}

void write_signal_csv(const std::filesystem::path& path, const Signal& y,
                      std::string_view value_name) {
  std::ofstream out = open_output(path);
  out << "t," << value_name << '\n';
  for (std::size_t i = 0; i < y.size(); ++i) {
    out << format_number(y.time(i)) << ',' << format_number(y[i]) << '\n';
  }
  finish(out, path);
}

void write_table_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out = open_output(path);
  const auto write_row = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      out << cells[i];
    }
    out << '\n';
  };
  write_row(header);
  for (const auto& row : rows) write_row(row);
  finish(out, path);
}

}  // namespace scsa
