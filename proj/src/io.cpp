#include "efountain/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace efountain {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& message) {
  fail(ErrorCode::parse_error, "line " + std::to_string(line) + ": " + message);
}

// Reads the next line that contains anything but whitespace; returns false
// at end of input.
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
  }
  return false;
}

std::vector<long> parse_integers(const std::string& line, int line_no) {
  std::vector<long> out;
  std::istringstream is(line);
  std::string token;
  while (is >> token) {
    try {
      size_t used = 0;
      long value = std::stol(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(value);
    } catch (const std::exception&) {
      parse_fail(line_no, "expected an integer, got '" + token + "'");
    }
  }
  return out;
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io_error, "cannot open " + path);
  return in;
}

}  // namespace

FiniteSemigroup read_cayley_table(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) parse_fail(1, "empty input");
  const std::vector<long> header = parse_integers(line, line_no);
  if (header.size() != 1 || header[0] < 1)
    parse_fail(line_no, "expected a positive element count");
  const int m = static_cast<int>(header[0]);

  std::vector<std::vector<Index>> table;
  table.reserve(m);
  for (int r = 0; r < m; ++r) {
    if (!next_content_line(in, line, line_no))
      parse_fail(line_no + 1, "expected " + std::to_string(m) + " table rows");
    const std::vector<long> row = parse_integers(line, line_no);
    if (static_cast<int>(row.size()) != m)
      parse_fail(line_no, "expected " + std::to_string(m) + " entries in the row");
    table.emplace_back(row.begin(), row.end());
  }

  std::vector<std::string> labels;
  if (next_content_line(in, line, line_no)) {
    std::string trimmed = line;
    trimmed.erase(trimmed.find_last_not_of(" \t\r\n") + 1);
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
    if (trimmed != "labels:") parse_fail(line_no, "expected 'labels:' or end of file");
    for (int r = 0; r < m; ++r) {
      if (!std::getline(in, line)) parse_fail(line_no + r + 1, "expected a label per element");
      std::string label = line;
      label.erase(label.find_last_not_of("\r\n") + 1);
      labels.push_back(label);
    }
  }
  return from_cayley_table(table, std::move(labels));
}

FiniteSemigroup read_cayley_table_file(const std::string& path) {
  auto in = open_file(path);
  return read_cayley_table(in);
}

std::string write_cayley_table(const FiniteSemigroup& s) {
  std::ostringstream os;
  os << s.size() << '\n';
  for (Index a = 0; a < s.size(); ++a) {
    for (Index b = 0; b < s.size(); ++b) os << (b ? " " : "") << s.product(a, b);
    os << '\n';
  }
  if (s.has_labels()) {
    os << "labels:\n";
    for (Index a = 0; a < s.size(); ++a) os << s.label(a) << '\n';
  }
  return os.str();
}

std::vector<Transformation> read_transformations(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) parse_fail(1, "empty input");
  const std::vector<long> header = parse_integers(line, line_no);
  if (header.size() != 1 || header[0] < 1) parse_fail(line_no, "expected a positive degree");
  const int degree = static_cast<int>(header[0]);

  std::vector<Transformation> out;
  while (next_content_line(in, line, line_no)) {
    const std::vector<long> images = parse_integers(line, line_no);
    if (static_cast<int>(images.size()) != degree)
      parse_fail(line_no, "expected " + std::to_string(degree) + " images");
    for (long v : images)
      if (v < 1 || v > degree)
        parse_fail(line_no, "image " + std::to_string(v) + " outside [1, " +
                                std::to_string(degree) + "]");
    out.emplace_back(degree, std::vector<int>(images.begin(), images.end()));
  }
  if (out.empty()) parse_fail(line_no, "no generators given");
  return out;
}

FiniteSemigroup read_transformations_file(const std::string& path) {
  auto in = open_file(path);
  return from_transformations(read_transformations(in));
}

IndexSet read_e_set(std::istream& in, int size) {
  IndexSet out;
  std::string line;
  int line_no = 0;
  while (next_content_line(in, line, line_no))
    for (long v : parse_integers(line, line_no)) {
      if (v < 0 || v >= size)
        parse_fail(line_no, "E-set index " + std::to_string(v) + " outside [0, " +
                                std::to_string(size) + ")");
      out.push_back(static_cast<Index>(v));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IndexSet read_e_set_file(const std::string& path, int size) {
  auto in = open_file(path);
  return read_e_set(in, size);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::io_error, "cannot write " + path);
  out << text;
}

}  // namespace efountain
