#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "sortlab/harness.hpp"

namespace sortlab {

namespace {

template <class V>
void put(std::ostream& out, V v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("csv: cannot format value");
  out.write(buf, end - buf);
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

template <class V>
V parse(std::string_view field, std::size_t line_no) {
  V v{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::runtime_error("csv: bad number '" + std::string(field) + "' on line " + std::to_string(line_no));
  }
  return v;
}

}  // namespace

void write_csv(std::ostream& out, std::span<const ExperimentRecord> records) {
  out << csv_header << '\n';
  for (const auto& r : records) {
    out << r.algorithm << ',';
    put(out, r.n);
    out << ',';
    put(out, r.trials);
    out << ',';
    put(out, r.mean_comparisons);
    out << ',';
    put(out, r.stddev_comparisons);
    out << ',';
    put(out, r.mean_kappa);
    out << ',';
    put(out, r.mean_swaps);
    out << ',';
    put(out, r.mean_elapsed_ns);
    out << '\n';
  }
}

void write_csv_file(const std::string& path, std::span<const ExperimentRecord> records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_csv(out, records);
  out.flush();
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

std::vector<ExperimentRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != csv_header) throw std::runtime_error("csv: unexpected header '" + line + "'");

  std::vector<ExperimentRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 8) throw std::runtime_error("csv: expected 8 fields on line " + std::to_string(line_no));
    ExperimentRecord r;
    r.algorithm = std::string(f[0]);
    r.n = parse<std::size_t>(f[1], line_no);
    r.trials = parse<std::size_t>(f[2], line_no);
    r.mean_comparisons = parse<double>(f[3], line_no);
    r.stddev_comparisons = parse<double>(f[4], line_no);
    r.mean_kappa = parse<double>(f[5], line_no);
    r.mean_swaps = parse<double>(f[6], line_no);
    r.mean_elapsed_ns = parse<double>(f[7], line_no);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace sortlab
