#include <algorithm>
#include <charconv>
#include <cmath>

#include "figdraw/bench.hpp"
#include "figdraw/errors.hpp"

namespace figdraw::bench {

namespace {

std::string number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

double parse_number(std::string_view s, std::size_t line) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw RangeError("csv line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
  }
  return v;
}

} // namespace

std::string_view unit_name(Unit u) noexcept { return u == Unit::seconds ? "seconds" : "count"; }

void SampleTable::add(Sample s) {
  if (!std::isfinite(s.x) || !std::isfinite(s.value)) {
    throw NumericError("sample x and value must be finite");
  }
  if (s.method.empty() || s.method.find_first_of(",\"\r\n") != std::string::npos) {
    throw RangeError("method label must be non-empty without commas, quotes or line breaks");
  }
  if (!rows_.empty() && rows_.front().unit != s.unit) {
    throw RangeError("a sample table holds a single unit");
  }
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    if (it->method != s.method) continue;
    if (!(s.x > it->x)) {
      throw RangeError("x values of method " + s.method + " must strictly increase");
    }
    break;
  }
  rows_.push_back(std::move(s));
}

std::vector<std::string> SampleTable::methods() const {
  std::vector<std::string> out;
  for (const auto& r : rows_) {
    if (std::ranges::find(out, r.method) == out.end()) out.push_back(r.method);
  }
  return out;
}

std::vector<Sample> SampleTable::series(std::string_view method) const {
  std::vector<Sample> out;
  for (const auto& r : rows_) {
    if (r.method == method) out.push_back(r);
  }
  return out;
}

void SampleTable::append(const SampleTable& other) {
  for (const auto& r : other.rows_) add(r);
}

std::string export_csv(const SampleTable& table) {
  std::string out = "x,method,value,unit\n";
  for (const auto& r : table.rows()) {
    out += number(r.x);
    out += ',';
    out += r.method;
    out += ',';
    out += number(r.value);
    out += ',';
    out += unit_name(r.unit);
    out += '\n';
  }
  return out;
}

SampleTable parse_csv(std::string_view csv) {
  SampleTable table;
  std::size_t line_no = 0;
  while (!csv.empty()) {
    const auto nl = csv.find('\n');
    if (nl == std::string_view::npos) throw RangeError("csv must end with a line break");
    const auto line = csv.substr(0, nl);
    csv.remove_prefix(nl + 1);
    ++line_no;
    if (line_no == 1) {
      if (line != "x,method,value,unit") throw RangeError("csv header mismatch");
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 4) {
      throw RangeError("csv line " + std::to_string(line_no) + ": expected 4 fields");
    }
    Unit unit;
    if (fields[3] == "seconds") {
      unit = Unit::seconds;
    } else if (fields[3] == "count") {
      unit = Unit::count;
    } else {
      throw RangeError("csv line " + std::to_string(line_no) + ": unknown unit");
    }
    table.add({parse_number(fields[0], line_no), std::string(fields[1]),
               parse_number(fields[2], line_no), unit});
  }
  if (line_no == 0) throw RangeError("csv is missing its header");
  return table;
}

} // namespace figdraw::bench
