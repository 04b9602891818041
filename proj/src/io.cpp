#include "fourierlab/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "fourierlab/error.hpp"

namespace fourierlab {

std::string format_double(double v) {
  char buf[40];
  if (v == 0.0) v = 0.0;  // no "-0" in files
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t\r");
  std::size_t end = text.find_last_not_of(" \t\r");
  require(begin != std::string::npos, "empty numeric field");
  const char* first = text.data() + begin;
  const char* last = text.data() + end + 1;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, v);
  require(ec == std::errc() && ptr == last, "malformed number '" + text + "'");
  return v;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string trim(std::string s) {
  s.erase(0, s.find_first_not_of(" \t\r"));
  s.erase(s.find_last_not_of(" \t\r") + 1);
  return s;
}

}  // namespace

void write_csv(std::ostream& out, const CsvTable& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), "CSV input is empty");
  for (auto& name : split_fields(line)) table.header.push_back(trim(name));
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    require(fields.size() == table.header.size(), "CSV row width does not match header");
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_double(f));
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_coefficients_csv(std::ostream& out, const CoefficientTable& table) {
  CsvTable csv{{"k", "re", "im"}, {}};
  const int K = table.kmax();
  for (long k = -K; k <= K; ++k) {
    const cplx c = table[k];
    csv.rows.push_back({static_cast<double>(k), c.real(), c.imag()});
  }
  write_csv(out, csv);
}

CoefficientTable read_coefficients_csv(std::istream& in) {
  const CsvTable csv = read_csv(in);
  require(csv.header == std::vector<std::string>{"k", "re", "im"},
          "coefficient CSV needs header k,re,im");
  std::map<long, cplx> by_k;
  for (const auto& row : csv.rows) {
    require(row[0] == std::round(row[0]), "coefficient CSV: k must be an integer");
    const long k = static_cast<long>(row[0]);
    require(by_k.emplace(k, cplx{row[1], row[2]}).second, "coefficient CSV: duplicate k");
  }
  require(!by_k.empty(), "coefficient CSV has no rows");
  const long K = by_k.rbegin()->first;
  require(K >= 0 && by_k.begin()->first == -K &&
              by_k.size() == static_cast<std::size_t>(2 * K + 1),
          "coefficient CSV must cover k = -K..K");
  std::vector<cplx> values;
  values.reserve(by_k.size());
  double scale = 0.0;
  for (const auto& [k, c] : by_k) {
    values.push_back(c);
    scale = std::max(scale, std::abs(c));
  }
  bool real = std::abs(values[K].imag()) <= 1e-12 * std::max(scale, 1.0);
  for (long k = 1; real && k <= K; ++k) {
    real = std::abs(values[K - k] - std::conj(values[K + k])) <= 1e-12 * std::max(scale, 1.0);
  }
  return CoefficientTable(static_cast<int>(K), std::move(values), real);
}

void write_samples_csv(std::ostream& out, const std::vector<cplx>& samples) {
  CsvTable csv{{"j", "re", "im"}, {}};
  for (std::size_t j = 0; j < samples.size(); ++j) {
    csv.rows.push_back({static_cast<double>(j), samples[j].real(), samples[j].imag()});
  }
  write_csv(out, csv);
}

std::vector<cplx> read_samples_csv(std::istream& in) {
  const CsvTable csv = read_csv(in);
  require(csv.header == std::vector<std::string>{"j", "re", "im"},
          "sample CSV needs header j,re,im");
  std::vector<cplx> out(csv.rows.size());
  std::vector<bool> seen(csv.rows.size(), false);
  for (const auto& row : csv.rows) {
    const double j = row[0];
    require(j == std::round(j) && j >= 0 && j < static_cast<double>(out.size()),
            "sample CSV: index out of range");
    const auto idx = static_cast<std::size_t>(j);
    require(!seen[idx], "sample CSV: duplicate index");
    seen[idx] = true;
    out[idx] = {row[1], row[2]};
  }
  return out;
}

namespace {

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

}  // namespace

void write_flat_json(std::ostream& out, const FlatJson& fields) {
  out << "{\n";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out << "  " << json_string(fields[i].first) << ": ";
    std::visit(
        [&out](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>) {
            out << (std::isfinite(v) ? format_double(v) : "null");
          } else if constexpr (std::is_same_v<T, long long>) {
            out << v;
          } else if constexpr (std::is_same_v<T, bool>) {
            out << (v ? "true" : "false");
          } else {
            out << json_string(v);
          }
        },
        fields[i].second);
    out << (i + 1 < fields.size() ? ",\n" : "\n");
  }
  out << "}\n";
}

}  // namespace fourierlab
