#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fourierlab/numeric.hpp"
#include "fourierlab/periodic.hpp"

namespace fourierlab {

/// Shortest-safe text for a double: 17 significant digits, lossless round trip.
std::string format_double(double v);

/// Parses a whole field as a double; throws InvalidArgument on junk.
double parse_double(const std::string& text);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& out, const CsvTable& table);
/// Reads a numeric CSV with one header line. Every row must have the header's width.
CsvTable read_csv(std::istream& in);

/// `k,re,im`, k ascending.
void write_coefficients_csv(std::ostream& out, const CoefficientTable& table);
/// Inverse of write_coefficients_csv. Rows must cover k = -K..K exactly once;
/// the table is flagged real when it is conjugate symmetric to 1e-12.
CoefficientTable read_coefficients_csv(std::istream& in);

/// `j,re,im`, j = 0..N-1.
void write_samples_csv(std::ostream& out, const std::vector<cplx>& samples);
std::vector<cplx> read_samples_csv(std::istream& in);

using JsonScalar = std::variant<double, long long, bool, std::string>;
using FlatJson = std::vector<std::pair<std::string, JsonScalar>>;

/// One-level JSON object, keys in the given order; non-finite doubles become null.
void write_flat_json(std::ostream& out, const FlatJson& fields);

}  // namespace fourierlab
