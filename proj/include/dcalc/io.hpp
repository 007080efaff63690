#pragma once

// Text formats: graph JSON, form CSV and sample CSV.
//
//   graph:   {"vertices": 4, "edges": [[0,1],[1,2]], "labels": ["a","b","c","d"]}
//   form:    degree,simplex,value[,imag]   e.g.  1,0-2,-3.5
//   samples: x,f                            consecutive integer x

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dcalc/complex.hpp"
#include "dcalc/numcore.hpp"

namespace dcalc {

Graph parse_graph_json(std::string_view text);
std::string graph_to_json(const Graph& g);

// Decimal ("-1.25", "3e-2") or fraction ("7/3") text, lifted exactly.
Rational parse_rational(std::string_view text);
// Doubles are dyadic rationals, so this is exact.
Rational lift(double d);

// Printed with 12 significant digits.
std::string format_double(double d);

struct FormEntry {
  int degree = 0;
  std::size_t index = 0;  // position in simplices(degree)
  std::complex<double> value;
  Rational exact;  // real part as written
};

// Entries on non-ascending simplices are converted with the permutation sign.
// Unlisted simplices are zero. A header line starting with "degree" is skipped.
std::vector<FormEntry> parse_form_csv(const ComplexOfGraph& c, std::string_view text);
// Dense vector over all degrees (offset(k) layout).
std::vector<std::complex<double>> form_vector(const ComplexOfGraph& c, const std::vector<FormEntry>& entries);
std::vector<double> real_form_vector(const ComplexOfGraph& c, const std::vector<FormEntry>& entries);
// Exact values of the entries of one degree.
std::vector<Rational> exact_form_values(const ComplexOfGraph& c, const std::vector<FormEntry>& entries, int degree);

std::string simplex_label(const Simplex& s);

// Rows "x,f"; x must be consecutive integers. A header line is skipped.
Sequence parse_samples_csv(std::string_view text);
// Comma separated values on one line, read as f(0), f(1), ...
std::vector<double> parse_value_list(std::string_view text);

std::string read_file(const std::string& path);

}  // namespace dcalc
