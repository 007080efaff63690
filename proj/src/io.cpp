#include "dcalc/io.hpp"

#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dcalc/error.hpp"

namespace dcalc {

Graph parse_graph_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid graph JSON: ") + e.what(), e.byte);
  }
  try {
    if (!j.is_object() || !j.contains("vertices")) throw ParseError("graph JSON needs a \"vertices\" field", 0);
    const int n = j.at("vertices").get<int>();
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges"))
      for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [i, j]", 0);
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Graph(n, std::move(edges), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what(), 0);
  }
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j.dump();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t p = 0;
  while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  s = s.substr(p);
  auto fail = [&]() -> Rational { throw ParseError("not a number: '" + s + "'", 0); };
  if (s.empty()) return fail();

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const Rational num = parse_rational(s.substr(0, slash));
    const Rational den = parse_rational(s.substr(slash + 1));
    if (!is_integral(num) || !is_integral(den)) return fail();
    if (den == 0) throw DomainError("zero denominator");
    return Rational(num / den);
  }

  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long scale = 0;
  bool any = false, dot = false;
  for (; i < s.size(); ++i) {
    const char ch = s[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
      any = true;
      if (dot) --scale;
    } else if (ch == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!any) return fail();
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    const std::string rest = s.substr(i);
    if (rest.empty()) return fail();
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(rest, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != rest.size() || std::abs(e) > 10000) return fail();
    scale += e;
    i = s.size();
  }
  if (i != s.size()) return fail();

  Rational r{Integer(digits)};
  Integer ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(scale)));
  if (scale >= 0) {
    r *= ten;
  } else {
    r /= ten;
  }
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

Rational lift(double d) {
  if (!std::isfinite(d)) throw DomainError("non-finite value");
  return Rational(d);
}

std::string format_double(double d) {
  if (d == 0) return "0";  // avoids "-0"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", d);
  return buf;
}

std::string simplex_label(const Simplex& s) {
  std::string out;
  for (int v : s) out += (out.empty() ? "" : "-") + std::to_string(v);
  return out;
}

namespace {

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  for (auto& f : out) {
    while (!f.empty() && std::isspace(static_cast<unsigned char>(f.front()))) f.erase(f.begin());
    while (!f.empty() && std::isspace(static_cast<unsigned char>(f.back()))) f.pop_back();
  }
  return out;
}

std::vector<std::string> lines_of(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (!blank && line[line.find_first_not_of(" \t")] != '#') out.push_back(line);
  }
  return out;
}

double parse_real(const std::string& s) { return parse_rational(s).get_d(); }

int parse_int(const std::string& s) {
  const Rational r = parse_rational(s);
  if (!is_integral(r) || !r.get_num().fits_sint_p()) throw ParseError("expected an integer, got '" + s + "'", 0);
  return static_cast<int>(r.get_num().get_si());
}

}  // namespace

std::vector<FormEntry> parse_form_csv(const ComplexOfGraph& c, std::string_view text) {
  std::vector<FormEntry> out;
  const auto lines = lines_of(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto f = split(lines[n], ',');
    if (n == 0 && !f.empty() && f[0] == "degree") continue;
    if (f.size() != 3 && f.size() != 4) throw ParseError("form row needs degree,simplex,value[,imag]: '" + lines[n] + "'", 0);
    FormEntry e;
    e.degree = parse_int(f[0]);
    std::vector<int> s;
    for (const auto& v : split(f[1], '-')) s.push_back(parse_int(v));
    if (static_cast<int>(s.size()) != e.degree + 1)
      throw ParseError("simplex " + f[1] + " does not have degree " + f[0], 0);
    const int sign = sort_with_sign(s);
    const auto idx = c.find(s);
    if (sign == 0 || !idx) throw DomainError("not a simplex of the graph: " + f[1]);
    e.index = *idx;
    e.exact = parse_rational(f[2]) * sign;
    e.value = {e.exact.get_d(), f.size() == 4 ? parse_real(f[3]) * sign : 0.0};
    out.push_back(e);
  }
  return out;
}

std::vector<std::complex<double>> form_vector(const ComplexOfGraph& c, const std::vector<FormEntry>& entries) {
  std::vector<std::complex<double>> v(c.total());
  for (const auto& e : entries) v[c.offset(e.degree) + e.index] += e.value;
  return v;
}

std::vector<double> real_form_vector(const ComplexOfGraph& c, const std::vector<FormEntry>& entries) {
  std::vector<double> v(c.total(), 0.0);
  for (const auto& e : entries) {
    if (e.value.imag() != 0) throw DomainError("expected a real form");
    v[c.offset(e.degree) + e.index] += e.value.real();
  }
  return v;
}

std::vector<Rational> exact_form_values(const ComplexOfGraph& c, const std::vector<FormEntry>& entries, int degree) {
  std::vector<Rational> v(c.count(degree), Rational(0));
  for (const auto& e : entries) {
    if (e.degree != degree) throw DomainError("expected a form of degree " + std::to_string(degree));
    if (e.value.imag() != 0) throw DomainError("expected a real form");
    v[e.index] += e.exact;
  }
  return v;
}

Sequence parse_samples_csv(std::string_view text) {
  const auto lines = lines_of(text);
  std::vector<Rational> values;
  long base = 0;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const auto f = split(lines[n], ',');
    if (n == 0 && !f.empty() && f[0] == "x") continue;
    if (f.size() != 2) throw ParseError("sample row needs x,f: '" + lines[n] + "'", 0);
    const long x = parse_int(f[0]);
    if (values.empty()) {
      base = x;
    } else if (x != base + static_cast<long>(values.size())) {
      throw DomainError("sample x values must be consecutive integers");
    }
    values.push_back(parse_rational(f[1]));
  }
  if (values.empty()) throw DomainError("no samples");
  return Sequence(base, std::move(values));
}

std::vector<double> parse_value_list(std::string_view text) {
  std::vector<double> out;
  for (const auto& f : split(text, ',')) out.push_back(parse_real(f));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace dcalc
