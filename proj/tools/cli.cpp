#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>

#include "dcalc/complex.hpp"
#include "dcalc/error.hpp"
#include "dcalc/evolution.hpp"
#include "dcalc/expr.hpp"
#include "dcalc/forms.hpp"
#include "dcalc/interpolate.hpp"
#include "dcalc/io.hpp"
#include "dcalc/numcore.hpp"
#include "dcalc/topology.hpp"
#include "plot.hpp"

namespace dcalc::cli {
namespace {

struct Range {
  std::string lo, hi;
};

Range split_range(const std::string& text) {
  const auto colon = text.find(':', 1);  // a leading '-' is a sign
  if (colon == std::string::npos) throw ParseError("range must look like LO:HI", text.size());
  return {text.substr(0, colon), text.substr(colon + 1)};
}

long to_long(const std::string& s) {
  const Rational r = parse_rational(s);
  if (!is_integral(r) || !r.get_num().fits_slong_p()) throw ParseError("expected an integer, got '" + s + "'", 0);
  return r.get_num().get_si();
}

std::string show(const Number& n) { return n.is_exact() ? to_string(n.exact()) : format_double(n.to_double()); }

std::string show(const Rational& r) { return to_string(r); }

// ---------------------------------------------------------------------------
// eval / sum / taylor / table

struct EvalArgs {
  std::string expr, op = "none", range;
  std::optional<std::string> at;
  bool symbolic = false;
};

int do_eval(const EvalArgs& a, std::ostream& out) {
  const ClosedForm f = parse(a.expr);
  if (!a.at && a.range.empty() && !a.symbolic) throw ParseError("eval needs --at, --range or --symbolic", 0);
  std::optional<ClosedForm> g;
  if (a.op == "none") {
    g = f;
  } else if (a.op == "diff") {
    g = derivative(f);
  } else {
    try {
      g = antiderivative(f);
    } catch (const NoClosedForm&) {
      if (a.symbolic) throw;
    }
  }
  if (a.symbolic) out << to_string(*g) << "\n";
  auto value = [&](long x) -> Number {
    if (g) return eval(*g, x);
    return x >= 0 ? direct_sum(f, 0, x) : -direct_sum(f, x, 0);
  };
  if (a.at) out << show(value(to_long(*a.at))) << "\n";
  if (!a.range.empty()) {
    const Range r = split_range(a.range);
    const long lo = to_long(r.lo), hi = to_long(r.hi);
    if (hi < lo) throw DomainError("empty range");
    if (hi - lo > 100000) throw DomainError("range longer than 100000 points");
    for (long x = lo; x <= hi; ++x) out << x << "," << show(value(x)) << "\n";
  }
  return 0;
}

int do_sum(const std::string& expr, const std::string& from, const std::string& to, const std::string& method,
           std::ostream& out) {
  const ClosedForm f = parse(expr);
  const long a = to_long(from), b = to_long(to);
  if (b < a - 1) throw DomainError("--to must not be below --from - 1");
  Number s;
  if (method == "direct") {
    s = direct_sum(f, a, b + 1);
  } else if (method == "closed") {
    const ClosedForm F = antiderivative(f);
    s = eval(F, b + 1) - eval(F, a);
  } else {
    s = definite_sum(f, a, b + 1);
  }
  out << show(s) << "\n";
  return 0;
}

int do_taylor(const std::string& path, const std::optional<std::string>& at, bool print, std::ostream& out) {
  const Sequence samples = parse_samples_csv(read_file(path));
  if (!at && !print) throw ParseError("taylor needs --eval or --print", 0);
  if (print) {
    if (samples.base() != 0) throw DomainError("--print needs samples starting at x = 0");
    out << to_string(interpolate_fit(samples)) << "\n";
  }
  if (at) {
    const DifferenceTable t = forward_differences(samples);
    const Rational x = parse_rational(*at);
    if (is_integral(x)) {
      out << show(newton_gregory_eval(t, x.get_num())) << "\n";
    } else {
      out << format_double(newton_gregory_eval(t, x.get_d())) << "\n";
    }
  }
  return 0;
}

int do_table(const std::string& fn, const std::string& a_text, const std::string& range, std::ostream& out) {
  const Range r = split_range(range);
  const long lo = to_long(r.lo), hi = to_long(r.hi);
  if (hi < lo) throw DomainError("empty range");
  if (hi - lo > 100000) throw DomainError("range longer than 100000 points");
  const Rational a = parse_rational(a_text);
  auto int_a = [&]() {
    if (!is_integral(a) || !a.get_num().fits_slong_p()) throw DomainError("--a must be an integer for " + fn);
    return a.get_num().get_si();
  };
  for (long x = lo; x <= hi; ++x) {
    std::string v;
    if (fn == "sin") {
      v = show(sin_discrete(int_a(), x));
    } else if (fn == "cos") {
      v = show(cos_discrete(int_a(), x));
    } else if (fn == "tan") {
      if (a != 1) throw DomainError("tan is tabulated for a = 1 only");
      v = tan_discrete(x).to_string();
    } else if (fn == "exp") {
      v = show(exp_real(a, x));
    } else if (fn.rfind("pow:", 0) == 0) {
      const long n = to_long(fn.substr(4));
      v = n >= 0 ? show(Rational(falling_power(Integer(x), n))) : format_double(reciprocal_power(static_cast<double>(x), static_cast<int>(-n)));
    } else {
      throw ParseError("unknown function '" + fn + "'", 0);
    }
    out << x << "," << v << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// graph / forms / pde

struct GraphArgs {
  std::string gen, file;
};

ComplexOfGraph load(const GraphArgs& g) {
  if (g.gen.empty() == g.file.empty()) throw ParseError("give exactly one of --gen and --file", 0);
  Graph graph = g.gen.empty() ? parse_graph_json(read_file(g.file)) : generate(g.gen);
  return ComplexOfGraph(std::move(graph), 8);
}

std::vector<double> function_values(const ComplexOfGraph& c, const std::string& fn) {
  if (fn.empty()) throw ParseError("this action needs --fn v0,v1,...", 0);
  std::vector<double> f = parse_value_list(fn);
  if (static_cast<int>(f.size()) != c.graph().vertex_count())
    throw DomainError("--fn has " + std::to_string(f.size()) + " values for " + std::to_string(c.graph().vertex_count()) +
                      " vertices");
  return f;
}

std::string tuple(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

std::string vertex_list(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s.empty() ? "-" : s;
}

struct GraphOpts {
  std::string fn;
  bool parallel = false;
  std::uint64_t samples = 0, seed = 1;
  std::string cut;
};

int do_graph(const std::string& action, const GraphArgs& ga, const GraphOpts& o, std::ostream& out) {
  const ComplexOfGraph c = load(ga);
  const int n = c.graph().vertex_count();
  if (action == "info") {
    std::vector<long> f;
    for (auto v : c.f_vector()) f.push_back(static_cast<long>(v));
    out << "v=" << n << ", e=" << c.graph().edge_count() << ", χ=" << euler_characteristic(c) << "\n";
    out << "f=" << tuple(f) << "\n";
  } else if (action == "export") {
    out << graph_to_json(c.graph()) << "\n";
  } else if (action == "betti") {
    out << tuple(betti(c)) << "\n";
  } else if (action == "curvature") {
    out << "vertex,curvature\n";
    Rational total = 0;
    for (int x = 0; x < n; ++x) {
      const Rational k = curvature(c, x);
      total += k;
      out << x << "," << show(k) << "\n";
    }
    out << "total," << show(total) << "\n";
  } else if (action == "indices") {
    const std::vector<double> f = function_values(c, o.fn);
    const IndexReport r = poincare_hopf(c, f);
    out << "vertex,index,class,curvature\n";
    Rational total_k = 0;
    for (int x = 0; x < n; ++x) {
      const Rational k = curvature(c, x);
      total_k += k;
      out << x << "," << r.points[x].index << "," << to_string(r.points[x]) << "," << show(k) << "\n";
    }
    out << "total," << r.total << ",," << show(total_k) << "\n";
  } else if (action == "classify") {
    const Classification k = classify(c);
    out << to_string(k.shape) << "\n";
    out << "boundary: " << vertex_list(k.boundary) << "\n";
    out << "interior: " << vertex_list(k.interior) << "\n";
    out << "flat: " << (k.flat ? "yes" : "no") << "\n";
  } else if (action == "expectation") {
    ExpectationOptions opt;
    opt.parallel = o.parallel;
    if (o.samples > 0) opt.samples = o.samples;
    opt.seed = o.seed;
    const std::vector<Rational> e = index_expectation(c, opt);
    out << "vertex,expectation,curvature\n";
    for (int x = 0; x < n; ++x) out << x << "," << show(e[x]) << "," << show(curvature(c, x)) << "\n";
  } else if (action == "umlaufsatz") {
    out << show(umlaufsatz_sum(c)) << "\n";
  } else if (action == "level") {
    if (o.cut.empty()) throw ParseError("level needs --cut", 0);
    const LevelCurve l = level_curve(c, function_values(c, o.fn), parse_rational(o.cut).get_d());
    const ComplexOfGraph lc(l.graph);
    out << "points=" << l.graph.vertex_count() << ", links=" << l.graph.edge_count()
        << ", components=" << l.graph.components().size() << ", shape="
        << (l.graph.vertex_count() == 0 ? std::string("empty") : to_string(classify(lc).shape)) << "\n";
    for (std::size_t i = 0; i < l.edges.size(); ++i) out << i << "," << simplex_label(c.simplex(1, l.edges[i])) << "\n";
  }
  return 0;
}

void print_matrix(const OperatorMatrix& m, std::ostream& out) {
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.entries.cols(); ++j) out << (j ? " " : "") << m.entries(i, j);
    out << "\n";
  }
}

template <class T>
void print_form(const ComplexOfGraph& c, int degree, const std::vector<T>& v, std::ostream& out) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if constexpr (std::is_same_v<T, double>) {
      out << degree << "," << simplex_label(c.simplex(degree, i)) << "," << format_double(v[i]) << "\n";
    } else {
      out << degree << "," << simplex_label(c.simplex(degree, i)) << "," << show(v[i]) << "\n";
    }
  }
}

std::vector<std::size_t> parse_region(const ComplexOfGraph& c, int k, const std::string& text) {
  std::vector<std::size_t> region;
  if (text.empty()) {
    for (std::size_t i = 0; i < c.count(k); ++i) region.push_back(i);
    return region;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::vector<int> s;
    std::stringstream parts(item);
    std::string v;
    while (std::getline(parts, v, '-')) s.push_back(static_cast<int>(to_long(v)));
    if (static_cast<int>(s.size()) != k + 1) throw ParseError("region simplex " + item + " has the wrong size", 0);
    if (sort_with_sign(s) == 0) throw DomainError("repeated vertex in " + item);
    region.push_back(c.index_of(s));
  }
  return region;
}

struct FormsOpts {
  int degree = -1;
  std::string form, region, fn;
};

int do_forms(const std::string& action, const GraphArgs& ga, const FormsOpts& o, std::ostream& out) {
  const ComplexOfGraph c = load(ga);
  auto need_degree = [&]() {
    if (o.degree < 0) throw ParseError("this action needs --degree K", 0);
    return o.degree;
  };
  auto entries = [&]() {
    if (o.form.empty()) throw ParseError("this action needs --form PATH", 0);
    return parse_form_csv(c, read_file(o.form));
  };
  if (action == "d") {
    print_matrix(exterior_derivative(c, need_degree()), out);
  } else if (action == "codiff") {
    print_matrix(codifferential(c, need_degree()), out);
  } else if (action == "dirac") {
    print_matrix(dirac(c), out);
  } else if (action == "laplacian") {
    print_matrix(o.degree >= 0 ? laplacian_block(c, o.degree) : laplacian(c), out);
  } else if (action == "grad") {
    const std::vector<double> f = function_values(c, o.fn);
    std::vector<Rational> exact;
    for (double v : f) exact.push_back(lift(v));
    print_form(c, 1, apply_d(c, Form<Rational>{0, exact}).values, out);
  } else if (action == "stokes") {
    const auto e = entries();
    const int k = o.degree >= 0 ? o.degree : (e.empty() ? 1 : e.front().degree);
    const Form<Rational> F{k, exact_form_values(c, e, k)};
    const auto region = parse_region(c, k + 1, o.region);
    const StokesReport<Rational> r = stokes_residual<Rational>(c, region, F);
    out << "interior=" << show(r.interior) << "\n";
    out << "boundary=" << show(r.boundary) << "\n";
    out << "residual=" << show(r.residual) << "\n";
  } else if (action == "potential") {
    const auto e = entries();
    const std::vector<Rational> f = potential(c, Form<Rational>{1, exact_form_values(c, e, 1)});
    print_form(c, 0, f, out);
  } else if (action == "poisson") {
    const auto e = entries();
    std::vector<double> j;
    for (const Rational& v : exact_form_values(c, e, 1)) j.push_back(v.get_d());
    const PoissonResult r = poisson_maxwell(c, j);
    out << "gauge=" << format_double(r.gauge) << "\n";
    out << "maxwell=" << format_double(r.maxwell) << "\n";
    out << "closed=" << format_double(r.closed) << "\n";
    print_form(c, 1, r.A, out);
    print_form(c, 2, r.F, out);
  }
  return 0;
}

struct PdeOpts {
  double t = 0;
  int steps = 1;
  std::string form, velocity;
};

int do_pde(const std::string& action, const GraphArgs& ga, const PdeOpts& o, std::ostream& out) {
  const ComplexOfGraph c = load(ga);
  if (o.steps < 1) throw ParseError("--steps must be positive", 0);
  if (!std::isfinite(o.t)) throw DomainError("--t must be finite");
  const auto f0 = parse_form_csv(c, read_file(o.form));
  std::vector<std::pair<int, std::size_t>> cells;  // (degree, index) in offset order
  for (int k = 0; k <= c.top_degree(); ++k)
    for (std::size_t i = 0; i < c.count(k); ++i) cells.emplace_back(k, i);
  auto label = [&](std::size_t i) { return simplex_label(c.simplex(cells[i].first, cells[i].second)); };
  auto time = [&](int s) { return o.t * s / o.steps; };
  // eigenbasis round-off below this prints as 0
  auto value = [](double v) { return format_double(std::abs(v) < 1e-12 ? 0.0 : v); };

  if (action == "schrodinger") {
    const auto psi = form_vector(c, f0);
    out << "t,simplex,re,im\n";
    for (int s = 0; s <= o.steps; ++s) {
      const auto v = schrodinger_flow(c, psi, time(s));
      for (std::size_t i = 0; i < v.size(); ++i)
        out << format_double(time(s)) << "," << label(i) << "," << value(v[i].real()) << ","
            << value(v[i].imag()) << "\n";
    }
    return 0;
  }
  const auto f = real_form_vector(c, f0);
  std::optional<WaveFlow> wave;
  if (action == "wave") {
    const std::vector<double> g =
        o.velocity.empty() ? std::vector<double>(f.size(), 0.0) : real_form_vector(c, parse_form_csv(c, read_file(o.velocity)));
    wave.emplace(c, f, g);
  } else if (!o.velocity.empty()) {
    throw ParseError("--velocity applies to the wave equation only", 0);
  }
  out << "t,simplex,value\n";
  for (int s = 0; s <= o.steps; ++s) {
    const auto v = wave ? wave->position(time(s)) : heat_flow(c, f, time(s));
    for (std::size_t i = 0; i < v.size(); ++i) out << format_double(time(s)) << "," << label(i) << "," << value(v[i]) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// plot

struct PlotOpts {
  std::string fn, range, path;
  double a = 1, h = 1;
  int samples = 400;
};

int do_plot(const PlotOpts& o, std::ostream& out) {
  const Range r = split_range(o.range);
  const double lo = parse_rational(r.lo).get_d(), hi = parse_rational(r.hi).get_d();
  if (!(hi > lo)) throw DomainError("plot range must have LO < HI");
  if (!(o.h > 0)) throw DomainError("--h must be positive");
  if ((hi - lo) / o.h > 1e6) throw DomainError("too many grid points");
  if (o.samples < 2) throw ParseError("--samples must be at least 2", 0);

  std::function<double(double)> discrete, classical;
  double y_min = -INFINITY, y_max = INFINITY;
  const double a = o.a, h = o.h;
  if (o.fn == "sin") {
    discrete = [=](double x) { return sin_h(a, h, x); };
    classical = [=](double x) { return std::sin(a * x); };
  } else if (o.fn == "cos") {
    discrete = [=](double x) { return cos_h(a, h, x); };
    classical = [=](double x) { return std::cos(a * x); };
  } else if (o.fn == "tan") {
    discrete = [=](double x) { return sin_h(a, h, x) / cos_h(a, h, x); };
    classical = [=](double x) { return std::tan(a * x); };
    y_min = -10, y_max = 10;
  } else if (o.fn == "exp") {
    discrete = [=](double x) { return exp_h(a, h, x); };
    classical = [=](double x) { return std::exp(a * x); };
  } else if (o.fn == "log") {
    if (lo <= 0) throw DomainError("log needs a positive range");
    discrete = [](double x) { return log_discrete(x); };
    classical = [](double x) { return std::log(x); };
  } else if (o.fn.rfind("pow:", 0) == 0) {
    const long n = to_long(o.fn.substr(4));
    if (n < 0) throw DomainError("pow:N needs N >= 0");
    discrete = [=](double x) { return falling_power(x, n, h); };
    classical = [=](double x) { return std::pow(x, static_cast<double>(n)); };
  } else {
    throw ParseError("unknown function '" + o.fn + "'", 0);
  }

  Series d, k;
  const long steps = static_cast<long>(std::floor((hi - lo) / h + 1e-9));
  for (long i = 0; i <= steps; ++i) {
    const double x = lo + static_cast<double>(i) * h;
    d.emplace_back(x, discrete(x));
  }
  for (int i = 0; i < o.samples; ++i) {
    const double x = lo + (hi - lo) * i / (o.samples - 1);
    k.emplace_back(x, classical(x));
  }
  const std::string title = o.fn + " with a=" + format_double(a) + ", h=" + format_double(h);
  std::ofstream file(o.path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + o.path);
  file << comparison_svg(d, k, title, y_min, y_max);
  if (!file) throw std::runtime_error("cannot write " + o.path);
  out << "wrote " << o.path << " (" << d.size() << " discrete points, " << k.size() << " classical points)\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Calculus on the integers and on graphs", "dcalc"};
  app.require_subcommand(1, 1);

  EvalArgs ev;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression, its difference or its sum function");
  eval_cmd->add_option("expr", ev.expr, "Expression in x, e.g. \"3*[x]^5 + 3^x - 2*x + 7\"")->required();
  auto* at_opt = eval_cmd->add_option("--at", ev.at, "Integer argument");
  eval_cmd->add_option("--range", ev.range, "Integer range LO:HI, both ends included")->excludes(at_opt);
  eval_cmd->add_option("--op", ev.op, "none, diff (D f) or sum (S f)")
      ->check(CLI::IsMember({"none", "diff", "sum"}));
  eval_cmd->add_flag("--symbolic", ev.symbolic, "Print the closed form of the result");

  std::string sum_expr, sum_from, sum_to, sum_method = "auto";
  auto* sum_cmd = app.add_subcommand("sum", "f(A) + ... + f(B)");
  sum_cmd->add_option("expr", sum_expr, "Expression in x")->required();
  sum_cmd->add_option("--from", sum_from, "First term")->required();
  sum_cmd->add_option("--to", sum_to, "Last term (included)")->required();
  sum_cmd->add_option("--method", sum_method, "auto, closed (antiderivative) or direct")
      ->check(CLI::IsMember({"auto", "closed", "direct"}));

  std::string taylor_path;
  std::optional<std::string> taylor_at;
  bool taylor_print = false;
  auto* taylor_cmd = app.add_subcommand("taylor", "Newton-Gregory interpolation of integer samples");
  taylor_cmd->add_option("--samples", taylor_path, "CSV file with rows x,f")->required();
  taylor_cmd->add_option("--eval", taylor_at, "Argument (integer for an exact value)");
  taylor_cmd->add_flag("--print", taylor_print, "Print the interpolating polynomial");

  std::string table_fn, table_a = "1", table_range;
  auto* table_cmd = app.add_subcommand("table", "Exact values of sin, cos, tan, exp or [x]^N on integers");
  table_cmd->add_option("--fn", table_fn, "sin, cos, tan, exp or pow:N")->required();
  table_cmd->add_option("--a", table_a, "Frequency or growth parameter");
  table_cmd->add_option("--range", table_range, "Integer range LO:HI, both ends included")->required();

  GraphArgs ga;
  auto add_graph_source = [&](CLI::App* cmd) {
    auto* gen = cmd->add_option("--gen", ga.gen, "Generator NAME:N, e.g. cycle:7, wheel:6, octahedron");
    cmd->add_option("--file", ga.file, "Graph JSON file")->excludes(gen);
  };

  std::string graph_action;
  GraphOpts go;
  auto* graph_cmd = app.add_subcommand("graph", "Simplices, topology and indices of a graph");
  graph_cmd->add_option("action", graph_action)
      ->required()
      ->check(CLI::IsMember(
          {"info", "export", "betti", "curvature", "indices", "classify", "expectation", "umlaufsatz", "level"}));
  add_graph_source(graph_cmd);
  graph_cmd->add_option("--fn", go.fn, "Vertex values v0,v1,...");
  graph_cmd->add_option("--cut", go.cut, "Level for the level curve");
  graph_cmd->add_flag("--parallel", go.parallel, "Split the permutation enumeration over threads");
  graph_cmd->add_option("--samples", go.samples, "Random orderings instead of all of them");
  graph_cmd->add_option("--seed", go.seed, "Seed for --samples");

  std::string forms_action;
  FormsOpts fo;
  auto* forms_cmd = app.add_subcommand("forms", "Exterior derivative, Dirac and Laplace operators, integral theorems");
  forms_cmd->add_option("action", forms_action)
      ->required()
      ->check(CLI::IsMember({"d", "codiff", "dirac", "laplacian", "grad", "stokes", "potential", "poisson"}));
  add_graph_source(forms_cmd);
  forms_cmd->add_option("--degree", fo.degree, "Form degree");
  forms_cmd->add_option("--form", fo.form, "Form CSV file");
  forms_cmd->add_option("--region", fo.region, "Simplices such as 0-1-2,0-2-3 (default: all)");
  forms_cmd->add_option("--fn", fo.fn, "Vertex values v0,v1,...");

  std::string pde_action;
  PdeOpts po;
  auto* pde_cmd = app.add_subcommand("pde", "Heat, wave and Schroedinger flows");
  pde_cmd->add_option("action", pde_action)->required()->check(CLI::IsMember({"heat", "wave", "schrodinger"}));
  add_graph_source(pde_cmd);
  pde_cmd->add_option("--t", po.t, "Final time")->required();
  pde_cmd->add_option("--steps", po.steps, "Number of time steps after t = 0");
  pde_cmd->add_option("--form", po.form, "Initial form CSV")->required();
  pde_cmd->add_option("--velocity", po.velocity, "Initial velocity CSV (wave)");

  PlotOpts pl;
  auto* plot_cmd = app.add_subcommand("plot", "SVG comparing a deformed function with its classical counterpart");
  plot_cmd->set_help_flag("--help", "Print this help message and exit");  // frees --h for the step size
  plot_cmd->add_option("--fn", pl.fn, "sin, cos, tan, exp, log or pow:N")->required();
  plot_cmd->add_option("--a", pl.a, "Frequency or growth parameter");
  plot_cmd->add_option("--h", pl.h, "Step size");
  plot_cmd->add_option("--range", pl.range, "Real interval LO:HI")->required();
  plot_cmd->add_option("--out", pl.path, "Output SVG path")->required();
  plot_cmd->add_option("--samples", pl.samples, "Points on the classical curve");

  std::vector<std::string> argv_store{"dcalc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (*eval_cmd) return do_eval(ev, out);
    if (*sum_cmd) return do_sum(sum_expr, sum_from, sum_to, sum_method, out);
    if (*taylor_cmd) return do_taylor(taylor_path, taylor_at, taylor_print, out);
    if (*table_cmd) return do_table(table_fn, table_a, table_range, out);
    if (*graph_cmd) return do_graph(graph_action, ga, go, out);
    if (*forms_cmd) return do_forms(forms_action, ga, fo, out);
    if (*pde_cmd) return do_pde(pde_action, ga, po, out);
    if (*plot_cmd) return do_plot(pl, out);
  } catch (const NotGradientField& e) {
    err << "error: " << e.what() << "\n";
    std::string cycle;
    for (int v : e.cycle()) cycle += (cycle.empty() ? "" : " -> ") + std::to_string(v);
    if (!e.cycle().empty()) err << "cycle: " << cycle << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace dcalc::cli
