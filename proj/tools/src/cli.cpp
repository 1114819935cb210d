#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <sstream>

#include "eulerperc/clusters.hpp"
#include "eulerperc/contour.hpp"
#include "eulerperc/coupling.hpp"
#include "eulerperc/even_measure.hpp"
#include "eulerperc/exact_graph.hpp"
#include "eulerperc/fk.hpp"
#include "eulerperc/ising.hpp"
#include "eulerperc/lattice.hpp"
#include "eulerperc/monotone.hpp"
#include "eulerperc/polynomial.hpp"
#include "eulerperc/version.hpp"

namespace eulerperc::cli {

namespace {

using Json = nlohmann::ordered_json;

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string timestamp() {
  std::time_t t = 0;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  } else {
    t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

Json manifest(const std::string& subcommand, Json parameters, std::uint64_t seed) {
  return Json{{"subcommand", subcommand},
              {"parameters", std::move(parameters)},
              {"seed", seed},
              {"version", kVersion},
              {"created", timestamp()}};
}

// Destination chosen by --out: a file, "-" for the report stream, or the
// default directory from the environment when --out is empty.
class Output {
 public:
  Output(const std::string& flag, const std::string& default_name, std::ostream& fallback) {
    std::string path = flag;
    if (path.empty()) {
      if (const char* dir = std::getenv(kOutDirEnv); dir != nullptr && *dir != '\0') {
        path = (std::filesystem::path(dir) / default_name).string();
      }
    }
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw std::runtime_error("cannot open output file " + path);
    stream_ = file_.get();
    path_ = path;
  }

  std::ostream& stream() { return *stream_; }
  bool to_file() const { return !path_.empty(); }
  const std::string& path() const { return path_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
  std::string path_;
};

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in " + text);
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(BigInt(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const std::size_t decimals = text.size() - dot - 1;
  bool negative = false;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    negative = digits[0] == '-';
    digits.erase(0, 1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("not a number: " + text);
  }
  BigInt den = 1;
  for (std::size_t k = 0; k < decimals; ++k) den *= 10;
  Rational r(BigInt(digits), den);
  return negative ? Rational(-r) : r;
}

std::string rational_text(const Rational& r) {
  std::ostringstream s;
  s << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) s << '/' << boost::multiprecision::denominator(r);
  return s.str();
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

int default_burnin(int L, double p) { return default_burnin_sweeps(L, beta_of_p(p)); }

// ---- sample-even ----------------------------------------------------------

struct SampleEvenArgs {
  double p = 0.3;
  int L = 8;
  int sweeps = 0;
  int samples = 1;
  int thinning = 1;
  std::uint64_t seed = 1;
  std::string format = "hex";
  std::string out;
};

int run_sample_even(const SampleEvenArgs& a, std::ostream& out) {
  const BoxGeometry g = BoxGeometry::build(a.L);
  const int burnin = a.sweeps > 0 ? a.sweeps : default_burnin(a.L, a.p);
  const auto samples = sample_mu_p(g, a.p, burnin, a.samples, a.thinning, a.seed);

  Json params{{"p", a.p}, {"L", a.L}, {"sweeps", burnin}, {"samples", a.samples}, {"thinning", a.thinning},
              {"format", a.format}};
  Json header{{"manifest", manifest("sample-even", params, a.seed)},
              {"geometry",
               {{"L", a.L},
                {"sites", g.num_sites()},
                {"edges", g.num_edges()},
                {"edge_order", "sites row by row from y=-L (x increasing), right edge then up edge"}}},
              {"boundary", "all-plus dual ring"},
              {"encoding", a.format == "hex" ? "hex digit k holds edges 4k..4k+3, lowest edge in the lowest bit"
                                             : "ASCII picture per sample, top row first, blank line between samples"}};
  Output target(a.out, "sample-even.txt", out);
  auto& s = target.stream();
  s << header.dump() << '\n';
  bool all_even = true;
  for (const auto& cfg : samples) {
    all_even = all_even && is_even(g, cfg);
    if (a.format == "hex") {
      s << cfg.to_hex() << '\n';
    } else {
      s << edges_to_ascii(g, cfg) << '\n';
    }
  }
  if (!all_even) throw VerificationFailure("a sample is not even");
  return kExitOk;
}

// ---- sweep ----------------------------------------------------------------

struct SweepArgs {
  double p_min = 0.2;
  double p_max = 0.4;
  double p_step = 0.02;
  std::vector<int> L;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  int burnin = 0;
  int thinning = 1;
  unsigned threads = 1;
  std::string out;
};

int run_sweep(const SweepArgs& a, std::ostream& out) {
  if (!(a.p_step > 0.0) || a.p_max < a.p_min) throw std::invalid_argument("need p-step > 0 and p-max >= p-min");
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    const double p = std::round((a.p_min + k * a.p_step) * 1e12) / 1e12;
    if (p > a.p_max + 1e-12) break;
    grid.push_back(p);
  }
  ScanOptions opt;
  opt.burnin_sweeps = a.burnin;
  opt.thinning = a.thinning;
  opt.threads = a.threads;
  const auto points = threshold_scan(grid, a.L, a.samples, a.seed, opt);

  Json params{{"p_min", a.p_min}, {"p_max", a.p_max}, {"p_step", a.p_step}, {"L", a.L},
              {"samples", a.samples}, {"burnin", a.burnin}, {"thinning", a.thinning}};
  Output target(a.out, "sweep.csv", out);
  auto& s = target.stream();
  s << "# " << manifest("sweep", params, a.seed).dump() << '\n';
  s << "p,L,samples,crossing_freq,ci_low,ci_high,largest_frac_mean\n";
  for (const auto& pt : points) {
    s << format_double(pt.p) << ',' << pt.half_width << ',' << pt.samples << ',' << format_double(pt.crossing_freq)
      << ',' << format_double(pt.ci_low) << ',' << format_double(pt.ci_high) << ','
      << format_double(pt.largest_frac_mean) << '\n';
  }

  if (target.to_file()) {
    std::vector<int> ls(a.L.begin(), a.L.end());
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    const std::size_t n = points.size() / std::max<std::size_t>(ls.size(), 1);
    Json half = Json::object();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      const std::span<const ScanPoint> curve(points.data() + i * n, n);
      half[std::to_string(ls[i])] = optional_number(half_crossing_point(curve));
    }
    Json crossings = Json::array();
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
      const std::span<const ScanPoint> c1(points.data() + i * n, n);
      const std::span<const ScanPoint> c2(points.data() + (i + 1) * n, n);
      crossings.push_back({{"L_small", ls[i]}, {"L_large", ls[i + 1]}, {"p", optional_number(pseudo_intersection(c1, c2))}});
    }
    out << Json{{"csv", target.path()}, {"half_crossing", half}, {"pseudo_intersections", crossings}}.dump(2) << '\n';
  }
  return kExitOk;
}

// ---- verify-coupling ------------------------------------------------------

struct CouplingArgs {
  double p = 0.3;
  int L = 2;
  int samples = 1000;
  std::uint64_t seed = 1;
  int burnin = 0;
  int thinning = 1;
  std::string out;
};

int run_verify_coupling(const CouplingArgs& a, std::ostream& out) {
  const BoxGeometry g = BoxGeometry::build(a.L);
  const int burnin = a.burnin > 0 ? a.burnin : default_burnin(a.L, a.p);
  const Rational p_exact = parse_rational(format_double(a.p));
  const bool marginals = table_marginals_exact(p_exact);
  const bool square_p2 = square_connectivity_dominates(a.p);
  const auto r = verify_coupling(g, a.p, burnin, a.samples, a.thinning, a.seed);

  Json params{{"p", a.p}, {"L", a.L}, {"samples", a.samples}, {"burnin", burnin}, {"thinning", a.thinning}};
  Json report{{"manifest", manifest("verify-coupling", params, a.seed)},
              {"p1_tv_omega", optional_number(r.p1_tv_omega)},
              {"p1_tv_tilde", optional_number(r.p1_tv_tilde)},
              {"p2_violations", r.p2_violations},
              {"p3_violations", r.p3_violations},
              {"incomparable_fraction", r.incomparable_fraction},
              {"samples", r.samples},
              {"table_marginals_exact", marginals},
              {"square_p2_exhaustive", square_p2}};
  Output target(a.out, "verify-coupling.json", out);
  target.stream() << report.dump(2) << '\n';
  const bool ok = marginals && square_p2 && r.p2_violations == 0 && r.p3_violations == 0;
  return ok ? kExitOk : kExitVerificationFailed;
}

// ---- fk-compare -----------------------------------------------------------

struct FkArgs {
  double p = 0.3;
  int L = 16;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  int burnin = 0;
  int thinning = 2;
  std::string out;
};

int run_fk_compare(const FkArgs& a, std::ostream& out) {
  const BoxGeometry g = BoxGeometry::build(a.L);
  const int burnin = a.burnin > 0 ? a.burnin : default_burnin(a.L, a.p);
  const auto r = compare_mu_to_fk(g, a.p, a.samples, burnin, a.thinning, a.seed);
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"event", e.event},
                       {"mu", e.mu},
                       {"mu_se", e.mu_se},
                       {"phi", e.phi},
                       {"phi_se", e.phi_se},
                       {"ordering_violated", e.violation}});
  }
  Json exact = nullptr;
  bool exact_ok = true;
  if (a.p < 0.5) {
    const Rational gap = exact_ordering_gap(BoxGeometry::build(1), parse_rational(format_double(a.p)));
    exact_ok = gap <= 0;
    exact = {{"box_L", 1}, {"max_gap", to_double(gap)}, {"ordered", exact_ok}};
  }
  Json params{{"p", a.p}, {"L", a.L}, {"samples", a.samples}, {"burnin", burnin}, {"thinning", a.thinning}};
  Json report{{"manifest", manifest("fk-compare", params, a.seed)},
              {"fk_p", std::min(1.0, 2.0 * a.p)},
              {"fk_q", 2},
              {"fk_boundary", "free"},
              {"events", entries},
              {"exact_small_box", exact}};
  Output target(a.out, "fk-compare.json", out);
  target.stream() << report.dump(2) << '\n';
  return (!r.any_violation() && exact_ok) ? kExitOk : kExitVerificationFailed;
}

// ---- exact-finite ---------------------------------------------------------

struct ExactArgs {
  std::string graph = "fig5";
  std::string event = "true";
  std::string p;
  std::string out;
};

int run_exact_finite(const ExactArgs& a, std::ostream& out) {
  FiniteGraph g;
  if (a.graph == "fig5") {
    g = build_figure_graph();
  } else {
    std::ifstream in(a.graph);
    if (!in) throw std::invalid_argument("cannot read graph file " + a.graph);
    g = FiniteGraph::parse(in);
  }
  const EventSpec ev = parse_event(g, a.event);
  const IntPolynomial num = event_poly(g, ev);
  const IntPolynomial z = partition_poly(g);
  const auto degrees = g.degrees();
  const bool eulerian = std::all_of(degrees.begin(), degrees.end(), [](int d) { return d % 2 == 0; });

  Json params{{"graph", a.graph}, {"event", a.event}, {"p", a.p.empty() ? Json(nullptr) : Json(a.p)}};
  Json report{{"manifest", manifest("exact-finite", params, 0)},
              {"graph",
               {{"vertices", g.num_vertices()},
                {"edges", g.num_edges()},
                {"cycle_rank", even_subgraph_basis(g).size()},
                {"all_degrees_even", eulerian}}},
              {"event", ev.name},
              {"event_poly", num.to_string()},
              {"partition_poly", z.to_string()},
              {"variable", "q = p/(1-p)"}};
  if (!a.p.empty()) {
    const Rational p = parse_rational(a.p);
    if (!(p > 0 && p < 1)) throw std::invalid_argument("p must lie strictly between 0 and 1");
    const Rational q = p / (1 - p);
    const Rational prob = num.evaluate(q) / z.evaluate(q);
    report["probability"] = to_double(prob);
    report["probability_exact"] = rational_text(prob);
  }
  Output target(a.out, "exact-finite.json", out);
  target.stream() << report.dump(2) << '\n';
  return kExitOk;
}

// ---- monotone-verify ------------------------------------------------------

struct MonotoneArgs {
  int n = 4;
  std::string out;
};

int run_monotone_verify(const MonotoneArgs& a, std::ostream& out) {
  if (a.n < 1 || a.n > kMaxMonotoneArity) throw std::invalid_argument("--n must be between 1 and 4");
  Json counts = Json::array();
  for (int n = 1; n <= a.n; ++n) counts.push_back(enumerate_monotone(n).size());
  Json report{{"manifest", manifest("monotone-verify", Json{{"n", a.n}}, 0)}, {"counts_per_arity", counts}};
  bool ok = true;
  if (a.n == 4) {
    const auto r = certify_monotonicity();
    Json distinct = Json::array();
    for (const auto& p : r.distinct_rf) distinct.push_back(p.to_string());
    Json negative = Json::array();
    for (const auto& [p, num] : r.negative_coefficient_rf) negative.push_back({{"rf", p.to_string()}, {"function", num}});
    Json violations = Json::array();
    for (const auto& v : r.violations) {
      violations.push_back({{"function", v.number}, {"rf", v.rf.to_string()}, {"positive_roots", v.positive_roots}});
    }
    report["functions"] = r.functions_checked;
    report["distinct_RF"] = distinct;
    report["distinct_RF_count"] = r.distinct_rf.size();
    report["negative_coefficient_RF"] = negative;
    report["positive_root_violations"] = violations;
    report["matches_reference_set"] = r.matches_reference;
    ok = r.certified() && r.matches_reference;
  }
  Output target(a.out, "monotone-verify.json", out);
  target.stream() << report.dump(2) << '\n';
  return ok ? kExitOk : kExitVerificationFailed;
}

// ---- verify-lemma-image ---------------------------------------------------

struct LemmaArgs {
  double p = 0.3;
  int L = 2;
  std::vector<int> rect{-1, -1, 3, 3};
  std::string boundary = "plus";
  std::uint64_t seed = 1;
  std::string out;
};

int run_verify_lemma_image(const LemmaArgs& a, std::ostream& out) {
  if (a.rect.size() != 4) throw std::invalid_argument("--rect takes i0,j0,width,height");
  const BoxGeometry g = BoxGeometry::build(a.L);
  std::vector<int> interior;
  for (int j = a.rect[1]; j < a.rect[1] + a.rect[3]; ++j) {
    for (int i = a.rect[0]; i < a.rect[0] + a.rect[2]; ++i) {
      if (!g.contains_dual({i, j})) throw std::invalid_argument("rectangle leaves the dual box");
      interior.push_back(g.dual_index({i, j}));
    }
  }
  // The pattern colours the faces; the ring stays monochromatic so that the
  // boundary contours are even on the box.
  SpinConfig coloring(static_cast<std::size_t>(g.num_dual_sites()), 1);
  if (a.boundary == "minus") {
    coloring = coloring.negated();
  } else if (a.boundary == "checkerboard") {
    coloring = checkerboard_transform(g, coloring);
  } else if (a.boundary == "random") {
    Rng rng(seed_stream(a.seed, 0));
    for (std::size_t k = 0; k < coloring.size(); ++k) coloring[k] = rng.coin() ? 1 : -1;
  } else if (a.boundary != "plus") {
    throw std::invalid_argument("--boundary must be plus, minus, checkerboard or random");
  }
  for (int k = 0; k < g.num_dual_sites(); ++k)
    if (g.is_ring(g.dual_site_at(k))) coloring[static_cast<std::size_t>(k)] = a.boundary == "minus" ? -1 : 1;
  const auto r = verify_lemma_image(g, interior, coloring, a.p);
  constexpr double kTolerance = 1e-10;
  Json params{{"p", a.p}, {"L", a.L}, {"rect", a.rect}, {"boundary", a.boundary}};
  Json report{{"manifest", manifest("verify-lemma-image", params, a.seed)},
              {"interior_sites", r.interior_sites},
              {"window_edges", r.window_edges},
              {"ising_states", r.ising_states},
              {"even_completions", r.even_completions},
              {"image_patterns", r.image_patterns},
              {"max_discrepancy", r.max_discrepancy},
              {"tolerance", kTolerance},
              {"passed", r.max_discrepancy < kTolerance}};
  Output target(a.out, "verify-lemma-image.json", out);
  target.stream() << report.dump(2) << '\n';
  return r.max_discrepancy < kTolerance ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eulerian bond percolation toolkit", "eulerperc"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for sweeps (0 = all cores)")->capture_default_str();

  std::function<int()> run;

  SampleEvenArgs se;
  auto* c_se = app.add_subcommand("sample-even", "Sample even configurations through Ising contours");
  c_se->add_option("--p", se.p, "Opening parameter")->required()->check(CLI::Range(0.0, 1.0));
  c_se->add_option("--L", se.L, "Box half-width")->required()->check(CLI::PositiveNumber);
  c_se->add_option("--sweeps", se.sweeps, "Burn-in sweeps (0 = default)")->capture_default_str();
  c_se->add_option("--samples", se.samples, "Number of samples")->capture_default_str()->check(CLI::NonNegativeNumber);
  c_se->add_option("--thinning", se.thinning, "Sweeps between samples")->capture_default_str()->check(CLI::PositiveNumber);
  c_se->add_option("--seed", se.seed, "Master seed")->capture_default_str();
  c_se->add_option("--format", se.format, "hex or ascii")->capture_default_str()->check(CLI::IsMember({"hex", "ascii"}));
  c_se->add_option("--out", se.out, "Output file ('-' for stdout)");
  c_se->callback([&]() { run = [&]() { return run_sample_even(se, out); }; });

  SweepArgs sw;
  auto* c_sw = app.add_subcommand("sweep", "Crossing-probability scan over p and L");
  c_sw->add_option("--p-min", sw.p_min)->required();
  c_sw->add_option("--p-max", sw.p_max)->required();
  c_sw->add_option("--p-step", sw.p_step)->required();
  c_sw->add_option("--L", sw.L, "Box half-widths")->required()->delimiter(',')->check(CLI::PositiveNumber);
  c_sw->add_option("--samples", sw.samples)->capture_default_str();
  c_sw->add_option("--seed", sw.seed)->capture_default_str();
  c_sw->add_option("--burnin", sw.burnin, "Burn-in sweeps (0 = default)")->capture_default_str();
  c_sw->add_option("--thinning", sw.thinning)->capture_default_str()->check(CLI::PositiveNumber);
  c_sw->add_option("--out", sw.out, "CSV file ('-' for stdout)");
  c_sw->callback([&]() {
    sw.threads = threads;
    run = [&]() { return run_sweep(sw, out); };
  });

  CouplingArgs cp;
  auto* c_cp = app.add_subcommand("verify-coupling", "Check the square-by-square coupling on sampled pairs");
  c_cp->add_option("--p", cp.p)->required();
  c_cp->add_option("--L", cp.L)->required()->check(CLI::PositiveNumber);
  c_cp->add_option("--samples", cp.samples)->capture_default_str()->check(CLI::NonNegativeNumber);
  c_cp->add_option("--seed", cp.seed)->capture_default_str();
  c_cp->add_option("--burnin", cp.burnin, "Burn-in sweeps (0 = default)")->capture_default_str();
  c_cp->add_option("--thinning", cp.thinning)->capture_default_str()->check(CLI::PositiveNumber);
  c_cp->add_option("--out", cp.out);
  c_cp->callback([&]() { run = [&]() { return run_verify_coupling(cp, out); }; });

  FkArgs fk;
  auto* c_fk = app.add_subcommand("fk-compare", "Compare even percolation with the FK measure at 2p");
  c_fk->add_option("--p", fk.p)->required();
  c_fk->add_option("--L", fk.L)->required()->check(CLI::PositiveNumber);
  c_fk->add_option("--samples", fk.samples)->capture_default_str();
  c_fk->add_option("--seed", fk.seed)->capture_default_str();
  c_fk->add_option("--burnin", fk.burnin, "Burn-in sweeps (0 = default)")->capture_default_str();
  c_fk->add_option("--thinning", fk.thinning)->capture_default_str()->check(CLI::PositiveNumber);
  c_fk->add_option("--out", fk.out);
  c_fk->callback([&]() { run = [&]() { return run_fk_compare(fk, out); }; });

  ExactArgs ex;
  auto* c_ex = app.add_subcommand("exact-finite", "Exact event and partition polynomials on a finite graph");
  c_ex->add_option("--graph", ex.graph, "fig5 or an edge-list file")->capture_default_str();
  c_ex->add_option("--event", ex.event, "e.g. C1, C1&C2, open:u-v, closed:u-v")->capture_default_str();
  c_ex->add_option("--p", ex.p, "Evaluate at p (decimal or a/b)");
  c_ex->add_option("--out", ex.out);
  c_ex->callback([&]() { run = [&]() { return run_exact_finite(ex, out); }; });

  MonotoneArgs mo;
  auto* c_mo = app.add_subcommand("monotone-verify", "Certify monotonicity over all monotone functions of 4 inputs");
  c_mo->add_option("--n", mo.n)->capture_default_str();
  c_mo->add_option("--out", mo.out);
  c_mo->callback([&]() { run = [&]() { return run_monotone_verify(mo, out); }; });

  LemmaArgs le;
  auto* c_le = app.add_subcommand("verify-lemma-image", "Exact push-forward check of Ising to even percolation");
  c_le->add_option("--p", le.p)->required();
  c_le->add_option("--L", le.L)->capture_default_str()->check(CLI::PositiveNumber);
  c_le->add_option("--rect", le.rect, "Dual rectangle i0,j0,width,height")->delimiter(',')->expected(4);
  c_le->add_option("--boundary", le.boundary, "Face pattern outside the rectangle: plus, minus, checkerboard or random (ring monochromatic)")->capture_default_str();
  c_le->add_option("--seed", le.seed)->capture_default_str();
  c_le->add_option("--out", le.out);
  c_le->callback([&]() { run = [&]() { return run_verify_lemma_image(le, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    return run ? run() : kExitUsage;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace eulerperc::cli
