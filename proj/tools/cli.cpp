#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

#include "expression.hpp"
#include "table.hpp"
#include "trigsum/asymptotics.hpp"
#include "trigsum/bounds.hpp"
#include "trigsum/errors.hpp"
#include "trigsum/identities.hpp"
#include "trigsum/representations.hpp"
#include "trigsum/sums.hpp"

namespace trigsum::cli {
namespace {

/// Malformed option values; exit 64 like unknown flags.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrecisionFlags {
  std::string precision = "native";
  bool wide = false;
  bool native = false;

  Precision get() const {
    if (wide) return Precision::Wide;
    if (native) return Precision::Native;
    return precision == "wide" ? Precision::Wide : Precision::Native;
  }
};

void add_precision(CLI::App* sub, PrecisionFlags& p) {
  auto* opt = sub->add_option("--precision", p.precision, "native or wide")->check(CLI::IsMember({"native", "wide"}));
  auto* w = sub->add_flag("--wide", p.wide, "same as --precision wide");
  auto* n = sub->add_flag("--native", p.native, "same as --precision native");
  w->excludes(opt)->excludes(n);
  n->excludes(opt);
  opt->excludes(w)->excludes(n);
}

struct Output {
  std::string path;
  bool json = false;
};

void add_output(CLI::App* sub, Output& o) {
  sub->add_option("--out", o.path, "output file; '-' or absent for standard output");
  sub->add_flag("--json", o.json, "JSON instead of CSV");
}

/// Opens the destination at construction.
class Sink {
 public:
  Sink(const Output& o, std::ostream& fallback) : fallback_(fallback) {
    if (!o.path.empty() && o.path != "-") {
      file_ = std::make_unique<std::ofstream>(o.path, std::ios::out | std::ios::trunc);
      if (!file_->is_open()) throw WriteError("cannot open '" + o.path + "' for writing");
      path_ = o.path;
    }
  }

  void emit(const Table& t, bool json, bool single = false) {
    std::ostream& os = file_ ? *file_ : fallback_;
    if (json) {
      write_json(t, os, single);
    } else {
      write_csv(t, os);
    }
    os.flush();
    if (!os) throw WriteError("write failed for '" + (path_.empty() ? std::string("stdout") : path_) + "'");
  }

 private:
  std::ostream& fallback_;
  std::unique_ptr<std::ofstream> file_;
  std::string path_;
};

DoubleWide parse_value(const std::string& flag, const std::string& text) {
  try {
    return parse_expression(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::int64_t parse_count(const std::string& flag, const std::string& text) {
  const double v = parse_value(flag, text).to_double();
  if (!std::isfinite(v) || v != std::floor(v) || std::fabs(v) > 9.0e15) {
    throw UsageError(flag + ": expected an integer, got \"" + text + "\"");
  }
  return static_cast<std::int64_t>(v);
}

Family parse_family(const std::string& s) {
  if (s == "csc") return Family::Csc;
  if (s == "sec") return Family::Sec;
  if (s == "tg") return Family::Tg;
  return Family::Ctg;
}

const std::vector<std::string> kFamilies{"csc", "sec", "tg", "ctg"};

struct Sweep {
  std::string n;
  std::string nmin;
  std::string nmax;
  std::string step = "1";

  std::vector<std::int64_t> values() const {
    if (!n.empty()) {
      if (!nmin.empty() || !nmax.empty()) throw UsageError("--n excludes --nmin/--nmax");
      return {parse_count("--n", n)};
    }
    if (nmin.empty() || nmax.empty()) throw UsageError("give --n or both --nmin and --nmax");
    const std::int64_t lo = parse_count("--nmin", nmin);
    const std::int64_t hi = parse_count("--nmax", nmax);
    const std::int64_t st = parse_count("--step", step);
    if (st < 1) throw UsageError("--step must be positive");
    if (hi < lo) throw UsageError("--nmax must not be below --nmin");
    std::vector<std::int64_t> out;
    for (std::int64_t k = lo; k <= hi; k += st) out.push_back(k);
    return out;
  }
};

void add_sweep(CLI::App* sub, Sweep& s) {
  sub->add_option("--n", s.n, "single n");
  sub->add_option("--nmin", s.nmin, "first n of a sweep");
  sub->add_option("--nmax", s.nmax, "last n of a sweep");
  sub->add_option("--step", s.step, "sweep step");
}

DoubleWide wide_direct(Family f, std::int64_t n, double phi, double a) {
  SumSpec s;
  s.family = f;
  s.n = n;
  s.phi = phi;
  s.a = a;
  return eval_direct(s, Precision::Wide).value;
}

// ---------------------------------------------------------------- eval

struct EvalOptions {
  std::string family = "csc";
  std::string n;
  std::string phi = "0";
  std::string a = "1";
  std::string method = "direct";
  bool pv = false;
  PrecisionFlags precision;
  Output output;
};

EvalResult evaluate(const SumSpec& spec, const std::string& method, Precision precision) {
  auto needs_unit_step = [&](const char* form) {
    if (spec.family != Family::Csc || spec.a != 1.0) {
      throw DomainError(std::string(form) + " form needs family = csc and a = 1");
    }
  };
  if (method == "direct") return eval_direct(spec, precision);
  if (method == "cotangent") {
    needs_unit_step("cotangent");
    spec.validate();
    return eval_cotangent_form(spec.n, spec.phi, precision);
  }
  if (method == "mixed") {
    needs_unit_step("mixed");
    spec.validate();
    return eval_mixed_form(spec.n, spec.phi, precision);
  }
  if (method == "digamma-finite") return eval_digamma_finite(spec, precision);
  if (method == "digamma-infinite") return eval_digamma_infinite(spec, {}, precision);
  if (method == "integral") return eval_integral_form(spec, {}, precision);
  if (method.rfind("asympt:", 0) == 0) {
    const std::int64_t order = parse_count("--method", method.substr(7));
    if (order < 1 || order > 30) throw UsageError("--method asympt:N needs 1 <= N <= 30");
    EvalResult r = asympt_auto(spec, static_cast<int>(order)).to_eval_result();
    if (precision == Precision::Native) r.value = DoubleWide(r.value.to_double());
    r.precision = precision;
    return r;
  }
  throw UsageError("--method: unknown method \"" + method + "\"");
}

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  SumSpec spec;
  spec.family = parse_family(o.family);
  spec.n = parse_count("--n", o.n);
  spec.phi = parse_value("--phi", o.phi).to_double();
  spec.a = parse_value("--a", o.a).to_double();
  spec.principal_value = o.pv;
  const Precision precision = o.precision.get();
  Sink sink(o.output, out);
  const EvalResult r = evaluate(spec, o.method, precision);
  Table t;
  t.columns = {"family", "n", "phi", "a", "method", "precision", "value", "err_estimate", "skipped"};
  t.add({o.family, spec.n, spec.phi, spec.a, o.method, precision == Precision::Wide ? "wide" : "native",
         real_cell(r.value, precision), r.err_estimate, static_cast<std::int64_t>(r.skipped_terms.size())});
  sink.emit(t, o.output.json, true);
  return kExitOk;
}

// ---------------------------------------------------------------- asympt

struct AsymptOptions {
  std::string family = "csc";
  std::string phi = "0";
  std::string a = "1";
  std::string order = "3";
  Sweep sweep;
  PrecisionFlags precision;
  Output output;
};

int cmd_asympt(const AsymptOptions& o, std::ostream& out) {
  SumSpec spec;
  spec.family = parse_family(o.family);
  spec.phi = parse_value("--phi", o.phi).to_double();
  spec.a = parse_value("--a", o.a).to_double();
  const std::int64_t order = parse_count("--N", o.order);
  if (order < 1 || order > 30) throw UsageError("--N needs 1 <= N <= 30");
  const std::vector<std::int64_t> ns = o.sweep.values();
  const Precision precision = o.precision.get();
  Sink sink(o.output, out);
  Table t;
  t.columns = {"n", "regime", "N", "value", "err_estimate", "direct", "abs_error", "unreliable"};
  for (const std::int64_t n : ns) {
    spec.n = n;
    const AsymptoticSeries s = asympt_auto(spec, static_cast<int>(order));
    const DoubleWide v = s.value();
    const DoubleWide d = eval_direct(spec, Precision::Wide).value;
    t.add({n, regime_name(s.regime), order, real_cell(v, precision), s.err_estimate(), real_cell(d, precision),
           std::fabs((v - d).to_double()), s.unreliable || s.below_n0});
  }
  sink.emit(t, o.output.json);
  return kExitOk;
}

// ---------------------------------------------------------------- bounds

struct BoundsOptions {
  std::string kind = "harmonic-envelope";
  std::string phi = "0";
  std::string a = "1";
  Sweep sweep;
  PrecisionFlags precision;
  Output output;
};

const std::vector<std::string> kBoundKinds{"harmonic-envelope", "log-envelope",  "cosecant-strip",
                                           "cosecant-unit-step", "secant-strip", "secant-unit-step",
                                           "historical"};

int cmd_bounds(const BoundsOptions& o, std::ostream& out) {
  const double phi = parse_value("--phi", o.phi).to_double();
  const double a = parse_value("--a", o.a).to_double();
  const std::vector<std::int64_t> ns = o.sweep.values();
  const Precision precision = o.precision.get();
  Sink sink(o.output, out);
  Table t;
  t.columns = {"n", "flavor", "lower", "upper", "value", "lower_gap", "upper_gap", "inside", "valid"};
  for (const std::int64_t n : ns) {
    std::vector<BoundPair> pairs;
    DoubleWide value;
    if (o.kind == "harmonic-envelope" || o.kind == "log-envelope" || o.kind == "historical") {
      if (o.kind == "historical") {
        pairs = historical_bounds(n);
      } else {
        pairs.push_back(bounds_Sn(n, o.kind == "harmonic-envelope" ? BoundFlavor::HarmonicEnvelope
                                                                   : BoundFlavor::LogEnvelope));
      }
      value = wide_direct(Family::Csc, n, 0.0, 1.0);
    } else if (o.kind == "cosecant-strip") {
      pairs.push_back(bounds_Sn_phi_a(n, phi, a));
      value = wide_direct(Family::Csc, n, phi, a);
    } else if (o.kind == "cosecant-unit-step") {
      pairs.push_back(bounds_Sn_phi1(n, phi));
      value = wide_direct(Family::Csc, n, phi, 1.0);
    } else if (o.kind == "secant-strip") {
      pairs.push_back(bounds_Cn(n, phi, a));
      value = wide_direct(Family::Sec, n, phi, a);
    } else {
      pairs.push_back(bounds_Cn_phi1(n, phi));
      value = wide_direct(Family::Sec, n, phi, 1.0);
    }
    for (const BoundPair& p : pairs) {
      const Cell lower_gap = p.has_lower() ? Cell((value - p.lower).to_double()) : Cell();
      const Cell upper_gap = p.has_upper() ? Cell((p.upper - value).to_double()) : Cell();
      t.add({n, bound_flavor_name(p.flavor), real_cell(p.lower, precision), real_cell(p.upper, precision),
             real_cell(value, precision), lower_gap, upper_gap, p.contains(value, -10.0 * p.rounding), p.valid});
    }
  }
  sink.emit(t, o.output.json);
  return kExitOk;
}

// ---------------------------------------------------------------- identity-check

struct IdentityOptions {
  std::string id = "all";
  std::string draws = "50";
  std::string seed = "20240611";
  std::vector<std::string> params;
  std::string tol;
  Output output;
};

int cmd_identity(const IdentityOptions& o, std::ostream& out) {
  std::vector<IdentityId> ids;
  if (o.id == "all") {
    ids = all_identities();
  } else {
    try {
      ids.push_back(identity_from_name(o.id));
    } catch (const DomainError&) {
      throw UsageError("--id: unknown identity \"" + o.id + "\"");
    }
  }
  Table t;
  bool all_pass = true;
  if (!o.params.empty()) {
    if (ids.size() != 1) throw UsageError("--param needs a single --id");
    IdentityCase c;
    c.id = ids.front();
    for (const std::string& kv : o.params) {
      const std::size_t eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got \"" + kv + "\"");
      c.params[kv.substr(0, eq)] = parse_value("--param", kv.substr(eq + 1)).to_double();
    }
    if (!o.tol.empty()) c.residual_tol = parse_value("--tol", o.tol).to_double();
    Sink sink(o.output, out);
    const double r = run_identity(c);
    all_pass = r <= c.residual_tol;
    t.columns = {"id", "residual", "tol", "pass"};
    t.add({identity_name(c.id), r, c.residual_tol, all_pass});
    sink.emit(t, o.output.json, true);
    return all_pass ? kExitOk : kExitCheckFailed;
  }
  const std::int64_t draws = parse_count("--draws", o.draws);
  if (draws < 1) throw UsageError("--draws must be positive");
  std::mt19937_64 rng(static_cast<std::uint64_t>(parse_count("--seed", o.seed)));
  Sink sink(o.output, out);
  t.columns = {"id", "draws", "max_residual", "max_tol", "failures"};
  for (const IdentityId id : ids) {
    double worst = 0.0, worst_tol = 0.0;
    std::int64_t failures = 0;
    for (std::int64_t k = 0; k < draws; ++k) {
      const IdentityCase c = random_case(id, rng);
      const double r = run_identity(c);
      worst = std::max(worst, r);
      worst_tol = std::max(worst_tol, c.residual_tol);
      if (!(r <= c.residual_tol)) ++failures;
    }
    all_pass = all_pass && failures == 0;
    t.add({identity_name(id), draws, worst, worst_tol, failures});
  }
  sink.emit(t, o.output.json);
  return all_pass ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- figure

struct FigureOptions {
  std::string which;
  std::string nmin = "2";
  std::string nmax = "200";
  PrecisionFlags precision;
  Output output;
};

Table figure_values(std::int64_t lo, std::int64_t hi, Precision precision) {
  struct Panel {
    const char* column;
    DoubleWide phi, a;
  };
  const Panel panels[] = {{"S_2ln2_1", dw::ln2 * 2.0, DoubleWide(1.0)},
                          {"S_0_1", DoubleWide(0.0), DoubleWide(1.0)},
                          {"S_0_2ln2", DoubleWide(0.0), dw::ln2 * 2.0},
                          {"S_0_ln2", DoubleWide(0.0), dw::ln2}};
  Table t;
  t.columns = {"n"};
  for (const Panel& p : panels) t.columns.push_back(p.column);
  for (std::int64_t n = lo; n <= hi; ++n) {
    std::vector<Cell> row{n};
    for (const Panel& p : panels) {
      SumSpec s;
      s.n = n;
      s.phi = p.phi.to_double();
      s.a = p.a.to_double();
      row.push_back(real_cell(eval_direct(s, precision).value, precision));
    }
    t.add(std::move(row));
  }
  return t;
}

Table figure_errors(std::int64_t lo, std::int64_t hi) {
  Table t;
  t.columns = {"n", "harmonic_N3", "log_N3", "harmonic_N4", "log_N4"};
  for (std::int64_t n = lo; n <= hi; ++n) {
    const DoubleWide d = wide_direct(Family::Csc, n, 0.0, 1.0);
    std::vector<Cell> row{n};
    for (const int order : {3, 4}) {
      for (const SnFlavor f : {SnFlavor::Harmonic, SnFlavor::Log}) {
        row.push_back(std::fabs((asympt_Sn(n, order, f).value() - d).to_double()));
      }
    }
    t.add(std::move(row));
  }
  return t;
}

Table figure_bound_gaps(std::int64_t lo, std::int64_t hi, Precision precision) {
  Table t;
  t.columns = {"n", "harmonic_envelope", "log_envelope", "quadratic_correction", "inverse_linear"};
  for (std::int64_t n = lo; n <= hi; ++n) {
    const DoubleWide d = wide_direct(Family::Csc, n, 0.0, 1.0);
    const std::vector<BoundPair> hist = historical_bounds(n);
    const BoundPair* quadratic = nullptr;
    const BoundPair* inverse = nullptr;
    for (const BoundPair& p : hist) {
      if (p.flavor == BoundFlavor::QuadraticCorrection) quadratic = &p;
      if (p.flavor == BoundFlavor::InverseLinear) inverse = &p;
    }
    t.add({n, real_cell(bounds_Sn(n, BoundFlavor::HarmonicEnvelope).upper - d, precision),
           real_cell(bounds_Sn(n, BoundFlavor::LogEnvelope).upper - d, precision),
           real_cell(quadratic->upper - d, precision), real_cell(inverse->upper - d, precision)});
  }
  return t;
}

int cmd_figure(const FigureOptions& o, std::ostream& out) {
  const std::int64_t lo = parse_count("--nmin", o.nmin);
  const std::int64_t hi = parse_count("--nmax", o.nmax);
  if (lo < 2) throw UsageError("--nmin must be at least 2");
  if (hi < lo) throw UsageError("--nmax must not be below --nmin");
  const Precision precision = o.precision.get();
  Sink sink(o.output, out);
  Table t;
  if (o.which == "2") {
    t = figure_values(lo, hi, precision);
  } else if (o.which == "3") {
    t = figure_errors(lo, hi);
  } else {
    t = figure_bound_gaps(lo, hi, precision);
  }
  sink.emit(t, o.output.json);
  return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchOptions {
  std::string nmin = "100";
  std::string nmax = "1e7";
  std::string reps = "5";
  std::string accuracy_nmax;
  Output output;
};

template <class F>
double seconds_per_call(F&& f) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  std::int64_t calls = 0;
  std::chrono::duration<double> elapsed{};
  do {
    f();
    ++calls;
    elapsed = clock::now() - start;
  } while (elapsed.count() < 2e-3);
  return elapsed.count() / static_cast<double>(calls);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  const std::int64_t lo = parse_count("--nmin", o.nmin);
  const std::int64_t hi = parse_count("--nmax", o.nmax);
  const std::int64_t reps = parse_count("--reps", o.reps);
  const std::int64_t acc_hi = o.accuracy_nmax.empty() ? hi : parse_count("--accuracy-nmax", o.accuracy_nmax);
  if (lo < 2) throw UsageError("--nmin must be at least 2");
  if (hi < lo) throw UsageError("--nmax must not be below --nmin");
  if (reps < 1) throw UsageError("--reps must be positive");
  Sink sink(o.output, out);
  Table t;
  t.columns = {"n", "direct_seconds", "asympt_seconds", "speedup", "asympt_rel_error"};
  volatile double sink_value = 0.0;
  for (std::int64_t n = lo; n <= hi; n *= 10) {
    SumSpec spec;
    spec.n = n;
    std::vector<double> direct_t, asympt_t;
    for (std::int64_t r = 0; r < reps; ++r) {
      direct_t.push_back(seconds_per_call([&] { sink_value = eval_direct(spec).value.hi(); }));
      asympt_t.push_back(seconds_per_call([&] { sink_value = asympt_auto(spec, 3).value().hi(); }));
    }
    const double td = median(direct_t), ta = median(asympt_t);
    Cell accuracy;
    if (n <= acc_hi) {
      const DoubleWide d = eval_direct(spec, Precision::Wide).value;
      accuracy = std::fabs(((asympt_auto(spec, 3).value() - d) / d).to_double());
    }
    t.add({n, td, ta, td / ta, accuracy});
    if (n > hi / 10) break;
  }
  sink.emit(t, o.output.json);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite cosecant and secant sums: evaluation, expansions, bounds, identities"};
  app.name("trigsum");
  app.require_subcommand(1);

  EvalOptions eval;
  auto* e = app.add_subcommand("eval", "evaluate one sum by a chosen method");
  e->add_option("--family", eval.family, "csc, sec, tg or ctg")->check(CLI::IsMember(kFamilies));
  e->add_option("--n", eval.n, "number of nodes (sum runs over l = 1..n-1)")->required();
  e->add_option("--phi", eval.phi, "phase; expressions like 2*ln2 or pi/3");
  e->add_option("--a", eval.a, "step factor; expressions allowed");
  e->add_option("--method", eval.method,
                "direct, cotangent, mixed, digamma-finite, digamma-infinite, integral or asympt:N");
  e->add_flag("--pv", eval.pv, "principal value: drop terms sitting on poles");
  add_precision(e, eval.precision);
  add_output(e, eval.output);

  AsymptOptions asympt;
  auto* as = app.add_subcommand("asympt", "asymptotic expansion against direct summation");
  as->add_option("--family", asympt.family, "csc, sec, tg or ctg")->check(CLI::IsMember(kFamilies));
  as->add_option("--phi", asympt.phi, "phase");
  as->add_option("--a", asympt.a, "step factor");
  as->add_option("--N", asympt.order, "truncation order");
  add_sweep(as, asympt.sweep);
  add_precision(as, asympt.precision);
  add_output(as, asympt.output);

  BoundsOptions bounds;
  auto* b = app.add_subcommand("bounds", "bounds against direct summation");
  b->add_option("--kind", bounds.kind, "bound family")->check(CLI::IsMember(kBoundKinds));
  b->add_option("--phi", bounds.phi, "phase");
  b->add_option("--a", bounds.a, "step factor");
  add_sweep(b, bounds.sweep);
  add_precision(b, bounds.precision);
  add_output(b, bounds.output);

  IdentityOptions ident;
  auto* ic = app.add_subcommand("identity-check", "random draws over the identity corpus");
  ic->add_option("--id", ident.id, "identity name or 'all'");
  ic->add_option("--draws", ident.draws, "draws per identity");
  ic->add_option("--seed", ident.seed, "random seed");
  ic->add_option("--param", ident.params, "key=value; runs one explicit case")->allow_extra_args(false);
  ic->add_option("--tol", ident.tol, "residual tolerance for the explicit case");
  add_output(ic, ident.output);

  FigureOptions fig;
  auto* f = app.add_subcommand("figure", "data tables for the sum, error and bound plots");
  f->add_option("--which", fig.which, "2, 3 or 5")->required()->check(CLI::IsMember({"2", "3", "5"}));
  f->add_option("--nmin", fig.nmin, "first n");
  f->add_option("--nmax", fig.nmax, "last n");
  add_precision(f, fig.precision);
  add_output(f, fig.output);

  BenchOptions bench;
  auto* bn = app.add_subcommand("bench", "direct against asympt:3 timings");
  bn->add_option("--nmin", bench.nmin, "smallest n");
  bn->add_option("--nmax", bench.nmax, "largest n");
  bn->add_option("--reps", bench.reps, "repetitions per n");
  bn->add_option("--accuracy-nmax", bench.accuracy_nmax, "largest n given an accuracy entry");
  add_output(bn, bench.output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*e) return cmd_eval(eval, out);
    if (*as) return cmd_asympt(asympt, out);
    if (*b) return cmd_bounds(bounds, out);
    if (*ic) return cmd_identity(ident, out);
    if (*f) return cmd_figure(fig, out);
    return cmd_bench(bench, out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const WriteError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitCannotWrite;
  } catch (const PoleError& ex) {
    err << "error: pole at index " << ex.index() << ": " << ex.what() << '\n';
    return kExitPole;
  } catch (const DomainError& ex) {
    err << "error: domain violated: \"" << ex.what() << "\"\n";
    return kExitDomain;
  } catch (const Error& ex) {
    err << "error: evaluation failed: \"" << ex.what() << "\"\n";
    return kExitDomain;
  }
}

}  // namespace trigsum::cli
