// thetalift command-line tool, built on the C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "thetalift.h"

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kBadArgs = 2, kPrecision = 3, kSeriesRange = 4 };

enum class Format { plain, json, csv };

struct Globals {
  Format format = Format::plain;
  int digits = 12;
  unsigned threads = 1;
  double tol_scale = 1.0;
  std::string convention = "theorem2";
};

// Status carried out of a command.
struct Failure {
  int code;
  std::string message;
};

int exit_code(tl_status s) {
  switch (s) {
    case TL_OK:
      return kOk;
    case TL_INVALID_ARGUMENT:
      return kBadArgs;
    case TL_PRECISION:
      return kPrecision;
    case TL_SERIES_RANGE:
      return kSeriesRange;
    case TL_INTERNAL:
      break;
  }
  return kPrecision;
}

class Session {
 public:
  explicit Session(const Globals& g) : g_(g), ctx_(tl_context_new()) {
    check(tl_context_set_threads(ctx_, g.threads));
    check(tl_context_set_tol_scale(ctx_, g.tol_scale));
    check(tl_context_set_convention(ctx_, g.convention == "intro" ? TL_CONVENTION_INTRO
                                                                   : TL_CONVENTION_THEOREM2));
  }
  ~Session() { tl_context_free(ctx_); }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  tl_context* ctx() { return ctx_; }
  const Globals& globals() const { return g_; }

  void check(tl_status s) {
    if (s != TL_OK) throw Failure{exit_code(s), tl_last_error(ctx_)};
  }

 private:
  Globals g_;
  tl_context* ctx_;
};

std::string shortest(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fixed_digits(double v, int digits) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

class Printer {
 public:
  explicit Printer(const Globals& g) : g_(g) {}
  std::string num(double v) const { return g_.format == Format::plain ? fixed_digits(v, g_.digits) : shortest(v); }
  std::string cplx(tl_complex z) const {
    if (z.im == 0.0) return num(z.re);
    return num(z.re) + (std::signbit(z.im) ? " - " : " + ") + num(std::abs(z.im)) + "i";
  }

 private:
  const Globals& g_;
};

nlohmann::json complex_json(tl_complex z) { return {{"re", z.re}, {"im", z.im}}; }

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

// --- coeff ---------------------------------------------------------------

struct CoeffArgs {
  std::string family;
  int64_t n_max = 10;
};

struct TableHandle {
  tl_table* t = nullptr;
  ~TableHandle() { tl_table_free(t); }
};

int cmd_coeff(Session& s, const CoeffArgs& a) {
  const Printer pr(s.globals());
  tl_family fam = a.family == "holo" ? TL_FAMILY_HOLO : a.family == "shadow" ? TL_FAMILY_SHADOW : TL_FAMILY_R3;
  TableHandle table;
  s.check(tl_coeff_table(s.ctx(), fam, a.n_max, &table.t));
  const int64_t first = tl_table_first(table.t);

  struct Row {
    int64_t n;
    tl_complex v;
    int64_t r = 0;
    double residual = 0.0;
  };
  std::vector<Row> rows;
  for (int64_t n = first; n <= a.n_max; ++n) {
    Row row{n, {}};
    s.check(tl_table_get(s.ctx(), table.t, n, &row.v));
    if (fam == TL_FAMILY_SHADOW) {
      s.check(tl_r3(s.ctx(), n, &row.r));
      row.residual = row.v.re + double(row.r) / (2.0 * std::sqrt(M_PI * double(n)));
    }
    rows.push_back(row);
  }

  const Format fmt = s.globals().format;
  if (fmt == Format::json) {
    nlohmann::json j{{"family", a.family}, {"n_max", a.n_max}, {"entries", nlohmann::json::array()}};
    for (const Row& row : rows) {
      nlohmann::json e{{"n", row.n}, {"re", row.v.re}, {"im", row.v.im}};
      if (fam == TL_FAMILY_SHADOW) {
        e["r"] = row.r;
        e["residual"] = row.residual;
      }
      j["entries"].push_back(e);
    }
    print_json(j);
  } else if (fmt == Format::csv) {
    std::cout << (fam == TL_FAMILY_SHADOW ? "n,re,im,r,residual\n" : "n,re,im\n");
    for (const Row& row : rows) {
      std::cout << row.n << "," << pr.num(row.v.re) << "," << pr.num(row.v.im);
      if (fam == TL_FAMILY_SHADOW) std::cout << "," << row.r << "," << pr.num(row.residual);
      std::cout << "\n";
    }
  } else {
    for (const Row& row : rows) {
      std::cout << row.n << "\t";
      if (fam == TL_FAMILY_R3)
        std::cout << std::llround(row.v.re);
      else
        std::cout << pr.cplx(row.v);
      if (fam == TL_FAMILY_SHADOW) std::cout << "\t" << row.r << "\t" << pr.num(row.residual);
      std::cout << "\n";
    }
  }
  return kOk;
}

// --- quantity ------------------------------------------------------------

// Key/value output shared by the quantity subcommands.
class Record {
 public:
  explicit Record(std::string kind) : kind_(std::move(kind)) { j_["quantity"] = kind_; }
  void add(const std::string& key, const nlohmann::json& value, const std::string& text) {
    j_[key] = value;
    keys_.push_back(key);
    texts_.push_back(text);
  }
  void emit(Format fmt) const {
    if (fmt == Format::json) {
      print_json(j_);
    } else if (fmt == Format::csv) {
      for (std::size_t i = 0; i < keys_.size(); ++i) std::cout << (i ? "," : "") << keys_[i];
      std::cout << "\n";
      for (std::size_t i = 0; i < texts_.size(); ++i) std::cout << (i ? "," : "") << texts_[i];
      std::cout << "\n";
    } else {
      for (std::size_t i = 0; i < keys_.size(); ++i) std::cout << (i ? " " : "") << keys_[i] << "=" << texts_[i];
      std::cout << "\n";
    }
  }

 private:
  std::string kind_;
  nlohmann::json j_;
  std::vector<std::string> keys_;
  std::vector<std::string> texts_;
};

struct QuantityArgs {
  int64_t D = 0;
  int64_t N = 0;
  int64_t n = 0;
  double s = 0.0;
  int64_t cutoff = 0;
  bool series = false;
  bool closed = false;
};

const char* method_name(tl_zeta_method m) {
  switch (m) {
    case TL_ZETA_SERIES:
      return "series";
    case TL_ZETA_CLOSED:
      return "closed_form";
    case TL_ZETA_S1:
      return "s1_special";
  }
  return "unknown";
}

int cmd_classnumber(Session& s, const QuantityArgs& a) {
  int64_t h = 0;
  s.check(tl_class_number(s.ctx(), a.D, &h));
  Record r("classnumber");
  r.add("D", a.D, std::to_string(a.D));
  r.add("h", h, std::to_string(h));
  r.emit(s.globals().format);
  return kOk;
}

int cmd_hurwitz(Session& s, const QuantityArgs& a) {
  int64_t num = 0, den = 1;
  s.check(tl_hurwitz(s.ctx(), a.N, &num, &den));
  const std::string text = den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  if (s.globals().format == Format::plain) {
    std::cout << text << "\n";
    return kOk;
  }
  Record r("hurwitz");
  r.add("N", a.N, std::to_string(a.N));
  r.add("H", text, text);
  r.emit(s.globals().format);
  return kOk;
}

int cmd_unit(Session& s, const QuantityArgs& a) {
  if (a.D > 1000000) throw Failure{kBadArgs, "unit: D is limited to 1000000"};
  tl_unit* u = nullptr;
  s.check(tl_pell_unit(s.ctx(), a.D, &u));
  const Printer pr(s.globals());
  Record r("unit");
  r.add("D", a.D, std::to_string(a.D));
  r.add("x", tl_unit_x(u), tl_unit_x(u));
  r.add("y", tl_unit_y(u), tl_unit_y(u));
  r.add("norm", tl_unit_norm(u), std::to_string(tl_unit_norm(u)));
  r.add("logeps", tl_unit_log_eps(u), pr.num(tl_unit_log_eps(u)));
  tl_unit_free(u);
  r.emit(s.globals().format);
  return kOk;
}

int cmd_lvalue(Session& s, const QuantityArgs& a) {
  tl_real_result v{};
  s.check(tl_lvalue(s.ctx(), a.D, a.s, a.cutoff, &v));
  const Printer pr(s.globals());
  Record r("lvalue");
  r.add("D", a.D, std::to_string(a.D));
  r.add("s", a.s, pr.num(a.s));
  r.add("value", v.value, pr.num(v.value));
  r.add("error_bound", v.error_bound, pr.num(v.error_bound));
  r.emit(s.globals().format);
  return kOk;
}

int cmd_zeta(Session& s, const QuantityArgs& a) {
  if (a.series && a.closed) throw Failure{kBadArgs, "choose one of --series and --closed"};
  tl_zeta_result z{};
  if (a.series) {
    if (a.s < 2.0) throw Failure{kSeriesRange, "zeta-kloosterman: the series route needs s >= 2"};
    s.check(tl_zeta_series(s.ctx(), a.n, a.s, a.cutoff > 0 ? a.cutoff : 1000, &z));
  } else {
    s.check(tl_zeta_closed(s.ctx(), a.n, a.s, &z));
  }
  const Printer pr(s.globals());
  Record r("zeta-kloosterman");
  r.add("n", a.n, std::to_string(a.n));
  r.add("s", a.s, pr.num(a.s));
  r.add("method", method_name(z.method), method_name(z.method));
  r.add("re", z.value.re, pr.num(z.value.re));
  r.add("im", z.value.im, pr.num(z.value.im));
  r.add("phase_residual", z.phase_residual, pr.num(z.phase_residual));
  r.add("error_bound", z.error_bound, pr.num(z.error_bound));
  if (z.trivial_character) r.add("note", "L(s, psi_-n) is zeta(s)", "trivial_character");
  r.emit(s.globals().format);
  return kOk;
}

// --- eval ----------------------------------------------------------------

std::optional<double> parse_double(const std::string& text) {
  double v = 0.0;
  const char* b = text.data();
  const char* e = b + text.size();
  if (b != e && *b == '+') ++b;
  auto res = std::from_chars(b, e, v);
  if (res.ec != std::errc() || res.ptr != e) return std::nullopt;
  return v;
}

// Accepts "x+iy" written as x+yi, x-yi, yi or x+i.
std::optional<std::pair<double, double>> parse_tau(const std::string& text) {
  static const std::regex re(R"(^\s*([+-]?[0-9.eE]+(?:[eE][+-]?[0-9]+)?)?\s*([+-])?\s*([0-9.eE]*(?:[eE][+-]?[0-9]+)?)\s*\*?\s*i\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) return std::nullopt;
  double x = 0.0, y = 1.0;
  if (m[1].matched && !m[2].matched) {
    // a single number followed by i is purely imaginary
    auto v = parse_double(m[1].str());
    if (!v || !m[3].str().empty()) return std::nullopt;
    return std::make_pair(0.0, *v);
  }
  if (m[1].matched) {
    auto v = parse_double(m[1].str());
    if (!v) return std::nullopt;
    x = *v;
  }
  if (!m[3].str().empty()) {
    auto v = parse_double(m[3].str());
    if (!v) return std::nullopt;
    y = *v;
  }
  if (m[2].matched && m[2].str() == "-") y = -y;
  return std::make_pair(x, y);
}

struct EvalArgs {
  std::string tau;
  int64_t n_max = 20;
};

int cmd_eval(Session& s, const EvalArgs& a) {
  const auto tau = parse_tau(a.tau);
  if (!tau) throw Failure{kBadArgs, "eval: cannot parse tau '" + a.tau + "', expected x+yi"};
  tl_eval_result r{};
  s.check(tl_eval(s.ctx(), tau->first, tau->second, a.n_max, &r));
  const Printer pr(s.globals());
  const Format fmt = s.globals().format;
  if (fmt == Format::json) {
    print_json({{"tau", complex_json({tau->first, tau->second})},
                {"n_max", a.n_max},
                {"Theta", complex_json(r.theta)},
                {"Theta_truncation", r.theta_truncation},
                {"theta", complex_json(r.theta_half)},
                {"Theta_cubed", complex_json(r.theta_cubed)},
                {"F", complex_json(r.f)},
                {"F_holomorphic", complex_json(r.f_holomorphic)},
                {"F_nonholomorphic", complex_json(r.f_nonholomorphic)},
                {"F_last_term", r.f_last_term}});
  } else if (fmt == Format::csv) {
    std::cout << "quantity,re,im,truncation\n";
    std::cout << "Theta," << pr.num(r.theta.re) << "," << pr.num(r.theta.im) << "," << pr.num(r.theta_truncation) << "\n";
    std::cout << "theta," << pr.num(r.theta_half.re) << "," << pr.num(r.theta_half.im) << ",\n";
    std::cout << "Theta_cubed," << pr.num(r.theta_cubed.re) << "," << pr.num(r.theta_cubed.im) << ",\n";
    std::cout << "F," << pr.num(r.f.re) << "," << pr.num(r.f.im) << "," << pr.num(r.f_last_term) << "\n";
  } else {
    std::cout << "Theta(tau)      = " << pr.cplx(r.theta) << "  (truncation <= " << pr.num(r.theta_truncation) << ")\n";
    std::cout << "theta(tau)      = " << pr.cplx(r.theta_half) << "  (Theta(tau/2))\n";
    std::cout << "Theta(tau)^3    = " << pr.cplx(r.theta_cubed) << "\n";
    std::cout << "F(tau)          = " << pr.cplx(r.f) << "  (last term " << pr.num(r.f_last_term) << ")\n";
    std::cout << "  holomorphic   = " << pr.cplx(r.f_holomorphic) << "\n";
    std::cout << "  nonholomorphic= " << pr.cplx(r.f_nonholomorphic) << "\n";
  }
  return kOk;
}

// --- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  int64_t n_max = 100;
  bool verbose = false;
};

int cmd_verify(Session& s, const VerifyArgs& a) {
  tl_report* rep = nullptr;
  s.check(tl_verify(s.ctx(), a.suite.c_str(), a.n_max, &rep));
  const nlohmann::json j = nlohmann::json::parse(tl_report_json(rep, a.verbose ? 2 : 1));
  const bool ok = tl_report_cases_failed(rep) == 0;
  tl_report_free(rep);
  const Printer pr(s.globals());
  const Format fmt = s.globals().format;
  if (fmt == Format::json) {
    print_json(j);
  } else if (fmt == Format::csv) {
    std::cout << "check,cases_run,cases_failed,max_abs_error,tolerance\n";
    for (const auto& c : j["checks"])
      std::cout << c["name"].get<std::string>() << "," << c["cases_run"].get<int64_t>() << ","
                << c["cases_failed"].get<int64_t>() << "," << pr.num(c["max_abs_error"].get<double>()) << ","
                << pr.num(c["tolerance"].get<double>()) << "\n";
  } else {
    for (const auto& c : j["checks"]) {
      const int64_t failed = c["cases_failed"].get<int64_t>();
      std::printf("%-4s %-34s %6lld cases  max err %-12s tol %s\n", failed ? "FAIL" : "ok",
                  c["name"].get<std::string>().c_str(), (long long)c["cases_run"].get<int64_t>(),
                  pr.num(c["max_abs_error"].get<double>()).c_str(), pr.num(c["tolerance"].get<double>()).c_str());
    }
    if (a.verbose)
      for (const auto& c : j["cases"])
        if (!c["passed"].get<bool>())
          std::printf("  failed: %s %s error %s\n", c["check"].get<std::string>().c_str(),
                      c["params"].get<std::string>().c_str(), pr.num(c["error"].get<double>()).c_str());
    std::printf("suite %s n_max %lld: %lld cases, %lld failed, max abs error %s\n",
                j["suite"].get<std::string>().c_str(), (long long)a.n_max,
                (long long)j["cases_run"].get<int64_t>(), (long long)j["cases_failed"].get<int64_t>(),
                pr.num(j["max_abs_error"].get<double>()).c_str());
    for (const auto& n : j["notes"]) std::printf("note: %s\n", n.get<std::string>().c_str());
  }
  std::fflush(stdout);
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coefficients, class numbers and Kloosterman zeta values around the theta lift"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::string format = "plain";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--digits", g.digits, "Significant digits in plain output")->check(CLI::Range(1, 15));
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--tol-scale", g.tol_scale, "Multiply all verification tolerances")
      ->check(CLI::PositiveNumber);
  app.add_option("--constant-term-convention", g.convention, "Value of c+(0)")
      ->check(CLI::IsMember({"theorem2", "intro"}));

  CoeffArgs coeff;
  auto* c = app.add_subcommand("coeff", "Fourier coefficient table");
  c->add_option("family", coeff.family, "holo, shadow or r3")->required()->check(CLI::IsMember({"holo", "shadow", "r3"}));
  c->add_option("--n-max", coeff.n_max, "Largest index")->check(CLI::NonNegativeNumber);

  QuantityArgs q;
  auto* qty = app.add_subcommand("quantity", "A single arithmetic quantity");
  qty->require_subcommand(1);
  auto* q_class = qty->add_subcommand("classnumber", "h(D) for a fundamental discriminant");
  q_class->add_option("--D", q.D)->required();
  auto* q_hur = qty->add_subcommand("hurwitz", "Hurwitz class number H(-N)");
  q_hur->add_option("--N", q.N)->required();
  auto* q_unit = qty->add_subcommand("unit", "Fundamental unit of discriminant D");
  q_unit->add_option("--D", q.D)->required();
  auto* q_l = qty->add_subcommand("lvalue", "L(s, chi_D)");
  q_l->add_option("--D", q.D)->required();
  q_l->add_option("--s", q.s)->required();
  q_l->add_option("--cutoff", q.cutoff, "Use the direct partial sum up to this index");
  auto* q_z = qty->add_subcommand("zeta-kloosterman", "Kloosterman zeta Z_n(s)");
  q_z->add_option("--n", q.n)->required();
  q_z->add_option("--s", q.s)->required();
  q_z->add_flag("--series", q.series, "Sum the Kloosterman series");
  q_z->add_flag("--closed", q.closed, "Closed form (default)");
  q_z->add_option("--cutoff", q.cutoff, "Series cutoff (default 1000)");

  EvalArgs ev;
  auto* e = app.add_subcommand("eval", "Theta and F at a point of the upper half-plane");
  e->add_option("--tau", ev.tau, "Point written as x+yi")->required();
  e->add_option("--n-max", ev.n_max, "Coefficients used in F")->check(CLI::PositiveNumber);

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run identity suites");
  v->add_option("--suite", ver.suite)
      ->check(CLI::IsMember({"all", "classnumbers", "kloosterman", "shadow", "hecke", "multiplier"}));
  v->add_option("--n-max", ver.n_max)->check(CLI::Range(int64_t(10), int64_t(100000)));
  v->add_flag("--verbose", ver.verbose, "Include per-case detail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? kOk : kBadArgs;
  }
  g.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::plain;

  try {
    Session s(g);
    if (c->parsed()) return cmd_coeff(s, coeff);
    if (q_class->parsed()) return cmd_classnumber(s, q);
    if (q_hur->parsed()) return cmd_hurwitz(s, q);
    if (q_unit->parsed()) return cmd_unit(s, q);
    if (q_l->parsed()) return cmd_lvalue(s, q);
    if (q_z->parsed()) return cmd_zeta(s, q);
    if (e->parsed()) return cmd_eval(s, ev);
    if (v->parsed()) return cmd_verify(s, ver);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kPrecision;
  }
  return kBadArgs;
}
