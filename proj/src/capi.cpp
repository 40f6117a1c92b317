#include "thetalift.h"

#include <exception>
#include <memory>
#include <string>

#include "thetalift/errors.hpp"
#include "thetalift/kloosterman.hpp"
#include "thetalift/lseries.hpp"
#include "thetalift/maassform.hpp"
#include "thetalift/quadforms.hpp"
#include "thetalift/verify.hpp"

using namespace thetalift;

struct tl_context {
  unsigned threads = 1;
  double tol_scale = 1.0;
  ConstantTermConvention convention = ConstantTermConvention::theorem2;
  std::string error;
};

struct tl_table {
  CoeffTable table;
};

struct tl_unit {
  PellUnit unit;
  std::string x;
  std::string y;
};

struct tl_report {
  VerifyReport report;
  std::string json;
};

namespace {

tl_complex to_c(Complex z) { return {z.real(), z.imag()}; }

tl_zeta_result to_c(const ZetaValue& z) {
  tl_zeta_result r{};
  r.value = to_c(z.value);
  r.error_bound = z.error_bound;
  r.phase_residual = z.phase_residual();
  switch (z.method) {
    case ZetaMethod::series:
      r.method = TL_ZETA_SERIES;
      break;
    case ZetaMethod::closed_form:
      r.method = TL_ZETA_CLOSED;
      break;
    case ZetaMethod::s1_special:
      r.method = TL_ZETA_S1;
      break;
  }
  r.trivial_character = z.trivial_character ? 1 : 0;
  return r;
}

template <class F>
tl_status guarded(tl_context* ctx, F&& body) {
  if (!ctx) return TL_INVALID_ARGUMENT;
  ctx->error.clear();
  try {
    body();
    return TL_OK;
  } catch (const SeriesRangeError& e) {
    ctx->error = e.what();
    return TL_SERIES_RANGE;
  } catch (const DomainError& e) {
    ctx->error = e.what();
    return TL_INVALID_ARGUMENT;
  } catch (const PrecisionError& e) {
    ctx->error = e.what();
    return TL_PRECISION;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return TL_INTERNAL;
  } catch (...) {
    ctx->error = "unknown error";
    return TL_INTERNAL;
  }
}

void require_out(const void* p) {
  if (!p) throw DomainError("output pointer is null");
}

}  // namespace

extern "C" {

const char* tl_version(void) { return "0.1.0"; }

tl_context* tl_context_new(void) { return new (std::nothrow) tl_context; }
void tl_context_free(tl_context* ctx) { delete ctx; }
const char* tl_last_error(const tl_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }

tl_status tl_context_set_threads(tl_context* ctx, unsigned threads) {
  return guarded(ctx, [&] {
    if (threads == 0) throw DomainError("threads must be positive");
    ctx->threads = threads;
  });
}

tl_status tl_context_set_tol_scale(tl_context* ctx, double scale) {
  return guarded(ctx, [&] {
    if (!(scale > 0.0)) throw DomainError("tol_scale must be positive");
    ctx->tol_scale = scale;
  });
}

tl_status tl_context_set_convention(tl_context* ctx, tl_convention conv) {
  return guarded(ctx, [&] {
    if (conv == TL_CONVENTION_THEOREM2)
      ctx->convention = ConstantTermConvention::theorem2;
    else if (conv == TL_CONVENTION_INTRO)
      ctx->convention = ConstantTermConvention::intro;
    else
      throw DomainError("unknown constant-term convention");
  });
}

tl_status tl_coeff_table(tl_context* ctx, tl_family family, int64_t n_max, tl_table** out) {
  return guarded(ctx, [&] {
    require_out(out);
    CoeffFamily f;
    switch (family) {
      case TL_FAMILY_HOLO:
        f = CoeffFamily::holo_plus;
        break;
      case TL_FAMILY_SHADOW:
        f = CoeffFamily::nonholo_minus;
        break;
      case TL_FAMILY_R3:
        f = CoeffFamily::r3;
        break;
      default:
        throw DomainError("unknown coefficient family");
    }
    *out = new tl_table{coeff_table(f, n_max, ctx->convention, ctx->threads)};
  });
}

tl_status tl_hecke_tp2(tl_context* ctx, const tl_table* table, int64_t p, int half_weight_k, tl_table** out) {
  return guarded(ctx, [&] {
    require_out(out);
    if (!table) throw DomainError("table is null");
    *out = new tl_table{hecke_Tp2(table->table, p, half_weight_k)};
  });
}

void tl_table_free(tl_table* table) { delete table; }
int64_t tl_table_first(const tl_table* table) { return table ? table->table.first_index() : 0; }
int64_t tl_table_n_max(const tl_table* table) { return table ? table->table.n_max() : -1; }

tl_status tl_table_get(tl_context* ctx, const tl_table* table, int64_t n, tl_complex* out) {
  return guarded(ctx, [&] {
    require_out(out);
    if (!table) throw DomainError("table is null");
    *out = to_c(table->table.at(n));
  });
}

tl_status tl_r3(tl_context* ctx, int64_t n, int64_t* out) {
  return guarded(ctx, [&] {
    require_out(out);
    *out = r3_brute(n);
  });
}

tl_status tl_hurwitz(tl_context* ctx, int64_t N, int64_t* num, int64_t* den) {
  return guarded(ctx, [&] {
    require_out(num);
    require_out(den);
    const Rational h = hurwitz_formula(N);
    *num = h.num();
    *den = h.den();
  });
}

tl_status tl_class_number(tl_context* ctx, int64_t D, int64_t* out) {
  return guarded(ctx, [&] {
    require_out(out);
    if (!is_fundamental_discriminant(D)) throw DomainError("D must be a fundamental discriminant");
    *out = D < 0 ? class_number_imag(D) : class_number_real(D);
  });
}

tl_status tl_pell_unit(tl_context* ctx, int64_t D, tl_unit** out) {
  return guarded(ctx, [&] {
    require_out(out);
    PellUnit u = pell_unit(D);
    auto h = std::make_unique<tl_unit>(tl_unit{u, u.x.str(), u.y.str()});
    *out = h.release();
  });
}

void tl_unit_free(tl_unit* unit) { delete unit; }
const char* tl_unit_x(const tl_unit* unit) { return unit ? unit->x.c_str() : ""; }
const char* tl_unit_y(const tl_unit* unit) { return unit ? unit->y.c_str() : ""; }
double tl_unit_log_eps(const tl_unit* unit) { return unit ? unit->unit.log_eps : 0.0; }
int tl_unit_norm(const tl_unit* unit) { return unit ? unit->unit.norm() : 0; }

tl_status tl_lvalue(tl_context* ctx, int64_t D, double s, int64_t cutoff, tl_real_result* out) {
  return guarded(ctx, [&] {
    require_out(out);
    LValue v;
    if (s == 1.0)
      v = L_at_1(D);
    else if (cutoff > 0)
      v = L_direct(D, s, cutoff);
    else
      v = L_value(D, s);
    *out = {v.value, v.abs_error_bound};
  });
}

tl_status tl_zeta_series(tl_context* ctx, int64_t n, double s, int64_t cutoff, tl_zeta_result* out) {
  return guarded(ctx, [&] {
    require_out(out);
    *out = to_c(Z_series(n, s, cutoff, ctx->threads));
  });
}

tl_status tl_zeta_closed(tl_context* ctx, int64_t n, double s, tl_zeta_result* out) {
  return guarded(ctx, [&] {
    require_out(out);
    *out = to_c(s == 1.0 ? Z_at_1(n) : Zn_closed(n, s));
  });
}

tl_status tl_eval(tl_context* ctx, double x, double y, int64_t n_max, tl_eval_result* out) {
  return guarded(ctx, [&] {
    require_out(out);
    const UpperHalfPoint tau(x, y);
    const i64 cutoff = n_max < 20 ? 20 : n_max;
    const SeriesValue th = theta_eval(tau, cutoff);
    const SeriesValue half = theta_eval(UpperHalfPoint(x / 2, y / 2), cutoff);
    const FValue f = F_eval(tau, n_max, ctx->convention);
    out->theta = to_c(th.value);
    out->theta_truncation = th.truncation;
    out->theta_half = to_c(half.value);
    out->theta_cubed = to_c(th.value * th.value * th.value);
    out->f = to_c(f.value);
    out->f_holomorphic = to_c(f.holomorphic);
    out->f_nonholomorphic = to_c(f.nonholomorphic);
    out->f_last_term = f.last_term;
  });
}

tl_status tl_verify(tl_context* ctx, const char* suite, int64_t n_max, tl_report** out) {
  return guarded(ctx, [&] {
    require_out(out);
    if (!suite) throw DomainError("suite is null");
    const auto s = parse_suite(suite);
    if (!s) throw DomainError(std::string("unknown suite: ") + suite);
    VerifyOptions opt;
    opt.n_max = n_max;
    opt.threads = ctx->threads;
    opt.tol_scale = ctx->tol_scale;
    opt.convention = ctx->convention;
    *out = new tl_report{run_suite(*s, opt), {}};
  });
}

void tl_report_free(tl_report* report) { delete report; }
int64_t tl_report_cases_run(const tl_report* report) { return report ? report->report.cases_run : 0; }
int64_t tl_report_cases_failed(const tl_report* report) { return report ? report->report.cases_failed : 0; }
double tl_report_max_abs_error(const tl_report* report) { return report ? report->report.max_abs_error : 0.0; }

const char* tl_report_json(tl_report* report, int verbosity) {
  if (!report) return "";
  report->json = report->report.to_json(verbosity).dump(2);
  return report->json.c_str();
}

}  // extern "C"
