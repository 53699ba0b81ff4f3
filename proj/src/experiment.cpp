#include "pdcmode/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "pdcmode/analytic.hpp"
#include "pdcmode/errors.hpp"
#include "pdcmode/units.hpp"

namespace pdcmode {

TauConvention parse_tau_convention(const std::string& name) {
  if (name == "pump_is_fund_over_sqrt2") return TauConvention::pump_is_fund_over_sqrt2;
  if (name == "pump_is_fund") return TauConvention::pump_is_fund;
  throw DomainError("unknown tau_convention '" + name +
                    "' (expected pump_is_fund_over_sqrt2 or pump_is_fund)");
}

void LabParams::validate() const {
  auto pos = [](double v, const char* name) {
    if (!(v > 0.0)) throw DomainError(std::string("LabParams: ") + name + " must be > 0");
  };
  pos(lambda_nm, "lambda_nm");
  pos(tau_fund_ps, "tau_fund_ps");
  pos(filter_fwhm_nm, "filter_fwhm_nm");
  pos(pinhole_diameter_um, "pinhole_diameter_um");
  pos(focal_mm, "focal_mm");
  pos(pump_fwhm_mm, "pump_fwhm_mm");
  if (!(visibility >= 0.0 && visibility <= 1.0))
    throw DomainError("LabParams: visibility must be in [0, 1]");
}

ChainReport run_chain_with_overrides(const LabParams& p,
                                     std::optional<double> p_temp_override,
                                     std::optional<double> p_sp_override) {
  p.validate();
  for (const auto& ov : {p_temp_override, p_sp_override})
    if (ov && !(*ov > 0.0 && *ov <= 1.0))
      throw DomainError("purity override must be in (0, 1]");

  ChainReport r;
  if (p_temp_override) {
    r.p_temp = *p_temp_override;
  } else {
    const double lambda = p.lambda_nm * 1e-9;
    const double w_t = dlambda_to_w(p.filter_fwhm_nm * 1e-9, lambda);
    double tau_p = p.tau_fund_ps * 1e-12;
    if (p.tau_convention == TauConvention::pump_is_fund_over_sqrt2)
      tau_p /= std::numbers::sqrt2;
    r.p_temp = p_temp_fwhm(w_t, tau_p);
  }
  if (p_sp_override) {
    r.p_sp = *p_sp_override;
  } else {
    r.p_sp = p_sp_pinhole(0.5 * p.pinhole_diameter_um * 1e-6,
                          p.pump_fwhm_mm * 1e-3, p.lambda_nm * 1e-9,
                          p.focal_mm * 1e-3);
  }

  r.sqrt_p = std::sqrt(r.p_temp * r.p_sp);
  r.m_exp = p.visibility * p.visibility;
  r.linewidth_correction = f_alpha(std::numbers::sqrt2) / f_alpha(std::sqrt(3.0));
  r.m_cl = r.m_exp * r.linewidth_correction;
  r.m_total = r.sqrt_p * r.m_cl;
  if (r.m_cl > 1.0)
    r.warnings.push_back(
        "linewidth correction pushed m_cl above 1; it only applies to "
        "sub-unity matching");
  if (r.m_total > 1.0)
    r.warnings.push_back("m_total exceeds the physical bound of 1");
  return r;
}

ChainReport run_chain(const LabParams& p) {
  return run_chain_with_overrides(p, std::nullopt, std::nullopt);
}

namespace {
std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}
}  // namespace

void print_chain_report(const ChainReport& r, std::ostream& out) {
  out << "p_temp      " << fmt6(r.p_temp) << '\n'
      << "p_sp        " << fmt6(r.p_sp) << '\n'
      << "sqrt_p      " << fmt6(r.sqrt_p) << '\n'
      << "m_exp       " << fmt6(r.m_exp) << '\n'
      << "correction  " << fmt6(r.linewidth_correction) << '\n'
      << "m_cl        " << fmt6(r.m_cl) << '\n'
      << "m_total     " << fmt6(r.m_total) << '\n';
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
}

const char* const kChainCsvHeader = "p_temp,p_sp,sqrt_p,m_exp,correction,m_cl,m_total";

std::string chain_report_csv_row(const ChainReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%.6g,%.6g,%.6g,%.6g,%.6g,%.6g,%.6g", r.p_temp,
                r.p_sp, r.sqrt_p, r.m_exp, r.linewidth_correction, r.m_cl,
                r.m_total);
  return buf;
}

}  // namespace pdcmode
