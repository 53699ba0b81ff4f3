#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pdcmode {

// Which pulse width the quoted fundamental FWHM refers to.  Frequency
// doubling shortens the pump pulse by sqrt(2) relative to the fundamental;
// `pump_is_fund` treats the quoted value as the pump width directly.
enum class TauConvention { pump_is_fund_over_sqrt2, pump_is_fund };

TauConvention parse_tau_convention(const std::string& name);

// Lab-unit inputs for the mode-matching budget of a pulsed heralded-photon
// experiment.
struct LabParams {
  double lambda_nm = 0.0;            // signal/trigger wavelength
  double tau_fund_ps = 0.0;          // fundamental pulse FWHM
  double filter_fwhm_nm = 0.0;       // spectral trigger filter FWHM
  double pinhole_diameter_um = 0.0;  // spatial trigger pinhole diameter (2 rho)
  double focal_mm = 0.0;             // collimating lens focal length
  double pump_fwhm_mm = 0.0;         // pump beam FWHM diameter
  double visibility = 0.0;           // measured classical fringe visibility
  TauConvention tau_convention = TauConvention::pump_is_fund_over_sqrt2;

  void validate() const;
};

// End-to-end mode-matching budget:
//   m_total = sqrt(p_temp * p_sp) * visibility^2 * f(sqrt 2)/f(sqrt 3).
struct ChainReport {
  double p_temp = 0.0;
  double p_sp = 0.0;
  double sqrt_p = 0.0;
  double m_exp = 0.0;                 // visibility^2
  double linewidth_correction = 0.0;  // f(sqrt 2) / f(sqrt 3)
  double m_cl = 0.0;                  // m_exp * correction
  double m_total = 0.0;               // sqrt_p * m_cl
  std::vector<std::string> warnings;
};

ChainReport run_chain(const LabParams& p);

// Same chain with quoted purity values substituted for the computed ones.
ChainReport run_chain_with_overrides(const LabParams& p,
                                     std::optional<double> p_temp_override,
                                     std::optional<double> p_sp_override);

// Aligned plain-text block, one "name value" line per field.
void print_chain_report(const ChainReport& r, std::ostream& out);

// Single data row, columns p_temp,p_sp,sqrt_p,m_exp,correction,m_cl,m_total.
std::string chain_report_csv_row(const ChainReport& r);
extern const char* const kChainCsvHeader;

}  // namespace pdcmode
