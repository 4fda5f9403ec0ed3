#pragma once

#include <optional>
#include <string>
#include <vector>

#include "photocorr/atomdata.hpp"
#include "photocorr/screening.hpp"
#include "photocorr/sumrules.hpp"

namespace photocorr {

enum class Format { Table, Csv };

/// A rendered command result: rows of preformatted cells plus whether every
/// comparison against the reference values stayed within tolerance.
struct Report {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool within_tolerance = true;
  std::vector<std::string> notes; // printed below the table (table format)
};

std::string render(const Report &r, Format f);

struct Selection {
  std::vector<double> z; // empty: everything
  std::optional<int> n;
  bool contains(double z_value) const;
  bool contains_n(int n_value) const { return !n || *n == n_value; }
};

Report table1_report(const std::vector<AtomRecord> &atoms, const Selection &sel,
                     double tol = 0.02);

struct Table2Tolerance {
  double x_d = 0.01;
  double x_c = 0.02;
  double x_ph = 0.02;
};
Report table2_report(const std::vector<AtomRecord> &atoms, const Selection &sel,
                     const Table2Tolerance &tol = {});

Report table3_report(int n_prime_max = 8, double tol = 0.005);

Report verify_report(SumRule rule, double z, int n, int n_max, double eps_max);

enum class XsecMode { Full, SOnly };
Report xsec_report(const std::vector<AtomRecord> &atoms, const Selection &sel,
                   XsecMode mode);

struct ScreeningInput {
  double z = 10.0;
  double d1s = kDelta1s;
  double d2s = kDelta2s;
  double d2p = kDelta2p;
  std::optional<double> eta_override;
};
Report screening_report(const ScreeningInput &in);

Report mechanism_report(int l, int l_prime, int l_star);

/// Deterministic breakdown for one (atom, n): x_d, x_c, x_ph from the data.
CorrelationBreakdown breakdown_for(const AtomRecord &atom, int n);

} // namespace photocorr
