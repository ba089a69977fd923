#include "fdlift/report.hpp"

#include <charconv>
#include <chrono>
#include <istream>
#include <ostream>
#include <sstream>

namespace fdlift {

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const auto t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

void ReportEnvelope::add_pass(ordered_json r) {
  results.push_back(std::move(r));
  ++summary.pass;
}
void ReportEnvelope::add_fail(ordered_json r) {
  results.push_back(std::move(r));
  ++summary.fail;
}
void ReportEnvelope::add_withheld(ordered_json r) {
  results.push_back(std::move(r));
  ++summary.withheld;
}

ordered_json ReportEnvelope::to_json(bool with_timestamp) const {
  ordered_json j;
  j["schema"] = 1;
  j["tool_version"] = kToolVersion;
  if (with_timestamp) j["timestamp"] = utc_timestamp();
  j["command"] = command;
  j["config"] = config;
  j["results"] = results;
  j["summary"] = {{"pass", summary.pass}, {"fail", summary.fail}, {"withheld", summary.withheld}};
  return j;
}

ordered_json to_json(const CertifiedValue& v) {
  ordered_json j;
  j["re"] = v.value.real();
  j["im"] = v.value.imag();
  j["tail_bound"] = v.tail_bound;
  if (v.heuristic) j["heuristic"] = true;
  return j;
}

ordered_json to_json(const SeriesCheck& c) {
  ordered_json j;
  j["type"] = "series_check";
  j["identity"] = c.identity;
  j["s_re"] = c.s.real();
  j["s_im"] = c.s.imag();
  j["params"] = c.params;
  j["lhs"] = to_json(c.lhs);
  j["rhs"] = to_json(c.rhs);
  j["gap"] = c.gap;
  j["budget_gap"] = c.budget_gap;
  j["slack"] = c.slack;
  j["verdict"] = c.verdict ? "pass" : "fail";
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

ordered_json to_json(const WindowConstants& c) {
  ordered_json j;
  j["type"] = "window_constants";
  j["q"] = c.q;
  j["Sigma"] = c.Sigma;
  j["LambdaSin"] = c.LambdaSin;
  j["CprimeSin"] = c.CprimeSin;
  j["CdblprimeSin"] = c.CdblprimeSin;
  j["K0"] = c.K0;
  j["C3tot"] = c.C3tot;
  j["deltaSin"] = c.deltaSin;
  j["alpha"] = c.alpha;
  j["P0"] = c.P0;
  return j;
}

namespace {
ordered_json window_sub_json(const WindowSubReport& w) {
  ordered_json j;
  j["analytic_bound"] = w.analytic_bound;
  j["analytic_positive"] = w.analytic_positive;
  j["grid_min"] = w.grid_min;
  j["grid_positive"] = w.grid_positive;
  j["verdict"] = w.verdict;
  return j;
}
}  // namespace

ordered_json to_json(const WindowReport& r) {
  ordered_json j;
  j["type"] = "window_report";
  j["p"] = r.p;
  j["q"] = r.q;
  j["below_threshold"] = r.below_threshold;
  j["left"] = window_sub_json(r.left);
  j["middle"] = window_sub_json(r.middle);
  j["right"] = window_sub_json(r.right);
  j["boundary_contact"] = {{"second_diff", r.contact.second_diff},
                           {"first_diff", r.contact.first_diff},
                           {"curvature_ref", r.contact.curvature_ref},
                           {"rel_err", r.contact.rel_err},
                           {"multiplicity_two", r.contact.multiplicity_two}};
  j["zero_free"] = r.zero_free;
  j["verdict"] = r.verdict;
  return j;
}

ordered_json to_json(const CompanionZero& c) {
  ordered_json j;
  j["type"] = "companion_zero";
  j["p"] = c.p;
  j["q"] = c.q;
  j["bracket_lo_offset"] = c.bracket_lo_offset;
  j["bracket_hi_offset"] = c.bracket_hi_offset;
  j["x_p"] = c.x_p;
  j["delta"] = c.delta;
  j["log_delta"] = c.log_delta;
  j["newton_iters"] = c.newton_iters;
  j["residual"] = c.residual;
  j["zero_count_on_grid"] = c.zero_count_on_grid;
  j["digits_used"] = c.digits_used;
  j["kernel_cutoff"] = c.kernel_cutoff;
  return j;
}

ordered_json to_json(const UniquenessCertificate& c) {
  ordered_json j;
  j["type"] = "uniqueness_certificate";
  j["p"] = c.p;
  j["q"] = c.q;
  j["alpha"] = c.alpha;
  j["L0"] = {{"lhs", c.l0_lhs}, {"rhs", c.l0_rhs}, {"holds", c.l0}};
  j["M0"] = {{"lhs", c.m0_lhs}, {"rhs", c.m0_rhs}, {"holds", c.m0}};
  j["C0"] = {{"alpha", c.c0_alpha}, {"bound", c.c0_bound}, {"holds", c.c0}};
  j["certified"] = c.certified;
  j["verdict"] = c.verdict;
  return j;
}

ordered_json to_json(const PsiExplicitResult& r) {
  ordered_json j;
  j["type"] = "explicit_formula";
  j["x"] = r.x;
  j["zeros_used"] = r.zeros_used;
  j["truncated_rhs"] = r.truncated_rhs;
  j["direct_psi"] = r.direct_psi;
  j["residual"] = r.residual;
  j["half_weight_applied"] = r.half_weight_applied;
  return j;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const CsvTable& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out << ',';
    out << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
}

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ls(line);
    std::string cell;
    if (first) {
      while (std::getline(ls, cell, ',')) table.header.push_back(cell);
      first = false;
      continue;
    }
    std::vector<double> row;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace fdlift
