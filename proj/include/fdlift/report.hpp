#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdlift/series.hpp"
#include "fdlift/windows.hpp"

namespace fdlift {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

struct ReportSummary {
  int pass = 0, fail = 0, withheld = 0;
};

// Machine-readable run report: schema 1.  Regenerating with the same config
// reproduces the document byte for byte except the timestamp field.
struct ReportEnvelope {
  std::string command;
  ordered_json config;
  std::vector<ordered_json> results;
  ReportSummary summary;

  void add_pass(ordered_json r);
  void add_fail(ordered_json r);
  void add_withheld(ordered_json r);
  ordered_json to_json(bool with_timestamp = true) const;
};

ordered_json to_json(const CertifiedValue& v);
ordered_json to_json(const SeriesCheck& c);
ordered_json to_json(const WindowConstants& c);
ordered_json to_json(const WindowReport& r);
ordered_json to_json(const CompanionZero& c);
ordered_json to_json(const UniquenessCertificate& c);
ordered_json to_json(const PsiExplicitResult& r);

// Shortest round-trip decimal for binary64.
std::string format_double(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& out, const CsvTable& table);
CsvTable read_csv(std::istream& in);

}  // namespace fdlift
