#pragma once

// Instance parsing, verification pipelines and report rendering behind the
// koszulq command-line tool.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "koszulq/findim.hpp"
#include "koszulq/structure.hpp"

namespace kq {

struct ParsedQ {
  FieldHandle field;
  std::vector<Scalar> q;
};

/// rat:v0,v1,...        rationals (fractions allowed)
/// cyclo:D:e0,e1,...    q_i = zeta_D^{e_i}
/// fp:p:v0,...          F_p
/// fpx:p:f:v0,...       F_p[x]/(f), values as polynomials in x
/// generic              Q(u) with q_0 = u and the other entries 1
/// Throws InvalidArgument on malformed input, wrong count or a zero entry.
ParsedQ parse_q_spec(const std::string& spec, int m);

struct InstanceSpec {
  std::string command;
  int m = 0;
  std::string q_spec;
  std::optional<std::string> t, b1, b2;
  std::optional<long long> max_degree;
  std::string format = "text";
  std::optional<std::string> output;
  std::uint64_t seed = 1;
  bool timing = false;
};

struct CheckRecord {
  std::string name;
  /// "PASS", "FAIL" or "SKIPPED"
  std::string verdict;
  std::string detail;
  bool operator==(const CheckRecord&) const = default;
};

struct DimRow {
  long long n = 0;
  long long solver = 0;
  std::optional<long long> hilbert;
  bool operator==(const DimRow&) const = default;
};

struct InstanceRecord {
  std::string command;
  int m = 0;
  std::string field;
  std::uint64_t characteristic = 0;
  std::vector<std::string> q;
  std::string zeta;
  std::optional<std::uint64_t> d;
  long long N = 0;
  std::uint64_t seed = 1;
  std::optional<std::string> t, b1, b2;
  bool operator==(const InstanceRecord&) const = default;
};

struct GeneratorRecord {
  long long Lx = 0, Ly = 0, Lw = 0, sigma_d = 0;
  unsigned p = 0;
  std::string x, y, w;
  bool operator==(const GeneratorRecord&) const = default;
};

struct EpsilonRecord {
  std::string printed;
  std::string derived;
  bool operator==(const EpsilonRecord&) const = default;
};

struct RelationRecord {
  std::string text;
  bool holds = false;
  std::string difference;
  std::string derived_text;
  bool derived_holds = false;
  bool operator==(const RelationRecord&) const = default;
};

struct Report {
  int schema_version = 1;
  InstanceRecord instance;
  std::string case_tag;
  std::optional<GeneratorRecord> generators;
  std::optional<EpsilonRecord> epsilon;
  std::optional<RelationRecord> relation;
  std::vector<DimRow> dims;
  std::vector<CheckRecord> checks;
  /// seconds per phase; only with --timing so that output stays byte-stable
  std::optional<std::map<std::string, double>> timing;

  bool all_pass() const;
  bool operator==(const Report&) const = default;
};

/// Runs the pipeline for spec.command.
Report run_instance(const InstanceSpec& spec);

std::string render(const Report& report, const std::string& format);
std::string to_json(const Report& report);
/// Inverse of to_json; throws InvalidArgument on schema mismatch.
Report report_from_json(const std::string& text);

/// Full command-line entry point; returns the exit status (0 all PASS,
/// 1 some FAIL, 2 usage or parse error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kq
