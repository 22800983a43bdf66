#ifndef NSLEN_REPORT_HPP
#define NSLEN_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nslen/limits.hpp"
#include "nslen/perm_group.hpp"
#include "nslen/structure.hpp"
#include "nslen/verifier.hpp"

namespace nslen {

struct ReportOptions {
  Limits limits;
  bool series = true;
};

struct FieldError {
  std::string field;
  std::string kind;
  std::string message;
};

/// Invariants of one group. A field whose computation fails is left empty
/// and the failure recorded in `errors`.
struct InvariantReport {
  std::string spec;
  std::size_t degree = 0;
  std::string order;
  std::optional<bool> soluble;
  std::optional<std::size_t> lambda;
  std::optional<std::size_t> h_star;
  std::optional<std::size_t> fitting_height; // soluble groups only
  std::vector<std::pair<std::string, SeriesReport>> series;
  std::vector<std::string> tier_notes;
  std::vector<FieldError> errors;

  bool has_tier_error() const;
};

InvariantReport emit_report(const PermGroup &g, const ReportOptions &options = {},
                            const std::string &spec = "");

/// Deterministic JSON (fixed field order, orders as decimal strings).
std::string to_json(const InvariantReport &report);
std::string to_text(const InvariantReport &report);

std::string to_json(const VerificationReport &report);
std::string to_text(const VerificationReport &report);

} // namespace nslen

#endif // NSLEN_REPORT_HPP
