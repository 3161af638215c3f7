#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "malleable/journal/event.hpp"
#include "malleable/model/decimal.hpp"

namespace malleable::journal {

struct SessionWindow {
  std::int64_t start_ms = 0;
  /// Defaults to the timestamp of the last event in the log.
  std::optional<std::int64_t> end_ms;
};

enum class Classification { hoarder, minimalist, neither };
enum class MatrixCell { surfaced, hid, both };

std::string_view to_string(Classification classification) noexcept;
std::string_view to_string(MatrixCell cell) noexcept;

struct SessionAnalytics {
  std::size_t total_ops = 0;
  /// Content counts distinct attributes touched by content events; the
  /// other dimensions count operations.
  std::map<Dimension, std::size_t> per_dimension_counts;
  std::size_t distinct_attrs_touched = 0;
  double duration_minutes = 0;
  model::Decimal ops_per_minute;
  Classification classification = Classification::neither;
  std::map<std::string, MatrixCell> attribute_matrix;
  /// Attributes created by prompt synthesis within the window.
  std::set<std::string> synthesized_attrs;
};

/// Events with start_ms <= ts <= end. Throws Error(empty_window) when the
/// window has no duration (including a log with no events and no explicit
/// end).
SessionAnalytics analyze(std::span<const CustomizationEvent> log, const SessionWindow& window);

nlohmann::json analytics_to_json(const SessionAnalytics& analytics);

struct MatrixRow {
  std::string attr;
  bool synthesized = false;
  /// One cell per session, in session order.
  std::vector<std::optional<MatrixCell>> cells;
  std::size_t session_count = 0;
};

struct InteractionMatrix {
  std::vector<std::string> sessions;
  /// Source attributes by descending session count (then name), followed by
  /// synthesized attributes ordered the same way.
  std::vector<MatrixRow> rows;
};

struct SessionMatrixInput {
  std::string session_id;
  SessionAnalytics analytics;
};

/// Throws Error(invalid_argument) for an empty session list.
InteractionMatrix export_matrix(std::span<const SessionMatrixInput> sessions);

/// Header "attribute,synthesized,<session>..."; empty cell when untouched.
std::string matrix_to_csv(const InteractionMatrix& matrix);

}  // namespace malleable::journal
