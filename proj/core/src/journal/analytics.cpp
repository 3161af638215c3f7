#include "malleable/journal/analytics.hpp"

#include <algorithm>

#include "malleable/error.hpp"

namespace malleable::journal {

using nlohmann::json;

std::string_view to_string(Classification classification) noexcept {
  switch (classification) {
    case Classification::hoarder: return "hoarder";
    case Classification::minimalist: return "minimalist";
    case Classification::neither: return "neither";
  }
  return "neither";
}

std::string_view to_string(MatrixCell cell) noexcept {
  switch (cell) {
    case MatrixCell::surfaced: return "surfaced";
    case MatrixCell::hid: return "hid";
    case MatrixCell::both: return "both";
  }
  return "both";
}

namespace {

void mark(std::map<std::string, MatrixCell>& matrix, const std::string& attr, MatrixCell cell) {
  auto [it, inserted] = matrix.emplace(attr, cell);
  if (!inserted && it->second != cell) it->second = MatrixCell::both;
}

std::vector<std::string> string_list(const json& j) {
  std::vector<std::string> out;
  if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_string()) out.push_back(e.get<std::string>());
    }
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

SessionAnalytics analyze(std::span<const CustomizationEvent> log, const SessionWindow& window) {
  std::vector<const CustomizationEvent*> in_window;
  for (const auto& event : log) {
    if (event.timestamp_ms < window.start_ms) continue;
    if (window.end_ms && event.timestamp_ms > *window.end_ms) continue;
    in_window.push_back(&event);
  }
  std::int64_t end = window.start_ms;
  if (window.end_ms) end = *window.end_ms;
  else for (const auto* event : in_window) end = std::max(end, event->timestamp_ms);
  if (end <= window.start_ms) throw Error(ErrorCode::empty_window, "analysis window has no duration");

  SessionAnalytics result;
  result.total_ops = in_window.size();
  result.duration_minutes = static_cast<double>(end - window.start_ms) / 60000.0;
  result.ops_per_minute = model::Decimal(static_cast<std::int64_t>(in_window.size()) * 60000) /
                          model::Decimal(end - window.start_ms);

  std::set<std::string> content_attrs;
  std::set<std::string> all_attrs;
  std::size_t composition = 0;
  std::size_t layout = 0;
  std::size_t surfaces = 0;
  std::size_t hides = 0;
  for (const auto* event : in_window) {
    const auto& body = event->body;
    all_attrs.insert(body.attrs.begin(), body.attrs.end());
    switch (dimension_of(body.kind)) {
      case Dimension::content: content_attrs.insert(body.attrs.begin(), body.attrs.end()); break;
      case Dimension::composition: ++composition; break;
      case Dimension::layout: ++layout; break;
    }
    if (body.kind == EventKind::surface) {
      ++surfaces;
      for (const auto& a : body.attrs) mark(result.attribute_matrix, a, MatrixCell::surfaced);
    } else if (body.kind == EventKind::hide) {
      ++hides;
      for (const auto& a : body.attrs) mark(result.attribute_matrix, a, MatrixCell::hid);
    } else if (body.kind == EventKind::prompt_synthesis) {
      const auto surfaced = string_list(body.payload.value("surface", json::array()));
      if (!surfaced.empty()) ++surfaces;
      for (const auto& a : surfaced) mark(result.attribute_matrix, a, MatrixCell::surfaced);
      for (const auto& created : body.payload.value("created", json::array())) {
        const auto& descriptor = created.value("descriptor", json::object());
        if (descriptor.value("origin", "source") != "source") {
          result.synthesized_attrs.insert(descriptor.value("id", ""));
        }
      }
    }
  }
  result.synthesized_attrs.erase("");
  result.per_dimension_counts[Dimension::content] = content_attrs.size();
  result.per_dimension_counts[Dimension::composition] = composition;
  result.per_dimension_counts[Dimension::layout] = layout;
  result.distinct_attrs_touched = all_attrs.size();
  if (hides > 0) result.classification = Classification::minimalist;
  else if (surfaces > 0) result.classification = Classification::hoarder;
  return result;
}

json analytics_to_json(const SessionAnalytics& a) {
  json counts = json::object();
  for (const auto& [dimension, count] : a.per_dimension_counts) counts[std::string(to_string(dimension))] = count;
  json matrix = json::object();
  for (const auto& [attr, cell] : a.attribute_matrix) matrix[attr] = to_string(cell);
  return {{"total_ops", a.total_ops},
          {"per_dimension_counts", std::move(counts)},
          {"distinct_attrs_touched", a.distinct_attrs_touched},
          {"duration_minutes", a.duration_minutes},
          {"ops_per_minute", a.ops_per_minute.round_significant(6).to_double()},
          {"classification", to_string(a.classification)},
          {"attribute_matrix", std::move(matrix)},
          {"synthesized_attrs", a.synthesized_attrs}};
}

InteractionMatrix export_matrix(std::span<const SessionMatrixInput> sessions) {
  if (sessions.empty()) throw Error(ErrorCode::invalid_argument, "matrix export needs at least one session");
  InteractionMatrix matrix;
  std::map<std::string, MatrixRow> rows;
  for (std::size_t s = 0; s < sessions.size(); ++s) {
    matrix.sessions.push_back(sessions[s].session_id);
    for (const auto& [attr, cell] : sessions[s].analytics.attribute_matrix) {
      auto& row = rows[attr];
      row.attr = attr;
      row.cells.resize(sessions.size());
      row.cells[s] = cell;
      ++row.session_count;
    }
  }
  for (const auto& session : sessions) {
    for (const auto& attr : session.analytics.synthesized_attrs) {
      if (auto it = rows.find(attr); it != rows.end()) it->second.synthesized = true;
    }
  }
  for (auto& [attr, row] : rows) matrix.rows.push_back(std::move(row));
  std::stable_sort(matrix.rows.begin(), matrix.rows.end(), [](const MatrixRow& a, const MatrixRow& b) {
    if (a.synthesized != b.synthesized) return !a.synthesized;
    if (a.session_count != b.session_count) return a.session_count > b.session_count;
    return a.attr < b.attr;
  });
  return matrix;
}

std::string matrix_to_csv(const InteractionMatrix& matrix) {
  std::string out = "attribute,synthesized";
  for (const auto& s : matrix.sessions) out += "," + csv_field(s);
  out += "\n";
  for (const auto& row : matrix.rows) {
    out += csv_field(row.attr);
    out += row.synthesized ? ",yes" : ",no";
    for (const auto& cell : row.cells) {
      out += ",";
      if (cell) out += to_string(*cell);
    }
    out += "\n";
  }
  return out;
}

}  // namespace malleable::journal
