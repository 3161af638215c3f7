#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace malleable {

enum class ErrorCode {
  malformed_document,
  schema_violation,
  duplicate_item_id,
  unknown_attribute,
  unknown_source_attribute,
  unknown_collection,
  unknown_view,
  unknown_item,
  unknown_link,
  index_out_of_range,
  binding_kind_mismatch,
  invalid_argument,
  forbidden,
  nesting_cycle,
  unparseable_response,
  provider_failure,
  seq_gap,
  storage_failure,
  empty_window,
  configuration,
  unknown_session,
  seq_conflict,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the engine carries a machine-readable code; the
/// service maps codes to HTTP statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace malleable
