#include "malleable/error.hpp"

namespace malleable {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::malformed_document: return "malformed-document";
    case ErrorCode::schema_violation: return "schema-violation";
    case ErrorCode::duplicate_item_id: return "duplicate-item-id";
    case ErrorCode::unknown_attribute: return "unknown-attribute";
    case ErrorCode::unknown_source_attribute: return "unknown-source-attribute";
    case ErrorCode::unknown_collection: return "unknown-collection";
    case ErrorCode::unknown_view: return "unknown-view";
    case ErrorCode::unknown_item: return "unknown-item";
    case ErrorCode::unknown_link: return "unknown-link";
    case ErrorCode::index_out_of_range: return "index-out-of-range";
    case ErrorCode::binding_kind_mismatch: return "binding-kind-mismatch";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::forbidden: return "forbidden";
    case ErrorCode::nesting_cycle: return "nesting-cycle";
    case ErrorCode::unparseable_response: return "unparseable-response";
    case ErrorCode::provider_failure: return "provider-failure";
    case ErrorCode::seq_gap: return "seq-gap";
    case ErrorCode::storage_failure: return "storage-failure";
    case ErrorCode::empty_window: return "empty-window";
    case ErrorCode::configuration: return "configuration";
    case ErrorCode::unknown_session: return "unknown-session";
    case ErrorCode::seq_conflict: return "seq-conflict";
  }
  return "unknown";
}

}  // namespace malleable
