#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <span>
#include <vector>

#include "malleable/journal/event.hpp"

namespace malleable::journal {

struct EventLogOptions {
  /// fsync after every append instead of only flushing to the OS.
  bool fsync_on_append = false;
};

/// What recovery found in an existing log file.
struct Recovery {
  std::vector<CustomizationEvent> events;
  std::uintmax_t valid_bytes = 0;
  std::uintmax_t dropped_bytes = 0;
};

/// Longest prefix of complete, well-formed, consecutively numbered lines.
/// Never modifies the file. Throws Error(storage_failure) if unreadable.
Recovery scan_log(const std::filesystem::path& path);

/// Events of a log file (its valid prefix).
std::vector<CustomizationEvent> read_log(const std::filesystem::path& path);

/// Append-only NDJSON log for one session. One writer; readers get
/// consistent copies of the appended prefix.
class EventLog {
 public:
  /// In-memory log with no backing file.
  EventLog() = default;

  /// Opens or creates `path`, truncating any torn tail left by a crash.
  /// Throws Error(storage_failure).
  explicit EventLog(std::filesystem::path path, EventLogOptions options = {});
  ~EventLog();

  EventLog(const EventLog&) = delete;
  EventLog& operator=(const EventLog&) = delete;

  /// Requires event.seq == last_seq() + 1 (Error(seq_gap)); the line is
  /// written before the event becomes visible. Error(storage_failure) if
  /// the write fails, in which case nothing is appended.
  void append(const CustomizationEvent& event);

  std::uint64_t last_seq() const;
  std::size_t size() const;
  std::vector<CustomizationEvent> events() const;
  /// Bytes discarded by recovery when the log was opened.
  std::uintmax_t recovered_dropped_bytes() const noexcept { return dropped_; }
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  EventLogOptions options_;
  int fd_ = -1;
  std::uintmax_t dropped_ = 0;
  mutable std::mutex mutex_;
  std::vector<CustomizationEvent> events_;
};

}  // namespace malleable::journal
