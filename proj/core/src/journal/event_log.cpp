#include "malleable/journal/event_log.hpp"

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>

#include "malleable/error.hpp"

namespace malleable::journal {

namespace fs = std::filesystem;

namespace {

Error storage_error(const std::string& what, const fs::path& path) {
  return Error(ErrorCode::storage_failure, what + " '" + path.string() + "': " + std::strerror(errno));
}

}  // namespace

Recovery scan_log(const fs::path& path) {
  Recovery recovery;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (!fs::exists(path)) return recovery;
    throw storage_error("cannot read log", path);
  }
  const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t pos = 0;
  std::uint64_t last = 0;
  while (pos < data.size()) {
    const auto newline = data.find('\n', pos);
    if (newline == std::string::npos) break;
    CustomizationEvent event;
    try {
      event = event_from_json(nlohmann::json::parse(data.begin() + static_cast<std::ptrdiff_t>(pos),
                                                    data.begin() + static_cast<std::ptrdiff_t>(newline)));
    } catch (const std::exception&) {
      break;
    }
    if (event.seq != last + 1) break;
    last = event.seq;
    recovery.events.push_back(std::move(event));
    pos = newline + 1;
  }
  recovery.valid_bytes = pos;
  recovery.dropped_bytes = data.size() - pos;
  return recovery;
}

std::vector<CustomizationEvent> read_log(const fs::path& path) {
  return scan_log(path).events;
}

EventLog::EventLog(fs::path path, EventLogOptions options) : path_(std::move(path)), options_(options) {
  if (path_.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path_.parent_path(), ec);
  }
  auto recovery = scan_log(path_);
  fd_ = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (fd_ < 0) throw storage_error("cannot open log", path_);
  if (recovery.dropped_bytes > 0) {
    if (::ftruncate(fd_, static_cast<off_t>(recovery.valid_bytes)) != 0) {
      const auto error = storage_error("cannot truncate torn log tail", path_);
      ::close(fd_);
      throw error;
    }
    ::fsync(fd_);
  }
  dropped_ = recovery.dropped_bytes;
  events_ = std::move(recovery.events);
}

EventLog::~EventLog() {
  if (fd_ >= 0) ::close(fd_);
}

void EventLog::append(const CustomizationEvent& event) {
  std::lock_guard lock(mutex_);
  const std::uint64_t last = events_.empty() ? 0 : events_.back().seq;
  if (event.seq != last + 1) {
    throw Error(ErrorCode::seq_gap,
                "expected seq " + std::to_string(last + 1) + ", got " + std::to_string(event.seq));
  }
  if (fd_ >= 0) {
    const std::string line = event_to_json(event).dump() + "\n";
    std::size_t written = 0;
    while (written < line.size()) {
      const auto n = ::write(fd_, line.data() + written, line.size() - written);
      if (n < 0) {
        if (errno == EINTR) continue;
        const auto error = storage_error("cannot append to log", path_);
        // Drop a partial line so the file stays a valid prefix.
        struct stat st {};
        if (written > 0 && ::fstat(fd_, &st) == 0) {
          [[maybe_unused]] const int rc = ::ftruncate(fd_, st.st_size - static_cast<off_t>(written));
        }
        throw error;
      }
      written += static_cast<std::size_t>(n);
    }
    if (options_.fsync_on_append && ::fsync(fd_) != 0) throw storage_error("cannot sync log", path_);
  }
  events_.push_back(event);
}

std::uint64_t EventLog::last_seq() const {
  std::lock_guard lock(mutex_);
  return events_.empty() ? 0 : events_.back().seq;
}

std::size_t EventLog::size() const {
  std::lock_guard lock(mutex_);
  return events_.size();
}

std::vector<CustomizationEvent> EventLog::events() const {
  std::lock_guard lock(mutex_);
  return events_;
}

}  // namespace malleable::journal
