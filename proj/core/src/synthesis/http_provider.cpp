#include "malleable/synthesis/http_provider.hpp"

#include <charconv>
#include <cstdlib>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "malleable/error.hpp"

namespace malleable::synthesis {

HttpProvider::HttpProvider(HttpProviderConfig config) : config_(std::move(config)) {
  constexpr std::string_view kScheme = "http://";
  std::string_view url = config_.base_url;
  if (url.substr(0, kScheme.size()) != kScheme) {
    throw Error(ErrorCode::configuration, "provider base_url must start with http:// ('" + config_.base_url + "')");
  }
  url.remove_prefix(kScheme.size());
  const auto slash = url.find('/');
  std::string_view authority = url.substr(0, slash);
  path_ = slash == std::string_view::npos ? "/" : std::string(url.substr(slash));
  const auto colon = authority.find(':');
  host_ = std::string(authority.substr(0, colon));
  if (colon != std::string_view::npos) {
    const auto digits = authority.substr(colon + 1);
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), port_);
    if (ec != std::errc() || end != digits.data() + digits.size() || port_ < 1 || port_ > 65535) {
      throw Error(ErrorCode::configuration, "bad port in provider base_url '" + config_.base_url + "'");
    }
  }
  if (host_.empty()) throw Error(ErrorCode::configuration, "provider base_url has no host");
}

std::string HttpProvider::complete(const std::string& prompt) const {
  httplib::Client client(host_, port_);
  const auto seconds = static_cast<time_t>(config_.timeout.count());
  client.set_connection_timeout(seconds, 0);
  client.set_read_timeout(seconds, 0);
  client.set_write_timeout(seconds, 0);
  httplib::Headers headers;
  if (!config_.api_key_env.empty()) {
    if (const char* key = std::getenv(config_.api_key_env.c_str())) {
      headers.emplace("Authorization", std::string("Bearer ") + key);
    }
  }
  const nlohmann::json body{{"model", config_.model}, {"prompt", prompt}};
  auto response = client.Post(path_, headers, body.dump(), "application/json");
  if (!response) {
    throw Error(ErrorCode::provider_failure, "provider request failed: " + httplib::to_string(response.error()));
  }
  if (response->status < 200 || response->status >= 300) {
    throw Error(ErrorCode::provider_failure, "provider answered HTTP " + std::to_string(response->status));
  }
  try {
    return nlohmann::json::parse(response->body).at("text").get<std::string>();
  } catch (const std::exception& e) {
    throw Error(ErrorCode::provider_failure, std::string("provider response lacks a text field: ") + e.what());
  }
}

std::string HttpProvider::resolve_name(const std::string& user_prompt, const std::string& item_context) const {
  return complete(render_resolve_prompt(item_context, user_prompt));
}

std::string HttpProvider::generate_value(const std::string& attr_name, const std::string& attr_prompt,
                                         const std::string& item_context) const {
  return complete(render_generate_prompt(item_context, attr_name, attr_prompt));
}

std::string HttpProvider::transform_value(const std::string& attr_name, const std::string& original_value,
                                          const std::string& user_prompt, const std::string& item_context,
                                          const TransformExample& example) const {
  return complete(render_transform_prompt(item_context, example, attr_name, original_value, user_prompt));
}

}  // namespace malleable::synthesis
