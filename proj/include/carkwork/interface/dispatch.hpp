#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace carkwork::interface {

using Params = std::map<std::string, std::string, std::less<>>;

struct Reply {
  enum class Status { ok, domain_error, usage_error };
  Status status;
  std::string body;  // JSON text with a trailing newline

  int exit_code() const { return static_cast<int>(status); }
  int http_status() const;
};

/// Runs one operation. The CLI and the HTTP service both go through here, so
/// identical queries produce identical bytes.
Reply handle(std::string_view op, const Params& params);

/// Names accepted by handle().
const std::vector<std::string>& operation_names();

}  // namespace carkwork::interface
