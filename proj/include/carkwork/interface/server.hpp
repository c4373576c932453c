#pragma once

#include <string>

#include <httplib.h>

namespace carkwork::interface {

/// Adds GET /<op>?<params> for every operation.
void mount_routes(httplib::Server& server);

/// Serves until the process exits. Returns false if the port could not be bound.
bool serve(const std::string& host, int port);

}  // namespace carkwork::interface
