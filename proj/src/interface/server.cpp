#include "carkwork/interface/server.hpp"

#include "carkwork/interface/dispatch.hpp"

namespace carkwork::interface {

void mount_routes(httplib::Server& server) {
  for (const auto& op : operation_names()) {
    server.Get("/" + op, [op](const httplib::Request& req, httplib::Response& res) {
      Params params;
      for (const auto& [key, value] : req.params) {
        params[key] = value;
      }
      const Reply reply = handle(op, params);
      res.status = reply.http_status();
      res.set_content(reply.body, "application/json");
    });
  }
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      res.set_content("{\"code\":\"usage\",\"message\":\"no such endpoint\"}\n", "application/json");
    }
  });
}

bool serve(const std::string& host, int port) {
  httplib::Server server;
  mount_routes(server);
  return server.listen(host, port);
}

}  // namespace carkwork::interface
