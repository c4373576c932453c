// Command-line front end: one subcommand per operation, JSON on stdout.

#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "carkwork/interface/dispatch.hpp"
#include "carkwork/interface/server.hpp"

namespace {

using carkwork::interface::Params;

struct Field {
  std::string key;
  std::string value;
  CLI::Option* option = nullptr;
};

struct Command {
  std::string name;
  CLI::App* app = nullptr;
  std::vector<std::unique_ptr<Field>> fields;

  void positional(const std::string& key, const std::string& help) {
    auto& f = *fields.emplace_back(std::make_unique<Field>(Field{key, {}}));
    f.option = app->add_option(key, f.value, help)->required();
  }

  void flag(const std::string& names, const std::string& key, const std::string& help) {
    auto& f = *fields.emplace_back(std::make_unique<Field>(Field{key, {}}));
    f.option = app->add_option(names, f.value, help);
  }

  Params params() const {
    Params out;
    for (const auto& f : fields) {
      if (f->option->count() > 0) {
        out[f->key] = f->value;
      }
    }
    return out;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular group, quadratic forms, carks and geodesics"};
  app.require_subcommand(1);

  std::vector<std::unique_ptr<Command>> commands;
  auto add = [&](const std::string& name, const std::string& help) -> Command& {
    auto& c = *commands.emplace_back(std::make_unique<Command>());
    c.name = name;
    c.app = app.add_subcommand(name, help);
    return c;
  };

  add("classify", "class of a form a,b,c or an element p,q,r,s / word")
      .positional("target", "form or element");
  add("form-of", "primitive form of an element").positional("element", "p,q,r,s or word");
  {
    auto& c = add("reduce", "reduce a form");
    c.positional("form", "a,b,c");
    c.flag("--method", "method", "gauss | cark | lagrange");
  }
  add("spine", "spine cycle of a form's cark").positional("form", "a,b,c");
  add("signature", "canonical spine signature").positional("form", "a,b,c");
  {
    auto& c = add("path-on-spine", "spine word between two spine forms");
    c.positional("from", "a,b,c");
    c.positional("to", "a,b,c");
  }
  {
    auto& c = add("solve", "integer solutions of f(x, y) = n");
    c.positional("form", "a,b,c");
    c.positional("n", "target value");
    c.flag("--count", "count", "number of solutions");
  }
  {
    auto& c = add("geodesic", "geodesic of a form or element");
    c.positional("form", "a,b,c or p,q,r,s");
    c.flag("--model", "model", "h | disk");
    c.flag("--samples", "samples", "number of sample points");
  }
  {
    auto& c = add("sunburst", "sunburst cell layout");
    c.flag("--depth", "depth", "outermost annulus");
    c.flag("--center", "center", "word placed at the center");
  }
  {
    auto& c = add("cark", "cark graph around a form");
    c.positional("form", "a,b,c");
    c.flag("--depth", "depth", "tree depth off the spine");
  }

  auto* serve = app.add_subcommand("serve", "run the JSON HTTP service");
  int port = 8080;
  std::string host = "127.0.0.1";
  serve->add_option("--port", port, "port")->check(CLI::Range(1, 65535));
  serve->add_option("--host", host, "address to bind");
  app.add_flag("--json", "JSON output (the only format)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (serve->parsed()) {
    std::cerr << "listening on " << host << ":" << port << "\n";
    return carkwork::interface::serve(host, port) ? 0 : 1;
  }
  for (const auto& c : commands) {
    if (!c->app->parsed()) {
      continue;
    }
    const auto reply = carkwork::interface::handle(c->name, c->params());
    std::cout << reply.body;
    if (reply.status == carkwork::interface::Reply::Status::usage_error) {
      std::cerr << c->app->help();
    }
    return reply.exit_code();
  }
  return 2;
}
