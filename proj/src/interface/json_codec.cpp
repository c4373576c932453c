#include "carkwork/interface/json_codec.hpp"

#include <algorithm>
#include <charconv>

#include "carkwork/error.hpp"

namespace carkwork::interface {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<Integer> parse_tuple(std::string_view text, std::string_view what) {
  std::vector<Integer> out;
  std::string_view rest = trim(text);
  if (!rest.empty() && rest.front() == '(' && rest.back() == ')') {
    rest = rest.substr(1, rest.size() - 2);
  }
  for (;;) {
    const auto comma = rest.find(',');
    out.push_back(parse_number(trim(rest.substr(0, comma)), what));
    if (comma == std::string_view::npos) {
      break;
    }
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::string word_text(const Word& w) { return w.empty() ? "I" : w.to_string(); }

Json point(Point z) { return Json::array({z.real(), z.imag()}); }

Json points(const std::vector<Point>& zs) {
  Json out = Json::array();
  for (const auto& z : zs) {
    out.push_back(point(z));
  }
  return out;
}

}  // namespace

Integer parse_number(std::string_view text, std::string_view what) {
  try {
    return parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  }
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw UsageError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

QuadForm parse_form(std::string_view text) {
  auto v = parse_tuple(text, "form");
  if (v.size() != 3) {
    throw UsageError("a form is written a,b,c; got '" + std::string(text) + "'");
  }
  return {v[0], v[1], v[2]};
}

GroupElement parse_element(std::string_view text) {
  text = trim(text);
  if (text.find(',') == std::string_view::npos) {
    if (text.empty() || text == "I") {
      return GroupElement::identity();
    }
    return word_to_matrix(Word::parse(text));
  }
  auto v = parse_tuple(text, "matrix");
  if (v.size() != 4) {
    throw UsageError("a matrix is written p,q,r,s; got '" + std::string(text) + "'");
  }
  try {
    return {v[0], v[1], v[2], v[3]};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::variant<QuadForm, GroupElement> parse_form_or_element(std::string_view text) {
  const auto commas = std::count(text.begin(), text.end(), ',');
  if (commas == 2) {
    return parse_form(text);
  }
  return parse_element(text);
}

Json to_json(const QuadForm& f) {
  return {{"a", f.a().str()}, {"b", f.b().str()}, {"c", f.c().str()}};
}

Json to_json(const GroupElement& m) {
  return {{"p", m.p().str()}, {"q", m.q().str()}, {"r", m.r().str()}, {"s", m.s().str()}};
}

Json to_json(const ReductionPath& path) {
  Json steps = Json::array();
  for (const auto& step : path.steps) {
    steps.push_back(to_json(step.form));
  }
  const Letters letters = path.letters();
  return {{"start", to_json(path.start)},
          {"end", to_json(path.end)},
          {"letters", letters.empty() ? "" : to_string(letters)},
          {"matrix", to_json(path.total_matrix)},
          {"steps", std::move(steps)},
          {"negated", path.negated}};
}

Json to_json(const SpineCycle& cycle) {
  Json forms = Json::array();
  for (const auto& f : cycle.forms) {
    forms.push_back(to_json(f));
  }
  return {{"entry", to_json(cycle.forms.front())},
          {"forms", std::move(forms)},
          {"steps", to_string(cycle.steps)},
          {"signature", signature_text(spine_signature(cycle))}};
}

Json to_json(const CarkGraph& graph) {
  Json nodes = Json::array();
  for (const auto& n : graph.nodes) {
    nodes.push_back({{"id", n.id}, {"kind", n.kind == VertexKind::white ? "white" : "black"}});
  }
  Json edges = Json::array();
  for (const auto& e : graph.edges) {
    edges.push_back({{"id", e.id},
                     {"from", e.from},
                     {"to", e.to},
                     {"form", to_json(e.form)},
                     {"on_spine", e.on_spine},
                     {"depth", e.depth},
                     {"marked", e.marked}});
  }
  return {{"nodes", std::move(nodes)},
          {"edges", std::move(edges)},
          {"signature", signature_text(graph.signature)}};
}

Json to_json(const Solution& s) { return Json::array({s.x.str(), s.y.str()}); }

Json exact_json(const Geodesic& g) {
  Json endpoints = Json::array();
  for (const auto& e : g.endpoints) {
    endpoints.push_back({{"rational", to_string(e.rational)},
                         {"coefficient", to_string(e.coefficient)},
                         {"radicand", e.radicand.str()}});
  }
  return {{"center", to_string(g.center)},
          {"radius_squared", to_string(g.radius_squared)},
          {"endpoints", std::move(endpoints)}};
}

Json half_plane_json(const Geodesic& g, std::size_t samples) {
  return {{"model", "h"},
          {"center", Json::array({to_double(g.center), 0.0})},
          {"radius", g.radius()},
          {"endpoints", points({Point(g.endpoints[0].value(), 0.0),
                                Point(g.endpoints[1].value(), 0.0)})},
          {"samples", points(sample_geodesic(g, samples))},
          {"exact", exact_json(g)}};
}

Json disk_json(const Geodesic& g, std::size_t samples) {
  const DiskGeodesic d = to_disk(g);
  return {{"model", "disk"},
          {"center", d.center ? point(*d.center) : Json(nullptr)},
          {"radius", d.center ? Json(d.radius) : Json(nullptr)},
          {"endpoints", points({d.endpoints[0], d.endpoints[1]})},
          {"samples", points(sample_disk_geodesic(g, samples))},
          {"exact", exact_json(g)}};
}

Json layout_json(const std::vector<SunburstCell>& cells, std::size_t depth, const Word& center) {
  Json out = Json::array();
  for (const auto& c : cells) {
    out.push_back({{"word", word_text(c.word)},
                   {"annulus", c.annulus},
                   {"a0", c.angle_start()},
                   {"a1", c.angle_end()},
                   {"parent", c.parent ? Json(*c.parent) : Json(nullptr)}});
  }
  return {{"cells", std::move(out)}, {"depth", depth}, {"center", word_text(center)}};
}

}  // namespace carkwork::interface
