#include "carkwork/interface/dispatch.hpp"

#include <functional>
#include <limits>
#include <list>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "carkwork/error.hpp"
#include "carkwork/interface/json_codec.hpp"

namespace carkwork::interface {

int Reply::http_status() const {
  switch (status) {
    case Status::ok: return 200;
    case Status::domain_error: return 422;
    case Status::usage_error: return 400;
  }
  return 500;
}

namespace {

constexpr std::size_t default_cark_depth = 2;
constexpr std::size_t default_samples = 64;
constexpr std::size_t max_cark_depth = 16;
constexpr std::size_t max_samples = 100000;

const std::string& required(const Params& params, std::string_view key) {
  auto it = params.find(key);
  if (it == params.end()) {
    throw UsageError("missing parameter '" + std::string(key) + "'");
  }
  return it->second;
}

std::string optional_param(const Params& params, std::string_view key, std::string fallback) {
  auto it = params.find(key);
  return it == params.end() ? std::move(fallback) : it->second;
}

std::size_t count_param(const Params& params, std::string_view key, std::size_t fallback,
                        std::size_t limit) {
  auto it = params.find(key);
  if (it == params.end()) {
    return fallback;
  }
  const std::size_t value = parse_count(it->second, key);
  if (value > limit) {
    throw UsageError(std::string(key) + " must be at most " + std::to_string(limit));
  }
  return value;
}

class CarkCache {
 public:
  explicit CarkCache(std::size_t capacity) : capacity_(capacity) {}

  std::string get_or_compute(const std::string& key, const std::function<std::string()>& compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = index_.find(key); it != index_.end()) {
        order_.splice(order_.begin(), order_, it->second);
        return it->second->second;
      }
    }
    std::string value = compute();
    std::lock_guard lock(mutex_);
    if (index_.find(key) == index_.end()) {
      order_.emplace_front(key, value);
      index_.emplace(key, order_.begin());
      if (order_.size() > capacity_) {
        index_.erase(order_.back().first);
        order_.pop_back();
      }
    }
    return value;
  }

 private:
  using Entry = std::pair<std::string, std::string>;
  std::size_t capacity_;
  std::mutex mutex_;
  std::list<Entry> order_;
  std::unordered_map<std::string, std::list<Entry>::iterator> index_;
};

CarkCache& cark_cache() {
  static CarkCache cache(64);
  return cache;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

std::string op_classify(const Params& params) {
  const auto target = parse_form_or_element(required(params, "target"));
  if (const auto* f = std::get_if<QuadForm>(&target)) {
    return dump({{"class", to_string(classify_form(*f))}});
  }
  return dump({{"class", to_string(classify_element(std::get<GroupElement>(target)))}});
}

std::string op_form_of(const Params& params) {
  const QuadForm f = form_of_element(parse_element(required(params, "element")));
  return dump({{"form", to_json(f)}, {"discriminant", f.discriminant().str()}});
}

std::string op_reduce(const Params& params) {
  const QuadForm f = parse_form(required(params, "form"));
  const std::string method = optional_param(params, "method", "gauss");
  if (method == "gauss") {
    return dump(to_json(gauss_reduce(f)));
  }
  if (method == "cark") {
    return dump(to_json(cark_reduce_path(f)));
  }
  if (method == "lagrange") {
    return dump(to_json(lagrange_reduce(f)));
  }
  throw UsageError("method must be gauss, cark or lagrange; got '" + method + "'");
}

SpineCycle spine_of(const QuadForm& f) {
  return revolve_around_spine(is_on_spine(f) ? f : cark_reduce_path(f).end);
}

std::string op_spine(const Params& params) {
  return dump(to_json(spine_of(parse_form(required(params, "form")))));
}

std::string op_signature(const Params& params) {
  const SpineCycle cycle = spine_of(parse_form(required(params, "form")));
  return dump({{"signature", signature_text(spine_signature(cycle))}});
}

std::string op_path_on_spine(const Params& params) {
  const QuadForm from = parse_form(required(params, "from"));
  const QuadForm to = parse_form(required(params, "to"));
  const Word w = path_on_spine(from, to);
  return dump({{"word", w.to_string()}, {"matrix", to_json(word_to_matrix(w))}});
}

std::string op_solve(const Params& params) {
  const QuadForm f = parse_form(required(params, "form"));
  const Integer n = parse_number(required(params, "n"), "n");
  const std::size_t count = count_param(params, "count", 1, 10000);
  if (count == 0) {
    throw UsageError("count must be positive");
  }
  Json solutions = Json::array();
  const FormClass kind = classify_form(f);
  if (kind == FormClass::positive_definite || kind == FormClass::negative_definite) {
    for (const auto& s : solve_definite(f, n)) {
      solutions.push_back(to_json(s));
    }
    return dump({{"solutions", std::move(solutions)}});
  }
  const SolveReport report = solve_form_report(f, n);
  if (!report.solution) {
    return dump({{"solutions", std::move(solutions)}});
  }
  for (const auto& s : enumerate_solutions(f, n, count)) {
    solutions.push_back(to_json(s));
  }
  return dump({{"solutions", std::move(solutions)},
               {"automorph", to_json(automorph(f))},
               {"path_letters", report.path.empty() ? "I" : report.path.to_string()}});
}

std::string op_geodesic(const Params& params) {
  const auto target = parse_form_or_element(required(params, "form"));
  const Geodesic g = std::holds_alternative<QuadForm>(target)
                         ? geodesic_of_form(std::get<QuadForm>(target))
                         : geodesic_of_element(std::get<GroupElement>(target));
  const std::string model = optional_param(params, "model", "h");
  const std::size_t samples = count_param(params, "samples", default_samples, max_samples);
  if (samples < 2) {
    throw UsageError("samples must be at least 2");
  }
  if (model == "h") {
    return dump(half_plane_json(g, samples));
  }
  if (model == "disk") {
    return dump(disk_json(g, samples));
  }
  throw UsageError("model must be h or disk; got '" + model + "'");
}

std::string op_sunburst(const Params& params) {
  const std::size_t depth =
      count_param(params, "depth", default_sunburst_depth, std::numeric_limits<std::size_t>::max());
  const std::string center_text = optional_param(params, "center", "I");
  const Word center = center_text == "I" ? Word() : Word::parse(center_text);
  return dump(layout_json(recenter(center, depth), depth, center));
}

std::string op_cark(const Params& params) {
  const QuadForm f = parse_form(required(params, "form"));
  const std::size_t depth = count_param(params, "depth", default_cark_depth, max_cark_depth);
  return cark_cache().get_or_compute(f.to_string() + "/" + std::to_string(depth),
                                     [&] { return dump(to_json(expand_cark(f, depth))); });
}

using Handler = std::string (*)(const Params&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> table{
      {"classify", op_classify},
      {"form-of", op_form_of},
      {"reduce", op_reduce},
      {"spine", op_spine},
      {"signature", op_signature},
      {"path-on-spine", op_path_on_spine},
      {"solve", op_solve},
      {"geodesic", op_geodesic},
      {"sunburst", op_sunburst},
      {"cark", op_cark},
  };
  return table;
}

std::string error_body(std::string_view code, std::string_view message) {
  return dump({{"code", code}, {"message", message}});
}

}  // namespace

const std::vector<std::string>& operation_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, handler] : handlers()) {
      out.push_back(name);
    }
    return out;
  }();
  return names;
}

Reply handle(std::string_view op, const Params& params) {
  for (const auto& [name, handler] : handlers()) {
    if (name != op) {
      continue;
    }
    try {
      return {Reply::Status::ok, handler(params)};
    } catch (const UsageError& e) {
      return {Reply::Status::usage_error, error_body("usage", e.what())};
    } catch (const DomainError& e) {
      return {Reply::Status::domain_error, error_body(code_name(e.code()), e.what())};
    }
  }
  return {Reply::Status::usage_error, error_body("usage", "unknown operation '" + std::string(op) + "'")};
}

}  // namespace carkwork::interface
