#include "carkwork/cark.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

#include "carkwork/error.hpp"
#include "carkwork/reduction.hpp"

namespace carkwork {

std::string signature_text(const Signature& signature) {
  std::string out;
  for (Letter letter : signature) {
    if (!out.empty()) {
      out += ' ';
    }
    out += letter == Letter::L2 ? "LL" : "L";
  }
  return out;
}

namespace {

bool off_spine(const QuadForm& f) { return f.a().sign() * f.c().sign() > 0; }

void require_spinal(const QuadForm& f) {
  if (!is_on_spine(f)) {
    throw DomainError(ErrorCode::not_on_spine, f.to_string() + " is not on the spine (a c > 0)");
  }
}

/// Rotation at the black vertex that lands on the other spine edge.
Letter spine_turn(const QuadForm& f) {
  return off_spine(act(Letter::L, f)) ? Letter::L2 : Letter::L;
}

}  // namespace

SpineCycle revolve_around_spine(const QuadForm& f) {
  require_spinal(f);
  SpineCycle cycle;
  cycle.forms.push_back(f);
  QuadForm g = f;
  for (;;) {
    const Letter letter = g.a().sign() > 0 ? Letter::S : spine_turn(g);
    g = act(letter, g);
    cycle.steps.push_back(letter);
    if (letter != Letter::S) {
      cycle.signature.push_back(letter);
    }
    if (g == f) {
      break;
    }
    cycle.forms.push_back(g);
  }
  return cycle;
}

Signature spine_signature(const SpineCycle& cycle) {
  const Signature& sig = cycle.signature;
  const std::size_t n = sig.size();
  std::size_t best = 0;
  for (std::size_t start = 1; start < n; ++start) {
    for (std::size_t i = 0; i < n; ++i) {
      const Letter x = sig[(start + i) % n];
      const Letter y = sig[(best + i) % n];
      if (x != y) {
        if (x < y) {
          best = start;
        }
        break;
      }
    }
  }
  Signature out(sig.begin() + static_cast<std::ptrdiff_t>(best), sig.end());
  out.insert(out.end(), sig.begin(), sig.begin() + static_cast<std::ptrdiff_t>(best));
  return out;
}

Word path_on_spine(const QuadForm& from, const QuadForm& to) {
  require_spinal(from);
  require_spinal(to);
  if (from.discriminant() != to.discriminant()) {
    throw DomainError(ErrorCode::not_on_same_spine,
                      to.to_string() + " has a different discriminant from " + from.to_string());
  }
  auto not_found = [&] {
    return DomainError(ErrorCode::not_on_same_spine,
                       to.to_string() + " is not on the spine of " + from.to_string());
  };
  Letters path;
  QuadForm g = from;
  for (;;) {
    g = act(Letter::L, g);
    if (off_spine(g)) {
      g = act(Letter::L, g);
      path.push_back(Letter::L2);
    } else {
      path.push_back(Letter::L);
    }
    if (g == to) {
      break;
    }
    if (g == from) {
      throw not_found();
    }
    g = act(Letter::S, g);
    path.push_back(Letter::S);
    if (g == to) {
      break;
    }
    if (g == from) {
      throw not_found();
    }
  }
  return Word(std::move(path));
}

Letters reverse_path(std::span<const Letter> letters) {
  Letters out;
  out.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    out.push_back(inverse(*it));
  }
  return out;
}

Word reverse_path(const Word& w) { return Word(reverse_path(w.letters())); }

namespace {

class CarkBuilder {
 public:
  // Returns the edge id; existing edges are reused.
  std::size_t add_edge(const QuadForm& form, bool on_spine) {
    if (auto it = edge_ids_.find(form); it != edge_ids_.end()) {
      return it->second;
    }
    const std::size_t white = node_for(white_key(form), VertexKind::white);
    const std::size_t black = node_for(black_key(form), VertexKind::black);
    const std::size_t id = graph_.edges.size();
    graph_.edges.push_back({id, white, black, form, on_spine, 0, false});
    edge_ids_.emplace(form, id);
    return id;
  }

  bool contains(const QuadForm& form) const { return edge_ids_.count(form) != 0; }

  CarkGraph finish(const QuadForm& marked, Signature signature) {
    assign_depths();
    graph_.edges[edge_ids_.at(marked)].marked = true;
    graph_.signature = std::move(signature);
    return std::move(graph_);
  }

 private:
  static QuadForm white_key(const QuadForm& f) { return std::min(f, act(Letter::S, f)); }

  static QuadForm black_key(const QuadForm& f) {
    return std::min({f, act(Letter::L, f), act(Letter::L2, f)});
  }

  std::size_t node_for(const QuadForm& key, VertexKind kind) {
    auto& ids = kind == VertexKind::white ? white_ids_ : black_ids_;
    if (auto it = ids.find(key); it != ids.end()) {
      return it->second;
    }
    const std::size_t id = graph_.nodes.size();
    graph_.nodes.push_back({id, kind});
    ids.emplace(key, id);
    return id;
  }

  // Breadth-first distance from the spine over edges sharing a vertex.
  void assign_depths() {
    std::vector<std::vector<std::size_t>> incident(graph_.nodes.size());
    for (const auto& e : graph_.edges) {
      incident[e.from].push_back(e.id);
      incident[e.to].push_back(e.id);
    }
    std::vector<std::optional<std::size_t>> depth(graph_.edges.size());
    std::deque<std::size_t> queue;
    for (const auto& e : graph_.edges) {
      if (e.on_spine) {
        depth[e.id] = 0;
        queue.push_back(e.id);
      }
    }
    while (!queue.empty()) {
      const std::size_t id = queue.front();
      queue.pop_front();
      for (std::size_t node : {graph_.edges[id].from, graph_.edges[id].to}) {
        for (std::size_t other : incident[node]) {
          if (!depth[other]) {
            depth[other] = *depth[id] + 1;
            queue.push_back(other);
          }
        }
      }
    }
    for (auto& e : graph_.edges) {
      e.depth = depth[e.id].value_or(0);
    }
  }

  CarkGraph graph_;
  std::map<QuadForm, std::size_t> edge_ids_;
  std::map<QuadForm, std::size_t> white_ids_;
  std::map<QuadForm, std::size_t> black_ids_;
};

}  // namespace

CarkGraph expand_cark(const QuadForm& f, std::size_t depth) {
  require_indefinite(f, "cark expansion");
  const ReductionPath to_spine = cark_reduce_path(f);
  const SpineCycle cycle = revolve_around_spine(to_spine.end);

  CarkBuilder builder;
  for (const auto& g : cycle.forms) {
    builder.add_edge(g, true);
  }

  // Tree edges alternate: odd depth has its white end away from the spine
  // (continue with S), even depth its black end (continue with L and L2).
  std::vector<QuadForm> layer;
  if (depth >= 1) {
    for (const auto& g : cycle.forms) {
      QuadForm root = act(spine_turn(g) == Letter::L ? Letter::L2 : Letter::L, g);
      if (!builder.contains(root)) {
        builder.add_edge(root, false);
        layer.push_back(std::move(root));
      }
    }
  }
  for (std::size_t level = 2; level <= depth; ++level) {
    std::vector<QuadForm> next;
    for (const auto& e : layer) {
      if (level % 2 == 0) {
        next.push_back(act(Letter::S, e));
      } else {
        next.push_back(act(Letter::L, e));
        next.push_back(act(Letter::L2, e));
      }
    }
    for (const auto& e : next) {
      builder.add_edge(e, false);
    }
    layer = std::move(next);
  }

  if (!builder.contains(f)) {
    builder.add_edge(f, false);
    for (const auto& step : to_spine.steps) {
      builder.add_edge(step.form, is_on_spine(step.form));
    }
  }
  return builder.finish(f, spine_signature(cycle));
}

}  // namespace carkwork
