#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "carkwork/modular_group.hpp"
#include "carkwork/quadratic_forms.hpp"

namespace carkwork {

/// Sequence of turns (L or L2) taken at the black vertices of a spine. Not a
/// normal-form word: consecutive tokens are all rotations.
using Signature = std::vector<Letter>;

/// Space-separated "L" / "LL" tokens.
std::string signature_text(const Signature& signature);

/// The cycle of semi-reduced forms of one cark, in spine order.
///
/// Every spine edge appears once: forms alternate between the two halves of a
/// white vertex (related by S) and the two spine edges of a black vertex
/// (related by L or L2). The orientation is fixed: a form with a > 0 > c is
/// followed by its S-partner, a form with a < 0 < c by its L^k-partner. So
/// steps[i] maps forms[i] to forms[i + 1 mod n].
struct SpineCycle {
  std::vector<QuadForm> forms;
  Letters steps;
  Signature signature;  // the L/L2 entries of `steps`, in order
  std::size_t base_index = 0;
};

/// All spine forms of f's cark, starting at f. Throws not_on_spine.
SpineCycle revolve_around_spine(const QuadForm& f);

/// The signature rotated to its lexicographically least rotation (L < L2).
Signature spine_signature(const SpineCycle& cycle);

/// The spine-walk word from `from` to `to` (L, then L again while the edge is
/// off the spine, then S, repeated). act(word_to_matrix(w), from) == to.
/// path_on_spine(f, f) goes once around the spine.
Word path_on_spine(const QuadForm& from, const QuadForm& to);

/// The word of the inverse element: reversed, with L and L2 swapped.
Word reverse_path(const Word& w);
Letters reverse_path(std::span<const Letter> letters);

enum class VertexKind { white, black };  // valency 2 / valency 3

struct CarkNode {
  std::size_t id;
  VertexKind kind;
};

struct CarkEdge {
  std::size_t id;
  std::size_t from;  // white end
  std::size_t to;    // black end
  QuadForm form;
  bool on_spine;
  std::size_t depth;  // edges away from the spine; 0 on the spine
  bool marked;        // the queried form
};

struct CarkGraph {
  std::vector<CarkNode> nodes;
  std::vector<CarkEdge> edges;
  Signature signature;
};

/// The spine of f's class plus the Farey trees grown `depth` edges off it.
/// If f lies deeper than `depth`, the chain of edges down to f is included.
CarkGraph expand_cark(const QuadForm& f, std::size_t depth);

}  // namespace carkwork
