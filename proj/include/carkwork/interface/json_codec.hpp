#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "carkwork/cark.hpp"
#include "carkwork/geometry.hpp"
#include "carkwork/modular_group.hpp"
#include "carkwork/quadratic_forms.hpp"
#include "carkwork/reduction.hpp"
#include "carkwork/representation.hpp"
#include "carkwork/sunburst.hpp"

namespace carkwork::interface {

using Json = nlohmann::ordered_json;

/// Malformed request text (exit code 2 / HTTP 400).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "a,b,c" with optional spaces.
QuadForm parse_form(std::string_view text);

/// "p,q,r,s" (determinant 1) or a word over S and L.
GroupElement parse_element(std::string_view text);

/// A form triple or a group element, told apart by the number of entries.
std::variant<QuadForm, GroupElement> parse_form_or_element(std::string_view text);

Integer parse_number(std::string_view text, std::string_view what);
std::size_t parse_count(std::string_view text, std::string_view what);

Json to_json(const QuadForm& f);
Json to_json(const GroupElement& m);
Json to_json(const ReductionPath& path);
Json to_json(const SpineCycle& cycle);
Json to_json(const CarkGraph& graph);
Json to_json(const Solution& s);
Json exact_json(const Geodesic& g);
Json half_plane_json(const Geodesic& g, std::size_t samples);
Json disk_json(const Geodesic& g, std::size_t samples);
Json layout_json(const std::vector<SunburstCell>& cells, std::size_t depth, const Word& center);

}  // namespace carkwork::interface
