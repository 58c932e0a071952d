#ifndef WORDMETRICS_SPEC_IO_HPP_
#define WORDMETRICS_SPEC_IO_HPP_

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "wordmetrics/action.hpp"
#include "wordmetrics/group.hpp"
#include "wordmetrics/star_set.hpp"

namespace wordmetrics {

/// A malformed spec.  `where` is a JSON path such as "$.factors[1].n", or
/// "byte N" for a syntax error.
class SpecError : public std::runtime_error {
 public:
  SpecError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Group specs:
///   {"kind":"cyclic","n":6}         {"kind":"dihedral","n":4}   (order 2n)
///   {"kind":"symmetric","n":3}      {"kind":"alternating","n":4}
///   {"kind":"dicyclic","n":2}       {"kind":"catalog","name":"Q8"}
///   {"kind":"table","mul":[[...],...]}            rows of the product table
///   {"kind":"product","factors":[spec, spec]}    index i*|b| + j
///   {"kind":"semidirect","h":spec,"k":spec,"action":[[...],...]}
/// The semidirect action row h lists the image of each K index under
/// k -> h k h^{-1}.
GroupPtr group_from_json(const nlohmann::json& j, const std::string& where = "$");

/// Action specs:
///   {"group":spec,"size":m,"table":[[x a for a in G] for x]}
///   {"group":spec,"perms":[[image of each point] for each element]}
///   {"kind":"translation","group":spec}
///   {"kind":"natural","n":3}                       S_n on n points
///   {"kind":"quandle","quandle":star-spec}         Inn(X) on X
GroupAction action_from_json(const nlohmann::json& j, const std::string& where = "$");

/// Star-set specs:
///   {"size":m,"ops":[table,...],"unital":e}  tables as rows or flat
///   {"kind":"dihedral_quandle","n":5}  {"kind":"trivial_quandle","n":3}
///   {"kind":"group","group":spec}      the group table, unital
StarSet star_set_from_json(const nlohmann::json& j, const std::string& where = "$");

/// Parses an argument that is inline JSON, a path to a JSON file, or (for
/// groups) a bare catalog name such as "S3".
nlohmann::json load_json_argument(const std::string& arg);
GroupPtr parse_group_argument(const std::string& arg);
GroupAction parse_action_argument(const std::string& arg);
StarSet parse_star_set_argument(const std::string& arg);

}  // namespace wordmetrics

#endif  // WORDMETRICS_SPEC_IO_HPP_
