#ifndef WORDMETRICS_CATALOG_HPP_
#define WORDMETRICS_CATALOG_HPP_

#include <string>
#include <vector>

#include "wordmetrics/action.hpp"
#include "wordmetrics/group.hpp"
#include "wordmetrics/product.hpp"
#include "wordmetrics/star_set.hpp"

namespace wordmetrics {

struct CatalogGroup {
  std::string name;
  GroupPtr group;
};

/// One representative of every isomorphism class of groups of order
/// <= max_order (max_order <= 16), in order of size, followed by S4 when
/// `with_s4` is set.
std::vector<CatalogGroup> group_catalog(std::size_t max_order = 16, bool with_s4 = true);

/// A catalog group by its name ("Z6", "S3", "D4", "Q8", "Z4:Z4", "S4", ...).
/// Throws std::invalid_argument listing the names when not found.
GroupPtr catalog_group(const std::string& name);
std::vector<std::string> catalog_names();

/// The normal subgroups of G, as unions of conjugacy classes; at most 24
/// classes.
std::vector<Subset> normal_subgroups(const FiniteGroup& g);

struct QuotientCase {
  std::string name;
  GroupHom f;
};

/// Z12 -> Z4, Z12 -> Z3, S3 -> Z2 and D4 -> Z2 x Z2.
std::vector<QuotientCase> standard_quotients();

/// G -> G/N for every catalog group of order <= max_order and every normal
/// N, the trivial and total ones included.
std::vector<QuotientCase> all_quotients(std::size_t max_order = 16);

/// S3 = Z2 x| A3, with the inversion action.
SemidirectContext s3_semidirect();
/// Direct products as contexts: H x K with trivial action.
SemidirectContext direct_context(const GroupPtr& h, const GroupPtr& k);

/// R3, R4, R5, R6 and the trivial quandle on 3 points.
std::vector<StarSet> quandle_catalog();

/// Small star-sets that are not groups or quandles: a two-operation set, a
/// unital non-associative magma and the max semilattice.
std::vector<StarSet> star_set_catalog();

/// Right translations of Z6, S3 and Z4; S3 on 3 points; Z2 on 3 points
/// with a fixed point; Z4 freely on 4 points; and Inn of R3, R4, R5.
std::vector<GroupAction> action_catalog();

/// S_n acting on {0..n-1}, with element indices of symmetric(n).
GroupAction natural_symmetric_action(std::size_t n);

}  // namespace wordmetrics

#endif  // WORDMETRICS_CATALOG_HPP_
