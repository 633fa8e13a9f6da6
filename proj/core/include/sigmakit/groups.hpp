#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sigmakit/bitset.hpp"
#include "sigmakit/config.hpp"
#include "sigmakit/errors.hpp"

namespace sigmakit {

using Elem = std::uint16_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Finite group given by its full multiplication table. Element 0 is the
/// identity in every construction; orderings are canonical so that all
/// downstream output is byte-stable.
class FiniteGroup {
public:
  static GroupPtr cyclic(int n);
  static GroupPtr klein4();
  /// Direct product, elements ordered lexicographically (first factor most
  /// significant).
  static GroupPtr product(const std::vector<GroupPtr>& factors);
  /// Explicit table; rows are validated exhaustively (identity, inverses,
  /// Latin square, associativity).
  static GroupPtr from_table(const std::vector<std::vector<Elem>>& rows,
                             const std::string& name = "table");
  /// Group generated by permutations of {0..degree-1}; elements are the
  /// closure, sorted lexicographically (identity first).
  static GroupPtr from_permutations(const std::vector<std::vector<Elem>>& gens,
                                    int degree, const std::string& name = "perm");

  /// Internal constructor for groups materialized from already-validated
  /// structures (block sets, quotients). Runs the full axiom check only for
  /// small orders.
  static GroupPtr from_raw(std::vector<Elem> table, int order, std::string name);

  int order() const { return order_; }
  Elem mul(Elem a, Elem b) const { return table_[std::size_t(a) * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  static constexpr Elem kIdentity = 0;

  int element_order(Elem a) const;
  bool is_abelian() const;
  const std::string& name() const { return name_; }

  /// Full axiom check: identity laws, inverse existence, Latin square,
  /// associativity over all triples. Throws NotAGroup.
  void validate() const;

private:
  FiniteGroup() = default;
  void finish();  // computes inverses, checks identity/inverse laws

  int order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::string name_;
};

struct Subgroup {
  GroupPtr parent;
  Bitset members;

  std::size_t size() const { return members.count(); }
  bool contains(Elem e) const { return members.test(e); }
};

/// Group homomorphism as an image array over source element indices.
struct GroupHom {
  GroupPtr source;
  GroupPtr target;
  std::vector<Elem> images;

  Elem operator()(Elem e) const { return images[e]; }
  /// Throws NonHomomorphicRule unless images respect products and identity.
  void validate() const;
  bool is_bijective() const;
  bool is_endomorphism_trivial() const;  // all images are the identity
};

GroupHom identity_hom(const GroupPtr& g);
GroupHom compose_homs(const GroupHom& outer, const GroupHom& inner);

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Elem>& elems);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);
bool is_subgroup(const Subgroup& s);
bool is_normal(const Subgroup& s);

struct QuotientResult {
  GroupPtr group;      // coset group, representatives = minimal element index
  GroupHom projection; // parent -> quotient
};
/// Throws NotNormal. Canonical coset order: by minimal member index.
QuotientResult quotient_group(const GroupPtr& g, const Subgroup& n);

struct NormalInventory {
  std::vector<Subgroup> subgroups;  // ordered by (size, lexicographic bitset)
  bool simple = false;              // exactly two normal subgroups
};
/// All normal subgroups via joins of single-element normal closures.
/// Throws SizeLimit when |g| exceeds the bound.
NormalInventory normal_subgroup_inventory(const GroupPtr& g,
                                          int bound = config().inventory_bound);
/// Simplicity check without the full inventory (normal closure per class).
bool is_simple_group(const GroupPtr& g);

/// Isomorphism search: element-order census pruning plus generator
/// backtracking. `accept` can reject candidate isomorphisms (used for
/// sigma-equivariant and Galois-equivariant refinements); the first accepted
/// map in deterministic order is returned.
std::optional<GroupHom> find_isomorphism(
    const GroupPtr& g, const GroupPtr& h,
    const std::function<bool(const GroupHom&)>& accept = {},
    int bound = config().inventory_bound);

/// Extends a partial map (prescribed on the subgroup generated by the given
/// pairs) to a homomorphism g -> h; first extension in deterministic order.
std::optional<GroupHom> extend_hom(const GroupPtr& g, const GroupPtr& h,
                                   const std::vector<std::pair<Elem, Elem>>& forced);

/// Enumerates every homomorphism g -> h in deterministic order.
void for_each_hom(const GroupPtr& g, const GroupPtr& h,
                  const std::function<void(const GroupHom&)>& f);

}  // namespace sigmakit
