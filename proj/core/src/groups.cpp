#include "sigmakit/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace sigmakit {

namespace {

void check_order_bound(long long n) {
  if (n < 1) throw NotAGroup("group order must be positive");
  if (n > config().group_bound)
    throw SizeLimit("group order " + std::to_string(n) + " exceeds bound " +
                    std::to_string(config().group_bound));
}

}  // namespace

void FiniteGroup::finish() {
  const int n = order_;
  if (static_cast<std::size_t>(n) * n != table_.size())
    throw NotAGroup("table size does not match order");
  // identity laws
  for (int a = 0; a < n; ++a) {
    if (mul(0, Elem(a)) != a || mul(Elem(a), 0) != a)
      throw NotAGroup("element 0 is not an identity in " + name_);
  }
  // Latin square
  std::vector<char> seen(n);
  for (int a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      Elem v = mul(Elem(a), Elem(b));
      if (v >= n || seen[v]) throw NotAGroup("row " + std::to_string(a) + " is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n; ++b) {
      Elem v = mul(Elem(b), Elem(a));
      if (v >= n || seen[v]) throw NotAGroup("column " + std::to_string(a) + " is not a permutation");
      seen[v] = 1;
    }
  }
  // inverses
  inverse_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n; ++b) {
      if (mul(Elem(a), Elem(b)) == 0) {
        if (mul(Elem(b), Elem(a)) != 0)
          throw NotAGroup("one-sided inverse for element " + std::to_string(a));
        inverse_[a] = Elem(b);
        found = true;
        break;
      }
    }
    if (!found) throw NotAGroup("no inverse for element " + std::to_string(a));
  }
}

void FiniteGroup::validate() const {
  const int n = order_;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Elem ab = mul(Elem(a), Elem(b));
      for (int c = 0; c < n; ++c)
        if (mul(ab, Elem(c)) != mul(Elem(a), mul(Elem(b), Elem(c))))
          throw NotAGroup("associativity fails at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");
    }
}

GroupPtr FiniteGroup::from_raw(std::vector<Elem> table, int order, std::string name) {
  check_order_bound(order);
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = order;
  g->table_ = std::move(table);
  g->name_ = std::move(name);
  g->finish();
  if (order <= 256) g->validate();
  return g;
}

GroupPtr FiniteGroup::cyclic(int n) {
  check_order_bound(n);
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[std::size_t(a) * n + b] = Elem((a + b) % n);
  return from_raw(std::move(t), n, "C" + std::to_string(n));
}

GroupPtr FiniteGroup::klein4() {
  std::vector<Elem> t(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[std::size_t(a) * 4 + b] = Elem(a ^ b);
  return from_raw(std::move(t), 4, "V4");
}

GroupPtr FiniteGroup::product(const std::vector<GroupPtr>& factors) {
  if (factors.empty()) return cyclic(1);
  long long n = 1;
  for (const auto& f : factors) {
    n *= f->order();
    check_order_bound(n);
  }
  const int order = static_cast<int>(n);
  const int k = static_cast<int>(factors.size());
  std::vector<int> radix(k);
  for (int i = 0; i < k; ++i) radix[i] = factors[i]->order();

  auto decode = [&](int idx, std::vector<int>& out) {
    for (int i = k - 1; i >= 0; --i) {
      out[i] = idx % radix[i];
      idx /= radix[i];
    }
  };
  std::vector<Elem> t(static_cast<std::size_t>(order) * order);
  std::vector<int> da(k), db(k);
  for (int a = 0; a < order; ++a) {
    decode(a, da);
    for (int b = 0; b < order; ++b) {
      decode(b, db);
      int idx = 0;
      for (int i = 0; i < k; ++i)
        idx = idx * radix[i] + factors[i]->mul(Elem(da[i]), Elem(db[i]));
      t[std::size_t(a) * order + b] = Elem(idx);
    }
  }
  std::string name = factors[0]->name();
  for (int i = 1; i < k; ++i) name += "x" + factors[i]->name();
  return from_raw(std::move(t), order, name);
}

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<Elem>>& rows,
                                 const std::string& name) {
  const int n = static_cast<int>(rows.size());
  check_order_bound(n);
  std::vector<Elem> t;
  t.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw NotAGroup("ragged table");
    for (Elem e : row) t.push_back(e);
  }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->order_ = n;
  g->table_ = std::move(t);
  g->name_ = name;
  g->finish();
  g->validate();  // untrusted input: always the full check
  return g;
}

GroupPtr FiniteGroup::from_permutations(const std::vector<std::vector<Elem>>& gens,
                                        int degree, const std::string& name) {
  using Perm = std::vector<Elem>;
  Perm id(degree);
  std::iota(id.begin(), id.end(), Elem(0));
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree) throw NotAGroup("permutation degree mismatch");
    std::vector<char> seen(degree, 0);
    for (Elem v : p) {
      if (v >= degree || seen[v]) throw NotAGroup("generator is not a permutation");
      seen[v] = 1;
    }
  }
  auto compose = [&](const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
    Perm c(degree);
    for (int x = 0; x < degree; ++x) c[x] = a[b[x]];
    return c;
  };
  std::set<Perm> closure{id};
  std::vector<Perm> queue{id};
  for (const auto& p : gens)
    if (closure.insert(p).second) queue.push_back(p);
  while (!queue.empty()) {
    Perm x = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : gens) {
      for (const Perm& y : {compose(x, g), compose(g, x)}) {
        if (closure.insert(y).second) {
          check_order_bound(static_cast<long long>(closure.size()));
          queue.push_back(y);
        }
      }
    }
  }
  std::vector<Perm> elems(closure.begin(), closure.end());  // lex order, identity first
  const int n = static_cast<int>(elems.size());
  std::map<Perm, Elem> index;
  for (int i = 0; i < n; ++i) index[elems[i]] = Elem(i);
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[std::size_t(a) * n + b] = index.at(compose(elems[a], elems[b]));
  return from_raw(std::move(t), n, name);
}

int FiniteGroup::element_order(Elem a) const {
  int k = 1;
  Elem x = a;
  while (x != kIdentity) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(Elem(a), Elem(b)) != mul(Elem(b), Elem(a))) return false;
  return true;
}

void GroupHom::validate() const {
  if (static_cast<int>(images.size()) != source->order())
    throw NonHomomorphicRule("image array size mismatch");
  for (Elem v : images)
    if (v >= target->order()) throw NonHomomorphicRule("image out of range");
  if (images[FiniteGroup::kIdentity] != FiniteGroup::kIdentity)
    throw NonHomomorphicRule("identity not mapped to identity");
  const int n = source->order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (images[source->mul(Elem(a), Elem(b))] != target->mul(images[a], images[b]))
        throw NonHomomorphicRule("rule is not multiplicative at (" + std::to_string(a) +
                                 "," + std::to_string(b) + ")");
}

bool GroupHom::is_bijective() const {
  if (source->order() != target->order()) return false;
  std::vector<char> seen(target->order(), 0);
  for (Elem v : images) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool GroupHom::is_endomorphism_trivial() const {
  for (Elem v : images)
    if (v != FiniteGroup::kIdentity) return false;
  return true;
}

GroupHom identity_hom(const GroupPtr& g) {
  GroupHom h{g, g, std::vector<Elem>(g->order())};
  std::iota(h.images.begin(), h.images.end(), Elem(0));
  return h;
}

GroupHom compose_homs(const GroupHom& outer, const GroupHom& inner) {
  GroupHom h{inner.source, outer.target, std::vector<Elem>(inner.images.size())};
  for (std::size_t i = 0; i < inner.images.size(); ++i)
    h.images[i] = outer.images[inner.images[i]];
  return h;
}

Subgroup subgroup_generated(const GroupPtr& g, const std::vector<Elem>& elems) {
  Bitset members(g->order());
  members.set(FiniteGroup::kIdentity);
  std::vector<Elem> queue{FiniteGroup::kIdentity};
  auto add = [&](Elem e) {
    if (!members.test(e)) {
      members.set(e);
      queue.push_back(e);
    }
  };
  for (Elem e : elems) add(e);
  while (!queue.empty()) {
    Elem x = queue.back();
    queue.pop_back();
    for (Elem gen : elems) {
      add(g->mul(x, gen));
      add(g->mul(gen, x));
    }
  }
  return Subgroup{g, std::move(members)};
}

Subgroup trivial_subgroup(const GroupPtr& g) {
  Bitset b(g->order());
  b.set(FiniteGroup::kIdentity);
  return Subgroup{g, std::move(b)};
}

Subgroup full_subgroup(const GroupPtr& g) {
  Bitset b(g->order());
  for (int i = 0; i < g->order(); ++i) b.set(i);
  return Subgroup{g, std::move(b)};
}

bool is_subgroup(const Subgroup& s) {
  if (!s.members.test(FiniteGroup::kIdentity)) return false;
  const auto& g = *s.parent;
  auto elems = s.members.elements();
  for (auto a : elems) {
    if (!s.members.test(g.inv(Elem(a)))) return false;
    for (auto b : elems)
      if (!s.members.test(g.mul(Elem(a), Elem(b)))) return false;
  }
  return true;
}

bool is_normal(const Subgroup& s) {
  const auto& g = *s.parent;
  auto elems = s.members.elements();
  for (int x = 0; x < g.order(); ++x)
    for (auto n : elems)
      if (!s.members.test(g.mul(g.mul(Elem(x), Elem(n)), g.inv(Elem(x))))) return false;
  return true;
}

QuotientResult quotient_group(const GroupPtr& g, const Subgroup& n) {
  if (n.parent.get() != g.get()) throw InvariantViolation("subgroup parent mismatch");
  if (!is_normal(n)) throw NotNormal("subgroup is not normal in " + g->name());
  const int order = g->order();
  auto nelems = n.members.elements();
  std::vector<int> coset(order, -1);
  std::vector<Elem> reps;
  for (int e = 0; e < order; ++e) {
    if (coset[e] != -1) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(Elem(e));
    for (auto x : nelems) coset[g->mul(Elem(e), Elem(x))] = id;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<Elem> table(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      table[std::size_t(a) * q + b] = Elem(coset[g->mul(reps[a], reps[b])]);
  GroupPtr quot = FiniteGroup::from_raw(std::move(table), q, g->name() + "/N");
  GroupHom proj{g, quot, {}};
  proj.images.resize(order);
  for (int e = 0; e < order; ++e) proj.images[e] = Elem(coset[e]);
  return QuotientResult{quot, std::move(proj)};
}

namespace {

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<Elem>> classes;
  for (int e = 0; e < n; ++e) {
    if (cls[e] != -1) continue;
    int id = static_cast<int>(classes.size());
    classes.emplace_back();
    std::vector<Elem> queue{Elem(e)};
    cls[e] = id;
    classes[id].push_back(Elem(e));
    while (!queue.empty()) {
      Elem x = queue.back();
      queue.pop_back();
      for (int h = 0; h < n; ++h) {
        Elem y = g.mul(g.mul(Elem(h), x), g.inv(Elem(h)));
        if (cls[y] == -1) {
          cls[y] = id;
          classes[id].push_back(y);
          queue.push_back(y);
        }
      }
    }
  }
  return classes;
}

}  // namespace

NormalInventory normal_subgroup_inventory(const GroupPtr& g, int bound) {
  if (g->order() > bound)
    throw SizeLimit("normal subgroup inventory limited to order " + std::to_string(bound));
  auto classes = conjugacy_classes(*g);

  std::vector<Subgroup> found;
  auto push_unique = [&](Subgroup s) {
    for (const auto& t : found)
      if (t.members == s.members) return false;
    found.push_back(std::move(s));
    return true;
  };
  push_unique(trivial_subgroup(g));
  for (const auto& c : classes) push_unique(subgroup_generated(g, c));

  // close under joins; every normal subgroup is a join of single-element
  // normal closures
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < found.size(); ++i)
      for (std::size_t j = i + 1; j < found.size(); ++j) {
        Bitset u = found[i].members;
        u |= found[j].members;
        if (u == found[i].members || u == found[j].members) continue;
        std::vector<Elem> gens;
        u.for_each([&](std::size_t e) { gens.push_back(Elem(e)); });
        if (push_unique(subgroup_generated(g, gens))) changed = true;
      }
  }

  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    auto ca = a.members.count(), cb = b.members.count();
    if (ca != cb) return ca < cb;
    return a.members.lex_less(b.members);
  });
  NormalInventory inv;
  inv.subgroups = std::move(found);
  inv.simple = inv.subgroups.size() == 2;
  return inv;
}

bool is_simple_group(const GroupPtr& g) {
  if (g->order() <= 1) return false;
  auto classes = conjugacy_classes(*g);
  for (const auto& c : classes) {
    if (c.size() == 1 && c[0] == FiniteGroup::kIdentity) continue;
    auto closure = subgroup_generated(g, c);
    if (static_cast<int>(closure.size()) != g->order()) return false;
  }
  return true;
}

namespace {

// Backtracking engine shared by isomorphism search, hom extension and hom
// enumeration. Images are assigned generator by generator; the span of the
// assigned generators is rebuilt with edge-consistency checks.
struct HomSearch {
  const FiniteGroup& g;
  const FiniteGroup& h;
  std::vector<Elem> gens;
  std::vector<Elem> gen_img;
  bool require_bijective = false;
  const std::function<bool(const GroupHom&)>* accept = nullptr;
  const std::function<void(const GroupHom&)>* visit = nullptr;  // enumeration mode
  GroupPtr gp, hp;
  std::optional<GroupHom> result;

  // images over the span of assigned generators; -1 = undefined
  bool build_span(std::vector<int>& img) const {
    img.assign(g.order(), -1);
    img[FiniteGroup::kIdentity] = FiniteGroup::kIdentity;
    std::vector<Elem> known{FiniteGroup::kIdentity};
    for (std::size_t i = 0; i < known.size(); ++i) {
      Elem x = known[i];
      for (std::size_t k = 0; k < gen_img.size(); ++k) {
        Elem y = g.mul(x, gens[k]);
        Elem iy = h.mul(Elem(img[x]), gen_img[k]);
        if (img[y] == -1) {
          img[y] = iy;
          known.push_back(y);
        } else if (img[y] != iy) {
          return false;
        }
      }
    }
    return true;
  }

  bool done(const std::vector<int>& img) const {
    for (int v : img)
      if (v == -1) return false;
    return true;
  }

  bool emit(const std::vector<int>& img) {
    GroupHom hom{gp, hp, {}};
    hom.images.assign(img.begin(), img.end());
    if (require_bijective && !hom.is_bijective()) return false;
    if (visit) {
      (*visit)(hom);
      return false;  // keep enumerating
    }
    if (accept && *accept && !(*accept)(hom)) return false;
    result = std::move(hom);
    return true;
  }

  bool run(std::size_t depth) {
    std::vector<int> img;
    if (!build_span(img)) return false;
    if (done(img)) return emit(img);
    if (depth >= gens.size()) return false;
    Elem gen = gens[depth];
    int go = g.element_order(gen);
    for (int cand = 0; cand < h.order(); ++cand) {
      int ho = h.element_order(Elem(cand));
      if (require_bijective ? (ho != go) : (go % ho != 0)) continue;
      gen_img.push_back(Elem(cand));
      bool stop = run(depth + 1);
      gen_img.pop_back();
      if (stop) return true;
    }
    return false;
  }
};

std::vector<Elem> generating_sequence(const FiniteGroup& g) {
  std::vector<Elem> gens;
  Subgroup span = subgroup_generated(
      std::shared_ptr<const FiniteGroup>(&g, [](const FiniteGroup*) {}), {});
  // note: span recomputed below against a proper shared handle; this seed is
  // only used for the size bookkeeping
  std::vector<Elem> chosen;
  Bitset covered(g.order());
  covered.set(FiniteGroup::kIdentity);
  while (covered.count() < static_cast<std::size_t>(g.order())) {
    for (int e = 1; e < g.order(); ++e) {
      if (covered.test(e)) continue;
      chosen.push_back(Elem(e));
      break;
    }
    // rebuild closure over chosen
    Bitset nb(g.order());
    nb.set(FiniteGroup::kIdentity);
    std::vector<Elem> queue{FiniteGroup::kIdentity};
    auto add = [&](Elem x) {
      if (!nb.test(x)) {
        nb.set(x);
        queue.push_back(x);
      }
    };
    for (Elem c : chosen) add(c);
    while (!queue.empty()) {
      Elem x = queue.back();
      queue.pop_back();
      for (Elem c : chosen) {
        add(g.mul(x, c));
        add(g.mul(c, x));
      }
    }
    covered = nb;
  }
  return chosen;
}

std::vector<int> order_census(const FiniteGroup& g) {
  std::vector<int> census;
  census.reserve(g.order());
  for (int e = 0; e < g.order(); ++e) census.push_back(g.element_order(Elem(e)));
  std::sort(census.begin(), census.end());
  return census;
}

}  // namespace

std::optional<GroupHom> find_isomorphism(const GroupPtr& g, const GroupPtr& h,
                                         const std::function<bool(const GroupHom&)>& accept,
                                         int bound) {
  if (g->order() > bound || h->order() > bound)
    throw SizeLimit("isomorphism search limited to order " + std::to_string(bound));
  if (g->order() != h->order()) return std::nullopt;
  if (order_census(*g) != order_census(*h)) return std::nullopt;
  HomSearch s{*g, *h, generating_sequence(*g), {}, true, &accept, nullptr, g, h, {}};
  s.run(0);
  return s.result;
}

std::optional<GroupHom> extend_hom(const GroupPtr& g, const GroupPtr& h,
                                   const std::vector<std::pair<Elem, Elem>>& forced) {
  // generators: forced pairs first, then greedy completion
  HomSearch s{*g, *h, {}, {}, false, nullptr, nullptr, g, h, {}};
  for (const auto& [a, b] : forced) {
    s.gens.push_back(a);
    s.gen_img.push_back(b);
  }
  {
    std::vector<int> img;
    if (!s.build_span(img)) return std::nullopt;  // forced part is inconsistent
    // extend the generator list until the whole group is covered
    while (true) {
      int missing = -1;
      for (int e = 0; e < g->order(); ++e)
        if (img[e] == -1) {
          missing = e;
          break;
        }
      if (missing == -1) break;
      s.gens.push_back(Elem(missing));
      // mark everything it now could reach as covered for the scan; actual
      // images come from the search
      std::vector<Elem> all;
      for (std::size_t i = 0; i < s.gens.size(); ++i) all.push_back(s.gens[i]);
      auto span = subgroup_generated(g, all);
      for (int e = 0; e < g->order(); ++e)
        if (span.contains(Elem(e)) && img[e] == -1) img[e] = -2;  // reachable
    }
  }
  const std::size_t fixed = forced.size();
  // depth starts after the forced prefix
  std::function<bool(std::size_t)> rec = [&](std::size_t depth) -> bool {
    std::vector<int> img;
    if (!s.build_span(img)) return false;
    if (s.done(img)) return s.emit(img);
    if (depth >= s.gens.size()) return false;
    Elem gen = s.gens[depth];
    int go = g->element_order(gen);
    for (int cand = 0; cand < h->order(); ++cand) {
      if (go % h->element_order(Elem(cand)) != 0) continue;
      s.gen_img.push_back(Elem(cand));
      bool stop = rec(depth + 1);
      s.gen_img.pop_back();
      if (stop) return true;
    }
    return false;
  };
  rec(fixed);
  return s.result;
}

void for_each_hom(const GroupPtr& g, const GroupPtr& h,
                  const std::function<void(const GroupHom&)>& f) {
  HomSearch s{*g, *h, generating_sequence(*g), {}, false, nullptr, &f, g, h, {}};
  s.run(0);
}

}  // namespace sigmakit
