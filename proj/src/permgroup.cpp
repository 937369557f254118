#include "projlens/permgroup.hpp"

#include <stdexcept>

namespace projlens {

Perm perm_identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

bool perm_is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<std::int32_t>(i)) return false;
  return true;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
  return out;
}

Perm perm_inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<std::int32_t>(i);
  return out;
}

PermGroup::PermGroup(int domain_size) : n_(domain_size) {}

Perm PermGroup::transversal(const Level& l, int point) const {
  std::vector<int> path;  // gen indices along base -> point
  int x = point;
  while (x != l.base) {
    path.push_back(l.via[x]);
    x = l.parent[x];
  }
  Perm u = perm_identity(n_);
  for (auto it = path.rbegin(); it != path.rend(); ++it) u = perm_compose(l.gens[*it], u);
  return u;
}

int PermGroup::sift(Perm& g, int from) const {
  for (std::size_t lvl = from; lvl < levels_.size(); ++lvl) {
    if (perm_is_identity(g)) return static_cast<int>(lvl);
    const Level& l = levels_[lvl];
    const int x = g[l.base];
    if (x == l.base) continue;
    if (l.pos[x] < 0) return static_cast<int>(lvl);
    g = perm_compose(perm_inverse(transversal(l, x)), g);
  }
  return static_cast<int>(levels_.size());
}

void PermGroup::extend_orbit(Level& l, int new_gen) {
  // seed with points reachable from the existing orbit via the new
  // generator, then close under all generators
  std::deque<int> frontier;
  const std::size_t old_count = l.orbit.size();
  if (new_gen >= 0) {
    for (std::size_t i = 0; i < old_count; ++i) {
      const int y = l.gens[new_gen][l.orbit[i]];
      if (l.pos[y] < 0) {
        l.pos[y] = static_cast<std::int32_t>(l.orbit.size());
        l.parent[y] = l.orbit[i];
        l.via[y] = new_gen;
        l.orbit.push_back(y);
        frontier.push_back(y);
      }
    }
  } else {
    for (std::size_t i = 0; i < old_count; ++i) frontier.push_back(l.orbit[i]);
  }
  while (!frontier.empty()) {
    const int x = frontier.front();
    frontier.pop_front();
    for (std::size_t k = 0; k < l.gens.size(); ++k) {
      const int y = l.gens[k][x];
      if (l.pos[y] < 0) {
        l.pos[y] = static_cast<std::int32_t>(l.orbit.size());
        l.parent[y] = x;
        l.via[y] = static_cast<std::int32_t>(k);
        l.orbit.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  // queue Schreier pairs for every newly discovered orbit point
  for (std::size_t i = old_count; i < l.orbit.size(); ++i)
    for (std::size_t k = 0; k < l.gens.size(); ++k)
      l.todo.emplace_back(static_cast<int>(i), static_cast<int>(k));
}

void PermGroup::insert_generator(int level, const Perm& g) {
  if (level == static_cast<int>(levels_.size())) {
    Level l;
    for (int i = 0; i < n_; ++i)
      if (g[i] != i) {
        l.base = i;
        break;
      }
    if (l.base < 0) return;  // identity
    l.pos.assign(n_, -1);
    l.parent.assign(n_, -1);
    l.via.assign(n_, -1);
    l.pos[l.base] = 0;
    l.orbit.push_back(l.base);
    levels_.push_back(std::move(l));
  }
  Level& l = levels_[level];
  l.gens.push_back(g);
  const int k = static_cast<int>(l.gens.size()) - 1;
  // pairs with the existing orbit, then grow the orbit
  for (std::size_t i = 0; i < l.orbit.size(); ++i) l.todo.emplace_back(static_cast<int>(i), k);
  extend_orbit(l, k);
}

void PermGroup::process_queues() {
  for (;;) {
    // deepest queue first, so sifting below always sees a chain whose
    // Schreier condition already holds
    int lvl = -1;
    for (int i = static_cast<int>(levels_.size()) - 1; i >= 0; --i)
      if (!levels_[i].todo.empty()) {
        lvl = i;
        break;
      }
    if (lvl < 0) return;
    Level& l = levels_[lvl];
    auto [oi, k] = l.todo.front();
    l.todo.pop_front();
    const int p = l.orbit[oi];
    const Perm& s = l.gens[k];
    // Schreier generator u_{s(p)}^{-1} s u_p, sifted into deeper levels
    Perm up = transversal(l, p);
    Perm h = perm_compose(perm_inverse(transversal(l, s[p])), perm_compose(s, up));
    if (perm_is_identity(h)) continue;
    const int at = sift(h, lvl + 1);
    if (perm_is_identity(h)) continue;
    insert_generator(at, h);
  }
}

bool PermGroup::add_generator(const Perm& g) {
  if (static_cast<int>(g.size()) != n_)
    throw std::invalid_argument("add_generator: domain mismatch");
  Perm h = g;
  const int at = sift(h, 0);
  if (perm_is_identity(h)) return false;
  insert_generator(at, h);
  process_queues();
  gens_.push_back(g);
  return true;
}

bool PermGroup::contains(const Perm& g) const {
  if (static_cast<int>(g.size()) != n_) return false;
  Perm h = g;
  sift(h, 0);
  return perm_is_identity(h);
}

unsigned long long PermGroup::order() const {
  unsigned long long o = 1;
  for (const Level& l : levels_) o *= static_cast<unsigned long long>(l.orbit.size());
  return o;
}

}  // namespace projlens
