#include "projlens/projgrp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace projlens {

std::uint64_t SplitRng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t SplitRng::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("SplitRng::below(0)");
  const std::uint64_t limit = ~0ULL - (~0ULL % n + 1) % n;
  for (;;) {
    const std::uint64_t r = next();
    if (r <= limit) return static_cast<std::size_t>(r % n);
  }
}

namespace {

int domain_index(const std::vector<Chamber>& domain, const Chamber& c) {
  auto it = std::lower_bound(domain.begin(), domain.end(), c);
  if (it == domain.end() || !(*it == c)) return -1;
  return static_cast<int>(it - domain.begin());
}

Perm walk_permutation(const Geometry& g, const std::vector<Flag>& word,
                      const std::vector<Chamber>& domain) {
  Perm p(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    Chamber c = domain[i];
    for (std::size_t step = 0; step + 1 < word.size(); ++step)
      c = perspectivity_apply(g, word[step], word[step + 1], c);
    const int j = domain_index(domain, c);
    if (j < 0) throw std::logic_error("projectivity: image chamber left the residue");
    p[i] = j;
  }
  return p;
}

}  // namespace

ProjectivityWord self_projectivity(const Geometry& g, const std::vector<Flag>& word,
                                   const std::vector<Chamber>& domain) {
  if (word.size() < 1) throw std::invalid_argument("self_projectivity: empty word");
  if (!(word.front() == word.back()))
    throw std::invalid_argument("self_projectivity: word must start and end at the same flag");
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (!is_opposite(g, word[i], word[i + 1]))
      throw std::invalid_argument("self_projectivity: consecutive flags not opposite");
  ProjectivityWord out;
  out.flags = word;
  out.parity = static_cast<int>((word.size() - 1) % 2);
  out.perm = walk_permutation(g, word, domain);
  return out;
}

DiagramMap induced_type_action(const Geometry& g, const std::vector<Chamber>& domain,
                               const Perm& p) {
  if (domain.empty()) throw std::invalid_argument("induced_type_action: empty domain");
  const Chamber& c = domain[0];
  const Chamber& ci = domain[p[0]];
  // residue types: the chamber types not pinned by the base flag are
  // exactly those where some panel-mate inside the domain differs
  DiagramMap action;
  for (int s : c.types().to_vector()) {
    // find a domain chamber differing from c exactly at type s
    int mate = -1;
    for (const Chamber& d : panel_chambers(g, c, s)) {
      if (d == c) continue;
      const int idx = domain_index(domain, d);
      if (idx >= 0) {
        mate = idx;
        break;
      }
    }
    if (mate < 0) continue;  // type pinned by the flag
    const Chamber& di = domain[p[mate]];
    int diff = -1;
    for (int t : ci.types().to_vector())
      if (!(ci.part(t) == di.part(t))) {
        if (diff >= 0) throw std::logic_error("induced_type_action: images not panel-adjacent");
        diff = t;
      }
    if (diff < 0) throw std::logic_error("induced_type_action: images equal");
    action.set(s, diff);
  }
  return action;
}

BruteResult generate_projectivity_groups(const Geometry& g, const Flag& f, int budget,
                                         std::uint64_t seed) {
  if (budget < 1) throw std::invalid_argument("generate_projectivity_groups: budget >= 1");
  BruteResult res;
  res.base = f;
  res.seed = seed;
  res.budget = budget;
  res.domain = residue_domain(g, f);
  const int n = static_cast<int>(res.domain.size());
  res.pi_plus = PermGroup(n);
  res.pi = PermGroup(n);

  const TypeSet jt = f.types();
  const TypeSet jt_opp = g.type_opposition().image_of(jt);
  const bool self_opp = (jt == jt_opp);

  const std::vector<Flag> same = enumerate_flags(g, jt);
  const std::vector<Flag> cross = self_opp ? same : enumerate_flags(g, jt_opp);

  SplitRng rng(seed);
  auto pick_opposite = [&](const std::vector<Flag>& pool,
                           const std::vector<const Flag*>& constraints) -> const Flag* {
    std::vector<const Flag*> ok;
    for (const Flag& cand : pool) {
      bool good = true;
      for (const Flag* c : constraints)
        if (!is_opposite(g, *c, cand)) {
          good = false;
          break;
        }
      if (good) ok.push_back(&cand);
    }
    if (ok.empty()) return nullptr;
    return ok[rng.below(ok.size())];
  };

  Perm rho0_inv;
  bool have_rho0 = false;
  constexpr int kBatch = 25;
  int stable_batches = 0;
  unsigned long long last_plus = 1, last_pi = 1;

  for (int walk = 0; walk < budget; ++walk) {
    const bool odd = self_opp && (walk % 2 == 0);
    std::vector<Flag> word;
    if (odd) {
      const Flag* f1 = pick_opposite(same, {&f});
      if (!f1) throw std::runtime_error("no opposite flag found");
      const Flag* f2 = pick_opposite(same, {f1, &f});
      if (!f2) throw std::runtime_error("no common opposite flag found");
      word = {f, *f1, *f2, f};
    } else {
      const Flag* f1 = pick_opposite(cross, {&f});
      if (!f1) throw std::runtime_error("no opposite flag found");
      const Flag* f2 = pick_opposite(same, {f1});
      if (!f2) throw std::runtime_error("no opposite flag found");
      const Flag* f3 = pick_opposite(cross, {f2, &f});
      int retry = 0;
      while (!f3 && ++retry < 32) {
        f2 = pick_opposite(same, {f1});
        f3 = pick_opposite(cross, {f2, &f});
      }
      if (!f3) throw std::runtime_error("no closing flag found");
      word = {f, *f1, *f2, *f3, f};
    }
    Perm p = walk_permutation(g, word, res.domain);
    ++res.walks_sampled;
    res.pi.add_generator(p);
    if (odd) {
      res.odd_exists = true;
      if (!induced_type_action(g, res.domain, p).is_identity()) res.odd_duality = true;
      if (!have_rho0) {
        rho0_inv = perm_inverse(p);
        have_rho0 = true;
      }
      res.pi_plus.add_generator(perm_compose(rho0_inv, p));
    } else {
      res.pi_plus.add_generator(p);
    }
    if ((walk + 1) % kBatch == 0) {
      const unsigned long long op = res.pi_plus.order(), o = res.pi.order();
      if (op == last_plus && o == last_pi)
        ++stable_batches;
      else
        stable_batches = 0;
      last_plus = op;
      last_pi = o;
      if (stable_batches >= 5) break;
    }
  }
  return res;
}

PermGroup induced_stabiliser_group(const Geometry& g, const Flag& f,
                                   const std::vector<Chamber>& domain) {
  if (g.kind() != GeomKind::kProjective)
    throw std::invalid_argument("induced_stabiliser_group: projective geometries only");
  if (g.rank() > 3) throw std::invalid_argument("induced_stabiliser_group: rank <= 3");
  const gf::Fq& field = g.field();
  const int n = g.vdim();

  // adapted basis: rows spanning the flag parts in ascending type
  // order, completed by unit vectors
  gf::Mat basis = gf::Mat::zero(0, n);
  basis.cols = n;
  gf::Subspace acc = gf::Subspace::zero(n);
  auto push_row = [&](const std::uint8_t* v) {
    if (acc.contains_vector(field, v)) return;
    for (int c = 0; c < n; ++c) basis.at(basis.rows, c) = v[c];
    ++basis.rows;
    gf::Mat one = gf::Mat::zero(1, n);
    for (int c = 0; c < n; ++c) one.at(0, c) = v[c];
    acc = acc.sum(field, gf::Subspace::from_rows(field, one));
  };
  std::vector<int> dims;  // flag part dimensions, ascending
  for (int slot = 0; slot < f.part_count(); ++slot) {
    const gf::Subspace& part = f.part_at(slot);
    for (int r = 0; r < part.dim(); ++r) push_row(part.row(r));
    dims.push_back(part.dim());
  }
  for (int i = 0; i < n && basis.rows < n; ++i) {
    std::array<std::uint8_t, gf::kMaxDim> e{};
    e[i] = 1;
    push_row(e.data());
  }

  // block index of each adapted coordinate
  std::vector<int> block(n, static_cast<int>(dims.size()));
  for (int i = 0, at = 0; i < static_cast<int>(dims.size()); ++i) {
    for (; at < dims[i]; ++at) block[at] = i;
  }

  const gf::Mat bt = gf::transpose(basis);
  const gf::Mat bt_inv = gf::inverse(field, bt);
  auto conj = [&](const gf::Mat& m) { return mat_mul(field, bt, mat_mul(field, m, bt_inv)); };

  std::vector<gf::Mat> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!(block[i] == block[j] || block[i] < block[j])) continue;
      gf::Mat e = gf::Mat::identity(n);
      e.at(i, j) = 1;
      gens.push_back(conj(e));
    }
  if (field.q() > 2) {
    std::uint8_t a = 2;  // any generator of the cyclic group F_q^* works
    for (int i = 0; i + 1 < n; ++i) {
      gf::Mat t = gf::Mat::identity(n);
      t.at(i, i) = a;
      t.at(i + 1, i + 1) = field.inv(a);
      gens.push_back(conj(t));
    }
  }

  PermGroup out(static_cast<int>(domain.size()));
  for (const gf::Mat& m : gens) {
    if (!(apply_matrix(g, m, f) == f))
      throw std::logic_error("induced_stabiliser_group: generator moves the flag");
    Perm p(domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
      const int j = domain_index(domain, apply_matrix(g, m, domain[i]));
      if (j < 0) throw std::logic_error("induced_stabiliser_group: image left the residue");
      p[i] = j;
    }
    out.add_generator(p);
  }
  return out;
}

unsigned long long group_order(const PermGroup& g) { return g.order(); }

std::string BruteResult::to_json() const {
  std::ostringstream os;
  const unsigned long long plus = pi_plus.order(), full = pi.order();
  os << "{\"domain\":" << domain.size() << ",\"pi_plus_order\":" << plus
     << ",\"pi_order\":" << full << ",\"index\":" << (plus ? full / plus : 0)
     << ",\"odd_duality\":" << (odd_duality ? "true" : "false") << ",\"seed\":" << seed
     << ",\"budget\":" << budget << ",\"walks\":" << walks_sampled << '}';
  return os.str();
}

}  // namespace projlens
