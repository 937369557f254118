#include "projlens/fingeo.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "projlens/roots.hpp"

namespace projlens {

using gf::Fq;
using gf::Mat;
using gf::Subspace;

namespace {

constexpr unsigned long long kSizeGuard = 10'000'000ULL;
constexpr std::uint32_t kCacheVersion = 1;

unsigned long long q_bracket(int q, int d) {
  unsigned long long num = 0, p = 1;
  for (int i = 0; i < d; ++i) {
    num += p;
    p *= static_cast<unsigned long long>(q);
  }
  return num;  // 1 + q + ... + q^{d-1}
}

std::vector<int> weyl_degrees(Family f, int rank) {
  std::vector<int> deg;
  switch (f) {
    case Family::A:
      for (int i = 2; i <= rank + 1; ++i) deg.push_back(i);
      break;
    case Family::D:
      for (int i = 2; i <= 2 * rank - 2; i += 2) deg.push_back(i);
      deg.push_back(rank);
      break;
    case Family::E:
      throw std::invalid_argument("no concrete geometry of type E");
  }
  return deg;
}

unsigned long long chamber_count_exact(const Geometry& g) {
  Family f = g.kind() == GeomKind::kProjective ? Family::A : Family::D;
  unsigned long long n = 1;
  for (int d : weyl_degrees(f, g.rank())) n *= q_bracket(g.q(), d);
  return n;
}

// Number of flags of the given type: the chamber count divided by the
// Poincare value of the residue diagram (componentwise product).
unsigned long long flag_count_exact(const Geometry& g, TypeSet types) {
  unsigned long long n = chamber_count_exact(g);
  Diagram res = induced(g.diagram(), g.diagram().nodes().minus(types));
  for (TypeSet comp : components(res)) {
    ShapeInfo s = classify_shape(induced(res, comp));
    unsigned long long w = 1;
    for (int d : weyl_degrees(s.family, s.rank)) w *= q_bracket(g.q(), d);
    n /= w;
  }
  return n;
}

}  // namespace

Geometry Geometry::projective(int rank, int q) {
  if (rank < 1 || rank + 1 > gf::kMaxDim)
    throw std::invalid_argument("projective: unsupported rank");
  Geometry g;
  g.kind_ = GeomKind::kProjective;
  g.rank_ = rank;
  g.vdim_ = rank + 1;
  g.field_ = std::make_shared<Fq>(q);
  g.diagram_ = make_diagram(Family::A, rank);
  g.opp_ = opposition(g.diagram_);
  return g;
}

Geometry Geometry::hyperbolic(int rank, int q) {
  if (rank < 2 || 2 * rank > gf::kMaxDim)
    throw std::invalid_argument("hyperbolic: unsupported rank");
  Geometry g;
  g.kind_ = GeomKind::kHyperbolic;
  g.rank_ = rank;
  g.vdim_ = 2 * rank;
  g.field_ = std::make_shared<Fq>(q);
  g.diagram_ = rank >= 4 ? make_diagram(Family::D, rank)
                         : make_diagram(Family::A, rank);  // D_2, D_3 unused
  g.opp_ = opposition(g.diagram_);
  g.gram_ = Mat::zero(2 * rank, 2 * rank);
  for (int i = 0; i < rank; ++i) {
    g.gram_.at(2 * i, 2 * i + 1) = 1;
    g.gram_.at(2 * i + 1, 2 * i) = 1;
  }
  Mat ref = Mat::zero(rank, 2 * rank);
  for (int i = 0; i < rank; ++i) ref.at(i, 2 * i) = 1;
  g.ref_gen_ = Subspace::from_rows(*g.field_, ref);
  return g;
}

Geometry Geometry::from_tag(const std::string& tag, int q) {
  if (tag.size() != 2) throw std::invalid_argument("geometry tag must look like A3 or D4");
  int rank = tag[1] - '0';
  if (tag[0] == 'A' || tag[0] == 'a') return projective(rank, q);
  if (tag[0] == 'D' || tag[0] == 'd') {
    if (rank < 4) throw std::invalid_argument("hyperbolic geometry needs rank >= 4");
    return hyperbolic(rank, q);
  }
  throw std::invalid_argument("unknown geometry tag: " + tag);
}

std::string Geometry::tag() const {
  std::ostringstream os;
  os << (kind_ == GeomKind::kProjective ? 'A' : 'D') << rank_;
  return os.str();
}

int Geometry::qval(const std::uint8_t* v) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += v[2 * i] * v[2 * i + 1];
  return s % field_->q();
}

int Geometry::bval(const std::uint8_t* u, const std::uint8_t* v) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) s += u[2 * i] * v[2 * i + 1] + u[2 * i + 1] * v[2 * i];
  return s % field_->q();
}

Subspace Geometry::perp(const Subspace& u) const {
  if (u.dim() == 0) return Subspace::full(vdim_);
  Mat bg = mat_mul(*field_, u.as_mat(), gram_);
  return Subspace::from_rows(*field_, gf::right_kernel(*field_, bg));
}

bool Geometry::totally_singular(const Subspace& u) const {
  for (int r = 0; r < u.dim(); ++r) {
    if (qval(u.row(r)) != 0) return false;
    for (int s = r + 1; s < u.dim(); ++s)
      if (bval(u.row(r), u.row(s)) != 0) return false;
  }
  return true;
}

int Geometry::generator_type(const Subspace& m) const {
  const int d = m.intersect(*field_, ref_gen_).dim();
  return ((rank_ - d) % 2 == 0) ? rank_ : rank_ - 1;
}

std::pair<Subspace, Subspace> Geometry::generators_through(const Subspace& h) const {
  if (h.dim() != rank_ - 1) throw std::invalid_argument("generators_through: need dim rank-1");
  Subspace hp = perp(h);
  std::vector<Subspace> found;
  // scan vectors of perp(h) for singular points outside h
  const int pd = hp.dim();
  std::vector<std::uint8_t> coef(pd, 0);
  const int q = field_->q();
  for (;;) {
    int i = 0;
    for (; i < pd; ++i) {
      if (++coef[i] < q) break;
      coef[i] = 0;
    }
    if (i == pd) break;
    std::array<std::uint8_t, gf::kMaxDim> v{};
    for (int r = 0; r < pd; ++r) {
      if (coef[r] == 0) continue;
      for (int c = 0; c < vdim_; ++c)
        v[c] = field_->add(v[c], field_->mul(coef[r], hp.entry(r, c)));
    }
    if (qval(v.data()) != 0 || h.contains_vector(*field_, v.data())) continue;
    Mat one = Mat::zero(1, vdim_);
    for (int c = 0; c < vdim_; ++c) one.at(0, c) = v[c];
    Subspace cand = h.sum(*field_, Subspace::from_rows(*field_, one));
    if (std::find(found.begin(), found.end(), cand) == found.end()) found.push_back(cand);
  }
  if (found.size() != 2) throw std::logic_error("generators_through: expected exactly two");
  std::sort(found.begin(), found.end());
  return {found[0], found[1]};
}

const Subspace& Flag::part(int type) const {
  for (int i = 0; i < count_; ++i)
    if (type_at(i) == type) return parts_[i];
  throw std::out_of_range("Flag::part: type not present");
}

int Flag::type_at(int slot) const {
  auto v = types_.to_vector();
  return v[slot];
}

void Flag::set_part(int type, const Subspace& s) {
  if (types_.contains(type)) {
    for (int i = 0; i < count_; ++i)
      if (type_at(i) == type) {
        parts_[i] = s;
        return;
      }
  }
  // insert keeping ascending type order
  auto v = types_.with(type).to_vector();
  int pos = static_cast<int>(std::find(v.begin(), v.end(), type) - v.begin());
  for (int i = count_; i > pos; --i) parts_[i] = parts_[i - 1];
  parts_[pos] = s;
  types_ = types_.with(type);
  ++count_;
}

std::vector<std::uint8_t> Flag::key() const {
  std::vector<std::uint8_t> out;
  append_key(out);
  return out;
}

void Flag::append_key(std::vector<std::uint8_t>& out) const {
  out.push_back(static_cast<std::uint8_t>(types_.bits() & 0xff));
  out.push_back(static_cast<std::uint8_t>((types_.bits() >> 8) & 0xff));
  for (int i = 0; i < count_; ++i) parts_[i].append_key(out);
}

bool Flag::operator==(const Flag& o) const {
  if (types_ != o.types_ || count_ != o.count_) return false;
  for (int i = 0; i < count_; ++i)
    if (!(parts_[i] == o.parts_[i])) return false;
  return true;
}

bool Flag::operator<(const Flag& o) const {
  if (types_ != o.types_) return types_.bits() < o.types_.bits();
  for (int i = 0; i < count_; ++i) {
    if (parts_[i] == o.parts_[i]) continue;
    return parts_[i] < o.parts_[i];
  }
  return false;
}

namespace {

std::vector<Subspace> singular_extensions(const Geometry& g, const Subspace& u) {
  // one-dimension-up totally singular extensions of u
  std::vector<Subspace> out;
  const Fq& f = g.field();
  Subspace hp = g.perp(u);
  const int pd = hp.dim();
  std::vector<std::uint8_t> coef(pd, 0);
  const int q = f.q();
  for (;;) {
    int i = 0;
    for (; i < pd; ++i) {
      if (++coef[i] < q) break;
      coef[i] = 0;
    }
    if (i == pd) break;
    std::array<std::uint8_t, gf::kMaxDim> v{};
    for (int r = 0; r < pd; ++r) {
      if (coef[r] == 0) continue;
      for (int c = 0; c < g.vdim(); ++c)
        v[c] = f.add(v[c], f.mul(coef[r], hp.entry(r, c)));
    }
    if (g.qval(v.data()) != 0 || u.contains_vector(f, v.data())) continue;
    Mat one = Mat::zero(1, g.vdim());
    for (int c = 0; c < g.vdim(); ++c) one.at(0, c) = v[c];
    out.push_back(u.sum(f, Subspace::from_rows(f, one)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Subspace> ts_subspaces_through(const Geometry& g, const Subspace& base, int dim) {
  std::vector<Subspace> layer = {base};
  for (int d = base.dim(); d < dim; ++d) {
    std::vector<Subspace> next;
    for (const Subspace& u : layer) {
      auto ext = singular_extensions(g, u);
      next.insert(next.end(), ext.begin(), ext.end());
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    layer = std::move(next);
  }
  return layer;
}

// Candidate parts at type t compatible with the already-assigned parts.
std::vector<Subspace> candidates_at(const Geometry& g, const Flag& f, int t) {
  const Fq& field = g.field();
  const int n = g.rank();
  if (g.kind() == GeomKind::kProjective) {
    Subspace lo = Subspace::zero(g.vdim()), hi = Subspace::full(g.vdim());
    for (int s = t - 1; s >= 1; --s)
      if (f.types().contains(s)) {
        lo = f.part(s);
        break;
      }
    for (int s = t + 1; s <= n; ++s)
      if (f.types().contains(s)) {
        hi = f.part(s);
        break;
      }
    return subspaces_between(field, lo, hi, t);
  }

  // hyperbolic
  Subspace lo = Subspace::zero(g.vdim());
  for (int s = std::min(t - 1, n - 2); s >= 1; --s)
    if (f.types().contains(s)) {
      lo = f.part(s);
      break;
    }
  if (t <= n - 2) {
    Subspace hi;
    bool have_hi = false;
    for (int s = t + 1; s <= n - 2; ++s)
      if (f.types().contains(s)) {
        hi = f.part(s);
        have_hi = true;
        break;
      }
    if (!have_hi) {
      if (f.types().contains(n - 1) && f.types().contains(n)) {
        hi = f.part(n - 1).intersect(field, f.part(n));
        have_hi = true;
      } else if (f.types().contains(n - 1) || f.types().contains(n)) {
        hi = f.types().contains(n) ? f.part(n) : f.part(n - 1);
        have_hi = true;
      }
    }
    if (have_hi) {
      auto cands = subspaces_between(field, lo, hi, t);
      std::vector<Subspace> out;
      for (const Subspace& c : cands)
        if (g.totally_singular(c)) out.push_back(c);
      return out;
    }
    return ts_subspaces_through(g, lo, t);
  }

  // generator types
  const int other_type = (t == n) ? n - 1 : n;
  if (f.types().contains(other_type)) {
    const Subspace& other = f.part(other_type);
    std::vector<Subspace> out;
    for (const Subspace& h : subspaces_between(field, lo, other, n - 1)) {
      auto [g1, g2] = g.generators_through(h);
      const Subspace& cand = (g1 == other) ? g2 : g1;
      if (g.generator_type(cand) != t) continue;  // cannot happen; guard
      out.push_back(cand);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  std::vector<Subspace> out;
  for (const Subspace& m : ts_subspaces_through(g, lo, n))
    if (g.generator_type(m) == t) out.push_back(m);
  return out;
}

void fill_flags_rec(const Geometry& g, const Flag& partial, const std::vector<int>& todo,
                    std::size_t idx, std::vector<Flag>& out) {
  if (idx == todo.size()) {
    out.push_back(partial);
    return;
  }
  const int t = todo[idx];
  for (const Subspace& cand : candidates_at(g, partial, t)) {
    Flag next = partial;
    next.set_part(t, cand);
    fill_flags_rec(g, next, todo, idx + 1, out);
  }
}

std::vector<Flag> fill_flags(const Geometry& g, TypeSet types, const Flag& base) {
  std::vector<int> todo;
  for (int t : types.to_vector())
    if (!base.types().contains(t)) todo.push_back(t);
  std::vector<Flag> out;
  fill_flags_rec(g, base, todo, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Flag> enumerate_flags(const Geometry& g, TypeSet types) {
  if (types.empty() || !types.subset_of(g.diagram().nodes()))
    throw std::invalid_argument("enumerate_flags: bad type set");
  if (flag_count_exact(g, types) > kSizeGuard)
    throw std::length_error("enumerate_flags: size guard exceeded");
  return fill_flags(g, types, Flag());
}

std::vector<Chamber> enumerate_chambers(const Geometry& g) {
  return enumerate_flags(g, g.diagram().nodes());
}

std::vector<Chamber> residue_domain(const Geometry& g, const Flag& base) {
  return fill_flags(g, g.diagram().nodes(), base);
}

std::vector<Chamber> panel_chambers(const Geometry& g, const Chamber& c, int t) {
  Flag stripped;
  for (int s : c.types().to_vector())
    if (s != t) stripped.set_part(s, c.part(s));
  std::vector<Chamber> out;
  for (const Subspace& cand : candidates_at(g, stripped, t)) {
    Chamber n = stripped;
    n.set_part(t, cand);
    out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_opposite(const Geometry& g, const Flag& a, const Flag& b) {
  if (g.type_opposition().image_of(a.types()) != b.types())
    throw std::invalid_argument("is_opposite: type mismatch");
  const Fq& f = g.field();
  for (int i : a.types().to_vector()) {
    const int j = g.type_opposition()(i);
    if (g.kind() == GeomKind::kProjective) {
      if (a.part(i).intersect(f, b.part(j)).dim() != 0) return false;
    } else {
      if (a.part(i).intersect(f, g.perp(b.part(j))).dim() != 0) return false;
    }
  }
  return true;
}

namespace {

Chamber perspectivity_projective(const Geometry& g, const Flag& from, const Flag& to,
                                 const Chamber& c) {
  const Fq& f = g.field();
  const int r = g.rank();
  auto upart = [&](int k) -> Subspace {
    if (k == 0) return Subspace::zero(g.vdim());
    if (k == r + 1) return Subspace::full(g.vdim());
    return to.part(k);
  };
  Chamber out;
  for (int k : to.types().to_vector()) out.set_part(k, to.part(k));
  const auto jtypes = from.types();
  for (int i : c.types().to_vector()) {
    if (jtypes.contains(i)) continue;
    int a = 0, b = r + 1;
    for (int s = i - 1; s >= 1; --s)
      if (jtypes.contains(s)) {
        a = s;
        break;
      }
    for (int s = i + 1; s <= r; ++s)
      if (jtypes.contains(s)) {
        b = s;
        break;
      }
    const Subspace img =
        c.part(i).intersect(f, upart(r + 1 - a)).sum(f, upart(r + 1 - b));
    out.set_part(i - a + r + 1 - b, img);
  }
  return out;
}

Chamber perspectivity_hyperbolic(const Geometry& g, const Flag& from, const Flag& to,
                                 const Chamber& c) {
  const Fq& f = g.field();
  const int n = g.rank();
  if (from.types().size() != 1)
    throw std::invalid_argument("perspectivity: hyperbolic closed forms cover single-vertex flags");
  const int d = from.types().min();
  if (d <= n - 2) {
    const Subspace& u = from.part(d);
    const Subspace& up = to.part(d);
    const Subspace up_perp = g.perp(up);
    Chamber out;
    out.set_part(d, up);
    for (int i : c.types().to_vector()) {
      if (i == d) continue;
      const Subspace& x = c.part(i);
      if (i < d) {
        // annihilator inside the image vertex
        Subspace img = g.perp(x).intersect(f, up);
        out.set_part(d - i, img);
      } else {
        Subspace img = up.sum(f, x.intersect(f, up_perp));
        int t = (i <= n - 2) ? i : g.generator_type(img);
        out.set_part(t, img);
      }
    }
    (void)u;
    return out;
  }
  // generator vertex: read the chamber as a full flag of M, project
  // into M' by the annihilator map, and rebuild the oriflamme pair.
  const Subspace& m = from.part(d);
  const Subspace& mp = to.part(to.types().min());
  const int other = (d == n) ? n - 1 : n;
  std::vector<Subspace> v(n);  // v[e] = flag-of-M part of dim e, e = 1..n-1
  for (int e = 1; e <= n - 2; ++e) v[e] = c.part(e);
  v[n - 1] = c.part(other).intersect(f, m);
  std::vector<Subspace> w(n);
  for (int e = 1; e <= n - 1; ++e) w[e] = g.perp(v[n - e]).intersect(f, mp);
  Chamber out;
  for (int e = 1; e <= n - 2; ++e) out.set_part(e, w[e]);
  auto [g1, g2] = g.generators_through(w[n - 1]);
  const Subspace& np = (g1 == mp) ? g2 : g1;
  out.set_part(g.generator_type(mp), mp);
  out.set_part(g.generator_type(np), np);
  return out;
}

}  // namespace

Chamber perspectivity_apply(const Geometry& g, const Flag& from, const Flag& to,
                            const Chamber& c) {
  if (!is_opposite(g, from, to)) throw std::invalid_argument("perspectivity: flags not opposite");
  for (int t : from.types().to_vector())
    if (!(c.part(t) == from.part(t)))
      throw std::invalid_argument("perspectivity: chamber does not contain the flag");
  if (g.kind() == GeomKind::kProjective) return perspectivity_projective(g, from, to, c);
  return perspectivity_hyperbolic(g, from, to, c);
}

int ChamberGraph::index_of(const Chamber& c) const {
  auto it = std::lower_bound(chambers.begin(), chambers.end(), c);
  if (it == chambers.end() || !(*it == c)) return -1;
  return static_cast<int>(it - chambers.begin());
}

namespace {

std::string cache_path(const Geometry& g) {
  const char* dir = std::getenv("PROJLENS_CACHE_DIR");
  if (!dir || !*dir) return {};
  std::ostringstream os;
  os << dir << '/' << g.tag() << "_q" << g.q() << ".plc";
  return os.str();
}

bool load_graph_cache(const Geometry& g, const std::string& path, ChamberGraph& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, "PLCACHE1", 8) != 0) return false;
  std::uint32_t version = 0;
  in.read(reinterpret_cast<char*>(&version), 4);
  std::uint8_t kind = 0, rank = 0, q = 0, vdim = 0;
  in.read(reinterpret_cast<char*>(&kind), 1);
  in.read(reinterpret_cast<char*>(&rank), 1);
  in.read(reinterpret_cast<char*>(&q), 1);
  in.read(reinterpret_cast<char*>(&vdim), 1);
  if (!in || version != kCacheVersion || kind != static_cast<std::uint8_t>(g.kind()) ||
      rank != g.rank() || q != g.q() || vdim != g.vdim())
    return false;
  std::uint64_t count = 0;
  in.read(reinterpret_cast<char*>(&count), 8);
  if (!in) return false;
  out.chambers.clear();
  out.chambers.reserve(count);
  const Fq& f = g.field();
  for (std::uint64_t i = 0; i < count; ++i) {
    Chamber c;
    for (int t = 0; t < g.rank(); ++t) {
      std::uint8_t type = 0, dim = 0;
      in.read(reinterpret_cast<char*>(&type), 1);
      in.read(reinterpret_cast<char*>(&dim), 1);
      Mat m = Mat::zero(dim, g.vdim());
      for (int r = 0; r < dim; ++r)
        in.read(reinterpret_cast<char*>(&m.a[r * gf::kMaxScratch]), g.vdim());
      if (!in) return false;
      c.set_part(type, Subspace::from_rows(f, m));
    }
    out.chambers.push_back(c);
  }
  out.rank = g.rank();
  out.adj_by_type.assign(count * g.rank(), {});
  out.adj.assign(count, {});
  for (std::uint64_t i = 0; i < count; ++i)
    for (int t = 0; t < g.rank(); ++t) {
      std::uint8_t cnt = 0;
      in.read(reinterpret_cast<char*>(&cnt), 1);
      auto& lst = out.adj_by_type[i * g.rank() + t];
      for (int k = 0; k < cnt; ++k) {
        std::int32_t idx = 0;
        in.read(reinterpret_cast<char*>(&idx), 4);
        lst.push_back(idx);
        out.adj[i].push_back(idx);
      }
      if (!in) return false;
    }
  return static_cast<bool>(in);
}

void save_graph_cache(const Geometry& g, const std::string& path, const ChamberGraph& graph) {
  std::ofstream outf(path, std::ios::binary);
  if (!outf) return;
  outf.write("PLCACHE1", 8);
  std::uint32_t version = kCacheVersion;
  outf.write(reinterpret_cast<const char*>(&version), 4);
  std::uint8_t kind = static_cast<std::uint8_t>(g.kind()), rank = g.rank(), q = g.q(),
               vdim = g.vdim();
  outf.write(reinterpret_cast<const char*>(&kind), 1);
  outf.write(reinterpret_cast<const char*>(&rank), 1);
  outf.write(reinterpret_cast<const char*>(&q), 1);
  outf.write(reinterpret_cast<const char*>(&vdim), 1);
  std::uint64_t count = graph.chambers.size();
  outf.write(reinterpret_cast<const char*>(&count), 8);
  for (const Chamber& c : graph.chambers)
    for (int slot = 0; slot < c.part_count(); ++slot) {
      std::uint8_t type = static_cast<std::uint8_t>(c.type_at(slot));
      std::uint8_t dim = static_cast<std::uint8_t>(c.part_at(slot).dim());
      outf.write(reinterpret_cast<const char*>(&type), 1);
      outf.write(reinterpret_cast<const char*>(&dim), 1);
      for (int r = 0; r < dim; ++r)
        outf.write(reinterpret_cast<const char*>(c.part_at(slot).row(r)), g.vdim());
    }
  for (std::size_t i = 0; i < graph.chambers.size(); ++i)
    for (int t = 0; t < g.rank(); ++t) {
      const auto& lst = graph.adj_by_type[i * g.rank() + t];
      std::uint8_t cnt = static_cast<std::uint8_t>(lst.size());
      outf.write(reinterpret_cast<const char*>(&cnt), 1);
      for (std::int32_t idx : lst) outf.write(reinterpret_cast<const char*>(&idx), 4);
    }
}

}  // namespace

ChamberGraph build_chamber_graph(const Geometry& g) {
  ChamberGraph graph;
  const std::string path = cache_path(g);
  if (!path.empty() && load_graph_cache(g, path, graph)) return graph;

  graph.rank = g.rank();
  graph.chambers = enumerate_chambers(g);
  const std::size_t n = graph.chambers.size();
  graph.adj_by_type.assign(n * g.rank(), {});
  graph.adj.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (int t = 1; t <= g.rank(); ++t) {
      auto& lst = graph.adj_by_type[i * g.rank() + (t - 1)];
      for (const Chamber& nb : panel_chambers(g, graph.chambers[i], t)) {
        const int j = graph.index_of(nb);
        if (j < 0) throw std::logic_error("chamber graph: neighbour not enumerated");
        if (static_cast<std::size_t>(j) == i) continue;
        lst.push_back(j);
        graph.adj[i].push_back(j);
      }
    }
  }
  if (!path.empty()) save_graph_cache(g, path, graph);
  return graph;
}

Chamber gallery_projection_oracle(const Geometry& g, const ChamberGraph& graph,
                                  const Flag& target, const Chamber& from, int* distance_out) {
  const int start = graph.index_of(from);
  if (start < 0) throw std::invalid_argument("gallery oracle: start chamber unknown");
  std::vector<std::int32_t> dist(graph.chambers.size(), -1);
  std::queue<int> bfs;
  dist[start] = 0;
  bfs.push(start);
  while (!bfs.empty()) {
    const int c = bfs.front();
    bfs.pop();
    for (int nb : graph.adj[c])
      if (dist[nb] < 0) {
        dist[nb] = dist[c] + 1;
        bfs.push(nb);
      }
  }
  int best = -1, best_count = 0, best_idx = -1;
  for (const Chamber& c : residue_domain(g, target)) {
    const int idx = graph.index_of(c);
    if (idx < 0) throw std::logic_error("gallery oracle: residue chamber not in graph");
    if (best < 0 || dist[idx] < best) {
      best = dist[idx];
      best_count = 1;
      best_idx = idx;
    } else if (dist[idx] == best) {
      ++best_count;
    }
  }
  if (best_idx < 0) throw std::logic_error("gallery oracle: no chamber contains the flag");
  if (best_count != 1) throw std::logic_error("gallery oracle: projection not unique");
  if (distance_out) *distance_out = best;
  return graph.chambers[best_idx];
}

Flag apply_matrix(const Geometry& g, const Mat& m, const Flag& f) {
  Flag out;
  for (int slot = 0; slot < f.part_count(); ++slot) {
    const int t = f.type_at(slot);
    Subspace img = f.part_at(slot).apply(g.field(), m);
    int nt = t;
    if (g.kind() == GeomKind::kHyperbolic && t >= g.rank() - 1) nt = g.generator_type(img);
    out.set_part(nt, img);
  }
  return out;
}

}  // namespace projlens
