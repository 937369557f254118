#include "projlens/tables.hpp"

#include <sstream>
#include <stdexcept>

namespace projlens {

namespace {

GroupName pgl(int n) { return GroupName{GroupKind::kPGL, n, 0, false}; }
GroupName psla(int n, int a) { return GroupName{GroupKind::kPSLa, n, a, false}; }
GroupName g(GroupKind k, int deg) { return GroupName{k, deg, 0, false}; }

GroupName ext(GroupName gn) {
  gn.duality_ext = true;
  return gn;
}

}  // namespace

bool GroupName::grey() const {
  switch (kind) {
    case GroupKind::kPSLa: return a != 1;
    case GroupKind::kPGO:
    case GroupKind::kPGOCirc:
    case GroupKind::kBarPOmega: return true;
    default: return false;
  }
}

std::string GroupName::render(char field, bool pgl_style_a) const {
  std::ostringstream os;
  switch (kind) {
    case GroupKind::kPGL: os << "PGL_" << degree << '(' << field << ')'; break;
    case GroupKind::kPSLa:
      os << (pgl_style_a ? "PGL_" : "PSL_") << degree << '(' << field << ',' << a << ')';
      break;
    case GroupKind::kPGO: os << "PGO_" << degree << '(' << field << ')'; break;
    case GroupKind::kPGOCirc: os << "PGOo_" << degree << '(' << field << ')'; break;
    case GroupKind::kBarPGO: os << "barPGO_" << degree << '(' << field << ')'; break;
    case GroupKind::kBarPGOCirc: os << "barPGOo_" << degree << '(' << field << ')'; break;
    case GroupKind::kBarPOmega: os << "barPOmega_" << degree << '(' << field << ')'; break;
    case GroupKind::kPGE6: os << "PGE_6(" << field << ')'; break;
    case GroupKind::kPGE7: os << "PGE_7(" << field << ')'; break;
  }
  if (duality_ext &&
      (kind == GroupKind::kPGL || kind == GroupKind::kPSLa || kind == GroupKind::kPGE6))
    os << ".2";
  return os.str();
}

namespace {

TableRow row(std::string ref, Family amb, int arank, Family rf, int rr, std::string cond,
             GroupName plus, GroupName pi, bool bysame, bool mark, std::string note = "") {
  TableRow r;
  r.ref = std::move(ref);
  r.ambient = amb;
  r.ambient_rank = arank;
  r.residue_family = rf;
  r.residue_rank = rr;
  r.cotype_cond = std::move(cond);
  r.pi_plus = plus;
  r.pi = pi;
  r.bysame = bysame;
  r.grey_row = plus.grey();
  r.polar_closed_mark = mark;
  r.note = std::move(note);
  return r;
}

std::string fork_triple(int r) {
  std::ostringstream os;
  os << '{' << r - 2 << ',' << r - 1 << ',' << r << '}';
  return os.str();
}

std::vector<TableRow> d_rows(int r) {
  std::vector<TableRow> rows;
  const Family D = Family::D, A = Family::A;
  rows.push_back(row("A1", D, r, A, 1, "*", pgl(2), pgl(2), false, false));
  rows.push_back(row("A3", D, r, A, 3, fork_triple(r), g(GroupKind::kPGOCirc, 6),
                     ext(g(GroupKind::kPGO, 6)), false, false,
                     "printed without the similitude bar"));
  for (int l = 2; l <= r - 2; ++l)
    rows.push_back(row("A", D, r, A, l, l == 3 ? "!= " + fork_triple(r) : "*", pgl(l + 1),
                       ext(pgl(l + 1)), false, false));
  if (r % 2 == 0)
    rows.push_back(row("A*", D, r, A, r - 1, "*", psla(r, 2), ext(psla(r, 2)), false, false));
  else
    rows.push_back(row("A**", D, r, A, r - 1, "*", pgl(r), pgl(r), true, false));
  for (int m = r - 2; m >= 4; m -= 2)
    rows.push_back(row("D", D, r, D, m, "*", g(GroupKind::kPGOCirc, 2 * m),
                       g(GroupKind::kPGOCirc, 2 * m), false, false,
                       "printed without the similitude bar"));
  for (int m = r - 1; m >= 4; m -= 2)
    rows.push_back(row("D'", D, r, D, m, "*", g(GroupKind::kPGOCirc, 2 * m),
                       ext(g(GroupKind::kPGO, 2 * m)), false, false,
                       "printed without the similitude bar"));
  return rows;
}

std::vector<TableRow> e_rows(int m) {
  std::vector<TableRow> rows;
  const Family E = Family::E, A = Family::A, D = Family::D;
  rows.push_back(row("A1", E, m, A, 1, "*", pgl(2), pgl(2), false, false));
  if (m == 6) {
    rows.push_back(row("A2", E, m, A, 2, "{2,4}", pgl(3), ext(pgl(3)), false, false));
    rows.push_back(row("A2", E, m, A, 2, "!= {2,4}", pgl(3), pgl(3), true, false));
    rows.push_back(row("A3", E, m, A, 3, "{3,4,5}", pgl(4), pgl(4), false, true));
    rows.push_back(row("A3", E, m, A, 3, "!= {3,4,5}", pgl(4), pgl(4), true, false));
    rows.push_back(row("A4", E, m, A, 4, "*", pgl(5), pgl(5), true, false));
    rows.push_back(row("A5", E, m, A, 5, "*", psla(6, 3), psla(6, 3), false, true));
    rows.push_back(row("D4", E, m, D, 4, "*", g(GroupKind::kBarPGOCirc, 8),
                       ext(g(GroupKind::kBarPGO, 8)), false, false));
    rows.push_back(row("D5", E, m, D, 5, "*", g(GroupKind::kBarPGOCirc, 10),
                       g(GroupKind::kBarPGOCirc, 10), true, false));
  } else {
    rows.push_back(row("A2", E, m, A, 2, "*", pgl(3), ext(pgl(3)), false, false));
    rows.push_back(row("A3", E, m, A, 3, "*", pgl(4), ext(pgl(4)), false, false));
    rows.push_back(row("A4", E, m, A, 4, "*", pgl(5), ext(pgl(5)), false, false));
    if (m == 7) {
      rows.push_back(row("A5", E, m, A, 5, "{2,4,5,6,7}", psla(6, 2), ext(psla(6, 2)),
                         false, false));
      rows.push_back(row("A5", E, m, A, 5, "2 notin cotyp", pgl(6), ext(pgl(6)), false, false));
    } else {
      rows.push_back(row("A5", E, m, A, 5, "*", pgl(6), ext(pgl(6)), false, false));
    }
    rows.push_back(row("A6", E, m, A, 6, "*", pgl(7), ext(pgl(7)), false, false));
    if (m == 8) rows.push_back(row("A7", E, m, A, 7, "*", pgl(8), ext(pgl(8)), false, false));
    rows.push_back(row("D4", E, m, D, 4, "*", g(GroupKind::kBarPGOCirc, 8),
                       g(GroupKind::kBarPGOCirc, 8), false, true));
    rows.push_back(row("D5", E, m, D, 5, "*", g(GroupKind::kBarPGOCirc, 10),
                       ext(g(GroupKind::kBarPGO, 10)), false, false));
    if (m == 7)
      rows.push_back(row("D6", E, m, D, 6, "*", g(GroupKind::kBarPOmega, 12),
                         g(GroupKind::kBarPOmega, 12), false, true));
    else
      rows.push_back(row("D6", E, m, D, 6, "*", g(GroupKind::kBarPGOCirc, 12),
                         g(GroupKind::kBarPGOCirc, 12), false, true));
    if (m == 8)
      rows.push_back(row("D7", E, m, D, 7, "*", g(GroupKind::kBarPGOCirc, 14),
                         ext(g(GroupKind::kBarPGO, 14)), false, false));
    rows.push_back(row("E6", E, m, Family::E, 6, "*", g(GroupKind::kPGE6, 27),
                       ext(g(GroupKind::kPGE6, 27)), false, false));
    if (m == 8)
      rows.push_back(row("E7", E, m, Family::E, 7, "*", g(GroupKind::kPGE7, 56),
                         g(GroupKind::kPGE7, 56), false, true));
  }
  return rows;
}

}  // namespace

std::vector<TableRow> table_rows(Family f, int rank) {
  switch (f) {
    case Family::A: {
      if (rank < 2) throw std::invalid_argument("table_rows: A needs rank >= 2");
      std::vector<TableRow> rows;
      TableRow r = row("A", Family::A, rank, Family::A, 0, "*", pgl(0), pgl(0), false, false,
                       "natural action of PGL_{l+1} for every connected cotype A_l");
      rows.push_back(r);
      return rows;
    }
    case Family::D:
      if (rank < 4) throw std::invalid_argument("table_rows: D needs rank >= 4");
      return d_rows(rank);
    case Family::E:
      if (rank < 6 || rank > 8) throw std::invalid_argument("table_rows: E rank in {6,7,8}");
      return e_rows(rank);
  }
  throw std::invalid_argument("table_rows: bad family");
}

namespace {

TypeSet parse_label_set(const std::string& s) {
  TypeSet out;
  for (char c : s)
    if (c >= '1' && c <= '9') out = out.with(c - '0');
  return out;
}

const TableRow* match_row(const std::vector<TableRow>& rows, Family rf, int rr, TypeSet cotype) {
  for (const TableRow& r : rows) {
    if (r.residue_family != rf || r.residue_rank != rr) continue;
    if (r.cotype_cond == "*") return &r;
    if (r.cotype_cond.rfind("!= ", 0) == 0) {
      if (cotype != parse_label_set(r.cotype_cond)) return &r;
    } else if (r.cotype_cond == "2 notin cotyp") {
      if (!cotype.contains(2)) return &r;
    } else if (!r.cotype_cond.empty() && r.cotype_cond.front() == '{') {
      if (cotype == parse_label_set(r.cotype_cond)) return &r;
    }
  }
  return nullptr;
}

}  // namespace

std::pair<GroupName, GroupName> projectivity_groups(Family f, int rank, TypeSet j) {
  Diagram d = make_diagram(f, rank);
  if (f == Family::A && rank < 2)
    throw std::invalid_argument("projectivity_groups: A needs rank >= 2");
  if ((f == Family::D || f == Family::E) && rank < 3)
    throw std::invalid_argument("projectivity_groups: rank too small");
  if (j.empty() || !j.subset_of(d.nodes()) || j == d.nodes())
    throw std::invalid_argument("projectivity_groups: J must be a proper nonempty subset");
  TypeSet cotype = d.nodes().minus(j);
  Diagram res = induced(d, cotype);
  if (!res.connected()) throw std::domain_error("not covered: reducible residue");
  ShapeInfo shape = classify_shape(res);

  Verdict v = n_of(d, j);
  if (v.n == NValue::kUnresolved)
    throw std::logic_error("projectivity_groups: unresolved n(J) on a connected cotype");

  if (f == Family::A) {
    GroupName p = pgl(shape.rank + 1);
    if (v.n == NValue::kTwo)
      throw std::logic_error("projectivity_groups: unexpected n=2 with connected A cotype");
    return {p, p};
  }

  const auto rows = table_rows(f, rank);
  const TableRow* r = match_row(rows, shape.family, shape.rank, cotype);
  if (!r) throw std::domain_error("no matching row");
  if (v.n == NValue::kOne) return {r->pi_plus, r->pi_plus};
  if (r->bysame || r->pi == r->pi_plus)
    throw std::logic_error("projectivity_groups: row lists no extension but n(J)=2");
  return {r->pi_plus, r->pi};
}

std::string render_table(Family f, int rank) {
  std::ostringstream os;
  os << "# projectivity groups of connected residues, ambient " << family_char(f) << '_' << rank
     << '\n';
  os << "ref\tresidue\tcotype\tpi_plus\tpi\tgrey\tpolar_closed\n";
  const char field = (f == Family::A) ? 'L' : 'K';
  for (const TableRow& r : table_rows(f, rank)) {
    os << r.ref << '\t';
    if (f == Family::A) {
      os << "A_l (1<=l<=" << rank - 1 << ")\t" << r.cotype_cond << '\t'
         << "PGL_{l+1}(L)\tPGL_{l+1}(L)\t.\t.\n";
      continue;
    }
    os << family_char(r.residue_family) << '_' << r.residue_rank << '\t';
    os << r.cotype_cond << '\t';
    const bool pgl_style = (f == Family::D);  // table 1 prints PGL_r(K,2)
    os << r.pi_plus.render(field, pgl_style) << '\t';
    if (r.bysame)
      os << "------";
    else
      os << r.pi.render(field, pgl_style);
    os << '\t' << (r.grey_row ? "grey" : ".") << '\t' << (r.polar_closed_mark ? "pc" : ".")
       << '\n';
  }
  return os.str();
}

}  // namespace projlens
