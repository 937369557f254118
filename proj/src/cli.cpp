#include "projlens/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "projlens/classify.hpp"
#include "projlens/diagram.hpp"
#include "projlens/fingeo.hpp"
#include "projlens/levi.hpp"
#include "projlens/projgrp.hpp"
#include "projlens/roots.hpp"
#include "projlens/tables.hpp"

namespace projlens {

namespace {

std::pair<Family, int> parse_family(const std::string& fam, int rank) {
  if (fam.empty()) throw CLI::ValidationError("--family", "family required");
  Family f = family_from_char(fam[0]);
  if (fam.size() > 1) {
    const int r = std::stoi(fam.substr(1));
    if (rank > 0 && rank != r)
      throw CLI::ValidationError("--rank", "conflicting rank in family token");
    return {f, r};
  }
  if (rank <= 0) throw CLI::ValidationError("--rank", "rank required");
  return {f, rank};
}

TypeSet parse_types(const std::string& csv) {
  TypeSet out;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    const int v = std::stoi(tok);
    if (v < 1 || v > TypeSet::kMaxNode)
      throw CLI::ValidationError("--types", "labels must be positive integers");
    out = out.with(v);
  }
  return out;
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << "n = ";
  if (v.n == NValue::kUnresolved)
    os << "unresolved";
  else
    os << static_cast<int>(v.n);
  os << "\ndecided_by = " << decided_by_name(v.decided_by);
  os << "\nself_opposite = " << (v.self_opposite ? "yes" : "no");
  os << "\npolar_closed = " << (v.polar_closed ? "yes" : "no");
  if (v.delta) {
    os << "\ndelta =";
    bool trivial = true;
    for (int x : v.delta->domain().to_vector())
      if ((*v.delta)(x) != x) {
        os << ' ' << x << "->" << (*v.delta)(x);
        trivial = false;
      }
    if (trivial) os << " identity";
  }
  if (v.witness) {
    os << "\nwitness =";
    for (TypeSet p : *v.witness) os << ' ' << p.to_string();
  }
  os << '\n';
  return os.str();
}

int run_oracle_check(const Geometry& geom, int samples, std::uint64_t seed, std::ostream& out,
                     std::ostream& err) {
  const ChamberGraph graph = build_chamber_graph(geom);
  std::vector<TypeSet> jpool;
  if (geom.kind() == GeomKind::kProjective) {
    const std::uint32_t all = geom.diagram().nodes().bits();
    for (std::uint32_t m = (all - 1) & all; m; m = (m - 1) & all) jpool.push_back(TypeSet(m));
  } else {
    jpool.push_back(TypeSet::single(1));
    jpool.push_back(TypeSet::single(geom.rank() - 1));
    jpool.push_back(TypeSet::single(geom.rank()));
  }
  std::vector<std::vector<Flag>> flags_of;
  for (TypeSet j : jpool) flags_of.push_back(enumerate_flags(geom, j));

  SplitRng rng(seed);
  int mismatches = 0;
  for (int s = 0; s < samples; ++s) {
    const std::size_t ji = rng.below(jpool.size());
    const TypeSet j = jpool[ji];
    const TypeSet j_opp = geom.type_opposition().image_of(j);
    const auto& pool = flags_of[ji];
    const Flag& f = pool[rng.below(pool.size())];
    // uniform choice among flags opposite f
    std::vector<const Flag*> opp;
    const std::vector<Flag>* cross = nullptr;
    std::vector<Flag> cross_store;
    if (j_opp == j) {
      cross = &pool;
    } else {
      auto it = std::find(jpool.begin(), jpool.end(), j_opp);
      if (it != jpool.end()) {
        cross = &flags_of[it - jpool.begin()];
      } else {
        cross_store = enumerate_flags(geom, j_opp);
        cross = &cross_store;
      }
    }
    for (const Flag& cand : *cross)
      if (is_opposite(geom, f, cand)) opp.push_back(&cand);
    if (opp.empty()) continue;
    const Flag& fp = *opp[rng.below(opp.size())];
    const auto domain = residue_domain(geom, f);
    const Chamber& c = domain[rng.below(domain.size())];
    const Chamber closed = perspectivity_apply(geom, f, fp, c);
    const Chamber oracle = gallery_projection_oracle(geom, graph, fp, c);
    if (!(closed == oracle)) ++mismatches;
  }
  out << "{\"geometry\":\"" << geom.tag() << "\",\"q\":" << geom.q() << ",\"samples\":" << samples
      << ",\"mismatches\":" << mismatches << "}\n";
  if (mismatches > 0) {
    err << "oracle-check failed: " << mismatches << " mismatches\n";
    return 3;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"classification and brute-force verification of projectivity groups in "
               "simply laced spherical buildings"};
  app.require_subcommand(1);

  std::string family, types_csv, filter_name_s = "all-proper-nonempty", geometry = "A2",
              cotype_csv, flag_csv;
  int rank = 0, max_rank = 0, q = 2, budget = 200, samples = 1000, dim = 2;
  std::uint64_t seed = 1;
  bool json = false;

  auto* cmd_diag = app.add_subcommand("diagram", "print a Bourbaki-labelled diagram");
  cmd_diag->add_option("--family", family)->required();
  cmd_diag->add_option("--rank", rank);
  cmd_diag->add_flag("--json", json);

  auto* cmd_classify = app.add_subcommand("classify", "decide n(J) for a type set");
  cmd_classify->add_option("--family", family)->required();
  cmd_classify->add_option("--rank", rank);
  cmd_classify->add_option("--types", types_csv)->required();
  cmd_classify->add_flag("--json", json);

  auto* cmd_enum = app.add_subcommand("enumerate", "enumerate type sets passing a filter");
  cmd_enum->add_option("--family", family)->required();
  cmd_enum->add_option("--rank", rank);
  cmd_enum->add_option("--filter", filter_name_s);
  cmd_enum->add_flag("--json", json);

  auto* cmd_table = app.add_subcommand("table", "projectivity-group table for an ambient type");
  cmd_table->add_option("--family", family)->required();
  cmd_table->add_option("--rank", rank);

  auto* cmd_mcor = app.add_subcommand("mcor", "smallest opposition kernel vs polar type");
  cmd_mcor->add_option("--family", family);
  cmd_mcor->add_option("--rank", rank);
  cmd_mcor->add_option("--max-rank", max_rank);
  cmd_mcor->add_flag("--json", json);

  auto* cmd_brute = app.add_subcommand("brute", "generate projectivity groups by sampled walks");
  cmd_brute->add_option("--geometry", geometry)->required();
  cmd_brute->add_option("--q", q)->required();
  cmd_brute->add_option("--cotype", cotype_csv)->required();
  cmd_brute->add_option("--budget", budget);
  cmd_brute->add_option("--seed", seed);
  cmd_brute->add_flag("--json", json);

  auto* cmd_levi = app.add_subcommand("levi", "unipotent radical checks for a standard flag");
  cmd_levi->add_option("--dim", dim)->required();
  cmd_levi->add_option("--flag", flag_csv)->required();
  cmd_levi->add_option("--q", q)->required();

  auto* cmd_oracle = app.add_subcommand("oracle-check",
                                        "closed-form projections against the gallery oracle");
  cmd_oracle->add_option("--geometry", geometry)->required();
  cmd_oracle->add_option("--q", q)->required();
  cmd_oracle->add_option("--samples", samples);
  cmd_oracle->add_option("--seed", seed);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << '\n' << app.help();
    return 1;
  }

  try {
    if (cmd_diag->parsed()) {
      auto [f, r] = parse_family(family, rank);
      Diagram d = make_diagram(f, r);
      if (json) {
        out << to_json(d) << '\n';
      } else {
        out << family_char(f) << '_' << r << ": nodes " << d.nodes().to_string() << ", edges";
        for (auto [a, b] : d.edges()) out << ' ' << a << '-' << b;
        out << '\n';
      }
      return 0;
    }
    if (cmd_classify->parsed()) {
      auto [f, r] = parse_family(family, rank);
      Diagram d = make_diagram(f, r);
      Verdict v = n_of(d, parse_types(types_csv));
      out << (json ? to_json(v) + "\n" : verdict_text(v));
      return v.n == NValue::kUnresolved ? 2 : 0;
    }
    if (cmd_enum->parsed()) {
      auto [f, r] = parse_family(family, rank);
      Diagram d = make_diagram(f, r);
      auto list = enumerate_types(d, filter_from_name(filter_name_s));
      if (json) {
        out << "{\"count\":" << list.size() << ",\"types\":[";
        for (std::size_t i = 0; i < list.size(); ++i) {
          if (i) out << ',';
          out << '[';
          auto v = list[i].to_vector();
          for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k];
          out << ']';
        }
        out << "]}\n";
      } else {
        out << "count " << list.size() << '\n';
        for (TypeSet t : list) out << t.to_string() << '\n';
      }
      return 0;
    }
    if (cmd_table->parsed()) {
      auto [f, r] = parse_family(family, rank);
      out << render_table(f, r);
      return 0;
    }
    if (cmd_mcor->parsed()) {
      std::vector<std::pair<Family, int>> targets;
      if (family.empty()) {
        const int hi = max_rank > 0 ? max_rank : 9;
        for (int r = 1; r <= hi; ++r) targets.emplace_back(Family::A, r);
        for (int r = 4; r <= hi; ++r) targets.emplace_back(Family::D, r);
        for (int r = 6; r <= std::min(hi, 8); ++r) targets.emplace_back(Family::E, r);
      } else {
        const Family f = family_from_char(family[0]);
        int lo = family.size() > 1 ? std::stoi(family.substr(1)) : rank;
        if (lo == 0) lo = f == Family::A ? 1 : (f == Family::D ? 4 : 6);
        int hi = max_rank > 0 ? max_rank
                              : (family.size() > 1 || rank > 0 ? lo
                                                               : (f == Family::E ? 8 : 9));
        for (int k = lo; k <= hi; ++k) {
          if (f == Family::E && (k < 6 || k > 8)) continue;
          if (f == Family::D && k < 4) continue;
          targets.emplace_back(f, k);
        }
      }
      bool all_ok = true;
      for (auto [f, r] : targets) {
        Diagram d = make_diagram(f, r);
        KernelResult k = smallest_opposition_kernel(d);
        TypeSet pt = polar_type(d);
        const bool ok = k.unique && k.kernel == pt;
        all_ok = all_ok && ok;
        out << family_char(f) << '_' << r << ": kernel " << k.kernel.to_string()
            << (k.unique ? " (unique)" : " (not unique)") << ", polar type " << pt.to_string()
            << (ok ? " [ok]" : " [mismatch]") << '\n';
      }
      return all_ok ? 0 : 3;
    }
    if (cmd_brute->parsed()) {
      Geometry geom = Geometry::from_tag(geometry, q);
      TypeSet cot = parse_types(cotype_csv);
      if (!cot.subset_of(geom.diagram().nodes()) || cot.empty())
        throw CLI::ValidationError("--cotype", "not a valid nonempty type subset");
      TypeSet j = geom.diagram().nodes().minus(cot);
      if (j.empty()) throw CLI::ValidationError("--cotype", "flag type must be nonempty");
      const auto flags = enumerate_flags(geom, j);
      BruteResult res = generate_projectivity_groups(geom, flags.front(), budget, seed);
      if (json) {
        out << res.to_json() << '\n';
      } else {
        out << "geometry " << geom.tag() << " q=" << q << " flag type " << j.to_string()
            << "\ndomain " << res.domain.size() << " chambers\n|pi+| = " << res.pi_plus.order()
            << "\n|pi|  = " << res.pi.order()
            << "\nindex = " << res.pi.order() / res.pi_plus.order()
            << "\nodd walks " << (res.odd_exists ? "sampled" : "none")
            << ", duality " << (res.odd_duality ? "yes" : "no") << "\nwalks used "
            << res.walks_sampled << '\n';
      }
      return 0;
    }
    if (cmd_levi->parsed()) {
      Geometry geom = Geometry::projective(dim, q);
      TypeSet j = parse_types(flag_csv);
      UnipotentReport rep = unipotent_transitivity_check(geom, j);
      out << rep.to_json() << '\n';
      return (rep.sharply_transitive && rep.fixes_residue) ? 0 : 3;
    }
    if (cmd_oracle->parsed()) {
      Geometry geom = Geometry::from_tag(geometry, q);
      return run_oracle_check(geom, samples, seed, out, err);
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << app.help();
  return 1;
}

}  // namespace projlens
