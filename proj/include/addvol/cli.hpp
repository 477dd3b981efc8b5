#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "addvol/addvol.hpp"

namespace addvol::cli {

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

namespace detail {

inline int exit_code_for(Errc c) {
  switch (c) {
    case Errc::parse_error:
    case Errc::duplicate_element:
    case Errc::empty_set:
      return 2;
    case Errc::budget_exceeded:
      return 4;
    default:
      return 3;  // domain constraint violations
  }
}

// '@path' literals pull the payload from a file.
inline std::string resolve_literal(const std::string& text) {
  if (text.empty() || text[0] != '@') return text;
  std::ifstream in(text.substr(1));
  if (!in) fail(Errc::parse_error, "cannot read file " + text.substr(1));
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string s = buf.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

inline SetLiteral parse_any(const std::string& text) {
  return parse_set_literal(resolve_literal(text));
}

inline Set2D require_2d(const SetLiteral& lit) {
  if (const Set2D* s = std::get_if<Set2D>(&lit)) return *s;
  fail(Errc::parse_error, "expected a 2D set literal like [[0,0],[1,2]]");
}

inline Set1D require_1d(const SetLiteral& lit) {
  if (const Set1D* s = std::get_if<Set1D>(&lit)) return *s;
  fail(Errc::parse_error, "expected a 1D set literal like 0,1,3");
}

inline RatAffineMap2D parse_map_spec(const std::string& text) {
  std::vector<Rat> vals;
  std::string token;
  std::istringstream in(resolve_literal(text));
  while (std::getline(in, token, ',')) {
    auto v = parse_rat(token);
    if (!v) fail(Errc::parse_error, "bad rational '" + token + "' in map");
    vals.push_back(*v);
  }
  if (vals.size() == 4)
    return RatAffineMap2D{vals[0], vals[1], vals[2], vals[3], 0, 0};
  if (vals.size() == 6)
    return RatAffineMap2D{vals[0], vals[1], vals[2], vals[3], vals[4], vals[5]};
  fail(Errc::parse_error, "map needs 4 or 6 comma-separated rationals");
}

inline std::string render_grid(const Set2D& a) {
  BoundingBox box = bounding_box(a);
  std::string out;
  for (Int y = box.a2 + box.h2 - 1; y >= box.a2; --y) {
    std::string line;
    for (Int x = box.a1; x < box.a1 + box.h1; ++x)
      line += a.contains(Point{x, y}) ? '*' : '.';
    out += line;
    out += '\n';
  }
  return out;
}

struct BudgetFlags {
  std::int64_t max_length = 64;
  std::int64_t max_k = 7;
  std::uint64_t max_nodes = 100'000'000;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-length", max_length, "largest segment endpoint scanned");
    cmd->add_option("--max-k", max_k, "largest cardinality searched");
    cmd->add_option("--max-nodes", max_nodes, "backtracking node limit");
  }
  SearchBudget budget() const { return {max_length, max_k, max_nodes}; }
};

}  // namespace detail

/// Parses and executes one command line (without argv[0]); returns the exit
/// code and the stdout payload. Exit codes: 0 success, 2 invalid input,
/// 3 constraint violation, 4 budget exceeded.
inline CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"exact additive-combinatorics toolkit"};
  app.require_subcommand(1);
  std::string out_mode = "json";
  app.add_option("--out", out_mode, "output mode: json|text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string lit_a, lit_b, lit_set, lit_map;
  std::vector<std::string> map_specs;
  std::int64_t opt_k = 0, opt_c = 0, opt_b = -1, opt_kbar1 = 0, opt_kbar2 = 0;
  std::int64_t opt_kmax = 6, opt_band = 3;
  std::string opt_t;
  bool flag_min = false, flag_relations = false;

  CLI::App* c_sumset = app.add_subcommand("sumset", "A + B of two sets of the same kind");
  c_sumset->add_option("--a", lit_a)->required();
  c_sumset->add_option("--b", lit_b)->required();

  CLI::App* c_dim = app.add_subcommand("dim", "Freiman dimension via the rank formula");
  c_dim->add_option("--set,--set2d", lit_set)->required();
  c_dim->add_flag("--relations", flag_relations, "include the relation rows");

  CLI::App* c_volume = app.add_subcommand("volume", "1D segment volume or planar hull count");
  c_volume->add_option("--set,--set2d", lit_set)->required();
  c_volume->add_flag("--min", flag_min, "search the minimal isomorphic 1D volume");
  detail::BudgetFlags volume_budget;
  volume_budget.attach(c_volume);

  CLI::App* c_reduce = app.add_subcommand("reduce", "certified 2D -> 1D dimension reduction");
  c_reduce->add_option("--set,--set2d", lit_set)->required();

  CLI::App* c_iso = app.add_subcommand("iso", "check or search Freiman isomorphisms");
  c_iso->add_option("--a", lit_a)->required();
  c_iso->add_option("--b", lit_b)->required();
  c_iso->add_option("--map", lit_map, "pairing literal [[src,dst],...]; omit to search");
  detail::BudgetFlags iso_budget;
  iso_budget.attach(c_iso);

  CLI::App* c_ext = app.add_subcommand("extremal", "generate an extremal set for (k,c,b) or (k,T)");
  c_ext->add_option("--k", opt_k)->required();
  c_ext->add_option("--c", opt_c);
  c_ext->add_option("--b", opt_b);
  c_ext->add_option("--t", opt_t, "doubling value T (alternative to --c/--b)");

  CLI::App* c_ag = app.add_subcommand("approx-group", "generate a symmetric approximate group");
  c_ag->add_option("--kbar1", opt_kbar1)->required();
  c_ag->add_option("--kbar2", opt_kbar2)->required();
  c_ag->add_option("--b", opt_b)->required();

  CLI::App* c_scan = app.add_subcommand("conjecture-scan", "tabulate brute a_m against the formula");
  c_scan->add_option("--kmax", opt_kmax);
  c_scan->add_option("--band", opt_band,
                     "scan T below the first value of band c = band+1");
  detail::BudgetFlags scan_budget;
  scan_budget.attach(c_scan);

  CLI::App* c_render = app.add_subcommand("render", "ASCII grid of a planar set, rows top-down");
  c_render->add_option("--set,--set2d", lit_set)->required();

  CLI::App* c_affine = app.add_subcommand("affine", "apply rational affine maps to a planar set");
  c_affine->add_option("--set,--set2d", lit_set)->required();
  c_affine
      ->add_option("--map", map_specs,
                   "m11,m12,m21,m22[,t1,t2]; repeat to chain maps in order")
      ->required();

  std::vector<std::string> argv_copy = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("addvol");
    for (const std::string& s : argv_copy) argv.push_back(s.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    return {2, std::string(e.what()) + "\n"};
  }

  const bool json_mode = out_mode == "json";
  Json j;
  std::string text;

  try {
    if (c_sumset->parsed()) {
      SetLiteral a = detail::parse_any(lit_a);
      SetLiteral b = detail::parse_any(lit_b);
      if (a.index() != b.index())
        fail(Errc::parse_error, "sumset needs two sets of the same kind");
      if (std::holds_alternative<Set1D>(a)) {
        Set1D s = sumset(std::get<Set1D>(a), std::get<Set1D>(b));
        j = Json{{"ref", "sumset"}, {"set", to_json(s)}, {"k", s.k()}};
        for (const Int& x : s.elements())
          text += (text.empty() ? "" : ",") + to_string(x);
        text += "\n";
      } else {
        Set2D s = sumset(std::get<Set2D>(a), std::get<Set2D>(b));
        j = Json{{"ref", "sumset"}, {"set", to_json(s)}, {"k", s.k()}};
        text = to_json(s).dump() + "\n";
      }
    } else if (c_dim->parsed()) {
      SetLiteral a = detail::parse_any(lit_set);
      RelationMatrix rm = std::holds_alternative<Set1D>(a)
                              ? relation_matrix(std::get<Set1D>(a))
                              : relation_matrix(std::get<Set2D>(a));
      std::int64_t dim = rm.k == 1 ? 0
                                   : static_cast<std::int64_t>(rm.k) - 1 -
                                         static_cast<std::int64_t>(rm.lambda);
      j = Json{{"ref", "dimension (rank formula)"},
               {"k", rm.k},
               {"lambda", rm.lambda},
               {"dim", dim}};
      if (flag_relations) j["relations"] = to_json(rm)["rows"];
      text = "k=" + std::to_string(rm.k) + " lambda=" + std::to_string(rm.lambda) +
             " dim=" + std::to_string(dim) + "\n";
    } else if (c_volume->parsed()) {
      SetLiteral a = detail::parse_any(lit_set);
      if (std::holds_alternative<Set1D>(a)) {
        const Set1D& s = std::get<Set1D>(a);
        Int vol = volume_1d(s);
        j = Json{{"ref", "volume"},
                 {"volume", int_to_json(vol)},
                 {"normal_form", to_json(normalize(s))}};
        if (flag_min) {
          MinVolumeResult mv = min_volume_search(s, volume_budget.budget());
          j["min_volume"] = int_to_json(mv.length);
          j["witness"] = to_json(mv.witness);
        }
        text = "volume " + to_string(vol) + "\n";
      } else {
        const Set2D& s = std::get<Set2D>(a);
        Int hull = hull_lattice_count(s);
        BoundingBox box = bounding_box(s);
        j = Json{{"ref", "volume"},
                 {"hull_lattice_count", int_to_json(hull)},
                 {"box", to_json(box)},
                 {"box_count", int_to_json(box.point_count())}};
        text = "hull lattice count " + to_string(hull) + ", box " +
               to_string(box.point_count()) + "\n";
      }
    } else if (c_reduce->parsed()) {
      Set2D a = detail::require_2d(detail::parse_any(lit_set));
      ReductionReport r = reduce_dim(a);
      j = to_json(r);
      text = "ell=(1," + to_string(r.spec.m) + ") T " +
             std::to_string(r.t_before) + "->" + std::to_string(r.t_after) +
             " V " + to_string(r.v_before) + "->" + to_string(r.v_after) +
             " dim " + std::to_string(r.dim_before) + "->" +
             std::to_string(r.dim_after) + "\n";
    } else if (c_iso->parsed()) {
      SetLiteral a = detail::parse_any(lit_a);
      SetLiteral b = detail::parse_any(lit_b);
      auto dispatch = [&](const auto& sa, const auto& sb) {
        using S = typename std::decay_t<decltype(sa)>::element;
        using D = typename std::decay_t<decltype(sb)>::element;
        if (!lit_map.empty()) {
          auto phi = parse_pairing<S, D>(detail::resolve_literal(lit_map));
          bool hom = check_homomorphism(sa, sb, phi);
          bool iso = check_isomorphism(sa, sb, phi);
          j = Json{{"ref", "morphism check"},
                   {"homomorphism", hom},
                   {"isomorphism", iso}};
          text = std::string("homomorphism ") + (hom ? "yes" : "no") +
                 ", isomorphism " + (iso ? "yes" : "no") + "\n";
        } else {
          auto found = exists_isomorphism(sa, sb, iso_budget.budget());
          j = Json{{"ref", "isomorphism search"}, {"found", found.has_value()}};
          if (found) j["map"] = pairing_to_json(*found);
          text = std::string(found ? "isomorphic" : "no isomorphism") + "\n";
        }
      };
      std::visit([&](const auto& sa) {
        std::visit([&](const auto& sb) { dispatch(sa, sb); }, b);
      }, a);
    } else if (c_ext->parsed()) {
      std::int64_t c = opt_c, b = opt_b;
      if (!opt_t.empty()) {
        auto tv = parse_int(opt_t);
        if (!tv) fail(Errc::parse_error, "bad --t value");
        auto cb = decompose_T(opt_k, *tv);
        c = cb.first;
        b = cb.second;
      } else if (opt_c == 0 || opt_b < 0) {
        fail(Errc::parse_error, "extremal needs --c and --b, or --t");
      }
      ExtremalParams e = ExtremalParams::make(opt_k, c, b);
      Set1D s = gen_extremal(opt_k, c, b);
      Int t_val = compose_T(opt_k, c, b);
      j = Json{{"ref", "extremal-set generator"},
               {"elements", to_json(s)},
               {"k", opt_k},
               {"T", int_to_json(t_val)},
               {"max", int_to_json(s.max())},
               {"a_m", int_to_json(a_m_formula(opt_k, t_val))},
               {"params", Json{{"c", e.c},
                               {"b", e.b},
                               {"k1", e.k1},
                               {"k2", e.k2},
                               {"k3", e.k3},
                               {"p", int_to_json(e.p)}}}};
      for (const Int& x : s.elements())
        text += (text.empty() ? "" : ",") + to_string(x);
      text += "\n";
    } else if (c_ag->parsed()) {
      ApproxGroupParams g = ApproxGroupParams::make(opt_kbar1, opt_kbar2, opt_b);
      Set1D s = gen_approx_group(g);
      Int t_actual = Int(s.doubling_size());
      Int t_formula = approx_compose_T(g.k, g.c, g.b);
      j = Json{{"ref", "approximate-group generator"},
               {"elements", to_json(s)},
               {"k", g.k},
               {"T", int_to_json(t_actual)},
               {"T_formula", int_to_json(t_formula)},
               {"T_matches_formula", t_actual == t_formula},
               {"t_formula", "c*k - (3*c^2 - 2*c - 4)/4 + b"},
               {"t_formula_note",
                "denominator 4 (the /2 statement variant fails even the "
                "kbar2 = 1 cells); exact for kbar2 <= 1, low for kbar2 >= 2"},
               {"L", int_to_json(s.max() - s.min() + 1)},
               {"L_formula", int_to_json(L_m_formula(g.k, g.c, g.b))},
               {"params", Json{{"kbar1", g.kbar1},
                               {"kbar2", g.kbar2},
                               {"b", g.b},
                               {"c", g.c},
                               {"p", int_to_json(g.p)}}}};
      for (const Int& x : s.elements())
        text += (text.empty() ? "" : ",") + to_string(x);
      text += "\n";
    } else if (c_scan->parsed()) {
      Json rows = Json::array();
      std::string tsv = "k\tT\tc\tb\ta_m_formula\ta_m_brute\tmatch\n";
      for (std::int64_t k = 4; k <= opt_kmax; ++k) {
        std::cerr << "scan k=" << k << "\n";
        Int t_hi = max_T(k);
        if (opt_band + 2 <= k - 1) {
          Int boundary = compose_T(k, opt_band + 1, 0);
          if (boundary - 1 < t_hi) t_hi = boundary - 1;
        }
        for (Int t = min_T(k); t <= t_hi; ++t) {
          auto cb = decompose_T(k, t);
          Int fm = a_m_formula(k, t);
          auto bm = brute_a_m(k, t, scan_budget.budget());
          bool match = bm && *bm == fm;
          rows.push_back(Json{{"k", k},
                              {"T", int_to_json(t)},
                              {"c", cb.first},
                              {"b", cb.second},
                              {"a_m_formula", int_to_json(fm)},
                              {"a_m_brute", bm ? int_to_json(*bm) : Json()},
                              {"match", match}});
          tsv += std::to_string(k) + "\t" + to_string(t) + "\t" +
                 std::to_string(cb.first) + "\t" + std::to_string(cb.second) +
                 "\t" + to_string(fm) + "\t" + (bm ? to_string(*bm) : "none") +
                 "\t" + (match ? "yes" : "no") + "\n";
        }
      }
      j = Json{{"ref", "exhaustive a_m scan"}, {"rows", rows}};
      text = tsv;
    } else if (c_render->parsed()) {
      Set2D a = detail::require_2d(detail::parse_any(lit_set));
      std::string grid = detail::render_grid(a);
      Json lines = Json::array();
      std::istringstream in(grid);
      std::string line;
      while (std::getline(in, line)) lines.push_back(line);
      j = Json{{"ref", "grid render"}, {"grid", lines}};
      text = grid;
    } else if (c_affine->parsed()) {
      Set2D a = detail::require_2d(detail::parse_any(lit_set));
      RatImage img = apply_affine(a, detail::parse_map_spec(map_specs[0]));
      for (std::size_t i = 1; i < map_specs.size(); ++i)
        img = apply_affine(img, detail::parse_map_spec(map_specs[i]));
      Json pts = Json::array();
      for (const RatPoint& p : img.points)
        pts.push_back(Json::array({rat_to_json(p.x), rat_to_json(p.y)}));
      j = Json{{"ref", "affine image"},
               {"points", pts},
               {"integral", img.integral}};
      for (const RatPoint& p : img.points)
        text += "(" + to_string(p.x) + "," + to_string(p.y) + ")\n";
    }
  } catch (const Error& e) {
    Json err{{"error", Json{{"code", errc_name(e.code())},
                            {"message", e.what()}}}};
    std::cerr << e.what() << "\n";
    return {detail::exit_code_for(e.code()),
            json_mode ? err.dump() + "\n" : std::string(e.what()) + "\n"};
  }

  return {0, json_mode ? j.dump() + "\n" : text};
}

}  // namespace addvol::cli
