// sasaki-hodge: command-line front end for the invariant library.
//
// Exit status: 0 success, 1 verification mismatch, 2 usage error,
// 3 domain or integrity error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "output.hpp"
#include "sasaki_hodge/json_io.hpp"
#include "sasaki_hodge/sasaki_hodge.hpp"

namespace sasaki::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

constexpr const char* kSpillEnv = "SASAKI_HODGE_SPILL_DIR";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (text.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

Integer parse_int_arg(const std::string& text, const std::string& what) {
  try {
    return parse_integer(trim(text));
  } catch (const DomainError&) {
    throw UsageError("malformed " + what + ": '" + text + "'");
  }
}

std::vector<Integer> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<Integer> out;
  for (const auto& item : split(trim(text), ',')) out.push_back(parse_int_arg(item, what));
  return out;
}

std::vector<long> to_longs(const std::vector<Integer>& values, const std::string& what) {
  std::vector<long> out;
  for (const auto& v : values) {
    if (!v.fits_slong_p()) throw UsageError(what + " entry out of range: " + to_string(v));
    out.push_back(v.get_si());
  }
  return out;
}

/// "d1,d2,..." for one factor; "a:b,c:d" (one multidegree per comma) otherwise.
std::vector<MultiDegree> parse_multidegrees(const std::string& text, std::size_t factors) {
  std::vector<MultiDegree> out;
  for (const auto& item : split(trim(text), ',')) {
    MultiDegree md;
    for (const auto& part : split(trim(item), ':')) md.degrees.push_back(parse_int_arg(part, "degree"));
    if (md.degrees.size() != factors) {
      throw UsageError("multidegree '" + item + "' needs " + std::to_string(factors) + " entries");
    }
    out.push_back(std::move(md));
  }
  return out;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "table") return OutputFormat::Table;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw UsageError("unknown format " + s);
}

std::string join_degrees(const std::vector<Integer>& ds) {
  std::string s;
  for (std::size_t i = 0; i < ds.size(); ++i) s += (i ? "," : "") + to_string(ds[i]);
  return s;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError("invalid JSON in " + path + ": " + e.what());
  }
}

// ---------------------------------------------------------------- ci

struct CiArgs {
  std::string ambient;
  std::string degrees;
  bool wall = false;
  bool hodge = false;
  bool diamond = false;
};

Output cmd_ci(const CiArgs& args) {
  std::vector<int> dims;
  for (const auto& v : to_longs(parse_int_list(args.ambient, "ambient dimension"), "ambient")) {
    dims.push_back(static_cast<int>(v));
  }
  if (dims.empty()) throw UsageError("--ambient needs at least one dimension");
  AmbientSpace ambient(dims);
  const CompleteIntersectionSpec spec(ambient, parse_multidegrees(args.degrees, ambient.factors()));

  Output out;
  nlohmann::json hs = nlohmann::json::array();
  for (const auto& h : spec.hypersurfaces()) hs.push_back(h.degrees);
  out.doc["spec"] = {{"ambient", dims}, {"hypersurfaces", hs}, {"dim", spec.dimension()}};

  const bool needs_wall = args.wall || args.hodge || args.diamond;
  if (!needs_wall) {
    out.doc["chern"] = chern_numbers(spec);
    out.doc["total_chern_class"] = tangent_chern_class(spec).to_string();
    return out;
  }
  const auto w = wall_invariants(spec);
  if (args.wall) out.doc["wall"] = w;
  if (args.hodge) out.doc["hodge"] = ci3_hodge(w, w.d);
  if (args.diamond) out.doc["diamond"] = ci3_diamond(w, w.d);
  if (args.wall && !args.hodge && !args.diamond) {
    out.header = {"degrees", "d", "p1", "euler", "c1"};
    out.rows = {{join_degrees(spec.degrees()), to_string(w.d), to_string(w.m), to_string(w.e),
                 to_string(w.k)}};
  }
  return out;
}

// ---------------------------------------------------------------- tuple-search

Output tuple_search_output(const TupleSearchResult& r) {
  Output out;
  out.doc = r;
  out.summary = {{"n", to_string(r.n)},
                 {"c2", to_string(3 * r.n)},
                 {"distinct c1sq", std::to_string(r.groups.size())}};
  out.header = {"q", "p", "c1sq", "d_c1"};
  for (const auto& row : r.rows) {
    out.rows.push_back({to_string(row.q), to_string(row.p), to_string(row.c1sq),
                        to_string(row.c1_div)});
  }
  return out;
}

Output cmd_tuple_search(std::size_t k, const std::string& q_list, bool even_only) {
  std::optional<std::vector<Integer>> override_q;
  if (!q_list.empty()) override_q = parse_int_list(q_list, "q value");
  auto result = tuple_search(k, override_q, even_only);
  auto out = tuple_search_output(result);
  auto chosen = distinct_tuple(result, k);
  out.doc["tuple"] = chosen;
  return out;
}

// ---------------------------------------------------------------- horikawa / theorem-c

std::vector<std::string> surface_row(const std::string& name, const SurfaceInvariants& s) {
  return {name,          to_string(s.c1sq), to_string(s.c2),     to_string(s.chi_o),
          to_string(s.b2), to_string(s.h02), to_string(s.h11),   to_string(s.c1_div),
          s.spin ? "yes" : "no"};
}

const std::vector<std::string> kSurfaceHeader = {"surface", "c1sq", "c2",   "chi_o", "b2",
                                                 "h02",     "h11",  "d_c1", "spin"};

Output cmd_horikawa(const Integer& i) {
  const auto inv = horikawa_invariants(i);
  const auto spin = horikawa_spin(i);
  Output out;
  out.doc = {{"i", i},
             {"invariants", inv},
             {"spin_test", spin},
             {"canonical_ample",
              hirzebruch_ample(i, HirzebruchClass{1, i + 1})},
             {"branch_locus_ample", hirzebruch_ample(i, horikawa_branch_locus(i))}};
  out.summary = {{"(B/2).F", to_string(spin.witness)}};
  out.header = kSurfaceHeader;
  out.rows = {surface_row("Y_" + to_string(i), inv)};
  return out;
}

Output cmd_theorem_c(const Integer& k) {
  const auto pair = theorem_c_pair(k);
  Output out;
  out.doc = pair;
  out.doc["manifold"] = pair.xk_bundle.manifold;
  out.summary = {{"total space", pair.xk_bundle.manifold.to_string()},
                 {"hodge differ", pair.hodge_differ ? "yes" : "no"},
                 {"hamilton", to_string(pair.contact_obstruction)}};
  out.header = kSurfaceHeader;
  out.rows = {surface_row("X_" + to_string(k), pair.xk), surface_row("Z_" + to_string(k), pair.zk)};
  return out;
}

Output cmd_nonspin_tuple(std::size_t k, const std::string& euler) {
  Integer a = 1, b = 2;
  if (!euler.empty()) {
    const auto ab = parse_int_list(euler, "Euler class coefficient");
    if (ab.size() != 2) throw UsageError("--euler needs two coefficients a,b");
    a = ab[0];
    b = ab[1];
  }
  const auto t = nonspin_tuple(k, a, b);
  Output out;
  out.doc = t;
  out.summary = {{"n", to_string(t.search.n)},
                 {"euler class", to_string(a) + "*x1 + " + to_string(b) + "*x2"}};
  out.header = {"q", "p", "c1sq", "h02", "h11", "d_c1", "total space"};
  for (const auto& e : t.entries) {
    out.rows.push_back({to_string(e.surface.q), to_string(e.surface.p), to_string(e.inv.c1sq),
                        to_string(e.inv.h02), to_string(e.inv.h11), to_string(e.inv.c1_div),
                        e.bundle.manifold.to_string()});
  }
  return out;
}

// ---------------------------------------------------------------- bw

Output cmd_bw_classify(const std::string& path) {
  const auto base = load_json_file(path).get<BaseSurfaceData>();
  const auto report = bw_classify(base);
  Output out;
  out.doc = report;
  out.summary = {{"manifold", report.manifold.to_string()},
                 {"contact_c1_zero", report.contact_c1_zero ? "yes" : "no"},
                 {"hamilton_div", to_string(report.hamilton_div)},
                 {"basic h02", to_string(report.basic_hodge.h02)},
                 {"basic h11", to_string(report.basic_hodge.h11)},
                 {"negative_type", report.negative_type ? "yes" : "no"}};
  if (!report.note.empty()) out.summary.emplace_back("note", report.note);
  return out;
}

std::pair<WallInvariants, WallInvariants> reference_pair(int index) {
  if (index < 1 || index > 3) throw UsageError("--pair must be 1, 2 or 3");
  const auto table = reference_table2();
  const auto& a = table.rows[2 * (index - 1)];
  const auto& b = table.rows[2 * (index - 1) + 1];
  return {wall_invariants(threefold_spec(a.degrees)), wall_invariants(threefold_spec(b.degrees))};
}

Output diamond_pair_output(nlohmann::json doc, const HodgeDiamond& a, const HodgeDiamond& b) {
  Output out;
  out.doc = std::move(doc);
  out.header = {"p", "q", "first", "second"};
  for (int p = 0; p <= a.dim(); ++p) {
    for (int q = 0; q <= a.dim(); ++q) {
      if (a.at(p, q) == 0 && b.at(p, q) == 0) continue;
      out.rows.push_back({std::to_string(p), std::to_string(q), to_string(a.at(p, q)),
                          to_string(b.at(p, q))});
    }
  }
  return out;
}

Output cmd_bw_seven_dim(const Integer& k, int pair_index) {
  const auto [a, b] = reference_pair(pair_index);
  const auto r = seven_dim_pair(k, a, b);
  auto out = diamond_pair_output(r, r.first, r.second);
  out.summary = {{"dimension", "7"},
                 {"pi_1", r.simply_connected ? "trivial" : "Z/" + to_string(k)}};
  return out;
}

Output cmd_bw_higher_dim(int pair_index, const Integer& genus) {
  const auto [a, b] = reference_pair(pair_index);
  if (genus < 2) throw DomainError("curve factor needs genus >= 2 for ample canonical bundle");
  const auto r = higher_dim_pair(a, b, HodgeDiamond::curve(genus), true);
  auto out = diamond_pair_output(r, r.first, r.second);
  out.summary = {{"dimension", std::to_string(r.dimension)}};
  return out;
}

// ---------------------------------------------------------------- link-sign

Output cmd_link_sign(const std::string& weights, const std::string& degree) {
  const auto w = parse_int_list(weights, "weight");
  const auto d = parse_int_arg(degree, "degree");
  for (const auto& v : w) {
    if (v <= 0) throw UsageError("weights must be positive");
  }
  if (d <= 0) throw UsageError("degree must be positive");
  Integer excess = -d;
  for (const auto& v : w) excess += v;
  const auto sign = link_sign(w, d);
  Output out;
  out.doc = {{"sign", to_string(sign)}, {"excess", excess}};
  out.summary = {{"sign", to_string(sign)}, {"sum w - d", to_string(excess)}};
  return out;
}

// ---------------------------------------------------------------- pair-search

struct PairSearchArgs {
  int max_r = 3;
  long max_degree = 12;
  std::string max_total_degree;
  unsigned jobs = 1;
  std::string spill_dir;
  std::size_t memory_budget = 0;
  bool resume = false;
  bool known = false;
  std::string candidates;
};

Output cmd_pair_search(const PairSearchArgs& args) {
  SearchResult result;
  if (args.known || !args.candidates.empty()) {
    std::vector<DegreeTuple> candidates;
    if (args.known) {
      for (const auto& row : reference_table2().rows) candidates.push_back(row.degrees);
    }
    for (const auto& item : split(args.candidates, ';')) {
      candidates.push_back(to_longs(parse_int_list(item, "degree"), "degree"));
    }
    result = search_collisions(candidates);
  } else {
    SearchBounds bounds;
    bounds.r_max = args.max_r;
    bounds.max_degree = args.max_degree;
    if (!args.max_total_degree.empty()) {
      bounds.d_max = parse_int_arg(args.max_total_degree, "total degree");
    }
    bounds.jobs = args.jobs;
    if (args.memory_budget) bounds.memory_budget = args.memory_budget;
    if (!args.spill_dir.empty()) {
      bounds.spill_dir = args.spill_dir;
    } else if (const char* env = std::getenv(kSpillEnv); env && *env && bounds.memory_budget) {
      bounds.spill_dir = env;
    }
    bounds.resume = args.resume;
    result = search_collisions(bounds);
  }
  Output out;
  out.doc = result.groups;
  out.summary = {{"multidegrees", std::to_string(result.stats.enumerated)},
                 {"phase-2 evaluations", std::to_string(result.stats.phase2_evaluations)},
                 {"collision groups", std::to_string(result.groups.size())}};
  out.header = {"group", "degrees", "d", "p1", "euler", "c1"};
  for (std::size_t g = 0; g < result.groups.size(); ++g) {
    for (const auto& m : result.groups[g].members) {
      out.rows.push_back({std::to_string(g + 1), degrees_to_string(m.degrees), to_string(m.wall.d),
                          to_string(m.wall.m), to_string(m.wall.e), to_string(m.wall.k)});
    }
  }
  return out;
}

// ---------------------------------------------------------------- verify

struct VerifyOutcome {
  Output out;
  bool ok = true;
};

VerifyOutcome cmd_verify(bool seed_tables, const std::string& fixture_path) {
  VerifyOutcome v;
  if (seed_tables) {
    v.out.doc = {{"table1", reference_table1()}, {"table2", reference_table2()}};
    return v;
  }
  Table1Fixture t1 = reference_table1();
  Table2Fixture t2 = reference_table2();
  if (!fixture_path.empty()) {
    const auto doc = load_json_file(fixture_path);
    if (doc.contains("table1")) t1 = doc.at("table1").get<Table1Fixture>();
    if (doc.contains("table2")) t2 = doc.at("table2").get<Table2Fixture>();
  }
  const auto t1_result = verify_table1(t1);
  const auto t2_result = verify_known_pairs(t2);
  const auto c_result = verify_theorem_c(100);
  VerificationResult all = t1_result;
  all.merge(t2_result);
  all.merge(c_result);
  v.ok = all.ok;
  v.out.doc = {{"ok", all.ok},
               {"table1", t1_result.ok},
               {"table2", t2_result.ok},
               {"theorem_c", c_result.ok},
               {"diffs", all.diffs}};
  auto status = [](const VerificationResult& r) { return r.ok ? "ok" : "MISMATCH"; };
  v.out.summary = {{"five-surface tuple", status(t1_result)},
                   {"six known threefolds", status(t2_result)},
                   {"X_k / Z_k identities, k = 1..100", status(c_result)}};
  for (const auto& d : all.diffs) v.out.summary.emplace_back("diff", d);
  return v;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Exact invariants of complete intersections, surface tuples and Boothby-Wang bundles"};
  app.require_subcommand(1);
  std::string format_text = "table";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
  };

  CiArgs ci_args;
  auto* ci = app.add_subcommand("ci", "Chern numbers, Wall invariants and Hodge numbers");
  ci->add_option("--ambient", ci_args.ambient, "Projective factor dimensions, e.g. 9 or 1,3")
      ->required();
  ci->add_option("--degrees", ci_args.degrees,
                 "Hypersurface degrees: 70,16,... or a:b,c:d for several factors")
      ->required();
  ci->add_flag("--wall", ci_args.wall, "Wall invariants (d, p1, Euler number, c1)");
  ci->add_flag("--hodge", ci_args.hodge, "Hodge numbers h03, h12 of a threefold");
  ci->add_flag("--diamond", ci_args.diamond, "Full Hodge diamond of a threefold");
  add_format(ci);

  std::size_t tuple_k = 1;
  std::string tuple_q;
  bool tuple_even = false;
  auto* tuple = app.add_subcommand("tuple-search", "Surfaces with equal c2 and distinct c1^2");
  tuple->add_option("-k", tuple_k, "Number of distinct surfaces")->required()->check(CLI::PositiveNumber);
  tuple->add_option("--q", tuple_q, "Explicit q values, e.g. 2,3,4,6,8");
  tuple->add_flag("--even-only", tuple_even, "Restrict the greedy q selection to even q");
  add_format(tuple);

  std::string horikawa_i;
  auto* horikawa = app.add_subcommand("horikawa", "Invariants of the Horikawa surface Y_i");
  horikawa->add_option("--i", horikawa_i, "Hirzebruch degree i >= 1")->required();
  add_format(horikawa);

  std::string theorem_k;
  auto* theorem = app.add_subcommand("theorem-c", "X_k versus Z_k = Y_{8k+2}");
  theorem->add_option("--k", theorem_k, "k >= 1")->required();
  add_format(theorem);

  std::size_t nonspin_k = 1;
  std::string nonspin_euler;
  auto* nonspin = app.add_subcommand("nonspin-tuple", "Non-spin total spaces over distinct-Hodge surfaces");
  nonspin->add_option("--k", nonspin_k, "Number of surfaces")->required()->check(CLI::PositiveNumber);
  nonspin->add_option("--euler", nonspin_euler, "Euler class a,b (default 1,2)");
  add_format(nonspin);

  auto* bw = app.add_subcommand("bw", "Boothby-Wang total spaces");
  bw->require_subcommand(1);
  std::string bw_file;
  auto* bw_classify_cmd = bw->add_subcommand("classify", "Classify from a JSON base record");
  bw_classify_cmd->add_option("--from-file", bw_file, "Base surface JSON")->required();
  add_format(bw_classify_cmd);
  std::string seven_k = "1";
  int seven_pair = 1;
  auto* seven = bw->add_subcommand("seven-dim", "7-manifolds over a known diffeomorphic pair");
  seven->add_option("--k", seven_k, "Euler class multiple k >= 1");
  seven->add_option("--pair", seven_pair, "Known pair 1, 2 or 3");
  add_format(seven);
  int higher_pair = 1;
  std::string higher_genus = "2";
  auto* higher = bw->add_subcommand("higher-dim", "Products with a curve of genus >= 2");
  higher->add_option("--pair", higher_pair, "Known pair 1, 2 or 3");
  higher->add_option("--genus", higher_genus, "Genus of the curve factor");
  add_format(higher);

  std::string link_weights, link_degree;
  auto* link = app.add_subcommand("link-sign", "Sign of sum w_i - d for a weighted link");
  link->add_option("--weights", link_weights, "Weights, e.g. 1,1,1,21")->required();
  link->add_option("--degree", link_degree, "Degree")->required();
  add_format(link);

  PairSearchArgs ps;
  auto* pair = app.add_subcommand("pair-search", "Search Wall-invariant collisions");
  pair->add_option("--max-r", ps.max_r, "Maximum codimension")->check(CLI::PositiveNumber);
  pair->add_option("--max-degree", ps.max_degree, "Maximum single degree")->check(CLI::Range(2L, 1L << 40));
  pair->add_option("--max-total-degree", ps.max_total_degree, "Bound on the product of degrees");
  pair->add_option("--jobs", ps.jobs, "Worker threads")->check(CLI::PositiveNumber);
  pair->add_option("--spill-dir", ps.spill_dir,
                   std::string("Directory for sorted runs and the checkpoint manifest (default $") +
                       kSpillEnv + " when a memory budget is set)");
  pair->add_option("--memory-budget", ps.memory_budget, "Records per in-memory run before spilling");
  pair->add_flag("--resume", ps.resume, "Reuse completed shards in the spill directory");
  pair->add_flag("--known", ps.known, "Search only the six built-in reference multidegrees");
  pair->add_option("--candidates", ps.candidates, "Explicit multidegrees, e.g. 70,16,16;56,49");
  add_format(pair);

  bool seed_tables = false;
  std::string fixture_path;
  auto* verify = app.add_subcommand("verify", "Replay the reference fixtures and identities");
  verify->add_flag("--seed-tables", seed_tables, "Print the built-in reference tables as JSON");
  verify->add_option("--fixture", fixture_path, "Reference tables JSON (as printed by --seed-tables)");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const auto format = parse_format(format_text);
    Output out;
    int status = kExitOk;
    if (ci->parsed()) {
      out = cmd_ci(ci_args);
    } else if (tuple->parsed()) {
      out = cmd_tuple_search(tuple_k, tuple_q, tuple_even);
    } else if (horikawa->parsed()) {
      out = cmd_horikawa(parse_int_arg(horikawa_i, "i"));
    } else if (theorem->parsed()) {
      out = cmd_theorem_c(parse_int_arg(theorem_k, "k"));
    } else if (nonspin->parsed()) {
      out = cmd_nonspin_tuple(nonspin_k, nonspin_euler);
    } else if (bw_classify_cmd->parsed()) {
      out = cmd_bw_classify(bw_file);
    } else if (seven->parsed()) {
      out = cmd_bw_seven_dim(parse_int_arg(seven_k, "k"), seven_pair);
    } else if (higher->parsed()) {
      out = cmd_bw_higher_dim(higher_pair, parse_int_arg(higher_genus, "genus"));
    } else if (link->parsed()) {
      out = cmd_link_sign(link_weights, link_degree);
    } else if (pair->parsed()) {
      out = cmd_pair_search(ps);
    } else if (verify->parsed()) {
      auto outcome = cmd_verify(seed_tables, fixture_path);
      out = std::move(outcome.out);
      if (!outcome.ok) status = kExitMismatch;
      if (seed_tables) {
        std::cout << out.doc.dump(2) << '\n';
        return kExitOk;
      }
    }
    render(std::cout, out, format);
    return status;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const IntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace sasaki::cli

int main(int argc, char** argv) { return sasaki::cli::run(argc, argv); }
