#include "ekr/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "ekr/error.hpp"
#include "ekr/extremal.hpp"
#include "ekr/report.hpp"
#include "ekr/set_family.hpp"
#include "ekr/theorems.hpp"

namespace ekr::cli {

namespace {

std::size_t parse_count(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit))
    throw Error(ErrorKind::InvalidParameter,
                "expected a nonnegative integer for " + what + ", got '" + s +
                    "'");
  return std::stoull(s);
}

}  // namespace

RRange parse_r_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const std::size_t r = parse_count(s, "--r");
    return {r, r};
  }
  return {parse_count(s.substr(0, dots), "--r"),
          parse_count(s.substr(dots + 2), "--r")};
}

std::vector<std::uint32_t> parse_sequence(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(static_cast<std::uint32_t>(parse_count(item, "--s")));
  if (out.empty())
    throw Error(ErrorKind::InvalidParameter, "--s needs at least one entry");
  return out;
}

namespace {

std::uint32_t need(const std::optional<std::uint32_t>& v,
                   const std::string& flag, const std::string& family) {
  if (!v)
    throw Error(ErrorKind::InvalidParameter,
                "family '" + family + "' needs " + flag);
  return *v;
}

BaseKind base_kind(const std::string& kind, std::uint32_t n) {
  if (kind == "complete") return {BaseKind::Complete{n}};
  if (kind == "path") return {BaseKind::Path{n}};
  if (kind == "cycle") return {BaseKind::Cycle{n}};
  throw Error(ErrorKind::InvalidParameter,
              "unknown base '" + kind + "' (complete, path, cycle)");
}

}  // namespace

Graph make_graph(const GraphSource& src) {
  if (!src.dimacs_path.empty() && !src.family.empty())
    throw Error(ErrorKind::InvalidParameter,
                "give either --family or --graph, not both");
  if (!src.dimacs_path.empty()) {
    std::ifstream in(src.dimacs_path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + src.dimacs_path);
    return read_dimacs(in, src.dimacs_path);
  }
  const std::string& f = src.family;
  if (f.empty())
    throw Error(ErrorKind::InvalidParameter, "no graph given (--family or --graph)");

  PendantSpec spec;
  if (f == "pendant-general") {
    if (src.s.empty())
      throw Error(ErrorKind::InvalidParameter, "pendant-general needs --s");
    const auto n = static_cast<std::uint32_t>(src.s.size());
    if (src.n && *src.n != n)
      throw Error(ErrorKind::InvalidParameter, "--n does not match length of --s");
    spec = {{BaseKind::Complete{n}}, src.s};
    return build(spec);
  }
  const std::uint32_t n = need(src.n, "--n", f);
  if (f == "complete") return make_complete(n);
  if (f == "path") return make_path(n);
  if (f == "cycle") return make_cycle(n);
  if (f == "disjoint-cliques") return make_disjoint_cliques(n, need(src.m, "--m", f));
  if (f == "power") {
    spec.base.kind = BaseKind::Power{
        std::make_shared<const BaseKind>(base_kind(src.base, n)),
        need(src.k, "--k", f)};
    return build(spec);
  }
  if (f == "pendant-complete") spec = {{BaseKind::Complete{n}}, std::vector<std::uint32_t>(n, 1)};
  else if (f == "pendant-path") spec = {{BaseKind::Path{n}}, std::vector<std::uint32_t>(n, 1)};
  else if (f == "pendant-cycle") spec = {{BaseKind::Cycle{n}}, std::vector<std::uint32_t>(n, 1)};
  else if (f == "pendant-uniform")
    spec = {{BaseKind::Complete{n}}, std::vector<std::uint32_t>(n, need(src.m, "--m", f))};
  else
    throw Error(ErrorKind::InvalidParameter, "unknown family '" + f + "'");
  return build(spec);
}

namespace {

void add_graph_options(CLI::App* app, RunConfig& c) {
  app->add_option("--family", c.graph.family,
                  "complete, path, cycle, disjoint-cliques, power, "
                  "pendant-complete, pendant-path, pendant-cycle, "
                  "pendant-general, pendant-uniform");
  app->add_option("--graph", c.graph.dimacs_path, "DIMACS file with role comments");
  app->add_option("--n", c.graph.n, "base vertex count");
  app->add_option("--m", c.graph.m, "clique size");
  app->add_option("--k", c.graph.k, "power exponent / counterexample offset");
  app->add_option("--base", c.graph.base, "base of the power family");
  app->add_option_function<std::string>(
      "--s", [&c](const std::string& s) { c.graph.s = parse_sequence(s); },
      "clique sizes, comma separated");
}

void add_run_options(CLI::App* app, RunConfig& c) {
  app->add_option("--r", c.r_text, "r or an inclusive range a..b");
  app->add_flag("--strict", c.strict, "check that every maximum family is a star");
  app->add_option("--cap", c.cap, "member cap for the exact solver")
      ->check(CLI::PositiveNumber);
  app->add_option("--strict-cap", c.strict_cap, "cap on enumerated maximum families")
      ->check(CLI::PositiveNumber);
  app->add_option("--node-limit", c.node_limit, "search node limit (0 = none)");
  app->add_option_function<std::string>(
      "--mode", [&c](const std::string& s) { c.mode = mis::parse_mode(s); },
      "canonical or parallel");
  app->add_flag("--timing", c.timing, "report wall-clock milliseconds");
}

void add_output_options(CLI::App* app, RunConfig& c) {
  app->add_option_function<std::string>(
      "--format",
      [&c](const std::string& s) {
        if (s == "json") c.format = Format::Json;
        else if (s == "csv") c.format = Format::Csv;
        else if (s == "text") c.format = Format::Text;
        else throw CLI::ValidationError("--format", "json, csv or text");
      },
      "json, csv or text");
  app->add_option("--out", c.out_path, "write the report to a file");
  app->add_option("--seed", c.seed, "seed for randomized generation");
}

void add_family_options(CLI::App* app, RunConfig& c) {
  app->add_option("--input", c.input_path, "family JSON file");
  app->add_option("--generate", c.generate, "star, full or random");
  app->add_option("--center", c.center, "star center vertex index");
}

std::size_t single_r(const RunConfig& c) {
  if (c.r_text.empty()) throw Error(ErrorKind::InvalidParameter, "--r is required");
  const RRange range = parse_r_range(c.r_text);
  if (range.first != range.last)
    throw Error(ErrorKind::InvalidParameter, "this command takes a single --r");
  return range.first;
}

VerifyOptions verify_options(const RunConfig& c) {
  VerifyOptions o;
  o.solver.mode = c.mode;
  o.solver.member_cap = c.cap;
  o.solver.node_limit = c.node_limit;
  o.strict_cap = c.strict_cap;
  return o;
}

double shown_millis(const RunConfig& c, double millis) {
  return c.timing ? std::round(millis * 1000.0) / 1000.0 : 0.0;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

SetFamily obtain_family(const RunConfig& c, const Graph* g) {
  if (!c.input_path.empty()) {
    std::ifstream in(c.input_path);
    if (!in) throw Error(ErrorKind::Io, "cannot open " + c.input_path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw Error(ErrorKind::Parse, std::string("malformed family JSON: ") + e.what());
    }
    return family_from_json(j);
  }
  if (!g) throw Error(ErrorKind::InvalidParameter, "need --input or a graph");
  const std::size_t r = single_r(c);
  if (c.generate == "full") return enumerate_independent(*g, r);
  if (c.generate == "star") {
    Vertex center = 0;
    if (c.center) {
      center = *c.center;
    } else if (g->base_count() > 0 && g->clique_sizes()[0] > 0) {
      center = g->pendant_vertex(1, 1);
    }
    return star(*g, r, center);
  }
  if (c.generate == "random") {
    const SetFamily all = enumerate_independent(*g, r);
    std::vector<VertexSet> pool = all.members();
    std::mt19937_64 rng(c.seed);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<VertexSet> chosen;
    for (const auto& m : pool)
      if (std::all_of(chosen.begin(), chosen.end(),
                      [&](const VertexSet& x) { return x.intersects(m); }))
        chosen.push_back(m);
    return SetFamily(all.universe_size(), r, std::move(chosen));
  }
  throw Error(ErrorKind::InvalidParameter, "unknown --generate '" + c.generate + "'");
}

int cmd_build(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Graph g = make_graph(c.graph);
  if (c.out_path.empty()) {
    write_dimacs(out, g);
    err << "vertices " << g.vertex_count() << " edges " << g.edge_count() << "\n";
    return kOk;
  }
  std::ofstream file(c.out_path);
  if (!file) throw Error(ErrorKind::Io, "cannot write " + c.out_path);
  write_dimacs(file, g);
  if (!file) throw Error(ErrorKind::Io, "write failed for " + c.out_path);
  out << "vertices " << g.vertex_count() << " edges " << g.edge_count() << "\n";
  return kOk;
}

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
  const Graph g = make_graph(c.graph);
  const SetFamily f = enumerate_independent(g, single_r(c));
  if (c.format.value_or(Format::Json) == Format::Json) {
    out << family_to_json(f).dump() << "\n";
  } else {
    out << "# " << g.name() << " r=" << f.r() << " count=" << f.size() << "\n";
    for (const auto& m : f) out << set_text(m) << "\n";
  }
  return kOk;
}

int verdict_exit(const EkrVerdict& v) {
  if (!v.certified) return kUncertified;
  return v.classification == EkrClass::NotEkr ? kNotEkr : kOk;
}

std::size_t param_or_zero(const std::optional<std::uint32_t>& v) {
  return v ? *v : 0;
}

std::size_t base_n(const RunConfig& c) {
  return c.graph.family == "pendant-general" ? c.graph.s.size()
                                             : param_or_zero(c.graph.n);
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const Graph g = make_graph(c.graph);
  const std::size_t r = single_r(c);
  if (r == 0 || r > g.vertex_count())
    throw Error(ErrorKind::InvalidParameter, "--r must lie in 1..|V|");
  EkrVerdict v = verify_ekr(g, r, c.strict, verify_options(c));
  v.range_flag = theorem_range_flag(c.graph.family, base_n(c),
                                    param_or_zero(c.graph.m), r);
  if (c.format.value_or(Format::Json) == Format::Text) {
    out << v.graph_name << " r=" << v.r << " max=" << v.max_size
        << " best_star=" << v.best_star_size << " class="
        << to_string(v.classification) << " certified="
        << (v.certified ? "true" : "false") << "\n";
  } else {
    json j = verdict_to_json(v);
    j["stats"] = stats_to_json(v.max_size, v.stats);
    j["stats"]["millis"] = shown_millis(c, v.stats.millis);
    out << j.dump() << "\n";
  }
  return verdict_exit(v);
}

int cmd_scan(const RunConfig& c, std::ostream& out) {
  const Graph g = make_graph(c.graph);
  const RRange range = c.r_text.empty() ? RRange{1, 0} : parse_r_range(c.r_text);
  if (!range.empty() && (range.first == 0 || range.last > g.vertex_count()))
    throw Error(ErrorKind::InvalidParameter, "--r range must lie in 1..|V|");

  struct Row {
    std::size_t r, family, star, max;
    std::string cls, note;
    bool certified;
    double millis;
  };
  std::vector<Row> rows;
  if (!range.empty()) {
    for (std::size_t r = range.first; r <= range.last; ++r) {
      try {
        const EkrVerdict v = verify_ekr(g, r, c.strict, verify_options(c));
        rows.push_back({r, v.family_size, v.best_star_size, v.max_size,
                        to_string(v.classification), v.note, v.certified,
                        shown_millis(c, v.stats.millis)});
      } catch (const std::exception& e) {
        rows.push_back({r, 0, 0, 0, "error", e.what(), false, 0.0});
      }
    }
  }

  switch (c.format.value_or(Format::Csv)) {
    case Format::Csv:
      out << "# schema=1\n";
      out << "graph,r,family_size,best_star,max,class,certified,millis,note\n";
      for (const auto& row : rows)
        out << csv_field(g.name()) << ',' << row.r << ',' << row.family << ','
            << row.star << ',' << row.max << ',' << row.cls << ','
            << (row.certified ? "true" : "false") << ',' << row.millis << ','
            << csv_field(row.note) << "\n";
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& row : rows)
        arr.push_back({{"graph", g.name()}, {"r", row.r},
                       {"family_size", row.family}, {"best_star", row.star},
                       {"max", row.max}, {"class", row.cls},
                       {"certified", row.certified}, {"millis", row.millis},
                       {"note", row.note}});
      out << json{{"schema", 1}, {"rows", arr}}.dump() << "\n";
      break;
    }
    case Format::Text:
      for (const auto& row : rows)
        out << g.name() << " r=" << row.r << " |I|=" << row.family
            << " star=" << row.star << " max=" << row.max << " " << row.cls
            << (row.certified ? "" : " (uncertified)") << "\n";
      break;
  }
  return kOk;
}

int cmd_counterexample(const RunConfig& c, std::ostream& out) {
  if (!c.graph.n || !c.graph.k)
    throw Error(ErrorKind::InvalidParameter, "counterexample needs --n and --k");
  const CounterexampleReport rep = counterexample(*c.graph.n, *c.graph.k);
  if (c.format.value_or(Format::Json) == Format::Text) {
    out << "P" << rep.n << "* r=" << rep.r << " construction=" << rep.construction
        << " star=" << rep.best_star.size << " constructed=" << rep.constructed_size
        << " intersecting=" << (rep.intersecting ? "true" : "false")
        << " in_range=" << (rep.in_range ? "true" : "false") << "\n";
  } else {
    out << counterexample_to_json(rep).dump() << "\n";
  }
  return rep.beats_every_star() ? kNotEkr : kOk;
}

int cmd_shift_demo(const RunConfig& c, std::ostream& out) {
  const Graph g = make_graph(c.graph);
  const SetFamily before = obtain_family(c, &g);
  for (const auto& m : before)
    if (!g.is_independent(m))
      throw Error(ErrorKind::InvalidParameter,
                  "family member " + set_text(m) + " is not independent");
  const auto shifts = base_pendant_shifts(g);
  const StabilizeResult res = stabilize(before, shifts, g);
  const bool inter_before = is_intersecting(before).intersecting;
  const bool inter_after = is_intersecting(res.family).intersecting;
  json j = {{"graph", g.name()},
            {"before_size", before.size()},
            {"after_size", res.family.size()},
            {"passes", res.passes},
            {"intersecting_before", inter_before},
            {"intersecting_after", inter_after},
            {"intersecting_preserved", !inter_before || inter_after},
            {"changed", !(before == res.family)},
            {"after", family_to_json(res.family)}};
  if (c.format.value_or(Format::Json) == Format::Text) {
    out << g.name() << " before=" << before.size() << " after="
        << res.family.size() << " passes=" << res.passes
        << " intersecting_preserved="
        << (j["intersecting_preserved"].get<bool>() ? "true" : "false") << "\n";
    for (const auto& m : res.family) out << set_text(m) << "\n";
  } else {
    out << j.dump() << "\n";
  }
  return kOk;
}

int cmd_shadow(const RunConfig& c, std::ostream& out) {
  std::optional<Graph> g;
  if (c.input_path.empty()) g = make_graph(c.graph);
  const SetFamily f = obtain_family(c, g ? &*g : nullptr);
  std::vector<std::pair<std::size_t, std::size_t>> levels;
  if (c.level) {
    levels.emplace_back(*c.level, shadow(f, *c.level).size());
  } else {
    for (std::size_t s = 0; s <= f.r(); ++s)
      levels.emplace_back(s, shadow(f, s).size());
  }
  if (c.format.value_or(Format::Json) == Format::Text) {
    out << "family size " << f.size() << " r=" << f.r() << "\n";
    for (auto [s, size] : levels) out << "level " << s << ": " << size << "\n";
  } else {
    json arr = json::array();
    for (auto [s, size] : levels) arr.push_back({{"level", s}, {"size", size}});
    out << json{{"family_size", f.size()}, {"r", f.r()}, {"shadows", arr}}.dump()
        << "\n";
  }
  return kOk;
}

int cmd_star_table(const RunConfig& c, std::ostream& out) {
  const std::string& f = c.graph.family;
  std::vector<std::uint32_t> s;
  std::size_t n = 0;
  std::vector<StarSizeRow> rows;
  const auto range_for = [&](std::size_t n_max) {
    return c.r_text.empty() ? RRange{1, n_max} : parse_r_range(c.r_text);
  };
  if (f == "disjoint-cliques") {
    n = need(c.graph.n, "--n", f);
    const RRange rr = range_for(n);
    if (!rr.empty())
      rows = star_size_table_cliques(n, need(c.graph.m, "--m", f), rr.first, rr.last);
  } else {
    if (f == "pendant-general") {
      s = c.graph.s;
    } else if (f == "pendant-complete") {
      s.assign(need(c.graph.n, "--n", f), 1);
    } else if (f == "pendant-uniform") {
      s.assign(need(c.graph.n, "--n", f), need(c.graph.m, "--m", f));
    } else {
      throw Error(ErrorKind::InvalidParameter,
                  "star-table supports pendant-complete, pendant-uniform, "
                  "pendant-general and disjoint-cliques");
    }
    if (s.empty()) throw Error(ErrorKind::InvalidParameter, "empty --s");
    const RRange rr = range_for(s.size());
    if (!rr.empty()) rows = star_size_table(s, rr.first, rr.last);
  }
  bool all_agree = true;
  for (const auto& row : rows) all_agree = all_agree && row.agrees();
  if (c.format.value_or(Format::Csv) == Format::Json) {
    json arr = json::array();
    for (const auto& row : rows)
      arr.push_back({{"graph", row.graph}, {"r", row.r},
                     {"formula", count_to_string(row.formula)},
                     {"enumerated", row.enumerated}, {"agrees", row.agrees()}});
    out << arr.dump() << "\n";
  } else {
    out << "# schema=1\ngraph,r,formula,enumerated,agrees\n";
    for (const auto& row : rows)
      out << csv_field(row.graph) << ',' << row.r << ','
          << count_to_string(row.formula) << ',' << row.enumerated << ','
          << (row.agrees() ? "true" : "false") << "\n";
  }
  return all_agree ? kOk : kFailure;
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.command == "build") return cmd_build(c, out, err);
  if (c.command == "enumerate") return cmd_enumerate(c, out);
  if (c.command == "verify") return cmd_verify(c, out);
  if (c.command == "scan") return cmd_scan(c, out);
  if (c.command == "counterexample") return cmd_counterexample(c, out);
  if (c.command == "shift-demo") return cmd_shift_demo(c, out);
  if (c.command == "shadow") return cmd_shadow(c, out);
  if (c.command == "star-table") return cmd_star_table(c, out);
  throw Error(ErrorKind::InvalidParameter, "unknown command");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact EKR checks for pendant graph constructions", "ekr-lab"};
  app.require_subcommand(1);
  RunConfig c;

  struct Sub {
    const char* name;
    const char* help;
    bool run_opts;
    bool family_opts;
  };
  const Sub subs[] = {
      {"build", "write a graph as DIMACS with role comments", false, false},
      {"enumerate", "list the independent r-sets", false, false},
      {"verify", "decide the r-EKR property exactly", true, false},
      {"scan", "verify over a range of r", true, false},
      {"counterexample", "check the explicit pendant-path constructions", false, false},
      {"shift-demo", "stabilize a family under the base-to-pendant shifts", false, true},
      {"shadow", "shadow sizes of a family", false, true},
      {"star-table", "star-size formulas against enumeration", false, false},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_graph_options(sub, c);
    add_output_options(sub, c);
    if (s.run_opts) {
      add_run_options(sub, c);
    } else {
      sub->add_option("--r", c.r_text, "r or an inclusive range a..b");
    }
    if (s.family_opts) add_family_options(sub, c);
    if (std::string(s.name) == "shadow")
      sub->add_option("--level", c.level, "single shadow level");
    sub->callback([&c, sub] { c.command = sub->get_name(); });
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (c.out_path.empty() || c.command == "build") return dispatch(c, out, err);
    std::ofstream file(c.out_path);
    if (!file) throw Error(ErrorKind::Io, "cannot write " + c.out_path);
    const int code = dispatch(c, file, err);
    if (!file) throw Error(ErrorKind::Io, "write failed for " + c.out_path);
    return code;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << " (lower bound " << e.lower_bound() << ")\n";
    return kUncertified;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Io: return kFailure;
      default: return kUsage;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace ekr::cli
