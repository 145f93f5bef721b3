#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ffc/constructions.hpp"
#include "ffc/ff_sets.hpp"
#include "ffc/selftest.hpp"

namespace ffc::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Status status = Status::yes;
  json payload = json::object();
  std::string text;
};

const char* status_name(Status s) {
  switch (s) {
    case Status::yes: return "yes";
    case Status::no: return "no";
    case Status::unknown: return "unknown";
    case Status::error: return "error";
  }
  return "error";
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents)) throw UsageError("cannot write " + path.string());
}

MultiDigraph load_graph(const std::string& arg) {
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) return parse_digraph(read_file(arg));
  try {
    return parse_builtin_spec(arg);
  } catch (const GraphError& e) {
    throw UsageError("'" + arg + "' is neither a graph file nor a builtin graph (" + e.what() + ")");
  }
}

EdgeMap load_map(const std::string& arg, const MultiDigraph& g, const MultiDigraph& h) {
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) return parse_edge_map(read_file(arg), g, h);
  std::string inline_map = arg;
  std::replace(inline_map.begin(), inline_map.end(), ',', '\n');
  return parse_edge_map(inline_map, g, h);
}

Modulus parse_modulus(const std::string& text) {
  if (text == "Z") return Modulus::integers();
  std::uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || n == 0) {
    throw UsageError("--n expects a positive integer or Z, got '" + text + "'");
  }
  return Modulus::cyclic(n);
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) continue;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size() || v == 0) {
      throw UsageError("expected a comma-separated list of positive integers, got '" + text + "'");
    }
    out.push_back(v);
  }
  return out;
}

json set_json(const FFSet& s) {
  json j;
  j["kind"] = s.is_all() ? "all_of_N" : "finite";
  j["maximal_elements"] = s.maximal_elements();
  if (!s.is_all()) j["members"] = s.members();
  return j;
}

std::string join(const std::vector<std::uint64_t>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

DigonFamily require_digons(const MultiDigraph& g, const char* which) {
  auto family = as_digon_family(g);
  if (!family) throw UsageError(std::string("--digons: ") + which + " is not a union of distinct digons");
  return *family;
}

struct Budgets {
  std::uint64_t maps = kDefaultMapBudget;
  std::uint64_t flows = kDefaultFlowBudget;
};

Budgets default_budgets() {
  Budgets b;
  if (const char* env = std::getenv("FF_BUDGET"); env && *env) {
    std::uint64_t v = 0;
    std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v == 0) {
      throw UsageError("FF_BUDGET must be a positive integer");
    }
    b.maps = b.flows = v;
  }
  return b;
}

// ---- commands ---------------------------------------------------------------

struct CheckArgs {
  std::string g, h, map, group;
  bool oracle = false;
};

Outcome cmd_check(const CheckArgs& a, const Budgets& budgets) {
  const auto g = load_graph(a.g);
  const auto h = load_graph(a.h);
  const auto f = load_map(a.map, g, h);
  const auto m = parse_group(a.group);
  const auto e = exponent(m);
  const auto decision = decide(f, Modulus::of(e));
  const auto gcd = ff_gcd(f);

  Outcome out;
  out.status = decision.holds ? Status::yes : Status::no;
  out.payload = {{"command", "check"}, {"group", m.to_string()}, {"exponent", e.to_string()},
                 {"ff_gcd", gcd},      {"holds", decision.holds}};
  std::ostringstream text;
  text << status_name(out.status) << ": map is " << (decision.holds ? "" : "not ") << "FF_" << m.to_string()
       << " (exponent " << e.to_string() << ", ff_gcd " << gcd << ")\n";
  if (decision.certificate) {
    const auto& c = *decision.certificate;
    out.payload["certificate"] = {{"vertex", c.vertex},
                                  {"circuit", c.circuit},
                                  {"value", c.value},
                                  {"modulus", c.modulus.to_string()}};
    text << "certificate: vertex " << c.vertex << ", circuit " << c.circuit << ", discrepancy " << c.value
         << (c.modulus.is_integers() ? " is nonzero" : " is not divisible by " + c.modulus.to_string()) << '\n';
  }
  if (a.oracle) {
    const auto verdict = oracle_is_ff_group(f, m, budgets.flows);
    json o = {{"holds", verdict.holds}};
    text << "oracle: " << (verdict.holds ? "every flow pulls back to a flow" : "refuted by flow");
    if (verdict.refuting_flow) {
      json flow = json::array();
      for (EdgeIndex i = 0; i < verdict.refuting_flow->edge_count(); ++i) {
        auto x = verdict.refuting_flow->at(i);
        flow.push_back(std::vector<std::int64_t>(x.begin(), x.end()));
        text << (i ? " " : " ") << "(";
        for (std::size_t j = 0; j < x.size(); ++j) text << (j ? "," : "") << x[j];
        text << ")";
      }
      o["refuting_flow"] = flow;
    }
    text << '\n';
    out.payload["oracle"] = o;
    if (verdict.holds != decision.holds) throw std::logic_error("flow oracle disagrees with the discrepancy test");
  }
  out.text = text.str();
  return out;
}

struct FFSetArgs {
  std::string g, h, map;
  bool digons = false;
  std::uint64_t budget = 0;
};

Outcome cmd_ffset(const FFSetArgs& a) {
  const auto g = load_graph(a.g);
  const auto h = load_graph(a.h);
  Outcome out;
  out.payload = {{"command", "ffset"}, {"budget_state", "ok"}};
  if (!a.map.empty()) {
    const auto f = load_map(a.map, g, h);
    const auto gcd = ff_gcd(f);
    const auto s = ff_set_of_map(f);
    out.payload.update(set_json(s));
    out.payload["ff_gcd"] = gcd;
    out.payload["method"] = "map";
    out.text = s.is_all() ? "all n (ff_gcd = 0)\n" : "divisors of " + std::to_string(gcd) + ": " + join(s.members()) + "\n";
    return out;
  }
  FFSet s;
  if (a.digons) {
    s = ff_set_digons(require_digons(g, "G"), require_digons(h, "H"));
    out.payload["method"] = "digons";
  } else {
    s = ff_set_of_graphs(g, h, a.budget);
    out.payload["method"] = "enumeration";
  }
  out.payload.update(set_json(s));
  if (s.is_all()) {
    out.text = "FF(G,H) = all n\n";
  } else {
    out.text = "FF(G,H) = " + s.to_string() + "\nmaximal elements: " + join(s.maximal_elements()) + "\n";
  }
  return out;
}

struct CountArgs {
  std::string g, h, group, cross_check;
  bool oracle = false;
  std::uint64_t budget = 0;
};

Outcome cmd_count(const CountArgs& a, const Budgets& budgets) {
  const auto g = load_graph(a.g);
  const auto h = load_graph(a.h);
  std::vector<GroupSpec> groups = {parse_group(a.group)};
  if (!a.cross_check.empty()) {
    groups.push_back(parse_group(a.cross_check));
    if (exponent(groups[0]) != exponent(groups[1])) {
      throw UsageError("--cross-check needs a group with the same exponent (" + exponent(groups[0]).to_string() +
                       " vs " + exponent(groups[1]).to_string() + ")");
    }
  }
  Outcome out;
  out.payload = {{"command", "count"},
                 {"exponent", exponent(groups[0]).to_string()},
                 {"method", a.oracle ? "oracle" : "discrepancy"},
                 {"budget_state", "ok"}};
  json counts = json::array();
  std::vector<std::uint64_t> values;
  std::ostringstream text;
  for (const auto& m : groups) {
    const auto c = a.oracle ? count_ff_maps_oracle(g, h, m, a.budget, budgets.flows) : count_ff_maps(g, h, m, a.budget);
    values.push_back(c);
    counts.push_back({{"group", m.to_string()}, {"count", c}});
    text << "FF_" << m.to_string() << " maps: " << c << '\n';
  }
  out.payload["counts"] = counts;
  if (values.size() == 2) {
    const bool equal = values[0] == values[1];
    out.status = equal ? Status::yes : Status::no;
    out.payload["cross_check"] = equal ? "pass" : "fail";
    text << "cross-check: " << (equal ? "pass" : "FAIL") << '\n';
  }
  out.text = text.str();
  return out;
}

struct SearchArgs {
  std::string g, h, n, out;
  bool digons = false;
  std::uint64_t budget = 0;
};

Outcome cmd_search(const SearchArgs& a) {
  const auto g = load_graph(a.g);
  const auto h = load_graph(a.h);
  const auto n = parse_modulus(a.n);
  Outcome out;
  out.payload = {{"command", "search"}, {"n", n.to_string()}, {"budget_state", "ok"}};

  std::optional<EdgeMap> witness;
  SearchStatus status = SearchStatus::none;
  if (a.digons) {
    const auto fa = require_digons(g, "G");
    const auto fb = require_digons(h, "H");
    out.payload["method"] = "digons";
    try {
      witness = digon_ff_map(fa, fb, n);
      status = SearchStatus::found;
    } catch (const ConeError& e) {
      out.payload["reason"] = e.what();
    }
  } else {
    auto r = exists_ff_map(g, h, n, a.budget);
    out.payload["method"] = "enumeration";
    out.payload["nodes_visited"] = r.nodes_visited;
    status = r.status;
    witness = std::move(r.witness);
  }

  switch (status) {
    case SearchStatus::found: {
      const auto gcd = ff_gcd(*witness);
      out.status = Status::yes;
      out.payload["witness"] = witness->assignment();
      out.payload["ff_gcd"] = gcd;
      out.text = "# FF_" + n.to_string() + " witness, ff_gcd " + std::to_string(gcd) + "\n" + to_text(*witness);
      if (!a.out.empty()) write_file(a.out, to_text(*witness));
      break;
    }
    case SearchStatus::none:
      out.status = Status::no;
      out.text = "none: no FF_" + n.to_string() + " map exists\n";
      break;
    case SearchStatus::unknown:
      out.status = Status::unknown;
      out.payload["budget_state"] = "exceeded";
      out.text = "unknown: search budget of " + std::to_string(a.budget) + " nodes exhausted\n";
      break;
  }
  return out;
}

struct ConstructArgs {
  std::string t, out;
};

Outcome cmd_construct(const ConstructArgs& a) {
  const auto t = parse_list(a.t);
  const auto witness = build_witness(t);
  const auto check = verify_witness(witness.plan);
  const auto& plan = witness.plan;

  json plan_json = {{"T", plan.t}, {"A", plan.a}, {"B", plan.b}};
  plan_json["p"] = plan.p ? json(*plan.p) : json(nullptr);
  plan_json["p_prime"] = plan.p_prime ? json(*plan.p_prime) : json(nullptr);
  plan_json["ff_set"] = set_json(check.computed);
  plan_json["verified"] = check.pass;

  std::error_code ec;
  fs::create_directories(a.out, ec);
  if (ec) throw UsageError("cannot create " + a.out + ": " + ec.message());
  write_file(fs::path(a.out) / "G.dg", to_text(witness.g));
  write_file(fs::path(a.out) / "H.dg", to_text(witness.h));
  write_file(fs::path(a.out) / "plan.json", plan_json.dump(2) + "\n");

  Outcome out;
  out.status = check.pass ? Status::yes : Status::no;
  out.payload = {{"command", "construct"}, {"plan", plan_json}, {"out", a.out}};
  std::ostringstream text;
  text << "T = {" << join(plan.t, ",") << "}";
  if (plan.p) text << ", p = " << *plan.p << ", p' = " << *plan.p_prime;
  text << "\nA = {" << join(plan.a, ",") << "}, B = {" << join(plan.b, ",") << "}\n";
  text << "FF(G,H) = " << check.computed.to_string() << ", expected " << check.expected.to_string() << ": "
       << (check.pass ? "verified" : "MISMATCH") << '\n';
  text << "wrote " << (fs::path(a.out) / "G.dg").string() << ", H.dg, plan.json\n";
  out.text = text.str();
  return out;
}

struct SelftestArgs {
  bool deep = false;
  std::uint64_t seed = SelftestOptions{}.seed;
};

Outcome cmd_selftest(const SelftestArgs& a) {
  try {
    check_builtins();
  } catch (const std::exception& e) {
    throw UsageError(std::string("builtin graphs unavailable: ") + e.what());
  }
  const auto results = run_selftest({a.deep, a.seed});
  Outcome out;
  out.payload = {{"command", "selftest"}, {"seed", a.seed}, {"deep", a.deep}};
  json suites = json::array();
  std::ostringstream text;
  text << "seed " << a.seed << (a.deep ? " (deep)" : "") << '\n';
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    suites.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    text << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.seconds << " s)";
    if (!r.pass) text << ": " << r.detail;
    text << '\n';
  }
  out.payload["suites"] = suites;
  out.status = all ? Status::yes : Status::no;
  out.text = text.str();
  return out;
}

}  // namespace

int exit_code(Status s) {
  switch (s) {
    case Status::yes: return 0;
    case Status::no: return 1;
    case Status::unknown: return 2;
    case Status::error: return 3;
  }
  return 3;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flow-continuous edge maps between multidigraphs", "ffc"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit a single JSON object on standard output");

  auto budget_opt = [](CLI::App* sub, std::uint64_t& target) {
    return sub->add_option("--budget", target, "Evaluation budget (default 1e8, or FF_BUDGET)");
  };

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Decide whether a map is FF_M");
  c_check->add_option("--g", check.g, "Source graph (file or builtin spec)")->required();
  c_check->add_option("--h", check.h, "Target graph (file or builtin spec)")->required();
  c_check->add_option("--map", check.map, "Map file, or inline list like 0,1,2")->required();
  c_check->add_option("--group", check.group, "Group, e.g. Z3, Z2xZ2, Z")->required();
  c_check->add_flag("--oracle", check.oracle, "Also run the literal flow oracle (finite groups)");

  FFSetArgs ffset;
  auto* c_ffset = app.add_subcommand("ffset", "Compute FF(f,G,H) or FF(G,H)");
  c_ffset->add_option("--g", ffset.g)->required();
  c_ffset->add_option("--h", ffset.h)->required();
  c_ffset->add_option("--map", ffset.map, "Restrict to one map");
  c_ffset->add_flag("--digons", ffset.digons, "Use the cone analysis for unions of digons");
  auto* ffset_budget = budget_opt(c_ffset, ffset.budget);

  CountArgs count;
  auto* c_count = app.add_subcommand("count", "Count FF_M maps");
  c_count->add_option("--g", count.g)->required();
  c_count->add_option("--h", count.h)->required();
  c_count->add_option("--group", count.group)->required();
  c_count->add_option("--cross-check", count.cross_check, "Recount with a group of the same exponent");
  c_count->add_flag("--oracle", count.oracle, "Decide each map with the flow oracle");
  auto* count_budget = budget_opt(c_count, count.budget);

  SearchArgs search;
  auto* c_search = app.add_subcommand("search", "Find an FF_n map");
  c_search->add_option("--g", search.g)->required();
  c_search->add_option("--h", search.h)->required();
  c_search->add_option("--n", search.n, "Modulus n, or Z")->required();
  c_search->add_option("--out", search.out, "Write the witness map here");
  c_search->add_flag("--digons", search.digons, "Use the explicit digon construction");
  auto* search_budget = budget_opt(c_search, search.budget);

  ConstructArgs construct;
  auto* c_construct = app.add_subcommand("construct", "Build a pair with FF(G,H) = down-closure of T");
  c_construct->add_option("--t", construct.t, "Comma-separated T (may be empty)")->required();
  c_construct->add_option("--out", construct.out, "Output directory")->required();

  SelftestArgs selftest;
  auto* c_selftest = app.add_subcommand("selftest", "Run the invariant suites");
  c_selftest->add_flag("--deep", selftest.deep, "Tenfold instance counts");
  c_selftest->add_option("--seed", selftest.seed, "Random seed");

  auto fail = [&](const std::string& message) {
    if (as_json) {
      out << json{{"status", "error"}, {"message", message}}.dump() << '\n';
    } else {
      err << "error: " << message << '\n';
    }
    return exit_code(Status::error);
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (auto* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    as_json = std::find(args.begin(), args.end(), "--json") != args.end();
    return fail(e.what());
  }

  Outcome outcome;
  try {
    const auto budgets = default_budgets();
    auto budget_or_default = [&](CLI::Option* opt, std::uint64_t& value) {
      if (opt->count() == 0) value = budgets.maps;
      if (value == 0) throw UsageError("--budget must be positive");
    };
    if (*c_check) {
      outcome = cmd_check(check, budgets);
    } else if (*c_ffset) {
      budget_or_default(ffset_budget, ffset.budget);
      outcome = cmd_ffset(ffset);
    } else if (*c_count) {
      budget_or_default(count_budget, count.budget);
      outcome = cmd_count(count, budgets);
    } else if (*c_search) {
      budget_or_default(search_budget, search.budget);
      outcome = cmd_search(search);
    } else if (*c_construct) {
      outcome = cmd_construct(construct);
    } else {
      outcome = cmd_selftest(selftest);
    }
  } catch (const BudgetExceeded& e) {
    outcome.status = Status::unknown;
    outcome.payload = {{"budget_state", "exceeded"}, {"message", e.what()}};
    outcome.text = std::string("unknown: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    return fail(e.what());
  }

  if (as_json) {
    outcome.payload["status"] = status_name(outcome.status);
    out << outcome.payload.dump() << '\n';
  } else {
    out << outcome.text;
  }
  return exit_code(outcome.status);
}

}  // namespace ffc::cli
