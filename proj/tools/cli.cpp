#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mcg/corpus.hpp"
#include "mcg/edges.hpp"
#include "mcg/families.hpp"
#include "mcg/graph6.hpp"
#include "mcg/matching.hpp"
#include "mcg/report.hpp"
#include "mcg/structure.hpp"
#include "mcg/verify.hpp"

namespace mcg::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string input;
  std::string graph;
  std::string family;
  std::vector<int> orders;
  bool builtin = false;
  int min_order = 1;
  int max_order = kBuiltinMaxOrder;
  std::vector<std::string> filters;
};

void add_input_options(CLI::App* cmd, InputOptions& in, bool corpus_verb) {
  cmd->add_option("--input", in.input, "graph6 file, or - for standard input");
  cmd->add_option("--graph", in.graph, "inline graph6 record");
  cmd->add_option("--family", in.family,
                  "wheel|cycle|complete|prism|moebius-ladder|petersen|c6-complement");
  cmd->add_option("--order", in.orders, "family order(s), comma separated")->delimiter(',');
  if (corpus_verb) {
    cmd->add_flag("--builtin", in.builtin, "exhaustive enumeration of small graphs");
    cmd->add_option("--min-order", in.min_order, "smallest builtin order");
    cmd->add_option("--max-order", in.max_order, "largest builtin order");
    cmd->add_option("--filter", in.filters,
                    "even-order|connected|min-degree-3|3-connected|matching-covered|brick|solid")
        ->delimiter(',');
  }
}

CorpusSource resolve(const InputOptions& in) {
  const int sources = (!in.input.empty() ? 1 : 0) + (!in.graph.empty() ? 1 : 0) +
                      (!in.family.empty() ? 1 : 0) + (in.builtin ? 1 : 0);
  if (sources != 1)
    throw UsageError("exactly one of --input, --graph, --family, --builtin is required");
  CorpusSource source;
  for (const std::string& name : in.filters) {
    auto f = parse_filter(name);
    if (!f) throw UsageError("unknown filter " + name);
    source.filters.push_back(*f);
  }
  if (!in.input.empty()) {
    source.origin = FileOrigin{in.input};
  } else if (!in.graph.empty()) {
    try {
      source.origin = ListOrigin{{parse_graph6(in.graph)}, "inline graph " + in.graph};
    } catch (const Graph6Error& e) {
      throw UsageError(e.what());
    }
  } else if (!in.family.empty()) {
    auto family = parse_family(in.family);
    if (!family) throw UsageError("unknown family " + in.family);
    FamilyOrigin origin;
    if (family_has_fixed_order(*family)) {
      origin.members.push_back({*family, family_min_order(*family)});
    } else {
      if (in.orders.empty()) throw UsageError("--family " + in.family + " needs --order");
      for (int n : in.orders) {
        if (n > kMaxOrder) throw UsageError("order " + std::to_string(n) + " too large");
        origin.members.push_back({*family, n});
      }
    }
    for (const FamilySpec& spec : origin.members) {
      try {
        (void)generate(spec);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    source.origin = origin;
  } else {
    if (in.max_order > kBuiltinMaxOrder)
      throw UsageError("builtin enumeration is capped at order " +
                       std::to_string(kBuiltinMaxOrder));
    if (in.min_order < 1 || in.min_order > in.max_order)
      throw UsageError("need 1 <= --min-order <= --max-order");
    source.origin = BuiltinOrigin{in.min_order, in.max_order};
  }
  return source;
}

std::vector<Graph> load(const InputOptions& in) {
  try {
    return ingest(resolve(in));
  } catch (const CorpusError& e) {
    throw UsageError(e.what());
  }
}

void require_supported(const Graph& g, std::string_view verb) {
  if (g.order() > kSupportedOrder)
    throw UsageError(std::string(verb) + " refuses graphs above order " +
                     std::to_string(kSupportedOrder) + " (got " + std::to_string(g.order()) + ")");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + std::to_string(vs[i]);
  return out;
}

std::string format_set(VertexSet s) { return "{" + join(members(s)) + "}"; }

void analyze(const Graph& g, std::ostream& out) {
  const bool covered = is_matching_covered(g);
  const bool brick = is_brick(g);
  out << "graph6:            " << to_graph6(g) << '\n';
  out << "order:             " << g.order() << '\n';
  out << "edges:             " << g.size() << '\n';
  out << "perfect matchings: " << count_perfect_matchings(g) << '\n';
  out << "matching covered:  " << yes_no(covered) << '\n';
  out << "bipartite:         " << yes_no(is_bipartite(g)) << '\n';
  out << "brick:             " << yes_no(brick) << '\n';
  out << "solid:             " << (brick ? yes_no(is_solid(g)) : "n/a (not a brick)") << '\n';
  out << "b(G):              " << (covered ? std::to_string(brick_count(g)) : "n/a") << '\n';
  out << "wheel:             " << yes_no(is_wheel(g)) << '\n';
}

void classify(const Graph& g, std::ostream& out) {
  if (!is_matching_covered(g))
    throw UsageError("classify: " + to_graph6(g) + " is not matching covered");
  const auto edges = classify_all_edges(g);
  out << "graph6: " << to_graph6(g) << '\n';
  out << std::left << std::setw(8) << "edge" << std::setw(10) << "pm_count" << std::setw(11)
      << "removable" << std::setw(13) << "b_invariant" << "solitary\n";
  int removable = 0;
  int b_invariant = 0;
  int solitary = 0;
  for (const EdgeClassification& c : edges) {
    out << std::setw(8) << to_string(c.edge) << std::setw(10) << c.pm_count << std::setw(11)
        << yes_no(c.removable) << std::setw(13) << yes_no(c.b_invariant) << yes_no(c.solitary)
        << '\n';
    removable += c.removable;
    b_invariant += c.b_invariant;
    solitary += c.solitary;
  }
  out << std::right << "removable: " << removable << "  b-invariant: " << b_invariant
      << "  solitary: " << solitary << '\n';
}

void decompose(const Graph& g, std::ostream& out) {
  if (!is_matching_covered(g))
    throw UsageError("decompose: " + to_graph6(g) + " is not matching covered");
  const DecompositionResult d = tight_cut_decomposition(g);
  out << "graph6: " << to_graph6(g) << '\n';
  out << "bricks: " << d.brick_count << '\n';
  out << "trace:\n";
  for (const DecompositionStep& s : d.trace)
    out << "  " << s.piece << " shore " << format_set(s.shore.members) << " shrink "
        << (s.shrunk == ShrunkSide::kShore ? "shore" : "complement") << '\n';
  out << "leaves:\n";
  for (const DecompositionLeaf& leaf : d.leaves)
    out << "  " << (leaf.kind == LeafKind::kBrick ? "brick " : "brace ") << to_graph6(leaf.graph)
        << '\n';
}

void solid(const Graph& g, std::ostream& out) {
  if (!is_brick(g)) throw UsageError("solid: " + to_graph6(g) + " is not a brick");
  const SolidityResult r = check_solidity(g);
  out << "graph6:  " << to_graph6(g) << '\n';
  out << "verdict: " << (r.solid ? "SOLID" : "NONSOLID") << '\n';
  if (r.witness) {
    out << "cycle1:  " << join(r.witness->cycle1) << '\n';
    out << "cycle2:  " << join(r.witness->cycle2) << '\n';
    out << "remainder matching:";
    if (r.witness->remainder.size() == 0) out << " (empty)";
    for (const Edge& e : r.witness->remainder.edges()) out << ' ' << to_string(e);
    out << '\n';
  }
}

std::string default_report_path(std::string_view claim, ReportFormat f) {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y%m%dT%H%M%SZ", &tm);
  return std::string(claim) + "-" + stamp + "." + std::string(report_format_extension(f));
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matching covered graph toolkit: bricks, tight cuts, edge classes, solidity."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "mcg 1.0");

  InputOptions in;
  std::string claim_name = "main-theorem";
  std::string format_name = "text";
  std::string out_path;

  struct Verb {
    CLI::App* cmd;
    void (*per_graph)(const Graph&, std::ostream&);
  };
  std::vector<Verb> per_graph_verbs{
      {app.add_subcommand("analyze", "structural summary of each input graph"), analyze},
      {app.add_subcommand("classify", "removable / b-invariant / solitary table"), classify},
      {app.add_subcommand("decompose", "tight cut decomposition trace and leaves"), decompose},
      {app.add_subcommand("solid", "solidity verdict with witness"), solid},
  };
  for (Verb& v : per_graph_verbs) add_input_options(v.cmd, in, false);

  CLI::App* verify = app.add_subcommand("verify", "check a theorem or lemma over a corpus");
  add_input_options(verify, in, true);
  verify->add_option("--claim", claim_name, "main-theorem or a lemma/cited-result id");
  verify->add_option("--format", format_name, "text|json|csv");
  verify->add_option("--out", out_path, "report path (json/csv default: <claim>-<time>.<ext>)");
  bool drop_solidity = false;
  unsigned threads = 0;
  verify->add_flag("--drop-solidity-hypothesis", drop_solidity,
                   "run solid-brick claims on every brick");
  verify->add_option("--threads", threads, "worker threads (0 = hardware concurrency)");

  CLI::App* gen = app.add_subcommand("generate", "emit family members as graph6");
  add_input_options(gen, in, false);
  gen->add_option("--out", out_path, "output file");

  CLI::App* enumerate = app.add_subcommand("enumerate", "builtin enumeration as graph6");
  std::vector<int> enum_orders;
  std::vector<std::string> enum_filters;
  int enum_min = 0;
  int enum_max = 0;
  enumerate->add_option("--order", enum_orders, "order(s), comma separated")->delimiter(',');
  enumerate->add_option("--min-order", enum_min, "smallest order");
  enumerate->add_option("--max-order", enum_max, "largest order");
  enumerate->add_option("--filter", enum_filters, "filters applied in order")->delimiter(',');
  enumerate->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << "mcg 1.0\n";
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    for (const Verb& v : per_graph_verbs) {
      if (!v.cmd->parsed()) continue;
      const std::vector<Graph> graphs = load(in);
      for (const Graph& g : graphs) require_supported(g, v.cmd->get_name());
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (i > 0) out << '\n';
        v.per_graph(graphs[i], out);
      }
      return kSuccess;
    }

    if (verify->parsed()) {
      auto claim = claim_name == "main-theorem" ? std::optional(Claim::kMainTheorem)
                                                : parse_claim(claim_name);
      if (!claim) throw UsageError("unknown claim " + claim_name);
      auto format = parse_report_format(format_name);
      if (!format) throw UsageError("unknown format " + format_name);
      const CorpusSource source = resolve(in);
      VerificationReport report;
      try {
        VerifyOptions options;
        options.require_solid = !drop_solidity;
        options.threads = threads;
        report = verify_claim(*claim, source, options);
      } catch (const CorpusError& e) {
        throw UsageError(e.what());
      }
      const std::string doc = emit_report(report, *format);
      if (*format == ReportFormat::kText && out_path.empty()) {
        out << doc;
      } else {
        const std::string path = out_path.empty() ? default_report_path(report.claim, *format)
                                                  : out_path;
        write_file(path, doc);
        out << (report.passed ? "PASS" : "FAIL") << ' ' << report.claim << " -> " << path << '\n';
      }
      return report.passed ? kSuccess : kVerificationFailed;
    }

    if (gen->parsed()) {
      if (in.family.empty()) throw UsageError("generate needs --family");
      std::ostringstream text;
      for (const Graph& g : load(in)) text << to_graph6(g) << '\n';
      if (out_path.empty())
        out << text.str();
      else
        write_file(out_path, text.str());
      return kSuccess;
    }

    if (enumerate->parsed()) {
      std::vector<int> orders = enum_orders;
      if (enum_max > 0) {
        if (!orders.empty()) throw UsageError("use either --order or --min-order/--max-order");
        for (int n = std::max(1, enum_min); n <= enum_max; ++n) orders.push_back(n);
      }
      if (orders.empty()) throw UsageError("enumerate needs --order or --max-order");
      std::vector<Filter> filters;
      for (const std::string& name : enum_filters) {
        auto f = parse_filter(name);
        if (!f) throw UsageError("unknown filter " + name);
        filters.push_back(*f);
      }
      std::ostringstream text;
      for (int n : orders) {
        if (n < 1 || n > kBuiltinMaxOrder)
          throw UsageError("enumerate supports orders 1.." + std::to_string(kBuiltinMaxOrder));
        for (const Graph& g : ingest(CorpusSource{BuiltinOrigin{n, n}, filters}))
          text << to_graph6(g) << '\n';
      }
      if (out_path.empty())
        out << text.str();
      else
        write_file(out_path, text.str());
      return kSuccess;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  err << "error: no command\n";
  return kUsageError;
}

}  // namespace mcg::cli
