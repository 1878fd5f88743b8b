// Command-line front end; talks to the library only through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bipop/bipop.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

// Library failure carrying the exit code it maps to.
struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(bipop_status s) {
  return s == BIPOP_INVARIANT_VIOLATION ? kExitViolation : kExitUsage;
}

void check(bipop_status s, const std::string& what) {
  if (s != BIPOP_OK) {
    throw Failure{exit_code_for(s),
                  what + ": " + bipop_status_string(s) + ": " + bipop_last_error()};
  }
}

std::string take(char* s) {
  std::string out(s ? s : "");
  bipop_string_free(s);
  return out;
}

struct ContextDeleter {
  void operator()(bipop_context* c) const { bipop_context_free(c); }
};
struct GraphDeleter {
  void operator()(bipop_graph* g) const { bipop_graph_free(g); }
};
using Context = std::unique_ptr<bipop_context, ContextDeleter>;
using GraphHandle = std::unique_ptr<bipop_graph, GraphDeleter>;

struct Options {
  std::string config_path;
  bool override_caps = false;
  int threads = -1;
  std::string output;
  bool pretty = false;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitUsage, "cannot read '" + path + "'"};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Caps above the built-in defaults need --override-caps.
void guard_caps(const json& loaded, const json& defaults) {
  for (const auto& [k, v] : defaults.at("caps").items()) {
    if (loaded.at("caps").at(k).get<double>() > v.get<double>()) {
      throw Failure{kExitUsage, "config raises cap '" + k +
                                    "' above its default; pass --override-caps to allow it"};
    }
  }
}

Context make_context(const Options& o) {
  std::string path = o.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("BIPOP_CONFIG")) path = env;
  }
  bipop_context* raw = nullptr;
  json cfg = json::object();
  if (!path.empty()) {
    cfg = json::parse(read_all(path), nullptr, false);
    if (cfg.is_discarded()) throw Failure{kExitUsage, "config '" + path + "' is not valid JSON"};
  }
  if (o.threads >= 0) cfg["threads"] = o.threads;
  check(bipop_context_create(cfg.dump().c_str(), &raw), "config");
  Context ctx(raw);
  bipop_context* defaults_raw = nullptr;
  check(bipop_context_create(nullptr, &defaults_raw), "config");
  Context defaults(defaults_raw);
  char* loaded_s = nullptr;
  char* default_s = nullptr;
  check(bipop_context_config(ctx.get(), &loaded_s), "config");
  check(bipop_context_config(defaults.get(), &default_s), "config");
  if (!o.override_caps) guard_caps(json::parse(take(loaded_s)), json::parse(take(default_s)));
  else {
    bipop_string_free(loaded_s);
    bipop_string_free(default_s);
  }
  return ctx;
}

GraphHandle load_graph(const std::string& path, bool graph6) {
  std::string text = read_all(path);
  const bool as_g6 = graph6 || (path.size() > 3 && path.substr(path.size() - 3) == ".g6");
  bipop_graph* g = nullptr;
  if (as_g6) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    check(bipop_graph_from_graph6(text.c_str(), &g), "graph6 input");
  } else {
    check(bipop_graph_from_json(text.c_str(), &g), "graph input");
  }
  return GraphHandle(g);
}

class Output {
 public:
  explicit Output(const Options& o) : pretty_(o.pretty) {
    if (!o.output.empty()) {
      file_.open(o.output, std::ios::binary);
      if (!file_) throw Failure{kExitUsage, "cannot write '" + o.output + "'"};
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void report(const std::string& json_text) {
    if (pretty_) stream() << json::parse(json_text).dump(2) << '\n';
    else stream() << json_text << '\n';
  }
  void line(const std::string& s) { stream() << s << '\n'; }

 private:
  bool pretty_;
  std::ofstream file_;
};

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Failure{kExitUsage, "bad order range '" + s + "' (expected N or A..B)"};
  }
}

std::vector<double> parse_numbers(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size() && item.find_first_not_of(" \t", used) != std::string::npos) {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      throw Failure{kExitUsage, "bad number '" + item + "'"};
    }
  }
  return out;
}

json parse_chords(const std::string& s) {
  json chords = json::array();
  if (s.empty()) return chords;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw Failure{kExitUsage, "chord '" + item + "' is not U-V"};
    try {
      chords.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
    } catch (const std::exception&) {
      throw Failure{kExitUsage, "chord '" + item + "' is not U-V"};
    }
  }
  return chords;
}

std::string family_name(std::string f) {
  for (char& c : f) {
    if (c == '-') c = '_';
  }
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite outerplanar graph toolkit: recognition, generation, enumeration and "
               "spectral checks.\nConfig: --config FILE or the BIPOP_CONFIG environment "
               "variable.\nExit codes: 0 ran, 1 usage or input error, 2 a checked statement failed."};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--config", opt.config_path, "Config JSON (overrides BIPOP_CONFIG)");
  app.add_flag("--override-caps", opt.override_caps, "Allow config caps above the defaults");
  app.add_option("--threads", opt.threads, "Worker threads (0: hardware concurrency)");
  app.add_option("-o,--output", opt.output, "Write the report to FILE instead of stdout");
  app.add_flag("--pretty", opt.pretty, "Indent JSON reports");

  std::string file;
  bool graph6_in = false;

  auto* check_cmd = app.add_subcommand("check", "Recognition report for a graph");
  check_cmd->add_option("file", file, "Graph JSON, graph6 (.g6) or - for stdin")->required();
  check_cmd->add_flag("--graph6", graph6_in, "Read graph6 regardless of extension");

  std::string family, emit = "json", chords;
  int n = -1, s = -1, gi = -1, ga = -1, gb = -1, pend_root = -1, pend_count = 0;
  bool unchecked = false;
  auto* gen = app.add_subcommand("generate", "Build a named graph");
  gen->add_option("--family", family,
                  "star cycle path complete ladder complete_bipartite quad_book g1 g2 h_case "
                  "q_graph fan quadrangulation")
      ->required();
  gen->add_option("--n", n, "Order");
  gen->add_option("--s", s, "Book or path count for quad_book, g1, g2");
  gen->add_option("--i", gi, "Index for h_case (1..5)");
  gen->add_option("--a", ga, "First part size for complete_bipartite");
  gen->add_option("--b", gb, "Second part size for complete_bipartite");
  gen->add_option("--chords", chords, "Chord plan for quadrangulation, e.g. 0-3,0-5");
  gen->add_flag("--unchecked", unchecked, "Allow g1/g2 parameters outside the studied range");
  gen->add_option("--pendant-root", pend_root, "Attach pendants at this vertex");
  gen->add_option("--pendants", pend_count, "Number of pendants to attach");
  gen->add_option("--emit", emit, "json, dot or graph6")
      ->check(CLI::IsMember({"json", "dot", "graph6"}));

  std::string range;
  bool iso = true;
  long long cap = 0;
  auto* en = app.add_subcommand("enumerate", "Stream a graph family as JSON lines");
  en->add_option("--family", family, "Family name")->required();
  en->add_option("--n", n, "Order")->required();
  en->add_flag("--iso,!--no-iso", iso, "One graph per isomorphism class (default)");
  en->add_option("--cap", cap, "Stop after this many graphs (0: config limit)");
  en->add_option("--emit", emit, "json or graph6")->check(CLI::IsMember({"json", "graph6"}));

  std::string objective = "max-rho";
  int table = 0;
  auto* scan = app.add_subcommand("scan", "Extremal spectral scan over a family");
  scan->add_option("--family", family, "Family name (default bip-outerplanar)");
  scan->add_option("--n", n, "Order")->required();
  scan->add_option("--objective", objective, "max-rho or min-lambda")
      ->check(CLI::IsMember({"max-rho", "min-lambda", "max_rho", "min_lambda"}));
  scan->add_option("--table", table, "Include the top K entries");

  std::string kind;
  int eps = 0;
  auto* bounds = app.add_subcommand("bounds", "Closed-form spectral radius bounds");
  bounds->add_option("--kind", kind,
                     "even_edge_most odd_edge_most maximal_2conn pendant star (default: all "
                     "whose hypotheses hold)");
  bounds->add_option("--n", n, "Order")->required();
  bounds->add_option("--eps", eps, "Pendant count for the pendant bound");

  auto* census = app.add_subcommand("census", "Edge-count census against the extremal bound");
  census->add_option("--family", family, "Family name (default bip-outerplanar)");
  census->add_option("--n", range, "Order or range A..B")->required();

  std::string suite = "all";
  int samples = 500;
  unsigned long long seed = 20241014ULL;
  auto* verify = app.add_subcommand("verify-theorems", "Run a named verification suite");
  verify->add_option("--suite", suite, "Suite name or all");
  verify->add_option("--n", range, "Order range A..B (suite default if omitted)");
  verify->add_option("--samples", samples, "Random instances for sampled suites");
  verify->add_option("--seed", seed, "Seed for sampled suites");

  app.add_subcommand("suites", "List verification suite names");

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues, spectral radius and least eigenvalue");
  spectrum->add_option("file", file, "Graph file")->required();
  spectrum->add_flag("--graph6", graph6_in, "Read graph6");

  std::string poly, yvec;
  double r = 0;
  auto* certify = app.add_subcommand("certify", "Check f(A) y <= r y coordinatewise");
  certify->add_option("--poly", poly, "Coefficients, highest degree first, e.g. 1,0,-14,0")
      ->required();
  certify->add_option("--r", r, "Bound r")->required();
  certify->add_option("--y", yvec, "Test vector (default all ones)");
  certify->add_option("file", file, "Graph file")->required();
  certify->add_flag("--graph6", graph6_in, "Read graph6");

  int ru = -1, rv = -1;
  std::string targets;
  auto* rotate = app.add_subcommand("rotate", "Move edges v-t to u-t and compare spectral radii");
  rotate->add_option("--u", ru, "Receiving vertex")->required();
  rotate->add_option("--v", rv, "Donating vertex")->required();
  rotate->add_option("--targets", targets, "Comma-separated targets")->required();
  rotate->add_option("file", file, "Graph file")->required();
  rotate->add_flag("--graph6", graph6_in, "Read graph6");

  auto* floor = app.add_subcommand("floor", "Connected bipartite subgraph of least eigenvalue");
  floor->add_option("file", file, "Graph file")->required();
  floor->add_flag("--graph6", graph6_in, "Read graph6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Context ctx = make_context(opt);
    Output out(opt);
    const auto* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();

    if (name == "check") {
      GraphHandle g = load_graph(file, graph6_in);
      char* rep = nullptr;
      check(bipop_check(ctx.get(), g.get(), &rep), "check");
      out.report(take(rep));
      return kExitOk;
    }

    if (name == "generate") {
      json p = {{"family", family}};
      if (n >= 0) p["n"] = n;
      if (s >= 0) p["s"] = s;
      if (gi >= 0) p["i"] = gi;
      if (ga >= 0) p["a"] = ga;
      if (gb >= 0) p["b"] = gb;
      if (!chords.empty()) p["chords"] = parse_chords(chords);
      if (unchecked) p["unchecked"] = true;
      if (pend_root >= 0) p["pendants"] = {{"root", pend_root}, {"count", pend_count}};
      bipop_graph* raw = nullptr;
      check(bipop_generate(ctx.get(), p.dump().c_str(), &raw), "generate");
      GraphHandle g(raw);
      char* text = nullptr;
      if (emit == "dot") {
        check(bipop_graph_to_dot(g.get(), 1, &text), "dot");
        out.stream() << take(text);
      } else if (emit == "graph6") {
        check(bipop_graph_to_graph6(g.get(), &text), "graph6");
        out.line(take(text));
      } else {
        check(bipop_graph_to_json(g.get(), &text), "json");
        out.report(take(text));
      }
      return kExitOk;
    }

    if (name == "enumerate") {
      json spec = {{"family", family_name(family)}, {"n", n}, {"iso_reduce", iso}};
      if (cap > 0) spec["cap"] = cap;
      struct Sink {
        Output* out;
        bool graph6;
        bool failed = false;
        std::string error;
      } sink{&out, emit == "graph6", false, {}};
      auto callback = [](const bipop_graph* g, void* user) -> int {
        auto* k = static_cast<Sink*>(user);
        char* text = nullptr;
        const bipop_status st =
            k->graph6 ? bipop_graph_to_graph6(g, &text) : bipop_graph_to_json(g, &text);
        if (st != BIPOP_OK) {
          k->failed = true;
          k->error = bipop_last_error();
          return 1;
        }
        k->out->line(take(text));
        k->out->stream().flush();
        return 0;
      };
      int truncated = 0;
      check(bipop_enumerate(ctx.get(), spec.dump().c_str(), callback, &sink, &truncated),
            "enumerate");
      if (sink.failed) throw Failure{kExitUsage, "enumerate: " + sink.error};
      if (truncated) std::cerr << "enumerate: output truncated at the cap\n";
      return kExitOk;
    }

    if (name == "scan") {
      json spec = {{"family", family_name(family.empty() ? "bip-outerplanar" : family)},
                   {"n", n},
                   {"objective", family_name(objective)}};
      if (table > 0) spec["table"] = table;
      char* rep = nullptr;
      check(bipop_scan(ctx.get(), spec.dump().c_str(), &rep), "scan");
      out.report(take(rep));
      return kExitOk;
    }

    if (name == "bounds") {
      json rep = {{"n", n}, {"eps", eps}, {"bounds", json::object()}};
      const std::vector<std::string> kinds =
          kind.empty() ? std::vector<std::string>{"even_edge_most", "odd_edge_most",
                                                  "maximal_2conn", "pendant", "star"}
                       : std::vector<std::string>{kind};
      for (const auto& k : kinds) {
        double value = 0;
        const bipop_status st = bipop_bound(k.c_str(), n, eps, &value);
        if (st == BIPOP_OK) rep["bounds"][k] = value;
        else if (!kind.empty()) check(st, "bounds");
        else rep["not_applicable"][k] = bipop_last_error();
      }
      out.report(rep.dump());
      return kExitOk;
    }

    if (name == "census") {
      const auto [lo, hi] = parse_range(range);
      bool violated = false;
      for (int k = lo; k <= hi; ++k) {
        json spec = {{"family", family_name(family.empty() ? "bip-outerplanar" : family)},
                     {"n", k}};
        char* rep = nullptr;
        check(bipop_census(ctx.get(), spec.dump().c_str(), &rep), "census");
        const std::string text = take(rep);
        const json j = json::parse(text);
        violated = violated || j.at("violations").get<long long>() > 0 ||
                   j.at("mismatches").get<long long>() > 0;
        out.report(text);
      }
      return violated ? kExitViolation : kExitOk;
    }

    if (name == "suites") {
      char* names = nullptr;
      check(bipop_suite_names(&names), "suites");
      for (const auto& v : json::parse(take(names))) out.line(v.get<std::string>());
      return kExitOk;
    }

    if (name == "verify-theorems") {
      std::vector<std::string> suites;
      if (suite == "all") {
        char* names = nullptr;
        check(bipop_suite_names(&names), "suites");
        for (const auto& v : json::parse(take(names))) suites.push_back(v.get<std::string>());
      } else {
        suites.push_back(suite);
      }
      json params = {{"samples", samples}, {"seed", seed}};
      if (!range.empty()) {
        const auto [lo, hi] = parse_range(range);
        params["n_lo"] = lo;
        params["n_hi"] = hi;
      }
      bool all_pass = true;
      for (const auto& name_s : suites) {
        char* rep = nullptr;
        int passed = 0;
        check(bipop_verify(ctx.get(), name_s.c_str(), params.dump().c_str(), &rep, &passed),
              "verify-theorems");
        out.report(take(rep));
        all_pass = all_pass && passed;
      }
      return all_pass ? kExitOk : kExitViolation;
    }

    if (name == "spectrum") {
      GraphHandle g = load_graph(file, graph6_in);
      char* rep = nullptr;
      check(bipop_spectrum(ctx.get(), g.get(), &rep), "spectrum");
      out.report(take(rep));
      return kExitOk;
    }

    if (name == "certify") {
      GraphHandle g = load_graph(file, graph6_in);
      const std::vector<double> coeffs = parse_numbers(poly);
      const std::vector<double> y = yvec.empty() ? std::vector<double>{} : parse_numbers(yvec);
      char* rep = nullptr;
      check(bipop_certify(ctx.get(), g.get(), coeffs.data(), coeffs.size(),
                          y.empty() ? nullptr : y.data(), y.size(), r, &rep),
            "certify");
      const std::string text = take(rep);
      out.report(text);
      return json::parse(text).at("consistent").get<bool>() ? kExitOk : kExitViolation;
    }

    if (name == "rotate") {
      GraphHandle g = load_graph(file, graph6_in);
      std::vector<int> ts;
      for (double t : parse_numbers(targets)) ts.push_back(static_cast<int>(t));
      char* rep = nullptr;
      check(bipop_rotate(ctx.get(), g.get(), ru, rv, ts.data(), ts.size(), &rep), "rotate");
      const std::string text = take(rep);
      out.report(text);
      const json j = json::parse(text);
      const bool violated = j.at("hypothesis_met").get<bool>() && !j.at("increased").get<bool>();
      return violated ? kExitViolation : kExitOk;
    }

    if (name == "floor") {
      GraphHandle g = load_graph(file, graph6_in);
      char* rep = nullptr;
      check(bipop_floor(ctx.get(), g.get(), &rep), "floor");
      const std::string text = take(rep);
      out.report(text);
      const json j = json::parse(text);
      return j.at("lambda_h").get<double>() <= j.at("lambda_g").get<double>() + 1e-10
                 ? kExitOk
                 : kExitViolation;
    }
    throw Failure{kExitUsage, "unknown command"};
  } catch (const Failure& f) {
    std::cerr << "bipop: " << f.message << '\n';
    return f.exit_code;
  } catch (const json::exception& e) {
    std::cerr << "bipop: malformed JSON: " << e.what() << '\n';
    return kExitUsage;
  }
}
