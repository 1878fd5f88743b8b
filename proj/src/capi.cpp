#include "bipop/bipop.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "json.hpp"

#include "bipop/config.hpp"
#include "bipop/constructions.hpp"
#include "bipop/embedding.hpp"
#include "bipop/enumeration.hpp"
#include "bipop/experiments.hpp"
#include "bipop/io.hpp"
#include "bipop/recognition.hpp"
#include "bipop/spectra.hpp"

struct bipop_graph {
  bipop::Graph g;
};

struct bipop_context {
  bipop::Config cfg;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

bipop_status status_of(bipop::ErrorCode c) {
  switch (c) {
    case bipop::ErrorCode::invalid_argument: return BIPOP_INVALID_ARGUMENT;
    case bipop::ErrorCode::precondition_failed: return BIPOP_PRECONDITION_FAILED;
    case bipop::ErrorCode::cap_exceeded: return BIPOP_CAP_EXCEEDED;
    case bipop::ErrorCode::not_converged: return BIPOP_NOT_CONVERGED;
    case bipop::ErrorCode::invariant_violation: return BIPOP_INVARIANT_VIOLATION;
    case bipop::ErrorCode::parse_error: return BIPOP_PARSE_ERROR;
    case bipop::ErrorCode::io_error: return BIPOP_IO_ERROR;
  }
  return BIPOP_INTERNAL_ERROR;
}

// Runs body, translating exceptions into a status and the thread's message.
template <class F>
bipop_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return BIPOP_OK;
  } catch (const bipop::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const json::exception& e) {
    last_error = std::string("json: ") + e.what();
    return BIPOP_PARSE_ERROR;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return BIPOP_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return BIPOP_INTERNAL_ERROR;
  }
}

void need(const void* p, const char* what) {
  bipop::require(p != nullptr, bipop::ErrorCode::invalid_argument,
                 std::string(what) + " must not be NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const bipop::Config& config_of(const bipop_context* ctx) {
  static const bipop::Config defaults;
  return ctx ? ctx->cfg : defaults;
}

json parse_object(const char* text, const char* what) {
  if (!text) return json::object();
  json j = json::parse(text);
  bipop::require(j.is_object(), bipop::ErrorCode::parse_error,
                 std::string(what) + " must be a JSON object");
  return j;
}

void reject_unknown(const json& j, std::initializer_list<const char*> keys, const char* what) {
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* allowed : keys) ok = ok || k == allowed;
    bipop::require(ok, bipop::ErrorCode::parse_error,
                   std::string(what) + ": unknown key '" + k + "'");
  }
}

int get_int(const json& j, const char* key, const char* what) {
  bipop::require(j.contains(key) && j.at(key).is_number_integer(),
                 bipop::ErrorCode::invalid_argument,
                 std::string(what) + ": integer '" + key + "' required");
  return j.at(key).get<int>();
}

json edges_json(const std::vector<bipop::Edge>& es) {
  json a = json::array();
  for (const auto& [u, v] : es) a.push_back({u, v});
  return a;
}

json structure_json(const bipop::MaximalStructure& s) {
  json roots = json::object();
  for (const auto& [r, c] : s.pendant_roots) roots[std::to_string(r)] = c;
  return {{"kind", bipop::to_string(s.kind)},
          {"blocks", s.blocks},
          {"cut_vertices", s.cut_vertices},
          {"pendant_roots", roots},
          {"ebo_pairs", edges_json(s.ebo_pairs)}};
}

json check_report(const bipop::Graph& g) {
  using namespace bipop;
  json r;
  r["n"] = g.order();
  r["m"] = g.size();
  const bool connected = is_connected(g);
  const bool bip = is_bipartite(g);
  const bool op = is_outerplanar(g);
  r["connected"] = connected;
  r["bipartite"] = bip;
  r["outerplanar"] = op;
  r["bip_outerplanar"] = bip && op;
  r["two_connected"] = is_2connected(g);
  r["star"] = is_star(g);
  if (g.order() <= kMinorMaxOrder) {
    r["k4_minor"] = has_minor(g, MinorTarget::K4);
    r["k23_minor"] = has_minor(g, MinorTarget::K23);
  }
  if (bip && op) {
    const bool maximal = is_maximal_bip_outerplanar(g);
    r["maximal"] = maximal;
    r["edge_bound_twice"] = edge_bound_twice(g.order());
    r["edge_most"] = 2 * g.size() == edge_bound_twice(g.order());
    const StructureCheck sc = analyze_structure(g);
    r["clauses"] = {{"core_connected", sc.core_connected}, {"blocks_ok", sc.blocks_ok},
                    {"cuts_nebo", sc.cuts_nebo},           {"roots_off_cuts", sc.roots_off_cuts},
                    {"roots_nebo", sc.roots_nebo},         {"predicts_maximal", sc.predicts_maximal()}};
    if (maximal) r["structure"] = structure_json(structural_decompose(g));
    if (is_2connected(g)) r["maximal_2conn"] = is_maximal_2conn_structural(g);
  }
  if (op && g.order() >= 3 && is_2connected(g)) {
    const OpEmbedding e = embed(g);
    r["embedding"] = {{"outer", e.outer}, {"chords", edges_json(e.chords)}, {"faces", e.faces}};
  }
  return r;
}

bipop::Graph generate(const json& p) {
  using namespace bipop;
  reject_unknown(p, {"family", "n", "s", "a", "b", "i", "chords", "unchecked", "pendants"},
                 "generate");
  require(p.contains("family") && p["family"].is_string(), ErrorCode::invalid_argument,
          "generate: 'family' required");
  const std::string f = p["family"].get<std::string>();
  const bool unchecked = p.value("unchecked", false);
  Graph g;
  if (f == "star") g = star(get_int(p, "n", "star"));
  else if (f == "cycle") g = cycle(get_int(p, "n", "cycle"));
  else if (f == "path") g = path(get_int(p, "n", "path"));
  else if (f == "complete") g = complete(get_int(p, "n", "complete"));
  else if (f == "ladder") g = ladder(get_int(p, "n", "ladder"));
  else if (f == "complete_bipartite")
    g = complete_bipartite(get_int(p, "a", "complete_bipartite"), get_int(p, "b", "complete_bipartite"));
  else if (f == "quad_book") g = quad_book(get_int(p, "s", "quad_book"));
  else if (f == "g1") g = g1(get_int(p, "n", "g1"), get_int(p, "s", "g1"), unchecked);
  else if (f == "g2") g = g2(get_int(p, "n", "g2"), get_int(p, "s", "g2"), unchecked);
  else if (f == "h_case") g = h_case(get_int(p, "i", "h_case"));
  else if (f == "q_graph") g = q_graph();
  else if (f == "fan") {
    const int n = get_int(p, "n", "fan");
    const auto plan = fan_plan(n);
    g = quadrangulation(n, plan);
  } else if (f == "quadrangulation") {
    const int n = get_int(p, "n", "quadrangulation");
    std::vector<Edge> plan;
    if (p.contains("chords")) {
      for (const auto& c : p["chords"]) {
        require(c.is_array() && c.size() == 2, ErrorCode::parse_error,
                "quadrangulation: chords are [u, v] pairs");
        plan.emplace_back(c[0].get<int>(), c[1].get<int>());
      }
    }
    g = quadrangulation(n, plan);
  } else {
    fail(ErrorCode::invalid_argument, "generate: unknown family '" + f + "'");
  }
  if (p.contains("pendants")) {
    const json& pe = p["pendants"];
    require(pe.is_object(), ErrorCode::parse_error, "generate: 'pendants' must be an object");
    reject_unknown(pe, {"root", "count"}, "pendants");
    g = attach_pendants(g, get_int(pe, "root", "pendants"), get_int(pe, "count", "pendants"));
  }
  return g;
}

bipop::EnumSpec enum_spec(const json& j, std::initializer_list<const char*> extra) {
  using namespace bipop;
  for (const auto& [k, v] : j.items()) {
    bool ok = k == "family" || k == "n" || k == "iso_reduce" || k == "cap";
    for (const char* e : extra) ok = ok || k == e;
    require(ok, ErrorCode::parse_error, "spec: unknown key '" + k + "'");
  }
  EnumSpec s;
  s.order = get_int(j, "n", "spec");
  if (j.contains("family")) {
    auto f = family_from_string(j["family"].get<std::string>());
    require(f.has_value(), ErrorCode::invalid_argument,
            "spec: unknown family '" + j["family"].get<std::string>() + "'");
    s.family = *f;
  }
  s.iso_reduce = j.value("iso_reduce", true);
  s.cap = j.value("cap", std::size_t{0});
  return s;
}

json spec_to_json(const bipop::EnumSpec& s) {
  return {{"family", bipop::to_string(s.family)}, {"n", s.order}, {"iso_reduce", s.iso_reduce},
          {"cap", s.cap}};
}

}  // namespace

extern "C" {

const char* bipop_version(void) { return "0.1.0"; }

const char* bipop_last_error(void) { return last_error.c_str(); }

const char* bipop_status_string(bipop_status status) {
  switch (status) {
    case BIPOP_OK: return "ok";
    case BIPOP_INVALID_ARGUMENT: return "invalid_argument";
    case BIPOP_PRECONDITION_FAILED: return "precondition_failed";
    case BIPOP_CAP_EXCEEDED: return "cap_exceeded";
    case BIPOP_NOT_CONVERGED: return "not_converged";
    case BIPOP_INVARIANT_VIOLATION: return "invariant_violation";
    case BIPOP_PARSE_ERROR: return "parse_error";
    case BIPOP_IO_ERROR: return "io_error";
    case BIPOP_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

void bipop_string_free(char* s) { std::free(s); }

bipop_status bipop_context_create(const char* config_json, bipop_context** out) {
  return guarded([&] {
    need(out, "out");
    bipop::Config cfg =
        config_json ? bipop::config_from_json(json::parse(config_json)) : bipop::Config{};
    *out = new bipop_context{std::move(cfg)};
  });
}

bipop_status bipop_context_load(const char* path, bipop_context** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new bipop_context{bipop::load_config_file(path)};
  });
}

void bipop_context_free(bipop_context* ctx) { delete ctx; }

bipop_status bipop_context_config(const bipop_context* ctx, char** out_json) {
  return guarded([&] {
    need(out_json, "out_json");
    *out_json = dup_string(bipop::config_to_json(config_of(ctx)).dump());
  });
}

bipop_status bipop_graph_create(int n, const int* edges, size_t edge_count, bipop_graph** out) {
  return guarded([&] {
    need(out, "out");
    bipop::require(edge_count == 0 || edges != nullptr, bipop::ErrorCode::invalid_argument,
                   "edges must not be NULL");
    std::vector<bipop::Edge> es;
    for (size_t i = 0; i < edge_count; ++i) es.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = new bipop_graph{bipop::make_graph(n, es)};
  });
}

bipop_status bipop_graph_from_json(const char* text, bipop_graph** out) {
  return guarded([&] {
    need(text, "json");
    need(out, "out");
    *out = new bipop_graph{bipop::graph_from_json_string(text)};
  });
}

bipop_status bipop_graph_from_graph6(const char* text, bipop_graph** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new bipop_graph{bipop::graph_from_graph6(text)};
  });
}

bipop_status bipop_graph_clone(const bipop_graph* g, bipop_graph** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = new bipop_graph{g->g};
  });
}

void bipop_graph_free(bipop_graph* g) { delete g; }

int bipop_graph_order(const bipop_graph* g) { return g ? g->g.order() : -1; }

int bipop_graph_size(const bipop_graph* g) { return g ? g->g.size() : -1; }

bipop_status bipop_graph_edges(const bipop_graph* g, int* out, size_t capacity, size_t* count) {
  return guarded([&] {
    need(g, "graph");
    need(count, "count");
    const auto es = g->g.edges();
    *count = es.size();
    bipop::require(capacity == 0 || out != nullptr, bipop::ErrorCode::invalid_argument,
                   "out must not be NULL");
    for (size_t i = 0; i < es.size() && i < capacity; ++i) {
      out[2 * i] = es[i].first;
      out[2 * i + 1] = es[i].second;
    }
  });
}

bipop_status bipop_graph_to_json(const bipop_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup_string(bipop::graph_to_json_string(g->g));
  });
}

bipop_status bipop_graph_to_dot(const bipop_graph* g, int with_layout, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    std::optional<bipop::OpEmbedding> e;
    if (with_layout && g->g.order() >= 3 && bipop::is_2connected(g->g) &&
        bipop::is_outerplanar_peeling(g->g)) {
      e = bipop::embed(g->g);
    }
    *out = dup_string(bipop::graph_to_dot(g->g, e));
  });
}

bipop_status bipop_graph_to_graph6(const bipop_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup_string(bipop::graph_to_graph6(g->g));
  });
}

bipop_status bipop_generate(const bipop_context*, const char* params_json, bipop_graph** out) {
  return guarded([&] {
    need(params_json, "params_json");
    need(out, "out");
    *out = new bipop_graph{generate(parse_object(params_json, "params"))};
  });
}

bipop_status bipop_check(const bipop_context*, const bipop_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup_string(check_report(g->g).dump());
  });
}

bipop_status bipop_spectrum(const bipop_context* ctx, const bipop_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    const auto& tol = config_of(ctx).tolerances;
    const bipop::EigenSystem es = bipop::eigensystem(g->g, tol);
    const bipop::SpectralResult pr = bipop::spectral_radius(g->g, tol);
    const bipop::SpectralResult le = bipop::least_eigenvalue(g->g, tol);
    json r = {{"n", g->g.order()},
              {"rho", pr.value},
              {"lambda", le.value},
              {"eigenvalues", es.values},
              {"vector", pr.vector},
              {"residual", std::max({pr.residual, le.residual, es.reconstruction_residual})},
              {"disconnected", pr.disconnected}};
    *out = dup_string(r.dump());
  });
}

bipop_status bipop_certify(const bipop_context* ctx, const bipop_graph* g, const double* poly,
                           size_t poly_len, const double* y, size_t y_len, double r, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    bipop::require(poly != nullptr && poly_len > 0, bipop::ErrorCode::invalid_argument,
                   "certify: empty polynomial");
    bipop::BoundCertificate c;
    c.poly.assign(poly, poly + poly_len);
    if (y) c.y.assign(y, y + y_len);
    c.r = r;
    const auto res = bipop::certify_bound(g->g, c, config_of(ctx).tolerances);
    json j = {{"verdict", bipop::to_string(res.verdict)},
              {"poly", res.poly},
              {"r", res.r},
              {"fy", res.fy},
              {"rho", res.rho},
              {"f_rho", res.f_rho},
              {"margin", res.margin},
              {"consistent", res.consistent}};
    *out = dup_string(j.dump());
  });
}

bipop_status bipop_bound(const char* kind, int n, int eps, double* out) {
  return guarded([&] {
    need(kind, "kind");
    need(out, "out");
    using bipop::BoundKind;
    const std::string k = kind;
    BoundKind bk;
    if (k == "even_edge_most") bk = BoundKind::even_edge_most;
    else if (k == "odd_edge_most") bk = BoundKind::odd_edge_most;
    else if (k == "maximal_2conn") bk = BoundKind::maximal_2conn;
    else if (k == "pendant") bk = BoundKind::pendant;
    else if (k == "star") bk = BoundKind::star;
    else bipop::fail(bipop::ErrorCode::invalid_argument, "bound: unknown kind '" + k + "'");
    *out = bipop::closed_form_bound(bk, n, eps);
  });
}

bipop_status bipop_rotate(const bipop_context* ctx, const bipop_graph* g, int u, int v,
                          const int* targets, size_t target_count, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    bipop::require(target_count == 0 || targets != nullptr, bipop::ErrorCode::invalid_argument,
                   "targets must not be NULL");
    std::vector<int> ts(targets, targets + target_count);
    const bipop::Graph rotated = bipop::edge_rotation(g->g, u, v, ts);
    const auto rv = bipop::rotation_increases_rho(g->g, u, v, ts, config_of(ctx).tolerances);
    json j = {{"graph", bipop::graph_to_json(rotated)},
              {"hypothesis_met", rv.hypothesis_met},
              {"increased", rv.increased},
              {"x_u", rv.x_u},
              {"x_v", rv.x_v},
              {"rho_before", rv.rho_before},
              {"rho_after", rv.rho_after}};
    *out = dup_string(j.dump());
  });
}

bipop_status bipop_floor(const bipop_context* ctx, const bipop_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    const auto& cfg = config_of(ctx);
    const auto f = bipop::bipartite_floor(g->g, cfg.tolerances, cfg.caps.floor_max_order);
    json j = {{"vertices", f.vertices},
              {"edges", edges_json(f.edges)},
              {"lambda_h", f.lambda_h},
              {"lambda_g", f.lambda_g}};
    *out = dup_string(j.dump());
  });
}

bipop_status bipop_enumerate(const bipop_context* ctx, const char* spec_json,
                             bipop_graph_callback callback, void* user, int* truncated) {
  return guarded([&] {
    need(spec_json, "spec_json");
    need(reinterpret_cast<const void*>(callback), "callback");
    const bipop::EnumSpec spec = enum_spec(parse_object(spec_json, "spec"), {});
    const bipop::EnumResult res = bipop::enumerate(spec, config_of(ctx));
    if (truncated) *truncated = res.truncated ? 1 : 0;
    for (const auto& g : res.graphs) {
      const bipop_graph handle{g};
      if (callback(&handle, user) != 0) break;
    }
  });
}

bipop_status bipop_scan(const bipop_context* ctx, const char* spec_json, char** out) {
  return guarded([&] {
    need(spec_json, "spec_json");
    need(out, "out");
    const json j = parse_object(spec_json, "spec");
    const bipop::EnumSpec spec = enum_spec(j, {"objective", "table"});
    const std::string obj = j.value("objective", std::string("max_rho"));
    bipop::Objective o;
    if (obj == "max_rho" || obj == "max-rho") o = bipop::Objective::max_rho;
    else if (obj == "min_lambda" || obj == "min-lambda") o = bipop::Objective::min_lambda;
    else bipop::fail(bipop::ErrorCode::invalid_argument, "scan: unknown objective '" + obj + "'");
    const auto rep = bipop::extremal_scan(spec, o, config_of(ctx), j.value("table", std::size_t{0}));
    json winners = json::array();
    for (std::size_t i = 0; i < rep.winners.size(); ++i) {
      winners.push_back({{"graph", bipop::graph_to_json(rep.winners[i])},
                         {"m", rep.winners[i].size()},
                         {"edge_most", static_cast<bool>(rep.winner_edge_most[i])},
                         {"is_star", bipop::is_star(rep.winners[i])}});
    }
    json table = json::array();
    for (const auto& [g, v] : rep.table) table.push_back({{"graph", bipop::graph_to_json(g)}, {"value", v}});
    json r = {{"spec", spec_to_json(rep.spec)},
              {"objective", bipop::to_string(rep.objective)},
              {"count", rep.count},
              {"best", rep.best},
              {"winners", winners},
              {"star_in_family", rep.star_in_family},
              {"star_value", rep.star_value},
              {"star_attains", rep.star_attains},
              {"truncated", rep.truncated}};
    if (!table.empty()) r["table"] = table;
    *out = dup_string(r.dump());
  });
}

bipop_status bipop_census(const bipop_context* ctx, const char* spec_json, char** out) {
  return guarded([&] {
    need(spec_json, "spec_json");
    need(out, "out");
    const bipop::EnumSpec spec = enum_spec(parse_object(spec_json, "spec"), {});
    const auto rep = bipop::census_edge_counts(spec, config_of(ctx));
    json hist = json::object();
    for (const auto& [m, c] : rep.histogram) hist[std::to_string(m)] = c;
    json r = {{"spec", spec_to_json(spec)},
              {"total", rep.total},
              {"histogram", hist},
              {"max_m", rep.max_m},
              {"bound", rep.bound_twice / 2.0},
              {"violations", rep.violations},
              {"equality", rep.equality},
              {"mismatches", rep.mismatches},
              {"mismatches_without_k2_factor", rep.literal_mismatches},
              {"truncated", rep.truncated}};
    *out = dup_string(r.dump());
  });
}

bipop_status bipop_verify(const bipop_context* ctx, const char* suite, const char* params_json,
                          char** out, int* passed) {
  return guarded([&] {
    need(suite, "suite");
    need(out, "out");
    const json j = parse_object(params_json, "params");
    reject_unknown(j, {"n_lo", "n_hi", "samples", "seed"}, "verify");
    bipop::SuiteParams p;
    p.n_lo = j.value("n_lo", p.n_lo);
    p.n_hi = j.value("n_hi", p.n_hi);
    p.samples = j.value("samples", p.samples);
    p.seed = j.value("seed", p.seed);
    const json rep = bipop::run_suite(suite, p, config_of(ctx));
    if (passed) *passed = rep.at("pass").get<bool>() ? 1 : 0;
    *out = dup_string(rep.dump());
  });
}

bipop_status bipop_suite_names(char** out_json) {
  return guarded([&] {
    need(out_json, "out_json");
    *out_json = dup_string(json(bipop::suite_names()).dump());
  });
}

}  // extern "C"
