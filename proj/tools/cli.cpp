#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hchroma/embedding.hpp"
#include "hchroma/error.hpp"
#include "hchroma/galois.hpp"
#include "hchroma/graph.hpp"
#include "hchroma/homomorphism.hpp"
#include "hchroma/hypermulti.hpp"
#include "hchroma/indices.hpp"
#include "hchroma/json_io.hpp"
#include "hchroma/symfunc.hpp"

namespace hchroma {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) parts.push_back(part);
  return parts;
}

std::uint64_t parse_uint(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParameterError("invalid " + what + " '" + s + "'");
  }
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ParameterError("invalid " + what + " '" + s + "'");
  }
}

std::string read_first_line(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return line;
  }
  throw ParameterError("no graph6 line in input");
}

// A graph argument: graph6 text, "-" for stdin, or "file:PATH".
SimpleGraph load_graph(const std::string& arg, std::istream& in) {
  if (arg == "-") return parse_graph6(read_first_line(in));
  if (arg.rfind("file:", 0) == 0) {
    std::ifstream f(arg.substr(5));
    if (!f) throw ParameterError("cannot open " + arg.substr(5));
    return parse_graph6(read_first_line(f));
  }
  return parse_graph6(arg);
}

// complete:N | kneser:N:K | paley:P:D | file:PATH
HostPtr parse_host(const std::string& spec, std::istream& in) {
  const auto parts = split(spec, ':');
  if (parts.empty()) throw ParameterError("empty host spec");
  if (parts[0] == "complete" && parts.size() == 2) {
    return std::make_shared<CompleteHost>(parse_uint(parts[1], "complete order"));
  }
  if (parts[0] == "kneser" && parts.size() == 3) {
    const auto n = parse_uint(parts[1], "kneser ground size"), k = parse_uint(parts[2], "kneser k");
    if (n > 24 || k > n) throw ParameterError("kneser host needs k <= n <= 24");
    return std::make_shared<KneserHost>(static_cast<int>(n), static_cast<int>(k));
  }
  if (parts[0] == "paley" && parts.size() == 3) {
    const auto p = parse_uint(parts[1], "prime"), d = parse_uint(parts[2], "degree");
    if (p > 0xFFFFFFFFULL || d > 64) throw ParameterError("paley host parameters out of range");
    return std::make_shared<PaleyHost>(find_irreducible(static_cast<std::uint32_t>(p), static_cast<int>(d)));
  }
  if (parts[0] == "file" && parts.size() >= 2) {
    return std::make_shared<DenseHost>(load_graph(spec, in));
  }
  throw ParameterError("unknown host spec '" + spec + "'");
}

SeriesSpec parse_series(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() == 1 && parts[0] == "kneser") return SeriesSpec::kneser();
  if (parts[0] == "paley" && (parts.size() == 2 || parts.size() == 3)) {
    const auto p = parse_uint(parts[1], "prime");
    if (p == 2 || !is_prime(p) || p > 0xFFFFFFFFULL) throw ParameterError("paley series needs an odd prime");
    const auto m = parts.size() == 3 ? parse_uint(parts[2], "series exponent") : 0;
    if (m > 3) throw ParameterError("paley series exponent m must be <= 3");
    return SeriesSpec::paley(static_cast<std::uint32_t>(p), static_cast<int>(m));
  }
  throw ParameterError("unknown series '" + spec + "'");
}

FieldSpec field_of(std::uint64_t p, std::uint64_t d) {
  if (p > 0xFFFFFFFFULL || d == 0 || d > 64) throw ParameterError("field parameters out of range");
  return find_irreducible(static_cast<std::uint32_t>(p), static_cast<int>(d));
}

json construction_json(const ConstructionResult& r, const PaleyHost& host) {
  json w = json::object();
  for (const auto& [name, e] : r.witnesses) w[name] = host.field().to_json(e);
  json j = {{"found", r.found}, {"witnesses", w}};
  j["embedding"] = r.embedding ? to_json(*r.embedding, host) : json(nullptr);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json index_json(const IndexResult& r, const SimpleGraph& g, const SeriesSpec& series, std::uint64_t cap) {
  json levels = json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"level", l.level}, {"hostOrder", big_json(l.host_order)}, {"status", l.status}});
  }
  json j = {{"operation", r.operation},
            {"inputs", {{"graph", to_json(g)}, {"series", series.describe()}, {"cap", cap}}},
            {"value", r.value ? json(*r.value) : json(nullptr)},
            {"exact", r.exact},
            {"flags", r.flags},
            {"refutedLevels", r.refuted_levels},
            {"levels", levels}};
  j["witness"] = r.witness && r.witness_host ? to_json(*r.witness, *r.witness_host) : json(nullptr);
  return j;
}

json pairs_json(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"hchroma: H-chromatic functions, homomorphism invariants and Paley constructions"};
  app.name("hchroma");
  app.require_subcommand(1);
  unsigned threads = 1;
  std::uint64_t budget_nodes = 0;
  app.add_option("--threads", threads, "worker threads (results do not depend on it)")->check(CLI::Range(1U, 64U));
  app.add_option("--budget", budget_nodes, "search node budget (0 = unlimited)");

  // chroma
  auto* chroma = app.add_subcommand("chroma", "chromatic polynomial and symmetric functions");
  chroma->require_subcommand(1);
  std::string g_arg, g_arg2;
  auto* c_poly = chroma->add_subcommand("poly", "chromatic polynomial coefficients");
  c_poly->add_option("graph", g_arg, "graph6")->required();
  int sym_k = 1;
  std::string basis = "m";
  bool latex = false;
  auto* c_sym = chroma->add_subcommand("symfn", "k-fold chromatic function X_{K(N,k)}");
  c_sym->add_option("--k", sym_k, "uniformity")->check(CLI::Range(1, 3));
  c_sym->add_option("--basis", basis, "m (monomial) or p (power sum)")->check(CLI::IsMember({"m", "p"}));
  c_sym->add_flag("--latex", latex, "render as LaTeX");
  c_sym->add_option("graph", g_arg, "graph6")->required();
  std::string method;
  int max_host = 5;
  auto* c_cmp = chroma->add_subcommand("compare", "try to separate two graphs");
  c_cmp->add_option("--method", method, "chi | k1 | k2 | profile")
      ->required()
      ->check(CLI::IsMember({"chi", "k1", "k2", "profile"}));
  c_cmp->add_option("--max-host", max_host, "largest host order for profile")->check(CLI::Range(1, 6));
  c_cmp->add_option("graph1", g_arg, "graph6")->required();
  c_cmp->add_option("graph2", g_arg2, "graph6")->required();

  // hom
  auto* hom = app.add_subcommand("hom", "homomorphism counts and generating functions");
  hom->require_subcommand(1);
  std::string host_spec;
  std::vector<CLI::App*> hom_subs;
  for (const char* name : {"count", "weak", "xh", "wh"}) {
    auto* sub = hom->add_subcommand(name, std::string("hom ") + name);
    sub->add_option("--host", host_spec, "complete:N | kneser:N:K | paley:P:D | file:PATH")->required();
    sub->add_option("graph", g_arg, "graph6")->required();
    hom_subs.push_back(sub);
  }

  // paley
  auto* paley = app.add_subcommand("paley", "Paley graphs over GF(p^d)");
  paley->require_subcommand(1);
  std::uint64_t fp = 0, fd = 1, sub_d = 1;
  int k_param = 0;
  std::string target = "full";
  auto field_opts = [&](CLI::App* sub, bool with_sub) {
    sub->add_option("--p", fp, "odd prime")->required();
    sub->add_option("--d", fd, "extension degree");
    if (with_sub) sub->add_option("--sub-d", sub_d, "degree of the subfield GF(q)");
  };
  auto* p_gen = paley->add_subcommand("gen", "describe P(p^d)");
  field_opts(p_gen, false);
  auto* p_pan = paley->add_subcommand("pancyclic", "cycles of every length in P(p^d)");
  field_opts(p_pan, false);
  auto* p_bip = paley->add_subcommand("embed-bipartite", "induced K_{q-1,q-1}");
  field_opts(p_bip, true);
  auto* p_cyc = paley->add_subcommand("embed-cycle", "induced even cycle or path");
  field_opts(p_cyc, true);
  p_cyc->add_option("--target", target, "full | short | path")->check(CLI::IsMember({"full", "short", "path"}));
  p_cyc->add_option("--k", k_param, "C_{2k+2} for short, P_k for path");
  auto* p_odd = paley->add_subcommand("embed-oddcycle", "induced C_{2k+1}");
  field_opts(p_odd, true);
  p_odd->add_option("--k", k_param, "cycle C_{2k+1}")->required();

  // index
  auto* index = app.add_subcommand("index", "graph indices over a universal series");
  index->require_subcommand(1);
  std::string series_spec;
  std::uint64_t cap = 3;
  std::vector<std::string> family_args, host_list;
  std::string invariant = "xh";
  auto* i_ind = index->add_subcommand("induced", "induced index");
  auto* i_sub = index->add_subcommand("subgraph", "subgraph index");
  for (auto* sub : {i_ind, i_sub}) {
    sub->add_option("--series", series_spec, "paley:P[:M] | kneser")->required();
    sub->add_option("--cap", cap, "largest level searched");
    sub->add_option("graph", g_arg, "graph6")->required();
  }
  auto* i_fun = index->add_subcommand("functional", "functional index of a family");
  i_fun->add_option("--series", series_spec, "kneser (levels k = 1..cap)");
  i_fun->add_option("--hosts", host_list, "explicit host series (host specs)")->delimiter(',');
  i_fun->add_option("--invariant", invariant, "xh | hom for explicit hosts")->check(CLI::IsMember({"xh", "hom"}));
  i_fun->add_option("--cap", cap, "levels of the Kneser series (<= 3)");
  i_fun->add_option("graphs", family_args, "graph6 family")->required();

  // classes
  auto* classes = app.add_subcommand("classes", "hyper-multigraph classes");
  classes->require_subcommand(1);
  int cls_n = 1, cls_k = 2;
  bool connected = false;
  auto* cl_enum = classes->add_subcommand("enum", "enumerate classes with n hyperedges");
  cl_enum->add_option("--n", cls_n, "hyperedge count")->required();
  cl_enum->add_option("--k", cls_k, "uniformity")->required();
  cl_enum->add_flag("--connected", connected, "connected classes only");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "bound calculators");
  std::string kind;
  std::uint64_t bq = 0, bk = 0;
  bounds->add_option("--kind", kind, "thm52 | thm17_1 | lemma54 | lemma58 | upperBS")
      ->required()
      ->check(CLI::IsMember({"thm52", "thm17_1", "lemma54", "lemma58", "upperBS"}));
  bounds->add_option("--q", bq, "field order q")->required();
  bounds->add_option("--k", bk, "graph order k");

  // scan
  auto* scan = app.add_subcommand("scan", "exhaustive experiments");
  scan->require_subcommand(1);
  int max_order = 9;
  auto* s_trees = scan->add_subcommand("trees", "chromatic symmetric function on trees");
  s_trees->add_option("--max-order", max_order, "largest tree order (<= 9)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: usage: " << msg << "\n";
    return 1;
  }

  const Budget budget = budget_nodes == 0 ? Budget::unlimited() : Budget{budget_nodes};
  try {
    if (c_poly->parsed()) {
      const auto g = load_graph(g_arg, in);
      json coeffs = json::array();
      for (const auto& c : chromatic_polynomial(g)) coeffs.push_back(big_json(c));
      emit(out, {{"operation", "chromatic_polynomial"}, {"graph", to_json(g)}, {"coefficients", coeffs}});
    } else if (c_sym->parsed()) {
      const auto g = load_graph(g_arg, in);
      const SymFunc f = basis == "p" ? theorem2_expansion(g, sym_k, threads) : direct_m_expansion(g, sym_k);
      if (latex) {
        out << to_latex(f) << "\n";
      } else {
        emit(out, {{"operation", "symfn"}, {"graph", to_json(g)}, {"function", to_json(f)}});
      }
    } else if (c_cmp->parsed()) {
      const auto g1 = load_graph(g_arg, in), g2 = load_graph(g_arg2, in);
      const DistinguishMethod m = method == "chi"  ? DistinguishMethod::chromatic_poly
                                  : method == "k1" ? DistinguishMethod::x_k1
                                  : method == "k2" ? DistinguishMethod::x_k2
                                                   : DistinguishMethod::hom_profile;
      const auto r = distinguish(g1, g2, m, max_host);
      emit(out, {{"operation", "distinguish"},
                 {"method", method},
                 {"verdict", r.separated ? "separated" : "collides"},
                 {"witness", r.witness}});
    } else if (std::any_of(hom_subs.begin(), hom_subs.end(), [](CLI::App* s) { return s->parsed(); })) {
      const auto g = load_graph(g_arg, in);
      const HostPtr h = parse_host(host_spec, in);
      json j = {{"host", h->describe()}, {"graph", to_json(g)}};
      if (hom_subs[0]->parsed()) {
        j["operation"] = "count_hom";
        j["count"] = big_json(count_hom(g, *h, budget));
      } else if (hom_subs[1]->parsed()) {
        j["operation"] = "count_weak_hom";
        j["count"] = big_json(count_weak_hom(g, *h, budget));
      } else if (hom_subs[2]->parsed()) {
        j["operation"] = "x_h";
        j["polynomial"] = to_json(x_h(g, *h, budget), *h);
      } else {
        j["operation"] = "w_h";
        j["polynomial"] = to_json(w_h(g, *h, budget), *h);
      }
      emit(out, j);
    } else if (p_gen->parsed()) {
      const PaleyHost host(field_of(fp, fd));
      json j = {{"operation", "paley_gen"},
                {"field", to_json(host.field().spec())},
                {"order", host.order()},
                {"degree", host.degree(0)},
                {"primitiveElement", host.field().to_json(host.field().primitive_element())}};
      if (host.order() <= 10'000) {
        json nb = json::array();
        for (Vertex v : host.neighbors(0)) nb.push_back(host.vertex_json(v));
        j["neighborsOfZero"] = nb;
      }
      emit(out, j);
    } else if (p_pan->parsed()) {
      const PaleyHost host(field_of(fp, fd));
      const auto report = pancyclicity_certificate(host, budget);
      json cycles = json::object();
      for (const auto& [len, c] : report.cycles) {
        json vs = json::array();
        for (Vertex v : c) vs.push_back(host.vertex_json(v));
        cycles[std::to_string(len)] = vs;
      }
      emit(out, {{"operation", "pancyclicity_certificate"},
                 {"field", to_json(host.field().spec())},
                 {"pancyclic", report.pancyclic()},
                 {"missing", report.missing},
                 {"refuted", report.refuted},
                 {"budgetExhausted", report.budget_exhausted},
                 {"cycles", cycles}});
    } else if (p_bip->parsed() || p_cyc->parsed() || p_odd->parsed()) {
      const FieldSpec q_spec = field_of(fp, sub_d), q0_spec = field_of(fp, fd);
      ConstructionResult r;
      std::string op;
      if (p_bip->parsed()) {
        op = "bipartite_embed";
        r = bipartite_embed(q_spec, q0_spec);
      } else if (p_cyc->parsed()) {
        op = "even_cycle_embed";
        const CycleTarget t = target == "full"    ? CycleTarget::full_cycle
                              : target == "short" ? CycleTarget::short_cycle
                                                  : CycleTarget::path;
        r = even_cycle_embed(q_spec, q0_spec, t, k_param);
      } else {
        op = "odd_cycle_embed";
        r = odd_cycle_embed(q_spec, q0_spec, k_param);
      }
      const PaleyHost host(q0_spec);
      json j = construction_json(r, host);
      j["operation"] = op;
      j["subfield"] = to_json(q_spec);
      j["field"] = to_json(q0_spec);
      emit(out, j);
    } else if (i_ind->parsed() || i_sub->parsed()) {
      const auto g = load_graph(g_arg, in);
      const SeriesSpec series = parse_series(series_spec);
      const auto r = i_ind->parsed() ? induced_index(g, series, cap, budget) : subgraph_index(g, series, cap, budget);
      emit(out, index_json(r, g, series, cap));
    } else if (i_fun->parsed()) {
      std::vector<SimpleGraph> family;
      json fam = json::array();
      for (const auto& a : family_args) {
        family.push_back(load_graph(a, in));
        fam.push_back(to_graph6(family.back()));
      }
      FunctionalIndexResult r;
      json inputs = {{"family", fam}};
      if (!host_list.empty()) {
        std::vector<HostPtr> hosts;
        for (const auto& s : host_list) hosts.push_back(parse_host(s, in));
        r = functional_index(family, hosts, invariant == "hom" ? InvariantKind::hom_count : InvariantKind::x_h);
        inputs["hosts"] = host_list;
        inputs["invariant"] = invariant;
      } else {
        if (series_spec != "kneser") throw ParameterError("functional index needs --series kneser or --hosts");
        r = functional_index_kneser(family, static_cast<int>(std::min<std::uint64_t>(cap, 3)));
        inputs["series"] = "kneser";
      }
      json j = {{"operation", "functional_index"},
                {"inputs", inputs},
                {"value", r.value ? json(*r.value) : json(nullptr)},
                {"flags", r.value ? json::array() : json::array({"exceedsLength"})},
                {"colliding", pairs_json(r.colliding)}};
      j["witness"] = r.last_resolved ? json({r.last_resolved->first, r.last_resolved->second}) : json(nullptr);
      emit(out, j);
    } else if (cl_enum->parsed()) {
      const auto list = enumerate_classes(cls_n, cls_k, connected);
      json cl = json::array();
      for (const auto& c : list) cl.push_back(to_json(c));
      emit(out, {{"operation", "enumerate_classes"},
                 {"n", cls_n},
                 {"k", cls_k},
                 {"connected", connected},
                 {"count", list.size()},
                 {"classes", cl}});
    } else if (bounds->parsed()) {
      BigInt value;
      if (kind == "thm52" || kind == "thm17_1") {
        value = bound_thm52(bq, bk);
      } else if (kind == "lemma54") {
        value = bound_lemma54(bq);
      } else if (kind == "lemma58") {
        value = bound_lemma58(bq);
      } else {
        value = bound_upper_bs(bq, bk);
      }
      json j = {{"operation", "bound"}, {"kind", kind}, {"q", bq}, {"value", big_json(value)}};
      if (kind != "lemma54" && kind != "lemma58") j["k"] = bk;
      emit(out, j);
    } else if (s_trees->parsed()) {
      const auto report = tree_conjecture_scan(max_order);
      json col = json::array();
      for (const auto& [a, b] : report.collisions) col.push_back({to_graph6(a), to_graph6(b)});
      emit(out, {{"operation", "tree_conjecture_scan"},
                 {"maxOrder", report.max_order},
                 {"treesPerOrder", report.trees_per_order},
                 {"pairs", report.pairs},
                 {"collisions", col}});
    }
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace hchroma
