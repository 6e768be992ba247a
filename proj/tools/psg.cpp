// psg: command-line front end.
//
// Exit codes: 0 success, 1 a checker's verdict is false, 2 usage, parse or
// domain error, 3 an enumeration cap was exceeded.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "psg/bounds.hpp"
#include "psg/error.hpp"
#include "psg/growth.hpp"
#include "psg/lox.hpp"
#include "psg/tree.hpp"
#include "suite.hpp"

using namespace psg;
using Json = nlohmann::ordered_json;

namespace {

  constexpr int exit_ok      = 0;
  constexpr int exit_verdict = 1;
  constexpr int exit_usage   = 2;
  constexpr int exit_cap     = 3;

  struct Input {
    std::string path;
    std::string text;
    std::string sha256;
  };

  std::string sha256_hex(std::string const& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int  len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    static char const* hex = "0123456789abcdef";
    std::string out;
    for (unsigned i = 0; i < len; ++i) {
      out += hex[md[i] >> 4];
      out += hex[md[i] & 0xF];
    }
    return out;
  }

  Input read_input(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError("cannot read '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    Input r{path, os.str(), ""};
    r.sha256 = sha256_hex(r.text);
    return r;
  }

  // Shared options and the provenance block every report carries.
  struct Options {
    std::string graph_path, set_path, witness_path, word;
    std::string format = "text";
    std::string alpha  = "1", beta = "1", mode = "linear";
    std::size_t n_max = 4, n_cap = 4, n_growth = 3, depth = 3;
    std::size_t k_max = 10, k_min = 0;
    std::size_t r = 4, k_disp = 40;
    std::size_t oracle_cap   = default_oracle_cap;
    std::size_t max_elements = 5'000'000, max_length = 64;
    std::string subjoin_mode = "fast";
    bool        no_balls = false;
    std::uint64_t seed = 7;
    std::vector<int> criteria;
    std::string      tag;
    std::map<std::string, std::string> bound_args;

    std::vector<std::pair<std::string, Input>> inputs;
    std::vector<std::pair<std::string, std::string>> flags;

    EnumerationCaps caps() const {
      return {max_elements, max_length};
    }

    GraphPtr graph() {
      auto in = read_input(graph_path);
      inputs.emplace_back("graph", in);
      try {
        return std::make_shared<DefiningGraph const>(parse_graph(in.text));
      } catch (ParseError const& e) {
        throw ParseError(graph_path + ": " + e.what());
      }
    }

    WordSet set(GraphPtr const& g, std::string const& path,
                std::string const& role) {
      auto in = read_input(path);
      inputs.emplace_back(role, in);
      try {
        return parse_word_set(g, in.text);
      } catch (ParseError const& e) {
        throw ParseError(path + ": " + e.what());
      }
    }

    GrowthParams params() const {
      GrowthParams p;
      p.alpha = parse_rational(alpha);
      p.beta  = parse_rational(beta);
      if (mode == "linear") {
        p.mode = ExponentMode::linear;
      } else if (mode == "halffloor" || mode == "half-floor") {
        p.mode = ExponentMode::half_floor;
      } else {
        throw ParseError("unknown exponent mode '" + mode + "'");
      }
      p.validate();
      return p;
    }

    void flag(std::string name, std::string value) {
      flags.emplace_back(std::move(name), std::move(value));
    }

    void cap_flags() {
      flag("max_elements", std::to_string(max_elements));
      flag("max_length", std::to_string(max_length));
    }

    void header(std::ostream& os, std::string const& cmd) const {
      os << "# psg " << cmd << "\n";
      for (auto const& [role, in] : inputs) {
        os << "# " << role << " " << in.path << " sha256=" << in.sha256 << "\n";
      }
      if (!flags.empty()) {
        os << "# flags";
        for (auto const& [k, v] : flags) {
          os << " " << k << "=" << v;
        }
        os << "\n";
      }
    }

    Json json_header(std::string const& cmd) const {
      Json j;
      j["schema"]  = 1;
      j["command"] = cmd;
      Json ins     = Json::object();
      for (auto const& [role, in] : inputs) {
        ins[role] = {{"path", in.path}, {"sha256", in.sha256}};
      }
      j["inputs"] = ins;
      Json fl     = Json::object();
      for (auto const& [k, v] : flags) {
        fl[k] = v;
      }
      j["flags"] = fl;
      return j;
    }
  };

  std::string join(std::vector<GroupWord> const& ws) {
    std::string out;
    for (auto const& w : ws) {
      out += (out.empty() ? "" : ", ") + (w.is_identity() ? "e" : w.to_string());
    }
    return out;
  }

  std::string show(GroupWord const& w) {
    return w.is_identity() ? "e" : w.to_string();
  }

  Json rational_json(Rational const& q) {
    return {{"exact", format_rational(q)}, {"value", to_double(q)}};
  }

  Json words_json(WordSet const& s) {
    Json a = Json::array();
    for (auto const& w : s) {
      a.push_back(w.to_string());
    }
    return a;
  }

  Json words_json(std::vector<GroupWord> const& s) {
    Json a = Json::array();
    for (auto const& w : s) {
      a.push_back(w.to_string());
    }
    return a;
  }

  Json support_json(SupportResult const& s) {
    return {{"conjugator", s.conjugator.to_string()},
            {"v_u", s.conjugated.graph().format_set(s.v_u)},
            {"certified", s.certified},
            {"conjugated", words_json(s.conjugated)}};
  }

  Json shortlox_json(ShortLoxResult const& r) {
    Json j;
    switch (r.status) {
      case ShortLoxResult::Status::found:
        j["status"]          = "found";
        j["n"]               = r.n;
        j["witness"]         = r.witness->to_string();
        j["witness_induced"] = r.witness_induced->to_string();
        break;
      case ShortLoxResult::Status::not_found:
        j["status"] = "not_found";
        j["reason"] = r.reason;
        break;
      case ShortLoxResult::Status::not_applicable:
        j["status"] = "not_applicable";
        j["reason"] = r.reason;
        break;
    }
    j["support"] = support_json(r.support);
    return j;
  }

  void print_json(Json const& j) {
    std::cout << j.dump(2) << "\n";
  }

  /////////////////////////////////////////////////////////////////////
  // Subcommands
  /////////////////////////////////////////////////////////////////////

  int cmd_graph(Options& o) {
    auto g = o.graph();
    o.flag("oracle_cap", std::to_string(o.oracle_cap));
    auto comps = connected_components(*g);
    auto join  = join_factors(*g);
    Json j     = o.json_header("graph");
    j["vertices"] = g->names();
    Json edges    = Json::array();
    for (auto [u, v] : g->edges()) {
      edges.push_back({g->name(u), g->name(v)});
    }
    j["edges"] = edges;
    Json cs    = Json::array();
    for (auto c : comps) {
      cs.push_back(g->format_set(c));
    }
    j["components"] = cs;
    j["join"]       = join ? Json::array({g->format_set(join->first),
                                          g->format_set(join->second)})
                           : Json(nullptr);
    if (g->num_vertices() > 0) {
      j["max_clique"] = max_clique_size(*g);
    }
    if (g->num_vertices() <= o.oracle_cap) {
      Json sj = Json::array();
      for (auto s : enumerate_subjoins(*g, o.oracle_cap)) {
        sj.push_back(g->format_set(s));
      }
      j["subjoins"] = sj;
    }
    if (o.format == "json") {
      print_json(j);
      return exit_ok;
    }
    o.header(std::cout, "graph");
    std::cout << "vertices: " << g->num_vertices() << "\n"
              << "edges: " << g->num_edges() << "\n"
              << "components:";
    for (auto c : comps) {
      std::cout << " " << g->format_set(c);
    }
    std::cout << "\njoin: "
              << (join ? g->format_set(join->first) + " * "
                             + g->format_set(join->second)
                       : "none")
              << "\n";
    if (g->num_vertices() > 0) {
      std::cout << "max_clique: " << max_clique_size(*g) << "\n";
    }
    if (j.contains("subjoins")) {
      std::cout << "subjoins:";
      for (auto const& s : j["subjoins"]) {
        std::cout << " " << s.get<std::string>();
      }
      std::cout << "\n";
    }
    return exit_ok;
  }

  int cmd_reduce(Options& o) {
    auto g = o.graph();
    o.flag("word", o.word);
    auto w   = parse_word(g, o.word);
    auto dec = cyclic_reduce(w);
    Json j   = o.json_header("reduce");
    j["normal_form"] = w.to_string();
    j["length"]      = w.length();
    j["support"]     = g->format_set(w.support());
    j["conjugator"]  = dec.conjugator.to_string();
    j["core"]        = dec.core.to_string();
    if (!w.is_identity()) {
      auto pr            = primitive_root(w);
      j["root"]          = pr.root.to_string();
      j["exponent"]      = pr.exponent;
    }
    if (o.format == "json") {
      print_json(j);
      return exit_ok;
    }
    o.header(std::cout, "reduce");
    std::cout << "normal_form: " << show(w) << "\n"
              << "length: " << w.length() << "\n"
              << "support: " << g->format_set(w.support()) << "\n"
              << "conjugator: " << show(dec.conjugator) << "\n"
              << "core: " << show(dec.core) << "\n";
    if (!w.is_identity()) {
      std::cout << "root: " << j["root"].get<std::string>() << "\n"
                << "exponent: " << j["exponent"].get<std::size_t>() << "\n";
    }
    return exit_ok;
  }

  int cmd_loxo(Options& o) {
    auto g = o.graph();
    o.flag("word", o.word);
    auto w = parse_word(g, o.word);
    auto v = is_loxodromic(w);
    if (o.format == "json") {
      Json j       = o.json_header("loxo");
      j["word"]    = w.to_string();
      j["status"]  = to_string(v.status);
      j["witness"] = v.witness;
      print_json(j);
      return exit_ok;
    }
    o.header(std::cout, "loxo");
    std::cout << to_string(v.status) << "\n" << v.witness << "\n";
    return exit_ok;
  }

  int cmd_shortlox(Options& o) {
    o.cap_flags();
    auto g = o.graph();
    auto u = o.set(g, o.set_path, "set");
    o.flag("ncap", std::to_string(o.n_cap));
    o.flag("depth", std::to_string(o.depth));
    auto r = short_loxodromic(u, o.n_cap, o.caps(), o.depth);
    if (o.format == "json") {
      Json j = o.json_header("shortlox");
      j.update(shortlox_json(r));
      print_json(j);
      return r.status == ShortLoxResult::Status::not_found ? exit_verdict : exit_ok;
    }
    o.header(std::cout, "shortlox");
    if (r.status == ShortLoxResult::Status::found) {
      std::cout << "n=" << r.n << " witness=" << r.witness->to_string() << "\n";
    } else {
      std::cout << (r.status == ShortLoxResult::Status::not_applicable
                        ? "not_applicable: "
                        : "not_found: ")
                << r.reason << "\n";
    }
    return r.status == ShortLoxResult::Status::not_found ? exit_verdict : exit_ok;
  }

  int cmd_classify(Options& o) {
    o.cap_flags();
    auto g = o.graph();
    auto u = o.set(g, o.set_path, "set");
    auto p = o.params();
    o.flag("alpha", o.alpha);
    o.flag("beta", o.beta);
    o.flag("mode", o.mode);
    o.flag("ncap", std::to_string(o.n_cap));
    o.flag("ngrowth", std::to_string(o.n_growth));
    o.flag("depth", "3");
    auto rep = classify_subset(u, p, o.n_cap, o.n_growth, o.caps());
    Json j   = o.json_header("classify");
    j["size"]              = u.size();
    j["support"]           = support_json(rep.support);
    j["induced_connected"] = rep.induced_connected;
    j["induced_join"]      = rep.induced_join;
    j["cyclic"]            = {{"cyclic", rep.cyclic.cyclic},
                              {"root", rep.cyclic.root
                                           ? Json(rep.cyclic.root->to_string())
                                           : Json(nullptr)}};
    if (rep.obstruction) {
      j["obstruction"] = {{"part_a", words_json(rep.obstruction->part_a)},
                          {"part_b", words_json(rep.obstruction->part_b)}};
    } else {
      j["obstruction"] = nullptr;
    }
    j["short_lox"] = shortlox_json(rep.short_lox);
    Json vs        = Json::array();
    for (auto const& v : rep.verdicts) {
      vs.push_back({{"n", v.n},
                    {"size", v.size},
                    {"rhs", v.rhs},
                    {"verdict", v.holds}});
    }
    j["growth"] = vs;
    print_json(j);
    return exit_ok;
  }

  int cmd_growth(Options& o) {
    o.cap_flags();
    auto g = o.graph();
    auto u = o.set(g, o.set_path, "set");
    auto p = o.params();
    o.flag("nmax", std::to_string(o.n_max));
    o.flag("alpha", o.alpha);
    o.flag("beta", o.beta);
    o.flag("mode", o.mode);
    auto t  = growth_table(u, o.n_max, !o.no_balls, o.caps());
    auto vs = check_inequality(t, p);
    bool all = true;
    for (auto const& v : vs) {
      all = all && v.holds;
    }
    if (o.format == "json") {
      Json j      = o.json_header("growth");
      j["base_size"] = t.base_size;
      Json rows   = Json::array();
      for (std::size_t i = 0; i < vs.size(); ++i) {
        Json row = {{"n", vs[i].n}, {"size", vs[i].size}};
        row["ball_size"] = t.ball_sizes ? Json((*t.ball_sizes)[i]) : Json(nullptr);
        row["ball_root"] = t.ball_sizes ? Json(t.ball_root[i]) : Json(nullptr);
        row["rhs"]       = vs[i].rhs;
        row["verdict"]   = vs[i].holds;
        rows.push_back(row);
      }
      j["rows"] = rows;
      print_json(j);
    } else {
      o.header(std::cout, "growth");
      std::cout << "n,size,ball_size,rhs,verdict\n";
      for (std::size_t i = 0; i < vs.size(); ++i) {
        std::cout << vs[i].n << "," << vs[i].size << ","
                  << (t.ball_sizes ? std::to_string((*t.ball_sizes)[i]) : "")
                  << "," << format_double(vs[i].rhs) << ","
                  << (vs[i].holds ? "true" : "false") << "\n";
      }
    }
    return all ? exit_ok : exit_verdict;
  }

  int cmd_tripling(Options& o) {
    o.cap_flags();
    auto g = o.graph();
    auto u = o.set(g, o.set_path, "set");
    o.flag("nmax", std::to_string(o.n_max));
    auto t   = growth_table(u, o.n_max, false, o.caps());
    auto rep = tripling_check(t);
    if (o.format == "json") {
      Json j = o.json_header("tripling");
      j["K"] = rational_json(rep.k);
      Json rows = Json::array();
      for (auto const& r : rep.rows) {
        rows.push_back({{"n", r.n},
                        {"size", r.size},
                        {"bound", r.bound},
                        {"margin", r.margin},
                        {"verdict", r.holds}});
      }
      j["rows"]    = rows;
      j["verdict"] = rep.holds;
      print_json(j);
    } else {
      o.header(std::cout, "tripling");
      std::cout << "# K=" << format_rational(rep.k) << "\n";
      std::cout << "n,size,bound,margin,verdict\n";
      for (auto const& r : rep.rows) {
        std::cout << r.n << "," << r.size << "," << format_double(r.bound)
                  << "," << format_double(r.margin) << ","
                  << (r.holds ? "true" : "false") << "\n";
      }
    }
    return rep.holds ? exit_ok : exit_verdict;
  }

  int cmd_bounds(Options& o) {
    std::map<std::string, Rational> in;
    for (auto const& [k, v] : o.bound_args) {
      in[k] = parse_rational(v);
      o.flag(k, v);
    }
    auto r = bound_calculator(o.tag, in);
    if (o.format == "json") {
      Json j   = o.json_header("bounds");
      j["tag"] = r.tag;
      Json vs  = Json::object();
      for (auto const& v : r.values) {
        vs[v.name] = {{"exact", v.exact ? Json(format_rational(*v.exact))
                                        : Json(nullptr)},
                      {"value", v.approx}};
      }
      j["values"] = vs;
      print_json(j);
      return exit_ok;
    }
    o.header(std::cout, "bounds " + r.tag);
    for (auto const& v : r.values) {
      std::cout << v.name << "=" << format_double(v.approx);
      if (v.exact) {
        std::cout << " exact=" << format_rational(*v.exact);
      }
      std::cout << "\n";
    }
    return exit_ok;
  }

  int cmd_approx(Options& o) {
    o.cap_flags();
    auto g = o.graph();
    auto u = o.set(g, o.set_path, "set");
    auto x = o.set(g, o.witness_path, "witness");
    bool ok = approx_witness_check(u, x, o.caps());
    if (o.format == "json") {
      Json j         = o.json_header("approx");
      j["k"]         = x.size();
      j["verdict"]   = ok;
      print_json(j);
    } else {
      o.header(std::cout, "approx");
      std::cout << "k=" << x.size() << "\n" << (ok ? "true" : "false") << "\n";
    }
    return ok ? exit_ok : exit_verdict;
  }

  int cmd_project(Options& o) {
    auto g   = o.graph();
    auto u   = o.set(g, o.set_path, "set");
    auto rep = projection_analysis(u);
    if (o.format == "json") {
      Json j   = o.json_header("project");
      Json fs  = Json::array();
      for (std::size_t i = 0; i < rep.factors.size(); ++i) {
        fs.push_back({{"factor", g->format_set(rep.factors[i])},
                      {"size", rep.projections[i].size()},
                      {"projection", words_json(rep.projections[i])}});
      }
      j["size"]     = u.size();
      j["factors"]  = fs;
      j["max_size"] = rep.max_size;
      j["verdict"]  = rep.holds;
      print_json(j);
    } else {
      o.header(std::cout, "project");
      for (std::size_t i = 0; i < rep.factors.size(); ++i) {
        std::cout << g->format_set(rep.factors[i]) << " size="
                  << rep.projections[i].size() << ": "
                  << join(rep.projections[i].elements()) << "\n";
      }
      std::cout << "max=" << rep.max_size << " |U|=" << u.size() << " m="
                << rep.factors.size() << " " << (rep.holds ? "true" : "false")
                << "\n";
    }
    return rep.holds ? exit_ok : exit_verdict;
  }

  int cmd_counterexample(Options& o) {
    o.cap_flags();
    auto p = o.params();
    o.flag("alpha", o.alpha);
    o.flag("beta", o.beta);
    o.flag("mode", o.mode);
    o.flag("kmax", std::to_string(o.k_max));
    o.flag("kmin", std::to_string(o.k_min));
    o.flag("nmax", std::to_string(o.n_max));
    auto r = counterexample_search(p, o.k_max, o.n_max, o.k_min, o.caps());
    if (o.format == "json") {
      Json j = o.json_header("counterexample");
      if (r.set) {
        j["found"] = true;
        j["k"]     = r.k;
        j["n"]     = r.n;
        j["size"]  = r.set->size();
        j["sizes"] = r.sizes;
        j["rhs"]   = r.rhs;
      } else {
        j["found"]      = false;
        j["diagnostic"] = r.diagnostic;
      }
      print_json(j);
    } else {
      o.header(std::cout, "counterexample");
      if (r.set) {
        std::cout << "k=" << r.k << " n=" << r.n << " |U|=" << r.set->size()
                  << "\nn,size\n";
        for (std::size_t i = 0; i < r.sizes.size(); ++i) {
          std::cout << i + 1 << "," << r.sizes[i] << "\n";
        }
        std::cout << "rhs=" << format_double(r.rhs) << "\n";
      } else {
        std::cout << "absent: " << r.diagnostic << "\n";
      }
    }
    return r.set ? exit_ok : exit_verdict;
  }

  // Edgeless graph on the letters of a set file, in order of first
  // appearance.
  GraphPtr infer_free_graph(std::string const& text) {
    std::vector<std::string> names;
    std::istringstream       in(text);
    std::string              line;
    bool                     first = true;
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] == '#') {
        continue;
      }
      if (first && line.rfind("symmetric:", 0) == 0) {
        first = false;
        continue;
      }
      first = false;
      std::istringstream ls(line);
      std::string        tok;
      while (ls >> tok) {
        auto name = tok.substr(0, tok.find('^'));
        if (std::find(names.begin(), names.end(), name) == names.end()) {
          names.push_back(name);
        }
      }
    }
    try {
      return std::make_shared<DefiningGraph const>(names,
                                                   std::vector<DefiningGraph::Edge>{});
    } catch (DomainError const& e) {
      throw ParseError(e.what());
    }
  }

  int cmd_treeaction(Options& o) {
    GraphPtr g;
    if (!o.graph_path.empty()) {
      g = o.graph();
    } else {
      g = infer_free_graph(read_input(o.set_path).text);
    }
    auto u = o.set(g, o.set_path, "set");
    o.flag("r", std::to_string(o.r));
    o.flag("kdisp", std::to_string(o.k_disp));
    ActionConstants c;
    c.r      = o.r;
    c.k_disp = o.k_disp;
    c.validate();
    auto e = energy_basepoint(u);

    Json j = o.json_header("treeaction");
    j["vertices"] = g->names();
    j["energy"]   = {{"basepoint", e.basepoint.to_string()},
                     {"energy", rational_json(e.energy)},
                     {"displacement", e.displacement}};
    j["constants"] = {{"delta", c.delta},     {"bottleneck", c.bottleneck},
                      {"kappa0", format_rational(c.kappa0)},
                      {"n0", c.n0},           {"nu", c.nu},
                      {"r", c.r},             {"k_disp", c.k_disp}};
    int status = exit_ok;
    try {
      auto rep  = reduction_partition(u, c);
      auto bad  = verify_partition(u, rep, c);
      j["partition"] = {{"stage", rep.stage},
                        {"sweep_step", rep.sweep_step},
                        {"u0", words_json(rep.u0)},
                        {"u1", words_json(rep.u1)},
                        {"cross_inv0_1", rep.cross_inv0_1.to_string()},
                        {"cross_0_inv1", rep.cross_0_inv1.to_string()},
                        {"min_displacement", rep.min_displacement},
                        {"fraction0", rep.fraction0},
                        {"fraction1", rep.fraction1},
                        {"verified", bad.empty()},
                        {"failures", bad}};
      if (!bad.empty()) {
        status = exit_verdict;
      }
    } catch (PreconditionError const& err) {
      j["partition"] = nullptr;
      j["precondition"] = err.what();
    }
    print_json(j);
    return status;
  }

  int cmd_suite(Options& o) {
    auto ids     = o.criteria.empty() ? suite::criterion_ids() : o.criteria;
    auto results = suite::run(o.seed, ids);
    std::cout << "# psg suite seed=" << o.seed << "\n";
    bool all = true;
    for (auto const& r : results) {
      std::cout << suite::format_line(r) << "\n";
      std::cerr << "criterion " << r.id << ": "
                << std::chrono::duration<double>(r.seconds).count() << " s\n";
      all = all && r.passed;
    }
    std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
    return all ? exit_ok : exit_verdict;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Product set growth experiments in right-angled Artin groups"};
  app.require_subcommand(1);
  Options o;

  auto add_caps = [&](CLI::App* s) {
    s->add_option("--max-elements", o.max_elements, "element cap per level")
        ->check(CLI::PositiveNumber);
    s->add_option("--max-length", o.max_length, "canonical length cap")
        ->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* s, std::string def) {
    s->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->default_val(def);
  };
  auto add_params = [&](CLI::App* s) {
    s->add_option("--alpha", o.alpha, "alpha as p/q or decimal");
    s->add_option("--beta", o.beta, "beta as p/q or decimal");
    s->add_option("--mode", o.mode, "linear or halffloor");
  };

  std::map<std::string, std::function<int(Options&)>> handlers;

  auto* graph = app.add_subcommand("graph", "structure of a defining graph");
  graph->add_option("--graph", o.graph_path)->required();
  graph->add_option("--oracle-cap", o.oracle_cap)->check(CLI::PositiveNumber);
  add_format(graph, "text");
  handlers["graph"] = cmd_graph;

  auto* reduce = app.add_subcommand("reduce", "normal form and roots of a word");
  reduce->add_option("--graph", o.graph_path)->required();
  reduce->add_option("--word", o.word)->required();
  add_format(reduce, "text");
  handlers["reduce"] = cmd_reduce;

  auto* loxo = app.add_subcommand("loxo", "loxodromic test for one element");
  loxo->add_option("--graph", o.graph_path)->required();
  loxo->add_option("--word", o.word)->required();
  add_format(loxo, "text");
  handlers["loxo"] = cmd_loxo;

  auto* shortlox = app.add_subcommand("shortlox", "short loxodromic search");
  shortlox->add_option("--graph", o.graph_path)->required();
  shortlox->add_option("--set", o.set_path)->required();
  shortlox->add_option("--ncap", o.n_cap)->check(CLI::PositiveNumber);
  shortlox->add_option("--depth", o.depth);
  add_caps(shortlox);
  add_format(shortlox, "text");
  handlers["shortlox"] = cmd_shortlox;

  auto* classify = app.add_subcommand("classify", "dichotomy report (JSON)");
  classify->add_option("--graph", o.graph_path)->required();
  classify->add_option("--set", o.set_path)->required();
  classify->add_option("--ncap", o.n_cap)->check(CLI::PositiveNumber);
  classify->add_option("--ngrowth", o.n_growth)->check(CLI::PositiveNumber);
  add_params(classify);
  add_caps(classify);
  handlers["classify"] = cmd_classify;

  auto* growth = app.add_subcommand("growth", "growth table and verdicts");
  growth->add_option("--graph", o.graph_path)->required();
  growth->add_option("--set", o.set_path)->required();
  growth->add_option("--nmax", o.n_max)->check(CLI::PositiveNumber);
  growth->add_flag("--no-balls", o.no_balls, "skip ball sizes");
  add_params(growth);
  add_caps(growth);
  add_format(growth, "csv");
  handlers["growth"] = cmd_growth;

  auto* tripling = app.add_subcommand("tripling", "small tripling check");
  tripling->add_option("--graph", o.graph_path)->required();
  tripling->add_option("--set", o.set_path)->required();
  tripling->add_option("--nmax", o.n_max)->check(CLI::Range(3, 64));
  add_caps(tripling);
  add_format(tripling, "csv");
  handlers["tripling"] = cmd_tripling;

  auto* bounds = app.add_subcommand("bounds", "constant calculators");
  bounds->add_option("tag", o.tag, "formula tag")
      ->required()
      ->check(CLI::IsMember(bound_tags()));
  for (std::string name :
       {"alpha", "beta", "size", "k", "s", "m", "d", "delta", "kappa0", "n0"}) {
    bounds->add_option_function<std::string>(
        "--" + name, [&o, name](std::string const& v) { o.bound_args[name] = v; });
  }
  add_format(bounds, "text");
  handlers["bounds"] = cmd_bounds;

  auto* approx = app.add_subcommand("approx", "approximate group witness check");
  approx->add_option("--graph", o.graph_path)->required();
  approx->add_option("--set", o.set_path)->required();
  approx->add_option("--witness", o.witness_path)->required();
  add_caps(approx);
  add_format(approx, "text");
  handlers["approx"] = cmd_approx;

  auto* project = app.add_subcommand("project", "projections to join factors");
  project->add_option("--graph", o.graph_path)->required();
  project->add_option("--set", o.set_path)->required();
  add_format(project, "text");
  handlers["project"] = cmd_project;

  auto* cex = app.add_subcommand("counterexample", "search in A(P3)");
  cex->add_option("--kmax", o.k_max);
  cex->add_option("--kmin", o.k_min);
  cex->add_option("--nmax", o.n_max)->check(CLI::PositiveNumber);
  add_params(cex);
  add_caps(cex);
  add_format(cex, "text");
  handlers["counterexample"] = cmd_counterexample;

  auto* tree = app.add_subcommand("treeaction", "energy and reduction partition");
  tree->add_option("--set", o.set_path)->required();
  tree->add_option("--graph", o.graph_path);
  tree->add_option("--r", o.r)->check(CLI::PositiveNumber);
  tree->add_option("--kdisp", o.k_disp)->check(CLI::PositiveNumber);
  handlers["treeaction"] = cmd_treeaction;

  auto* suite = app.add_subcommand("suite", "acceptance battery");
  suite->add_option("--seed", o.seed);
  suite->add_option("--criteria", o.criteria, "subset of criteria to run");
  handlers["suite"] = cmd_suite;

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  auto* sub = app.get_subcommands().front();
  try {
    return handlers.at(sub->get_name())(o);
  } catch (CapExceeded const& e) {
    std::cerr << "psg: cap exceeded: " << e.what() << "\n";
    return exit_cap;
  } catch (Error const& e) {
    std::cerr << "psg: " << e.what() << "\n";
    return exit_usage;
  } catch (std::exception const& e) {
    std::cerr << "psg: internal error: " << e.what() << "\n";
    return exit_usage;
  }
}
