#include <filesystem>
#include <fstream>

#include "cli_util.hpp"
#include "doctest.h"
#include "json.hpp"

using psg::test::run_cli;
namespace fs = std::filesystem;

namespace {
  struct Files {
    fs::path dir;
    Files() {
      dir = fs::temp_directory_path()
            / ("psg_cli_" + std::to_string(::getpid()));
      fs::create_directories(dir);
      put("free2.g", "vertices: a b\n");
      put("p4.g", "vertices: a b c d\nedge: a b\nedge: b c\nedge: c d\n");
      put("p3.g", "vertices: a b c\nedge: a b\nedge: b c\n");
      put("c4.g", "vertices: a b c d\nedge: a b\nedge: b c\nedge: c d\nedge: d a\n");
      put("bad.g", "vertices: a a\n");
      put("gens.set", "symmetric: true\na\nb\n");
      put("p4gens.set", "symmetric: true\na\nb\nc\nd\n");
      put("p3gens.set", "symmetric: true\na\nb\nc\n");
      put("acd.set", "symmetric: true\na c\nd\n");
      put("proj.set", "a b\nc b\na d\n");
      put("z.g", "vertices: a\n");
      put("z1.set", "a^-1\n\na\n");
      put("e.set", "\n");
      put("typo.set", "a\nq\n");
      std::string a20, ai20;
      for (int i = 0; i < 20; ++i) {
        a20 += "a ";
        ai20 += "a^-1 ";
      }
      put("tree.set", a20 + "\n" + a20 + "b\n" + ai20 + "\nb " + ai20 + "\n");
      put("short.set", "a\nb\n");
    }
    ~Files() {
      std::error_code ec;
      fs::remove_all(dir, ec);
    }
    void put(std::string const& name, std::string const& text) const {
      std::ofstream(dir / name) << text;
    }
    std::string operator()(std::string const& name) const {
      return (dir / name).string();
    }
  };

  Files const& files() {
    static Files f;
    return f;
  }

  std::string arg(std::string const& flag, std::string const& file) {
    return flag + " " + files()(file);
  }

  nlohmann::json json_of(std::string const& out) {
    return nlohmann::json::parse(out);
  }
}  // namespace

TEST_CASE("growth emits a CSV table") {
  auto r = run_cli("growth " + arg("--graph", "free2.g") + " " + arg("--set", "gens.set")
                   + " --nmax 4 --alpha 0.00268817 --beta 1 --mode halffloor");
  CHECK(r.code == 0);
  CHECK(r.out.find("n,size,ball_size,rhs,verdict\n") != std::string::npos);
  CHECK(r.out.find("\n1,4,5,") != std::string::npos);
  CHECK(r.out.find("\n2,13,17,") != std::string::npos);
  CHECK(r.out.find("\n4,") != std::string::npos);
  CHECK(r.out.find("# graph ") == r.out.find('#', 1));
  CHECK(r.out.find("sha256=") != std::string::npos);
  CHECK(r.out.find("alpha=0.00268817") != std::string::npos);
}

TEST_CASE("growth verdict false exits 1") {
  auto r = run_cli("growth " + arg("--graph", "free2.g") + " " + arg("--set", "gens.set")
                   + " --nmax 2 --alpha 1 --beta 1");
  CHECK(r.code == 1);
  CHECK(r.out.find("2,13,17,16,false") != std::string::npos);
}

TEST_CASE("growth JSON carries the schema") {
  auto r = run_cli("growth " + arg("--graph", "free2.g") + " " + arg("--set", "gens.set")
                   + " --nmax 3 --alpha 1/372 --mode halffloor --format json");
  CHECK(r.code == 0);
  auto j = json_of(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][2]["size"] == 40);
  CHECK(j["inputs"]["set"]["sha256"].get<std::string>().size() == 64);
}

TEST_CASE("growth cap exceeded exits 3") {
  auto r = run_cli("growth " + arg("--graph", "free2.g") + " " + arg("--set", "gens.set")
                   + " --nmax 8 --max-elements 100");
  CHECK(r.code == 3);
}

TEST_CASE("loxo verdicts") {
  auto r = run_cli("loxo " + arg("--graph", "p4.g") + " --word \"a d\"");
  CHECK(r.code == 0);
  CHECK(r.out.find("\nloxodromic\n") != std::string::npos);
  r = run_cli("loxo " + arg("--graph", "p4.g") + " --word \"a c\"");
  CHECK(r.out.find("\nelliptic\n") != std::string::npos);
  r = run_cli("loxo " + arg("--graph", "p4.g") + " --word \"a z\"");
  CHECK(r.code == 2);
}

TEST_CASE("bounds kchoice") {
  auto r = run_cli("bounds kchoice --delta 1 --kappa0 1 --n0 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("alpha=1e-52") != std::string::npos);
  CHECK(r.out.find("K=1e14") != std::string::npos);
  r = run_cli("bounds supergroup --alpha 1 --beta 1 --d 1 --format json");
  auto j = json_of(r.out);
  CHECK(j["values"]["alpha"]["exact"] == "1/8");
  CHECK(j["values"]["beta"]["exact"] == "1/3");
  CHECK(j["values"]["m"]["exact"] == "3");
  CHECK(run_cli("bounds nosuch --alpha 1").code == 2);
  CHECK(run_cli("bounds factors --alpha 1").code == 2);
  CHECK(run_cli("bounds factors --alpha x --beta 1 --m 2").code == 2);
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("graph").code == 2);
  CHECK(run_cli("graph " + arg("--graph", "bad.g")).code == 2);
  CHECK(run_cli("graph --graph /nonexistent/file").code == 2);
  CHECK(run_cli("growth " + arg("--graph", "free2.g") + " " + arg("--set", "typo.set")).code == 2);
  CHECK(run_cli("growth " + arg("--graph", "free2.g") + " " + arg("--set", "gens.set")
                + " --alpha 0").code == 2);
  CHECK(run_cli("growth " + arg("--graph", "free2.g") + " " + arg("--set", "gens.set")
                + " --mode cubic").code == 2);
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("graph report") {
  auto r = run_cli("graph " + arg("--graph", "c4.g") + " --format json");
  CHECK(r.code == 0);
  auto j = json_of(r.out);
  CHECK(j["join"][0] == "{a,c}");
  CHECK(j["join"][1] == "{b,d}");
  CHECK(j["max_clique"] == 2);
  CHECK(j["components"].size() == 1);
}

TEST_CASE("reduce") {
  auto r = run_cli("reduce " + arg("--graph", "free2.g") + " --word \"a b b a^-1\" --format json");
  CHECK(r.code == 0);
  auto j = json_of(r.out);
  CHECK(j["normal_form"] == "a b b a^-1");
  CHECK(j["core"] == "b b");
  CHECK(j["root"] == "a b a^-1");
  CHECK(j["exponent"] == 2);
}

TEST_CASE("shortlox") {
  auto r = run_cli("shortlox " + arg("--graph", "p4.g") + " " + arg("--set", "p4gens.set")
                   + " --ncap 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("n=2 witness=a d") != std::string::npos);
  r = run_cli("shortlox " + arg("--graph", "p3.g") + " " + arg("--set", "p3gens.set")
              + " --ncap 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("not_applicable") != std::string::npos);
  r = run_cli("shortlox " + arg("--graph", "p4.g") + " " + arg("--set", "acd.set")
              + " --ncap 4 --format json");
  auto j = json_of(r.out);
  CHECK(j["status"] == "found");
  CHECK(j["n"] == 1);
}

TEST_CASE("classify") {
  auto r = run_cli("classify " + arg("--graph", "p4.g") + " " + arg("--set", "p4gens.set")
                   + " --alpha 1/372 --mode halffloor --ncap 4");
  CHECK(r.code == 0);
  auto j = json_of(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["cyclic"]["cyclic"] == false);
  CHECK(j["obstruction"].is_null());
  CHECK(j["short_lox"]["n"] == 2);
  CHECK(j["support"]["v_u"] == "{a,b,c,d}");
  for (auto const& v : j["growth"]) {
    CHECK(v["verdict"] == true);
  }
}

TEST_CASE("tripling") {
  auto r = run_cli("tripling " + arg("--graph", "z.g") + " " + arg("--set", "z1.set")
                   + " --nmax 5");
  CHECK(r.code == 0);
  CHECK(r.out.find("# K=7/3") != std::string::npos);
  CHECK(r.out.find("\n5,11,") != std::string::npos);
  CHECK(run_cli("tripling " + arg("--graph", "z.g") + " " + arg("--set", "z1.set")
                + " --nmax 2").code == 2);
}

TEST_CASE("approx") {
  CHECK(run_cli("approx " + arg("--graph", "z.g") + " " + arg("--set", "z1.set") + " "
                + arg("--witness", "z1.set")).code == 0);
  CHECK(run_cli("approx " + arg("--graph", "z.g") + " " + arg("--set", "z1.set") + " "
                + arg("--witness", "e.set")).code == 1);
}

TEST_CASE("project") {
  auto r = run_cli("project " + arg("--graph", "c4.g") + " " + arg("--set", "proj.set")
                   + " --format json");
  CHECK(r.code == 0);
  auto j = json_of(r.out);
  CHECK(j["max_size"] == 2);
  CHECK(j["factors"][0]["factor"] == "{a,c}");
  CHECK(run_cli("project " + arg("--graph", "p4.g") + " " + arg("--set", "proj.set")).code == 2);
}

TEST_CASE("counterexample") {
  auto r = run_cli("counterexample --alpha 1 --beta 1 --kmax 10 --nmax 2 --format json");
  CHECK(r.code == 0);
  auto j = json_of(r.out);
  CHECK(j["found"] == true);
  CHECK(j["k"] == 10);
  CHECK(j["size"] == 105);
  CHECK(j["sizes"][1] == 697);
  r = run_cli("counterexample --alpha 1e-6 --beta 1 --kmax 10 --nmax 3");
  CHECK(r.code == 1);
  CHECK(r.out.find("absent") != std::string::npos);
}

TEST_CASE("treeaction") {
  auto r = run_cli("treeaction " + arg("--set", "tree.set") + " --r 2 --kdisp 20");
  CHECK(r.code == 0);
  auto j = json_of(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["vertices"] == nlohmann::json::array({"a", "b"}));
  CHECK(j["partition"]["verified"] == true);
  r = run_cli("treeaction " + arg("--set", "short.set"));
  CHECK(r.code == 0);
  j = json_of(r.out);
  CHECK(j["partition"].is_null());
  CHECK(j["energy"]["displacement"] == 1);
  CHECK(run_cli("treeaction " + arg("--set", "short.set") + " --r 4 --kdisp 8").code == 2);
  CHECK(run_cli("treeaction " + arg("--set", "gens.set") + " " + arg("--graph", "p4.g")).code
        == 2);
}

TEST_CASE("reports are byte-identical across runs") {
  auto args = "growth " + arg("--graph", "free2.g") + " " + arg("--set", "gens.set")
              + " --nmax 5 --alpha 1/372 --mode halffloor";
  CHECK(run_cli(args).out == run_cli(args).out);
  auto c = "classify " + arg("--graph", "p4.g") + " " + arg("--set", "acd.set");
  CHECK(run_cli(c).out == run_cli(c).out);
}

TEST_CASE("suite subset") {
  auto r = run_cli("suite --seed 3 --criteria 3 11");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS 3 ") != std::string::npos);
  CHECK(r.out.find("PASS 11 ") != std::string::npos);
  CHECK(r.out.find(" s\n") == std::string::npos);
}
