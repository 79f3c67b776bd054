#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include <json.hpp>

#include "omegalie/report.hpp"
#include "omegalie/catalog.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = omegalie::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("omegalie-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("der and der-omega") {
  const Run r = run({"der", "L1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "dim Der = 2"));
  CHECK(contains(r.out, "d1 = "));
  CHECK(contains(r.out, "d2 = "));
  CHECK_FALSE(contains(r.out, "d3 = "));
  const Run w = run({"der-omega", "L1_6"});
  CHECK(w.code == 0);
  CHECK(contains(w.out, "Der_ω = Der: true"));
}

TEST_CASE("validate") {
  CHECK(run({"validate", "C:2"}).code == 0);
  const Run bad = run({"validate", "L1_1", "--tabulated"});
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "violated at (x,y,e)"));
}

TEST_CASE("multiplicative") {
  const Run ok = run({"multiplicative", "B"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "τ = 2x*"));
  const Run no = run({"multiplicative", "L1_1", "--tabulated"});
  CHECK(no.code == 1);
  CHECK(contains(no.out, "NOT multiplicative"));
  CHECK(contains(no.out, "witness pair (y,e)"));
  CHECK(contains(no.out, "pair (x,y)"));
}

TEST_CASE("ladder") {
  const Run r = run({"ladder", "--alpha", "2", "--max-dim", "8"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "admissible chain lengths: {0}; all irreducibles are 1-dimensional"));
  CHECK(run({"ladder", "--alpha", "-1"}).code == 2);
  CHECK(run({"ladder"}).code == 2);
}

TEST_CASE("lie-analyze and catalog") {
  const Run r = run({"lie-analyze", "C:1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "identified as sl2"));
  const Run list = run({"catalog"});
  CHECK(list.code == 0);
  CHECK(contains(list.out, "24 families"));
  CHECK(run({"catalog", "list"}).out == list.out);
  const Run show = run({"catalog", "show", "B"});
  CHECK(contains(show.out, "ω(y,z) = 2"));
  CHECK(run({"catalog", "show", "Q7"}).code == 2);
}

TEST_CASE("matrix and module files") {
  TempDir dir;
  const std::string aut = dir.write("aut.json", "[[1,0,5],[0,1,-5],[0,0,2]]");
  const std::string sing = dir.write("sing.json", R"({"matrix":[[1,0,5],[0,1,-5],[0,0,0]]})");
  const std::string dbl = dir.write("dbl.json", "[[2,0,0],[0,2,0],[0,0,2]]");
  const std::string nil = dir.write("nil.json", "[[0,0,0],[1,0,0],[0,1,0]]");
  const std::string e33 = dir.write("e33.json", "[[0,0,0],[0,0,0],[0,0,1]]");
  const std::string btarget = dir.write("b.json", "[[1,0,0],[0,-1,0],[0,3,-1]]");
  const std::string a2 = dir.write("a2.json", R"([[1,0,0],[2,1,0],[3,2,1]])");
  const std::string mod = dir.write("mod.json", R"({"algebra":"B","dim":1,"actions":{"x":[[2]]}})");
  const std::string zero = dir.write("zero.json", R"({"dim":1,"actions":{}})");
  const std::string broken = dir.write("broken.json", "[[1,2");

  CHECK(run({"aut-check", "L1", aut, "--omega"}).code == 0);
  CHECK(contains(run({"aut-check", "L1", sing}).out, "not invertible"));
  CHECK(run({"aut-check", "L1", sing}).code == 1);
  CHECK(run({"aut-check", "L1", dbl}).code == 1);
  CHECK(run({"aut-check", "L1", broken}).code == 2);
  CHECK(run({"aut-check", "L1", (dir.path / "missing.json").string()}).code == 2);

  const Run ex = run({"exp", nil});
  CHECK(ex.code == 0);
  CHECK(contains(ex.out, "[[1, 0, 0], [1, 1, 0], [1/2, 1, 1]]"));
  CHECK(run({"exp", e33}).code == 1);
  const Run num = run({"exp", e33, "--numeric", "--order", "20"});
  CHECK(num.code == 0);
  CHECK(contains(num.out, "2.71828182845904"));
  CHECK(contains(num.out, "error bound"));
  CHECK(run({"exp", e33, "--order", "5"}).code == 2);

  const Run out = run({"exp-image", "B", btarget});
  CHECK(out.code == 1);
  CHECK(contains(out.out, "eigenvalue -1"));
  CHECK(run({"exp-image", "A:2", a2}).code == 0);
  CHECK(run({"exp-image", "L1", aut}).code == 1);
  CHECK(run({"exp-image", "L1", dbl}).code == 2);

  const Run mc = run({"mod-check", "B", mod});
  CHECK(mc.code == 0);
  CHECK(contains(mc.out, "irreducible over Q(i): true"));
  CHECK(run({"mod-check", "B", zero}).code == 1);

  const Run sd = run({"semidirect", "B", mod});
  CHECK(sd.code == 0);
  CHECK(contains(sd.out, "\"v1\""));
  CHECK(contains(sd.out, "Ω-Jacobi: ok"));
  CHECK(run({"semidirect", "B", zero}).code == 2);

  const std::string prod = (dir.path / "prod.json").string();
  CHECK(run({"semidirect", "B", mod, "--out", prod}).code == 0);
  CHECK(run({"validate", prod}).code == 0);
  CHECK(contains(run({"der", prod}).out, "dim Der = 2"));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"der"}).code == 2);
  CHECK(run({"der", "C:0"}).code == 2);
  CHECK(run({"der", "A"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"report", "--alpha-samples", "2,x"}).code == 2);
}

TEST_CASE("report output") {
  const std::string md = run({"report", "--alpha-samples", "2,-2,1/2,3+1i"}).out;
  CHECK(contains(md, "| L_{1,1} | L1_1 | 6 |"));
  CHECK(contains(md, "| C_1 |"));
  CHECK(md == omegalie::emit_report({omegalie::default_alpha_samples(), false}));
  const Run js = run({"report", "--json", "--alpha-samples", "2"});
  CHECK(js.code == 0);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc.contains("derivations"));
  TempDir dir;
  const std::string path = (dir.path / "r.md").string();
  CHECK(run({"report", "--out", path, "--alpha-samples", "2,-2,1/2,3+1i"}).code == 0);
  CHECK(read_file(path) == md);
}

TEST_CASE("golden report") {
  const std::string a = omegalie::emit_report({omegalie::default_alpha_samples(), false});
  const std::string b = omegalie::emit_report({omegalie::default_alpha_samples(), false});
  CHECK(a == b);
  CHECK(a == read_file(OMEGALIE_GOLDEN_REPORT));
}

TEST_CASE("exit codes from the installed binary") {
  const auto status = [](const std::string& args) {
    const std::string cmd = std::string("\"") + OMEGALIE_BIN + "\" " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("der L1") == 0);
  CHECK(status("multiplicative L1_1 --tabulated") == 1);
  CHECK(status("validate nosuchfamily") == 2);
  CHECK(status("--help") == 0);
}
