#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef DGEXCESS_CLI
#error "DGEXCESS_CLI must name the dgexcess executable"
#endif

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DGEXCESS_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("dgexcess_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("generate then analyze") {
  TempDir dir;
  const Run gen = run("generate petersen");
  CHECK(gen.code == 0);
  CHECK(gen.out.rfind("10 30\n", 0) == 0);
  const std::string file = dir.write("petersen.el", gen.out);
  const Run text = run("analyze " + file);
  CHECK(text.code == 0);
  CHECK(text.out.find("simple excess 6 = spectral excess 6") != std::string::npos);
  const Run json = run("analyze " + file + " --json");
  CHECK(json.code == 0);
  CHECK(json.out.find("\"spectral_excess\": \"6/1\"") != std::string::npos);
  // Byte-identical across runs.
  CHECK(run("analyze " + file + " --json").out == json.out);
}

TEST_CASE("generate options") {
  CHECK(run("generate directed_cycle 3").out == "3 3\n0 1\n1 2\n2 0\n");
  CHECK(run("generate directed-cycle 3 --lift 2").out.rfind("6 12\n", 0) == 0);
  CHECK(run("generate circulant 7 1 2 4").out == run("generate paley_tournament 7").out);
  CHECK(run("generate paley_tournament 9").code == 2);
  CHECK(run("generate unknown_family").code == 2);
  CHECK(run("generate path x").code == 2);
  TempDir dir;
  const std::string file = dir.write("c3.el", "3 3\n0 1\n1 2\n2 0\n");
  CHECK(run("generate edgelist " + file + " --lift 2").out == run("generate directed_cycle 3 --lift 2").out);
}

TEST_CASE("check exit codes") {
  TempDir dir;
  const std::string pet = dir.write("pet.el", run("generate petersen").out);
  const std::string p3 = dir.write("p3.el", run("generate path 3").out);
  const std::string chord = dir.write("chord.el", "3 4\n0 1\n1 2\n2 0\n0 2\n");
  const std::string split = dir.write("split.el", "3 2\n0 1\n1 0\n");
  const std::string digon = dir.write("digon.am", "2\n0 1\n1 0\n");
  const std::string bad = dir.write("bad.el", "2 1\n0 0\n");

  for (const char* p : {"normal", "regular", "wdr", "dr", "geodetic-dr", "gog", "trichotomy"}) {
    CHECK_MESSAGE(run(std::string("check ") + p + " " + pet).code == 0, p);
  }
  CHECK(run("check bipartite " + pet).code == 1);
  CHECK(run("check dr " + p3).code == 1);
  CHECK(run("check regular " + p3).code == 1);
  CHECK(run("check bipartite " + p3).code == 0);
  CHECK(run("check trichotomy " + p3).code == 0);
  CHECK(run("check normal " + chord).code == 1);
  CHECK(run("check dr " + chord).code == 1);
  CHECK(run("check trichotomy " + chord).code == 2);
  CHECK(run("check dr " + split).code == 1);
  CHECK(run("check gog " + split).code == 1);
  CHECK(run("check bipartite " + split).code == 2);
  CHECK(run("check dr " + digon + " --format adjmatrix").code == 0);
  CHECK(run("check dr " + bad).code == 2);
  CHECK(run("check dr /nonexistent/file").code == 2);
  CHECK(run("check colorful " + pet).code != 0);
}

TEST_CASE("verify subcommand") {
  const Run r = run("verify --max-n 3 --jobs 2 --family-max-order 10 --subset-systems 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("verification passed") != std::string::npos);
  CHECK(run("verify --max-n 6").code != 0);
}
