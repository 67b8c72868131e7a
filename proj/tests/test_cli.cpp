#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "triplesys/io.hpp"

namespace fs = std::filesystem;
using namespace triplesys;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("triplesys-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Run run(const std::string& args) {
  const auto out = scratch() / "stdout";
  const auto err = scratch() / "stderr";
  const std::string cmd = "cd '" + scratch().string() + "' && '" TRIPLESYS_CLI_PATH "' " + args + " >'" +
                          out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::string write_host(const std::string& name, const TripleSystem& h) {
  const auto p = scratch() / name;
  save_hypergraph(p, h);
  return p.string();
}

}  // namespace

TEST_CASE("construct") {
  auto r = run("construct --n 9 --k 3 -o c9.txt");
  CHECK(r.code == 0);
  CHECK(r.out == "delta2+ 3\nedges 27\n");
  CHECK(load_hypergraph(scratch() / "c9.txt").edge_count() == 27);

  r = run("construct --n 4 --k 4");
  CHECK(r.code == 0);
  CHECK(r.out.find("edges 4") != std::string::npos);

  CHECK(run("construct --n 2 --k 3").code == 2);
  CHECK(run("construct --n 9").code == 2);
  CHECK(run("construct --n 9 --k 3 -o /nonexistent-dir/x.txt").code == 1);
}

TEST_CASE("stats") {
  const auto c7 = write_host("c7.txt", construct_complete_k_partite(7, 4).host);
  auto r = run("stats -i " + c7);
  CHECK(r.code == 0);
  CHECK(r.out.find("delta2+ 3\n") != std::string::npos);

  const auto empty = write_host("empty.txt", TripleSystem(5));
  r = run("stats -i " + empty);
  CHECK(r.out.find("delta2+ undefined") != std::string::npos);

  std::ofstream(scratch() / "dup.txt") << "n 5\n0 1 2\n0 1 2\n";
  r = run("stats -i dup.txt");
  CHECK(r.code == 1);
  CHECK(r.err.find("line 3") != std::string::npos);

  CHECK(run("stats -i missing.txt").code == 1);
}

TEST_CASE("free") {
  const auto c8 = write_host("c8.txt", construct_complete_k_partite(8, 4).host);
  auto r = run("free -i " + c8 + " -p c5");
  CHECK(r.code == 0);
  CHECK(r.out == "{\"pattern\":\"c5\",\"free\":true}\n");
  r = run("free -i " + c8 + " -p K4");
  CHECK(r.out.find("\"free\":false") != std::string::npos);
  CHECK(run("free -i " + c8 + " -p c6").code == 2);
}

TEST_CASE("witness") {
  const auto k6 = write_host("k6.txt", complete_triple_system(6));
  auto r = run("witness -i " + k6 + " -p c5 -o w.json");
  CHECK(r.code == 0);
  const auto cert = certificate_from_json(nlohmann::ordered_json::parse(slurp(scratch() / "w.json")));
  CHECK(std::get<Embedding>(cert).image_edges().size() == 5);
  CHECK(certificate_is_valid(complete_triple_system(6), cert));

  const auto c8 = write_host("c8.txt", construct_complete_k_partite(8, 4).host);
  CHECK(run("witness -i " + c8 + " -p c5").code == 2);
  const auto c9 = write_host("c9.txt", construct_complete_k_partite(9, 3).host);
  CHECK(run("witness -i " + c9 + " -p c5minus").code == 2);
  CHECK(run("witness -i " + k6 + " -p k4").code == 2);
}

TEST_CASE("analyze") {
  const auto c8 = write_host("c8.txt", construct_complete_k_partite(8, 4).host);
  auto r = run("analyze -i " + c8);
  CHECK(r.code == 0);
  auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["kind"] == "structure");
  CHECK(doc["q"] == 2);
  CHECK(r.err.find("facts exercised") != std::string::npos);
  CHECK(certificate_is_valid(construct_complete_k_partite(8, 4).host, certificate_from_json(doc)));

  const auto k6 = write_host("k6.txt", complete_triple_system(6));
  r = run("analyze -i " + k6);
  CHECK(r.code == 0);
  CHECK(nlohmann::ordered_json::parse(r.out)["pattern"] == "c5");

  const auto c6 = write_host("c6.txt", construct_complete_k_partite(6, 3).host);
  CHECK(run("analyze -i " + c6).code == 2);
}

TEST_CASE("exact") {
  auto r = run("exact --n 6 -p c5minus -o side.txt");
  CHECK(r.code == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["value"] == 2);
  CHECK(load_hypergraph(scratch() / "side.txt").order() == 6);
  CHECK(run("exact --n 8 -p c5").code == 2);
  CHECK(run("exact --n 6 -p c5 --jobs 0").code == 2);
}

TEST_CASE("localsearch needs a seed") {
  CHECK(run("localsearch --n 10 -p c5 --budget 10").code == 2);
  const auto a = run("localsearch --n 10 -p c5 --budget 300 --seed 4");
  const auto b = run("localsearch --n 10 -p c5 --budget 300 --seed 4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("localsearch --n 30 -p c5 --seed 1").code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("--help").code == 0);
}
