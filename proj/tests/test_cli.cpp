#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string output;
};

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "coarse_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  fs::path log = work_dir() / "last_output.txt";
  std::string cmd = std::string(COARSE_CLI_PATH) + " " + args + " > " + log.string() +
                    " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& content) {
  std::ofstream out(p);
  out << content;
}

}  // namespace

TEST_CASE("cli: grid decomposition writes a certificate that verifies") {
  fs::path cert = work_dir() / "grid.json";
  RunResult dec = run_cli("decompose --grid 2x16 --method example1 --out " + cert.string());
  CHECK(dec.code == 0);
  CHECK(fs::exists(cert));
  CHECK(dec.output.find("self-verification PASS") != std::string::npos);

  RunResult ver = run_cli("verify --certificate " + cert.string() + " --grid 2x16");
  CHECK(ver.code == 0);
  CHECK(ver.output.find("verification PASS") != std::string::npos);
}

TEST_CASE("cli: hypothesis failure exits 2 with a report") {
  fs::path star = work_dir() / "star.txt";
  write_file(star, "# K_{1,5}\n0 1\n0 2\n0 3\n0 4\n0 5\n");
  fs::path report = work_dir() / "star_report.json";
  RunResult r = run_cli("decompose --graph " + star.string() +
                        " --method prop10 --partition singletons --r 1 --out " +
                        report.string());
  CHECK(r.code == 2);
  CHECK(slurp(report).find("hypothesis_report") != std::string::npos);
  CHECK(slurp(report).find("\"pass\": false") != std::string::npos);
}

TEST_CASE("cli: subdivide+prop10 succeeds on a random connected graph") {
  fs::path cert = work_dir() / "sub.json";
  RunResult r = run_cli("decompose --random-graph 40:15 --seed 5 --method subdivide+prop10 --out " +
                        cert.string());
  CHECK(r.code == 0);
  CHECK(r.output.find("self-verification PASS") != std::string::npos);
}

TEST_CASE("cli: tampered certificate exits 3 naming the failure") {
  fs::path cert = work_dir() / "tree.json";
  RunResult dec = run_cli("decompose --random-tree 30 --seed 9 --method prop9 --out " +
                          cert.string());
  REQUIRE(dec.code == 0);

  std::string text = slurp(cert);
  auto chain_pos = text.find("\"chain\": [");
  REQUIRE(chain_pos != std::string::npos);
  // damage the first chain entry: point every witness start somewhere wrong
  auto bracket = text.find('[', chain_pos);
  auto comma = text.find_first_of(",]", bracket);
  std::string head = text.substr(bracket + 1, comma - bracket - 1);
  int old_id = std::stoi(head);
  text = text.substr(0, bracket + 1) + std::to_string((old_id + 1) % 30) +
         text.substr(comma);
  fs::path bad = work_dir() / "tree_bad.json";
  write_file(bad, text);

  RunResult ver = run_cli("verify --certificate " + bad.string() +
                          " --random-tree 30 --seed 9");
  CHECK(ver.code == 3);
  CHECK(ver.output.find("verification FAIL") != std::string::npos);
  CHECK(ver.output.find("edge witness") != std::string::npos);
}

TEST_CASE("cli: oracle agreement on a small window") {
  fs::path cert = work_dir() / "small.json";
  RunResult dec = run_cli("decompose --grid 2x4 --method example1 --out " + cert.string());
  REQUIRE(dec.code == 0);
  fs::path report = work_dir() / "small_verify.json";
  RunResult ver = run_cli("verify --certificate " + cert.string() +
                          " --grid 2x4 --oracle --oracle-cap 64 --out " + report.string());
  CHECK(ver.code == 0);
  CHECK(ver.output.find("(agrees)") != std::string::npos);
  CHECK(slurp(report).find("\"agrees\": true") != std::string::npos);
}

TEST_CASE("cli: malformed input exits 1 with a line number") {
  fs::path bad = work_dir() / "bad.txt";
  write_file(bad, "0 1\n2 oops\n");
  RunResult r = run_cli("decompose --graph " + bad.string() + " --method prop9 --out " +
                        (work_dir() / "never.json").string());
  CHECK(r.code == 1);
  CHECK(r.output.find("line 2") != std::string::npos);

  fs::path badmetric = work_dir() / "bad_metric.txt";
  write_file(badmetric, "0 1 1 1\n0 2 1 1\n");  // pair (1,2) missing
  RunResult rm = run_cli("lattice --a metric:" + badmetric.string() + " --b ideal:3:0");
  CHECK(rm.code == 1);
  CHECK(rm.output.find("missing distance") != std::string::npos);
}

TEST_CASE("cli: schema mismatch on verify exits 1") {
  fs::path wrong = work_dir() / "wrong_schema.json";
  write_file(wrong, "{\"schema\": 9, \"kind\": \"decomposition_certificate\"}\n");
  RunResult r = run_cli("verify --certificate " + wrong.string() + " --grid 1x4");
  CHECK(r.code == 1);
  CHECK(r.output.find("schema") != std::string::npos);

  fs::path garbage = work_dir() / "garbage.json";
  write_file(garbage, "not json at all\n");
  CHECK(run_cli("verify --certificate " + garbage.string() + " --grid 1x4").code == 1);
}

TEST_CASE("cli: hypothesis report records the seed") {
  fs::path report = work_dir() / "seeded_report.json";
  // a random tree with more leaves than the center class can absorb
  RunResult r = run_cli("decompose --random-tree 40 --seed 11 --method prop10 "
                        "--partition singletons --r 1 --out " + report.string());
  CHECK(r.code == 2);
  CHECK(slurp(report).find("\"seed\": 11") != std::string::npos);
}

TEST_CASE("cli: lattice on identical inputs reports identity moduli") {
  fs::path pfile = work_dir() / "p9.txt";
  write_file(pfile, "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n");
  fs::path report = work_dir() / "lattice.json";
  RunResult r = run_cli("lattice --a graph:" + pfile.string() + " --b graph:" +
                        pfile.string() + " --radius 4 --join-member 0,8 --maxlen 3 --out " +
                        report.string());
  CHECK(r.code == 0);
  std::string text = slurp(report);
  CHECK(text.find("\"contained\": true") != std::string::npos);
  CHECK(text.find("\"modulus\": [\n      0,\n      1,\n      2,\n      3,\n      4\n    ]") !=
        std::string::npos);
  // distance 8 needs two hops of radius 4
  CHECK(text.find("\"join_member\"") != std::string::npos);
  CHECK(r.output.find("word of length 2") != std::string::npos);
}

TEST_CASE("cli: lattice complement on a cellular input") {
  fs::path pfile = work_dir() / "partition.txt";
  write_file(pfile, "0 1 2\n3 4\n5 6 7\n");
  RunResult r = run_cli("lattice --a partition:" + pfile.string() + " --b partition:" +
                        pfile.string() + " --radius 3 --complement");
  CHECK(r.code == 0);
  CHECK(r.output.find("word-3 cover PASS") != std::string::npos);
}

TEST_CASE("cli: identical seeds give byte-identical certificates") {
  fs::path a = work_dir() / "det_a.json";
  fs::path b = work_dir() / "det_b.json";
  REQUIRE(run_cli("decompose --random-graph 50:20 --seed 1234 --method subdivide+prop10 --out " +
                  a.string()).code == 0);
  REQUIRE(run_cli("decompose --random-graph 50:20 --seed 1234 --method subdivide+prop10 --out " +
                  b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  REQUIRE(run_cli("decompose --random-graph 50:20 --seed 77 --method subdivide+prop10 --out " +
                  b.string()).code == 0);
  CHECK(slurp(a) != slurp(b));
}

TEST_CASE("cli: metric structures through the lattice command") {
  fs::path mfile = work_dir() / "metric.txt";
  std::ostringstream ss;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) ss << i << " " << j << " " << (j - i) << " 1\n";
  }
  write_file(mfile, ss.str());
  RunResult r = run_cli("lattice --a metric:" + mfile.string() + " --b ideal:6:0,5 --radius 5");
  CHECK(r.code == 0);
  CHECK(r.output.find("meet radius 5") != std::string::npos);
}
