#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "ssfem/cli.hpp"

using namespace ssfem::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ssfem");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = ssfem::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

}  // namespace

TEST_CASE("count table for the 5D element") {
  const auto r = invoke({"count", "--dim", "5", "--smoothness", "1", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(ends_with(r.out, "total 501942\n"));
  const auto again = invoke({"count", "--dim", "5", "--smoothness", "1", "--format", "text"});
  CHECK(again.out == r.out);
}

TEST_CASE("commands and exit codes") {
  CHECK(invoke({"verify", "--dim", "2", "--smoothness", "1"}).code == 0);
  CHECK(invoke({"partition", "--dim", "3", "--profile", "5,2,0", "--degree", "11"}).code == 0);
  auto r = invoke({"unisolvence", "--dim", "2", "--smoothness", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rank 21 of 21") != std::string::npos);
  r = invoke({"continuity", "--dim", "2", "--smoothness", "1", "--seed", "42", "--samples", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("max jump = 0\n") != std::string::npos);
  r = invoke({"export", "--dim", "1", "--smoothness", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"functionals\"") != std::string::npos);
}

TEST_CASE("bad input exits with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"count", "--bogus"}).code == 2);
  CHECK(invoke({"count", "--dim", "0"}).code == 2);
  CHECK(invoke({"count", "--dim", "5", "--format", "yaml"}).code == 2);
  CHECK(invoke({"count", "--dim", "7"}).code == 2);
  // profile length must match the dimension
  CHECK(invoke({"partition", "--dim", "3", "--profile", "2,1"}).code == 2);
  // orders must decrease
  CHECK(invoke({"partition", "--dim", "2", "--profile", "1,1"}).code == 2);
  // degree below 2 r_0 + 1
  CHECK(invoke({"partition", "--dim", "2", "--degree", "4"}).code == 2);
  // closed forms exist only for the family
  const auto r = invoke({"count", "--dim", "2", "--degree", "7"});
  CHECK(r.code == 2);
  CHECK(r.err.find("partition") != std::string::npos);
  CHECK(invoke({"unisolvence", "--dim", "5", "--smoothness", "1"}).code == 2);
  CHECK(invoke({"export", "--dim", "4"}).code == 2);
}

TEST_CASE("direct run with an unknown command") {
  RunConfig c;
  c.command = "nope";
  std::ostringstream out, err;
  CHECK(run(c, out, err) == kExitUsage);
}

TEST_CASE("cap override from the environment") {
  ::setenv("SSFEM_CAP", "10", 1);
  CHECK(invoke({"unisolvence", "--dim", "2", "--smoothness", "1"}).code == 2);
  ::setenv("SSFEM_CAP", "abc", 1);
  CHECK(invoke({"unisolvence", "--dim", "2", "--smoothness", "1"}).code == 2);
  ::setenv("SSFEM_CAP", "30", 1);
  CHECK(invoke({"unisolvence", "--dim", "2", "--smoothness", "1"}).code == 0);
  ::unsetenv("SSFEM_CAP");
}

TEST_CASE("formats and file output") {
  auto r = invoke({"count", "--dim", "2", "--format", "csv"});
  CHECK(r.out.rfind("face_dim,order,per_face,num_faces,total\n", 0) == 0);
  r = invoke({"verify", "--dim", "3", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);

  const std::string path = "ssfem_cli_test_output.json";
  r = invoke({"count", "--dim", "3", "--format", "json", "--output", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str().find("\"grand_total\": \"220\"") != std::string::npos);
  std::remove(path.c_str());
}
