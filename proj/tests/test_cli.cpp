#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>
#include <rapidjson/document.h>
#include <rapidjson/error/en.h>
#include <rapidjson/schema.h>
#include <rapidjson/stringbuffer.h>

#include "dla/catalog.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(DLA_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string schema_dir() { return std::string(DLA_SOURCE_DIR) + "/schemas/"; }

class SchemaFiles : public rapidjson::IRemoteSchemaDocumentProvider {
 public:
  const rapidjson::SchemaDocument* GetRemoteDocument(const char* uri, rapidjson::SizeType length) override {
    std::string name(uri, length);
    auto it = docs_.find(name);
    if (it != docs_.end()) return it->second.get();
    rapidjson::Document d;
    d.Parse(slurp(schema_dir() + name).c_str());
    if (d.HasParseError()) return nullptr;
    auto doc = std::make_unique<rapidjson::SchemaDocument>(d, this);
    return (docs_[name] = std::move(doc)).get();
  }

 private:
  std::map<std::string, std::unique_ptr<rapidjson::SchemaDocument>> docs_;
};

// Empty string on success, otherwise the failing keyword and location.
std::string validate(const std::string& schema_name, const std::string& json_text) {
  rapidjson::Document sd;
  sd.Parse(slurp(schema_dir() + schema_name).c_str());
  if (sd.HasParseError()) return "schema parse error";
  SchemaFiles provider;
  rapidjson::SchemaDocument schema(sd, &provider);
  rapidjson::Document d;
  d.Parse(json_text.c_str());
  if (d.HasParseError()) return std::string("json parse error: ") + rapidjson::GetParseError_En(d.GetParseError());
  rapidjson::SchemaValidator v(schema);
  if (d.Accept(v)) return "";
  rapidjson::StringBuffer sb;
  v.GetInvalidDocumentPointer().StringifyUriFragment(sb);
  return std::string(v.GetInvalidSchemaKeyword()) + " at " + sb.GetString();
}

}  // namespace

TEST_CASE("close") {
  auto r = run("close --generators XY,YZ --n 3 --topology open");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["dimension"] == 10);
  CHECK(validate("close.schema.json", r.out) == "");
  auto a9 = run("close --family a9 --n 3");
  CHECK(a9.status == 0);
  CHECK(nlohmann::json::parse(a9.out)["dimension"] == 10);
  CHECK(run("close --generators II").status == 2);
  CHECK(run("close --generators XQ").status == 2);
  CHECK(run("close --generators XY --family a1").status == 2);
  CHECK(run("close").status == 2);
  CHECK(run("close --family a12 --n 5 --max-elements 100").status == 3);
}

TEST_CASE("close text and csv") {
  auto t = run("close --family a7 --n 3 --format text");
  CHECK(t.status == 0);
  CHECK(t.out.find("dim 15") != std::string::npos);
  CHECK(t.out.find("IXX") != std::string::npos);
  auto cut = run("close --family a7 --n 3 --format text --list-limit 4");
  CHECK(cut.out.find("11 more") != std::string::npos);
  auto c = run("close --family a7 --n 3 --format csv");
  CHECK(c.out.rfind("string\n", 0) == 0);
  CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 16);
}

TEST_CASE("structure") {
  auto a8 = run("structure --family a8 --n 5");
  CHECK(a8.status == 0);
  auto j = nlohmann::json::parse(a8.out);
  CHECK(j["frustration_verdict"] == "so(9)");
  CHECK(j["iso_checks"]["dim_ok"] == true);
  CHECK(validate("structure.schema.json", a8.out) == "");
  auto a0 = nlohmann::json::parse(run("structure --family a0 --n 4 --topology open").out);
  CHECK(a0["stabilizer_order"] == 32);
  CHECK(a0["stabilizer_elements"].size() == 32);
  auto xi = run("structure --generators X");
  CHECK(xi.status == 0);
  CHECK(nlohmann::json::parse(xi.out)["center"] == nlohmann::json::array({"X"}));
  CHECK(validate("structure.schema.json", xi.out) == "");
  CHECK(run("structure --family a9 --n 4 --claim \"so(9)\"").status == 0);
  CHECK(run("structure --family a9 --n 4 --claim \"su(6)\"").status == 1);
  CHECK(run("structure --family a9 --n 4 --claim \"su(6\"").status == 2);
}

TEST_CASE("scan") {
  auto r = run("scan");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["total"] == 202);
  CHECK(j["a_count"] == 127);
  CHECK(j["b_count"] == 19);
  CHECK(j["c_count"] == 56);
  CHECK(j["orbit_count"] == 36);
  CHECK(validate("scan.schema.json", r.out) == "");
  auto csv = run("scan --format csv");
  CHECK(csv.out.rfind("label,type,basis,dim,stabilizer_order,orbit_size,s,p,e,d\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 37);
  CHECK(csv.out.find('\r') == std::string::npos);
  auto orbit = run("scan --orbit-of XX,YZ");
  CHECK(orbit.status == 0);
  auto o = nlohmann::json::parse(orbit.out);
  CHECK(o["label"] == "a3");
  CHECK(o["orbit_size"] == 6);
  CHECK(validate("orbit.schema.json", orbit.out) == "");
  CHECK(run("scan --orbit-of XYZ").status == 2);
}

TEST_CASE("classify") {
  auto r = run("classify --family a3 --topology periodic --n 3..6");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 4);
  for (const auto& row : j) CHECK(row["verdict"] == "match");
  CHECK(validate("classify.schema.json", r.out) == "");
  CHECK(run("classify --n 2..").status == 2);
  CHECK(run("classify --n 2..5").status == 2);
  CHECK(run("classify --n 5..3").status == 2);
  auto capped = run("classify --family a12 --n 5 --max-elements 50");
  CHECK(capped.status == 3);
  CHECK(validate("classify.schema.json", capped.out) == "");
  auto csv = run("classify --family a1 --n 3..4 --format csv");
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 3);
}

TEST_CASE("threads from the environment give the same answer") {
  auto one = run("close --family a13 --n 5 --format csv");
  auto two = run("close --family a13 --n 5 --format csv --threads 2");
  CHECK(one.out == two.out);
  setenv("DLA_THREADS", "2", 1);
  auto env = run("close --family a13 --n 5 --format csv");
  unsetenv("DLA_THREADS");
  CHECK(env.out == one.out);
}

TEST_CASE("output file") {
  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/dla_cli_catalog.json";
  CHECK(run("catalog -o " + path).status == 0);
  auto text = slurp(path);
  CHECK(nlohmann::json::parse(text) == dla::catalog_json());
  CHECK(validate("catalog.schema.json", text) == "");
  std::remove(path.c_str());
}

TEST_CASE("shipped catalog resource validates") {
  CHECK(validate("catalog.schema.json", slurp(std::string(DLA_SOURCE_DIR) + "/resources/catalog.json")) == "");
}
