#include "calogero/cache.hpp"
#include "calogero/serialize.hpp"

#include <doctest.h>

#include <fstream>
#include <unistd.h>

using namespace calogero;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("calogero-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

}  // namespace

TEST_CASE("rational and label json") {
  CHECK(rational_json(Rational(-3, 6)) == "-1/2");
  CHECK(rational_json(Rational(4)) == "4");
  CHECK(rational_from_json(Json("7/3")) == Rational(7, 3));
  CHECK(label_json(Label{2, -1}).dump() == "[2,-1]");
  CHECK(label_from_json(Json::parse("[0,3]")) == Label{0, 3});
}

TEST_CASE("polynomial json") {
  const SymPoly p = msym(Label{1, 1}) * Rational(1, 2) + msym(Label{2, 0}) - msym(Label{0, 0}) * Rational(3);
  const Json j = poly_json(p);
  CHECK(j.dump() ==
        R"({"basis":"msym","terms":[{"partition":[2,0],"coeff":"1"},{"partition":[1,1],"coeff":"1/2"},{"partition":[0,0],"coeff":"-3"}]})");
  CHECK(poly_from_json(j, 2) == p);
  const SymPoly q = SymPoly::variable(2, 0) * Rational(2);
  const Json jq = poly_json(q);
  CHECK(jq["basis"] == "monomial");
  CHECK(poly_from_json(jq, 2) == q);
  CHECK_THROWS(poly_from_json(Json::parse(R"({"basis":"power","terms":[]})"), 2));
}

TEST_CASE("action row json") {
  const auto row = monomial_action(Label{2, 0}, ModelParams::a(2, Rational(1, 2)));
  CHECK(action_row_json(row).dump() == R"({"source":[2,0],"entries":[{"partition":[0,0],"coeff":"-3"}]})");
}

TEST_CASE("record json layout and round trip") {
  const auto rec = solve(Label{2, 0}, ModelParams::a(2, Rational(1, 2)), Method::theorem1);
  const Json j = record_json(rec);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"model", "N", "lambda", "mu", "label", "method", "energy", "coeffs", "poly"});
  CHECK(j["mu"].is_null());
  CHECK(j["energy"] == "7");
  CHECK(j["coeffs"][0]["label"].dump() == "[2,0]");
  const EigenRecord back = record_from_json(j);
  CHECK(back.poly == rec.poly);
  CHECK(back.coeffs.entries == rec.coeffs.entries);
  CHECK(record_json(back).dump() == j.dump());

  const auto recb = solve(Label{1, 0}, ModelParams::b(2, Rational(3, 2), Rational(1, 2)), Method::bmodel);
  const Json jb = record_json(recb);
  CHECK(jb["mu"] == "1/2");
  CHECK(record_json(record_from_json(jb)).dump() == jb.dump());
  Json broken = jb;
  broken["label"] = Json::parse("[1]");
  CHECK_THROWS(record_from_json(broken));
}

TEST_CASE("report json and text") {
  EigenRecord rec = solve(Label{1, 0}, ModelParams::a(2, Rational(1, 2)), Method::theorem1);
  rec.poly = msym(Label{2, 0});
  const Json j = report_json(verify_eigen(rec));
  CHECK(j["ok"] == false);
  CHECK(j["checks"][0]["witness"]["residual"]["basis"] == "msym");
  CHECK(j["checks"][1]["name"] == "energy");
  CHECK(j["checks"][1]["witness"].is_null());
  CHECK(report_text(verify_eigen(rec)).find("[FAIL] eigen-equation") != std::string::npos);
}

TEST_CASE("text and latex rendering") {
  const auto rec = solve(Label{2}, ModelParams::a(1, Rational(1, 2)), Method::theorem1);
  const std::string t = record_text(rec);
  CHECK(t.find("E = 5") != std::string::npos);
  CHECK(t.find("P = 3/8*x1^2 - 3/16") != std::string::npos);
  CHECK(record_latex(rec) == "P_{(2)} = \\frac{3}{8} M_{(2)} - \\frac{3}{16} M_{(0)}, \\quad E_{(2)} = 5\n");
  const auto recb = solve(Label{1}, ModelParams::b(1, Rational(1), Rational(1)), Method::bmodel);
  CHECK(record_text(recb).find("z1") != std::string::npos);
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("cache put and get") {
  TempDir tmp;
  ResultCache cache(tmp.path);
  const auto params = ModelParams::a(2, Rational(3, 2));
  CHECK_FALSE(cache.get_record(params, Label{2, 1}, Method::theorem1).has_value());
  const auto rec = solve(Label{2, 1}, params, Method::theorem1);
  cache.put_record(rec);
  const auto hit = cache.get_record(params, Label{2, 1}, Method::theorem1);
  REQUIRE(hit.has_value());
  CHECK(record_json(*hit).dump() == record_json(rec).dump());
  CHECK_FALSE(cache.get_record(params, Label{2, 1}, Method::theorem2).has_value());
  CHECK_FALSE(cache.get_record(ModelParams::a(2, Rational(1, 2)), Label{2, 1}, Method::theorem1).has_value());
  CHECK(cache.take_warnings().empty());

  // Raw round trip is byte-identical.
  const std::string material = ResultCache::record_material(params, Label{2, 1}, Method::theorem1);
  const fs::path file = cache.path_for(sha256_hex(material));
  std::ifstream in(file);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  cache.put(material, record_json(rec));
  std::ifstream in2(file);
  std::string bytes2((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
  CHECK(bytes == bytes2);

  for (const auto& entry : fs::recursive_directory_iterator(tmp.path))
    CHECK(entry.path().filename().string().rfind(".tmp-", 0) == std::string::npos);
}

TEST_CASE("cache corruption and key mismatch are misses") {
  TempDir tmp;
  ResultCache cache(tmp.path);
  const auto params = ModelParams::a(1, Rational(1, 2));
  const auto rec = solve(Label{3}, params, Method::theorem1);
  cache.put_record(rec);
  const fs::path file = cache.path_for(sha256_hex(ResultCache::record_material(params, Label{3}, Method::theorem1)));

  { std::ofstream(file, std::ios::trunc) << "{not json"; }
  CHECK_FALSE(cache.get_record(params, Label{3}, Method::theorem1).has_value());
  auto warnings = cache.take_warnings();
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find(file.string()) != std::string::npos);

  Json doc;
  doc["schema"] = kCacheSchema;
  doc["key"] = std::string(64, '0');
  doc["value"] = record_json(rec);
  { std::ofstream(file, std::ios::trunc) << doc.dump(); }
  CHECK_FALSE(cache.get_record(params, Label{3}, Method::theorem1).has_value());
  CHECK(cache.take_warnings().empty());

  doc["key"] = sha256_hex(ResultCache::record_material(params, Label{3}, Method::theorem1));
  doc["schema"] = kCacheSchema + 1;
  { std::ofstream(file, std::ios::trunc) << doc.dump(); }
  CHECK_FALSE(cache.get_record(params, Label{3}, Method::theorem1).has_value());

  doc["schema"] = kCacheSchema;
  doc["value"]["poly"] = "garbage";
  { std::ofstream(file, std::ios::trunc) << doc.dump(); }
  CHECK_FALSE(cache.get_record(params, Label{3}, Method::theorem1).has_value());
  CHECK(cache.take_warnings().size() == 1);
}

TEST_CASE("cache put reports the offending path") {
  TempDir tmp;
  const fs::path blocker = tmp.path / "blocked";
  { std::ofstream(blocker) << "x"; }
  ResultCache cache(blocker);
  const auto rec = solve(Label{1}, ModelParams::a(1, Rational(1)), Method::theorem1);
  try {
    cache.put_record(rec);
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find(blocker.string()) != std::string::npos);
  }
}

TEST_CASE("f expansions persist through the cache") {
  TempDir tmp;
  ResultCache cache(tmp.path);
  auto store = std::make_shared<CachedFExpansions>(cache);
  const Label l{2, 1, 0};
  const Rational lam(5, 3);
  CHECK_FALSE(store->load(lam, l).has_value());
  const SymPoly f = f_expand_uncached(l, lam);
  store->store(lam, l, f);
  const auto back = store->load(lam, l);
  REQUIRE(back.has_value());
  CHECK(*back == f);
}
