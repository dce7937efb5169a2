// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "hyperramsey/hyperramsey.h"

namespace {

std::string tmp_file(const char* name) {
  return (std::filesystem::temp_directory_path() / (std::string("hr_capi_") + name)).string();
}

}  // namespace

TEST_CASE("params") {
  hr_params* p = hr_params_new();
  CHECK(hr_params_get(p, "seed") == nullptr);
  CHECK(hr_params_set(p, "seed", "5") == HR_OK);
  CHECK(std::string(hr_params_get(p, "seed")) == "5");
  CHECK(hr_params_set(p, nullptr, "5") == HR_E_ARGUMENT);
  CHECK(std::strlen(hr_last_error()) > 0);
  CHECK(hr_params_load_config(p, "/nonexistent.cfg") == HR_E_FORMAT);
  const auto cfg = tmp_file("cfg");
  std::ofstream(cfg) << "workers=2\nbogus=1\n";
  CHECK(hr_params_load_config(p, cfg.c_str()) == HR_E_FORMAT);
  std::ofstream(cfg) << "workers=2\n";
  CHECK(hr_params_load_config(p, cfg.c_str()) == HR_OK);
  CHECK(std::string(hr_params_get(p, "workers")) == "2");
  std::remove(cfg.c_str());
  hr_params_free(p);
  CHECK(std::string(hr_version()) == "0.1.0");
}

TEST_CASE("build, verify, save, replay") {
  hr_params* p = hr_params_new();
  hr_params_set(p, "q", "17");
  hr_object* obj = nullptr;
  REQUIRE(hr_build("paley", p, &obj) == HR_OK);
  CHECK(hr_object_kind(obj) == HR_COLORING);
  CHECK(hr_object_uniformity(obj) == 2);
  char buf[4];
  CHECK(hr_object_size(obj, buf, sizeof buf) == 2);
  CHECK(std::string(buf) == "17");
  CHECK(hr_object_size(obj, buf, 2) == 2);  // truncated
  CHECK(std::string(buf) == "1");
  CHECK(hr_object_certificate(obj) == nullptr);

  hr_certificate* cert = hr_certificate_new(obj, 1);
  hr_params* v = hr_params_new();
  hr_params_set(v, "color", "red");
  hr_params_set(v, "size", "4");
  hr_verdict verdict = HR_FAILS;
  REQUIRE(hr_verify(obj, "no-clique", v, cert, &verdict) == HR_OK);
  CHECK(verdict == HR_HOLDS);
  hr_params_set(v, "size", "3");
  REQUIRE(hr_verify(obj, "no-clique", v, cert, &verdict) == HR_OK);
  CHECK(verdict == HR_FAILS);
  CHECK(hr_certificate_claim_count(cert) == 2);
  hr_claim c;
  REQUIRE(hr_certificate_claim(cert, 0, &c) == HR_OK);
  CHECK(std::string(c.property) == "no-clique:red:4");
  CHECK(std::string(c.status) == "exact");
  CHECK(c.value == 3);
  CHECK(c.holds == 1);
  CHECK(hr_certificate_claim(cert, 2, &c) == HR_E_ARGUMENT);
  CHECK(hr_verify(obj, "frobnicate", v, cert, &verdict) == HR_E_DOMAIN);

  const auto path = tmp_file("cert");
  hr_certificate_set_timestamp(cert, "1970-01-01T00:00:00Z");
  REQUIRE(hr_certificate_save(cert, path.c_str()) == HR_OK);
  hr_certificate* loaded = nullptr;
  REQUIRE(hr_certificate_load(path.c_str(), &loaded) == HR_OK);
  hr_certificate* fresh = nullptr;
  int identical = 0;
  REQUIRE(hr_replay(loaded, path.c_str(), nullptr, &fresh, &identical) == HR_OK);
  CHECK(identical == 1);
  CHECK(hr_certificate_verdict(fresh) == HR_FAILS);

  hr_object* from_cert = nullptr;
  REQUIRE(hr_load(path.c_str(), &from_cert) == HR_OK);
  CHECK(hr_object_kind(from_cert) == HR_COLORING);

  std::remove(path.c_str());
  hr_object_free(from_cert);
  hr_certificate_free(fresh);
  hr_certificate_free(loaded);
  hr_certificate_free(cert);
  hr_params_free(v);
  hr_object_free(obj);
  hr_params_free(p);
}

TEST_CASE("errors map to status codes") {
  hr_object* obj = nullptr;
  hr_params* p = hr_params_new();
  hr_params_set(p, "q", "15");
  CHECK(hr_build("paley", p, &obj) == HR_E_DOMAIN);
  CHECK(obj == nullptr);
  CHECK(std::string(hr_last_error()).find("prime") != std::string::npos);
  CHECK(hr_load("/nonexistent.kgc", &obj) == HR_E_FORMAT);
  CHECK(hr_build(nullptr, p, &obj) == HR_E_ARGUMENT);
  const auto path = tmp_file("bad.kgc");
  std::ofstream(path) << "KGC 1 k=2 n=3\n0 1 R\n";
  CHECK(hr_load(path.c_str(), &obj) == HR_E_FORMAT);
  std::remove(path.c_str());
  hr_params_free(p);
}

TEST_CASE("half-graph build carries its certificate") {
  hr_params* p = hr_params_new();
  hr_params_set(p, "k", "4");
  hr_params_set(p, "n", "8");
  hr_object* obj = nullptr;
  REQUIRE(hr_build("halfgraph-even", p, &obj) == HR_OK);
  hr_certificate* cert = hr_object_certificate(obj);
  REQUIRE(cert != nullptr);
  CHECK(hr_certificate_verdict(cert) == HR_HOLDS);
  CHECK(hr_certificate_claim_count(cert) == 2);
  hr_certificate_free(cert);
  hr_object_free(obj);
  hr_params_free(p);
}

TEST_CASE("compute_t") {
  hr_t_result r{};
  char small[8];
  size_t needed = 0;
  REQUIRE(hr_compute_t(3, 10, nullptr, &r, small, sizeof small, &needed) == HR_OK);
  CHECK(r.determined == 1);
  CHECK(r.value == 4);
  CHECK(needed > 0);
  std::string full(needed + 1, '\0');
  REQUIRE(hr_compute_t(3, 10, nullptr, &r, full.data(), full.size(), &needed) == HR_OK);
  CHECK(full.find("T(3) = 4") != std::string::npos);
  CHECK(hr_compute_t(1, 10, nullptr, &r, nullptr, 0, nullptr) == HR_E_DOMAIN);
}
