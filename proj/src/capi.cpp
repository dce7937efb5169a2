#include "hyperramsey/hyperramsey.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "hyperramsey/driver.hpp"
#include "hyperramsey/errors.hpp"

struct hr_params {
  hr::driver::Params values;
};

struct hr_object {
  hr::driver::Object obj;
};

struct hr_certificate {
  hr::Certificate cert;
};

namespace {

thread_local std::string last_error;

template <class F>
hr_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return HR_OK;
  } catch (const hr::DomainError& e) {
    last_error = e.what();
    return HR_E_DOMAIN;
  } catch (const hr::FormatError& e) {
    last_error = e.what();
    return HR_E_FORMAT;
  } catch (const hr::SoundnessError& e) {
    last_error = e.what();
    return HR_E_SOUNDNESS;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return HR_E_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HR_E_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return HR_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " is null");
}

// Run settings live in the same map as family parameters.
hr::RunConfig settings(const hr_params* p) {
  hr::RunConfig cfg;
  if (!p) return cfg;
  for (const char* key : {"seed", "budget.nodes", "budget.trials", "workers", "output", "cert"})
    if (auto it = p->values.find(key); it != p->values.end()) cfg.set(key, it->second);
  return cfg;
}

size_t copy_out(const std::string& s, char* buf, size_t len) {
  if (buf && len > 0) {
    const size_t n = std::min(len - 1, s.size());
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
  }
  return s.size();
}

}  // namespace

extern "C" {

const char* hr_version(void) { return hr::kToolVersion; }

const char* hr_last_error(void) { return last_error.c_str(); }

hr_params* hr_params_new(void) { return new hr_params; }

void hr_params_free(hr_params* p) { delete p; }

hr_status hr_params_set(hr_params* p, const char* key, const char* value) {
  return guarded([&] {
    require(p, "params");
    require(key, "key");
    require(value, "value");
    p->values[key] = value;
  });
}

const char* hr_params_get(const hr_params* p, const char* key) {
  if (!p || !key) return nullptr;
  auto it = p->values.find(key);
  return it == p->values.end() ? nullptr : it->second.c_str();
}

hr_status hr_params_load_config(hr_params* p, const char* path) {
  return guarded([&] {
    require(p, "params");
    require(path, "path");
    std::ifstream in(path);
    if (!in) throw hr::FormatError(std::string("cannot open config '") + path + "'");
    for (auto& [k, v] : hr::config_entries(in)) p->values[k] = v;
  });
}

hr_status hr_build(const char* family, const hr_params* params, hr_object** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    *out = nullptr;
    static const hr::driver::Params none;
    *out = new hr_object{hr::driver::build(family, params ? params->values : none, settings(params))};
  });
}

hr_status hr_load(const char* path, hr_object** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    *out = new hr_object{hr::driver::load(path)};
  });
}

hr_status hr_save(const hr_object* obj, const char* path) {
  return guarded([&] {
    require(obj, "object");
    require(path, "path");
    hr::driver::save(obj->obj, path);
  });
}

void hr_object_free(hr_object* obj) { delete obj; }

hr_kind hr_object_kind(const hr_object* obj) {
  if (obj->obj.tournament) return HR_TOURNAMENT;
  return obj->obj.hypergraph ? HR_HYPERGRAPH : HR_COLORING;
}

unsigned hr_object_uniformity(const hr_object* obj) {
  if (obj->obj.coloring) return obj->obj.coloring->uniformity();
  if (obj->obj.hypergraph) return obj->obj.hypergraph->uniformity();
  return 2;
}

size_t hr_object_size(const hr_object* obj, char* buf, size_t len) {
  const auto& o = obj->obj;
  std::string s;
  if (o.coloring) s = o.coloring->size().to_string();
  else if (o.hypergraph) s = o.hypergraph->size().to_string();
  else s = std::to_string(o.tournament->size());
  return copy_out(s, buf, len);
}

hr_certificate* hr_object_certificate(const hr_object* obj) {
  if (!obj || !obj->obj.certificate) return nullptr;
  return new hr_certificate{*obj->obj.certificate};
}

hr_certificate* hr_certificate_new(const hr_object* obj, uint64_t seed) {
  return new hr_certificate{hr::driver::new_certificate(obj ? &obj->obj : nullptr, seed)};
}

hr_status hr_certificate_load(const char* path, hr_certificate** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    std::istringstream in(hr::formats::read_text(path));
    *out = new hr_certificate{hr::formats::read_cert(in)};
  });
}

hr_status hr_certificate_save(const hr_certificate* cert, const char* path) {
  return guarded([&] {
    require(cert, "certificate");
    require(path, "path");
    std::ostringstream out;
    hr::formats::write_cert(out, cert->cert);
    hr::formats::write_text(path, out.str());
  });
}

void hr_certificate_free(hr_certificate* cert) { delete cert; }

size_t hr_certificate_claim_count(const hr_certificate* cert) {
  return cert ? cert->cert.claims.size() : 0;
}

hr_status hr_certificate_claim(const hr_certificate* cert, size_t index, hr_claim* out) {
  return guarded([&] {
    require(cert, "certificate");
    require(out, "out");
    if (index >= cert->cert.claims.size()) throw std::invalid_argument("claim index out of range");
    const auto& c = cert->cert.claims[index];
    *out = {c.property.c_str(), c.status.c_str(), c.value, c.budget, c.seed, c.holds() ? 1 : 0};
  });
}

hr_verdict hr_certificate_verdict(const hr_certificate* cert) {
  return static_cast<hr_verdict>(hr::driver::verdict(cert->cert));
}

void hr_certificate_set_timestamp(hr_certificate* cert, const char* timestamp) {
  if (cert && timestamp) cert->cert.timestamp = timestamp;
}

hr_status hr_verify(const hr_object* obj, const char* check, const hr_params* params,
                    hr_certificate* cert, hr_verdict* verdict) {
  return guarded([&] {
    require(check, "check");
    require(cert, "certificate");
    static const hr::driver::Params none;
    const auto* o = obj ? &obj->obj : nullptr;
    const auto property = hr::driver::property_for(check, params ? params->values : none, o);
    cert->cert.claims.push_back(hr::driver::run(property, o, settings(params)));
    if (verdict) *verdict = static_cast<hr_verdict>(hr::driver::verdict(cert->cert));
  });
}

hr_status hr_replay(const hr_certificate* cert, const char* cert_path, const hr_params* settings_p,
                    hr_certificate** out, int* identical) {
  return guarded([&] {
    require(cert, "certificate");
    require(out, "out");
    *out = nullptr;
    std::optional<hr::driver::Object> obj;
    if (!cert->cert.construction.family.empty() && cert->cert.construction.family != "theorem5") {
      std::string dir = ".";
      if (cert_path && std::string(cert_path) != "-")
        dir = std::filesystem::absolute(cert_path).parent_path().string();
      obj = hr::driver::resolve(cert->cert.construction, dir);
    }
    auto fresh = hr::driver::replay(cert->cert, obj ? &*obj : nullptr, settings(settings_p));
    if (identical) *identical = fresh.claims == cert->cert.claims ? 1 : 0;
    *out = new hr_certificate{std::move(fresh)};
  });
}

hr_status hr_compute_t(unsigned n, uint64_t max_n, const hr_params* params, hr_t_result* out,
                       char* report, size_t report_len, size_t* report_needed) {
  return guarded([&] {
    require(out, "out");
    const auto cfg = settings(params);
    hr::tourney::TSearchLimits lim;
    lim.seed = cfg.seed;
    lim.workers = cfg.workers;
    const auto r = hr::tourney::compute_T(n, max_n, lim);
    *out = {r.value ? 1 : 0, r.exceeds_max ? 1 : 0, r.value.value_or(0), r.witness_size};
    const auto text = hr::driver::format_t_report(r);
    const auto needed = copy_out(text, report, report_len);
    if (report_needed) *report_needed = needed;
  });
}

}  // extern "C"
