// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 budget exhausted without a settled answer.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "hyperramsey/hyperramsey.h"

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2, kUndecided = 3;

struct ParamsDeleter {
  void operator()(hr_params* p) const { hr_params_free(p); }
};
struct ObjectDeleter {
  void operator()(hr_object* o) const { hr_object_free(o); }
};
struct CertDeleter {
  void operator()(hr_certificate* c) const { hr_certificate_free(c); }
};
using Params = std::unique_ptr<hr_params, ParamsDeleter>;
using Object = std::unique_ptr<hr_object, ObjectDeleter>;
using Cert = std::unique_ptr<hr_certificate, CertDeleter>;

struct Failure {
  int code;
};

void check(hr_status s) {
  if (s == HR_OK) return;
  std::cerr << "error: " << hr_last_error() << "\n";
  throw Failure{s == HR_E_SOUNDNESS || s == HR_E_INTERNAL ? kFail : kUsage};
}

// SOURCE_DATE_EPOCH pins the timestamp for reproducible output.
std::string timestamp() {
  std::time_t t = std::time(nullptr);
  if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) t = std::strtoll(env, nullptr, 10);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

struct Global {
  std::string config;
  std::map<std::string, std::string> overrides;  // run settings from flags
};

Params settings(const Global& g) {
  Params p(hr_params_new());
  if (!g.config.empty()) check(hr_params_load_config(p.get(), g.config.c_str()));
  for (const auto& [k, v] : g.overrides) check(hr_params_set(p.get(), k.c_str(), v.c_str()));
  return p;
}

std::string setting(const hr_params* p, const char* key, const std::string& fallback) {
  const char* v = hr_params_get(p, key);
  return v && *v ? v : fallback;
}

int verdict_code(hr_verdict v) {
  switch (v) {
    case HR_HOLDS: return kOk;
    case HR_FAILS: return kFail;
    case HR_UNDECIDED: return kUndecided;
  }
  return kFail;
}

void report_claims(const hr_certificate* cert) {
  const size_t n = hr_certificate_claim_count(cert);
  for (size_t i = 0; i < n; ++i) {
    hr_claim c;
    check(hr_certificate_claim(cert, i, &c));
    std::cerr << c.property << ": " << c.status << " value=" << c.value
              << (c.holds ? "  [holds]" : "  [not established]") << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stepping-up constructions and their verification oracles"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(hr_version()));

  Global g;
  std::optional<std::uint64_t> seed, nodes, trials;
  std::optional<unsigned> workers;
  app.add_option("--config", g.config, "key=value settings file")->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "random seed");
  app.add_option("--workers", workers, "worker threads")->check(CLI::Range(1u, 1024u));
  app.add_option("--budget-nodes", nodes, "branch-and-bound node budget");
  app.add_option("--budget-trials", trials, "sampling trial budget");

  // build
  auto* build = app.add_subcommand("build", "build a construction");
  std::string family, out_path, cert_path;
  std::map<std::string, std::string> bparams;
  build->add_option("family", family, "construction family")
      ->required()
      ->check(CLI::IsMember({"stepup4", "stepupk", "rogers", "halfgraph-odd", "halfgraph-even",
                             "paley", "qr-tournament", "frankl-wilson", "transform"}));
  for (const char* key : {"base", "k", "n", "q", "p", "depth", "trials", "input", "base-k",
                          "base-n"}) {
    build->add_option_function<std::string>(
        std::string("--") + key, [&bparams, key](const std::string& v) { bparams[key] = v; },
        std::string("family parameter ") + key);
  }
  build->add_option("-o,--output", out_path, "output file ('-' for stdout)");
  build->add_option("--cert", cert_path, "write the search certificate here (half-graph builds)");

  // verify
  auto* verify = app.add_subcommand("verify", "run an oracle and record a claim");
  std::string check_name, input, cert_in, cert_out, color;
  std::optional<std::uint64_t> size, s_param, exhaustive_n;
  verify->add_option("check", check_name, "check to run")
      ->required()
      ->check(CLI::IsMember({"no-clique", "alpha", "no-halfgraph", "max-transitive", "theorem5"}));
  verify->add_option("input", input, "construction file, descriptor or certificate ('-' stdin)");
  verify->add_option("--color", color, "red, blue (colorings) or edge (hypergraphs)");
  verify->add_option("--size", size, "forbidden clique size");
  verify->add_option("--s", s_param, "s for the s-independence number");
  verify->add_option("--exhaustive-N", exhaustive_n, "N for the exhaustive transform check");
  verify->add_option("--cert-in", cert_in, "append to this certificate");
  verify->add_option("--cert", cert_out, "certificate output ('-' for stdout)");

  // replay
  auto* replay = app.add_subcommand("replay", "re-run every claim of a certificate");
  std::string replay_path, replay_out;
  replay->add_option("certificate", replay_path)->required();
  replay->add_option("--cert", replay_out, "write the fresh certificate here");

  // compute-t
  auto* ct = app.add_subcommand("compute-t", "smallest N forcing a transitive n-subtournament");
  unsigned t_n = 0;
  std::uint64_t t_max = 0;
  ct->add_option("--n", t_n, "transitive subtournament size")->required()->check(CLI::Range(2u, 64u));
  ct->add_option("--max-N", t_max, "largest N to examine")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (seed) g.overrides["seed"] = std::to_string(*seed);
  if (workers) g.overrides["workers"] = std::to_string(*workers);
  if (nodes) g.overrides["budget.nodes"] = std::to_string(*nodes);
  if (trials) g.overrides["budget.trials"] = std::to_string(*trials);

  try {
    auto params = settings(g);

    if (*build) {
      for (const auto& [k, v] : bparams) check(hr_params_set(params.get(), k.c_str(), v.c_str()));
      hr_object* raw = nullptr;
      check(hr_build(family.c_str(), params.get(), &raw));
      Object obj(raw);
      const auto out = out_path.empty() ? setting(params.get(), "output", "-") : out_path;
      check(hr_save(obj.get(), out.c_str()));
      if (Cert cert{hr_object_certificate(obj.get())}) {
        hr_certificate_set_timestamp(cert.get(), timestamp().c_str());
        report_claims(cert.get());
        if (cert_path.empty()) cert_path = setting(params.get(), "cert", "");
        if (!cert_path.empty()) check(hr_certificate_save(cert.get(), cert_path.c_str()));
        return verdict_code(hr_certificate_verdict(cert.get()));
      }
      return kOk;
    }

    if (*verify) {
      Cert cert;
      Object obj;
      if (!cert_in.empty()) {
        hr_certificate* c = nullptr;
        check(hr_certificate_load(cert_in.c_str(), &c));
        cert.reset(c);
      }
      const auto& source = !input.empty() ? input : cert_in;
      if (check_name != "theorem5") {
        if (source.empty()) {
          std::cerr << "error: " << check_name << " needs an input construction\n";
          return kUsage;
        }
        hr_object* raw = nullptr;
        check(hr_load(source.c_str(), &raw));
        obj.reset(raw);
      }
      if (!cert) {
        std::uint64_t s = seed.value_or(1);
        cert.reset(hr_certificate_new(obj.get(), s));
        hr_certificate_set_timestamp(cert.get(), timestamp().c_str());
      }
      if (!color.empty()) check(hr_params_set(params.get(), "color", color.c_str()));
      if (size) check(hr_params_set(params.get(), "size", std::to_string(*size).c_str()));
      if (s_param) check(hr_params_set(params.get(), "s", std::to_string(*s_param).c_str()));
      if (exhaustive_n)
        check(hr_params_set(params.get(), "N", std::to_string(*exhaustive_n).c_str()));
      if (check_name == "theorem5" && !exhaustive_n) {
        std::cerr << "error: theorem5 needs --exhaustive-N\n";
        return kUsage;
      }
      hr_verdict v = HR_HOLDS;
      check(hr_verify(obj.get(), check_name.c_str(), params.get(), cert.get(), &v));
      report_claims(cert.get());
      const auto out = !cert_out.empty() ? cert_out : setting(params.get(), "cert", "-");
      check(hr_certificate_save(cert.get(), out.empty() ? "-" : out.c_str()));
      return verdict_code(v);
    }

    if (*replay) {
      hr_certificate* raw = nullptr;
      check(hr_certificate_load(replay_path.c_str(), &raw));
      Cert recorded(raw);
      hr_certificate* fresh_raw = nullptr;
      int identical = 0;
      check(hr_replay(recorded.get(), replay_path.c_str(), params.get(), &fresh_raw, &identical));
      Cert fresh(fresh_raw);
      report_claims(fresh.get());
      if (!replay_out.empty()) check(hr_certificate_save(fresh.get(), replay_out.c_str()));
      std::cerr << (identical ? "replay: claims identical\n" : "replay: claims differ\n");
      if (!identical) return kFail;
      return verdict_code(hr_certificate_verdict(fresh.get()));
    }

    if (*ct) {
      hr_t_result r{};
      size_t needed = 0;
      std::string report(1 << 16, '\0');
      check(hr_compute_t(t_n, t_max, params.get(), &r, report.data(), report.size(), &needed));
      if (needed >= report.size()) {
        report.assign(needed + 1, '\0');
        check(hr_compute_t(t_n, t_max, params.get(), &r, report.data(), report.size(), &needed));
      }
      report.resize(needed);
      std::cout << report;
      return r.determined || r.exceeds_max ? kOk : kUndecided;
    }
  } catch (const Failure& f) {
    return f.code;
  }
  return kUsage;
}
