// octic-monogen: command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "octic/octic.h"

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyDeleter {
  void operator()(octic_family* f) const { octic_family_free(f); }
};
struct ReportDeleter {
  void operator()(octic_report* r) const { octic_report_free(r); }
};
struct CandidatesDeleter {
  void operator()(octic_candidates* c) const { octic_candidates_free(c); }
};
using FamilyPtr = std::unique_ptr<octic_family, FamilyDeleter>;
using ReportPtr = std::unique_ptr<octic_report, ReportDeleter>;
using CandidatesPtr = std::unique_ptr<octic_candidates, CandidatesDeleter>;

// "12..20", "12,15,20" or a single (possibly huge) integer.
std::vector<std::string> expand_values(const std::string& spec) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    std::string item = spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item.empty()) throw UsageError("empty value in '" + spec + "'");
    std::size_t dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(item);
    } else {
      long long lo = 0, hi = 0;
      try {
        lo = std::stoll(item.substr(0, dots));
        hi = std::stoll(item.substr(dots + 2));
      } catch (const std::exception&) {
        throw UsageError("bad range '" + item + "'");
      }
      if (hi < lo) throw UsageError("empty range '" + item + "'");
      if (hi - lo > 100000) throw UsageError("range '" + item + "' too large");
      for (long long v = lo; v <= hi; ++v) out.push_back(std::to_string(v));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

long to_long(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("bad ") + what + " '" + s + "'");
  }
}

[[noreturn]] void fail(octic_status st, const std::string& stage) {
  throw std::runtime_error(stage + ": " + octic_status_name(st) + ": " + octic_last_error());
}

void check(octic_status st, const std::string& stage) {
  if (st == OCTIC_OK) return;
  if (st == OCTIC_ERR_INVALID_ARGUMENT || st == OCTIC_ERR_PARSE) {
    throw UsageError(stage + ": " + octic_last_error());
  }
  fail(st, stage);
}

struct FamilyArgs {
  std::string family = "d4";
  std::string T = "12";
  std::string d = "1";
  std::string m = "2";
  std::string t1 = "246";
  std::string t2 = "0";
  std::string candidates_path;
};

void add_family_options(CLI::App* cmd, FamilyArgs& fa, bool grid) {
  cmd->add_option("--family", fa.family, "d4 | composite | param1 | param2")
      ->check(CLI::IsMember({"d4", "composite", "param1", "param2"}))
      ->capture_default_str();
  const char* suffix = grid ? " (value, list a,b,c or range lo..hi)" : "";
  cmd->add_option("--T", fa.T, std::string("D4 parameter T") + suffix)->capture_default_str();
  cmd->add_option("--d", fa.d, std::string("quadratic field parameter d") + suffix)->capture_default_str();
  cmd->add_option("--m", fa.m, std::string("composite: pure quartic radicand m") + suffix)->capture_default_str();
  cmd->add_option("--t1", fa.t1, std::string("families I/II: rational coordinate of t") + suffix)->capture_default_str();
  cmd->add_option("--t2", fa.t2, std::string("families I/II: coordinate of t on i*sqrt(d)") + suffix)
      ->capture_default_str();
  cmd->add_option("--candidates", fa.candidates_path, "composite: JSON-lines candidate file");
}

std::vector<FamilyPtr> build_families(const FamilyArgs& fa, bool grid) {
  auto values = [&](const std::string& v) {
    std::vector<std::string> xs = expand_values(v);
    if (!grid && xs.size() != 1) throw UsageError("this command takes a single family instance, got '" + v + "'");
    return xs;
  };
  std::vector<FamilyPtr> out;
  auto push = [&](octic_status st, octic_family*& f) {
    check(st, "family");
    out.emplace_back(f);
  };
  if (fa.family == "d4") {
    for (const auto& T : values(fa.T)) {
      octic_family* f = nullptr;
      push(octic_family_d4(T.c_str(), &f), f);
    }
  } else if (fa.family == "composite") {
    for (const auto& d : values(fa.d)) {
      for (const auto& m : values(fa.m)) {
        octic_family* f = nullptr;
        push(octic_family_composite(to_long(d, "d"), to_long(m, "m"), &f), f);
      }
    }
  } else {
    const bool first = fa.family == "param1";
    for (const auto& d : values(fa.d)) {
      for (const auto& t1 : values(fa.t1)) {
        for (const auto& t2 : values(fa.t2)) {
          octic_family* f = nullptr;
          octic_status st = first ? octic_family_param1(to_long(d, "d"), t1.c_str(), t2.c_str(), &f)
                                  : octic_family_param2(to_long(d, "d"), t1.c_str(), t2.c_str(), &f);
          push(st, f);
        }
      }
    }
  }
  return out;
}

Json family_config(const FamilyArgs& fa) {
  Json j;
  j["family"] = fa.family;
  if (fa.family == "d4") {
    j["T"] = fa.T;
  } else if (fa.family == "composite") {
    j["d"] = fa.d;
    j["m"] = fa.m;
    j["candidates"] = fa.candidates_path;
  } else {
    j["d"] = fa.d;
    j["t1"] = fa.t1;
    j["t2"] = fa.t2;
  }
  return j;
}

void merge_family(Json& config, const FamilyArgs& fa) {
  const Json fam = family_config(fa);
  for (const auto& [k, v] : fam.items()) config[k] = v;
}

CandidatesPtr load_candidates(const std::string& path) {
  if (path.empty()) return nullptr;
  octic_candidates* c = nullptr;
  check(octic_candidates_ingest(path.c_str(), &c, nullptr), "ingest");
  return CandidatesPtr(c);
}

int emit(const ReportPtr& rep, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(octic_report_json(rep.get()), stdout);
  } else {
    check(octic_report_write(rep.get(), out_path.c_str()), "write");
  }
  const int code = octic_report_exit_code(rep.get());
  const Json j = Json::parse(octic_report_json(rep.get()));
  std::cerr << "octic-monogen: " << j.value("command", "") << " status " << j.value("status", "") << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power integral bases in octic fields with imaginary quadratic subfields"};
  app.set_version_flag("--version", std::string(octic_version()));
  app.set_config("--config", "", "TOML file mirroring the command-line flags");
  app.require_subcommand(1);

  std::string out_path;
  unsigned jobs = 0;
  bool all_units = false;
  bool no_timings = false;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the JSON report here (default: stdout)");
    cmd->add_option("--jobs", jobs, "worker threads (0 = all cores, 1 = sequential)")->capture_default_str();
    cmd->add_flag("--no-timings", no_timings, "omit wall times so reports are byte-stable");
  };

  FamilyArgs fa;
  long bound = 30;
  int candidate_index = -1;
  std::string eps;
  unsigned samples = 200;
  std::uint64_t seed = 1;
  std::string ingest_path;

  CLI::App* verify = app.add_subcommand("verify", "check the no-power-integral-basis theorems on a parameter grid");
  add_family_options(verify, fa, true);
  add_common(verify);
  verify->add_flag("--all-units", all_units, "use every unit of M, not only units modulo sign for D4");

  CLI::App* pipeline = app.add_subcommand("pipeline", "D4: relative generators by search, then the absolute check");
  pipeline->add_option("--T", fa.T, "D4 parameter T")->capture_default_str();
  pipeline->add_option("--bound", bound, "coordinate bound for the Thue search")->capture_default_str();
  add_common(pipeline);

  CLI::App* thue = app.add_subcommand("thue", "bounded search for P^4 - 2iT^2 P^2 Q^2 + Q^4 = unit");
  thue->add_option("--T", fa.T, "D4 parameter T")->capture_default_str();
  thue->add_option("--bound", bound, "coordinate bound")->capture_default_str();
  add_common(thue);

  CLI::App* jp = app.add_subcommand("jpoly", "dump J(a2) for candidates of one family instance");
  add_family_options(jp, fa, false);
  jp->add_option("--candidate", candidate_index, "candidate index (default: all)");
  jp->add_option("--eps", eps, "unit, e.g. 0+1*w (default: per family)");
  add_common(jp);
  jp->add_flag("--all-units", all_units, "use every unit of M");

  CLI::App* oracle = app.add_subcommand("oracle", "random-element identity checks for one family instance");
  add_family_options(oracle, fa, false);
  oracle->add_option("--samples", samples, "random elements")->capture_default_str();
  oracle->add_option("--seed", seed, "random seed")->capture_default_str();
  add_common(oracle);

  CLI::App* ingest = app.add_subcommand("ingest", "validate a composite candidate file");
  ingest->add_option("path", ingest_path, "JSON-lines candidate file")->required();
  add_common(ingest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  octic_options opts;
  octic_options_init(&opts);
  opts.jobs = jobs;
  opts.units = all_units ? OCTIC_UNITS_ALL : OCTIC_UNITS_DEFAULT;
  opts.timings = no_timings ? 0 : 1;
  Json config;
  config["jobs"] = jobs;
  config["timings"] = !no_timings;

  try {
    octic_report* raw = nullptr;
    if (verify->parsed()) {
      config["units"] = all_units ? "all" : "default";
      merge_family(config, fa);
      if (fa.family == "composite" && fa.candidates_path.empty()) {
        throw UsageError("composite verification needs --candidates");
      }
      std::vector<FamilyPtr> fams = build_families(fa, true);
      std::vector<const octic_family*> ptrs;
      for (const auto& f : fams) ptrs.push_back(f.get());
      CandidatesPtr cands = load_candidates(fa.candidates_path);
      check(octic_verify(ptrs.data(), ptrs.size(), cands.get(), config.dump().c_str(), &opts, &raw), "verify");
    } else if (pipeline->parsed()) {
      config["T"] = fa.T;
      config["bound"] = bound;
      fa.family = "d4";
      std::vector<FamilyPtr> fams = build_families(fa, false);
      check(octic_pipeline(fams.front().get(), bound, config.dump().c_str(), &opts, &raw), "pipeline");
    } else if (thue->parsed()) {
      config["T"] = fa.T;
      config["bound"] = bound;
      check(octic_thue(fa.T.c_str(), bound, config.dump().c_str(), &opts, &raw), "thue");
    } else if (jp->parsed()) {
      merge_family(config, fa);
      config["candidate"] = candidate_index;
      config["eps"] = eps;
      std::vector<FamilyPtr> fams = build_families(fa, false);
      CandidatesPtr cands = load_candidates(fa.candidates_path);
      if (fa.family == "composite" && !cands) throw UsageError("composite jpoly needs --candidates");
      check(octic_jpoly(fams.front().get(), candidate_index, eps.empty() ? nullptr : eps.c_str(), cands.get(),
                        config.dump().c_str(), &opts, &raw),
            "jpoly");
    } else if (oracle->parsed()) {
      merge_family(config, fa);
      config["samples"] = samples;
      config["seed"] = std::to_string(seed);
      std::vector<FamilyPtr> fams = build_families(fa, false);
      check(octic_oracle(fams.front().get(), samples, seed, config.dump().c_str(), &opts, &raw), "oracle");
    } else if (ingest->parsed()) {
      config["path"] = ingest_path;
      check(octic_ingest(ingest_path.c_str(), config.dump().c_str(), &raw), "ingest");
    }
    ReportPtr rep(raw);
    return emit(rep, out_path);
  } catch (const UsageError& e) {
    std::cerr << "octic-monogen: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    // Computational failure: still leave a report behind.
    Json err;
    err["schema"] = "octic-monogen/1";
    err["version"] = octic_version();
    err["command"] = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
    err["config"] = config;
    err["status"] = "ERROR";
    err["error"] = e.what();
    const std::string text = err.dump(2) + "\n";
    if (out_path.empty()) {
      std::fputs(text.c_str(), stdout);
    } else if (FILE* f = std::fopen(out_path.c_str(), "wb")) {
      std::fputs(text.c_str(), f);
      std::fclose(f);
    }
    std::cerr << "octic-monogen: " << e.what() << "\n";
    return 1;
  }
}
