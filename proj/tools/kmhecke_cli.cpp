#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "kmhecke/kmhecke.h"

namespace {

using Job = std::unique_ptr<kmh_job, decltype(&kmh_job_free)>;

int report_failure(kmh_status s) {
  std::fprintf(stderr, "error: %s: %s\n", kmh_last_error_code(), kmh_last_error());
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bernstein-Lusztig-Hecke algebras of Kac-Moody data and their principal series"};
  std::string command, config, format = "text", expect;
  unsigned long long seed = 0;
  long long bound_coroot = 0, bound_length = 0;

  app.add_option("subcommand", command,
                 "validate | roots | analyze-tau | kato | weight-space | gen-weight-space | ord | "
                 "verify-identities | example-lemma37")
      ->required();
  app.add_option("--config", config, "job file")->envname("KMH_CONFIG");
  app.add_option("--format", format, "text or json")->envname("KMH_FORMAT")->check(CLI::IsMember({"text", "json"}));
  auto* seed_opt = app.add_option("--seed", seed)->envname("KMH_SEED");
  auto* coroot_opt = app.add_option("--bound-coroot", bound_coroot)->envname("KMH_BOUND_COROOT");
  auto* length_opt = app.add_option("--bound-length", bound_length)->envname("KMH_BOUND_LENGTH");
  app.add_option("--expect", expect)->envname("KMH_EXPECT")->check(CLI::IsMember({"irreducible", "reducible"}));
  app.set_version_flag("--version", kmh_version());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : KMH_USAGE;
  }

  kmh_job* raw = nullptr;
  if (config.empty()) {
    raw = kmh_job_new();
  } else if (kmh_status s = kmh_job_from_file(config.c_str(), &raw); s != KMH_OK) {
    return report_failure(s);
  }
  Job job(raw, kmh_job_free);

  kmh_status s = KMH_OK;
  if (*seed_opt) s = kmh_job_set_seed(job.get(), seed);
  if (s == KMH_OK && *coroot_opt) s = kmh_job_set_bound(job.get(), "coroot_height", bound_coroot);
  if (s == KMH_OK && *length_opt) s = kmh_job_set_bound(job.get(), "weyl_length", bound_length);
  if (s == KMH_OK && !expect.empty()) s = kmh_job_set_expect(job.get(), expect.c_str());
  if (s != KMH_OK) return report_failure(s);

  char* out = nullptr;
  s = kmh_run(job.get(), command.c_str(), format.c_str(), &out);
  if (out) {
    std::fputs(out, stdout);
    kmh_string_free(out);
  }
  if (s != KMH_OK) return report_failure(s);
  return 0;
}
