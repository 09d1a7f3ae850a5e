#include "kmhecke/kmhecke.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "error.hpp"
#include "report.hpp"

struct kmh_job {
  kmh::JobConfig cfg;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_code;

void clear() {
  last_error.clear();
  last_code.clear();
}

kmh_status fail(kmh_status s, const char* code, const std::string& what) {
  last_code = code;
  last_error = what;
  return s;
}

kmh_status status_of(kmh::ErrorCode c) {
  switch (c) {
    case kmh::ErrorCode::KacMoodyViolation:
    case kmh::ErrorCode::DecompositionFailure:
    case kmh::ErrorCode::Overflow:
    case kmh::ErrorCode::Internal:
      return KMH_INTERNAL;
    default:
      return KMH_USAGE;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename F>
kmh_status guarded(F&& f) {
  clear();
  try {
    return f();
  } catch (const kmh::Error& e) {
    return fail(status_of(e.code()), kmh::error_code_name(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KMH_INTERNAL, "Internal", "out of memory");
  } catch (const std::exception& e) {
    return fail(KMH_INTERNAL, "Internal", e.what());
  }
}

}  // namespace

extern "C" {

const char* kmh_version(void) { return kmh::library_version(); }

kmh_job* kmh_job_new(void) { return new (std::nothrow) kmh_job(); }

kmh_status kmh_job_from_text(const char* text, kmh_job** out) {
  return guarded([&] {
    if (!text || !out) return fail(KMH_USAGE, "ConfigError", "null argument");
    *out = new kmh_job{kmh::JobConfig::parse(text)};
    return KMH_OK;
  });
}

kmh_status kmh_job_from_file(const char* path, kmh_job** out) {
  return guarded([&] {
    if (!path || !out) return fail(KMH_USAGE, "ConfigError", "null argument");
    *out = new kmh_job{kmh::JobConfig::load(path)};
    return KMH_OK;
  });
}

void kmh_job_free(kmh_job* job) { delete job; }

kmh_status kmh_job_set_bound(kmh_job* job, const char* name, long long value) {
  return guarded([&] {
    if (!job || !name) return fail(KMH_USAGE, "ConfigError", "null argument");
    job->cfg.set_bound(name, value);
    return KMH_OK;
  });
}

kmh_status kmh_job_set_seed(kmh_job* job, unsigned long long seed) {
  if (!job) return fail(KMH_USAGE, "ConfigError", "null argument");
  clear();
  job->cfg.seed = seed;
  return KMH_OK;
}

kmh_status kmh_job_set_expect(kmh_job* job, const char* expect) {
  return guarded([&] {
    if (!job) return fail(KMH_USAGE, "ConfigError", "null argument");
    if (expect)
      job->cfg.set_expect(expect);
    else
      job->cfg.expect.reset();
    return KMH_OK;
  });
}

kmh_status kmh_job_serialize(const kmh_job* job, char** out) {
  return guarded([&] {
    if (!job || !out) return fail(KMH_USAGE, "ConfigError", "null argument");
    *out = dup(job->cfg.serialize());
    return KMH_OK;
  });
}

kmh_status kmh_run(const kmh_job* job, const char* subcommand, const char* format, char** out) {
  return guarded([&] {
    if (!job || !subcommand || !out) return fail(KMH_USAGE, "ConfigError", "null argument");
    *out = nullptr;
    auto r = kmh::run_command(subcommand, job->cfg);
    *out = dup(kmh::render(r, format ? format : "text"));
    if (r.outcome == 1) return fail(KMH_NEGATIVE, "Negative", r.summary);
    if (r.outcome == 3) return fail(KMH_INTERNAL, "Internal", r.summary);
    return KMH_OK;
  });
}

const char* kmh_last_error(void) { return last_error.c_str(); }
const char* kmh_last_error_code(void) { return last_code.c_str(); }

void kmh_string_free(char* s) { std::free(s); }

}
