#include "starclean.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "starclean/error.hpp"
#include "starclean/report.hpp"

using namespace starclean;

struct sc_field {
  std::shared_ptr<const gf::SmallField> f;
};
struct sc_group {
  group::AbelianGroup g;
};
struct sc_report {
  decision::StarCleanReport r;
};

namespace {

thread_local std::string g_last_error;

template <class Fn>
sc_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return SC_OK;
  } catch (const InvalidInput& e) {
    g_last_error = e.what();
    return SC_ERR_INVALID;
  } catch (const LimitExceeded& e) {
    g_last_error = e.what();
    return SC_ERR_LIMIT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SC_ERR_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return SC_ERR_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) throw InvalidInput(std::string(what) + " is null");
}

report::Options to_options(const sc_options* o) {
  report::Options out;
  if (!o) return out;
  out.oracle = o->oracle != 0;
  out.paranoid = o->paranoid != 0;
  out.max_subsets = o->max_subsets;
  out.max_order = o->max_order;
  out.count_all = o->count_all != 0;
  out.distance = o->distance != 0;
  out.matrices = o->matrices != 0;
  return out;
}

report::Format to_format(sc_format fmt) {
  if (fmt == SC_FORMAT_TEXT) return report::Format::Text;
  if (fmt == SC_FORMAT_JSON) return report::Format::Json;
  throw InvalidInput("unknown output format");
}

}  // namespace

extern "C" {

const char* sc_version(void) { return "1.0.0"; }

const char* sc_last_error(void) { return g_last_error.c_str(); }

void sc_string_free(char* s) { std::free(s); }

void sc_options_default(sc_options* opts) {
  if (!opts) return;
  const report::Options d;
  opts->oracle = d.oracle;
  opts->paranoid = d.paranoid;
  opts->max_subsets = d.max_subsets;
  opts->max_order = d.max_order;
  opts->count_all = d.count_all;
  opts->distance = d.distance;
  opts->matrices = d.matrices;
}

sc_status sc_field_create(uint64_t q, sc_field** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = new sc_field{gf::SmallField::make(q)};
  });
}

void sc_field_destroy(sc_field* f) { delete f; }
uint64_t sc_field_size(const sc_field* f) { return f ? f->f->size() : 0; }
uint64_t sc_field_characteristic(const sc_field* f) { return f ? f->f->characteristic() : 0; }

sc_status sc_field_describe(const sc_field* f, char** out) {
  return guarded([&] {
    require(f, "field");
    require(out, "out");
    *out = copy_out(f->f->describe());
  });
}

sc_status sc_group_parse(const char* spec, sc_group** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = nullptr;
    *out = new sc_group{group::AbelianGroup::parse(spec)};
  });
}

void sc_group_destroy(sc_group* g) { delete g; }
uint64_t sc_group_order(const sc_group* g) { return g ? g->g.order() : 0; }
uint64_t sc_group_exponent(const sc_group* g) { return g ? g->g.exponent() : 0; }

sc_status sc_group_name(const sc_group* g, char** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    *out = copy_out(g->g.name());
  });
}

sc_status sc_analyze(const sc_field* f, const sc_group* g, const char* involution, const sc_options* opts,
                     sc_report** out) {
  return guarded([&] {
    require(f, "field");
    require(g, "group");
    require(involution, "involution");
    require(out, "out");
    *out = nullptr;
    auto r = report::analyze(f->f, g->g, algebra::Involution::parse(involution), to_options(opts));
    *out = new sc_report{std::move(r)};
  });
}

void sc_report_destroy(sc_report* r) { delete r; }
int sc_report_verdict(const sc_report* r) { return r && r->r.verdict; }
int sc_report_witness(const sc_report* r, uint64_t* t) {
  if (!r || !r->r.witness_t) return 0;
  if (t) *t = *r->r.witness_t;
  return 1;
}
uint64_t sc_report_m(const sc_report* r) { return r ? r->r.m : 0; }
int sc_report_oracle_checked(const sc_report* r) { return r && r->r.oracle_checked; }
int sc_report_discrepancy(const sc_report* r) { return r && r->r.discrepancy; }

sc_status sc_report_render(const sc_report* r, sc_format fmt, char** out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    *out = copy_out(report::render(r->r, to_format(fmt)));
  });
}

sc_status sc_idempotents(const sc_field* f, const sc_group* g, const sc_options* opts, sc_format fmt, char** out) {
  return guarded([&] {
    require(f, "field");
    require(g, "group");
    require(out, "out");
    *out = copy_out(report::idempotents(f->f, g->g, to_options(opts), to_format(fmt)));
  });
}

sc_status sc_codes(const sc_field* f, const sc_group* g, const sc_options* opts, sc_format fmt, char** out) {
  return guarded([&] {
    require(f, "field");
    require(g, "group");
    require(out, "out");
    *out = copy_out(report::codes(f->f, g->g, to_options(opts), to_format(fmt)));
  });
}

sc_status sc_involutions(const sc_field* f, const sc_group* g, sc_format fmt, char** out) {
  return guarded([&] {
    require(f, "field");
    require(g, "group");
    require(out, "out");
    *out = copy_out(report::involutions(f->f, g->g, to_format(fmt)));
  });
}

sc_status sc_scan(const sc_field* f, const char* involution, const sc_options* opts, sc_format fmt, char** out,
                  int* discrepancy) {
  return guarded([&] {
    require(f, "field");
    require(involution, "involution");
    require(out, "out");
    const auto res = report::scan(f->f, algebra::Involution::parse(involution), to_options(opts), to_format(fmt));
    *out = copy_out(res.text);
    if (discrepancy) *discrepancy = res.discrepancy;
  });
}

sc_status sc_only_sigma1(const sc_field* f, const sc_group* g, int* result, char** reason) {
  return guarded([&] {
    require(f, "field");
    require(g, "group");
    require(result, "result");
    const auto r = decision::only_sigma1_involutions(f->f->size(), g->g);
    *result = r.value;
    if (reason) *reason = copy_out(r.reason);
  });
}

}  // extern "C"
