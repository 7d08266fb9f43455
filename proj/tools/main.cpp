#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "starclean.h"

namespace {

enum Exit { kOk = 0, kUsage = 2, kInternal = 3 };

struct Args {
  std::uint64_t field = 0;
  std::string group = "C1";
  std::string involution = "classical";
  std::string format = "text";
  bool no_oracle = false;
  bool paranoid = false;
  std::uint64_t max_order = 100;
  std::uint64_t max_subsets = 0;
  bool distance = false;
  bool count_all = false;
  bool matrices = false;
};

int fail(sc_status st) {
  std::cerr << "starclean: " << sc_last_error() << "\n";
  return st == SC_ERR_INTERNAL ? kInternal : kUsage;
}

// Reads an unsigned bound from the environment; 0 when unset.
bool env_bound(const char* name, std::uint64_t& out) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return true;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || raw[0] == '-') return false;
  out = v;
  return true;
}

int emit(sc_status st, char** text) {
  if (st != SC_OK) return fail(st);
  std::fputs(*text, stdout);
  sc_string_free(*text);
  *text = nullptr;
  return kOk;
}

int run(const std::string& command, const Args& a) {
  sc_options opts;
  sc_options_default(&opts);
  std::uint64_t env_subsets = 0, env_order = 0;
  if (!env_bound("STARCLEAN_MAX_SUBSETS", env_subsets) || !env_bound("STARCLEAN_MAX_ORDER", env_order)) {
    std::cerr << "starclean: malformed STARCLEAN_MAX_SUBSETS or STARCLEAN_MAX_ORDER\n";
    return kUsage;
  }
  if (env_subsets) opts.max_subsets = env_subsets;
  if (a.max_subsets) opts.max_subsets = a.max_subsets;
  opts.max_order = a.max_order;
  if (env_order && opts.max_order > env_order) {
    std::cerr << "starclean: max-order " << opts.max_order << " exceeds STARCLEAN_MAX_ORDER = " << env_order << "\n";
    return kUsage;
  }
  opts.oracle = !a.no_oracle;
  opts.paranoid = a.paranoid;
  opts.distance = a.distance;
  opts.count_all = a.count_all;
  opts.matrices = a.matrices;
  const sc_format fmt = a.format == "json" ? SC_FORMAT_JSON : SC_FORMAT_TEXT;

  sc_field* field = nullptr;
  if (sc_status st = sc_field_create(a.field, &field); st != SC_OK) return fail(st);
  sc_group* group = nullptr;
  if (command != "scan") {
    if (sc_status st = sc_group_parse(a.group.c_str(), &group); st != SC_OK) {
      sc_field_destroy(field);
      return fail(st);
    }
  }

  int rc = kOk;
  char* text = nullptr;
  if (command == "analyze") {
    sc_report* rep = nullptr;
    sc_status st = sc_analyze(field, group, a.involution.c_str(), &opts, &rep);
    if (st == SC_OK) st = sc_report_render(rep, fmt, &text);
    rc = emit(st, &text);
    if (rc == kOk && sc_report_discrepancy(rep)) {
      std::cerr << "starclean: criterion and oracle disagree\n";
      rc = kInternal;
    }
    sc_report_destroy(rep);
  } else if (command == "idempotents") {
    rc = emit(sc_idempotents(field, group, &opts, fmt, &text), &text);
  } else if (command == "codes") {
    rc = emit(sc_codes(field, group, &opts, fmt, &text), &text);
  } else if (command == "involutions") {
    rc = emit(sc_involutions(field, group, fmt, &text), &text);
  } else if (command == "scan") {
    int discrepancy = 0;
    rc = emit(sc_scan(field, a.involution.c_str(), &opts, fmt, &text, &discrepancy), &text);
    if (rc == kOk && discrepancy) {
      std::cerr << "starclean: criterion and oracle disagree on at least one group\n";
      rc = kInternal;
    }
  }
  sc_group_destroy(group);
  sc_field_destroy(field);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide *-cleanness of finite abelian group algebras and classify their codes"};
  app.set_version_flag("--version", sc_version());
  app.require_subcommand(1);
  Args a;

  auto common = [&](CLI::App* sub, bool with_group) {
    sub->add_option("--field,-q", a.field, "Coefficient field size q (a prime power)")->required();
    if (with_group) sub->add_option("--group,-g", a.group, "Group spec such as C3xC9")->required();
    sub->add_option("--format", a.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* analyze = app.add_subcommand("analyze", "Decide *-cleanness for one involution");
  common(analyze, true);
  analyze->add_option("--involution,-i", a.involution, "classical | identity | sigma1:v=<int> | sigma2:v=<int>");
  analyze->add_flag("--no-oracle", a.no_oracle, "Skip the projection oracle");
  analyze->add_flag("--paranoid", a.paranoid, "Also check every idempotent, not just primitives");
  analyze->add_option("--max-subsets", a.max_subsets, "Enumeration bound for --paranoid");

  auto* idem = app.add_subcommand("idempotents", "List primitive idempotents");
  common(idem, true);
  idem->add_flag("--count-all", a.count_all, "Enumerate and verify every idempotent");
  idem->add_option("--max-subsets", a.max_subsets, "Enumeration bound for --count-all");

  auto* codes = app.add_subcommand("codes", "Classify minimal abelian codes as LCD or self-orthogonal");
  common(codes, true);
  codes->add_flag("--distance", a.distance, "Exhaustive minimum distance for small codes");
  codes->add_flag("--matrices", a.matrices, "Print generator matrices in text output");

  auto* invs = app.add_subcommand("involutions", "List the involutions available for a group");
  common(invs, true);

  auto* scan = app.add_subcommand("scan", "Analyze every abelian group up to an order");
  common(scan, false);
  scan->add_option("--involution,-i", a.involution, "Involution applied to every group");
  scan->add_option("--max-order", a.max_order, "Largest group order");
  scan->add_flag("--no-oracle", a.no_oracle, "Skip the projection oracle");
  scan->add_flag("--paranoid", a.paranoid, "Also check every idempotent");
  scan->add_option("--max-subsets", a.max_subsets, "Enumeration bound for --paranoid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  for (auto* sub : {analyze, idem, codes, invs, scan})
    if (sub->parsed()) return run(sub->get_name(), a);
  return kUsage;
}
