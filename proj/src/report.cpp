#include "starclean/report.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "starclean/codes.hpp"
#include "starclean/error.hpp"
#include "starclean/numtheory.hpp"

namespace starclean::report {

using json = nlohmann::ordered_json;

namespace {

class Table {
 public:
  explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_) {
      width.resize(std::max(width.size(), r.size()), 0);
      for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    std::string out;
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
      }
      out += line + "\n";
    }
    return out;
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string opt_int(const std::optional<std::uint64_t>& t) { return t ? std::to_string(*t) : "-"; }

json opt_json(const std::optional<std::uint64_t>& t) { return t ? json(*t) : json(nullptr); }

std::string exps_text(const std::vector<std::uint64_t>& e) {
  std::string out = "[";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? ", " : "") + std::to_string(e[i]);
  return out + "]";
}

std::string field_label(const gf::SmallField& f) { return "GF(" + std::to_string(f.size()) + ")"; }

json field_json(const gf::SmallField& f) {
  json j;
  j["q"] = f.size();
  j["p"] = f.characteristic();
  j["k"] = f.degree();
  j["modulus"] = f.describe();
  return j;
}

json report_json(const decision::StarCleanReport& r) {
  json j;
  j["schema"] = kSchema;
  j["group"] = r.group;
  j["field"] = r.field;
  j["involution"] = {{"kind", r.involution.kind_name()}, {"v", r.v}};
  j["m"] = r.m;
  j["verdict"] = r.verdict;
  j["witness_t"] = opt_json(r.witness_t);
  j["method"] = decision::method_name(r.method);
  j["oracle_checked"] = r.oracle_checked;
  j["oracle_verdict"] = r.oracle_verdict ? json(*r.oracle_verdict) : json(nullptr);
  j["counterexample_class"] = opt_json(r.counterexample_class);
  j["discrepancy"] = r.discrepancy;
  j["notes"] = r.notes;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::uint64_t pow2_or_zero(std::size_t s) { return s < 64 ? std::uint64_t{1} << s : 0; }

}  // namespace

void validate(const Options& opts) {
  if (opts.max_subsets == 0) throw InvalidInput("max-subsets must be positive");
  if (opts.max_subsets > idem::kDefaultMaxSubsets) throw LimitExceeded("max-subsets exceeds the cap 2^20");
  if (opts.max_order == 0) throw InvalidInput("max-order must be positive");
  if (opts.max_order > kMaxScanOrder)
    throw LimitExceeded("max-order exceeds the cap " + std::to_string(kMaxScanOrder));
}

std::string render(const decision::StarCleanReport& r, Format fmt) {
  if (fmt == Format::Json) return dump(report_json(r));
  Table t({"group", r.group});
  t.add({"field", r.field});
  t.add({"involution", r.involution.kind_name() + " (v = " + std::to_string(r.v) + ")"});
  t.add({"m", std::to_string(r.m)});
  t.add({"verdict", r.verdict ? "*-clean" : "not *-clean"});
  t.add({"witness t", opt_int(r.witness_t)});
  t.add({"method", decision::method_name(r.method)});
  if (r.oracle_checked) {
    t.add({"oracle", *r.oracle_verdict ? "every primitive idempotent is a projection"
                                       : "some primitive idempotent is not a projection"});
    if (r.counterexample_class) t.add({"witness class", "character index " + std::to_string(*r.counterexample_class)});
  }
  t.add({"discrepancy", yes_no(r.discrepancy)});
  for (const auto& n : r.notes) t.add({"note", n});
  return t.str();
}

decision::StarCleanReport analyze(std::shared_ptr<const gf::SmallField> f, const group::AbelianGroup& g,
                                  const algebra::Involution& inv, const Options& opts) {
  validate(opts);
  decision::AnalyzeOptions a;
  a.oracle = opts.oracle;
  a.paranoid = opts.paranoid;
  a.max_subsets = opts.max_subsets;
  return decision::analyze(std::move(f), g, inv, a);
}

std::string idempotents(std::shared_ptr<const gf::SmallField> f, const group::AbelianGroup& g, const Options& opts,
                        Format fmt) {
  validate(opts);
  const algebra::Algebra alg(g, f);
  const auto sys = idem::primitive_idempotents(alg);
  const auto& h = sys.split.coprime_part;
  const std::size_t s = sys.primitives.size();
  std::optional<std::uint64_t> enumerated;
  if (opts.count_all) {
    std::uint64_t count = 0;
    const auto elems = sys.elements();
    idem::for_each_idempotent(
        alg, elems,
        [&](const algebra::AlgebraElem& e) {
          if (!alg.is_idempotent(e)) throw ConsistencyError("subset sum of primitives is not idempotent");
          ++count;
        },
        opts.max_subsets);
    enumerated = count;
  }

  if (fmt == Format::Json) {
    json j;
    j["schema"] = kSchema;
    j["command"] = "idempotents";
    j["group"] = g.name();
    j["field"] = field_json(*f);
    j["coprime_part"] = h.name();
    j["m"] = h.exponent();
    j["primitive_count"] = s;
    j["idempotent_count"] = s < 64 ? json(pow2_or_zero(s)) : json(nullptr);
    j["enumerated"] = opt_json(enumerated);
    json list = json::array();
    for (const auto& p : sys.primitives) {
      json item;
      item["class_rep"] = h.exponents(p.cls.representative);
      item["orbit_size"] = p.cls.orbit.size();
      item["order"] = p.cls.order;
      json coeffs = json::object();
      for (auto idx : alg.support(p.element)) coeffs[g.render_element(idx)] = f->render(p.element.coeffs[idx]);
      item["coefficients"] = coeffs;
      list.push_back(item);
    }
    j["primitives"] = list;
    return dump(j);
  }

  std::string out = f->describe() + ", group " + g.name() + " (coprime part " + h.name() + ", m = " +
                    std::to_string(h.exponent()) + ")\n";
  out += std::to_string(s) + " primitive idempotent" + (s == 1 ? "" : "s");
  if (s < 64) out += ", " + std::to_string(pow2_or_zero(s)) + " idempotents in total";
  if (enumerated) out += " (enumerated " + std::to_string(*enumerated) + ")";
  out += "\n";
  Table t({"class", "order", "size", "idempotent"});
  for (const auto& p : sys.primitives)
    t.add({exps_text(h.exponents(p.cls.representative)), std::to_string(p.cls.order),
           std::to_string(p.cls.orbit.size()), algebra::render(alg, p.element)});
  return out + t.str();
}

std::string codes(std::shared_ptr<const gf::SmallField> f, const group::AbelianGroup& g, const Options& opts,
                  Format fmt) {
  validate(opts);
  if (g.order() % f->characteristic() == 0)
    throw InvalidInput("codes need gcd(characteristic, |G|) = 1");
  const algebra::Algebra alg(g, f);
  const auto sys = idem::primitive_idempotents(alg);
  const auto rep = codes::lcd_equivalence_report(alg, sys);
  if (!rep.consistent()) throw ConsistencyError("LCD conditions disagree with the *-clean verdict");
  const auto& h = sys.split.coprime_part;

  std::vector<codes::AbelianCode> built;
  std::vector<std::optional<std::uint64_t>> dist;
  for (std::size_t i = 0; i < sys.primitives.size(); ++i) {
    built.push_back(codes::code_from_class(alg, sys, i));
    dist.push_back(opts.distance ? codes::min_distance(alg, built.back()) : std::nullopt);
  }
  auto kind_name = [](codes::CodeKind k) { return k == codes::CodeKind::LCD ? "LCD" : "self-orthogonal"; };

  if (fmt == Format::Json) {
    json j;
    j["schema"] = kSchema;
    j["command"] = "codes";
    j["group"] = g.name();
    j["field"] = field_json(*f);
    j["n"] = rep.n;
    json columns = json::array();
    for (group::ElemIndex e = 0; e < alg.dimension(); ++e) columns.push_back(g.render_element(e));
    j["columns"] = columns;
    json rows = json::array();
    for (std::size_t i = 0; i < sys.primitives.size(); ++i) {
      const auto& c = rep.classes[i];
      json row;
      row["class_rep"] = h.exponents(sys.primitives[i].cls.representative);
      row["order"] = c.order;
      row["dimension"] = c.dimension;
      row["kind"] = kind_name(c.kind);
      row["witness_t"] = opt_json(c.witness_t);
      row["hull_dimension"] = c.hull_dimension;
      if (opts.distance) row["min_distance"] = opt_json(dist[i]);
      json matrix = json::array();
      for (std::size_t r = 0; r < built[i].dimension(); ++r) {
        json line = json::array();
        for (std::size_t col = 0; col < built[i].length(); ++col) line.push_back(f->render(built[i].basis.at(r, col)));
        matrix.push_back(line);
      }
      row["generator_matrix"] = matrix;
      rows.push_back(row);
    }
    j["classes"] = rows;
    j["conditions"] = {{"all_lcd", rep.all_lcd},
                       {"none_self_orthogonal", rep.none_self_orthogonal},
                       {"lcd_of_order_n", rep.lcd_of_order_n},
                       {"order_n_not_self_orthogonal", rep.order_n_not_self_orthogonal}};
    j["star_clean"] = rep.star_clean;
    j["witness_t"] = opt_json(rep.witness_t);
    j["consistent"] = rep.consistent();
    j["degenerate"] = rep.degenerate;
    return dump(j);
  }

  std::string out = f->describe() + ", group " + g.name() + ", exponent n = " + std::to_string(rep.n) + "\n";
  std::vector<std::string> header{"class", "order", "dim", "kind", "t", "hull"};
  if (opts.distance) header.push_back("d");
  Table t(header);
  for (std::size_t i = 0; i < sys.primitives.size(); ++i) {
    const auto& c = rep.classes[i];
    std::vector<std::string> row{exps_text(h.exponents(sys.primitives[i].cls.representative)),
                                 std::to_string(c.order),
                                 std::to_string(c.dimension),
                                 kind_name(c.kind),
                                 opt_int(c.witness_t),
                                 std::to_string(c.hull_dimension)};
    if (opts.distance) row.push_back(opt_int(dist[i]));
    t.add(row);
  }
  out += t.str();
  if (opts.matrices) {
    for (std::size_t i = 0; i < built.size(); ++i) {
      out += "\nclass " + exps_text(h.exponents(sys.primitives[i].cls.representative)) + "\n";
      std::vector<std::string> cols;
      for (group::ElemIndex e = 0; e < alg.dimension(); ++e) cols.push_back(g.render_element(e));
      Table m(cols);
      for (std::size_t r = 0; r < built[i].dimension(); ++r) {
        std::vector<std::string> line;
        for (std::size_t col = 0; col < built[i].length(); ++col) line.push_back(f->render(built[i].basis.at(r, col)));
        m.add(line);
      }
      out += m.str();
    }
  }
  out += "\nall LCD: " + yes_no(rep.all_lcd) + ", none self-orthogonal: " + yes_no(rep.none_self_orthogonal) +
         ", LCD of order n: " + yes_no(rep.lcd_of_order_n) +
         ", order n not self-orthogonal: " + yes_no(rep.order_n_not_self_orthogonal) + "\n";
  out += "star-clean: " + yes_no(rep.star_clean) + "\n";
  if (rep.degenerate) out += "note: trivial group, degenerate case n = 1\n";
  return out;
}

std::string involutions(std::shared_ptr<const gf::SmallField> f, const group::AbelianGroup& g, Format fmt) {
  std::vector<algebra::Involution> list{{algebra::InvolutionKind::Identity, 1}};
  for (const auto& inv : decision::valid_involutions(*f, g)) list.push_back(inv);

  std::optional<decision::Sigma1OnlyResult> only;
  std::string only_reason;
  if (g.order() % 2 == 1 && std::gcd(f->size(), g.order()) == 1)
    only = decision::only_sigma1_involutions(f->size(), g);
  else
    only_reason = g.order() % 2 == 0 ? "not decided for groups of even order" : "not decided when gcd(q, |G|) > 1";

  struct Row {
    algebra::Involution inv;
    algebra::ResolvedInvolution res;
    std::optional<decision::StarCleanReport> rep;
  };
  std::vector<Row> rows;
  for (const auto& inv : list) {
    Row r{inv, algebra::resolve(inv, g, *f, true), std::nullopt};
    if (inv.kind != algebra::InvolutionKind::Identity) r.rep = decision::criterion(*f, g, inv);
    rows.push_back(std::move(r));
  }

  if (fmt == Format::Json) {
    json j;
    j["schema"] = kSchema;
    j["command"] = "involutions";
    j["group"] = g.name();
    j["field"] = field_json(*f);
    j["n"] = g.exponent();
    json arr = json::array();
    for (const auto& r : rows) {
      json item;
      item["kind"] = r.inv.kind_name();
      item["v"] = r.res.v;
      item["spec"] = r.inv.kind == algebra::InvolutionKind::Identity || r.inv.kind == algebra::InvolutionKind::Classical
                         ? r.inv.spec()
                         : r.inv.kind_name() + ":v=" + std::to_string(r.res.v);
      item["identity_map"] = r.res.is_identity_map;
      item["verdict"] = r.rep ? json(r.rep->verdict) : json(nullptr);
      item["witness_t"] = r.rep ? opt_json(r.rep->witness_t) : json(nullptr);
      arr.push_back(item);
    }
    j["involutions"] = arr;
    if (only)
      j["only_sigma1"] = {{"value", only->value}, {"reason", only->reason}};
    else
      j["only_sigma1"] = {{"value", nullptr}, {"reason", only_reason}};
    return dump(j);
  }

  std::string out = f->describe() + ", group " + g.name() + ", exponent n = " + std::to_string(g.exponent()) + "\n";
  Table t({"involution", "v", "identity map", "*-clean", "t"});
  for (const auto& r : rows)
    t.add({r.inv.kind_name(), std::to_string(r.res.v), yes_no(r.res.is_identity_map),
           r.rep ? yes_no(r.rep->verdict) : "-", r.rep ? opt_int(r.rep->witness_t) : "-"});
  out += t.str();
  out += "only sigma1-type involutions: ";
  out += only ? yes_no(only->value) + " (" + only->reason + ")" : "- (" + only_reason + ")";
  return out + "\n";
}

Output scan(std::shared_ptr<const gf::SmallField> f, const algebra::Involution& inv, const Options& opts,
            Format fmt) {
  validate(opts);
  Output out;
  Table t({"order", "group", "m", "verdict", "t", "method", "discrepancy"});
  for (std::uint64_t n = 1; n <= opts.max_order; ++n) {
    if (n % f->characteristic() == 0) continue;
    for (const auto& g : group::groups_of_order(n)) {
      std::optional<decision::StarCleanReport> r;
      std::string skipped;
      try {
        algebra::resolve(inv, g, *f);
      } catch (const InvalidInput& e) {
        skipped = e.what();
      }
      if (skipped.empty()) r = analyze(f, g, inv, opts);
      if (r) out.discrepancy = out.discrepancy || r->discrepancy;
      if (fmt == Format::Json) {
        if (r) {
          out.text += report_json(*r).dump() + "\n";
        } else {
          json j;
          j["schema"] = kSchema;
          j["group"] = g.name();
          j["field"] = field_label(*f);
          j["skipped"] = skipped;
          out.text += j.dump() + "\n";
        }
      } else if (r) {
        t.add({std::to_string(n), r->group, std::to_string(r->m), yes_no(r->verdict), opt_int(r->witness_t),
               decision::method_name(r->method), yes_no(r->discrepancy)});
      } else {
        t.add({std::to_string(n), g.name(), "-", "skipped", "-", "-", "-"});
      }
    }
  }
  if (fmt == Format::Text) out.text = t.str();
  return out;
}

}  // namespace starclean::report
