#include "wordmetrics/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "wordmetrics/acceptance.hpp"
#include "wordmetrics/action.hpp"
#include "wordmetrics/invariants.hpp"
#include "wordmetrics/metric.hpp"
#include "wordmetrics/product.hpp"
#include "wordmetrics/sampling.hpp"
#include "wordmetrics/spec_io.hpp"
#include "wordmetrics/star_set.hpp"
#include "wordmetrics/subset_algebra.hpp"
#include "wordmetrics/transport.hpp"

namespace wordmetrics {

namespace {

using ojson = nlohmann::ordered_json;

// Refusal by a size guard; the message names the flag that raises it.
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string group, normal, h, k, l, s, t, spec, quandle;
  std::uint64_t m = 4;
  std::optional<std::uint64_t> cap;
  std::uint64_t seed = 0;
  std::size_t max_order = 16;
  std::string out;
  std::string format;
};

ojson cell(ExtNat v) {
  return v.is_finite() ? ojson(v.value()) : ojson("inf");
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<ojson>> rows;
};

std::string csv_field(const ojson& v) {
  std::string text = v.is_string() ? v.get<std::string>() : v.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) {
    return text;
  }
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  return quoted + "\"";
}

void write_table(const Table& t, const std::string& format, std::ostream& os) {
  if (format == "json") {
    ojson arr = ojson::array();
    for (const auto& row : t.rows) {
      ojson obj = ojson::object();
      for (std::size_t i = 0; i < t.header.size(); ++i) {
        obj[t.header[i]] = row[i];
      }
      arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    os << (i ? "," : "") << csv_field(t.header[i]);
  }
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << csv_field(row[i]);
    }
    os << "\n";
  }
}

void write_report(const Report& r, const std::string& format, std::ostream& os) {
  if (format == "json") {
    os << r.to_json().dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    Table t{{"check", "checked", "violations", "skipped", "pass"}, {}};
    for (const auto& it : r.items()) {
      t.rows.push_back({it.name, it.checked, it.violations, it.skipped, it.ok() ? "yes" : "no"});
    }
    write_table(t, "csv", os);
    return;
  }
  if (!r.title().empty()) {
    os << r.title() << "\n";
  }
  for (const auto& it : r.items()) {
    os << (it.ok() ? "  ok   " : "  FAIL ") << it.name << "  (checked " << it.checked;
    if (it.skipped > 0) {
      os << ", skipped " << it.skipped;
    }
    os << ")\n";
    for (const auto& w : it.witnesses) {
      os << "         counterexample: " << w << "\n";
    }
  }
  os << (r.ok() ? "all checks passed" : "violations found") << "\n";
}

GroupPtr need_group(const Flags& f) {
  if (f.group.empty()) {
    throw UsageError("--group is required");
  }
  return parse_group_argument(f.group);
}

Subset need_subset(const FiniteGroup& g, const std::string& literal, const char* flag) {
  if (literal.empty()) {
    throw UsageError(std::string(flag) + " is required");
  }
  try {
    return g.parse(literal);
  } catch (const std::exception& e) {
    throw SpecError(flag, e.what());
  }
}

std::uint64_t cap_or(const Flags& f, std::uint64_t fallback) { return f.cap.value_or(fallback); }

void require_order_cap(const FiniteGroup& g, std::uint64_t cap, const std::string& what) {
  if (g.order() > cap) {
    throw CapError(what + ": group order " + std::to_string(g.order()) + " exceeds --cap " +
                   std::to_string(cap));
  }
}

std::vector<Subset> subsets_up_to(const FiniteGroup& g, std::size_t limit, std::size_t samples,
                                  Sampler& sampler) {
  std::vector<Subset> out;
  if (g.order() <= limit) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << g.order()); ++m) {
      out.push_back(g.subset_from_mask(m));
    }
    return out;
  }
  for (std::size_t i = 0; i < samples; ++i) {
    out.push_back(sampler.subset_of(g.full_set()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subcommands.  Each writes to `os` and returns an exit code.

int cmd_norm(const Flags& f, std::ostream& os) {
  GroupPtr g = need_group(f);
  const Subset s = need_subset(*g, f.s, "--s");
  const auto len = word_lengths(*g, s);
  Table t{{"x", "nu_S"}, {}};
  for (Elem x = 0; x < g->order(); ++x) {
    t.rows.push_back({x, cell(len[x])});
  }
  write_table(t, f.format.empty() ? "csv" : f.format, os);
  return kExitOk;
}

int cmd_metric(const Flags& f, std::ostream& os) {
  GroupPtr g = need_group(f);
  const Subset s = need_subset(*g, f.s, "--s");
  const MetricTable d = word_metric_table(*g, s);
  Table t{{"x", "y", "d_S"}, {}};
  for (Elem x = 0; x < g->order(); ++x) {
    for (Elem y = 0; y < g->order(); ++y) {
      t.rows.push_back({x, y, cell(d.at(x, y))});
    }
  }
  write_table(t, f.format.empty() ? "csv" : f.format, os);
  return kExitOk;
}

int cmd_nuh_table(const Flags& f, std::ostream& os) {
  GroupPtr g = need_group(f);
  require_order_cap(*g, cap_or(f, 8), "nuH-table (2^|G| rows)");
  const std::uint64_t count = std::uint64_t{1} << g->order();
  std::vector<Subset> sets;
  for (std::uint64_t m = 0; m < count; ++m) {
    sets.push_back(g->subset_from_mask(m));
  }
  Table t;
  t.header.push_back("S");
  for (const auto& x : sets) {
    t.header.push_back(x.to_string());
  }
  for (const auto& s : sets) {
    const auto len = word_lengths(*g, s);
    std::vector<ojson> row{s.to_string()};
    for (const auto& x : sets) {
      row.push_back(cell(nu_sup(len, x)));
    }
    t.rows.push_back(std::move(row));
  }
  write_table(t, f.format.empty() ? "csv" : f.format, os);
  return kExitOk;
}

int cmd_check_axioms(const Flags& f, std::ostream& os) {
  GroupPtr g = need_group(f);
  const Subset s = need_subset(*g, f.s, "--s");
  const MetricTable d = word_metric_table(*g, s);
  const AxiomReport ax = check_metric_axioms(d);
  const auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  const auto witness = [](const std::optional<std::array<std::size_t, 3>>& w) {
    if (!w) {
      return std::string();
    }
    return "(" + std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) + "," +
           std::to_string((*w)[2]) + ")";
  };
  Table t{{"property", "value", "witness"}, {}};
  t.rows.push_back({"reflexive", yn(ax.reflexive), witness(ax.reflexive_witness)});
  t.rows.push_back({"nondegenerate", yn(ax.nondegenerate), witness(ax.nondegenerate_witness)});
  t.rows.push_back({"symmetric", yn(ax.symmetric), witness(ax.symmetric_witness)});
  t.rows.push_back({"triangle", yn(ax.triangle), witness(ax.triangle_witness)});
  t.rows.push_back({"asymmetric metric", yn(ax.is_asymmetric_metric()), ""});
  t.rows.push_back({"metric", yn(ax.is_metric()), ""});
  t.rows.push_back({"classification", ax.classification(d.flavor), ""});
  t.rows.push_back({"generates", yn(power(*g, s, kInfinity) == g->full_set()), ""});
  if (f.format.empty() || f.format == "text") {
    for (const auto& row : t.rows) {
      os << row[0].get<std::string>() << ": " << row[1].get<std::string>();
      if (!row[2].get<std::string>().empty()) {
        os << " " << row[2].get<std::string>();
      }
      os << "\n";
    }
  } else {
    write_table(t, f.format, os);
  }
  return kExitOk;
}

int cmd_transport(const Flags& f, std::ostream& os) {
  GroupPtr g = need_group(f);
  require_order_cap(*g, cap_or(f, 24), "transport-verify");
  const Subset n = need_subset(*g, f.normal, "--normal");
  const Quotient q = quotient_by_normal(g, n);
  const GroupHom& hom = q.projection;
  Sampler sampler(f.seed);
  const auto sample_g = subsets_up_to(*g, 10, 256, sampler);
  const auto sample_h = subsets_up_to(*q.group, 10, 256, sampler);
  Report r("transport along " + g->name() + " -> " + g->name() + "/N, N = " + n.to_string());
  r.merge(transport_identities(hom, sample_g, sample_h), "identities");
  r.merge(verify_pushforward_lipschitz(hom, sample_g), "pushforward");
  r.merge(verify_pullback_isometry(hom, sample_h), "pullback");
  std::vector<Subset> family;
  if (g->order() <= 12) {
    family = starred_double_prime_family(*g);
  } else {
    family = sampler.starred_double_prime_pool(*g, 500);
  }
  r.merge(retraction_defect_check(hom, family), "retraction");
  if (n.count() <= 20) {
    r.merge(kernel_generating_check(hom, family), "kernel");
  }
  r.merge(chi_omega_roundtrip(hom, 12, 500, f.seed), "chi-omega");
  r.merge(theta_fact_check(hom, 500, f.seed), "theta");
  write_report(r, f.format, os);
  return r.ok() ? kExitOk : kExitViolations;
}

int cmd_sdprod(const Flags& f, std::ostream& os) {
  GroupPtr whole = need_group(f);
  SemidirectContext ctx;
  if (!f.h.empty() || !f.k.empty()) {
    ctx = make_semidirect_context(whole, need_subset(*whole, f.h, "--h"),
                                  need_subset(*whole, f.k, "--k"));
  } else {
    const auto j = load_json_argument(f.group);
    if (!j.is_object() || j.value("kind", "") != "semidirect") {
      throw UsageError("--h and --k are required unless --group is a semidirect spec");
    }
    GroupPtr h = group_from_json(j.at("h"), "$.h");
    GroupPtr k = group_from_json(j.at("k"), "$.k");
    std::vector<std::vector<Elem>> action;
    for (const auto& row : j.at("action")) {
      action.push_back(row.get<std::vector<Elem>>());
    }
    ctx = semidirect_context(h, k, action);
  }
  const FiniteGroup& g = *ctx.group;
  require_order_cap(g, cap_or(f, 16), "sdprod-verify");
  const Subset l = f.l.empty() ? ctx.k : need_subset(g, f.l, "--l");
  if (!l.is_subset_of(ctx.k)) {
    throw SpecError("--l", "L must lie in K = " + ctx.k.to_string());
  }
  const auto fs = starred_double_prime_family(g, ctx.h);
  const auto fu = starred_double_prime_family(g, ctx.k);
  const std::size_t samples = fs.size() * fu.size() <= 64 ? 0 : 500;
  Report r("semidirect formulas on " + g.name() + ", L = " + l.to_string());
  r.merge(psi_identities(ctx, fs, fu, {l}), "psi");
  r.merge(sdprod_metric_compare(ctx, l, fs, fu, samples, f.seed), "metrics");
  if (!noncommuting_witness(ctx)) {
    r.merge(direct_product_collapse(ctx, fs, fu, samples, f.seed), "direct");
    r.merge(direct_product_identities(ctx, fs, fu), "direct");
  }
  r.merge(image_characterization(ctx, l), "image");
  for (Condition p : all_conditions()) {
    r.merge(condition_preservation(ctx, p, l, fs, fu), "conditions");
  }
  write_report(r, f.format, os);
  return r.ok() ? kExitOk : kExitViolations;
}

int cmd_invariants(const Flags& f, std::ostream& os) {
  GroupPtr g = need_group(f);
  const std::uint64_t cap = cap_or(f, 4);
  const RankResult rank = rank_n(*g, cap);
  if (rank.exceeds_cap) {
    throw CapError("invariants: rank_n exceeds --cap " + std::to_string(cap));
  }
  const ExtremeResult d = diam_nfg(*g);
  const ExtremeResult big = delta(*g, g->full_set(), 20, 4096, f.seed);
  std::string witness = "[";
  for (std::size_t i = 0; i < rank.witness.size(); ++i) {
    witness += (i ? "," : "") + std::to_string(rank.witness[i]);
  }
  witness += "]";
  Table t{{"invariant", "value", "witness"}, {}};
  t.rows.push_back({"order", g->order(), ""});
  t.rows.push_back({"rank_n", cell(rank.value), witness});
  t.rows.push_back({"diam_nfg", cell(d.value), d.witness.to_string()});
  t.rows.push_back({big.exact ? "Delta" : "Delta (sampled lower bound)", cell(big.value),
                    big.witness.to_string()});
  t.rows.push_back({"nfg family size", big.candidates, ""});
  write_table(t, f.format.empty() ? "csv" : f.format, os);
  return kExitOk;
}

int cmd_action_metric(const Flags& f, std::ostream& os) {
  std::optional<GroupAction> action;
  std::optional<QuandleAction> qa;
  if (!f.quandle.empty()) {
    const StarSet x = parse_star_set_argument(f.quandle);
    const std::uint64_t cap = cap_or(f, 8);
    if (x.size() > cap) {
      throw CapError("action-metric: quandle carrier " + std::to_string(x.size()) +
                     " exceeds --cap " + std::to_string(cap));
    }
    qa = automorphism_action(x, cap);
    action = qa->action;
  } else if (!f.spec.empty()) {
    action = parse_action_argument(f.spec);
  } else {
    throw UsageError("action-metric needs --spec or --quandle");
  }
  const FiniteGroup& g = *action->group();
  Subset s = g.empty_set();
  if (qa && f.s.rfind("sigma:", 0) == 0) {
    for (Elem a : parse_subset(f.s.substr(6), 0, qa->sigma.size()).elements()) {
      s.insert(qa->sigma[a]);
    }
  } else {
    s = need_subset(g, f.s, "--s");
  }
  const MetricTable d = action_metric_table(*action, s);
  Table t{{"x", "y", "d_S"}, {}};
  for (Elem x = 0; x < action->carrier(); ++x) {
    for (Elem y = 0; y < action->carrier(); ++y) {
      t.rows.push_back({x, y, cell(d.at(x, y))});
    }
  }
  write_table(t, f.format.empty() ? "csv" : f.format, os);
  return kExitOk;
}

int cmd_star(const Flags& f, std::ostream& os) {
  if (f.spec.empty()) {
    throw UsageError("star needs --spec");
  }
  const StarSet x = parse_star_set_argument(f.spec);
  const std::uint64_t cap = cap_or(f, 10);
  if (x.size() > cap) {
    throw CapError("star: carrier " + std::to_string(x.size()) + " exceeds --cap " +
                   std::to_string(cap));
  }
  if (f.s.empty()) {
    throw UsageError("--s is required");
  }
  Subset s = x.empty_set();
  try {
    s = x.parse(f.s);
  } catch (const std::exception& e) {
    throw SpecError("--s", e.what());
  }
  Table t{{"kind", "key", "value"}, {}};
  const auto powers = star_powers(x, s, f.m);
  for (std::uint64_t n = 1; n <= f.m; ++n) {
    t.rows.push_back({"power", n, powers[n].to_string()});
  }
  const auto len = star_word_lengths(x, s);
  for (Elem y = 0; y < x.size(); ++y) {
    t.rows.push_back({"nu_S", y, cell(len[y])});
  }
  for (Elem a = 0; a < x.size(); ++a) {
    const auto d = star_distances_from(x, s, a, StarMetricVariant::all_parenthesizations);
    const auto dp = star_distances_from(x, s, a, StarMetricVariant::left_normed);
    for (Elem b = 0; b < x.size(); ++b) {
      const std::string key = std::to_string(a) + "->" + std::to_string(b);
      t.rows.push_back({"d_S", key, cell(d[b])});
      t.rows.push_back({"d'_S", key, cell(dp[b])});
    }
  }
  if (!f.t.empty()) {
    Subset tt = x.empty_set();
    try {
      tt = x.parse(f.t);
    } catch (const std::exception& e) {
      throw SpecError("--t", e.what());
    }
    t.rows.push_back({"nu_H", tt.to_string(), cell(star_nu_H(x, s, tt))});
  }
  write_table(t, f.format.empty() ? "csv" : f.format, os);
  return kExitOk;
}

int cmd_suite(const Flags& f, std::ostream& os, std::ostream& err) {
  AcceptanceOptions o;
  o.max_order = f.max_order;
  o.seed = f.seed;
  if (o.max_order > 16) {
    throw CapError("suite: --max-order " + std::to_string(o.max_order) +
                   " exceeds the catalog limit 16");
  }
  const bool json = f.format == "json";
  const auto results = run_acceptance(o, [&](const CriterionResult& r) {
    (json ? err : os) << criterion_line(r, false) << "\n";
    if (!json && !r.passed()) {
      for (const auto& it : r.report.items()) {
        if (!it.ok()) {
          os << "  FAIL " << it.name << " (" << it.violations << " of " << it.checked << ")\n";
          for (const auto& w : it.witnesses) {
            os << "       counterexample: " << w << "\n";
          }
        }
      }
    }
  });
  int failed = 0;
  for (const auto& r : results) {
    failed += r.passed() ? 0 : 1;
  }
  if (json) {
    ojson arr = ojson::array();
    for (const auto& r : results) {
      ojson j = r.report.to_json();
      j["criterion"] = r.number;
      j["title"] = r.title;
      arr.push_back(std::move(j));
    }
    ojson top;
    top["max_order"] = o.max_order;
    top["seed"] = o.seed;
    top["failed"] = failed;
    top["criteria"] = std::move(arr);
    os << top.dump(2) << "\n";
  } else {
    os << (failed == 0 ? "all " + std::to_string(results.size()) + " criteria passed"
                       : std::to_string(failed) + " criteria failed")
       << "\n";
  }
  return failed == 0 ? kExitOk : kExitViolations;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Word metrics on finite groups, group actions and star-sets", "wordmetrics"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");
  Flags f;

  const auto add_format = [&](CLI::App* c, const char* choices) {
    c->add_option("--format", f.format, std::string("Output format: ") + choices);
    c->add_option("--out", f.out, "Write the output to this file instead of stdout");
  };
  const auto add_group = [&](CLI::App* c) {
    c->add_option("--group", f.group, "Group spec: JSON, a JSON file, or a catalog name");
  };

  auto* norm = app.add_subcommand("norm", "Word length nu_S(x) for every element");
  add_group(norm);
  norm->add_option("--s", f.s, "Generating set, e.g. [1,5]");
  add_format(norm, "csv|json");

  auto* metric = app.add_subcommand("metric", "Word metric d_S(x,y) for every pair");
  add_group(metric);
  metric->add_option("--s", f.s, "Generating set");
  add_format(metric, "csv|json");

  auto* nuh = app.add_subcommand("nuH-table", "nu_H(S,T) for all pairs of subsets");
  add_group(nuh);
  nuh->add_option("--cap", f.cap, "Largest group order accepted (default 8)");
  add_format(nuh, "csv|json");

  auto* axioms = app.add_subcommand("check-axioms", "Metric axioms of d_S");
  add_group(axioms);
  axioms->add_option("--s", f.s, "Generating set");
  add_format(axioms, "text|csv|json");

  auto* transport = app.add_subcommand("transport-verify", "Transport facts along G -> G/N");
  add_group(transport);
  transport->add_option("--normal", f.normal, "Normal subgroup N, e.g. [0,3]");
  transport->add_option("--seed", f.seed, "Sampling seed (default 0)");
  transport->add_option("--cap", f.cap, "Largest group order accepted (default 24)");
  add_format(transport, "text|csv|json");

  auto* sdprod = app.add_subcommand("sdprod-verify", "Semidirect and direct product formulas");
  add_group(sdprod);
  sdprod->add_option("--h", f.h, "The complement H, a subgroup of G");
  sdprod->add_option("--k", f.k, "The normal subgroup K");
  sdprod->add_option("--l", f.l, "The set L inside K (default K)");
  sdprod->add_option("--seed", f.seed, "Sampling seed (default 0)");
  sdprod->add_option("--cap", f.cap, "Largest group order accepted (default 16)");
  add_format(sdprod, "text|csv|json");

  auto* inv = app.add_subcommand("invariants", "rank_n, diam_nfg and Delta");
  add_group(inv);
  inv->add_option("--cap", f.cap, "Largest rank_n searched (default 4)");
  inv->add_option("--seed", f.seed, "Sampling seed for large class lattices (default 0)");
  add_format(inv, "csv|json");

  auto* act = app.add_subcommand("action-metric", "d_S on the points of a group action");
  act->add_option("--spec", f.spec, "Action spec: JSON or a JSON file");
  act->add_option("--quandle", f.quandle, "Star-set spec of a quandle; acts by Inn(X)");
  act->add_option("--s", f.s, "Subset of the group, or sigma:[a,...] for a quandle");
  act->add_option("--cap", f.cap, "Largest quandle carrier accepted (default 8)");
  add_format(act, "csv|json");

  auto* star = app.add_subcommand("star", "Powers, word lengths and metrics on a star-set");
  star->add_option("--spec", f.spec, "Star-set spec: JSON or a JSON file");
  star->add_option("--s", f.s, "Subset S");
  star->add_option("--t", f.t, "Optional T for nu_H(S,T)");
  star->add_option("--m", f.m, "Highest power listed (default 4)");
  star->add_option("--cap", f.cap, "Largest carrier accepted (default 10)");
  add_format(star, "csv|json");

  auto* suite = app.add_subcommand("suite", "Run all acceptance criteria");
  suite->add_option("--max-order", f.max_order, "Catalog groups up to this order (default 16)");
  suite->add_option("--seed", f.seed, "Sampling seed (default 0)");
  add_format(suite, "text|json");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) {
    rev.pop_back();  // program name
  }
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (!f.format.empty() && f.format != "csv" && f.format != "json" && f.format != "text") {
    err << "error: --format must be csv, json or text\n";
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (*norm) {
      code = cmd_norm(f, buffer);
    } else if (*metric) {
      code = cmd_metric(f, buffer);
    } else if (*nuh) {
      code = cmd_nuh_table(f, buffer);
    } else if (*axioms) {
      code = cmd_check_axioms(f, buffer);
    } else if (*transport) {
      code = cmd_transport(f, buffer);
    } else if (*sdprod) {
      code = cmd_sdprod(f, buffer);
    } else if (*inv) {
      code = cmd_invariants(f, buffer);
    } else if (*act) {
      code = cmd_action_metric(f, buffer);
    } else if (*star) {
      code = cmd_star(f, buffer);
    } else if (*suite) {
      code = cmd_suite(f, f.out.empty() ? out : buffer, err);
      if (f.out.empty()) {
        return code;
      }
    }
  } catch (const SpecError& e) {
    err << "error: malformed spec at " << e.where() << ": "
        << std::string(e.what()).substr(e.where().size() + 2) << "\n";
    return kExitUsage;
  } catch (const CapError& e) {
    err << "error: refused: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (f.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(f.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << f.out << "\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace wordmetrics
