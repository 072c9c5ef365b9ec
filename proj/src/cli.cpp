#include "ebring/cli.hpp"

#include <iomanip>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ebring/error.hpp"
#include "ebring/ideal.hpp"

namespace ebring::cli {

namespace {

using Json = nlohmann::ordered_json;

Json names_of(const FiniteRing &r, std::span<const Elem> elems) {
  Json arr = Json::array();
  for (Elem a : elems)
    arr.push_back(r.name(a));
  return arr;
}

Json ideals_json(const FiniteRing &r, const std::vector<MaximalIdeal> &ideals) {
  Json arr = Json::array();
  for (const auto &m : ideals)
    arr.push_back(Json{{"generators", names_of(r, m.ideal.generators())},
                       {"size", m.ideal.size()},
                       {"index", m.index}});
  return arr;
}

std::string group_label(const std::vector<std::size_t> &factors) {
  if (factors.empty())
    return "trivial";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i)
    out += (i ? " x Z" : "Z") + std::to_string(factors[i]);
  return out;
}

void print_listing(std::ostream &out, const FiniteRing &r, const std::string &title,
                   const ElementSet &s) {
  out << title << " (" << s.count() << "): " << r.names(members_of(s)) << "\n";
}

struct Common {
  std::string ring;
  bool json = false;
  bool exact = false;
  std::optional<std::uint64_t> budget;
  unsigned threads = 1;
};

ExactOptions exact_options(const Common &c) {
  ExactOptions o;
  o.limits.threads = std::max(1u, c.threads);
  o.limits.max_nodes = search::default_node_budget();
  o.davenport.limits = o.limits;
  if (c.budget) {
    // An explicit budget lifts the order cap to what the search can hold.
    o.limits.max_nodes = *c.budget;
    o.davenport.limits.max_nodes = *c.budget;
    o.cap = search::kMaxCarrier;
  }
  return o;
}

void print_report(std::ostream &out, const FiniteRing &r, const InvariantReport &rep) {
  out << "ring            " << rep.ring_label << "\n"
      << "order           " << rep.ring_order << "\n"
      << "units           " << rep.units_order << "  (" << group_label(rep.unit_group)
      << ")\n"
      << "D(U(R))         " << rep.davenport_of_units << "\n"
      << "maximal ideals  " << rep.maximal_ideals.size() << "\n";
  for (const auto &m : rep.maximal_ideals)
    out << "  " << std::left << std::setw(20) << m.ideal.describe() << " size "
        << std::setw(5) << m.ideal.size() << " index " << m.index << "\n";
  out << "lower bound     " << rep.lower_bound << "\n"
      << "exact I         ";
  if (rep.exact_I)
    out << *rep.exact_I << (rep.exact_is_formula_derived ? "  (formula, not searched)" : "");
  else
    out << "-";
  out << "\n"
      << "GHW upper       " << rep.ghw_upper << "\n"
      << "equality case   " << to_string(rep.equality_case) << "\n"
      << "witness T       "
      << (rep.witness_T ? r.names(rep.witness_T->terms()) : std::string("-")) << "\n";
  if (rep.search_failure)
    out << "search          " << *rep.search_failure << "\n";
}

int cmd_invariants(const Common &c, std::ostream &out) {
  const FiniteRing r = build_ring(parse_ring_spec(c.ring));
  ReportOptions opts;
  opts.exact = c.exact;
  opts.exact_options = exact_options(c);
  const auto rep = report(r, opts);
  if (c.json)
    out << serialize_report(r, rep) << "\n";
  else
    print_report(out, r, rep);
  return rep.search_failure ? kBudgetExceeded : kOk;
}

int cmd_construct(const Common &c, std::ostream &out) {
  const FiniteRing r = build_ring(parse_ring_spec(c.ring));
  const auto trace = construct_extremal(r, exact_options(c).davenport);
  if (c.json) {
    out << serialize_trace(r, trace) << "\n";
  } else {
    out << "ring      " << r.label() << "\n";
    for (std::size_t i = 0; i < trace.ideals.size(); ++i)
      out << "M" << i + 1 << " = " << trace.ideals[i].ideal.describe() << "  index "
          << trace.ideals[i].index << "  y = [" << r.names(trace.chosen[i])
          << "]  lifted = [" << r.names(trace.lifted[i]) << "]\n";
    out << "V         [" << r.names(trace.davenport_witness.terms()) << "]  (D(U(R)) = "
        << trace.davenport_of_units << ")\n"
        << "T         [" << r.names(trace.sequence.terms()) << "]  length "
        << trace.sequence.size() << "\n";
    for (const auto &cert : trace.certificates)
      out << "depth     M" << cert.ideal + 1 << " j=" << cert.depth << " product "
          << r.name(cert.product) << (cert.holds() ? "  ok" : "  FAILED") << "\n";
    out << "verdict   "
        << (trace.idempotent_product_free ? "idempotent-product free" : "NOT free") << "\n";
  }
  return trace.idempotent_product_free ? kOk : kInvariantViolation;
}

int cmd_davenport(const std::string &spec, bool json, const Common &c, std::ostream &out) {
  const auto orders = parse_group_spec(spec);
  const auto g = synthetic_group(orders);
  DavenportOptions opts = exact_options(c).davenport;
  const auto d = davenport(g, opts);
  if (json) {
    out << serialize_davenport(g, d) << "\n";
  } else {
    out << "group              " << group_label(g.invariant_factors()) << "  (order "
        << g.order() << ")\n"
        << "D(G)               " << d.value << "\n"
        << "zero-sum free      [" << g.names(d.witness.terms()) << "]\n";
  }
  return kOk;
}

int cmd_verify(const Common &c, std::ostream &out) {
  const FiniteRing r = build_ring(parse_ring_spec(c.ring));
  ReportOptions opts;
  opts.exact = true;
  opts.exact_options = exact_options(c);
  const auto rep = report(r, opts);
  if (rep.search_failure) {
    out << r.label() << ": " << *rep.search_failure << "\n";
    return kBudgetExceeded;
  }
  bool ok = true;
  auto check = [&](bool cond, const std::string &what) {
    out << (cond ? "pass  " : "FAIL  ") << what << "\n";
    ok = ok && cond;
  };
  const std::size_t exact = *rep.exact_I;
  check(exact >= rep.lower_bound, "I = " + std::to_string(exact) + " >= lower bound " +
                                      std::to_string(rep.lower_bound));
  check(exact <= rep.ghw_upper,
        "I <= |R \\ E| + 1 = " + std::to_string(rep.ghw_upper));
  if (rep.equality_case != EqualityCase::Unknown)
    check(exact == rep.lower_bound,
          "equality in the " + to_string(rep.equality_case) + " case");
  else
    out << "info  neither local nor all indices one; I - bound = "
        << exact - rep.lower_bound << "\n";
  Ideal prod = unit_ideal(r);
  for (const auto &m : rep.maximal_ideals)
    prod = ideal_product(prod, ideal_power(m.ideal, m.index));
  check(prod.is_zero(), "product of M_i^k_i is the zero ideal");
  check(rep.witness_T && is_idempotent_product_free(r, *rep.witness_T) &&
            rep.witness_T->size() + 1 == exact,
        "search witness is idempotent-product free of length I - 1");
  return ok ? kOk : kInvariantViolation;
}

int cmd_crosscheck_int(std::uint64_t n, bool json, std::ostream &out) {
  const auto rec = dedekind_crosscheck_int(n);
  if (json)
    out << serialize_coincidence(rec) << "\n";
  else {
    for (const auto &f : rec.factors)
      out << "p = " << f.factor << "^" << f.multiplicity << "  image (" << f.image
          << ") index " << f.index << "\n";
    out << "Omega - omega = " << rec.big_omega - rec.small_omega
        << ", sum (Ind(M) - 1) = " << rec.index_excess << "  coincide\n";
  }
  return kOk;
}

int cmd_crosscheck_poly(std::uint64_t q, const std::string &f_text, bool json,
                        std::ostream &out) {
  const auto pp = prime_power(q);
  if (!pp)
    throw InvalidSpec("GF order " + std::to_string(q) + " is not a prime power");
  const auto coeffs = parse_polynomial(f_text, pp->first);
  const poly::Poly f(coeffs.begin(), coeffs.end());
  const auto rec = dedekind_crosscheck_poly(q, f);
  if (json)
    out << serialize_coincidence(rec) << "\n";
  else {
    out << "ring " << rec.ring_label << "\n";
    for (const auto &fc : rec.factors)
      out << "P = (" << fc.factor << ")^" << fc.multiplicity << "  image (" << fc.image
          << ") index " << fc.index << "\n";
    out << "Omega - omega = " << rec.big_omega - rec.small_omega
        << ", sum (Ind(M) - 1) = " << rec.index_excess << "  coincide\n";
  }
  return kOk;
}

int cmd_inspect(const Common &c, const std::string &what, std::ostream &out) {
  const FiniteRing r = build_ring(parse_ring_spec(c.ring));
  if (what == "units")
    print_listing(out, r, "units", units(r));
  else if (what == "idempotents")
    print_listing(out, r, "idempotents", idempotents(r));
  else if (what == "nilradical")
    print_listing(out, r, "nilradical", nilradical(r).members());
  else
    for (const auto &m : maximal_ideals_with_index(r))
      out << m.ideal.describe() << "  size " << m.ideal.size() << "  index " << m.index
          << "  members " << r.names(members_of(m.ideal.members())) << "\n";
  return kOk;
}

} // namespace

std::string serialize_report(const FiniteRing &r, const InvariantReport &rep) {
  Json j;
  j["ring"] = rep.ring_label;
  j["order"] = rep.ring_order;
  j["units_order"] = rep.units_order;
  j["unit_group"] = rep.unit_group;
  j["davenport"] = rep.davenport_of_units;
  j["maximal_ideals"] = ideals_json(r, rep.maximal_ideals);
  j["lower_bound"] = rep.lower_bound;
  j["exact_I"] = rep.exact_I ? Json(*rep.exact_I) : Json(nullptr);
  j["exact_is_formula_derived"] = rep.exact_is_formula_derived;
  j["ghw_upper"] = rep.ghw_upper;
  j["equality_case"] = to_string(rep.equality_case);
  j["witness_T"] = rep.witness_T ? names_of(r, rep.witness_T->terms()) : Json(nullptr);
  return j.dump(2);
}

std::string serialize_trace(const FiniteRing &r, const ConstructionTrace &t) {
  Json j;
  j["ring"] = r.label();
  j["maximal_ideals"] = ideals_json(r, t.ideals);
  Json chosen = Json::array(), lifted = Json::array();
  for (std::size_t i = 0; i < t.ideals.size(); ++i) {
    chosen.push_back(names_of(r, t.chosen[i]));
    lifted.push_back(names_of(r, t.lifted[i]));
  }
  j["chosen"] = chosen;
  j["lifted"] = lifted;
  j["davenport"] = t.davenport_of_units;
  j["V"] = names_of(r, t.davenport_witness.terms());
  j["T"] = names_of(r, t.sequence.terms());
  Json certs = Json::array();
  for (const auto &c : t.certificates)
    certs.push_back(Json{{"ideal", c.ideal},
                         {"depth", c.depth},
                         {"product", r.name(c.product)},
                         {"holds", c.holds()}});
  j["depth_certificates"] = certs;
  j["idempotent_product_free"] = t.idempotent_product_free;
  return j.dump(2);
}

std::string serialize_davenport(const AbelianGroupView &g, const DavenportResult &d) {
  Json j;
  j["order"] = g.order();
  j["invariant_factors"] = g.invariant_factors();
  j["davenport"] = d.value;
  Json w = Json::array();
  for (Elem a : d.witness.terms())
    w.push_back(g.name(a));
  j["witness"] = w;
  j["formula_derived"] = d.formula_derived;
  return j.dump(2);
}

std::string serialize_coincidence(const CoincidenceRecord &rec) {
  Json j;
  j["ring"] = rec.ring_label;
  Json fs = Json::array();
  for (const auto &f : rec.factors)
    fs.push_back(Json{{"factor", f.factor},
                      {"multiplicity", f.multiplicity},
                      {"image", f.image},
                      {"index", f.index},
                      {"maximal", f.maximal}});
  j["factors"] = fs;
  j["Omega"] = rec.big_omega;
  j["omega"] = rec.small_omega;
  j["index_excess"] = rec.index_excess;
  j["maximal_ideals"] = rec.maximal_ideal_count;
  return j.dump(2);
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Erdos-Burgess and Davenport constants of finite commutative rings",
               "ebring"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--threads", c.threads, "worker threads for exact searches")
      ->check(CLI::Range(1u, 256u));

  auto *inv = app.add_subcommand("invariants", "invariant report for a ring");
  inv->add_option("ring", c.ring, "ring spec, e.g. \"Z/4 x GF(3)\"")->required();
  inv->add_flag("--exact", c.exact, "run the exact Erdos-Burgess search");
  inv->add_option("--budget", c.budget, "search node budget");
  inv->add_flag("--json", c.json, "machine-readable output");

  auto *con = app.add_subcommand("construct", "build and verify the extremal sequence");
  con->add_option("ring", c.ring)->required();
  con->add_flag("--json", c.json);

  std::string group;
  auto *dav = app.add_subcommand("davenport", "Davenport constant of Z_d1 x ... x Z_dk");
  dav->add_option("group", group, "group spec, e.g. \"Z2 x Z4\"")->required();
  dav->add_flag("--json", c.json);
  dav->add_option("--budget", c.budget);

  auto *ver = app.add_subcommand("verify", "exact search plus invariant checks");
  ver->add_option("ring", c.ring)->required();
  ver->add_option("--budget", c.budget);

  auto *cross = app.add_subcommand("crosscheck", "factorisation vs ideal-index coincidence");
  cross->require_subcommand(1);
  std::uint64_t n = 0, q = 0;
  std::string f_text;
  auto *cross_int = cross->add_subcommand("int", "Z/n");
  cross_int->add_option("n", n)->required();
  cross_int->add_flag("--json", c.json);
  auto *cross_poly = cross->add_subcommand("poly", "GF(q)[x]/(f)");
  cross_poly->add_option("q", q)->required();
  cross_poly->add_option("f", f_text)->required();
  cross_poly->add_flag("--json", c.json);

  std::string what;
  auto *ins = app.add_subcommand("inspect", "list structural elements of a ring");
  ins->add_option("ring", c.ring)->required();
  ins->add_option("what", what)
      ->required()
      ->check(CLI::IsMember({"units", "idempotents", "maxideals", "nilradical"}));

  std::vector<const char *> argv{"ebring"};
  for (const auto &a : args)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*inv)
      return cmd_invariants(c, out);
    if (*con)
      return cmd_construct(c, out);
    if (*dav)
      return cmd_davenport(group, c.json, c, out);
    if (*ver)
      return cmd_verify(c, out);
    if (*cross_int)
      return cmd_crosscheck_int(n, c.json, out);
    if (*cross_poly)
      return cmd_crosscheck_poly(q, f_text, c.json, out);
    return cmd_inspect(c, what, out);
  } catch (const SyntaxError &e) {
    err << "parse error " << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidSpec &e) {
    err << "invalid spec: " << e.what() << "\n";
    return kUsageError;
  } catch (const AxiomViolation &e) {
    err << "invalid ring: " << e.what() << "\n";
    return kUsageError;
  } catch (const PreconditionError &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ResourceExhausted &e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InternalConsistencyError &e) {
    err << "invariant violation: " << e.what() << "\n";
    return kInvariantViolation;
  }
}

} // namespace ebring::cli
