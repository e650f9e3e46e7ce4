#include "commands.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "constaspec/codes.hpp"
#include "constaspec/consta.hpp"
#include "constaspec/error.hpp"
#include "constaspec/grid.hpp"
#include "constaspec/report.hpp"
#include "constaspec/tables.hpp"

namespace constaspec::cli {
namespace {

struct InstanceArgs {
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> base;
  bool hermitian = false;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> order;
  std::optional<std::uint64_t> lambda;
};

void add_instance_options(CLI::App* sub, InstanceArgs& args) {
  auto* q = sub->add_option("--q", args.q, "Field order q (euclidean)");
  auto* h = sub->add_flag("--hermitian", args.hermitian, "Hermitian mode over GF(q0^2)");
  auto* b = sub->add_option("--base", args.base, "Base q0 for hermitian mode");
  sub->add_option("--n", args.n, "Length n, coprime to q")->required();
  auto* o = sub->add_option("--order", args.order, "Order r of the canonical lambda");
  auto* l = sub->add_option("--lambda", args.lambda, "Explicit lambda as a canonical encoding");
  q->excludes(h)->excludes(b);
  b->needs(h);
  o->excludes(l);
}

ConstaParams params_of(const InstanceArgs& args) {
  if (args.order.has_value() == args.lambda.has_value()) {
    throw Error(Errc::invalid_argument, "give exactly one of --order and --lambda");
  }
  const LambdaSpec spec = args.order
                              ? LambdaSpec{LambdaOrder{*args.order}}
                              : LambdaSpec{LambdaValue{static_cast<Field::Elem>(*args.lambda)}};
  if (args.lambda && *args.lambda > UINT32_MAX) {
    throw Error(Errc::invalid_argument, "--lambda is not a field element");
  }
  if (args.hermitian) {
    if (!args.base) throw Error(Errc::invalid_argument, "--hermitian needs --base");
    return hermitian_params(*args.base, args.n, spec);
  }
  if (!args.q) throw Error(Errc::invalid_argument, "give --q, or --hermitian with --base");
  return euclidean_params(*args.q, args.n, spec);
}

OracleBudget budget_of(const std::optional<std::uint64_t>& flag) {
  OracleBudget budget = OracleBudget::from_env();
  if (flag) budget.max_degree = *flag;
  return budget;
}

std::string set_string(const std::vector<std::uint64_t>& xs, const char* sep = ",") {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

struct Labels {
  const char* total;
  const char* symmetric;
  const char* set;
  const char* flag;
};

Labels labels(Mode mode) {
  return mode == Mode::euclidean ? Labels{"N1", "N2", "S(n,r)", "SR"}
                                 : Labels{"M1", "M2", "T(n,r)", "SCR"};
}

std::string field_line(const ConstaParams& p) {
  std::ostringstream s;
  if (p.mode == Mode::euclidean) {
    s << "euclidean, " << p.field->name() << ", q = " << p.q();
  } else {
    s << "hermitian, " << p.field->name() << ", q0 = " << p.base;
  }
  s << ", n = " << p.n << ", r = " << p.r << ", lambda = " << p.lambda.value()
    << ", n1 = " << p.n1 << ", n2 = " << p.n2;
  return s.str();
}

void render_analysis(const AnalysisReport& rep, const std::string& format, std::ostream& out) {
  const auto& p = rep.params;
  if (format == "json") {
    out << to_json(rep).dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    out << "mode,q,base_q,n,r,lambda,n1,n2,d,order,degree,count,symmetric\n";
    for (const auto& f : rep.profiles) {
      out << mode_name(p.mode) << "," << p.q() << "," << (p.mode == Mode::hermitian ? std::to_string(p.base) : "")
          << "," << p.n << "," << p.r << "," << p.lambda.value() << "," << p.n1 << "," << p.n2
          << "," << f.divisor_d << "," << f.order_e << "," << f.degree << "," << f.count << ","
          << (f.symmetric ? 1 : 0) << "\n";
    }
    return;
  }
  const Labels L = labels(p.mode);
  out << "x^" << p.n << " - lambda: " << field_line(p) << "\n\n";
  out << "| d | order | degree | count | " << L.flag << " | w |\n";
  out << "|--:|--:|--:|--:|:-:|--:|\n";
  for (const auto& f : rep.profiles) {
    out << "| " << f.divisor_d << " | " << f.order_e << " | " << f.degree << " | " << f.count
        << " | " << (f.symmetric ? "yes" : "no") << " | "
        << (f.witness_w ? std::to_string(*f.witness_w) : "-") << " |\n";
  }
  out << "\n" << L.total << " = " << rep.total_factors << "\n"
      << L.symmetric << " = " << rep.symmetric_factors << "\n"
      << L.set << " = " << set_string(rep.special_set) << "\n";
}

int cmd_analyze(const InstanceArgs& args, const std::string& format, std::ostream& out) {
  render_analysis(count_factors(params_of(args)), format, out);
  return ok;
}

int cmd_factor(const InstanceArgs& args, std::uint64_t seed, const OracleBudget& budget,
               const std::string& format, std::ostream& out) {
  const ConstaParams params = params_of(args);
  const Mode kind = params.mode;
  const auto split = factor_split(params, kind, seed, budget);
  const auto fm = factorize(params.binomial(), seed);
  const char* flag = labels(kind).flag;

  auto class_of = [&](const Polynomial& f) -> std::string {
    for (const auto& e : split.symmetric) {
      if (e == f) return flag;
    }
    for (const auto& [a, b] : split.pairs) {
      if (a == f || b == f) return "pair";
    }
    return "unpaired";
  };

  if (format == "json") {
    Json arr = Json::array();
    for (const auto& fp : fm.factors) {
      arr.push_back({{"coeffs", coeffs_json(fp.factor)},
                     {"degree", fp.factor.degree()},
                     {"class", class_of(fp.factor)}});
    }
    out << arr.dump(2) << "\n";
    return ok;
  }
  for (const auto& fp : fm.factors) {
    out << fp.factor.to_string() << " [" << class_of(fp.factor) << "]\n";
  }
  return ok;
}

void render_table(const TablePreset& preset, const std::string& format, std::ostream& out) {
  const auto rows = reproduce_table(preset);
  const Labels L = labels(preset.mode);
  if (format == "csv") {
    out << "order_r,order_set,total,symmetric,paper_total,paper_symmetric,erratum_flag\n";
    for (const auto& row : rows) {
      out << row.printed.r << "," << set_string(row.order_set, ";") << ","
          << row.report.total_factors << "," << row.report.symmetric_factors << ","
          << row.printed.total << "," << row.printed.symmetric << "," << (row.erratum ? 1 : 0)
          << "\n";
    }
    return;
  }
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& row : rows) {
      arr.push_back({{"order_r", row.printed.r},
                     {"order_set", row.order_set},
                     {"total", row.report.total_factors},
                     {"symmetric", row.report.symmetric_factors},
                     {"paper_order_set", row.printed.order_set},
                     {"paper_total", row.printed.total},
                     {"paper_symmetric", row.printed.symmetric},
                     {"erratum_flag", row.erratum},
                     {"erratum_note", row.erratum_note}});
    }
    out << arr.dump(2) << "\n";
    return;
  }
  out << preset.name << ": "
      << (preset.mode == Mode::euclidean ? "euclidean, q = " : "hermitian, q0 = ") << preset.q
      << ", n = " << preset.n << "\n\n";
  out << "| r | {r d n1 : d | n2} | " << L.total << " | " << L.symmetric << " | note |\n";
  out << "|--:|:--|--:|--:|:--|\n";
  for (const auto& row : rows) {
    out << "| " << row.printed.r << " | " << set_string(row.order_set) << " | "
        << row.report.total_factors << " | " << row.report.symmetric_factors << " | "
        << row.erratum_note << " |\n";
  }
}

struct VerifyArgs {
  std::optional<std::uint64_t> q_max;
  std::optional<std::uint64_t> base_max;
  std::uint64_t n_max = 0;
  bool hermitian = false;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  bool list = false;
  std::optional<std::uint64_t> budget;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  std::vector<GridInstance> instances;
  if (args.hermitian) {
    if (!args.base_max) throw Error(Errc::invalid_argument, "--hermitian needs --base-max");
    instances = hermitian_grid(*args.base_max, args.n_max);
  } else {
    if (!args.q_max) throw Error(Errc::invalid_argument, "give --q-max, or --hermitian with --base-max");
    instances = euclidean_grid(*args.q_max, args.n_max);
  }
  const OracleBudget budget = budget_of(args.budget);
  if (args.n_max > budget.max_degree) {
    throw Error(Errc::budget_exceeded, "--n-max " + std::to_string(args.n_max) +
                                           " exceeds the factoring budget " +
                                           std::to_string(budget.max_degree));
  }

  const auto outcomes = run_grid(instances, args.seed, args.jobs, budget);
  const Labels L = labels(args.hermitian ? Mode::hermitian : Mode::euclidean);
  std::size_t bad = 0;
  std::size_t failed = 0;
  for (const auto& o : outcomes) {
    if (o.error) {
      ++failed;
      out << "ERROR " << describe(o.instance) << ": " << *o.error << "\n";
      continue;
    }
    if (!o.agree) ++bad;
    if (args.list || !o.agree) {
      out << (o.agree ? "ok " : "MISMATCH ") << describe(o.instance) << ": " << L.total << "="
          << o.formula_total << " " << L.symmetric << "=" << o.formula_symmetric << " (oracle "
          << o.oracle_total << ", " << o.oracle_symmetric << ")\n";
    }
  }
  if (bad == 0 && failed == 0) {
    out << "all " << outcomes.size() << " instances agree\n";
    return ok;
  }
  out << bad << " of " << outcomes.size() << " instances disagree, " << failed << " failed\n";
  return bad > 0 ? ExitCode::mismatch : ExitCode::budget;
}

struct CodesArgs {
  std::string list;
  std::uint64_t cap = EnumerationCap{}.max_items;
  std::uint64_t seed = 0;
  std::string format = "text";
  bool count_only = false;
  std::optional<std::uint64_t> budget;
};

std::string power_string(const BigInt& count, std::uint64_t exponent) {
  return count.str() + " = 2^" + std::to_string(exponent);
}

void render_generators(const ConstaParams& params, Mode kind,
                       const std::vector<Polynomial>& gens, const std::string& format,
                       std::ostream& out) {
  for (const auto& g : gens) {
    const auto code = build_code(params, g);
    if (format == "json") {
      out << to_json(code, kind).dump() << "\n";
    } else {
      out << g.to_string() << "  (dimension " << code.dimension << ")\n";
    }
  }
}

int cmd_codes(const InstanceArgs& inst, const CodesArgs& args, std::ostream& out) {
  const ConstaParams params = params_of(inst);
  const Mode kind = params.mode;
  const Labels L = labels(kind);
  const EnumerationCap cap{args.cap};
  const OracleBudget budget = budget_of(args.budget);
  const bool text = args.format != "json";

  if (args.list == "lcd") {
    const auto c = count_lcd(params, kind);
    if (text) {
      out << "LCD codes: " << power_string(c.count, c.exponent) << "\n";
      if (c.every_code_lcd) {
        out << "every code is LCD: lambda is not its own mate, exponent " << L.total << "\n";
      } else {
        const std::uint64_t num = c.printed_numerator;
        out << "exponent (" << L.total << "+" << L.symmetric << ")/2 = " << c.exponent
            << "; printed (n+" << L.symmetric << ")/2 = "
            << (num % 2 == 0 ? std::to_string(num / 2) : std::to_string(num) + "/2") << "\n";
      }
    }
    if (!args.count_only) {
      render_generators(params, kind, enumerate_lcd(params, kind, args.seed, cap, budget),
                        args.format, out);
    }
    return ok;
  }

  const auto sd = self_dual_existence(params, kind);
  if (!sd.consistent) {
    out << "MISMATCH: closed-form criterion says " << (*sd.theorem_predicate ? "yes" : "no")
        << ", factor structure says " << (sd.structural ? "yes" : "no") << "\n";
    return mismatch;
  }
  if (!sd.exists) {
    if (text) out << sd.reason << "\n";
    return ok;
  }
  if (text) {
    const auto v = static_cast<std::uint64_t>(boost::multiprecision::msb(sd.count));
    out << "self-dual codes: " << power_string(sd.count, v) << " (" << sd.reason << ")\n";
  }
  if (!args.count_only) {
    render_generators(params, kind, enumerate_self_dual(params, kind, args.seed, cap, budget),
                      args.format, out);
  }
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factor structure of x^n - lambda and LCD / self-dual constacyclic codes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "constaspec 1.0.0");

  InstanceArgs inst;
  std::string format = "md";
  auto* analyze = app.add_subcommand("analyze", "Closed-form factor counts and profiles");
  add_instance_options(analyze, inst);
  analyze->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"md", "json", "csv"}));

  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget_flag;
  std::string factor_format = "text";
  auto* factor = app.add_subcommand("factor", "Explicit factorization with symmetry classes");
  add_instance_options(factor, inst);
  factor->add_option("--seed", seed, "Seed for equal-degree splitting");
  factor->add_option("--budget", budget_flag, "Largest n that may be factorized");
  factor->add_option("--format", factor_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string preset;
  std::string table_format = "md";
  auto* table = app.add_subcommand("table", "Recompute a printed table");
  table->add_option("--preset", preset, "table1 .. table4")->required();
  table->add_option("--format", table_format, "Output format")
      ->check(CLI::IsMember({"md", "json", "csv"}));

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Cross-check closed forms against factorization");
  auto* qmax = verify->add_option("--q-max", verify_args.q_max, "Largest field order");
  auto* vh = verify->add_flag("--hermitian", verify_args.hermitian, "Hermitian grid");
  auto* bmax = verify->add_option("--base-max", verify_args.base_max, "Largest base q0");
  verify->add_option("--n-max", verify_args.n_max, "Largest length")->required();
  verify->add_option("--jobs", verify_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_args.seed, "Factorization seed");
  verify->add_option("--budget", verify_args.budget, "Largest n that may be factorized");
  verify->add_flag("--list", verify_args.list, "Print every instance");
  qmax->excludes(vh)->excludes(bmax);
  bmax->needs(vh);

  CodesArgs codes_args;
  auto* codes = app.add_subcommand("codes", "Count and list LCD or self-dual codes");
  add_instance_options(codes, inst);
  codes->add_option("--list", codes_args.list, "lcd or self-dual")
      ->required()
      ->check(CLI::IsMember({"lcd", "self-dual"}));
  codes->add_option("--cap", codes_args.cap, "Largest number of generators to enumerate");
  codes->add_option("--seed", codes_args.seed, "Factorization seed");
  codes->add_option("--budget", codes_args.budget, "Largest n that may be factorized");
  codes->add_option("--format", codes_args.format, "text, or json for JSON lines")
      ->check(CLI::IsMember({"text", "json"}));
  codes->add_flag("--count-only", codes_args.count_only, "Skip the generator list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : validation;
  }

  try {
    if (*analyze) return cmd_analyze(inst, format, out);
    if (*factor) return cmd_factor(inst, seed, budget_of(budget_flag), factor_format, out);
    if (*table) {
      render_table(table_preset(preset), table_format, out);
      return ok;
    }
    if (*verify) return cmd_verify(verify_args, out);
    if (*codes) return cmd_codes(inst, codes_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::budget_exceeded || e.code() == Errc::enumeration_cap ? ExitCode::budget
                                                                                  : validation;
  }
  return ok;
}

}  // namespace constaspec::cli
