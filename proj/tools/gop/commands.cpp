#include "commands.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "gop/gop.hpp"
#include "parser.hpp"
#include "report.hpp"

namespace gop::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string format = "text";
  int digits = 15;
  std::optional<unsigned> factor_cap;

  Format output_format() const {
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    return Format::text;
  }

  FactorizationOptions factorization() const {
    FactorizationOptions opts;
    if (factor_cap) {
      opts.max_bits = *factor_cap;
    } else if (const char* env = std::getenv("GOP_FACTOR_CAP")) {
      char* end = nullptr;
      const unsigned long bits = std::strtoul(env, &end, 10);
      if (end == env || *end != '\0' || bits == 0) throw DomainError("GOP_FACTOR_CAP must be a positive bit count");
      opts.max_bits = static_cast<unsigned>(bits);
    }
    return opts;
  }

  std::string decimal(double v) const { return format_decimal(v, digits); }
};

Report base_report(const std::string& command) {
  Report r;
  r.doc["schema"] = "gop/1";
  r.doc["command"] = command;
  return r;
}

json matrix_json(const RfMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

json prime_log_json(const PrimeLogCombination& c) {
  json o = json::object();
  for (const auto& [p, e] : c.terms()) o[to_string(p)] = e;
  return o;
}

json profile_json(const OperatorProfile& p) {
  return {{"mu", p.mu}, {"delta", p.delta}, {"omega", p.omega}, {"ell", p.ell}};
}

json theta_json(const ThetaForm& t) {
  json q = json::array();
  for (const auto& p : t.q) q.push_back(p.to_string("X"));
  return {{"u", to_string(t.u)}, {"shift_base", t.shift_base}, {"q", q}, {"clearing", t.clearing.to_string()}};
}

Report operator_report(const std::string& command, const std::vector<std::pair<std::string, std::string>>& inputs,
                       const OreOperator& result) {
  Report r = base_report(command);
  for (const auto& [k, v] : inputs) r.doc[k] = v;
  r.doc["result"] = result.to_string();
  r.doc["order"] = result.order();
  return r;
}

Report size_report(const OreOperator& l, std::size_t s_max, const RunConfig& cfg) {
  const DiffSystem g = companion_matrix(l);
  const FactorizationOptions fo = cfg.factorization();
  const GalochkinReport gal = galochkin_sequence(g, s_max, fo);
  const PAdicProfile prof = padic_size_estimate(g, s_max, fo);

  Report r = base_report("size");
  r.doc["operator"] = l.to_string();
  r.doc["system"] = matrix_json(g.matrix());
  r.doc["T"] = gal.clearing.t.to_string();
  r.doc["T_has_unit_coefficient"] = gal.clearing.has_unit_coefficient;
  r.doc["s_max"] = s_max;
  json q_log = json::array();
  for (const auto& c : gal.q_log) q_log.push_back(prime_log_json(c));
  r.doc["q_log"] = q_log;
  r.doc["trajectory"] = gal.trajectory(cfg.digits);
  r.doc["h_trajectory"] = prof.trajectory_decimal(cfg.digits);

  std::vector<double> values;
  for (std::size_t s = 1; s <= s_max; ++s) values.push_back(gal.q_log[s - 1].value() / static_cast<double>(s));
  const TrajectorySummary sum = summarize(values);
  r.doc["summary"] = {{"last", cfg.decimal(sum.last)},
                      {"tail_max", cfg.decimal(sum.tail_max)},
                      {"tail_window", sum.tail_window}};

  json notes = json::array({"truncated trajectory; the limsup is not computed"});
  if (gal.clearing.has_unit_coefficient) {
    notes.push_back("T has a unit coefficient: limsup (1/s) log q_s equals the size");
  } else {
    const HeightPair hp = h_plus_minus(gal.clearing.t, fo);
    r.doc["h_plus"] = hp.plus.to_decimal(cfg.digits);
    r.doc["h_minus"] = hp.minus.to_decimal(cfg.digits);
    notes.push_back("T has no unit coefficient: sigma + h_minus <= limsup (1/s) log q_s <= sigma + h_plus");
  }
  r.doc["notes"] = notes;

  Table t{{"s", "log_q_s", "estimate"}, {}};
  for (std::size_t s = 1; s <= s_max; ++s)
    t.rows.push_back({std::to_string(s), gal.q_log[s - 1].to_decimal(cfg.digits), gal.estimate(s, cfg.digits)});
  r.table = std::move(t);
  return r;
}

Report pipeline_report(const OreOperator& l, const BigRational& beta, double sigma_bar, std::optional<long> z_exponent,
                       std::size_t s_max, double field_degree, const RunConfig& cfg) {
  bounds::LBetaOptions opts;
  opts.z_exponent = z_exponent;
  opts.s_max = s_max;
  opts.field_degree = field_degree;
  opts.factorization = cfg.factorization();
  const bounds::LBetaReport p = bounds::lbeta_pipeline(l, beta, sigma_bar, opts);

  Report r = base_report("pipeline");
  r.doc["operator"] = l.to_string();
  r.doc["beta"] = to_string(beta);
  r.doc["d_beta"] = p.d_beta;
  r.doc["sigma_bar"] = cfg.decimal(sigma_bar);
  r.doc["field_degree"] = cfg.decimal(field_degree);
  r.doc["profile"] = profile_json(p.profile);
  r.doc["theta"] = theta_json(p.theta);
  r.doc["l_beta"] = p.l_beta.to_string();
  r.doc["l_tilde"] = p.l_tilde.to_string();
  r.doc["z_exponent"] = p.z_exponent;
  r.doc["z_exponent_defaulted"] = p.z_exponent_defaulted;
  r.doc["bounds"] = {{"eq-4.2", cfg.decimal(p.bounds.via_chudnovsky)},
                     {"eq-4.4", cfg.decimal(p.bounds.via_alternative)}};
  r.doc["tilde_bounds"] = {{"eq-4.2", cfg.decimal(p.tilde_bounds.via_chudnovsky)},
                           {"eq-4.4", cfg.decimal(p.tilde_bounds.via_alternative)}};
  r.doc["chudnovsky"] = {{"branch_coefficient", cfg.decimal(p.chudnovsky.branch_coefficient)},
                         {"combined_coefficient", cfg.decimal(p.chudnovsky.combined_coefficient)},
                         {"branch_value", cfg.decimal(p.chudnovsky.branch_value)},
                         {"combined_value", cfg.decimal(p.chudnovsky.combined_value)}};
  r.doc["comp"] = cfg.decimal(p.comp);
  r.doc["regime"] = p.regime;
  r.doc["verdict"] = p.verdict;
  r.doc["notes"] = p.notes;

  Table t{{"s", "log_q_s", "estimate", "bound"}, {}};
  if (p.galochkin) {
    r.doc["empirical"] = {{"T", p.galochkin->clearing.t.to_string()},
                          {"s_max", p.galochkin->s_max},
                          {"trajectory", p.galochkin->trajectory(cfg.digits)},
                          {"violations", p.violations}};
    for (std::size_t s = 1; s <= p.galochkin->s_max; ++s)
      t.rows.push_back({std::to_string(s), p.galochkin->q_log[s - 1].to_decimal(cfg.digits),
                        p.galochkin->estimate(s, cfg.digits), cfg.decimal(p.best_bound())});
  }
  r.table = std::move(t);
  return r;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    for (char& c : item)
      if (c == ';') c = ',';
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("invalid number '" + item + "' in list", 0);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Galochkin sizes, differential operator algebra and size bounds", "gop"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--digits", cfg.digits, "Significant digits of decimal output")->check(CLI::Range(6, 30));
  app.add_option("--factor-cap", cfg.factor_cap, "Bit limit for composite cofactors (default 128, env GOP_FACTOR_CAP)")
      ->check(CLI::Range(16u, 4096u));

  std::function<Report()> action;
  std::string expr1, expr2, beta_text, formula_id, op_name, catalog_name;
  std::vector<std::string> catalog_params;
  std::size_t s_max = 60;
  std::size_t pipeline_s_max = 30;
  std::size_t power = 2;
  double sigma_bar = 0.0;
  double field_degree = 1.0;
  std::optional<long> z_exponent;

  auto* size = app.add_subcommand("size", "Galochkin denominators q_s of the companion system");
  size->add_option("operator", expr1)->required();
  size->add_option("--s-max", s_max)->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  size->callback([&] { action = [&] { return size_report(parse_operator(expr1), s_max, cfg); }; });

  auto* adj = app.add_subcommand("adjoint", "Formal adjoint");
  adj->add_option("operator", expr1)->required();
  adj->callback([&] {
    action = [&] { return operator_report("adjoint", {{"operator", expr1}}, adjoint(parse_operator(expr1))); };
  });

  struct Binary {
    const char* name;
    const char* help;
    OreOperator (*fn)(const OreOperator&, const OreOperator&);
  };
  static const Binary binaries[] = {
      {"mul", "Composition L1 L2", [](const OreOperator& a, const OreOperator& b) { return a * b; }},
      {"lclm", "Least common left multiple", [](const OreOperator& a, const OreOperator& b) { return lclm(a, b); }},
      {"symprod", "Symmetric product", [](const OreOperator& a, const OreOperator& b) { return symmetric_product(a, b); }},
  };
  for (const auto& b : binaries) {
    auto* sub = app.add_subcommand(b.name, b.help);
    sub->add_option("left", expr1)->required();
    sub->add_option("right", expr2)->required();
    sub->callback([&, fn = b.fn, name = std::string(b.name)] {
      action = [&, fn, name] {
        return operator_report(name, {{"left", expr1}, {"right", expr2}}, fn(parse_operator(expr1), parse_operator(expr2)));
      };
    });
  }

  auto* divide = app.add_subcommand("divide", "Right division L = Q D + R");
  divide->add_option("dividend", expr1)->required();
  divide->add_option("divisor", expr2)->required();
  divide->callback([&] {
    action = [&] {
      const DivisionResult d = right_divide(parse_operator(expr1), parse_operator(expr2));
      Report r = base_report("divide");
      r.doc["dividend"] = expr1;
      r.doc["divisor"] = expr2;
      r.doc["quotient"] = d.quotient.to_string();
      r.doc["remainder"] = d.remainder.to_string();
      return r;
    };
  });

  auto* theta = app.add_subcommand("theta", "Theta-form decomposition");
  theta->add_option("operator", expr1)->required();
  theta->callback([&] {
    action = [&] {
      const ThetaDecomposition t = to_theta_form(parse_operator(expr1));
      Report r = base_report("theta");
      r.doc["operator"] = expr1;
      r.doc["theta"] = theta_json(t.form);
      r.doc["profile"] = profile_json(t.profile);
      return r;
    };
  });

  auto* bshift = app.add_subcommand("beta-shift", "L_beta from the theta form");
  bshift->add_option("operator", expr1)->required();
  bshift->add_option("beta", beta_text)->required();
  bshift->callback([&] {
    action = [&] {
      const ThetaDecomposition t = to_theta_form(parse_operator(expr1));
      const BigRational beta = parse_rational(beta_text);
      Report r = base_report("beta-shift");
      r.doc["operator"] = expr1;
      r.doc["beta"] = to_string(beta);
      r.doc["profile"] = profile_json(t.profile);
      r.doc["result"] = beta_shift(t.form, beta).to_string();
      return r;
    };
  });

  auto* system = app.add_subcommand("system", "Module constructions on companion systems");
  system->add_option("operator", expr1)->required();
  system->add_option("--op", op_name)->required()->check(CLI::IsMember({"companion", "dual", "tensor", "sum", "sympow"}));
  system->add_option("--with", expr2, "Second operator for tensor and sum (default: the first)");
  system->add_option("--power", power, "Symmetric power N")->check(CLI::Range(std::size_t{1}, std::size_t{12}));
  system->callback([&] {
    action = [&] {
      const DiffSystem a = companion_matrix(parse_operator(expr1));
      const DiffSystem b = expr2.empty() ? a : companion_matrix(parse_operator(expr2));
      std::optional<DiffSystem> result;
      if (op_name == "companion") result = a;
      if (op_name == "dual") result = dual(a);
      if (op_name == "tensor") result = tensor(a, b);
      if (op_name == "sum") result = direct_sum(a, b);
      if (op_name == "sympow") result = sym_power(a, power);
      Report r = base_report("system");
      r.doc["operator"] = expr1;
      r.doc["op"] = op_name;
      if (op_name == "tensor" || op_name == "sum") r.doc["with"] = expr2.empty() ? expr1 : expr2;
      if (op_name == "sympow") r.doc["power"] = power;
      r.doc["dimension"] = result->dimension();
      r.doc["matrix"] = matrix_json(result->matrix());
      return r;
    };
  });

  auto* bound = app.add_subcommand("bound", "Evaluate a size bound by formula id");
  bound->add_option("formula_id", formula_id)->required();
  static const char* const numeric_inputs[] = {"d-beta", "mu",     "delta",  "sigma-bar", "field-degree", "sigma",
                                               "sigma1", "sigma2", "sigma3", "sigma3-dual", "mu3",        "ord1",
                                               "n",      "kappa",  "lambda", "h-minus",   "h-plus",       "d-alpha"};
  std::map<std::string, std::optional<double>> bound_values;
  for (const char* name : numeric_inputs)
    bound->add_option(std::string("--") + name, bound_values[name]);
  std::string list_text;
  bound->add_option("--values", list_text,
                    "Comma-separated list: sizes for closure-*, denominators for nilsson-alt, d,k,sigma triples "
                    "for main-theorem");
  bound->callback([&] {
    action = [&] {
      std::vector<std::pair<std::string, double>> inputs;
      for (const auto& [k, v] : bound_values)
        if (v) inputs.emplace_back(k, *v);
      const std::vector<double> list = parse_list(list_text);
      const bounds::BoundReport b = bounds::evaluate(formula_id, inputs, list);
      Report r = base_report("bound");
      r.doc["formula_id"] = b.formula_id;
      json in = json::object();
      for (const auto& [k, v] : b.inputs) in[k] = cfg.decimal(v);
      if (!list.empty()) {
        json l = json::array();
        for (double v : list) l.push_back(cfg.decimal(v));
        in["values"] = l;
      }
      r.doc["inputs"] = in;
      r.doc["value"] = cfg.decimal(b.value);
      json extra = json::object();
      for (const auto& [k, v] : b.extra) extra[k] = cfg.decimal(v);
      r.doc["extra"] = extra;
      r.doc["notes"] = b.notes;
      return r;
    };
  });

  auto* pipeline = app.add_subcommand("pipeline", "Bounds on sigma(L_beta) with an empirical Galochkin run");
  pipeline->add_option("operator", expr1)->required();
  pipeline->add_option("beta", beta_text)->required();
  pipeline->add_option("--sigma-bar", sigma_bar)->required()->check(CLI::NonNegativeNumber);
  pipeline->add_option("--z-exponent", z_exponent, "Exponent e in D^ell z^e L_beta (default mu - 1)");
  pipeline->add_option("--s-max", pipeline_s_max)->check(CLI::Range(std::size_t{0}, std::size_t{100000}));
  pipeline->add_option("--field-degree", field_degree)->check(CLI::Range(1.0, 1e6));
  pipeline->callback([&] {
    action = [&] {
      return pipeline_report(parse_operator(expr1), parse_rational(beta_text), sigma_bar, z_exponent, pipeline_s_max,
                             field_degree, cfg);
    };
  });

  auto* cat = app.add_subcommand("catalog", "Named operators as expressions");
  cat->add_option("name", catalog_name)->required();
  cat->add_option("params", catalog_params);
  cat->callback([&] {
    action = [&] {
      std::vector<BigRational> params;
      for (const auto& p : catalog_params) params.push_back(parse_rational(p));
      Report r = base_report("catalog");
      r.doc["name"] = catalog_name;
      r.doc["params"] = catalog_params;
      r.doc["expression"] = catalog(catalog_name, params).to_string();
      return r;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    const Report report = action();
    write_report(report, cfg.output_format(), out);
    return kSuccess;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const ResourceCapError& e) {
    err << "resource cap: " << e.what() << "\n";
    return kResourceCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace gop::cli
