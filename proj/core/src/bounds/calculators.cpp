#include "gop/bounds/calculators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gop/errors.hpp"

namespace gop::bounds {

namespace {

const double kLog2 = std::log(2.0);

void require_nonnegative(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError(std::string(name) + " must be a finite nonnegative number");
}

double max_of(std::span<const double> xs) {
  if (xs.empty()) throw DomainError("at least one size is required");
  for (double x : xs) require_nonnegative(x, "sigma");
  return *std::max_element(xs.begin(), xs.end());
}

}  // namespace

double main_theorem_bound(std::span<const MainTheoremTerm> terms) {
  if (terms.empty()) throw DomainError("main theorem bound needs at least one term");
  long kappa = 0;
  unsigned long d_max = 1;
  double sized = 0.0;
  for (const auto& t : terms) {
    if (t.k < 0) throw DomainError("log exponent k must be >= 0");
    if (t.d_alpha < 1) throw DomainError("d(alpha) must be >= 1");
    require_nonnegative(t.sigma, "sigma");
    kappa = std::max(kappa, t.k);
    d_max = std::max(d_max, t.d_alpha);
    sized = std::max(sized, (1.0 + std::log(static_cast<double>(t.k) + 2.0)) * t.sigma);
  }
  const double base = 1.0 + std::log(static_cast<double>(kappa) + 2.0);
  return std::max({base, 2.0 * base * std::log(static_cast<double>(d_max)), sized});
}

ClosureKind parse_closure_kind(const std::string& name) {
  if (name == "sum") return ClosureKind::sum;
  if (name == "product") return ClosureKind::product;
  if (name == "nfold") return ClosureKind::nfold;
  if (name == "tensor") return ClosureKind::tensor;
  if (name == "sympower") return ClosureKind::sympower;
  throw DomainError("unknown closure kind '" + name + "'");
}

std::string to_string(ClosureKind kind) {
  switch (kind) {
    case ClosureKind::sum: return "sum";
    case ClosureKind::product: return "product";
    case ClosureKind::nfold: return "nfold";
    case ClosureKind::tensor: return "tensor";
    case ClosureKind::sympower: return "sympower";
  }
  return "?";
}

double closure_bound(ClosureKind kind, std::span<const double> sigmas, unsigned n) {
  const double m = max_of(sigmas);
  switch (kind) {
    case ClosureKind::sum:
      return m;
    case ClosureKind::product:
      return (1.0 + kLog2) * m;
    case ClosureKind::nfold:
    case ClosureKind::tensor:
      if (n == 0) n = static_cast<unsigned>(sigmas.size());
      return (1.0 + std::log(static_cast<double>(n))) * m;
    case ClosureKind::sympower:
      if (n == 0) throw DomainError("symmetric power bound needs N >= 1");
      return (1.0 + std::log(static_cast<double>(n))) * m;
  }
  throw DomainError("unknown closure kind");
}

DualBounds dual_bounds(double sigma, long mu) {
  require_nonnegative(sigma, "sigma");
  if (mu < 1) throw DomainError("dimension mu must be >= 1");
  DualBounds out;
  if (mu >= 2) out.katz = sigma * (1.0 + std::log(static_cast<double>(mu - 1)));
  out.additive_upper = sigma + static_cast<double>(mu - 1);
  out.additive_lower = std::max(0.0, sigma - static_cast<double>(mu - 1));
  return out;
}

ExactSequenceBounds exact_sequence_bounds(double sigma2, double sigma3, long mu3, std::optional<double> sigma3_dual) {
  require_nonnegative(sigma2, "sigma2");
  require_nonnegative(sigma3, "sigma3");
  if (mu3 < 1) throw DomainError("mu3 must be >= 1");
  const double dual_estimate = sigma3 + static_cast<double>(mu3 - 1);
  double dual = dual_estimate;
  if (sigma3_dual) {
    require_nonnegative(*sigma3_dual, "sigma3_dual");
    dual = *sigma3_dual;
  }
  ExactSequenceBounds out;
  out.doubled = 1.0 + 2.0 * std::max(sigma2, dual_estimate);
  out.refined = 1.0 + 11.0 / 6.0 * std::max({sigma2, sigma3, dual});
  out.additive = static_cast<double>(mu3) + sigma2 + 2.0 * sigma3;
  return out;
}

ProductOperatorBounds product_operator_bounds(double sigma1, double sigma2, long ord1) {
  require_nonnegative(sigma1, "sigma1");
  require_nonnegative(sigma2, "sigma2");
  if (ord1 < 1) throw DomainError("ord1 must be >= 1");
  ProductOperatorBounds out;
  out.lower = std::max(sigma1, sigma2);
  out.upper_a = 1.0 + 11.0 / 6.0 * std::max(sigma1 + static_cast<double>(ord1 - 1), sigma2);
  out.upper_b = static_cast<double>(ord1) + 2.0 * sigma1 + sigma2;
  return out;
}

ChudnovskyBound chudnovsky_bound(long mu, long delta, double sigma_bar) {
  if (mu < 1) throw DomainError("mu must be >= 1");
  if (delta < 0) throw DomainError("delta must be >= 0");
  require_nonnegative(sigma_bar, "sigma_bar");
  const double m = static_cast<double>(mu);
  const double d1 = static_cast<double>(delta) + 1.0;
  ChudnovskyBound out;
  const double eps = mu == 1 ? 1.0 : 0.0;
  out.combined_coefficient = (5.0 + eps) * m * m * d1 - 1.0 - (m - 1.0) * d1;
  out.branch_coefficient = mu == 1 ? 6.0 * static_cast<double>(delta) - 1.0 : 5.0 * m * m * d1 - 1.0 - (m - 1.0) * d1;
  out.branch_value = std::max(0.0, out.branch_coefficient * sigma_bar);
  out.combined_value = std::max(0.0, out.combined_coefficient * sigma_bar);
  return out;
}

ApplicationBounds application_bounds(unsigned long d_beta, long mu, long delta, double sigma_bar, double field_degree) {
  if (d_beta < 1) throw DomainError("d(beta) must be >= 1");
  if (field_degree < 1.0) throw DomainError("field degree must be >= 1");
  const ChudnovskyBound chud = chudnovsky_bound(mu, delta, sigma_bar);
  const double log_d = std::log(static_cast<double>(d_beta));
  const double m = static_cast<double>(mu);
  ApplicationBounds out;
  out.via_chudnovsky = (1.0 + kLog2) * std::max({1.0, 2.0 * log_d, chud.combined_coefficient * sigma_bar});
  out.via_alternative =
      field_degree * (2.0 * log_d + 2.0 * m * (2.0 * m + 1.0) * (static_cast<double>(delta) + 1.0) * sigma_bar);
  return out;
}

double comp_function(long mu, long delta) {
  if (mu < 1 || delta < 0) throw DomainError("Comp needs mu >= 1 and delta >= 0");
  const double m = static_cast<double>(mu);
  const double d1 = static_cast<double>(delta) + 1.0;
  return (1.0 + kLog2) * chudnovsky_bound(mu, delta, 0.0).combined_coefficient - 2.0 * m * (2.0 * m + 1.0) * d1;
}

double comp_leading(long mu) {
  const double m = static_cast<double>(mu);
  return (3.0 + 5.0 * kLog2) * m * m - (3.0 + kLog2) * m + 1.0 + kLog2;
}

double nilsson_alt_bound(std::span<const unsigned long> d_alphas, long kappa, long lambda, long mu, long delta,
                         double sigma_bar_max, double field_degree) {
  if (kappa < 0 || lambda < 0 || delta < 0) throw DomainError("kappa, lambda and delta must be >= 0");
  if (mu < 1) throw DomainError("mu must be >= 1");
  if (field_degree < 1.0) throw DomainError("field degree must be >= 1");
  require_nonnegative(sigma_bar_max, "sigma_bar");
  unsigned long d = 1;
  for (unsigned long x : d_alphas) {
    if (x < 1) throw DomainError("denominators must be >= 1");
    d = std::lcm(d, x);
  }
  const double m = static_cast<double>(mu);
  const double inner = 2.0 * m * (2.0 * m * static_cast<double>(lambda) * (static_cast<double>(kappa) + 1.0) + 1.0) *
                       (static_cast<double>(delta) + 1.0) * sigma_bar_max;
  return field_degree * (2.0 * std::log(static_cast<double>(d)) + static_cast<double>(kappa) + inner);
}

GalochkinSizeBounds galochkin_size_bounds(double sigma, double h_minus, double h_plus, double field_degree) {
  require_nonnegative(sigma, "sigma");
  require_nonnegative(h_plus, "h_plus");
  if (h_minus > 0.0) throw DomainError("h_minus must be <= 0");
  if (field_degree < 1.0) throw DomainError("field degree must be >= 1");
  return {std::max(0.0, sigma + h_minus / field_degree), field_degree * sigma + h_plus};
}

namespace {

class Inputs {
 public:
  explicit Inputs(const std::vector<std::pair<std::string, double>>& raw) : raw_(raw) {}

  double get(const std::string& key) const {
    for (const auto& [k, v] : raw_)
      if (k == key) return v;
    throw DomainError("missing input --" + key);
  }
  double get(const std::string& key, double fallback) const {
    for (const auto& [k, v] : raw_)
      if (k == key) return v;
    return fallback;
  }
  std::optional<double> find(const std::string& key) const {
    for (const auto& [k, v] : raw_)
      if (k == key) return v;
    return std::nullopt;
  }
  long integer(const std::string& key) const { return as_integer(key, get(key)); }
  long integer(const std::string& key, long fallback) const {
    auto v = find(key);
    return v ? as_integer(key, *v) : fallback;
  }

 private:
  static long as_integer(const std::string& key, double v) {
    if (!std::isfinite(v) || v != std::floor(v)) throw DomainError("input --" + key + " must be an integer");
    return static_cast<long>(v);
  }
  const std::vector<std::pair<std::string, double>>& raw_;
};

unsigned long positive(long v, const char* what) {
  if (v < 1) throw DomainError(std::string(what) + " must be >= 1");
  return static_cast<unsigned long>(v);
}

std::vector<unsigned long> integer_list(const std::vector<double>& xs) {
  std::vector<unsigned long> out;
  for (double x : xs) {
    if (!(x >= 1.0) || x != std::floor(x)) throw DomainError("denominators must be positive integers");
    out.push_back(static_cast<unsigned long>(x));
  }
  return out;
}

const char* const kSigmaBarNote = "sigma-bar is an input; 13 reproduces the published example";

}  // namespace

std::vector<std::string> formula_ids() {
  return {"main-theorem",      "closure-sum",        "closure-product",     "closure-nfold",
          "closure-tensor",    "closure-sympower",   "dual-katz",           "dual-additive-upper",
          "dual-additive-lower", "exact-sequence-doubled", "exact-sequence-refined", "exact-sequence-additive",
          "thm-product-lower", "thm-product-upper-a", "thm-product-upper-b", "chudnovsky",
          "eq-4.2",            "eq-4.4",             "comp",                "comp-leading",
          "nilsson-alt",       "galochkin-lower",    "galochkin-upper"};
}

BoundReport evaluate(const std::string& id, const std::vector<std::pair<std::string, double>>& raw,
                     const std::vector<double>& list) {
  const Inputs in(raw);
  BoundReport r;
  r.formula_id = id;
  r.inputs = raw;
  std::sort(r.inputs.begin(), r.inputs.end());

  if (id == "main-theorem") {
    if (list.empty() || list.size() % 3 != 0) throw DomainError("main-theorem needs terms given as d,k,sigma triples");
    std::vector<MainTheoremTerm> terms;
    for (std::size_t i = 0; i < list.size(); i += 3) {
      if (list[i] < 1.0 || list[i] != std::floor(list[i]) || list[i + 1] != std::floor(list[i + 1]))
        throw DomainError("d(alpha) and k must be integers");
      terms.push_back({static_cast<unsigned long>(list[i]), static_cast<long>(list[i + 1]), list[i + 2]});
    }
    r.value = main_theorem_bound(terms);
  } else if (id.rfind("closure-", 0) == 0) {
    const ClosureKind kind = parse_closure_kind(id.substr(8));
    long n = in.integer("n", 0);
    if (n < 0) throw DomainError("n must be >= 0");
    r.value = closure_bound(kind, list, static_cast<unsigned>(n));
  } else if (id.rfind("dual-", 0) == 0) {
    const DualBounds d = dual_bounds(in.get("sigma"), in.integer("mu"));
    if (id == "dual-katz") {
      if (!d.katz) throw DomainError("the dual-katz bound needs mu >= 2");
      r.value = *d.katz;
    } else if (id == "dual-additive-upper") {
      r.value = d.additive_upper;
    } else if (id == "dual-additive-lower") {
      r.value = d.additive_lower;
    } else {
      throw DomainError("unknown formula id '" + id + "'");
    }
    if (d.katz) r.extra.emplace_back("katz", *d.katz);
    r.extra.emplace_back("additive_lower", d.additive_lower);
    r.extra.emplace_back("additive_upper", d.additive_upper);
  } else if (id.rfind("exact-sequence-", 0) == 0) {
    const ExactSequenceBounds e =
        exact_sequence_bounds(in.get("sigma2"), in.get("sigma3"), in.integer("mu3"), in.find("sigma3-dual"));
    if (id == "exact-sequence-doubled") {
      r.value = e.doubled;
    } else if (id == "exact-sequence-refined") {
      r.value = e.refined;
      if (!in.find("sigma3-dual")) r.notes.emplace_back("sigma3-dual replaced by sigma3 + mu3 - 1");
    } else if (id == "exact-sequence-additive") {
      r.value = e.additive;
    } else {
      throw DomainError("unknown formula id '" + id + "'");
    }
    r.extra = {{"additive", e.additive}, {"doubled", e.doubled}, {"refined", e.refined}};
  } else if (id.rfind("thm-product-", 0) == 0) {
    const ProductOperatorBounds b = product_operator_bounds(in.get("sigma1"), in.get("sigma2"), in.integer("ord1"));
    if (id == "thm-product-lower") {
      r.value = b.lower;
    } else if (id == "thm-product-upper-a") {
      r.value = b.upper_a;
    } else if (id == "thm-product-upper-b") {
      r.value = b.upper_b;
    } else {
      throw DomainError("unknown formula id '" + id + "'");
    }
    r.extra = {{"lower", b.lower}, {"upper_a", b.upper_a}, {"upper_b", b.upper_b}};
  } else if (id == "chudnovsky") {
    const long mu = in.integer("mu");
    const ChudnovskyBound c = chudnovsky_bound(mu, in.integer("delta"), in.get("sigma-bar"));
    r.value = c.branch_value;
    r.extra = {{"branch_coefficient", c.branch_coefficient},
               {"combined_coefficient", c.combined_coefficient},
               {"combined_value", c.combined_value}};
    if (mu == 1) r.notes.emplace_back("mu = 1: branch coefficient 6 delta - 1 differs from the combined 6 delta + 5");
  } else if (id == "eq-4.2" || id == "eq-4.4") {
    const ApplicationBounds a = application_bounds(positive(in.integer("d-beta"), "d-beta"), in.integer("mu"),
                                                   in.integer("delta"), in.get("sigma-bar"),
                                                   in.get("field-degree", 1.0));
    r.value = id == "eq-4.2" ? a.via_chudnovsky : a.via_alternative;
    r.extra = {{"eq-4.2", a.via_chudnovsky}, {"eq-4.4", a.via_alternative}};
    r.notes.emplace_back(kSigmaBarNote);
  } else if (id == "comp") {
    const long mu = in.integer("mu");
    r.value = comp_function(mu, in.integer("delta"));
    r.extra = {{"leading", comp_leading(mu)}};
  } else if (id == "comp-leading") {
    r.value = comp_leading(in.integer("mu"));
  } else if (id == "nilsson-alt") {
    const auto ds = integer_list(list.empty() ? std::vector<double>{in.get("d-alpha", 1.0)} : list);
    r.value = nilsson_alt_bound(ds, in.integer("kappa", 0), in.integer("lambda", 1), in.integer("mu"),
                                in.integer("delta"), in.get("sigma-bar"), in.get("field-degree", 1.0));
  } else if (id == "galochkin-lower" || id == "galochkin-upper") {
    const GalochkinSizeBounds g = galochkin_size_bounds(in.get("sigma"), in.get("h-minus", 0.0),
                                                        in.get("h-plus", 0.0), in.get("field-degree", 1.0));
    r.value = id == "galochkin-lower" ? g.lower : g.upper;
    r.extra = {{"lower", g.lower}, {"upper", g.upper}};
  } else {
    throw DomainError("unknown formula id '" + id + "'");
  }
  if (!std::isfinite(r.value)) throw DomainError("bound evaluated to a non-finite value");
  return r;
}

}  // namespace gop::bounds
