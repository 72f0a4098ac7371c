#include "pslekr/report.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <random>

#include "pslekr/charsums.hpp"
#include "pslekr/derangement.hpp"
#include "pslekr/ekr.hpp"
#include "pslekr/error.hpp"

namespace pslekr {

using nlohmann::ordered_json;

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::Table: return "table";
    case Suite::Sums: return "sums";
    case Suite::Rank: return "rank";
    case Suite::Ekr: return "ekr";
  }
  return "?";
}

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "table") return Suite::Table;
  if (name == "sums") return Suite::Sums;
  if (name == "rank") return Suite::Rank;
  if (name == "ekr") return Suite::Ekr;
  return std::nullopt;
}

std::optional<std::string> suite_out_of_range(Suite suite, int q, const SuiteOptions& opts) {
  switch (suite) {
    case Suite::Table:
    case Suite::Sums:
      if (q < 5) return "needs q >= 5";
      return std::nullopt;
    case Suite::Rank:
      if (q < 5) return "needs q >= 5";
      if (q > kMaxRankQ) return "rank verification limited to q <= " + std::to_string(kMaxRankQ);
      return std::nullopt;
    case Suite::Ekr:
      if (q <= kDefaultEkrQ || (q == 9 && opts.allow_ekr_q9)) return std::nullopt;
      return "EKR enumeration limited to q <= 7";
  }
  return "unknown suite";
}

std::string approx_string(const CycNum& z, int digits) {
  const std::complex<double> c = z.to_complex();
  auto fmt = [digits](double x) {
    if (x == 0.0) x = 0.0;  // drop the sign of -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::string(buf);
  };
  if (z.is_real()) return fmt(c.real());
  const double im = c.imag();
  return fmt(c.real()) + (std::signbit(im) ? "-" : "+") + fmt(std::fabs(im)) + "i";
}

ordered_json cyc_json(const CycNum& z, int digits) {
  return ordered_json{{"exact", z.exact_string()}, {"approx", approx_string(z, digits)}};
}

namespace {

class Checks {
 public:
  void add(const std::string& name, bool ok, ordered_json detail = nullptr) {
    ordered_json entry{{"name", name}, {"pass", ok}};
    if (!detail.is_null()) entry["detail"] = std::move(detail);
    list_.push_back(std::move(entry));
    if (!ok && first_.empty()) first_ = name;
  }
  bool pass() const { return first_.empty(); }

  SuiteReport finish(ordered_json body) {
    body["checks"] = std::move(list_);
    body["pass"] = pass();
    body["first_failure"] = first_.empty() ? ordered_json(nullptr) : ordered_json(first_);
    SuiteReport out;
    out.pass = pass();
    out.first_failure = first_;
    out.json = std::move(body);
    return out;
  }

 private:
  ordered_json list_ = ordered_json::array();
  std::string first_;
};

ordered_json header(Suite suite, int q) {
  return ordered_json{{"schema", kSchemaVersion}, {"q", q}, {"suite", to_string(suite)}};
}

std::mt19937_64 make_rng(uint64_t seed, int q) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(q)};
  return std::mt19937_64(seq);
}

CycNum rat(long num, long den = 1) { return CycNum::from_rational(Rational(num, den)); }

std::string element_string(const GroupElement& g) {
  return "[" + std::to_string(g.a().v) + " " + std::to_string(g.b().v) + "; " + std::to_string(g.c().v) + " " +
         std::to_string(g.d().v) + "]";
}

ordered_json element_json(const GroupElement& g) {
  return ordered_json::array({ordered_json::array({g.a().v, g.b().v}), ordered_json::array({g.c().v, g.d().v})});
}

ordered_json char_params(const IrreducibleChar& chi) {
  ordered_json p = ordered_json::object();
  if (chi.kind == CharKind::Eta) p["beta"] = chi.param;
  if (chi.kind == CharKind::Nu) p["gamma"] = chi.param;
  return p;
}

std::string pair_label(const ProjectiveGroup& group, std::pair<int, int> ab) {
  return "(" + to_string(group.point_at(ab.first)) + "," + to_string(group.point_at(ab.second)) + ")";
}

SuiteReport table_suite(const ProjectiveGroup& group, const SuiteOptions& opts) {
  const CharTable table(group);
  const long q = group.q();
  const long order = q * (q * q - 1);
  const auto& labels = table.labels();
  const auto& rows = table.rows();
  Checks checks;

  std::map<ClassLabel, long> census;
  for (const auto& g : group.pgl()) ++census[group.classify(g)];
  bool ok = census.size() == labels.size();
  for (const auto& l : labels) ok = ok && census[l] == group.class_size(l);
  checks.add("class_census", ok);

  long deg2 = 0;
  for (const auto& chi : rows) deg2 += static_cast<long>(chi.degree(q)) * chi.degree(q);
  checks.add("degree_square_sum", deg2 == order, ordered_json{{"sum", deg2}, {"group_order", order}});

  ok = true;
  for (size_t i = 0; i < rows.size() && ok; ++i) {
    for (size_t j = 0; j < rows.size() && ok; ++j) {
      ok = table.inner_product(table.row(i), table.row(j)) == rat(i == j ? 1 : 0);
    }
  }
  checks.add("row_orthogonality", ok);

  ok = true;
  for (size_t c = 0; c < labels.size() && ok; ++c) {
    for (size_t d = 0; d < labels.size() && ok; ++d) {
      CycNum s = rat(0);
      for (size_t i = 0; i < rows.size(); ++i) s += table.row(i)[c] * table.row(i)[d].conj();
      ok = s == rat(c == d ? order / table.sizes()[c] : 0);
    }
  }
  checks.add("column_orthogonality", ok);

  bool psi_ok = true, sign_ok = true;
  const IrreducibleChar psi1{CharKind::Psi1, 0};
  const IrreducibleChar sign{CharKind::LambdaMinus1, 0};
  for (const auto& g : group.pgl()) {
    psi_ok = psi_ok && table.char_value(psi1, g) == rat(group.fixed_point_count(g) - 1);
    sign_ok = sign_ok && table.char_value(sign, g) == rat(g.in_psl ? 1 : -1);
  }
  checks.add("psi_1_is_fixed_points_minus_one", psi_ok);
  checks.add("lambda_-1_is_psl_sign", sign_ok);

  const ClassFunction pi = table.permutation_character_pi();
  ok = true;
  for (size_t c = 0; c < labels.size(); ++c) {
    const long f = group.fixed_point_count(group.class_representative(labels[c]));
    ok = ok && pi[c] == rat(f * (f - 1));
  }
  ordered_json mult = ordered_json::object();
  bool mult_ok = ok;
  for (size_t i = 0; i < rows.size(); ++i) {
    const CycNum m = table.inner_product(pi, table.row(i));
    long expected = 1;
    if (rows[i].kind == CharKind::Psi1) expected = 2;
    if (rows[i].kind == CharKind::LambdaMinus1) expected = 0;
    mult_ok = mult_ok && m == rat(expected);
    mult[rows[i].name()] = m.is_rational() ? m.rational_value().get_str() : m.exact_string();
  }
  checks.add("permutation_character_decomposition", mult_ok, mult);

  long derangements = 0;
  for (int idx : group.psl_indices()) derangements += group.is_derangement(group.pgl()[idx]) ? 1 : 0;
  checks.add("psl_derangement_count", derangements == q * (q - 1) * (q - 1) / 4,
             ordered_json{{"count", derangements}});

  auto rng = make_rng(opts.seed, static_cast<int>(q));
  std::uniform_int_distribution<size_t> pick(0, group.pgl().size() - 1);
  ok = true;
  for (int s = 0; s < 200 && ok; ++s) {
    const GroupElement& g = group.pgl()[pick(rng)];
    const GroupElement& k = group.pgl()[pick(rng)];
    ok = group.classify(group.mul(group.mul(group.inverse(k), g), k)) == group.classify(g);
  }
  checks.add("conjugation_invariance_sampled", ok);

  ordered_json body = header(Suite::Table, static_cast<int>(q));
  body["num_characters"] = rows.size();
  body["num_classes"] = labels.size();
  return checks.finish(std::move(body));
}

SuiteReport sums_suite(const ProjectiveGroup& group, const SuiteOptions& opts) {
  const FieldCtx& ctx = group.field();
  const long q = ctx.q();
  const auto elems = ctx.elements();
  const FqElem one = ctx.one();
  const FqElem minus_one = ctx.neg(one);
  const MultCharFq eps = trivial_char(ctx);
  const MultCharFq phi = quadratic_char(ctx);
  Checks checks;

  const auto basis = orthogonal_basis(ctx);
  bool ok = basis.size() == static_cast<size_t>(q);
  for (size_t i = 0; i < basis.size() && ok; ++i) {
    for (size_t j = 0; j < basis.size() && ok; ++j) {
      const CycNum v = l2_inner(ctx, basis[i].values, basis[j].values);
      ok = i == j ? v == CycNum::from_rational(basis[i].norm2) : v.is_zero();
    }
  }
  checks.add("basis_gram_matrix", ok, ordered_json{{"basis_size", basis.size()}});

  const L2Function p_eps = legendre_function(ctx, eps);
  ok = true;
  for (const FqElem a : elems) {
    const bool pm1 = a == one || a == minus_one;
    ok = ok && p_eps[a.v] == (pm1 ? rat(q - 2, q) : rat(-2, q));
  }
  checks.add("legendre_trivial_values", ok);

  const auto gammas = enumerate_gamma_set(ctx);
  const auto betas = enumerate_beta_set(ctx);
  bool pm_ok = true, real_ok = true;
  for (const auto& g : gammas) {
    const L2Function p = legendre_function(ctx, g);
    pm_ok = pm_ok && p[one.v] == rat(-1, q) && p[minus_one.v] == char_eval(ctx, g, minus_one) * Rational(-1, q);
    real_ok = real_ok && legendre_function(ctx, g.inverse()) == p;
    for (const auto& v : p) real_ok = real_ok && v.is_real();
  }
  for (const auto& b : betas) {
    const L2Function r = soto_andrade_function(ctx, b);
    pm_ok = pm_ok && r[one.v] == rat(1, q) && r[minus_one.v] == char_eval(ctx, b, ctx.i_elem()) * Rational(-1, q);
    real_ok = real_ok && soto_andrade_function(ctx, b.inverse()) == r;
    for (const auto& v : r) real_ok = real_ok && v.is_real();
  }
  checks.add("values_at_plus_minus_one", pm_ok);
  checks.add("real_and_inversion_symmetric", real_ok);

  const FqElem half = ctx.inv(ctx.from_int(2));
  bool f21_ok = true, f43_ok = true;
  std::vector<CycNum> f_phi;
  for (const FqElem z : elems) f_phi.push_back(greene_2f1(ctx, phi, phi, eps, z));
  for (int e = 1; e < q - 1; ++e) {
    const MultCharFq g = char_fq(ctx, e);
    const L2Function p = legendre_function(ctx, g);
    std::vector<CycNum> f_g;
    for (const FqElem z : elems) f_g.push_back(greene_2f1(ctx, g, g.inverse(), eps, z));
    for (const FqElem a : elems) {
      if (a == one || a == minus_one) continue;
      f21_ok = f21_ok && p[a.v] == f_g[ctx.mul(ctx.sub(one, a), half).v];
    }
    CycNum rhs = rat(0);
    for (const FqElem z : elems) rhs += f_phi[z.v] * f_g[z.v] * Rational(legendre_symbol(ctx, z));
    const CycNum f43 = greene_nfn(ctx, {g, g.inverse(), phi, phi}, {eps, eps, eps}, one);
    f43_ok = f43_ok && f43 * Rational(q) == rhs;
  }
  checks.add("legendre_as_2f1", f21_ok);

  ok = true;
  for (const FqElem x : elems) {
    if (x.v == 0) continue;
    ok = ok && f_phi[x.v] == f_phi[ctx.inv(x).v] * Rational(legendre_symbol(ctx, x));
  }
  checks.add("2f1_inversion", ok);
  checks.add("4f3_as_sum_of_2f1_products", f43_ok);

  ok = true;
  const L2Function p_phi = legendre_function(ctx, phi);
  for (const FqElem d : elems) {
    if (d.v == 0 || d == one) continue;
    const FqElem four_d = ctx.mul(ctx.from_int(4), d);
    long lhs = 0;
    for (const FqElem x : elems) {
      if (x.v == 0) continue;
      const FqElem s = ctx.add(x, ctx.inv(x));
      lhs += legendre_symbol(ctx, ctx.sub(ctx.mul(s, s), four_d));
    }
    const FqElem arg = ctx.sub(ctx.add(d, d), one);
    ok = ok && rat(lhs) == rat(-2) + p_phi[arg.v] * Rational(q);
  }
  checks.add("quadratic_sum_via_p_phi", ok);

  const L2Function f = f_function(ctx);
  const CycNum norm = l2_inner(ctx, f, f);
  const Rational expected_norm = Rational(q * q - q - 2, q * q);
  checks.add("f_norm", norm == CycNum::from_rational(expected_norm), cyc_json(norm, opts.approx_digits));
  CycNum parseval = rat(0);
  for (const auto& b : basis) {
    const CycNum c = l2_inner(ctx, f, b.values);
    parseval += c * c.conj() / b.norm2;
  }
  checks.add("f_expansion_parseval", parseval == norm);

  ok = true;
  for (int e = 1; e < q - 1 && ok; ++e) {
    const auto [lhs, rhs] = f_pgamma_identity(ctx, char_fq(ctx, e));
    ok = lhs == rhs;
  }
  checks.add("f_pgamma_identity", ok);

  ordered_json bounds = ordered_json::array();
  bool bound_ok = true, katz_ok = true;
  const std::vector<Rational> beta_params(4, Rational(1));
  for (int n : {2, 3, 4, 6}) {
    if ((q - 1) % n != 0) continue;
    const MultCharFq g = char_fq(ctx, (q - 1) / n);
    const QuarticBoundCheck pc = quartic_bound_check(ctx, g);
    bound_ok = bound_ok && pc.holds;
    const std::vector<Rational> alpha{Rational(1, n), Rational(n - 1, n), Rational(1, 2), Rational(1, 2)};
    const CycNum h = katz_hq(ctx, alpha, beta_params, one);
    const Rational q3(q * q * q);
    const CycNum f43 = greene_nfn(ctx, {g, g.inverse(), phi, phi}, {eps, eps, eps}, one);
    const CycNum f43_inv = greene_nfn(ctx, {g.inverse(), g, phi, phi}, {eps, eps, eps}, one);
    const bool conv = -(f43 * q3) == h && -(f43_inv * q3) == h;
    katz_ok = katz_ok && conv;
    bounds.push_back(ordered_json{{"n", n},
                                  {"value", cyc_json(pc.value, opts.approx_digits)},
                                  {"abs2", pc.abs2.get_str()},
                                  {"bound2", pc.bound2.get_str()},
                                  {"holds", pc.holds},
                                  {"katz_hq", cyc_json(h, opts.approx_digits)},
                                  {"katz_matches", conv}});
  }
  checks.add("4f3_bound", bound_ok);
  checks.add("katz_conversion", katz_ok);

  ordered_json body = header(Suite::Sums, static_cast<int>(q));
  body["basis"] = ordered_json::array();
  for (const auto& b : basis) body["basis"].push_back(ordered_json{{"name", b.name}, {"norm2", b.norm2.get_str()}});
  body["f_norm2"] = expected_norm.get_str();
  body["hypergeometric_bounds"] = std::move(bounds);
  return checks.finish(std::move(body));
}

SuiteReport rank_suite(const ProjectiveGroup& group, const SuiteOptions& opts) {
  const long q = group.q();
  const FieldCtx& ctx = group.field();
  const RankTheoremReport rep = verify_rank_theorem(group);
  const CharTable table(group);
  const DerangementMatrix m = build_M(group);
  const IntMatrix n = build_N_bruteforce(m);
  const OmegaIndex omega(static_cast<int>(q));
  Checks checks;

  checks.add("rank_M", rep.rank == rep.expected_rank, ordered_json{{"rank", rep.rank}});
  checks.add("rank_N_equals_rank_M", rep.rank_n == rep.rank);
  checks.add("N_closed_form", closed_form_N(group) == n);

  bool ok = true;
  for (int i = 0; i < n.rows; ++i) ok = ok && n.at(i, i) == (q - 1) * (q - 1) / 4;
  checks.add("N_diagonal", ok);

  auto rng = make_rng(opts.seed, static_cast<int>(q));
  std::uniform_int_distribution<size_t> pick_g(0, group.pgl().size() - 1);
  std::uniform_int_distribution<int> pick_w(0, omega.size() - 1);
  ok = true;
  for (int s = 0; s < 500 && ok; ++s) {
    const auto perm = group.permutation(static_cast<int>(pick_g(rng)));
    const auto [a, b] = omega.pair_at(pick_w(rng));
    const auto [c, d] = omega.pair_at(pick_w(rng));
    ok = n.at(omega.index(a, b), omega.index(c, d)) ==
         n.at(omega.index(perm[a], perm[b]), omega.index(perm[c], perm[d]));
  }
  checks.add("N_invariance_sampled", ok);

  const KernelVectors kv = kernel_vectors(group);
  ok = true;
  for (size_t k = 0; k < kv.pairs.size() && ok; ++k) {
    for (int i = 0; i < n.rows && ok; ++i) {
      long sl = 0, sr = 0;
      for (int j = 0; j < n.cols; ++j) {
        sl += n.at(i, j) * kv.l[k][j];
        sr += n.at(i, j) * kv.r[k][j];
      }
      ok = sl == 0 && sr == 0;
    }
  }
  IntMatrix stacked(2 * static_cast<int>(kv.pairs.size()), omega.size());
  for (size_t k = 0; k < kv.pairs.size(); ++k) {
    for (int j = 0; j < omega.size(); ++j) {
      stacked.at(static_cast<int>(2 * k), j) = kv.l[k][j];
      stacked.at(static_cast<int>(2 * k + 1), j) = kv.r[k][j];
    }
  }
  const int kernel_rank = exact_rank(stacked);
  checks.add("kernel_vectors", ok && kernel_rank == 2 * q && rep.rank + kernel_rank <= omega.size(),
             ordered_json{{"witnessed_kernel_dimension", kernel_rank}});

  ok = true;
  for (const auto& chi : table.rows()) {
    if (chi.kind != CharKind::PsiMinus1 && chi.kind != CharKind::Eta && chi.kind != CharKind::Nu) continue;
    const auto swap = RestrictedConstraint::swap();
    ok = ok && restricted_char_sum(table, chi, swap) == restricted_char_sum_closed(table, chi, swap);
    for (const FqElem d : ctx.elements()) {
      if (d.v == 0 || d == ctx.one()) continue;
      const auto c = RestrictedConstraint::one_to(d);
      ok = ok && restricted_char_sum(table, chi, c) == restricted_char_sum_closed(table, chi, c);
    }
  }
  checks.add("restricted_sums", ok);

  // Sums over point stabilizers fixed by Frobenius reciprocity.
  const ProjPoint zero_pt = ProjPoint::finite(ctx.zero());
  const ProjPoint inf_pt = ProjPoint::infinity();
  const std::pair<ProjPoint, ProjPoint> fix_both[] = {{zero_pt, zero_pt}, {inf_pt, inf_pt}};
  const std::pair<ProjPoint, ProjPoint> fix_zero[] = {{zero_pt, zero_pt}};
  const std::pair<ProjPoint, ProjPoint> zero_to_inf[] = {{zero_pt, inf_pt}};
  const auto g_both = group.elements_with_constraints(fix_both, Which::PGL);
  const auto g_zero = group.elements_with_constraints(fix_zero, Which::PGL);
  const auto g_swap = group.elements_with_constraints(zero_to_inf, Which::PGL);
  auto sum_inv = [&](const IrreducibleChar& chi, const std::vector<GroupElement>& els) {
    CycNum s = rat(0);
    for (const auto& g : els) s += table.char_value(chi, group.inverse(g));
    return s;
  };
  ok = true;
  for (const auto& chi : table.rows()) {
    if (chi.kind != CharKind::PsiMinus1 && chi.kind != CharKind::Eta && chi.kind != CharKind::Nu) continue;
    ok = ok && sum_inv(chi, g_both) == rat(q - 1) && sum_inv(chi, g_zero).is_zero() && sum_inv(chi, g_swap).is_zero();
  }
  checks.add("stabilizer_sums", ok);

  ordered_json chars = ordered_json::array();
  bool agree = true;
  for (const auto& res : rep.characters) {
    const ClosedForms cf = t_n_chi_closed_forms(table, res.chi);
    agree = agree && res.t_value == cf.product_form && res.t_value == cf.f_form;
    if (res.chi.kind != CharKind::Lambda1) agree = agree && res.t_value == t_n_chi_assembled(table, res.chi);
    ordered_json c{{"kind", to_string(res.chi.kind)},
                   {"params", char_params(res.chi)},
                   {"t_value_exact", res.t_value.exact_string()},
                   {"t_value_approx", approx_string(res.t_value, opts.approx_digits)},
                   {"nonzero", res.nonzero}};
    chars.push_back(std::move(c));
  }
  checks.add("t_values_agree", agree);
  ok = !rep.characters.empty() && rep.characters.front().chi.kind == CharKind::Lambda1 &&
       rep.characters.front().t_value == rat((q - 1) * (q + 1) * (q - 1) * (q - 1) / 4);
  checks.add("t_lambda_1_value", ok);
  ok = true;
  for (const auto& res : rep.characters) ok = ok && res.nonzero;
  checks.add("t_nonvanishing", ok);
  checks.add("dimension_ledger", rep.dimension_sum == rep.expected_rank);
  ok = true;
  for (const auto& b : enumerate_beta_set(ctx)) ok = ok && f_rbeta_coefficient_bounded(ctx, b);
  checks.add("f_rbeta_coefficient_bound", ok);

  ordered_json body = header(Suite::Rank, static_cast<int>(q));
  body["rank"] = rep.rank;
  body["expected_rank"] = rep.expected_rank;
  body["rank_n"] = rep.rank_n;
  body["dimension_sum"] = rep.dimension_sum;
  body["characters"] = std::move(chars);
  return checks.finish(std::move(body));
}

SuiteReport ekr_suite(const ProjectiveGroup& group, const SuiteOptions& opts) {
  const int q = group.q();
  const EkrResult res = max_intersecting_families(group, opts.allow_ekr_q9);
  const IntersectionGraph graph(group);
  Checks checks;

  checks.add("max_size", res.max_size == res.expected_max_size, ordered_json{{"max_size", res.max_size}});
  if (q == 3) {
    checks.add("non_coset_family_exists", !res.counterexamples.empty());
  } else {
    checks.add("all_cosets", res.all_cosets);
    checks.add("family_count", static_cast<long>(res.families.size()) == static_cast<long>(q + 1) * (q + 1));
  }

  ordered_json counter = ordered_json::array();
  for (const auto& fam : res.counterexamples) {
    ordered_json members = ordered_json::array();
    for (int v : fam.members) members.push_back(element_json(group.pgl()[graph.element(v)]));
    counter.push_back(ordered_json{{"members", std::move(members)}});
  }
  ordered_json body = header(Suite::Ekr, q);
  body["max_size"] = res.max_size;
  body["expected_max_size"] = res.expected_max_size;
  body["family_count"] = res.families.size();
  body["all_cosets"] = res.all_cosets;
  body["counterexamples"] = std::move(counter);
  return checks.finish(std::move(body));
}

}  // namespace

SuiteReport run_suite(Suite suite, const ProjectiveGroup& group, const SuiteOptions& opts) {
  switch (suite) {
    case Suite::Table: return table_suite(group, opts);
    case Suite::Sums: return sums_suite(group, opts);
    case Suite::Rank: return rank_suite(group, opts);
    case Suite::Ekr: return ekr_suite(group, opts);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown suite");
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string CsvTable::str() const {
  std::string out;
  auto line = [&out](const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
      if (i) out += ',';
      out += csv_field(fields[i]);
    }
    out += "\r\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

CsvTable table_csv(const CharTable& table, int digits) {
  CsvTable out;
  out.header.push_back("character");
  for (const auto& l : table.labels()) {
    out.header.push_back(to_string(l) + " exact");
    out.header.push_back(to_string(l) + " approx");
  }
  for (size_t i = 0; i < table.rows().size(); ++i) {
    std::vector<std::string> row{table.rows()[i].name()};
    for (const auto& v : table.row(i)) {
      row.push_back(v.exact_string());
      row.push_back(approx_string(v, digits));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

CsvTable legendre_csv(const FieldCtx& ctx, int digits) {
  const auto basis = orthogonal_basis(ctx);
  CsvTable out;
  out.header.push_back("a");
  for (const auto& b : basis) {
    out.header.push_back(b.name + " exact");
    out.header.push_back(b.name + " approx");
  }
  for (const FqElem a : ctx.elements()) {
    std::vector<std::string> row{std::to_string(a.v)};
    for (const auto& b : basis) {
      row.push_back(b.values[a.v].exact_string());
      row.push_back(approx_string(b.values[a.v], digits));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

CsvTable matrix_m_csv(const ProjectiveGroup& group) {
  const DerangementMatrix m = build_M(group);
  const IntMatrix dense = m.dense();
  const OmegaIndex omega(group.q());
  CsvTable out;
  out.header.push_back("derangement");
  for (int j = 0; j < omega.size(); ++j) out.header.push_back(pair_label(group, omega.pair_at(j)));
  for (int i = 0; i < dense.rows; ++i) {
    std::vector<std::string> row{element_string(group.pgl()[m.row_elements[i]])};
    for (int j = 0; j < dense.cols; ++j) row.push_back(std::to_string(dense.at(i, j)));
    out.rows.push_back(std::move(row));
  }
  return out;
}

CsvTable matrix_n_csv(const ProjectiveGroup& group) {
  const IntMatrix n = build_N_bruteforce(build_M(group));
  const OmegaIndex omega(group.q());
  CsvTable out;
  out.header.push_back("pair");
  for (int j = 0; j < omega.size(); ++j) out.header.push_back(pair_label(group, omega.pair_at(j)));
  for (int i = 0; i < n.rows; ++i) {
    std::vector<std::string> row{pair_label(group, omega.pair_at(i))};
    for (int j = 0; j < n.cols; ++j) row.push_back(std::to_string(n.at(i, j)));
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace pslekr
