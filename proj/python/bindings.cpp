#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pslekr/charsums.hpp"
#include "pslekr/derangement.hpp"
#include "pslekr/ekr.hpp"
#include "pslekr/error.hpp"
#include "pslekr/report.hpp"

namespace py = pybind11;
using namespace pslekr;

namespace {

ProjectiveGroup make_group(int q) { return ProjectiveGroup(make_field_ctx_for_q(q)); }

Suite suite_or_throw(const std::string& name) {
  const auto s = parse_suite(name);
  if (!s) throw py::value_error("unknown suite: " + name);
  return *s;
}

std::string verify_json(int q, const std::string& suite_name, uint64_t seed, int approx_digits, bool allow_ekr_q9) {
  const Suite suite = suite_or_throw(suite_name);
  SuiteOptions opts;
  opts.seed = seed;
  opts.approx_digits = approx_digits;
  opts.allow_ekr_q9 = allow_ekr_q9;
  const auto group = make_group(q);
  if (const auto why = suite_out_of_range(suite, q, opts)) throw py::value_error(*why);
  py::gil_scoped_release release;
  return run_suite(suite, group, opts).json.dump(2);
}

std::string dump_csv(const std::string& what, int q, int approx_digits) {
  const auto group = make_group(q);
  if (what == "table") {
    if (q < 5) throw py::value_error("table needs q >= 5");
    return table_csv(CharTable(group), approx_digits).str();
  }
  if (what == "legendre") {
    if (q < 5) throw py::value_error("legendre needs q >= 5");
    return legendre_csv(group.field(), approx_digits).str();
  }
  if (what == "matrixM" || what == "matrixN") {
    if (q > kMaxRankQ) throw py::value_error("matrix dumps need q <= " + std::to_string(kMaxRankQ));
    return (what == "matrixM" ? matrix_m_csv(group) : matrix_n_csv(group)).str();
  }
  throw py::value_error("unknown dump target: " + what);
}

py::tuple cyc(const CycNum& z) { return py::make_tuple(z.exact_string(), z.to_complex()); }

}  // namespace

PYBIND11_MODULE(_pslekr, m) {
  m.doc() = "Exact character sums, derangement matrices and intersecting families of PSL(2,q).";

  py::register_exception<Error>(m, "Error");

  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  m.def("verify_json", &verify_json, py::arg("q"), py::arg("suite"), py::arg("seed") = 0,
        py::arg("approx_digits") = kDefaultApproxDigits, py::arg("allow_ekr_q9") = false,
        "Run one verification suite at q and return its JSON report.");
  m.def("dump_csv", &dump_csv, py::arg("what"), py::arg("q"), py::arg("approx_digits") = kDefaultApproxDigits,
        "CSV text of a table, legendre, matrixM or matrixN dump.");

  m.def("group_orders", [](int q) {
    const auto g = make_group(q);
    return py::make_tuple(g.pgl().size(), g.psl_indices().size());
  }, py::arg("q"));
  m.def("class_sizes", [](int q) {
    const auto g = make_group(q);
    std::vector<std::pair<std::string, long>> out;
    for (const auto& l : g.class_labels()) out.emplace_back(to_string(l), g.class_size(l));
    return out;
  }, py::arg("q"));
  m.def("derangement_count", [](int q) {
    const auto g = make_group(q);
    long n = 0;
    for (int idx : g.psl_indices()) n += g.is_derangement(g.pgl()[idx]);
    return n;
  }, py::arg("q"));

  m.def("legendre_sum", [](int q, int exponent, int a) {
    const auto ctx = make_field_ctx_for_q(q);
    return cyc(legendre_sum(*ctx, char_fq(*ctx, exponent), ctx->from_int(a)));
  }, py::arg("q"), py::arg("exponent"), py::arg("a"),
     "P_gamma(a) for gamma = chi^exponent, as (exact string, complex).");
  m.def("f_norm2", [](int q) {
    const auto ctx = make_field_ctx_for_q(q);
    const auto f = f_function(*ctx);
    const Rational r = l2_inner(*ctx, f, f).rational_value();
    return py::make_tuple(r.get_num().get_si(), r.get_den().get_si());
  }, py::arg("q"), "Squared norm of x -> phi(1-x) P_phi(x) as (numerator, denominator).");

  m.def("derangement_rank", [](int q) {
    const auto g = make_group(q);
    if (q > kMaxRankQ) throw Error(ErrorKind::BudgetExceeded, "rank limited to q <= " + std::to_string(kMaxRankQ));
    py::gil_scoped_release release;
    return exact_rank(build_M(g).dense());
  }, py::arg("q"), "Exact rank of the derangement matrix M.");
  m.def("n_matrix", [](int q) {
    const auto g = make_group(q);
    if (q > kMaxRankQ) throw Error(ErrorKind::BudgetExceeded, "N limited to q <= " + std::to_string(kMaxRankQ));
    const IntMatrix n = closed_form_N(g);
    std::vector<std::vector<long>> rows(n.rows);
    for (int i = 0; i < n.rows; ++i) rows[i].assign(n.data.begin() + i * n.cols, n.data.begin() + (i + 1) * n.cols);
    return rows;
  }, py::arg("q"), "Closed-form N = M^T M over ordered pairs of distinct points.");

  m.def("max_intersecting", [](int q, bool allow_q9) {
    const auto g = make_group(q);
    EkrResult r;
    {
      py::gil_scoped_release release;
      r = max_intersecting_families(g, allow_q9);
    }
    return py::make_tuple(r.max_size, r.families.size(), r.all_cosets);
  }, py::arg("q"), py::arg("allow_q9") = false, "(maximum size, number of maximum families, all cosets).");
}
