#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "steinhaus/arithtri.hpp"
#include "steinhaus/binommat.hpp"
#include "steinhaus/families.hpp"
#include "steinhaus/iap.hpp"
#include "steinhaus/idap.hpp"
#include "steinhaus/modlinalg.hpp"
#include "steinhaus/search.hpp"
#include "steinhaus/triangle.hpp"
#include "steinhaus/verify.hpp"

namespace py = pybind11;

namespace {

using namespace steinhaus;

using Row = std::vector<std::int64_t>;
using Matrix = std::vector<Row>;

ModTuple make_tuple(std::int64_t m, const Row& values) {
  return ModTuple{Modulus(m), values};
}

Matrix matrix_rows(const ModMatrix& m) {
  Matrix rows;
  for (std::size_t r = 0; r < m.rows(); ++r)
    rows.push_back(m.row(r).values());
  return rows;
}

LocalRule rule_of(const std::string& name) {
  if (name == "pascal") return LocalRule::kPascal;
  if (name == "negated") return LocalRule::kNegated;
  throw Error("rule must be pascal or negated");
}

}  // namespace

PYBIND11_MODULE(_steinhaus, mod) {
  mod.doc() = "balanced Steinhaus triangles over Z/mZ";

  py::register_exception<BudgetError>(mod, "BudgetError");

  mod.def(
      "derive",
      [](std::int64_t m, const Row& row, const std::string& rule) {
        return derive(make_tuple(m, row), rule_of(rule)).values();
      },
      py::arg("m"), py::arg("row"), py::arg("rule") = "negated");

  mod.def(
      "derive_periodic",
      [](std::int64_t m, const Row& period, const std::string& rule) {
        return derive_periodic(make_tuple(m, period), rule_of(rule)).values();
      },
      py::arg("m"), py::arg("period"), py::arg("rule") = "negated");

  mod.def(
      "triangle_rows",
      [](std::int64_t m, const Row& row, const std::string& rule) {
        const Triangle t = Triangle::generate(make_tuple(m, row),
                                              rule_of(rule));
        Matrix rows;
        for (std::size_t i = 0; i < t.size(); ++i)
          rows.push_back(t.row(i).values());
        return rows;
      },
      py::arg("m"), py::arg("row"), py::arg("rule") = "negated");

  mod.def(
      "triangle_balanced",
      [](std::int64_t m, const Row& row, const std::string& rule) {
        return balanced_triangle_scan(make_tuple(m, row), rule_of(rule));
      },
      py::arg("m"), py::arg("row"), py::arg("rule") = "negated");

  mod.def(
      "triangle_multiplicity",
      [](std::int64_t m, const Row& row, const std::string& rule) {
        return triangle_multiplicity_scan(make_tuple(m, row), rule_of(rule))
            .counts();
      },
      py::arg("m"), py::arg("row"), py::arg("rule") = "negated");

  mod.def(
      "is_antisymmetric",
      [](std::int64_t m, const Row& row) {
        return is_antisymmetric(make_tuple(m, row));
      },
      py::arg("m"), py::arg("row"));

  mod.def(
      "cmat",
      [](std::int64_t k, std::int64_t i, std::int64_t m) {
        return matrix_rows(cmat(k, i, Modulus(m)));
      },
      py::arg("k"), py::arg("i"), py::arg("m"));

  mod.def(
      "tmat",
      [](std::int64_t k, std::int64_t i, std::int64_t m) {
        return matrix_rows(tmat(k, i, Modulus(m)));
      },
      py::arg("k"), py::arg("i"), py::arg("m"));

  mod.def(
      "mmat",
      [](std::int64_t k, std::int64_t p, std::int64_t m) {
        return matrix_rows(mmat(k, p, Modulus(m)));
      },
      py::arg("k"), py::arg("p"), py::arg("m"));

  mod.def(
      "left_kernel",
      [](const Matrix& rows, std::int64_t m, std::int64_t p) {
        ModMatrix mat(Modulus(m), rows.size(),
                      rows.empty() ? 0 : rows[0].size());
        for (std::size_t r = 0; r < rows.size(); ++r)
          for (std::size_t c = 0; c < rows[r].size(); ++c)
            mat.set(r, c, rows[r][c]);
        const KernelBasis basis = left_kernel_gfp(mat, p);
        Matrix out;
        for (const auto& v : basis.vectors) out.push_back(v.values());
        return out;
      },
      py::arg("rows"), py::arg("m"), py::arg("p"));

  mod.def(
      "kernel_dimension",
      [](std::int64_t k, std::int64_t p) {
        return left_kernel_gfp(mmat(k, k * p, Modulus(p)), p).dimension();
      },
      py::arg("k"), py::arg("p"),
      "dimension of the left kernel of M_k^{kp} mod p");

  mod.def(
      "iap_window",
      [](std::int64_t m, const Row& a, const Row& d, std::int64_t from,
         std::int64_t to) {
        const IapSpec s{make_tuple(m, a), make_tuple(m, d)};
        return iap_window(s, from, to).values();
      },
      py::arg("m"), py::arg("a"), py::arg("d"), py::arg("from"),
      py::arg("to"));

  mod.def("universal_tuple", [](std::int64_t mu) {
    const IntTuple24 t = universal_A(mu);
    return Row(t.begin(), t.end());
  });

  mod.def("mu_for_range", &mu_for_range, py::arg("m0"));

  mod.def(
      "universal_period",
      [](std::int64_t m, std::int64_t mu) {
        FamilyElementSpec hint;
        hint.family = FamilyElementSpec::Family::kUMu;
        hint.u.mu = mu;
        hint.u.e.i0 = 1;
        hint.u.e.alpha_y[4] = -1;
        hint.u.e.alpha_y[7] = -1;
        hint.u.oprime.a1 = 0;
        const auto result = balanced_period(Modulus(m), universal_A(mu), hint);
        py::dict out;
        out["values"] = result.period.values();
        if (m <= 10) out["digits"] = to_digits(result.period);
        out["orbit_period"] = result.orbit_period;
        return out;
      },
      py::arg("m"), py::arg("mu") = 315);

  mod.def(
      "brute_force_balanced",
      [](std::int64_t m, std::int64_t n, const std::string& rule,
         std::int64_t budget) {
        SearchJob job;
        job.m = m;
        job.n = n;
        job.rule = rule_of(rule);
        job.cell_budget = budget;
        const SearchReport report = brute_force_balanced(job);
        py::dict out;
        out["examined"] = report.examined;
        out["balanced"] = report.balanced;
        out["orbit_count"] = report.orbit_count;
        return out;
      },
      py::arg("m"), py::arg("n"), py::arg("rule") = "pascal",
      py::arg("budget") = std::int64_t{100000000});

  mod.def(
      "bset_orbit_count",
      [](std::int64_t k, int u) { return bset(k, u).orbit_count; },
      py::arg("k"), py::arg("u"));

  mod.def(
      "verify",
      [](const std::string& suite) {
        const auto results =
            run_checks(suite == "full" ? Suite::kFull : Suite::kFast);
        py::list out;
        for (const auto& r : results) {
          py::dict d;
          d["id"] = r.id;
          d["name"] = r.name;
          d["pass"] = r.pass;
          d["seconds"] = r.seconds;
          d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "fast");
}
