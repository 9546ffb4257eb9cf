#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fecount/cli.hpp"
#include "fecount/errors.hpp"
#include "fecount/feedback.hpp"
#include "fecount/monoid.hpp"
#include "fecount/nu.hpp"
#include "fecount/oracle.hpp"
#include "fecount/partition.hpp"

namespace py = pybind11;
using namespace fecount;

namespace {

/// Exact integers become Python ints; an infinite count becomes float("inf").
py::object to_python(const BigCount& c) {
  if (c.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
  return py::module_::import("builtins").attr("int")(c.to_string());
}

py::object to_python(const Integer& v) { return to_python(BigCount(v)); }

GroupElement element_of(const FiniteAbelianGroup& group, const std::vector<std::uint64_t>& target) {
  if (target.empty()) return GroupElement::identity(group);
  return GroupElement(group, target);
}

StateSpace parse_state(const std::string& state, std::uint64_t rank,
                       const std::optional<std::vector<std::uint64_t>>& det,
                       const RingSpec& ring) {
  if (det) {
    if (ring.kind() != RingSpec::Kind::Dedekind || ring.picard().is_infinite())
      throw std::invalid_argument("det requires a Dedekind ring with a finite Picard group");
    return StateSpace::of(ModuleClass::make(rank, element_of(*ring.picard().group, *det)));
  }
  if (state == "any") return StateSpace::any_of_rank(rank);
  if (state == "free") return StateSpace::free(rank);
  if (state == "nonfree") return StateSpace::nonfree(rank);
  throw std::invalid_argument("state must be one of any, free, nonfree");
}

}  // namespace

PYBIND11_MODULE(_fecount, m) {
  m.doc() = "Exact counts of feedback equivalence classes of linear systems";

  auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<NotPrime>(m, "NotPrime", domain.ptr());
  py::register_exception<GroupMismatch>(m, "GroupMismatch", domain.ptr());
  py::register_exception<IncompatibleSpec>(m, "IncompatibleSpec", domain.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", domain.ptr());

  m.def("count_partitions", [](std::size_t n) { return to_python(count_partitions(n)); },
        py::arg("n"), "Number of partitions of n.");
  m.def(
      "partitions",
      [](std::uint32_t n) {
        std::vector<std::vector<std::uint32_t>> out;
        for (const auto& p : enumerate_partitions(n)) out.push_back(p.parts());
        return out;
      },
      py::arg("n"), "Partitions of n as decreasing part lists, in reverse lexicographic order.");

  m.def("nu", [](std::size_t n, std::size_t k) { return to_python(nu(n, k)); }, py::arg("n"),
        py::arg("k"), "Partitions of n with exactly k distinct part sizes.");
  m.def("nu_p", [](std::size_t n, std::size_t k, std::uint64_t p) { return to_python(nu_p(n, k, p)); },
        py::arg("n"), py::arg("k"), py::arg("p"),
        "Partitions of n with k distinct sizes, all divisible by the prime p.");
  m.def(
      "nu_prime_complement",
      [](std::size_t n, std::size_t k, std::uint64_t p) {
        return to_python(nu_prime_complement(n, k, p));
      },
      py::arg("n"), py::arg("k"), py::arg("p"));
  m.def(
      "nu_table",
      [](std::size_t n_max) {
        const NuTable table(n_max);
        py::list rows;
        rows.append(py::list());
        for (std::size_t n = 1; n <= n_max; ++n) {
          py::list row;
          for (const auto& v : table.row(n)) row.append(to_python(v));
          rows.append(row);
        }
        return rows;
      },
      py::arg("n_max"), "rows[n][k-1] = nu(n, k) for k up to the largest nonzero column.");

  m.def(
      "fe_dedekind_rank",
      [](std::uint64_t n, std::uint64_t d) { return to_python(fe_dedekind_rank(n, d)); },
      py::arg("n"), py::arg("picard_order"));
  m.def(
      "fe_dedekind_free", [](std::uint64_t n, std::uint64_t p) { return to_python(fe_dedekind_free(n, p)); },
      py::arg("n"), py::arg("p"));
  m.def(
      "fe_dedekind_nonfree",
      [](std::uint64_t n, std::uint64_t p) { return to_python(fe_dedekind_nonfree(n, p)); },
      py::arg("n"), py::arg("p"));
  m.def(
      "fe_dedekind_module",
      [](std::uint64_t n, const std::vector<std::uint64_t>& orders,
         const std::vector<std::uint64_t>& det) {
        const FiniteAbelianGroup group(orders);
        return to_python(fe_dedekind_module(n, group, element_of(group, det)));
      },
      py::arg("n"), py::arg("orders"), py::arg("det") = std::vector<std::uint64_t>{},
      "Count for the module of rank n and the given determinant over prod Z/orders[j].");
  m.def(
      "count_det_solutions",
      [](const std::vector<std::uint64_t>& sizes, const std::vector<std::uint64_t>& orders,
         const std::vector<std::uint64_t>& det) {
        const FiniteAbelianGroup group(orders);
        return to_python(count_det_solutions(sizes, element_of(group, det), group));
      },
      py::arg("sizes"), py::arg("orders"), py::arg("det") = std::vector<std::uint64_t>{});
  m.def(
      "fe",
      [](const std::string& ring_text, std::uint64_t rank, const std::string& state,
         const std::optional<std::vector<std::uint64_t>>& det) {
        const auto ring = parse_ring_spec(ring_text);
        const auto result = fe_dispatch(ring, parse_state(state, rank, det, ring));
        return py::make_tuple(to_python(result.count), std::string(to_string(result.provenance)));
      },
      py::arg("ring"), py::arg("rank"), py::arg("state") = "any", py::arg("det") = py::none(),
      "Count for a ring such as 'trivial', 'zmod(30)', 'dedekind(2x2)' or 'dedekind(inf)'. "
      "Returns (count, provenance).");

  m.def("oracle_count_rank", [](std::uint32_t n) { return to_python(oracle_count_rank(n)); },
        py::arg("n"));
  m.def(
      "oracle_count_product",
      [](std::uint32_t n, std::uint32_t t) { return to_python(oracle_count_product(n, t)); },
      py::arg("n"), py::arg("t"));
  m.def(
      "oracle_count_dedekind",
      [](std::uint32_t n, const std::vector<std::uint64_t>& orders,
         const std::vector<std::uint64_t>& det) {
        const FiniteAbelianGroup group(orders);
        const auto x = n == 0 ? ModuleClass::zero() : ModuleClass::make(n, element_of(group, det));
        return to_python(oracle_count_dedekind(x, group));
      },
      py::arg("n"), py::arg("orders"), py::arg("det") = std::vector<std::uint64_t>{});

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in process. Returns (exit_code, stdout, stderr).");
}
