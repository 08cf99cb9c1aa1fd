#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "macmahon/chain.hpp"
#include "macmahon/commutation.hpp"
#include "macmahon/errors.hpp"
#include "macmahon/fock.hpp"
#include "macmahon/partition.hpp"
#include "macmahon/plane_partition.hpp"
#include "macmahon/products.hpp"
#include "macmahon/slicing.hpp"
#include "macmahon/tableaux.hpp"

namespace py = pybind11;
using namespace macmahon;

namespace {

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list to_py(const QSeries& f) {
    py::list out;
    for (const auto& c : f.coeffs()) out.append(to_py(c));
    return out;
}

Partition to_partition(const std::vector<std::int64_t>& parts) { return Partition(parts); }

// (numerator, denominator) as Python ints; the package wraps them in Fraction.
py::tuple to_py(const ExactRational& r) { return py::make_tuple(to_py(r.num()), to_py(r.den())); }

std::vector<std::vector<int>> slice_rows(const SliceSequence& seq) {
    std::vector<std::vector<int>> out;
    for (const auto& s : seq.slices()) out.push_back(s.parts());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Plane-partition generating functions via transfer operators";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    m.def("macmahon_product", [](std::size_t order) { return to_py(macmahon_product(order)); }, py::arg("order"));
    m.def("finite_grid_product",
          [](std::size_t grid, std::size_t order) { return to_py(finite_grid_product(grid, order)); },
          py::arg("grid"), py::arg("order"));
    m.def(
        "transfer_partition_function",
        [](std::size_t order, std::optional<std::size_t> grid, const std::string& prune) {
            if (prune != "sharp" && prune != "plain") throw ValidationError("unknown prune mode '" + prune + "'");
            const Prune p = prune == "sharp" ? Prune::sharp : Prune::plain;
            QSeries z;
            {
                py::gil_scoped_release release;
                z = transfer_partition_function(order, grid, p);
            }
            return to_py(z);
        },
        py::arg("order"), py::arg("grid") = std::nullopt, py::arg("prune") = "plain");
    m.def("count_plane_partitions", &count_plane_partitions_up_to, py::arg("max_volume"));

    m.def(
        "slice",
        [](const std::vector<std::vector<std::int64_t>>& matrix) { return slice_rows(slice(PlanePartition(matrix))); },
        py::arg("matrix"));
    m.def(
        "unslice",
        [](const std::vector<std::vector<std::int64_t>>& slices) {
            std::vector<Partition> parts;
            for (const auto& s : slices) parts.push_back(to_partition(s));
            return unslice(SliceSequence(std::move(parts))).to_matrix();
        },
        py::arg("slices"));
    m.def(
        "interlaces",
        [](const std::vector<std::int64_t>& mu, const std::vector<std::int64_t>& nu) {
            return interlaces(to_partition(mu), to_partition(nu));
        },
        py::arg("mu"), py::arg("nu"));
    m.def(
        "partitions",
        [](int max_size) {
            std::vector<std::vector<int>> out;
            for (const auto& p : enumerate_partitions(max_size)) out.push_back(p.parts());
            return out;
        },
        py::arg("max_size"));

    m.def(
        "_commutation_check",
        [](const std::vector<std::int64_t>& mu, const std::vector<std::int64_t>& mu1, const std::string& x,
           const std::string& y) {
            const auto r = commutation_check_exact(to_partition(mu), to_partition(mu1), ExactRational::parse(x),
                                                   ExactRational::parse(y));
            py::dict out;
            out["lhs"] = to_py(r.lhs);
            out["rhs"] = to_py(r.rhs);
            out["factor"] = to_py(r.factor);
            out["holds"] = r.holds;
            return out;
        },
        py::arg("mu"), py::arg("mu1"), py::arg("x"), py::arg("y"));

    m.def(
        "gamma_chain_matrix_element",
        [](const std::vector<std::int64_t>& lambda, const std::vector<std::int64_t>& mu,
           const std::vector<std::size_t>& weights, std::size_t order) {
            return to_py(gamma_chain_matrix_element(to_partition(lambda), to_partition(mu), weights, order));
        },
        py::arg("lam"), py::arg("mu"), py::arg("weights"), py::arg("order"));
    m.def(
        "count_skew_ssyt",
        [](const std::vector<std::int64_t>& lambda, const std::vector<std::int64_t>& mu,
           const std::vector<std::size_t>& weights, std::size_t order) {
            return to_py(count_skew_ssyt_weighted(to_partition(lambda), to_partition(mu), weights, order));
        },
        py::arg("lam"), py::arg("mu"), py::arg("weights"), py::arg("order"));
}
