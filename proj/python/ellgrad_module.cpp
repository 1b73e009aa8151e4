#include "ellgrad/reports.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

using namespace ellgrad;

py::object json_to_py(const json& j)
{
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long long>());
        case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

TargetDecomposition decomp(int n, const std::string& lambda)
{
    return TargetDecomposition(DominantWeight::parse(n, lambda));
}

IndexSet as_index_set(const std::vector<int>& raw)
{
    IndexSet I = raw;
    std::sort(I.begin(), I.end());
    I.erase(std::unique(I.begin(), I.end()), I.end());
    return I;
}

}  // namespace

PYBIND11_MODULE(ellgrad, m)
{
    m.doc() = "exact ellipticity classification and refined Kato constants for sums of "
              "generalized gradients on so(n)-bundles";

    m.def("targets", [](int n, const std::string& lambda) { return json_to_py(targets_report(decomp(n, lambda))); },
          py::arg("n"), py::arg("lam"),
          "relevant weights with translated conformal weights, indices, and boxes");

    m.def("classify",
          [](int n, const std::string& lambda) { return json_to_py(classify_report(decomp(n, lambda))); },
          py::arg("n"), py::arg("lam"),
          "minimal elliptic and maximal non-elliptic index sets");

    m.def("kato",
          [](int n, const std::string& lambda, const std::vector<int>& I) {
              return json_to_py(kato_report(decomp(n, lambda), as_index_set(I)));
          },
          py::arg("n"), py::arg("lam"), py::arg("I"),
          "closed-form Kato constant bound c^2 for P_I (exact rational string)");

    m.def("vertices",
          [](int n, const std::string& lambda, int cap) {
              return json_to_py(vertices_report(decomp(n, lambda), cap));
          },
          py::arg("n"), py::arg("lam"), py::arg("vertex_cap") = 6,
          "inequality system and exact vertex enumeration of the Kato polytope");

    m.def("certify",
          [](int n, const std::string& lambda, const std::optional<std::vector<std::string>>& J) {
              std::optional<std::vector<RelevantWeight>> weights;
              if (J) {
                  std::vector<RelevantWeight> ws;
                  for (const auto& name : *J) ws.push_back(parse_weight_name(name));
                  weights = std::move(ws);
              }
              return json_to_py(certify_report(decomp(n, lambda), weights));
          },
          py::arg("n"), py::arg("lam"), py::arg("J") = py::none(),
          "branching-rule non-ellipticity certificates for NE members");

    m.def("is_elliptic",
          [](int n, const std::string& lambda, const std::vector<int>& I) {
              return json_to_py(verdict_report(decomp(n, lambda), as_index_set(I)));
          },
          py::arg("n"), py::arg("lam"), py::arg("I"),
          "ellipticity verdict for P_I with provenance and cross-check flags");

    m.def("relevant_weights",
          [](int n, const std::string& lambda) {
              std::vector<std::string> out;
              for (const auto& w : relevant_weights(DominantWeight::parse(n, lambda)))
                  out.push_back(w.name());
              return out;
          },
          py::arg("n"), py::arg("lam"), "relevant weights in canonical order");

    m.def("branch",
          [](int n, const std::string& lambda) {
              std::vector<std::string> out;
              for (const auto& g : branch(DominantWeight::parse(n, lambda))) out.push_back(g.to_string());
              return out;
          },
          py::arg("n"), py::arg("lam"), "so(n) -> so(n-1) branching (multiplicity-free)");

    m.def("weyl_dim",
          [](int n, const std::string& lambda) { return weyl_dim(DominantWeight::parse(n, lambda)); },
          py::arg("n"), py::arg("lam"), "dimension of the irreducible so(n)-representation");

    m.def("verify",
          [](int n, const std::string& lambda, bool oracle, bool all_subsets, int dim_cap) {
              VerifyOptions opts;
              opts.oracle = oracle;
              opts.all_subsets = all_subsets;
              opts.dim_cap = dim_cap;
              return json_to_py(
                  verification_report(verify_lambda(DominantWeight::parse(n, lambda), opts)));
          },
          py::arg("n"), py::arg("lam"), py::arg("oracle") = false, py::arg("all_subsets") = false,
          py::arg("dim_cap") = 2000, "cross-module verification for one highest weight");

    m.def("verify_sweep",
          [](const std::string& spec, bool oracle) {
              const SweepConfig cfg = parse_sweep_spec(spec);
              VerifyOptions opts;
              opts.oracle = oracle;
              return json_to_py(sweep_report(verify_sweep(cfg, opts), cfg));
          },
          py::arg("spec"), py::arg("oracle") = false,
          "verification over the dominant-weight sweep, e.g. spec='n<=7,l1<=3'");
}
