#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "marc/error.hpp"
#include "marc/region.hpp"
#include "marc/sumcap.hpp"
#include "marc/verify.hpp"

namespace py = pybind11;
using namespace marc;

namespace {

Subset subset_from(const std::vector<int>& members, int K) {
    Subset s;
    for (int k : members) {
        if (k < 1 || k > K) throw py::value_error("subset members are 1-based indices in 1..K");
        s = s.with(k - 1);
    }
    return s;
}

std::vector<int> members_of(Subset s) {
    std::vector<int> out;
    for (int k = 0; k < kMaxEnumeratedUsers; ++k)
        if (s.contains(k)) out.push_back(k + 1);
    return out;
}

py::dict outcome_dict(const IntersectionOutcome& o) {
    py::dict d;
    d["max_sum_rate"] = o.max_sum_rate;
    d["argmin_subset"] = members_of(o.argmin_subset);
    d["kind"] = to_string(o.kind);
    d["two_user_case"] = o.two_user_case ? py::cast(to_string(*o.two_user_case)) : py::none();
    d["polymatroid_inputs"] = o.polymatroid_inputs;
    return d;
}

SubsetFunction function_from(const std::vector<double>& values) {
    int K = 0;
    while ((std::size_t{1} << K) < values.size()) ++K;
    if ((std::size_t{1} << K) != values.size()) throw py::value_error("expected 2**K values indexed by subset mask");
    return SubsetFunction(K, values);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Capacity bounds for the degraded Gaussian multiaccess relay channel";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UnsupportedDimension>(m, "UnsupportedDimension", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    py::class_<ChannelConfig>(m, "Channel")
        .def(py::init([](std::vector<double> P, double P_r, double N_r, double N_delta) {
                 return validate({static_cast<int>(P.size()), std::move(P), P_r, N_r, N_delta});
             }),
             py::arg("P"), py::arg("P_r"), py::arg("N_r"), py::arg("N_delta"))
        .def_static("symmetric", &symmetric, py::arg("K"), py::arg("P"), py::arg("P_r"), py::arg("N_r"),
                    py::arg("N_delta"))
        .def_property_readonly("K", &ChannelConfig::K)
        .def_property_readonly("P", [](const ChannelConfig& c) { return std::vector<double>(c.P().begin(), c.P().end()); })
        .def_property_readonly("P_r", &ChannelConfig::P_r)
        .def_property_readonly("N_r", &ChannelConfig::N_r)
        .def_property_readonly("N_delta", &ChannelConfig::N_delta)
        .def_property_readonly("N_d", &ChannelConfig::N_d)
        .def_property_readonly("lam", [](const ChannelConfig& c) {
            return std::vector<double>(c.lambda().begin(), c.lambda().end());
        })
        .def("__repr__", [](const ChannelConfig& c) {
            return "Channel(K=" + std::to_string(c.K()) + ", P_r=" + std::to_string(c.P_r()) + ")";
        });

    m.def("awgn_capacity", &awgn_capacity, py::arg("snr"));

    m.def("outer_bound", [](const ChannelConfig& cfg, std::vector<double> gamma, const std::string& rx,
                            std::vector<int> S) {
        const auto r = rx == "relay" ? Receiver::Relay : Receiver::Destination;
        return outer_bound(cfg, CorrelationVector(std::move(gamma)), r, subset_from(S, cfg.K()));
    }, py::arg("channel"), py::arg("gamma"), py::arg("receiver"), py::arg("S"));

    m.def("df_bound", [](const ChannelConfig& cfg, std::vector<double> alpha, std::vector<double> beta,
                         const std::string& rx, std::vector<int> S) {
        const auto r = rx == "relay" ? Receiver::Relay : Receiver::Destination;
        return df_bound(cfg, DfPowerSplit(std::move(alpha), std::move(beta)), r, subset_from(S, cfg.K()));
    }, py::arg("channel"), py::arg("alpha"), py::arg("beta"), py::arg("receiver"), py::arg("S"));

    m.def("beta_star", [](const ChannelConfig& cfg, std::vector<double> alpha) { return beta_star(cfg, alpha); },
          py::arg("channel"), py::arg("alpha"));

    m.def("solve_equalizer", [](const ChannelConfig& cfg) {
        const auto s = solve_equalizer(cfg);
        py::dict d;
        d["regime"] = to_string(s.regime);
        d["root"] = s.root;
        d["constraint_value"] = s.constraint_value;
        d["sum_rate"] = s.sum_rate;
        return d;
    }, py::arg("channel"));

    m.def("sum_capacity", [](const ChannelConfig& cfg, double resolution) {
        ScanOptions opts;
        opts.resolution = resolution;
        const auto cap = sum_capacity(cfg, opts);
        py::dict d;
        d["value"] = cap.value;
        d["status"] = to_string(cap.status);
        d["regime"] = to_string(cap.solution.regime);
        d["root"] = cap.solution.root;
        if (cap.scan) {
            d["verdict"] = to_string(cap.scan->verdict);
            d["active_count"] = cap.scan->active_count;
            d["samples"] = cap.scan->samples.size();
            py::list feasible, active;
            for (const auto& iv : cap.scan->feasible) feasible.append(py::make_tuple(iv.lo, iv.hi));
            for (const auto& ivs : cap.scan->active_intervals) {
                py::list l;
                for (const auto& iv : ivs) l.append(py::make_tuple(iv.lo, iv.hi));
                active.append(l);
            }
            d["feasible"] = feasible;
            d["active_intervals"] = active;
        }
        return d;
    }, py::arg("channel"), py::arg("resolution") = 1e-3);

    m.def("intersection_max_sum", [](const std::vector<double>& f1, const std::vector<double>& f2) {
        return outcome_dict(intersection_max_sum(function_from(f1), function_from(f2)));
    }, py::arg("f1"), py::arg("f2"), "Set functions as lists of 2**K values indexed by subset mask.");

    m.def("classify_inner", [](const ChannelConfig& cfg, std::vector<double> alpha, std::vector<double> beta) {
        return outcome_dict(classify_inner(cfg, DfPowerSplit(std::move(alpha), std::move(beta))));
    }, py::arg("channel"), py::arg("alpha"), py::arg("beta"));

    m.def("classify_outer", [](const ChannelConfig& cfg, std::vector<double> gamma) {
        return outcome_dict(classify_outer(cfg, CorrelationVector(std::move(gamma))));
    }, py::arg("channel"), py::arg("gamma"));

    m.def("region", [](const ChannelConfig& cfg, const std::string& bound, double step) {
        const auto poly = bound == "outer" ? build_outer_region(cfg, step) : build_df_region(cfg, step);
        std::vector<std::pair<double, double>> out;
        for (const auto& p : to_points(poly)) out.emplace_back(p[0], p[1]);
        return out;
    }, py::arg("channel"), py::arg("bound") = "inner", py::arg("step") = 0.02,
       py::call_guard<py::gil_scoped_release>());

    m.def("grid_maxmin", [](const ChannelConfig& cfg, double step) {
        const auto g = grid_maxmin(cfg, step);
        return py::make_tuple(g.value, std::vector<double>(g.argmax.values().begin(), g.argmax.values().end()));
    }, py::arg("channel"), py::arg("step") = 0.01);

    m.def("mc_conditional_variance", [](const ChannelConfig& cfg, std::vector<double> gamma, std::vector<int> S,
                                        const std::string& identity, std::size_t n, std::uint64_t seed) {
        const auto id = identity == "relay" ? McIdentity::RelayGivenComplement
                                            : McIdentity::SourcesGivenRelayAndComplement;
        const auto r = mc_conditional_variance(cfg, CorrelationVector(std::move(gamma)), subset_from(S, cfg.K()),
                                               id, n, seed);
        py::dict d;
        d["estimate"] = r.estimate;
        d["std_error"] = r.std_error;
        d["target"] = r.target;
        d["z_score"] = r.z_score;
        d["degenerate"] = r.degenerate;
        return d;
    }, py::arg("channel"), py::arg("gamma"), py::arg("S"), py::arg("identity") = "relay",
       py::arg("n") = 100000, py::arg("seed") = 1);
}
