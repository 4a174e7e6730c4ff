#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tweight/charsums.hpp"
#include "tweight/codes.hpp"
#include "tweight/constructions.hpp"
#include "tweight/designs.hpp"
#include "tweight/field.hpp"
#include "tweight/io.hpp"

namespace py = pybind11;
using namespace tweight;

namespace {

py::int_ to_py(const BigInt& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list counts_to_py(const std::vector<BigInt>& counts) {
    py::list out;
    for (const BigInt& c : counts) out.append(to_py(c));
    return out;
}

py::object rat_to_py(const BigRat& v) {
    py::object fractions = py::module_::import("fractions");
    return fractions.attr("Fraction")(to_py(boost::multiprecision::numerator(v)),
                                      to_py(boost::multiprecision::denominator(v)));
}

std::vector<BitRow> rows_from_py(int n, const std::vector<py::int_>& rows) {
    std::vector<BitRow> out;
    out.reserve(rows.size());
    for (const py::int_& value : rows) {
        BitRow r(n);
        py::int_ v = value;
        for (int j = 0; j < n; ++j) {
            if ((v & py::int_(1)).cast<int>()) r.set(j, true);
            v = py::reinterpret_steal<py::int_>(PyNumber_Rshift(v.ptr(), py::int_(1).ptr()));
        }
        out.push_back(std::move(r));
    }
    return out;
}

py::int_ row_to_py(const BitRow& r) {
    py::int_ v(0);
    for (int j = r.size() - 1; j >= 0; --j) {
        v = py::reinterpret_steal<py::int_>(PyNumber_Lshift(v.ptr(), py::int_(1).ptr()));
        if (r.get(j)) v = py::reinterpret_steal<py::int_>(PyNumber_Or(v.ptr(), py::int_(1).ptr()));
    }
    return v;
}

py::dict verdict_to_py(const DesignVerdict& v) {
    py::dict d;
    const char* status = v.status == DesignStatus::Confirmed  ? "confirmed"
                         : v.status == DesignStatus::Refuted ? "refuted"
                                                              : "degenerate";
    d["status"] = status;
    d["is_design"] = v.is_design;
    if (v.is_design) {
        d["lambda"] = v.lambda;
        d["identity_ok"] = v.identity_ok;
    }
    if (!v.witness.empty()) {
        d["witness"] = v.witness;
        d["witness_count"] = v.witness_count;
    }
    if (!v.note.empty()) d["note"] = v.note;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "binary few-weight codes, weight distributions, and 2-design verification";

    py::class_<FieldContext>(m, "Field")
        .def(py::init<int, std::uint32_t>(), py::arg("m"), py::arg("modulus") = 0)
        .def_property_readonly("m", &FieldContext::m)
        .def_property_readonly("q", &FieldContext::q)
        .def_property_readonly("modulus", &FieldContext::modulus)
        .def("add", &FieldContext::add)
        .def("mul", &FieldContext::mul)
        .def("inv", &FieldContext::inv)
        .def("pow", &FieldContext::pow)
        .def("abs_trace", &FieldContext::abs_trace)
        .def("rel_trace", &FieldContext::rel_trace)
        .def("elements", &FieldContext::enumerate_elements)
        .def_property_readonly("generator", &FieldContext::generator)
        .def("__repr__", [](const FieldContext& ctx) {
            return "Field(m=" + std::to_string(ctx.m()) + ", modulus=0x" +
                   [&] { std::ostringstream os; os << std::hex << ctx.modulus(); return os.str(); }() + ")";
        });

    py::class_<LinearCode>(m, "LinearCode")
        .def(py::init([](int n, const std::vector<py::int_>& rows) {
                 return LinearCode(n, rows_from_py(n, rows));
             }),
             py::arg("n"), py::arg("rows"))
        .def_property_readonly("n", &LinearCode::length)
        .def_property_readonly("k", &LinearCode::dimension)
        .def_property_readonly("provenance", &LinearCode::provenance)
        .def("rows", [](const LinearCode& c) {
            py::list out;
            for (const BitRow& r : c.rows()) out.append(row_to_py(r));
            return out;
        })
        .def("weight_distribution",
             [](const LinearCode& c) { return counts_to_py(c.weight_distribution().counts); })
        .def("nonzero_weights",
             [](const LinearCode& c) { return c.weight_distribution().nonzero_weights(); })
        .def("min_distance", [](const LinearCode& c) { return min_distance(c); })
        .def("__repr__", [](const LinearCode& c) {
            return "LinearCode(n=" + std::to_string(c.length()) + ", k=" + std::to_string(c.dimension()) + ")";
        });

    m.def("weil_sum_direct", &weil_sum_direct, py::arg("field"), py::arg("u"), py::arg("a"), py::arg("b"));
    m.def("weil_sum_closed", [](const FieldContext& ctx, int u, FieldElement a, FieldElement b) {
        const WeilSumResult r = weil_sum_closed(ctx, u, a, b);
        py::dict d;
        d["value"] = r.value;
        const char* kind = r.kind == PredictionKind::NotApplicable ? "not-applicable"
                           : r.kind == PredictionKind::Zero       ? "zero"
                           : r.kind == PredictionKind::Exact      ? "exact"
                                                                  : "plus-minus";
        d["kind"] = kind;
        d["predicted"] = r.predicted;
        d["agrees"] = r.agrees;
        return d;
    });
    m.def("jacobi_sign", &jacobi_sign, py::arg("m"), py::arg("e"));

    m.def("macwilliams_dual", [](int n, int k, const std::vector<std::string>& counts) {
        WeightDistribution w;
        w.n = n;
        w.k = k;
        for (const auto& c : counts) w.counts.emplace_back(c);
        if (static_cast<int>(w.counts.size()) != n + 1)
            throw std::invalid_argument("counts must have n+1 entries");
        return counts_to_py(macwilliams_dual(w).counts);
    }, py::arg("n"), py::arg("k"), py::arg("counts"),
       "Dual weight distribution from counts given as decimal strings.");

    m.def("dual_code", &dual_code);
    m.def("is_projective", [](const LinearCode& c) {
        const DualSummary s = is_projective(c);
        py::dict d;
        d["projective"] = s.projective;
        d["dual_counts"] = counts_to_py(s.dual_counts);
        if (s.dual_min_distance)
            d["dual_min_distance"] = *s.dual_min_distance;
        else
            d["dual_min_distance"] = py::none();
        return d;
    });
    m.def("pless_check", [](const LinearCode& c) {
        const PlessVerdict v = pless_check(c.weight_distribution(), is_projective(c));
        py::dict d;
        d["pass"] = v.pass;
        d["failed_moment"] = v.failed_moment;
        return d;
    });
    m.def("three_weight_profile", [](const LinearCode& c) {
        const ThreeWeightProfile p = three_weight_profile(c);
        py::dict d;
        d["hypotheses_ok"] = p.hypotheses_ok;
        d["failed_hypothesis"] = p.failed_hypothesis;
        d["weights"] = py::make_tuple(p.w1, p.w2, p.w3);
        d["weights_match"] = p.weights_match;
        d["enumerator_match"] = p.enumerator_match;
        d["dual_counts_match"] = p.dual_counts_match;
        d["all_match"] = p.all_match();
        return d;
    });

    m.def("d_rho_code", [](int m, int u, int rho, std::uint32_t modulus) {
        const FieldContext ctx(m, modulus);
        return defining_set_code(d_rho_set(ctx, u, rho));
    }, py::arg("m"), py::arg("u"), py::arg("rho"), py::arg("modulus") = 0);
    m.def("d_rho_set", [](int m, int u, int rho, std::uint32_t modulus) {
        const FieldContext ctx(m, modulus);
        return d_rho_set(ctx, u, rho).elements;
    }, py::arg("m"), py::arg("u"), py::arg("rho"), py::arg("modulus") = 0);
    m.def("extend_code", &extend_code);
    m.def("etw_gate", [](const LinearCode& c) {
        const ExtensionGate g = etw_gate(c);
        py::dict d;
        d["input_projective"] = g.input_projective;
        d["input_two_weight"] = g.input_two_weight;
        d["input_complementary"] = g.input_complementary;
        d["pass"] = g.pass;
        d["ok"] = g.ok();
        if (g.extended) d["extended"] = *g.extended;
        return d;
    });
    m.def("quadric_two_weight", [](int k, const std::string& variant, std::uint32_t modulus) {
        const QuadricVariant v =
            variant == "elliptic" ? QuadricVariant::Elliptic : QuadricVariant::Hyperbolic;
        const TwoWeightReport rep = v == QuadricVariant::Elliptic
                                        ? quadric_two_weight(FieldContext(k), v, modulus)
                                        : quadric_two_weight(FieldContext(k, modulus), v);
        py::dict d;
        d["code"] = rep.code;
        d["observed_weights"] = rep.observed_weights;
        d["predicted_weights"] = rep.predicted_weights;
        d["two_weight"] = rep.two_weight;
        d["projective"] = rep.projective;
        d["complementary"] = rep.complementary;
        d["gate_ready"] = rep.gate_ready();
        return d;
    }, py::arg("k"), py::arg("variant"), py::arg("modulus") = 0);

    m.def("support_blocks", [](const LinearCode& c, int w) { return support_blocks(c, w).blocks; });
    m.def("verify_t_design", [](int v, const std::vector<std::vector<int>>& blocks, int t) {
        Design d;
        d.v = v;
        d.blocks = blocks;
        d.r = blocks.empty() ? 0 : static_cast<int>(blocks[0].size());
        return verdict_to_py(verify_t_design(d, t));
    }, py::arg("v"), py::arg("blocks"), py::arg("t") = 2);
    m.def("predicted_lambda", [](int n, int k, int w) {
        return rat_to_py(predicted_lambda(n, k, w).value);
    });
    m.def("predicted_dual_lambda", [](int n, int k, int d, int r) {
        return rat_to_py(predicted_dual_lambda(n, k, d, r).value);
    });
    m.def("assmus_mattson_gate", [](const LinearCode& c, int t) {
        const AssmusMattsonVerdict v = assmus_mattson_gate(c, t);
        py::dict d;
        d["s"] = v.s;
        d["d"] = v.d;
        d["pass"] = v.pass;
        d["certified_code_weights"] = v.certified_code_weights;
        d["certified_dual_weights"] = v.certified_dual_weights;
        return d;
    }, py::arg("code"), py::arg("t") = 2);
    m.def("dual_design_verify", [](const LinearCode& c, int r) {
        const DualDesignResult res = dual_design_verify(c, r);
        py::dict d;
        d["weight"] = res.weight;
        d["enumerated"] = res.enumerated;
        d["block_count"] = res.block_count;
        if (res.prediction_available) d["lambda_predicted"] = rat_to_py(res.lambda_predicted.value);
        if (res.verdict) d["verdict"] = verdict_to_py(*res.verdict);
        d["matches_prediction"] = res.matches_prediction;
        if (!res.note.empty()) d["note"] = res.note;
        return d;
    });

    m.def("code_to_json", &code_to_json);
    m.def("code_from_json", &code_from_json);

    m.attr("__version__") = "0.1.0";
}
