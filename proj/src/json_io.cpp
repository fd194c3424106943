#include "modulilog/json_io.hpp"

namespace modulilog {

OrderedJson complex_json(std::complex<double> v) {
    return OrderedJson{{"re", v.real()}, {"im", v.imag()}};
}

std::complex<double> complex_from_json(const nlohmann::json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_object() && j.contains("re"))
        return {j.at("re").get<double>(), j.value("im", 0.0)};
    fail("precondition", "complex value must be a number or an {re, im} object");
}

OrderedJson partition_json(const StablePartition& p) {
    OrderedJson part = OrderedJson::array();
    for (Mark m : p.part_marks()) part.push_back(m.name());
    return OrderedJson{{"n", p.host().n()}, {"part", std::move(part)}};
}

StablePartition partition_from_json(const nlohmann::json& j) {
    const MarkedSet host(j.at("n").get<int>());
    std::vector<Mark> marks;
    for (const auto& name : j.at("part"))
        marks.push_back(Mark::parse(name.get<std::string>()));
    return StablePartition::from_marks(host, marks);
}

OrderedJson face_json(const Face& f) {
    OrderedJson members = OrderedJson::array();
    for (const auto& m : f.family().members()) members.push_back(partition_json(m));
    return OrderedJson{
        {"n", f.host().n()}, {"codim", f.codim()}, {"members", std::move(members)}};
}

Face face_from_json(const nlohmann::json& j) {
    const MarkedSet host(j.at("n").get<int>());
    std::vector<StablePartition> members;
    for (const auto& mj : j.at("members")) members.push_back(partition_from_json(mj));
    return Face{GoodFamily(host, std::move(members))};
}

OrderedJson locus_json(const SingularLocus& locus) {
    OrderedJson boundary = OrderedJson::array();
    for (const auto& b : locus.boundary)
        boundary.push_back(OrderedJson{{"partition", partition_json(b.partition)},
                                       {"type", to_string(b.type)}});
    OrderedJson fibers = OrderedJson::array();
    for (const auto& f : locus.nonboundary)
        fibers.push_back(OrderedJson{{"index", f.index}, {"value", complex_json(f.value)}});
    return OrderedJson{{"boundary_components", std::move(boundary)},
                       {"nonboundary", std::move(fibers)}};
}

OrderedJson avoidance_json(const AvoidanceReport& report) {
    OrderedJson a = OrderedJson::array();
    for (const auto& v : report.a.values) a.push_back(complex_json(v));
    const OrderedJson locus = locus_json(report.locus);
    OrderedJson violations = OrderedJson::array();
    for (const auto& v : report.violations) {
        OrderedJson item{{"face", face_json(v.face)}};
        if (v.boundary_hit) {
            item["kind"] = "boundary";
            item["partition"] = partition_json(v.boundary_hit->partition);
            item["type"] = to_string(v.boundary_hit->type);
        } else if (v.fiber_hit) {
            item["kind"] = "fiber";
            item["index"] = v.fiber_hit->index;
            item["value"] = complex_json(v.fiber_hit->value);
        }
        violations.push_back(std::move(item));
    }
    return OrderedJson{{"n", report.n},
                       {"a", std::move(a)},
                       {"flags_ok", report.flags_ok},
                       {"boundary_components", locus.at("boundary_components")},
                       {"nonboundary", locus.at("nonboundary")},
                       {"faces_checked", report.faces_checked},
                       {"violations", std::move(violations)}};
}

OrderedJson series_json(const SeriesResult& r) {
    return OrderedJson{{"value", complex_json(r.value)},
                       {"est_error", r.tail_bound},
                       {"terms_or_panels", r.terms}};
}

OrderedJson quadrature_json(const QuadratureResult& r) {
    return OrderedJson{{"value", complex_json(r.value)},
                       {"est_error", r.est_error},
                       {"terms_or_panels", r.panels}};
}

OrderedJson homotopy_json(const HomotopyReport& r) {
    return OrderedJson{{"agree", r.agree},
                       {"delta", complex_json(r.delta)},
                       {"first", quadrature_json(r.first)},
                       {"second", quadrature_json(r.second)}};
}

OrderedJson period_matrix_json(const PeriodMatrix& m) {
    OrderedJson entries = OrderedJson::array();
    OrderedJson errors = OrderedJson::array();
    for (int i = 0; i < m.size; ++i) {
        OrderedJson row = OrderedJson::array();
        OrderedJson erow = OrderedJson::array();
        for (int j = 0; j < m.size; ++j) {
            row.push_back(complex_json(m.entries[i][j]));
            erow.push_back(m.est_errors[i][j]);
        }
        entries.push_back(std::move(row));
        errors.push_back(std::move(erow));
    }
    return OrderedJson{{"z", complex_json(m.z)},
                       {"size", m.size},
                       {"rows", m.row_labels()},
                       {"cols", m.col_labels()},
                       {"entries", std::move(entries)},
                       {"est_errors", std::move(errors)},
                       {"determinant", complex_json(m.determinant())}};
}

OrderedJson degeneration_json(const DegenerationReport& r) {
    OrderedJson samples = OrderedJson::array();
    for (const auto& s : r.samples)
        samples.push_back(
            OrderedJson{{"z", complex_json(s.z)}, {"matrix", period_matrix_json(s.matrix)}});
    return OrderedJson{{"samples", std::move(samples)},
                       {"limit", period_matrix_json(r.limit)}};
}

} // namespace modulilog
