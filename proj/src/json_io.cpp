#include "arrival/json_io.hpp"

#include <json.hpp>

#include "arrival/errors.hpp"
#include "json_util.hpp"

namespace arrival {

using nlohmann::ordered_json;

namespace {

ordered_json flow_json(Vertex origin, Vertex dest, const FlowVector& flow) {
    ordered_json doc;
    doc["origin"] = origin;
    doc["dest"] = dest;
    doc["counts"] = flow.counts();
    return doc;
}

FlowDocument flow_from(const ordered_json& doc) {
    FlowDocument out;
    out.origin = detail::get_vertex(doc, "origin");
    out.dest = detail::get_vertex(doc, "dest");
    const auto& arr = doc.at("counts");
    if (!arr.is_array() || arr.size() % 2 != 0) {
        throw ParseError("/counts: expected an array with two entries per vertex");
    }
    std::vector<std::uint64_t> counts;
    counts.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        counts.push_back(detail::as_uint(arr[i], "/counts/" + std::to_string(i)));
    }
    out.flow = FlowVector(std::move(counts));
    return out;
}

ordered_json slot_json(EdgeSlot s) {
    ordered_json j;
    j["vertex"] = s.tail;
    j["parity"] = to_string(s.parity);
    return j;
}

}  // namespace

FlowDocument parse_flow(std::string_view text) {
    const ordered_json doc = detail::parse_json_document(text, "flow");
    detail::require_fields(doc, "flow", {"origin", "dest", "counts"}, {"kind"});
    return flow_from(doc);
}

std::string serialize_flow(const FlowDocument& doc) {
    return flow_json(doc.origin, doc.dest, doc.flow).dump();
}

std::string serialize_certificate(const Certificate& cert) {
    ordered_json doc = flow_json(cert.origin, cert.dest, cert.flow);
    doc["kind"] = to_string(cert.kind);
    return doc.dump();
}

Certificate parse_certificate(std::string_view text) {
    const ordered_json doc = detail::parse_json_document(text, "certificate");
    detail::require_fields(doc, "certificate", {"origin", "dest", "counts", "kind"});
    FlowDocument flow = flow_from(doc);
    Certificate cert;
    const auto& kind = doc["kind"];
    if (kind == "termination") {
        cert.kind = CertificateKind::Termination;
    } else if (kind == "non-termination") {
        cert.kind = CertificateKind::NonTermination;
    } else {
        throw ParseError("/kind: expected \"termination\" or \"non-termination\"");
    }
    cert.origin = flow.origin;
    cert.dest = flow.dest;
    cert.flow = std::move(flow.flow);
    return cert;
}

std::string serialize_sidecar(const AugmentedInstance& aug) {
    ordered_json doc;
    doc["o_bar"] = aug.o_bar;
    doc["d_bar"] = aug.d_bar;
    doc["x_d"] = aug.x_d;
    return doc.dump();
}

std::string serialize_run_outcome(const RunOutcome& outcome) {
    ordered_json doc;
    doc["verdict"] = to_string(outcome.verdict);
    doc["steps"] = outcome.steps;
    doc["final_vertex"] = outcome.final_vertex;
    doc["profile"] = outcome.profile.counts();
    if (outcome.cycle) {
        ordered_json w;
        w["vertex"] = outcome.cycle->vertex;
        w["config"] = outcome.cycle->config.to_string();
        w["first_step"] = outcome.cycle->first_step;
        w["second_step"] = outcome.cycle->second_step;
        doc["cycle_witness"] = w;
    }
    return doc.dump();
}

std::string serialize_flow_report(const FlowCheckReport& report) {
    ordered_json doc;
    doc["valid"] = report.valid;
    doc["conservation_violations"] = ordered_json::array();
    for (const auto& v : report.conservation_violations) {
        ordered_json j;
        j["vertex"] = v.vertex;
        j["found"] = v.found;
        j["required"] = v.required;
        doc["conservation_violations"].push_back(j);
    }
    doc["parity_violations"] = ordered_json::array();
    for (const auto& v : report.parity_violations) {
        ordered_json j;
        j["vertex"] = v.vertex;
        j["x_even"] = v.x_even;
        j["x_odd"] = v.x_odd;
        doc["parity_violations"].push_back(j);
    }
    return doc.dump();
}

std::string serialize_bounds_report(const BoundsReport& report) {
    auto list = [](const std::vector<BoundViolation>& items) {
        ordered_json arr = ordered_json::array();
        for (const auto& b : items) {
            ordered_json j;
            j["bound"] = to_string(b.kind);
            j["slot"] = slot_json(b.slot);
            j["value"] = b.value;
            j["limit"] = b.limit;
            arr.push_back(j);
        }
        return arr;
    };
    ordered_json doc;
    doc["ok"] = report.ok;
    doc["slots_checked"] = report.slots_checked;
    doc["violations"] = list(report.violations);
    doc["flags"] = list(report.flags);
    return doc.dump();
}

std::string serialize_state(const SearchState& state) {
    ordered_json doc;
    doc["vertex"] = state.vertex;
    doc["counts"] = state.flow.counts();
    return doc.dump();
}

}  // namespace arrival
