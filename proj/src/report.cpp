#include "reconf/report.hpp"

using nlohmann::json;

namespace reconf {

namespace {

json ids(const VertexSet& s) {
    json out = json::array();
    for (Vertex v : s) out.push_back(v + 1);
    return out;
}

VertexSet read_ids(const json& j, const char* what) {
    if (!j.is_array()) throw DataError(std::string(what) + " must be an array");
    VertexSet out;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 1)
            throw DataError(std::string(what) + " must hold positive vertex ids");
        out.push_back(static_cast<Vertex>(x.get<long long>() - 1));
    }
    return out;
}

Vertex read_id(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw DataError(std::string("missing field ") + key);
    const auto& x = obj.at(key);
    if (!x.is_number_integer() || x.get<long long>() < 1)
        throw DataError(std::string(key) + " must be a positive vertex id");
    return static_cast<Vertex>(x.get<long long>() - 1);
}

const json& field(const json& obj, const char* key) {
    if (!obj.contains(key)) throw DataError(std::string("report is missing field ") + key);
    return obj.at(key);
}

std::uint64_t read_count(const json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        throw DataError(std::string(what) + " must be a nonnegative integer");
    return j.get<std::uint64_t>();
}

}  // namespace

Report make_report(const SearchOutcome& outcome, const Graph& kernel, const ReductionLog& log, double ms) {
    Report r;
    r.answer = outcome.verdict;
    r.sequence = outcome.sequence;
    r.kernel_n = kernel.num_vertices();
    r.kernel_m = kernel.num_edges();
    r.deleted = log.deleted();
    r.log = log;
    r.states_explored = outcome.states_explored;
    r.ms = ms;
    return r;
}

json log_to_json(const ReductionLog& log) {
    json rules = json::array();
    for (const auto& step : log.steps) {
        json cert;
        if (const auto* t = std::get_if<TwinCertificate>(&step.certificate)) {
            cert["survivor"] = t->survivor + 1;
        } else if (const auto* f = std::get_if<SunflowerCertificate>(&step.certificate)) {
            cert["core"] = ids(f->core);
            cert["petal_centers"] = ids(f->petal_centers);
            if (step.rule == Rule::quasi_wide) cert["separator"] = ids(f->separator);
        } else {
            const auto& c = std::get<CoreTwinCertificate>(step.certificate);
            cert["survivor"] = c.survivor + 1;
            cert["shared_core_neighborhood"] = ids(c.shared_core_neighborhood);
        }
        rules.push_back({{"rule", std::string(to_string(step.rule))}, {"vertex", step.deleted + 1}, {"certificate", cert}});
    }
    return rules;
}

ReductionLog log_from_json(const json& j) {
    if (!j.is_array()) throw DataError("rules must be an array");
    ReductionLog log;
    for (const auto& item : j) {
        if (!item.is_object()) throw DataError("rule entry must be an object");
        const auto& name = field(item, "rule");
        if (!name.is_string()) throw DataError("rule name must be a string");
        auto rule = rule_from_string(name.get<std::string>());
        if (!rule) throw DataError("unknown rule " + name.get<std::string>());
        ReductionStep step;
        step.rule = *rule;
        step.deleted = read_id(item, "vertex");
        const auto& cert = field(item, "certificate");
        if (!cert.is_object()) throw DataError("certificate must be an object");
        switch (*rule) {
            case Rule::twin:
                step.certificate = TwinCertificate{read_id(cert, "survivor")};
                break;
            case Rule::sunflower_degenerate:
            case Rule::quasi_wide: {
                SunflowerCertificate f;
                f.core = make_set(read_ids(field(cert, "core"), "core"));
                f.petal_centers = make_set(read_ids(field(cert, "petal_centers"), "petal_centers"));
                if (cert.contains("separator")) f.separator = make_set(read_ids(cert.at("separator"), "separator"));
                step.certificate = std::move(f);
                break;
            }
            case Rule::core_twin:
                step.certificate = CoreTwinCertificate{
                    step.deleted, read_id(cert, "survivor"),
                    make_set(read_ids(field(cert, "shared_core_neighborhood"), "shared_core_neighborhood"))};
                break;
        }
        log.steps.push_back(std::move(step));
    }
    return log;
}

json report_to_json(const Report& r) {
    json j;
    switch (r.answer) {
        case Verdict::yes: j["answer"] = "yes"; break;
        case Verdict::no: j["answer"] = "no"; break;
        case Verdict::exhausted:
            j["answer"] = "unknown";
            j["reason"] = "state budget exceeded";
            break;
    }
    if (r.answer == Verdict::yes && r.sequence) {
        json seq = json::array();
        for (const auto& s : r.sequence->sets) seq.push_back(ids(s));
        j["sequence"] = seq;
    }
    j["kernel"] = {{"n", r.kernel_n}, {"m", r.kernel_m}, {"deleted", ids(r.deleted)}};
    j["rules"] = log_to_json(r.log);
    j["stats"] = {{"states_explored", r.states_explored}, {"ms", r.ms}};
    if (!r.diagnostics.is_null()) j["diagnostics"] = r.diagnostics;
    return j;
}

std::string serialize_report(const Report& r) { return report_to_json(r).dump(2) + "\n"; }

Report parse_report(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DataError(std::string("report is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw DataError("report must be a JSON object");

    Report r;
    const auto& answer = field(j, "answer");
    if (answer == "yes") r.answer = Verdict::yes;
    else if (answer == "no") r.answer = Verdict::no;
    else if (answer == "unknown") r.answer = Verdict::exhausted;
    else throw DataError("answer must be yes, no or unknown");

    if (j.contains("sequence")) {
        if (r.answer != Verdict::yes) throw DataError("sequence present on a non-yes answer");
        const auto& seq = j.at("sequence");
        if (!seq.is_array() || seq.empty()) throw DataError("sequence must be a nonempty array");
        ReconfSequence out;
        // left unsorted on purpose: verify must see duplicates and order as written
        for (const auto& s : seq) out.sets.push_back(read_ids(s, "sequence entry"));
        r.sequence = std::move(out);
    } else if (r.answer == Verdict::yes) {
        throw DataError("yes answer without a sequence");
    }

    const auto& kernel = field(j, "kernel");
    if (!kernel.is_object()) throw DataError("kernel must be an object");
    r.kernel_n = read_count(field(kernel, "n"), "kernel.n");
    r.kernel_m = read_count(field(kernel, "m"), "kernel.m");
    r.deleted = make_set(read_ids(field(kernel, "deleted"), "kernel.deleted"));
    r.log = log_from_json(field(j, "rules"));

    const auto& stats = field(j, "stats");
    if (!stats.is_object()) throw DataError("stats must be an object");
    r.states_explored = read_count(field(stats, "states_explored"), "stats.states_explored");
    if (!field(stats, "ms").is_number()) throw DataError("stats.ms must be a number");
    r.ms = stats.at("ms").get<double>();
    if (j.contains("diagnostics")) r.diagnostics = j.at("diagnostics");
    return r;
}

}  // namespace reconf
