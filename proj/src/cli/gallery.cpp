#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <set>

#include "commands.hpp"
#include "hbcnp/cli.hpp"
#include "hbcnp/error.hpp"

namespace hbcnp::cli {

namespace {

struct Entry {
    std::string name;
    json b;
    json witness;  // null, "closed-form", or a series literal
    json samples;
    json base;
    std::size_t order = kDefaultOrder;
    std::string expect_cnp;
    std::string expect_criterion;
};

std::vector<std::string> missing_fields(const json& e) {
    std::vector<std::string> missing;
    if (!e.is_object()) return {"<entry is not an object>"};
    if (!e.contains("name") || !e["name"].is_string()) missing.emplace_back("name");
    if (!e.contains("b")) missing.emplace_back("b");
    const bool has_expected = e.contains("expected") && e["expected"].is_object();
    if (!has_expected || !e["expected"].contains("cnp") || !e["expected"]["cnp"].is_string()) {
        missing.emplace_back("expected.cnp");
    }
    if (!has_expected || !e["expected"].contains("criterion") || !e["expected"]["criterion"].is_string()) {
        missing.emplace_back("expected.criterion");
    }
    return missing;
}

Entry to_entry(const json& e) {
    Entry out;
    out.name = e["name"].get<std::string>();
    out.b = e["b"];
    out.witness = e.value("witness", json(nullptr));
    out.samples = e.value("samples", json::object());
    out.base = e.value("base", json(0.0));
    if (e.contains("order")) {
        if (!e["order"].is_number_integer() || e["order"].get<long long>() <= 0) {
            throw Error(ErrorCode::Parse, out.name + ": order must be a positive integer");
        }
        out.order = e["order"].get<std::size_t>();
    }
    out.expect_cnp = e["expected"]["cnp"].get<std::string>();
    out.expect_criterion = e["expected"]["criterion"].get<std::string>();
    return out;
}

json run_entry(const Entry& e) {
    json row{{"name", e.name}, {"expected", {{"cnp", e.expect_cnp}, {"criterion", e.expect_criterion}}}};
    std::string seen_cnp;
    std::string seen_criterion;
    try {
        const SymbolSpec spec = symbol_from_json(e.b);
        const PowerSeries b = build_symbol(spec, e.order);
        const SampleSet pts = samples_from_json(e.samples);
        const CertReport cert = cnp_certify(dbr_kernel(b), point_from_json(e.base), pts);

        std::optional<ExtensionWitness> witness;
        if (e.witness.is_string() && e.witness.get<std::string>() == "closed-form") {
            auto q = closed_form_witness(spec, e.order);
            if (!q) throw Error(ErrorCode::InvalidArgument, "no closed-form witness for " + spec.describe());
            witness = ExtensionWitness{*q};
        } else if (!e.witness.is_null()) {
            witness = ExtensionWitness{series_from_json(e.witness).resized(e.order)};
        }
        const CriterionReport crit = evaluate_criterion(b, witness, pts);

        seen_cnp = to_string(cert.verdict.status);
        seen_criterion = to_string(crit.overall);
        row["b"] = symbol_to_json(spec);
        row["cnp"] = to_json(cert);
        row["criterion"] = to_json(crit);
    } catch (const Error& err) {
        seen_cnp = seen_criterion = "ERROR";
        row["error"] = err.what();
    }
    row["observed"] = {{"cnp", seen_cnp}, {"criterion", seen_criterion}};
    row["match"] = seen_cnp == e.expect_cnp && seen_criterion == e.expect_criterion;
    return row;
}

}  // namespace

int cmd_gallery(const GalleryArgs& a, std::ostream& out, std::ostream& err) {
    const auto t0 = std::chrono::steady_clock::now();
    const json suite = load_json_arg(a.suite);
    const json* list = &suite;
    if (suite.is_object()) {
        if (!suite.contains("entries")) throw Error(ErrorCode::Parse, "suite object needs an \"entries\" array");
        list = &suite["entries"];
    }
    if (!list->is_array()) throw Error(ErrorCode::Parse, "suite entries must be an array");

    std::vector<Entry> entries;
    std::set<std::string> names;
    bool bad = false;
    for (std::size_t i = 0; i < list->size(); ++i) {
        const json& e = (*list)[i];
        const auto missing = missing_fields(e);
        const std::string label = e.is_object() && e.contains("name") && e["name"].is_string()
                                      ? e["name"].get<std::string>()
                                      : "#" + std::to_string(i);
        if (!missing.empty()) {
            bad = true;
            err << "gallery: entry " << label << " is missing";
            for (const auto& m : missing) err << ' ' << m;
            err << '\n';
            continue;
        }
        if (!names.insert(label).second) {
            bad = true;
            err << "gallery: duplicate entry name " << label << '\n';
            continue;
        }
        entries.push_back(to_entry(e));
    }
    if (bad) return kInputError;

    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.name < y.name; });
    json rows = json::array();
    std::size_t matched = 0;
    for (const auto& e : entries) {
        json row = run_entry(e);
        if (row["match"].get<bool>()) {
            ++matched;
        } else {
            err << "gallery: mismatch in " << e.name << ": expected cnp " << e.expect_cnp << " criterion "
                << e.expect_criterion << ", observed cnp " << row["observed"]["cnp"].get<std::string>()
                << " criterion " << row["observed"]["criterion"].get<std::string>() << '\n';
        }
        rows.push_back(std::move(row));
    }

    json report = report_header("gallery", *list);
    report["suite"] = a.suite;
    report["entries"] = rows;
    report["summary"] = {{"total", entries.size()}, {"matched", matched}};
    report["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(report, out, a.json_path);
    return matched == entries.size() ? kPositive : kNegative;
}

}  // namespace hbcnp::cli
