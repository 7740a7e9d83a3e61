#include "nvk/io.hpp"

namespace nvk {

namespace {

Rational rational_from_json(const Json& j, bool* saw_float) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number_float()) {
        if (saw_float) *saw_float = true;
        return Rational::from_double(j.get<double>());
    }
    if (j.is_string()) {
        try {
            return Rational::parse(j.get<std::string>());
        } catch (const std::exception& ex) {
            throw ParseError(std::string("bad rational: ") + ex.what());
        }
    }
    throw ParseError("expected a number or rational string");
}

Json rational_to_json(const Rational& r) { return r.decimal_str(); }

NovikovScalar scalar_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("scalar entries must be strings");
    try {
        return NovikovScalar::parse(j.get<std::string>());
    } catch (const std::exception& ex) {
        throw ParseError(std::string("bad scalar: ") + ex.what());
    }
}

int orbit_ref(const FilteredComplex& c, const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be an orbit label");
    auto id = c.orbit_id(j.get<std::string>());
    if (!id) throw ParseError(std::string("unknown orbit label '") + j.get<std::string>() + "'");
    return *id;
}

Json action_to_json(const Action& a) { return a.is_infinite() ? Json("inf") : Json(a.value().decimal_str()); }

Json arrow_to_json(const FloerGraph& g, const Arrow& a) {
    Json out;
    out["from"] = g.vertices[static_cast<std::size_t>(a.source)];
    out["to"] = g.vertices[static_cast<std::size_t>(a.target)];
    out["recap"] = a.recap;
    out["length"] = rational_to_json(a.length);
    if (a.h_power) out["hpow"] = *a.h_power;
    return out;
}

Json axiom_check_to_json(const AxiomCheck& check) {
    Json out;
    out["status"] = check.skipped ? "skipped" : (check.pass ? "pass" : "fail");
    out["failures"] = check.failures;
    return out;
}

}  // namespace

FilteredComplex complex_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("complex file must be a JSON object");
    FilteredComplex c;
    bool saw_float = false;
    const Json& params = j.at("params");
    c.params.N = params.at("N").get<int>();
    c.params.lambda0 = rational_from_json(params.at("lambda0"), &saw_float);
    c.params.n = params.at("n").get<int>();
    if (c.params.N < 1) throw ParseError("params.N must be >= 1");
    if (c.params.lambda0.sign() <= 0) throw ParseError("params.lambda0 must be positive");

    for (const Json& o : j.at("orbits")) {
        OrbitClass orbit;
        orbit.label = o.at("label").get<std::string>();
        orbit.action = rational_from_json(o.at("action"), &saw_float);
        orbit.index = o.value("index", std::int64_t{0});
        c.orbits.push_back(std::move(orbit));
    }
    c.rebuild_index();
    if (static_cast<int>(j.at("orbits").size()) != c.orbit_count())
        throw ParseError("duplicate orbit labels");

    c.graded = j.value("graded", true);
    if (j.contains("strictAction")) c.strict_action = j.at("strictAction").get<bool>();
    for (const Json& entry : j.value("differential", Json::array())) {
        int from = orbit_ref(c, entry.at("from"), "differential.from");
        int to = orbit_ref(c, entry.at("to"), "differential.to");
        NovikovScalar value = scalar_from_json(entry.at("entry"));
        c.set_entry(from, to, c.entry(from, to) + value);
    }
    c.actions_from_float = saw_float;
    return c;
}

Json complex_to_json(const FilteredComplex& c) {
    Json j;
    j["params"] = {{"N", c.params.N}, {"lambda0", rational_to_json(c.params.lambda0)}, {"n", c.params.n}};
    j["orbits"] = Json::array();
    for (const auto& o : c.orbits)
        j["orbits"].push_back(
            {{"label", o.label}, {"action", rational_to_json(o.action)}, {"index", o.index}});
    j["differential"] = Json::array();
    for (const auto& [key, value] : c.entries())
        j["differential"].push_back({{"from", c.orbit(key.first).label},
                                     {"to", c.orbit(key.second).label},
                                     {"entry", value.str()}});
    j["graded"] = c.graded;
    if (!c.strict_action) j["strictAction"] = false;
    return j;
}

EquivariantComplex equivariant_from_json(const Json& j) {
    EquivariantComplex e;
    e.base = complex_from_json(j);
    for (const Json& corr : j.value("corrections", Json::array())) {
        int k = corr.at("k").get<int>();
        if (k < 1) throw ParseError("correction order k must be >= 1");
        int from = orbit_ref(e.base, corr.at("from"), "corrections.from");
        int to = orbit_ref(e.base, corr.at("to"), "corrections.to");
        if (static_cast<int>(e.corrections.size()) < k) e.corrections.resize(static_cast<std::size_t>(k));
        auto& m = e.corrections[static_cast<std::size_t>(k - 1)];
        m.set(from, to, m.at(from, to) + scalar_from_json(corr.at("entry")));
    }
    return e;
}

Json equivariant_to_json(const EquivariantComplex& e) {
    Json j = complex_to_json(e.base);
    j["corrections"] = Json::array();
    for (int k = 1; k <= e.correction_order(); ++k)
        for (const auto& [ft, value] : e.correction(k).entries())
            j["corrections"].push_back({{"k", k},
                                        {"from", e.base.orbit(ft.first).label},
                                        {"to", e.base.orbit(ft.second).label},
                                        {"entry", value.str()}});
    return j;
}

PairOfPantsMap pop_from_json(const Json& j, const FilteredComplex& c, const EquivariantComplex& e) {
    PairOfPantsMap pop;
    pop.squaring.assign(static_cast<std::size_t>(c.orbit_count()), -1);
    for (const Json& s : j.at("squaring")) {
        int orbit = orbit_ref(c, s.at("orbit"), "squaring.orbit");
        int squared = orbit_ref(e.base, s.at("squared"), "squaring.squared");
        pop.squaring[static_cast<std::size_t>(orbit)] = squared;
    }
    for (int i = 0; i < c.orbit_count(); ++i)
        if (pop.squaring[static_cast<std::size_t>(i)] < 0)
            throw ParseError("squaring assignment missing orbit '" + c.orbit(i).label + "'");
    for (const Json& v : j.value("values", Json::array())) {
        int x = orbit_ref(c, v.at("x"), "values.x");
        int y = orbit_ref(c, v.at("y"), "values.y");
        EqChain chain = pop.value(x, y);
        for (const Json& term : v.at("image")) {
            int orbit = orbit_ref(e.base, term.at("orbit"), "image.orbit");
            int hpow = term.at("hpow").get<int>();
            if (hpow < 0) throw ParseError("image.hpow must be >= 0");
            chain.add(orbit, hpow, scalar_from_json(term.at("entry")));
        }
        pop.set_value(x, y, std::move(chain));
    }
    return pop;
}

Json pop_to_json(const PairOfPantsMap& pop, const FilteredComplex& c, const EquivariantComplex& e) {
    Json j;
    j["squaring"] = Json::array();
    for (int i = 0; i < c.orbit_count(); ++i)
        j["squaring"].push_back(
            {{"orbit", c.orbit(i).label},
             {"squared", e.base.orbit(pop.squaring[static_cast<std::size_t>(i)]).label}});
    j["values"] = Json::array();
    for (const auto& [pair, chain] : pop.values()) {
        if (chain.is_zero()) continue;
        Json image = Json::array();
        for (const auto& [key, value] : chain.coeffs())
            image.push_back({{"orbit", e.base.orbit(key.first).label},
                             {"hpow", key.second},
                             {"entry", value.str()}});
        j["values"].push_back({{"x", c.orbit(pair.first).label},
                               {"y", c.orbit(pair.second).label},
                               {"image", std::move(image)}});
    }
    return j;
}

FilteredComplex complex_from_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what());
    }
    return complex_from_json(j);
}

EquivariantComplex equivariant_from_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what());
    }
    return equivariant_from_json(j);
}

Json validation_report_to_json(const ValidationReport& report) {
    Json j;
    j["valid"] = report.valid();
    j["violations"] = Json::array();
    for (const auto& v : report.violations) {
        Json item = {{"code", v.code}, {"message", v.message}};
        if (!v.from.empty()) item["from"] = v.from;
        if (!v.to.empty()) item["to"] = v.to;
        j["violations"].push_back(std::move(item));
    }
    return j;
}

Json barcode_to_json(const Barcode& barcode) {
    Json j;
    j["finiteBars"] = Json::array();
    for (const auto& bar : barcode.finite_bars) j["finiteBars"].push_back(rational_to_json(bar));
    j["beta"] = rational_to_json(barcode.beta());
    j["betaMin"] = barcode.beta_min().is_infinite() ? Json("inf")
                                                    : rational_to_json(barcode.beta_min().value());
    j["infiniteBarCount"] = barcode.infinite_bar_count;
    j["witnesses"] = Json::array();
    for (std::size_t i = 0; i < barcode.witnesses.size(); ++i)
        j["witnesses"].push_back({{"eta", barcode.witnesses[i].first},
                                  {"gamma", barcode.witnesses[i].second},
                                  {"length", rational_to_json(barcode.finite_bars[i])}});
    return j;
}

Json graph_to_json(const FloerGraph& graph) {
    Json j;
    j["vertices"] = graph.vertices;
    j["equivariant"] = graph.equivariant;
    j["arrows"] = Json::array();
    for (const auto& a : graph.arrows) j["arrows"].push_back(arrow_to_json(graph, a));
    Json shortest = Json::array();
    for (const auto& a : graph.shortest_arrows()) shortest.push_back(arrow_to_json(graph, a));
    j["shortestArrows"] = std::move(shortest);
    return j;
}

Json axiom_report_to_json(const AxiomReport& report) {
    Json j;
    j["chainMap"] = axiom_check_to_json(report.chain_map);
    j["filtration"] = axiom_check_to_json(report.filtration);
    j["seidel"] = axiom_check_to_json(report.seidel);
    j["h0Reduction"] = axiom_check_to_json(report.h0);
    j["allPass"] = report.all_pass();
    return j;
}

Json main_theorem_report_to_json(const MainTheoremReport& report, const Triple& triple) {
    Json j;
    j["backgroundAssumptionOk"] = report.background_ok;
    j["stopped"] = report.stopped;
    j["noArrowCase"] = report.no_arrow_case;
    if (!report.stopped) {
        FloerGraph gc = build_graph(triple.c);
        FloerGraph geq = build_equivariant_graph(triple.e);
        Json sc = Json::array();
        for (const auto& a : report.shortest_c) sc.push_back(arrow_to_json(gc, a));
        Json se = Json::array();
        for (const auto& a : report.shortest_eq) se.push_back(arrow_to_json(geq, a));
        j["shortestArrowC"] = std::move(sc);
        j["shortestArrowEq"] = std::move(se);
        j["correspondenceHolds"] = report.correspondence_holds;
        j["betaMinC"] = action_to_json(report.beta_min_c);
        j["betaMinEq"] = action_to_json(report.beta_min_eq);
        j["betaMinPhi2"] = action_to_json(report.beta_min_phi2);
        j["betaMinH1"] = action_to_json(report.beta_min_h1);
        j["barDoublingOk"] = report.claim.bar_doubling_ok;
        Json diag;
        diag["identitiesOk"] = report.claim.identities_ok;
        diag["orthogonal"] = report.claim.orthogonal;
        diag["basisOk"] = report.claim.basis_ok;
        Json bars = Json::array();
        for (const auto& b : report.claim.tilde_bars) bars.push_back(rational_to_json(b));
        diag["tildeBars"] = std::move(bars);
        j["hatTildeDiagnostics"] = std::move(diag);
    }
    j["failures"] = report.failures;
    j["ok"] = report.ok();
    return j;
}

Json tower_report_to_json(const TowerReport& report) {
    Json j;
    j["levels"] = Json::array();
    for (const auto& level : report.levels) {
        Json item;
        item["level"] = level.level;
        item["betaMin"] = action_to_json(level.beta_min_value);
        item["expected"] = rational_to_json(level.expected);
        item["ok"] = level.ok;
        item["exact"] = level.exact;
        j["levels"].push_back(std::move(item));
    }
    if (report.cap) j["cap"] = rational_to_json(*report.cap);
    if (report.first_level_exceeding_cap) j["firstLevelExceedingCap"] = *report.first_level_exceeding_cap;
    j["ok"] = report.ok;
    return j;
}

Json chain_probe_report_to_json(const ChainProbeReport& report) {
    Json j;
    j["trials"] = report.trials;
    j["skipped"] = report.skipped;
    j["violations"] = report.violations;
    j["witnessAttains"] = report.witness_attains;
    j["betaMin"] = report.beta_min_value.is_infinite()
                       ? Json("inf")
                       : rational_to_json(report.beta_min_value.value());
    j["ok"] = report.ok();
    return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace nvk
