#include "padent/report.hpp"

#include <algorithm>
#include <sstream>

#include "padent/errors.hpp"
#include "padent/heisenberg.hpp"
#include "padent/newton.hpp"
#include "padent/periodic.hpp"

namespace padent {

using io::Json;
using io::to_json;

namespace {

constexpr const char* kYuzvinski = "yuzvinski-formula: sum of log|lambda|_p over eigenvalues with |lambda|_p > 1 "
                                   "(Newton polygon of the characteristic polynomial)";
constexpr const char* kCotrajectory = "cotrajectory-oracle: stabilized increment of log_p[U : C_n(phi, U)], U = Z_p^n";
constexpr const char* kMoeller = "moeller-formula-oracle: stabilized increment of log_p[U + phi^n(U) : U]";
constexpr const char* kScaleFormula = "scale-formula: product of |lambda|_p over eigenvalues with |lambda|_p > 1";
constexpr const char* kMinSearch =
    "diagonal-subgroup-search: min [phi(U) : U cap phi(U)] over p-power column rescalings of Z_p^n and of a "
    "settled cotrajectory";
constexpr const char* kReduction = "divisible-quotient-reduction: yuzvinski-formula on the qp<-qp block";
constexpr const char* kTorsionFreeOracle = "cotrajectory-oracle on the torsion-free quotient Z_p^n1 x Q_p^n2";
constexpr const char* kLocalSum = "local-product-sum: sum over primes of the p-component entropies";
constexpr const char* kCenterQuotient =
    "center-quotient-decomposition: yuzvinski-formula on Z(G) = Q_p plus G/Z(G) = Q_p^2";
constexpr const char* kHeisenbergOracle = "cotrajectory-oracle on boxes H(p^k Z_p), k = 0";
constexpr const char* kClassification = "classification: E0 iff there is no Q_p factor; finite rank gives E_<inf";

Json valued(Json value, const char* provenance) {
    return Json{{"value", std::move(value)}, {"provenance", provenance}};
}

Json integer_json(const Integer& z) { return z.get_str(10); }

Prime payload_prime(const Json& payload) {
    if (!payload.contains("p"))
        throw ParseError("payload is missing 'p'");
    return io::prime_from_json(payload.at("p"));
}

RationalMatrix payload_matrix(const Json& payload, const char* key = "matrix") {
    if (!payload.contains(key))
        throw ParseError(std::string("payload is missing '") + key + "'");
    RationalMatrix m = io::matrix_from_json(payload.at(key));
    if (!m.is_square())
        throw ValidationError(std::string("'") + key + "' must be square");
    return m;
}

BlockEndomorphism checked_endo(const FiniteRankPGroup& g, const Json& payload) {
    BlockEndomorphism phi = io::endo_from_json(g, payload.contains("endo") ? payload.at("endo") : Json::object());
    auto violations = phi.violations();
    if (!violations.empty()) {
        std::string msg = "invalid endomorphism";
        for (const auto& v : violations)
            msg += "; " + v.message();
        throw ValidationError(msg);
    }
    return phi;
}

Json oracle_section(const RationalMatrix& a, Prime p, const ComputationRequest& req, const char* provenance) {
    try {
        OracleResult r = htop_oracle(a, p, req.window, req.cap);
        Json j = valued(to_json(r.entropy), provenance);
        j["diagnostics"] = to_json(r.diagnostics);
        return j;
    } catch (const StabilizationError& e) {
        return Json{{"status", "not-stabilized"}, {"diagnostics", to_json(e.diagnostics())}};
    }
}

Json agreement(const EntropyValue& formula, const Json& oracle) {
    if (!oracle.contains("value"))
        return nullptr;
    return formula == io::entropy_from_json(oracle.at("value"));
}

Json run_entropy_matrix(const ComputationRequest& req) {
    const Prime p = payload_prime(req.payload);
    const RationalMatrix a = payload_matrix(req.payload);
    EntropyValue h = yuzvinski_entropy(a, p);
    Json out;
    out["command"] = "entropy";
    out["input"] = Json{{"p", p.value()}, {"matrix", to_json(a)}};
    out["entropy"] = valued(to_json(h), kYuzvinski);
    out["oracle"] = oracle_section(a, p, req, kCotrajectory);
    out["agree"] = agreement(h, out["oracle"]);
    return out;
}

Json run_entropy_group(const ComputationRequest& req) {
    const FiniteRankPGroup g = io::group_from_json(req.payload.at("group"));
    const BlockEndomorphism phi = checked_endo(g, req.payload);
    EntropyValue h = entropy(phi);
    Json out;
    out["command"] = "entropy";
    out["input"] = Json{{"group", to_json(g)}, {"endo", to_json(phi)}};
    out["classification"] = valued(std::string(to_string(classify(g))), kClassification);
    out["divisible_quotient_matrix"] = to_json(reduce_to_divisible_quotient(phi));
    out["entropy"] = valued(to_json(h), kReduction);
    RationalMatrix tf = torsion_free_quotient_matrix(phi);
    out["oracle"] = oracle_section(tf, g.p, req, kTorsionFreeOracle);
    out["oracle"]["matrix"] = to_json(tf);
    out["agree"] = agreement(h, out["oracle"]);
    return out;
}

Json run_entropy_periodic(const ComputationRequest& req) {
    PeriodicGroup g = io::periodic_group_from_json(req.payload.at("components"));
    PeriodicEndomorphism phi =
        io::periodic_endo_from_json(g, req.payload.contains("endo") ? req.payload.at("endo") : Json::object());
    phi.require_valid_for(g);
    Json comps = Json::object();
    EntropyValue summed;
    for (const auto& [p, component] : g.components()) {
        auto it = phi.components().find(p);
        BlockEndomorphism local = it == phi.components().end() ? BlockEndomorphism(component) : it->second;
        EntropyValue h = entropy(local);
        summed += h;
        comps[std::to_string(p)] = Json{{"group", to_json(component)},
                                        {"endo", to_json(local)},
                                        {"classification", std::string(to_string(classify(component)))},
                                        {"entropy", valued(to_json(h), kReduction)}};
    }
    EntropyValue total = entropy(phi);
    Json out;
    out["command"] = "entropy";
    out["components"] = std::move(comps);
    out["classification"] = valued(std::string(to_string(classify(g))), kClassification);
    out["entropy"] = valued(to_json(total), kLocalSum);
    out["sum_matches_components"] = total == summed;
    return out;
}

Json run_entropy(const ComputationRequest& req) {
    if (req.payload.contains("components"))
        return run_entropy_periodic(req);
    if (req.payload.contains("group"))
        return run_entropy_group(req);
    if (req.payload.contains("matrix"))
        return run_entropy_matrix(req);
    throw ParseError("entropy payload needs one of 'matrix', 'group' or 'components'");
}

// Matrix payload, or a group payload reduced to its torsion-free quotient.
std::pair<RationalMatrix, Prime> oracle_matrix(const ComputationRequest& req, Json& input) {
    if (req.payload.contains("group")) {
        const FiniteRankPGroup g = io::group_from_json(req.payload.at("group"));
        const BlockEndomorphism phi = checked_endo(g, req.payload);
        input = Json{{"group", to_json(g)}, {"endo", to_json(phi)}};
        RationalMatrix tf = torsion_free_quotient_matrix(phi);
        input["torsion_free_quotient_matrix"] = to_json(tf);
        return {tf, g.p};
    }
    const Prime p = payload_prime(req.payload);
    RationalMatrix a = payload_matrix(req.payload);
    input = Json{{"p", p.value()}, {"matrix", to_json(a)}};
    return {a, p};
}

Json run_oracle(const ComputationRequest& req) {
    Json input;
    auto [a, p] = oracle_matrix(req, input);
    OracleResult h = htop_oracle(a, p, req.window, req.cap);
    ScaleOracleResult s = moeller_scale_oracle(a, p, req.window, req.cap);
    EntropyValue formula = yuzvinski_entropy(a, p);
    Json out;
    out["command"] = "oracle";
    out["input"] = std::move(input);
    out["htop"] = valued(to_json(h.entropy), kCotrajectory);
    out["htop"]["diagnostics"] = to_json(h.diagnostics);
    out["scale"] = valued(integer_json(s.scale), kMoeller);
    out["scale"]["exponent"] = s.exponent;
    out["scale"]["base_cotrajectory_step"] = s.base_step;
    out["scale"]["diagnostics"] = to_json(s.diagnostics);
    out["formula"] = valued(to_json(formula), kYuzvinski);
    out["agree"] = Json{{"htop_equals_formula", h.entropy == formula},
                        {"log_scale_equals_htop", EntropyValue(p, static_cast<std::uint64_t>(s.exponent)) == h.entropy}};
    return out;
}

Json run_scale(const ComputationRequest& req) {
    const Prime p = payload_prime(req.payload);
    const RationalMatrix a = payload_matrix(req.payload);
    long k_min = -3, k_max = 3;
    if (req.payload.contains("k_range")) {
        const auto& r = req.payload.at("k_range");
        if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer())
            throw ParseError("'k_range' must be [k_min, k_max]");
        k_min = r[0].get<long>();
        k_max = r[1].get<long>();
    }
    Integer formula_scale = yuzvinski_scale(a, p);
    EntropyValue formula_h = yuzvinski_entropy(a, p);
    ScaleOracleResult moeller = moeller_scale_oracle(a, p, req.window, req.cap);
    EntropyValue log_scale(p, static_cast<std::uint64_t>(moeller.exponent));

    Json out;
    out["command"] = "scale";
    out["input"] = Json{{"p", p.value()}, {"matrix", to_json(a)}};
    out["scale_formula"] = valued(integer_json(formula_scale), kScaleFormula);
    out["moeller"] = valued(integer_json(moeller.scale), kMoeller);
    out["moeller"]["exponent"] = moeller.exponent;
    out["moeller"]["base_cotrajectory_step"] = moeller.base_step;
    out["moeller"]["diagnostics"] = to_json(moeller.diagnostics);
    if (sgn(determinant(a)) != 0) {
        MinScaleResult best = min_scale_search(a, p, k_min, k_max);
        out["min_search"] = valued(integer_json(best.best_index), kMinSearch);
        out["min_search"]["k_range"] = Json::array({k_min, k_max});
        out["min_search"]["evaluated"] = best.evaluated;
        out["min_search"]["witness"] = to_json(best.witness);
        out["min_search"]["witness_frame"] = best.cotrajectory_frame ? "cotrajectory" : "standard";
        out["min_search"]["attains_moeller"] = best.best_index == moeller.scale;
    } else {
        out["min_search"] = Json{{"status", "skipped: matrix is singular"}};
    }
    out["log_scale"] = valued(to_json(log_scale), kMoeller);
    out["htop"] = valued(to_json(formula_h), kYuzvinski);
    out["log_scale_le_htop"] = log_scale.dominated_by(formula_h);
    out["log_scale_equals_htop"] = log_scale == formula_h;
    out["agree"] = formula_scale == moeller.scale;
    return out;
}

Json run_newton(const ComputationRequest& req) {
    if (!req.payload.contains("poly") || !req.payload.at("poly").is_string())
        throw ParseError("newton payload needs a 'poly' string");
    MonicPolynomial f = parse_monic_polynomial(req.payload.at("poly").get<std::string>());
    const Prime p = payload_prime(req.payload);
    NewtonPolygon poly = newton_polygon(f, p);
    std::uint64_t m = expanding_exponent(f, p);
    Json out;
    out["command"] = "newton";
    out["input"] = Json{{"poly", to_string(f)}, {"p", p.value()}};
    out["segments"] = to_json(poly);
    out["zero_root_multiplicity"] = poly.zero_root_multiplicity;
    out["root_valuations"] = to_json(root_valuations(f, p));
    out["entropy"] = valued(to_json(EntropyValue(p, m)), kYuzvinski);
    out["scale"] = valued(integer_json(ppow_int(p, m)), kScaleFormula);
    return out;
}

Json triple_json(const EntropyTriple& t, const char* provenance) {
    return Json{{"whole", to_json(t.whole)},
                {"subgroup", to_json(t.subgroup)},
                {"quotient", to_json(t.quotient)},
                {"additive", t.additive()},
                {"provenance", provenance}};
}

Json run_check_at(const ComputationRequest& req) {
    const Prime p = payload_prime(req.payload);
    for (const char* key : {"A1", "B", "A2"})
        if (!req.payload.contains(key))
            throw ParseError(std::string("check-at payload is missing '") + key + "'");
    RationalMatrix a1 = io::matrix_from_json(req.payload.at("A1"));
    RationalMatrix b = io::matrix_from_json(req.payload.at("B"));
    RationalMatrix a2 = io::matrix_from_json(req.payload.at("A2"));
    if (b.rows() == 0 && b.cols() == 0)
        b = RationalMatrix(a2.rows(), a1.cols());
    AdditionReport r = check_addition_qpn(a1, b, a2, p, req.window, req.cap);
    Json out;
    out["command"] = "check-at";
    out["input"] = Json{{"p", p.value()}, {"A1", to_json(a1)}, {"B", to_json(b)}, {"A2", to_json(a2)}};
    out["assembled"] = to_json(r.assembled);
    out["formula"] = triple_json(r.formula, kYuzvinski);
    out["oracle"] = triple_json(r.oracle, kCotrajectory);
    out["paths_agree"] = r.paths_agree();
    out["holds"] = r.holds();
    return out;
}

Json classify_group_json(const FiniteRankPGroup& g) {
    FiniteRankPGroup dual = dual_group(g);
    return Json{{"group", to_json(g)},
                {"rank_p", rank_p(g)},
                {"classification", valued(std::string(to_string(classify(g))), kClassification)},
                {"dual", Json{{"group", to_json(dual)},
                              {"rank_p", rank_p(dual)},
                              {"classification", std::string(to_string(classify(dual)))}}}};
}

Json run_classify(const ComputationRequest& req) {
    Json out;
    out["command"] = "classify";
    if (req.payload.contains("components")) {
        PeriodicGroup g = io::periodic_group_from_json(req.payload.at("components"));
        Json comps = Json::object();
        for (const auto& [p, component] : g.components())
            comps[std::to_string(p)] = classify_group_json(component);
        out["components"] = std::move(comps);
        out["classification"] = valued(std::string(to_string(classify(g))), kClassification);
        return out;
    }
    const Json& doc = req.payload.contains("group") ? req.payload.at("group") : req.payload;
    Json body = classify_group_json(io::group_from_json(doc));
    for (auto& [key, value] : body.items())
        out[key] = value;
    return out;
}

Json run_heisenberg(const ComputationRequest& req) {
    const Json& pl = req.payload;
    const Prime p = payload_prime(pl);
    std::string ring_name = pl.value("ring", std::string("qp"));
    HeisenbergRing ring;
    if (ring_name == "zp")
        ring = HeisenbergRing::Zp;
    else if (ring_name == "qp")
        ring = HeisenbergRing::Qp;
    else
        throw ParseError("ring must be 'zp' or 'qp'");
    std::size_t sample = pl.value("sample", std::size_t{8});

    HeisenbergClassification cls = classify_heisenberg(ring, p, sample);
    Json evidence = Json::array();
    for (const auto& e : cls.evidence)
        evidence.push_back(Json{{"s", to_json(e.phi.s)}, {"t", to_json(e.phi.t)}, {"entropy", to_json(e.entropy)}});

    Json out;
    out["command"] = "heisenberg";
    out["input"] = Json{{"ring", ring_name}, {"p", p.value()}};
    out["classification"] = valued(std::string(to_string(cls.classification)),
                                   ring == HeisenbergRing::Zp ? "H(Z_p) is in E0" : "H(Q_p) is in E_<inf but not E0");
    out["evidence"] = Json{{"samples", std::move(evidence)},
                           {"consistent", cls.evidence_consistent()},
                           {"provenance", kHeisenbergOracle}};

    if (pl.contains("s") || pl.contains("t")) {
        DiagonalEndo phi{io::rational_from_json(pl.value("s", Json("1"))),
                         io::rational_from_json(pl.value("t", Json("1")))};
        if (ring == HeisenbergRing::Zp && !phi.preserves_integral(p))
            throw ValidationError("s and t must be p-integral for an endomorphism of H(Z_p)");
        Json endo{{"s", to_json(phi.s)}, {"t", to_json(phi.t)}, {"automorphism", phi.is_automorphism()}};
        std::optional<EntropyValue> formula;
        if (phi.is_automorphism()) {
            formula = entropy_diagonal(phi, p);
            EntropyValue center = yuzvinski_entropy(RationalMatrix{{phi.s * phi.t}}, p);
            EntropyValue quotient = yuzvinski_entropy(RationalMatrix::diagonal({phi.s, phi.t}), p);
            endo["decomposition"] = valued(
                Json{{"center", to_json(center)}, {"quotient", to_json(quotient)}, {"total", to_json(*formula)}},
                kCenterQuotient);
        } else {
            endo["decomposition"] = Json{{"status", "not applicable: s or t is zero"}};
        }
        if (pl.value("oracle", false)) {
            OracleResult r = entropy_oracle_diagonal(phi, p, 0, req.window, req.cap);
            endo["oracle"] = valued(to_json(r.entropy), kHeisenbergOracle);
            endo["oracle"]["diagnostics"] = to_json(r.diagnostics);
            endo["agree"] = formula ? Json(*formula == r.entropy) : Json(nullptr);
        }
        out["endomorphism"] = std::move(endo);
    }
    return out;
}

void render_text(std::ostream& os, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_structured() && !value.empty()) {
                os << pad << key << ":\n";
                render_text(os, value, indent + 1);
            } else {
                os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
            }
        }
    } else if (j.is_array()) {
        bool flat = std::none_of(j.begin(), j.end(), [](const Json& v) { return v.is_object(); });
        if (flat) {
            os << pad << j.dump() << '\n';
            return;
        }
        for (const auto& value : j) {
            os << pad << "-\n";
            render_text(os, value, indent + 1);
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

Json error_doc(const char* kind, const std::string& message) {
    return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

} // namespace

std::string_view to_string(Command c) {
    switch (c) {
    case Command::Entropy:
        return "entropy";
    case Command::Scale:
        return "scale";
    case Command::Newton:
        return "newton";
    case Command::Oracle:
        return "oracle";
    case Command::CheckAt:
        return "check-at";
    case Command::Classify:
        return "classify";
    case Command::Heisenberg:
        return "heisenberg";
    }
    return "?";
}

std::optional<Command> parse_command(std::string_view name) {
    for (auto c : {Command::Entropy, Command::Scale, Command::Newton, Command::Oracle, Command::CheckAt,
                   Command::Classify, Command::Heisenberg})
        if (to_string(c) == name)
            return c;
    return std::nullopt;
}

Json run(const ComputationRequest& request) {
    if (!request.payload.is_object())
        throw ParseError("request payload must be a JSON object");
    require_limit_parameters(request.window, request.cap);
    switch (request.command) {
    case Command::Entropy:
        return run_entropy(request);
    case Command::Scale:
        return run_scale(request);
    case Command::Newton:
        return run_newton(request);
    case Command::Oracle:
        return run_oracle(request);
    case Command::CheckAt:
        return run_check_at(request);
    case Command::Classify:
        return run_classify(request);
    case Command::Heisenberg:
        return run_heisenberg(request);
    }
    throw ParseError("unknown command");
}

Outcome execute(const ComputationRequest& request) {
    try {
        return {kExitOk, run(request)};
    } catch (const ParseError& e) {
        return {kExitParse, error_doc("parse", e.what())};
    } catch (const nlohmann::json::exception& e) {
        return {kExitParse, error_doc("parse", e.what())};
    } catch (const StabilizationError& e) {
        Json doc = error_doc("non-stabilization", e.what());
        doc["error"]["diagnostics"] = to_json(e.diagnostics());
        return {kExitStabilization, std::move(doc)};
    } catch (const ValidationError& e) {
        return {kExitValidation, error_doc("validation", e.what())};
    } catch (const std::invalid_argument& e) {
        return {kExitValidation, error_doc("validation", e.what())};
    }
}

std::string render(const Json& report, OutputFormat format) {
    if (format == OutputFormat::Json)
        return report.dump(2) + "\n";
    std::ostringstream os;
    render_text(os, report, 0);
    return os.str();
}

} // namespace padent
