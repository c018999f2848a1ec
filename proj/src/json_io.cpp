#include "padent/json_io.hpp"

#include <cmath>

#include "padent/errors.hpp"

namespace padent::io {

namespace {

std::size_t count_field(const Json& j, const char* key) {
    if (!j.contains(key))
        return 0;
    const auto& v = j.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

double round12(double x) { return std::round(x * 1e12) / 1e12; }

} // namespace

Rational rational_from_json(const Json& j) {
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(Integer(std::to_string(j.get<long long>()), 10));
    if (j.is_number_unsigned())
        return Rational(Integer(std::to_string(j.get<unsigned long long>()), 10));
    throw ParseError("expected a rational string such as \"-10/3\", got " + j.dump());
}

Json to_json(const Rational& x) { return to_string(x); }

Prime prime_from_json(const Json& j) {
    std::uint64_t v = 0;
    if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() > 0))
        v = j.get<std::uint64_t>();
    else if (j.is_string())
        return prime_from_key(j.get<std::string>());
    else
        throw ParseError("expected a prime, got " + j.dump());
    if (!is_prime(v))
        throw ValidationError(std::to_string(v) + " is not prime");
    return Prime(v);
}

Prime prime_from_key(const std::string& key) {
    if (key.empty() || key.size() > 19 || key.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("unknown prime key '" + key + "'");
    std::uint64_t v = std::stoull(key);
    if (!is_prime(v))
        throw ValidationError("prime key '" + key + "' is not prime");
    return Prime(v);
}

RationalMatrix matrix_from_json(const Json& j) {
    if (!j.is_array())
        throw ParseError("matrix must be an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!j[0].is_array())
            throw ParseError("matrix rows must be arrays");
        cols = j[0].size();
    }
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw ParseError("ragged matrix: row " + std::to_string(r) + " has the wrong length");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rational_from_json(j[r][c]);
    }
    return m;
}

Json to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

FiniteRankPGroup group_from_json(const Json& j) {
    if (!j.is_object())
        throw ParseError("group must be an object");
    for (const auto& [key, value] : j.items())
        if (key != "p" && key != "n1" && key != "n2" && key != "n3" && key != "torsion")
            throw ParseError("unknown group field '" + key + "'");
    if (!j.contains("p"))
        throw ParseError("group is missing 'p'");
    std::vector<unsigned> torsion;
    if (j.contains("torsion")) {
        if (!j.at("torsion").is_array())
            throw ParseError("'torsion' must be an array of exponents k (factors Z(p^k))");
        for (const auto& k : j.at("torsion")) {
            if (!k.is_number_integer() || k.get<long long>() < 1)
                throw ParseError("torsion exponents must be positive integers");
            torsion.push_back(k.get<unsigned>());
        }
    }
    return FiniteRankPGroup(prime_from_json(j.at("p")), count_field(j, "n1"), count_field(j, "n2"),
                            count_field(j, "n3"), std::move(torsion));
}

Json to_json(const FiniteRankPGroup& g) {
    Json j;
    j["p"] = g.p.value();
    j["n1"] = g.n1;
    j["n2"] = g.n2;
    j["n3"] = g.n3;
    j["torsion"] = g.torsion_orders;
    return j;
}

BlockEndomorphism endo_from_json(const FiniteRankPGroup& g, const Json& j) {
    if (!j.is_object())
        throw ParseError("endomorphism must be an object of blocks");
    BlockEndomorphism phi(g);
    for (const auto& [key, value] : j.items()) {
        auto slot = parse_block_key(key);
        if (!slot)
            throw ParseError("unknown block '" + key + "' (expected e.g. \"qp<-zp\")");
        RationalMatrix m = matrix_from_json(value);
        // An empty block for a zero-dimensional component may be written as [].
        if (m.rows() == 0 && g.dim(slot->first) == 0)
            m = RationalMatrix(0, g.dim(slot->second));
        phi.set_block(slot->first, slot->second, std::move(m));
    }
    return phi;
}

Json to_json(const BlockEndomorphism& phi) {
    const BlockEndomorphism shown = phi.valid() ? phi.normalized() : phi;
    Json j = Json::object();
    for (auto t : kComponents)
        for (auto s : kComponents) {
            const auto& m = shown.block(t, s);
            if (m.rows() > 0 && m.cols() > 0 && !m.is_zero())
                j[block_key(t, s)] = to_json(m);
        }
    return j;
}

PeriodicGroup periodic_group_from_json(const Json& components) {
    if (!components.is_object())
        throw ParseError("'components' must be an object keyed by prime");
    PeriodicGroup g;
    for (const auto& [key, value] : components.items()) {
        Prime p = prime_from_key(key);
        Json doc = value;
        if (!doc.is_object())
            throw ParseError("component '" + key + "' must be a group object");
        if (!doc.contains("p"))
            doc["p"] = p.value();
        FiniteRankPGroup component = group_from_json(doc);
        if (component.p != p)
            throw ParseError("component key '" + key + "' does not match its prime " +
                             std::to_string(component.p.value()));
        g.add_component(component);
    }
    return g;
}

PeriodicEndomorphism periodic_endo_from_json(const PeriodicGroup& g, const Json& endo) {
    if (!endo.is_object())
        throw ParseError("'endo' must be an object keyed by prime");
    PeriodicEndomorphism phi;
    for (const auto& [key, value] : endo.items()) {
        Prime p = prime_from_key(key);
        auto it = g.components().find(p.value());
        if (it == g.components().end())
            throw ParseError("unknown prime key '" + key + "': no such component");
        phi.add_component(endo_from_json(it->second, value));
    }
    return phi;
}

Json to_json(const EntropyValue& h) {
    Json j = Json::object();
    for (auto [p, m] : h.terms())
        j[std::to_string(p)] = m;
    j["approx_nats"] = round12(h.approx_nats());
    return j;
}

EntropyValue entropy_from_json(const Json& j) {
    if (!j.is_object())
        throw ParseError("entropy must be an object");
    EntropyValue h;
    for (const auto& [key, value] : j.items()) {
        if (key == "approx_nats")
            continue;
        if (!value.is_number_integer() || value.get<long long>() < 0)
            throw ParseError("entropy exponents must be non-negative integers");
        h += EntropyValue(prime_from_key(key), value.get<std::uint64_t>());
    }
    return h;
}

Json to_json(const Lattice& l) {
    Json j;
    j["p"] = l.prime().value();
    j["dim"] = l.dim();
    j["basis"] = to_json(l.basis());
    return j;
}

Json to_json(const NewtonPolygon& poly) {
    Json segs = Json::array();
    for (const auto& s : poly.segments)
        segs.push_back(Json{{"slope", to_json(s.slope)}, {"length", s.length}});
    return segs;
}

Json to_json(const RootValuationMultiset& roots) {
    Json j = Json::array();
    for (const auto& r : roots.finite)
        j.push_back(Json{{"valuation", to_json(r.valuation)}, {"multiplicity", r.multiplicity}});
    if (roots.zero_roots > 0)
        j.push_back(Json{{"valuation", "+inf"}, {"multiplicity", roots.zero_roots}});
    return j;
}

Json to_json(const LimitDiagnostics& d) {
    Json j;
    j["increments"] = d.increments;
    j["stabilized_at"] = d.stabilized_at ? Json(*d.stabilized_at) : Json(nullptr);
    j["period"] = d.period;
    j["window"] = d.window;
    j["cap"] = d.cap;
    return j;
}

} // namespace padent::io
