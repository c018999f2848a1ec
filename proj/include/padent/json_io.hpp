#pragma once

#include <json.hpp>

#include "padent/entropy_value.hpp"
#include "padent/group.hpp"
#include "padent/lattice.hpp"
#include "padent/limit.hpp"
#include "padent/matrix.hpp"
#include "padent/newton.hpp"
#include "padent/periodic.hpp"

// JSON wire format. Rationals travel as strings ("-10/3", "7") so that no
// value passes through a floating-point parser; bare JSON integers are also
// accepted on input. Parse functions throw ParseError on malformed documents
// and ValidationError on shape mismatches.
namespace padent::io {

using Json = nlohmann::ordered_json;

Rational rational_from_json(const Json& j);
Json to_json(const Rational& x);

Prime prime_from_json(const Json& j);
Prime prime_from_key(const std::string& key);

RationalMatrix matrix_from_json(const Json& j);
Json to_json(const RationalMatrix& m);

// {"p": 3, "n1": 1, "n2": 1, "n3": 0, "torsion": [2]}; counts default to 0.
FiniteRankPGroup group_from_json(const Json& j);
Json to_json(const FiniteRankPGroup& g);

// {"qp<-qp": [["1/9"]], ...}; omitted blocks are zero. Hom constraints are
// not checked here.
BlockEndomorphism endo_from_json(const FiniteRankPGroup& g, const Json& j);
// Nonzero blocks only, normalized when valid.
Json to_json(const BlockEndomorphism& phi);

// {"components": {"2": <group>, ...}, "endo": {"2": <blocks>, ...}}
PeriodicGroup periodic_group_from_json(const Json& components);
PeriodicEndomorphism periodic_endo_from_json(const PeriodicGroup& g, const Json& endo);

// {"3": 2, "approx_nats": 2.197224577336}
Json to_json(const EntropyValue& h);
EntropyValue entropy_from_json(const Json& j);

Json to_json(const Lattice& l);
Json to_json(const NewtonPolygon& poly);
Json to_json(const RootValuationMultiset& roots);
Json to_json(const LimitDiagnostics& d);

} // namespace padent::io
