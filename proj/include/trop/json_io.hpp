/*
 * JSON codecs shared by the command-line tool and its tests.
 *
 * Encoding rules (deterministic golden-file friendly output):
 *   - integers: JSON numbers when they fit 64 bits, decimal strings otherwise;
 *   - rationals: integers when the denominator is 1, "p/q" strings otherwise;
 *   - one-variable polynomials: dense ascending coefficient lists;
 *   - two-variable Laurent polynomials: {"vars": ["u","v"], "terms":
 *     [{"c": coefficient, "e": [exp_u, exp_v]}, ...]} in term order;
 *   - object keys are emitted in lexicographic order.
 *
 * Decoders throw ValidationError with code ParseError (malformed JSON text)
 * or SchemaMismatch (well-formed JSON of the wrong shape).
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "trop/complex.hpp"
#include "trop/hodge.hpp"
#include "trop/matroid.hpp"
#include "trop/numeric.hpp"
#include "trop/polynomial.hpp"
#include "trop/poset.hpp"

namespace trop {

using Json = nlohmann::json;

Json to_json(const BigInt& n);
Json to_json(const BigRat& q);
Json to_json(const UnivarPoly& p);
Json to_json(const LaurentBivarPoly& p);
Json table_to_json(const LimitHodgeTable& t);
Json audit_to_json(const std::vector<AuditEntry>& audit);
Json report_to_json(const EPolyReport& report);

/* Parse a whole document; ParseError when the text is not JSON. */
Json parse_json_text(const std::string& text);

/* Field access with schema errors: json_field throws SchemaMismatch when the
 * value is not an object or the field is absent; json_optional_field returns
 * nullptr instead when only the field is absent. */
const Json& json_field(const Json& j, const char* name);
const Json* json_optional_field(const Json& j, const char* name);

BigInt big_int_from_json(const Json& j);
BigRat big_rat_from_json(const Json& j);
long long_from_json(const Json& j);
std::vector<IVec> int_matrix_from_json(const Json& j, const char* what);

struct NewtonInput {
  std::vector<IVec> points;
  std::vector<BigInt> lifts;  // zero-filled when absent from the input
};

/* {"points": [[int,...],...], "lifts": [int,...]? } */
NewtonInput parse_newton(const Json& j);

/* {"uniform": [rank, n]}  or  {"ground": n, "bases": [[int,...],...]} */
Matroid parse_matroid(const Json& j);

/* {"elements": n, "covers": [[lo, hi],...]} */
FinitePoset parse_poset(const Json& j);

/* {"ambient": n, "vertices": [[rational,...],...], "rays": [[int,...],...],
 *  "faces": [{"v": [vertex index,...], "r": [ray index,...],
 *             "label": {"eclass": poly} | {"matroid": matroid},
 *             "mult": int?}, ...]}
 * Rationals are JSON integers or "p/q" strings.  The complex is validated. */
TropicalComplex parse_complex(const Json& j);

struct CurveInput {
  bool counts_only = false;
  std::vector<long> degrees;
  std::vector<std::pair<size_t, size_t>> edges;
  long legs = 0;
  long vertices = 0, bounded_edges = 0, unbounded_edges = 0;
};

/* {"degrees": [...], "edges": [[a,b],...], "legs": n?}  or
 * {"V": n, "B": n, "U": n} */
CurveInput parse_curve(const Json& j);

UnivarPoly univar_from_json(const Json& j);
LaurentBivarPoly bivar_from_json(const Json& j);
QVec rational_vector_from_json(const Json& j, const char* what);

}  // namespace trop
