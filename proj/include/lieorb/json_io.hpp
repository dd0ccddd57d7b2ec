#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "lieorb/catalog.hpp"
#include "lieorb/coadjoint.hpp"
#include "lieorb/orbit_slice.hpp"
#include "lieorb/reduction.hpp"

namespace lieorb {

inline constexpr const char* kToolVersion = "1.0.0";

/// Parsed input file: a validated algebra, plus optional ideal rows, sample
/// covector and the split (k, rep) form for semidirect inputs. Rationals in
/// files are only ever "p" or "p/q" strings.
struct AlgebraInput {
  std::string name;
  LieAlgebra algebra;
  std::optional<Subspace> ideal;  // validated against the algebra
  std::optional<Covector> sigma;
  std::optional<std::pair<LieAlgebra, Representation>> split_form;
};

/// Parses either a plain algebra file or a semidirect {"k":..., "rep":...}
/// file. Validation failures surface as the library's typed errors.
AlgebraInput parse_algebra_input(const nlohmann::json& j);

nlohmann::json algebra_to_json(const std::string& name, const LieAlgebra& L,
                               const std::optional<Subspace>& ideal,
                               const std::optional<Covector>& sigma);
nlohmann::json split_form_to_json(const std::string& name, const LieAlgebra& k,
                                  const Representation& rep);

nlohmann::json vec_to_json(const Vec& v);
Vec vec_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json subspace_to_json(const Subspace& s);
nlohmann::json covector_to_json(const Covector& c);
nlohmann::json certificate_to_json(const GenericityCertificate& c);
nlohmann::json index_report_to_json(const IndexReport& r);
nlohmann::json slice_report_to_json(const OrbitSliceReport& r);
nlohmann::json reduction_report_to_json(const ReductionReport& r);
nlohmann::json panasyuk_report_to_json(const PanasyukReport& r);
nlohmann::json rais_report_to_json(const RaisReport& r);

/// FNV-1a 64-bit digest, hex encoded; used to tie reports to their inputs.
std::string fnv1a_hex(const std::string& bytes);

/// The versioned report wrapper; byte-identical output for identical inputs.
nlohmann::json make_envelope(const std::string& input_digest, std::uint64_t seed,
                             nlohmann::json parameters, nlohmann::json payload,
                             nlohmann::json verdicts);

}  // namespace lieorb
