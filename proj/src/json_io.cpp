#include "lieorb/json_io.hpp"

#include <sstream>

#include "lieorb/errors.hpp"

namespace lieorb {

using nlohmann::json;

namespace {

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw ParseError("rationals must be integers or \"p/q\" strings, got: " + j.dump());
}

std::size_t index_from_key(const std::string& key, std::size_t dim) {
  std::size_t idx = 0;
  try {
    idx = std::stoul(key);
  } catch (...) {
    throw ParseError("bad basis index '" + key + "'");
  }
  if (idx >= dim) throw ParseError("basis index " + key + " out of range");
  return idx;
}

LieAlgebra algebra_from_json(const json& j) {
  if (!j.contains("dim")) throw ParseError("algebra file needs a \"dim\" field");
  const std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    for (const auto& l : j.at("basis")) labels.push_back(l.get<std::string>());
  }
  std::vector<BracketTriple> triples;
  if (j.contains("brackets")) {
    for (const auto& entry : j.at("brackets")) {
      const std::size_t left = entry.at("left").get<std::size_t>();
      const std::size_t right = entry.at("right").get<std::size_t>();
      if (left >= dim || right >= dim) throw ParseError("bracket index out of range");
      for (const auto& [key, val] : entry.at("result").items())
        triples.push_back({left, right, index_from_key(key, dim), rat_from_json(val)});
    }
  }
  return LieAlgebra::create(dim, triples, std::move(labels));
}

Matrix matrix_from_json(const json& j) {
  std::vector<Vec> rows;
  for (const auto& row : j) rows.push_back(vec_from_json(row));
  if (rows.empty()) return Matrix(0, 0);
  return Matrix::from_rows(rows);
}

}  // namespace

AlgebraInput parse_algebra_input(const json& j) {
  if (!j.is_object()) throw ParseError("input must be a JSON object");
  AlgebraInput in;
  in.name = j.value("name", std::string("unnamed"));

  if (j.contains("k") || j.contains("rep")) {
    if (!j.contains("k") || !j.contains("rep"))
      throw ParseError("semidirect input needs both \"k\" and \"rep\"");
    LieAlgebra k = algebra_from_json(j.at("k"));
    std::vector<Matrix> action;
    for (const auto& mj : j.at("rep")) action.push_back(matrix_from_json(mj));
    Representation rep = make_representation(k, std::move(action));
    auto sd = semidirect(k, rep);
    in.algebra = sd.algebra;
    in.ideal = sd.module_ideal.space;
    in.split_form = std::make_pair(std::move(k), std::move(rep));
  } else {
    in.algebra = algebra_from_json(j);
  }

  if (j.contains("ideal")) {
    std::vector<Vec> rows;
    for (const auto& row : j.at("ideal")) {
      Vec v = vec_from_json(row);
      if (v.size() != in.algebra.dim()) throw ParseError("ideal row has wrong length");
      rows.push_back(std::move(v));
    }
    Subspace s = Subspace::span(in.algebra.dim(), rows);
    in.ideal = make_ideal(in.algebra, s).space;  // NotAnIdeal on bad input
  }

  if (j.contains("sigma")) {
    Vec v = vec_from_json(j.at("sigma"));
    if (v.size() != in.algebra.dim()) throw ParseError("sigma has wrong length");
    in.sigma = Covector(in.algebra.dim(), std::move(v));
  }
  return in;
}

json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  Vec v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vec_to_json(m.row(i)));
  return out;
}

json subspace_to_json(const Subspace& s) {
  json out;
  out["ambient_dim"] = s.ambient_dim();
  out["dim"] = s.dim();
  out["basis"] = matrix_to_json(s.basis());
  return out;
}

json covector_to_json(const Covector& c) { return vec_to_json(c.coords); }

namespace {
json brackets_to_json(const LieAlgebra& L) {
  // group triples by (left, right)
  json brackets = json::array();
  std::size_t t = 0;
  const auto& triples = L.triples();
  while (t < triples.size()) {
    const std::size_t left = triples[t].left, right = triples[t].right;
    json result = json::object();
    while (t < triples.size() && triples[t].left == left && triples[t].right == right) {
      result[std::to_string(triples[t].out)] = triples[t].value.str();
      ++t;
    }
    brackets.push_back({{"left", left}, {"right", right}, {"result", result}});
  }
  return brackets;
}
}  // namespace

json algebra_to_json(const std::string& name, const LieAlgebra& L,
                     const std::optional<Subspace>& ideal, const std::optional<Covector>& sigma) {
  json out;
  out["name"] = name;
  out["dim"] = L.dim();
  out["basis"] = L.labels();
  out["brackets"] = brackets_to_json(L);
  if (ideal) out["ideal"] = matrix_to_json(ideal->basis());
  if (sigma) out["sigma"] = covector_to_json(*sigma);
  return out;
}

json split_form_to_json(const std::string& name, const LieAlgebra& k, const Representation& rep) {
  json out;
  out["name"] = name;
  out["k"] = algebra_to_json(name + ".k", k, std::nullopt, std::nullopt);
  json action = json::array();
  for (const auto& m : rep.action) action.push_back(matrix_to_json(m));
  out["rep"] = action;
  return out;
}

json certificate_to_json(const GenericityCertificate& c) {
  json out;
  out["witness"] = covector_to_json(c.witness);
  out["achieved_rank"] = c.achieved_rank;
  out["samples_tried"] = c.samples_tried;
  out["seed"] = c.seed;
  out["coefficient_bound"] = c.coefficient_bound;
  return out;
}

json index_report_to_json(const IndexReport& r) {
  json out;
  out["index"] = r.algebra_index;
  out["certificate"] = certificate_to_json(r.certificate);
  out["note"] = "sampled upper bound; exact when any sample is regular";
  return out;
}

json slice_report_to_json(const OrbitSliceReport& r) {
  json out;
  out["sigma"] = covector_to_json(r.sigma);
  out["nu"] = covector_to_json(r.nu);
  out["tau"] = covector_to_json(r.tau);
  out["dims"] = r.dims;
  out["subspaces"] = {
      {"g_sigma", subspace_to_json(r.g_sigma)},   {"g_nu", subspace_to_json(r.g_nu)},
      {"n_nu", subspace_to_json(r.n_nu)},         {"n_sigma", subspace_to_json(r.n_sigma)},
      {"n_natural", subspace_to_json(r.n_natural)}, {"direction", subspace_to_json(r.direction)},
      {"g_nu_tau", subspace_to_json(r.g_nu_tau)},
  };
  out["identity_verdicts"] = r.identity_verdicts;
  out["isotropy_check"] = r.isotropy_check;
  out["triviality"] = {{"one_point", r.triviality[0]},
                    {"zero_dim", r.triviality[1]},
                    {"g_nu_plus_n_full", r.triviality[2]},
                    {"g_sigma_equals_g_nu_tau", r.triviality[3]},
                    {"n_nu_inside_g_sigma", r.triviality[4]},
                    {"agree", r.triviality_agree}};
  return out;
}

json reduction_report_to_json(const ReductionReport& r) {
  json out;
  out["nu"] = covector_to_json(r.nu);
  out["sigma"] = covector_to_json(r.sigma);
  out["b_nu"] = algebra_to_json("b_nu", r.reduced.b_nu.quotient, std::nullopt, std::nullopt);
  out["n_natural"] = subspace_to_json(r.reduced.n_natural_ambient);
  out["nu_nonzero_on_n_nu"] = r.reduced.nu_nonzero_on_n_nu;
  out["delta"] = r.delta.delta;
  out["delta_certificate"] = certificate_to_json(r.delta.certificate);
  out["cocycle"] = {{"dim", r.cocycle.algebra.dim()}, {"form", matrix_to_json(r.cocycle.form)}};
  out["formula"] = {{"ind_g", r.formula.ind_g},
                    {"ind_g_n", r.formula.ind_g_n},
                    {"ind_b_nu", r.formula.ind_b_nu},
                    {"delta", r.formula.delta},
                    {"holds", r.formula.holds}};
  out["regular_correspondence"] = r.regular_correspondence;
  out["ind_g_certificate"] = certificate_to_json(r.ind_g_certificate);
  out["ind_b_certificate"] = certificate_to_json(r.ind_b_certificate);
  return out;
}

json panasyuk_report_to_json(const PanasyukReport& r) {
  json out;
  out["theorem13"] = reduction_report_to_json(r.base);
  out["ind_eta"] = r.ind_eta;
  out["holds"] = r.holds;
  out["agrees_with_theorem13"] = r.agrees_with_theorem13;
  return out;
}

json rais_report_to_json(const RaisReport& r) {
  json out;
  out["ind_g"] = r.ind_g;
  out["ind_k_v"] = r.ind_k_v;
  out["ind_k_nu"] = r.ind_k_nu;
  out["holds"] = r.holds;
  out["nu"] = covector_to_json(r.nu);
  return out;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

json make_envelope(const std::string& input_digest, std::uint64_t seed, json parameters,
                   json payload, json verdicts) {
  json out;
  out["tool_version"] = kToolVersion;
  out["input_digest"] = input_digest;
  out["seed"] = seed;
  out["parameters"] = std::move(parameters);
  out["payload"] = std::move(payload);
  out["verdicts"] = std::move(verdicts);
  return out;
}

}  // namespace lieorb
