// Command-line front end: validate algebra files, run the orbit analyses and
// formula verifiers, emit deterministic reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lieorb/errors.hpp"
#include "lieorb/json_io.hpp"
#include "lieorb/random_gen.hpp"

using json = nlohmann::json;
using namespace lieorb;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitWitnessNotFound = 3;

struct CommonOpts {
  std::uint64_t seed = 0;
  std::size_t samples = 16;
  long bound = 7;
  bool json_out = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--seed", o.seed, "sampling seed")->capture_default_str();
  cmd->add_option("--samples", o.samples, "covector samples per genericity decision")
      ->capture_default_str();
  cmd->add_option("--bound", o.bound, "coefficient bound for sampled rationals")
      ->capture_default_str();
  cmd->add_flag("--json", o.json_out, "emit a JSON report envelope");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

AlgebraInput load_input(const std::string& path, std::string* digest) {
  const std::string bytes = read_file(path);
  if (digest) *digest = fnv1a_hex(bytes);
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
  return parse_algebra_input(j);
}

Covector parse_covector_flag(const std::string& text, std::size_t expected_dim) {
  Vec coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coords.push_back(Rat::parse(item));
  if (coords.size() != expected_dim)
    throw ParseError("covector has " + std::to_string(coords.size()) + " entries, expected " +
                     std::to_string(expected_dim));
  return Covector(expected_dim, std::move(coords));
}

json common_params(const CommonOpts& o) {
  return json{{"samples", o.samples}, {"bound", o.bound}};
}

void emit(const json& envelope) { std::cout << envelope.dump(2) << "\n"; }

IdealRef require_ideal(const AlgebraInput& in) {
  if (!in.ideal) throw ParseError("this command needs an \"ideal\" block in the input file");
  return IdealRef{*in.ideal};
}

int cmd_check(const std::string& path) {
  try {
    const AlgebraInput in = load_input(path, nullptr);
    std::cout << "ok: '" << in.name << "' is a valid Lie algebra of dimension "
              << in.algebra.dim() << "\n";
    if (in.ideal)
      std::cout << "ok: ideal of dimension " << in.ideal->dim() << " validated\n";
    if (in.split_form) std::cout << "ok: semidirect form validated\n";
    return kExitOk;
  } catch (const Error& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

int cmd_index(const std::string& path, const CommonOpts& o) {
  std::string digest;
  const AlgebraInput in = load_input(path, &digest);
  const IndexReport rep = index(in.algebra, o.seed, o.samples, o.bound);
  if (o.json_out) {
    emit(make_envelope(digest, o.seed, common_params(o),
                       json{{"kind", "index"}, {"algebra", in.name}, {"report", index_report_to_json(rep)}},
                       json{{"computed", true}}));
  } else {
    std::cout << "ind " << in.name << " = " << rep.algebra_index
              << "  (witness rank " << rep.certificate.achieved_rank << ", samples "
              << rep.certificate.samples_tried << ", bound " << o.bound
              << "; upper bound, exact when a sample is regular)\n";
  }
  return kExitOk;
}

int cmd_analyze(const std::string& path, const std::string& sigma_flag, const CommonOpts& o) {
  std::string digest;
  const AlgebraInput in = load_input(path, &digest);
  const IdealRef n = require_ideal(in);
  Covector sigma = Covector::zero(in.algebra.dim());
  if (!sigma_flag.empty())
    sigma = parse_covector_flag(sigma_flag, in.algebra.dim());
  else if (in.sigma)
    sigma = *in.sigma;
  else
    throw ParseError("analyze needs --sigma or a \"sigma\" block in the file");

  const OrbitSliceReport rep = analyze_slice(in.algebra, n, sigma);
  const bool pass = rep.all_identities_pass();
  if (o.json_out) {
    emit(make_envelope(digest, o.seed, common_params(o),
                       json{{"kind", "analyze"}, {"algebra", in.name}, {"report", slice_report_to_json(rep)}},
                       json{{"all_identities", pass}}));
  } else {
    std::cout << "slice analysis for '" << in.name << "'\n";
    for (const auto& [k, v] : rep.dims) std::cout << "  dim " << k << " = " << v << "\n";
    for (const auto& [k, v] : rep.identity_verdicts)
      std::cout << "  " << k << ": " << (v ? "pass" : "FAIL") << "\n";
    std::cout << "  isotropy check: " << (rep.isotropy_check ? "pass" : "FAIL") << "\n";
    std::cout << "  slice triviality conditions "
              << (rep.triviality[0] ? "all hold" : (rep.triviality_agree ? "all fail" : "DISAGREE"))
              << " (equivalence " << (rep.triviality_agree ? "pass" : "FAIL") << ")\n";
  }
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_reduce(const std::string& path, const std::string& nu_flag, const CommonOpts& o) {
  std::string digest;
  const AlgebraInput in = load_input(path, &digest);
  const IdealRef n = require_ideal(in);
  const std::size_t m = n.space.dim();

  Covector nu = Covector::zero(m);
  if (!nu_flag.empty()) {
    nu = parse_covector_flag(nu_flag, m);
  } else if (in.sigma) {
    nu = restrict_covector(*in.sigma, n.space);
  } else {
    // seeded n-regular draw
    const auto n_sub = subalgebra(in.algebra, n.space);
    const IndexReport idx_n = index(n_sub.algebra, substream(o.seed, 4), o.samples, o.bound);
    const std::size_t target = m - idx_n.algebra_index;
    bool found = false;
    for_each_sample(substream(o.seed, 31), o.samples, o.bound, m, [&](const Covector& cand) {
      if (rank(kirillov_form(n_sub.algebra, cand)) == target) {
        nu = cand;
        found = true;
        return false;
      }
      return true;
    });
    if (!found) throw WitnessNotFound("no n-regular covector sampled");
  }

  const ReducedAlgebra red = reduced_algebra(in.algebra, n, nu);
  const Covector sigma = in.sigma ? *in.sigma : extend_covector(nu, n.space, in.algebra.dim());
  const Covector tau = restrict_covector(sigma, red.g_nu.space);
  const Cocycle2 gamma = cocycle_gamma(in.algebra, n, nu, tau);

  json payload{{"kind", "reduce"},
               {"algebra", in.name},
               {"nu", covector_to_json(nu)},
               {"b_nu", algebra_to_json("b_nu", red.b_nu.quotient, std::nullopt, std::nullopt)},
               {"n_natural", subspace_to_json(red.n_natural_ambient)},
               {"nu_nonzero_on_n_nu", red.nu_nonzero_on_n_nu},
               {"cocycle", {{"dim", gamma.algebra.dim()}, {"form", matrix_to_json(gamma.form)}}}};
  if (o.json_out) {
    emit(make_envelope(digest, o.seed, common_params(o), payload, json{{"computed", true}}));
  } else {
    std::cout << "b_nu: dimension " << red.b_nu.quotient.dim() << ", "
              << (red.b_nu.quotient.is_abelian() ? "abelian" : "nonabelian") << "\n";
    std::cout << payload["b_nu"].dump(2) << "\n";
    std::cout << "cocycle gamma_tau on g_nu/n_nu (dim " << gamma.algebra.dim()
              << "):\n" << matrix_to_json(gamma.form).dump() << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& formula, const CommonOpts& o) {
  std::string digest;
  const AlgebraInput in = load_input(path, &digest);
  const bool want_t13 = formula == "theorem13" || formula == "all";
  const bool want_pan = formula == "panasyuk" || formula == "all";
  const bool want_rais = formula == "rais" || (formula == "all" && in.split_form.has_value());
  if (formula != "theorem13" && formula != "panasyuk" && formula != "rais" && formula != "all")
    throw ParseError("unknown formula '" + formula + "'");
  if (formula == "rais" && !in.split_form)
    throw ParseError("rais needs a semidirect input ({\"k\":..., \"rep\":...})");

  json payload{{"kind", "verify"}, {"algebra", in.name}};
  json verdicts = json::object();
  bool all_pass = true;

  if (want_t13 || want_pan) {
    const IdealRef n = require_ideal(in);
    if (want_t13) {
      const ReductionReport rep = verify_index_formula(in.algebra, n, o.seed, o.samples, o.bound);
      payload["theorem13"] = reduction_report_to_json(rep);
      verdicts["theorem13"] = rep.formula.holds;
      verdicts["regular_correspondence"] = rep.regular_correspondence;
      all_pass = all_pass && rep.formula.holds && rep.regular_correspondence;
      if (!o.json_out)
        std::cout << "theorem13: ind g = ind(g,n) + ind b_nu - delta  ->  " << rep.formula.ind_g
                  << " = " << rep.formula.ind_g_n << " + " << rep.formula.ind_b_nu << " - "
                  << rep.formula.delta << "  " << (rep.formula.holds ? "holds" : "FAILS") << "\n";
    }
    if (want_pan) {
      const PanasyukReport rep = verify_panasyuk(in.algebra, n, o.seed, o.samples, o.bound);
      payload["panasyuk"] = panasyuk_report_to_json(rep);
      verdicts["panasyuk"] = rep.holds;
      verdicts["panasyuk_agrees"] = rep.agrees_with_theorem13;
      all_pass = all_pass && rep.holds && rep.agrees_with_theorem13;
      if (!o.json_out)
        std::cout << "panasyuk: ind g = ind(g,n) + ind eta_tau  ->  " << rep.base.formula.ind_g
                  << " = " << rep.base.formula.ind_g_n << " + " << rep.ind_eta << "  "
                  << (rep.holds ? "holds" : "FAILS") << "\n";
    }
  }

  if (want_rais) {
    const auto& [k, rep] = *in.split_form;
    const RaisReport rr = verify_rais(k, rep, o.seed, o.samples, o.bound);
    payload["rais"] = rais_report_to_json(rr);
    verdicts["rais"] = rr.holds;
    all_pass = all_pass && rr.holds;
    if (!o.json_out)
      std::cout << "rais: ind g = ind(k,V) + ind k_nu  ->  " << rr.ind_g << " = " << rr.ind_k_v
                << " + " << rr.ind_k_nu << "  " << (rr.holds ? "holds" : "FAILS") << "\n";
  }

  if (o.json_out)
    emit(make_envelope(digest, o.seed, common_params(o), payload,
                       [&] {
                         json v = verdicts;
                         v["all_pass"] = all_pass;
                         return v;
                       }()));
  return all_pass ? kExitOk : kExitVerificationFailed;
}

int cmd_catalog(const std::string& name, bool as_semidirect) {
  if (name.empty()) {
    for (const auto& n : catalog_names()) std::cout << n << "\n";
    return kExitOk;
  }
  const CatalogEntry e = catalog(name);
  if (as_semidirect) {
    if (!e.split_form) throw ParseError("catalog entry '" + name + "' has no semidirect form");
    std::cout << split_form_to_json(e.name, e.split_form->first, e.split_form->second).dump(2)
              << "\n";
    return kExitOk;
  }
  const std::optional<Subspace> ideal =
      e.ideals.empty() ? std::nullopt : std::make_optional(e.ideals.front().second);
  std::cout << algebra_to_json(e.name, e.algebra, ideal, e.sigma).dump(2) << "\n";
  return kExitOk;
}

json selftest_payload(std::uint64_t seed, std::size_t samples, long bound, bool& all_pass) {
  json checks = json::object();
  auto record = [&](const std::string& name, bool ok) {
    checks[name] = ok;
    all_pass = all_pass && ok;
  };

  // catalog round-trips through the file format
  {
    bool ok = true;
    for (const auto& name : catalog_names()) {
      const auto e = catalog(name);
      const auto j = algebra_to_json(e.name, e.algebra, std::nullopt, std::nullopt);
      ok = ok && parse_algebra_input(j).algebra.same_structure(e.algebra);
    }
    record("catalog_roundtrip", ok);
  }

  // exact index table
  {
    const std::vector<std::pair<std::string, std::size_t>> expected = {
        {"abelian:4", 4}, {"heisenberg3", 1}, {"aff1", 0}, {"sl2", 1},
        {"gl2", 2},       {"e2", 1},          {"se3", 2},  {"so3", 1}};
    bool ok = true;
    for (const auto& [name, want] : expected)
      ok = ok && index(catalog(name).algebra, seed, samples, bound).algebra_index == want;
    record("index_table", ok);
  }

  // dimension identities and slice-triviality equivalence over the catalog
  {
    bool ok = true;
    for (const auto& pair : catalog_pairs()) {
      const IdealRef n{pair.ideal};
      for (std::size_t s = 0; s < 6 && ok; ++s) {
        Covector sigma = Covector::zero(pair.algebra.dim());
        if (s == 1)
          sigma = extend_covector(sample_covector(substream(seed, 77), s, pair.ideal.dim(), bound),
                                  pair.ideal, pair.algebra.dim());
        else if (s > 1)
          sigma = sample_covector(substream(seed, 78), s, pair.algebra.dim(), bound);
        ok = ok && analyze_slice(pair.algebra, n, sigma).all_identities_pass();
      }
      if (!ok) break;
    }
    record("dimension_identities", ok);
  }

  // theorem13 + panasyuk agreement on catalog pairs and generated pairs
  {
    bool ok = true;
    auto run_pair = [&](const LieAlgebra& g, const Subspace& ideal) {
      const IdealRef n{ideal};
      try {
        const auto rep = verify_panasyuk(g, n, seed, samples, bound);
        return rep.base.formula.holds && rep.holds && rep.agrees_with_theorem13 &&
               rep.base.regular_correspondence;
      } catch (const WitnessNotFound&) {
        const auto rep = verify_panasyuk(g, n, seed, samples, 13);
        return rep.base.formula.holds && rep.holds && rep.agrees_with_theorem13 &&
               rep.base.regular_correspondence;
      }
    };
    for (const auto& pair : catalog_pairs()) ok = ok && run_pair(pair.algebra, pair.ideal);
    for (std::size_t k = 0; k < 10 && ok; ++k) {
      const auto gen = random_algebra_ideal(seed, k);
      ok = ok && run_pair(gen.algebra, gen.ideal);
    }
    record("index_formulas", ok);
  }

  // Rais' formula on the named split forms and generated instances
  {
    bool ok = true;
    for (const auto& name : {"se3", "e2"}) {
      const auto e = catalog(name);
      ok = ok && verify_rais(e.split_form->first, e.split_form->second, seed, samples, bound).holds;
    }
    for (std::size_t k = 0; k < 5 && ok; ++k) {
      const auto gen = random_semidirect(seed, k);
      ok = ok && verify_rais(gen.base, gen.rep, seed, samples, bound).holds;
    }
    record("rais", ok);
  }

  // cocycle reconstruction for the Heisenberg slice
  {
    const auto h3 = catalog("heisenberg3");
    const IdealRef n{h3.ideals.front().second};
    const Covector nu(1, {Rat(1)});
    const Covector tau = restrict_covector(Covector(3, {0, 0, 1}),
                                           rep_isotropy(h3.algebra, n, nu));
    bool ok = cocycle_reconstruction_roundtrip(h3.algebra, n, nu, tau);
    record("cocycle_roundtrip", ok);
  }

  // self-membership equivalence over sampled covectors
  {
    bool ok = true;
    for (const auto& name : catalog_names()) {
      const auto e = catalog(name);
      for (std::size_t s = 0; s < 4 && ok; ++s) {
        const auto mu = sample_covector(substream(seed, 99), s, e.algebra.dim(), bound);
        const auto r = mu_self_membership(e.algebra, mu);
        ok = ok && r.vanishes_on_isotropy == r.in_adstar_span;
      }
    }
    record("self_membership", ok);
  }

  return json{{"checks", checks}};
}

int cmd_selftest(const CommonOpts& o) {
  bool all_pass = true;
  const json payload = selftest_payload(o.seed, o.samples, o.bound, all_pass);
  const json envelope = make_envelope(fnv1a_hex("selftest"), o.seed, common_params(o), payload,
                                      json{{"all_pass", all_pass}});
  emit(envelope);
  return all_pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact coadjoint-orbit structure toolkit"};
  app.require_subcommand(1);

  std::string path, sigma_flag, nu_flag, formula = "all", catalog_name;
  bool as_semidirect = false;
  CommonOpts opts;

  auto* check = app.add_subcommand("check", "validate an algebra file");
  check->add_option("file", path)->required();

  auto* idx = app.add_subcommand("index", "index of the algebra with certificate");
  idx->add_option("file", path)->required();
  add_common(idx, opts);

  auto* analyze = app.add_subcommand("analyze", "orbit-slice analysis for (algebra, ideal, sigma)");
  analyze->add_option("file", path)->required();
  analyze->add_option("--sigma", sigma_flag, "covector as comma-separated rationals");
  add_common(analyze, opts);

  auto* reduce = app.add_subcommand("reduce", "reduced algebra b_nu and the cocycle");
  reduce->add_option("file", path)->required();
  reduce->add_option("--nu", nu_flag, "covector on the ideal, comma-separated");
  add_common(reduce, opts);

  auto* verify = app.add_subcommand("verify", "index-formula verifiers");
  verify->add_option("file", path)->required();
  verify->add_option("--formula", formula, "theorem13|panasyuk|rais|all")->capture_default_str();
  add_common(verify, opts);

  auto* cat = app.add_subcommand("catalog", "emit a catalog algebra file");
  cat->add_option("name", catalog_name);
  cat->add_flag("--semidirect", as_semidirect, "emit the (k, rep) split form");

  auto* selftest = app.add_subcommand("selftest", "deterministic invariant sweep");
  add_common(selftest, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(path);
    if (idx->parsed()) return cmd_index(path, opts);
    if (analyze->parsed()) return cmd_analyze(path, sigma_flag, opts);
    if (reduce->parsed()) return cmd_reduce(path, nu_flag, opts);
    if (verify->parsed()) return cmd_verify(path, formula, opts);
    if (cat->parsed()) return cmd_catalog(catalog_name, as_semidirect);
    if (selftest->parsed()) return cmd_selftest(opts);
  } catch (const WitnessNotFound& e) {
    std::cerr << "witness not found: " << e.what() << " (escalate --samples/--bound)\n";
    return kExitWitnessNotFound;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
