// Command-line front end: every subcommand reads matrices/matroids as JSON
// (or the --uniform / --mu shorthands) and emits a JSON document on stdout.
// Exit codes: 0 ok, 1 error (JSON error object), 2 resource cap.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "orbitk/catalog.hpp"
#include "orbitk/cohomology.hpp"
#include "orbitk/groebner.hpp"
#include "orbitk/json_io.hpp"
#include "orbitk/kclass.hpp"
#include "orbitk/tensor.hpp"
#include "orbitk/verify.hpp"

using namespace orbitk;

namespace {

struct JobSpec {
  std::string subcommand;
  std::vector<int> uniform;  // r n
  std::string mu;            // "2,1,1"
  std::string matrix_file;
  std::string matroid_file;
  std::string v_file, w_file;
  std::string beta;  // "1,1,1,1"
  int k = 0;
  uint64_t seed = 1;
  long cap_steps = 0;
  bool as_printed = false;
  bool idouble = false;
  std::string level = "full";
  std::string flag;  // "1,2|1,2,3" nested sets for face matroids
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open " + path);
  json j;
  in >> j;
  return j;
}

RationalMatrix load_matrix(const JobSpec& job) {
  if (!job.matrix_file.empty()) return matrix_from_json(load_json_file(job.matrix_file));
  if (!job.uniform.empty()) {
    int r = job.uniform[0], n = job.uniform[1];
    if (r == 2) {
      RationalMatrix v(2, n);
      for (int j = 0; j < n; ++j) {
        v.at(0, j) = 1;
        v.at(1, j) = j;
      }
      return v;
    }
    // generic slopes via a Vandermonde pattern
    RationalMatrix v(r, n);
    for (int j = 0; j < n; ++j) {
      Rat p(1);
      for (int i = 0; i < r; ++i) {
        v.at(i, j) = p;
        p *= (j + 1);
      }
    }
    return v;
  }
  throw Error("usage", "an input matrix is required (--matrix or --uniform)");
}

Matroid load_matroid(const JobSpec& job) {
  if (!job.matroid_file.empty()) return matroid_from_json(load_json_file(job.matroid_file));
  if (!job.mu.empty())
    return Rank2Config::from_mu(Partition(parse_int_list(job.mu))).matroid();
  if (!job.uniform.empty()) return Matroid::uniform(job.uniform[0], job.uniform[1]);
  if (!job.matrix_file.empty())
    return Matroid::from_matrix(matrix_from_json(load_json_file(job.matrix_file)));
  throw Error("usage", "a matroid input is required (--matroid/--mu/--uniform/--matrix)");
}

json run_kclass(const JobSpec& job) {
  json out;
  if (!job.uniform.empty() && job.uniform[0] == 2) {
    int n = job.uniform[1];
    SchurExpansion k = k_uniform_rank2(n);
    out["engine"] = "uniform_closed_form";
    out["r"] = 2;
    out["n"] = n;
    out["terms"] = schur_to_json(k);
    if (job.as_printed) {
      Rank2Config cfg = Rank2Config::from_mu(Partition(std::vector<int>(n, 1)));
      out["as_printed_discrepancies"] =
          discrepancies_to_json(compare_rank2_closed_form(cfg));
    }
    return out;
  }
  if (!job.mu.empty()) {
    Rank2Config cfg = Rank2Config::from_mu(Partition(parse_int_list(job.mu)));
    SchurExpansion k = k_rank2(cfg);
    out["engine"] = "demazure_rank2";
    out["r"] = 2;
    out["n"] = cfg.n();
    out["terms"] = schur_to_json(k);
    if (job.as_printed)
      out["as_printed_discrepancies"] =
          discrepancies_to_json(compare_rank2_closed_form(cfg));
    return out;
  }
  RationalMatrix v = load_matrix(job);
  int rank = v.rank();
  if (rank == 2 && v.rows() == 2) {
    Rank2Config cfg = Rank2Config::from_matrix(v);
    SchurExpansion k = k_rank2(cfg);
    out["engine"] = "demazure_rank2";
    out["r"] = 2;
    out["n"] = cfg.n();
    out["terms"] = schur_to_json(k);
    if (job.as_printed && cfg.zero_columns() == 0)
      out["as_printed_discrepancies"] =
          discrepancies_to_json(compare_rank2_closed_form(cfg));
    return out;
  }
  // general input: Groebner oracle on I'_v (scheme-theoretic beyond the
  // proven-prime cases)
  GroebnerOptions opts;
  if (job.cap_steps > 0) opts.step_cap = job.cap_steps;
  QuotientData qd = quotient_data(iprime_generators(v), opts);
  out["engine"] = "groebner_oracle";
  out["r"] = v.rows();
  out["n"] = v.cols();
  out["terms"] = schur_to_json(qd.k_polynomial);
  out["scheme_theoretic"] = true;
  out["initial_ideal_squarefree"] = qd.initial_ideal_squarefree;
  return out;
}

json run_cohom(const JobSpec& job) {
  json out;
  if (!job.uniform.empty()) {
    int r = job.uniform[0], n = job.uniform[1];
    UniformClass uc = uniform_class_grassmannian(r, n);
    out["r"] = r;
    out["n"] = n;
    out["class"] = schur_to_json(uc.in_ut);
    json pairs = json::array();
    for (const auto& [a, b] : uc.bundle_pairs)
      pairs.push_back(json{{"s_dual", partition_to_json(a)}, {"q", partition_to_json(b)}});
    out["bundle_pairs"] = pairs;
    out["degree"] = degree_uniform(r, n);
    int codim = (n - r - 1) * (r - 1);
    Localization loc = interpolate_localization(
        r, n, codim,
        [&](const std::vector<int>& B, const std::vector<Rat>& t) {
          return localize_uniform_closed(B, r, n, t);
        },
        job.seed);
    out["gkm"] = gkm_check(loc);
    json local = json::array();
    for (const auto& [B, f] : loc.entries())
      local.push_back(json{{"B", B}, {"f", laurent_to_json(f)}});
    out["localizations"] = local;
    return out;
  }
  if (!job.mu.empty()) {
    Rank2Config cfg = Rank2Config::from_mu(Partition(parse_int_list(job.mu)));
    SchurExpansion k = k_rank2(cfg);
    int codim = codim_matrix_orbit(cfg.matroid(), 2);
    out["r"] = 2;
    out["n"] = cfg.n();
    out["codim"] = codim;
    out["multidegree"] = schur_to_json(multidegree(k, codim));
    return out;
  }
  throw Error("usage", "cohom needs --uniform R N or --mu");
}

json run_tensor(const JobSpec& job) {
  json out;
  SchurExpansion character(2, 0);
  RationalMatrix v(0, 0);
  bool have_matrix = false;
  if (!job.matrix_file.empty()) {
    v = matrix_from_json(load_json_file(job.matrix_file));
    have_matrix = true;
    if (v.rows() == 2 && v.rank() == 2) {
      Rank2Config cfg = Rank2Config::from_matrix(v);
      character = char_rank2(cfg.mu());
    }
  } else if (!job.mu.empty()) {
    Partition mu(parse_int_list(job.mu));
    character = char_rank2(mu);
    v = catalog::rank2_realization(
        Rank2Config::from_mu(mu),
        [&] {
          std::vector<Rat> s;
          for (int i = 0; i < mu.length(); ++i) s.emplace_back(i);
          return s;
        }());
    have_matrix = true;
  } else if (!job.uniform.empty() && job.uniform[0] == 2) {
    int n = job.uniform[1];
    character = char_uniform_rank2(n);
    v = load_matrix(job);
    have_matrix = true;
  } else {
    throw Error("usage", "tensor needs --matrix, --mu or --uniform 2 N");
  }

  if (!job.beta.empty()) {
    std::vector<int> beta = parse_int_list(job.beta);
    SchurExpansion k =
        (v.rows() == 2) ? k_rank2(Rank2Config::from_matrix(v)) : SchurExpansion(0, 0);
    out["beta"] = beta;
    out["character_at_beta"] = schur_to_json(hilbert_coefficient(k, beta));
  }
  out["character"] = schur_to_json(character);
  Int dim = 0;
  for (const auto& [key, c] : character.terms())
    dim += c * Int(key.first.part(0) - key.first.part(1) + 1);
  out["dimension"] = dim.get_str();
  if (have_matrix && v.cols() <= 7) {
    SnModule mod = schur_weyl_module(v);
    json mult = json::array();
    for (const auto& [lam, m] : sn_multiplicities(mod))
      mult.push_back(json{{"lambda", partition_to_json(lam)}, {"mult", m.get_str()}});
    out["oracle"] = json{{"dimension", mod.dimension()}, {"multiplicities", mult}};
  }
  return out;
}

json run_matroid(const JobSpec& job) {
  Matroid m = load_matroid(job);
  json out = matroid_to_json(m);
  out["tutte"] = laurent_to_json(m.tutte());
  out["multivariate_tutte"] = laurent_to_json(m.multivariate_tutte());
  out["rank_partition"] = partition_to_json(m.rank_partition());
  json nbc = json::array();
  for (int k = 0; k <= m.rank(); ++k) nbc.push_back(m.nbc_bases_of_truncation(k));
  out["nbc_bases_of_truncations"] = nbc;
  json comps = json::array();
  for (uint32_t c : m.connected_components()) {
    json comp = json::array();
    for (int i = 0; i < m.n(); ++i)
      if (c & (1u << i)) comp.push_back(i + 1);
    comps.push_back(comp);
  }
  out["connected_components"] = comps;
  if (m.rank() == 2 && m.loopless())
    out["parallelism_partition"] = partition_to_json(m.parallelism_partition());
  if (!job.flag.empty()) {
    std::vector<uint32_t> flag;
    std::string cur;
    auto push = [&]() {
      if (cur.empty()) return;
      uint32_t mask = 0;
      for (int e : parse_int_list(cur)) mask |= (1u << (e - 1));
      flag.push_back(mask);
      cur.clear();
    };
    for (char c : job.flag + "|") {
      if (c == '|') push();
      else cur += c;
    }
    out["face_matroid"] = matroid_to_json(m.face_matroid(flag));
  }
  return out;
}

json run_hooks(const JobSpec& job) {
  Matroid m = load_matroid(job);
  json out;
  out["fakedep"] = laurent_to_json(hook_enumerator_fakedep(m));
  if (job.as_printed) {
    out["dep_as_printed"] = laurent_to_json(dep_polynomial_as_printed(m));
    HookReport report = hook_discrepancy_report(m);
    out["dep_vs_fakedep"] = discrepancies_to_json(report.dep_vs_fakedep);
    out["printed_theorem_vs_fakedep"] = discrepancies_to_json(report.printed_vs_fakedep);
  }
  return out;
}

json run_ideal(const JobSpec& job) {
  RationalMatrix v = load_matrix(job);
  IdealPresentation ideal =
      job.idouble ? idoubleprime_generators(v) : iprime_generators(v);
  GroebnerOptions opts;
  if (job.cap_steps > 0) opts.step_cap = job.cap_steps;
  QuotientData qd = quotient_data(ideal, opts);
  json gens = json::array();
  for (const GradedPoly& g : ideal.gens) {
    json terms = json::array();
    for (const auto& [mono, c] : g.terms)
      terms.push_back(json{{"exps", mono}, {"coeff", rat_to_string(c)}});
    gens.push_back(terms);
  }
  Matroid m = Matroid::from_matrix(v);
  bool proven_radical =
      (m.rank() == 2 && m == Matroid::uniform(2, v.cols())) ||
      (m.rank() == v.cols() - 2 && m == Matroid::uniform(v.cols() - 2, v.cols()));
  return json{{"provenance", ideal.provenance},
              {"generators", gens},
              {"groebner_size", qd.groebner_size},
              {"k_polynomial", schur_to_json(qd.k_polynomial)},
              {"dimension", qd.dimension},
              {"degree", qd.degree},
              {"initial_ideal_squarefree", qd.initial_ideal_squarefree},
              {"radical_status", proven_radical ? "proven" : "conjectural"}};
}

json run_member(const JobSpec& job) {
  if (job.v_file.empty() || job.w_file.empty())
    throw Error("usage", "member needs --v and --w");
  RationalMatrix v = matrix_from_json(load_json_file(job.v_file));
  RationalMatrix w = matrix_from_json(load_json_file(job.w_file));
  return json{{"member", membership_test(w, v)}};
}

int run_verify(const JobSpec& job) {
  VerifyOptions opts;
  opts.seed = job.seed;
  opts.full = (job.level != "fast");
  auto results = run_acceptance(opts);
  json checks = json::array();
  bool all_pass = true;
  for (const auto& c : results) {
    std::cerr << (c.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.index << ": "
              << c.name << " -- " << c.detail << "\n";
    checks.push_back(json{{"index", c.index},
                          {"name", c.name},
                          {"pass", c.pass},
                          {"detail", c.detail}});
    all_pass = all_pass && c.pass;
  }
  std::cout << json{{"level", opts.full ? "full" : "fast"},
                    {"seed", job.seed},
                    {"pass", all_pass},
                    {"checks", checks}}
                   .dump(2)
            << "\n";
  return all_pass ? 0 : 1;
}

void fill_from_json_job(JobSpec& job, const json& j) {
  if (j.contains("subcommand")) job.subcommand = j["subcommand"].get<std::string>();
  if (j.contains("uniform")) job.uniform = j["uniform"].get<std::vector<int>>();
  if (j.contains("mu")) job.mu = j["mu"].get<std::string>();
  if (j.contains("matrix")) job.matrix_file = j["matrix"].get<std::string>();
  if (j.contains("matroid")) job.matroid_file = j["matroid"].get<std::string>();
  if (j.contains("v")) job.v_file = j["v"].get<std::string>();
  if (j.contains("w")) job.w_file = j["w"].get<std::string>();
  if (j.contains("beta")) job.beta = j["beta"].get<std::string>();
  if (j.contains("k")) job.k = j["k"].get<int>();
  if (j.contains("seed")) job.seed = j["seed"].get<uint64_t>();
  if (j.contains("cap_steps")) job.cap_steps = j["cap_steps"].get<long>();
  if (j.contains("as_printed")) job.as_printed = j["as_printed"].get<bool>();
  if (j.contains("idouble")) job.idouble = j["idouble"].get<bool>();
  if (j.contains("level")) job.level = j["level"].get<std::string>();
  if (j.contains("flag")) job.flag = j["flag"].get<std::string>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivariant K-classes, cohomology classes and matroid invariants "
               "of matrix orbit closures"};
  app.require_subcommand(0, 1);

  JobSpec job;
  std::string json_job_file;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--uniform", job.uniform, "uniform matroid: R N")->expected(2);
    cmd->add_option("--mu", job.mu, "parallelism partition, e.g. 2,1,1");
    cmd->add_option("--matrix", job.matrix_file, "matrix JSON file");
    cmd->add_option("--matroid", job.matroid_file, "matroid JSON file");
    cmd->add_option("--beta", job.beta, "multiplicity vector, e.g. 1,1,1,1");
    cmd->add_option("--k", job.k, "hook index");
    cmd->add_option("--seed", job.seed, "random seed");
    cmd->add_option("--cap-steps", job.cap_steps, "Groebner step cap");
    cmd->add_flag("--as-printed", job.as_printed, "include paper-as-printed comparators");
    cmd->add_option("--flag", job.flag, "nested flag sets, e.g. 1,2|1,2,3");
  };

  CLI::App* kclass = app.add_subcommand("kclass", "equivariant K-polynomial");
  add_common(kclass);
  CLI::App* cohom = app.add_subcommand("cohom", "multidegrees and the uniform class");
  add_common(cohom);
  CLI::App* tensor = app.add_subcommand("tensor", "tensor-module characters");
  add_common(tensor);
  CLI::App* matroid = app.add_subcommand("matroid", "matroid invariants");
  add_common(matroid);
  CLI::App* hooks = app.add_subcommand("hooks", "hook enumerators and reports");
  add_common(hooks);
  CLI::App* ideal = app.add_subcommand("ideal", "orbit closure ideal oracle");
  add_common(ideal);
  ideal->add_flag("--idouble", job.idouble, "use the rank-2 uniform cross-ratio ideal");
  CLI::App* member = app.add_subcommand("member", "orbit closure membership");
  member->add_option("--v", job.v_file, "reference matrix JSON")->required();
  member->add_option("--w", job.w_file, "candidate matrix JSON")->required();
  CLI::App* verify = app.add_subcommand("verify", "run the acceptance battery");
  verify->add_option("--level", job.level, "fast | full");
  verify->add_option("--seed", job.seed, "random seed");

  app.add_option("--json-job", json_job_file, "JSON job file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!json_job_file.empty()) fill_from_json_job(job, load_json_file(json_job_file));
    if (kclass->parsed()) job.subcommand = "kclass";
    else if (cohom->parsed()) job.subcommand = "cohom";
    else if (tensor->parsed()) job.subcommand = "tensor";
    else if (matroid->parsed()) job.subcommand = "matroid";
    else if (hooks->parsed()) job.subcommand = "hooks";
    else if (ideal->parsed()) job.subcommand = "ideal";
    else if (member->parsed()) job.subcommand = "member";
    else if (verify->parsed()) job.subcommand = "verify";
    if (job.subcommand.empty()) throw Error("usage", "a subcommand is required");

    if (job.subcommand == "verify") return run_verify(job);
    json out;
    if (job.subcommand == "kclass") out = run_kclass(job);
    else if (job.subcommand == "cohom") out = run_cohom(job);
    else if (job.subcommand == "tensor") out = run_tensor(job);
    else if (job.subcommand == "matroid") out = run_matroid(job);
    else if (job.subcommand == "hooks") out = run_hooks(job);
    else if (job.subcommand == "ideal") out = run_ideal(job);
    else if (job.subcommand == "member") out = run_member(job);
    else throw Error("usage", "unknown subcommand " + job.subcommand);
    std::cout << out.dump(2) << "\n";
    return 0;
  } catch (const Error& e) {
    std::cout << json{{"code", e.code()}, {"message", e.what()}}.dump() << "\n";
    return e.code() == "resource_cap" ? 2 : 1;
  } catch (const std::exception& e) {
    std::cout << json{{"code", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}
