#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "qverma/oscillator.hpp"

namespace qverma::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SessionConfig {
  int l = 1;
  std::string weight;
  std::string spins;
  int T = 3;
  int64_t D = 0;
  int seed = 1;
  int weights = 3;
  bool inject_fault = false;
  std::string kind = "verma";
  std::string limit;
  std::string out = ".";
  std::string numeric;
  std::vector<std::string> generators;
  std::string suite = "all";
  std::string report;
  std::string p;
  std::string order = "strict";
  std::string check = "all";
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

Rational parse_rational(const std::string& s) {
  try {
    Rational r(s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
    return r;
  } catch (const std::invalid_argument&) {
    throw UsageError("not a rational number: '" + s + "'");
  }
}

std::vector<Weight> weights_for(const SessionConfig& c) {
  if (!c.weight.empty()) {
    Weight w;
    for (const auto& s : split(c.weight, ',')) w.lambda.push_back(parse_rational(s));
    if (w.rank() != c.l) throw UsageError("--weight needs l + 1 = " + std::to_string(c.l + 1) + " entries");
    return {w};
  }
  std::mt19937 rng(static_cast<std::mt19937::result_type>(c.seed));
  std::uniform_int_distribution<int> num(-12, 12), den(1, 3);
  std::vector<Weight> out;
  for (int k = 0; k < std::max(1, c.weights); ++k) {
    Weight w;
    for (int i = 0; i <= c.l; ++i) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      w.lambda.push_back(r);
    }
    out.push_back(std::move(w));
  }
  return out;
}

SpinVector spins_for(const SessionConfig& c) {
  if (c.spins.empty()) return SpinVector{std::vector<int>(static_cast<std::size_t>(c.l + 1), 1)};
  SpinVector s;
  for (const auto& t : split(c.spins, ',')) {
    try {
      std::size_t pos = 0;
      s.s.push_back(std::stoi(t, &pos));
      if (pos != t.size()) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw UsageError("not an integer spin: '" + t + "'");
    }
  }
  if (s.rank() != c.l) throw UsageError("--spins needs l + 1 = " + std::to_string(c.l + 1) + " entries");
  return s;
}

QRing ring_for(const SessionConfig& c, int64_t needed) {
  if (c.D == 0) return QRing(needed);
  if (c.D % needed != 0) {
    throw UsageError("--D " + std::to_string(c.D) + " is not a multiple of the required " + std::to_string(needed));
  }
  return QRing(c.D);
}

std::optional<std::map<std::string, std::complex<double>>> numeric_for(const SessionConfig& c) {
  if (c.numeric.empty()) return std::nullopt;
  std::map<std::string, std::complex<double>> at;
  for (const auto& kv : split(c.numeric, ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--numeric expects name=value pairs");
    try {
      at[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("bad numeric value in '" + kv + "'");
    }
  }
  return at;
}

nlohmann::json weight_json(const Weight& w) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : w.lambda) a.push_back(x.get_str());
  return a;
}

void write_file(const std::filesystem::path& path, const nlohmann::json& j, int indent = 2) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path.string());
  f << j.dump(indent) << "\n";
}

std::vector<std::string> select(const std::vector<std::string>& all, const std::vector<std::string>& wanted) {
  if (wanted.empty()) return all;
  for (const auto& w : wanted) {
    if (std::find(all.begin(), all.end(), w) == all.end()) throw UsageError("unknown generator '" + w + "'");
  }
  return wanted;
}

std::vector<std::string> borel_ids(int l) {
  std::vector<std::string> ids;
  for (const char* p : {"e", "h"}) {
    for (int i = 0; i <= l; ++i) ids.push_back(p + std::to_string(i));
  }
  return ids;
}

int cmd_matrix(const SessionConfig& c, std::ostream& out) {
  std::string kind = c.kind;
  if (!c.limit.empty()) {
    if (c.limit != "pre" && c.limit != "post") throw UsageError("--limit must be pre or post");
    if (kind != "limit" && kind != "prelimit") throw UsageError("--limit applies to --kind limit only");
    kind = c.limit == "pre" ? "prelimit" : "limit";
  }
  const std::filesystem::path dir(c.out);
  std::filesystem::create_directories(dir);
  ExportOptions opt;
  opt.numeric = numeric_for(c);
  nlohmann::json meta = {{"kind", kind}, {"rank", c.l}, {"max_degree", c.T}};
  std::vector<std::pair<std::string, nlohmann::json>> files;

  if (kind == "verma" || kind == "loop") {
    const Weight w = weights_for(c).front();
    const VermaModule V(w, ring_for(c, root_degree_for(w)), VermaOptions{c.inject_fault});
    meta["weight"] = weight_json(w);
    meta["root_degree"] = V.ring().root_degree();
    opt.ring = &V.ring();
    if (kind == "verma") {
      for (const auto& id : select(V.generator_ids(), c.generators)) files.push_back({id, V.matrix(id, c.T).to_json(opt)});
    } else {
      const LoopModule L(V, spins_for(c));
      meta["spins"] = L.spins().s;
      opt.zeta_degree = true;
      for (const auto& id : select(L.generator_ids(), c.generators)) files.push_back({id, L.matrix(id, c.T).to_json(opt)});
    }
  } else if (kind == "prelimit" || kind == "limit") {
    const SpinVector s = spins_for(c);
    const Degeneration D(c.l, s, ring_for(c, 1));
    meta["spins"] = s.s;
    meta["root_degree"] = D.ring().root_degree();
    meta["zeta_tilde"] = "q^((2*lambda_" + std::to_string(c.l + 1) + " - " + std::to_string(c.l) + ")/" +
                         std::to_string(s.total()) + ") * zeta";
    opt.ring = &D.ring();
    for (const auto& id : select(borel_ids(c.l), c.generators)) {
      files.push_back({id, D.matrix(id, c.T, kind == "limit").to_json(opt)});
    }
  } else if (kind == "quotient" || kind == "oscillator") {
    const SpinVector s = spins_for(c);
    const QRing ring = ring_for(c, 1);
    meta["spins"] = s.s;
    meta["root_degree"] = ring.root_degree();
    opt.ring = &ring;
    opt.zeta_degree = true;
    const OscAlgebra A(c.l, ring);
    for (const auto& id : select(borel_ids(c.l), c.generators)) {
      if (kind == "quotient") {
        files.push_back({id, quotient_matrix(c.l, id, c.T, ring, &s).to_json(opt)});
      } else {
        const LoopGenerator g = LoopGenerator::parse(id);
        const OscElement image = gamma_twist(g, s) * A.rho(g);
        GeneratorMatrix<ReducedIndex> m(id, reduced_indices(c.l, c.T), c.T, [&](const ReducedIndex& r) {
          return A.chi_plus(image, FockVector::basis(r));
        });
        auto j = m.to_json(opt);
        j["oscillator_word"] = image.to_string();
        files.push_back({id, std::move(j)});
      }
    }
  } else {
    throw UsageError("unknown --kind '" + kind + "'");
  }
  for (auto& [id, j] : files) {
    j["meta"] = meta;
    const auto path = dir / (kind + "_" + id + ".json");
    write_file(path, j, -1);
    out << path.string() << "\n";
  }
  return 0;
}

const std::vector<std::string> kSuites = {"defining", "oracle",   "serre",    "yamane",     "appendix",
                                          "loop",     "limit",    "quotient", "oscillator", "all"};

QuotientOrder order_for(const SessionConfig& c) {
  if (c.order == "strict") return QuotientOrder::Strict;
  if (c.order == "componentwise") return QuotientOrder::Componentwise;
  throw UsageError("--order must be strict or componentwise");
}

Report run_suite(const std::string& suite, const SessionConfig& c) {
  const bool all = suite == "all";
  const int l = c.l;
  Report rep;
  auto want = [&](const char* s) { return all || suite == s; };
  const auto weights = weights_for(c);
  const SpinVector spins = spins_for(c);
  auto tag = [&](std::size_t k) { return weights.size() > 1 ? "w" + std::to_string(k) + "/" : std::string(); };
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const Weight& w = weights[k];
    const VermaModule V(w, ring_for(c, root_degree_for(w)), VermaOptions{c.inject_fault});
    if (want("defining")) rep.merge(verify_defining(V, c.T), tag(k));
    if (want("oracle")) rep.merge(verify_against_oracle(V, PbwAlgebra(l, V.ring()), c.T), tag(k));
    if (want("loop")) {
      const LoopModule L(V, spins);
      rep.merge(verify_loop_relations(L, c.T), tag(k));
      rep.merge(verify_loop_factorization(L, PbwAlgebra(l, V.ring()), c.T), tag(k));
    }
    if (want("limit") && spins.total() != 0) {
      rep.merge(verify_prelimit_consistency(Degeneration(l, spins), w, c.T), tag(k));
    }
  }
  if (want("serre") || want("yamane") || want("appendix")) {
    const PbwAlgebra alg(l, QRing());
    if (want("serre")) rep.merge(verify_serre(alg));
    if (want("yamane")) rep.merge(verify_yamane_rules(alg));
    if (want("appendix")) rep.merge(verify_appendix_lemmas(alg, 3));
  }
  if (want("limit")) {
    if (spins.total() == 0) throw UsageError("the limit suite needs s_0 + ... + s_l != 0");
    rep.merge(verify_degeneration(Degeneration(l, spins), c.T));
  }
  if (want("quotient")) {
    rep.merge(verify_quotient_relations(l, c.T));
    for (const auto& p : admissible_tuples(l, 2)) {
      if (p.forced_degree() < c.T) {
        rep.merge(verify_quotient_iso(p, c.T, order_for(c)));
      } else {
        rep.merge(verify_invariance(p, c.T));
      }
    }
  }
  if (want("oscillator")) {
    const OscAlgebra A(l);
    rep.merge(verify_oscillator_algebra(A, c.T));
    rep.merge(verify_rho_homomorphism(A));
    rep.merge(verify_oscillator_factorization(A, spins, c.T));
  }
  return rep;
}

int emit(const Report& rep, const std::string& label, const SessionConfig& c, std::ostream& out, std::ostream& err,
         nlohmann::json extra = {}) {
  nlohmann::json j = rep.to_json();
  j["suite"] = label;
  for (auto& [k, v] : extra.items()) j[k] = v;
  if (c.report.empty()) {
    out << j.dump(2) << "\n";
  } else {
    write_file(c.report, j);
  }
  err << label << ": " << rep.size() << " checks, " << rep.failure_count() << " failures\n";
  if (!rep.ok()) err << rep.summary();
  return rep.ok() ? 0 : 1;
}

int cmd_verify(const SessionConfig& c, std::ostream& out, std::ostream& err) {
  if (std::find(kSuites.begin(), kSuites.end(), c.suite) == kSuites.end()) {
    throw UsageError("unknown suite '" + c.suite + "'");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const Report rep = run_suite(c.suite, c);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  err << "elapsed " << std::fixed << std::setprecision(2) << secs << " s\n";
  return emit(rep, c.suite, c, out, err, {{"rank", c.l}, {"max_degree", c.T}});
}

int cmd_quotient(const SessionConfig& c, std::ostream& out, std::ostream& err) {
  const PTuple p = c.p.empty() ? PTuple::zero(c.l) : PTuple::parse(c.l, c.p);
  if (!p.admissible()) throw UsageError("p-tuple " + p.to_string() + " is not admissible");
  const QuotientOrder order = order_for(c);
  std::size_t union_size = 0;
  const auto basis = submodule_basis(p, c.T);
  const auto below = tuples_below(p, order);
  for (const auto& m : basis) {
    for (const auto& b : below) {
      if (in_submodule(b, m)) {
        ++union_size;
        break;
      }
    }
  }
  nlohmann::json xi = nlohmann::json::array();
  for (const auto& v : xi_p(p).values) xi.push_back(v.get_str());
  if (p.forced_degree() >= c.T) throw UsageError("--T must exceed the forced degree " + std::to_string(p.forced_degree()));
  const Report rep = verify_quotient_iso(p, c.T, order);
  return emit(rep, "quotient", c, out, err,
              {{"p", p.p},
               {"order", c.order},
               {"submodule_dim", basis.size()},
               {"union_dim", union_size},
               {"quotient_dim", basis.size() - union_size},
               {"xi", xi}});
}

int cmd_oscillator(const SessionConfig& c, std::ostream& out, std::ostream& err) {
  const OscAlgebra A(c.l);
  Report rep;
  if (c.check == "relations" || c.check == "all") {
    rep.merge(verify_oscillator_algebra(A, c.T));
    rep.merge(verify_rho_homomorphism(A));
  }
  if (c.check == "factorization" || c.check == "all") rep.merge(verify_oscillator_factorization(A, spins_for(c), c.T));
  if (c.check != "relations" && c.check != "factorization" && c.check != "all") {
    throw UsageError("--check must be relations, factorization or all");
  }
  return emit(rep, "oscillator", c, out, err);
}

int cmd_limit_check(const SessionConfig& c, std::ostream& out, std::ostream& err) {
  const SpinVector s = spins_for(c);
  if (s.total() == 0) throw UsageError("the degeneration needs s_0 + ... + s_l != 0");
  const Degeneration D(c.l, s);
  Report rep = verify_degeneration(D, c.T);
  for (const auto& w : weights_for(c)) rep.merge(verify_prelimit_consistency(D, w, c.T));
  return emit(rep, "limit-check", c, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  SessionConfig c;
  CLI::App app{"Exact Verma, loop, Borel and q-oscillator modules of U_q(gl_{l+1})", "qverma"};
  app.set_config("--config", "", "TOML file with option values; command-line flags win");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--l", c.l, "rank l")->check(CLI::Range(1, 9));
  app.add_option("--weight", c.weight, "highest weight lambda_1,...,lambda_{l+1} (rationals)");
  app.add_option("--spins", c.spins, "s_0,...,s_l (default all 1)");
  app.add_option("--T", c.T, "truncation degree")->check(CLI::NonNegativeNumber);
  app.add_option("--D", c.D, "q-root degree, q = v^D (default: smallest that works)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", c.seed, "seed for random weights when --weight is absent");
  app.add_option("--weights", c.weights, "number of random weights when --weight is absent")->check(CLI::PositiveNumber);
  app.add_flag("--inject-fault", c.inject_fault, "corrupt one E_i coefficient (pipeline self-test)");

  auto* matrix = app.add_subcommand("matrix", "export generator matrices as JSON");
  matrix->add_option("--kind", c.kind, "verma | loop | prelimit | limit | quotient | oscillator");
  matrix->add_option("--limit", c.limit, "pre | post, for --kind limit");
  matrix->add_option("--out", c.out, "output directory");
  matrix->add_option("--numeric", c.numeric, "evaluate entries at e.g. q=1.3,zeta=0.7");
  matrix->add_option("--generators", c.generators, "restrict to these generator ids")->delimiter(',');

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", c.suite, "defining | oracle | serre | yamane | appendix | loop | limit | quotient | "
                                       "oscillator | all");
  verify->add_option("--report", c.report, "write the JSON report here instead of stdout");
  verify->add_option("--order", c.order, "quotient order: strict | componentwise");

  auto* quotient = app.add_subcommand("quotient", "submodule counts and the quotient isomorphism for one p");
  quotient->add_option("--p", c.p, "p_12,p_13,p_23,... in colex order");
  quotient->add_option("--order", c.order, "strict | componentwise");
  quotient->add_option("--report", c.report, "write the JSON report here instead of stdout");

  auto* osc = app.add_subcommand("oscillator", "q-oscillator checks");
  osc->add_option("--check", c.check, "relations | factorization | all");
  osc->add_option("--report", c.report, "write the JSON report here instead of stdout");

  auto* limit = app.add_subcommand("limit-check", "u-polynomiality, limit agreement and Borel relations");
  limit->add_option("--report", c.report, "write the JSON report here instead of stdout");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }
  try {
    if (*matrix) return cmd_matrix(c, out);
    if (*verify) return cmd_verify(c, out, err);
    if (*quotient) return cmd_quotient(c, out, err);
    if (*osc) return cmd_oscillator(c, out, err);
    if (*limit) return cmd_limit_check(c, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace qverma::cli
