#include "fmb/scenario.hpp"

#include <algorithm>
#include <random>

#include "fmb/wordalgebra.hpp"

namespace fmb {

namespace {

struct Report {
  Json inputs = Json::object();
  Json checks = Json::array();
  Json artifacts = Json::object();
  bool failed = false;

  void check(const std::string& name, bool ok, const std::string& detail) {
    Json c = Json::object();
    c["name"] = name;
    c["status"] = ok ? "pass" : "fail";
    c["detail"] = detail;
    checks.push_back(std::move(c));
    if (!ok) failed = true;
  }
  void evidence(const std::string& name, const std::string& detail) {
    Json c = Json::object();
    c["name"] = name;
    c["status"] = "evidence-only";
    c["detail"] = detail;
    checks.push_back(std::move(c));
  }
  ScenarioResult finish(const std::string& id) {
    Json rep = Json::object();
    rep["scenario"] = id;
    rep["inputs"] = inputs;
    rep["inputs_digest"] = json_digest(inputs);
    rep["checks"] = std::move(checks);
    rep["artifacts"] = std::move(artifacts);
    return {std::move(rep), failed ? 1 : 0};
  }
};

std::string first_or(const std::vector<std::string>& v, const std::string& ok_text) {
  return v.empty() ? ok_text : v.front();
}

// ---- word-image basis of the block family ---------------------------------

ScenarioResult scenario_lemma2(const ScenarioArgs& a) {
  Report R;
  R.inputs["m"] = a.m;
  R.inputs["n"] = a.n;
  R.inputs["s"] = a.s;
  R.inputs["p"] = a.p;
  FamilyBasis fb = family_basis(a.m, a.n, a.s, a.p);
  const Field& F = fb.env.algebra.field();
  FmbVerifyReport rep = verify_fmb(fb.env.algebra, fb.members);
  R.check("word-basis-verifies", rep.ok,
          rep.ok ? "the " + std::to_string(fb.members.size()) +
                       "-member word basis is a filtered multiplicative basis"
                 : rep.failures.front());
  R.check("dimension-count",
          static_cast<int>(fb.members.size()) == fb.env.algebra.dim(),
          "basis size " + std::to_string(fb.members.size()) + " against algebra dimension " +
              std::to_string(fb.env.algebra.dim()));
  Json names = Json::array();
  for (const std::string& s : fb.word_names) names.push_back(s);
  R.artifacts["member_names"] = std::move(names);
  R.artifacts["certificate"] = rep.cert ? certificate_to_json(F, *rep.cert) : Json(nullptr);
  return R.finish("lemma2");
}

// ---- quotient along a regular ideal, both directions ----------------------

ScenarioResult scenario_thm1(const ScenarioArgs& a) {
  if (a.random < 0 || a.random > 10000)
    throw std::invalid_argument("randomized instance count out of range");
  Report R;
  R.inputs["random"] = a.random;
  R.inputs["seed"] = a.seed;

  // fixed instance: words of length < 3 in x, y; ideal spanned by xx and
  // xy + yx. The decomposition must put xx inside the ideal and pair xy with
  // yx, leaving a five-member basis of the quotient.
  {
    Field F = Field::prime(2);
    WordAlgebra W = make_word_algebra(F, 2, 3);
    AugmentedAlgebra A(W.alg, W.eps);
    std::vector<Vec> members;
    for (int i = 0; i < A.dim(); ++i) members.push_back(A.alg().e(i));
    Vec pair_diff = vec_add(F, A.alg().e(4), A.alg().e(5));
    Subspace K(F, A.dim(), {A.alg().e(3), pair_diff});
    QuotientBasisResult q = quotient_fmb(A, members, K);
    R.check("seven-dim-rays",
            q.rays.i0 == std::vector<int>{3} && q.rays.i1 == std::vector<int>{4} &&
                q.rays.partner == std::vector<int>{5},
            "members inside the ideal: {xx}; paired member: xy with partner yx");
    R.check("seven-dim-quotient",
            q.report.ok && q.report.cert && q.report.cert->members.size() == 5,
            q.report.ok ? "five surviving members verify in the quotient"
                        : first_or(q.report.failures, ""));
    R.check("seven-dim-kernel",
            Subspace(F, A.dim(), q.rays.kernel_members) == K,
            "collected kernel members span the ideal");
    R.artifacts["rays"] = ray_decomposition_to_json(F, q.rays);
    R.artifacts["quotient_certificate"] =
        q.report.cert ? certificate_to_json(F, *q.report.cert) : Json(nullptr);
  }

  // randomized instances: monomial ideals in truncated word algebras, at
  // random enlarged by the difference of two top-length words, which pairs
  // those two members without breaking regularity
  struct Cfg {
    int gens, maxlen;
    std::vector<std::vector<int>> dead;
  };
  const std::vector<Cfg> cfgs = {
      {1, 4, {}},          {1, 6, {}},          {1, 10, {}}, {2, 3, {}}, {3, 2, {}},
      {2, 4, {{0, 0}, {1, 1}}}, {2, 4, {{1, 0}}},
  };
  std::mt19937_64 rng(a.seed);
  int passed = 0;
  Json instances = Json::array();
  for (int iter = 0; iter < a.random; ++iter) {
    const Cfg& cfg = cfgs[rng() % cfgs.size()];
    Field F = Field::prime(rng() % 2 ? 3 : 2);
    WordAlgebra W = make_word_algebra(F, cfg.gens, cfg.maxlen, cfg.dead);
    AugmentedAlgebra A(W.alg, W.eps);
    int dim = A.dim();
    std::vector<Vec> members;
    for (int i = 0; i < dim; ++i) members.push_back(A.alg().e(i));

    // monomial ideal generated by one random non-unit word
    int w0 = 1 + static_cast<int>(rng() % static_cast<uint64_t>(dim - 1));
    std::vector<int> inside;
    std::vector<Vec> rows;
    for (int i = 0; i < dim; ++i)
      if (word_contains_factor(W.words[i], W.words[w0])) {
        inside.push_back(i);
        rows.push_back(A.alg().e(i));
      }
    // top-length words outside the monomial part are candidates for pairing
    std::vector<int> top;
    for (int i = 0; i < dim; ++i)
      if (static_cast<int>(W.words[i].size()) == cfg.maxlen - 1 &&
          !std::binary_search(inside.begin(), inside.end(), i))
        top.push_back(i);
    int pair_a = -1, pair_b = -1;
    if (top.size() >= 2 && rng() % 2) {
      size_t u = rng() % top.size();
      size_t v = rng() % (top.size() - 1);
      if (v >= u) ++v;
      pair_a = std::min(top[u], top[v]);
      pair_b = std::max(top[u], top[v]);
      rows.push_back(vec_sub(F, A.alg().e(pair_a), A.alg().e(pair_b)));
    }
    Subspace K(F, dim, rows);

    bool ok = false;
    try {
      QuotientBasisResult q = quotient_fmb(A, members, K);
      ok = q.rays.regular && q.report.ok && Subspace(F, dim, q.rays.kernel_members) == K &&
           q.rays.i0 == inside;
      if (pair_a >= 0)
        ok = ok && q.rays.i1 == std::vector<int>{pair_a} &&
             q.rays.partner == std::vector<int>{pair_b};
      else
        ok = ok && q.rays.i1.empty();
    } catch (const std::exception&) {
      ok = false;
    }
    passed += ok ? 1 : 0;

    Json row = Json::object();
    row["gens"] = cfg.gens;
    row["maxlen"] = cfg.maxlen;
    row["p"] = F.p();
    row["dim"] = dim;
    row["kernel_dim"] = K.dim();
    row["paired"] = pair_a >= 0;
    row["ok"] = ok;
    instances.push_back(std::move(row));
  }
  R.check("randomized-roundtrips", passed == a.random,
          std::to_string(passed) + "/" + std::to_string(a.random) +
              " randomized regular-ideal instances round-tripped in both directions");
  R.artifacts["instances"] = std::move(instances);
  return R.finish("thm1-roundtrip");
}

// ---- transport of every produced certificate to the graded algebra --------

ScenarioResult scenario_thm3(const ScenarioArgs& a) {
  Report R;
  R.inputs["budget"] = a.budget;
  Json transported = Json::object();

  auto run_one = [&](const std::string& name, const AugmentedAlgebra& A,
                     const std::vector<Vec>& members) {
    FmbVerifyReport src = verify_fmb(A, members);
    GradedAlgebra G = associated_graded(A);
    GradedTransportResult tr = transport_fmb_to_gr(A, G, members);
    R.check("transport-" + name, src.ok && tr.report.ok,
            src.ok ? (tr.report.ok ? "source basis and its graded image both verify"
                                   : first_or(tr.report.failures, ""))
                   : first_or(src.failures, ""));
    Json art = Json::object();
    art["graded_members"] = basis_to_json(A.field(), tr.graded_members);
    art["certificate"] =
        tr.report.cert ? certificate_to_json(A.field(), *tr.report.cert) : Json(nullptr);
    transported[name] = std::move(art);
  };

  {
    Field F = Field::prime(2);
    WordAlgebra W = make_truncated_poly(F, 4);
    AugmentedAlgebra A(W.alg, W.eps);
    std::vector<Vec> members;
    for (int i = 0; i < 4; ++i) members.push_back(A.alg().e(i));
    run_one("power-basis-f2", A, members);
    // substituted generator x + x^2: still a filtered multiplicative basis,
    // but its members are no longer standard basis vectors
    std::vector<Vec> deformed = {A.alg().e(0), vec_add(F, A.alg().e(1), A.alg().e(2)),
                                 A.alg().e(2), A.alg().e(3)};
    run_one("deformed-power-basis", A, deformed);
  }
  {
    Field F = Field::prime(3);
    WordAlgebra W = make_truncated_poly(F, 5);
    AugmentedAlgebra A(W.alg, W.eps);
    std::vector<Vec> members;
    for (int i = 0; i < 5; ++i) members.push_back(A.alg().e(i));
    run_one("power-basis-f3", A, members);
  }
  const std::vector<std::tuple<std::string, int, int, int>> fams = {
      {"family-1-0-2", 1, 0, 2}, {"family-0-1-1", 0, 1, 1}, {"family-1-1-1", 1, 1, 1}};
  for (const auto& [name, m, n, s] : fams) {
    FamilyBasis fb = family_basis(m, n, s, 2);
    run_one(name, fb.env.algebra, fb.members);
  }
  {
    Field F = Field::prime(2);
    AugmentedAlgebra A = group_algebra(bundled_group("d8"), F);
    SearchOptions opt;
    opt.budget = a.budget;
    SearchOutcome out = closure_search_fmb(A, opt);
    R.check("search-finds-group-basis", out.status == SearchStatus::found,
            "closure search over the dihedral group algebra");
    if (out.cert) run_one("group-algebra-d8", A, out.cert->members);
  }
  R.artifacts["transported"] = std::move(transported);
  return R.finish("thm3-transport");
}

// ---- obstruction probe with evidence-only search --------------------------

ScenarioResult scenario_thm2(const ScenarioArgs& a) {
  Report R;
  R.inputs["samples"] = a.samples;
  R.inputs["seed"] = a.seed;
  Field F = Field::prime(3);
  RestrictedLieAlgebra L = lie_direct_sum(make_heisenberg3(F), make_nilcyclic(F, 1));
  Envelope E = build_envelope(L);
  std::vector<Vec> reps = {E.embed(unit_vec(F, 4, 0)), E.embed(unit_vec(F, 4, 1)),
                           E.embed(unit_vec(F, 4, 3))};
  ProbeReport pr = obstruction_probe(E.algebra, reps);
  R.check("six-monomial-span", pr.span_dim == 2,
          "the six permuted triple products span a space of dimension " +
              std::to_string(pr.span_dim) + " modulo the fourth power");
  bool facts_hold = !pr.facts.empty();
  for (const ProbeFact& f : pr.facts) facts_hold = facts_hold && f.holds;
  R.check("facts-consistent", facts_hold && !pr.contradiction,
          "every hypothesis-conclusion fact holds and no value-count contradiction appears");
  R.artifacts["probe"] = probe_report_to_json(F, pr);

  SearchOptions opt;
  opt.budget = a.samples;
  opt.seed = a.seed;
  SearchOutcome out = closure_search_fmb(E.algebra, opt);
  std::string verdict;
  switch (out.status) {
    case SearchStatus::found:
      verdict = "a filtered multiplicative basis was found -- evidence against rigidity here";
      break;
    case SearchStatus::none_exhaustive:
      verdict = "exhaustive enumeration found no filtered multiplicative basis";
      break;
    case SearchStatus::none_budget:
      verdict = "no filtered multiplicative basis among " + std::to_string(out.candidates_tried) +
                " sampled candidates; evidence only, not a nonexistence proof";
      break;
  }
  R.evidence("randomized-search", verdict);
  R.artifacts["search"] = search_outcome_to_json(F, out);
  return R.finish("thm2-probe");
}

// ---- graded group algebra against the envelope of the layer algebra -------

ScenarioResult scenario_quillen(const ScenarioArgs&) {
  Report R;
  const std::vector<std::pair<std::string, uint32_t>> instances = {
      {"c2", 2}, {"c4", 2}, {"d8", 2}, {"q8", 2}, {"m16", 2}, {"e27x3", 3}};
  Json reports = Json::object();
  for (const auto& [name, p] : instances) {
    QuillenReport rep = quillen_check(bundled_group(name), Field::prime(p));
    R.check("iso-" + name, rep.ok && rep.graded_dims_group == rep.graded_dims_env,
            rep.ok ? "graded group algebra matches the envelope of the layer algebra"
                   : first_or(rep.failures, ""));
    reports[name] = quillen_report_to_json(rep);
  }
  R.artifacts["reports"] = std::move(reports);
  return R.finish("quillen");
}

// ---- existence verdicts for the bundled groups ----------------------------

ScenarioResult scenario_corollary2(const ScenarioArgs& a) {
  Report R;
  R.inputs["budget"] = a.budget;
  VerdictOptions opt;
  opt.run_search = true;
  opt.search.budget = a.budget;
  Json verdicts = Json::object();

  auto run = [&](const std::string& name, uint32_t p) {
    Group G = bundled_group(name);
    Field F = Field::prime(p);
    GroupVerdict v = corollary2_report(G, F, opt);
    verdicts[name] = group_verdict_to_json(F, v);
    return v;
  };

  {
    GroupVerdict v = run("e27x3", 3);
    R.check("extraspecial-27-exponent-3",
            v.no_fmb && v.branch == "lie-class-2" &&
                v.verdict.find("no f.m.b. by Corollary 2(ii)") != std::string::npos &&
                v.lie_class == 2,
            v.verdict);
  }
  {
    GroupVerdict v = run("e27x9", 3);
    R.check("extraspecial-27-exponent-9", v.no_fmb && v.branch == "powerful", v.verdict);
  }
  {
    GroupVerdict v = run("d8", 2);
    R.check("dihedral-8",
            !v.powerful && v.search && v.search->status == SearchStatus::found, v.verdict);
  }
  {
    GroupVerdict v = run("q8", 2);
    R.check("quaternion-8",
            !v.powerful && v.search && v.search->status == SearchStatus::none_exhaustive,
            v.verdict);
  }
  {
    GroupVerdict v = run("c4", 2);
    R.check("cyclic-4", v.search && v.search->status == SearchStatus::found, v.verdict);
  }
  R.artifacts["verdicts"] = std::move(verdicts);
  return R.finish("corollary2");
}

// ---- the rational-function family -----------------------------------------

ScenarioResult scenario_lalpha(const ScenarioArgs& a) {
  Report R;
  R.inputs["p"] = a.p;
  Field F = Field::rational(a.p);
  Scalar t = F.t();
  RestrictedLieAlgebra L = make_alpha_family(F, t);

  R.check("parameter-has-no-pth-root", !F.pth_root(t).has_value(),
          "t is not a p-th power in the rational function field");

  GradedLie gl = graded_lie(L);
  R.artifacts["graded_lie"] = lie_to_json(gl.lie);
  Json layers = Json::array();
  for (int l : gl.layer_of) layers.push_back(l);
  R.artifacts["graded_layers"] = std::move(layers);

  GradedEnvelopeReport ge = graded_envelope_check(L);
  R.check("graded-envelope-isomorphism", ge.ok,
          ge.ok ? "the graded envelope and the envelope of the graded algebra are isomorphic "
                  "via the canonical generator map"
                : first_or(ge.failures, ""));
  Json gej = Json::object();
  gej["ok"] = ge.ok;
  gej["dim"] = ge.dim;
  Json base_dims = Json::array(), env_dims = Json::array();
  for (int d : ge.graded_dims_base) base_dims.push_back(d);
  for (int d : ge.graded_dims_env) env_dims.push_back(d);
  gej["graded_dims_base"] = std::move(base_dims);
  gej["graded_dims_env"] = std::move(env_dims);
  Json fails = Json::array();
  for (const std::string& s : ge.failures) fails.push_back(s);
  gej["failures"] = std::move(fails);
  R.artifacts["graded_envelope"] = std::move(gej);

  CyclicDecomposition dec = cyclic_decomposition(gl.lie);
  R.check("cyclic-decomposition-decided", dec.decomposable || !dec.obstruction.empty(),
          dec.decomposable ? "the graded algebra decomposes into cyclic summands"
                           : dec.obstruction);
  R.artifacts["decomposition"] = cyclic_decomposition_to_json(F, dec);
  bool three_cyclic = dec.decomposable && dec.summands.size() == 3;
  R.artifacts["three_cyclic_direct_sum"] = three_cyclic;
  R.artifacts["note"] =
      three_cyclic
          ? std::string("the graded algebra is a direct sum of three cyclic restricted "
                        "subalgebras")
          : std::string("the graded algebra is NOT a direct sum of three cyclic restricted "
                        "subalgebras: the induced graded p-map keeps x^[p] = t z with t not "
                        "a p-th power, and such a decomposition exists exactly when the "
                        "parameter is a p-th power");
  return R.finish("lalpha");
}

}  // namespace

std::vector<std::string> scenario_names() {
  return {"lemma2",  "thm1-roundtrip", "thm3-transport", "thm2-probe",
          "quillen", "corollary2",     "lalpha"};
}

ScenarioResult run_scenario(const std::string& name, const ScenarioArgs& args) {
  if (name == "lemma2") return scenario_lemma2(args);
  if (name == "thm1-roundtrip") return scenario_thm1(args);
  if (name == "thm3-transport") return scenario_thm3(args);
  if (name == "thm2-probe") return scenario_thm2(args);
  if (name == "quillen") return scenario_quillen(args);
  if (name == "corollary2") return scenario_corollary2(args);
  if (name == "lalpha") return scenario_lalpha(args);
  throw std::invalid_argument("unknown scenario \"" + name + "\"");
}

}  // namespace fmb
