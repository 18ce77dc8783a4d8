#include "spintime/harness/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>

#include "spintime/clifford.hpp"
#include "spintime/dynamics.hpp"
#include "spintime/error.hpp"
#include "spintime/flavor.hpp"
#include "spintime/metric.hpp"
#include "spintime/quantify.hpp"
#include "spintime/rng.hpp"
#include "spintime/spin_lie.hpp"

namespace spintime::harness {

namespace {

using Clock = std::chrono::steady_clock;
using spintime::to_string;
using harness::to_string;

json inertia_json(const Inertia& i) { return json::array({i.positive, i.negative, i.zero}); }
json pair_json(std::pair<int, int> p) { return json::array({p.first, p.second}); }

void expect(Report& r, json value, const char* provenance, bool ok) {
  r.expected_value = std::move(value);
  r.provenance = provenance;
  r.status = ok ? Status::Pass : Status::Fail;
}

Report claim(const std::string& id, const std::function<void(Report&)>& body) {
  Report r;
  r.claim_id = id;
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const ResourceError& e) {
    r.status = Status::Skipped;
    r.computed["note"] = std::string("resource cap: ") + e.what();
  } catch (const UnsupportedError& e) {
    r.status = Status::Skipped;
    r.computed["note"] = std::string("unsupported: ") + e.what();
  } catch (const UsageError&) {
    throw;
  } catch (const Error& e) {
    r.status = Status::Fail;
    r.computed["error"] = e.what();
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return r;
}

json sig_json(const Signature& s) { return json{{"p", s.p()}, {"q", s.q()}, {"diag", s.diag()}}; }

bool is_default_frame(const Signature& s) { return s == Signature::pq(3, 3); }

std::vector<int> cells_or(const ExperimentConfig& cfg, std::vector<int> fallback) {
  return cfg.cells.empty() ? fallback : cfg.cells;
}

Eigen::MatrixXd random_antisymmetric(Rng& rng, int n) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = rng.normal();
      m(j, i) = -m(i, j);
    }
  return m;
}

// ------------------------------------------------------------------ dims

std::vector<Report> suite_dims(const ExperimentConfig&) {
  return {claim("E:DIM", [](Report& r) {
    json rows = json::array();
    std::vector<std::string> dims, deltas;
    for (int k = 0; k <= 5; ++k) {
      const auto d = rank_dimensions(k);
      rows.push_back({k, d.dim_text, d.delta_text});
      dims.push_back(d.dim_text);
      deltas.push_back(d.delta_text);
    }
    r.inputs["ranks"] = "0..5";
    r.set_table({"rank", "dim", "delta"}, rows);
    const std::vector<std::string> want_dims = {"1", "2", "4", "16", "65536", "2^65536"};
    const std::vector<std::string> want_deltas = {"1", "1", "2", "12", "65520", "2^65536 - 65536"};
    expect(r, json{{"dims", want_dims}, {"deltas", want_deltas}}, "PAPER",
           dims == want_dims && deltas == want_deltas);
  })};
}

// --------------------------------------------------------------- killing

std::vector<Report> suite_killing(const ExperimentConfig& cfg) {
  const Signature sig = cfg.signature();
  std::vector<Report> out;
  out.push_back(claim("E:K", [&](Report& r) {
    const Algebra alg(sig);
    const auto gens = so_generators(alg, cfg.half);
    const auto km = killing_form(structure_constants(alg, gens), cfg.tol_eig);
    r.inputs = {{"signature", sig_json(sig)}, {"half", cfg.half}};
    r.computed["inertia_exact"] = inertia_json(km.inertia);
    r.computed["inertia_float"] = inertia_json(km.float_inertia);
    r.computed["generators"] = gens.size();
    bool diagonal = true;
    json diag = json::array();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      diag.push_back({gens[i].label(), to_string(km.K(i, i))});
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (i != j && km.K(i, j) != 0) diagonal = false;
    }
    r.computed["diagonal_in_gamma_basis"] = diagonal;
    r.computed["diagonal_entries"] = diag;
    const bool stable = km.inertia == km.float_inertia;
    if (is_default_frame(sig))
      expect(r, json::array({9, 6, 0}), "PAPER", km.inertia == Inertia{9, 6, 0} && stable && diagonal);
    else
      r.status = stable ? Status::Measured : Status::Fail;
  }));
  out.push_back(claim("PROP-BLOCKS", [&](Report& r) {
    if (sig.n() != 6) throw UnsupportedError("block decomposition needs six generators");
    const Algebra alg(sig);
    const auto gens = so_generators(alg, cfg.half);
    const auto km = killing_form(structure_constants(alg, gens), cfg.tol_eig);
    const auto rep = proposition_blocks(km, default_partition(gens));
    r.inputs = {{"signature", sig_json(sig)}, {"half", cfg.half}};
    json blocks = json::array();
    std::vector<int> sigs;
    for (const auto& b : rep.blocks) {
      blocks.push_back({{"block", to_string(b.block)}, {"size", b.members.size()},
                        {"inertia", inertia_json(b.inertia)}, {"signature", b.inertia.signature()}});
      sigs.push_back(b.inertia.signature());
    }
    r.computed["blocks"] = blocks;
    r.computed["signature_sum"] = rep.signature_sum;
    r.computed["total_signature"] = rep.total.signature();
    r.computed["block_diagonal"] = rep.block_diagonal;
    r.computed["off_block_nonzero"] = rep.off_block_nonzero.size();
    if (is_default_frame(sig))
      expect(r, json{{"block_signatures", {2, 2, 0, -1}}, {"sum", 3}}, "PAPER",
             sigs == std::vector<int>{2, 2, 0, -1} && rep.signature_sum == 3 && rep.block_diagonal);
    else
      r.status = rep.signature_sum == rep.total.signature() && rep.block_diagonal ? Status::Measured : Status::Fail;
  }));
  out.push_back(claim("K-CONVENTION", [&](Report& r) {
    const Algebra alg(sig);
    const auto k1 = killing_form(structure_constants(alg, so_generators(alg, true)), cfg.tol_eig);
    const auto k2 = killing_form(structure_constants(alg, so_generators(alg, false)), cfg.tol_eig);
    r.inputs = {{"signature", sig_json(sig)}};
    const bool scaled = k2.K == Rational(4) * k1.K;
    r.computed["K_unit_over_K_half"] = scaled ? json(4) : json(nullptr);
    r.computed["same_inertia"] = k1.inertia == k2.inertia;
    expect(r, json{{"ratio", 4}, {"same_inertia", true}}, "DERIVED", scaled && k1.inertia == k2.inertia);
  }));
  return out;
}

// -------------------------------------------------------------- clifford

std::vector<Report> suite_clifford(const ExperimentConfig& cfg) {
  const Signature sig = cfg.signature();
  std::vector<Report> out;
  out.push_back(claim("E:DIRAC", [&](Report& r) {
    const GammaRep rep = matrix_rep(sig);
    r.inputs["signature"] = sig_json(sig);
    r.computed["dim"] = rep.dim;
    r.computed["minimal_dim"] = minimal_real_dimension(sig);
    const bool ok = satisfies_anticommutator(rep);
    r.computed["anticommutator_exact"] = ok;
    expect(r, json{{"anticommutator", "2 g_ab 1"}, {"dim", minimal_real_dimension(sig)}}, "DERIVED",
           ok && rep.dim == minimal_real_dimension(sig));
  }));
  out.push_back(claim("CLIFF-ASSOC", [&](Report& r) {
    const Algebra alg(sig);
    const std::size_t dim = alg.dimension();
    std::size_t checked = 0, failures = 0;
    auto check = [&](Mask a, Mask b, Mask c) {
      const Blade ab = blade_product({a, 1}, {b, 1}, sig);
      const Blade bc = blade_product({b, 1}, {c, 1}, sig);
      ++checked;
      if (!(blade_product(ab, {c, 1}, sig) == blade_product({a, 1}, bc, sig))) ++failures;
    };
    if (sig.n() <= 6) {
      for (Mask a = 0; a < dim; ++a)
        for (Mask b = 0; b < dim; ++b)
          for (Mask c = 0; c < dim; ++c) check(a, b, c);
      r.inputs["mode"] = "exhaustive";
    } else {
      Rng rng(cfg.seed);
      for (int i = 0; i < 10000; ++i)
        check(static_cast<Mask>(rng.below(dim)), static_cast<Mask>(rng.below(dim)), static_cast<Mask>(rng.below(dim)));
      r.inputs["mode"] = "random";
      r.inputs["seed"] = cfg.seed;
    }
    r.inputs["signature"] = sig_json(sig);
    r.computed["triples"] = checked;
    r.computed["failures"] = failures;
    expect(r, 0, "DERIVED", failures == 0);
  }));
  out.push_back(claim("CLIFF-STRUCTURE", [&](Report& r) {
    const Algebra alg(sig);
    const GammaRep rep = matrix_rep(sig);
    const auto gens = so_generators(alg, cfg.half);
    std::vector<SparseMatrix<Rational>> mats;
    for (const auto& g : gens) mats.push_back(represent(g.element, rep));
    const bool same = structure_constants(alg, gens) == structure_constants(mats);
    r.inputs = {{"signature", sig_json(sig)}, {"half", cfg.half}};
    r.computed["blade_equals_matrix"] = same;
    expect(r, true, "DERIVED", same);
  }));
  return out;
}

// ------------------------------------------------------------- curvature

std::vector<Report> suite_curvature(const ExperimentConfig& cfg) {
  const Signature sig = cfg.signature();
  std::vector<Report> out;
  for (int axis : {5, 6}) {
    out.push_back(claim(axis == 5 ? "E:GGG" : "E:GGG-AXIS6", [&, axis](Report& r) {
      json rows = json::array();
      bool ok = true;
      for (int m = 1; m <= 4; ++m)
        for (int mp = m + 1; mp <= 4; ++mp) {
          const auto c = curvature_commutator(m, mp, sig, axis);
          const Blade target = blade_product(Blade::generator(m), Blade::generator(mp), sig);
          const bool exact = c.commutator == c.scale * CliffordElement::from_blade(target);
          ok = ok && exact && c.matrix_agrees && abs(c.scale) == 2;
          rows.push_back({m, mp, axis, to_string(c.scale), exact, c.matrix_agrees});
        }
      r.inputs = {{"signature", sig_json(sig)}, {"axis", axis}};
      r.set_table({"m", "m_prime", "axis", "scale", "blade_exact", "matrix_agrees"}, rows);
      expect(r, json{{"abs_scale", 2}}, "PAPER", ok);
    }));
  }
  return out;
}

// -------------------------------------------------------------- quantify

std::vector<Report> suite_quantify(const ExperimentConfig& cfg) {
  const Signature sig = cfg.signature();
  std::vector<Report> out;
  out.push_back(claim("QUANT-HOM", [&](Report& r) {
    const Algebra alg(sig);
    const GammaRep rep = cell_representation(sig);
    const auto gens = so_generators(alg, cfg.half);
    const auto st = structure_constants(alg, gens);
    const auto cells = cells_or(cfg, {2, 3});
    json rows = json::array();
    bool ok = true;
    for (int n : cells) {
      std::vector<SparseMatrix<Rational>> q;
      for (const auto& g : gens) q.push_back(quantify_operator(g.element, rep, n).materialize());
      std::size_t checked = 0, failures = 0;
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j) {
          SparseMatrix<Rational> rhs(q[i].rows(), q[i].cols());
          for (std::size_t k = 0; k < q.size(); ++k)
            if (st(i, j, k) != 0) rhs = rhs + st(i, j, k) * q[k];
          ++checked;
          if (!(commutator(q[i], q[j]) == rhs)) ++failures;
        }
      ok = ok && failures == 0;
      rows.push_back({n, checked, failures});
    }
    r.inputs = {{"signature", sig_json(sig)}, {"half", cfg.half}, {"cells", cells}};
    r.set_table({"N", "pairs_checked", "failures"}, rows);
    expect(r, 0, "DERIVED", ok);
  }));
  out.push_back(claim("QUANT-N1", [&](Report& r) {
    const GammaRep rep = cell_representation(sig);
    const auto cell = rep.bivector(1, 6, generator_coefficient(cfg.half));
    const bool same = quantify_operator(cell, 1).materialize() == cell;
    r.computed["identical"] = same;
    expect(r, true, "TRIVIAL", same);
  }));
  return out;
}

// --------------------------------------------------------------- orbital

std::vector<Report> suite_orbital(const ExperimentConfig& cfg) {
  const Signature sig = cfg.signature();
  std::vector<Report> out;
  out.push_back(claim("ORB-BRACKET", [&](Report& r) {
    const auto cells = cells_or(cfg, {1, 2, 3, 4});
    const Rational kappa = 2 * generator_coefficient(cfg.half);
    json rows = json::array();
    bool ok = true;
    for (int n : cells) {
      const auto y = yang_orbitals(n, sig, cfg.half);
      const auto ihat = y.ihat.materialize();
      std::size_t failures = 0;
      for (int m = 1; m <= 4; ++m) {
        const auto x = y.x[static_cast<std::size_t>(m - 1)].materialize();
        for (int mp = 1; mp <= 4; ++mp) {
          const auto p = y.p[static_cast<std::size_t>(mp - 1)].materialize();
          const auto lhs = commutator(x, p);
          const bool good = m == mp ? lhs == (-kappa * sig.metric(m)) * ihat : lhs.is_zero();
          if (!good) ++failures;
        }
      }
      const bool noncommuting = !commutator(y.x[0].materialize(), y.x[1].materialize()).is_zero();
      ok = ok && failures == 0 && noncommuting;
      rows.push_back({n, 16, failures, noncommuting});
    }
    r.inputs = {{"signature", sig_json(sig)}, {"half", cfg.half}, {"cells", cells}};
    r.set_table({"N", "pairs_checked", "failures", "x1_x2_noncommuting"}, rows);
    expect(r, cfg.half ? "[x^m, p_m'] = -delta g_mm ihat" : "[x^m, p_m'] = -2 delta g_mm ihat", "DERIVED", ok);
  }));
  return out;
}

// --------------------------------------------------------------- spectra

std::vector<Report> suite_spectra(const ExperimentConfig& cfg) {
  const Signature sig = cfg.signature();
  std::vector<Report> out;
  out.push_back(claim("SPECTRUM-BOUND", [&](Report& r) {
    const GammaRep rep = cell_representation(sig);
    const auto cells = cells_or(cfg, {1, 2, 3, 4});
    const double tol = cfg.tol_eig;
    json rows = json::array();
    bool ok = true;
    for (int n : cells) {
      bool spaced = true, symmetric = true, bounded = true, complete = true;
      double max_abs = 0;
      for (int a = 1; a <= sig.n(); ++a)
        for (int b = a + 1; b <= sig.n(); ++b) {
          const auto cell = rep.bivector(a, b, Rational(1));
          const double s = spectrum(cell).values.back();
          const Spectrum sp = spectrum(quantify_operator(cell, n));
          complete = complete && sp.complete;
          const auto& v = sp.values;
          for (std::size_t i = 0; i < v.size(); ++i) {
            max_abs = std::max(max_abs, std::abs(v[i]));
            const double off = v[i] - v.front();
            if (std::abs(off - std::round(off)) > tol) spaced = false;
            if (std::abs(v[i] + v[v.size() - 1 - i]) > tol) symmetric = false;
            if (std::abs(v[i]) > n * s + tol) bounded = false;
          }
        }
      ok = ok && spaced && symmetric && bounded;
      rows.push_back({n, max_abs, spaced, symmetric, bounded, complete});
    }
    r.inputs = {{"signature", sig_json(sig)}, {"coefficient", 1}, {"cells", cells}, {"tol_eig", tol}};
    r.set_table({"N", "max_abs", "integer_spaced", "symmetric", "bounded", "complete"}, rows);
    expect(r, "integer-spaced, symmetric, |lambda| <= N s", "DERIVED", ok);
  }));
  out.push_back(claim("UMKLAPP", [&](Report& r) {
    json rows = json::array();
    bool ok = true;
    const std::vector<std::pair<int, int>> splits = {{1, 1}, {1, 2}, {1, 3}, {2, 2}};
    for (const auto& [n1, n2] : splits)
      for (int m = 1; m <= 4; ++m) {
        const auto u = umklapp_check(n1, n2, m, sig, cfg.half, cfg.tol_eig);
        ok = ok && u.additive && u.bounded;
        rows.push_back({n1, n2, m, u.max1, u.max2, u.max12, u.bound, u.additive, u.bounded});
      }
    r.inputs = {{"signature", sig_json(sig)}, {"half", cfg.half}, {"tol_eig", cfg.tol_eig}};
    r.set_table({"N1", "N2", "m", "max1", "max2", "max12", "bound", "additive", "bounded"}, rows);
    expect(r, "max(N1+N2) = max(N1) + max(N2) <= (N1+N2) s", "PAPER", ok);
  }));
  return out;
}

// ----------------------------------------------------------- contraction

Report centralization_report(const ExperimentConfig& cfg, int m) {
  return claim("CENTRALIZATION", [&](Report& r) {
    const auto cells = cells_or(cfg, {1, 2, 3, 4, 5, 6});
    const auto res = contraction_experiment(cells, m, cfg.signature(), cfg.half);
    json rows = json::array();
    bool monotone = true;
    for (std::size_t i = 0; i < res.rows.size(); ++i) {
      rows.push_back({res.rows[i].cells, res.rows[i].centralization, res.slope});
      if (i && res.rows[i].centralization > res.rows[i - 1].centralization * (1 + 1e-12)) monotone = false;
    }
    const double drop = res.rows.back().centralization > 0
                            ? res.rows.front().centralization / res.rows.back().centralization
                            : std::numeric_limits<double>::infinity();
    r.inputs = {{"signature", sig_json(cfg.signature())}, {"half", cfg.half}, {"cells", cells}, {"m", m},
                {"measure", "|(ihat - <ihat>) phi|, phi = normalized x^m psi or p_m psi"}};
    r.set_table({"N", "residual", "slope_fit"}, rows);
    r.computed["slope"] = res.slope;
    r.computed["intercept"] = res.intercept;
    r.computed["drop_factor"] = drop;
    json vac = json::array();
    for (const auto& row : res.rows)
      vac.push_back({{"N", row.cells}, {"vacuum_residual", row.vacuum_residual},
                     {"bracket_residual", row.bracket_residual}, {"ihat_expectation", row.ihat_expectation},
                     {"ihat_square", row.ihat_square}});
    r.computed["vacuum"] = vac;
    expect(r, "non-increasing, first/last >= 2", "DERIVED",
           monotone && (res.rows.size() < 2 || drop >= 2.0));
  });
}

std::vector<Report> suite_contraction(const ExperimentConfig& cfg) {
  std::vector<Report> out;
  out.push_back(centralization_report(cfg, 1));
  out.push_back(claim("POLARIZATION", [&](Report& r) {
    const auto cells = cells_or(cfg, {1, 2, 3, 4, 5, 6});
    const auto res = contraction_experiment(cells, 1, cfg.signature(), cfg.half);
    // gamma_6 gamma_5 squares to -1 in the default frame, so c J_65 has
    // eigenvalues +-i c.
    const double s = to_double(generator_coefficient(cfg.half));
    json rows = json::array();
    bool ok = true;
    for (const auto& row : res.rows) {
      const bool good = std::abs(row.ihat_expectation - s) <= cfg.tol_eig &&
                        std::abs(row.ihat_square + s * s) <= cfg.tol_eig && row.vacuum_residual <= cfg.tol_eig;
      ok = ok && good;
      rows.push_back({row.cells, row.ihat_expectation, row.ihat_square, row.vacuum_residual, row.bracket_residual});
    }
    r.inputs = {{"cells", cells}, {"half", cfg.half}, {"tol_eig", cfg.tol_eig}};
    r.computed["cell_extremum"] = polarized_state(1, cfg.signature(), cfg.half).cell_extremum;
    r.set_table({"N", "ihat_imag", "ihat_square", "vacuum_residual", "bracket_residual"}, rows);
    expect(r, json{{"ihat_imag", s}, {"ihat_square", -s * s}}, "DERIVED", ok);
  }));
  return out;
}

// --------------------------------------------------------------- adjoint

std::vector<Report> suite_adjoint(const ExperimentConfig& cfg) {
  const Signature sig = cfg.signature();
  std::vector<Report> out;
  out.push_back(claim("E:GDELTA", [&](Report& r) {
    const Algebra alg(sig);
    const auto gens = so_generators(alg, cfg.half);
    const auto km = killing_form(structure_constants(alg, gens), cfg.tol_eig);
    std::vector<SparseMatrix<Rational>> d;
    for (const auto& g : gens) d.push_back(adjoint_operator(g.element, alg).matrix);
    std::optional<Rational> lambda;
    std::size_t pairs = 0, failures = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = i; j < d.size(); ++j) {
        ++pairs;
        const Rational t = (d[i] * d[j]).trace();
        if (!lambda && km.K(i, j) != 0) lambda = t / km.K(i, j);
        if (!lambda || t != *lambda * km.K(i, j)) ++failures;
      }
    r.inputs = {{"signature", sig_json(sig)}, {"half", cfg.half}};
    r.computed["pairs"] = pairs;
    r.computed["lambda"] = lambda ? json(to_string(*lambda)) : json(nullptr);
    r.computed["failures"] = failures;
    expect(r, "tr(Delta_a Delta_b) = lambda K_ab, one lambda", "DERIVED", lambda.has_value() && failures == 0);
  }));
  out.push_back(claim("ADJ-ISO", [&](Report& r) {
    const Algebra alg(sig);
    const auto gens = so_generators(alg, cfg.half);
    std::vector<SparseMatrix<Rational>> d;
    for (const auto& g : gens) d.push_back(adjoint_operator(g.element, alg).matrix);
    const bool same = structure_constants(d) == structure_constants(alg, gens);
    bool unit = true;
    std::vector<Rational> one(alg.dimension()), img(alg.dimension());
    one[0] = 1;
    for (const auto& m : d) {
      m.apply<Rational>(one, img, [](const Rational& x) { return x; });
      unit = unit && std::all_of(img.begin(), img.end(), [](const Rational& x) { return x == 0; });
    }
    r.inputs = {{"signature", sig_json(sig)}, {"half", cfg.half}};
    r.computed["same_structure_constants"] = same;
    r.computed["delta_kills_unit"] = unit;
    expect(r, true, "PAPER", same && unit);
  }));
  out.push_back(claim("ADJ-RECON", [&](Report& r) {
    const Algebra alg(sig);
    std::size_t failures = 0, checked = 0;
    for (const auto& g : so_generators(alg, cfg.half)) {
      ++checked;
      if (!(adjoint_from_grassmann({g.a, g.b}, alg, cfg.half) == adjoint_operator(g.element, alg).matrix)) ++failures;
    }
    for (int a = 1; a <= sig.n(); ++a) {
      checked += 2;
      if (!(left_from_grassmann(a, alg) == alg.left_multiplication(alg.generator(a)))) ++failures;
      if (!(right_from_grassmann(a, alg) == alg.right_multiplication(alg.generator(a)))) ++failures;
    }
    r.inputs = {{"signature", sig_json(sig)}};
    r.computed["checked"] = checked;
    r.computed["failures"] = failures;
    expect(r, 0, "PAPER", failures == 0);
  }));
  return out;
}

// ---------------------------------------------------------------- metric

Report metric_table(const ExperimentConfig& cfg, const std::string& id,
                    const std::vector<std::pair<IndexPair, IndexPair>>& pairs) {
  return claim(id, [&](Report& r) {
    const Signature sig = cfg.signature();
    const auto cells = cells_or(cfg, {1, 2, 3, 4});
    json rows = json::array();
    json carriers = json::array();
    bool ok = true;
    for (const auto& [a, b] : pairs) {
      std::map<int, double> ratio;
      bool shared = false;
      for (int n : cells) {
        const auto qm = quantified_metric(a, b, n, sig, cfg.half);
        const auto s = metric_symmetry_analysis(qm);
        shared = !s.shared_indices.empty();
        ratio[n] = s.ratio;
        rows.push_back({n, pair_json(a), pair_json(b), s.sym_norm, s.skew_norm, s.ratio});
        carriers.push_back({{"N", n}, {"carrier", to_string(qm.carrier)}});
        if (!shared && s.skew_squared != 0) ok = false;
        if (shared && n == 1 && s.skew_squared == 0) ok = false;
      }
      // Strict decrease over consecutive N from 2 to 4 where available.
      if (shared)
        for (int n = 2; n < 4; ++n)
          if (ratio.count(n) && ratio.count(n + 1) && !(ratio[n + 1] < ratio[n])) ok = false;
    }
    r.inputs = {{"signature", sig_json(sig)}, {"half", cfg.half}, {"cells", cells}, {"norm", "frobenius"}};
    r.set_table({"N", "pairA", "pairB", "symNorm", "skewNorm", "ratio"}, rows);
    r.computed["carriers"] = carriers;
    expect(r, "shared-index ratio strictly decreasing N=2..4; distinct-index skew = 0", "PAPER", ok);
  });
}

std::vector<Report> suite_metric(const ExperimentConfig& cfg) {
  std::vector<Report> out;
  out.push_back(metric_table(cfg, "E:MMMM", {{{1, 5}, {2, 5}}, {{1, 2}, {3, 4}}, {{1, 6}, {2, 6}}}));
  out.push_back(claim("KILLING-TRACE", [&](Report& r) {
    const Signature sig = cfg.signature();
    const Algebra alg(sig);
    const auto gens = so_generators(alg, cfg.half);
    const auto km = killing_form(structure_constants(alg, gens), cfg.tol_eig);
    std::optional<Rational> lambda;
    std::size_t failures = 0, off_diagonal_nonzero = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const auto ko = killing_operator({gens[i].a, gens[i].b}, {gens[j].a, gens[j].b}, alg, cfg.half);
        if (i != j && ko.trace != 0) ++off_diagonal_nonzero;
        if (!lambda && km.K(i, j) != 0) lambda = ko.trace / km.K(i, j);
        if (!lambda || ko.trace != *lambda * km.K(i, j)) ++failures;
      }
    r.inputs = {{"signature", sig_json(sig)}, {"half", cfg.half}};
    r.computed["lambda"] = lambda ? json(to_string(*lambda)) : json(nullptr);
    r.computed["failures"] = failures;
    r.computed["off_diagonal_nonzero"] = off_diagonal_nonzero;
    expect(r, "trace(Delta_A Delta_B) proportional to K_AB, diagonal", "PAPER",
           lambda.has_value() && failures == 0 && off_diagonal_nonzero == 0);
  }));
  return out;
}

// ---------------------------------------------------------------- flavor

std::vector<Report> suite_flavor(const ExperimentConfig&) {
  std::vector<Report> out;
  out.push_back(claim("E:FFERMION", [](Report& r) {
    std::vector<int> sizes(4, 0);
    json rows = json::array();
    for (const auto& f : hyperbinary_basis()) {
      ++sizes[static_cast<std::size_t>(f.tier)];
      rows.push_back({f.serial, f.symbol, f.tier, to_string(f.kind), to_string(f.color), to_string(f.isospin)});
    }
    r.set_table({"serial", "symbol", "tier", "kind", "color", "isospin_slot"}, rows);
    r.computed["tier_sizes"] = sizes;
    expect(r, json::array({1, 1, 2, 12}), "PAPER", sizes == std::vector<int>{1, 1, 2, 12});
  }));
  out.push_back(claim("FLAVOR-ASSIGN", [](Report& r) {
    const bool ok = classify_flavor(1).isospin == IsospinSlot::U && classify_flavor(2).isospin == IsospinSlot::D &&
                    classify_flavor(4).color == Color::R && classify_flavor(8).color == Color::G &&
                    classify_flavor(12).color == Color::B;
    int quarks = 0;
    for (const auto& f : hyperbinary_basis()) quarks += f.kind == FermionKind::Quark;
    r.computed["quarks"] = quarks;
    expect(r, json{{"U", 1}, {"D", 2}, {"R", 4}, {"G", 8}, {"B", 12}, {"quarks", 12}}, "PAPER", ok && quarks == 12);
  }));
  out.push_back(claim("GRASSMANN-CAR", [](Report& r) {
    std::size_t failures = 0, checked = 0;
    for (int n : {4, 8}) {
      const GrassmannAlgebra g(n);
      const auto id = SparseMatrix<Rational>::identity(g.dimension());
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          checked += 3;
          if (!(anticommutator(g.mu(a), g.delta(b)) == (a == b ? id : SparseMatrix<Rational>(id.rows(), id.cols()))))
            ++failures;
          if (!anticommutator(g.mu(a), g.mu(b)).is_zero()) ++failures;
          if (!anticommutator(g.delta(a), g.delta(b)).is_zero()) ++failures;
        }
    }
    // Neutral flavor Clifford structure on the 16-dimensional space.
    const auto gam = flavor_gammas();
    const auto id = SparseMatrix<Rational>::identity(16);
    for (int a = 0; a < 4; ++a) {
      const auto plus = gam[static_cast<std::size_t>(a)] + gam[static_cast<std::size_t>(a + 4)];
      const auto minus = gam[static_cast<std::size_t>(a)] - gam[static_cast<std::size_t>(a + 4)];
      checked += 2;
      if (!(plus * plus == id)) ++failures;
      if (!(minus * minus == -id)) ++failures;
    }
    r.computed["relations_checked"] = checked;
    r.computed["failures"] = failures;
    expect(r, 0, "DERIVED", failures == 0);
  }));
  out.push_back(claim("ISOSPIN-CLOSURE", [](Report& r) {
    const auto iso = isospin_generators();
    json c = json::array();
    bool eps = true;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int k = 0; k < 3; ++k) {
          const Rational& v = iso.closure[a][b][k];
          if (v != 0) c.push_back({a + 1, b + 1, k + 1, to_string(v)});
          const int perm = (a == b || b == k || a == k) ? 0 : (((b - a + 3) % 3 == 1) ? 1 : -1);
          if (v != Rational(perm)) eps = false;
        }
    const GrassmannAlgebra g(8);
    std::vector<Rational> e5 = g.to_vector(g.generator(5)), img(g.dimension());
    iso.I[2].apply<Rational>(e5, img, [](const Rational& x) { return x; });
    r.inputs = {{"doublets", "(e5,e6), (e7,e8)"}, {"tau", "realified -i sigma_k / 2"}};
    r.computed["nonzero_constants"] = c;
    r.computed["I3_on_e5"] = g.from_vector(img).to_string();
    expect(r, "[I_a, I_b] = eps_abk I_k", "DERIVED", eps);
  }));
  return out;
}

// -------------------------------------------------------------- triality

std::vector<Report> suite_triality(const ExperimentConfig& cfg) {
  std::vector<Report> out;
  const TrialityTriple t = make_triality();
  out.push_back(claim("TRIALITY-RANK", [&](Report& r) {
    Rng rng(cfg.seed);
    int full = 0, samples = 0;
    std::vector<std::size_t> ranks;
    while (samples < 100) {
      Eigen::VectorXd v(8);
      for (auto& c : v) c = rng.normal();
      if (std::abs(neutral_norm(v)) < 1e-2 * v.squaredNorm()) continue;
      const auto d = triality_duality(t, TrialitySpace::V, v, 1e-9);
      ++samples;
      full += d.rank == 8;
      ranks.push_back(d.rank);
    }
    r.inputs = {{"seed", cfg.seed}, {"samples", samples}, {"rank_tol", 1e-9}, {"prng", Rng::kName}};
    r.computed["full_rank"] = full;
    r.computed["min_rank"] = *std::min_element(ranks.begin(), ranks.end());
    expect(r, 100, "DERIVED", full == 100);
  }));
  out.push_back(claim("TRIALITY-NULL", [&](Report& r) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(8);
    v(0) = 1;
    v(4) = 1;
    const auto d = triality_duality(t, TrialitySpace::V, v, 1e-9);
    r.inputs["vector"] = "e1 + e5";
    r.computed["neutral_norm"] = neutral_norm(v);
    r.computed["rank"] = d.rank;
    r.status = Status::Measured;
  }));
  out.push_back(claim("TRIALITY-SPINOR-FIXED", [&](Report& r) {
    Rng rng(cfg.seed + 1);
    json rows = json::array();
    for (TrialitySpace s : {TrialitySpace::SPlus, TrialitySpace::SMinus}) {
      std::size_t min_rank = 8;
      for (int i = 0; i < 20; ++i) {
        Eigen::VectorXd v(8);
        for (auto& c : v) c = rng.normal();
        min_rank = std::min(min_rank, triality_duality(t, s, v, 1e-9).rank);
      }
      rows.push_back({to_string(s), 20, min_rank});
    }
    r.inputs = {{"seed", cfg.seed + 1}};
    r.set_table({"fixed", "samples", "min_rank"}, rows);
    r.status = Status::Measured;
  }));
  out.push_back(claim("TRIALITY-CONJUGATION", [&](Report& r) {
    SparseMatrix<Rational> g = t.rep.identity();
    for (int n = 5; n <= 8; ++n) g = g * t.rep.gamma(n);
    const auto dense = g.to_dense();
    const bool match = t.conjugation == dense || t.conjugation == Rational(-1) * dense;
    r.computed["equals_pm_gamma5678"] = match;
    expect(r, true, "DERIVED", match);
  }));
  return out;
}

// -------------------------------------------------------------- dynamics

std::vector<Report> suite_dynamics(const ExperimentConfig& cfg) {
  const Signature sig = cfg.signature();
  std::vector<Report> out;
  out.push_back(claim("DYN-ORTHO", [&](Report& r) {
    Rng rng(cfg.seed);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      Eigen::MatrixXd a = random_antisymmetric(rng, 8);
      a *= 10.0 * (1.0 - rng.uniform()) / a.norm();
      worst = std::max(worst, dynamics_from_exponent(a).orthogonality_error);
    }
    r.inputs = {{"seed", cfg.seed}, {"samples", 100}, {"max_exponent_norm", 10}, {"tol_exp", cfg.tol_exp}};
    r.computed["max_orthogonality_error"] = worst;
    expect(r, json{{"max_error_below", cfg.tol_exp}}, "DERIVED", worst < cfg.tol_exp);
  }));
  out.push_back(claim("DYN-ISOSPIN-INVARIANCE", [&](Report& r) {
    Rng rng(cfg.seed + 2);
    std::array<Eigen::MatrixXd, 3> s, ih, s2, ih2;
    for (int k = 0; k < 3; ++k) {
      s[k] = random_antisymmetric(rng, 8);
      ih[k] = random_antisymmetric(rng, 8);
    }
    // Rotation about a random axis by a random angle.
    Eigen::Vector3d axis(rng.normal(), rng.normal(), rng.normal());
    const Eigen::Matrix3d rot = Eigen::AngleAxisd(rng.uniform(0, 2 * M_PI), axis.normalized()).toRotationMatrix();
    for (int k = 0; k < 3; ++k) {
      s2[k] = Eigen::MatrixXd::Zero(8, 8);
      ih2[k] = Eigen::MatrixXd::Zero(8, 8);
      for (int l = 0; l < 3; ++l) {
        s2[k] += rot(k, l) * s[l];
        ih2[k] += rot(k, l) * ih[l];
      }
    }
    const auto d1 = dynamics_vector(s, ih), d2 = dynamics_vector(s2, ih2);
    Eigen::EigenSolver<Eigen::MatrixXd> e1(d1.exponent, false), e2(d2.exponent, false);
    std::vector<double> v1, v2;
    for (int i = 0; i < 8; ++i) {
      v1.push_back(e1.eigenvalues()(i).imag());
      v2.push_back(e2.eigenvalues()(i).imag());
    }
    std::sort(v1.begin(), v1.end());
    std::sort(v2.begin(), v2.end());
    double diff = 0;
    for (int i = 0; i < 8; ++i) diff = std::max(diff, std::abs(v1[static_cast<std::size_t>(i)] - v2[static_cast<std::size_t>(i)]));
    r.inputs = {{"seed", cfg.seed + 2}};
    r.computed["max_spectrum_difference"] = diff;
    r.computed["discarded_symmetric_norm"] = d1.discarded_symmetric_norm;
    expect(r, json{{"max_difference_below", 1e-9}}, "DERIVED", diff < 1e-9);
  }));
  out.push_back(claim("TRACE-GAMMA", [&](Report& r) {
    const GammaRep rep = matrix_rep(sig);
    std::size_t failures = 0;
    for (int a = 1; a <= sig.n(); ++a) {
      if (trace_word({a}, rep) != 0) ++failures;
      for (int b = 1; b <= sig.n(); ++b) {
        const Rational want = a == b ? Rational(static_cast<long>(rep.dim) * sig.metric(a)) : Rational(0);
        if (trace_word({a, b}, rep) != want) ++failures;
      }
    }
    r.inputs = {{"signature", sig_json(sig)}};
    r.computed["dim"] = rep.dim;
    r.computed["failures"] = failures;
    expect(r, json{{"tr_gamma_a", 0}, {"tr_gamma_a_gamma_b", "dim * g_ab"}}, "PAPER", failures == 0);
  }));
  out.push_back(claim("TRACE-CYCLIC", [&](Report& r) {
    const GammaRep rep = matrix_rep(sig);
    Rng rng(cfg.seed + 3);
    std::size_t failures = 0;
    auto word = [&] {
      std::vector<int> w(1 + rng.below(20));
      for (auto& a : w) a = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(sig.n())));
      return w;
    };
    for (int i = 0; i < 50; ++i) {
      const auto u = word(), v = word();
      std::vector<int> uv = u, vu = v;
      uv.insert(uv.end(), v.begin(), v.end());
      vu.insert(vu.end(), u.begin(), u.end());
      if (trace_word(uv, rep) != trace_word(vu, rep)) ++failures;
      const Rational a(static_cast<long>(rng.below(7)) - 3, 2), b(static_cast<long>(rng.below(5)) + 1);
      const Polynomial p{{{a, u}, {b, v}}};
      if (trace_polynomial(p, rep) != a * trace_word(u, rep) + b * trace_word(v, rep)) ++failures;
    }
    r.inputs = {{"seed", cfg.seed + 3}, {"samples", 50}, {"max_word", 20}};
    r.computed["failures"] = failures;
    expect(r, 0, "DERIVED", failures == 0);
  }));
  out.push_back(claim("GREEN-FINITE", [&](Report& r) {
    const GammaRep rep = matrix_rep(sig);
    if (sig.n() < 6) throw UnsupportedError("green suite uses the six-generator cell");
    Rng rng(cfg.seed + 4);
    // Even dynamics vector from so(3) bivectors, so odd ports trace to zero.
    const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
    std::array<Eigen::MatrixXd, 3> s, ih;
    for (int k = 0; k < 3; ++k) {
      s[k] = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rep.dim), static_cast<Eigen::Index>(rep.dim));
      ih[k] = s[k];
      for (const auto& pr : pairs) {
        const Eigen::MatrixXd b = to_eigen(rep.bivector(pr[0], pr[1], Rational(1, 2)));
        s[k] += rng.normal() * b;
        ih[k] += rng.normal() * b;
      }
    }
    const DynamicsVector d = dynamics_vector(s, ih);
    const auto psi = polarized_state(1, sig, cfg.half).cell_vector;
    Eigen::MatrixXd proj(static_cast<Eigen::Index>(rep.dim), static_cast<Eigen::Index>(rep.dim));
    for (std::size_t i = 0; i < rep.dim; ++i)
      for (std::size_t j = 0; j < rep.dim; ++j)
        proj(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (psi[i] * std::conj(psi[j])).real();
    json rows = json::array();
    bool finite = true, odd_zero = true;
    auto add = [&](const std::string& name, const HistoryPort& port) {
      const auto g = green_contraction(d, port);
      finite = finite && std::isfinite(g.unnormalized) && (!g.normalized || std::isfinite(g.value));
      rows.push_back({name, g.normalized ? json(g.value) : json(nullptr), g.unnormalized, g.status});
      return g;
    };
    const auto id = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(rep.dim), static_cast<Eigen::Index>(rep.dim));
    add("identity", {{id}});
    for (int a = 1; a <= sig.n(); ++a) {
      const auto g = add("gamma_" + std::to_string(a), {{to_eigen(rep.gamma(a))}});
      if (std::abs(g.unnormalized) > 1e-9) odd_zero = false;
    }
    add("polarized_projector", {{proj}});
    add("projector_then_gamma12", {{proj, to_eigen(rep.bivector(1, 2))}});
    r.inputs = {{"seed", cfg.seed + 4}, {"ports", "identity, gamma_a, polarized projector"}};
    r.set_table({"port", "normalized", "unnormalized", "status"}, rows);
    r.computed["odd_ports_trace_zero"] = odd_zero;
    expect(r, json{{"finite", true}, {"odd_port_trace", 0}}, "PAPER", finite && odd_zero);
  }));
  out.push_back(claim("YANG-DIRAC-INVARIANCE", [&](Report& r) {
    const int n = 2;
    const auto a = yang_dirac_operator(n, sig, cfg.half);
    const auto y = yang_orbitals(n, sig, cfg.half);
    json violating = json::array();
    for (std::size_t k = 0; k < y.J.size(); ++k)
      if (!commutator(a.op, y.J[k].materialize()).is_zero()) violating.push_back(y.J[k].label());
    r.inputs = {{"cells", n}, {"half", cfg.half}};
    r.computed["violating_generators"] = violating;
    r.computed["nnz"] = a.op.nnz();
    expect(r, json::array(), "DERIVED", violating.empty());
  }));
  out.push_back(claim("YANG-DIRAC-GRADE", [&](Report& r) {
    const auto e = yang_dirac_element(sig, cfg.half);
    r.inputs = {{"cells", 1}, {"half", cfg.half}};
    r.computed["element"] = e.to_string();
    r.computed["grades"] = e.grades();
    r.computed["note"] = "each index occurs twice in the contraction, so every product reduces to a scalar";
    const auto g = e.grades();
    expect(r, json{{"contains_grade", 6}}, "PAPER", std::find(g.begin(), g.end(), 6) != g.end());
  }));
  return out;
}

// -------------------------------------------------------- curvature unit

std::vector<Report> suite_curvature_unit(const ExperimentConfig&) {
  std::vector<Report> out;
  out.push_back(claim("CURV-UNIT", [](Report& r) {
    const double t = 5.39e-44;
    const double v = curvature_unit(t);
    const double order = std::round(std::log10(v));
    r.inputs = {{"T_seconds", t}, {"c_m_per_s", kSpeedOfLight}};
    r.computed["curvature_m^-2"] = v;
    r.computed["log10"] = std::log10(v);
    r.computed["nearest_power_of_ten"] = order;
    expect(r, json{{"order_of_magnitude", 70}}, "PAPER", order == 70);
  }));
  out.push_back(claim("CURV-UNIT-SCALING", [](Report& r) {
    const bool natural = curvature_unit(1.0, true) == 1.0;
    const double ratio = curvature_unit(2e-44) / curvature_unit(1e-44);
    r.computed["natural_T1"] = curvature_unit(1.0, true);
    r.computed["doubling_ratio"] = ratio;
    expect(r, json{{"natural_T1", 1}, {"doubling_ratio", 0.25}}, "TRIVIAL",
           natural && std::abs(ratio - 0.25) < 1e-15);
  }));
  return out;
}

using Suite = std::vector<Report> (*)(const ExperimentConfig&);

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> r = {
      {"dims", suite_dims},         {"killing", suite_killing},   {"clifford", suite_clifford},
      {"curvature", suite_curvature}, {"quantify", suite_quantify}, {"orbital", suite_orbital},
      {"spectra", suite_spectra},   {"contraction", suite_contraction}, {"adjoint", suite_adjoint},
      {"metric", suite_metric},     {"flavor", suite_flavor},     {"triality", suite_triality},
      {"dynamics", suite_dynamics}, {"curvature-unit", suite_curvature_unit},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

std::vector<Report> run_suite(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<Report> out;
  for (const auto& [name, fn] : registry()) {
    if (cfg.suite != "all" && cfg.suite != name) continue;
    auto reports = fn(cfg);
    out.insert(out.end(), reports.begin(), reports.end());
    if (cfg.suite == name) return out;
  }
  if (cfg.suite != "all") throw UsageError("unknown suite '" + cfg.suite + "'");
  return out;
}

Report spectrum_report(const ExperimentConfig& cfg, std::pair<int, int> generator) {
  return claim("SPECTRUM", [&](Report& r) {
    const Signature sig = cfg.signature();
    const GammaRep rep = cell_representation(sig);
    const auto cells = cells_or(cfg, {1, 2, 3});
    const Rational c = generator_coefficient(cfg.half);
    const auto cell = rep.bivector(generator.first, generator.second, c);
    const double s = spectrum(cell).values.back();
    json rows = json::array();
    bool bounded = true;
    for (int n : cells) {
      const Spectrum sp = spectrum(quantify_operator(cell, n));
      std::vector<double> distinct;
      for (double v : sp.values)
        if (distinct.empty() || std::abs(v - distinct.back()) > cfg.tol_eig) distinct.push_back(v);
      bounded = bounded && sp.values.back() <= n * s + cfg.tol_eig && sp.values.front() >= -n * s - cfg.tol_eig;
      rows.push_back({n, sp.values.front(), sp.values.back(), sp.complete ? json(distinct) : json(nullptr),
                      sp.imaginary ? "imaginary" : "real", sp.complete});
    }
    r.inputs = {{"signature", sig_json(sig)}, {"generator", pair_json(generator)}, {"half", cfg.half},
                {"cells", cells}};
    r.computed["cell_extremum"] = s;
    r.set_table({"N", "min", "max", "distinct", "kind", "complete"}, rows);
    expect(r, "|lambda| <= N s", "DERIVED", bounded);
  });
}

Report contraction_report(const ExperimentConfig& cfg, int m) { return centralization_report(cfg, m); }

Report metric_scaling_report(const ExperimentConfig& cfg, std::pair<int, int> a, std::pair<int, int> b) {
  return metric_table(cfg, "METRIC-SCALING", {{a, b}});
}

Report trace_report(const ExperimentConfig& cfg, const std::string& text, const std::string& source) {
  Report r = claim("TRACE", [&](Report& rep_out) {
    const Signature sig = cfg.signature();
    const GammaRep rep = matrix_rep(sig);
    const Polynomial p = parse_polynomial(text, sig.n());
    const Rational t = trace_polynomial(p, rep);
    rep_out.inputs = {{"source", source}, {"signature", sig_json(sig)}, {"canonical", p.to_string()}};
    rep_out.computed["trace"] = to_string(t);
    rep_out.computed["trace_float"] = to_double(t);
    rep_out.computed["terms"] = p.terms.size();
    rep_out.status = Status::Measured;
  });
  return r;
}

}  // namespace spintime::harness
