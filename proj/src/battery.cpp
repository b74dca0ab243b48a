#include "asklab/battery.hpp"

#include <chrono>
#include <functional>

namespace asklab {

namespace {

bool fits_pow(std::uint64_t q, int e, std::uint64_t cap) {
    Int v = int_pow(Int(static_cast<unsigned long>(q)), static_cast<unsigned long>(e));
    return v <= static_cast<unsigned long>(cap);
}

std::string rep_label(const ModuleRep& rep) {
    return rep.name().empty() ? "theta" : rep.name();
}

// Runs one check body; exceptions become FAIL rows except budget misses,
// which drop the row (the combination is outside the configured budget).
void run_check(VerificationReport& report, const std::string& check, const std::string& params,
               const std::function<void(CheckRecord&)>& body) {
    CheckRecord row;
    row.check = check;
    row.params = params;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(row);
    } catch (const BudgetExceededError&) {
        return;
    } catch (const std::exception& e) {
        row.pass = false;
        row.params += std::string(" error=") + e.what();
    }
    row.runtime_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.rows.push_back(std::move(row));
}

void equality_row(CheckRecord& row, const Rat& lhs, const Rat& rhs, std::uint64_t q) {
    row.set_lhs(lhs, q);
    row.set_rhs(rhs, q);
    row.pass = lhs == rhs;
}

void check_field_axioms(VerificationReport& report, PrimePower q) {
    if (q.q > 49) return;
    run_check(report, "exactcore.field_axioms", "q=" + std::to_string(q.q),
              [&](CheckRecord& row) {
                  auto field = get_field(q);
                  const FiniteField& k = *field;
                  bool ok = true;
                  for (std::uint64_t a = 0; a < k.q() && ok; ++a)
                      for (std::uint64_t b = 0; b < k.q() && ok; ++b)
                          for (std::uint64_t c = 0; c < k.q() && ok; ++c) {
                              auto ea = static_cast<FiniteField::Elem>(a);
                              auto eb = static_cast<FiniteField::Elem>(b);
                              auto ec = static_cast<FiniteField::Elem>(c);
                              if (k.mul(k.mul(ea, eb), ec) != k.mul(ea, k.mul(eb, ec))) ok = false;
                              if (k.mul(ea, k.add(eb, ec)) !=
                                  k.add(k.mul(ea, eb), k.mul(ea, ec)))
                                  ok = false;
                          }
                  for (std::uint64_t a = 1; a < k.q() && ok; ++a) {
                      auto ea = static_cast<FiniteField::Elem>(a);
                      if (k.mul(ea, k.inv(ea)) != k.one()) ok = false;
                  }
                  row.set_lhs(Int(1));
                  row.set_rhs(Int(ok ? 1 : 0));
                  row.pass = ok;
              });
}

void check_intro(VerificationReport& report, PrimePower q, const Budget& budget) {
    for (int n = 2; n <= 4; ++n) {
        if (n == 4 && q.q > 5) continue;  // keep the closure small in default runs
        if (!fits_pow(q.q, n * (n - 1) / 2, budget.closure_cap)) continue;
        run_check(report, "intro.unipotent_orbits",
                  "n=" + std::to_string(n) + " q=" + std::to_string(q.q),
                  [&](CheckRecord& row) {
                      auto g = unitriangular_group(n, q, budget);
                      Int orbits = natural_orbit_count(*g, budget);
                      Int expected = Int(static_cast<long>(n)) *
                                         Int(static_cast<unsigned long>(q.q)) -
                                     n + 1;
                      row.set_lhs(orbits);
                      row.set_rhs(expected);
                      row.pass = orbits == expected;
                  });
    }
    run_check(report, "intro.gl2_orbits", "q=" + std::to_string(q.q), [&](CheckRecord& row) {
        auto g = general_linear_group(2, q, budget);
        Int orbits = natural_orbit_count(*g, budget);
        row.set_lhs(orbits);
        row.set_rhs(Int(2));
        row.pass = orbits == 2;
    });
}

void check_rep_identities(VerificationReport& report, const RepEntry& entry, PrimePower q,
                          int m_max, const Budget& budget, unsigned threads) {
    const ModuleRep& rep = entry.rep;
    const std::string who = "theta=" + rep_label(rep) + " q=" + std::to_string(q.q);
    const int l = rep.l(), d = rep.d(), e = rep.e();

    // orbit counting lemma: all three orbit modes agree
    if (fits_pow(q.q, l + d + e, budget.points))
        run_check(report, "lemma2.2.orbit_modes", who, [&](CheckRecord& row) {
            Int bfs = mtheta_orbit_count(rep, q, OrbitMode::bfs, budget, threads);
            Int burn = mtheta_orbit_count(rep, q, OrbitMode::burnside, budget, threads);
            Int formula = mtheta_orbit_count(rep, q, OrbitMode::formula, budget, threads);
            row.set_lhs(bfs);
            row.set_rhs(formula);
            row.pass = bfs == burn && burn == formula;
        });

    // the kernel pair scheme has exactly q^l ask(theta) points
    if (fits_pow(q.q, l + d, budget.points))
        run_check(report, "lemma3.1.pair_scheme", who, [&](CheckRecord& row) {
            AskValue a = ask(rep, q, budget, threads);
            Int pairs = affine_count(kernel_pair_scheme(rep), q, budget, threads);
            row.set_lhs(a.num);
            row.set_rhs(pairs);
            row.pass = a.num == pairs;
        });

    // saturation leaves all m-th power ask values unchanged away from the index
    {
        SaturateResult sat = saturate(rep);
        if (sat.index != 1 && mpz_divisible_ui_p(sat.index.get_mpz_t(), q.p) == 0) {
            for (int m = 1; m <= m_max; ++m)
                run_check(report, "lemma3.2.saturation",
                          who + " m=" + std::to_string(m) + " index=" + sat.index.get_str(),
                          [&, m](CheckRecord& row) {
                              Rat lhs = ask(mth_power(rep, m), q, budget, threads).to_rational();
                              Rat rhs =
                                  ask(mth_power(sat.rep, m), q, budget, threads).to_rational();
                              equality_row(row, lhs, rhs, q.q);
                          });
        }
    }

    // histogram route equals the naive route for every power
    for (int m = 1; m <= m_max; ++m)
        run_check(report, "lemma4.2.histogram", who + " m=" + std::to_string(m),
                  [&, m](CheckRecord& row) {
                      AskValue via_hist =
                          ask_from_histogram(rank_histogram(rep, q, budget, threads), m);
                      AskValue naive = ask_naive(mth_power(rep, m), q, budget, threads);
                      row.set_lhs(via_hist.to_rational(), q.q);
                      row.set_rhs(naive.to_rational(), q.q);
                      row.pass = via_hist == naive;
                  });

    // class number of the Heisenberg group, naive vs structural
    if (fits_pow(q.q, l + d + e, budget.naive_class_cap))
        run_check(report, "prop3.5.heisenberg", who, [&](CheckRecord& row) {
            auto g = heisenberg_group(rep, q, budget);
            Int naive = class_count_naive(*g, budget);
            Int structural =
                class_count_structural(rep, q, GroupConstruction::heisenberg, budget, threads);
            row.set_lhs(naive);
            row.set_rhs(structural);
            row.pass = naive == structural;
        });

    // class number of the Baer group of the hull
    {
        ModuleRep hull = alternating_hull(rep);
        if (fits_pow(q.q, hull.l() + hull.e(), budget.naive_class_cap) &&
            fits_pow(q.q, hull.l(), budget.points))
            run_check(report, "prop3.6.baer", "theta=hull(" + rep_label(rep) + ")" +
                                                  " q=" + std::to_string(q.q),
                      [&](CheckRecord& row) {
                          auto g = baer_group(hull, q, budget);
                          Int naive = class_count_naive(*g, budget);
                          Int structural = class_count_structural(
                              hull, q, GroupConstruction::baer, budget, threads);
                          row.set_lhs(naive);
                          row.set_rhs(structural);
                          row.pass = naive == structural;
                      });
    }
    if (entry.expect_alternating.value_or(false) &&
        fits_pow(q.q, l + e, budget.naive_class_cap))
        run_check(report, "prop3.6.baer", who, [&](CheckRecord& row) {
            auto g = baer_group(rep, q, budget);
            Int naive = class_count_naive(*g, budget);
            Int structural =
                class_count_structural(rep, q, GroupConstruction::baer, budget, threads);
            row.set_lhs(naive);
            row.set_rhs(structural);
            row.pass = naive == structural;
        });

    // ask of the double equals q^{d-e} ask of the hull of the dual
    {
        ModuleRep hull_dual = alternating_hull(knuth_dual(rep));
        if (fits_pow(q.q, hull_dual.l(), budget.points))
            run_check(report, "prop3.8v.hull_dual", who, [&](CheckRecord& row) {
                Rat lhs = ask(mth_power(rep, 2), q, budget, threads).to_rational();
                Rat rhs = ask(hull_dual, q, budget, threads).to_rational() *
                          rat_pow(q.q, d - e);
                equality_row(row, lhs, rhs, q.q);
            });
    }

    // the two reconstructions of m-th power ask values
    for (int m = 1; m <= std::min(2, m_max); ++m) {
        if (!fits_pow(q.q, m * (d + e), budget.points)) continue;
        VerificationReport sub = mth_power_identities(rep, m, q, budget, threads);
        report.merge(std::move(sub));
    }
}

void check_expectations(VerificationReport& report, const RepEntry& entry) {
    const std::string who = "theta=" + rep_label(entry.rep);
    if (entry.expect_alternating)
        run_check(report, "expect.alternating", who, [&](CheckRecord& row) {
            bool got = is_alternating(entry.rep);
            row.set_lhs(Int(got ? 1 : 0));
            row.set_rhs(Int(*entry.expect_alternating ? 1 : 0));
            row.pass = got == *entry.expect_alternating;
        });
    if (entry.expect_immersive)
        run_check(report, "expect.immersive", who, [&](CheckRecord& row) {
            bool got = is_immersive(entry.rep);
            row.set_lhs(Int(got ? 1 : 0));
            row.set_rhs(Int(*entry.expect_immersive ? 1 : 0));
            row.pass = got == *entry.expect_immersive;
        });
    run_check(report, "invariants.dual_involution", who, [&](CheckRecord& row) {
        bool ok = knuth_dual(knuth_dual(entry.rep)) == entry.rep;
        row.set_lhs(Int(1));
        row.set_rhs(Int(ok ? 1 : 0));
        row.pass = ok;
    });
}

void check_graph(VerificationReport& report, const Graph& graph, PrimePower q, int m_max,
                 bool first_q, const Budget& budget, unsigned threads) {
    ModuleRep gamma = graph_rep(graph);
    const std::string who =
        "graph=" + (graph.name.empty() ? "G" : graph.name) + " q=" + std::to_string(q.q);
    if (first_q)
        run_check(report, "sec4.2.immersive",
                  "graph=" + (graph.name.empty() ? "G" : graph.name), [&](CheckRecord& row) {
                      bool ok = is_immersive(gamma);
                      int expect_l = graph.n * (graph.n + 1) / 2 - graph.edge_count();
                      row.set_lhs(Int(gamma.l()));
                      row.set_rhs(Int(expect_l));
                      row.pass = ok && gamma.l() == expect_l;
                  });
    if (!fits_pow(q.q, gamma.l(), budget.points)) return;
    for (int m = 1; m <= m_max; ++m)
        run_check(report, "cor4.3.limit", who + " m=" + std::to_string(m),
                  [&, m](CheckRecord& row) {
                      LimitCongruence lc = limit_congruence_check(graph, q, m, budget, threads);
                      row.set_lhs(lc.scaled_ask);
                      row.set_rhs(lc.vmax);
                      row.congruence_exp = lc.difference_valuation;
                      row.pass = lc.holds;
                  });
}

void check_lie(VerificationReport& report, const LieData& lie, PrimePower q,
               const Budget& budget, unsigned threads) {
    const std::string name = lie.name.empty() ? "g" : lie.name;
    const std::string who = "lie=" + name + " q=" + std::to_string(q.q);
    if (q.p < static_cast<std::uint64_t>(lie.n)) return;  // exp needs p >= n
    const int r = static_cast<int>(lie.basis.size());
    if (!fits_pow(q.q, r, budget.points) || !fits_pow(q.q, r, budget.closure_cap)) return;

    run_check(report, "prop3.4.lie_orbits", who, [&](CheckRecord& row) {
        auto g = lie_exp_group(lie, q, budget);
        Int orbits = natural_orbit_count(*g, budget);
        Rat expected = ask(lie_inclusion_rep(lie), q, budget, threads).to_rational();
        if (!g->order_matches_expected()) row.params += " order_mismatch";
        equality_row(row, Rat(orbits), expected, q.q);
    });

    if (fits_pow(q.q, r, budget.naive_class_cap))
        run_check(report, "prop3.7.lie_classes", who, [&](CheckRecord& row) {
            auto g = lie_exp_group(lie, q, budget);
            Int classes = class_count_naive(*g, budget);
            Rat expected = ask(lie_adjoint_rep(lie), q, budget, threads).to_rational();
            equality_row(row, Rat(classes), expected, q.q);
        });

    if (fits_pow(q.q, 2 * lie.n, budget.points))
        run_check(report, "lemma3.9.orbit_reduction", who, [&](CheckRecord& row) {
            auto g = lie_exp_group(lie, q, budget);
            Int direct = natural_orbit_count(*g, budget);
            Int via_mtheta =
                mtheta_orbit_count(lie_inclusion_rep(lie), q, OrbitMode::bfs, budget, threads);
            Rat lhs = Rat(via_mtheta);
            Rat rhs = Rat(direct) * rat_pow(q.q, lie.n);
            equality_row(row, lhs, rhs, q.q);
        });

    if (fits_pow(q.q, 2 * r, budget.naive_class_cap) &&
        fits_pow(q.q, r, budget.naive_class_cap))
        run_check(report, "lemma3.10.class_reduction", who, [&](CheckRecord& row) {
            auto exp_group = lie_exp_group(lie, q, budget);
            Int k_small = class_count_naive(*exp_group, budget);
            auto big = baer_group(lie_adjoint_rep(lie), q, budget);
            Int k_big = class_count_naive(*big, budget);
            Rat lhs = Rat(k_big);
            Rat rhs = Rat(k_small) * rat_pow(q.q, r);
            equality_row(row, lhs, rhs, q.q);
        });
}

}  // namespace

VerificationReport verify_battery(const BatteryConfig& config, const Budget& budget,
                                  unsigned threads) {
    VerificationReport report;
    for (PrimePower q : config.qs) report.note_field(q);

    for (PrimePower q : config.qs) {
        check_field_axioms(report, q);
        check_intro(report, q, budget);
    }
    for (const RepEntry& entry : config.reps) {
        check_expectations(report, entry);
        for (PrimePower q : config.qs)
            check_rep_identities(report, entry, q, config.m_max, budget, threads);
    }
    for (const Graph& graph : config.graphs)
        for (std::size_t qi = 0; qi < config.qs.size(); ++qi)
            check_graph(report, graph, config.qs[qi], config.m_max, qi == 0, budget, threads);
    for (const LieData& lie : config.lie)
        for (PrimePower q : config.qs) check_lie(report, lie, q, budget, threads);
    for (const PipelineEntry& pe : config.pipelines) {
        try {
            VerificationReport sub =
                theorem_a_check(pe.scheme, pe.decomp, config.n_max, config.qs, budget, threads);
            report.merge(std::move(sub));
        } catch (const std::exception& e) {
            CheckRecord row;
            row.check = "sec4.4.pipeline";
            row.params = "Y=" + (pe.scheme.name.empty() ? "Y" : pe.scheme.name) +
                         " error=" + e.what();
            row.pass = false;
            report.rows.push_back(std::move(row));
        }
    }
    report.sort_rows();
    return report;
}

}  // namespace asklab
