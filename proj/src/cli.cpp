#include "hesscell/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <thread>

#include "hesscell/sweep.hpp"

namespace hesscell {

namespace {

struct Globals {
  std::string format = "json";
  unsigned jobs = 0;
  std::uint64_t seed = 1;
  int trunc = 20;
  std::size_t budget = 100000;
};

struct CaseArgs {
  int n = 0;
  std::string w, h, kind = "cell";
  unsigned long p = 0;
  bool oracle = false;
};

struct SweepArgs {
  int max_n = 4;
  std::string frobenius;
  bool oracle_nonfixed = false;
  int trials = 5;
};

Permutation parse_w(const CaseArgs& a) {
  Permutation w = Permutation::parse(a.w);
  if (w.size() != a.n)
    throw InvalidInput("permutation " + a.w + " has size " + std::to_string(w.size()) +
                       ", expected n=" + std::to_string(a.n));
  return w;
}

HessenbergFunction parse_h(const CaseArgs& a) {
  HessenbergFunction h = HessenbergFunction::parse(a.h);
  if (h.size() != a.n)
    throw InvalidInput("Hessenberg function " + a.h + " has size " + std::to_string(h.size()) +
                       ", expected n=" + std::to_string(a.n));
  return h;
}

std::string entry_name(char f, int k, int l) {
  return std::string(1, f) + "_" + std::to_string(k) + "_" + std::to_string(l);
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_gens(const Globals& g, const CaseArgs& a, bool cell, std::ostream& out) {
  const Permutation w = parse_w(a);
  const PolyMatrix m = cell ? cell_generators(w) : patch_generators(w);
  std::optional<HessenbergFunction> h;
  if (!a.h.empty()) h = parse_h(a);
  const char letter = cell ? 'g' : 'f';
  json entries = json::array();
  for (int k = 1; k <= a.n; ++k)
    for (int l = 1; l <= a.n; ++l) {
      if (h && k <= (*h)(l)) continue;
      if (!h && m(k, l).is_zero()) continue;
      if (g.format == "text")
        out << entry_name(letter, k, l) << " = " << m(k, l).str() << '\n';
      else
        entries.push_back({{"k", k}, {"l", l}, {"poly", to_json(m(k, l))}, {"text", m(k, l).str()}});
    }
  if (g.format != "text") {
    json j = {{"w", to_json(w)}, {"entries", entries}};
    if (h) j["h"] = to_json(*h);
    print_json(out, j);
  }
  return kExitOk;
}

int cmd_ideal(const Globals& g, const CaseArgs& a, std::ostream& out) {
  const IdealPresentation ideal =
      build_ideal(parse_w(a), parse_h(a), ideal_kind_from_string(a.kind));
  if (g.format == "text") {
    out << to_string(ideal.kind) << " ideal, w=" << ideal.w.str() << ", h=" << ideal.h.str()
        << ", height " << ideal.height << '\n';
    const char letter = ideal.kind == IdealKind::Cell ? 'g' : 'f';
    for (const auto& gen : ideal.generators)
      out << entry_name(letter, gen.k, gen.l) << " = " << gen.poly.str() << '\n';
  } else {
    print_json(out, to_json(ideal));
  }
  return kExitOk;
}

int cmd_fixed_points(const Globals& g, const CaseArgs& a, std::ostream& out) {
  const auto fps = fixed_points(parse_h(a));
  if (g.format == "text") {
    for (const auto& w : fps) out << w.str() << '\n';
    out << fps.size() << " fixed points\n";
  } else {
    json list = json::array();
    for (const auto& w : fps) list.push_back(to_json(w));
    print_json(out, {{"h", a.h}, {"count", fps.size()}, {"fixedPoints", list}});
  }
  return kExitOk;
}

int cmd_gb_check(const Globals& g, const CaseArgs& a, std::ostream& out) {
  const Permutation w = parse_w(a);
  const HessenbergFunction h = parse_h(a);
  const IdealPresentation ideal = build_ideal(w, h, IdealKind::Cell);
  const MonomialOrder order = order_n_w(w);
  const TriangularReport tri = triangular_analysis(ideal, order);
  const BuchbergerResult bb = buchberger_check(ideal, order);
  bool ok = tri.is_triangular && bb.is_groebner;
  json j = {{"w", to_json(w)},
            {"h", to_json(h)},
            {"fixedPoint", is_fixed_point(w, h)},
            {"Lambda", ideal.height},
            {"length", w.length()},
            {"triangular", to_json(tri)},
            {"buchberger",
             {{"isGroebner", bb.is_groebner}, {"pairsChecked", bb.pairs_checked}}}};
  if (!bb.is_groebner) j["buchberger"]["failingRemainder"] = to_json(bb.failing_remainder);
  if (tri.is_triangular) j["dim"] = w.length() - ideal.height;
  if (a.oracle) {
    const auto gb = reduced_gb_oracle(ideal.nonzero_polynomials(), order, g.budget);
    // The reduced basis must have the same leading monomials as the listed generators.
    std::vector<Monomial> ins, expected;
    for (const auto& p : gb) ins.push_back(initial_term(p, order).monomial);
    for (const auto& t : tri.initial_terms) expected.push_back(t.monomial);
    std::sort(ins.begin(), ins.end());
    std::sort(expected.begin(), expected.end());
    const bool agree = tri.is_triangular && ins == expected;
    json basis = json::array();
    for (const auto& p : gb) basis.push_back(p.str());
    j["oracle"] = {{"reducedBasis", basis}, {"initialIdealAgrees", agree}};
    ok = ok && agree;
  }
  j["ok"] = ok;
  if (g.format == "text") {
    out << "w=" << w.str() << " h=" << h.str() << " Lambda=" << ideal.height << '\n';
    for (std::size_t i = 0; i < tri.initial_terms.size(); ++i)
      out << "in(" << entry_name('g', tri.ordered_generators[i].k, tri.ordered_generators[i].l)
          << ") = " << tri.initial_terms[i].str() << '\n';
    out << "free:";
    for (const auto& v : tri.free_variables) out << ' ' << v.name();
    out << '\n' << "triangular: " << (tri.is_triangular ? "yes" : "no: " + tri.failure) << '\n';
    out << "groebner: " << (bb.is_groebner ? "yes" : "no") << '\n';
    if (a.oracle) out << "oracle agrees: " << (j["oracle"]["initialIdealAgrees"].get<bool>() ? "yes" : "no") << '\n';
  } else {
    print_json(out, j);
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_hilbert(const Globals& g, const CaseArgs& a, std::ostream& out) {
  const Permutation w = parse_w(a);
  const HessenbergFunction h = parse_h(a);
  const HilbertSeriesRational series = hilbert_formula(w, h);
  const auto coeffs = series.expand(g.trunc);
  const IdealPresentation ideal = build_ideal(w, h, IdealKind::Cell);
  const TriangularReport tri = triangular_analysis(ideal, order_n_w(w));
  const bool agree = tri.is_triangular && hilbert_oracle(tri, weights_for(w), g.trunc) == coeffs;
  if (g.format == "text") {
    auto factors = [](const std::vector<int>& ds) {
      std::string s;
      for (int d : ds) s += "(1-t^" + std::to_string(d) + ")";
      return s.empty() ? std::string("1") : s;
    };
    out << factors(series.numerator) << " / " << factors(series.denominator) << '\n';
    for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? " " : "") << coeffs[i].get_str();
    out << '\n' << "oracle agrees: " << (agree ? "yes" : "no") << '\n';
  } else {
    json j = to_json(series);
    j["w"] = to_json(w);
    j["h"] = to_json(h);
    j["trunc"] = g.trunc;
    j["coefficients"] = to_json(coeffs);
    j["oracleAgrees"] = agree;
    print_json(out, j);
  }
  return agree ? kExitOk : kExitCheckFailed;
}

int cmd_paving(const Globals& g, const CaseArgs& a, std::ostream& out) {
  const PavingReport rep = paving(parse_h(a));
  if (g.format == "text") {
    for (const auto& c : rep.cells) out << c.w.str() << " dim " << c.dim << '\n';
    out << "poincare:";
    for (long long c : rep.poincare) out << ' ' << c;
    out << "\nmax dim " << rep.max_dim << '\n';
  } else {
    print_json(out, to_json(rep));
  }
  return kExitOk;
}

int cmd_frobenius(const Globals& g, const CaseArgs& a, std::ostream& out) {
  if (!is_prime(a.p)) throw InvalidInput(std::to_string(a.p) + " is not prime");
  const Permutation w = parse_w(a);
  const HessenbergFunction h = parse_h(a);
  if (!is_fixed_point(w, h))
    throw InvalidInput("w=" + w.str() + " is not a fixed point for h=" + h.str());
  const CompatibilityReport rep = compatibility_check(make_cell_splitting_context(w, h, a.p));
  if (g.format == "text") {
    for (const auto& gc : rep.generators)
      out << "phi(" << entry_name('g', gc.k, gc.l) << ") mod J = " << gc.remainder.str() << '\n';
    out << "compatible: " << (rep.compatible ? "yes" : "no") << '\n';
  } else {
    print_json(out, to_json(rep));
  }
  return rep.compatible ? kExitOk : kExitCheckFailed;
}

std::vector<unsigned long> parse_primes(const std::string& s) {
  std::vector<unsigned long> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw InvalidInput("malformed prime list " + s);
    }
    if (pos != item.size()) throw InvalidInput("malformed prime list " + s);
    if (!is_prime(p)) throw InvalidInput(item + " is not prime");
    out.push_back(p);
  }
  return out;
}

int cmd_sweep(const Globals& g, const SweepArgs& a, std::ostream& out) {
  SweepOptions opt;
  opt.max_n = a.max_n;
  opt.frobenius_primes = parse_primes(a.frobenius);
  opt.frobenius_trials = a.trials;
  opt.oracle_all_n = a.oracle_nonfixed;
  opt.trunc = g.trunc;
  opt.jobs = g.jobs ? g.jobs : std::max(1u, std::thread::hardware_concurrency());
  opt.seed = g.seed;
  opt.budget = g.budget;
  const SweepReport rep = sweep(opt);
  if (g.format == "text") {
    for (const auto& c : rep.cases)
      for (const auto& f : c.failures)
        out << "FAIL n=" << c.n << " h=" << c.h.str() << " w=" << c.w.str() << ": " << f << '\n';
    for (const auto& s : rep.summaries)
      if (!s.ok) out << "FAIL h=" << s.h.str() << ": maximal cell dimension\n";
    out << rep.cases.size() << " cases, " << rep.fixed_point_cases << " fixed points, "
        << rep.failures << " failures\n";
  } else {
    print_json(out, to_json(rep));
  }
  return rep.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hessenberg Schubert cell ideals", "hesscell"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format)->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", g.jobs, "worker threads (0 = all cores)");
  app.add_option("--seed", g.seed);
  app.add_option("--trunc", g.trunc)->check(CLI::Range(1, 100000));
  app.add_option("--budget", g.budget, "step limit for the Groebner oracle");
  app.fallthrough();

  CaseArgs c;
  SweepArgs s;
  auto n_opt = [&](CLI::App* sub) { sub->add_option("--n", c.n)->required()->check(CLI::Range(1, 64)); };

  auto* patch = app.add_subcommand("patch-gens", "entries of the conjugate matrix on the w-patch");
  n_opt(patch);
  patch->add_option("--w", c.w)->required();
  patch->add_option("--h", c.h, "only list entries below the Hessenberg staircase");

  auto* cell = app.add_subcommand("cell-gens", "entries of the conjugate matrix on the cell");
  n_opt(cell);
  cell->add_option("--w", c.w)->required();
  cell->add_option("--h", c.h, "only list entries below the Hessenberg staircase");

  auto* ideal = app.add_subcommand("ideal", "generators of the patch or cell ideal");
  n_opt(ideal);
  ideal->add_option("--w", c.w)->required();
  ideal->add_option("--h", c.h)->required();
  ideal->add_option("--kind", c.kind)->check(CLI::IsMember({"patch", "cell"}));

  auto* fps = app.add_subcommand("fixed-points", "permutations whose cell meets the variety");
  n_opt(fps);
  fps->add_option("--h", c.h)->required();

  auto* gb = app.add_subcommand("gb-check", "triangularity and Buchberger criterion");
  n_opt(gb);
  gb->add_option("--w", c.w)->required();
  gb->add_option("--h", c.h)->required();
  gb->add_flag("--oracle", c.oracle, "also compute the reduced basis by completion");

  auto* hil = app.add_subcommand("hilbert", "Hilbert series of the cell quotient");
  n_opt(hil);
  hil->add_option("--w", c.w)->required();
  hil->add_option("--h", c.h)->required();

  auto* pav = app.add_subcommand("paving", "cell dimensions and Poincare polynomial");
  n_opt(pav);
  pav->add_option("--h", c.h)->required();

  auto* frob = app.add_subcommand("frobenius-check", "compatibility of the cell ideal with the splitting");
  n_opt(frob);
  frob->add_option("--w", c.w)->required();
  frob->add_option("--h", c.h)->required();
  frob->add_option("--p", c.p)->required();

  auto* sw = app.add_subcommand("sweep", "run every check for n = 1..max-n");
  sw->add_option("--max-n", s.max_n)->check(CLI::Range(1, 64));
  sw->add_option("--frobenius", s.frobenius, "comma-separated primes");
  sw->add_option("--frobenius-trials", s.trials)->check(CLI::Range(0, 100000));
  sw->add_flag("--oracle-nonfixed", s.oracle_nonfixed, "run the unit-ideal oracle for every n");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (patch->parsed()) return cmd_gens(g, c, false, out);
    if (cell->parsed()) return cmd_gens(g, c, true, out);
    if (ideal->parsed()) return cmd_ideal(g, c, out);
    if (fps->parsed()) return cmd_fixed_points(g, c, out);
    if (gb->parsed()) return cmd_gb_check(g, c, out);
    if (hil->parsed()) return cmd_hilbert(g, c, out);
    if (pav->parsed()) return cmd_paving(g, c, out);
    if (frob->parsed()) return cmd_frobenius(g, c, out);
    if (sw->parsed()) return cmd_sweep(g, s, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "error: unknown command\n";
  return kExitUsage;
}

}  // namespace hesscell
