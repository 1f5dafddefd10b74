#include "permlab/antichain.hpp"
#include "permlab/closure.hpp"
#include "permlab/errors.hpp"
#include "permlab/genfun.hpp"
#include "permlab/graph.hpp"
#include "permlab/io.hpp"
#include "permlab/kernels.hpp"
#include "permlab/oscillation.hpp"
#include "permlab/structure.hpp"
#include "permlab/superclass.hpp"
#include "permlab/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace permlab;
using io::json;

namespace {

enum Exit { kOk = 0, kVerificationFailed = 1, kUsage = 2, kResource = 3 };

struct Emission {
  json data;
  std::string text;
  int status = kOk;
};

struct Global {
  std::string format = "text";
  std::string output;
  int jobs = 0;
  std::string cache_dir;
  bool timing = false;
};

struct SpecArgs {
  int k = 3;
  std::string tau;
  std::string alpha;
  std::string a_file;
  bool split_end = false;

  void attach(CLI::App *cmd) {
    cmd->add_option("--k", k, "k (alpha has length k+1)")->capture_default_str();
    cmd->add_option("--tau", tau, "tau as a space-separated permutation of length k-1");
    cmd->add_option("--alpha", alpha, "alpha as a space-separated permutation of length k+1");
    cmd->add_option("--A-file", a_file, "explicit antichain A, one permutation per line");
    cmd->add_flag("--split-end-paths", split_end, "use A={1}, alpha=12 (k=1)");
  }

  AntichainSpec build() const {
    if (split_end)
      return AntichainSpec::split_end_paths();
    if (alpha.empty())
      throw InvalidInput("--alpha is required (or --split-end-paths)");
    const Permutation a = Permutation::parse(alpha);
    if (!a_file.empty()) {
      if (!tau.empty())
        throw InvalidInput("--tau and --A-file are mutually exclusive");
      return AntichainSpec::make(k, a, io::read_permutation_file(a_file));
    }
    if (tau.empty())
      throw InvalidInput("--tau or --A-file is required");
    return AntichainSpec::from_tau(k, Permutation::parse(tau), a);
  }
};

std::string join(const std::vector<BigInt> &v, const char *sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? sep : "") << v[i];
  return os.str();
}

std::string positions_text(const std::vector<int> &pos) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pos.size(); ++i)
    os << (i ? " " : "") << pos[i] + 1;
  return os.str();
}

json positions_json(const std::vector<int> &pos) {
  json a = json::array();
  for (int p : pos)
    a.push_back(p + 1);
  return a;
}

std::string lines(const std::vector<Permutation> &perms) {
  std::ostringstream os;
  io::write_permutations(os, perms);
  return os.str();
}

json prefixed(json head, const json &rest) {
  head.update(rest);
  return head;
}

ClosureOptions closure_options(const Global &g, int cutoff, bool no_stability) {
  ClosureOptions o;
  o.cutoff = cutoff;
  o.stability_check = !no_stability;
  o.cache_dir = g.cache_dir;
  return o;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"permlab: permutation patterns, oscillation antichains and their closures"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--output,-o", g.output, "write the result to this file instead of stdout");
  app.add_option("--jobs,-j", g.jobs, "worker threads (0 = OpenMP default)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--cache-dir", g.cache_dir, "directory for persisted closure tables")
      ->envname("PERMLAB_CACHE_DIR");
  app.add_flag("--timing", g.timing, "report elapsed time on stderr");

  std::function<Emission()> action;
  auto on = [&](CLI::App *cmd, std::function<Emission()> f) {
    cmd->callback([&action, f] { action = f; });
  };

  // perm -------------------------------------------------------------------
  auto *perm = app.add_subcommand("perm", "single-permutation operations");
  perm->require_subcommand(1);
  std::string host_s, pattern_s, pi_s;
  std::vector<std::string> blocks_s;
  int pattern_length = 0;
  bool dot = false;

  auto *contains_cmd = perm->add_subcommand("contains", "least occurrence of a pattern");
  contains_cmd->add_option("host", host_s, "host permutation")->required();
  contains_cmd->add_option("pattern", pattern_s, "pattern")->required();
  on(contains_cmd, [&] {
    const auto host = Permutation::parse(host_s), pattern = Permutation::parse(pattern_s);
    const auto occ = contains(host, pattern);
    Emission e;
    e.data = {{"host", io::to_json(host)}, {"pattern", io::to_json(pattern)}, {"contained", occ.has_value()}};
    e.data["positions"] = occ ? positions_json(occ->positions) : json(nullptr);
    e.text = occ ? "contained at positions " + positions_text(occ->positions) + "\n" : "not contained\n";
    return e;
  });

  auto *inflate_cmd = perm->add_subcommand("inflate", "substitute blocks into a quotient");
  inflate_cmd->add_option("quotient", pi_s, "quotient permutation")->required();
  inflate_cmd->add_option("blocks", blocks_s, "one block per quotient entry")->required();
  on(inflate_cmd, [&] {
    const auto q = Permutation::parse(pi_s);
    std::vector<Permutation> blocks;
    for (const auto &b : blocks_s)
      blocks.push_back(Permutation::parse(b));
    const auto r = inflate(q, blocks);
    return Emission{{{"quotient", io::to_json(q)}, {"blocks", io::to_json(blocks)}, {"result", io::to_json(r)}},
                    r.str() + "\n"};
  });

  auto *patterns_cmd = perm->add_subcommand("patterns", "all patterns of a permutation");
  patterns_cmd->add_option("perm", pi_s, "permutation")->required();
  patterns_cmd->add_option("--length", pattern_length, "only patterns of this length");
  on(patterns_cmd, [&] {
    const auto p = Permutation::parse(pi_s);
    const auto pats = pattern_length > 0 ? patterns_of_length(p, pattern_length) : patterns(p);
    return Emission{{{"perm", io::to_json(p)}, {"patterns", io::to_json(pats)}}, lines(pats)};
  });

  auto *graph_cmd = perm->add_subcommand("graph", "inversion graph");
  graph_cmd->add_option("perm", pi_s, "permutation")->required();
  graph_cmd->add_flag("--dot", dot, "emit DOT text");
  on(graph_cmd, [&] {
    const auto p = Permutation::parse(pi_s);
    const auto G = inversion_graph(p);
    json j = io::to_json(G);
    j = prefixed(json{{"perm", io::to_json(p)}}, j);
    std::ostringstream os;
    if (dot) {
      os << G.dot();
    } else {
      for (auto [u, v] : G.edges())
        os << u + 1 << ' ' << v + 1 << '\n';
      os << "connected " << (G.is_connected() ? "yes" : "no") << ", path "
         << (G.is_path() ? "yes" : "no") << '\n';
    }
    return Emission{j, os.str()};
  });

  auto *decompose_cmd = perm->add_subcommand("decompose", "top level of the substitution decomposition");
  decompose_cmd->add_option("perm", pi_s, "permutation")->required();
  on(decompose_cmd, [&] {
    const auto p = Permutation::parse(pi_s);
    const auto d = simple_quotient(p);
    std::ostringstream os;
    os << d.quotient.str() << '\n';
    for (const auto &b : d.blocks)
      os << "  " << b.str() << '\n';
    json j = io::to_json(d);
    j = prefixed(json{{"perm", io::to_json(p)}, {"simple", is_simple(p)}}, j);
    return Emission{j, os.str()};
  });

  // osc --------------------------------------------------------------------
  auto *osc = app.add_subcommand("osc", "increasing oscillations");
  osc->require_subcommand(1);
  int osc_m = 0;
  auto *sigma_cmd = osc->add_subcommand("sigma", "sigma_m for m >= 4");
  sigma_cmd->add_option("m", osc_m, "length")->required();
  on(sigma_cmd, [&] {
    const auto s = sigma(osc_m);
    return Emission{{{"m", osc_m}, {"sigma", io::to_json(s)}}, s.str() + "\n"};
  });
  auto *family_cmd = osc->add_subcommand("family", "increasing oscillations of one length");
  family_cmd->add_option("m", osc_m, "length")->required()->check(CLI::Range(1, 64));
  on(family_cmd, [&] {
    const auto f = increasing_oscillations(osc_m);
    return Emission{{{"m", osc_m}, {"variants", io::to_json(f.variants)}}, lines(f.variants)};
  });
  auto *classify_cmd = osc->add_subcommand("classify", "effect of deleting each entry");
  classify_cmd->add_option("oscillation", pi_s, "an increasing oscillation")->required();
  on(classify_cmd, [&] {
    const auto p = Permutation::parse(pi_s);
    const auto tags = deletion_classify(p);
    json t = json::array();
    std::ostringstream os;
    for (std::size_t i = 0; i < tags.size(); ++i) {
      t.push_back(to_string(tags[i]));
      os << i + 1 << ' ' << to_string(tags[i]) << '\n';
    }
    return Emission{{{"oscillation", io::to_json(p)}, {"tags", t}}, os.str()};
  });

  // antichain --------------------------------------------------------------
  auto *anti = app.add_subcommand("antichain", "the antichain family U_{A,alpha}");
  anti->require_subcommand(1);
  SpecArgs spec_args;
  int max_len = 0, min_len = 1;

  auto *elements_cmd = anti->add_subcommand("elements", "list elements by length");
  spec_args.attach(elements_cmd);
  elements_cmd->add_option("--max-len", max_len, "longest length")->required()->check(CLI::Range(1, 64));
  elements_cmd->add_option("--min-len", min_len, "shortest length")->capture_default_str();
  on(elements_cmd, [&] {
    const auto spec = spec_args.build();
    json els = json::array();
    std::ostringstream os;
    for (int n = std::max(1, min_len); n <= max_len; ++n)
      for (const auto &[id, e] : identified_elements_of_length(spec, n)) {
        els.push_back(io::to_json(id, e));
        os << n << '\t' << id.m << '\t';
        for (std::size_t i = 0; i < id.fills.size(); ++i)
          os << (i ? "|" : "") << id.fills[i].str();
        os << '\t' << e.str() << '\n';
      }
    return Emission{{{"spec", io::to_json(spec)}, {"elements", els}}, os.str()};
  });

  auto *averify_cmd = anti->add_subcommand("verify", "pairwise incomparability of all elements");
  spec_args.attach(averify_cmd);
  averify_cmd->add_option("--max-len", max_len, "longest length")->required()->check(CLI::Range(1, 64));
  on(averify_cmd, [&] {
    const auto spec = spec_args.build();
    const auto r = verify_antichain(spec, max_len);
    std::ostringstream os;
    os << r.elements << " elements, " << r.pairs_checked << " pairs: ";
    if (r.passed)
      os << "antichain\n";
    else
      os << "comparable " << r.offending->first.str() << " <= " << r.offending->second.str() << '\n';
    json j = io::to_json(r);
    j = prefixed(json{{"spec", io::to_json(spec)}, {"max_len", max_len}}, j);
    return Emission{j, os.str(), r.passed ? kOk : kVerificationFailed};
  });

  auto *check_cmd = anti->add_subcommand("spec-check", "validate the parameters");
  spec_args.attach(check_cmd);
  on(check_cmd, [&] {
    const auto spec = spec_args.build();
    const auto r = validate_spec(spec);
    std::ostringstream os;
    for (const auto &c : r.checks)
      os << (c.passed ? "pass " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    return Emission{{{"spec", io::to_json(spec)}, {"validation", io::to_json(r)}}, os.str(),
                    r.ok() ? kOk : kVerificationFailed};
  });

  // gf ---------------------------------------------------------------------
  auto *gf = app.add_subcommand("gf", "generating functions");
  gf->require_subcommand(1);
  int terms = 0;
  std::string num_s, den_s, series_s;
  int max_den_degree = -1, held_out = 4;

  auto growth_text = [](const GrowthResult &r) {
    std::ostringstream os;
    os << "growth rate " << io::fixed(r.rate) << (r.bound_only ? " (upper bound)" : "") << '\n';
    if (r.root)
      os << "least positive root " << io::fixed(*r.root) << '\n';
    os << "dominant root unique: " << (r.dominant_unique ? "yes" : "no") << '\n'
       << r.diagnostic << '\n';
    return os.str();
  };

  auto *gfa_cmd = gf->add_subcommand("antichain", "generating function of U_{A,alpha}");
  spec_args.attach(gfa_cmd);
  gfa_cmd->add_option("--terms", terms, "also expand this many coefficients");
  on(gfa_cmd, [&] {
    const auto spec = spec_args.build();
    const auto f = gf_antichain(spec);
    const auto gr = growth_rate(f);
    json j = {{"spec", io::to_json(spec)}, {"gf", io::to_json(f)}, {"growth", io::to_json(gr)}};
    std::string text = f.pretty() + "\n" + growth_text(gr);
    if (terms > 0) {
      const auto s = series_expand(f, terms);
      j["series"] = io::to_json(s);
      text += join(s.coeffs) + "\n";
    }
    return Emission{j, text};
  });

  auto *gfc_cmd = gf->add_subcommand("closure-paper", "closure generating function as published");
  spec_args.attach(gfc_cmd);
  gfc_cmd->add_option("--terms", terms, "also expand this many coefficients");
  on(gfc_cmd, [&] {
    const auto spec = spec_args.build();
    const auto parts = gf_closure_paper(spec);
    std::ostringstream os;
    os << "a = " << parts.a.pretty() << "\ntwo anchors = " << parts.two_anchor.pretty()
       << "\nbeginnings = " << parts.beginnings.pretty() << "\nmiddles = " << parts.middles.pretty()
       << "\nendings = " << parts.endings.pretty() << "\ntotal = " << parts.total.pretty() << '\n';
    if (terms > 0)
      os << join(series_expand(parts.total, terms).coeffs) << '\n';
    json j = {{"spec", io::to_json(spec)}, {"parts", io::to_json(parts, terms)}};
    return Emission{j, os.str()};
  });

  auto add_fraction = [&](CLI::App *cmd) {
    cmd->add_option("--num", num_s, "numerator coefficients, lowest degree first")->required();
    cmd->add_option("--den", den_s, "denominator coefficients, lowest degree first")->required();
  };
  auto fraction = [&] {
    return RationalGF(Poly(io::parse_integer_list(num_s)), Poly(io::parse_integer_list(den_s)));
  };

  auto *expand_cmd = gf->add_subcommand("expand", "coefficients of x^1..x^terms");
  add_fraction(expand_cmd);
  expand_cmd->add_option("--terms", terms, "number of coefficients")->required()->check(CLI::Range(1, 100000));
  on(expand_cmd, [&] {
    const auto f = fraction();
    const auto s = series_expand(f, terms);
    return Emission{{{"gf", io::to_json(f)}, {"series", io::to_json(s)}}, join(s.coeffs) + "\n"};
  });

  auto *growth_cmd = gf->add_subcommand("growth", "growth rate from the denominator");
  add_fraction(growth_cmd);
  on(growth_cmd, [&] {
    const auto f = fraction();
    const auto r = growth_rate(f);
    const auto d = check_dominant_root(f.den());
    return Emission{{{"gf", io::to_json(f)}, {"growth", io::to_json(r)}, {"dominant_root", io::to_json(d)}},
                    growth_text(r)};
  });

  auto *fit_cmd = gf->add_subcommand("fit", "exact rational function through a series");
  fit_cmd->add_option("--series", series_s, "coefficients of x^1, x^2, ...")->required();
  fit_cmd->add_option("--max-den-degree", max_den_degree, "largest denominator degree (default: largest allowed)");
  fit_cmd->add_option("--held-out", held_out, "trailing terms used only for confirmation")->capture_default_str();
  on(fit_cmd, [&] {
    const auto s = series_from_counts(io::parse_integer_list(series_s));
    const int D = max_den_degree >= 0 ? max_den_degree : std::max(0, (s.terms() - 4) / 2);
    const auto f = fit_rational(s, D, held_out);
    json j = {{"terms", s.terms()}, {"max_den_degree", D}, {"held_out", held_out}};
    j["gf"] = f ? io::to_json(*f) : json(nullptr);
    return Emission{j, (f ? f->pretty() : std::string("no fit")) + "\n", f ? kOk : kVerificationFailed};
  });

  // closure ----------------------------------------------------------------
  auto *clo = app.add_subcommand("closure", "downward closure of U_{A,alpha}");
  clo->require_subcommand(1);
  int cutoff = 0;
  bool no_stability = false;

  auto *counts_cmd = clo->add_subcommand("counts", "exhaustive closure counts");
  spec_args.attach(counts_cmd);
  counts_cmd->add_option("--max-len", max_len, "longest length")->required()->check(CLI::Range(1, 16));
  counts_cmd->add_option("--cutoff", cutoff, "element length bound (default 2|alpha| + max-len*longest fill + 2*shortest fill)");
  counts_cmd->add_flag("--no-stability", no_stability, "skip the recheck at cutoff+4");
  on(counts_cmd, [&] {
    const auto spec = spec_args.build();
    const auto c = closure_counts(spec, max_len, closure_options(g, cutoff, no_stability));
    std::ostringstream os;
    os << "cutoff " << c.cutoff;
    if (c.stability_checked)
      os << ", recheck at " << c.recheck_cutoff << ": " << (c.stable ? "stable" : "CHANGED");
    os << '\n' << join(c.counts.coeffs) << '\n';
    json j = io::to_json(c);
    j = prefixed(json{{"spec", io::to_json(spec)}}, j);
    return Emission{j, os.str(), (!c.stability_checked || c.stable) ? kOk : kVerificationFailed};
  });

  auto *member_cmd = clo->add_subcommand("member", "is a permutation in the closure (cutoff-relative)");
  spec_args.attach(member_cmd);
  member_cmd->add_option("perm", pi_s, "permutation")->required();
  member_cmd->add_option("--cutoff", cutoff, "element length bound (default 3*|perm|+12)");
  on(member_cmd, [&] {
    const auto spec = spec_args.build();
    const auto p = Permutation::parse(pi_s);
    const int c = cutoff > 0 ? cutoff : default_cutoff(spec, p.size());
    json j = {{"spec", io::to_json(spec)}, {"perm", io::to_json(p)}, {"cutoff", c}};
    std::ostringstream os;
    std::optional<ClosureWitness> w;
    if (p.size() <= kMaxPackedLength)
      w = closure_witnesses(spec, c, p.size(), {pack(p)}).front();
    const bool member = w ? true : in_closure(p, spec, c);
    j["member"] = member;
    if (w) {
      j["witness"] = io::to_json(w->element, w->host);
      j["positions"] = positions_json(w->positions);
      os << "member; occurs in " << w->host.str() << " at positions " << positions_text(w->positions) << '\n';
    } else {
      j["witness"] = nullptr;
      j["positions"] = nullptr;
      os << (member ? "member\n" : "not a pattern of any element of length <= " + std::to_string(c) + "\n");
    }
    return Emission{j, os.str()};
  });

  auto *grammar_cmd = clo->add_subcommand("grammar", "grammar generation with multiplicities");
  spec_args.attach(grammar_cmd);
  grammar_cmd->add_option("--max-len", max_len, "longest length")->required()->check(CLI::Range(1, 16));
  grammar_cmd->add_option("--cutoff", cutoff, "element length bound for admissibility");
  on(grammar_cmd, [&] {
    const auto spec = spec_args.build();
    GrammarOptions go;
    go.cutoff = cutoff;
    const auto r = grammar_generate(spec, max_len, go);
    json j = io::to_json(r);
    j = prefixed(json{{"spec", io::to_json(spec)}}, j);
    return Emission{j, io::describe(r, max_len)};
  });

  auto *reconcile_cmd = clo->add_subcommand("reconcile", "exhaustive vs grammar vs published series");
  spec_args.attach(reconcile_cmd);
  reconcile_cmd->add_option("--max-len", max_len, "longest length")->required()->check(CLI::Range(1, 16));
  reconcile_cmd->add_option("--cutoff", cutoff, "element length bound (default 2|alpha| + max-len*longest fill + 2*shortest fill)");
  on(reconcile_cmd, [&] {
    const auto spec = spec_args.build();
    const auto r = reconcile_report(spec, max_len, closure_options(g, cutoff, false));
    json j = io::to_json(r);
    j = prefixed(json{{"spec", io::to_json(spec)}}, j);
    const bool ok = r.stable && r.sets_equal && r.soundness.ok();
    return Emission{j, io::describe(r), ok ? kOk : kVerificationFailed};
  });

  // class / superclass -----------------------------------------------------
  std::string basis_file;
  auto *cls_cmd = app.add_subcommand("class", "finitely based permutation classes");
  cls_cmd->require_subcommand(1);
  auto *ccounts_cmd = cls_cmd->add_subcommand("counts", "members of Av(basis) by length");
  ccounts_cmd->add_option("--basis", basis_file, "basis file, one permutation per line")->required();
  ccounts_cmd->add_option("--max-len", max_len, "longest length")->required()->check(CLI::Range(1, 16));
  on(ccounts_cmd, [&] {
    const auto cls = ClassSpec::make(io::read_permutation_file(basis_file));
    AvoiderLimits lim;
    lim.max_length = std::max(lim.max_length, max_len);
    const auto layers = avoider_layers(cls, max_len, lim);
    std::vector<BigInt> counts;
    for (int n = 1; n <= max_len; ++n)
      counts.emplace_back(layers[n].size());
    json c = json::array();
    for (const auto &x : counts)
      c.push_back(x.str());
    return Emission{{{"basis", io::to_json(cls.basis)}, {"max_len", max_len}, {"counts", c}}, join(counts) + "\n"};
  });

  auto *sup = app.add_subcommand("superclass", "rational-GF superclass of a class");
  sup->require_subcommand(1);
  bool literal = false;
  auto *build_cmd = sup->add_subcommand("build", "build C_rat and check its properties");
  build_cmd->add_option("--basis", basis_file, "basis file, one permutation per line")->required();
  spec_args.attach(build_cmd);
  build_cmd->add_option("--max-len", max_len, "longest length")->required()->check(CLI::Range(1, 16));
  build_cmd->add_flag("--paper-literal-xn", literal, "remove |C_n| elements per length");
  on(build_cmd, [&] {
    const auto spec = spec_args.build();
    const auto cls = ClassSpec::make(io::read_permutation_file(basis_file));
    SuperclassOptions so;
    so.paper_literal_removal = literal;
    so.closure = closure_options(g, 0, false);
    const auto r = build_rational_superclass(cls, spec, max_len, so);
    json j = io::to_json(r);
    j = prefixed(json{{"spec", io::to_json(spec)}, {"basis", io::to_json(cls.basis)}}, j);
    return Emission{j, io::describe(r), r.ok() ? kOk : kVerificationFailed};
  });

  // verify -----------------------------------------------------------------
  auto *ver = app.add_subcommand("verify", "acceptance checks");
  ver->require_subcommand(1);
  std::vector<int> only;
  verify::AcceptanceOptions vo;
  std::string vtau = "2 1", valpha = "1 2 3 4";
  auto *all_cmd = ver->add_subcommand("all", "run every acceptance criterion");
  all_cmd->add_option("--k", vo.k, "k")->capture_default_str();
  all_cmd->add_option("--tau", vtau, "tau")->capture_default_str();
  all_cmd->add_option("--alpha", valpha, "alpha")->capture_default_str();
  all_cmd->add_option("--max-len", vo.max_len, "closure length bound")->capture_default_str()->check(CLI::Range(2, 16));
  all_cmd->add_option("--only", only, "criterion numbers to run")->delimiter(',');
  on(all_cmd, [&] {
    vo.tau = Permutation::parse(vtau);
    vo.alpha = Permutation::parse(valpha);
    vo.cache_dir = g.cache_dir;
    vo.only = std::set<int>(only.begin(), only.end());
    const bool streaming = g.format == "text" && g.output.empty();
    if (streaming)
      vo.on_result = [&](const verify::CriterionResult &r) {
        std::cout << verify::format_line(r, g.timing) << std::endl;
      };
    const auto results = verify::run_acceptance(vo);
    json rows = json::array();
    std::ostringstream os;
    int failed = 0;
    for (const auto &r : results) {
      failed += !r.passed;
      rows.push_back({{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
      if (!streaming)
        os << verify::format_line(r, g.timing) << '\n';
    }
    os << (results.size() - failed) << " of " << results.size() << " criteria passed\n";
    json j = {{"criteria", rows}, {"passed", results.size() - failed}, {"failed", failed}};
    return Emission{j, os.str(), failed ? kVerificationFailed : kOk};
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (g.jobs > 0)
      kernels::set_thread_count(g.jobs);
    Emission e = action();
    std::string body = g.format == "json" ? e.data.dump(2) + "\n" : e.text;
    if (g.output.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(g.output, std::ios::binary);
      if (!out)
        throw InvalidInput("cannot write " + g.output);
      out << body;
    }
    if (g.timing)
      std::cerr << "elapsed "
                << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
                << " s\n";
    return e.status;
  } catch (const InvalidInput &ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const ResourceError &ex) {
    std::cerr << "resource limit: " << ex.what() << '\n';
    return kResource;
  } catch (const std::bad_alloc &) {
    std::cerr << "resource limit: out of memory\n";
    return kResource;
  }
}
