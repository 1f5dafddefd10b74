#include "permlab/io.hpp"

#include "permlab/errors.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace permlab::io {

std::vector<Permutation> read_permutations(std::istream &in) {
  std::vector<Permutation> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    try {
      out.push_back(Permutation::parse(line));
    } catch (const InvalidInput &e) {
      throw InvalidInput("line " + std::to_string(number) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Permutation> read_permutation_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidInput("cannot open " + path);
  try {
    return read_permutations(in);
  } catch (const InvalidInput &e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_permutations(std::ostream &out, const std::vector<Permutation> &perms) {
  for (const auto &p : perms)
    out << p.str() << '\n';
}

std::vector<BigInt> parse_integer_list(std::string_view text) {
  std::vector<BigInt> out;
  std::string token;
  auto flush = [&] {
    if (token.empty())
      return;
    const bool neg = token[0] == '-' || token[0] == '+';
    if (token.size() == (neg ? 1u : 0u) ||
        token.find_first_not_of("0123456789", neg ? 1 : 0) != std::string::npos)
      throw InvalidInput("not an integer: '" + token + "'");
    out.emplace_back(token[0] == '+' ? token.substr(1) : token);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
      flush();
    else
      token.push_back(c);
  }
  flush();
  if (out.empty())
    throw InvalidInput("empty integer list");
  return out;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// ---------------------------------------------------------------------------

json to_json(const Permutation &pi) {
  json a = json::array();
  for (int v : pi.values())
    a.push_back(v);
  return a;
}

json to_json(const std::vector<Permutation> &perms) {
  json a = json::array();
  for (const auto &p : perms)
    a.push_back(to_json(p));
  return a;
}

json to_json(const BigInt &v) { return v.str(); }

json to_json(const Poly &p) {
  json a = json::array();
  for (const auto &c : p.coeffs())
    a.push_back(c.str());
  return a;
}

json to_json(const RationalGF &gf) {
  return {{"num", to_json(gf.num())},
          {"den", to_json(gf.den())},
          {"text", gf.pretty()}};
}

json to_json(const Series &s) {
  json a = json::array();
  for (const auto &c : s.coeffs)
    a.push_back(c.str());
  return {{"n_min", s.n_min}, {"coeffs", a}};
}

json to_json(const Decomposition &d) {
  return {{"quotient", to_json(d.quotient)}, {"blocks", to_json(d.blocks)}};
}

json to_json(const InversionGraph &g) {
  json edges = json::array();
  for (auto [u, v] : g.edges())
    edges.push_back({u + 1, v + 1});
  return {{"vertices", g.vertex_count()},
          {"edges", edges},
          {"connected", g.is_connected()},
          {"is_path", g.is_path()}};
}

json to_json(const AntichainSpec &spec) {
  json j = {{"k", spec.k}, {"alpha", to_json(spec.alpha)}, {"A", to_json(spec.A)}};
  j["tau"] = spec.tau ? to_json(*spec.tau) : json(nullptr);
  return j;
}

json to_json(const ElementId &id, const Permutation &element) {
  return {{"length", element.size()},
          {"m", id.m},
          {"fills", to_json(id.fills)},
          {"perm", to_json(element)}};
}

json to_json(const CheckResult &c) {
  return {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}

json to_json(const ValidationReport &r) {
  json checks = json::array();
  for (const auto &c : r.checks)
    checks.push_back(to_json(c));
  return {{"ok", r.ok()}, {"checks", checks}};
}

json to_json(const AntichainReport &r) {
  json j = {{"passed", r.passed}, {"elements", r.elements}, {"pairs_checked", r.pairs_checked}};
  j["offending"] = r.offending
                       ? json{to_json(r.offending->first), to_json(r.offending->second)}
                       : json(nullptr);
  return j;
}

json to_json(const GrowthResult &g) {
  json j = {{"rate", g.rate}};
  j["root"] = g.root ? json(*g.root) : json(nullptr);
  j["bound_only"] = g.bound_only;
  j["dominant_unique"] = g.dominant_unique;
  j["diagnostic"] = g.diagnostic;
  return j;
}

json to_json(const DominantRootReport &d) {
  return {{"unique", d.unique},
          {"radius", d.radius},
          {"min_modulus_off_arc", d.min_modulus_off_arc},
          {"argument_of_min", d.argument_of_min},
          {"value_at_minus_radius", d.value_at_minus_radius},
          {"support_gcd", d.support_gcd},
          {"diagnostic", d.diagnostic}};
}

json to_json(const ClosureGFParts &parts, int terms) {
  json j = {{"a", to_json(parts.a)},
            {"two_anchor", to_json(parts.two_anchor)},
            {"beginnings", to_json(parts.beginnings)},
            {"middles", to_json(parts.middles)},
            {"endings", to_json(parts.endings)},
            {"total", to_json(parts.total)}};
  if (terms > 0)
    j["series"] = to_json(series_expand(parts.total, terms));
  return j;
}

namespace {

json size_list(const std::vector<std::size_t> &v) {
  json a = json::array();
  for (std::size_t x : v)
    a.push_back(x);
  return a;
}

json candidate_json(const PartCandidate &c) {
  json j = {{"role", c.role},
            {"oscillation", to_json(c.oscillation)},
            {"anchor_position", c.anchor_position + 1},
            {"admissible", c.admissible},
            {"emissions_checked", c.emissions_checked}};
  j["rejected_by"] = c.rejected_by ? to_json(*c.rejected_by) : json(nullptr);
  return j;
}

} // namespace

json to_json(const ClosureCounts &c) {
  json j = {{"n_max", c.table.n_max},
            {"cutoff", c.cutoff},
            {"counts", size_list(c.table.counts())},
            {"stability_checked", c.stability_checked},
            {"stable", c.stable}};
  j["recheck_cutoff"] = c.stability_checked ? json(c.recheck_cutoff) : json(nullptr);
  j["recheck_counts"] = size_list(c.recheck_counts);
  j["from_cache"] = c.from_cache;
  return j;
}

json to_json(const GrammarReport &g) {
  json rows = json::array();
  for (int n = 1; n <= g.table.n_max; ++n)
    rows.push_back({{"n", n},
                    {"distinct", g.distinct[n]},
                    {"raw", g.raw[n].str()},
                    {"two_anchor_raw", g.two_anchor_raw[n].str()},
                    {"sum_raw", g.sum_raw[n].str()},
                    {"repeated_members", g.repeated_members[n]},
                    {"max_multiplicity", g.max_multiplicity[n]}});
  json cands = json::array();
  for (const auto &c : g.candidates)
    cands.push_back(candidate_json(c));
  return {{"n_max", g.table.n_max}, {"cutoff", g.table.cutoff}, {"rows", rows}, {"candidates", cands}};
}

json to_json(const ReconcileReport &r) {
  json rows = json::array();
  for (const auto &row : r.rows)
    rows.push_back({{"n", row.n},
                    {"brute", row.brute.str()},
                    {"grammar_distinct", row.grammar_distinct.str()},
                    {"grammar_raw", row.grammar_raw.str()},
                    {"paper_gf", row.paper_gf.str()},
                    {"paper_gf_minus_brute", BigInt(row.paper_gf - row.brute).str()}});
  json cands = json::array();
  for (const auto &c : r.candidates)
    cands.push_back(candidate_json(c));
  json j = {{"n_max", r.n_max},
            {"cutoff", r.cutoff},
            {"stable", r.stable},
            {"sets_equal", r.sets_equal},
            {"rows", rows},
            {"candidates", cands}};
  json fit = {{"max_den_degree", r.fit_max_den_degree}, {"held_out", r.fit_held_out}};
  fit["gf"] = r.fit ? to_json(*r.fit) : json(nullptr);
  j["fit"] = fit;
  json sound = {{"checked", r.soundness.checked}, {"verified", r.soundness.verified}};
  sound["first_failure"] =
      r.soundness.first_failure ? to_json(*r.soundness.first_failure) : json(nullptr);
  j["soundness"] = sound;
  return j;
}

json to_json(const ConditionReport &c) {
  json ratios = json::array();
  for (double r : c.ratios)
    ratios.push_back(r);
  return {{"anchor_outside_class", to_json(c.anchor_outside_class)},
          {"tau_not_in_anchor", to_json(c.tau_not_in_anchor)},
          {"growth_exceeds_class", to_json(c.growth_exceeds_class)},
          {"antichain_growth", c.antichain_growth},
          {"class_growth_estimate", c.class_growth_estimate},
          {"ratios", ratios}};
}

json to_json(const SuperclassReport &r) {
  json rows = json::array();
  for (const auto &w : r.rows)
    rows.push_back({{"n", w.n},
                    {"class", w.class_count},
                    {"closure", w.closure_count},
                    {"overlap", w.overlap},
                    {"class_outside_closure", w.class_outside},
                    {"antichain", w.antichain_count},
                    {"removed", w.removed},
                    {"rational", w.rational_count},
                    {"literal_removed", w.literal_removed},
                    {"literal_rational", w.literal_rational_count}});
  json j = {{"ok", r.ok()},
            {"n_max", r.n_max},
            {"cutoff", r.cutoff},
            {"closure_stable", r.closure_stable},
            {"paper_literal_removal", r.paper_literal_removal},
            {"conditions", to_json(r.conditions)}};
  j["threshold"] = r.threshold ? json(*r.threshold) : json(nullptr);
  j["shortfall"] = r.shortfall;
  j["rows"] = rows;
  j["removed"] = to_json(r.removed);
  j["class_disjoint_from_antichain"] = r.class_disjoint_from_antichain;
  j["class_contained"] = r.class_contained;
  j["closure_violation"] = r.closure_violation ? to_json(*r.closure_violation) : json(nullptr);
  j["removed_are_maximal"] = r.removed_are_maximal;
  j["counts_match_closure"] = r.counts_match_closure;
  j["fit_rational_class"] = r.fit_rational_class ? to_json(*r.fit_rational_class) : json(nullptr);
  j["fit_closure"] = r.fit_closure ? to_json(*r.fit_closure) : json(nullptr);
  j["same_denominator"] = r.same_denominator;
  j["failure"] = r.failure;
  return j;
}

// ---------------------------------------------------------------------------

std::string describe(const ReconcileReport &r) {
  std::ostringstream os;
  os << "n_max " << r.n_max << ", cutoff " << r.cutoff << ", stable " << (r.stable ? "yes" : "no")
     << ", grammar set equals exhaustive set " << (r.sets_equal ? "yes" : "no") << '\n';
  os << "n\tbrute\tgrammar\traw\tpaper_gf\tdelta\n";
  for (const auto &row : r.rows)
    os << row.n << '\t' << row.brute << '\t' << row.grammar_distinct << '\t' << row.grammar_raw
       << '\t' << row.paper_gf << '\t' << BigInt(row.paper_gf - row.brute) << '\n';
  std::size_t admitted = 0;
  for (const auto &c : r.candidates)
    admitted += c.admissible;
  os << "part candidates: " << admitted << " admitted of " << r.candidates.size() << '\n';
  os << "soundness: " << r.soundness.verified << " of " << r.soundness.checked
     << " members witnessed";
  if (r.soundness.first_failure)
    os << " (first failure " << r.soundness.first_failure->str() << ")";
  os << '\n';
  os << "rational fit (denominator degree <= " << r.fit_max_den_degree << ", " << r.fit_held_out
     << " held out): " << (r.fit ? r.fit->pretty() : std::string("none")) << '\n';
  return os.str();
}

std::string describe(const SuperclassReport &r) {
  std::ostringstream os;
  const auto &c = r.conditions;
  auto mark = [](const CheckResult &x) { return x.passed ? "pass" : "FAIL"; };
  os << mark(c.anchor_outside_class) << ' ' << c.anchor_outside_class.name << '\n';
  os << mark(c.tau_not_in_anchor) << ' ' << c.tau_not_in_anchor.name << '\n';
  os << mark(c.growth_exceeds_class) << ' ' << c.growth_exceeds_class.name << ": "
     << c.growth_exceeds_class.detail << '\n';
  os << "threshold N: " << (r.threshold ? std::to_string(*r.threshold) : std::string("none"))
     << (r.paper_literal_removal ? " (removal sized by |C_n|)" : " (removal sized by |C_n \\ U_n|)")
     << '\n';
  os << "n\tC\tclosure\toverlap\toutside\tU\tX\trational\tliteral\n";
  for (const auto &w : r.rows)
    os << w.n << '\t' << w.class_count << '\t' << w.closure_count << '\t' << w.overlap << '\t'
       << w.class_outside << '\t' << w.antichain_count << '\t' << w.removed << '\t'
       << w.rational_count << '\t' << w.literal_rational_count << '\n';
  os << "class disjoint from antichain: " << (r.class_disjoint_from_antichain ? "yes" : "no")
     << "\nclass contained: " << (r.class_contained ? "yes" : "no")
     << "\ndownward closed: "
     << (r.closure_violation ? "no, " + r.closure_violation->str() : std::string("yes"))
     << "\nremoved elements maximal: " << (r.removed_are_maximal ? "yes" : "no")
     << "\ncounts match closure from N: " << (r.counts_match_closure ? "yes" : "no") << '\n';
  if (!r.failure.empty())
    os << "failure: " << r.failure << '\n';
  return os.str();
}

std::string describe(const GrammarReport &g, int n_max) {
  std::ostringstream os;
  os << "n\tdistinct\traw\ttwo_anchor\tsums\trepeated\tmax_mult\n";
  for (int n = 1; n <= n_max; ++n)
    os << n << '\t' << g.distinct[n] << '\t' << g.raw[n] << '\t' << g.two_anchor_raw[n] << '\t'
       << g.sum_raw[n] << '\t' << g.repeated_members[n] << '\t' << g.max_multiplicity[n] << '\n';
  return os.str();
}

} // namespace permlab::io
