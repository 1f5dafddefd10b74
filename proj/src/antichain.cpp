#include "permlab/antichain.hpp"

#include "permlab/errors.hpp"
#include "permlab/kernels.hpp"
#include "permlab/oscillation.hpp"
#include "permlab/structure.hpp"

#include <algorithm>
#include <functional>

namespace permlab {

AntichainSpec AntichainSpec::make(int k, Permutation alpha,
                                  std::vector<Permutation> A) {
  if (k < 1)
    throw InvalidInput("antichain spec: k must be >= 1");
  if (alpha.size() != k + 1)
    throw InvalidInput("antichain spec: alpha must have length k+1 = " +
                       std::to_string(k + 1));
  if (A.empty())
    throw InvalidInput("antichain spec: A must be nonempty");
  for (const auto &a : A)
    if (a.empty())
      throw InvalidInput("antichain spec: A contains the empty permutation");
  std::sort(A.begin(), A.end());
  A.erase(std::unique(A.begin(), A.end()), A.end());
  AntichainSpec s;
  s.k = k;
  s.alpha = std::move(alpha);
  s.A = std::move(A);
  return s;
}

AntichainSpec AntichainSpec::from_tau(int k, Permutation tau, Permutation alpha) {
  AntichainSpec s = make(k, std::move(alpha), make_A_tau(k, tau));
  s.tau = std::move(tau);
  return s;
}

AntichainSpec AntichainSpec::split_end_paths() {
  return make(1, Permutation({1, 2}), {Permutation({1})});
}

int AntichainSpec::min_fill_length() const {
  int m = A.front().size();
  for (const auto &a : A)
    m = std::min(m, a.size());
  return m;
}

int AntichainSpec::max_fill_length() const {
  int m = 0;
  for (const auto &a : A)
    m = std::max(m, a.size());
  return m;
}

int AntichainSpec::min_element_length() const {
  return 2 * (k + 1) + 2 * min_fill_length();
}

bool AntichainSpec::in_A(const Permutation &p) const {
  return std::binary_search(A.begin(), A.end(), p);
}

std::string AntichainSpec::fingerprint() const {
  std::string out = "k=" + std::to_string(k) + ";alpha=" + alpha.str();
  if (tau)
    out += ";tau=" + tau->str();
  out += ";A=";
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (i)
      out += '|';
    out += A[i].str();
  }
  return out;
}

std::vector<Permutation> make_A_tau(int k, const Permutation &tau) {
  if (k < 3)
    throw InvalidInput("A_tau: k must be >= 3");
  if (tau.size() != k - 1)
    throw InvalidInput("A_tau: tau must have length k-1 = " + std::to_string(k - 1));
  if (k > 8)
    throw ResourceError("A_tau: exhaustive scan of S_k limited to k <= 8");
  std::vector<Permutation> out{tau};
  for (auto &p : all_permutations(k))
    if (!is_contained(tau, p))
      out.push_back(std::move(p));
  std::sort(out.begin(), out.end());
  return out;
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult &c) { return c.passed; });
}

ValidationReport validate_spec(const AntichainSpec &spec) {
  ValidationReport report;

  {
    auto pairwise = verify_pairwise(spec.A);
    CheckResult c{"A is an antichain", pairwise.passed, ""};
    if (pairwise.offending)
      c.detail = pairwise.offending->first.str() + " <= " +
                 pairwise.offending->second.str();
    report.checks.push_back(c);
  }
  {
    CheckResult c{"alpha not in closure of A", true, ""};
    for (const auto &a : spec.A)
      if (is_contained(spec.alpha, a)) {
        c.passed = false;
        c.detail = "alpha <= " + a.str();
        break;
      }
    report.checks.push_back(c);
  }
  if (spec.tau) {
    CheckResult c{"tau not contained in alpha",
                  !is_contained(*spec.tau, spec.alpha), ""};
    if (!c.passed)
      c.detail = spec.tau->str() + " <= " + spec.alpha.str();
    report.checks.push_back(c);
  }
  return report;
}

std::pair<int, int> endpoint_positions(int m) {
  const Permutation s = sigma(m);
  int least = -1;
  int other = -1;
  for (int i = 0; i < m; ++i) {
    if (s[i] == 1)
      least = i;
    if (m % 2 == 0 && s[i] == m)
      other = i;
  }
  if (m % 2 == 1)
    other = m - 1;
  return {least, other};
}

Permutation build_element(const AntichainSpec &spec, const ElementId &id) {
  if (id.m < 4)
    throw InvalidInput("element id: m must be >= 4");
  if (static_cast<int>(id.fills.size()) != id.m - 2)
    throw InvalidInput("element id: expected " + std::to_string(id.m - 2) +
                       " fills, got " + std::to_string(id.fills.size()));
  for (const auto &f : id.fills)
    if (!spec.in_A(f))
      throw InvalidInput("element id: fill " + f.str() + " is not a member of A");

  const auto [least, other] = endpoint_positions(id.m);
  std::vector<Permutation> blocks;
  blocks.reserve(id.m);
  std::size_t next_fill = 0;
  for (int pos = 0; pos < id.m; ++pos) {
    if (pos == least || pos == other)
      blocks.push_back(spec.alpha);
    else
      blocks.push_back(id.fills[next_fill++]);
  }
  return inflate(sigma(id.m), blocks);
}

std::vector<std::pair<ElementId, Permutation>>
identified_elements_of_length(const AntichainSpec &spec, int n) {
  std::vector<std::pair<ElementId, Permutation>> out;
  const int budget = n - 2 * (spec.k + 1);
  const int min_fill = spec.min_fill_length();
  if (budget < 2 * min_fill)
    return out;

  for (int m = 4; (m - 2) * min_fill <= budget; ++m) {
    ElementId id{m, {}};
    id.fills.reserve(m - 2);
    std::function<void(int, int)> extend = [&](int slots, int remaining) {
      if (slots == 0) {
        if (remaining == 0)
          out.emplace_back(id, build_element(spec, id));
        return;
      }
      for (const auto &a : spec.A) {
        const int rest = remaining - a.size();
        if (rest < (slots - 1) * min_fill)
          continue;
        id.fills.push_back(a);
        extend(slots - 1, rest);
        id.fills.pop_back();
      }
    };
    extend(m - 2, budget);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    return a.second < b.second;
  });
  return out;
}

std::vector<Permutation> elements_of_length(const AntichainSpec &spec, int n) {
  std::vector<Permutation> out;
  for (auto &[id, perm] : identified_elements_of_length(spec, n))
    out.push_back(std::move(perm));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Permutation> elements_up_to(const AntichainSpec &spec, int n_max) {
  std::vector<Permutation> out;
  for (int n = spec.min_element_length(); n <= n_max; ++n) {
    auto layer = elements_of_length(spec, n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

AntichainReport verify_pairwise(const std::vector<Permutation> &family) {
  AntichainReport report;
  report.elements = family.size();
  report.pairs_checked = family.size() * (family.size() - (family.empty() ? 0 : 1)) / 2;
  if (auto hit = kernels::first_comparable_pair(family)) {
    report.passed = false;
    report.offending = {family[hit->first], family[hit->second]};
  }
  return report;
}

AntichainReport verify_antichain(const AntichainSpec &spec, int n_max) {
  return verify_pairwise(elements_up_to(spec, n_max));
}

} // namespace permlab
