#pragma once

#include "permlab/antichain.hpp"
#include "permlab/closure.hpp"
#include "permlab/genfun.hpp"
#include "permlab/graph.hpp"
#include "permlab/structure.hpp"
#include "permlab/superclass.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace permlab::io {

using json = nlohmann::ordered_json;

/// One permutation per line, entries separated by spaces or commas. Blank
/// lines and lines starting with '#' are skipped. Throws InvalidInput with the
/// offending line number.
std::vector<Permutation> read_permutations(std::istream &in);
std::vector<Permutation> read_permutation_file(const std::string &path);
void write_permutations(std::ostream &out, const std::vector<Permutation> &perms);

/// "1,-1,0,2" or "1 -1 0 2" into big integers.
std::vector<BigInt> parse_integer_list(std::string_view text);

json to_json(const Permutation &pi);
json to_json(const std::vector<Permutation> &perms);
json to_json(const BigInt &v); // decimal string
json to_json(const Poly &p);   // coefficient strings, lowest degree first
json to_json(const RationalGF &gf);
json to_json(const Series &s);
json to_json(const Decomposition &d);
json to_json(const InversionGraph &g);
json to_json(const AntichainSpec &spec);
json to_json(const ElementId &id, const Permutation &element);
json to_json(const CheckResult &c);
json to_json(const ValidationReport &r);
json to_json(const AntichainReport &r);
json to_json(const GrowthResult &g);
json to_json(const DominantRootReport &d);
json to_json(const ClosureGFParts &parts, int terms);
json to_json(const ClosureCounts &c);
json to_json(const GrammarReport &g);
json to_json(const ReconcileReport &r);
json to_json(const ConditionReport &c);
json to_json(const SuperclassReport &r);

/// Human-readable multi-line forms.
std::string describe(const ReconcileReport &r);
std::string describe(const SuperclassReport &r);
std::string describe(const GrammarReport &g, int n_max);

/// Fixed-precision decimal text for reports (locale independent).
std::string fixed(double v, int digits = 12);

} // namespace permlab::io
