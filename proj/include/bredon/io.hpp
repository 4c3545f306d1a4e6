#pragma once

#include <string>
#include <vector>

#include "bredon/bredon_module.hpp"
#include "bredon/gcw.hpp"
#include "bredon/group.hpp"

namespace bredon {

/// Reads a whole file; throws Parse if it cannot be opened.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Group file: `degree N` followed by `gen <cycles>` lines, or `cayley N` followed by N rows.
/// `name <text>` is optional; `#` starts a comment.
GroupPtr parse_group(const std::string& text, const std::string& default_name = {});
GroupPtr load_group(const std::string& path);
std::string format_group(const FiniteGroup& g);

/// `{(1 2); (1 2 3)}`; `{()}` or `{}` is the trivial subgroup.
Subgroup parse_subgroup(const std::string& text, const GroupPtr& g);
/// One subgroup per non-empty line (family seed files).
std::vector<Subgroup> parse_subgroup_list(const std::string& text, const GroupPtr& g);

/// Module file: `variance right|left`, `object <i> rank <r>` per object and
/// `action <morphism-id> matrix [[...],...]` per non-identity morphism.
BredonModule parse_module(const std::string& text, const CategoryPtr& cat);
std::string format_module(const BredonModule& m);

/// `[dim N]` sections of `cell <id> stab {gens} boundary <coeff>*<g>*<cell-id> + ...`.
EquivariantCWData parse_equivariant_cw(const std::string& text, const GroupPtr& g);
std::string format_equivariant_cw(const EquivariantCWData& x);

/// `[dim N] cells <count>` sections with `d <cell> = c1*<cell> + ...` lines (cells one dimension down).
QuotientCWData parse_quotient_cw(const std::string& text);
std::string format_quotient_cw(const QuotientCWData& q);

} // namespace bredon
