#ifndef UCLONE_IO_HPP
#define UCLONE_IO_HPP

#include <memory>
#include <string>
#include <vector>

#include "uclone/csp.hpp"
#include "uclone/formula.hpp"
#include "uclone/relation.hpp"

namespace uclone {

std::string read_file(const std::string& path);

/// Relation/language text format: `relation <NAME> <ARITY> <DOMAIN>` blocks
/// with one tuple per line, terminated by `end`. '#' starts a comment.
Language parse_language(const std::string& text);
Language load_language(const std::string& path);
std::string format_relation(const Relation& r);
std::string format_language(const Language& g);

/// Instance format: `domain <D>`, `lang <FILE>`, `vars <v...>`, then one
/// `<RELNAME> <v...>` constraint per line. The language path is resolved
/// relative to `base_dir`.
Instance parse_instance(const std::string& text, const std::string& base_dir);
Instance load_instance(const std::string& path);
std::string format_instance(const Instance& inst, const std::string& lang_path);

/// Definition format, one block per definition:
///   def <NAME>(<v1>,...,<vn>) over <LANGFILE> :
///     exists! <u...> ; exists <w...> ; frozen <z...> ;
///     <REL>(<args>) & <REL>(<args>) & ...
/// Quantifier groups may be absent; whitespace-insensitive.
std::vector<ConjFormula> parse_defs(const std::string& text, const std::string& base_dir);
std::vector<ConjFormula> load_defs(const std::string& path);
std::string format_def(const ConjFormula& f, const std::string& lang_path);

/// Partial-operation certificate format: `pop <ARITY> <DOMAIN>` followed by
/// `<d1> ... <dk> -> <v>` lines.
PartialOperation parse_pop(const std::string& text);
PartialOperation load_pop(const std::string& path);
std::string format_pop(const PartialOperation& f);

std::string format_tuple(const Tuple& t);

}  // namespace uclone

#endif
