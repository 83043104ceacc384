/*
 * io.hpp
 *
 * Versioned text formats and JSON report serialization.
 *
 * Complex format (strathom-complex v1), line oriented:
 *   strathom-complex v1
 *   n=<complex dim>
 *   vertices=<count>
 *   maximal=<v v v>; <v v v>; ...
 *   strata=<id dim>; <id dim>; ...        (top stratum first on emission)
 *   assign=<v v ...> -> <id>; ...         (singular simplices; omitted if none)
 *
 * Cocycle format (strathom-cocycle v1):
 *   strathom-cocycle v1
 *   edge <a> <b> <value>                  (a < b on emission; omitted = 0)
 *
 * Emission is canonical and parse(emit(x)) reproduces x bit-exactly.
 */

#ifndef STRATHOM_IO_HPP
#define STRATHOM_IO_HPP

#include <string>

#include <json.hpp>

#include "strathom/catalog.hpp"
#include "strathom/ih.hpp"
#include "strathom/local_system.hpp"
#include "strathom/stratified.hpp"

namespace strathom::io {

std::string emit_complex(const StratifiedComplex& x);
StratifiedComplex parse_complex(const std::string& text);

std::string emit_cocycle(const Cocycle& w);
/// Parses and checks the cocycle against the complex: every edge must exist
/// and the cocycle condition must hold.
Cocycle parse_cocycle(const std::string& text, const StratifiedComplex& x);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// FNV-1a 64-bit content hash, as "fnv1a64:<16 hex digits>".
std::string content_hash(const std::string& bytes);

using json = nlohmann::ordered_json;

json to_json(const ValidationReport& report);
json to_json(const HomologyReport& report);
json to_json(const TwistedReport& report);
json to_json(const EulerReport& report);
json to_json(const WitnessReport& report);
json to_json(const CrosscheckResult& result);
json to_json(const CocycleCheck& check);

/// Writes the canonical files of a catalog entry into a directory; returns
/// the paths written.
std::vector<std::string> emit_catalog_entry(const catalog::Entry& entry,
                                            const std::string& directory);

}  // namespace strathom::io

#endif
