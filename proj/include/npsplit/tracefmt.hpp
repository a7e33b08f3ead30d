#pragma once

#include <iosfwd>
#include <string>

#include "npsplit/engine.hpp"

namespace npsplit {

// Persisted r-table / trace schema (also the cache-file format):
//
//   npsplit-rtable v1 <config fingerprint>
//   i r advanced gate_failed target part depth witness strings_examined max_qlen
//
// one line per table index i. Rows without an extension event (i = 0, 1 and
// the final row) carry dashes in the event columns. Booleans are 0/1; an
// absent witness is "-" and the empty witness is "e" (bitstrings never
// contain either character). Re-importing a text export reproduces the table
// exactly.
std::string export_table_text(const RTable& table, const std::string& fingerprint);

// Same fields, comma-separated with a header row. Export-only rendering.
std::string export_table_csv(const RTable& table, const std::string& fingerprint);

struct ImportedTable {
  RTable table;
  std::string fingerprint;
};

// Throws ConfigError on malformed input. Fingerprint checking is the
// caller's job (a mismatch means: ignore the cache and recompute).
ImportedTable import_table_text(const std::string& text);

// File helpers for the cache; load returns false when the file is absent.
void save_table(const std::string& path, const RTable& table, const std::string& fingerprint);
bool load_table(const std::string& path, ImportedTable& out);

}  // namespace npsplit
