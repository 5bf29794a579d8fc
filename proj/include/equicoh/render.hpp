#pragma once

#include <string>

#include "equicoh/attach.hpp"
#include "equicoh/deduce.hpp"
#include "equicoh/free_module.hpp"

namespace equicoh {

enum class RenderFormat { Ascii, Table, Csv, Json };

RenderFormat render_format_from_string(const std::string& name);

struct RenderSpec {
    Window window;
    RenderFormat format = RenderFormat::Ascii;
    bool overlay = false;  // mark generator positions
};

/* Renders a dimension table.  Ascii draws the lattice with q descending
 * rows and p ascending columns, digits for dimensions and '.' for zero;
 * a dashed axis line separates the negative-q rows.  overlayOf, when given,
 * marks generator positions with '*'.  All outputs are byte-deterministic. */
std::string render_table(const DimensionTable& T, const RenderSpec& spec,
                         const FreeModule* overlayOf = nullptr);

/* Renders the module's dimension table over spec.window, with the overlay
 * marking its generators when requested. */
std::string render_module(const FreeModule& M, const RenderSpec& spec);

/* JSON documents (all carry a schemaVersion field). */
std::string table_to_json(const DimensionTable& T);
std::string module_to_json(const FreeModule& M);
std::string log_to_json(const std::vector<StageLog>& log);
std::string report_to_json(const DeductionReport& report, long long cap,
                           const std::vector<FlagSymbol>& requestedFlags);

/* The cache key a deduction report embeds, as a JSON object; reports cached
 * on disk are only trusted when this matches byte for byte. */
std::string report_key_json(int n, int p, int q, const Window& w, long long cap,
                            const std::vector<FlagSymbol>& requestedFlags);

}  // namespace equicoh
