#include "equicoh/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "equicoh/version.hpp"

namespace equicoh {

using json = nlohmann::ordered_json;

RenderFormat render_format_from_string(const std::string& name) {
    if (name == "ascii")
        return RenderFormat::Ascii;
    if (name == "table")
        return RenderFormat::Table;
    if (name == "csv")
        return RenderFormat::Csv;
    if (name == "json")
        return RenderFormat::Json;
    throw std::invalid_argument("unknown render format '" + name + "' (ascii|table|csv|json)");
}

namespace {

char dim_char(int v) {
    if (v <= 0)
        return '.';
    if (v < 10)
        return static_cast<char>('0' + v);
    if (v < 36)
        return static_cast<char>('a' + (v - 10));
    return '+';
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string render_grid(const DimensionTable& T, const FreeModule* overlay, bool asciiDots) {
    const Window& w = T.window();

    std::map<Bidegree, int> marks;
    if (overlay)
        for (const auto& g : overlay->generators())
            ++marks[g.degree];

    std::size_t cellWidth = 2;  // dim char + overlay star
    std::size_t rowLabel = 0;
    for (int q = w.qMin; q <= w.qMax; ++q)
        rowLabel = std::max(rowLabel, std::to_string(q).size());
    if (!asciiDots)
        for (int p = w.pMin; p <= w.pMax; ++p)
            for (int q = w.qMin; q <= w.qMax; ++q)
                cellWidth = std::max(cellWidth, std::to_string(T.at(p, q)).size() + 1);
    for (int p = w.pMin; p <= w.pMax; ++p)
        cellWidth = std::max(cellWidth, std::to_string(p).size());

    std::ostringstream os;
    os << pad_left("q\\p", rowLabel);
    for (int p = w.pMin; p <= w.pMax; ++p)
        os << " " << pad_left(std::to_string(p), cellWidth);
    os << "\n";

    for (int q = w.qMax; q >= w.qMin; --q) {
        if (q == -1 && w.qMax >= 0) {
            // Axis line: negative weights render below it.
            os << std::string(rowLabel + (cellWidth + 1) * w.width(), '-') << "\n";
        }
        os << pad_left(std::to_string(q), rowLabel);
        for (int p = w.pMin; p <= w.pMax; ++p) {
            std::string cell;
            if (asciiDots) {
                cell = std::string(1, dim_char(T.at(p, q)));
                cell += (overlay && marks.count({p, q})) ? "*" : " ";
            } else {
                cell = std::to_string(T.at(p, q));
                cell += (overlay && marks.count({p, q})) ? "*" : " ";
            }
            os << " " << pad_left(cell, cellWidth);
        }
        os << "\n";
    }
    return os.str();
}

std::string render_csv(const DimensionTable& T) {
    const Window& w = T.window();
    std::ostringstream os;
    os << "q\\p";
    for (int p = w.pMin; p <= w.pMax; ++p)
        os << "," << p;
    os << "\n";
    for (int q = w.qMax; q >= w.qMin; --q) {
        os << q;
        for (int p = w.pMin; p <= w.pMax; ++p)
            os << "," << T.at(p, q);
        os << "\n";
    }
    return os.str();
}

json window_to_json(const Window& w) {
    return json{{"pMin", w.pMin}, {"pMax", w.pMax}, {"qMin", w.qMin}, {"qMax", w.qMax}};
}

json generator_to_json(const Generator& g) {
    return json{{"label", g.label}, {"p", g.degree.p}, {"q", g.degree.q}};
}

json candidate_to_json(const Candidate& c) {
    json arr = json::array();
    for (const auto& d : c)
        arr.push_back(json{{"p", d.p}, {"q", d.q}});
    return arr;
}

}  // namespace

std::string render_table(const DimensionTable& T, const RenderSpec& spec, const FreeModule* overlayOf) {
    const FreeModule* overlay = spec.overlay ? overlayOf : nullptr;
    switch (spec.format) {
        case RenderFormat::Ascii: return render_grid(T, overlay, true);
        case RenderFormat::Table: return render_grid(T, overlay, false);
        case RenderFormat::Csv: return render_csv(T);
        case RenderFormat::Json: return table_to_json(T);
    }
    throw std::logic_error("render_table: bad format");
}

std::string render_module(const FreeModule& M, const RenderSpec& spec) {
    return render_table(dimension_table(M, spec.window), spec, &M);
}

std::string table_to_json(const DimensionTable& T) {
    const Window& w = T.window();
    json doc;
    doc["schemaVersion"] = kSchemaVersion;
    doc["window"] = window_to_json(w);
    json counts = json::array();
    for (int p = w.pMin; p <= w.pMax; ++p)
        for (int q = w.qMin; q <= w.qMax; ++q)
            if (T.at(p, q) != 0)
                counts.push_back(json{{"p", p}, {"q", q}, {"dim", T.at(p, q)}});
    doc["counts"] = counts;
    return doc.dump(2) + "\n";
}

std::string module_to_json(const FreeModule& M) {
    json doc;
    doc["schemaVersion"] = kSchemaVersion;
    json gens = json::array();
    std::vector<Generator> sorted = M.generators();
    std::sort(sorted.begin(), sorted.end(), [](const Generator& a, const Generator& b) {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        return a.label < b.label;
    });
    for (const auto& g : sorted)
        gens.push_back(generator_to_json(g));
    doc["generators"] = gens;
    return doc.dump(2) + "\n";
}

std::string log_to_json(const std::vector<StageLog>& log) {
    json doc;
    doc["schemaVersion"] = kSchemaVersion;
    json stages = json::array();
    for (const auto& st : log) {
        json entry;
        entry["stage"] = st.stage;
        entry["cell"] = generator_to_json(st.cell);
        entry["case"] = to_string(st.kind);
        json removed = json::array();
        for (const auto& g : st.removed)
            removed.push_back(generator_to_json(g));
        json added = json::array();
        for (const auto& g : st.added)
            added.push_back(generator_to_json(g));
        entry["removed"] = removed;
        entry["added"] = added;
        stages.push_back(entry);
    }
    doc["stages"] = stages;
    return doc.dump(2) + "\n";
}

namespace {

json key_json(int n, int p, int q, const Window& w, long long cap,
              const std::vector<FlagSymbol>& requestedFlags) {
    json key;
    key["version"] = kVersion;
    key["n"] = n;
    key["p"] = p;
    key["q"] = q;
    key["window"] = window_to_json(w);
    key["cap"] = cap;
    json reqFlags = json::array();
    for (const auto& f : requestedFlags)
        reqFlags.push_back(f.phi);
    key["flags"] = reqFlags;
    return key;
}

}  // namespace

std::string report_key_json(int n, int p, int q, const Window& w, long long cap,
                            const std::vector<FlagSymbol>& requestedFlags) {
    return key_json(n, p, q, w, cap, requestedFlags).dump(2);
}

std::string report_to_json(const DeductionReport& report, long long cap,
                           const std::vector<FlagSymbol>& requestedFlags) {
    json doc;
    doc["schemaVersion"] = kSchemaVersion;
    doc["key"] = key_json(report.n, report.p, report.q, report.window, cap, requestedFlags);

    json perFlag = json::array();
    for (const auto& [flag, set] : report.perFlag) {
        json entry;
        entry["flag"] = flag.phi;
        json cands = json::array();
        for (const auto& c : set)
            cands.push_back(candidate_to_json(c));
        entry["candidates"] = cands;
        perFlag.push_back(entry);
    }
    doc["flags"] = perFlag;

    json inter = json::array();
    for (const auto& c : report.intersection)
        inter.push_back(candidate_to_json(c));
    doc["intersection"] = inter;
    doc["verdict"] = to_string(report.verdict);
    if (report.determined)
        doc["cohomology"] = candidate_to_json(*report.determined);
    return doc.dump(2) + "\n";
}

}  // namespace equicoh
