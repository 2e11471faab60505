#include "comical/json_io.hpp"

#include "comical/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>

using nlohmann::json;

namespace comical {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where + ": missing key '" + key + "'");
    return *it;
}

std::string str_field(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_string()) throw SchemaError(where + ": '" + key + "' must be a string");
    return v.get<std::string>();
}

int int_field(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_number_integer()) throw SchemaError(where + ": '" + key + "' must be an integer");
    return v.get<int>();
}

bool bool_field(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_boolean()) throw SchemaError(where + ": '" + key + "' must be a boolean");
    return v.get<bool>();
}

// Shared shape of the two object formats; only the face keys and the
// operator syntax differ.
template <class Set, class Value, class ParseDown, class SetFace>
Set object_from_json(const json& doc, const char* what, ParseDown parse_down, SetFace set_face) {
    if (!doc.is_object()) throw SchemaError(std::string(what) + ": document must be an object");
    const json& cells = field(doc, "cells", what);
    if (!cells.is_array()) throw SchemaError(std::string(what) + ": 'cells' must be an array");

    Set out;
    std::map<std::string, CellId> ids;
    for (const json& c : cells) {
        const std::string id = str_field(c, "id", what);
        if (ids.count(id)) throw SchemaError(std::string(what) + ": duplicate cell id '" + id + "'");
        ids[id] = out.add_cell(id, int_field(c, "dim", what), bool_field(c, "marked", what));
    }
    for (const json& c : cells) {
        const std::string id = str_field(c, "id", what);
        const std::string where = std::string(what) + ": cell '" + id + "'";
        const int dim = int_field(c, "dim", what);
        if (dim == 0) continue;
        const json& faces = field(c, "faces", where);
        if (!faces.is_object()) throw SchemaError(where + ": 'faces' must be an object");
        for (const auto& [key, val] : faces.items()) {
            const std::string slot = where + ", face '" + key + "'";
            const std::string cell = str_field(val, "cell", slot);
            auto target = ids.find(cell);
            if (target == ids.end()) throw SchemaError(slot + ": unknown cell '" + cell + "'");
            Value v;
            try {
                v.down = parse_down(str_field(val, "op", slot), dim - 1);
            } catch (const Error& e) {
                throw SchemaError(slot + ": " + e.what());
            }
            v.cell = target->second;
            set_face(out, ids.at(id), key, slot, v);
        }
    }
    try {
        out.validate();
    } catch (const Error& e) {
        throw SchemaError(std::string(what) + ": " + e.what());
    }
    return out;
}

std::pair<int, int> parse_face_key(const std::string& key, const std::string& where) {
    const size_t comma = key.find(',');
    if (comma == std::string::npos) throw SchemaError(where + ": face keys look like 'i,e'");
    try {
        size_t ui = 0, ue = 0;
        const int i = std::stoi(key.substr(0, comma), &ui);
        const int e = std::stoi(key.substr(comma + 1), &ue);
        if (ui != comma || comma + 1 + ue != key.size()) throw std::invalid_argument("");
        return {i, e};
    } catch (const std::exception&) {
        throw SchemaError(where + ": face keys look like 'i,e'");
    }
}

int parse_simplicial_key(const std::string& key, const std::string& where) {
    try {
        size_t used = 0;
        const int j = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument("");
        return j;
    } catch (const std::exception&) {
        throw SchemaError(where + ": face keys are vertex indices 'j'");
    }
}

template <class Set, class Value, class LoadSet, class ParseDown>
auto map_from_json(const json& doc, const char* what, LoadSet load, ParseDown parse_down) {
    struct Pieces {
        Set src, tgt;
        std::vector<Value> assign;
    } p;
    if (!doc.is_object()) throw SchemaError(std::string(what) + ": document must be an object");
    p.src = load(field(doc, "src", what));
    p.tgt = load(field(doc, "tgt", what));
    const json& assign = field(doc, "assign", what);
    if (!assign.is_object()) throw SchemaError(std::string(what) + ": 'assign' must be an object");

    p.assign.resize(static_cast<size_t>(p.src.cell_count()));
    std::vector<bool> seen(static_cast<size_t>(p.src.cell_count()), false);
    for (const auto& [key, val] : assign.items()) {
        const std::string where = std::string(what) + ": assign['" + key + "']";
        auto src_cell = p.src.find(key);
        if (!src_cell) throw SchemaError(where + ": not a source cell");
        auto tgt_cell = p.tgt.find(str_field(val, "cell", where));
        if (!tgt_cell) throw SchemaError(where + ": target cell not found");
        Value v;
        try {
            v.down = parse_down(str_field(val, "op", where), p.src.cell(*src_cell).dim);
        } catch (const Error& e) {
            throw SchemaError(where + ": " + e.what());
        }
        v.cell = *tgt_cell;
        p.assign[static_cast<size_t>(*src_cell)] = v;
        seen[static_cast<size_t>(*src_cell)] = true;
    }
    for (CellId c = 0; c < p.src.cell_count(); ++c)
        if (!seen[static_cast<size_t>(c)])
            throw SchemaError(std::string(what) + ": no assignment for cell '" +
                              p.src.cell(c).name + "'");
    return p;
}

} // namespace

json to_json(const MarkedCubicalSet& x) {
    json cells = json::array();
    for (CellId c = 0; c < x.cell_count(); ++c) {
        const auto& data = x.cell(c);
        json entry = {{"id", data.name}, {"dim", data.dim}, {"marked", data.marked}};
        if (data.dim > 0) {
            json faces = json::object();
            for (int i = 1; i <= data.dim; ++i)
                for (int e = 0; e <= 1; ++e) {
                    const Cube f = x.face(c, i, e);
                    faces[std::to_string(i) + "," + std::to_string(e)] = {
                        {"op", f.down.to_string()}, {"cell", x.cell(f.cell).name}};
                }
            entry["faces"] = std::move(faces);
        }
        cells.push_back(std::move(entry));
    }
    return json{{"dims", x.top_dim()}, {"cells", std::move(cells)}};
}

json to_json(const MarkedSimplicialSet& x) {
    json cells = json::array();
    for (CellId c = 0; c < x.cell_count(); ++c) {
        const auto& data = x.cell(c);
        json entry = {{"id", data.name}, {"dim", data.dim}, {"marked", data.marked}};
        if (data.dim > 0) {
            json faces = json::object();
            for (int j = 0; j <= data.dim; ++j) {
                const Simplex f = x.face(c, j);
                faces[std::to_string(j)] = {{"op", f.down.to_string()},
                                            {"cell", x.cell(f.cell).name}};
            }
            entry["faces"] = std::move(faces);
        }
        cells.push_back(std::move(entry));
    }
    return json{{"dims", x.top_dim()}, {"cells", std::move(cells)}};
}

json to_json(const PresheafMap& f) {
    json assign = json::object();
    for (CellId c = 0; c < f.src.cell_count(); ++c)
        assign[f.src.cell(c).name] = {{"op", f.assign[static_cast<size_t>(c)].down.to_string()},
                                      {"cell", f.tgt.cell(f.assign[static_cast<size_t>(c)].cell).name}};
    return json{{"src", to_json(f.src)}, {"tgt", to_json(f.tgt)}, {"assign", std::move(assign)}};
}

json to_json(const SimplicialMap& f) {
    json assign = json::object();
    for (CellId c = 0; c < f.src.cell_count(); ++c)
        assign[f.src.cell(c).name] = {{"op", f.assign[static_cast<size_t>(c)].down.to_string()},
                                      {"cell", f.tgt.cell(f.assign[static_cast<size_t>(c)].cell).name}};
    return json{{"src", to_json(f.src)}, {"tgt", to_json(f.tgt)}, {"assign", std::move(assign)}};
}

MarkedCubicalSet cubical_from_json(const json& doc) {
    return object_from_json<MarkedCubicalSet, Cube>(
        doc, "cubical object",
        [](const std::string& text, int dim) { return parse_box_operator(text, dim); },
        [](MarkedCubicalSet& out, CellId c, const std::string& key, const std::string& where,
           const Cube& v) {
            auto [i, e] = parse_face_key(key, where);
            out.set_face(c, i, e, v);
        });
}

MarkedSimplicialSet simplicial_from_json(const json& doc) {
    return object_from_json<MarkedSimplicialSet, Simplex>(
        doc, "simplicial object",
        [](const std::string& text, int) { return parse_simplicial_operator(text); },
        [](MarkedSimplicialSet& out, CellId c, const std::string& key, const std::string& where,
           const Simplex& v) { out.set_face(c, parse_simplicial_key(key, where), v); });
}

PresheafMap cubical_map_from_json(const json& doc) {
    auto p = map_from_json<MarkedCubicalSet, Cube>(
        doc, "cubical map", [](const json& j) { return cubical_from_json(j); },
        [](const std::string& text, int dim) { return parse_box_operator(text, dim); });
    PresheafMap f{std::move(p.src), std::move(p.tgt), std::move(p.assign)};
    try {
        f.validate();
    } catch (const Error& e) {
        throw SchemaError(std::string("cubical map: ") + e.what());
    }
    return f;
}

SimplicialMap simplicial_map_from_json(const json& doc) {
    auto p = map_from_json<MarkedSimplicialSet, Simplex>(
        doc, "simplicial map", [](const json& j) { return simplicial_from_json(j); },
        [](const std::string& text, int) { return parse_simplicial_operator(text); });
    SimplicialMap f{std::move(p.src), std::move(p.tgt), std::move(p.assign)};
    try {
        f.validate();
    } catch (const Error& e) {
        throw SchemaError(std::string("simplicial map: ") + e.what());
    }
    return f;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError("'" + path + "': " + e.what());
    }
}

void save_json_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot open '" + path + "' for writing");
    out << doc.dump(2) << '\n';
    if (!out) throw SchemaError("failed writing '" + path + "'");
}

} // namespace comical
