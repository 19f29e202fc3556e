#include "homtwist/dg_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace homtwist {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("category file: " + msg);
}

void rejectUnknownFields(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    if (!j.is_object()) fail(where + " must be an object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) fail("unknown field '" + key + "' in " + where);
    }
}

std::string requireString(const json& j, const char* field, const std::string& where) {
    if (!j.contains(field) || !j.at(field).is_string())
        fail(where + " needs string field '" + std::string(field) + "'");
    return j.at(field).get<std::string>();
}

int requireInt(const json& j, const char* field, const std::string& where) {
    if (!j.contains(field) || !j.at(field).is_number_integer())
        fail(where + " needs integer field '" + std::string(field) + "'");
    return j.at(field).get<int>();
}

FieldScalar parseCoeff(const json& j, const Field& f, const std::string& where) {
    if (j.is_number_integer()) return FieldScalar::ofInt(f, j.get<long long>());
    if (j.is_string()) return FieldScalar::parse(f, j.get<std::string>());
    fail("coefficient in " + where + " must be an integer or a 'p/q' string");
}

int objectOf(const FiniteDgCategory& cat, const std::string& label, const std::string& where) {
    int idx = cat.objectIndex(label);
    if (idx < 0) fail(where + " references unknown object '" + label + "'");
    return idx;
}

BasisId basisOf(const FiniteDgCategory& cat, int src, int dst, const std::string& label,
                const std::string& where) {
    const HomSpace& h = cat.hom(src, dst);
    auto it = h.byLabel.find(label);
    if (it == h.byLabel.end())
        fail(where + " references unknown basis element '" + label + "' in hom(" +
             cat.objectLabel(src) + ", " + cat.objectLabel(dst) + ")");
    return BasisId{src, dst, it->second};
}

}  // namespace

LoadedCategory loadCategoryJson(const json& j, const Field& f) {
    rejectUnknownFields(j,
                        {"objects", "homs", "differential", "composition", "identities", "order",
                         "composition_omitted", "twisted"},
                        "category");

    if (!j.contains("objects") || !j.at("objects").is_array() || j.at("objects").empty())
        fail("'objects' must be a nonempty array");
    std::vector<std::string> objects;
    for (const auto& o : j.at("objects")) {
        if (!o.is_string()) fail("'objects' entries must be strings");
        objects.push_back(o.get<std::string>());
    }

    auto cat = std::make_shared<FiniteDgCategory>(f, objects);

    if (!j.contains("homs") || !j.at("homs").is_array()) fail("'homs' must be an array");
    for (const auto& h : j.at("homs")) {
        rejectUnknownFields(h, {"src", "dst", "basis"}, "homs entry");
        int src = objectOf(*cat, requireString(h, "src", "homs entry"), "homs entry");
        int dst = objectOf(*cat, requireString(h, "dst", "homs entry"), "homs entry");
        if (!h.contains("basis") || !h.at("basis").is_array()) fail("homs entry needs 'basis' array");
        for (const auto& b : h.at("basis")) {
            rejectUnknownFields(b, {"label", "degree"}, "basis entry");
            cat->addBasisElement(src, dst, requireString(b, "label", "basis entry"),
                                 requireInt(b, "degree", "basis entry"));
        }
    }

    if (j.contains("differential")) {
        if (!j.at("differential").is_array()) fail("'differential' must be an array");
        for (const auto& d : j.at("differential")) {
            rejectUnknownFields(d, {"src", "dst", "from_label", "to_label", "coeff"},
                                "differential entry");
            int src = objectOf(*cat, requireString(d, "src", "differential entry"), "differential");
            int dst = objectOf(*cat, requireString(d, "dst", "differential entry"), "differential");
            BasisId from =
                basisOf(*cat, src, dst, requireString(d, "from_label", "differential entry"),
                        "differential entry");
            BasisId to = basisOf(*cat, src, dst, requireString(d, "to_label", "differential entry"),
                                 "differential entry");
            if (!d.contains("coeff")) fail("differential entry needs 'coeff'");
            cat->addDifferentialTerm(from, to, parseCoeff(d.at("coeff"), f, "differential"));
        }
    }

    if (j.contains("composition")) {
        if (!j.at("composition").is_array()) fail("'composition' must be an array");
        for (const auto& c : j.at("composition")) {
            rejectUnknownFields(c, {"g", "f", "result"}, "composition entry");
            if (!c.contains("g") || !c.contains("f")) fail("composition entry needs 'g' and 'f'");
            auto readRef = [&](const json& r, const char* name) {
                rejectUnknownFields(r, {"src", "dst", "label"},
                                    std::string("composition ") + name);
                int src = objectOf(*cat, requireString(r, "src", "composition ref"), "composition");
                int dst = objectOf(*cat, requireString(r, "dst", "composition ref"), "composition");
                return basisOf(*cat, src, dst, requireString(r, "label", "composition ref"),
                               "composition entry");
            };
            BasisId g = readRef(c.at("g"), "g");
            BasisId fmor = readRef(c.at("f"), "f");
            if (fmor.dst != g.src) fail("composition entry endpoints do not match");
            if (!c.contains("result") || !c.at("result").is_array())
                fail("composition entry needs 'result' array");
            MorCombination result = cat->zeroCombination(fmor.src, g.dst);
            for (const auto& t : c.at("result")) {
                rejectUnknownFields(t, {"label", "coeff"}, "composition result term");
                BasisId r = basisOf(*cat, fmor.src, g.dst,
                                    requireString(t, "label", "composition result"),
                                    "composition result");
                if (!t.contains("coeff")) fail("composition result term needs 'coeff'");
                result.addTerm(r.flat, parseCoeff(t.at("coeff"), f, "composition result"));
            }
            cat->setComposition(g, fmor, std::move(result));
        }
    }

    if (!j.contains("identities") || !j.at("identities").is_object())
        fail("'identities' must be an object mapping each object to a label");
    for (const auto& [objLabel, idLabel] : j.at("identities").items()) {
        int obj = objectOf(*cat, objLabel, "identities");
        if (!idLabel.is_string()) fail("identity designation must be a label string");
        cat->setIdentity(obj, basisOf(*cat, obj, obj, idLabel.get<std::string>(), "identities"));
    }

    cat->seal();

    LoadedCategory out;
    out.category = cat;

    if (j.contains("order")) {
        if (!j.at("order").is_array()) fail("'order' must be an array of object labels");
        std::vector<std::string> order;
        std::vector<int> pos(cat->objectCount(), -1);
        int next = 0;
        for (const auto& o : j.at("order")) {
            if (!o.is_string()) fail("'order' entries must be strings");
            int idx = objectOf(*cat, o.get<std::string>(), "order");
            if (pos[idx] != -1) fail("'order' repeats object '" + o.get<std::string>() + "'");
            pos[idx] = next++;
            order.push_back(o.get<std::string>());
        }
        if (next != cat->objectCount()) fail("'order' must list every object exactly once");
        // declared witness is validated, not assumed
        for (const auto& [x, y] : cat->homPairs()) {
            const HomSpace& h = cat->hom(x, y);
            for (int flat = 0; flat < static_cast<int>(h.basis.size()); ++flat) {
                if (cat->isIdentity(BasisId{x, y, flat})) continue;
                if (pos[x] >= pos[y])
                    fail("'order' is not a directedness witness: '" + h.basis[flat].label +
                         "' does not increase it");
            }
        }
        out.declaredOrder = std::move(order);
    }

    if (j.contains("composition_omitted")) {
        if (!j.at("composition_omitted").is_boolean() || !j.at("composition_omitted").get<bool>())
            fail("'composition_omitted' must be true when present");
        if (!j.contains("twisted")) fail("'composition_omitted' requires 'twisted' metadata");
        const json& t = j.at("twisted");
        rejectUnknownFields(t, {"n", "inner"}, "twisted metadata");
        out.twistMetadataN = requireInt(t, "n", "twisted metadata");
        if (!t.contains("inner")) fail("'twisted' metadata needs 'inner'");
        out.twistInnerJson = t.at("inner");
    } else if (j.contains("twisted")) {
        fail("'twisted' metadata requires 'composition_omitted': true");
    }

    return out;
}

LoadedCategory loadCategoryFile(const std::string& path, const Field& f) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open category file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("category file '" + path + "' is not valid JSON: " + e.what());
    }
    return loadCategoryJson(j, f);
}

nlohmann::ordered_json categoryToJson(const FiniteDgCategory& cat, bool includeComposition) {
    nlohmann::ordered_json j;
    j["objects"] = nlohmann::ordered_json::array();
    for (int i = 0; i < cat.objectCount(); ++i) j["objects"].push_back(cat.objectLabel(i));

    j["homs"] = nlohmann::ordered_json::array();
    auto pairs = cat.homPairs();
    for (const auto& [x, y] : pairs) {
        const HomSpace& h = cat.hom(x, y);
        nlohmann::ordered_json hj;
        hj["src"] = cat.objectLabel(x);
        hj["dst"] = cat.objectLabel(y);
        hj["basis"] = nlohmann::ordered_json::array();
        for (const auto& b : h.basis) hj["basis"].push_back({{"label", b.label}, {"degree", b.degree}});
        j["homs"].push_back(std::move(hj));
    }

    j["differential"] = nlohmann::ordered_json::array();
    for (const auto& [x, y] : pairs) {
        const HomSpace& h = cat.hom(x, y);
        for (int flat = 0; flat < static_cast<int>(h.basis.size()); ++flat) {
            MorCombination d = cat.differentialOf(BasisId{x, y, flat});
            for (const auto& [to, c] : d.terms) {
                nlohmann::ordered_json dj;
                dj["src"] = cat.objectLabel(x);
                dj["dst"] = cat.objectLabel(y);
                dj["from_label"] = h.basis[flat].label;
                dj["to_label"] = h.basis[to].label;
                dj["coeff"] = c.str();
                j["differential"].push_back(std::move(dj));
            }
        }
    }

    if (includeComposition) {
        j["composition"] = nlohmann::ordered_json::array();
        for (const auto& [x, y] : pairs) {
            const HomSpace& hf = cat.hom(x, y);
            for (const auto& [y2, z] : pairs) {
                if (y2 != y) continue;
                const HomSpace& hg = cat.hom(y, z);
                for (int gf = 0; gf < static_cast<int>(hg.basis.size()); ++gf) {
                    BasisId g{y, z, gf};
                    for (int ff = 0; ff < static_cast<int>(hf.basis.size()); ++ff) {
                        BasisId fmor{x, y, ff};
                        MorCombination r = cat.compose(g, fmor);
                        if (r.isZero()) continue;
                        // implied unit compositions regenerate on load
                        if (cat.isIdentity(g) && r == cat.basisCombination(fmor)) continue;
                        if (cat.isIdentity(fmor) && r == cat.basisCombination(g)) continue;
                        nlohmann::ordered_json cj;
                        cj["g"] = {{"src", cat.objectLabel(y)},
                                   {"dst", cat.objectLabel(z)},
                                   {"label", hg.basis[gf].label}};
                        cj["f"] = {{"src", cat.objectLabel(x)},
                                   {"dst", cat.objectLabel(y)},
                                   {"label", hf.basis[ff].label}};
                        cj["result"] = nlohmann::ordered_json::array();
                        for (const auto& [flat, c] : r.terms)
                            cj["result"].push_back(
                                {{"label", cat.hom(x, z).basis[flat].label}, {"coeff", c.str()}});
                        j["composition"].push_back(std::move(cj));
                    }
                }
            }
        }
    }

    j["identities"] = nlohmann::ordered_json::object();
    for (int i = 0; i < cat.objectCount(); ++i)
        j["identities"][cat.objectLabel(i)] = cat.labelOf(cat.identity(i));

    if (auto witness = cat.directednessWitness()) {
        std::vector<std::pair<int, int>> byRank;
        for (int i = 0; i < cat.objectCount(); ++i) byRank.emplace_back(witness->rank[i], i);
        std::sort(byRank.begin(), byRank.end());
        j["order"] = nlohmann::ordered_json::array();
        for (const auto& [r, i] : byRank) {
            (void)r;
            j["order"].push_back(cat.objectLabel(i));
        }
    }

    return j;
}

}  // namespace homtwist
