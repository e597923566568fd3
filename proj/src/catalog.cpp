#include "rgh/catalog.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rgh/graph_json.hpp"
#include "rgh/orientation.hpp"

namespace rgh {

std::string catalog_to_jsonl(const CellBasis& basis) {
    nlohmann::ordered_json header;
    header["format"] = "rgh-catalog";
    header["version"] = kToolVersion;
    header["signature"] = {basis.sig.g, basis.sig.h, basis.sig.r, basis.sig.s};
    header["partial"] = basis.partial;

    std::string out = header.dump() + "\n";
    for (const auto& stratum : basis.strata) {
        for (const auto& cls : stratum) {
            nlohmann::ordered_json line;
            line["dim"] = cls.dim;
            line["code"] = cls.code.v;
            line["aut"] = cls.aut_order;
            line["orientable"] = cls.orientable;
            line["graph"] = graph_to_json_obj(cls.rep);
            out += line.dump() + "\n";
        }
    }
    return out;
}

CellBasis catalog_from_jsonl(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("catalog is empty");

    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("catalog header is not JSON: ") + e.what());
    }
    if (header.value("format", "") != "rgh-catalog")
        throw std::invalid_argument("not a catalog file");
    const auto sig_arr = header.at("signature");
    if (!sig_arr.is_array() || sig_arr.size() != 4)
        throw std::invalid_argument("catalog header signature must be [g,h,r,s]");

    CellBasis basis;
    basis.sig = Signature{sig_arr[0].get<int>(), sig_arr[1].get<int>(),
                          sig_arr[2].get<int>(), sig_arr[3].get<int>()};
    basis.partial = header.value("partial", false);
    if (!basis.sig.shape_ok())
        throw std::invalid_argument("catalog header carries a malformed signature");
    basis.strata.assign(basis.sig.excluded() ? 0 : basis.sig.top_dim() + 1, {});

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("catalog line " + std::to_string(line_no) +
                                        " is not JSON: " + e.what());
        }
        CellClass cls;
        cls.dim = j.at("dim").get<int>();
        cls.code.v = j.at("code").get<std::vector<int>>();
        cls.aut_order = j.at("aut").get<int>();
        cls.orientable = j.at("orientable").get<bool>();
        cls.rep = graph_from_json_obj(j.at("graph"));

        const auto bad = [&](const std::string& why) {
            return std::invalid_argument("catalog line " + std::to_string(line_no) +
                                         ": " + why);
        };
        if (!validate(cls.rep).empty()) throw bad("graph is invalid");
        if (signature_of(cls.rep) != basis.sig) throw bad("wrong signature");
        const auto cf = canonicalize(cls.rep);
        if (cf.code != cls.code) throw bad("stored code does not match the graph");
        if (cf.aut_order != cls.aut_order) throw bad("stored aut order is wrong");
        if (cls.dim != cell_dimension(cls.rep)) throw bad("stored dimension is wrong");
        const bool orientable = cf.aut_order == 1 || is_orientable(cls.rep);
        if (orientable != cls.orientable) throw bad("stored orientability is wrong");
        if (cls.dim < 0 || cls.dim >= static_cast<int>(basis.strata.size()))
            throw bad("dimension outside the catalog range");
        auto& stratum = basis.strata[cls.dim];
        if (!stratum.empty() && !(stratum.back().code < cls.code))
            throw bad("classes out of order");
        stratum.push_back(std::move(cls));
    }
    return basis;
}

std::string homology_report_json(const HomologyResult& result, bool pretty) {
    nlohmann::ordered_json j;
    j["signature"] = {result.sig.g, result.sig.h, result.sig.r, result.sig.s};
    j["mode"] = mode_name(result.mode);
    nlohmann::ordered_json cells = nlohmann::ordered_json::object();
    for (const auto& [d, n] : result.cells) cells[std::to_string(d)] = n;
    j["cells"] = cells;
    nlohmann::ordered_json betti = nlohmann::ordered_json::object();
    for (const auto& [d, b] : result.betti) betti[std::to_string(d)] = b;
    j["betti"] = betti;
    nlohmann::ordered_json torsion = nlohmann::ordered_json::object();
    for (const auto& [d, factors] : result.torsion) {
        std::vector<std::string> fs;
        for (const auto& f : factors) fs.push_back(f.get_str());
        torsion[std::to_string(d)] = fs;
    }
    j["torsion"] = torsion;
    j["euler"] = result.euler;
    j["euler_orbifold"] = result.euler_orbifold.get_str();
    return j.dump(pretty ? 2 : -1);
}

} // namespace rgh
