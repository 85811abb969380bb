#include "deltaq/json_io.hpp"

#include <json.hpp>

#include "deltaq/error.hpp"

namespace deltaq {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json qlaurent_json(const QLaurent& f) {
    ordered_json arr = ordered_json::array();
    for (const auto& [e, c] : f.terms()) arr.push_back({e, c.str()});
    return arr;
}

ordered_json partition_json(const Partition& p) {
    ordered_json arr = ordered_json::array();
    for (int v : p.parts()) arr.push_back(v);
    return arr;
}

ordered_json symfunc_json(const SymFunc& f) {
    ordered_json doc;
    doc["basis"] = "schur";
    doc["degree"] = f.degree();
    ordered_json terms = ordered_json::array();
    for (const auto& [lam, c] : f.terms()) {
        ordered_json t;
        t["mu"] = partition_json(lam);
        t["coeff"] = qlaurent_json(c);
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    return doc;
}

ordered_json bisymfunc_json(const BiSymFunc& f) {
    ordered_json doc;
    doc["basis"] = "schur";
    doc["ydegree"] = f.ydegree();
    doc["xdegree"] = f.xdegree();
    ordered_json terms = ordered_json::array();
    for (const auto& [key, c] : f.terms()) {
        ordered_json t;
        t["ynu"] = partition_json(key.first);
        t["xmu"] = partition_json(key.second);
        t["coeff"] = qlaurent_json(c);
        terms.push_back(std::move(t));
    }
    doc["terms"] = std::move(terms);
    return doc;
}

std::string dump(const ordered_json& doc, bool pretty) {
    return pretty ? doc.dump(2) : doc.dump();
}

} // namespace

std::string to_json(const QLaurent& f, bool pretty) { return dump(qlaurent_json(f), pretty); }
std::string to_json(const Partition& p, bool pretty) { return dump(partition_json(p), pretty); }
std::string to_json(const SymFunc& f, bool pretty) { return dump(symfunc_json(f), pretty); }
std::string to_json(const BiSymFunc& f, bool pretty) { return dump(bisymfunc_json(f), pretty); }

std::string to_json(const OrderedSetPartition& sigma, bool pretty) {
    ordered_json arr = ordered_json::array();
    for (const auto& block : sigma.blocks()) {
        ordered_json b = ordered_json::array();
        for (int v : block) b.push_back(v);
        arr.push_back(std::move(b));
    }
    return dump(arr, pretty);
}

std::string to_json(const QRatFunc& f, bool pretty) {
    ordered_json doc;
    doc["num"] = qlaurent_json(f.num);
    doc["den"] = qlaurent_json(f.den);
    return dump(doc, pretty);
}

namespace {

ordered_json parse(const std::string& text) {
    ordered_json doc = ordered_json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("invalid JSON: " + text);
    return doc;
}

QLaurent qlaurent_from(const ordered_json& doc) {
    if (!doc.is_array()) throw ParseError("QLaurent: expected array");
    QLaurent f;
    int prev = 0;
    bool first = true;
    for (const auto& pair : doc) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
            !pair[1].is_string())
            throw ParseError("QLaurent: expected [exponent, \"num/den\"] pairs");
        int e = pair[0].get<int>();
        if (!first && e <= prev)
            throw ParseError("QLaurent: exponents must be strictly ascending");
        first = false;
        prev = e;
        Rational c = Rational::from_string(pair[1].get<std::string>());
        if (c.is_zero()) throw ParseError("QLaurent: zero coefficient stored");
        f.set_coeff(e, c);
    }
    return f;
}

Partition partition_from(const ordered_json& doc) {
    if (!doc.is_array()) throw ParseError("Partition: expected array");
    std::vector<int> parts;
    for (const auto& v : doc) {
        if (!v.is_number_integer()) throw ParseError("Partition: expected integers");
        parts.push_back(v.get<int>());
    }
    try {
        return Partition(std::move(parts));
    } catch (const Error& e) {
        throw ParseError(std::string("Partition: ") + e.what());
    }
}

} // namespace

QLaurent qlaurent_from_json(const std::string& text) { return qlaurent_from(parse(text)); }
Partition partition_from_json(const std::string& text) { return partition_from(parse(text)); }

} // namespace deltaq
